//! The graph operations the extremal constructions are assembled from.
//!
//! cargo run --example graph_algebra

use potseq::{MultipartiteSpec, SimpleGraph};

fn main() -> Result<(), potseq::Error> {
    for parts in [vec![1, 1, 1], vec![2, 2], vec![2, 1, 1], vec![3, 2, 1]] {
        let spec = MultipartiteSpec::new(parts)?;
        let g = spec.complete_multipartite();
        println!(
            "K_{{{spec}}}: {} vertices, {} edges, degrees {}, graph6 {}",
            g.order(),
            g.edge_count(),
            g.degree_sequence(),
            g.to_graph6()
        );
    }

    let star = SimpleGraph::empty(5).join(&SimpleGraph::complete(1));
    println!(
        "empty(5) + K1 = star with degrees {}",
        star.degree_sequence()
    );
    let wheel = SimpleGraph::cycle(4).join(&SimpleGraph::complete(1));
    println!("C4 + K1 has degrees {}", wheel.degree_sequence());
    let two_k2 = SimpleGraph::complete(2).disjoint_union(&SimpleGraph::complete(2));
    println!("2K2 = {}", two_k2.to_graph6());

    let trimmed = SimpleGraph::cycle(5).remove_edges([(0, 1), (2, 3), (4, 0)])?;
    println!(
        "C5 minus alternate edges has degrees {}",
        trimmed.degree_sequence()
    );
    match SimpleGraph::complete(3).remove_edges([(0, 1), (0, 1)]) {
        Err(e) => println!("removing an edge twice fails: {e}"),
        Ok(_) => unreachable!(),
    }

    let k4 = SimpleGraph::complete(4);
    println!(
        "K4 contains C4: {}",
        k4.contains_subgraph(&SimpleGraph::cycle(4))
    );
    println!(
        "C5 contains K3: {}",
        SimpleGraph::cycle(5).contains_subgraph(&SimpleGraph::complete(3))
    );

    let decoded = SimpleGraph::from_graph6("Bw")?;
    println!(
        "graph6 Bw decodes to K3: {}",
        decoded == SimpleGraph::complete(3)
    );
    print!("{}", SimpleGraph::cycle(4).to_dot("c4"));
    Ok(())
}
