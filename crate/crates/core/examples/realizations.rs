//! Enumerates every labelled realization of a sequence two independent ways
//! and decides whether it is potentially H-graphic.
//!
//! cargo run --example realizations [-- 3,3,2,2,1,1]

use potseq::oracle::{count_realizations, switching_closure};
use potseq::{is_potentially, DegreeSequence, MultipartiteSpec, SimpleGraph};

fn main() -> Result<(), potseq::Error> {
    let s: DegreeSequence = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,3,2,2,1,1".into())
        .parse()?;
    println!(
        "{s}: {} labelled realizations by backtracking",
        count_realizations(&s)?
    );
    println!(
        "{s}: {} reached from Havel–Hakimi by 2-switches",
        switching_closure(&s)?.len()
    );

    let targets = [
        ("K3", SimpleGraph::complete(3)),
        (
            "C4",
            MultipartiteSpec::new(vec![2, 2])?.complete_multipartite(),
        ),
        (
            "K4-e",
            MultipartiteSpec::new(vec![2, 1, 1])?.complete_multipartite(),
        ),
        ("K4", SimpleGraph::complete(4)),
    ];
    for (name, target) in &targets {
        if target.order() <= s.len() {
            println!(
                "potentially {name}-graphic: {}",
                is_potentially(&s, target)?
            );
        }
    }
    Ok(())
}
