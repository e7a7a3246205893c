//! Degree-sequence basics: normalization, the Erdős–Gallai test, a
//! Havel–Hakimi realization, and exhaustive enumeration.
//!
//! cargo run --example graphicality

use potseq::{enumerate_graphical_sequences, DegreeSequence};

fn main() -> Result<(), potseq::Error> {
    let raw = DegreeSequence::normalize([1, 5, 1, 1, 1, 1])?;
    println!("normalized {raw}, sum {}", raw.sum());

    for text in ["2,2,2", "3,3,1,1", "4,4,3,3,2,2", "0,0"] {
        let s: DegreeSequence = text.parse()?;
        match s.realize() {
            Ok(g) => {
                let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}{v}")).collect();
                println!(
                    "{s:<12} graphical, realized by {} [{}]",
                    g.to_graph6(),
                    edges.join(" ")
                );
            }
            Err(_) => println!("{s:<12} not graphical"),
        }
    }

    println!();
    println!(" n  graphical sequences");
    for n in 1..=9 {
        println!("{n:>2}  {}", enumerate_graphical_sequences(n, None).count());
    }
    let top: Vec<String> = enumerate_graphical_sequences(4, Some(8))
        .map(|s| s.to_string())
        .collect();
    println!("4-term sequences with sum >= 8: {}", top.join("  "));
    Ok(())
}
