//! Builds one extremal witness per parity case and certifies it.
//!
//! cargo run --example witnesses

use potseq::{Certificate, MultipartiteSpec, WitnessSpec};

fn main() -> Result<(), potseq::Error> {
    let cases = [
        (vec![3, 1], 2, 6),
        (vec![3, 1], 2, 7),
        (vec![2, 1], 2, 6),
        (vec![2, 1], 2, 5),
        (vec![3, 2, 1], 3, 8),
        (vec![2, 2, 1, 1], 2, 8),
    ];
    for (parts, i, n) in cases {
        let spec = WitnessSpec::new(MultipartiteSpec::new(parts)?, i, n)?;
        let witness = spec.build()?;
        println!(
            "K_{{{}}} i={i} n={n}: {} case, head {}, slack {}, low {}",
            spec.parts(),
            spec.parity_case(),
            spec.head(),
            spec.slack(),
            spec.low()
        );
        println!(
            "  witness {}  sequence {}  bound {}",
            witness.to_graph6(),
            spec.sequence(),
            spec.bound()
        );
        let cert = Certificate::issue(&spec, 8)?;
        for check in &cert.checks {
            println!("    {:<34} {}", check.name, check.status);
        }
        println!("  replays from graph6: {}", cert.replay()?);
    }
    Ok(())
}
