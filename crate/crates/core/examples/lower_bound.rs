//! Tabulates the lower bound on sigma(K_{p1,...,pt}, n) for every cut index.
//!
//! cargo run --example lower_bound [-- 3,2,1 12]

use potseq::{best_bound, MultipartiteSpec, WitnessSpec};

fn main() -> Result<(), potseq::Error> {
    let mut args = std::env::args().skip(1);
    let parts: MultipartiteSpec = args.next().unwrap_or_else(|| "3,2,2,1".into()).parse()?;
    let max_n: usize = args
        .next()
        .map_or(14, |s| s.parse().expect("n must be an integer"));

    print!("{:>4}", "n");
    for i in 2..=parts.t() {
        print!("{:>8}", format!("i={i}"));
    }
    println!("{:>10}", "best");
    for n in parts.total()..=max_n {
        print!("{n:>4}");
        for i in 2..=parts.t() {
            print!("{:>8}", WitnessSpec::new(parts.clone(), i, n)?.bound());
        }
        let (i, value) = best_bound(&parts, n)?;
        println!("{:>10}", format!("{value} (i={i})"));
    }
    Ok(())
}
