//! Hamiltonian decompositions of complete graphs.
//!
//! cargo run --example walecki [-- N]

use potseq::hamiltonian_decomposition;

fn main() -> Result<(), potseq::Error> {
    let orders: Vec<usize> = match std::env::args().nth(1) {
        Some(n) => vec![n.parse().expect("N must be an integer")],
        None => (2..=9).collect(),
    };
    for n in orders {
        let d = hamiltonian_decomposition(n)?;
        println!("K_{n}: {} spanning cycle(s)", d.cycle_count());
        if let Some(m) = d.matching() {
            let pairs: Vec<String> = m.iter().map(|(u, v)| format!("{u}{v}")).collect();
            println!("  1-factor  {}", pairs.join(" "));
        }
        for (k, c) in d.cycles().iter().enumerate() {
            let verts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            println!("  cycle {:<3} {}", k + 1, verts.join(" "));
        }
    }
    Ok(())
}
