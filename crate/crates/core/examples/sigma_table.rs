//! Exact sigma(K_{p1,...,pt}, n) by exhaustion next to the best lower bound.
//!
//! Results go to the cache named by POTSEQ_CACHE when it is set.
//!
//! cargo run --release --example sigma_table [-- 7]

use std::time::Instant;

use potseq::oracle::{sigma_cached, SigmaCache, CACHE_ENV};
use potseq::{best_bound, MultipartiteSpec, SigmaOptions};

fn main() -> Result<(), potseq::Error> {
    let max_n: usize = std::env::args()
        .nth(1)
        .map_or(7, |s| s.parse().expect("n must be an integer"));
    let mut cache = match std::env::var_os(CACHE_ENV) {
        Some(path) => {
            let (cache, problem) = SigmaCache::load_or_empty(path);
            if let Some(problem) = problem {
                eprintln!("warning: {problem}");
            }
            cache
        }
        None => SigmaCache::in_memory(),
    };
    let options = SigmaOptions {
        limit: max_n.max(8),
        ..Default::default()
    };
    println!(
        "{:<10} {:>3} {:>6} {:>6}  extremal",
        "parts", "n", "sigma", "bound"
    );
    for parts in ["1,1", "2,1", "1,1,1", "3,1", "2,2", "2,1,1", "1,1,1,1"] {
        let spec: MultipartiteSpec = parts.parse()?;
        let target = spec.complete_multipartite();
        for n in spec.total()..=max_n {
            let started = Instant::now();
            let (record, hit) = sigma_cached(&target, n, &options, &mut cache)?;
            let (_, bound) = best_bound(&spec, n)?;
            let extremal = record.extremal.map_or("-".to_string(), |s| s.to_string());
            let timing = if hit {
                "cached".to_string()
            } else {
                format!("{:.1?}", started.elapsed())
            };
            println!(
                "{parts:<10} {n:>3} {:>6} {bound:>6}  {extremal:<20} {timing}",
                record.value
            );
        }
    }
    Ok(())
}
