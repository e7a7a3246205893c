//! Brute-force ground truth: realizations, the exact "potentially
//! H-graphic" decision, and exact sigma(H, n) for small n.

mod cache;
mod realize;

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{AdjacencyRows, SimpleGraph, SubgraphMatcher};
use crate::sequence::{enumerate_graphical_sequences, DegreeSequence};
use crate::witness::dominates;

pub use cache::{canonical_form, SigmaCache, CACHE_ENV, CANONICAL_MAX_ORDER};
pub use realize::{
    count_realizations, enumerate_realizations, for_each_realization, switching_closure,
    MAX_MASK_ORDER,
};

/// Default bound on n for [`sigma_exact`].
pub const DEFAULT_LIMIT: usize = 8;

/// How a sigma value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Every graphical n-term sequence was examined.
    Exhaustive,
    /// As above, but only sequences without zero terms.
    ExhaustiveNoZeroTerms,
}

/// Whether [`is_potentially_with`] may reject early on degrees alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prefilter {
    /// Reject when the top |V(H)| degrees do not dominate H's degrees.
    Dominance,
    /// Always enumerate realizations.
    Off,
}

/// Exact sigma(H, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaRecord {
    /// Canonical form of H.
    pub target: SimpleGraph,
    pub n: usize,
    /// Smallest even l such that every graphical n-term sequence with sum
    /// at least l is potentially H-graphic.
    pub value: usize,
    /// A non-potential sequence of maximum sum, or `None` when every
    /// graphical n-term sequence is potentially H-graphic (then `value` is 0).
    pub extremal: Option<DegreeSequence>,
    pub method: Method,
}

impl SigmaRecord {
    pub(crate) fn validate(&self) -> std::result::Result<(), String> {
        match &self.extremal {
            Some(s) if s.sum() + 2 != self.value => Err(format!(
                "value {} does not equal extremal sum {} + 2",
                self.value,
                s.sum()
            )),
            Some(s) if s.len() != self.n => {
                Err(format!("extremal has {} terms, n = {}", s.len(), self.n))
            }
            None if self.value != 0 => Err("value must be 0 without an extremal sequence".into()),
            _ => Ok(()),
        }
    }
}

/// Does some realization of `s` contain `target`? Uses the degree-dominance
/// prefilter.
pub fn is_potentially(s: &DegreeSequence, target: &SimpleGraph) -> Result<bool> {
    is_potentially_with(s, target, Prefilter::Dominance)
}

pub fn is_potentially_with(
    s: &DegreeSequence,
    target: &SimpleGraph,
    prefilter: Prefilter,
) -> Result<bool> {
    let matcher = SubgraphMatcher::new(target);
    decide(s, &matcher, prefilter)
}

fn decide(s: &DegreeSequence, matcher: &SubgraphMatcher, prefilter: Prefilter) -> Result<bool> {
    if !s.is_graphical() {
        return Err(Error::NotGraphical(s.to_string()));
    }
    if matcher.target_order() > s.len() {
        return Err(Error::TargetTooBig {
            order: matcher.target_order(),
            n: s.len(),
        });
    }
    if prefilter == Prefilter::Dominance && !dominates(s.degrees(), matcher.target_degrees()) {
        return Ok(false);
    }
    for_each_realization(s, |adj| {
        if matcher.is_contained_in(&AdjacencyRows::from_masks(adj)) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// Knobs for [`sigma_exact`].
#[derive(Debug, Clone)]
pub struct SigmaOptions {
    /// Largest n accepted.
    pub limit: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Restrict to sequences without zero terms.
    pub exclude_zero_terms: bool,
}

impl Default for SigmaOptions {
    fn default() -> Self {
        SigmaOptions {
            limit: DEFAULT_LIMIT,
            threads: None,
            exclude_zero_terms: false,
        }
    }
}

/// Computes sigma(target, n) by exhaustion.
///
/// Sequences are grouped by degree sum and the groups are scanned from the
/// top down. Each group is decided in parallel and the first non-potential
/// sequence in lexicographically decreasing order is kept, so the result
/// does not depend on the number of workers. Every group above the answer
/// has then been checked to be entirely potentially H-graphic.
pub fn sigma_exact(target: &SimpleGraph, n: usize, options: &SigmaOptions) -> Result<SigmaRecord> {
    if n > options.limit || n > MAX_MASK_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: options.limit.min(MAX_MASK_ORDER),
        });
    }
    if target.order() > n {
        return Err(Error::TargetTooBig {
            order: target.order(),
            n,
        });
    }
    let method = if options.exclude_zero_terms {
        Method::ExhaustiveNoZeroTerms
    } else {
        Method::Exhaustive
    };
    let mut by_sum: BTreeMap<usize, Vec<DegreeSequence>> = BTreeMap::new();
    for s in enumerate_graphical_sequences(n, None) {
        if options.exclude_zero_terms && s.has_zero_term() {
            continue;
        }
        by_sum.entry(s.sum()).or_default().push(s);
    }

    let matcher = SubgraphMatcher::new(target);
    let scan = || -> Result<Option<DegreeSequence>> {
        for group in by_sum.values().rev() {
            let found = group
                .par_iter()
                .map(|s| decide(s, &matcher, Prefilter::Dominance).map(|hit| (s, hit)))
                .find_first(|r| !matches!(r, Ok((_, true))));
            match found {
                Some(Ok((s, _))) => return Ok(Some(s.clone())),
                Some(Err(e)) => return Err(e),
                None => {}
            }
        }
        Ok(None)
    };
    let extremal = match options.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Construction(format!("thread pool: {e}")))?
            .install(scan)?,
        None => scan()?,
    };
    Ok(SigmaRecord {
        target: canonical_form(target),
        n,
        value: extremal.as_ref().map_or(0, |s| s.sum() + 2),
        extremal,
        method,
    })
}

/// [`sigma_exact`] backed by a cache: hits are returned without recomputing
/// and fresh results are stored.
pub fn sigma_cached(
    target: &SimpleGraph,
    n: usize,
    options: &SigmaOptions,
    cache: &mut SigmaCache,
) -> Result<(SigmaRecord, bool)> {
    let method = if options.exclude_zero_terms {
        Method::ExhaustiveNoZeroTerms
    } else {
        Method::Exhaustive
    };
    if let Some(hit) = cache.get(target, n, method) {
        return Ok((hit.clone(), true));
    }
    let record = sigma_exact(target, n, options)?;
    cache.put(record.clone())?;
    Ok((record, false))
}
