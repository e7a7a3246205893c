//! Extremal constructions and exhaustive oracles for potentially
//! K_{p1,...,pt}-graphic degree sequences.
//!
//! A graphical sequence is *potentially H-graphic* when some realization
//! contains H as a subgraph. sigma(H, n) is the least even l such that
//! every graphical n-term sequence with degree sum at least l is
//! potentially H-graphic. For a complete multipartite H = K_{p1,...,pt}
//! and any cut index 2 <= i <= t,
//!
//! ```text
//! sigma(K_{p1,...,pt}, n) >= 2 * floor(((2P - (p1+...+pi) - 2) n
//!                                      - (P - p_i)(p_i+...+p_t - 1) + 2) / 2)
//! ```
//!
//! where P = p1+...+pt and n >= P. The crate evaluates this bound
//! ([`witness`]), builds the extremal graphs behind it from Hamiltonian
//! decompositions of complete graphs ([`decompose`]), and checks everything
//! against brute force at desk scale ([`oracle`]).
//!
//! ```
//! use potseq::{MultipartiteSpec, WitnessSpec};
//!
//! let parts = MultipartiteSpec::new(vec![2, 1, 1]).unwrap();
//! let spec = WitnessSpec::new(parts, 2, 7).unwrap();
//! assert_eq!(spec.bound(), 20);
//! let witness = spec.build().unwrap();
//! assert_eq!(witness.degree_sequence(), spec.sequence());
//! ```

pub mod certificate;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod sequence;
pub mod witness;

pub use certificate::{Certificate, CheckStatus};
pub use decompose::{hamiltonian_decomposition, Decomposition};
pub use error::{Error, Result};
pub use graph::{MultipartiteSpec, SimpleGraph};
pub use oracle::{is_potentially, sigma_exact, SigmaOptions, SigmaRecord};
pub use sequence::{enumerate_graphical_sequences, DegreeSequence};
pub use witness::{
    best_bound, bound_formula, build_witness, dominance_check, witness_sequence, ParityCase,
    WitnessSpec,
};
