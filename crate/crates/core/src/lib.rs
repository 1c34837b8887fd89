//! Plane-solid flags of PG(6,q) and the Kneser graph on them.
//!
//! Two flags `(E,S)` and `(E',S')` (a plane inside a solid) are adjacent when
//! `E ∩ S' = ∅` and `E' ∩ S = ∅`. The crate builds the maximal independent
//! families of this graph, checks them exhaustively at q=2, and compares
//! every closed-form count it relies on with brute-force enumeration.
//!
//! Layers, bottom up:
//!
//! - [`galois`]: lookup-table arithmetic for GF(q), q ≤ 16.
//! - [`projective`]: subspaces of PG(n,q) in canonical RREF, span/meet/dual,
//!   constrained enumeration and point bitsets.
//! - [`counting`]: Gaussian binomials and the named closed forms, exact.
//! - [`kneser`]: the flag universe at q ∈ {2,3}, adjacency, flag sets, DIMACS.
//! - [`constructions`]: the Λ families, EKR plane and solid families, colorings,
//!   and the flag-set text format.
//! - [`verify`]: independence, maximality, saturation, traces, coloring checks.
//! - [`oracle`]: brute-force counters compared with the closed forms.
//! - [`cli`]: the `flagkneser` command line.
//!
//! ```
//! use flagkneser::constructions::{build_lambda, canonical_anchors, LambdaSpec};
//! use flagkneser::counting::independence_number;
//! use flagkneser::kneser::FlagUniverse;
//! use flagkneser::verify::check_independent;
//!
//! let u = FlagUniverse::build(2).unwrap();
//! let a = canonical_anchors(u.space());
//! let set = build_lambda(&LambdaSpec::point_line(a.point, a.line), &u).unwrap();
//! assert_eq!(independence_number(2), set.len() as u64);
//! assert!(check_independent(&set).pass());
//! ```

pub mod bitset;
pub mod galois;
pub mod projective;
pub mod counting;
pub mod kneser;
pub mod constructions;
pub mod verify;
pub mod oracle;
pub mod cli;
