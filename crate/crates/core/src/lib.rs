//! Regular maps represented by triples of involutions `(λ, ρ, τ)` in finite
//! permutation groups.
//!
//! - [`perm`]: dense permutations, brute-force closure, word evaluation.
//! - [`map`]: admissible triples, map invariants, orientability, Petrie
//!   duality, clique submaps and coset graphs.
//! - [`graph`]: Hamming and complete graphs, isomorphism search.
//! - [`wreath`]: `S_n ≀ S_d` on `H(d,n)` and the canonical triple family.
//! - [`classify`]: exhaustive classification of nonorientable regular
//!   embeddings of `H(d,n)`.
//! - [`pgl`]: `PGL₂(9)` and its two nonorientable `H(2,6)` maps.
//! - [`census`]: the census JSON format.

pub mod census;
pub mod classify;
pub mod graph;
pub mod map;
pub mod perm;
pub mod pgl;
pub mod wreath;

pub use classify::{classify, maps_isomorphic, verify_theorem, ClassifyOptions, MapRecord};
pub use map::{AdmissibleTriple, MapInvariants, MapType, RegularMap};
pub use perm::{GroupClosure, Perm};

/// Built-in triples addressable by name: `h22-octagon`, `k3-hexagon`, `pgl29`
/// and its Petrie dual `pgl29-petrie`.
pub fn named_triple(name: &str) -> Option<AdmissibleTriple> {
    match name {
        "h22-octagon" => Some(map::h22_octagon()),
        "k3-hexagon" => Some(map::k3_hexagon()),
        "pgl29" => Some(pgl::pgl29_triple()),
        "pgl29-petrie" => Some(pgl::pgl29_triple().petrie_dual()),
        _ => None,
    }
}
