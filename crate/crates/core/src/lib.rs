//! Paley-type graphs over `Z_n`.
//!
//! For `n = 2^s p_1^a_1 ... p_k^a_k` with `s <= 1` and every `p_i = 1 (mod 4)`,
//! the graph `G_n` has vertex set `Z_n` and joins `x` and `y` whenever `x - y`
//! is the square of a unit. This crate builds those graphs, counts their
//! triangles and 4-cliques three independent ways (bitset enumeration, a
//! vertex-transitivity reduction, and closed forms), and evaluates the
//! quadratic/quartic Jacobi sums modulo prime powers that appear in the
//! 4-clique count.

pub mod bitset;
pub mod charsums;
pub mod cli;
pub mod cliques;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod numtheory;
pub mod tables;

pub use bitset::ResidueBitset;
pub use charsums::{build_character, jacobi_sum, verify_xyreln, CharacterTable, GaussianInt};
pub use cliques::{
    count_k4_bruteforce, count_triangles_bruteforce, count_via_reduction, rooted_degree_h,
    rooted_triangles_h, CountMethod,
};
pub use error::{Error, Result};
pub use formulas::{
    clique_number_class, k3_formula, k4_formula, k4_jacobi_formula, k4_zero_predicate,
    CliqueNumberClass,
};
pub use graph::{InducedSubgraphH, PaleyGraph};
pub use numtheory::{check_admissible, AdmissibleModulus, TwoSquares};

/// Exact clique counts and formula values.
pub type BigCount = num_bigint::BigUint;

/// Big integers go over the wire as decimal strings.
pub(crate) mod decimal {
    use serde::Serializer;

    pub fn serialize<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub mod opt {
        use serde::Serializer;

        pub fn serialize<T: std::fmt::Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }
    }
}
