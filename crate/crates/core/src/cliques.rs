//! Triangle and 4-clique counts in `G_n`.
//!
//! Brute force walks edges (and triangles) in increasing vertex order and
//! popcounts the intersection of adjacency rows beyond the largest vertex
//! seen so far, so every clique is counted exactly once. The reduction
//! route uses vertex-transitivity of `G_n` and `H_n`:
//! `K_l(G_n) = n phi(n) / (2^k l (l - 1)) * K_{l-1}(H_n, 1)`.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{InducedSubgraphH, PaleyGraph};
use crate::{formulas, BigCount};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Bruteforce,
    Reduction,
    Formula,
}

impl CountMethod {
    pub const ALL: [CountMethod; 3] = [CountMethod::Bruteforce, CountMethod::Reduction, CountMethod::Formula];

    pub fn as_str(self) -> &'static str {
        match self {
            CountMethod::Bruteforce => "bruteforce",
            CountMethod::Reduction => "reduction",
            CountMethod::Formula => "formula",
        }
    }
}

/// Which end of the vertex order the enumeration anchors on. Both give the
/// same count; having two is how determinism is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Traversal {
    /// `u < v < w`, counting common neighbours above the largest vertex.
    #[default]
    Ascending,
    /// `u > v > w`, counting common neighbours below the smallest vertex.
    Descending,
}

/// Largest `n` brute force will attempt, per clique order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteForceLimits {
    pub k3_ceiling: u64,
    pub k4_ceiling: u64,
}

impl Default for BruteForceLimits {
    fn default() -> Self {
        Self { k3_ceiling: 100_000, k4_ceiling: 20_000 }
    }
}

impl BruteForceLimits {
    pub fn ceiling(&self, order: u32) -> u64 {
        if order == 3 {
            self.k3_ceiling
        } else {
            self.k4_ceiling
        }
    }

    pub fn check(&self, n: u64, order: u32) -> Result<()> {
        let ceiling = self.ceiling(order);
        if n > ceiling {
            return Err(Error::CeilingExceeded { n, order, ceiling });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCountReport {
    pub n: u64,
    pub order: u32,
    pub method: CountMethod,
    #[serde(with = "crate::decimal")]
    pub value: BigCount,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn check_order(order: u32) -> Result<()> {
    if order == 3 || order == 4 {
        Ok(())
    } else {
        Err(Error::invalid(format!("clique order must be 3 or 4, got {order}")))
    }
}

/// Counts `order`-cliques in `g` with the chosen method, timing the call.
pub fn count_cliques(
    g: &PaleyGraph,
    order: u32,
    method: CountMethod,
    limits: &BruteForceLimits,
) -> Result<CliqueCountReport> {
    check_order(order)?;
    let start = Instant::now();
    let value = match method {
        CountMethod::Bruteforce => {
            limits.check(g.modulus().n(), order)?;
            if order == 3 {
                count_triangles_bruteforce(g)
            } else {
                count_k4_bruteforce(g)
            }
        }
        CountMethod::Reduction => count_via_reduction(g, order)?,
        CountMethod::Formula => {
            if order == 3 {
                formulas::k3_formula(g.modulus())?
            } else {
                formulas::k4_formula(g.modulus())?
            }
        }
    };
    Ok(CliqueCountReport { n: g.modulus().n(), order, method, value, elapsed: start.elapsed() })
}

pub fn count_triangles_bruteforce(g: &PaleyGraph) -> BigCount {
    count_triangles_ordered(g, Traversal::Ascending)
}

pub fn count_triangles_ordered(g: &PaleyGraph, traversal: Traversal) -> BigCount {
    let n = g.order();
    let total: u128 = (0..n)
        .into_par_iter()
        .map(|u| {
            let row_u = g.adjacency_row(u);
            let mut local = 0u64;
            match traversal {
                Traversal::Ascending => {
                    for v in row_u.iter_above(u) {
                        local += row_u.intersection_count_above(&g.adjacency_row(v), v);
                    }
                }
                Traversal::Descending => {
                    for v in row_u.iter().take_while(|&v| v < u) {
                        local += row_u.intersection_count_below(&g.adjacency_row(v), v);
                    }
                }
            }
            u128::from(local)
        })
        .sum();
    BigUint::from(total)
}

pub fn count_k4_bruteforce(g: &PaleyGraph) -> BigCount {
    count_k4_ordered(g, Traversal::Ascending)
}

pub fn count_k4_ordered(g: &PaleyGraph, traversal: Traversal) -> BigCount {
    let n = g.order();
    let total: u128 = (0..n)
        .into_par_iter()
        .map(|u| {
            let row_u = g.adjacency_row(u);
            let mut local = 0u128;
            match traversal {
                Traversal::Ascending => {
                    for v in row_u.iter_above(u) {
                        let common = row_u.intersection(&g.adjacency_row(v));
                        for w in common.iter_above(v) {
                            local += u128::from(common.intersection_count_above(&g.adjacency_row(w), w));
                        }
                    }
                }
                Traversal::Descending => {
                    for v in row_u.iter().take_while(|&v| v < u) {
                        let common = row_u.intersection(&g.adjacency_row(v));
                        for w in common.iter().take_while(|&w| w < v) {
                            local += u128::from(common.intersection_count_below(&g.adjacency_row(w), w));
                        }
                    }
                }
            }
            local
        })
        .sum();
    BigUint::from(total)
}

/// `K_2(H_n, 1)`: the degree of vertex 1 in `H_n`.
pub fn rooted_degree_h(h: &InducedSubgraphH<'_>) -> BigCount {
    BigUint::from(h.neighbors(1).count())
}

/// `K_3(H_n, 1)`: edges of `H_n` among the neighbours of vertex 1.
pub fn rooted_triangles_h(h: &InducedSubgraphH<'_>) -> BigCount {
    let g = h.parent();
    let around_one = h.neighbors(1);
    let total: u64 =
        around_one.iter().map(|x| around_one.intersection_count_above(&g.adjacency_row(x), x)).sum();
    BigUint::from(total)
}

/// `K_l(G_n)` for `l` in {3, 4} from the rooted count in `H_n`.
pub fn count_via_reduction(g: &PaleyGraph, order: u32) -> Result<BigCount> {
    check_order(order)?;
    let m = g.modulus();
    let h = g.induced_h()?;
    let rooted = if order == 3 { rooted_degree_h(&h) } else { rooted_triangles_h(&h) };
    let numerator = BigUint::from(m.n()) * BigUint::from(m.phi()) * rooted;
    let denominator = (BigUint::from(1u32) << m.k()) * BigUint::from(order * (order - 1));
    let (q, r) = numerator.div_rem(&denominator);
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "reduction for n = {}, l = {order}: {numerator} not divisible by {denominator}",
            m.n()
        )));
    }
    Ok(q)
}
