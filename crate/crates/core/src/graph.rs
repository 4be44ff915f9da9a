//! The circulant graph `G_n` and its induced subgraph `H_n` on `R_n`.

use std::borrow::Cow;
use std::io::{self, Write};
use std::sync::OnceLock;

use crate::bitset::ResidueBitset;
use crate::error::{Error, Result};
use crate::numtheory::{check_admissible, squares_mod_n, AdmissibleModulus};

/// Largest `n` for which all adjacency rows are materialized (n^2 bits).
pub const DEFAULT_ROW_CACHE_THRESHOLD: u64 = 8192;

/// `G_n`: vertices `0..n`, `x ~ y` iff `x - y` is in `R_n`.
///
/// Only the difference set is stored; row `x` is the difference set rotated
/// by `x`. Rows for every vertex are cached on first use when `n` is at most
/// the cache threshold.
#[derive(Debug)]
pub struct PaleyGraph {
    modulus: AdmissibleModulus,
    diff_set: ResidueBitset,
    cache_threshold: u64,
    rows: OnceLock<Vec<ResidueBitset>>,
}

impl Clone for PaleyGraph {
    fn clone(&self) -> Self {
        Self {
            modulus: self.modulus.clone(),
            diff_set: self.diff_set.clone(),
            cache_threshold: self.cache_threshold,
            rows: OnceLock::new(),
        }
    }
}

impl PaleyGraph {
    pub fn build(modulus: AdmissibleModulus) -> Self {
        let diff_set = squares_mod_n(&modulus);
        Self { modulus, diff_set, cache_threshold: DEFAULT_ROW_CACHE_THRESHOLD, rows: OnceLock::new() }
    }

    /// Shorthand for `build(check_admissible(n)?)`.
    pub fn new(n: u64) -> Result<Self> {
        Ok(Self::build(check_admissible(n)?))
    }

    pub fn with_row_cache_threshold(mut self, threshold: u64) -> Self {
        self.cache_threshold = threshold;
        self.rows = OnceLock::new();
        self
    }

    pub fn modulus(&self) -> &AdmissibleModulus {
        &self.modulus
    }

    pub fn order(&self) -> usize {
        self.modulus.n() as usize
    }

    /// `R_n`.
    pub fn diff_set(&self) -> &ResidueBitset {
        &self.diff_set
    }

    /// Common degree of every vertex.
    pub fn degree(&self) -> usize {
        self.diff_set.count()
    }

    pub fn is_adjacent(&self, x: usize, y: usize) -> bool {
        let n = self.order();
        self.diff_set.contains((y + n - x % n) % n)
    }

    pub fn rows_cached(&self) -> bool {
        self.modulus.n() <= self.cache_threshold
    }

    /// Neighbourhood of `x`: bit `y` set iff `(y - x) mod n` is in `R_n`.
    pub fn adjacency_row(&self, x: usize) -> Cow<'_, ResidueBitset> {
        assert!(x < self.order(), "vertex {x} out of range");
        if self.rows_cached() {
            Cow::Borrowed(&self.all_rows()[x])
        } else {
            Cow::Owned(self.diff_set.rotated(x))
        }
    }

    fn all_rows(&self) -> &[ResidueBitset] {
        self.rows.get_or_init(|| (0..self.order()).map(|x| self.diff_set.rotated(x)).collect())
    }

    /// `H_n`, the subgraph induced on `R_n`. Only defined for odd `n`.
    pub fn induced_h(&self) -> Result<InducedSubgraphH<'_>> {
        if !self.modulus.is_odd() {
            return Err(Error::invalid(format!("H_n needs odd n, got {}", self.modulus.n())));
        }
        Ok(InducedSubgraphH { parent: self })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.diff_set.iter().map(move |d| u + d).filter(move |&v| v < self.order()).map(move |v| (u, v))
        })
    }

    /// Writes one `u v` line per edge with `u < v`, sorted.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}")?;
        }
        out.flush()
    }
}

/// `H_n`: the subgraph of `G_n` induced by `R_n`.
#[derive(Debug, Clone, Copy)]
pub struct InducedSubgraphH<'g> {
    parent: &'g PaleyGraph,
}

impl<'g> InducedSubgraphH<'g> {
    pub fn parent(&self) -> &'g PaleyGraph {
        self.parent
    }

    pub fn vertices(&self) -> &'g ResidueBitset {
        self.parent.diff_set()
    }

    pub fn is_adjacent(&self, x: usize, y: usize) -> bool {
        let r = self.vertices();
        r.contains(x) && r.contains(y) && self.parent.is_adjacent(x, y)
    }

    /// Neighbours of `x` inside `R_n`.
    pub fn neighbors(&self, x: usize) -> ResidueBitset {
        if !self.vertices().contains(x) {
            return ResidueBitset::new(self.parent.order());
        }
        self.parent.adjacency_row(x).intersection(self.vertices())
    }
}
