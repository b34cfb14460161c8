//! Counting upper bounds for complete colorings.
//!
//! A k-complete coloring must realize all C(k,2) pairs, one edge each, so
//! C(k,2) <= |E|. Each color class must meet all k-1 other colors across
//! edges of degree <= delta, so every class needs at least ceil((k-1)/delta)
//! vertices and k*ceil((k-1)/delta) <= |V|. All arithmetic here is exact
//! integer arithmetic; candidate values are located by binary search and the
//! defining inequality is re-checked at the answer.

use serde::Serialize;

use crate::grid::GridGraph;
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub dims: Vec<usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub delta: usize,
    pub edge_bound: u32,
    pub degree_bound: u32,
    pub combined: u32,
}

fn pairs(k: u64) -> u128 {
    (k as u128) * (k as u128 - 1) / 2
}

/// Largest k >= 1 with C(k,2) <= edges.
pub fn edge_bound(edges: u64) -> u32 {
    largest_satisfying(|k| pairs(k) <= edges as u128)
}

/// Largest k >= 1 with k * ceil((k-1)/delta) <= vertices.
pub fn degree_bound(vertices: u64, delta: u64) -> Result<u32> {
    if delta == 0 {
        return Err(Error::ZeroDegree);
    }
    Ok(largest_satisfying(|k| {
        let k = k as u128;
        let classes_size = (k - 1).div_ceil(delta as u128);
        k * classes_size <= vertices as u128
    }))
}

/// Both predicates above are monotone: true for k=1, false from some point
/// on (for delta >= 1 the products grow without bound). Binary search on
/// the boundary, then assert the inequality at the result.
fn largest_satisfying(pred: impl Fn(u64) -> bool) -> u32 {
    debug_assert!(pred(1));
    let mut lo = 1u64; // invariant: pred(lo)
    let mut hi = 2u64;
    while pred(hi) {
        lo = hi;
        hi *= 2;
    }
    // invariant: pred(lo) && !pred(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    debug_assert!(pred(lo) && !pred(lo + 1));
    u32::try_from(lo).expect("bound exceeds u32")
}

/// Edge bound, degree bound, and their minimum for a grid.
pub fn grid_gamma_upper(dims: &[usize]) -> Result<BoundReport> {
    let g = GridGraph::new(dims)?;
    let edge_b = edge_bound(g.edge_count() as u64);
    let delta = g.max_degree().max(1);
    let degree_b = degree_bound(g.vertex_count() as u64, delta as u64)?;
    Ok(BoundReport {
        dims: dims.to_vec(),
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        delta,
        edge_bound: edge_b,
        degree_bound: degree_b,
        combined: edge_b.min(degree_b),
    })
}

impl std::fmt::Display for BoundReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        writeln!(
            f,
            "grid {}: {} vertices, {} edges, max degree {}",
            dims.join("x"),
            self.vertex_count,
            self.edge_count,
            self.delta
        )?;
        writeln!(
            f,
            "edge bound    C(k,2) <= |E|            : k <= {}",
            self.edge_bound
        )?;
        writeln!(
            f,
            "degree bound  k*ceil((k-1)/delta) <= |V|: k <= {}",
            self.degree_bound
        )?;
        write!(f, "combined upper bound: {}", self.combined)
    }
}
