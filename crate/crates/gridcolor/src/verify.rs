//! The verifier. Everything the rest of the crate constructs or searches
//! for is judged by `verify`; no construction is trusted on its own.

use serde::Serialize;

use crate::coloring::PartialColoring;
use crate::pairs::PairSet;
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct ImproperEdge {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub color: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutOfRangeCell {
    pub cell: Vec<usize>,
    pub color: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub k: u32,
    pub is_complete: bool,
    pub is_proper: bool,
    pub realized: PairSet,
    pub missing_pairs: PairSet,
    pub improper_edges: Vec<ImproperEdge>,
    pub out_of_range: Vec<OutOfRangeCell>,
}

/// Checks completeness of `c` against the palette `1..=k`, with an optional
/// remainder: pairs the coloring is excused from realizing.
///
/// `is_complete` holds iff every pair over 1..=k outside the remainder is
/// realized by some edge. `is_proper` holds iff no edge joins two equal
/// assigned colors (equal colors outside the palette still count as
/// improper). Colors above k are reported in `out_of_range`, not rejected.
pub fn verify(
    c: &PartialColoring,
    k: u32,
    remainder: Option<&PairSet>,
) -> Result<VerificationReport> {
    if let Some(rem) = remainder {
        if rem.k() != k {
            return Err(Error::RemainderMismatch {
                expected: k,
                got: rem.k(),
            });
        }
    }

    let g = c.graph();
    let mut realized = PairSet::new(k);
    let mut improper_edges = Vec::new();
    for (u, v) in g.edges() {
        if let (Some(a), Some(b)) = (c.get(u), c.get(v)) {
            if a == b {
                improper_edges.push(ImproperEdge {
                    a: g.coord_of(u),
                    b: g.coord_of(v),
                    color: a,
                });
            } else if a <= k && b <= k {
                realized.insert(a.min(b), a.max(b));
            }
        }
    }

    let mut out_of_range = Vec::new();
    for idx in 0..g.vertex_count() {
        if let Some(color) = c.get(idx) {
            if color > k {
                out_of_range.push(OutOfRangeCell {
                    cell: g.coord_of(idx),
                    color,
                });
            }
        }
    }

    let mut missing_pairs = PairSet::full(k);
    missing_pairs.remove_all(&realized);
    if let Some(rem) = remainder {
        missing_pairs.remove_all(rem);
    }

    Ok(VerificationReport {
        k,
        is_complete: missing_pairs.is_empty(),
        is_proper: improper_edges.is_empty(),
        realized,
        missing_pairs,
        improper_edges,
        out_of_range,
    })
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "k = {}: {}, {}",
            self.k,
            if self.is_complete {
                "complete"
            } else {
                "NOT complete"
            },
            if self.is_proper {
                "proper"
            } else {
                "not proper"
            }
        )?;
        writeln!(
            f,
            "realized {} of {} pairs",
            self.realized.len(),
            PairSet::capacity(self.k)
        )?;
        if !self.missing_pairs.is_empty() {
            let sample: Vec<String> = self
                .missing_pairs
                .iter()
                .take(20)
                .map(|(a, b)| format!("{{{a},{b}}}"))
                .collect();
            writeln!(
                f,
                "missing {}: {}{}",
                self.missing_pairs.len(),
                sample.join(" "),
                if self.missing_pairs.len() > 20 {
                    " ..."
                } else {
                    ""
                }
            )?;
        }
        if !self.improper_edges.is_empty() {
            writeln!(f, "improper edges: {}", self.improper_edges.len())?;
        }
        if !self.out_of_range.is_empty() {
            writeln!(f, "cells with colors above k: {}", self.out_of_range.len())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridGraph;

    fn coloring(dims: &[usize], k: u32, cells: &[u32]) -> PartialColoring {
        PartialColoring::from_cells(
            GridGraph::new(dims).unwrap(),
            k,
            cells.iter().map(|&c| Some(c)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn complete_2x2() {
        // complete but improper: the second column repeats color 2, and no
        // proper 3-complete coloring of the 4-cycle exists at all
        let c = coloring(&[2, 2], 3, &[1, 2, 3, 2]);
        let r = verify(&c, 3, None).unwrap();
        assert!(r.is_complete);
        assert!(!r.is_proper);
        assert_eq!(r.improper_edges.len(), 1);
        assert_eq!(r.improper_edges[0].color, 2);
        assert!(r.missing_pairs.is_empty());
    }

    #[test]
    fn remainder_excuses_missing_pair() {
        let c = coloring(&[2, 2], 3, &[1, 2, 2, 3]);
        let r = verify(&c, 3, None).unwrap();
        assert!(!r.is_complete);
        assert_eq!(r.missing_pairs.iter().collect::<Vec<_>>(), vec![(1, 3)]);

        let rem = PairSet::from_pairs(3, &[(1, 3)]).unwrap();
        let r = verify(&c, 3, Some(&rem)).unwrap();
        assert!(r.is_complete);
    }

    #[test]
    fn remainder_k_must_match() {
        let c = coloring(&[2, 2], 3, &[1, 2, 2, 3]);
        let rem = PairSet::from_pairs(4, &[(1, 3)]).unwrap();
        assert!(matches!(
            verify(&c, 3, Some(&rem)),
            Err(Error::RemainderMismatch { .. })
        ));
    }

    #[test]
    fn equal_colors_make_improper_even_out_of_range() {
        let c = coloring(&[1, 2], 3, &[5, 5]);
        let r = verify(&c, 3, None).unwrap();
        assert!(!r.is_proper);
        assert_eq!(r.improper_edges.len(), 1);
        assert_eq!(r.improper_edges[0].color, 5);
        assert_eq!(r.out_of_range.len(), 2);
    }

    #[test]
    fn out_of_range_reported_not_rejected() {
        let c = coloring(&[2, 2], 2, &[1, 2, 9, 1]);
        let r = verify(&c, 2, None).unwrap();
        assert_eq!(r.out_of_range.len(), 1);
        assert_eq!(r.out_of_range[0].color, 9);
        assert_eq!(r.out_of_range[0].cell, vec![2, 1]);
        // the 9s contribute no pairs
        assert!(r.is_complete); // {1,2} realized by the top edge
    }

    #[test]
    fn partial_cells_count_nothing() {
        let g = GridGraph::new(&[2, 2]).unwrap();
        let mut c = PartialColoring::empty(g, 2);
        c.set(0, 1).unwrap();
        let r = verify(&c, 2, None).unwrap();
        assert!(!r.is_complete);
        assert!(r.is_proper);
        assert_eq!(r.missing_pairs.len(), 1);
    }
}
