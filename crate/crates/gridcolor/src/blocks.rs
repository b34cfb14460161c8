//! Rectangular building blocks carrying many-color complete colorings.
//!
//! The Roichman rectangle R_m is a [16(m-2)+2, m] grid with a partial
//! coloring over psi = 8(m-2) colors. Writing (i, j) for 1-based cells, i
//! along the long axis, a cell is *even* when i+j is even. Even cells are
//! colored by a closed form split by parity:
//!
//! ```text
//! i, j both even:  (i/2 + 3j/2) mod psi
//! i, j both odd:   ((i-1)/2 + 3(j-1)/2 + 2) mod psi
//! ```
//!
//! so along a fixed j the colors of each parity class advance by one per
//! step of two in i, and a class of 8(m-2)+1 cells sweeps every color. Odd
//! cells with i >= 2 and 2 <= j <= m-1 copy their predecessor's color
//! shifted by 2 - 4(j-1); the remaining odd cells (i = 1 or j on the short
//! border) stay empty. An odd cell with color a then sees exactly
//! {a + 4(j-1) - 3, ..., a + 4(j-1)} on its four neighbors, and since
//! 4(j-1) ranges over 4, 8, ..., 4(m-2) in the interior lines, every color
//! difference 1..=psi/2 occurs somewhere: the coloring is psi-complete. No
//! neighbor offset is divisible by psi, so it is also proper, and remains
//! proper after greedy filling of the empty border cells.
//!
//! The modified rectangle drops the first long line (j = 1) and the first
//! short line (i = 1) of R_{m+1} and refills the freed last line: an odd
//! cell of the last line copies its predecessor's color when that color is
//! odd, and takes a brand-new color psi+1 otherwise. Dropping costs exactly
//! the consecutive pairs {a, a+1 mod psi} (they reappear nowhere else), and
//! the refilled line realizes those plus everything involving the new
//! color: a total coloring of [16m-15, m] that is (8m-7)-complete, though
//! no longer proper.

use crate::coloring::PartialColoring;
use crate::grid::GridGraph;
use crate::pairs::PairSet;
use crate::{Error, Result};

/// Closed form for even cells, 0-based residues mod psi.
fn even_residue(i: usize, j: usize, psi: usize) -> usize {
    debug_assert_eq!((i + j) % 2, 0);
    if i % 2 == 0 {
        (i / 2 + 3 * j / 2) % psi
    } else {
        ((i - 1) / 2 + 3 * (j - 1) / 2 + 2) % psi
    }
}

/// Residues of R_m ("mm" is the short side, >= 4), None for empty cells.
/// Row-major over dims [16(mm-2)+2, mm].
fn roichman_residues(mm: usize) -> Vec<Option<usize>> {
    let psi = 8 * (mm - 2);
    let height = 16 * (mm - 2) + 2;
    let mut cells = Vec::with_capacity(height * mm);
    for i in 1..=height {
        for j in 1..=mm {
            if (i + j) % 2 == 0 {
                cells.push(Some(even_residue(i, j, psi)));
            } else if i >= 2 && (2..=mm - 1).contains(&j) {
                let base = even_residue(i - 1, j, psi) as i64;
                let val = (base + 2 - 4 * (j as i64 - 1)).rem_euclid(psi as i64);
                cells.push(Some(val as usize));
            } else {
                cells.push(None);
            }
        }
    }
    cells
}

#[derive(Debug, Clone)]
pub struct RoichmanRectangle {
    pub m: usize,
    /// Long side, 16(m-2)+2.
    pub height: usize,
    /// Number of colors, 8(m-2).
    pub psi_hat: u32,
    pub coloring: PartialColoring,
}

/// The Roichman rectangle for m >= 4. With `fill_proper` the empty border
/// cells are filled greedily (smallest color unused by any neighbor), which
/// keeps the coloring proper and cannot remove pairs.
pub fn roichman_coloring(m: usize, fill_proper: bool) -> Result<RoichmanRectangle> {
    if m < 4 {
        return Err(Error::TooSmall {
            name: "roichman width m",
            min: 4,
            got: m,
        });
    }
    let psi = 8 * (m - 2);
    let height = 16 * (m - 2) + 2;
    let graph = GridGraph::new(&[height, m])?;
    let cells: Vec<Option<u32>> = roichman_residues(m)
        .into_iter()
        .map(|r| r.map(|v| v as u32 + 1))
        .collect();
    let mut coloring = PartialColoring::from_cells(graph, psi as u32, cells)?;

    if fill_proper {
        for idx in 0..coloring.graph().vertex_count() {
            if coloring.get(idx).is_some() {
                continue;
            }
            let taken: Vec<u32> = coloring
                .graph()
                .neighbors(idx)
                .filter_map(|u| coloring.get(u))
                .collect();
            let color = (1..=psi as u32)
                .find(|c| !taken.contains(c))
                .expect("psi exceeds any grid degree");
            coloring.set(idx, color)?;
        }
    }

    Ok(RoichmanRectangle {
        m,
        height,
        psi_hat: psi as u32,
        coloring,
    })
}

#[derive(Debug, Clone)]
pub struct ModifiedRoichmanRectangle {
    pub m: usize,
    /// Long side, 16(m-1)+1.
    pub height: usize,
    /// Number of colors, 8m-7.
    pub psi_bar: u32,
    pub coloring: PartialColoring,
}

/// The modified Roichman rectangle for m >= 3: a total (8m-7)-complete
/// coloring of [16m-15, m]. Not proper in general.
pub fn modified_roichman_coloring(m: usize) -> Result<ModifiedRoichmanRectangle> {
    if m < 3 {
        return Err(Error::TooSmall {
            name: "modified roichman width m",
            min: 3,
            got: m,
        });
    }
    let mm = m + 1; // build R_{m+1}, then trim
    let psi = 8 * (mm - 2);
    let g_height = 16 * (mm - 2) + 2;
    let residues = roichman_residues(mm);
    let at = |i: usize, j: usize| residues[(i - 1) * mm + (j - 1)];

    let height = g_height - 1;
    let graph = GridGraph::new(&[height, m])?;
    let mut cells = Vec::with_capacity(height * m);
    for ih in 1..=height {
        for jh in 1..=m {
            let (i, j) = (ih + 1, jh + 1); // host cell in R_{m+1}
            let residue = if (i + j) % 2 == 1 && j == mm {
                // refilled last line: copy the predecessor's color when odd,
                // otherwise introduce the fresh color psi (0-based index)
                let below = at(i - 1, j).expect("predecessor on the last line is even");
                if below % 2 == 0 {
                    psi
                } else {
                    below
                }
            } else {
                at(i, j).expect("interior of the trimmed rectangle is colored")
            };
            cells.push(Some(residue as u32 + 1));
        }
    }

    let coloring = PartialColoring::from_cells(graph, psi as u32 + 1, cells)?;
    debug_assert!(coloring.is_total());
    Ok(ModifiedRoichmanRectangle {
        m,
        height,
        psi_bar: psi as u32 + 1,
        coloring,
    })
}

#[derive(Debug, Clone)]
pub struct TwoRibbon {
    pub k: u32,
    pub coloring: PartialColoring,
}

impl TwoRibbon {
    /// The pairs a two-ribbon is contracted to realize: {j, t} for j in
    /// 1..=k and each fresh color t in {k+1, k+2, k+3}, plus the three
    /// pairs among the fresh colors. C(k+3,2) - C(k,2) = 3k+3 pairs.
    pub fn target_pairs(&self) -> PairSet {
        let k = self.k;
        let mut set = PairSet::new(k + 3);
        for t in k + 1..=k + 3 {
            for j in 1..=k {
                set.insert(j, t);
            }
        }
        set.insert(k + 1, k + 2);
        set.insert(k + 1, k + 3);
        set.insert(k + 2, k + 3);
        set
    }
}

/// A total coloring of the 2 x (k+3) ribbon over colors 1..=k+3 realizing
/// exactly the two-ribbon pair set, for k >= 2.
///
/// Per column one cell is even, one odd. Odd cells cycle the three fresh
/// colors with period 3, so the even cells of columns 2..=k+1, which carry
/// the base colors 1..=k in order, each see all three fresh colors among
/// their (up to) three odd neighbors. The final two even cells and final
/// odd cell are pinned to fresh colors chosen to close the fresh triangle
/// without ever putting equal colors on an edge.
pub fn two_ribbon_coloring(k: u32) -> Result<TwoRibbon> {
    if k < 2 {
        return Err(Error::TooSmall {
            name: "ribbon parameter k",
            min: 2,
            got: k as usize,
        });
    }
    let width = k as usize + 3;
    let graph = GridGraph::new(&[2, width])?;
    let mut coloring = PartialColoring::empty(graph, k + 3);

    let t_a = k + 1 + (k % 3);
    let t_b = k + 1 + ((k + 1) % 3);
    let t_c = k + 1 + ((k + 2) % 3);

    for j in 1..=width {
        let (even_row, odd_row) = if j % 2 == 1 { (1, 2) } else { (2, 1) };
        let even_color = match j as u32 {
            1 => 1,
            jj if jj <= k + 1 => jj - 1,
            jj if jj == k + 2 => t_c,
            _ => t_a,
        };
        let odd_color = if j == width {
            t_b
        } else {
            k + 1 + ((j as u32 - 1) % 3)
        };
        coloring.set_at(&[even_row, j], even_color)?;
        coloring.set_at(&[odd_row, j], odd_color)?;
    }

    Ok(TwoRibbon { k, coloring })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::edge_bound;
    use crate::verify::verify;

    #[test]
    fn roichman_m4_shape_and_completeness() {
        let r = roichman_coloring(4, false).unwrap();
        assert_eq!(r.coloring.graph().dims(), &[34, 4]);
        assert_eq!(r.psi_hat, 16);
        let report = verify(&r.coloring, 16, None).unwrap();
        assert!(report.is_complete);
        assert!(report.is_proper);
    }

    #[test]
    fn roichman_rejects_small_m() {
        assert!(matches!(
            roichman_coloring(3, false),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn roichman_filled_stays_complete_and_proper() {
        for m in 4..=7 {
            let r = roichman_coloring(m, true).unwrap();
            assert!(r.coloring.is_total());
            let report = verify(&r.coloring, r.psi_hat, None).unwrap();
            assert!(report.is_complete, "m = {m}");
            assert!(report.is_proper, "m = {m}");
        }
    }

    #[test]
    fn roichman_empty_cells_are_the_odd_border() {
        let r = roichman_coloring(5, false).unwrap();
        let g = r.coloring.graph();
        for idx in 0..g.vertex_count() {
            let c = g.coord_of(idx);
            let (i, j) = (c[0], c[1]);
            let odd = (i + j) % 2 == 1;
            let border = i == 1 || j == 1 || j == r.m;
            assert_eq!(r.coloring.get(idx).is_none(), odd && border);
        }
    }

    #[test]
    fn roichman_odd_cells_see_four_consecutive_offsets() {
        for m in [4usize, 6] {
            let r = roichman_coloring(m, false).unwrap();
            let g = r.coloring.graph();
            let psi = r.psi_hat as i64;
            for idx in 0..g.vertex_count() {
                let coord = g.coord_of(idx);
                let (i, j) = (coord[0], coord[1]);
                if (i + j) % 2 == 0 || r.coloring.get(idx).is_none() {
                    continue;
                }
                let a = r.coloring.get(idx).unwrap() as i64;
                let mut offsets: Vec<i64> = g
                    .neighbors(idx)
                    .map(|u| {
                        let b = r.coloring.get(u).expect("odd cell neighbors are even") as i64;
                        (b - a).rem_euclid(psi)
                    })
                    .collect();
                offsets.sort_unstable();
                let base = 4 * (j as i64 - 1);
                let mut expect: Vec<i64> = (base - 3..=base).map(|x| x.rem_euclid(psi)).collect();
                expect.sort_unstable();
                if i < r.height {
                    assert_eq!(offsets, expect, "m = {m}, cell ({i},{j})");
                } else {
                    // last-line odd cells lack the downward neighbor
                    assert_eq!(offsets.len(), 3, "m = {m}, cell ({i},{j})");
                    assert!(
                        offsets.iter().all(|o| expect.contains(o)),
                        "m = {m}, cell ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn roichman_interior_lines_attain_every_color_in_both_parities() {
        for m in [4usize, 5] {
            let r = roichman_coloring(m, false).unwrap();
            let g = r.coloring.graph();
            for j in 2..=m - 1 {
                let mut evens = vec![false; r.psi_hat as usize];
                let mut odds = vec![false; r.psi_hat as usize];
                for i in 1..=r.height {
                    let idx = g.index_of(&[i, j]).unwrap();
                    if let Some(c) = r.coloring.get(idx) {
                        if (i + j) % 2 == 0 {
                            evens[c as usize - 1] = true;
                        } else {
                            odds[c as usize - 1] = true;
                        }
                    }
                }
                assert!(evens.iter().all(|&b| b), "m = {m}, line {j} even cells");
                assert!(odds.iter().all(|&b| b), "m = {m}, line {j} odd cells");
            }
        }
    }

    #[test]
    fn roichman_edge_bound_gap() {
        // |E(R_m)| supports at most 8m-10 colors, 6 short of 8(m-2)+... the
        // rectangle realizes 8m-16, comfortably under the counting bound.
        for m in 4..=12usize {
            let g = GridGraph::new(&[16 * (m - 2) + 2, m]).unwrap();
            assert_eq!(edge_bound(g.edge_count() as u64), 8 * m as u32 - 10);
        }
    }

    #[test]
    fn modified_m3_shape_and_completeness() {
        let r = modified_roichman_coloring(3).unwrap();
        assert_eq!(r.coloring.graph().dims(), &[33, 3]);
        assert_eq!(r.psi_bar, 17);
        assert!(r.coloring.is_total());
        let report = verify(&r.coloring, 17, None).unwrap();
        assert!(report.is_complete);
    }

    #[test]
    fn modified_sweep_is_complete() {
        for m in 3..=8 {
            let r = modified_roichman_coloring(m).unwrap();
            assert_eq!(r.height, 16 * m - 15);
            assert_eq!(r.psi_bar, 8 * m as u32 - 7);
            let report = verify(&r.coloring, r.psi_bar, None).unwrap();
            assert!(report.is_complete, "m = {m}");
        }
    }

    #[test]
    fn modified_edge_count_stays_under_pair_capacity() {
        // |E| = 32m^2 - 47m + 15 < C(8m-5, 2), so psi_bar+2 colors can never
        // be ruled out by edges alone; the construction stops at 8m-7.
        for m in 3..=12usize {
            let g = GridGraph::new(&[16 * m - 15, m]).unwrap();
            let e = g.edge_count();
            assert_eq!(e, 32 * m * m - 47 * m + 15);
            let cap = (8 * m - 5) * (8 * m - 6) / 2;
            assert!(e < cap, "m = {m}");
        }
    }

    #[test]
    fn long_axis_ends_agree_in_every_line() {
        // first/last even cells of each long line carry equal colors; this
        // wrap is what makes trimming the first short line affordable
        let mm = 5usize;
        let psi = 8 * (mm - 2);
        let res = roichman_residues(mm);
        let height = 16 * (mm - 2) + 2;
        let at = |i: usize, j: usize| res[(i - 1) * mm + (j - 1)];
        for j in 1..=mm {
            let first_even = if (1 + j) % 2 == 0 { 1 } else { 2 };
            let last_even = if (height + j) % 2 == 0 {
                height
            } else {
                height - 1
            };
            assert_eq!(
                at(first_even, j).unwrap() % psi,
                at(last_even, j).unwrap() % psi,
                "line {j}"
            );
        }
    }

    #[test]
    fn ribbon_k2_matches_hand_enumeration() {
        let r = two_ribbon_coloring(2).unwrap();
        assert_eq!(r.coloring.graph().dims(), &[2, 5]);
        let realized = r.coloring.realized_pairs();
        let target = r.target_pairs();
        assert_eq!(target.len(), 9);
        assert_eq!(realized, target);
        for (a, b) in [
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ] {
            assert!(realized.contains(a, b), "({a},{b})");
        }
    }

    #[test]
    fn ribbon_sweep_realizes_exact_target() {
        for k in 2..=60u32 {
            let r = two_ribbon_coloring(k).unwrap();
            assert_eq!(r.coloring.graph().dims(), &[2, k as usize + 3]);
            assert!(r.coloring.is_total());
            let realized = r.coloring.realized_pairs();
            let target = r.target_pairs();
            assert_eq!(target.len(), 3 * k as usize + 3, "k = {k}");
            assert_eq!(realized, target, "k = {k}");
            // a ribbon is even proper, though nothing downstream needs it
            let report = verify(&r.coloring, k + 3, None).unwrap();
            assert!(report.is_proper, "k = {k}");
        }
    }

    #[test]
    fn ribbon_even_cells_carry_the_base_palette_once() {
        for k in [2u32, 7, 24] {
            let r = two_ribbon_coloring(k).unwrap();
            let mut seen = vec![0u32; k as usize + 4];
            for j in 2..=k as usize + 1 {
                let even_row = if j % 2 == 1 { 1 } else { 2 };
                let c = r.coloring.get_at(&[even_row, j]).unwrap().unwrap();
                assert!(c >= 1 && c <= k);
                seen[c as usize] += 1;
            }
            assert!((1..=k as usize).all(|c| seen[c] == 1), "k = {k}");
        }
    }

    #[test]
    fn ribbon_rejects_k1() {
        assert!(matches!(
            two_ribbon_coloring(1),
            Err(Error::TooSmall { .. })
        ));
    }
}
