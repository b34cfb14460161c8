//! Spatial composition: strip copy-paste, transposition, sub-rectangle
//! embedding, snake-shaped path embedding, and the pipeline that assembles
//! them into a many-color complete coloring of the n x n grid.
//!
//! Copy-paste cuts a short-and-wide source [m1, n1] into `k` strips of the
//! target width n2, consecutive strips sharing one column, and stamps the
//! strips into the target [m2, n2] top to bottom. Sharing a column means
//! every source edge lies wholly inside some strip, so the target realizes
//! every pair the source does. Requires k*m1 <= m2 (strips fit) and
//! n1 + (k-1) <= k*n2 (k strips of width n2 with k-1 shared columns cover
//! the source). The source is first padded to width k*n2 - (k-1); padding
//! columns carry no color and are reported, strip by strip, as empty
//! rectangles of the layout, along with the unused rows below strip k.

use crate::blocks::{modified_roichman_coloring, two_ribbon_coloring};
use crate::bounds::grid_gamma_upper;
use crate::coloring::PartialColoring;
use crate::grid::GridGraph;
use crate::paths::{extension_path_coloring, PathColoring};
use crate::search::{
    local_search, AnnealParams, Budget, SearchConfig, SearchStatus, SearchStrategy,
};
use crate::{Error, Result};

/// Axis-aligned cell rectangle, 1-based inclusive bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rect {
    pub rows: [usize; 2],
    pub cols: [usize; 2],
}

impl Rect {
    pub fn contains(&self, cell: [usize; 2]) -> bool {
        (self.rows[0]..=self.rows[1]).contains(&cell[0])
            && (self.cols[0]..=self.cols[1]).contains(&cell[1])
    }

    pub fn cells(&self) -> impl Iterator<Item = [usize; 2]> + '_ {
        (self.rows[0]..=self.rows[1])
            .flat_map(move |i| (self.cols[0]..=self.cols[1]).map(move |j| [i, j]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StripPlacement {
    /// 1-based strip number.
    pub strip: usize,
    /// Column range of the padded source this strip copies.
    pub padded_cols: [usize; 2],
    /// Where the strip lands in the target.
    pub target: Rect,
}

#[derive(Debug, Clone)]
pub struct PasteLayout {
    pub strip_count: usize,
    pub source_dims: [usize; 2],
    pub target_dims: [usize; 2],
    pub strips: Vec<StripPlacement>,
    /// Target rectangles guaranteed unassigned: per-strip padding tails
    /// plus the row band below the last strip.
    pub empty_regions: Vec<Rect>,
}

/// Stamp `strips` overlapping strips of `src` into a fresh target coloring.
pub fn copy_paste(
    src: &PartialColoring,
    target_dims: &[usize],
    strips: usize,
) -> Result<(PartialColoring, PasteLayout)> {
    let sg = src.graph();
    if sg.ndim() != 2 {
        return Err(Error::NotTwoDimensional { got: sg.ndim() });
    }
    if target_dims.len() != 2 {
        return Err(Error::NotTwoDimensional {
            got: target_dims.len(),
        });
    }
    if strips == 0 {
        return Err(Error::TooSmall {
            name: "strip count",
            min: 1,
            got: 0,
        });
    }
    let (m1, n1) = (sg.dims()[0], sg.dims()[1]);
    let (m2, n2) = (target_dims[0], target_dims[1]);
    if strips * m1 > m2 {
        return Err(Error::PasteRows {
            strips,
            source_rows: m1,
            target_rows: m2,
        });
    }
    if n1 + (strips - 1) > strips * n2 {
        return Err(Error::PasteCols {
            strips,
            source_cols: n1,
            target_cols: n2,
        });
    }

    let target = GridGraph::new(target_dims)?;
    let mut out = PartialColoring::empty(target, src.k());
    let mut placements = Vec::with_capacity(strips);
    let mut empty_regions = Vec::new();

    for r in 1..=strips {
        let col_lo = (r - 1) * (n2 - 1) + 1; // padded source columns
        let col_hi = col_lo + n2 - 1;
        let row_lo = (r - 1) * m1 + 1;
        let rect = Rect {
            rows: [row_lo, row_lo + m1 - 1],
            cols: [1, n2],
        };
        for i in 1..=m1 {
            for p in col_lo..=col_hi.min(n1) {
                if let Some(c) = src.get_at(&[i, p])? {
                    out.set_at(&[row_lo + i - 1, p - col_lo + 1], c)?;
                }
            }
        }
        placements.push(StripPlacement {
            strip: r,
            padded_cols: [col_lo, col_hi],
            target: rect,
        });
        if col_hi > n1 {
            // this strip's tail is pure padding
            let from = n1.max(col_lo - 1) + 1 - col_lo + 1;
            empty_regions.push(Rect {
                rows: rect.rows,
                cols: [from, n2],
            });
        }
    }
    if strips * m1 < m2 {
        empty_regions.push(Rect {
            rows: [strips * m1 + 1, m2],
            cols: [1, n2],
        });
    }

    let layout = PasteLayout {
        strip_count: strips,
        source_dims: [m1, n1],
        target_dims: [m2, n2],
        strips: placements,
        empty_regions,
    };
    Ok((out, layout))
}

pub fn transpose(c: &PartialColoring) -> Result<PartialColoring> {
    let g = c.graph();
    if g.ndim() != 2 {
        return Err(Error::NotTwoDimensional { got: g.ndim() });
    }
    let (a, b) = (g.dims()[0], g.dims()[1]);
    let mut out = PartialColoring::empty(GridGraph::new(&[b, a])?, c.k());
    for i in 1..=a {
        for j in 1..=b {
            if let Some(color) = c.get_at(&[i, j])? {
                out.set_at(&[j, i], color)?;
            }
        }
    }
    Ok(out)
}

/// Union of `piece` translated by `offset` (0-based displacement) with
/// `host`. Overlap on equal colors is allowed; differing colors conflict.
pub fn embed_at(
    piece: &PartialColoring,
    host: &PartialColoring,
    offset: &[usize],
) -> Result<PartialColoring> {
    let pg = piece.graph();
    let hg = host.graph();
    if pg.ndim() != hg.ndim() {
        return Err(Error::CoordLength {
            expected: hg.ndim(),
            got: pg.ndim(),
        });
    }
    if offset.len() != hg.ndim() {
        return Err(Error::CoordLength {
            expected: hg.ndim(),
            got: offset.len(),
        });
    }
    for axis in 0..hg.ndim() {
        let end = offset[axis] + pg.dims()[axis];
        if end > hg.dims()[axis] {
            return Err(Error::EmbedOutOfBounds {
                axis,
                end,
                max: hg.dims()[axis],
            });
        }
    }
    let mut out = host.clone().with_k(host.k().max(piece.k()));
    for idx in 0..pg.vertex_count() {
        let Some(color) = piece.get(idx) else {
            continue;
        };
        let mut coord = pg.coord_of(idx);
        for (x, o) in coord.iter_mut().zip(offset) {
            *x += o;
        }
        write_cell(&mut out, &coord, color)?;
    }
    Ok(out)
}

fn write_cell(out: &mut PartialColoring, coord: &[usize], color: u32) -> Result<()> {
    match out.get_at(coord)? {
        Some(existing) if existing != color => Err(Error::EmbedConflict {
            cell: coord.to_vec(),
            existing,
            new: color,
        }),
        Some(_) => Ok(()),
        None => out.set_at(coord, color),
    }
}

/// Lay a path coloring into a fresh [a, b] rectangle boustrophedon: row 1
/// left to right, row 2 right to left, and so on. Consecutive path vertices
/// land on adjacent cells, so all path pairs survive.
pub fn snake_embed_path(p: &PathColoring, region_dims: &[usize]) -> Result<PartialColoring> {
    if region_dims.len() != 2 {
        return Err(Error::NotTwoDimensional {
            got: region_dims.len(),
        });
    }
    let g = GridGraph::new(region_dims)?;
    let vertices = p.colors().len();
    if vertices > g.vertex_count() {
        return Err(Error::PathTooLong {
            vertices,
            capacity: g.vertex_count(),
        });
    }
    let (a, b) = (region_dims[0], region_dims[1]);
    let mut out = PartialColoring::empty(g, p.k());
    'fill: for i in 1..=a {
        for step in 0..b {
            let t = (i - 1) * b + step;
            if t >= vertices {
                break 'fill;
            }
            let j = if i % 2 == 1 { step + 1 } else { b - step };
            out.set_at(&[i, j], p.colors()[t])?;
        }
    }
    Ok(out)
}

/// Lay a path coloring along an explicit cell route inside `host`.
fn embed_path_along(
    host: &PartialColoring,
    p: &PathColoring,
    route: &[[usize; 2]],
) -> Result<PartialColoring> {
    let vertices = p.colors().len();
    if vertices > route.len() {
        return Err(Error::PathTooLong {
            vertices,
            capacity: route.len(),
        });
    }
    debug_assert!(route
        .windows(2)
        .all(|w| { w[0][0].abs_diff(w[1][0]) + w[0][1].abs_diff(w[1][1]) == 1 }));
    let mut out = host.clone().with_k(host.k().max(p.k()));
    for (cell, &color) in route.iter().zip(p.colors()) {
        write_cell(&mut out, cell, color)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructMethod {
    /// Pipeline for n >= 20, search below.
    Auto,
    /// The paste-and-patch pipeline; errors below n = 20.
    Pipeline,
    /// Annealing search descending from the counting upper bound.
    Search,
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub coloring: PartialColoring,
    pub k_achieved: u32,
    /// "theorem2" for the pipeline, "search" otherwise.
    pub method: &'static str,
    pub upper_bound: u32,
}

/// Color count the pipeline reaches for n >= 20, by residue of n mod 4.
pub fn pipeline_target(n: usize) -> u32 {
    let n = n as u32;
    match n % 4 {
        0 | 1 => 2 * n - 6,
        2 => 2 * n - 7,
        _ => 2 * n - 9,
    }
}

/// A complete coloring of the n x n grid with as many colors as this
/// library knows how to reach.
pub fn construct_gn(n: usize, method: ConstructMethod, seed: u64) -> Result<Construction> {
    if n < 2 {
        return Err(Error::TooSmall {
            name: "grid order n",
            min: 2,
            got: n,
        });
    }
    let upper = grid_gamma_upper(&[n, n])?.combined;
    match method {
        ConstructMethod::Pipeline => pipeline(n, upper),
        ConstructMethod::Search => Ok(search_construct(n, seed, upper)),
        ConstructMethod::Auto if n >= 20 => pipeline(n, upper),
        ConstructMethod::Auto => Ok(search_construct(n, seed, upper)),
    }
}

/// The n >= 20 assembly. Writing m = floor(n/4) and starting from a
/// transposed modified Roichman rectangle [m, 16m-15] pasted in 4 strips,
/// the target is (8m-7)-complete and its top-right leftover spans rows
/// 3m+1..4m and the last 4(n mod 4)+12 columns, with n-4m full rows below.
/// Each residue patches the leftover with gadgets realizing the missing
/// pairs of a larger palette:
///
///   n = 4m:   snake a path realizing [8m-7] x {8m-6} into the [m, 12] hole
///   n = 4m+1: paste a (8m-7)-ribbon, transposed, into rows 3m+1..n
///   n = 4m+2,
///   n = 4m+3: paste a (8m-6)-ribbon the same way (its [4, 2] pad corner
///             stays free), then thread a path realizing [8m-7] x {8m-6}
///             through the remaining L-shaped hole and that corner
pub fn pipeline(n: usize, upper: u32) -> Result<Construction> {
    if n < 20 {
        return Err(Error::PipelineTooSmall { n });
    }
    let m = n / 4;
    let base = modified_roichman_coloring(m)?;
    let kb = base.psi_bar; // 8m - 7
    let wide = transpose(&base.coloring)?;
    let (mut c, _) = copy_paste(&wide, &[n, n], 4)?;

    match n % 4 {
        0 => {
            let patch = snake_embed_path(&extension_path_coloring(kb)?, &[m, 12])?;
            c = embed_at(&patch, &c, &[3 * m, n - 12])?;
        }
        1 => {
            let ribbon = two_ribbon_coloring(kb)?; // [2, 8m-4]
            let (pasted, _) = copy_paste(&ribbon.coloring, &[16, m + 1], 8)?;
            c = embed_at(&transpose(&pasted)?, &c, &[3 * m, n - 16])?;
        }
        r => {
            let ribbon = two_ribbon_coloring(kb + 1)?; // [2, 8m-3]
            let (pasted, _) = copy_paste(&ribbon.coloring, &[16, m + 1], 8)?;
            c = embed_at(&transpose(&pasted)?, &c, &[3 * m, n - 16])?;
            let route = l_route(n, m, 4 * r + 12);
            c = embed_path_along(&c, &extension_path_coloring(kb)?, &route)?;
        }
    }

    let k = pipeline_target(n);
    Ok(Construction {
        coloring: c.with_k(k),
        k_achieved: k,
        method: "theorem2",
        upper_bound: upper,
    })
}

/// Free-cell route for the n = 4m+2 and 4m+3 cases: snake down the strip-4
/// leftover band left of the pasted block (e = leftover width, so the band
/// starts at column n-e+1, clamped since for n = 23 the band spills across
/// the whole width), then run the empty bottom rows and hook through the
/// block's free corner in columns n-1, n. Longer than any path threaded
/// through it; surplus cells just stay empty.
fn l_route(n: usize, m: usize, e: usize) -> Vec<[usize; 2]> {
    let band_lo = (n + 1).saturating_sub(e).max(1);
    let band_hi = n - 16;
    let mut route = Vec::new();
    for row in 3 * m + 1..=4 * m {
        if (4 * m - row) % 2 == 0 {
            for j in band_lo..=band_hi {
                route.push([row, j]);
            }
        } else {
            for j in (band_lo..=band_hi).rev() {
                route.push([row, j]);
            }
        }
    }
    // band ends at (4m, n-16); drop one row and run left
    for j in (1..=n - 16).rev() {
        route.push([4 * m + 1, j]);
    }
    for j in 1..=n - 1 {
        route.push([4 * m + 2, j]);
    }
    // ascend the free corner and come back down its outer column
    for row in (4 * m - 2..=4 * m + 1).rev() {
        route.push([row, n - 1]);
    }
    for row in 4 * m - 2..=4 * m + 2 {
        route.push([row, n]);
    }
    if n % 4 == 3 {
        for j in (1..=n).rev() {
            route.push([4 * m + 3, j]);
        }
    }
    route
}

fn search_construct(n: usize, seed: u64, upper: u32) -> Construction {
    let g = GridGraph::new(&[n, n]).expect("square dims are valid");
    let mut k = upper;
    loop {
        let cfg = SearchConfig {
            k,
            proper_only: false,
            strategy: SearchStrategy::Local,
            seed: seed ^ (k as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
            budget: Budget::nodes(1_500_000),
            symmetry: false,
            restarts: 6,
            anneal: AnnealParams::default(),
        };
        let out = local_search(&g, &cfg);
        if out.status == SearchStatus::Found {
            return Construction {
                coloring: out.witness.expect("found implies witness"),
                k_achieved: k,
                method: "search",
                upper_bound: upper,
            };
        }
        // k = 1 needs no pairs at all, so this terminates
        k -= 1;
    }
}
