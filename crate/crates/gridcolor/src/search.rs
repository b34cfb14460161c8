//! Exhaustive and annealing search for k-complete colorings.
//!
//! The exhaustive searcher assigns cells in index order, keeping a count of
//! realizing edges per color pair so the missing-pair total updates in
//! O(degree) per assignment. It prunes a branch when the missing pairs
//! outnumber the edges whose later endpoint is still unassigned (each such
//! edge realizes at most one new pair), and enumerates colors in canonical
//! first-occurrence order: a cell may use at most one color beyond the
//! largest used so far. Completeness and properness are invariant under
//! color renaming, so the canonical tree loses nothing, and an exhausted
//! tree certifies that no k-complete coloring exists.
//!
//! The local searcher anneals over total colorings, minimizing missing
//! pairs (plus clashing edges when properness is requested). Single-cell
//! recolors move the objective by O(degree) bookkeeping; uphill moves pass
//! a Metropolis test under a geometrically cooling temperature that reheats
//! after sustained stagnation. Deterministic for a given seed and node
//! budget. It can only ever prove existence, never absence.

use crate::bounds::grid_gamma_upper;
use crate::coloring::PartialColoring;
use crate::grid::GridGraph;
use crate::pairs::{tri_index, PairSet};
use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    Exhaustive,
    Local,
}

/// Node limit, wall-clock limit, or both; unlimited when empty. A node is
/// one applied assignment (exhaustive) or one proposed move (local).
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub fn nodes(n: u64) -> Self {
        Budget {
            max_nodes: Some(n),
            max_seconds: None,
        }
    }

    pub fn seconds(s: f64) -> Self {
        Budget {
            max_nodes: None,
            max_seconds: Some(s),
        }
    }

    pub fn unlimited() -> Self {
        Budget::default()
    }
}

/// Annealing knobs. Temperature is in objective units: missing pairs, plus
/// clashing edges under proper_only.
#[derive(Debug, Clone, Copy)]
pub struct AnnealParams {
    /// Starting temperature of each restart.
    pub initial_temp: f64,
    /// Geometric factor applied after every sweep.
    pub cooling: f64,
    /// Cooling floor.
    pub min_temp: f64,
    /// Multiplier on reheat after stagnation (capped at initial_temp);
    /// 1.0 disables reheating. Off by default: near the optimum the search
    /// lives on zero-cost swaps of which pair is missing, and a reheat
    /// throws that progress away.
    pub reheat_factor: f64,
    /// Sweeps without a new best objective before reheating.
    pub stagnation_sweeps: u32,
    /// Fraction of proposals aimed at a currently missing pair: recolor a
    /// cell next to one half of the pair to the other half. Still a
    /// single-cell move, but it reaches the rare improving moves that
    /// uniform proposals almost never draw near the optimum.
    pub targeted: f64,
}

impl Default for AnnealParams {
    fn default() -> Self {
        AnnealParams {
            initial_temp: 2.5,
            cooling: 0.999,
            min_temp: 0.02,
            reheat_factor: 1.0,
            stagnation_sweeps: 80,
            targeted: 0.25,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub k: u32,
    /// Also require no edge to join equal colors.
    pub proper_only: bool,
    pub strategy: SearchStrategy,
    /// Ignored by the exhaustive strategy.
    pub seed: u64,
    pub budget: Budget,
    /// Exhaustive only: on square grids, prune transposed duplicates.
    pub symmetry: bool,
    /// Local only: independent annealing runs splitting the node budget.
    pub restarts: u32,
    pub anneal: AnnealParams,
}

impl SearchConfig {
    pub fn new(k: u32, strategy: SearchStrategy) -> Self {
        SearchConfig {
            k,
            proper_only: false,
            strategy,
            seed: 0,
            budget: Budget::default(),
            symmetry: true,
            restarts: 4,
            anneal: AnnealParams::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    /// The pruned tree was fully explored: no k-complete coloring exists.
    ExhaustedNone,
    BudgetExceeded,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<PartialColoring>,
    pub nodes_explored: u64,
    pub elapsed_seconds: f64,
    /// Smallest objective seen anywhere in the run.
    pub best_missing: usize,
}

struct Stop;

struct Backtracker {
    k: u32,
    proper_only: bool,
    back_neighbors: Vec<Vec<usize>>,
    /// suffix_edges[i]: edges whose later endpoint has index >= i.
    suffix_edges: Vec<usize>,
    /// Cell whose color must dominate its transpose partner, if any.
    sym: Option<(usize, usize)>,
    pair_count: Vec<u32>,
    missing: usize,
    cells: Vec<u32>, // 0 = unassigned
    nodes: u64,
    best_missing: usize,
    max_nodes: u64,
    deadline: Option<(Instant, f64)>,
    witness: Option<Vec<u32>>,
    out_of_budget: bool,
}

impl Backtracker {
    fn budget_hit(&mut self) -> bool {
        if self.out_of_budget {
            return true;
        }
        if self.nodes >= self.max_nodes {
            self.out_of_budget = true;
            return true;
        }
        if let Some((start, limit)) = self.deadline {
            if self.nodes % 4096 == 0 && start.elapsed().as_secs_f64() >= limit {
                self.out_of_budget = true;
                return true;
            }
        }
        false
    }

    fn dfs(&mut self, i: usize, max_used: u32) -> std::result::Result<(), Stop> {
        if self.missing == 0 {
            self.witness = Some(self.cells.clone());
            return Err(Stop);
        }
        if self.budget_hit() {
            return Err(Stop);
        }
        if i == self.cells.len() || self.missing > self.suffix_edges[i] {
            return Ok(());
        }
        let limit = self.k.min(max_used + 1);
        'colors: for c in 1..=limit {
            if let Some((cell, partner)) = self.sym {
                if cell == i && c < self.cells[partner] {
                    continue;
                }
            }
            for &u in &self.back_neighbors[i] {
                if self.proper_only && self.cells[u] == c {
                    continue 'colors;
                }
            }
            self.nodes += 1;
            self.apply(i, c);
            if self.missing < self.best_missing {
                self.best_missing = self.missing;
            }
            let r = self.dfs(i + 1, max_used.max(c));
            self.unapply(i, c);
            r?;
        }
        Ok(())
    }

    fn apply(&mut self, i: usize, c: u32) {
        self.cells[i] = c;
        for n in 0..self.back_neighbors[i].len() {
            let cu = self.cells[self.back_neighbors[i][n]];
            if cu != c {
                let t = tri_index(cu.min(c), cu.max(c));
                self.pair_count[t] += 1;
                if self.pair_count[t] == 1 {
                    self.missing -= 1;
                }
            }
        }
    }

    fn unapply(&mut self, i: usize, c: u32) {
        for n in 0..self.back_neighbors[i].len() {
            let cu = self.cells[self.back_neighbors[i][n]];
            if cu != c {
                let t = tri_index(cu.min(c), cu.max(c));
                self.pair_count[t] -= 1;
                if self.pair_count[t] == 0 {
                    self.missing += 1;
                }
            }
        }
        self.cells[i] = 0;
    }
}

/// Complete backtracking search; `ExhaustedNone` is a certificate of
/// nonexistence at this k.
pub fn exhaustive_search(g: &GridGraph, cfg: &SearchConfig) -> SearchOutcome {
    let start = Instant::now();
    let v = g.vertex_count();
    let mut back_neighbors: Vec<Vec<usize>> = vec![Vec::new(); v];
    for (a, b) in g.edges() {
        back_neighbors[a.max(b)].push(a.min(b));
    }
    let mut suffix_edges = vec![0usize; v + 1];
    for i in (0..v).rev() {
        suffix_edges[i] = suffix_edges[i + 1] + back_neighbors[i].len();
    }
    // on a square, a canonical coloring and its transpose differ first at
    // the cells just off the corner; forcing their order halves the tree
    let sym = if cfg.symmetry && g.ndim() == 2 && g.dims()[0] == g.dims()[1] && g.dims()[0] >= 2 {
        Some((g.dims()[1], 1))
    } else {
        None
    };

    let mut bt = Backtracker {
        k: cfg.k,
        proper_only: cfg.proper_only,
        back_neighbors,
        suffix_edges,
        sym,
        pair_count: vec![0; PairSet::capacity(cfg.k)],
        missing: PairSet::capacity(cfg.k),
        cells: vec![0; v],
        nodes: 0,
        best_missing: PairSet::capacity(cfg.k),
        max_nodes: cfg.budget.max_nodes.unwrap_or(u64::MAX),
        deadline: cfg.budget.max_seconds.map(|s| (start, s)),
        witness: None,
        out_of_budget: false,
    };
    let _ = bt.dfs(0, 0);

    let (status, witness) = match (&bt.witness, bt.out_of_budget) {
        (Some(cells), _) => {
            let cells = cells
                .iter()
                .map(|&c| if c == 0 { None } else { Some(c) })
                .collect();
            let w = PartialColoring::from_cells(g.clone(), cfg.k, cells)
                .expect("search assigns only colors in 1..=k");
            (SearchStatus::Found, Some(w))
        }
        (None, true) => (SearchStatus::BudgetExceeded, None),
        (None, false) => (SearchStatus::ExhaustedNone, None),
    };
    SearchOutcome {
        status,
        witness,
        nodes_explored: bt.nodes,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        best_missing: bt.best_missing,
    }
}

/// Inverse of `tri_index`: the pair (a, b), a < b, stored at slot t.
fn pair_of(t: usize) -> (u32, u32) {
    let mut x = ((1.0 + (1.0 + 8.0 * t as f64).sqrt()) / 2.0) as usize;
    while x * (x - 1) / 2 > t {
        x -= 1;
    }
    while x * (x + 1) / 2 <= t {
        x += 1;
    }
    ((t - x * (x - 1) / 2 + 1) as u32, (x + 1) as u32)
}

struct Annealer<'a> {
    g: &'a GridGraph,
    proper_only: bool,
    pair_count: Vec<u32>,
    clashes: usize,
    cells: Vec<u32>,
    /// Tri indices of unrealized pairs, in swap-remove order.
    missing_list: Vec<u32>,
    /// Slot of each tri index inside missing_list; u32::MAX when realized.
    missing_pos: Vec<u32>,
    /// Cells holding each color; bucket 0 unused.
    by_color: Vec<Vec<u32>>,
    color_pos: Vec<u32>,
}

impl<'a> Annealer<'a> {
    fn init(g: &'a GridGraph, k: u32, proper_only: bool, rng: &mut ChaCha8Rng) -> Self {
        let cells: Vec<u32> = (0..g.vertex_count())
            .map(|_| rng.gen_range(1..=k))
            .collect();
        let mut pair_count = vec![0u32; PairSet::capacity(k)];
        let mut clashes = 0usize;
        for (a, b) in g.edges() {
            let (ca, cb) = (cells[a], cells[b]);
            if ca == cb {
                clashes += 1;
            } else {
                pair_count[tri_index(ca.min(cb), ca.max(cb))] += 1;
            }
        }
        let mut missing_list = Vec::new();
        let mut missing_pos = vec![u32::MAX; pair_count.len()];
        for (t, &count) in pair_count.iter().enumerate() {
            if count == 0 {
                missing_pos[t] = missing_list.len() as u32;
                missing_list.push(t as u32);
            }
        }
        let mut by_color: Vec<Vec<u32>> = vec![Vec::new(); k as usize + 1];
        let mut color_pos = vec![0u32; cells.len()];
        for (v, &c) in cells.iter().enumerate() {
            color_pos[v] = by_color[c as usize].len() as u32;
            by_color[c as usize].push(v as u32);
        }
        Annealer {
            g,
            proper_only,
            pair_count,
            clashes,
            cells,
            missing_list,
            missing_pos,
            by_color,
            color_pos,
        }
    }

    fn objective(&self) -> usize {
        self.missing_list.len() + if self.proper_only { self.clashes } else { 0 }
    }

    fn mark_missing(&mut self, t: usize) {
        self.missing_pos[t] = self.missing_list.len() as u32;
        self.missing_list.push(t as u32);
    }

    fn mark_realized(&mut self, t: usize) {
        let pos = self.missing_pos[t] as usize;
        self.missing_list.swap_remove(pos);
        if let Some(&moved) = self.missing_list.get(pos) {
            self.missing_pos[moved as usize] = pos as u32;
        }
        self.missing_pos[t] = u32::MAX;
    }

    /// Recolor cell v to c, updating counts; returns the old color.
    fn recolor(&mut self, v: usize, c: u32) -> u32 {
        let old = self.cells[v];
        for u in self.g.neighbors(v) {
            let cu = self.cells[u];
            if cu == old {
                self.clashes -= 1;
            } else {
                let t = tri_index(cu.min(old), cu.max(old));
                self.pair_count[t] -= 1;
                if self.pair_count[t] == 0 {
                    self.mark_missing(t);
                }
            }
            if cu == c {
                self.clashes += 1;
            } else {
                let t = tri_index(cu.min(c), cu.max(c));
                self.pair_count[t] += 1;
                if self.pair_count[t] == 1 {
                    self.mark_realized(t);
                }
            }
        }
        self.cells[v] = c;
        let pos = self.color_pos[v] as usize;
        let bucket = &mut self.by_color[old as usize];
        bucket.swap_remove(pos);
        if let Some(&moved) = bucket.get(pos) {
            self.color_pos[moved as usize] = pos as u32;
        }
        self.color_pos[v] = self.by_color[c as usize].len() as u32;
        self.by_color[c as usize].push(v as u32);
        old
    }

    /// A single-cell move that would realize a random missing pair: put one
    /// half of the pair next to an existing cell of the other half. None
    /// when the drawn move is degenerate; the caller falls back to uniform.
    fn targeted_proposal(
        &self,
        rng: &mut ChaCha8Rng,
        scratch: &mut Vec<usize>,
    ) -> Option<(usize, u32)> {
        let t = self.missing_list[rng.gen_range(0..self.missing_list.len())];
        let (a, b) = pair_of(t as usize);
        let (src, dst) = if rng.gen() { (a, b) } else { (b, a) };
        let bucket = &self.by_color[src as usize];
        if bucket.is_empty() {
            // the color died out entirely; plant it anywhere
            let cell = rng.gen_range(0..self.cells.len());
            return (self.cells[cell] != src).then_some((cell, src));
        }
        let v0 = bucket[rng.gen_range(0..bucket.len())] as usize;
        scratch.clear();
        scratch.extend(self.g.neighbors(v0));
        if scratch.is_empty() {
            return None;
        }
        let cell = scratch[rng.gen_range(0..scratch.len())];
        (self.cells[cell] != dst).then_some((cell, dst))
    }
}

/// Annealing search over total colorings. Never certifies absence.
pub fn local_search(g: &GridGraph, cfg: &SearchConfig) -> SearchOutcome {
    let start = Instant::now();
    if cfg.k < 2 {
        // no pairs to realize: the empty coloring already verifies
        let witness = PartialColoring::empty(g.clone(), cfg.k);
        return SearchOutcome {
            status: SearchStatus::Found,
            witness: Some(witness),
            nodes_explored: 0,
            elapsed_seconds: start.elapsed().as_secs_f64(),
            best_missing: 0,
        };
    }
    let v = g.vertex_count();
    let p = &cfg.anneal;
    let restarts = cfg.restarts.max(1) as u64;
    let max_nodes = cfg.budget.max_nodes.unwrap_or(u64::MAX);
    let share = max_nodes / restarts;

    let mut nodes = 0u64;
    let mut best_missing = usize::MAX;
    let mut out_of_time = false;

    for restart in 0..restarts {
        let mut rng =
            ChaCha8Rng::seed_from_u64(cfg.seed ^ restart.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut state = Annealer::init(g, cfg.k, cfg.proper_only, &mut rng);
        let mut temp = p.initial_temp;
        let mut best_local = state.objective();
        let mut stagnation = 0u32;
        best_missing = best_missing.min(best_local);
        // budget for this restart; the last one also gets the remainder
        let stop_at = if restart == restarts - 1 {
            max_nodes
        } else {
            (restart + 1) * share
        };

        if state.objective() == 0 {
            return found(g, cfg, state.cells, nodes, start, 0);
        }
        let mut scratch = Vec::with_capacity(2 * g.ndim());
        'run: loop {
            for _ in 0..v {
                if nodes >= stop_at {
                    break 'run;
                }
                if let Some(limit) = cfg.budget.max_seconds {
                    if nodes % 4096 == 0 && start.elapsed().as_secs_f64() >= limit {
                        out_of_time = true;
                        break 'run;
                    }
                }
                nodes += 1;
                let targeted = (!state.missing_list.is_empty() && rng.gen::<f64>() < p.targeted)
                    .then(|| state.targeted_proposal(&mut rng, &mut scratch))
                    .flatten();
                let (cell, c) = targeted.unwrap_or_else(|| {
                    let cell = rng.gen_range(0..v);
                    let mut c = rng.gen_range(1..cfg.k);
                    if c >= state.cells[cell] {
                        c += 1;
                    }
                    (cell, c)
                });
                let cur = state.cells[cell];
                let before = state.objective() as f64;
                state.recolor(cell, c);
                let delta = state.objective() as f64 - before;
                if delta > 0.0 && rng.gen::<f64>() >= (-delta / temp).exp() {
                    state.recolor(cell, cur);
                    continue;
                }
                let obj = state.objective();
                best_missing = best_missing.min(obj);
                if obj == 0 {
                    return found(g, cfg, state.cells, nodes, start, 0);
                }
                if obj < best_local {
                    best_local = obj;
                    stagnation = 0;
                }
            }
            temp = (temp * p.cooling).max(p.min_temp);
            stagnation += 1;
            if stagnation > p.stagnation_sweeps {
                temp = (temp * p.reheat_factor).min(p.initial_temp);
                stagnation = 0;
            }
        }
        if out_of_time {
            break;
        }
    }

    SearchOutcome {
        status: SearchStatus::BudgetExceeded,
        witness: None,
        nodes_explored: nodes,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        best_missing,
    }
}

fn found(
    g: &GridGraph,
    cfg: &SearchConfig,
    cells: Vec<u32>,
    nodes: u64,
    start: Instant,
    best_missing: usize,
) -> SearchOutcome {
    let witness =
        PartialColoring::from_cells(g.clone(), cfg.k, cells.into_iter().map(Some).collect())
            .expect("annealer colors stay in 1..=k");
    SearchOutcome {
        status: SearchStatus::Found,
        witness: Some(witness),
        nodes_explored: nodes,
        elapsed_seconds: start.elapsed().as_secs_f64(),
        best_missing,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaCertificate {
    /// k+1 was refuted by an exhausted search.
    ExhaustedAtKPlusOne,
    /// k equals the counting upper bound; nothing above needed refuting.
    UpperBoundEquality,
}

#[derive(Debug, Clone)]
pub enum GammaOutcome {
    Exact {
        gamma: u32,
        witness: PartialColoring,
        certificate: GammaCertificate,
    },
    /// Budget ran out with k still unresolved: gamma is in [best_found, upper].
    Bracket {
        best_found: u32,
        witness: Option<PartialColoring>,
        upper: u32,
    },
}

/// Exact achievable color count by descending exhaustive searches from the
/// counting upper bound. Only sensible on tiny instances.
pub fn compute_gamma_exact(
    g: &GridGraph,
    budget: Budget,
    proper_only: bool,
) -> Result<GammaOutcome> {
    let upper = grid_gamma_upper(g.dims())?.combined;
    let start = Instant::now();
    let mut used = 0u64;
    let mut k = upper;
    loop {
        let remaining = Budget {
            max_nodes: budget.max_nodes.map(|m| m.saturating_sub(used)),
            max_seconds: budget
                .max_seconds
                .map(|s| (s - start.elapsed().as_secs_f64()).max(0.0)),
        };
        let mut cfg = SearchConfig::new(k, SearchStrategy::Exhaustive);
        cfg.proper_only = proper_only;
        cfg.budget = remaining;
        let out = exhaustive_search(g, &cfg);
        used += out.nodes_explored;
        match out.status {
            SearchStatus::Found => {
                let certificate = if k == upper {
                    GammaCertificate::UpperBoundEquality
                } else {
                    GammaCertificate::ExhaustedAtKPlusOne
                };
                return Ok(GammaOutcome::Exact {
                    gamma: k,
                    witness: out.witness.expect("found implies witness"),
                    certificate,
                });
            }
            // k = 1 asks for zero pairs and is always found, so k > 1 here
            SearchStatus::ExhaustedNone => k -= 1,
            SearchStatus::BudgetExceeded => {
                return Ok(GammaOutcome::Bracket {
                    best_found: 1,
                    witness: None,
                    upper: k,
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::path_achromatic_number;
    use crate::verify::verify;

    #[test]
    fn pair_of_inverts_tri_index() {
        for b in 2..=120u32 {
            for a in 1..b {
                assert_eq!(pair_of(tri_index(a, b)), (a, b));
            }
        }
    }

    fn exhaustive(dims: &[usize], k: u32, proper: bool) -> SearchOutcome {
        let g = GridGraph::new(dims).unwrap();
        let mut cfg = SearchConfig::new(k, SearchStrategy::Exhaustive);
        cfg.proper_only = proper;
        exhaustive_search(&g, &cfg)
    }

    #[test]
    fn g2_found_at_3_refuted_at_4() {
        let out = exhaustive(&[2, 2], 3, false);
        assert_eq!(out.status, SearchStatus::Found);
        let w = out.witness.unwrap();
        let report = verify(&w, 3, None).unwrap();
        assert!(report.is_complete);

        let out = exhaustive(&[2, 2], 4, false);
        assert_eq!(out.status, SearchStatus::ExhaustedNone);
        assert!(out.best_missing > 0);
    }

    #[test]
    fn p6_proper_has_no_4_complete_coloring() {
        let out = exhaustive(&[1, 7], 4, true);
        assert_eq!(out.status, SearchStatus::ExhaustedNone);
        let out = exhaustive(&[1, 7], 3, true);
        assert_eq!(out.status, SearchStatus::Found);
        let report = verify(&out.witness.unwrap(), 3, None).unwrap();
        assert!(report.is_complete && report.is_proper);
    }

    #[test]
    fn symmetry_pruning_changes_no_verdict() {
        for k in 3..=6 {
            let g = GridGraph::new(&[3, 3]).unwrap();
            let mut on = SearchConfig::new(k, SearchStrategy::Exhaustive);
            let mut off = on.clone();
            on.symmetry = true;
            off.symmetry = false;
            let a = exhaustive_search(&g, &on);
            let b = exhaustive_search(&g, &off);
            assert_eq!(a.status, b.status, "k = {k}");
            if let Some(w) = a.witness {
                assert!(verify(&w, k, None).unwrap().is_complete, "k = {k}");
            }
        }
    }

    #[test]
    fn gamma_of_an_edge_is_2() {
        let g = GridGraph::new(&[1, 2]).unwrap();
        match compute_gamma_exact(&g, Budget::unlimited(), false).unwrap() {
            GammaOutcome::Exact {
                gamma, certificate, ..
            } => {
                assert_eq!(gamma, 2);
                assert_eq!(certificate, GammaCertificate::UpperBoundEquality);
            }
            other => panic!("expected exact, got {other:?}"),
        }
    }

    #[test]
    fn gamma_g2_is_3() {
        let g = GridGraph::new(&[2, 2]).unwrap();
        match compute_gamma_exact(&g, Budget::unlimited(), false).unwrap() {
            GammaOutcome::Exact { gamma, witness, .. } => {
                assert_eq!(gamma, 3);
                assert!(verify(&witness, 3, None).unwrap().is_complete);
            }
            other => panic!("expected exact, got {other:?}"),
        }
    }

    #[test]
    fn proper_gamma_matches_path_formula_small() {
        for n in 2..=8usize {
            let g = GridGraph::new(&[1, n + 1]).unwrap();
            let got = match compute_gamma_exact(&g, Budget::unlimited(), true).unwrap() {
                GammaOutcome::Exact { gamma, witness, .. } => {
                    let report = verify(&witness, gamma, None).unwrap();
                    assert!(report.is_complete && report.is_proper, "n = {n}");
                    gamma
                }
                other => panic!("expected exact, got {other:?}"),
            };
            assert_eq!(got, path_achromatic_number(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn local_finds_small_optima() {
        let g = GridGraph::new(&[3, 3]).unwrap();
        let mut cfg = SearchConfig::new(5, SearchStrategy::Local);
        cfg.seed = 1;
        cfg.budget = Budget::nodes(2_000_000);
        let out = local_search(&g, &cfg);
        assert_eq!(out.status, SearchStatus::Found);
        let report = verify(&out.witness.unwrap(), 5, None).unwrap();
        assert!(report.is_complete);
    }

    #[test]
    fn local_respects_node_budget() {
        let g = GridGraph::new(&[4, 4]).unwrap();
        let mut cfg = SearchConfig::new(7, SearchStrategy::Local);
        cfg.budget = Budget::nodes(50);
        let out = local_search(&g, &cfg);
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert!(out.nodes_explored <= 50);
        assert!(out.best_missing > 0);
    }

    #[test]
    fn local_is_deterministic() {
        let g = GridGraph::new(&[3, 4]).unwrap();
        let mut cfg = SearchConfig::new(6, SearchStrategy::Local);
        cfg.seed = 42;
        cfg.budget = Budget::nodes(30_000);
        let a = local_search(&g, &cfg);
        let b = local_search(&g, &cfg);
        assert_eq!(a.status, b.status);
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.best_missing, b.best_missing);
        assert_eq!(
            a.witness.map(|w| w.cells().to_vec()),
            b.witness.map(|w| w.cells().to_vec())
        );
    }

    #[test]
    fn exhausted_none_is_immediate_when_pairs_exceed_edges() {
        // 15 pairs against 12 edges dies at the root
        let out = exhaustive(&[3, 3], 6, false);
        assert_eq!(out.status, SearchStatus::ExhaustedNone);
        assert_eq!(out.nodes_explored, 0);
    }
}
