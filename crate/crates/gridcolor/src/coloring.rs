//! Partial colorings: an assignment of colors to some cells of a grid.
//!
//! Colors are positive integers; `k` declares the palette `1..=k` the
//! coloring is judged against. Cells may carry colors outside the palette
//! (files from elsewhere do), which the verifier reports rather than
//! rejects. Color 0 does not exist; emptiness is `None`.

use crate::grid::GridGraph;
use crate::pairs::PairSet;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    graph: GridGraph,
    k: u32,
    cells: Vec<Option<u32>>,
}

impl PartialColoring {
    pub fn empty(graph: GridGraph, k: u32) -> Self {
        let n = graph.vertex_count();
        PartialColoring {
            graph,
            k,
            cells: vec![None; n],
        }
    }

    pub fn from_cells(graph: GridGraph, k: u32, cells: Vec<Option<u32>>) -> Result<Self> {
        if cells.len() != graph.vertex_count() {
            return Err(Error::CellCount {
                expected: graph.vertex_count(),
                got: cells.len(),
            });
        }
        if cells.contains(&Some(0)) {
            return Err(Error::ZeroColor);
        }
        Ok(PartialColoring { graph, k, cells })
    }

    pub fn graph(&self) -> &GridGraph {
        &self.graph
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Same cells, judged against a different palette size.
    pub fn with_k(mut self, k: u32) -> Self {
        self.k = k;
        self
    }

    pub fn cells(&self) -> &[Option<u32>] {
        &self.cells
    }

    pub fn get(&self, index: usize) -> Option<u32> {
        self.cells[index]
    }

    pub fn set(&mut self, index: usize, color: u32) -> Result<()> {
        if color == 0 {
            return Err(Error::ZeroColor);
        }
        self.cells[index] = Some(color);
        Ok(())
    }

    pub fn clear(&mut self, index: usize) {
        self.cells[index] = None;
    }

    pub fn get_at(&self, coord: &[usize]) -> Result<Option<u32>> {
        Ok(self.cells[self.graph.index_of(coord)?])
    }

    pub fn set_at(&mut self, coord: &[usize], color: u32) -> Result<()> {
        let idx = self.graph.index_of(coord)?;
        self.set(idx, color)
    }

    pub fn assigned_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn is_total(&self) -> bool {
        self.cells.iter().all(|c| c.is_some())
    }

    /// Pairs {a, b} of distinct palette colors appearing on the endpoints of
    /// at least one edge. Colors outside 1..=k contribute nothing here; the
    /// verifier reports them separately.
    pub fn realized_pairs(&self) -> PairSet {
        let mut set = PairSet::new(self.k);
        for (u, v) in self.graph.edges() {
            if let (Some(a), Some(b)) = (self.cells[u], self.cells[v]) {
                if a != b && a <= self.k && b <= self.k {
                    set.insert(a.min(b), a.max(b));
                }
            }
        }
        set
    }

    /// Fixes the first coordinate to `layer` (1-based) and drops that axis.
    pub fn slice_first_axis(&self, layer: usize) -> Result<PartialColoring> {
        let dims = self.graph.dims();
        if dims.len() < 2 {
            return Err(Error::NotTwoDimensional { got: dims.len() });
        }
        if layer == 0 || layer > dims[0] {
            return Err(Error::SliceOutOfRange {
                layer,
                max: dims[0],
            });
        }
        let rest: Vec<usize> = dims[1..].to_vec();
        let layer_size: usize = rest.iter().product();
        let start = (layer - 1) * layer_size;
        let cells = self.cells[start..start + layer_size].to_vec();
        PartialColoring::from_cells(GridGraph::new(&rest)?, self.k, cells)
    }
}
