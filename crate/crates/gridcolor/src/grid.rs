//! Grid graphs: lattice boxes with edges between cells at L1 distance 1.
//!
//! Cells are addressed two ways. Public coordinates are 1-based tuples
//! `(i, j, ...)` with `1 <= i <= dims[0]` and so on. Internally every cell
//! has a row-major index where the *last* coordinate varies fastest; the
//! serialization order of colorings is exactly this index order.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGraph {
    dims: Vec<usize>,
    strides: Vec<usize>,
    vertex_count: usize,
}

impl GridGraph {
    pub fn new(dims: &[usize]) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::EmptyDims);
        }
        for (axis, &d) in dims.iter().enumerate() {
            if d == 0 {
                return Err(Error::ZeroDim { axis });
            }
        }
        let mut strides = vec![1usize; dims.len()];
        for a in (0..dims.len().saturating_sub(1)).rev() {
            strides[a] = strides[a + 1] * dims[a + 1];
        }
        let vertex_count = dims.iter().product();
        Ok(GridGraph {
            dims: dims.to_vec(),
            strides,
            vertex_count,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ndim(&self) -> usize {
        self.dims.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Along axis a there are (d_a - 1) * (product of the other sides) edges.
    pub fn edge_count(&self) -> usize {
        self.dims
            .iter()
            .map(|&d| (self.vertex_count / d) * (d - 1))
            .sum()
    }

    /// Attained simultaneously in all axes at any interior cell: a side of
    /// length 1 contributes 0, length 2 contributes 1, longer sides 2.
    pub fn max_degree(&self) -> usize {
        self.dims.iter().map(|&d| (d - 1).min(2)).sum()
    }

    pub fn axis_position(&self, index: usize, axis: usize) -> usize {
        (index / self.strides[axis]) % self.dims[axis]
    }

    /// 1-based coordinate of a row-major index.
    pub fn coord_of(&self, index: usize) -> Vec<usize> {
        (0..self.dims.len())
            .map(|a| self.axis_position(index, a) + 1)
            .collect()
    }

    /// Row-major index of a 1-based coordinate.
    pub fn index_of(&self, coord: &[usize]) -> Result<usize> {
        if coord.len() != self.dims.len() {
            return Err(Error::CoordLength {
                expected: self.dims.len(),
                got: coord.len(),
            });
        }
        let mut idx = 0;
        for (a, &c) in coord.iter().enumerate() {
            if c == 0 || c > self.dims[a] {
                return Err(Error::CoordRange {
                    axis: a,
                    got: c,
                    max: self.dims[a],
                });
            }
            idx += (c - 1) * self.strides[a];
        }
        Ok(idx)
    }

    pub fn neighbors(&self, index: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.dims.len()).flat_map(move |a| {
            let pos = self.axis_position(index, a);
            let lo = (pos > 0).then(|| index - self.strides[a]);
            let hi = (pos + 1 < self.dims[a]).then(|| index + self.strides[a]);
            lo.into_iter().chain(hi)
        })
    }

    /// Edges as (smaller index, larger index), in row-major order of the
    /// smaller endpoint. Deterministic; everything downstream relies on it.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count).flat_map(move |v| {
            (0..self.dims.len()).filter_map(move |a| {
                (self.axis_position(v, a) + 1 < self.dims[a]).then(|| (v, v + self.strides[a]))
            })
        })
    }
}
