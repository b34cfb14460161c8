//! Complete proper colorings of paths.
//!
//! P_n is the path with n edges and n+1 vertices, modeled as the grid
//! [1, n+1]. The largest q admitting a q-complete proper coloring is the
//! largest q with
//!
//! ```text
//! C(q,2) <= n           (every pair needs an edge)
//! q*ceil((q-1)/2) <= n+1  (every color class needs room, degree 2)
//! ```
//!
//! Odd q: walk an Eulerian circuit of K_q and read colors off the vertex
//! sequence; every adjacency of the circuit is an edge of K_q exactly once,
//! which is completeness, and circuits exist because K_q is even-regular.
//! Leftover path vertices cycle (previous + 1) mod q, which keeps the
//! coloring proper.
//!
//! Even q: no Eulerian circuit on K_q, so color the first C(q-1,2) edges by
//! a circuit of K_{q-1} anchored to start and end at color q-1, then splice
//! in the reversed extension path, which begins with q-1 and supplies every
//! pair {j, q}. The two counting inequalities guarantee the splice fits.

use crate::coloring::PartialColoring;
use crate::grid::GridGraph;
use crate::{Error, Result};

/// Colors along a path; vertex i of P_n gets `colors[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathColoring {
    colors: Vec<u32>,
    k: u32,
}

impl PathColoring {
    pub fn new(colors: Vec<u32>, k: u32) -> Self {
        PathColoring { colors, k }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of edges.
    pub fn n(&self) -> usize {
        self.colors.len() - 1
    }

    /// Same pairs realized in the opposite orientation.
    pub fn reversed(&self) -> Self {
        let mut colors = self.colors.clone();
        colors.reverse();
        PathColoring { colors, k: self.k }
    }

    /// Lossless view as a [1, n+1] grid coloring.
    pub fn to_partial(&self) -> PartialColoring {
        let graph = GridGraph::new(&[1, self.colors.len()]).expect("path dims are valid");
        PartialColoring::from_cells(
            graph,
            self.k,
            self.colors.iter().map(|&c| Some(c)).collect(),
        )
        .expect("path colors are valid")
    }
}

/// Closed walk through K_q using every edge exactly once.
#[derive(Debug, Clone)]
pub struct EulerianCircuit {
    q: u32,
    sequence: Vec<u32>,
}

impl EulerianCircuit {
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Vertex sequence of length C(q,2) + 1; first and last entries agree.
    pub fn sequence(&self) -> &[u32] {
        &self.sequence
    }

    pub fn is_valid(&self) -> bool {
        let q = self.q as usize;
        let m = q * (q - 1) / 2;
        if self.sequence.len() != m + 1 || self.sequence[0] != self.sequence[m] {
            return false;
        }
        let mut seen = vec![false; q * q];
        for w in self.sequence.windows(2) {
            let (a, b) = (w[0] as usize, w[1] as usize);
            if a == b || a == 0 || b == 0 || a > q || b > q {
                return false;
            }
            let key = (a.min(b) - 1) * q + (a.max(b) - 1);
            if seen[key] {
                return false;
            }
            seen[key] = true;
        }
        true
    }
}

/// Hierholzer's algorithm on K_q, always taking the lowest-numbered unused
/// neighbor, so the output is deterministic. K_q has an Eulerian circuit
/// exactly when every degree q-1 is even, hence q must be odd.
pub fn eulerian_circuit(q: u32, start: u32) -> Result<EulerianCircuit> {
    if q < 3 {
        return Err(Error::TooSmall {
            name: "circuit order q",
            min: 3,
            got: q as usize,
        });
    }
    if q % 2 == 0 {
        return Err(Error::ParityMismatch {
            name: "circuit order q",
            expected: "odd",
            got: q as usize,
        });
    }
    if start == 0 || start > q {
        return Err(Error::StartOutOfRange { start, q });
    }

    let qi = q as usize;
    let mut used = vec![false; qi * qi];
    let used_at = |a: u32, b: u32| (a as usize - 1) * qi + (b as usize - 1);
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(qi * (qi - 1) / 2 + 1);
    while let Some(&v) = stack.last() {
        let next = (1..=q).find(|&u| u != v && !used[used_at(v, u)]);
        match next {
            Some(u) => {
                used[used_at(v, u)] = true;
                used[used_at(u, v)] = true;
                stack.push(u);
            }
            None => {
                circuit.push(v);
                stack.pop();
            }
        }
    }
    circuit.reverse();
    let result = EulerianCircuit {
        q,
        sequence: circuit,
    };
    debug_assert!(result.is_valid());
    Ok(result)
}

/// Length of the extension path for parameter k: M = 3k/2 for even k,
/// (3k-1)/2 for odd k.
pub fn extension_path_len(k: u32) -> usize {
    if k % 2 == 0 {
        3 * k as usize / 2
    } else {
        (3 * k as usize - 1) / 2
    }
}

/// The extension path: a proper coloring of P_M over colors 1..=k+1 whose
/// realized pairs are exactly {j, k+1} for all j in 1..=k. Vertex i gets
/// k+1 when 3 divides i, otherwise 2*floor(i/3) + (i mod 3); the fresh
/// color k+1 lands on every third vertex and meets the others in order.
pub fn extension_path_coloring(k: u32) -> Result<PathColoring> {
    if k < 2 {
        return Err(Error::TooSmall {
            name: "extension parameter k",
            min: 2,
            got: k as usize,
        });
    }
    let m = extension_path_len(k);
    let colors = (0..=m)
        .map(|i| {
            if i % 3 == 0 {
                k + 1
            } else {
                2 * (i / 3) as u32 + (i % 3) as u32
            }
        })
        .collect();
    Ok(PathColoring { colors, k: k + 1 })
}

/// Largest q for which P_n has a q-complete proper coloring.
pub fn path_achromatic_number(n: usize) -> Result<u32> {
    if n < 2 {
        return Err(Error::TooSmall {
            name: "path edge count n",
            min: 2,
            got: n,
        });
    }
    // both conditions are monotone in q, and q is O(sqrt n): scan upward
    let ok = |q: u64| q * (q - 1) / 2 <= n as u64 && q * ((q - 1).div_ceil(2)) <= n as u64 + 1;
    let mut q = 1u64;
    while ok(q + 1) {
        q += 1;
    }
    Ok(q as u32)
}

/// A q-complete proper coloring of P_n for any feasible q.
pub fn complete_path_coloring(n: usize, q: u32) -> Result<PathColoring> {
    let q_max = path_achromatic_number(n)?;
    if q < 2 || q > q_max {
        return Err(Error::PathColorsInfeasible { k: q, n });
    }

    if q == 2 {
        let colors = (0..=n).map(|i| 1 + (i % 2) as u32).collect();
        return Ok(PathColoring { colors, k: 2 });
    }

    let mut colors: Vec<u32>;
    if q % 2 == 1 {
        let circuit = eulerian_circuit(q, 1)?;
        colors = circuit.sequence().to_vec();
        while colors.len() <= n {
            let prev = *colors.last().unwrap();
            colors.push(prev % q + 1);
        }
    } else {
        let circuit = eulerian_circuit(q - 1, q - 1)?;
        colors = circuit.sequence().to_vec();
        let gadget = extension_path_coloring(q - 1)?.reversed();
        debug_assert_eq!(gadget.colors()[0], q - 1);
        // circuit ends at q-1, the gadget starts there: overlap one vertex.
        colors.extend_from_slice(&gadget.colors()[1..]);
        debug_assert!(colors.len() <= n + 1, "splice exceeds path length");
        while colors.len() <= n {
            let prev = *colors.last().unwrap();
            colors.push(if prev == 1 { 2 } else { 1 });
        }
    }
    debug_assert_eq!(colors.len(), n + 1);
    Ok(PathColoring { colors, k: q })
}

/// The optimal complete proper coloring of P_n.
pub fn achromatic_path_coloring(n: usize) -> Result<PathColoring> {
    let q = path_achromatic_number(n)?;
    complete_path_coloring(n, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify;

    #[test]
    fn circuit_k3() {
        let c = eulerian_circuit(3, 1).unwrap();
        assert_eq!(c.sequence(), &[1, 2, 3, 1]);
        assert!(c.is_valid());
    }

    #[test]
    fn circuit_k5() {
        let c = eulerian_circuit(5, 1).unwrap();
        assert_eq!(c.sequence().len(), 11);
        assert!(c.is_valid());
        // deterministic lowest-first tie-breaking
        let again = eulerian_circuit(5, 1).unwrap();
        assert_eq!(c.sequence(), again.sequence());
    }

    #[test]
    fn circuit_anchored_start() {
        for q in [3u32, 5, 7, 9, 11] {
            for start in [1, q] {
                let c = eulerian_circuit(q, start).unwrap();
                assert!(c.is_valid());
                assert_eq!(c.sequence()[0], start);
            }
        }
    }

    #[test]
    fn circuit_rejects_bad_orders() {
        assert!(matches!(
            eulerian_circuit(4, 1),
            Err(Error::ParityMismatch { .. })
        ));
        assert!(matches!(
            eulerian_circuit(1, 1),
            Err(Error::TooSmall { .. })
        ));
        assert!(matches!(
            eulerian_circuit(5, 6),
            Err(Error::StartOutOfRange { .. })
        ));
    }

    #[test]
    fn extension_path_small() {
        let p = extension_path_coloring(2).unwrap();
        assert_eq!(p.colors(), &[3, 1, 2, 3]);

        let p = extension_path_coloring(3).unwrap();
        assert_eq!(p.colors(), &[4, 1, 2, 4, 3]);
        assert_eq!(p.n(), 4);

        assert!(extension_path_coloring(1).is_err());
    }

    #[test]
    fn extension_path_realizes_all_fresh_pairs() {
        // besides [k] x {k+1} the walk picks up {2j-1, 2j} pairs; callers
        // splice it onto colorings already complete on [k], so only the
        // fresh pairs matter
        for k in 2..=60u32 {
            let p = extension_path_coloring(k).unwrap();
            assert_eq!(p.n(), extension_path_len(k));
            let partial = p.to_partial();
            let report = verify(&partial, k + 1, None).unwrap();
            assert!(report.is_proper, "k = {k}");
            let realized = partial.realized_pairs();
            for j in 1..=k {
                assert!(realized.contains(j, k + 1), "k = {k}, j = {j}");
            }
            let incidental = k / 2;
            assert_eq!(realized.len(), (k + incidental) as usize, "k = {k}");
        }
    }

    #[test]
    fn reversal_preserves_pairs() {
        let p = extension_path_coloring(7).unwrap();
        let r = p.reversed();
        assert_eq!(
            p.to_partial().realized_pairs(),
            r.to_partial().realized_pairs()
        );
    }

    #[test]
    fn achromatic_number_examples() {
        assert_eq!(path_achromatic_number(3).unwrap(), 3);
        assert_eq!(path_achromatic_number(6).unwrap(), 3);
        assert_eq!(path_achromatic_number(10).unwrap(), 5);
        assert!(path_achromatic_number(1).is_err());
        assert_eq!(path_achromatic_number(2).unwrap(), 2);
    }

    #[test]
    fn coloring_p3_is_the_triangle_walk() {
        let p = achromatic_path_coloring(3).unwrap();
        assert_eq!(p.colors(), &[1, 2, 3, 1]);
    }

    #[test]
    fn even_case_smallest_instances() {
        // q = 4 first fires at n = 7,8,9
        for n in 7..=9 {
            assert_eq!(path_achromatic_number(n).unwrap(), 4);
            let p = achromatic_path_coloring(n).unwrap();
            let report = verify(&p.to_partial(), 4, None).unwrap();
            assert!(report.is_complete && report.is_proper, "n = {n}");
        }
    }

    #[test]
    fn colorings_verify_up_to_80() {
        for n in 2..=80 {
            let q = path_achromatic_number(n).unwrap();
            let p = achromatic_path_coloring(n).unwrap();
            assert_eq!(p.k(), q);
            assert_eq!(p.n(), n);
            let report = verify(&p.to_partial(), q, None).unwrap();
            assert!(report.is_complete, "n = {n}, q = {q}");
            assert!(report.is_proper, "n = {n}, q = {q}");
        }
    }

    #[test]
    fn sub_optimal_color_counts_also_work() {
        for n in [10usize, 17, 33] {
            let q_max = path_achromatic_number(n).unwrap();
            for q in 2..=q_max {
                let p = complete_path_coloring(n, q).unwrap();
                let report = verify(&p.to_partial(), q, None).unwrap();
                assert!(report.is_complete && report.is_proper, "n = {n}, q = {q}");
            }
            assert!(complete_path_coloring(n, q_max + 1).is_err());
        }
    }
}
