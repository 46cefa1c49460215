//! Ground truth for tests: exhaustive path enumeration on tiny graphs and
//! from-scratch recomputation for comparison with maintained state.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::apsp::{brandes_bc, ApspState, Mode};
use crate::graph::{Dist, Graph, INF};

/// Largest graph [`enumerate_paths_bc`] accepts.
pub const ENUMERATION_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, max: usize },
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, max } => write!(f, "graph has {n} vertices, enumeration allows at most {max}"),
            OracleError::DimensionMismatch { left, right } => {
                write!(f, "states have {left} and {right} vertices")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Distances, counts and scores found by listing every simple path.
#[derive(Clone, Debug, PartialEq)]
pub struct Enumerated {
    pub n: usize,
    pub dist: Vec<Dist>,
    pub sigma: Vec<f64>,
    pub bc: Vec<f64>,
}

/// Betweenness by brute force. Every simple path from every source is
/// walked; a prefix is abandoned only once it is longer than some path
/// already found to the same vertex, since it cannot start a shortest path.
/// Scores are the double sum over pairs of `σ_st(v) / σ_st`, where
/// `σ_st(v) = σ_sv · σ_vt` if `v` lies on a shortest `s ⇝ t` path and 0
/// otherwise.
pub fn enumerate_paths_bc(g: &Graph) -> Result<Enumerated, OracleError> {
    let n = g.vertex_count();
    if n > ENUMERATION_LIMIT {
        return Err(OracleError::TooLarge { n, max: ENUMERATION_LIMIT });
    }
    let mut dist = vec![INF; n * n];
    let mut count = vec![0u64; n * n];
    for s in 0..n {
        let row = s * n..(s + 1) * n;
        let mut on_path = vec![false; n];
        walk(g, s, 0, &mut on_path, &mut dist[row.clone()], &mut count[row]);
    }
    let sigma: Vec<f64> = count.iter().map(|&c| c as f64).collect();

    let mut bc = vec![0.0; n];
    for s in 0..n {
        for t in (0..n).filter(|&t| t != s) {
            let dst = dist[s * n + t];
            if dst == INF {
                continue;
            }
            for (v, score) in bc.iter_mut().enumerate() {
                if v == s || v == t {
                    continue;
                }
                let (dsv, dvt) = (dist[s * n + v], dist[v * n + t]);
                if dsv == INF || dvt == INF || dst < dsv + dvt {
                    continue;
                }
                *score += sigma[s * n + v] * sigma[v * n + t] / sigma[s * n + t];
            }
        }
    }
    Ok(Enumerated { n, dist, sigma, bc })
}

fn walk(g: &Graph, x: usize, len: Dist, on_path: &mut [bool], best: &mut [Dist], count: &mut [u64]) {
    if len > best[x] {
        return;
    }
    if len < best[x] {
        best[x] = len;
        count[x] = 0;
    }
    count[x] += 1;
    on_path[x] = true;
    for &(y, w) in g.out_edges(x) {
        let y = y as usize;
        if !on_path[y] {
            walk(g, y, len + w.scaled(), on_path, best, count);
        }
    }
    on_path[x] = false;
}

/// Result of [`compare_states`].
#[derive(Clone, Debug, Default, PartialEq)]
pub struct OracleReport {
    pub max_bc_abs_err: f64,
    pub dist_mismatches: usize,
    pub sigma_mismatches: usize,
    /// Sources whose DAG edge sets differ.
    pub dag_mismatches: usize,
    /// Sources whose reverse DAGs differ; only counted when both states
    /// carry reverse DAGs.
    pub rdag_mismatches: usize,
    pub pass: bool,
}

/// Exact comparison of distances, counts and DAGs; scores within `tol`.
pub fn compare_states(a: &ApspState, b: &ApspState, tol: f64) -> Result<OracleReport, OracleError> {
    if a.n() != b.n() {
        return Err(OracleError::DimensionMismatch { left: a.n(), right: b.n() });
    }
    let dist_mismatches = mismatches(a.dist_matrix(), b.dist_matrix());
    let sigma_mismatches = mismatches(a.sigma_matrix(), b.sigma_matrix());
    let dag_mismatches = mismatches(a.dags(), b.dags());
    let rdag_mismatches = match (a.rdags(), b.rdags()) {
        (Some(x), Some(y)) => mismatches(x, y),
        _ => 0,
    };
    let max_bc_abs_err = a.bc().iter().zip(b.bc()).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max);
    let pass = dist_mismatches == 0
        && sigma_mismatches == 0
        && dag_mismatches == 0
        && rdag_mismatches == 0
        && max_bc_abs_err <= tol;
    Ok(OracleReport { max_bc_abs_err, dist_mismatches, sigma_mismatches, dag_mismatches, rdag_mismatches, pass })
}

fn mismatches<T: PartialEq>(x: &[T], y: &[T]) -> usize {
    x.iter().zip(y).filter(|(p, q)| p != q).count()
}

/// Fresh state for `g`. In [`Mode::Full`] the reverse DAGs come from
/// running the forward algorithm on the reversed graph.
pub fn from_scratch(g: &Graph, mode: Mode) -> ApspState {
    let mut state = brandes_bc(g);
    if mode == Mode::Full {
        let rev = brandes_bc(&g.reverse());
        state.rdags = Some(rev.dags);
    }
    state
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apsp::static_bc;
    use crate::graph::Weight;

    fn graph(n: usize, edges: &[(usize, usize, u64)], undirected: bool) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(u, v, w)| (u, v, Weight::from_units(w))), undirected).unwrap()
    }

    fn d2() -> Graph {
        graph(4, &[(0, 1, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)], false)
    }

    fn g1() -> Graph {
        graph(4, &[(0, 1, 1), (1, 3, 5), (0, 2, 2), (2, 3, 2), (0, 3, 4)], false)
    }

    #[test]
    fn enumeration_examples() {
        let e = enumerate_paths_bc(&graph(3, &[(0, 1, 1), (1, 2, 1)], false)).unwrap();
        assert_eq!(e.bc, vec![0.0, 1.0, 0.0]);

        let e = enumerate_paths_bc(&d2()).unwrap();
        assert_eq!(e.sigma[3], 2.0);
        assert_eq!(e.bc, vec![0.0, 0.5, 0.5, 0.0]);

        let e = enumerate_paths_bc(&g1()).unwrap();
        assert_eq!(e.sigma[3], 2.0);
        assert_eq!(e.bc[2], 0.5);
        assert_eq!(e.dist[3], 4_000_000);

        let big = Graph::new(13, false).unwrap();
        assert_eq!(enumerate_paths_bc(&big), Err(OracleError::TooLarge { n: 13, max: 12 }));
    }

    #[test]
    fn enumeration_agrees_with_brandes() {
        let graphs = [
            d2(),
            g1(),
            graph(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1)], true),
            graph(5, &[(0, 1, 2), (0, 2, 1), (2, 1, 1), (1, 3, 1), (2, 3, 2), (3, 4, 1), (4, 0, 3)], false),
        ];
        for g in &graphs {
            let e = enumerate_paths_bc(g).unwrap();
            let b = brandes_bc(g);
            assert_eq!(e.dist, b.dist_matrix());
            assert_eq!(e.sigma, b.sigma_matrix());
            for (x, y) in e.bc.iter().zip(b.bc()) {
                assert!((x - y).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn compare_states_examples() {
        let g = g1();
        let a = from_scratch(&g, Mode::Full);
        let r = compare_states(&a, &a, 0.0).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_bc_abs_err, 0.0);

        assert!(compare_states(&brandes_bc(&g), &static_bc(&g), 1e-9).unwrap().pass);
        assert!(!compare_states(&a, &brandes_bc(&d2()), 1e-9).unwrap().pass);

        let mut broken = a.clone();
        broken.set_sigma_unchecked(0, 3, 7.0);
        let r = compare_states(&broken, &a, 1e-9).unwrap();
        assert_eq!(r.sigma_mismatches, 1);
        assert!(!r.pass);

        let small = brandes_bc(&graph(2, &[(0, 1, 1)], false));
        assert_eq!(compare_states(&a, &small, 0.0), Err(OracleError::DimensionMismatch { left: 4, right: 2 }));
    }

    #[test]
    fn scratch_reverse_dags_match_distance_derived_ones() {
        for g in [d2(), g1(), graph(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1)], true)] {
            let a = from_scratch(&g, Mode::Full);
            let b = brandes_bc(&g).with_mode(Mode::Full);
            assert_eq!(a.rdags(), b.rdags());
        }
    }
}
