//! All-pairs shortest-path state, counting Dijkstra and static betweenness.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::AddAssign;

use crate::dag::Dag;
use crate::graph::{add_dist, Dist, Graph, VertexId, INF};

/// Largest path count that `f64` represents exactly.
pub const EXACT_COUNT_LIMIT: f64 = 9_007_199_254_740_992.0;

/// Work tallies for one construction or one update.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounters {
    /// Edges scanned while building or repairing DAGs (Dijkstra relaxations
    /// for the from-scratch algorithms).
    pub edges_examined: u64,
    /// `(s, t)` pairs whose distance and count were reclassified.
    pub pairs_touched: u64,
    /// Edges in the DAGs handed to dependency accumulation.
    pub dag_edges_emitted: u64,
    /// Total size of the `R_t` sets built during a vertex update.
    pub r_set_edges: u64,
}

impl AddAssign for WorkCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.edges_examined += rhs.edges_examined;
        self.pairs_touched += rhs.pairs_touched;
        self.dag_edges_emitted += rhs.dag_edges_emitted;
        self.r_set_edges += rhs.r_set_edges;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateError {
    /// A DAG successor carries a zero path count.
    ZeroPathCount { source: VertexId, vertex: VertexId },
}

impl fmt::Display for StateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StateError::ZeroPathCount { source, vertex } => write!(
                f,
                "corrupted state: vertex {vertex} has DAG in-edges from source {source} but zero path count"
            ),
        }
    }
}

impl core::error::Error for StateError {}

/// Which DAGs an [`ApspState`] maintains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Forward DAGs only. Supports edge updates.
    EdgeFast,
    /// Forward and reverse DAGs. Supports edge and vertex updates.
    Full,
}

/// Output of one counting-Dijkstra run.
#[derive(Clone, Debug)]
pub struct SsspResult {
    pub source: VertexId,
    pub dist: Vec<Dist>,
    pub sigma: Vec<f64>,
    pub dag: Dag,
    /// Reachable vertices in settling order (a topological order of `dag`).
    pub order: Vec<u32>,
    pub relaxations: u64,
    pub inexact: bool,
}

/// Dijkstra from `s` that also counts shortest paths and records every edge
/// lying on some shortest path from `s`.
pub fn counting_dijkstra(g: &Graph, s: VertexId) -> SsspResult {
    let n = g.vertex_count();
    let mut dist = vec![INF; n];
    let mut sigma = vec![0.0f64; n];
    let mut preds: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut settled = vec![false; n];
    let mut order = Vec::new();
    let mut heap = BinaryHeap::new();
    let mut relaxations = 0u64;
    let mut inexact = false;

    dist[s] = 0;
    sigma[s] = 1.0;
    heap.push(Reverse((0u64, s as u32)));
    while let Some(Reverse((d, a))) = heap.pop() {
        let a = a as usize;
        if settled[a] || d > dist[a] {
            continue;
        }
        settled[a] = true;
        order.push(a as u32);
        for &(b, w) in g.out_edges(a) {
            relaxations += 1;
            let b = b as usize;
            let nd = d + w.scaled();
            if nd < dist[b] {
                dist[b] = nd;
                sigma[b] = sigma[a];
                preds[b].clear();
                preds[b].push(a as u32);
                heap.push(Reverse((nd, b as u32)));
            } else if nd == dist[b] {
                sigma[b] += sigma[a];
                preds[b].push(a as u32);
                inexact |= sigma[b] > EXACT_COUNT_LIMIT;
            }
        }
    }

    let edges: Vec<(u32, u32)> = preds
        .iter()
        .enumerate()
        .flat_map(|(b, ps)| ps.iter().map(move |&a| (a, b as u32)))
        .collect();
    let dag = Dag::from_edges(n, &edges);
    SsspResult { source: s, dist, sigma, dag, order, relaxations, inexact }
}

/// Dependency of `s` on every vertex, accumulated over `order` from the back.
///
/// `order` must be a topological order of `dag` covering its vertices. The
/// returned vector holds `δ_s•(v)`; the betweenness contribution of source
/// `s` is `δ_s•(v)` for every `v != s`.
pub fn accumulate_dependency(
    s: VertexId,
    order: &[u32],
    sigma: &[f64],
    dag: &Dag,
) -> Result<Vec<f64>, StateError> {
    let mut delta = vec![0.0f64; sigma.len()];
    for &w in order.iter().rev() {
        let w = w as usize;
        let mut acc = 0.0;
        for &x in dag.successors(w) {
            let x = x as usize;
            let sx = sigma[x];
            if sx == 0.0 {
                return Err(StateError::ZeroPathCount { source: s, vertex: x });
            }
            acc += sigma[w] / sx * (1.0 + delta[x]);
        }
        delta[w] = acc;
    }
    Ok(delta)
}

fn add_contributions(bc: &mut [f64], s: VertexId, order: &[u32], delta: &[f64]) {
    for &w in order {
        let w = w as usize;
        if w != s {
            bc[w] += delta[w];
        }
    }
}

/// Distances, path counts, DAGs and betweenness scores for every source.
#[derive(Clone, Debug)]
pub struct ApspState {
    pub(crate) graph: Graph,
    pub(crate) dist: Vec<Dist>,
    pub(crate) sigma: Vec<f64>,
    pub(crate) dags: Vec<Dag>,
    pub(crate) rdags: Option<Vec<Dag>>,
    pub(crate) bc: Vec<f64>,
    pub(crate) counters: WorkCounters,
    pub(crate) inexact: bool,
}

impl ApspState {
    pub fn n(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn mode(&self) -> Mode {
        if self.rdags.is_some() {
            Mode::Full
        } else {
            Mode::EdgeFast
        }
    }

    pub fn dist(&self, s: VertexId, t: VertexId) -> Dist {
        self.dist[s * self.n() + t]
    }

    pub fn sigma(&self, s: VertexId, t: VertexId) -> f64 {
        self.sigma[s * self.n() + t]
    }

    /// Row-major `n × n` distance matrix.
    pub fn dist_matrix(&self) -> &[Dist] {
        &self.dist
    }

    /// Row-major `n × n` path-count matrix.
    pub fn sigma_matrix(&self) -> &[f64] {
        &self.sigma
    }

    pub fn dag(&self, s: VertexId) -> &Dag {
        &self.dags[s]
    }

    pub fn dags(&self) -> &[Dag] {
        &self.dags
    }

    /// Shortest-path DAG of `s` in the reversed graph. An edge `(a, b)`
    /// stands for the forward edge `(b, a)` on a shortest path into `s`.
    pub fn rdag(&self, s: VertexId) -> Option<&Dag> {
        self.rdags.as_ref().map(|r| &r[s])
    }

    pub fn rdags(&self) -> Option<&[Dag]> {
        self.rdags.as_deref()
    }

    pub fn bc(&self) -> &[f64] {
        &self.bc
    }

    /// Counters of the most recent construction or update.
    pub fn counters(&self) -> WorkCounters {
        self.counters
    }

    /// Set once any path count exceeded 2^53 and may have been rounded.
    pub fn is_inexact(&self) -> bool {
        self.inexact
    }

    /// Switches mode, building reverse DAGs from the distance matrix when
    /// entering [`Mode::Full`].
    pub fn with_mode(mut self, mode: Mode) -> Self {
        match mode {
            Mode::EdgeFast => self.rdags = None,
            Mode::Full => {
                if self.rdags.is_none() {
                    self.rdags = Some(reverse_dags_from_dist(&self.graph, &self.dist));
                }
            }
        }
        self
    }

    /// Overwrites one path count without any consistency maintenance.
    #[doc(hidden)]
    pub fn set_sigma_unchecked(&mut self, s: VertexId, t: VertexId, value: f64) {
        let n = self.n();
        self.sigma[s * n + t] = value;
    }

    /// Recomputes every score from the stored DAGs and path counts.
    pub fn recompute_bc(&mut self) -> Result<(), StateError> {
        let n = self.n();
        let mut bc = vec![0.0; n];
        for s in 0..n {
            let dag = &self.dags[s];
            let (order, _) = dag.topological_order(s);
            let delta = accumulate_dependency(s, &order, &self.sigma[s * n..(s + 1) * n], dag)?;
            add_contributions(&mut bc, s, &order, &delta);
            self.counters.dag_edges_emitted += dag.len() as u64;
        }
        self.bc = bc;
        Ok(())
    }
}

/// Reverse DAGs read off a distance matrix: `(a, b) ∈ rdags[s]` iff
/// `(b, a) ∈ E` and `d(b, s) = w(b, a) + d(a, s)`.
pub(crate) fn reverse_dags_from_dist(g: &Graph, dist: &[Dist]) -> Vec<Dag> {
    let n = g.vertex_count();
    (0..n)
        .map(|s| {
            let edges: Vec<(u32, u32)> = g
                .edges()
                .filter(|&(b, a, w)| {
                    let das = dist[a * n + s];
                    das != INF && dist[b * n + s] == das + w.scaled()
                })
                .map(|(b, a, _)| (a as u32, b as u32))
                .collect();
            Dag::from_edges(n, &edges)
        })
        .collect()
}

/// Brandes' algorithm: one counting Dijkstra per source followed by
/// dependency accumulation in non-increasing distance order.
pub fn brandes_bc(g: &Graph) -> ApspState {
    let n = g.vertex_count();
    let mut dist = Vec::with_capacity(n * n);
    let mut sigma = Vec::with_capacity(n * n);
    let mut dags = Vec::with_capacity(n);
    let mut bc = vec![0.0; n];
    let mut counters = WorkCounters::default();
    let mut inexact = false;
    for s in 0..n {
        let r = counting_dijkstra(g, s);
        let delta = accumulate_dependency(s, &r.order, &r.sigma, &r.dag)
            .expect("fresh Dijkstra counts are positive on every DAG vertex");
        add_contributions(&mut bc, s, &r.order, &delta);
        counters.edges_examined += r.relaxations;
        counters.dag_edges_emitted += r.dag.len() as u64;
        inexact |= r.inexact;
        dist.extend_from_slice(&r.dist);
        sigma.extend_from_slice(&r.sigma);
        dags.push(r.dag);
    }
    ApspState { graph: g.clone(), dist, sigma, dags, rdags: None, bc, counters, inexact }
}

/// Work breakdown of [`static_bc_report`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StaticReport {
    /// `|E*|`: edges on at least one shortest path.
    pub estar: usize,
    /// Edge relaxations of the all-pairs step.
    pub apsp_relaxations: u64,
    /// Edge scans of the DAG-restricted steps: rebuilding each DAG from
    /// `E*`, topological sorting, path counting and accumulation.
    pub dag_scans: u64,
}

/// Static betweenness with DAG-restricted recomputation. See
/// [`static_bc_report`].
pub fn static_bc(g: &Graph) -> ApspState {
    static_bc_report(g).0
}

/// Static betweenness that derives `E*` from an all-pairs pass and then
/// works only on `E*`: each DAG is rebuilt by testing
/// `d(s, u) + w(u, v) = d(s, v)` over `E*`, ordered by in-degree peeling,
/// path counts are re-accumulated along that order, and dependencies are
/// accumulated in reverse.
pub fn static_bc_report(g: &Graph) -> (ApspState, StaticReport) {
    let n = g.vertex_count();
    let offsets = g.edge_offsets();
    let mut on_shortest = vec![false; g.edge_count()];
    let mut dist = Vec::with_capacity(n * n);
    let mut report = StaticReport::default();

    for s in 0..n {
        let r = counting_dijkstra(g, s);
        report.apsp_relaxations += r.relaxations;
        for (a, b) in r.dag.edges() {
            let idx = g.edge_index(&offsets, a as usize, b as usize).expect("DAG edge is a graph edge");
            on_shortest[idx] = true;
        }
        dist.extend_from_slice(&r.dist);
    }
    let estar: Vec<(u32, u32, u64)> = g
        .edges()
        .zip(&on_shortest)
        .filter(|(_, &keep)| keep)
        .map(|((u, v, w), _)| (u as u32, v as u32, w.scaled()))
        .collect();
    report.estar = estar.len();

    let mut sigma = vec![0.0f64; n * n];
    let mut dags = Vec::with_capacity(n);
    let mut bc = vec![0.0; n];
    let mut inexact = false;
    let mut emitted = 0u64;
    for s in 0..n {
        let row = &dist[s * n..(s + 1) * n];
        let edges: Vec<(u32, u32)> = estar
            .iter()
            .filter(|&&(u, v, w)| {
                let du = row[u as usize];
                du != INF && add_dist(du, w) == row[v as usize]
            })
            .map(|&(u, v, _)| (u, v))
            .collect();
        report.dag_scans += estar.len() as u64;
        let dag = Dag::from_edges(n, &edges);

        let (order, scanned) = dag.topological_order(s);
        report.dag_scans += scanned;

        let counts = &mut sigma[s * n..(s + 1) * n];
        counts[s] = 1.0;
        for &a in &order {
            let sa = counts[a as usize];
            for &b in dag.successors(a as usize) {
                counts[b as usize] += sa;
                inexact |= counts[b as usize] > EXACT_COUNT_LIMIT;
            }
        }
        report.dag_scans += dag.len() as u64;

        let delta = accumulate_dependency(s, &order, counts, &dag)
            .expect("path counts accumulated along the DAG are positive");
        report.dag_scans += dag.len() as u64;
        add_contributions(&mut bc, s, &order, &delta);
        emitted += dag.len() as u64;
        dags.push(dag);
    }

    let counters = WorkCounters {
        edges_examined: report.apsp_relaxations + report.dag_scans,
        pairs_touched: 0,
        dag_edges_emitted: emitted,
        r_set_edges: 0,
    };
    let state = ApspState { graph: g.clone(), dist, sigma, dags, rdags: None, bc, counters, inexact };
    (state, report)
}

/// Shortest-path edge statistics.
#[derive(Clone, Debug, PartialEq)]
pub struct StarStats {
    /// `m*`: edges on at least one shortest path.
    pub mstar: usize,
    /// Average of `through` over all vertices.
    pub mstar_avg: f64,
    /// Per vertex `x`: edges on a shortest path that starts or ends at `x`
    /// or passes through it, i.e. `|E(DAG(x)) ∪ E(DAG_R(x))|` with reverse
    /// edges mapped back to their forward orientation.
    pub through: Vec<usize>,
    /// Per vertex `x`: `|E(DAG(x))|`.
    pub dag_size: Vec<usize>,
}

pub fn star_stats(state: &ApspState) -> StarStats {
    let g = &state.graph;
    let n = state.n();
    let offsets = g.edge_offsets();
    let computed;
    let rdags: &[Dag] = match &state.rdags {
        Some(r) => r,
        None => {
            computed = reverse_dags_from_dist(g, &state.dist);
            &computed
        }
    };
    let index = |a: u32, b: u32| {
        g.edge_index(&offsets, a as usize, b as usize).expect("DAG edge is a graph edge")
    };

    let mut in_estar = vec![false; g.edge_count()];
    let mut mark = vec![usize::MAX; g.edge_count()];
    let mut through = Vec::with_capacity(n);
    for x in 0..n {
        let mut count = 0;
        let forward = state.dags[x].edges();
        let backward = rdags[x].edges().map(|(a, b)| (b, a));
        for (a, b) in forward.chain(backward) {
            let i = index(a, b);
            in_estar[i] = true;
            if mark[i] != x {
                mark[i] = x;
                count += 1;
            }
        }
        through.push(count);
    }
    let mstar = in_estar.iter().filter(|&&b| b).count();
    let mstar_avg = through.iter().sum::<usize>() as f64 / n as f64;
    let dag_size = state.dags.iter().map(Dag::len).collect();
    StarStats { mstar, mstar_avg, through, dag_size }
}
