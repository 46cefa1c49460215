//! Incremental update of a single edge: a strict weight decrease or an
//! insertion (a decrease from infinity).

use alloc::vec::Vec;
use core::fmt;

use crate::apsp::{ApspState, Mode, StateError, WorkCounters, EXACT_COUNT_LIMIT};
use crate::dag::Dag;
use crate::graph::{add_dist, weight_fits, Dist, Graph, VertexId, Weight};
use crate::vertex;

/// How one `(s, t)` pair changed under an update.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairFlag {
    /// Same distance, same path count.
    Unchanged,
    /// Same distance, more shortest paths.
    NumChanged,
    /// Strictly shorter distance.
    WtChanged,
}

impl PairFlag {
    pub(crate) fn classify(old_d: Dist, old_sigma: f64, new_d: Dist, new_sigma: f64) -> Self {
        if new_d < old_d {
            PairFlag::WtChanged
        } else if new_sigma > old_sigma {
            PairFlag::NumChanged
        } else {
            PairFlag::Unchanged
        }
    }

    /// DAG edges into a vertex with this flag survive the update.
    pub(crate) fn keeps_old(self) -> bool {
        matches!(self, PairFlag::Unchanged | PairFlag::NumChanged)
    }

    /// The vertex gained shortest paths through the updated edges.
    pub(crate) fn gains_new(self) -> bool {
        matches!(self, PairFlag::NumChanged | PairFlag::WtChanged)
    }
}

/// Set the weight of `(u, v)` to `weight`, inserting the edge if absent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeUpdate {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: Weight,
}

impl EdgeUpdate {
    pub fn new(u: VertexId, v: VertexId, weight: Weight) -> Self {
        EdgeUpdate { u, v, weight }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UpdateError {
    VertexOutOfRange { vertex: VertexId, n: usize },
    SelfLoop { vertex: VertexId },
    NonPositiveWeight { u: VertexId, v: VertexId },
    WeightOverflow { u: VertexId, v: VertexId },
    /// The new weight is not strictly below the current one.
    NotADecrease { u: VertexId, v: VertexId, current: Weight, proposed: Weight },
    /// The same endpoint appears twice in one side of a vertex update.
    DuplicateEndpoint { vertex: VertexId },
    /// Vertex updates need reverse DAGs.
    ModeMismatch,
    /// One-directional update on a graph built from an undirected input.
    UndirectedGraph,
    /// Undirected update on a directed graph.
    DirectedGraph,
    Corrupt(StateError),
}

impl fmt::Display for UpdateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpdateError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
            UpdateError::SelfLoop { vertex } => write!(f, "self-loop on vertex {vertex}"),
            UpdateError::NonPositiveWeight { u, v } => {
                write!(f, "edge ({u}, {v}) needs a positive weight")
            }
            UpdateError::WeightOverflow { u, v } => {
                write!(f, "weight of edge ({u}, {v}) risks path-length overflow")
            }
            UpdateError::NotADecrease { u, v, current, proposed } => write!(
                f,
                "edge ({u}, {v}): new weight {proposed} is not a strict decrease from {current}"
            ),
            UpdateError::DuplicateEndpoint { vertex } => {
                write!(f, "endpoint {vertex} listed twice in one vertex update")
            }
            UpdateError::ModeMismatch => f.write_str("mode: vertex updates need full mode"),
            UpdateError::UndirectedGraph => {
                f.write_str("graph is undirected; update both directions together")
            }
            UpdateError::DirectedGraph => f.write_str("graph is directed"),
            UpdateError::Corrupt(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for UpdateError {}

impl From<StateError> for UpdateError {
    fn from(e: StateError) -> Self {
        UpdateError::Corrupt(e)
    }
}

/// Checks that `(u, v) -> w` is an incremental update of `g`.
pub(crate) fn validate_edge(g: &Graph, u: VertexId, v: VertexId, w: Weight) -> Result<(), UpdateError> {
    let n = g.vertex_count();
    for x in [u, v] {
        if x >= n {
            return Err(UpdateError::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(UpdateError::SelfLoop { vertex: u });
    }
    if w.scaled() == 0 {
        return Err(UpdateError::NonPositiveWeight { u, v });
    }
    if !weight_fits(n, w) {
        return Err(UpdateError::WeightOverflow { u, v });
    }
    if let Some(current) = g.weight(u, v) {
        if w >= current {
            return Err(UpdateError::NotADecrease { u, v, current, proposed: w });
        }
    }
    Ok(())
}

/// Per-pair flags of one update, with the updated distance and count of
/// every pair.
#[derive(Clone, Debug)]
pub struct FlagMatrix {
    n: usize,
    flags: Vec<PairFlag>,
    pub(crate) dist: Vec<Dist>,
    pub(crate) sigma: Vec<f64>,
}

impl FlagMatrix {
    pub(crate) fn with_capacity(n: usize) -> Self {
        FlagMatrix {
            n,
            flags: Vec::with_capacity(n * n),
            dist: Vec::with_capacity(n * n),
            sigma: Vec::with_capacity(n * n),
        }
    }

    pub(crate) fn push(&mut self, d: Dist, sigma: f64, flag: PairFlag) {
        self.flags.push(flag);
        self.dist.push(d);
        self.sigma.push(sigma);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flag(&self, s: VertexId, t: VertexId) -> PairFlag {
        self.flags[s * self.n + t]
    }

    pub fn new_dist(&self, s: VertexId, t: VertexId) -> Dist {
        self.dist[s * self.n + t]
    }

    pub fn new_sigma(&self, s: VertexId, t: VertexId) -> f64 {
        self.sigma[s * self.n + t]
    }

    pub fn count(&self, flag: PairFlag) -> usize {
        self.flags.iter().filter(|&&f| f == flag).count()
    }
}

/// New distance, count and flag of `(s, t)` after decreasing `(u, v)`.
///
/// With `D = d(s, u) + w' + d(v, t)`: a pair with `d < D` is unchanged,
/// `d = D` gains `σ_su · σ_vt` paths, and `d > D` takes distance `D` with
/// exactly `σ_su · σ_vt` paths. Paths into `u` and out of `v` never use the
/// updated edge, so `d(·, u)` and `d(v, ·)` are read from the old state.
pub fn classify_pair(
    s: VertexId,
    t: VertexId,
    state: &ApspState,
    upd: &EdgeUpdate,
) -> (Dist, f64, PairFlag) {
    let d = state.dist(s, t);
    let sigma = state.sigma(s, t);
    let through = add_dist(add_dist(state.dist(s, upd.u), upd.weight.scaled()), state.dist(upd.v, t));
    let (nd, ns) = if d < through {
        (d, sigma)
    } else if d == through {
        (d, sigma + state.sigma(s, upd.u) * state.sigma(upd.v, t))
    } else {
        (through, state.sigma(s, upd.u) * state.sigma(upd.v, t))
    };
    (nd, ns, PairFlag::classify(d, sigma, nd, ns))
}

fn classify_all(state: &ApspState, upd: &EdgeUpdate, counters: &mut WorkCounters) -> FlagMatrix {
    let n = state.n();
    let mut flags = FlagMatrix::with_capacity(n);
    for s in 0..n {
        for t in 0..n {
            let (d, sigma, flag) = classify_pair(s, t, state, upd);
            flags.push(d, sigma, flag);
        }
    }
    counters.pairs_touched += (n * n) as u64;
    flags
}

/// Repairs `DAG(s)` after decreasing `(u, v)`.
///
/// Old edges into vertices whose distance held are kept, `DAG(v)` edges into
/// vertices that gained paths through `(u, v)` are added, and `(u, v)`
/// itself joins when `v` gained paths. `dag_s` and `dag_v` must be the
/// pre-update DAGs of `s` and `v`.
pub fn update_dag(
    s: VertexId,
    upd: &EdgeUpdate,
    flags: &FlagMatrix,
    dag_s: &Dag,
    dag_v: &Dag,
    counters: &mut WorkCounters,
) -> Dag {
    let (u, v) = (upd.u as u32, upd.v as u32);
    let mut h = Vec::with_capacity(dag_s.len() + 1);
    for (a, b) in dag_s.edges() {
        if (a, b) != (u, v) && flags.flag(s, b as usize).keeps_old() {
            h.push((a, b));
        }
    }
    for (a, b) in dag_v.edges() {
        if flags.flag(s, b as usize).gains_new() {
            h.push((a, b));
        }
    }
    if flags.flag(s, upd.v).gains_new() {
        h.push((u, v));
    }
    counters.edges_examined += (dag_s.len() + dag_v.len() + 1) as u64;
    Dag::from_edges(flags.n(), &h)
}

/// Applies one incremental edge update and recomputes every score.
///
/// In [`Mode::Full`] the update is processed as a vertex update of `v` with
/// a single incoming edge so that reverse DAGs stay current.
pub fn incremental_bc_edge(state: &mut ApspState, upd: EdgeUpdate) -> Result<WorkCounters, UpdateError> {
    if state.graph.is_undirected() {
        return Err(UpdateError::UndirectedGraph);
    }
    validate_edge(&state.graph, upd.u, upd.v, upd.weight)?;
    apply_directed(state, upd)
}

/// Undirected edge update `{u, v} -> w'`: the directed updates `(u, v)` and
/// `(v, u)` applied one after the other.
pub fn incremental_bc_edge_undirected(
    state: &mut ApspState,
    upd: EdgeUpdate,
) -> Result<WorkCounters, UpdateError> {
    if !state.graph.is_undirected() {
        return Err(UpdateError::DirectedGraph);
    }
    validate_edge(&state.graph, upd.u, upd.v, upd.weight)?;
    let mut total = apply_directed(state, upd)?;
    total += apply_directed(state, EdgeUpdate::new(upd.v, upd.u, upd.weight))?;
    state.counters = total;
    Ok(total)
}

fn apply_directed(state: &mut ApspState, upd: EdgeUpdate) -> Result<WorkCounters, UpdateError> {
    match state.mode() {
        Mode::Full => vertex::apply_validated(state, upd.v, &[(upd.u, upd.weight)], &[]),
        Mode::EdgeFast => apply_edge_fast(state, upd),
    }
}

fn apply_edge_fast(state: &mut ApspState, upd: EdgeUpdate) -> Result<WorkCounters, UpdateError> {
    let n = state.n();
    let mut counters = WorkCounters::default();
    let flags = classify_all(state, &upd, &mut counters);

    // Every repair reads the pre-update DAGs; the new ones are installed
    // only after all sources are done.
    let dag_v = &state.dags[upd.v];
    let new_dags: Vec<Dag> = (0..n)
        .map(|s| update_dag(s, &upd, &flags, &state.dags[s], dag_v, &mut counters))
        .collect();

    state.inexact |= flags.sigma.iter().any(|&x| x > EXACT_COUNT_LIMIT);
    state.dist = flags.dist;
    state.sigma = flags.sigma;
    state.dags = new_dags;
    state.graph.set_weight(upd.u, upd.v, upd.weight);
    state.counters = counters;
    state.recompute_bc()?;
    Ok(state.counters)
}
