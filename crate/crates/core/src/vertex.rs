//! Incremental update of the edges incident to one vertex.
//!
//! Updates to the incoming edges `E_i(v)` are applied first. They cannot
//! change any shortest path leaving `v`, so `DAG(v)` stays valid and each
//! `DAG(s)` is repaired the same way as for a single edge. Reverse DAGs are
//! then repaired from the sets `R_t` of first edges on new shortest `t ⇝ v`
//! paths.
//!
//! Updates to the outgoing edges `E_o(v)` are incoming edges of `v` in the
//! reversed graph, so the second phase runs the same procedure on the
//! transposed state with the roles of forward and reverse DAGs swapped.

use alloc::vec;
use alloc::vec::Vec;

use crate::apsp::{ApspState, Mode, WorkCounters, EXACT_COUNT_LIMIT};
use crate::dag::Dag;
use crate::edge::{validate_edge, FlagMatrix, PairFlag, UpdateError};
use crate::graph::{add_dist, Dist, VertexId, Weight, INF};

/// Strict decreases or insertions on the edges incident to `v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexUpdate {
    pub v: VertexId,
    /// `(u, w')`: edge `(u, v)` gets weight `w'`.
    pub incoming: Vec<(VertexId, Weight)>,
    /// `(x, w')`: edge `(v, x)` gets weight `w'`.
    pub outgoing: Vec<(VertexId, Weight)>,
}

impl VertexUpdate {
    pub fn new(v: VertexId) -> Self {
        VertexUpdate { v, ..Default::default() }
    }

    pub fn with_incoming(mut self, u: VertexId, w: Weight) -> Self {
        self.incoming.push((u, w));
        self
    }

    pub fn with_outgoing(mut self, x: VertexId, w: Weight) -> Self {
        self.outgoing.push((x, w));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.incoming.is_empty() && self.outgoing.is_empty()
    }
}

/// Read-only view of row-major distance and count matrices.
#[derive(Clone, Copy, Debug)]
pub struct Tables<'a> {
    n: usize,
    dist: &'a [Dist],
    sigma: &'a [f64],
}

impl<'a> Tables<'a> {
    pub fn new(n: usize, dist: &'a [Dist], sigma: &'a [f64]) -> Self {
        assert_eq!(dist.len(), n * n);
        assert_eq!(sigma.len(), n * n);
        Tables { n, dist, sigma }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, s: VertexId, t: VertexId) -> Dist {
        self.dist[s * self.n + t]
    }

    #[inline]
    pub fn sigma(&self, s: VertexId, t: VertexId) -> f64 {
        self.sigma[s * self.n + t]
    }
}

impl ApspState {
    pub fn tables(&self) -> Tables<'_> {
        Tables::new(self.n(), &self.dist, &self.sigma)
    }
}

/// Distance and path count from one source to the updated vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistToVEntry {
    pub old_dist: Dist,
    pub old_sigma: f64,
    pub dist: Dist,
    pub sigma: f64,
    /// Shortest paths that end with an updated edge. Only read when
    /// `dist == old_dist`; reset whenever the running distance drops.
    pub sigma_hat: f64,
}

/// [`DistToVEntry`] for every source.
#[derive(Clone, Debug, PartialEq)]
pub struct DistToV {
    pub v: VertexId,
    pub entries: Vec<DistToVEntry>,
}

impl DistToV {
    pub fn compute(v: VertexId, incoming: &[(VertexId, Weight)], tables: Tables<'_>) -> Self {
        let entries = (0..tables.n()).map(|s| compute_dist_to_v(s, v, incoming, tables)).collect();
        DistToV { v, entries }
    }
}

/// `d'(s, v)`, `σ'_sv` and the count of new shortest paths through the
/// updated incoming edges, in `O(|incoming|)`.
pub fn compute_dist_to_v(
    s: VertexId,
    v: VertexId,
    incoming: &[(VertexId, Weight)],
    tables: Tables<'_>,
) -> DistToVEntry {
    let old_dist = tables.dist(s, v);
    let old_sigma = tables.sigma(s, v);
    let mut cur = old_dist;
    let mut sigma = old_sigma;
    let mut sigma_hat = 0.0;
    for &(u, w) in incoming {
        let cand = add_dist(tables.dist(s, u), w.scaled());
        if cand == INF {
            continue;
        }
        if cand == cur {
            sigma += tables.sigma(s, u);
            sigma_hat += tables.sigma(s, u);
        } else if cand < cur {
            cur = cand;
            sigma = tables.sigma(s, u);
            sigma_hat = 0.0;
        }
    }
    DistToVEntry { old_dist, old_sigma, dist: cur, sigma, sigma_hat }
}

/// New distance, count and flag of `(s, t)` after the incoming edges of `v`
/// were updated. With `D = d'(s, v) + d(v, t)`:
///
/// * `d < D`: unchanged;
/// * `d = D` and `d(s, v)` held: `σ_st + σ̂'_sv · σ_vt`;
/// * `d = D` and `d(s, v)` dropped: `σ_st + σ'_sv · σ_vt`;
/// * `d > D`: distance `D` with `σ'_sv · σ_vt` paths.
///
/// Pairs ending at `v` are read straight from `distv`.
pub fn classify_pair_vertex(
    s: VertexId,
    t: VertexId,
    tables: Tables<'_>,
    distv: &DistToV,
) -> (Dist, f64, PairFlag) {
    let v = distv.v;
    let e = &distv.entries[s];
    if t == v {
        let flag = PairFlag::classify(e.old_dist, e.old_sigma, e.dist, e.sigma);
        return (e.dist, e.sigma, flag);
    }
    let d = tables.dist(s, t);
    let sigma = tables.sigma(s, t);
    let through = add_dist(e.dist, tables.dist(v, t));
    let (nd, ns) = if d < through {
        (d, sigma)
    } else if d == through {
        let gained = if e.old_dist == e.dist { e.sigma_hat } else { e.sigma };
        (d, sigma + gained * tables.sigma(v, t))
    } else {
        (through, e.sigma * tables.sigma(v, t))
    };
    (nd, ns, PairFlag::classify(d, sigma, nd, ns))
}

/// Classifies every pair; see [`classify_pair_vertex`].
pub fn vertex_flags(tables: Tables<'_>, distv: &DistToV) -> FlagMatrix {
    classify_all(tables, distv, &mut WorkCounters::default())
}

fn classify_all(tables: Tables<'_>, distv: &DistToV, counters: &mut WorkCounters) -> FlagMatrix {
    let n = tables.n();
    let mut flags = FlagMatrix::with_capacity(n);
    for s in 0..n {
        for t in 0..n {
            let (d, sigma, flag) = classify_pair_vertex(s, t, tables, distv);
            flags.push(d, sigma, flag);
        }
    }
    counters.pairs_touched += (n * n) as u64;
    flags
}

/// Repairs `DAG(s)` after the incoming edges of `v` were updated: the
/// single-edge repair with every updated edge `(u_j, v)` tested for
/// `d'(s, u_j) + w'(u_j, v) = d'(s, v)` at the end.
pub fn update_dag_vertex(
    s: VertexId,
    v: VertexId,
    incoming: &[(VertexId, Weight)],
    flags: &FlagMatrix,
    dag_s: &Dag,
    dag_v: &Dag,
    counters: &mut WorkCounters,
) -> Dag {
    let is_updated = |a: u32, b: u32| b as usize == v && incoming.iter().any(|&(u, _)| u == a as usize);
    let mut h = Vec::with_capacity(dag_s.len() + incoming.len());
    for (a, b) in dag_s.edges() {
        if !is_updated(a, b) && flags.flag(s, b as usize).keeps_old() {
            h.push((a, b));
        }
    }
    for (a, b) in dag_v.edges() {
        if flags.flag(s, b as usize).gains_new() {
            h.push((a, b));
        }
    }
    if flags.flag(s, v).gains_new() {
        let dv = flags.new_dist(s, v);
        for &(u, w) in incoming {
            if add_dist(flags.new_dist(s, u), w.scaled()) == dv {
                h.push((u as u32, v as u32));
            }
        }
    }
    counters.edges_examined += (dag_s.len() + dag_v.len() + incoming.len()) as u64;
    Dag::from_edges(flags.n(), &h)
}

/// For every `t`, the reversed edges `(a, t)` such that `(t, a)` is in the
/// updated `DAG'(t)` and starts a shortest `t ⇝ v` path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSets {
    offsets: Vec<u32>,
    tails: Vec<u32>,
}

impl RSets {
    /// Tails `a` of the reversed edges `(a, t)` in `R_t`.
    pub fn get(&self, t: VertexId) -> &[u32] {
        &self.tails[self.offsets[t] as usize..self.offsets[t + 1] as usize]
    }

    /// `Σ_t |R_t|`.
    pub fn total(&self) -> usize {
        self.tails.len()
    }
}

/// Builds every `R_t` from the updated forward DAGs and distances. Only the
/// root out-edges of each `DAG'(t)` are scanned.
pub fn build_r_sets(
    v: VertexId,
    new_dags: &[Dag],
    flags: &FlagMatrix,
    counters: &mut WorkCounters,
) -> RSets {
    let n = flags.n();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut tails = Vec::new();
    offsets.push(0);
    for t in 0..n {
        let dtv = flags.new_dist(t, v);
        let out = new_dags[t].successors(t);
        counters.edges_examined += out.len() as u64;
        if dtv != INF {
            for &a in out {
                let a = a as usize;
                if add_dist(flags.new_dist(t, a), flags.new_dist(a, v)) == dtv {
                    tails.push(a as u32);
                }
            }
        }
        offsets.push(tails.len() as u32);
    }
    counters.r_set_edges += tails.len() as u64;
    RSets { offsets, tails }
}

/// The edges inserted into `DAG'_R(s)`, in insertion order and with
/// repetitions: old reverse-DAG edges `(a, b)` whose flag `(b, s)` kept its
/// paths, then all of `R_b` for every `b` that gained paths into `s`.
pub fn reverse_dag_candidates(
    s: VertexId,
    flags: &FlagMatrix,
    rdag_s: &Dag,
    rsets: &RSets,
    counters: &mut WorkCounters,
) -> Vec<(u32, u32)> {
    let n = flags.n();
    let mut x = Vec::with_capacity(rdag_s.len());
    for (a, b) in rdag_s.edges() {
        if flags.flag(b as usize, s).keeps_old() {
            x.push((a, b));
        }
    }
    counters.edges_examined += rdag_s.len() as u64;
    for b in (0..n).filter(|&b| b != s) {
        if flags.flag(b, s).gains_new() {
            let r = rsets.get(b);
            x.extend(r.iter().map(|&a| (a, b as u32)));
            counters.edges_examined += r.len() as u64;
        }
    }
    x
}

/// Repairs `DAG_R(s)` after the incoming edges of `v` were updated.
pub fn update_reverse_dag(
    s: VertexId,
    flags: &FlagMatrix,
    rdag_s: &Dag,
    rsets: &RSets,
    counters: &mut WorkCounters,
) -> Dag {
    let x = reverse_dag_candidates(s, flags, rdag_s, rsets, counters);
    Dag::from_edges(flags.n(), &x)
}

/// One incoming-edge phase on row-major matrices. `fwd` and `rev` are
/// replaced by their repaired versions.
fn run_phase(
    v: VertexId,
    incoming: &[(VertexId, Weight)],
    dist: &mut Vec<Dist>,
    sigma: &mut Vec<f64>,
    fwd: &mut Vec<Dag>,
    rev: &mut Vec<Dag>,
    counters: &mut WorkCounters,
) -> bool {
    let n = fwd.len();
    let tables = Tables::new(n, dist, sigma);
    let distv = DistToV::compute(v, incoming, tables);
    let flags = classify_all(tables, &distv, counters);

    // Reads only the pre-update DAGs; everything is swapped in at the end.
    let new_fwd: Vec<Dag> = (0..n)
        .map(|s| update_dag_vertex(s, v, incoming, &flags, &fwd[s], &fwd[v], counters))
        .collect();
    let rsets = build_r_sets(v, &new_fwd, &flags, counters);
    let new_rev: Vec<Dag> = (0..n)
        .map(|s| update_reverse_dag(s, &flags, &rev[s], &rsets, counters))
        .collect();

    let inexact = flags.sigma.iter().any(|&x| x > EXACT_COUNT_LIMIT);
    *dist = flags.dist;
    *sigma = flags.sigma;
    *fwd = new_fwd;
    *rev = new_rev;
    inexact
}

fn transpose<T: Copy>(m: &mut [T], n: usize) {
    for i in 0..n {
        for j in i + 1..n {
            m.swap(i * n + j, j * n + i);
        }
    }
}

fn check_side(
    entries: &[(VertexId, Weight)],
    v: VertexId,
    n: usize,
    validate: impl Fn(VertexId, Weight) -> Result<(), UpdateError>,
) -> Result<(), UpdateError> {
    let mut seen = vec![false; n];
    for &(x, w) in entries {
        validate(x, w)?;
        if core::mem::replace(&mut seen[x], true) {
            return Err(UpdateError::DuplicateEndpoint { vertex: x });
        }
        debug_assert_ne!(x, v);
    }
    Ok(())
}

/// Applies a vertex update and recomputes every score. Requires
/// [`Mode::Full`].
///
/// On a graph built from an undirected input the incoming and outgoing
/// lists must describe the same undirected edges.
pub fn incremental_bc_vertex(state: &mut ApspState, upd: &VertexUpdate) -> Result<WorkCounters, UpdateError> {
    if state.mode() != Mode::Full {
        return Err(UpdateError::ModeMismatch);
    }
    let n = state.n();
    let v = upd.v;
    if v >= n {
        return Err(UpdateError::VertexOutOfRange { vertex: v, n });
    }
    let g = &state.graph;
    check_side(&upd.incoming, v, n, |u, w| validate_edge(g, u, v, w))?;
    check_side(&upd.outgoing, v, n, |x, w| validate_edge(g, v, x, w))?;
    if g.is_undirected() {
        let mut a = upd.incoming.clone();
        let mut b = upd.outgoing.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(UpdateError::UndirectedGraph);
        }
    }
    apply_validated(state, v, &upd.incoming, &upd.outgoing)
}

pub(crate) fn apply_validated(
    state: &mut ApspState,
    v: VertexId,
    incoming: &[(VertexId, Weight)],
    outgoing: &[(VertexId, Weight)],
) -> Result<WorkCounters, UpdateError> {
    let n = state.n();
    let mut counters = WorkCounters::default();
    let Some(mut rdags) = state.rdags.take() else {
        return Err(UpdateError::ModeMismatch);
    };

    if !incoming.is_empty() {
        state.inexact |= run_phase(
            v,
            incoming,
            &mut state.dist,
            &mut state.sigma,
            &mut state.dags,
            &mut rdags,
            &mut counters,
        );
        for &(u, w) in incoming {
            state.graph.set_weight(u, v, w);
        }
    }
    if !outgoing.is_empty() {
        transpose(&mut state.dist, n);
        transpose(&mut state.sigma, n);
        state.inexact |= run_phase(
            v,
            outgoing,
            &mut state.dist,
            &mut state.sigma,
            &mut rdags,
            &mut state.dags,
            &mut counters,
        );
        transpose(&mut state.dist, n);
        transpose(&mut state.sigma, n);
        for &(x, w) in outgoing {
            state.graph.set_weight(v, x, w);
        }
    }
    state.rdags = Some(rdags);
    state.counters = counters;
    if !(incoming.is_empty() && outgoing.is_empty()) {
        state.recompute_bc()?;
    }
    Ok(state.counters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apsp::brandes_bc;
    use crate::edge::{classify_pair, incremental_bc_edge, update_dag, EdgeUpdate};
    use crate::graph::Graph;

    fn w(x: &str) -> Weight {
        x.parse().unwrap()
    }

    fn graph(n: usize, edges: &[(usize, usize, &str)]) -> Graph {
        Graph::from_edges(n, edges.iter().map(|&(u, v, x)| (u, v, w(x))), false).unwrap()
    }

    fn d2() -> Graph {
        graph(4, &[(0, 1, "1"), (0, 2, "1"), (1, 3, "1"), (2, 3, "1")])
    }

    fn g1() -> Graph {
        graph(4, &[(0, 1, "1"), (1, 3, "5"), (0, 2, "2"), (2, 3, "2"), (0, 3, "4")])
    }

    fn full(g: &Graph) -> ApspState {
        brandes_bc(g).with_mode(Mode::Full)
    }

    const U: u64 = 1_000_000;

    #[test]
    fn dist_to_v_examples() {
        let state = brandes_bc(&g1());
        let e = compute_dist_to_v(0, 3, &[(1, w("3")), (0, w("3.5"))], state.tables());
        assert_eq!((e.dist, e.sigma), (3_500_000, 1.0));

        let e = compute_dist_to_v(0, 3, &[(1, w("3"))], state.tables());
        assert_eq!((e.dist, e.sigma, e.sigma_hat), (4 * U, 3.0, 1.0));

        let e = compute_dist_to_v(0, 3, &[], state.tables());
        assert_eq!((e.dist, e.sigma, e.sigma_hat), (4 * U, 2.0, 0.0));
    }

    #[test]
    fn classify_vertex_examples() {
        let state = brandes_bc(&g1());
        let distv = DistToV::compute(3, &[(1, w("3"))], state.tables());
        assert_eq!(
            classify_pair_vertex(0, 3, state.tables(), &distv),
            (4 * U, 3.0, PairFlag::NumChanged)
        );

        // Inserting (3, 0) makes 0 and everything after it reachable from 1.
        let distv = DistToV::compute(0, &[(3, w("1"))], state.tables());
        assert_eq!(distv.entries[1].dist, 6 * U);
        assert_eq!(distv.entries[0].dist, 0);
        assert_eq!(classify_pair_vertex(1, 2, state.tables(), &distv), (8 * U, 1.0, PairFlag::WtChanged));
        assert_eq!(classify_pair_vertex(0, 2, state.tables(), &distv).2, PairFlag::Unchanged);
    }

    #[test]
    fn single_edge_matches_edge_classification() {
        for (g, u, v, x) in [(g1(), 1, 3, "3"), (g1(), 1, 3, "0.5"), (d2(), 0, 1, "0.5"), (d2(), 3, 0, "1")] {
            let state = brandes_bc(&g);
            let upd = EdgeUpdate::new(u, v, w(x));
            let distv = DistToV::compute(v, &[(u, w(x))], state.tables());
            for s in 0..4 {
                for t in 0..4 {
                    let a = classify_pair(s, t, &state, &upd);
                    let b = classify_pair_vertex(s, t, state.tables(), &distv);
                    assert_eq!(a.0, b.0);
                    assert_eq!(a.1.to_bits(), b.1.to_bits());
                    assert_eq!(a.2, b.2);
                }
            }
        }
    }

    #[test]
    fn update_dag_vertex_examples() {
        let state = brandes_bc(&g1());
        let incoming = [(1, w("3")), (0, w("3.5"))];
        let distv = DistToV::compute(3, &incoming, state.tables());
        let mut c = WorkCounters::default();
        let flags = classify_all(state.tables(), &distv, &mut c);
        let h = update_dag_vertex(0, 3, &incoming, &flags, state.dag(0), state.dag(3), &mut c);
        assert_eq!(h, Dag::from_edges(4, &[(0, 1), (0, 2), (0, 3)]));

        // One updated edge reproduces the single-edge repair.
        let state = brandes_bc(&d2());
        let upd = EdgeUpdate::new(0, 1, w("0.5"));
        let distv = DistToV::compute(1, &[(0, upd.weight)], state.tables());
        let flags = classify_all(state.tables(), &distv, &mut c);
        for s in 0..4 {
            let a = update_dag(s, &upd, &flags, state.dag(s), state.dag(1), &mut c);
            let b = update_dag_vertex(s, 1, &[(0, upd.weight)], &flags, state.dag(s), state.dag(1), &mut c);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn r_sets_and_reverse_dag_on_diamond() {
        let state = full(&d2());
        let incoming = [(1, w("0.5"))];
        let distv = DistToV::compute(3, &incoming, state.tables());
        let mut c = WorkCounters::default();
        let flags = classify_all(state.tables(), &distv, &mut c);
        let new_fwd: Vec<Dag> = (0..4)
            .map(|s| update_dag_vertex(s, 3, &incoming, &flags, state.dag(s), state.dag(3), &mut c))
            .collect();
        let r = build_r_sets(3, &new_fwd, &flags, &mut c);
        assert_eq!(r.get(1), &[3]);
        assert_eq!(r.get(0), &[1]);
        assert_eq!(r.get(3), &[] as &[u32]);

        // 2 -> 3 is still the only path from 2, so (3, 2) stays; the route
        // 0 -> 2 -> 3 is dropped.
        let x = update_reverse_dag(3, &flags, state.rdag(3).unwrap(), &r, &mut c);
        assert_eq!(x, Dag::from_edges(4, &[(3, 1), (1, 0), (3, 2)]));
        let fresh = brandes_bc(&graph(4, &[(0, 1, "1"), (0, 2, "1"), (1, 3, "0.5"), (2, 3, "1")]).reverse());
        assert_eq!(&x, fresh.dag(3));

        // No flag into source 1 changed.
        let x = update_reverse_dag(1, &flags, state.rdag(1).unwrap(), &r, &mut c);
        assert_eq!(&x, state.rdag(1).unwrap());
    }

    #[test]
    fn r_set_unreachable_target_is_empty() {
        let state = full(&graph(3, &[(0, 1, "1")]));
        let incoming = [(0, w("1"))];
        let distv = DistToV::compute(2, &incoming, state.tables());
        let mut c = WorkCounters::default();
        let flags = classify_all(state.tables(), &distv, &mut c);
        let new_fwd: Vec<Dag> = (0..3)
            .map(|s| update_dag_vertex(s, 2, &incoming, &flags, state.dag(s), state.dag(2), &mut c))
            .collect();
        let r = build_r_sets(2, &new_fwd, &flags, &mut c);
        assert!(r.get(1).is_empty());
        assert_eq!(r.get(0), &[2]);
    }

    #[test]
    fn vertex_update_examples() {
        let mut state = full(&d2());
        incremental_bc_vertex(&mut state, &VertexUpdate::new(3).with_incoming(1, w("0.5"))).unwrap();
        assert_eq!(state.bc(), &[0.0, 1.0, 0.0, 0.0]);

        // Same result as the edge path in both modes.
        let mut edge_fast = brandes_bc(&d2());
        incremental_bc_edge(&mut edge_fast, EdgeUpdate::new(1, 3, w("0.5"))).unwrap();
        let mut full_edge = full(&d2());
        incremental_bc_edge(&mut full_edge, EdgeUpdate::new(1, 3, w("0.5"))).unwrap();
        assert_eq!(edge_fast.bc(), state.bc());
        assert_eq!(full_edge.dags(), state.dags());
        assert_eq!(full_edge.rdags(), state.rdags());
    }

    #[test]
    fn outgoing_phase_matches_scratch() {
        let mut state = full(&g1());
        let upd = VertexUpdate::new(1).with_outgoing(3, w("2")).with_outgoing(2, w("0.5")).with_incoming(2, w("1"));
        incremental_bc_vertex(&mut state, &upd).unwrap();
        let g = graph(
            4,
            &[(0, 1, "1"), (1, 3, "2"), (0, 2, "2"), (2, 3, "2"), (0, 3, "4"), (1, 2, "0.5"), (2, 1, "1")],
        );
        assert_eq!(state.graph(), &g);
        let fresh = brandes_bc(&g);
        assert_eq!(state.dist_matrix(), fresh.dist_matrix());
        assert_eq!(state.sigma_matrix(), fresh.sigma_matrix());
        assert_eq!(state.dags(), fresh.dags());
        assert_eq!(state.bc(), fresh.bc());
        let rfresh = brandes_bc(&g.reverse());
        assert_eq!(state.rdags().unwrap(), rfresh.dags());
    }

    #[test]
    fn rejects_invalid_vertex_updates() {
        let mut fast = brandes_bc(&d2());
        let upd = VertexUpdate::new(3).with_incoming(1, w("0.5"));
        assert_eq!(incremental_bc_vertex(&mut fast, &upd), Err(UpdateError::ModeMismatch));

        let mut state = full(&d2());
        let dup = VertexUpdate::new(3).with_incoming(1, w("0.5")).with_incoming(1, w("0.25"));
        assert_eq!(incremental_bc_vertex(&mut state, &dup), Err(UpdateError::DuplicateEndpoint { vertex: 1 }));
        let non_strict = VertexUpdate::new(3).with_incoming(2, w("1"));
        assert!(matches!(incremental_bc_vertex(&mut state, &non_strict), Err(UpdateError::NotADecrease { .. })));
        let self_loop = VertexUpdate::new(3).with_outgoing(3, w("1"));
        assert_eq!(incremental_bc_vertex(&mut state, &self_loop), Err(UpdateError::SelfLoop { vertex: 3 }));
        assert_eq!(
            incremental_bc_vertex(&mut state, &VertexUpdate::new(7)),
            Err(UpdateError::VertexOutOfRange { vertex: 7, n: 4 })
        );

        let before = state.bc().to_vec();
        incremental_bc_vertex(&mut state, &VertexUpdate::new(2)).unwrap();
        assert_eq!(state.bc(), &before[..]);
    }

    #[test]
    fn undirected_vertex_update_must_be_symmetric() {
        let g = Graph::from_edges(3, [(0, 1, w("1")), (1, 2, w("1"))], true).unwrap();
        let mut state = full(&g);
        let lopsided = VertexUpdate::new(1).with_incoming(0, w("0.5"));
        assert_eq!(incremental_bc_vertex(&mut state, &lopsided), Err(UpdateError::UndirectedGraph));
        let sym = VertexUpdate::new(1).with_incoming(0, w("0.5")).with_outgoing(0, w("0.5"));
        incremental_bc_vertex(&mut state, &sym).unwrap();
        assert_eq!(state.bc(), &[0.0, 2.0, 0.0]);
        assert!(state.graph().is_undirected());
    }
}
