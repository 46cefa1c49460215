//! Weighted directed graphs with exact fixed-point weights.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// Exact path length in fixed-point units (scale 10^6). [`INF`] marks an
/// unreachable pair.
pub type Dist = u64;

/// Distance sentinel for unreachable pairs. Additions saturate at this value.
pub const INF: Dist = u64::MAX;

/// Number of fixed-point units per unit of weight.
pub const WEIGHT_SCALE: u64 = 1_000_000;

const FRACTION_DIGITS: usize = 6;

/// A positive edge weight stored as an integer multiple of 10^-6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u64);

impl Weight {
    pub const fn from_scaled(scaled: u64) -> Self {
        Weight(scaled)
    }

    /// Whole-number weight. Panics if `units * 10^6` overflows.
    pub const fn from_units(units: u64) -> Self {
        match units.checked_mul(WEIGHT_SCALE) {
            Some(s) => Weight(s),
            None => panic!("weight overflow"),
        }
    }

    pub const fn scaled(self) -> u64 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / WEIGHT_SCALE as f64
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let int = self.0 / WEIGHT_SCALE;
        let mut frac = self.0 % WEIGHT_SCALE;
        if frac == 0 {
            return write!(f, "{int}");
        }
        let mut digits = FRACTION_DIGITS;
        while frac.is_multiple_of(10) {
            frac /= 10;
            digits -= 1;
        }
        write!(f, "{int}.{frac:0digits$}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightParseError {
    Empty,
    InvalidDigit,
    TooManyFractionDigits,
    Overflow,
}

impl fmt::Display for WeightParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightParseError::Empty => f.write_str("empty weight"),
            WeightParseError::InvalidDigit => f.write_str("weight is not a plain decimal number"),
            WeightParseError::TooManyFractionDigits => {
                f.write_str("weight has more than 6 fractional digits")
            }
            WeightParseError::Overflow => f.write_str("weight too large"),
        }
    }
}

impl core::error::Error for WeightParseError {}

impl FromStr for Weight {
    type Err = WeightParseError;

    /// Parses `123`, `0.5`, `2.000125`. Signs, exponents and empty integer
    /// or fraction parts are rejected. Zero parses; positivity is checked
    /// where the weight is attached to an edge.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(WeightParseError::Empty);
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, Some(f)),
            None => (s, None),
        };
        let all_digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int_part) {
            return Err(WeightParseError::InvalidDigit);
        }
        let mut scaled: u64 = 0;
        for b in int_part.bytes() {
            scaled = scaled
                .checked_mul(10)
                .and_then(|x| x.checked_add(u64::from(b - b'0')))
                .ok_or(WeightParseError::Overflow)?;
        }
        scaled = scaled.checked_mul(WEIGHT_SCALE).ok_or(WeightParseError::Overflow)?;
        if let Some(frac) = frac_part {
            if !all_digits(frac) {
                return Err(WeightParseError::InvalidDigit);
            }
            if frac.len() > FRACTION_DIGITS {
                return Err(WeightParseError::TooManyFractionDigits);
            }
            let mut f: u64 = 0;
            for b in frac.bytes() {
                f = f * 10 + u64::from(b - b'0');
            }
            f *= 10u64.pow((FRACTION_DIGITS - frac.len()) as u32);
            scaled = scaled.checked_add(f).ok_or(WeightParseError::Overflow)?;
        }
        Ok(Weight(scaled))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    NoVertices,
    VertexOutOfRange { vertex: VertexId, n: usize },
    SelfLoop { vertex: VertexId },
    DuplicateEdge { u: VertexId, v: VertexId },
    NonPositiveWeight { u: VertexId, v: VertexId },
    /// `n * w` would not fit in a 63-bit path length.
    WeightOverflow { u: VertexId, v: VertexId },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphError::NoVertices => f.write_str("graph must have at least one vertex"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range (n = {n})")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop on vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::NonPositiveWeight { u, v } => {
                write!(f, "edge ({u}, {v}) has a non-positive weight")
            }
            GraphError::WeightOverflow { u, v } => {
                write!(f, "weight of edge ({u}, {v}) risks path-length overflow")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Weighted directed graph. Out-lists are kept sorted by target, so two
/// graphs compare equal exactly when their weighted edge sets are equal.
///
/// A graph built from an undirected input stores both orientations of every
/// edge with equal weights and remembers that it came from one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    out: Vec<Vec<(u32, Weight)>>,
    edge_count: usize,
    undirected: bool,
}

impl Graph {
    pub fn new(n: usize, undirected: bool) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > u32::MAX as usize {
            return Err(GraphError::VertexOutOfRange { vertex: n, n: u32::MAX as usize });
        }
        Ok(Graph { n, out: vec![Vec::new(); n], edge_count: 0, undirected })
    }

    /// Builds a graph from `(u, v, w)` triples. With `undirected` set each
    /// triple is one undirected edge and is stored in both directions.
    pub fn from_edges<I>(n: usize, edges: I, undirected: bool) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        let mut g = Graph::new(n, undirected)?;
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of directed edges (twice the undirected edge count for
    /// undirected inputs).
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    pub fn out_edges(&self, u: VertexId) -> &[(u32, Weight)] {
        &self.out[u]
    }

    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        let list = self.out.get(u)?;
        list.binary_search_by_key(&(v as u32), |&(t, _)| t).ok().map(|i| list[i].1)
    }

    /// All directed edges in `(u, v)` lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, Weight)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&(v, w)| (u, v as usize, w)))
    }

    /// Position of `(u, v)` in the order of [`Graph::edges`], given the
    /// prefix sums returned by [`Graph::edge_offsets`].
    pub fn edge_index(&self, offsets: &[usize], u: VertexId, v: VertexId) -> Option<usize> {
        let list = &self.out[u];
        list.binary_search_by_key(&(v as u32), |&(t, _)| t).ok().map(|i| offsets[u] + i)
    }

    pub fn edge_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.n + 1);
        let mut acc = 0;
        offsets.push(0);
        for list in &self.out {
            acc += list.len();
            offsets.push(acc);
        }
        offsets
    }

    fn check_edge(&self, u: VertexId, v: VertexId, w: Weight) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        if w.scaled() == 0 {
            return Err(GraphError::NonPositiveWeight { u, v });
        }
        if !weight_fits(self.n, w) {
            return Err(GraphError::WeightOverflow { u, v });
        }
        Ok(())
    }

    /// Adds `(u, v)`, and `(v, u)` as well on an undirected graph.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, w: Weight) -> Result<(), GraphError> {
        if self.undirected {
            self.add_undirected_edge(u, v, w)
        } else {
            self.add_arc(u, v, w)
        }
    }

    fn add_arc(&mut self, u: VertexId, v: VertexId, w: Weight) -> Result<(), GraphError> {
        self.check_edge(u, v, w)?;
        let list = &mut self.out[u];
        match list.binary_search_by_key(&(v as u32), |&(t, _)| t) {
            Ok(_) => Err(GraphError::DuplicateEdge { u, v }),
            Err(pos) => {
                list.insert(pos, (v as u32, w));
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    fn add_undirected_edge(&mut self, u: VertexId, v: VertexId, w: Weight) -> Result<(), GraphError> {
        self.check_edge(u, v, w)?;
        if self.weight(u, v).is_some() || self.weight(v, u).is_some() {
            return Err(GraphError::DuplicateEdge { u, v });
        }
        self.add_arc(u, v, w)?;
        self.add_arc(v, u, w)
    }

    /// Inserts `(u, v)` or overwrites its weight, in both directions on an
    /// undirected graph. No shortest-path state is touched.
    pub fn set_edge(&mut self, u: VertexId, v: VertexId, w: Weight) -> Result<(), GraphError> {
        self.check_edge(u, v, w)?;
        self.set_weight(u, v, w);
        if self.undirected {
            self.set_weight(v, u, w);
        }
        Ok(())
    }

    /// Inserts `(u, v)` or overwrites its weight. Used by the incremental
    /// updates after they have validated the new weight.
    pub(crate) fn set_weight(&mut self, u: VertexId, v: VertexId, w: Weight) {
        let list = &mut self.out[u];
        match list.binary_search_by_key(&(v as u32), |&(t, _)| t) {
            Ok(i) => list[i].1 = w,
            Err(pos) => {
                list.insert(pos, (v as u32, w));
                self.edge_count += 1;
            }
        }
    }

    /// The graph with every edge reversed. Directedness metadata is kept.
    pub fn reverse(&self) -> Graph {
        let mut out = vec![Vec::new(); self.n];
        for (u, v, w) in self.edges() {
            out[v].push((u as u32, w));
        }
        // Sources are visited in increasing order, so each list is sorted.
        Graph { n: self.n, out, edge_count: self.edge_count, undirected: self.undirected }
    }
}

/// True when `n` copies of `w` still fit in a 63-bit sum.
pub fn weight_fits(n: usize, w: Weight) -> bool {
    (n as u128) * u128::from(w.scaled()) <= i64::MAX as u128
}

#[inline]
pub(crate) fn add_dist(a: Dist, b: Dist) -> Dist {
    a.saturating_add(b)
}
