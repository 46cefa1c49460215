//! Update streams and the runner that applies them one event at a time.
//!
//! ```text
//! u e <u> <v> <w>        edge (u, v) gets weight w
//! u v <v> <k>            vertex event, followed by k lines of
//! i <x> <w>              edge (x, v) gets weight w
//! o <x> <w>              edge (v, x) gets weight w
//! ```

use incbc_core::{
    compare_states, from_scratch, incremental_bc_edge, incremental_bc_edge_undirected, incremental_bc_vertex,
    ApspState, EdgeUpdate, Graph, Mode, OracleReport, UpdateError, VertexId, VertexUpdate, Weight, WorkCounters,
};
use thiserror::Error;

use crate::format::{content_lines, field, ParseError, ParseErrorKind};

/// Tolerance on scores when verifying against a fresh computation.
pub const VERIFY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Event {
    Edge(EdgeUpdate),
    Vertex(VertexUpdate),
}

pub fn parse_stream(text: &str) -> Result<Vec<Event>, ParseError> {
    let mut events = Vec::new();
    let mut lines = content_lines(text);
    while let Some((line, text)) = lines.next() {
        let bad = || ParseError::new(line, ParseErrorKind::BadLine(text.to_string()));
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[..] {
            ["u", "e", u, v, w] => {
                let u = field(Some(u), line, text)?;
                let v = field(Some(v), line, text)?;
                let w = weight(w, line)?;
                events.push(Event::Edge(EdgeUpdate::new(u, v, w)));
            }
            ["u", "v", v, k] => {
                let mut upd = VertexUpdate::new(field(Some(v), line, text)?);
                let k: usize = field(Some(k), line, text)?;
                for _ in 0..k {
                    let (line, text) = lines.next().ok_or_else(bad)?;
                    let entry = |x: &str, w: &str| -> Result<(VertexId, Weight), ParseError> {
                        Ok((field(Some(x), line, text)?, weight(w, line)?))
                    };
                    match text.split_whitespace().collect::<Vec<_>>()[..] {
                        ["i", x, w] => upd.incoming.push(entry(x, w)?),
                        ["o", x, w] => upd.outgoing.push(entry(x, w)?),
                        _ => return Err(ParseError::new(line, ParseErrorKind::BadLine(text.to_string()))),
                    }
                }
                events.push(Event::Vertex(upd));
            }
            _ => return Err(bad()),
        }
    }
    Ok(events)
}

fn weight(tok: &str, line: usize) -> Result<Weight, ParseError> {
    tok.parse().map_err(|e| ParseError::new(line, ParseErrorKind::Weight(e)))
}

#[derive(Debug, Error, PartialEq)]
#[error("event {index}: {source}")]
pub struct StreamError {
    pub index: usize,
    pub source: UpdateError,
}

/// Outcome of one applied event.
#[derive(Clone, Debug, PartialEq)]
pub struct StepReport {
    pub index: usize,
    pub counters: WorkCounters,
    pub verify: Option<OracleReport>,
}

/// Maintains state across a stream. A separate copy of the graph is kept
/// up to date from the events themselves and used for verification.
pub struct StreamRunner {
    state: ApspState,
    graph: Graph,
    mode: Mode,
    verify: bool,
    next: usize,
}

impl StreamRunner {
    pub fn new(g: &Graph, mode: Mode, verify: bool) -> Self {
        StreamRunner { state: from_scratch(g, mode), graph: g.clone(), mode, verify, next: 0 }
    }

    pub fn state(&self) -> &ApspState {
        &self.state
    }

    /// Direct access for fault-injection tests.
    #[doc(hidden)]
    pub fn state_mut(&mut self) -> &mut ApspState {
        &mut self.state
    }

    pub fn events_applied(&self) -> usize {
        self.next
    }

    pub fn step(&mut self, event: &Event) -> Result<StepReport, StreamError> {
        let index = self.next;
        let err = |source| StreamError { index, source };
        let counters = match event {
            Event::Edge(upd) if self.graph.is_undirected() => incremental_bc_edge_undirected(&mut self.state, *upd),
            Event::Edge(upd) => incremental_bc_edge(&mut self.state, *upd),
            Event::Vertex(upd) if self.graph.is_undirected() => {
                let sym = symmetric(upd).map_err(err)?;
                incremental_bc_vertex(&mut self.state, &sym)
            }
            Event::Vertex(upd) => incremental_bc_vertex(&mut self.state, upd),
        }
        .map_err(err)?;

        match event {
            Event::Edge(upd) => self.graph.set_edge(upd.u, upd.v, upd.weight),
            Event::Vertex(upd) => upd
                .incoming
                .iter()
                .map(|&(x, w)| (x, upd.v, w))
                .chain(upd.outgoing.iter().map(|&(x, w)| (upd.v, x, w)))
                .try_for_each(|(a, b, w)| self.graph.set_edge(a, b, w)),
        }
        .expect("validated by the update");
        self.next += 1;

        let verify = self.verify.then(|| self.check());
        Ok(StepReport { index, counters, verify })
    }

    /// Compares the maintained state with a fresh computation.
    pub fn check(&self) -> OracleReport {
        let fresh = from_scratch(&self.graph, self.mode);
        compare_states(&self.state, &fresh, VERIFY_TOLERANCE).expect("same vertex count")
    }
}

/// On an undirected graph each listed edge is both incoming and outgoing.
fn symmetric(upd: &VertexUpdate) -> Result<VertexUpdate, UpdateError> {
    let mut all: Vec<(VertexId, Weight)> = upd.incoming.iter().chain(&upd.outgoing).copied().collect();
    all.sort_unstable();
    all.dedup();
    if let Some(pair) = all.windows(2).find(|p| p[0].0 == p[1].0) {
        return Err(UpdateError::DuplicateEndpoint { vertex: pair[0].0 });
    }
    Ok(VertexUpdate { v: upd.v, incoming: all.clone(), outgoing: all })
}
