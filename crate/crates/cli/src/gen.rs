//! Reproducible random graphs.
//!
//! All randomness comes from SplitMix64 seeded with the user seed. Ordered
//! pairs `(u, v)`, `u != v`, are visited in lexicographic order (only
//! `u < v` for undirected graphs). For `gnp` one draw `r` decides the edge:
//! it exists iff `(r >> 11) * 2^-53 < p`. Each edge then takes one more
//! draw for its weight, `1 + r % wmax`.

use incbc_core::{Graph, GraphError, Weight};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Complete,
    Gnp,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    pub model: Model,
    pub n: usize,
    /// Edge probability; ignored for complete graphs.
    pub p: f64,
    /// Largest weight, in whole units.
    pub wmax: u64,
    pub seed: u64,
    pub undirected: bool,
}

impl GenParams {
    /// `wmax` defaults to `n²`.
    pub fn new(model: Model, n: usize, seed: u64) -> Self {
        GenParams { model, n, p: 1.0, wmax: (n * n) as u64, seed, undirected: false }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum GenError {
    #[error("need at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge probability must be in (0, 1], got {0}")]
    BadProbability(f64),
    #[error("wmax must be at least 1")]
    ZeroWeight,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Largest `wmax` accepted for a graph on `n` vertices.
fn wmax_limit(n: usize) -> u64 {
    (i64::MAX as u64 / 1_000_000) / n as u64
}

pub fn generate(params: &GenParams) -> Result<Graph, GenError> {
    let GenParams { model, n, p, wmax, seed, undirected } = *params;
    if n < 2 {
        return Err(GenError::TooFewVertices(n));
    }
    if model == Model::Gnp && !(p > 0.0 && p <= 1.0) {
        return Err(GenError::BadProbability(p));
    }
    if wmax == 0 {
        return Err(GenError::ZeroWeight);
    }
    if wmax > wmax_limit(n) {
        return Err(GenError::Graph(GraphError::WeightOverflow { u: 0, v: 1 }));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut g = Graph::new(n, undirected)?;
    for u in 0..n {
        for v in 0..n {
            if u == v || (undirected && v < u) {
                continue;
            }
            if model == Model::Gnp && unit(rng.next_u64()) >= p {
                continue;
            }
            let w = 1 + rng.next_u64() % wmax;
            g.add_edge(u, v, Weight::from_units(w))?;
        }
    }
    Ok(g)
}

fn unit(r: u64) -> f64 {
    (r >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
