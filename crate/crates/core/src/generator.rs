//! Seeded random instances: a Hamiltonian path `0–1–…–(n−1)` plus extra
//! edges whose endpoints are skewed toward low vertex indices.

use crate::error::GenerateError;
use crate::graph::Graph;

/// Parameters of one generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, m: usize, seed: u64) -> Result<Self, GenerateError> {
        if n < 2 {
            return Err(GenerateError::TooFewVertices(n));
        }
        if m < n - 1 || m > n * (n - 1) / 2 {
            return Err(GenerateError::InfeasibleEdgeCount { n, m });
        }
        Ok(GenSpec { n, m, seed })
    }

    /// `n` vertices with [`default_edge_count`] edges.
    pub fn with_default_edges(n: usize, seed: u64) -> Result<Self, GenerateError> {
        GenSpec::new(n, default_edge_count(n)?, seed)
    }
}

/// Edge count used by the benchmark schedule: `n(n−5)/2`.
pub fn default_edge_count(n: usize) -> Result<usize, GenerateError> {
    if n < 7 {
        return Err(GenerateError::ScheduleTooSmall(n));
    }
    Ok(n * (n - 5) / 2)
}

/// xorshift64* (Vigna 2016): state update `x ^= x >> 12; x ^= x << 25;
/// x ^= x >> 27`, output `x * 0x2545F4914F6CDD1D`. The seed is expanded
/// with one SplitMix64 step so that nearby seeds give unrelated streams and
/// seed 0 is valid.
#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        XorShift64Star {
            state: if z == 0 { 0x9E37_79B9_7F4A_7C15 } else { z },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Endpoint draw `floor(n·r²)`, which favors low indices.
fn skewed_vertex(rng: &mut XorShift64Star, n: usize) -> usize {
    let r = rng.next_f64();
    ((n as f64 * r * r) as usize).min(n - 1)
}

pub fn generate(spec: GenSpec) -> Result<Graph, GenerateError> {
    let GenSpec { n, m, seed } = GenSpec::new(spec.n, spec.m, spec.seed)?;
    let mut g = Graph::path(n);
    let mut rng = XorShift64Star::new(seed);
    while g.edge_count() < m {
        let u = skewed_vertex(&mut rng, n);
        let v = skewed_vertex(&mut rng, n);
        if u != v {
            g.add_edge(u, v).expect("skewed_vertex stays in range");
        }
    }
    Ok(g)
}
