//! Random graph generators: uniform G(n, m) samples for clustering
//! baselines, and fitness-model networks that serve as synthetic scale-free
//! hosts when no real corpus is available.

use std::collections::HashSet;

use rand::Rng;
use rand_distr::{Distribution, Exp};

use crate::corpus::Compound;
use crate::error::{Error, Result};
use crate::graph::{NodeId, SimpleGraph};
use crate::seed::rng_from_seed;

fn max_edges(n: usize) -> u64 {
    n as u64 * (n as u64).saturating_sub(1) / 2
}

/// Uniform sample from the simple undirected graphs with exactly `n` nodes
/// and `m` edges. Bit-exact deterministic per seed.
///
/// Sparse targets (m ≤ max/4) draw edges by rejection; denser targets draw
/// the complement's edges instead, so the complete graph needs no draws at
/// all.
pub fn gnm_random(n: usize, m: usize, seed: u64) -> Result<SimpleGraph> {
    let max = max_edges(n);
    if m as u64 > max {
        return Err(Error::InfeasibleEdgeCount { n, m: m as u64, max });
    }
    let mut rng = rng_from_seed(seed);

    if (m as u64) * 4 <= max {
        let edges = sample_distinct_pairs(n, m, &mut rng);
        SimpleGraph::from_edges(n, edges, None)
    } else {
        let excluded: HashSet<(NodeId, NodeId)> =
            sample_distinct_pairs(n, (max - m as u64) as usize, &mut rng)
                .into_iter()
                .collect();
        let mut edges = Vec::with_capacity(m);
        for u in 0..n as NodeId {
            for v in (u + 1)..n as NodeId {
                if !excluded.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::from_edges(n, edges, None)
    }
}

/// `count` distinct unordered pairs over `0..n`, by rejection.
fn sample_distinct_pairs(n: usize, count: usize, rng: &mut impl Rng) -> Vec<(NodeId, NodeId)> {
    let mut seen: HashSet<(NodeId, NodeId)> = HashSet::with_capacity(count);
    let mut pairs = Vec::with_capacity(count);
    while pairs.len() < count {
        let a = rng.random_range(0..n) as NodeId;
        let b = rng.random_range(0..n) as NodeId;
        if a == b {
            continue;
        }
        let pair = (a.min(b), a.max(b));
        if seen.insert(pair) {
            pairs.push(pair);
        }
    }
    pairs
}

/// Distribution the i.i.d. node fitness values are drawn from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FitnessLaw {
    Exponential { rate: f64 },
}

/// How an unordered pair's fitness values decide its edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LinkRule {
    /// Deterministic: edge iff x_i + x_j ≥ z.
    Threshold { z: f64 },
    /// Probabilistic: edge with probability min(1, coeff·x_i·x_j).
    ProductProbability { coeff: f64 },
}

/// Configuration of one fitness-model draw.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitnessConfig {
    pub n: usize,
    pub fitness_law: FitnessLaw,
    pub link_rule: LinkRule,
    pub seed: u64,
}

/// A fitness-model network with its per-node fitness values retained.
#[derive(Debug, Clone, PartialEq)]
pub struct FitnessNetwork {
    pub graph: SimpleGraph,
    /// node id → fitness.
    pub fitness: Vec<f64>,
}

/// Draws node fitness values from the configured law and links each
/// unordered pair per the link rule.
///
/// With the exponential law and a threshold rule this is the classic
/// scale-free construction: the degree distribution follows a power law
/// (exponent near 2) over a wide range.
pub fn fitness_network(cfg: &FitnessConfig) -> Result<FitnessNetwork> {
    if cfg.n < 2 {
        return Err(Error::InvalidConfig(format!(
            "fitness network needs n ≥ 2, got {}",
            cfg.n
        )));
    }
    let mut rng = rng_from_seed(cfg.seed);
    let fitness: Vec<f64> = match cfg.fitness_law {
        FitnessLaw::Exponential { rate } => {
            if !(rate > 0.0) || !rate.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "exponential rate must be positive and finite, got {rate}"
                )));
            }
            let law = Exp::new(rate).expect("validated rate");
            (0..cfg.n).map(|_| law.sample(&mut rng)).collect()
        }
    };

    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    match cfg.link_rule {
        LinkRule::Threshold { z } => {
            for i in 0..cfg.n {
                for j in (i + 1)..cfg.n {
                    if fitness[i] + fitness[j] >= z {
                        edges.push((i as NodeId, j as NodeId));
                    }
                }
            }
        }
        LinkRule::ProductProbability { coeff } => {
            if !(coeff >= 0.0) || !coeff.is_finite() {
                return Err(Error::InvalidConfig(format!(
                    "product coefficient must be nonnegative and finite, got {coeff}"
                )));
            }
            // One draw per pair in fixed (i, j) order keeps this deterministic.
            for i in 0..cfg.n {
                for j in (i + 1)..cfg.n {
                    let p = (coeff * fitness[i] * fitness[j]).min(1.0);
                    if rng.random::<f64>() < p {
                        edges.push((i as NodeId, j as NodeId));
                    }
                }
            }
        }
    }

    let graph = SimpleGraph::from_edges(cfg.n, edges, None)?;
    Ok(FitnessNetwork { graph, fitness })
}

/// Threshold z making the expected edge count of an exponential-fitness
/// threshold network equal `target_m`.
///
/// The sum of two Exp(rate) values has survival function
/// S(z) = (1 + rate·z)·e^(−rate·z); this solves S(z) = target_m / C(n, 2)
/// by bisection.
pub fn threshold_for_expected_edges(n: usize, rate: f64, target_m: u64) -> Result<f64> {
    if n < 2 || !(rate > 0.0) || !rate.is_finite() {
        return Err(Error::InvalidConfig(
            "need n ≥ 2 and a positive finite rate".into(),
        ));
    }
    let max = max_edges(n);
    if target_m == 0 || target_m > max {
        return Err(Error::InfeasibleEdgeCount { n, m: target_m, max });
    }
    let p_target = target_m as f64 / max as f64;
    if p_target >= 1.0 {
        return Ok(0.0);
    }
    let survival = |z: f64| (1.0 + rate * z) * (-rate * z).exp();
    let mut lo = 0.0;
    let mut hi = 1.0;
    while survival(hi) > p_target {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if survival(mid) > p_target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Size of the CJK Unified Ideographs block used for synthetic labels.
pub const CJK_BLOCK_SIZE: usize = 0x9FFF - 0x4E00 + 1;

/// Distinct single-character labels from the CJK Unified Ideographs block,
/// starting at U+4E00, one per node id.
pub fn cjk_labels(count: usize) -> Result<Vec<char>> {
    if count > CJK_BLOCK_SIZE {
        return Err(Error::InvalidLabeling(format!(
            "{count} labels requested but the CJK block holds {CJK_BLOCK_SIZE}"
        )));
    }
    Ok((0..count)
        .map(|i| char::from_u32(0x4E00 + i as u32).expect("CJK block scalar"))
        .collect())
}

/// Converts a graph to a synthetic compound list: one compound per edge,
/// oriented lower node id → higher node id, multiplicity 1.
///
/// `labels` must assign a distinct character to every node.
pub fn graph_to_corpus(g: &SimpleGraph, labels: &[char]) -> Result<Vec<Compound>> {
    if labels.len() != g.n_nodes() {
        return Err(Error::InvalidLabeling(format!(
            "{} labels for {} nodes",
            labels.len(),
            g.n_nodes()
        )));
    }
    let mut seen = HashSet::with_capacity(labels.len());
    for &c in labels {
        if !seen.insert(c) {
            return Err(Error::InvalidLabeling(format!("duplicate label '{c}'")));
        }
    }
    Ok(g.edges()
        .into_iter()
        .map(|(u, v)| Compound {
            upper: labels[u as usize],
            lower: labels[v as usize],
            multiplicity: 1,
        })
        .collect())
}
