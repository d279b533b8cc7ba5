//! Network statistics: average degree, exact path lengths and diameter,
//! Watts–Strogatz clustering, random-graph clustering baselines, degree
//! distributions, and power-law fits.

use std::collections::BTreeMap;
use std::io::{BufRead, BufReader, Read, Write};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::gnm_random;
use crate::graph::{ensure_connected, NodeId, SimpleGraph};
use crate::parallel::map_indexed;
use crate::seed::{derive_seed, rng_from_seed};

/// The statistics bundle for one graph.
///
/// `c_rand` is present only when a random-graph baseline was requested.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkMetrics {
    pub n_nodes: usize,
    pub n_edges: usize,
    pub avg_degree: f64,
    pub mean_path_length: f64,
    pub diameter: u32,
    pub clustering: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c_rand: Option<CRandBaseline>,
}

/// Clustering coefficient of G(n, m) graphs matched in size, averaged over
/// `samples` independent draws.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CRandBaseline {
    pub mean: f64,
    pub std: f64,
    pub samples: usize,
    pub seed: u64,
}

/// Request for the [`CRandBaseline`] part of [`network_metrics`].
#[derive(Debug, Clone, Copy)]
pub struct CRandSpec {
    pub samples: usize,
    pub seed: u64,
}

/// Approximate path statistics from a random subset of BFS sources, for
/// graphs too large for the exact all-source sweep.
#[derive(Debug, Clone, Copy)]
pub struct PathSampling {
    pub sources: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MetricsOptions {
    pub c_rand: Option<CRandSpec>,
    /// `None` computes exact values; `Some` samples BFS sources and the
    /// results are approximate (the diameter becomes a lower bound).
    pub path_sampling: Option<PathSampling>,
}

/// Mean shortest-path length over unordered node pairs, plus the maximum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathStats {
    pub mean: f64,
    pub diameter: u32,
}

/// 2M/N.
pub fn average_degree(g: &SimpleGraph) -> Result<f64> {
    if g.n_nodes() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(2.0 * g.n_edges() as f64 / g.n_nodes() as f64)
}

/// BFS from `src`: sum of distances to all reached nodes, the largest
/// distance, and how many nodes were reached.
fn bfs_stats(g: &SimpleGraph, src: NodeId) -> (u64, u32, usize) {
    let n = g.n_nodes();
    const UNSEEN: u32 = u32::MAX;
    let mut dist = vec![UNSEEN; n];
    let mut queue = std::collections::VecDeque::new();
    dist[src as usize] = 0;
    queue.push_back(src);
    let (mut sum, mut max, mut reached) = (0u64, 0u32, 1usize);
    while let Some(v) = queue.pop_front() {
        let d = dist[v as usize];
        for &w in g.neighbors(v) {
            if dist[w as usize] == UNSEEN {
                dist[w as usize] = d + 1;
                sum += (d + 1) as u64;
                max = max.max(d + 1);
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    (sum, max, reached)
}

fn stats_from_sources(g: &SimpleGraph, sources: &[NodeId], pair_count: u64) -> PathStats {
    let per_source = map_indexed(sources.len(), |i| {
        let (sum, max, _) = bfs_stats(g, sources[i]);
        (sum, max)
    });
    let mut total = 0u64;
    let mut diameter = 0u32;
    for (sum, max) in per_source {
        total += sum;
        diameter = diameter.max(max);
    }
    PathStats {
        mean: total as f64 / pair_count as f64,
        diameter,
    }
}

/// Exact mean path length and diameter via BFS from every node.
///
/// The mean averages over all unordered distinct pairs; requires a connected
/// graph with at least 2 nodes.
pub fn path_stats(g: &SimpleGraph) -> Result<PathStats> {
    let n = g.n_nodes();
    if n < 2 {
        return Err(Error::GraphTooSmall { n_nodes: n });
    }
    ensure_connected(g)?;
    let all: Vec<NodeId> = (0..n as NodeId).collect();
    // Each unordered pair is counted from both endpoints.
    Ok(stats_from_sources(g, &all, (n as u64) * (n as u64 - 1)))
}

pub fn mean_path_length(g: &SimpleGraph) -> Result<f64> {
    path_stats(g).map(|s| s.mean)
}

pub fn diameter(g: &SimpleGraph) -> Result<u32> {
    path_stats(g).map(|s| s.diameter)
}

/// Approximate path statistics from `sources` random BFS sources (without
/// replacement, uniform, deterministic per seed). The mean is an unbiased
/// estimate; the diameter is only a lower bound.
pub fn path_stats_sampled(g: &SimpleGraph, sources: usize, seed: u64) -> Result<PathStats> {
    let n = g.n_nodes();
    if n < 2 {
        return Err(Error::GraphTooSmall { n_nodes: n });
    }
    if sources == 0 {
        return Err(Error::InvalidConfig("need at least 1 BFS source".into()));
    }
    ensure_connected(g)?;
    let s = sources.min(n);
    // Partial Fisher–Yates: the first `s` entries are a uniform sample.
    let mut ids: Vec<NodeId> = (0..n as NodeId).collect();
    let mut rng = rng_from_seed(seed);
    for i in 0..s {
        let j = rng.random_range(i..n);
        ids.swap(i, j);
    }
    ids.truncate(s);
    Ok(stats_from_sources(g, &ids, (s as u64) * (n as u64 - 1)))
}

/// Count of elements common to two sorted slices.
fn sorted_intersection_count(a: &[NodeId], b: &[NodeId]) -> u64 {
    let (mut i, mut j, mut count) = (0, 0, 0u64);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Local clustering 2·t/(k(k−1)), or `None` when degree < 2.
fn local_clustering(g: &SimpleGraph, v: NodeId) -> Option<f64> {
    let k = g.degree(v);
    if k < 2 {
        return None;
    }
    let nbrs = g.neighbors(v);
    // Each neighbor-neighbor edge is seen from both endpoints, giving 2·t.
    let twice_links: u64 = nbrs
        .iter()
        .map(|&u| sorted_intersection_count(nbrs, g.neighbors(u)))
        .sum();
    Some(twice_links as f64 / (k as u64 * (k as u64 - 1)) as f64)
}

/// Watts–Strogatz clustering: the average of local coefficients with
/// degree-<2 nodes contributing 0.
pub fn clustering_coefficient(g: &SimpleGraph) -> f64 {
    clustering_coefficient_with(g, false)
}

/// As [`clustering_coefficient`], with the option to exclude degree-<2 nodes
/// from the average instead (sensitivity variant).
pub fn clustering_coefficient_with(g: &SimpleGraph, exclude_low_degree: bool) -> f64 {
    let n = g.n_nodes();
    if n == 0 {
        return 0.0;
    }
    let locals = map_indexed(n, |v| local_clustering(g, v as NodeId));
    if exclude_low_degree {
        let (mut sum, mut count) = (0.0, 0usize);
        for c in locals.into_iter().flatten() {
            sum += c;
            count += 1;
        }
        if count == 0 {
            0.0
        } else {
            sum / count as f64
        }
    } else {
        locals.into_iter().map(|c| c.unwrap_or(0.0)).sum::<f64>() / n as f64
    }
}

/// Mean and sample standard deviation of the clustering coefficient over
/// `samples` G(n, m) graphs. Sample `i` is generated with seed
/// `derive_seed(seed, i)`, so the result is reproducible and independent of
/// evaluation order.
pub fn c_rand_baseline(n: usize, m: usize, samples: usize, seed: u64) -> Result<CRandBaseline> {
    if samples == 0 {
        return Err(Error::InvalidConfig("need at least 1 sample".into()));
    }
    // Validate feasibility once before fanning out.
    gnm_feasible(n, m)?;
    let values = map_indexed(samples, |i| {
        let g = gnm_random(n, m, derive_seed(seed, i as u64)).expect("feasibility checked");
        clustering_coefficient(&g)
    });
    let (mean, std) = mean_std(&values);
    Ok(CRandBaseline {
        mean,
        std,
        samples,
        seed,
    })
}

fn gnm_feasible(n: usize, m: usize) -> Result<()> {
    let max = n as u64 * (n as u64).saturating_sub(1) / 2;
    if m as u64 > max {
        return Err(Error::InfeasibleEdgeCount { n, m: m as u64, max });
    }
    Ok(())
}

pub(crate) fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n as f64 - 1.0);
    (mean, var.sqrt())
}

/// Exact degree histogram of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDistribution {
    counts: BTreeMap<u32, u64>,
    n_nodes: u64,
}

impl DegreeDistribution {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        let mut counts = BTreeMap::new();
        for v in 0..g.n_nodes() {
            *counts.entry(g.degree(v as NodeId) as u32).or_insert(0) += 1;
        }
        DegreeDistribution {
            counts,
            n_nodes: g.n_nodes() as u64,
        }
    }

    /// Builds from explicit counts (zero-count entries are dropped).
    pub fn from_counts(counts: BTreeMap<u32, u64>) -> Result<Self> {
        let counts: BTreeMap<u32, u64> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        let n_nodes: u64 = counts.values().sum();
        if n_nodes == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(DegreeDistribution { counts, n_nodes })
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn n_nodes(&self) -> u64 {
        self.n_nodes
    }

    pub fn count(&self, k: u32) -> u64 {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// p(k) = count(k) / n_nodes.
    pub fn fraction(&self, k: u32) -> f64 {
        self.count(k) as f64 / self.n_nodes as f64
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    /// Writes `k,count,fraction` rows, ascending in k.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "k,count,fraction")?;
        for (&k, &count) in &self.counts {
            writeln!(w, "{},{},{}", k, count, count as f64 / self.n_nodes as f64)?;
        }
        Ok(())
    }

    /// Reads the CSV form back (the fraction column is redundant and only
    /// checked for being numeric).
    pub fn read_csv<R: Read>(r: R) -> Result<Self> {
        let reader = BufReader::new(r);
        let mut counts = BTreeMap::new();
        let mut lines = reader.lines().enumerate();
        match lines.next() {
            Some((_, header)) => {
                let header = header?;
                if header.trim() != "k,count,fraction" {
                    return Err(Error::Parse {
                        line: 1,
                        reason: format!("expected header 'k,count,fraction', found {header:?}"),
                    });
                }
            }
            None => return Err(Error::EmptyGraph),
        }
        for (idx, line) in lines {
            let lineno = idx + 1;
            let line = line?;
            let text = line.trim();
            if text.is_empty() {
                continue;
            }
            let fields: Vec<&str> = text.split(',').collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line: lineno,
                    reason: format!("expected 3 fields, found {}", fields.len()),
                });
            }
            let k: u32 = fields[0].parse().map_err(|_| Error::Parse {
                line: lineno,
                reason: format!("bad degree {:?}", fields[0]),
            })?;
            let count: u64 = fields[1].parse().map_err(|_| Error::Parse {
                line: lineno,
                reason: format!("bad count {:?}", fields[1]),
            })?;
            let _: f64 = fields[2].parse().map_err(|_| Error::Parse {
                line: lineno,
                reason: format!("bad fraction {:?}", fields[2]),
            })?;
            if counts.insert(k, count).is_some() {
                return Err(Error::Parse {
                    line: lineno,
                    reason: format!("duplicate degree {k}"),
                });
            }
        }
        DegreeDistribution::from_counts(counts)
    }
}

pub fn degree_distribution(g: &SimpleGraph) -> DegreeDistribution {
    DegreeDistribution::from_graph(g)
}

/// How histogram points are formed before the log–log line fit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Binning {
    /// One point per nonempty degree.
    Raw,
    /// Geometric bins of the given base; bin masses are divided by the number
    /// of integer degrees the bin spans, and the point sits at the geometric
    /// mean of the span.
    Log { base: f64 },
}

/// Least-squares fit of log p(k) against log k over a degree window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawFit {
    /// Exponent γ in p(k) ∝ k^−γ (the negated fitted slope).
    pub gamma: f64,
    /// Standard error of the fitted slope.
    pub stderr: f64,
    pub r_squared: f64,
    pub k_min: u32,
    pub k_max: u32,
    pub binning: Binning,
}

/// Fits p(k) ∝ k^−γ over [k_min, k_max] by least squares in log–log space.
///
/// The window is caller-supplied; there is no automatic cutoff selection.
pub fn fit_power_law(
    d: &DegreeDistribution,
    k_min: u32,
    k_max: u32,
    binning: Binning,
) -> Result<PowerLawFit> {
    if k_min < 1 {
        return Err(Error::InvalidFitWindow("k_min must be at least 1".into()));
    }
    if k_min >= k_max {
        return Err(Error::InvalidFitWindow(format!(
            "k_min {k_min} must be below k_max {k_max}"
        )));
    }
    if let Binning::Log { base } = binning {
        if !(base > 1.0) || !base.is_finite() {
            return Err(Error::InvalidFitWindow(format!(
                "log base {base} must be finite and above 1"
            )));
        }
    }

    let points = match binning {
        Binning::Raw => raw_points(d, k_min, k_max),
        Binning::Log { base } => log_binned_points(d, k_min, k_max, base),
    };
    if points.is_empty() {
        return Err(Error::EmptyFitWindow { k_min, k_max });
    }
    if points.len() < 3 {
        return Err(Error::TooFewBins {
            k_min,
            k_max,
            found: points.len(),
        });
    }

    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let (slope, stderr, r_squared) = ols(&xs, &ys);
    Ok(PowerLawFit {
        gamma: -slope,
        stderr,
        r_squared,
        k_min,
        k_max,
        binning,
    })
}

fn raw_points(d: &DegreeDistribution, k_min: u32, k_max: u32) -> Vec<(f64, f64)> {
    d.counts()
        .range(k_min..=k_max)
        .map(|(&k, _)| (k as f64, d.fraction(k)))
        .collect()
}

fn log_binned_points(d: &DegreeDistribution, k_min: u32, k_max: u32, base: f64) -> Vec<(f64, f64)> {
    let mut points = Vec::new();
    let mut lo = k_min as f64;
    while lo <= k_max as f64 {
        let hi = lo * base;
        // Integer degrees k with lo ≤ k < hi, clipped to the window.
        let k_first = (lo.ceil() as u32).max(k_min);
        let below_hi = if hi.fract() == 0.0 {
            hi as u32 - 1
        } else {
            hi.floor() as u32
        };
        let k_last = below_hi.min(k_max);
        if k_first <= k_last {
            let mass: u64 = d
                .counts()
                .range(k_first..=k_last)
                .map(|(_, &c)| c)
                .sum();
            if mass > 0 {
                let width = (k_last - k_first + 1) as f64;
                let density = mass as f64 / d.n_nodes() as f64 / width;
                let center = (k_first as f64 * k_last as f64).sqrt();
                points.push((center, density));
            }
        }
        lo = hi;
    }
    points
}

/// Slope, slope standard error, and r² of an ordinary least-squares line.
///
/// A zero-variance response (all y equal) is a perfect constant fit: r² = 1.
fn ols(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x - x_mean;
        let dy = y - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    let slope = sxy / sxx;
    let sse = (syy - slope * sxy).max(0.0);
    let stderr = (sse / (n - 2.0) / sxx).sqrt();
    let r_squared = if syy <= f64::EPSILON * n {
        1.0
    } else {
        1.0 - sse / syy
    };
    (slope, stderr, r_squared)
}

/// Computes the full metrics bundle for a connected graph.
pub fn network_metrics(g: &SimpleGraph, opts: &MetricsOptions) -> Result<NetworkMetrics> {
    let avg_degree = average_degree(g)?;
    let paths = match opts.path_sampling {
        None => path_stats(g)?,
        Some(s) => path_stats_sampled(g, s.sources, s.seed)?,
    };
    let clustering = clustering_coefficient(g);
    let c_rand = match opts.c_rand {
        None => None,
        Some(spec) => Some(c_rand_baseline(
            g.n_nodes(),
            g.n_edges(),
            spec.samples,
            spec.seed,
        )?),
    };
    Ok(NetworkMetrics {
        n_nodes: g.n_nodes(),
        n_edges: g.n_edges(),
        avg_degree,
        mean_path_length: paths.mean,
        diameter: paths.diameter,
        clustering,
        c_rand,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> SimpleGraph {
        SimpleGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)], None).unwrap()
    }

    fn path3() -> SimpleGraph {
        SimpleGraph::from_edges(3, [(0, 1), (1, 2)], None).unwrap()
    }

    fn star4() -> SimpleGraph {
        SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)], None).unwrap()
    }

    #[test]
    fn average_degree_cases() {
        assert_eq!(average_degree(&triangle()).unwrap(), 2.0);
        // Table-scale check: 2M/N at (5458, 74617) rounds to 27.3.
        let k: f64 = 2.0 * 74617.0 / 5458.0;
        assert!((k - 27.3).abs() < 0.05);
        let k: f64 = 2.0 * 9054.0 / 1799.0;
        assert!((k - 10.1).abs() < 0.05);
        assert!(matches!(
            average_degree(&SimpleGraph::from_edges(0, [], None).unwrap()),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn path_stats_hand_cases() {
        let t = path_stats(&triangle()).unwrap();
        assert_eq!(t.mean, 1.0);
        assert_eq!(t.diameter, 1);

        // P3 pairs: d(0,1)=1, d(1,2)=1, d(0,2)=2 → mean 4/3.
        let p = path_stats(&path3()).unwrap();
        assert!((p.mean - 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(p.diameter, 2);

        // Star K_{1,3}: 3 pairs at distance 1, 3 at distance 2 → 1.5.
        let s = path_stats(&star4()).unwrap();
        assert_eq!(s.mean, 1.5);
        assert_eq!(s.diameter, 2);

        let p4 = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)], None).unwrap();
        assert_eq!(path_stats(&p4).unwrap().diameter, 3);
    }

    #[test]
    fn disconnected_graph_names_a_pair() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (2, 3)], None).unwrap();
        match path_stats(&g).unwrap_err() {
            Error::Disconnected { a, b, .. } => {
                assert_eq!(a, 0);
                assert_eq!(b, 2);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn sampled_paths_match_exact_on_full_sample() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], None).unwrap();
        let exact = path_stats(&g).unwrap();
        let sampled = path_stats_sampled(&g, 5, 7).unwrap();
        assert_eq!(exact.mean, sampled.mean);
        assert_eq!(exact.diameter, sampled.diameter);
    }

    #[test]
    fn clustering_hand_cases() {
        assert_eq!(clustering_coefficient(&triangle()), 1.0);
        assert_eq!(clustering_coefficient(&path3()), 0.0);

        // 4-cycle with one chord: locals 2/3, 1, 2/3, 1 → average 5/6.
        let g =
            SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)], None).unwrap();
        assert!((clustering_coefficient(&g) - 5.0 / 6.0).abs() < 1e-15);

        // Excluding the k<2 leaves of a star leaves only the hub, C = 0.
        assert_eq!(clustering_coefficient_with(&star4(), true), 0.0);
        // Triangle plus pendant: average over all 4 nodes vs over the k≥2 ones.
        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)], None).unwrap();
        let all = clustering_coefficient(&g);
        let filtered = clustering_coefficient_with(&g, true);
        assert!((all - (1.0 + 1.0 + 1.0 / 3.0) / 4.0).abs() < 1e-15);
        assert!((filtered - (1.0 + 1.0 + 1.0 / 3.0) / 3.0).abs() < 1e-15);
    }

    #[test]
    fn c_rand_complete_graph_is_one() {
        let b = c_rand_baseline(5, 10, 3, 99).unwrap();
        assert_eq!(b.mean, 1.0);
        assert_eq!(b.std, 0.0);
    }

    #[test]
    fn c_rand_rejects_infeasible_m() {
        assert!(matches!(
            c_rand_baseline(4, 7, 2, 1),
            Err(Error::InfeasibleEdgeCount { .. })
        ));
    }

    #[test]
    fn degree_distribution_cases() {
        let d = degree_distribution(&triangle());
        assert_eq!(d.counts(), &BTreeMap::from([(2, 3)]));
        let d = degree_distribution(&star4());
        assert_eq!(d.counts(), &BTreeMap::from([(1, 3), (3, 1)]));
        assert_eq!(d.fraction(1), 0.75);
        // Handshake identity on an arbitrary graph.
        let g = SimpleGraph::from_edges(6, [(0, 1), (0, 2), (3, 4), (1, 2)], None).unwrap();
        let d = degree_distribution(&g);
        let total: u64 = d.counts().iter().map(|(&k, &c)| k as u64 * c).sum();
        assert_eq!(total, 2 * g.n_edges() as u64);
        assert_eq!(d.count(0), 1);
    }

    #[test]
    fn degree_csv_roundtrip() {
        let d = degree_distribution(&star4());
        let mut buf = Vec::new();
        d.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("k,count,fraction\n1,3,0.75\n"));
        let back = DegreeDistribution::read_csv(&buf[..]).unwrap();
        assert_eq!(back, d);
    }

    /// Integer counts proportional to k^−γ; the scale is large enough that
    /// rounding error is far below the fit tolerances.
    fn synthetic_power_law(gamma: f64, k_min: u32, k_max: u32) -> DegreeDistribution {
        let mut counts = BTreeMap::new();
        for k in k_min..=k_max {
            let c = (1e12 * (k as f64).powf(-gamma)).round() as u64;
            counts.insert(k, c);
        }
        DegreeDistribution::from_counts(counts).unwrap()
    }

    #[test]
    fn fit_recovers_synthetic_exponents() {
        for gamma in [1.04, 1.05, 2.0] {
            let d = synthetic_power_law(gamma, 1, 100);
            let fit = fit_power_law(&d, 1, 100, Binning::Raw).unwrap();
            assert!(
                (fit.gamma - gamma).abs() < 0.02,
                "gamma {gamma}: fitted {}",
                fit.gamma
            );
            assert!(fit.r_squared > 0.999);
            assert!(fit.stderr >= 0.0);
        }
    }

    #[test]
    fn fit_uniform_histogram_is_flat() {
        let counts: BTreeMap<u32, u64> = (1..=50).map(|k| (k, 1000)).collect();
        let d = DegreeDistribution::from_counts(counts).unwrap();
        let raw = fit_power_law(&d, 1, 50, Binning::Raw).unwrap();
        assert!(raw.gamma.abs() < 1e-12);
        assert_eq!(raw.r_squared, 1.0);
        // Spanned-width normalization keeps log bins flat too.
        let log = fit_power_law(&d, 1, 50, Binning::Log { base: 2.0 }).unwrap();
        assert!(log.gamma.abs() < 1e-12);
    }

    #[test]
    fn log_binning_recovers_exponent_within_tolerance() {
        let d = synthetic_power_law(2.0, 1, 512);
        let fit = fit_power_law(&d, 1, 512, Binning::Log { base: 2.0 }).unwrap();
        assert!((fit.gamma - 2.0).abs() < 0.1, "fitted {}", fit.gamma);
    }

    #[test]
    fn fit_is_invariant_under_count_scaling() {
        let d = synthetic_power_law(1.5, 2, 60);
        let scaled = DegreeDistribution::from_counts(
            d.counts().iter().map(|(&k, &c)| (k, c * 7)).collect(),
        )
        .unwrap();
        let a = fit_power_law(&d, 2, 60, Binning::Raw).unwrap();
        let b = fit_power_law(&scaled, 2, 60, Binning::Raw).unwrap();
        assert_eq!(a.gamma, b.gamma);
        assert_eq!(a.r_squared, b.r_squared);
    }

    #[test]
    fn fit_window_errors() {
        let d = synthetic_power_law(2.0, 5, 10);
        assert!(matches!(
            fit_power_law(&d, 20, 40, Binning::Raw),
            Err(Error::EmptyFitWindow { .. })
        ));
        assert!(matches!(
            fit_power_law(&d, 5, 6, Binning::Raw),
            Err(Error::TooFewBins { found: 2, .. })
        ));
        assert!(fit_power_law(&d, 5, 4, Binning::Raw).is_err());
        assert!(fit_power_law(&d, 0, 10, Binning::Raw).is_err());
        assert!(fit_power_law(&d, 5, 10, Binning::Log { base: 1.0 }).is_err());
    }

    #[test]
    fn metrics_bundle_for_triangle() {
        let m = network_metrics(&triangle(), &MetricsOptions::default()).unwrap();
        assert_eq!(m.avg_degree, 2.0);
        assert_eq!(m.mean_path_length, 1.0);
        assert_eq!(m.diameter, 1);
        assert_eq!(m.clustering, 1.0);
        assert!(m.c_rand.is_none());
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"avg_degree\":2.0"));
        assert!(!json.contains("c_rand"));
    }
}
