//! Seeded random-graph models and Monte Carlo estimation of `eps`.
//!
//! Three models:
//!
//! - `Gnp`: every one of the `C(d,2)` vertex pairs is an edge independently
//!   with probability `p`;
//! - `SubgraphP`: only edges of a host graph are eligible, each kept with
//!   probability `p`;
//! - `ComplementBipartite`: the complete graph minus a `SubgraphP` draw on
//!   the balanced complete bipartite graph with parts `{1..d/2}` and
//!   `{d/2+1..d}`. This is the model whose expected `eps` has an exact
//!   closed form, with the optimal removal probability at `3 - sqrt(5)`.
//!
//! Sampling is a pure function of `(seed, index)`: each sample owns a
//! SplitMix64 stream derived from the pair, so parallel evaluation order
//! cannot change any report. Pair slots are always visited in lexicographic
//! order within a sample.

use crate::epsilon;
use crate::graph::Graph;
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum RandomError {
    #[error("probability must lie strictly inside (0, 1)")]
    InvalidProbability,
    #[error("model requires at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("complement-bipartite model requires an even vertex count, got {0}")]
    OddVertexCount(usize),
    #[error("subgraph model requires a host graph on d vertices")]
    MissingHost,
    #[error("host graph has {host} vertices, spec says {d}")]
    HostMismatch { host: usize, d: usize },
    #[error("sample index {index} outside 0..{samples}")]
    IndexOutOfRange { index: usize, samples: usize },
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Gnp,
    SubgraphP,
    ComplementBipartite,
}

/// A fully pinned sampling plan; two equal specs generate identical graphs.
#[derive(Debug, Clone)]
pub struct RandomModelSpec {
    pub kind: ModelKind,
    pub d: usize,
    pub p: f64,
    /// Host graph for [`ModelKind::SubgraphP`]; ignored otherwise.
    pub host: Option<Graph>,
    pub seed: u64,
    pub samples: usize,
}

impl RandomModelSpec {
    pub fn gnp(d: usize, p: f64, seed: u64, samples: usize) -> Self {
        Self { kind: ModelKind::Gnp, d, p, host: None, seed, samples }
    }

    pub fn complement_bipartite(d: usize, p: f64, seed: u64, samples: usize) -> Self {
        Self { kind: ModelKind::ComplementBipartite, d, p, host: None, seed, samples }
    }

    pub fn subgraph_p(host: Graph, p: f64, seed: u64, samples: usize) -> Self {
        let d = host.vertex_count();
        Self { kind: ModelKind::SubgraphP, d, p, host: Some(host), seed, samples }
    }

    pub fn validate(&self) -> Result<(), RandomError> {
        if !(self.p > 0.0 && self.p < 1.0) {
            return Err(RandomError::InvalidProbability);
        }
        if self.d < 3 {
            return Err(RandomError::TooFewVertices { min: 3, got: self.d });
        }
        if self.samples == 0 {
            return Err(RandomError::TooFewSamples(0));
        }
        match self.kind {
            ModelKind::ComplementBipartite if self.d % 2 != 0 => {
                Err(RandomError::OddVertexCount(self.d))
            }
            ModelKind::SubgraphP => match &self.host {
                None => Err(RandomError::MissingHost),
                Some(h) if h.vertex_count() != self.d => Err(RandomError::HostMismatch {
                    host: h.vertex_count(),
                    d: self.d,
                }),
                Some(_) => Ok(()),
            },
            _ => Ok(()),
        }
    }
}

/// Draws sample number `index` of the plan. Deterministic in
/// `(spec.seed, index)` and independent of any other sample.
pub fn sample(spec: &RandomModelSpec, index: usize) -> Result<Graph, RandomError> {
    spec.validate()?;
    if index >= spec.samples {
        return Err(RandomError::IndexOutOfRange { index, samples: spec.samples });
    }
    let mut rng = SplitMix64::stream(spec.seed, index as u64);
    let d = spec.d;
    Ok(match spec.kind {
        ModelKind::Gnp => {
            let mut g = Graph::empty(d).expect("validated");
            for i in 0..d {
                for j in (i + 1)..d {
                    if rng.bernoulli(spec.p) {
                        g.set_edge0(i, j);
                    }
                }
            }
            g
        }
        ModelKind::SubgraphP => {
            let host = spec.host.as_ref().expect("validated");
            let mut g = Graph::empty(d).expect("validated");
            for e in host.edges() {
                if rng.bernoulli(spec.p) {
                    g.set_edge0(e.u() - 1, e.v() - 1);
                }
            }
            g
        }
        ModelKind::ComplementBipartite => {
            let m = d / 2;
            let mut g = Graph::complete(d).expect("validated");
            for i in 0..m {
                for j in m..d {
                    if rng.bernoulli(spec.p) {
                        g.clear_edge0(i, j);
                    }
                }
            }
            g
        }
    })
}

/// Exact expectation of `eps` for the complement-bipartite model on `d`
/// vertices with removal probability `p`. With `m = d/2` and `q = 1 - p`:
///
/// ```text
/// m(m-1)(m-2) + 2m^2(m-1)q + m^2(m-1)q^2      (pairs sharing a vertex)
/// + C(m,2)^2 (1 - q^2)^2                      (two within-part edges)
/// + m^2(m-1)(m-2) q p^2                       (one cross, one within edge)
/// ```
///
/// Every other disjoint-pair configuration closes a 4-cycle with
/// probability one, so the five terms are the whole expectation.
pub fn exact_expected_epsilon_cb(d: usize, p: f64) -> Result<f64, RandomError> {
    if d % 2 != 0 {
        return Err(RandomError::OddVertexCount(d));
    }
    if d < 4 {
        return Err(RandomError::TooFewVertices { min: 4, got: d });
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(RandomError::InvalidProbability);
    }
    let m = (d / 2) as f64;
    let q = 1.0 - p;
    let shared = m * (m - 1.0) * (m - 2.0)
        + 2.0 * m * m * (m - 1.0) * q
        + m * m * (m - 1.0) * q * q;
    let choose2m = m * (m - 1.0) / 2.0;
    let case1 = choose2m * choose2m * (1.0 - q * q).powi(2);
    let case2 = m * m * (m - 1.0) * (m - 2.0) * q * p * p;
    Ok(shared + case1 + case2)
}

/// The `d^4` coefficient `p^2 (p^2 - 8p + 8) / 64` of the expectation above,
/// evaluated over a grid. Accepts `p` in `(0, 1]`; the polynomial is the
/// limit value at `p = 1` even though the model itself needs `p < 1`. The
/// maximum over the interval sits at `p = 3 - sqrt(5)`.
pub fn coefficient_curve(p_grid: &[f64]) -> Result<Vec<(f64, f64)>, RandomError> {
    p_grid
        .iter()
        .map(|&p| {
            if !(p > 0.0 && p <= 1.0) {
                return Err(RandomError::InvalidProbability);
            }
            Ok((p, p * p * (p * p - 8.0 * p + 8.0) / 64.0))
        })
        .collect()
}

/// Monte Carlo estimate of `eps` over a sampling plan.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateReport {
    pub mean: f64,
    /// Sample standard deviation divided by sqrt(samples).
    pub std_error: f64,
    pub samples: usize,
    /// `mean / d^4`.
    pub normalized: f64,
    /// Present for the complement-bipartite model only.
    pub exact_expectation: Option<f64>,
}

/// Scores every sample with the direct pairwise count and reports mean,
/// standard error and the `d^4`-normalized mean.
///
/// Samples are generated and scored independently by index (in parallel
/// when enabled); the reduction always runs in index order, so reports are
/// bit-identical for any worker count. A sample with fewer than two edges
/// contributes 0.
pub fn monte_carlo(spec: &RandomModelSpec) -> Result<EstimateReport, RandomError> {
    spec.validate()?;
    if spec.samples < 2 {
        return Err(RandomError::TooFewSamples(spec.samples));
    }

    let score = |i: usize| -> f64 {
        let g = sample(spec, i).expect("index in range, spec validated");
        match epsilon::epsilon_direct(&g) {
            Ok(b) => b.epsilon as f64,
            Err(_) => 0.0, // edgeless sample
        }
    };

    #[cfg(feature = "parallel")]
    let values: Vec<f64> = {
        use rayon::prelude::*;
        (0..spec.samples).into_par_iter().map(score).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let values: Vec<f64> = (0..spec.samples).map(score).collect();

    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    let std_error = (ss / (n - 1.0)).sqrt() / n.sqrt();

    let d4 = (spec.d as f64).powi(4);
    let exact = match spec.kind {
        ModelKind::ComplementBipartite => Some(exact_expected_epsilon_cb(spec.d, spec.p)?),
        _ => None,
    };
    Ok(EstimateReport {
        mean,
        std_error,
        samples: spec.samples,
        normalized: mean / d4,
        exact_expectation: exact,
    })
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::epsilon::epsilon_direct;

    pub const P_STAR: f64 = 0.763_932_022_500_210_3; // 3 - sqrt(5)

    #[test]
    fn samples_are_reproducible() {
        let spec = RandomModelSpec::gnp(12, 0.4, 99, 10);
        for i in 0..10 {
            assert_eq!(sample(&spec, i).unwrap(), sample(&spec, i).unwrap());
        }
        let cb = RandomModelSpec::complement_bipartite(10, P_STAR, 7, 4);
        assert_eq!(sample(&cb, 3).unwrap(), sample(&cb, 3).unwrap());
        assert_ne!(sample(&cb, 0).unwrap(), sample(&cb, 1).unwrap());
    }

    #[test]
    fn gnp_tiny_p_is_almost_surely_edgeless() {
        let spec = RandomModelSpec::gnp(10, 1e-9, 2024, 1000);
        let edgeless = (0..1000)
            .filter(|&i| sample(&spec, i).unwrap().edge_count() == 0)
            .count();
        assert!(edgeless >= 999, "{edgeless}");
    }

    #[test]
    fn subgraph_p_respects_host() {
        let host = Graph::complete_bipartite(3, 3).unwrap();
        let spec = RandomModelSpec::subgraph_p(host, 0.7, 5, 50);
        for i in 0..50 {
            let g = sample(&spec, i).unwrap();
            for e in g.edges() {
                assert!(e.u() <= 3 && e.v() >= 4, "edge {e} inside a part");
            }
        }
    }

    #[test]
    fn complement_bipartite_keeps_within_part_edges() {
        let spec = RandomModelSpec::complement_bipartite(12, 0.9, 31, 20);
        for i in 0..20 {
            let g = sample(&spec, i).unwrap();
            for a in 1..=6usize {
                for b in (a + 1)..=6 {
                    assert!(g.has_edge(a, b));
                    assert!(g.has_edge(a + 6, b + 6));
                }
            }
        }
    }

    #[test]
    fn cb_low_p_approaches_complete() {
        let spec = RandomModelSpec::complement_bipartite(10, 1e-9, 4, 100);
        let complete = (0..100)
            .filter(|&i| sample(&spec, i).unwrap().edge_count() == 45)
            .count();
        assert!(complete >= 99);
    }

    #[test]
    fn spec_validation() {
        assert!(RandomModelSpec::gnp(10, 0.0, 0, 1).validate().is_err());
        assert!(RandomModelSpec::gnp(10, 1.0, 0, 1).validate().is_err());
        assert!(RandomModelSpec::gnp(2, 0.5, 0, 1).validate().is_err());
        assert!(RandomModelSpec::complement_bipartite(9, 0.5, 0, 1)
            .validate()
            .is_err());
        let bad_host = RandomModelSpec {
            kind: ModelKind::SubgraphP,
            d: 5,
            p: 0.5,
            host: Some(Graph::complete(4).unwrap()),
            seed: 0,
            samples: 1,
        };
        assert_eq!(
            bad_host.validate(),
            Err(RandomError::HostMismatch { host: 4, d: 5 })
        );
        let spec = RandomModelSpec::gnp(10, 0.5, 0, 3);
        assert!(matches!(
            sample(&spec, 3),
            Err(RandomError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn exact_expectation_p_to_one_limit() {
        // at p -> 1 every cross edge vanishes: two disjoint cliques remain
        for d in [8usize, 12] {
            let m = d / 2;
            let expect = (m * (m - 1) * (m - 2)) as f64
                + ((m * (m - 1) / 2) as f64).powi(2);
            let got = exact_expected_epsilon_cb(d, 1.0 - 1e-12).unwrap();
            assert!((got - expect).abs() < 1e-5, "d={d}: {got} vs {expect}");

            // the same number from the direct count on the limit graph
            let g = Graph::complete(d)
                .unwrap()
                .subtract(
                    &Graph::complete_bipartite(m, m).unwrap(),
                    &(1..=d).collect::<Vec<_>>(),
                )
                .unwrap();
            assert_eq!(epsilon_direct(&g).unwrap().epsilon as f64, expect);
        }
    }

    #[test]
    fn leading_coefficient_identity() {
        // (1-q^2)^2/64 + q p^2/16 == p^2(p^2-8p+8)/64 for q = 1-p
        for k in 1..100 {
            let p = k as f64 / 100.0;
            let q = 1.0 - p;
            let lhs = (1.0 - q * q).powi(2) / 64.0 + q * p * p / 16.0;
            let rhs = p * p * (p * p - 8.0 * p + 8.0) / 64.0;
            assert!((lhs - rhs).abs() < 1e-15, "p={p}");
        }
        let at_star = coefficient_curve(&[P_STAR]).unwrap()[0].1;
        let expect = (5.0 * 5f64.sqrt() - 11.0) / 8.0;
        assert!((at_star - expect).abs() < 1e-15);
        assert!((at_star - 0.022_542_5).abs() < 5e-8);
        assert_eq!(coefficient_curve(&[1.0]).unwrap()[0].1, 1.0 / 64.0);
        assert!(coefficient_curve(&[0.0]).is_err());
        assert!(coefficient_curve(&[1.1]).is_err());
    }

    #[test]
    fn coefficient_argmax_on_fine_grid() {
        let mut best = (0.0, f64::MIN);
        let mut p = 1e-6;
        while p < 1.0 {
            let c = p * p * (p * p - 8.0 * p + 8.0) / 64.0;
            if c > best.1 {
                best = (p, c);
            }
            p += 1e-6;
        }
        assert!((best.0 - P_STAR).abs() < 1e-5, "argmax at {}", best.0);
    }

    #[test]
    fn gnp_edge_density_tracks_p() {
        let d = 12;
        let p = 0.3;
        let spec = RandomModelSpec::gnp(d, p, 777, 1000);
        let slots = (d * (d - 1) / 2) as f64;
        let total: usize = (0..1000)
            .map(|i| sample(&spec, i).unwrap().edge_count())
            .sum();
        let density = total as f64 / (slots * 1000.0);
        let se = (p * (1.0 - p) / (slots * 1000.0)).sqrt();
        assert!(
            (density - p).abs() <= 5.0 * se,
            "density {density} vs p {p} (se {se})"
        );
    }

    #[test]
    fn monte_carlo_matches_exact_expectation_small() {
        let spec = RandomModelSpec::complement_bipartite(20, P_STAR, 42, 200);
        let report = monte_carlo(&spec).unwrap();
        let exact = report.exact_expectation.unwrap();
        assert!(
            (report.mean - exact).abs() <= 4.0 * report.std_error,
            "mean {} exact {} se {}",
            report.mean,
            exact,
            report.std_error
        );
        assert_eq!(report.samples, 200);
        assert!(report.std_error > 0.0);
        assert!((report.normalized - report.mean / 160_000.0).abs() < 1e-12);
    }

    #[test]
    fn monte_carlo_requires_two_samples() {
        let spec = RandomModelSpec::gnp(10, 0.5, 0, 1);
        assert_eq!(monte_carlo(&spec), Err(RandomError::TooFewSamples(1)));
    }
}
