//! Every route to `eps(G)`, the number of 1-faces of the edge polytope.
//!
//! A pair of distinct edges spans a 1-face exactly when the edges share a
//! vertex, or are disjoint and the induced subgraph on their four endpoints
//! contains no 4-cycle. [`epsilon_direct`] scans edge pairs with that
//! criterion; [`epsilon_via_complement`] instead evaluates the closed
//! complement-census formula
//!
//! ```text
//! eps(G) = sum_i C(d - 1 - deg_H(i), 2) + a(H) + b(H) + c(H)
//!        = eps(K_d) + (1/2) sum_i deg_H(i)^2 - (2d - 3)|E(H)| + a + b + c
//! ```
//!
//! with `H` the complement of `G`; both displayed forms are computed on
//! every call and cross-asserted. [`epsilon_by_components`] splits `H` into
//! its edge-bearing connected components and adds the per-component
//! deficits, and [`epsilon_linear`] extrapolates `eps(K_d - H) - eps(K_d)`
//! linearly in `d` with slope `psi(H) - 2|E(H)|`.
//!
//! Closed forms cover complete-bipartite removals and the two-block family
//! behind the quartic `g(a)`; [`triangle_upper_bound`] gives the exact
//! rational triangle-weighted upper bound; and
//! [`max_complete_bipartite_components`] maximizes over complements whose
//! components are all complete bipartite.
//!
//! All counts accumulate in 128 bits, and rational quantities stay exact.

use crate::census::census;
use crate::graph::Graph;
use crate::rational::Rational;
use crate::util::choose2_u128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum EpsilonError {
    #[error("epsilon is undefined for a graph with no edges")]
    EmptyGraph,
    #[error("parts m={m}, n={n} need m + n <= d = {d}")]
    PartsTooLarge { m: usize, n: usize, d: usize },
    #[error("part sizes must be at least 1")]
    PartTooSmall,
    #[error("vertex count must be even, got {0}")]
    OddVertexCount(usize),
    #[error("a*d = {num}*{d}/{den} is not an integer part size")]
    NonIntegralParts { num: u64, den: u64, d: usize },
    #[error("a must lie in [0, 1/2]")]
    AOutOfRange,
    #[error("d = {d} outside supported range {min}..={max}")]
    DOutOfRange { d: usize, min: usize, max: usize },
}

/// `eps(K_d) = d(d-1)(d-2)/2`.
pub fn epsilon_kd(d: usize) -> u128 {
    let d = d as u128;
    d * d.saturating_sub(1) * d.saturating_sub(2) / 2
}

/// `eps(K_{m,n}) = mn(m+n-2)/2`.
pub fn epsilon_kmn(m: usize, n: usize) -> u128 {
    let (m, n) = (m as u128, n as u128);
    m * n * (m + n - 2) / 2
}

// ============================================================================
// Direct pairwise count
// ============================================================================

/// `eps(G)` split into the two kinds of contributing edge pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonBreakdown {
    /// Pairs of edges sharing a vertex; always contribute.
    pub shared: u128,
    /// Disjoint pairs whose four endpoints induce no 4-cycle.
    pub disjoint_ok: u128,
    pub epsilon: u128,
}

/// Disjoint-pair test: given that `{i,j}` and `{k,l}` are edges, the induced
/// subgraph on the four endpoints contains a 4-cycle iff one of the two
/// crossing perfect matchings is present. (Any 4-cycle on four vertices is a
/// union of two of the three perfect matchings of `K_4`, and `{ik, jl} ∪
/// {il, jk}` contains both crossing matchings, so the two checks below cover
/// every case.)
#[inline]
fn disjoint_pair_counts(g: &Graph, i: usize, j: usize, k: usize, l: usize) -> bool {
    !((g.has_edge0(i, k) && g.has_edge0(j, l)) || (g.has_edge0(i, l) && g.has_edge0(j, k)))
}

fn pair_scan_range(g: &Graph, edges: &[(u32, u32)], range: std::ops::Range<usize>) -> (u128, u128) {
    let mut shared = 0u128;
    let mut disjoint_ok = 0u128;
    for x in range {
        let (i, j) = edges[x];
        for &(k, l) in &edges[x + 1..] {
            if i == k || i == l || j == k || j == l {
                shared += 1;
            } else if disjoint_pair_counts(g, i as usize, j as usize, k as usize, l as usize) {
                disjoint_ok += 1;
            }
        }
    }
    (shared, disjoint_ok)
}

/// Counts contributing pairs of distinct edges directly.
///
/// Rejects edgeless graphs; a single-edge graph has no pairs and scores 0.
pub fn epsilon_direct(g: &Graph) -> Result<EpsilonBreakdown, EpsilonError> {
    let edges = g.edge_pairs0();
    if edges.is_empty() {
        return Err(EpsilonError::EmptyGraph);
    }
    let m = edges.len();

    // chunk the triangular loop by first-edge index; sums are integers, so
    // the reduction order cannot matter. Small graphs stay sequential.
    #[cfg(feature = "parallel")]
    let (shared, disjoint_ok) = if m >= 128 {
        use rayon::prelude::*;
        let chunk = (m / (rayon::current_num_threads() * 8)).max(16);
        (0..m)
            .into_par_iter()
            .step_by(chunk)
            .map(|lo| pair_scan_range(g, &edges, lo..(lo + chunk).min(m)))
            .reduce(|| (0, 0), |p, q| (p.0 + q.0, p.1 + q.1))
    } else {
        pair_scan_range(g, &edges, 0..m)
    };
    #[cfg(not(feature = "parallel"))]
    let (shared, disjoint_ok) = pair_scan_range(g, &edges, 0..m);

    debug_assert_eq!(
        shared,
        (0..g.vertex_count())
            .map(|i| choose2_u128(g.degree0(i) as u128))
            .sum::<u128>()
    );
    Ok(EpsilonBreakdown {
        shared,
        disjoint_ok,
        epsilon: shared + disjoint_ok,
    })
}

// ============================================================================
// Complement-census formula
// ============================================================================

/// `eps(K_d - H)` for `H` on the full vertex set `[d]`, via the census
/// formula. Total (an edgeless `H` yields `eps(K_d)`); panics if the two
/// displayed forms of the formula ever disagree.
pub(crate) fn epsilon_of_kd_minus(h: &Graph) -> u128 {
    let d = h.vertex_count();
    let cens = census(h);
    let abc = (cens.a + cens.b + cens.c) as u128;

    let form1: u128 = (0..d)
        .map(|i| choose2_u128((d - 1 - h.degree0(i)) as u128))
        .sum::<u128>()
        + abc;

    debug_assert_eq!(cens.sum_deg_sq % 2, 0);
    let form2: i128 = epsilon_kd(d) as i128 + (cens.sum_deg_sq / 2) as i128
        - (2 * d as i128 - 3) * cens.edge_count as i128
        + abc as i128;

    assert!(
        form2 >= 0 && form1 == form2 as u128,
        "complement-census forms disagree: {form1} vs {form2}"
    );
    form1
}

/// `eps(G)` through the complement-census formula.
pub fn epsilon_via_complement(g: &Graph) -> Result<u128, EpsilonError> {
    if g.edge_count() == 0 {
        return Err(EpsilonError::EmptyGraph);
    }
    Ok(epsilon_of_kd_minus(&g.complement()))
}

/// `eps(G)` by additivity over the edge-bearing components of the
/// complement: `eps(K_d) - eps(G)` is the sum of the per-component deficits
/// `eps(K_d) - eps(K_d - H_j)`.
pub fn epsilon_by_components(g: &Graph) -> Result<u128, EpsilonError> {
    if g.edge_count() == 0 {
        return Err(EpsilonError::EmptyGraph);
    }
    let d = g.vertex_count();
    let h = g.complement();
    let kd = epsilon_kd(d) as i128;

    let h_edges = h.edges();
    let mut total = kd;
    for comp in h.connected_components() {
        if !comp.has_edges {
            continue;
        }
        let mut inside = vec![false; d + 1];
        for &v in &comp.vertices {
            inside[v] = true;
        }
        let sub_edges: Vec<(usize, usize)> = h_edges
            .iter()
            .filter(|e| inside[e.u()])
            .map(|e| (e.u(), e.v()))
            .collect();
        let component_h = Graph::from_edges(d, &sub_edges).expect("subset of valid edges");
        total -= kd - epsilon_of_kd_minus(&component_h) as i128;
    }
    debug_assert!(total >= 0);
    Ok(total as u128)
}

// ============================================================================
// Linear extrapolation
// ============================================================================

/// The linear polynomial `phi(d) = eps(K_d - H) - eps(K_d)` for `d` at least
/// the vertex count of `H`; its slope is `psi(H) - 2|E(H)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearForm {
    pub slope: i128,
    pub anchor_d: usize,
    pub anchor_value: i128,
}

impl LinearForm {
    /// Value at `d`; only meaningful for `d >= anchor_d`.
    pub fn eval(&self, d: usize) -> i128 {
        assert!(d >= self.anchor_d, "form anchored at {}", self.anchor_d);
        self.slope * (d - self.anchor_d) as i128 + self.anchor_value
    }
}

/// Builds the linear form for `H = h` anchored at `r = |V(h)|`.
///
/// An edgeless `h` yields the zero form: removing nothing changes nothing,
/// identically in `d`.
pub fn epsilon_linear(h: &Graph) -> LinearForm {
    let r = h.vertex_count();
    if h.edge_count() == 0 {
        return LinearForm {
            slope: 0,
            anchor_d: r,
            anchor_value: 0,
        };
    }
    let cens = census(h);
    let slope = cens.psi as i128 - 2 * cens.edge_count as i128;
    let anchor_value = epsilon_of_kd_minus(h) as i128 - epsilon_kd(r) as i128;
    LinearForm {
        slope,
        anchor_d: r,
        anchor_value,
    }
}

// ============================================================================
// Closed forms
// ============================================================================

/// `eps(K_d - K_{m,n})` in exact integer arithmetic:
///
/// ```text
/// eps(K_d) + (1/2) mn(m+n-6) d - (1/4) mn(3mn + 2m^2 + 2n^2 - 5m - 5n - 13)
/// ```
///
/// The bracketed combination is provably divisible by 4 once scaled, which
/// is asserted rather than rounded.
pub fn closed_kd_minus_kmn(d: usize, m: usize, n: usize) -> Result<u128, EpsilonError> {
    if m < 1 || n < 1 {
        return Err(EpsilonError::PartTooSmall);
    }
    if m + n > d {
        return Err(EpsilonError::PartsTooLarge { m, n, d });
    }
    let (di, mi, ni) = (d as i128, m as i128, n as i128);
    let scaled = 2 * mi * ni * (mi + ni - 6) * di
        - mi * ni * (3 * mi * ni + 2 * mi * mi + 2 * ni * ni - 5 * mi - 5 * ni - 13);
    assert_eq!(scaled.rem_euclid(4), 0, "closed form must be integral");
    let value = epsilon_kd(d) as i128 + scaled / 4;
    debug_assert!(value >= 0);
    Ok(value as u128)
}

/// `eps(K_d - K_{ad,ad} - K_{bd,bd})` with `b = 1/2 - a`, the two-block
/// family whose degree-4 coefficient in `d` is the quartic `g(a)`.
///
/// `a` is passed as the exact fraction `a_num / a_den`; both `a d` and
/// `(1/2 - a) d` must be integers (no silent rounding) and `d` must be even.
pub fn closed_two_bipartite(d: usize, a_num: u64, a_den: u64) -> Result<u128, EpsilonError> {
    if d % 2 != 0 || d == 0 {
        return Err(EpsilonError::OddVertexCount(d));
    }
    if a_den == 0 || 2 * a_num > a_den {
        return Err(EpsilonError::AOutOfRange);
    }
    if (a_num as u128 * d as u128) % a_den as u128 != 0 {
        return Err(EpsilonError::NonIntegralParts {
            num: a_num,
            den: a_den,
            d,
        });
    }
    let ad = (a_num as u128 * d as u128 / a_den as u128) as usize;
    let bd = d / 2 - ad;

    let kd = epsilon_kd(d) as i128;
    let mut total = kd;
    for s in [ad, bd] {
        if s >= 1 {
            total -= kd - closed_kd_minus_kmn(d, s, s)? as i128;
        }
    }
    debug_assert!(total >= 0);
    Ok(total as u128)
}

/// The quartic `g(a) = -7/2 a^4 + 7/2 a^3 - 9/8 a^2 + 1/8 a + 1/64` giving
/// the leading `d^4` coefficient of the two-block family.
pub fn g_of_a(a: f64) -> Result<f64, EpsilonError> {
    if !(0.0..=0.5).contains(&a) {
        return Err(EpsilonError::AOutOfRange);
    }
    Ok((((-3.5 * a + 3.5) * a - 1.125) * a + 0.125) * a + 1.0 / 64.0)
}

/// Both maximizers of `g` on `[0, 1/2]` and the maximum value `9/448`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GArgmax {
    pub a_minus: f64,
    pub a_plus: f64,
    pub max: f64,
}

pub fn g_argmax() -> GArgmax {
    let root = 21f64.sqrt();
    GArgmax {
        a_minus: (7.0 - root) / 28.0,
        a_plus: (7.0 + root) / 28.0,
        max: 9.0 / 448.0,
    }
}

// ============================================================================
// Triangle-weighted upper bound
// ============================================================================

/// Exact rational upper bound
/// `eps(G) <= eps(K_d) + (d^2-16d+29)/7 |E(H)| - 3/7 (d-8) k3(H)`
/// with `H` the complement of `G`. Equality holds when `H` is edgeless.
pub fn triangle_upper_bound(g: &Graph) -> Result<Rational, EpsilonError> {
    let d = g.vertex_count();
    if d < 3 {
        return Err(EpsilonError::DOutOfRange { d, min: 3, max: crate::graph::MAX_VERTICES });
    }
    let h = g.complement();
    let edges = h.edge_pairs0();
    let e_count = edges.len() as i128;
    let tri_incidences: u64 = edges
        .iter()
        .map(|&(i, j)| h.common_neighbors0(i as usize, j as usize) as u64)
        .sum();
    let k3 = (tri_incidences / 3) as i128;

    let di = d as i128;
    let num = 7 * epsilon_kd(d) as i128 + (di * di - 16 * di + 29) * e_count - 3 * (di - 8) * k3;
    Ok(Rational::new(num, 7))
}

// ============================================================================
// Optimum over complete-bipartite complement components
// ============================================================================

/// Maximizes `eps(K_d - ⊔ K_{m_i,n_i})` over all multisets of disjoint
/// complete-bipartite blocks fitting in `d` vertices, by exhaustive
/// enumeration of part-size multisets; supported for `3 <= d <= 40`.
///
/// Returns the maximum and the lexicographically smallest sorted
/// configuration attaining it (the empty configuration means `K_d` itself
/// is optimal).
pub fn max_complete_bipartite_components(
    d: usize,
) -> Result<(u128, Vec<(usize, usize)>), EpsilonError> {
    if !(3..=40).contains(&d) {
        return Err(EpsilonError::DOutOfRange { d, min: 3, max: 40 });
    }
    let kd = epsilon_kd(d) as i128;
    // deficit < 0 means the removal beats K_d
    let mut pairs: Vec<(usize, usize, i128)> = Vec::new();
    for m in 1..=d {
        for n in m..=(d - m) {
            let deficit = kd - closed_kd_minus_kmn(d, m, n).expect("m+n <= d") as i128;
            pairs.push((m, n, deficit));
        }
    }

    struct Dfs<'a> {
        pairs: &'a [(usize, usize, i128)],
        best: i128,
        best_cfg: Vec<(usize, usize)>,
        cfg: Vec<(usize, usize)>,
    }
    impl Dfs<'_> {
        fn run(&mut self, start: usize, remaining: usize, deficit: i128) {
            if -deficit > self.best || (-deficit == self.best && self.cfg < self.best_cfg) {
                self.best = -deficit;
                self.best_cfg = self.cfg.clone();
            }
            for idx in start..self.pairs.len() {
                let (m, n, pair_deficit) = self.pairs[idx];
                if m + n <= remaining {
                    self.cfg.push((m, n));
                    self.run(idx, remaining - (m + n), deficit + pair_deficit);
                    self.cfg.pop();
                }
            }
        }
    }

    let mut dfs = Dfs {
        pairs: &pairs,
        best: i128::MIN,
        best_cfg: Vec::new(),
        cfg: Vec::new(),
    };
    dfs.run(0, d, 0);

    let value = kd + dfs.best;
    debug_assert!(value >= 0);
    Ok((value as u128, dfs.best_cfg))
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixture_g_prime;
    use crate::rng::SplitMix64;

    fn kd_minus_kmn(d: usize, m: usize, n: usize) -> Graph {
        let embedding: Vec<usize> = (1..=(m + n)).collect();
        Graph::complete(d)
            .unwrap()
            .subtract(&Graph::complete_bipartite(m, n).unwrap(), &embedding)
            .unwrap()
    }

    #[test]
    fn direct_matches_kd_closed_form() {
        for d in 3..=14 {
            let got = epsilon_direct(&Graph::complete(d).unwrap()).unwrap();
            assert_eq!(got.epsilon, epsilon_kd(d), "d={d}");
            assert_eq!(got.disjoint_ok, 0, "disjoint pairs of K_d always close a 4-cycle");
        }
        assert_eq!(epsilon_kd(14), 1092);
        for d in [30, 50] {
            assert_eq!(
                epsilon_direct(&Graph::complete(d).unwrap()).unwrap().epsilon,
                epsilon_kd(d)
            );
        }
    }

    #[test]
    fn direct_matches_kmn_closed_form() {
        for m in 1..=6 {
            for n in m..=6 {
                if m + n < 3 {
                    continue;
                }
                let got = epsilon_direct(&Graph::complete_bipartite(m, n).unwrap()).unwrap();
                assert_eq!(got.epsilon, epsilon_kmn(m, n), "m={m} n={n}");
            }
        }
        assert_eq!(epsilon_kmn(5, 5), 100);
    }

    #[test]
    fn direct_small_examples() {
        let got = epsilon_direct(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!((got.shared, got.disjoint_ok, got.epsilon), (4, 0, 4));

        let got = epsilon_direct(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(got.epsilon, 1);

        assert_eq!(
            epsilon_direct(&Graph::empty(5).unwrap()),
            Err(EpsilonError::EmptyGraph)
        );
        // a single edge has no pairs at all
        let single = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(epsilon_direct(&single).unwrap().epsilon, 0);
    }

    #[test]
    fn via_complement_examples() {
        let empty = Graph::empty(4).unwrap();
        assert_eq!(epsilon_via_complement(&empty), Err(EpsilonError::EmptyGraph));
        assert_eq!(epsilon_by_components(&empty), Err(EpsilonError::EmptyGraph));
        assert_eq!(
            epsilon_via_complement(&Graph::complete(5).unwrap()).unwrap(),
            30
        );
        assert_eq!(epsilon_via_complement(&kd_minus_kmn(14, 5, 5)).unwrap(), 1092);
        assert_eq!(epsilon_via_complement(&kd_minus_kmn(14, 4, 5)).unwrap(), 1092);
        assert_eq!(epsilon_via_complement(&fixture_g_prime()).unwrap(), 4203);
    }

    #[test]
    fn by_components_examples() {
        // one complement component: identical to the census route
        let g = kd_minus_kmn(10, 3, 4);
        assert_eq!(
            epsilon_by_components(&g).unwrap(),
            epsilon_via_complement(&g).unwrap()
        );

        // two disjoint blocks removed from K_20
        let k20 = Graph::complete(20).unwrap();
        let g = k20
            .subtract(
                &Graph::complete_bipartite(5, 5).unwrap(),
                &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
            )
            .unwrap()
            .subtract(
                &Graph::complete_bipartite(4, 4).unwrap(),
                &[11, 12, 13, 14, 15, 16, 17, 18],
            )
            .unwrap();
        assert_eq!(epsilon_by_components(&g).unwrap(), 3804);
        assert_eq!(epsilon_direct(&g).unwrap().epsilon, 3804);

        // complement of K_d has no edge-bearing components: empty sum
        assert_eq!(
            epsilon_by_components(&Graph::complete(9).unwrap()).unwrap(),
            epsilon_kd(9)
        );
    }

    #[test]
    fn triple_equivalence_on_random_graphs() {
        let mut rng = SplitMix64::new(0xE9A1);
        let mut tested = 0;
        while tested < 200 {
            let d = 3 + (rng.below(8) as usize);
            let p = rng.next_f64();
            let mut edges = Vec::new();
            for i in 1..=d {
                for j in (i + 1)..=d {
                    if rng.bernoulli(p) {
                        edges.push((i, j));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            let g = Graph::from_edges(d, &edges).unwrap();
            let direct = epsilon_direct(&g).unwrap().epsilon;
            assert_eq!(direct, epsilon_via_complement(&g).unwrap(), "{g:?}");
            assert_eq!(direct, epsilon_by_components(&g).unwrap(), "{g:?}");
            tested += 1;
        }
    }

    #[test]
    fn linear_form_examples() {
        let form = epsilon_linear(&Graph::complete_bipartite(5, 5).unwrap());
        assert_eq!(form.slope, 50);
        for d in 14..=20 {
            assert_eq!(form.eval(d), 50 * (d as i128 - 14));
        }

        let form = epsilon_linear(&Graph::complete_bipartite(4, 5).unwrap());
        assert_eq!(form.slope, 30);
        assert_eq!(form.eval(14), 0);

        // single edge: slope -2, checked against the direct count
        let form = epsilon_linear(&Graph::complete(2).unwrap());
        assert_eq!(form.slope, -2);
        for d in 3..=5 {
            let g = Graph::complete(d)
                .unwrap()
                .subtract(&Graph::complete(2).unwrap(), &[1, 2])
                .unwrap();
            let phi = epsilon_direct(&g).unwrap().epsilon as i128 - epsilon_kd(d) as i128;
            assert_eq!(form.eval(d), phi, "d={d}");
        }

        // degenerate: edgeless h gives the zero form
        let form = epsilon_linear(&Graph::empty(4).unwrap());
        assert_eq!((form.slope, form.anchor_value), (0, 0));
        assert_eq!(form.eval(10), 0);
    }

    #[test]
    fn closed_kmn_examples() {
        assert_eq!(closed_kd_minus_kmn(14, 5, 5).unwrap(), 1092);
        assert_eq!(closed_kd_minus_kmn(15, 5, 5).unwrap(), 1415);
        assert_eq!(closed_kd_minus_kmn(14, 4, 5).unwrap(), 1092);
        assert_eq!(
            closed_kd_minus_kmn(5, 3, 3),
            Err(EpsilonError::PartsTooLarge { m: 3, n: 3, d: 5 })
        );
        assert_eq!(closed_kd_minus_kmn(5, 0, 3), Err(EpsilonError::PartTooSmall));
    }

    #[test]
    fn closed_kmn_cross_checked_against_direct() {
        for d in 3usize..=12 {
            for m in 1..=d {
                for n in m..=(d.saturating_sub(m)) {
                    let g = kd_minus_kmn(d, m, n);
                    if g.edge_count() == 0 {
                        continue;
                    }
                    assert_eq!(
                        closed_kd_minus_kmn(d, m, n).unwrap(),
                        epsilon_direct(&g).unwrap().epsilon,
                        "d={d} m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn linear_form_matches_direct_for_all_small_connected_graphs() {
        // every connected labeled graph on up to 5 vertices, anchored at its
        // own vertex count and extrapolated 3 steps out
        for r in 2usize..=5 {
            let slots = r * (r - 1) / 2;
            for mask in 1..(1u64 << slots) {
                let mut edges = Vec::new();
                let mut s = 0;
                for i in 1..=r {
                    for j in (i + 1)..=r {
                        if mask >> s & 1 == 1 {
                            edges.push((i, j));
                        }
                        s += 1;
                    }
                }
                let h = Graph::from_edges(r, &edges).unwrap();
                if h.connected_components().len() != 1 {
                    continue;
                }
                let form = epsilon_linear(&h);
                for d in r..=(r + 3) {
                    let g = Graph::complete(d)
                        .unwrap()
                        .subtract(&h, &(1..=r).collect::<Vec<_>>())
                        .unwrap();
                    let eps = epsilon_direct(&g).map(|b| b.epsilon).unwrap_or(0);
                    let phi = eps as i128 - epsilon_kd(d) as i128;
                    assert_eq!(form.eval(d), phi, "h={h:?} at d={d}");
                }
            }
        }
    }

    #[test]
    fn removal_equality_set_at_14() {
        let mut ties = Vec::new();
        for m in 1..=13 {
            for n in m..=(14 - m) {
                let eps = closed_kd_minus_kmn(14, m, n).unwrap();
                assert!(eps <= 1092, "removal ({m},{n}) must not beat K_14");
                if eps == 1092 {
                    ties.push((m, n));
                }
            }
        }
        assert_eq!(ties, [(4, 5), (5, 5)]);
    }

    #[test]
    fn two_bipartite_examples() {
        // a = 0: single balanced block
        assert_eq!(
            closed_two_bipartite(12, 0, 1).unwrap(),
            closed_kd_minus_kmn(12, 6, 6).unwrap()
        );
        // d = 28, a = 1/4: both blocks are K_{7,7}; matches the direct count
        assert_eq!(closed_two_bipartite(28, 1, 4).unwrap(), 14434);
        let g = Graph::complete(28)
            .unwrap()
            .subtract(
                &Graph::complete_bipartite(7, 7).unwrap(),
                &(1..=14).collect::<Vec<_>>(),
            )
            .unwrap()
            .subtract(
                &Graph::complete_bipartite(7, 7).unwrap(),
                &(15..=28).collect::<Vec<_>>(),
            )
            .unwrap();
        assert_eq!(epsilon_direct(&g).unwrap().epsilon, 14434);

        assert_eq!(
            closed_two_bipartite(10, 1, 4),
            Err(EpsilonError::NonIntegralParts { num: 1, den: 4, d: 10 })
        );
        assert_eq!(
            closed_two_bipartite(13, 0, 1),
            Err(EpsilonError::OddVertexCount(13))
        );
        assert_eq!(closed_two_bipartite(12, 2, 3), Err(EpsilonError::AOutOfRange));
    }

    #[test]
    fn g_quartic_values() {
        assert_eq!(g_of_a(0.0).unwrap(), 1.0 / 64.0);
        assert_eq!(g_of_a(0.5).unwrap(), 1.0 / 64.0);
        assert_eq!(g_of_a(0.25).unwrap(), 9.0 / 512.0);
        assert!(g_of_a(0.6).is_err());
        assert!(g_of_a(-0.1).is_err());

        let opt = g_argmax();
        assert!((g_of_a(opt.a_minus).unwrap() - 9.0 / 448.0).abs() < 1e-12);
        assert!((g_of_a(opt.a_plus).unwrap() - 9.0 / 448.0).abs() < 1e-12);
        assert!((opt.a_minus - 0.086_336_582_3).abs() < 1e-9);
        assert!((opt.max - 9.0 / 448.0).abs() == 0.0);
        // the quartic is symmetric about 1/4
        assert!((opt.a_minus + opt.a_plus - 0.5).abs() < 1e-15);
    }

    #[test]
    fn triangle_bound_examples() {
        // empty complement: bound equals eps(K_d) exactly
        for d in [3, 5, 14] {
            let bound = triangle_upper_bound(&Graph::complete(d).unwrap()).unwrap();
            assert_eq!(bound, Rational::from_int(epsilon_kd(d) as i128));
        }

        // d = 14, complement a single edge: 1092 + 1/7
        let g = Graph::complete(14)
            .unwrap()
            .subtract(&Graph::complete(2).unwrap(), &[1, 2])
            .unwrap();
        assert_eq!(triangle_upper_bound(&g).unwrap(), Rational::new(7645, 7));

        assert!(triangle_upper_bound(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn triangle_bound_dominates_direct_on_random_graphs() {
        let mut rng = SplitMix64::new(0x16D0);
        for _ in 0..100 {
            let d = 5 + rng.below(10) as usize;
            let p = rng.next_f64();
            let mut edges = Vec::new();
            for i in 1..=d {
                for j in (i + 1)..=d {
                    if rng.bernoulli(p) {
                        edges.push((i, j));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            let g = Graph::from_edges(d, &edges).unwrap();
            let eps = epsilon_direct(&g).unwrap().epsilon;
            let bound = triangle_upper_bound(&g).unwrap();
            assert!(
                bound >= Rational::from_int(eps as i128),
                "bound {bound} < eps {eps} on {g:?}"
            );
        }
    }

    #[test]
    fn max_cb_components_examples() {
        assert_eq!(
            max_complete_bipartite_components(20).unwrap(),
            (4176, vec![(7, 8)])
        );
        assert_eq!(max_complete_bipartite_components(14).unwrap(), (1092, vec![]));
        assert_eq!(
            max_complete_bipartite_components(15).unwrap(),
            (1415, vec![(5, 5)])
        );
        assert!(max_complete_bipartite_components(2).is_err());
        assert!(max_complete_bipartite_components(41).is_err());
    }
}
