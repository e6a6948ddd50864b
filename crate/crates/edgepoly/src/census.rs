//! Induced-subgraph statistics of a graph `H`: the three 4-vertex pattern
//! counts `a`, `b`, `c`, triangle counts, and the induced-2-path count `psi`.
//!
//! `a(H)` counts induced paths on 4 vertices (path of length 3), `b(H)`
//! induced 4-cycles, and `c(H)` induced 4-sets that form a path of length 2
//! plus one isolated vertex. These are exactly the complement shapes of the
//! disjoint edge pairs that span a 1-face, which is why the epsilon module
//! consumes them.
//!
//! The a/b/c counts classify the induced subgraph on every 4-subset through
//! a 64-entry lookup table keyed by the 6-bit edge mask. That is O(d^4) but
//! branch-free in the inner loop and easily fast enough below the vertex cap
//! where the census is actually used.

use crate::graph::{Edge, Graph};
use crate::util::choose2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum CensusError {
    #[error("brute-force psi is limited to 64 vertices, got {0}")]
    BruteForceTooLarge(usize),
}

/// Pattern statistics of one graph; see the module docs for the meaning of
/// the fields. `psi` satisfies `psi = sum_i C(deg(i), 2) - 3 * k3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Census {
    pub edge_count: u64,
    pub sum_deg_sq: u64,
    pub k3: u64,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub psi: u64,
}

// ============================================================================
// 6-bit pattern classification
// ============================================================================

const PAT_NONE: u8 = 0;
const PAT_A: u8 = 1;
const PAT_B: u8 = 2;
const PAT_C: u8 = 3;

/// Classification of all 64 edge masks on 4 vertices. Bit layout for the
/// 4-subset `{p < q < r < s}`:
/// bit 0 = pq, 1 = pr, 2 = ps, 3 = qr, 4 = qs, 5 = rs.
const CLASS: [u8; 64] = build_class_table();

const fn build_class_table() -> [u8; 64] {
    let mut table = [PAT_NONE; 64];
    let mut mask = 0usize;
    while mask < 64 {
        let bits = [
            mask & 1,
            (mask >> 1) & 1,
            (mask >> 2) & 1,
            (mask >> 3) & 1,
            (mask >> 4) & 1,
            (mask >> 5) & 1,
        ];
        let ne = bits[0] + bits[1] + bits[2] + bits[3] + bits[4] + bits[5];
        let deg = [
            bits[0] + bits[1] + bits[2],
            bits[0] + bits[3] + bits[4],
            bits[1] + bits[3] + bits[5],
            bits[2] + bits[4] + bits[5],
        ];
        // sort the four degrees (network, const-friendly)
        let mut d = deg;
        let mut i = 0;
        while i < 4 {
            let mut j = i + 1;
            while j < 4 {
                if d[j] < d[i] {
                    let t = d[i];
                    d[i] = d[j];
                    d[j] = t;
                }
                j += 1;
            }
            i += 1;
        }
        table[mask] = if ne == 3 && d[0] == 1 && d[1] == 1 && d[2] == 2 && d[3] == 2 {
            PAT_A // path of length 3
        } else if ne == 4 && d[0] == 2 && d[3] == 2 {
            PAT_B // 4-cycle
        } else if ne == 2 && d[0] == 0 && d[1] == 1 && d[2] == 1 && d[3] == 2 {
            PAT_C // path of length 2 plus an isolated vertex
        } else {
            PAT_NONE
        };
        mask += 1;
    }
    table
}

// ============================================================================
// Census computation
// ============================================================================

/// Counts of the a/b/c patterns among 4-subsets whose smallest vertex is `p`.
fn abc_from(h: &Graph, p: usize) -> [u64; 3] {
    let d = h.vertex_count();
    let mut acc = [0u64; 3];
    for q in (p + 1)..d {
        let pq = h.has_edge0(p, q) as usize;
        for r in (q + 1)..d {
            let pr = (h.has_edge0(p, r) as usize) << 1;
            let qr = (h.has_edge0(q, r) as usize) << 3;
            let base = pq | pr | qr;
            for s in (r + 1)..d {
                let mask = base
                    | (h.has_edge0(p, s) as usize) << 2
                    | (h.has_edge0(q, s) as usize) << 4
                    | (h.has_edge0(r, s) as usize) << 5;
                let class = CLASS[mask];
                if class != PAT_NONE {
                    acc[(class - 1) as usize] += 1;
                }
            }
        }
    }
    acc
}

fn abc_counts(h: &Graph) -> [u64; 3] {
    let d = h.vertex_count();
    // below ~40 vertices the 4-subset scan is too small to be worth
    // fanning out, and callers (local search) may already run in parallel
    #[cfg(feature = "parallel")]
    if d >= 40 {
        use rayon::prelude::*;
        return (0..d)
            .into_par_iter()
            .map(|p| abc_from(h, p))
            .reduce(|| [0; 3], |x, y| [x[0] + y[0], x[1] + y[1], x[2] + y[2]]);
    }
    let mut acc = [0u64; 3];
    for p in 0..d {
        let part = abc_from(h, p);
        acc = [acc[0] + part[0], acc[1] + part[1], acc[2] + part[2]];
    }
    acc
}

/// Full census of `h`.
pub fn census(h: &Graph) -> Census {
    let d = h.vertex_count();
    let edge_count = h.edge_count() as u64;
    let sum_deg_sq: u64 = (0..d).map(|i| (h.degree0(i) as u64).pow(2)).sum();

    // triangles: each triangle is seen from all 3 of its edges
    let tri_incidences: u64 = h
        .edge_pairs0()
        .iter()
        .map(|&(i, j)| h.common_neighbors0(i as usize, j as usize) as u64)
        .sum();
    debug_assert_eq!(tri_incidences % 3, 0);
    let k3 = tri_incidences / 3;

    let [a, b, c] = abc_counts(h);

    let sum_choose2: u64 = (0..d).map(|i| choose2(h.degree0(i) as u64)).sum();
    let psi = sum_choose2 - 3 * k3;

    Census {
        edge_count,
        sum_deg_sq,
        k3,
        a,
        b,
        c,
        psi,
    }
}

/// Per-edge triangle counts; the values sum to `3 * k3`.
pub fn triangles_per_edge(h: &Graph) -> Vec<(Edge, u64)> {
    h.edges()
        .into_iter()
        .map(|e| {
            let count = h.common_neighbors0(e.u() - 1, e.v() - 1) as u64;
            (e, count)
        })
        .collect()
}

/// Independent O(d^3) count of induced paths of length 2, used as the test
/// oracle for [`Census::psi`]. Each unordered pattern is counted once.
pub fn psi_bruteforce(h: &Graph) -> Result<u64, CensusError> {
    let d = h.vertex_count();
    if d > 64 {
        return Err(CensusError::BruteForceTooLarge(d));
    }
    let mut count = 0u64;
    for i in 0..d {
        for j in (i + 1)..d {
            for k in (j + 1)..d {
                let ij = h.has_edge0(i, j);
                let ik = h.has_edge0(i, k);
                let jk = h.has_edge0(j, k);
                // exactly two of the three edges present = an induced 2-path
                if ij as u8 + ik as u8 + jk as u8 == 2 {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

// ============================================================================
// Tests
// ============================================================================
