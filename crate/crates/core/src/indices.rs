//! Degree- and distance-based topological indices, and closed forms for the
//! Mycielskian.
//!
//! Distance-based indices are exact `u64` sums with checked arithmetic. For
//! `n <= 10_000` the largest of them, the degree distance, is below
//! `C(n, 2) * (n - 1) * 2(n - 1) < 10^16`, far inside `u64`; larger inputs
//! return [`Error::Overflow`] rather than wrapping.
//!
//! The Randić index is a left-to-right `f64` sum over the canonically sorted
//! edge list, so results are reproducible bit-for-bit.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

/// Absolute tolerance for floating-point comparisons of Randić values.
pub const RANDIC_TOL: f64 = 1e-9;

/// Rounds to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub(crate) fn serialize_sig12<S: Serializer>(
    x: &f64,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig12(*x))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub wiener: u64,
    pub zagreb_m1: u64,
    #[serde(serialize_with = "serialize_sig12")]
    pub randic: f64,
    pub degree_distance: u64,
}

impl IndexReport {
    pub const CSV_HEADER: &'static str = "n,m,diameter,wiener,zagreb_m1,randic,degree_distance";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.diameter,
            self.wiener,
            self.zagreb_m1,
            round_sig12(self.randic),
            self.degree_distance
        )
    }
}

/// Lower and upper bounds on the Randić index of the Mycielskian.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RandicBounds {
    #[serde(serialize_with = "serialize_sig12")]
    pub lower: f64,
    #[serde(serialize_with = "serialize_sig12")]
    pub upper: f64,
    pub is_regular: bool,
}

impl RandicBounds {
    pub fn contains(&self, r: f64, tol: f64) -> bool {
        self.lower - tol <= r && r <= self.upper + tol
    }
}

fn overflow(what: &'static str) -> Error {
    Error::Overflow(what)
}

pub fn wiener_from(dg: &DistanceMatrix) -> Result<u64> {
    dg.pairs()
        .try_fold(0u64, |acc, (_, _, d)| acc.checked_add(d as u64))
        .ok_or(overflow("Wiener index"))
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener(g: &Graph) -> Result<u64> {
    wiener_from(&all_pairs_distances(g)?)
}

/// First Zagreb index as a sum over edges of endpoint degree sums.
pub fn first_zagreb_by_edges(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .map(|&(u, v)| (g.degree(u) + g.degree(v)) as u64)
        .sum()
}

/// First Zagreb index as a sum of squared degrees.
pub fn first_zagreb_by_vertices(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d as u64) * (d as u64)).sum()
}

pub fn first_zagreb(g: &Graph) -> u64 {
    let by_vertices = first_zagreb_by_vertices(g);
    debug_assert_eq!(by_vertices, first_zagreb_by_edges(g));
    by_vertices
}

/// Randić connectivity index, `sum over edges of 1 / sqrt(deg u * deg v)`.
pub fn randic(g: &Graph) -> Result<f64> {
    if g.m() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(g.edges()
        .iter()
        .map(|&(u, v)| 1.0 / ((g.degree(u) * g.degree(v)) as f64).sqrt())
        .fold(0.0, |acc, x| acc + x))
}

/// Degree distance from a precomputed distance matrix, by the pair definition.
pub fn degree_distance_from(g: &Graph, dg: &DistanceMatrix) -> Result<u64> {
    if dg.n() != g.n() {
        return Err(Error::MatrixMismatch {
            expected: g.n(),
            found: dg.n(),
        });
    }
    dg.pairs()
        .try_fold(0u64, |acc, (u, v, d)| {
            let term = (d as u64).checked_mul((g.degree(u) + g.degree(v)) as u64)?;
            acc.checked_add(term)
        })
        .ok_or(overflow("degree distance"))
}

/// Sum over unordered pairs of `d(u, v) * (deg u + deg v)`.
pub fn degree_distance(g: &Graph) -> Result<u64> {
    degree_distance_from(g, &all_pairs_distances(g)?)
}

/// Degree distance as `sum over v of deg(v) * transmission(v)`.
pub fn degree_distance_by_transmission(g: &Graph) -> Result<u64> {
    let dg = all_pairs_distances(g)?;
    (0..g.n())
        .try_fold(0u64, |acc, v| {
            let transmission: u64 = dg.row(v).iter().map(|&d| d as u64).sum();
            acc.checked_add((g.degree(v) as u64).checked_mul(transmission)?)
        })
        .ok_or(overflow("degree distance"))
}

/// Sum of `deg u + deg v` over unordered pairs at distance exactly two.
pub fn distance2_degree_sum(g: &Graph) -> Result<u64> {
    let dg = all_pairs_distances(g)?;
    Ok(dg
        .pairs()
        .filter(|&(_, _, d)| d == 2)
        .map(|(u, v, _)| (g.degree(u) + g.degree(v)) as u64)
        .sum())
}

/// `2(n - 1)m - M1`, the closed form of [`distance2_degree_sum`] for graphs
/// of diameter two.
pub fn distance2_degree_sum_closed(g: &Graph) -> i128 {
    let (n, m) = (g.n() as i128, g.m() as i128);
    2 * (n - 1) * m - first_zagreb(g) as i128
}

/// Evaluates `4 DD(G) - M1(G) + (7n - 1)n + (8n + 12)m` without checking the
/// diameter hypothesis. Only meaningful as exploration off diameter two.
pub fn dd_mycielskian_formula(g: &Graph) -> Result<i128> {
    let dd = degree_distance(g)? as i128;
    let (n, m) = (g.n() as i128, g.m() as i128);
    Ok(4 * dd - first_zagreb(g) as i128 + (7 * n - 1) * n + (8 * n + 12) * m)
}

/// Degree distance of the Mycielskian of a diameter-two graph, in closed form.
pub fn dd_mycielskian_closed(g: &Graph) -> Result<u64> {
    let dg = all_pairs_distances(g)?;
    let diam = dg.max();
    if diam != 2 {
        return Err(Error::DiameterNotTwo(diam));
    }
    let value = dd_mycielskian_formula(g)?;
    u64::try_from(value).map_err(|_| overflow("closed-form degree distance"))
}

/// Bounds on the Randić index of the Mycielskian in terms of `n`, `m`, the
/// extreme degrees and the Randić index of `g`.
pub fn randic_bounds(g: &Graph) -> Result<RandicBounds> {
    let r = randic(g)?;
    let (min_deg, max_deg) = g.degree_extremes();
    // an isolated vertex leaves the upper bound undefined
    if min_deg == 0 {
        return Err(Error::Disconnected);
    }
    let (n, m) = (g.n() as f64, g.m() as f64);
    let side = |k: f64| (std::f64::consts::SQRT_2 * m + (n * k).sqrt()) / (k * k + k).sqrt();
    Ok(RandicBounds {
        lower: 0.5 * r + side(max_deg as f64),
        upper: 0.5 * r + side(min_deg as f64),
        is_regular: min_deg == max_deg,
    })
}

pub fn index_report(g: &Graph) -> Result<IndexReport> {
    let dg = all_pairs_distances(g)?;
    Ok(IndexReport {
        n: g.n(),
        m: g.m(),
        diameter: dg.max(),
        wiener: wiener_from(&dg)?,
        zagreb_m1: first_zagreb(g),
        randic: randic(g)?,
        degree_distance: degree_distance_from(g, &dg)?,
    })
}
