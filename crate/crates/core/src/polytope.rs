//! Exact convex hulls given by finite point lists.
//!
//! Membership is the feasibility of `Σ λ_j p_j = x, Σ λ_j = 1, λ ≥ 0`,
//! decided by a phase-one simplex with Bland's smallest-index rule.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ceil_i64, floor_i64, parse_q, q, q_to_string, Q};
use crate::polyval::ValueTuple;

/// A point of `Q^r`. Fractions are kept reduced, so derived equality and
/// order are the exact ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPoint(pub Vec<Q>);

impl QPoint {
    pub fn from_ints(xs: &[i64]) -> QPoint {
        QPoint(xs.iter().map(|&x| q(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn scaled(&self, c: &Q) -> QPoint {
        QPoint(self.0.iter().map(|x| x * c).collect())
    }

    /// The coordinates as integers, if they all are.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(crate::linalg::q_to_i64).collect()
    }

    /// Coordinates as `p/q` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(q_to_string).collect()
    }

    pub fn parse(coords: &[String]) -> Result<QPoint> {
        Ok(QPoint(
            coords.iter().map(|s| parse_q(s)).collect::<Result<_>>()?,
        ))
    }
}

impl From<&ValueTuple> for QPoint {
    fn from(v: &ValueTuple) -> QPoint {
        QPoint::from_ints(v.coords())
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

impl Serialize for QPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        QPoint::parse(&raw).map_err(serde::de::Error::custom)
    }
}

fn common_dim(points: &[QPoint]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::Input("empty point list".into()));
    };
    let d = first.dim();
    match points.iter().find(|p| p.dim() != d) {
        Some(p) => Err(Error::DimensionMismatch {
            expected: d,
            found: p.dim(),
        }),
        None => Ok(d),
    }
}

/// An affine function `u ↦ a·u + b` that is `≤ 0` on every generator.
#[derive(Clone, Debug)]
struct Cut {
    a: Vec<Q>,
    b: Q,
}

impl Cut {
    fn separates(&self, x: &[Q]) -> bool {
        let v: Q = self.a.iter().zip(x).map(|(a, u)| a * u).sum::<Q>() + &self.b;
        v.is_positive()
    }

    fn separates_ints(&self, x: &[i64]) -> bool {
        let v: Q = self.a.iter().zip(x).map(|(a, &u)| a * q(u)).sum::<Q>() + &self.b;
        v.is_positive()
    }
}

/// Phase-one simplex: is `x` a convex combination of `points`? When not,
/// the final duals give a cut separating `x` from the generators.
fn feasible(points: &[&QPoint], x: &QPoint) -> std::result::Result<(), Cut> {
    let n = points.len();
    let d = x.dim();
    let m = d + 1;
    let width = n + m + 1;
    let rhs = n + m;
    // rows are negated where needed so that the right-hand side is nonnegative
    let signs: Vec<Q> = (0..m)
        .map(|i| {
            if i < d && x.0[i].is_negative() {
                -Q::one()
            } else {
                Q::one()
            }
        })
        .collect();
    let mut t: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row = vec![Q::zero(); width];
            let sign = &signs[i];
            for (j, p) in points.iter().enumerate() {
                row[j] = if i < d { &p.0[i] * sign } else { sign.clone() };
            }
            row[n + i] = Q::one();
            row[rhs] = if i < d { &x.0[i] * sign } else { sign.clone() };
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // reduced costs of the phase-one objective Σ artificials
    let mut cost = vec![Q::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }
    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, r)) => ratio < *r || (ratio == *r && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a ratio always exists
        let (l, _) = leave.expect("phase-one simplex is bounded");
        let piv = t[l][enter].clone();
        for x in t[l].iter_mut() {
            *x /= &piv;
        }
        let prow = t[l].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != l && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (a, b) in row.iter_mut().zip(&prow) {
                    *a -= &f * b;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (a, b) in cost.iter_mut().zip(&prow) {
                *a -= &f * b;
            }
        }
        basis[l] = enter;
    }
    if cost[rhs].is_zero() {
        return Ok(());
    }
    // y_i = 1 − (reduced cost of artificial i); undo the row signs
    let y: Vec<Q> = (0..m)
        .map(|i| (Q::one() - &cost[n + i]) * &signs[i])
        .collect();
    let cut = Cut {
        a: y[..d].to_vec(),
        b: y[d].clone(),
    };
    debug_assert!(cut.separates(&x.0));
    Err(cut)
}

fn in_bounding_box(points: &[&QPoint], x: &QPoint) -> bool {
    (0..x.dim()).all(|i| {
        let lo = points.iter().map(|p| &p.0[i]).min().expect("nonempty");
        let hi = points.iter().map(|p| &p.0[i]).max().expect("nonempty");
        *lo <= x.0[i] && x.0[i] <= *hi
    })
}

fn contains_refs(points: &[&QPoint], x: &QPoint) -> bool {
    if points.contains(&x) {
        return true;
    }
    in_bounding_box(points, x) && feasible(points, x).is_ok()
}

/// Whether `x ∈ conv(points)`.
pub fn contains(points: &[QPoint], x: &QPoint) -> Result<bool> {
    let d = common_dim(points)?;
    if x.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: x.dim(),
        });
    }
    let refs: Vec<&QPoint> = points.iter().collect();
    Ok(contains_refs(&refs, x))
}

/// Indices of points that are lexicographically largest after flipping
/// signs and rotating coordinates; each one is a vertex.
fn sure_vertices(points: &[QPoint], d: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let signs = 1usize << d.min(10);
    for mask in 0..signs {
        for shift in 0..d.max(1) {
            let key = |p: &QPoint| -> Vec<Q> {
                (0..d)
                    .map(|i| {
                        let c = (i + shift) % d;
                        if mask >> (c % 10) & 1 == 1 {
                            -p.0[c].clone()
                        } else {
                            p.0[c].clone()
                        }
                    })
                    .collect()
            };
            let best = (0..points.len())
                .max_by_key(|&j| key(&points[j]))
                .expect("nonempty");
            out.insert(best);
        }
    }
    out
}

/// The vertices of `conv(points)`: points not in the hull of the others.
/// Sorted, without duplicates.
pub fn extreme_points(points: &[QPoint]) -> Result<Vec<QPoint>> {
    let d = common_dim(points)?;
    let distinct: Vec<QPoint> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if distinct.len() == 1 {
        return Ok(distinct);
    }
    let sure = sure_vertices(&distinct, d);
    let sure_refs: Vec<&QPoint> = sure.iter().map(|&j| &distinct[j]).collect();
    // anything inside the hull of known vertices is not a vertex
    let undecided: Vec<usize> = (0..distinct.len())
        .into_par_iter()
        .filter(|j| !sure.contains(j) && !contains_refs(&sure_refs, &distinct[*j]))
        .collect();
    // dropping known non-vertices from the generators never changes the answer
    let pool: Vec<usize> = sure
        .iter()
        .copied()
        .chain(undecided.iter().copied())
        .collect();
    let extra: Vec<usize> = undecided
        .par_iter()
        .copied()
        .filter(|&j| {
            let others: Vec<&QPoint> = pool
                .iter()
                .filter(|&&i| i != j)
                .map(|&i| &distinct[i])
                .collect();
            !contains_refs(&others, &distinct[j])
        })
        .collect();
    let keep: BTreeSet<usize> = sure.into_iter().chain(extra).collect();
    Ok(keep.into_iter().map(|j| distinct[j].clone()).collect())
}

/// All integral points of `conv(points)`.
pub fn lattice_points(points: &[QPoint]) -> Result<BTreeSet<Vec<i64>>> {
    let d = common_dim(points)?;
    let verts = extreme_points(points)?;
    let refs: Vec<&QPoint> = verts.iter().collect();
    let lo: Vec<i64> = (0..d)
        .map(|i| ceil_i64(verts.iter().map(|p| &p.0[i]).min().expect("nonempty")))
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|i| floor_i64(verts.iter().map(|p| &p.0[i]).max().expect("nonempty")))
        .collect();
    let mut candidates = vec![Vec::new()];
    for i in 0..d {
        if lo[i] > hi[i] {
            return Ok(BTreeSet::new());
        }
        candidates = candidates
            .into_iter()
            .flat_map(|c: Vec<i64>| {
                (lo[i]..=hi[i]).map(move |x| {
                    let mut c = c.clone();
                    c.push(x);
                    c
                })
            })
            .collect();
    }
    let inside: BTreeSet<Vec<i64>> = points.iter().filter_map(QPoint::to_ints).collect();
    let mut cuts: Vec<Cut> = Vec::new();
    let mut out = BTreeSet::new();
    for c in candidates {
        if inside.contains(&c) {
            out.insert(c);
            continue;
        }
        if cuts.iter().any(|cut| cut.separates_ints(&c)) {
            continue;
        }
        match feasible(&refs, &QPoint::from_ints(&c)) {
            Ok(()) => {
                out.insert(c);
            }
            Err(cut) => cuts.push(cut),
        }
    }
    Ok(out)
}

/// `{−p^op}`: reverse the coordinates and negate.
pub fn op_negate(points: &[QPoint]) -> Vec<QPoint> {
    points
        .iter()
        .map(|p| QPoint(p.0.iter().rev().map(|x| -x).collect()))
        .collect()
}

/// Whether two point lists span the same hull.
pub fn hull_equal(a: &[QPoint], b: &[QPoint]) -> Result<bool> {
    let da = common_dim(a)?;
    let db = common_dim(b)?;
    if da != db {
        return Err(Error::DimensionMismatch {
            expected: da,
            found: db,
        });
    }
    let ea = extreme_points(a)?;
    let eb = extreme_points(b)?;
    if ea == eb {
        return Ok(true);
    }
    let ra: Vec<&QPoint> = ea.iter().collect();
    let rb: Vec<&QPoint> = eb.iter().collect();
    Ok(
        ea.par_iter().all(|p| contains_refs(&rb, p))
            && eb.par_iter().all(|p| contains_refs(&ra, p)),
    )
}
