//! Crystals `B(λ)` and Demazure crystals `B_w(λ)` in the Littelmann path
//! model.
//!
//! A path is a concatenation of straight segments `t ↦ d·t` with integral
//! directions `d` (fundamental coordinates) and rational durations summing to
//! one. Every path reachable from the straight line to `λ` has directions in
//! the Weyl orbit of `λ`, so two adjacent segments are collinear exactly when
//! their directions coincide, and normalization only merges equal neighbours.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cartan::{ReducedWord, RootSystem, Weight};
use crate::error::{input, Error, Result};
use crate::linalg::{q, q_to_i64, Q};
use crate::polyval::ValueTuple;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Segment {
    dir: Vec<i64>,
    dur: Q,
}

/// A Lakshmibai–Seshadri path in normalized form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LSPath {
    segments: Vec<Segment>,
}

impl LSPath {
    fn normalized(segments: Vec<Segment>) -> LSPath {
        let mut out: Vec<Segment> = Vec::with_capacity(segments.len());
        for s in segments {
            if s.dur.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.dir == s.dir => last.dur += s.dur,
                _ => out.push(s),
            }
        }
        LSPath { segments: out }
    }

    /// Directions and durations of the segments, in order.
    pub fn segments(&self) -> impl Iterator<Item = (&[i64], &Q)> {
        self.segments.iter().map(|s| (s.dir.as_slice(), &s.dur))
    }

    /// Endpoint of the path.
    pub fn wt(&self) -> Weight {
        let n = self.segments.first().map_or(0, |s| s.dir.len());
        let mut end = vec![Q::zero(); n];
        for s in &self.segments {
            for (e, &d) in end.iter_mut().zip(&s.dir) {
                *e += q(d) * &s.dur;
            }
        }
        Weight::new(
            end.iter()
                .map(|x| q_to_i64(x).expect("endpoint of an LS path is integral"))
                .collect(),
        )
    }

    /// Heights `⟨π(t), h_i⟩` at the breakpoints `0 = t_0 < t_1 < … < t_m = 1`.
    fn heights(&self, i: usize) -> Vec<Q> {
        let mut h = vec![Q::zero()];
        let mut cur = Q::zero();
        for s in &self.segments {
            cur += q(s.dir[i - 1]) * &s.dur;
            h.push(cur.clone());
        }
        h
    }

    fn min_height(&self, i: usize) -> i64 {
        let m = self
            .heights(i)
            .into_iter()
            .min()
            .expect("heights are nonempty");
        q_to_i64(&m).expect("minimum of an LS path height is integral")
    }

    /// `ε_i`: how often `ẽ_i` applies.
    pub fn eps(&self, i: usize) -> i64 {
        -self.min_height(i)
    }

    /// `φ_i`: how often `f̃_i` applies.
    pub fn phi(&self, i: usize) -> i64 {
        self.wt().pairing(i) - self.min_height(i)
    }
}

impl fmt::Display for LSPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .segments
            .iter()
            .map(|s| format!("{}:{}", Weight::new(s.dir.clone()), s.dur))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The straight line from `0` to `λ`; this is `b_λ`.
pub fn straight_path(lambda: &Weight) -> Result<LSPath> {
    if !lambda.is_dominant() {
        return input(format!("weight {lambda} is not dominant"));
    }
    Ok(LSPath {
        segments: vec![Segment {
            dir: lambda.coords().to_vec(),
            dur: Q::one(),
        }],
    })
}

fn check_node(rs: &RootSystem, i: usize) -> Result<()> {
    if (1..=rs.rank()).contains(&i) {
        Ok(())
    } else {
        input(format!("node {i} outside 1..={}", rs.rank()))
    }
}

/// `s_i(d) = d − ⟨d, h_i⟩ α_i`.
fn reflect_dir(rs: &RootSystem, i: usize, d: &[i64]) -> Vec<i64> {
    let c = rs.cartan();
    let a = d[i - 1];
    d.iter()
        .enumerate()
        .map(|(k, &x)| x - a * c[k][i - 1])
        .collect()
}

/// Splits the path at the given times (sorted, inside `[0, 1]`) and reflects
/// every piece lying in `[t0, t1]`.
fn reflect_between(rs: &RootSystem, path: &LSPath, i: usize, t0: &Q, t1: &Q) -> LSPath {
    let mut out = Vec::new();
    let mut start = Q::zero();
    for s in &path.segments {
        let end = &start + &s.dur;
        // pieces [start, a], [a, b], [b, end] with [a, b] = [start, end] ∩ [t0, t1]
        let a = (&start).max(t0).clone();
        let b = (&end).min(t1).clone();
        if a >= b {
            out.push(s.clone());
        } else {
            out.push(Segment {
                dir: s.dir.clone(),
                dur: &a - &start,
            });
            out.push(Segment {
                dir: reflect_dir(rs, i, &s.dir),
                dur: &b - &a,
            });
            out.push(Segment {
                dir: s.dir.clone(),
                dur: &end - &b,
            });
        }
        start = end;
    }
    LSPath::normalized(out)
}

/// `f̃_i`, or `None` when the result is zero.
pub fn root_f(rs: &RootSystem, path: &LSPath, i: usize) -> Result<Option<LSPath>> {
    check_node(rs, i)?;
    let h = path.heights(i);
    let m = h.iter().min().expect("heights are nonempty").clone();
    let last = h.last().expect("heights are nonempty");
    if last - &m < Q::one() {
        return Ok(None);
    }
    // last breakpoint where the minimum is attained
    let p = h
        .iter()
        .rposition(|x| *x == m)
        .expect("minimum is attained");
    let mut t = Q::zero();
    for s in &path.segments[..p] {
        t += &s.dur;
    }
    let t0 = t.clone();
    let target = &m + Q::one();
    let mut t1 = None;
    for (k, s) in path.segments[p..].iter().enumerate() {
        let a = &h[p + k];
        let slope = q(s.dir[i - 1]);
        let b = &h[p + k + 1];
        if slope.is_positive() && *a < target && target <= *b {
            t1 = Some(&t + (&target - a) / &slope);
            break;
        }
        t += &s.dur;
    }
    let t1 = t1.expect("height reaches min + 1 after its last minimum");
    Ok(Some(reflect_between(rs, path, i, &t0, &t1)))
}

/// `ẽ_i`, or `None` when the result is zero.
pub fn root_e(rs: &RootSystem, path: &LSPath, i: usize) -> Result<Option<LSPath>> {
    check_node(rs, i)?;
    let h = path.heights(i);
    let m = h.iter().min().expect("heights are nonempty").clone();
    if m > -Q::one() {
        return Ok(None);
    }
    // first breakpoint where the minimum is attained
    let p = h.iter().position(|x| *x == m).expect("minimum is attained");
    let starts: Vec<Q> = path
        .segments
        .iter()
        .scan(Q::zero(), |t, s| {
            let here = t.clone();
            *t += &s.dur;
            Some(here)
        })
        .collect();
    let t1 = if p == path.segments.len() {
        Q::one()
    } else {
        starts[p].clone()
    };
    let target = &m + Q::one();
    let mut t0 = None;
    for k in (0..p).rev() {
        let a = &h[k];
        let b = &h[k + 1];
        let slope = q(path.segments[k].dir[i - 1]);
        if slope.is_negative() && *b < target && target <= *a {
            t0 = Some(&starts[k] + (&target - a) / &slope);
            break;
        }
    }
    let t0 = t0.expect("height equals zero at the start");
    Ok(Some(reflect_between(rs, path, i, &t0, &t1)))
}

/// All of `B(λ)`: the closure of `b_λ` under every `f̃_i`.
pub fn full_crystal(rs: &RootSystem, lambda: &Weight) -> Result<BTreeSet<LSPath>> {
    check_rank(rs, lambda)?;
    let start = straight_path(lambda)?;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for i in 1..=rs.rank() {
            if let Some(c) = root_f(rs, &b, i)? {
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    Ok(seen)
}

fn check_rank(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if lambda.rank() == rs.rank() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: lambda.rank(),
        })
    }
}

/// `B_w(λ)` for one reduced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureCrystal {
    lambda: Weight,
    word: ReducedWord,
    elements: BTreeSet<LSPath>,
}

impl DemazureCrystal {
    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn elements(&self) -> &BTreeSet<LSPath> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `{f̃_{i_1}^{a_1} ⋯ f̃_{i_r}^{a_r} b_λ} \ {0}`, generated by full
/// `f̃`-strings from the right end of the word.
pub fn demazure_crystal(
    rs: &RootSystem,
    lambda: &Weight,
    word: &ReducedWord,
) -> Result<DemazureCrystal> {
    check_rank(rs, lambda)?;
    if !rs.is_reduced(word.indices()) {
        return input(format!("word {word} is not reduced"));
    }
    let mut elements = BTreeSet::from([straight_path(lambda)?]);
    for &i in word.indices().iter().rev() {
        let mut next = elements.clone();
        for b in &elements {
            let mut cur = b.clone();
            while let Some(c) = root_f(rs, &cur, i)? {
                next.insert(c.clone());
                cur = c;
            }
        }
        elements = next;
    }
    Ok(DemazureCrystal {
        lambda: lambda.clone(),
        word: word.clone(),
        elements,
    })
}

/// `Φ_i(b)`: peel `ẽ_{i_1}` maximally, then `ẽ_{i_2}`, and so on. The
/// residue must be `b_λ`, otherwise `b` is not in `B_w(λ)`.
pub fn string_parametrization(
    rs: &RootSystem,
    lambda: &Weight,
    b: &LSPath,
    word: &ReducedWord,
) -> Result<ValueTuple> {
    let mut cur = b.clone();
    let mut out = Vec::with_capacity(word.len());
    for &i in word.indices() {
        let mut a = 0;
        while let Some(c) = root_e(rs, &cur, i)? {
            cur = c;
            a += 1;
        }
        out.push(a);
    }
    if cur != straight_path(lambda)? {
        return Err(Error::Domain(format!(
            "path {b} is not in the Demazure crystal of {word}"
        )));
    }
    Ok(ValueTuple(out))
}

/// Image of `Φ_i` on `B_w(kλ)` for `k = 1..=kmax`.
pub fn crystal_level_sets(
    rs: &RootSystem,
    lambda: &Weight,
    word: &ReducedWord,
    kmax: usize,
) -> Result<BTreeMap<usize, BTreeSet<ValueTuple>>> {
    if kmax == 0 {
        return input("the maximal level must be at least 1");
    }
    let mut out = BTreeMap::new();
    for k in 1..=kmax {
        let kl = lambda.scaled(k as i64);
        let crystal = demazure_crystal(rs, &kl, word)?;
        let set = crystal
            .elements()
            .iter()
            .map(|b| string_parametrization(rs, &kl, b, word))
            .collect::<Result<BTreeSet<_>>>()?;
        out.insert(k, set);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Series;

    fn a2() -> RootSystem {
        RootSystem::new(Series::A, 2).unwrap()
    }

    fn word(rs: &RootSystem, w: &[usize]) -> ReducedWord {
        ReducedWord::new(rs, w.to_vec()).unwrap()
    }

    #[test]
    fn sl2_fundamental() {
        let rs = RootSystem::new(Series::A, 1).unwrap();
        let b = straight_path(&Weight::new(vec![1])).unwrap();
        assert_eq!(b.eps(1), 0);
        assert_eq!(b.phi(1), 1);
        let c = root_f(&rs, &b, 1).unwrap().unwrap();
        assert_eq!(c.wt(), Weight::new(vec![-1]));
        assert!(root_f(&rs, &c, 1).unwrap().is_none());
        assert_eq!(root_e(&rs, &c, 1).unwrap().unwrap(), b);
        assert!(root_e(&rs, &b, 1).unwrap().is_none());
    }

    #[test]
    fn a2_adjoint() {
        let rs = a2();
        let rho = rs.rho();
        assert_eq!(full_crystal(&rs, &rho).unwrap().len(), 8);
        let w = word(&rs, &[1, 2, 1]);
        let d = demazure_crystal(&rs, &rho, &w).unwrap();
        assert_eq!(d.len(), 8);
        let other = demazure_crystal(&rs, &rho, &word(&rs, &[2, 1, 2])).unwrap();
        assert_eq!(d.elements(), other.elements());
        assert_eq!(
            demazure_crystal(&rs, &rho, &word(&rs, &[1])).unwrap().len(),
            2
        );
        assert_eq!(
            demazure_crystal(&rs, &rho, &ReducedWord::empty())
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn a2_strings() {
        let rs = a2();
        let rho = rs.rho();
        let w = word(&rs, &[1, 2, 1]);
        let sets = crystal_level_sets(&rs, &rho, &w, 2).unwrap();
        let expected: BTreeSet<ValueTuple> = [
            [0, 0, 0],
            [1, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [0, 1, 1],
            [2, 1, 0],
            [0, 2, 1],
            [1, 2, 1],
        ]
        .iter()
        .map(|x| ValueTuple(x.to_vec()))
        .collect();
        assert_eq!(sets[&1], expected);
        assert_eq!(sets[&2].len(), 27);
        let lowest = full_crystal(&rs, &rho)
            .unwrap()
            .into_iter()
            .find(|b| b.wt() == rho.scaled(-1))
            .unwrap();
        assert_eq!(
            string_parametrization(&rs, &rho, &lowest, &w).unwrap(),
            ValueTuple(vec![1, 2, 1])
        );
        assert_eq!(lowest.eps(1), 1);
    }

    #[test]
    fn outside_the_demazure_crystal() {
        let rs = a2();
        let rho = rs.rho();
        let b = root_f(&rs, &straight_path(&rho).unwrap(), 2)
            .unwrap()
            .unwrap();
        assert!(matches!(
            string_parametrization(&rs, &rho, &b, &word(&rs, &[1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn zero_weight() {
        let rs = a2();
        let sets = crystal_level_sets(&rs, &Weight::zero(2), &word(&rs, &[1, 2, 1]), 2).unwrap();
        for set in sets.values() {
            assert_eq!(set, &BTreeSet::from([ValueTuple::zero(3)]));
        }
    }

    #[test]
    fn sizes_match_rho_dimensions() {
        for (series, rank, dim) in [(Series::B, 2, 16), (Series::C, 2, 16), (Series::G, 2, 64)] {
            let rs = RootSystem::new(series, rank).unwrap();
            assert_eq!(
                full_crystal(&rs, &rs.rho()).unwrap().len(),
                dim,
                "{series}{rank}"
            );
        }
    }
}
