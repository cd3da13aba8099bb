//! Independent reference computations used by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use schubval::linalg::{q, solve_square, Matrix};
use schubval::{Polynomial, Q};

pub type Cartan = Vec<Vec<i64>>;

pub fn transpose(a: &Cartan) -> Cartan {
    (0..a.len())
        .map(|i| (0..a.len()).map(|j| a[j][i]).collect())
        .collect()
}

/// Positive roots in simple-root coordinates, by closing the simple roots
/// under reflections `s_i β = β − ⟨β, h_i⟩ α_i`.
pub fn positive_roots(a: &Cartan) -> Vec<Vec<i64>> {
    let n = a.len();
    let pairing = |b: &[i64], i: usize| -> i64 { (0..n).map(|j| b[j] * a[i][j]).sum() };
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..n {
            let mut c = b.clone();
            c[i] -= pairing(&b, i);
            let positive = c.iter().all(|&x| x >= 0);
            let negative = c.iter().all(|&x| x <= 0);
            let c = if negative && !positive {
                c.iter().map(|x| -x).collect()
            } else {
                c
            };
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    seen.into_iter().collect()
}

/// `Π_{β > 0} ⟨λ + ρ, β^∨⟩ / ⟨ρ, β^∨⟩` with coroots taken from the
/// transposed Cartan matrix.
pub fn weyl_dimension(a: &Cartan, lambda: &[i64]) -> u128 {
    let mut ratio = Q::one();
    for b in positive_roots(&transpose(a)) {
        ratio *= q(b
            .iter()
            .zip(lambda)
            .map(|(&m, &l)| m * (l + 1))
            .sum::<i64>());
        ratio /= q(b.iter().sum::<i64>());
    }
    assert!(ratio.is_integer());
    ratio.to_integer().to_string().parse().unwrap()
}

/// `d_i` with `d_i a_ij = d_j a_ji`, so that `(α_i, α_j) = d_i a_ij`.
pub fn symmetrizer(a: &Cartan) -> Vec<Q> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if a[i][j] != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * q(a[i][j]) / q(a[j][i]));
                queue.push_back(j);
            }
        }
    }
    d.into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect()
}

fn root_coords(a: &Cartan, mu: &[Q]) -> Vec<Q> {
    let m = Matrix::from_rows(
        a.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect(),
    );
    solve_square(&m, mu).expect("Cartan matrix is invertible")
}

/// `(μ, ν)` for weights in fundamental coordinates.
fn form(a: &Cartan, d: &[Q], mu: &[Q], nu: &[Q]) -> Q {
    let c = root_coords(a, mu);
    (0..a.len()).map(|j| &c[j] * &d[j] * &nu[j]).sum()
}

/// Weight multiplicities of `V(λ)` by Freudenthal's recursion.
pub fn freudenthal(a: &Cartan, lambda: &[i64]) -> BTreeMap<Vec<i64>, usize> {
    let n = a.len();
    let d = symmetrizer(a);
    let pos: Vec<Vec<i64>> = positive_roots(a)
        .into_iter()
        .map(|b| {
            (0..n)
                .map(|i| (0..n).map(|j| b[j] * a[i][j]).sum())
                .collect()
        })
        .collect();
    let qv = |v: &[i64]| -> Vec<Q> { v.iter().map(|&x| q(x)).collect() };
    let shift = |v: &[i64]| -> Vec<Q> { v.iter().map(|&x| q(x + 1)).collect() };
    let lower = |mu: &[i64], j: usize| -> Vec<i64> {
        a.iter().zip(mu).map(|(row, m)| m - row[j]).collect()
    };
    let top = form(a, &d, &shift(lambda), &shift(lambda));
    let mut mult: BTreeMap<Vec<i64>, usize> = BTreeMap::from([(lambda.to_vec(), 1)]);
    let mut layer: BTreeSet<Vec<i64>> = BTreeSet::from([lambda.to_vec()]);
    loop {
        let mut next = BTreeSet::new();
        for mu in &layer {
            for j in 0..n {
                next.insert(lower(mu, j));
            }
        }
        let mut found = BTreeSet::new();
        for mu in next {
            let mut sum = Q::zero();
            for alpha in &pos {
                let mut k = 1;
                loop {
                    let nu: Vec<i64> = (0..n).map(|i| mu[i] + k * alpha[i]).collect();
                    let Some(&m) = mult.get(&nu) else { break };
                    sum += q(m as i64) * form(a, &d, &qv(&nu), &qv(alpha));
                    k += 1;
                }
            }
            let denom = &top - form(a, &d, &shift(&mu), &shift(&mu));
            // only non-weights reach a vanishing denominator below the top
            if denom.is_zero() {
                continue;
            }
            let m = q(2) * sum / denom;
            assert!(m.is_integer());
            let m = m.to_integer().to_string().parse::<usize>().unwrap();
            if m > 0 {
                mult.insert(mu.clone(), m);
                found.insert(mu);
            }
        }
        if found.is_empty() {
            return mult;
        }
        layer = found;
    }
}

/// The Demazure operator `D_i` on a character `Σ c_μ e^μ`.
fn demazure_operator(
    a: &Cartan,
    i: usize,
    ch: &BTreeMap<Vec<i64>, i64>,
) -> BTreeMap<Vec<i64>, i64> {
    let n = a.len();
    let alpha: Vec<i64> = (0..n).map(|k| a[k][i]).collect();
    let step = |mu: &[i64], t: i64| -> Vec<i64> { (0..n).map(|k| mu[k] - t * alpha[k]).collect() };
    let mut out: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (mu, &c) in ch {
        let p = mu[i];
        if p >= 0 {
            for t in 0..=p {
                *out.entry(step(mu, t)).or_default() += c;
            }
        } else if p <= -2 {
            for t in 1..=(-p - 1) {
                *out.entry(step(mu, -t)).or_default() -= c;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Character of `V_w(λ)` as `D_{i_1} ⋯ D_{i_r} e^λ`.
pub fn demazure_character(a: &Cartan, lambda: &[i64], word: &[usize]) -> BTreeMap<Vec<i64>, i64> {
    let mut ch = BTreeMap::from([(lambda.to_vec(), 1)]);
    for &i in word.iter().rev() {
        ch = demazure_operator(a, i - 1, &ch);
    }
    ch
}

/// A random polynomial with `1..=max_terms` terms and small coefficients.
pub fn random_polynomial(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    max_terms: usize,
    max_exp: u32,
) -> Polynomial {
    loop {
        let terms = rng.gen_range(1..=max_terms);
        let p = Polynomial::from_terms(
            nvars,
            (0..terms).map(|_| {
                let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect();
                let mut c = rng.gen_range(-4i64..=4);
                if c == 0 {
                    c = 1;
                }
                (e, q(c))
            }),
        );
        if !p.is_zero() {
            return p;
        }
    }
}
