//! Finite-type root data.
//!
//! Convention: `cartan[i][j] = ⟨α_j, h_i⟩` with Bourbaki node numbering
//! (stored 0-based, exposed through 1-based node indices). Weights live in
//! fundamental-weight coordinates, so `⟨μ, h_i⟩` is the `i`-th coordinate and
//! `α_j` is column `j` of the Cartan matrix. Roots are kept in simple-root
//! coordinates.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::linalg::{q, solve_square, Matrix, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Series {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            other => input(format!("unknown series `{other}`")),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An integral weight in fundamental-weight coordinates, `λ = Σ m_i Λ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    /// `⟨μ, h_i⟩` for a 1-based node `i`.
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|m| m * k).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

fn cartan_matrix(series: Series, n: usize) -> Result<Vec<Vec<i64>>> {
    let valid = match series {
        Series::A => n >= 1,
        Series::B | Series::C => n >= 2,
        Series::D => n >= 3,
        Series::E => (6..=8).contains(&n),
        Series::F => n == 4,
        Series::G => n == 2,
    };
    if !valid {
        return input(format!("{series}{n} is not a finite-type Dynkin diagram"));
    }
    let c = match series {
        Series::A => chain(n),
        Series::B => {
            let mut c = chain(n);
            c[n - 1][n - 2] = -2;
            c
        }
        Series::C => {
            let mut c = chain(n);
            c[n - 2][n - 1] = -2;
            c
        }
        Series::D => {
            // node n hangs off node n-2, not n-1
            let mut c = chain(n);
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            c
        }
        Series::E => {
            let mut c = vec![vec![0; n]; n];
            for (i, row) in c.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if n >= 7 {
                edges.push((6, 7));
            }
            if n >= 8 {
                edges.push((7, 8));
            }
            for (a, b) in edges {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            }
            c
        }
        Series::F => {
            let mut c = chain(4);
            c[2][1] = -2;
            c
        }
        // node 1 long, node 2 short
        Series::G => vec![vec![2, -1], vec![-3, 2]],
    };
    Ok(c)
}

impl RootSystem {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(series, rank)?;
        let mut rs = RootSystem {
            series,
            rank,
            cartan,
            positive_roots: Vec::new(),
        };
        rs.positive_roots = rs.generate_positive_roots();
        Ok(rs)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, ordered by height then
    /// lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if (1..=self.rank).contains(&i) {
            Ok(())
        } else {
            input(format!("node index {i} outside 1..={}", self.rank))
        }
    }

    /// `α_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i - 1]).collect())
    }

    /// Converts simple-root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, beta: &[i64]) -> Weight {
        Weight(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(beta).map(|(c, b)| c * b).sum())
                .collect(),
        )
    }

    /// Expresses a weight in simple-root coordinates (rational in general).
    pub fn weight_to_root_coords(&self, mu: &Weight) -> Vec<Q> {
        let m = Matrix::from_rows(
            self.cartan
                .iter()
                .map(|row| row.iter().map(|&c| q(c)).collect())
                .collect(),
        );
        let b: Vec<Q> = mu.coords().iter().map(|&x| q(x)).collect();
        solve_square(&m, &b).expect("Cartan matrices of finite type are invertible")
    }

    /// `⟨β, h_i⟩` for a root `β` in simple-root coordinates.
    pub fn root_pairing(&self, beta: &[i64], i: usize) -> i64 {
        self.cartan[i - 1]
            .iter()
            .zip(beta)
            .map(|(c, b)| c * b)
            .sum()
    }

    /// `s_i(β)` for `β` in simple-root coordinates.
    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let p = self.root_pairing(beta, i);
        let mut out = beta.to_vec();
        out[i - 1] -= p;
        out
    }

    /// `s_i(μ) = μ − ⟨μ, h_i⟩ α_i`.
    pub fn simple_reflect(&self, i: usize, mu: &Weight) -> Result<Weight> {
        self.check_node(i)?;
        if mu.rank() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: mu.rank(),
            });
        }
        let p = mu.pairing(i);
        Ok(mu.sub(&self.simple_root(i).scaled(p)))
    }

    /// `s_i` on a rational weight given in fundamental-weight coordinates.
    pub fn simple_reflect_q(&self, i: usize, mu: &[Q]) -> Vec<Q> {
        let p = mu[i - 1].clone();
        mu.iter()
            .zip(&self.cartan)
            .map(|(m, row)| m - &p * q(row[i - 1]))
            .collect()
    }

    fn generate_positive_roots(&self) -> Vec<Vec<i64>> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..self.rank {
            let mut e = vec![0; self.rank];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 1..=self.rank {
                let r = self.reflect_root(i, &beta);
                if !seen.contains(&r) {
                    seen.insert(r.clone());
                    queue.push_back(r);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen
            .into_iter()
            .filter(|b| b.iter().all(|&x| x >= 0))
            .collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });
        pos
    }

    /// Inversion roots `β_k = s_{i_1}⋯s_{i_{k−1}}(α_{i_k})` of a word.
    pub fn inversion_roots(&self, word: &[usize]) -> Vec<Vec<i64>> {
        (0..word.len())
            .map(|k| {
                let mut beta = vec![0; self.rank];
                beta[word[k] - 1] = 1;
                for &j in word[..k].iter().rev() {
                    beta = self.reflect_root(j, &beta);
                }
                beta
            })
            .collect()
    }

    /// A word is reduced iff its inversion roots are positive and pairwise
    /// distinct. Words with out-of-range indices are not reduced.
    pub fn is_reduced(&self, word: &[usize]) -> bool {
        if word.iter().any(|i| !(1..=self.rank).contains(i)) {
            return false;
        }
        let roots = self.inversion_roots(word);
        let distinct: BTreeSet<&Vec<i64>> = roots.iter().collect();
        distinct.len() == roots.len() && roots.iter().all(|b| b.iter().all(|&x| x >= 0))
    }

    /// The lexicographically smallest reduced word for the longest element.
    pub fn longest_word(&self) -> ReducedWord {
        let n = self.positive_roots.len();
        let mut word: Vec<usize> = Vec::with_capacity(n);
        while word.len() < n {
            let next = (1..=self.rank)
                .find(|&i| {
                    word.push(i);
                    let ok = self.is_reduced(&word);
                    word.pop();
                    ok
                })
                .expect("every reduced word extends to one for w0");
            word.push(next);
        }
        ReducedWord(word)
    }
}

/// A reduced word `(i_1, …, i_r)` with 1-based node indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedWord(Vec<usize>);

impl ReducedWord {
    pub fn new(rs: &RootSystem, indices: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|i| !(1..=rs.rank()).contains(*i)) {
            return input(format!("word index {bad} outside 1..={}", rs.rank()));
        }
        if !rs.is_reduced(&indices) {
            return input(format!("word {indices:?} is not reduced"));
        }
        Ok(ReducedWord(indices))
    }

    pub fn empty() -> Self {
        ReducedWord(Vec::new())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(i_k, …, i_r)` for 1-based `k`; the word for `w_{≥k}`.
    pub fn suffix_from(&self, k: usize) -> ReducedWord {
        ReducedWord(self.0[k - 1..].to_vec())
    }

    /// `(i_1, …, i_k)`; the word for `w_{≤k}`.
    pub fn prefix_to(&self, k: usize) -> ReducedWord {
        ReducedWord(self.0[..k].to_vec())
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(s: Series, n: usize) -> RootSystem {
        RootSystem::new(s, n).unwrap()
    }

    #[test]
    fn rank_two_cartan_matrices() {
        assert_eq!(rs(Series::A, 2).cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(rs(Series::B, 2).cartan(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(rs(Series::C, 2).cartan(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(rs(Series::G, 2).cartan(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(rs(Series::A, 2).positive_roots().len(), 3);
        assert_eq!(rs(Series::B, 2).positive_roots().len(), 4);
        assert_eq!(rs(Series::G, 2).positive_roots().len(), 6);
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Series::A, 1, 1),
            (Series::A, 4, 10),
            (Series::B, 3, 9),
            (Series::C, 4, 16),
            (Series::D, 4, 12),
            (Series::D, 5, 20),
            (Series::E, 6, 36),
            (Series::E, 7, 63),
            (Series::E, 8, 120),
            (Series::F, 4, 24),
        ];
        for (s, n, count) in cases {
            assert_eq!(rs(s, n).positive_roots().len(), count, "{s}{n}");
        }
    }

    #[test]
    fn cartan_axioms_hold_for_every_series() {
        let all = [
            (Series::A, 5),
            (Series::B, 4),
            (Series::C, 3),
            (Series::D, 6),
            (Series::E, 6),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ];
        for (s, n) in all {
            let c = rs(s, n).cartan().to_vec();
            for (i, row) in c.iter().enumerate() {
                assert_eq!(row[i], 2);
                for (j, &x) in row.iter().enumerate() {
                    if i != j {
                        assert!(x <= 0);
                        assert_eq!(x == 0, c[j][i] == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_pairs_are_rejected() {
        assert!(matches!(
            RootSystem::new(Series::D, 2),
            Err(Error::Input(_))
        ));
        assert!(RootSystem::new(Series::E, 5).is_err());
        assert!(RootSystem::new(Series::G, 3).is_err());
        assert!(RootSystem::new(Series::A, 0).is_err());
        assert!(RootSystem::new(Series::F, 3).is_err());
    }

    #[test]
    fn reflections() {
        let a2 = rs(Series::A, 2);
        let lam1 = Weight::new(vec![1, 0]);
        assert_eq!(
            a2.simple_reflect(1, &lam1).unwrap(),
            Weight::new(vec![-1, 1])
        );
        assert_eq!(a2.simple_reflect(2, &lam1).unwrap(), lam1);
        assert!(a2.simple_reflect(3, &lam1).is_err());
    }

    #[test]
    fn reduced_words() {
        let a2 = rs(Series::A, 2);
        assert!(a2.is_reduced(&[1, 2, 1]));
        assert!(!a2.is_reduced(&[1, 1]));
        assert!(!a2.is_reduced(&[1, 2, 1, 2]));
        let b2 = rs(Series::B, 2);
        assert!(b2.is_reduced(&[1, 2, 1, 2]));
        assert!(b2.is_reduced(&[2, 1, 2, 1]));
        assert!(!b2.is_reduced(&[1, 2, 1, 2, 1]));
        assert!(ReducedWord::new(&a2, vec![1, 1]).is_err());
        assert!(ReducedWord::new(&a2, vec![3]).is_err());
    }

    #[test]
    fn longest_words() {
        assert_eq!(rs(Series::A, 1).longest_word().indices(), &[1]);
        assert_eq!(rs(Series::A, 2).longest_word().indices(), &[1, 2, 1]);
        assert_eq!(rs(Series::B, 2).longest_word().indices(), &[1, 2, 1, 2]);
        assert_eq!(
            rs(Series::A, 3).longest_word().indices(),
            &[1, 2, 1, 3, 2, 1]
        );
        for (s, n) in [
            (Series::D, 4),
            (Series::F, 4),
            (Series::G, 2),
            (Series::E, 6),
        ] {
            let r = rs(s, n);
            let w = r.longest_word();
            assert_eq!(w.len(), r.positive_roots().len());
            assert!(r.is_reduced(w.indices()));
        }
    }

    #[test]
    fn root_weight_round_trip() {
        let b2 = rs(Series::B, 2);
        for beta in b2.positive_roots() {
            let mu = b2.root_to_weight(beta);
            let back = b2.weight_to_root_coords(&mu);
            let expected: Vec<Q> = beta.iter().map(|&x| q(x)).collect();
            assert_eq!(back, expected);
        }
    }

    proptest! {
        #[test]
        fn reflection_is_integral_involution(
            coords in proptest::collection::vec(-5i64..6, 3),
            i in 1usize..4,
        ) {
            let r = rs(Series::B, 3);
            let mu = Weight::new(coords);
            let once = r.simple_reflect(i, &mu).unwrap();
            prop_assert_eq!(once.pairing(i), -mu.pairing(i));
            prop_assert_eq!(r.simple_reflect(i, &once).unwrap(), mu);
        }

        #[test]
        fn reduced_words_have_reduced_prefixes_and_suffixes(
            word in proptest::collection::vec(1usize..4, 0..8),
        ) {
            let r = rs(Series::C, 3);
            if r.is_reduced(&word) {
                for k in 0..=word.len() {
                    prop_assert!(r.is_reduced(&word[..k]));
                    prop_assert!(r.is_reduced(&word[k..]));
                }
            }
        }
    }
}
