mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{demazure_character, freudenthal, positive_roots, weyl_dimension};
use schubval::crystal::{demazure_crystal, full_crystal};
use schubval::rep::{build_irrep, demazure_subspace};
use schubval::{ReducedWord, RootSystem, Series, Weight};

fn cases() -> Vec<(Series, usize, Vec<i64>)> {
    vec![
        (Series::A, 1, vec![3]),
        (Series::A, 2, vec![1, 1]),
        (Series::A, 2, vec![2, 1]),
        (Series::A, 2, vec![3, 0]),
        (Series::A, 3, vec![1, 1, 1]),
        (Series::A, 3, vec![0, 2, 1]),
        (Series::B, 2, vec![1, 1]),
        (Series::B, 2, vec![2, 1]),
        (Series::C, 2, vec![1, 1]),
        (Series::C, 2, vec![1, 2]),
        (Series::G, 2, vec![1, 1]),
        (Series::G, 2, vec![1, 0]),
        (Series::G, 2, vec![0, 1]),
        (Series::B, 3, vec![1, 0, 1]),
        (Series::C, 3, vec![0, 1, 0]),
        (Series::D, 4, vec![0, 1, 0, 0]),
        (Series::F, 4, vec![0, 0, 0, 1]),
        (Series::E, 6, vec![1, 0, 0, 0, 0, 0]),
    ]
}

#[test]
fn positive_root_counts_match_the_oracle() {
    for (series, rank, expected) in [
        (Series::A, 3, 6),
        (Series::B, 3, 9),
        (Series::C, 3, 9),
        (Series::D, 4, 12),
        (Series::E, 6, 36),
        (Series::E, 7, 63),
        (Series::E, 8, 120),
        (Series::F, 4, 24),
        (Series::G, 2, 6),
    ] {
        let rs = RootSystem::new(series, rank).unwrap();
        let oracle = positive_roots(&rs.cartan().to_vec());
        assert_eq!(oracle.len(), expected, "{series}{rank}");
        let ours: BTreeSet<Vec<i64>> = rs.positive_roots().iter().cloned().collect();
        assert_eq!(ours, oracle.into_iter().collect(), "{series}{rank}");
    }
}

#[test]
fn dimensions_match_weyl_formula() {
    for (series, rank, lambda) in cases() {
        let rs = RootSystem::new(series, rank).unwrap();
        let irrep = build_irrep(&rs, &Weight::new(lambda.clone())).unwrap();
        let oracle = weyl_dimension(&rs.cartan().to_vec(), &lambda);
        assert_eq!(irrep.dim() as u128, oracle, "{series}{rank} {lambda:?}");
    }
}

#[test]
fn known_small_dimensions() {
    let dim = |s, r, l: Vec<i64>| {
        let rs = RootSystem::new(s, r).unwrap();
        weyl_dimension(&rs.cartan().to_vec(), &l)
    };
    assert_eq!(dim(Series::D, 4, vec![0, 1, 0, 0]), 28);
    assert_eq!(dim(Series::F, 4, vec![0, 0, 0, 1]), 26);
    assert_eq!(dim(Series::F, 4, vec![1, 0, 0, 0]), 52);
    assert_eq!(dim(Series::E, 6, vec![1, 0, 0, 0, 0, 0]), 27);
    assert_eq!(dim(Series::E, 7, vec![0, 0, 0, 0, 0, 0, 1]), 56);
    assert_eq!(dim(Series::E, 8, vec![0, 0, 0, 0, 0, 0, 0, 1]), 248);
    // node 1 of the G2 matrix in use is the long root
    assert_eq!(dim(Series::G, 2, vec![1, 0]), 14);
    assert_eq!(dim(Series::G, 2, vec![0, 1]), 7);
}

#[test]
fn multiplicities_match_freudenthal() {
    for (series, rank, lambda) in cases() {
        let rs = RootSystem::new(series, rank).unwrap();
        let irrep = build_irrep(&rs, &Weight::new(lambda.clone())).unwrap();
        let ours: BTreeMap<Vec<i64>, usize> = irrep
            .multiplicities()
            .into_iter()
            .map(|(w, m)| (w.coords().to_vec(), m))
            .collect();
        assert_eq!(
            ours,
            freudenthal(&rs.cartan().to_vec(), &lambda),
            "{series}{rank} {lambda:?}"
        );
    }
}

#[test]
fn crystal_weights_match_freudenthal() {
    for (series, rank, lambda) in cases().into_iter().filter(|c| c.1 <= 3) {
        let rs = RootSystem::new(series, rank).unwrap();
        let mut ours: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        for b in full_crystal(&rs, &Weight::new(lambda.clone())).unwrap() {
            *ours.entry(b.wt().coords().to_vec()).or_default() += 1;
        }
        assert_eq!(
            ours,
            freudenthal(&rs.cartan().to_vec(), &lambda),
            "{series}{rank} {lambda:?}"
        );
    }
}

fn demazure_cases() -> Vec<(Series, usize, Vec<i64>, Vec<usize>)> {
    vec![
        (Series::A, 2, vec![1, 1], vec![1]),
        (Series::A, 2, vec![1, 1], vec![1, 2]),
        (Series::A, 2, vec![2, 1], vec![2, 1]),
        (Series::A, 2, vec![1, 1], vec![1, 2, 1]),
        (Series::A, 3, vec![1, 1, 1], vec![1, 2, 1]),
        (Series::A, 3, vec![1, 1, 1], vec![2, 1, 3, 2]),
        (Series::A, 3, vec![1, 1, 1], vec![1, 2, 1, 3, 2]),
        (Series::A, 3, vec![2, 2, 2], vec![1, 2, 1, 3, 2]),
        (Series::B, 2, vec![1, 1], vec![2, 1, 2]),
        (Series::C, 2, vec![2, 1], vec![1, 2, 1]),
        (Series::G, 2, vec![1, 1], vec![2, 1, 2, 1]),
        (Series::B, 3, vec![1, 0, 1], vec![3, 2, 3, 1]),
    ]
}

#[test]
fn demazure_modules_match_demazure_characters() {
    for (series, rank, lambda, word) in demazure_cases() {
        let rs = RootSystem::new(series, rank).unwrap();
        let w = ReducedWord::new(&rs, word.clone()).unwrap();
        let lam = Weight::new(lambda.clone());
        let oracle = demazure_character(&rs.cartan().to_vec(), &lambda, &word);
        assert!(oracle.values().all(|&c| c > 0));

        let irrep = build_irrep(&rs, &lam).unwrap();
        let sub = demazure_subspace(&irrep, &w).unwrap();
        let from_module: BTreeMap<Vec<i64>, i64> = sub
            .pieces()
            .filter(|(_, basis)| !basis.is_empty())
            .map(|(s, basis)| {
                (
                    irrep.space(s).weight().coords().to_vec(),
                    basis.len() as i64,
                )
            })
            .collect();
        assert_eq!(
            from_module, oracle,
            "module {series}{rank} {lambda:?} {word:?}"
        );

        let mut from_crystal: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for b in demazure_crystal(&rs, &lam, &w).unwrap().elements() {
            *from_crystal.entry(b.wt().coords().to_vec()).or_default() += 1;
        }
        assert_eq!(
            from_crystal, oracle,
            "crystal {series}{rank} {lambda:?} {word:?}"
        );
    }
}

/// `|W|` from the orbit of a regular weight, which has trivial stabilizer.
#[test]
fn weyl_group_orders_and_longest_words() {
    for (series, rank, order) in [
        (Series::A, 2, 6),
        (Series::A, 3, 24),
        (Series::B, 2, 8),
        (Series::C, 2, 8),
        (Series::G, 2, 12),
        (Series::B, 3, 48),
    ] {
        let rs = RootSystem::new(series, rank).unwrap();
        let rho = rs.rho();
        let mut orbit = BTreeSet::from([rho.clone()]);
        let mut frontier = vec![rho.clone()];
        let mut depth = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for mu in &frontier {
                for i in 1..=rank {
                    let nu = rs.simple_reflect(i, mu).unwrap();
                    if orbit.insert(nu.clone()) {
                        next.push(nu);
                    }
                }
            }
            if !next.is_empty() {
                depth += 1;
            }
            frontier = next;
        }
        assert_eq!(orbit.len(), order, "{series}{rank}");
        let w0 = rs.longest_word();
        assert_eq!(w0.len(), depth, "{series}{rank}");
        let mut mu = rho.clone();
        for &i in w0.indices().iter().rev() {
            mu = rs.simple_reflect(i, &mu).unwrap();
        }
        assert_eq!(mu, rho.scaled(-1), "{series}{rank}");
    }
}

#[test]
fn rho_dimensions_are_powers_of_two() {
    for (series, rank, expected) in [
        (Series::A, 2, 8u128),
        (Series::A, 3, 64),
        (Series::B, 2, 16),
        (Series::C, 2, 16),
        (Series::G, 2, 64),
    ] {
        let rs = RootSystem::new(series, rank).unwrap();
        let n = positive_roots(&rs.cartan().to_vec()).len() as u32;
        assert_eq!(
            weyl_dimension(&rs.cartan().to_vec(), rs.rho().coords()),
            1 << n
        );
        assert_eq!(expected, 1 << n);
    }
}
