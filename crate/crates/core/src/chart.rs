//! Sections of `L_λ` over the Schubert chart as polynomials.
//!
//! For a reduced word `(i_1, …, i_r)` the chart is
//! `(t_1, …, t_r) ↦ exp(t_1 f_{i_1}) ⋯ exp(t_r f_{i_r})`. The orbit vector
//! `exp(t_1 f_{i_1}) ⋯ exp(t_r f_{i_r}) · v_λ`, written in the basis of
//! `V(λ)`, has polynomial coordinates; each coordinate is the restriction of
//! a dual-basis functional, i.e. a section divided by `τ_λ`, and the
//! `v_λ`-coordinate is the constant `1`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cartan::{ReducedWord, RootSystem, Weight};
use crate::error::{input, Result};
use crate::linalg::{q, Q};
use crate::polyval::{reduced_basis, Polynomial};
use crate::rep::{build_irrep, demazure_subspace, Irrep};

/// A vector of `V(λ)` with polynomial coordinates in the irrep basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector {
    coords: Vec<Polynomial>,
}

impl PolyVector {
    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Polynomial> {
        self.coords
    }
}

type Pieces = BTreeMap<usize, Vec<Polynomial>>;

fn apply_f_pieces(irrep: &Irrep, i: usize, v: &Pieces, nvars: usize) -> Pieces {
    let mut out: Pieces = BTreeMap::new();
    for (&s, coords) in v {
        let Some((t, m)) = irrep.space(s).f_map(i) else {
            continue;
        };
        let target = out
            .entry(t)
            .or_insert_with(|| vec![Polynomial::zero(nvars); irrep.space(t).dim()]);
        for (r, slot) in target.iter_mut().enumerate() {
            for (c, p) in coords.iter().enumerate() {
                let x = m.get(r, c);
                if !x.is_zero() && !p.is_zero() {
                    slot.add_scaled(x, p);
                }
            }
        }
    }
    out.retain(|_, coords| coords.iter().any(|p| !p.is_zero()));
    out
}

fn add_pieces(acc: &mut Pieces, v: &Pieces, nvars: usize, irrep: &Irrep) {
    for (&s, coords) in v {
        let slot = acc
            .entry(s)
            .or_insert_with(|| vec![Polynomial::zero(nvars); irrep.space(s).dim()]);
        for (a, b) in slot.iter_mut().zip(coords) {
            a.add_scaled(&Q::from_integer(1.into()), b);
        }
    }
}

/// `exp(t_k f_i) · v = Σ_a t_k^a f_i^a v / a!`; the sum stops once `f_i^a v`
/// vanishes.
fn apply_exp(irrep: &Irrep, i: usize, k: usize, v: Pieces, nvars: usize) -> Pieces {
    let mut acc = v.clone();
    let mut term = v;
    let mut a = 0i64;
    loop {
        a += 1;
        term = apply_f_pieces(irrep, i, &term, nvars);
        if term.is_empty() {
            return acc;
        }
        let inv = q(1) / q(a);
        for coords in term.values_mut() {
            for p in coords.iter_mut() {
                *p = p.mul_var_pow(k, 1).scale(&inv);
            }
        }
        add_pieces(&mut acc, &term, nvars, irrep);
    }
}

fn check_word(irrep: &Irrep, word: &ReducedWord) -> Result<()> {
    if irrep.root_system().is_reduced(word.indices()) {
        Ok(())
    } else {
        input(format!("word {word} is not reduced for this root system"))
    }
}

fn chain_on(irrep: &Irrep, word: &ReducedWord, start: Pieces) -> PolyVector {
    let r = word.len();
    let mut v = start;
    for k in (1..=r).rev() {
        v = apply_exp(irrep, word.indices()[k - 1], k, v, r);
    }
    let mut coords = vec![Polynomial::zero(r); irrep.dim()];
    for (s, piece) in v {
        let off = irrep.offset(s);
        for (j, p) in piece.into_iter().enumerate() {
            coords[off + j] = p;
        }
    }
    PolyVector { coords }
}

fn basis_piece(irrep: &Irrep, global: usize, nvars: usize) -> Pieces {
    let (s, j) = irrep.locate(global);
    let mut coords = vec![Polynomial::zero(nvars); irrep.space(s).dim()];
    coords[j] = Polynomial::one(nvars);
    BTreeMap::from([(s, coords)])
}

/// `exp(t_1 f_{i_1}) ⋯ exp(t_r f_{i_r}) · v_λ`, applied right to left.
pub fn exp_orbit_vector(irrep: &Irrep, word: &ReducedWord) -> Result<PolyVector> {
    check_word(irrep, word)?;
    Ok(chain_on(irrep, word, basis_piece(irrep, 0, word.len())))
}

/// The full matrix of `exp(t_1 f_{i_1}) ⋯ exp(t_r f_{i_r})` on `V(λ)`:
/// entry `[row][col]` is the coefficient of basis vector `row` in the image
/// of basis vector `col`.
pub fn exp_orbit_matrix(irrep: &Irrep, word: &ReducedWord) -> Result<Vec<Vec<Polynomial>>> {
    check_word(irrep, word)?;
    let r = word.len();
    let columns: Vec<PolyVector> = (0..irrep.dim())
        .map(|c| chain_on(irrep, word, basis_piece(irrep, c, r)))
        .collect();
    Ok((0..irrep.dim())
        .map(|row| columns.iter().map(|col| col.coords[row].clone()).collect())
        .collect())
}

/// Whether every coordinate at a basis vector of weight `λ − Σ d_i α_i`
/// only has monomials of `i`-degree `d_i`, where the `i`-degree sums the
/// exponents of the `t_k` with `i_k = i`.
pub fn check_weight_grading(irrep: &Irrep, word: &ReducedWord, v: &PolyVector) -> bool {
    let n = irrep.root_system().rank();
    (0..irrep.dim()).all(|g| {
        let (s, _) = irrep.locate(g);
        let depth = irrep.space(s).depth();
        v.coords[g].terms().keys().all(|e| {
            let mut d = vec![0i64; n];
            for (k, &a) in e.iter().enumerate() {
                d[word.indices()[k] - 1] += a as i64;
            }
            d == depth
        })
    })
}

/// A deterministic basis of the span of the orbit-vector coordinates: the
/// image of `H^0(X(w), L_λ)` in `Q[t_1, …, t_r]`.
pub fn section_space(irrep: &Irrep, word: &ReducedWord) -> Result<Vec<Polynomial>> {
    let v = exp_orbit_vector(irrep, word)?;
    Ok(reduced_basis(v.coords(), word.len()))
}

/// The restriction to the chart of a smaller Schubert variety: `t_k = 0`.
pub fn restrict_to_subchart(p: &Polynomial, k: usize) -> Polynomial {
    p.substitute_zero(k)
}

/// The data `(G, λ, w)` of a polarized Schubert variety with a fixed chart.
#[derive(Clone, Debug)]
pub struct SchubertCase {
    rs: RootSystem,
    lambda: Weight,
    word: ReducedWord,
}

/// Everything computed for the line bundle `L_λ^{⊗k}` on one chart.
#[derive(Clone, Debug)]
pub struct LevelSections {
    pub k: usize,
    pub irrep: Irrep,
    pub orbit: PolyVector,
    pub sections: Vec<Polynomial>,
    pub demazure_dim: usize,
}

impl SchubertCase {
    pub fn new(rs: &RootSystem, lambda: &Weight, word: &ReducedWord) -> Result<Self> {
        if lambda.rank() != rs.rank() {
            return input(format!(
                "weight {lambda} has the wrong rank for {}{}",
                rs.series(),
                rs.rank()
            ));
        }
        if !lambda.is_dominant() {
            return input(format!("weight {lambda} is not dominant"));
        }
        if !rs.is_reduced(word.indices()) {
            return input(format!("word {word} is not reduced"));
        }
        Ok(SchubertCase {
            rs: rs.clone(),
            lambda: lambda.clone(),
            word: word.clone(),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    /// Sections of `L_λ^{⊗k}`, via `H^0(X(w), L_λ^{⊗k}) ≅ V_w(kλ)^*`.
    pub fn level(&self, k: usize) -> Result<LevelSections> {
        let irrep = build_irrep(&self.rs, &self.lambda.scaled(k as i64))?;
        let orbit = exp_orbit_vector(&irrep, &self.word)?;
        let sections = reduced_basis(orbit.coords(), self.word.len());
        let demazure_dim = demazure_subspace(&irrep, &self.word)?.dim();
        Ok(LevelSections {
            k,
            irrep,
            orbit,
            sections,
            demazure_dim,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::Series;
    use crate::polyval::Polynomial;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(3, s).unwrap()
    }

    fn span_equal(a: &[Polynomial], b: &[Polynomial], nvars: usize) -> bool {
        reduced_basis(a, nvars) == reduced_basis(b, nvars)
    }

    #[test]
    fn sl2_orbit() {
        let rs = RootSystem::new(Series::A, 1).unwrap();
        let irrep = build_irrep(&rs, &Weight::new(vec![1])).unwrap();
        let w = ReducedWord::new(&rs, vec![1]).unwrap();
        let v = exp_orbit_vector(&irrep, &w).unwrap();
        assert_eq!(v.coords(), &[Polynomial::one(1), Polynomial::var(1, 1)]);
    }

    #[test]
    fn vector_representation_matrix() {
        let rs = RootSystem::new(Series::A, 2).unwrap();
        let irrep = build_irrep(&rs, &Weight::new(vec![1, 0])).unwrap();
        let w = ReducedWord::new(&rs, vec![1, 2, 1]).unwrap();
        let m = exp_orbit_matrix(&irrep, &w).unwrap();
        let expected = [["1", "0", "0"], ["t1 + t3", "1", "0"], ["t2*t3", "t2", "1"]];
        for (row, exp_row) in m.iter().zip(expected) {
            for (entry, e) in row.iter().zip(exp_row) {
                assert_eq!(entry, &p(e));
            }
        }
    }

    #[test]
    fn adjoint_sections_match_known_span() {
        let rs = RootSystem::new(Series::A, 2).unwrap();
        let irrep = build_irrep(&rs, &rs.rho()).unwrap();
        let w = ReducedWord::new(&rs, vec![1, 2, 1]).unwrap();
        let ours = section_space(&irrep, &w).unwrap();
        let known: Vec<Polynomial> = [
            "1",
            "t1 + t3",
            "t2",
            "t1*t2",
            "t2*t3",
            "t1^2*t2 + t1*t2*t3",
            "t2^2*t3",
            "t1*t2^2*t3",
        ]
        .iter()
        .map(|s| p(s))
        .collect();
        assert_eq!(ours.len(), 8);
        assert!(span_equal(&ours, &known, 3));
        let orbit = exp_orbit_vector(&irrep, &w).unwrap();
        assert!(check_weight_grading(&irrep, &w, &orbit));
        assert_eq!(orbit.coords()[0], Polynomial::one(3));
    }

    #[test]
    fn small_sections() {
        let rs = RootSystem::new(Series::A, 2).unwrap();
        let irrep = build_irrep(&rs, &rs.rho()).unwrap();
        let empty = section_space(&irrep, &ReducedWord::empty()).unwrap();
        assert_eq!(empty, vec![Polynomial::one(0)]);
        let one = section_space(&irrep, &ReducedWord::new(&rs, vec![1]).unwrap()).unwrap();
        assert!(span_equal(
            &one,
            &[Polynomial::one(1), Polynomial::var(1, 1)],
            1
        ));
    }

    #[test]
    fn restriction_lands_in_the_smaller_chart() {
        let rs = RootSystem::new(Series::B, 2).unwrap();
        let irrep = build_irrep(&rs, &rs.rho()).unwrap();
        let w = ReducedWord::new(&rs, vec![1, 2, 1, 2]).unwrap();
        let big = section_space(&irrep, &w).unwrap();
        let small = section_space(&irrep, &w.suffix_from(2)).unwrap();
        let restricted: Vec<Polynomial> = big
            .iter()
            .map(|f| restrict_to_subchart(f, 1).remove_variable(1).unwrap())
            .filter(|f| !f.is_zero())
            .collect();
        let combined: Vec<Polynomial> = small.iter().chain(&restricted).cloned().collect();
        assert_eq!(reduced_basis(&combined, 3).len(), small.len());
    }

    #[test]
    fn rejects_foreign_words() {
        let a2 = RootSystem::new(Series::A, 2).unwrap();
        let a3 = RootSystem::new(Series::A, 3).unwrap();
        let irrep = build_irrep(&a2, &a2.rho()).unwrap();
        let w = ReducedWord::new(&a3, vec![3]).unwrap();
        assert!(exp_orbit_vector(&irrep, &w).is_err());
    }
}
