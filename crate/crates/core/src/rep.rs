//! The irreducible module `V(λ)` and its Demazure submodules.
//!
//! Vectors of `V(λ)` are spanned by lowering words `f_{j_1}⋯f_{j_m} v_λ`
//! ([`FWord`]). A basis is picked weight space by weight space, walking down
//! from `λ`: every candidate `f_j u` (with `u` a basis vector one level up) is
//! represented by the tuple of its images `e_i f_j u`, which are already known
//! in the spaces above. In an irreducible module only `0` is killed by all
//! `e_i` below the top, so that representation is faithful and linear
//! independence of candidates is decided exactly on it. The same recursion
//! yields the contravariant Gram matrix of each chosen basis.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{ReducedWord, RootSystem, Weight};
use crate::error::{input, Result};
use crate::linalg::{q, Echelon, IndependentSet, Insertion, Matrix, Q};

/// `f_{j_1} ⋯ f_{j_m} · v_λ`, stored as `(j_1, …, j_m)` with 1-based nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FWord(Vec<usize>);

impl FWord {
    pub fn new(indices: Vec<usize>) -> Self {
        FWord(indices)
    }

    pub fn empty() -> Self {
        FWord(Vec::new())
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

    /// `f_j · self`.
    pub fn lowered(&self, j: usize) -> FWord {
        let mut w = Vec::with_capacity(self.0.len() + 1);
        w.push(j);
        w.extend_from_slice(&self.0);
        FWord(w)
    }

    pub fn weight(&self, rs: &RootSystem, lambda: &Weight) -> Weight {
        self.0
            .iter()
            .fold(lambda.clone(), |mu, &j| mu.sub(&rs.simple_root(j)))
    }
}

/// A finite rational combination of lowering words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalVector {
    terms: BTreeMap<FWord, Q>,
}

impl FormalVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: FWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Q::one());
        FormalVector { terms }
    }

    pub fn add_term(&mut self, w: FWord, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<FWord, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self, rs: &RootSystem, lambda: &Weight) -> bool {
        let mut weights = self.terms.keys().map(|w| w.weight(rs, lambda));
        match weights.next() {
            None => true,
            Some(first) => weights.all(|w| w == first),
        }
    }
}

/// `e_i` on the free span of lowering words, using `[e_i, f_j] = δ_ij h_i`,
/// `h_i` acting by the weight pairing, and `e_i v_λ = 0`.
pub fn apply_e(rs: &RootSystem, lambda: &Weight, i: usize, v: &FormalVector) -> FormalVector {
    let mut out = FormalVector::zero();
    for (word, c) in v.terms() {
        let js = word.indices();
        // ⟨weight to the right of position k, h_i⟩, accumulated right to left
        let mut pairing = lambda.pairing(i);
        for k in (0..js.len()).rev() {
            if js[k] == i && pairing != 0 {
                let mut rest = js[..k].to_vec();
                rest.extend_from_slice(&js[k + 1..]);
                out.add_term(FWord(rest), c * q(pairing));
            }
            pairing -= rs.cartan()[i - 1][js[k] - 1];
        }
    }
    out
}

/// Memoizing evaluator of the contravariant form on lowering words.
pub struct ContravariantForm<'a> {
    rs: &'a RootSystem,
    lambda: Weight,
    memo: HashMap<(FWord, FWord), Q>,
}

impl<'a> ContravariantForm<'a> {
    pub fn new(rs: &'a RootSystem, lambda: &Weight) -> Self {
        ContravariantForm {
            rs,
            lambda: lambda.clone(),
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, u: &FWord, v: &FWord) -> Q {
        if u.len() != v.len() || u.weight(self.rs, &self.lambda) != v.weight(self.rs, &self.lambda)
        {
            return Q::zero();
        }
        if u.is_empty() {
            return Q::one();
        }
        let key = (u.clone(), v.clone());
        if let Some(x) = self.memo.get(&key) {
            return x.clone();
        }
        let j = u.indices()[0];
        let rest = FWord(u.indices()[1..].to_vec());
        let ev = apply_e(
            self.rs,
            &self.lambda,
            j,
            &FormalVector::from_word(v.clone()),
        );
        let mut acc = Q::zero();
        for (w, c) in ev.terms() {
            let x = self.eval(&rest, w);
            if !x.is_zero() {
                acc += c * x;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

/// `⟨u, v⟩` with `⟨v_λ, v_λ⟩ = 1` and `⟨f_i u, v⟩ = ⟨u, e_i v⟩`.
pub fn contravariant_form(rs: &RootSystem, lambda: &Weight, u: &FWord, v: &FWord) -> Q {
    ContravariantForm::new(rs, lambda).eval(u, v)
}

/// One weight space `V(λ)_μ` together with the Chevalley maps leaving it.
#[derive(Clone, Debug)]
pub struct WeightSpace {
    weight: Weight,
    depth: Vec<i64>,
    basis: Vec<FWord>,
    gram: Matrix,
    f_maps: Vec<Option<(usize, Matrix)>>,
    e_maps: Vec<Option<(usize, Matrix)>>,
}

impl WeightSpace {
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// `λ − μ` in simple-root coordinates.
    pub fn depth(&self) -> &[i64] {
        &self.depth
    }

    pub fn height(&self) -> i64 {
        self.depth.iter().sum()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FWord] {
        &self.basis
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Target space and matrix of `f_i` (1-based `i`); `None` when `f_i`
    /// kills the whole space.
    pub fn f_map(&self, i: usize) -> Option<(usize, &Matrix)> {
        self.f_maps[i - 1].as_ref().map(|(t, m)| (*t, m))
    }

    pub fn e_map(&self, i: usize) -> Option<(usize, &Matrix)> {
        self.e_maps[i - 1].as_ref().map(|(t, m)| (*t, m))
    }
}

/// The irreducible highest weight module `V(λ)`.
#[derive(Clone, Debug)]
pub struct Irrep {
    rs: RootSystem,
    highest: Weight,
    spaces: Vec<WeightSpace>,
    index: HashMap<Weight, usize>,
    offsets: Vec<usize>,
    dim: usize,
}

/// A vector supported in a single weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub space: usize,
    pub coords: Vec<Q>,
}

// (column in source, image coordinates)
type Column = (usize, Vec<Q>);

struct Candidate {
    node: usize,
    source: usize,
    column: usize,
}

struct BuiltSpace {
    space: WeightSpace,
    // (source space, node, column in source) -> coordinates in the new space
    f_columns: Vec<(usize, usize, usize, Vec<Q>)>,
}

fn build_space(
    rs: &RootSystem,
    spaces: &[WeightSpace],
    index_by_depth: &HashMap<Vec<i64>, usize>,
    depth: &[i64],
    candidates: &[Candidate],
) -> Option<BuiltSpace> {
    let n = rs.rank();
    let above = |i: usize| -> Option<usize> {
        let mut d = depth.to_vec();
        d[i - 1] -= 1;
        if d[i - 1] < 0 {
            return None;
        }
        index_by_depth.get(&d).copied()
    };
    // (node, target space, offset in the e-image vector)
    let mut blocks: Vec<(usize, usize, usize)> = Vec::new();
    let mut width = 0;
    for i in 1..=n {
        if let Some(t) = above(i) {
            blocks.push((i, t, width));
            width += spaces[t].dim();
        }
    }

    let e_image = |c: &Candidate| -> Vec<Q> {
        let mut out = vec![Q::zero(); width];
        let src = &spaces[c.source];
        for &(i, target, off) in &blocks {
            // e_i f_j v = f_j e_i v + δ_ij ⟨μ, h_i⟩ v
            if let Some((up, e)) = src.e_map(i) {
                let ev = e.col(c.column);
                if let (true, Some((t, f))) =
                    (ev.iter().any(|x| !x.is_zero()), spaces[up].f_map(c.node))
                {
                    debug_assert_eq!(t, target);
                    for (k, x) in f.mul_vec(&ev).into_iter().enumerate() {
                        out[off + k] += x;
                    }
                }
            }
            if i == c.node {
                debug_assert_eq!(target, c.source);
                out[off + c.column] += q(src.weight.pairing(i));
            }
        }
        out
    };

    let images: Vec<Vec<Q>> = candidates.iter().map(e_image).collect();
    let mut indep = IndependentSet::new(width);
    let mut chosen: Vec<usize> = Vec::new();
    let mut coords: Vec<Vec<Q>> = Vec::with_capacity(candidates.len());
    for (k, img) in images.iter().enumerate() {
        match indep.insert(img) {
            Insertion::Selected(s) => {
                chosen.push(k);
                let mut v = vec![Q::zero(); s + 1];
                v[s] = Q::one();
                coords.push(v);
            }
            Insertion::Dependent(c) => coords.push(c),
        }
    }
    if chosen.is_empty() {
        return None;
    }
    let dim = chosen.len();
    for c in coords.iter_mut() {
        c.resize(dim, Q::zero());
    }

    let basis: Vec<FWord> = chosen
        .iter()
        .map(|&k| {
            let c = &candidates[k];
            spaces[c.source].basis[c.column].lowered(c.node)
        })
        .collect();

    let mut e_maps: Vec<Option<(usize, Matrix)>> = vec![None; n];
    for &(i, target, off) in &blocks {
        let rows = spaces[target].dim();
        let cols: Vec<Vec<Q>> = chosen
            .iter()
            .map(|&k| images[k][off..off + rows].to_vec())
            .collect();
        let m = Matrix::from_cols(rows, &cols);
        if !m.is_zero() {
            e_maps[i - 1] = Some((target, m));
        }
    }

    // ⟨f_j v_b, u⟩ = ⟨v_b, e_j u⟩ computed in the space above
    let mut gram = Matrix::zeros(dim, dim);
    for (a, &ka) in chosen.iter().enumerate() {
        let ca = &candidates[ka];
        let src = &spaces[ca.source];
        let off = blocks
            .iter()
            .find(|b| b.0 == ca.node)
            .expect("source block")
            .2;
        for (b, &kb) in chosen.iter().enumerate() {
            let ej = &images[kb][off..off + src.dim()];
            let mut acc = Q::zero();
            for (d, x) in ej.iter().enumerate() {
                if !x.is_zero() {
                    acc += src.gram.get(ca.column, d) * x;
                }
            }
            gram.set(a, b, acc);
        }
    }

    let weight = spaces[candidates[0].source]
        .weight
        .sub(&rs.simple_root(candidates[0].node));
    let f_columns = candidates
        .iter()
        .zip(coords)
        .map(|(c, v)| (c.source, c.node, c.column, v))
        .collect();
    Some(BuiltSpace {
        space: WeightSpace {
            weight,
            depth: depth.to_vec(),
            basis,
            gram,
            f_maps: vec![None; n],
            e_maps,
        },
        f_columns,
    })
}

/// Builds `V(λ)` for a dominant `λ`.
pub fn build_irrep(rs: &RootSystem, lambda: &Weight) -> Result<Irrep> {
    if lambda.rank() != rs.rank() {
        return input(format!(
            "weight {lambda} has rank {}, expected {}",
            lambda.rank(),
            rs.rank()
        ));
    }
    if !lambda.is_dominant() {
        return input(format!("weight {lambda} is not dominant"));
    }
    let n = rs.rank();
    let mut spaces: Vec<WeightSpace> = vec![WeightSpace {
        weight: lambda.clone(),
        depth: vec![0; n],
        basis: vec![FWord::empty()],
        gram: Matrix::identity(1),
        f_maps: vec![None; n],
        e_maps: vec![None; n],
    }];
    let mut index_by_depth: HashMap<Vec<i64>, usize> = HashMap::new();
    index_by_depth.insert(vec![0; n], 0);
    let mut frontier: Vec<usize> = vec![0];

    while !frontier.is_empty() {
        let mut groups: BTreeMap<Vec<i64>, Vec<Candidate>> = BTreeMap::new();
        for &s in &frontier {
            for j in 1..=n {
                // f_j v = 0 unless the j-string through μ continues down
                let mu = &spaces[s].weight;
                let mut d = spaces[s].depth.clone();
                d[j - 1] += 1;
                let group = groups.entry(d).or_default();
                if mu.pairing(j) <= 0 && spaces[s].e_map(j).is_none() {
                    continue;
                }
                for column in 0..spaces[s].dim() {
                    group.push(Candidate {
                        node: j,
                        source: s,
                        column,
                    });
                }
            }
        }
        for group in groups.values_mut() {
            group.sort_by_key(|c| (c.node, c.column));
        }
        let built: Vec<(Vec<i64>, Option<BuiltSpace>)> = groups
            .par_iter()
            .map(|(depth, cands)| {
                let b = if cands.is_empty() {
                    None
                } else {
                    build_space(rs, &spaces, &index_by_depth, depth, cands)
                };
                (depth.clone(), b)
            })
            .collect();

        let mut next = Vec::new();
        for (depth, b) in built {
            let Some(b) = b else { continue };
            let id = spaces.len();
            index_by_depth.insert(depth, id);
            let dim = b.space.dim();
            // assemble f_j : source → new space, column by column
            let mut cols: BTreeMap<(usize, usize), Vec<Column>> = BTreeMap::new();
            for (src, node, col, v) in b.f_columns {
                cols.entry((src, node)).or_default().push((col, v));
            }
            for ((src, node), mut vs) in cols {
                vs.sort_by_key(|(c, _)| *c);
                let src_dim = spaces[src].dim();
                debug_assert_eq!(vs.len(), src_dim);
                let columns: Vec<Vec<Q>> = vs.into_iter().map(|(_, v)| v).collect();
                let m = Matrix::from_cols(dim, &columns);
                if !m.is_zero() {
                    spaces[src].f_maps[node - 1] = Some((id, m));
                }
            }
            spaces.push(b.space);
            next.push(id);
        }
        frontier = next;
    }

    let mut offsets = Vec::with_capacity(spaces.len());
    let mut dim = 0;
    for s in &spaces {
        offsets.push(dim);
        dim += s.dim();
    }
    let index = spaces
        .iter()
        .enumerate()
        .map(|(k, s)| (s.weight.clone(), k))
        .collect();
    Ok(Irrep {
        rs: rs.clone(),
        highest: lambda.clone(),
        spaces,
        index,
        offsets,
        dim,
    })
}

impl Irrep {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Weight spaces ordered by height of `λ − μ`; space `0` is `V(λ)_λ`.
    pub fn spaces(&self) -> &[WeightSpace] {
        &self.spaces
    }

    pub fn space(&self, k: usize) -> &WeightSpace {
        &self.spaces[k]
    }

    pub fn space_of(&self, mu: &Weight) -> Option<usize> {
        self.index.get(mu).copied()
    }

    /// Position of the first basis vector of space `k` in global coordinates.
    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k]
    }

    /// Global basis index → (space, position within the space).
    pub fn locate(&self, global: usize) -> (usize, usize) {
        let k = self.offsets.partition_point(|&o| o <= global) - 1;
        (k, global - self.offsets[k])
    }

    pub fn multiplicities(&self) -> BTreeMap<Weight, usize> {
        self.spaces
            .iter()
            .map(|s| (s.weight.clone(), s.dim()))
            .collect()
    }

    pub fn apply_f(&self, i: usize, v: &WeightVector) -> Option<WeightVector> {
        let (t, m) = self.spaces[v.space].f_map(i)?;
        let coords = m.mul_vec(&v.coords);
        coords
            .iter()
            .any(|x| !x.is_zero())
            .then_some(WeightVector { space: t, coords })
    }

    pub fn apply_e(&self, i: usize, v: &WeightVector) -> Option<WeightVector> {
        let (t, m) = self.spaces[v.space].e_map(i)?;
        let coords = m.mul_vec(&v.coords);
        coords
            .iter()
            .any(|x| !x.is_zero())
            .then_some(WeightVector { space: t, coords })
    }

    pub fn highest_vector(&self) -> WeightVector {
        WeightVector {
            space: 0,
            coords: vec![Q::one()],
        }
    }

    /// The vector `f_{j_1}⋯f_{j_m} v_λ`, or `None` if it vanishes.
    pub fn word_vector(&self, w: &FWord) -> Option<WeightVector> {
        let mut v = self.highest_vector();
        for &j in w.indices().iter().rev() {
            v = self.apply_f(j, &v)?;
        }
        Some(v)
    }

    pub fn to_global(&self, v: &WeightVector) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim];
        let off = self.offsets[v.space];
        for (k, x) in v.coords.iter().enumerate() {
            out[off + k] = x.clone();
        }
        out
    }
}

/// The Demazure module `V_w(λ) = span{f_{i_1}^{a_1}⋯f_{i_r}^{a_r} v_λ}`,
/// stored as one echelon basis per weight space.
#[derive(Clone, Debug)]
pub struct DemazureSubspace {
    word: ReducedWord,
    pieces: BTreeMap<usize, Echelon>,
}

pub fn demazure_subspace(irrep: &Irrep, word: &ReducedWord) -> Result<DemazureSubspace> {
    if !irrep.root_system().is_reduced(word.indices()) {
        return input(format!("word {word} is not reduced for this root system"));
    }
    let mut pieces: BTreeMap<usize, Echelon> = BTreeMap::new();
    let mut top = Echelon::new(1);
    top.insert(vec![Q::one()]);
    pieces.insert(0, top);

    for &i in word.indices().iter().rev() {
        let mut layer: Vec<WeightVector> = pieces
            .iter()
            .flat_map(|(&s, e)| {
                e.rows().map(move |r| WeightVector {
                    space: s,
                    coords: r.clone(),
                })
            })
            .collect();
        // exponents are found by applying f_i until everything vanishes
        loop {
            layer = layer.iter().filter_map(|v| irrep.apply_f(i, v)).collect();
            if layer.is_empty() {
                break;
            }
            for v in &layer {
                pieces
                    .entry(v.space)
                    .or_insert_with(|| Echelon::new(irrep.space(v.space).dim()))
                    .insert(v.coords.clone());
            }
        }
    }
    Ok(DemazureSubspace {
        word: word.clone(),
        pieces,
    })
}

impl DemazureSubspace {
    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn dim(&self) -> usize {
        self.pieces.values().map(Echelon::rank).sum()
    }

    /// Per weight space: fully reduced basis in that space's coordinates.
    pub fn pieces(&self) -> impl Iterator<Item = (usize, Vec<Vec<Q>>)> + '_ {
        self.pieces.iter().map(|(&s, e)| (s, e.reduced_basis()))
    }

    /// Basis in global coordinates of the parent module.
    pub fn basis(&self, irrep: &Irrep) -> Vec<Vec<Q>> {
        self.pieces()
            .flat_map(|(s, rows)| {
                rows.into_iter()
                    .map(move |coords| irrep.to_global(&WeightVector { space: s, coords }))
            })
            .collect()
    }

    pub fn contains(&self, v: &WeightVector) -> bool {
        if v.coords.iter().all(Zero::is_zero) {
            return true;
        }
        self.pieces
            .get(&v.space)
            .is_some_and(|e| e.contains(&v.coords))
    }

    pub fn same_span(&self, other: &DemazureSubspace) -> bool {
        self.pieces.len() == other.pieces.len()
            && self
                .pieces
                .iter()
                .all(|(s, e)| other.pieces.get(s).is_some_and(|o| o.same_span(e)))
    }
}
