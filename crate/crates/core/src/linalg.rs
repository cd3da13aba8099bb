//! Dense exact linear algebra over `Q`.
//!
//! Everything here is small (weight spaces, LP tableaux), so a plain
//! row-major `Vec<Q>` is the storage of choice.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Always renders `p/q`, including integers (`3/1`), so that exactness is
/// visible in serialized output.
pub fn q_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Returns `Some(n)` when `x` is an integer that fits in `i64`.
pub fn q_to_i64(x: &Q) -> Option<i64> {
    if x.is_integer() {
        i64::try_from(x.numer()).ok()
    } else {
        None
    }
}

pub fn floor_i64(x: &Q) -> i64 {
    i64::try_from(x.floor().numer()).expect("floor out of i64 range")
}

pub fn ceil_i64(x: &Q) -> i64 {
    i64::try_from(x.ceil().numer()).expect("ceil out of i64 range")
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.rank()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

fn first_nonzero(v: &[Q]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn axpy(y: &mut [Q], a: &Q, x: &[Q]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi -= a * xi;
        }
    }
}

/// Incrementally maintained row echelon form of a subspace of `Q^n`.
///
/// Rows are kept with a unit pivot and zeros in all earlier rows' pivot
/// columns, so reduction processes rows in insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        assert_eq!(v.len(), self.width);
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        first_nonzero(&self.reduce(v.to_vec())).is_none()
    }

    /// The stored (not fully reduced) echelon rows.
    pub fn rows(&self) -> impl Iterator<Item = &Vec<Q>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Q>) -> bool {
        let mut r = self.reduce(v);
        match first_nonzero(&r) {
            None => false,
            Some(p) => {
                let inv = r[p].recip();
                for x in r.iter_mut() {
                    *x *= &inv;
                }
                self.rows.push((p, r));
                true
            }
        }
    }

    /// Fully reduced basis, sorted by pivot column. Deterministic for a given
    /// subspace regardless of insertion order.
    pub fn reduced_basis(&self) -> Vec<Vec<Q>> {
        let mut rows: Vec<(usize, Vec<Q>)> = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        for k in (0..rows.len()).rev() {
            let (pk, rk) = rows[k].clone();
            for (_, other) in rows.iter_mut().take(k) {
                if !other[pk].is_zero() {
                    let c = other[pk].clone();
                    axpy(other, &c, &rk);
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }

    pub fn same_span(&self, other: &Echelon) -> bool {
        self.width == other.width
            && self.rank() == other.rank()
            && other.rows.iter().all(|(_, r)| self.contains(r))
    }
}

/// Greedy selection of linearly independent vectors that also remembers how
/// to express any later vector in terms of the selected ones.
#[derive(Clone, Debug)]
pub struct IndependentSet {
    width: usize,
    // echelon row, pivot, and its expression in selected originals
    rows: Vec<(usize, Vec<Q>, Vec<Q>)>,
    selected: usize,
}

pub enum Insertion {
    /// The vector was independent and is now selected original number `n`.
    Selected(usize),
    /// The vector equals `Σ coeffs[k] · original_k`.
    Dependent(Vec<Q>),
}

impl IndependentSet {
    pub fn new(width: usize) -> Self {
        IndependentSet {
            width,
            rows: Vec::new(),
            selected: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.selected
    }

    pub fn is_empty(&self) -> bool {
        self.selected == 0
    }

    fn decompose(&self, v: &[Q]) -> (Vec<Q>, Vec<Q>) {
        assert_eq!(v.len(), self.width);
        let mut residual = v.to_vec();
        let mut coeffs = vec![Q::zero(); self.selected];
        for (p, row, comb) in &self.rows {
            if residual[*p].is_zero() {
                continue;
            }
            let c = residual[*p].clone();
            axpy(&mut residual, &c, row);
            for (x, y) in coeffs.iter_mut().zip(comb) {
                if !y.is_zero() {
                    *x += &c * y;
                }
            }
        }
        (residual, coeffs)
    }

    pub fn insert(&mut self, v: &[Q]) -> Insertion {
        let (residual, coeffs) = self.decompose(v);
        match first_nonzero(&residual) {
            None => Insertion::Dependent(coeffs),
            Some(p) => {
                let n = self.selected;
                self.selected += 1;
                for (_, _, comb) in self.rows.iter_mut() {
                    comb.push(Q::zero());
                }
                let inv = residual[p].recip();
                let row: Vec<Q> = residual.iter().map(|x| x * &inv).collect();
                let mut comb: Vec<Q> = coeffs.iter().map(|x| -(x * &inv)).collect();
                comb.push(inv);
                self.rows.push((p, row, comb));
                Insertion::Selected(n)
            }
        }
    }

    /// Coordinates of `v` in the selected originals, or `None` if `v` is not
    /// in their span.
    pub fn express(&self, v: &[Q]) -> Option<Vec<Q>> {
        let (residual, coeffs) = self.decompose(v);
        first_nonzero(&residual).is_none().then_some(coeffs)
    }
}

/// Solves `m · x = b` for square nonsingular `m`; `None` if singular.
pub fn solve_square(m: &Matrix, b: &[Q]) -> Option<Vec<Q>> {
    let n = m.rows();
    assert_eq!(m.cols(), n);
    assert_eq!(b.len(), n);
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let c = row[col].clone();
                axpy(row, &c, &pivot_row);
            }
        }
    }
    Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Determinant-free nondegeneracy test for square matrices.
pub fn is_nonsingular(m: &Matrix) -> bool {
    m.rows() == m.cols() && m.rank() == m.rows()
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}
