use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::polynomial::{Monomial, Polynomial};
use crate::cartan::ReducedWord;
use crate::error::{input, Error, Result};

/// The four lexicographic term valuations on `Q(t_1, …, t_r)`.
///
/// | kind        | monomial order          | extremal term | emitted tuple      |
/// |-------------|-------------------------|---------------|--------------------|
/// | `HighLex`   | `<`: compare `a_1` first | highest       | `−(a_1, …, a_r)`   |
/// | `LowLex`    | `<`                      | lowest        | `(a_1, …, a_r)`    |
/// | `HighTilde` | `≺`: compare `a_r` first | highest       | `−(a_r, …, a_1)`   |
/// | `LowTilde`  | `≺`                      | lowest        | `(a_r, …, a_1)`    |
///
/// Emitted tuples are compared lexicographically, which is `<` on the plain
/// kinds and `≺` on the tilde kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ValuationKind {
    HighLex,
    LowLex,
    HighTilde,
    LowTilde,
}

impl ValuationKind {
    pub const ALL: [ValuationKind; 4] = [
        ValuationKind::HighLex,
        ValuationKind::LowLex,
        ValuationKind::HighTilde,
        ValuationKind::LowTilde,
    ];

    pub fn is_high(self) -> bool {
        matches!(self, ValuationKind::HighLex | ValuationKind::HighTilde)
    }

    pub fn is_tilde(self) -> bool {
        matches!(self, ValuationKind::HighTilde | ValuationKind::LowTilde)
    }

    /// Short machine name used in serialized reports.
    pub fn name(self) -> &'static str {
        match self {
            ValuationKind::HighLex => "v_high",
            ValuationKind::LowLex => "v_low",
            ValuationKind::HighTilde => "vt_high",
            ValuationKind::LowTilde => "vt_low",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ValuationKind::HighLex => "v^high",
            ValuationKind::LowLex => "v^low",
            ValuationKind::HighTilde => "ṽ^high",
            ValuationKind::LowTilde => "ṽ^low",
        }
    }

    /// The monomial order this kind is built on.
    pub fn compare(self, a: &[u32], b: &[u32]) -> Ordering {
        if self.is_tilde() {
            a.iter().rev().cmp(b.iter().rev())
        } else {
            a.cmp(b)
        }
    }

    /// The highest (high kinds) or lowest (low kinds) monomial of `p`.
    pub fn extremal_monomial(self, p: &Polynomial) -> Option<&Monomial> {
        let terms = p.terms();
        match self {
            ValuationKind::HighLex => terms.keys().next_back(),
            ValuationKind::LowLex => terms.keys().next(),
            ValuationKind::HighTilde => terms.keys().max_by(|a, b| self.compare(a, b)),
            ValuationKind::LowTilde => terms.keys().min_by(|a, b| self.compare(a, b)),
        }
    }

    /// Turns an exponent vector into the tuple this kind emits.
    pub fn emit(self, exps: &[u32]) -> ValueTuple {
        let mut v: Vec<i64> = exps.iter().map(|&a| a as i64).collect();
        if self.is_tilde() {
            v.reverse();
        }
        if self.is_high() {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        ValueTuple(v)
    }
}

impl fmt::Display for ValuationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ValuationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ValuationKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.label() == s || format!("{k:?}") == s)
            .ok_or_else(|| Error::Input(format!("unknown valuation kind `{s}`")))
    }
}

/// A value in `Z^r`; ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ValueTuple(pub Vec<i64>);

impl ValueTuple {
    pub fn zero(r: usize) -> Self {
        ValueTuple(vec![0; r])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn neg(&self) -> ValueTuple {
        ValueTuple(self.0.iter().map(|x| -x).collect())
    }

    /// `a^op`: coordinate reversal.
    pub fn op(&self) -> ValueTuple {
        ValueTuple(self.0.iter().rev().copied().collect())
    }

    /// `−a^op`.
    pub fn op_neg(&self) -> ValueTuple {
        ValueTuple(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn add(&self, other: &ValueTuple) -> ValueTuple {
        ValueTuple(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ValueTuple) -> ValueTuple {
        ValueTuple(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled(&self, k: i64) -> ValueTuple {
        ValueTuple(self.0.iter().map(|x| x * k).collect())
    }
}

impl fmt::Display for ValueTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Value of a nonzero polynomial under `kind`.
pub fn valuate(p: &Polynomial, kind: ValuationKind) -> Result<ValueTuple> {
    match kind.extremal_monomial(p) {
        Some(m) => Ok(kind.emit(m)),
        None => Err(Error::Domain("valuation of the zero polynomial".into())),
    }
}

/// `v(f/g) = v(f) − v(g)`.
pub fn valuate_quotient(f: &Polynomial, g: &Polynomial, kind: ValuationKind) -> Result<ValueTuple> {
    Ok(valuate(f, kind)?.sub(&valuate(g, kind)?))
}

/// Which end of the word the Chevalley generator acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `f_{i_1}` acting on the left as `−∂/∂t_1`; recovers `v^high`.
    Left,
    /// `f_{i_r}` acting on the right as `−∂/∂t_r`; recovers `ṽ^high`.
    Right,
}

/// Largest `a` with `(−∂/∂t_k)^a p ≠ 0`, and that derivative.
fn peel(p: &Polynomial, k: usize) -> (u32, Polynomial) {
    let mut a = 0;
    let mut cur = p.clone();
    loop {
        let next = -&cur.derivative(k);
        if next.is_zero() {
            return (a, cur);
        }
        cur = next;
        a += 1;
    }
}

/// The high valuations recomputed from the Chevalley action on the chart:
/// take the maximal power of the end generator that does not kill `p`,
/// apply it, restrict to the next Schubert subvariety (`t_k = 0`), recurse.
pub fn chevalley_valuate(p: &Polynomial, word: &ReducedWord, side: Side) -> Result<ValueTuple> {
    if p.is_zero() {
        return Err(Error::Domain("valuation of the zero polynomial".into()));
    }
    let r = word.len();
    if p.nvars() != r {
        return input(format!(
            "polynomial in {} variables for a word of length {r}",
            p.nvars()
        ));
    }
    let order: Vec<usize> = match side {
        Side::Left => (1..=r).collect(),
        Side::Right => (1..=r).rev().collect(),
    };
    let mut cur = p.clone();
    let mut out = Vec::with_capacity(r);
    for k in order {
        let (a, top) = peel(&cur, k);
        out.push(-(a as i64));
        cur = top.substitute_zero(k);
    }
    Ok(ValueTuple(out))
}
