use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{input, Error, Result};
use crate::linalg::{parse_q, q, Q};

/// Exponent vector `(a_1, …, a_r)` of `t_1^{a_1} ⋯ t_r^{a_r}`.
pub type Monomial = Vec<u32>;

/// Sparse polynomial in `t_1, …, t_r` over `Q`.
///
/// Terms are keyed by exponent vector in a `BTreeMap`, whose key order is the
/// lexicographic order comparing `a_1` first. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Monomial, c: Q) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    /// The variable `t_k` (1-based).
    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k - 1] = 1;
        Self::monomial(nvars, e, Q::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Q {
        self.terms.get(e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, e: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Q, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars);
        if c.is_zero() {
            return;
        }
        for (e, x) in &other.terms {
            self.add_term(e.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// `self · t_k^a` (1-based `k`).
    pub fn mul_var_pow(&self, k: usize, a: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    let mut e = e.clone();
                    e[k - 1] += a;
                    (e, x.clone())
                })
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars, "variable counts differ");
        let mut out = Polynomial::zero(self.nvars);
        for (ea, xa) in &self.terms {
            for (eb, xb) in &other.terms {
                let e: Monomial = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, xa * xb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        (0..n).fold(Polynomial::one(self.nvars), |acc, _| acc.multiply(self))
    }

    /// `∂/∂t_k` (1-based `k`).
    pub fn derivative(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (e, x) in &self.terms {
            let a = e[k - 1];
            if a > 0 {
                let mut e2 = e.clone();
                e2[k - 1] = a - 1;
                out.add_term(e2, x * q(a as i64));
            }
        }
        out
    }

    /// The substitution `t_k = 0`.
    pub fn substitute_zero(&self, k: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[k - 1] == 0)
                .map(|(e, x)| (e.clone(), x.clone()))
                .collect(),
        }
    }

    pub fn degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|e| e[k - 1]).max().unwrap_or(0)
    }

    pub fn depends_on(&self, k: usize) -> bool {
        self.terms.keys().any(|e| e[k - 1] != 0)
    }

    /// Drops `t_k` from the variable list, renumbering `t_{k+1}, …` down by
    /// one. Fails if the polynomial involves `t_k`.
    pub fn remove_variable(&self, k: usize) -> Result<Polynomial> {
        if self.depends_on(k) {
            return Err(Error::Domain(format!("polynomial depends on t{k}")));
        }
        Ok(Polynomial {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| {
                    let mut e = e.clone();
                    e.remove(k - 1);
                    (e, x.clone())
                })
                .collect(),
        })
    }

    /// Parses sums of terms such as `t1*t2 + t3^2 - 3/2*t1`.
    pub fn parse(nvars: usize, text: &str) -> Result<Polynomial> {
        let mut p = Polynomial::zero(nvars);
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return input("empty polynomial");
        }
        // split into signed terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (pos, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && pos > 0 {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if ch == '-' && pos == 0 {
                negative = true;
            } else if ch != '+' {
                current.push(ch);
            }
        }
        terms.push((negative, current));
        for (neg, term) in terms {
            if term.is_empty() {
                return input(format!("dangling sign in `{text}`"));
            }
            let mut coeff = Q::one();
            let mut exps = vec![0u32; nvars];
            for factor in term.split('*') {
                if let Some(rest) = factor.strip_prefix('t') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((i, e)) => (i, e),
                        None => (rest, "1"),
                    };
                    let k: usize = idx
                        .parse()
                        .map_err(|_| Error::Input(format!("bad variable `{factor}`")))?;
                    let e: u32 = pow
                        .parse()
                        .map_err(|_| Error::Input(format!("bad exponent `{factor}`")))?;
                    if !(1..=nvars).contains(&k) {
                        return input(format!("variable t{k} outside t1..t{nvars}"));
                    }
                    exps[k - 1] += e;
                } else {
                    coeff *= parse_q(factor)?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest terms first
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(k, &a)| {
                    if a == 1 {
                        format!("t{}", k + 1)
                    } else {
                        format!("t{}^{a}", k + 1)
                    }
                })
                .collect();
            match (abs.is_one(), vars.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{}", vars.join("*"))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&Q::one(), rhs);
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(&-Q::one(), rhs);
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Q::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.multiply(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(3, s).unwrap()
    }

    #[test]
    fn products() {
        assert_eq!(&p("t2") * &p("t2*t3"), p("t2^2*t3"));
        assert_eq!(&p("t1 + 2*t3") * &Polynomial::one(3), p("t1 + 2*t3"));
        assert_eq!(&p("t1 + t3") * &p("t1*t2"), p("t1^2*t2 + t1*t2*t3"));
        assert_eq!(p("t1 - t2").pow(2), p("t1^2 - 2*t1*t2 + t2^2"));
    }

    #[test]
    fn restriction_and_derivatives() {
        let f = p("t1*t2 + t3^2");
        assert_eq!(f.substitute_zero(3), p("t1*t2"));
        assert_eq!(f.substitute_zero(1), p("t3^2"));
        assert_eq!(Polynomial::one(3).substitute_zero(2), Polynomial::one(3));
        assert_eq!(f.derivative(3), p("2*t3"));
        assert_eq!(f.degree_in(3), 2);
        assert!(f.remove_variable(1).is_err());
        let g = f.substitute_zero(1).remove_variable(1).unwrap();
        assert_eq!(g, Polynomial::parse(2, "t2^2").unwrap());
    }

    #[test]
    fn parse_and_display() {
        let f = p("-3/2*t1*t2 + t3^2 - 1");
        assert_eq!(f.coeff(&[1, 1, 0]), -crate::linalg::q_frac(3, 2));
        assert_eq!(f.to_string(), "-3/2*t1*t2 + t3^2 - 1");
        assert_eq!(Polynomial::parse(3, &f.to_string()).unwrap(), f);
        assert!(Polynomial::parse(2, "t3").is_err());
        assert!(Polynomial::parse(2, "t1 +").is_err());
        assert!(Polynomial::parse(2, "").is_err());
        assert_eq!(p("t1 - t1"), Polynomial::zero(3));
    }
}
