//! Polynomials on the chart and their lexicographic valuations.

mod polynomial;
mod valuation;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

pub use polynomial::{Monomial, Polynomial};
pub use valuation::{
    chevalley_valuate, valuate, valuate_quotient, Side, ValuationKind, ValueTuple,
};

use crate::linalg::Q;

/// Gaussian elimination on polynomials keyed by their extremal monomial
/// under one valuation kind.
#[derive(Clone, Debug)]
pub struct Eliminator {
    kind: ValuationKind,
    nvars: usize,
    rows: BTreeMap<Monomial, Polynomial>,
}

impl Eliminator {
    pub fn new(kind: ValuationKind, nvars: usize) -> Self {
        Eliminator {
            kind,
            nvars,
            rows: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Cancels extremal monomials against stored rows until the extremal
    /// monomial is new or `p` vanishes.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut p = p.clone();
        loop {
            let Some(lead) = self.kind.extremal_monomial(&p).cloned() else {
                return p;
            };
            let Some(row) = self.rows.get(&lead) else {
                return p;
            };
            let c = p.coeff(&lead);
            p.add_scaled(&-c, row);
        }
    }

    /// Adds `p` to the span; `false` if it was already there.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        assert_eq!(p.nvars(), self.nvars, "variable counts differ");
        let r = self.reduce(p);
        let Some(lead) = self.kind.extremal_monomial(&r).cloned() else {
            return false;
        };
        let inv = Q::one() / r.coeff(&lead);
        self.rows.insert(lead, r.scale(&inv));
        true
    }

    /// Emitted values of the stored rows; these are exactly the values taken
    /// on the span minus zero.
    pub fn values(&self) -> BTreeSet<ValueTuple> {
        self.rows.keys().map(|m| self.kind.emit(m)).collect()
    }

    /// Rows sorted by value, one per value.
    pub fn rows_by_value(&self) -> Vec<(ValueTuple, Polynomial)> {
        let mut out: Vec<_> = self
            .rows
            .iter()
            .map(|(m, p)| (self.kind.emit(m), p.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// The unique basis with monic rows whose extremal monomials appear in
    /// no other row.
    pub fn fully_reduced(&self) -> Vec<Polynomial> {
        let mut rows = self.rows.clone();
        let mut leads: Vec<Monomial> = rows.keys().cloned().collect();
        // most extremal first: cancelling a lead only introduces less extremal terms
        leads.sort_by(|a, b| self.kind.compare(a, b));
        if !self.kind.is_high() {
            leads.reverse();
        }
        for lead in leads.iter().rev() {
            let pivot = rows[lead].clone();
            for (other, row) in rows.iter_mut() {
                if other == lead {
                    continue;
                }
                let c = row.coeff(lead);
                if !c.is_zero() {
                    row.add_scaled(&-c, &pivot);
                }
            }
        }
        let mut out: Vec<(Monomial, Polynomial)> = rows.into_iter().collect();
        out.sort_by(|a, b| self.kind.compare(&a.0, &b.0));
        out.into_iter().map(|(_, p)| p).collect()
    }
}

/// `v(span(ps) \ {0})`; the count equals the dimension of the span.
pub fn value_set(ps: &[Polynomial], kind: ValuationKind) -> BTreeSet<ValueTuple> {
    let Some(first) = ps.first() else {
        return BTreeSet::new();
    };
    let mut e = Eliminator::new(kind, first.nvars());
    for p in ps {
        e.insert(p);
    }
    e.values()
}

/// A basis of `span(ps)` on which `kind` takes pairwise distinct values,
/// sorted by value.
pub fn distinct_value_basis(
    ps: &[Polynomial],
    kind: ValuationKind,
) -> Vec<(ValueTuple, Polynomial)> {
    let Some(first) = ps.first() else {
        return Vec::new();
    };
    let mut e = Eliminator::new(kind, first.nvars());
    for p in ps {
        e.insert(p);
    }
    e.rows_by_value()
}

/// Canonical basis of `span(ps)`: fully reduced with respect to the
/// lexicographic order, ascending by leading monomial.
pub fn reduced_basis(ps: &[Polynomial], nvars: usize) -> Vec<Polynomial> {
    let mut e = Eliminator::new(ValuationKind::HighLex, nvars);
    for p in ps {
        e.insert(p);
    }
    e.fully_reduced()
}
