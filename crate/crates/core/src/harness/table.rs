use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cartan::ReducedWord;
use crate::polyval::{valuate, value_set, Polynomial, ValuationKind, ValueTuple};

/// One section with its four values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableColumn {
    pub section: String,
    /// `λ − wt` of the section in simple-root coordinates.
    pub depth: Vec<i64>,
    /// Keyed by valuation kind name.
    pub values: BTreeMap<String, Vec<i64>>,
}

/// The level-1 table: one column per basis section, one row per kind.
///
/// Columns come from the canonical lexicographic basis of the section
/// space. That basis realizes the `v_high` value set by construction; for
/// the other kinds the row is the value set only when the basis happens to
/// be adapted to them, and `adapted` records whether it is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationTable {
    pub columns: Vec<TableColumn>,
    pub adapted: BTreeMap<String, bool>,
    pub value_sets: BTreeMap<String, Vec<Vec<i64>>>,
}

fn depth_of(p: &Polynomial, word: &ReducedWord, rank: usize) -> Vec<i64> {
    let mut d = vec![0; rank];
    if let Some(e) = ValuationKind::HighLex.extremal_monomial(p) {
        for (k, &a) in e.iter().enumerate() {
            d[word.indices()[k] - 1] += a as i64;
        }
    }
    d
}

/// Builds the table from a basis of sections (zero entries are skipped).
pub fn valuation_table(sections: &[Polynomial], word: &ReducedWord, rank: usize) -> ValuationTable {
    let mut cols: Vec<(Vec<i64>, ValueTuple, TableColumn)> = sections
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let depth = depth_of(p, word, rank);
            let values: BTreeMap<String, Vec<i64>> = ValuationKind::ALL
                .iter()
                .map(|&k| (k.name().to_string(), valuate(p, k).expect("nonzero").0))
                .collect();
            let high = ValueTuple(values[ValuationKind::HighLex.name()].clone());
            (
                depth.clone(),
                high,
                TableColumn {
                    section: p.to_string(),
                    depth,
                    values,
                },
            )
        })
        .collect();
    // by height, then weight, then v_high
    cols.sort_by_key(|(d, high, _)| (d.iter().sum::<i64>(), Reverse(d.clone()), high.clone()));
    let columns: Vec<TableColumn> = cols.into_iter().map(|(_, _, c)| c).collect();
    let mut adapted = BTreeMap::new();
    let mut value_sets = BTreeMap::new();
    for kind in ValuationKind::ALL {
        let set = value_set(sections, kind);
        let row: BTreeSet<Vec<i64>> = columns
            .iter()
            .map(|c| c.values[kind.name()].clone())
            .collect();
        let set: Vec<Vec<i64>> = set.into_iter().map(|t| t.0).collect();
        adapted.insert(
            kind.name().to_string(),
            row.len() == columns.len() && row.into_iter().eq(set.iter().cloned()),
        );
        value_sets.insert(kind.name().to_string(), set);
    }
    ValuationTable {
        columns,
        adapted,
        value_sets,
    }
}

fn tuple_text(t: &[i64]) -> String {
    format!(
        "({})",
        t.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

impl ValuationTable {
    /// Markdown: a header row of sections, then one row per kind.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| |");
        for c in &self.columns {
            out.push_str(&format!(" {} |", c.section));
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(self.columns.len()));
        out.push('\n');
        for kind in ValuationKind::ALL {
            out.push_str(&format!("| {} |", kind.label()));
            for c in &self.columns {
                out.push_str(&format!(" {} |", tuple_text(&c.values[kind.name()])));
            }
            out.push('\n');
        }
        for kind in ValuationKind::ALL {
            if !self.adapted[kind.name()] {
                let set: Vec<String> = self.value_sets[kind.name()]
                    .iter()
                    .map(|t| tuple_text(t))
                    .collect();
                out.push_str(&format!(
                    "\nThe basis is not adapted to {}; its value set is {{{}}}.\n",
                    kind.label(),
                    set.join(", ")
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{RootSystem, Series};
    use crate::chart::section_space;
    use crate::rep::build_irrep;

    #[test]
    fn a2_adjoint_table_columns() {
        let rs = RootSystem::new(Series::A, 2).unwrap();
        let irrep = build_irrep(&rs, &rs.rho()).unwrap();
        let w = ReducedWord::new(&rs, vec![1, 2, 1]).unwrap();
        let t = valuation_table(&section_space(&irrep, &w).unwrap(), &w, 2);
        let heads: Vec<&str> = t.columns.iter().map(|c| c.section.as_str()).collect();
        assert_eq!(
            heads,
            [
                "1",
                "t1 + t3",
                "t2",
                "t1*t2",
                "t2*t3",
                "t1^2*t2 + t1*t2*t3",
                "t2^2*t3",
                "t1*t2^2*t3"
            ]
        );
        assert!(t.adapted.values().all(|&a| a));
        assert_eq!(t.columns[5].values["v_low"], vec![1, 1, 1]);
        assert_eq!(t.columns[6].values["vt_high"], vec![-1, -2, 0]);
        let md = t.to_markdown();
        assert_eq!(md.lines().count(), 6);
        assert!(md.starts_with("| | 1 | t1 + t3 |"));
    }
}
