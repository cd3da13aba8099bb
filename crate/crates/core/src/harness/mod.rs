//! The case runner: builds every object for one `(G, λ, w)`, cross-checks
//! them and produces a serializable report.

mod checks;
mod report;
mod table;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{ReducedWord, RootSystem, Series, Weight};
use crate::chart::SchubertCase;
use crate::crystal::{demazure_crystal, string_parametrization, LSPath};
use crate::error::{input, Error, Result};
use crate::polytope::QPoint;
use crate::polyval::{value_set, Polynomial, ValuationKind, ValueTuple};

pub use report::{render_report, Format};
pub use table::{valuation_table, TableColumn, ValuationTable};

/// Identifier of one cross-check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
        CheckId::C9,
        CheckId::C10,
    ];

    pub fn description(self) -> &'static str {
        match self {
            CheckId::C1 => "crystal size = Demazure module dimension = section-space dimension",
            CheckId::C2 => "string parametrization image = -(v_high value set)",
            CheckId::C3 => "-(vt_high value set) carries the Demazure weight multiset",
            CheckId::C4 => "v_low value set = -op(vt_high value set)",
            CheckId::C5 => "vt_low value set = -op(v_high value set)",
            CheckId::C6 => {
                "level-1 bodies contain no extra lattice points; higher levels stabilize"
            }
            CheckId::C7 => "valuation axioms and Chevalley recursion on sections",
            CheckId::C8 => "Demazure crystal does not depend on the reduced word",
            CheckId::C9 => "changing the reference section shifts values by k v(g)",
            CheckId::C10 => "v_low body = -op(vt_high body), vt_low body = -op(v_high body)",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Input(format!("unknown check `{s}`")))
    }
}

/// Parses `all` or a comma-separated list such as `C1,C4,C5`.
pub fn parse_checks(s: &str) -> Result<Vec<CheckId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut out: Vec<CheckId> = s.split(',').map(str::parse).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// One case to verify. An empty `checks` list means all of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub series: Series,
    pub rank: usize,
    pub word: Vec<usize>,
    pub lambda: Vec<i64>,
    pub kmax: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alt_word: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckId>,
}

impl CaseSpec {
    pub fn new(
        series: Series,
        rank: usize,
        word: Vec<usize>,
        lambda: Vec<i64>,
        kmax: usize,
    ) -> Self {
        CaseSpec {
            name: None,
            series,
            rank,
            word,
            lambda,
            kmax,
            alt_word: None,
            checks: Vec::new(),
        }
    }

    pub fn with_alt_word(mut self, alt: Vec<usize>) -> Self {
        self.alt_word = Some(alt);
        self
    }

    pub fn with_checks(mut self, checks: Vec<CheckId>) -> Self {
        self.checks = checks;
        self
    }

    fn requested(&self) -> Vec<CheckId> {
        if self.checks.is_empty() {
            CheckId::ALL.to_vec()
        } else {
            let mut c = self.checks.clone();
            c.sort();
            c.dedup();
            c
        }
    }

    /// Validates the case and builds the typed objects.
    pub fn resolve(&self) -> Result<(SchubertCase, Option<ReducedWord>)> {
        let rs = RootSystem::new(self.series, self.rank)?;
        if self.lambda.len() != self.rank {
            return input(format!(
                "lambda has {} coordinates, rank is {}",
                self.lambda.len(),
                self.rank
            ));
        }
        if self.kmax == 0 {
            return input("kmax must be at least 1");
        }
        let word = ReducedWord::new(&rs, self.word.clone())?;
        let case = SchubertCase::new(&rs, &Weight::new(self.lambda.clone()), &word)?;
        let alt = match &self.alt_word {
            Some(a) => Some(ReducedWord::new(&rs, a.clone())?),
            None => None,
        };
        Ok((case, alt))
    }
}

/// The case fields echoed in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseInfo {
    pub series: Series,
    pub rank: usize,
    pub word: Vec<usize>,
    pub lambda: Vec<i64>,
    pub kmax: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not be decided from the computed levels.
    Inconclusive,
    /// The check needs input the case did not supply.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: CheckId,
    /// `false` only for [`Status::Fail`].
    pub pass: bool,
    pub status: Status,
    pub witness: serde_json::Value,
}

/// A value set (or string image) at one level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub k: usize,
    pub kind: String,
    pub tuples: Vec<Vec<i64>>,
}

/// Vertices of a level-1 body.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeRecord {
    pub kind: String,
    pub vertices: Vec<QPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: CaseInfo,
    pub checks: Vec<CheckResult>,
    pub levels: Vec<LevelRecord>,
    pub polytopes: Vec<PolytopeRecord>,
    pub table: ValuationTable,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl CaseReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, id: CheckId) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Kind label of the string parametrization image in reports.
pub const PHI: &str = "phi";
/// Kind label of `−(vt_high value set)`, the image of the other embedding.
pub const PSI: &str = "psi";

/// Everything computed for one level `k`.
#[derive(Clone, Debug)]
pub struct LevelData {
    pub k: usize,
    pub demazure_dim: usize,
    pub sections: Vec<Polynomial>,
    pub values: BTreeMap<ValuationKind, BTreeSet<ValueTuple>>,
    pub crystal: BTreeSet<LSPath>,
    pub phi: BTreeSet<ValueTuple>,
    /// `kλ − wt(b)` in simple-root coordinates, one per crystal element.
    pub crystal_depths: Vec<Vec<i64>>,
}

impl LevelData {
    pub fn values(&self, kind: ValuationKind) -> &BTreeSet<ValueTuple> {
        &self.values[&kind]
    }

    pub fn psi(&self) -> BTreeSet<ValueTuple> {
        self.values(ValuationKind::HighTilde)
            .iter()
            .map(ValueTuple::neg)
            .collect()
    }
}

/// Computes sections, value sets and the Demazure crystal at level `k`.
pub fn compute_level(case: &SchubertCase, k: usize) -> Result<LevelData> {
    let rs = case.root_system();
    let kl = case.lambda().scaled(k as i64);
    let (sections, crystal) =
        rayon::join(|| case.level(k), || demazure_crystal(rs, &kl, case.word()));
    let sections = sections?;
    let crystal = crystal?;
    let values: BTreeMap<ValuationKind, BTreeSet<ValueTuple>> = ValuationKind::ALL
        .par_iter()
        .map(|&kind| (kind, value_set(&sections.sections, kind)))
        .collect();
    let phi = crystal
        .elements()
        .par_iter()
        .map(|b| string_parametrization(rs, &kl, b, case.word()))
        .collect::<Result<BTreeSet<_>>>()?;
    let crystal_depths = crystal
        .elements()
        .iter()
        .map(|b| {
            rs.weight_to_root_coords(&kl.sub(&b.wt()))
                .iter()
                .map(|x| crate::linalg::q_to_i64(x).expect("weights of V(kλ) lie in kλ − Q_+"))
                .collect()
        })
        .collect();
    Ok(LevelData {
        k,
        demazure_dim: sections.demazure_dim,
        sections: sections.sections,
        values,
        crystal: crystal.elements().clone(),
        phi,
        crystal_depths,
    })
}

fn tuples(set: &BTreeSet<ValueTuple>) -> Vec<Vec<i64>> {
    set.iter().map(|t| t.coords().to_vec()).collect()
}

fn points(set: &BTreeSet<ValueTuple>) -> Vec<QPoint> {
    set.iter().map(QPoint::from).collect()
}

/// Runs every requested check on one case.
pub fn run_case(spec: &CaseSpec) -> Result<CaseReport> {
    run_case_timed(spec, false)
}

/// As [`run_case`]; with `timed` the report carries the wall-clock time,
/// which makes it non-deterministic.
pub fn run_case_timed(spec: &CaseSpec, timed: bool) -> Result<CaseReport> {
    let start = Instant::now();
    let (case, alt) = spec.resolve()?;
    let levels: Vec<LevelData> = (1..=spec.kmax)
        .into_par_iter()
        .map(|k| compute_level(&case, k))
        .collect::<Result<_>>()?;
    let ctx = checks::Context {
        case: &case,
        alt: alt.as_ref(),
        levels: &levels,
    };
    let results: Vec<CheckResult> = spec
        .requested()
        .par_iter()
        .map(|&id| checks::run(&ctx, id))
        .collect::<Result<_>>()?;

    let mut level_records = Vec::new();
    for l in &levels {
        for kind in ValuationKind::ALL {
            level_records.push(LevelRecord {
                k: l.k,
                kind: kind.name().into(),
                tuples: tuples(l.values(kind)),
            });
        }
        level_records.push(LevelRecord {
            k: l.k,
            kind: PHI.into(),
            tuples: tuples(&l.phi),
        });
        level_records.push(LevelRecord {
            k: l.k,
            kind: PSI.into(),
            tuples: tuples(&l.psi()),
        });
    }
    let first = &levels[0];
    let mut bodies: Vec<(String, Vec<QPoint>)> = ValuationKind::ALL
        .iter()
        .map(|k| (k.name().to_string(), points(first.values(*k))))
        .collect();
    bodies.push((PHI.into(), points(&first.phi)));
    bodies.push((PSI.into(), points(&first.psi())));
    let polytopes = bodies
        .into_par_iter()
        .map(|(kind, pts)| {
            Ok(PolytopeRecord {
                kind,
                vertices: crate::polytope::extreme_points(&pts)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let table = valuation_table(&first.sections, case.word(), case.root_system().rank());
    Ok(CaseReport {
        case: CaseInfo {
            series: spec.series,
            rank: spec.rank,
            word: spec.word.clone(),
            lambda: spec.lambda.clone(),
            kmax: spec.kmax,
        },
        checks: results,
        levels: level_records,
        polytopes,
        table,
        timing: timed.then(|| Timing {
            total_ms: start.elapsed().as_millis() as u64,
        }),
    })
}

/// The shipped case matrix.
pub fn default_matrix() -> Vec<CaseSpec> {
    serde_json::from_str(include_str!("../../fixtures/matrix.json")).expect("fixture matrix parses")
}

/// Demazure subcases with proper subwords of the longest element.
pub fn demazure_subcases() -> Vec<CaseSpec> {
    serde_json::from_str(include_str!("../../fixtures/demazure.json"))
        .expect("fixture subcases parse")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_ids_parse() {
        assert_eq!(parse_checks("all").unwrap().len(), 10);
        assert_eq!(
            parse_checks("c5,C1,C5").unwrap(),
            vec![CheckId::C1, CheckId::C5]
        );
        assert!(parse_checks("C11").is_err());
    }

    #[test]
    fn invalid_specs() {
        let bad_word = CaseSpec::new(Series::A, 2, vec![1, 1], vec![1, 1], 1);
        assert!(matches!(run_case(&bad_word), Err(Error::Input(_))));
        let bad_lambda = CaseSpec::new(Series::A, 2, vec![1], vec![-1, 1], 1);
        assert!(matches!(run_case(&bad_lambda), Err(Error::Input(_))));
        let bad_k = CaseSpec::new(Series::A, 2, vec![1], vec![1, 1], 0);
        assert!(matches!(run_case(&bad_k), Err(Error::Input(_))));
        let bad_rank = CaseSpec::new(Series::B, 1, vec![1], vec![1], 1);
        assert!(matches!(run_case(&bad_rank), Err(Error::Input(_))));
    }

    #[test]
    fn point_variety() {
        let spec = CaseSpec::new(Series::B, 2, vec![], vec![1, 1], 2);
        let report = run_case(&spec).unwrap();
        assert!(report.pass(), "{:#?}", report.checks);
        for level in &report.levels {
            assert_eq!(level.tuples, vec![Vec::<i64>::new()]);
        }
    }

    #[test]
    fn a2_adjoint_passes() {
        let spec =
            CaseSpec::new(Series::A, 2, vec![1, 2, 1], vec![1, 1], 2).with_alt_word(vec![2, 1, 2]);
        let report = run_case(&spec).unwrap();
        assert!(report.pass(), "{:#?}", report.checks);
        assert_eq!(report.checks.len(), 10);
        assert!(report.checks.iter().all(|c| c.status == Status::Pass));
    }

    #[test]
    fn fixtures_parse() {
        assert!(!default_matrix().is_empty());
        for spec in default_matrix().iter().chain(&demazure_subcases()) {
            spec.resolve().unwrap();
        }
    }
}
