use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use super::{points, CheckId, CheckResult, LevelData, Status};
use crate::cartan::ReducedWord;
use crate::chart::SchubertCase;
use crate::crystal::demazure_crystal;
use crate::error::Result;
use crate::linalg::q;
use crate::polytope::{contains, extreme_points, hull_equal, lattice_points, op_negate, QPoint};
use crate::polyval::{
    chevalley_valuate, distinct_value_basis, valuate, valuate_quotient, Polynomial, Side,
    ValuationKind, ValueTuple,
};

/// Longest list printed in a witness.
const SHOW: usize = 8;

pub(super) struct Context<'a> {
    pub case: &'a SchubertCase,
    pub alt: Option<&'a ReducedWord>,
    pub levels: &'a [LevelData],
}

fn done(id: CheckId, status: Status, witness: Value) -> CheckResult {
    CheckResult {
        id,
        pass: status != Status::Fail,
        status,
        witness,
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn show<T: serde::Serialize>(items: impl IntoIterator<Item = T>) -> Value {
    json!(items.into_iter().take(SHOW).collect::<Vec<_>>())
}

fn set_witness(k: usize, expected: &BTreeSet<ValueTuple>, found: &BTreeSet<ValueTuple>) -> Value {
    json!({
        "k": k,
        "missing": show(expected.difference(found)),
        "extra": show(found.difference(expected)),
    })
}

/// Compares two sets level by level; the witness lists differences.
fn compare_sets(
    id: CheckId,
    levels: &[LevelData],
    f: impl Fn(&LevelData) -> (BTreeSet<ValueTuple>, BTreeSet<ValueTuple>),
) -> CheckResult {
    let mut bad = Vec::new();
    let mut sizes = Vec::new();
    for l in levels {
        let (expected, found) = f(l);
        sizes.push(found.len());
        if expected != found {
            bad.push(set_witness(l.k, &expected, &found));
        }
    }
    if bad.is_empty() {
        done(id, Status::Pass, json!({ "sizes": sizes }))
    } else {
        done(id, Status::Fail, json!({ "levels": bad }))
    }
}

fn map_set(
    set: &BTreeSet<ValueTuple>,
    f: impl Fn(&ValueTuple) -> ValueTuple,
) -> BTreeSet<ValueTuple> {
    set.iter().map(f).collect()
}

pub(super) fn run(ctx: &Context<'_>, id: CheckId) -> Result<CheckResult> {
    let levels = ctx.levels;
    Ok(match id {
        CheckId::C1 => {
            let dims: Vec<[usize; 3]> = levels
                .iter()
                .map(|l| [l.crystal.len(), l.demazure_dim, l.sections.len()])
                .collect();
            let ok = dims.iter().all(|d| d[0] == d[1] && d[1] == d[2]);
            done(id, verdict(ok), json!({ "crystal_module_sections": dims }))
        }
        CheckId::C2 => compare_sets(id, levels, |l| {
            (
                l.phi.clone(),
                map_set(l.values(ValuationKind::HighLex), ValueTuple::neg),
            )
        }),
        CheckId::C3 => c3(ctx),
        CheckId::C4 => compare_sets(id, levels, |l| {
            (
                l.values(ValuationKind::LowLex).clone(),
                map_set(l.values(ValuationKind::HighTilde), ValueTuple::op_neg),
            )
        }),
        CheckId::C5 => compare_sets(id, levels, |l| {
            (
                l.values(ValuationKind::LowTilde).clone(),
                map_set(l.values(ValuationKind::HighLex), ValueTuple::op_neg),
            )
        }),
        CheckId::C6 => c6(ctx)?,
        CheckId::C7 => c7(ctx)?,
        CheckId::C8 => match ctx.alt {
            None => done(id, Status::Skipped, json!("no alternative word supplied")),
            Some(alt) => {
                let rs = ctx.case.root_system();
                let mut bad = Vec::new();
                for l in levels {
                    let kl = ctx.case.lambda().scaled(l.k as i64);
                    let other = demazure_crystal(rs, &kl, alt)?;
                    if other.elements() != &l.crystal {
                        bad.push(json!({ "k": l.k, "sizes": [l.crystal.len(), other.len()] }));
                    }
                }
                let ok = bad.is_empty();
                done(
                    id,
                    verdict(ok),
                    json!({ "alt_word": alt.indices(), "mismatches": bad }),
                )
            }
        },
        CheckId::C9 => c9(ctx)?,
        CheckId::C10 => {
            let mut bad = Vec::new();
            for l in levels {
                let pairs = [
                    (ValuationKind::LowLex, ValuationKind::HighTilde),
                    (ValuationKind::LowTilde, ValuationKind::HighLex),
                ];
                for (low, high) in pairs {
                    let body = points(l.values(low));
                    let image = op_negate(&points(l.values(high)));
                    if !hull_equal(&body, &image)? {
                        bad.push(json!({ "k": l.k, "body": low.name(), "image_of": high.name() }));
                    }
                }
            }
            let ok = bad.is_empty();
            done(
                id,
                verdict(ok),
                json!({ "levels": levels.len(), "mismatches": bad }),
            )
        }
    })
}

/// The weight multiset of `−(vt_high value set)` against the crystal.
///
/// A tuple `x` of `−vt_high` is a reversed exponent vector, so
/// `Σ_k x_k α_{i_{r+1−k}}` is the depth `kλ − wt` of its section.
fn c3(ctx: &Context<'_>) -> CheckResult {
    let word = ctx.case.word().indices();
    let n = ctx.case.root_system().rank();
    let r = word.len();
    let mut bad = Vec::new();
    let mut heights = Vec::new();
    for l in ctx.levels {
        let mut from_psi: Vec<Vec<i64>> = l
            .psi()
            .iter()
            .map(|x| {
                let mut d = vec![0; n];
                for (k, &a) in x.coords().iter().enumerate() {
                    d[word[r - 1 - k] - 1] += a;
                }
                d
            })
            .collect();
        let mut from_crystal = l.crystal_depths.clone();
        from_psi.sort();
        from_crystal.sort();
        let psi_heights: i64 = l.psi().iter().map(|x| x.coords().iter().sum::<i64>()).sum();
        let crystal_heights: i64 = from_crystal.iter().map(|d| d.iter().sum::<i64>()).sum();
        heights.push([psi_heights, crystal_heights]);
        if from_psi != from_crystal || psi_heights != crystal_heights {
            bad.push(json!({ "k": l.k, "heights": [psi_heights, crystal_heights] }));
        }
    }
    let ok = bad.is_empty();
    done(
        CheckId::C3,
        verdict(ok),
        json!({ "height_sums": heights, "mismatches": bad }),
    )
}

/// Lattice points of the level-1 hulls, then `x/k` for higher levels.
fn c6(ctx: &Context<'_>) -> Result<CheckResult> {
    let first = &ctx.levels[0];
    let mut failed = false;
    let mut unsettled = false;
    let mut per_kind = BTreeMap::new();
    for kind in ValuationKind::ALL {
        let pts = points(first.values(kind));
        let lattice = lattice_points(&pts)?;
        let expected: BTreeSet<Vec<i64>> = first
            .values(kind)
            .iter()
            .map(|t| t.coords().to_vec())
            .collect();
        let extra: Vec<&Vec<i64>> = lattice.difference(&expected).collect();
        let missing: Vec<&Vec<i64>> = expected.difference(&lattice).collect();
        failed |= !extra.is_empty() || !missing.is_empty();
        let verts = extreme_points(&pts)?;
        let mut outside = Vec::new();
        for l in &ctx.levels[1..] {
            let inv = q(1) / q(l.k as i64);
            for t in l.values(kind) {
                let x = QPoint::from(t).scaled(&inv);
                if !contains(&verts, &x)? {
                    outside.push(json!({ "k": l.k, "tuple": t }));
                }
            }
        }
        // the body is larger than the level-1 hull; its lattice points must
        // still be the level-1 set
        let mut refined_extra = Vec::new();
        if !outside.is_empty() {
            let mut scaled = pts.clone();
            for l in &ctx.levels[1..] {
                let inv = q(1) / q(l.k as i64);
                scaled.extend(l.values(kind).iter().map(|t| QPoint::from(t).scaled(&inv)));
            }
            let refined = lattice_points(&scaled)?;
            refined_extra = refined.difference(&expected).cloned().collect();
            failed |= !refined_extra.is_empty();
        }
        unsettled |= !outside.is_empty();
        per_kind.insert(
            kind.name(),
            json!({
                "lattice_points": lattice.len(),
                "extra": show(extra),
                "missing": show(missing),
                "outside_level_one": show(outside),
                "extra_in_scaled_hull": show(refined_extra),
            }),
        );
    }
    let status = if failed {
        Status::Fail
    } else if unsettled {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    Ok(done(CheckId::C6, status, json!(per_kind)))
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    if n <= 64 {
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
    } else {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }
}

/// Multiplicativity, the min rule with equality on distinct values,
/// scaling invariance, and the derivative recursion for the high kinds.
fn axiom_failures(ps: &[Polynomial], word: &ReducedWord) -> Result<Vec<Value>> {
    let mut out = Vec::new();
    let three = q(3);
    for kind in ValuationKind::ALL {
        let vals: Vec<ValueTuple> = ps.iter().map(|p| valuate(p, kind)).collect::<Result<_>>()?;
        for (p, v) in ps.iter().zip(&vals) {
            if &valuate(&p.scale(&three), kind)? != v {
                out.push(
                    json!({ "kind": kind.name(), "rule": "scaling", "section": p.to_string() }),
                );
            }
        }
        for (i, j) in pairs(ps.len()) {
            let prod = &ps[i] * &ps[j];
            if valuate(&prod, kind)? != vals[i].add(&vals[j]) {
                out.push(json!({ "kind": kind.name(), "rule": "product", "pair": [i, j] }));
            }
            let sum = &ps[i] + &ps[j];
            if sum.is_zero() {
                continue;
            }
            let v = valuate(&sum, kind)?;
            let lo = vals[i].clone().min(vals[j].clone());
            if v < lo || (vals[i] != vals[j] && v != lo) {
                out.push(json!({ "kind": kind.name(), "rule": "min", "pair": [i, j] }));
            }
        }
    }
    for p in ps {
        for (side, kind) in [
            (Side::Left, ValuationKind::HighLex),
            (Side::Right, ValuationKind::HighTilde),
        ] {
            if chevalley_valuate(p, word, side)? != valuate(p, kind)? {
                out.push(
                    json!({ "kind": kind.name(), "rule": "chevalley", "section": p.to_string() }),
                );
            }
        }
    }
    Ok(out)
}

fn c7(ctx: &Context<'_>) -> Result<CheckResult> {
    let mut bad = Vec::new();
    let mut counted = 0;
    for l in ctx.levels {
        counted += l.sections.len();
        for kind in ValuationKind::ALL {
            if l.values(kind).len() != l.sections.len() {
                bad.push(
                    json!({ "k": l.k, "kind": kind.name(), "rule": "value count = dimension" }),
                );
            }
        }
        bad.extend(axiom_failures(&l.sections, ctx.case.word())?);
    }
    let ok = bad.is_empty();
    Ok(done(
        CheckId::C7,
        verdict(ok),
        json!({ "sections": counted, "failures": show(bad) }),
    ))
}

/// With `g` a level-1 section, `σ/g^k` has value `v(σ) − k v(g)`; the value
/// set of the level is recomputed against `g^k` and compared with the shift.
fn c9(ctx: &Context<'_>) -> Result<CheckResult> {
    let first = &ctx.levels[0];
    let nvars = ctx.case.word().len();
    let g = first
        .sections
        .iter()
        .find(|p| p.terms().keys().any(|e| e.iter().any(|&a| a > 0)))
        .cloned()
        .unwrap_or_else(|| Polynomial::one(nvars));
    let mut bad = Vec::new();
    for l in ctx.levels {
        let gk = g.pow(l.k as u32);
        for kind in ValuationKind::ALL {
            let shift = valuate(&g, kind)?.scaled(l.k as i64);
            let expected = map_set(l.values(kind), |x| x.sub(&shift));
            let found = distinct_value_basis(&l.sections, kind)
                .iter()
                .map(|(_, p)| valuate_quotient(p, &gk, kind))
                .collect::<Result<BTreeSet<_>>>()?;
            if expected != found {
                bad.push(
                    json!({ "kind": kind.name(), "detail": set_witness(l.k, &expected, &found) }),
                );
            }
        }
    }
    let ok = bad.is_empty();
    Ok(done(
        CheckId::C9,
        verdict(ok),
        json!({ "g": g.to_string(), "mismatches": bad }),
    ))
}
