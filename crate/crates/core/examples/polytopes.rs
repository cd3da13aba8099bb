// Exact hull membership, vertices and lattice points of a level-1 body.

use std::error::Error;

use schubval::chart::SchubertCase;
use schubval::polytope::{extreme_points, hull_equal, lattice_points, op_negate, QPoint};
use schubval::polyval::value_set;
use schubval::{ReducedWord, RootSystem, Series, ValuationKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a2 = RootSystem::new(Series::A, 2)?;
    let w = ReducedWord::new(&a2, vec![1, 2, 1])?;
    let level = SchubertCase::new(&a2, &a2.rho(), &w)?.level(1)?;

    let body = |kind| -> Vec<QPoint> {
        value_set(&level.sections, kind)
            .iter()
            .map(QPoint::from)
            .collect()
    };
    let low = body(ValuationKind::LowLex);
    let verts = extreme_points(&low)?;
    let shown: Vec<String> = verts.iter().map(|v| v.to_string()).collect();
    println!("v_low body vertices: {}", shown.join(" "));
    println!("lattice points: {}", lattice_points(&low)?.len());

    let mirrored = op_negate(&body(ValuationKind::HighTilde));
    println!(
        "v_low body = -op(vt_high body): {}",
        hull_equal(&low, &mirrored)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
