// Builds `V(λ)` exactly and a Demazure submodule inside it.

use std::error::Error;

use schubval::rep::{build_irrep, demazure_subspace};
use schubval::{ReducedWord, RootSystem, Series, Weight};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let b2 = RootSystem::new(Series::B, 2)?;
    let irrep = build_irrep(&b2, &b2.rho())?;
    println!("B2: dim V(rho) = {}", irrep.dim());
    for (mu, m) in irrep.multiplicities() {
        if m > 1 {
            println!("  weight {mu} has multiplicity {m}");
        }
    }
    assert_eq!(irrep.dim(), 16);

    let v = irrep.highest_vector();
    let lowered = irrep
        .apply_f(1, &v)
        .and_then(|u| irrep.apply_f(2, &u))
        .ok_or("f2 f1 v vanished")?;
    let back = irrep.apply_e(2, &lowered).ok_or("e2 killed f2 f1 v")?;
    println!(
        "e2 f2 f1 v lands in weight {}",
        irrep.space(back.space).weight()
    );

    let a2 = RootSystem::new(Series::A, 2)?;
    let adjoint = build_irrep(&a2, &Weight::new(vec![1, 1]))?;
    for word in [vec![], vec![1], vec![1, 2], vec![1, 2, 1]] {
        let w = ReducedWord::new(&a2, word)?;
        println!(
            "A2: dim V_w(rho) for w = {w}: {}",
            demazure_subspace(&adjoint, &w)?.dim()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
