// Demazure crystals in the path model and their string parametrizations.

use std::error::Error;

use schubval::crystal::{
    crystal_level_sets, demazure_crystal, full_crystal, string_parametrization,
};
use schubval::{ReducedWord, RootSystem, Series};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a2 = RootSystem::new(Series::A, 2)?;
    let rho = a2.rho();
    println!("|B(rho)| = {}", full_crystal(&a2, &rho)?.len());

    let w = ReducedWord::new(&a2, vec![1, 2])?;
    let crystal = demazure_crystal(&a2, &rho, &w)?;
    println!("B_w(rho) for w = {w}:");
    for b in crystal.elements() {
        println!(
            "  {} wt {} string {}",
            b,
            b.wt(),
            string_parametrization(&a2, &rho, b, &w)?
        );
    }

    let w0 = ReducedWord::new(&a2, vec![1, 2, 1])?;
    for (k, set) in crystal_level_sets(&a2, &rho, &w0, 2)? {
        println!("level {k}: {} string tuples", set.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
