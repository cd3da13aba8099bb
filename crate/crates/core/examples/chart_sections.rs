// Sections of a line bundle on a Schubert variety, written as polynomials
// in the chart coordinates.

use std::error::Error;

use schubval::chart::{exp_orbit_matrix, section_space, SchubertCase};
use schubval::rep::build_irrep;
use schubval::{ReducedWord, RootSystem, Series, Weight};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a2 = RootSystem::new(Series::A, 2)?;
    let w = ReducedWord::new(&a2, vec![1, 2, 1])?;

    let vector = build_irrep(&a2, &Weight::new(vec![1, 0]))?;
    println!("exp(t1 f1) exp(t2 f2) exp(t3 f1) on the vector representation:");
    for row in exp_orbit_matrix(&vector, &w)? {
        let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }

    let adjoint = build_irrep(&a2, &a2.rho())?;
    let sections = section_space(&adjoint, &w)?;
    println!("sections of L_rho on X(w0): {}", sections.len());
    for p in &sections {
        println!("  {p}");
    }

    let case = SchubertCase::new(&a2, &a2.rho(), &w)?;
    let level = case.level(2)?;
    println!(
        "level 2: {} sections, Demazure dimension {}",
        level.sections.len(),
        level.demazure_dim
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
