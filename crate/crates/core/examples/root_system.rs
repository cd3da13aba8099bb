// Cartan matrices, positive roots and reduced words for the rank-2 and
// rank-3 types used throughout the crate.

use std::error::Error;

use schubval::{ReducedWord, RootSystem, Series};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (series, rank) in [
        (Series::A, 2),
        (Series::B, 2),
        (Series::C, 2),
        (Series::G, 2),
        (Series::A, 3),
    ] {
        let rs = RootSystem::new(series, rank)?;
        let w0 = rs.longest_word();
        println!(
            "{series}{rank}: cartan {:?}, {} positive roots, w0 = {w0}",
            rs.cartan(),
            rs.positive_roots().len()
        );
        assert_eq!(w0.len(), rs.positive_roots().len());
    }

    let a2 = RootSystem::new(Series::A, 2)?;
    let w = ReducedWord::new(&a2, vec![1, 2, 1])?;
    println!(
        "inversion roots of {w}: {:?}",
        a2.inversion_roots(w.indices())
    );
    assert!(ReducedWord::new(&a2, vec![1, 1]).is_err());
    println!("s1(rho) = {}", a2.simple_reflect(1, &a2.rho())?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
