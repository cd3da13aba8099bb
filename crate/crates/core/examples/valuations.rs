// The four lexicographic valuations, value sets and the Chevalley
// recursion.

use std::error::Error;

use schubval::polyval::{chevalley_valuate, distinct_value_basis, valuate, value_set, Side};
use schubval::{Polynomial, ReducedWord, RootSystem, Series, ValuationKind};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let f = Polynomial::parse(3, "t1*t2 + t3^2")?;
    for kind in ValuationKind::ALL {
        println!("{:>7}({f}) = {}", kind.name(), valuate(&f, kind)?);
    }

    let a2 = RootSystem::new(Series::A, 2)?;
    let w = ReducedWord::new(&a2, vec![1, 2, 1])?;
    println!(
        "left Chevalley recursion: {}",
        chevalley_valuate(&f, &w, Side::Left)?
    );
    println!(
        "right Chevalley recursion: {}",
        chevalley_valuate(&f, &w, Side::Right)?
    );

    let span: Vec<Polynomial> = ["t1 + t3", "t1", "t2*t3 + t1*t2"]
        .iter()
        .map(|s| Polynomial::parse(3, s))
        .collect::<Result<_, _>>()?;
    for kind in ValuationKind::ALL {
        let values: Vec<String> = value_set(&span, kind)
            .iter()
            .map(|v| v.to_string())
            .collect();
        println!("{:>7} value set: {}", kind.name(), values.join(" "));
    }
    for (v, p) in distinct_value_basis(&span, ValuationKind::LowTilde) {
        println!("  vt_low {v} realized by {p}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
