//! The pluggable length predicate: the surgery only needs good lengths to be
//! closed under addition and subtraction, so "integer multiple of g" works as
//! well as "integer". A pinwheel squashed to half scale leaves several tiles
//! with no integer side, yet it reduces fine when measured in half-units.
//!
//! ```bash
//! cargo run -p semitile --example multiple_of_predicate
//! ```

use semitile::{check_semi_integer_all, fixture_pinwheel, prove, LengthPredicate, Rational};

fn main() {
    // Every coordinate of the unit pinwheel halved: sides 1/2, 1, or 3/2.
    let squashed = fixture_pinwheel(&"1/2".parse().unwrap()).scaled(&"1/2".parse().unwrap());
    println!(
        "squashed pinwheel: {} x {}",
        squashed.width(),
        squashed.height()
    );

    let integer = LengthPredicate::Integer;
    let failing = check_semi_integer_all(&squashed, &integer);
    println!("tiles without an integer side: {failing:?}");

    let halves = LengthPredicate::multiple_of("1/2".parse::<Rational>().unwrap()).unwrap();
    assert!(check_semi_integer_all(&squashed, &halves).is_empty());
    println!("every tile has a side that is a multiple of 1/2");

    let report = prove(&squashed, &halves, true).expect("theorem holds in half-units");
    println!(
        "reduced in {} steps to {}; width good: {}, height good: {}",
        report.trace.steps.len(),
        report.trace.final_rect,
        report.width_good,
        report.height_good
    );
    let oracle = report.oracle.unwrap();
    println!(
        "oracle (after rescaling by 2): width_integer={}, height_integer={}",
        oracle.width_integer, oracle.height_integer
    );
}
