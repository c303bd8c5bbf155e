//! Shows what the validator reports for broken tilings: overlaps, gaps,
//! out-of-bounds tiles, area mismatches, and tiles without a good side.
//!
//! ```bash
//! cargo run -p semitile --example validate_report
//! ```

use semitile::{validate_admissible, validate_tiling, LengthPredicate, Rational, Rect, Tiling};

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn show(name: &str, t: &Tiling) {
    let report = validate_tiling(t);
    println!("{name}: valid = {}", report.valid);
    for v in &report.violations {
        println!("  {v}");
    }
}

fn main() {
    let unit = Rect::from_ints(0, 0, 1, 1).unwrap();

    let duplicated = Tiling::from_size(r("1"), r("1"), vec![unit.clone(), unit.clone()]).unwrap();
    show("duplicated tile", &duplicated);

    let half_missing = Tiling::from_size(r("2"), r("1"), vec![unit.clone()]).unwrap();
    show("half missing", &half_missing);

    let escaping =
        Tiling::from_size(r("1"), r("1"), vec![Rect::from_ints(0, 0, 2, 1).unwrap()]).unwrap();
    show("tile leaves the box", &escaping);

    let quarters = Tiling::from_size(
        r("1"),
        r("1"),
        vec![
            Rect::new(r("0"), r("0"), r("1/2"), r("1/2")).unwrap(),
            Rect::new(r("1/2"), r("0"), r("1"), r("1/2")).unwrap(),
            Rect::new(r("0"), r("1/2"), r("1"), r("1")).unwrap(),
        ],
    )
    .unwrap();
    let report = validate_admissible(&quarters, &LengthPredicate::Integer);
    println!(
        "quarter tiles under the integer predicate: valid = {}",
        report.valid
    );
    for v in &report.violations {
        println!("  {v}");
    }
    let halves = LengthPredicate::multiple_of(r("1/2")).unwrap();
    let report = validate_admissible(&quarters, &halves);
    println!("same tiling under multiple:1/2: valid = {}", report.valid);
}
