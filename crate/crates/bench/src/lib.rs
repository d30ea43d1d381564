//! Shared fixtures for the benchmarks: the worked examples from `corpus/`,
//! embedded at compile time so benches don't depend on the working directory.

use pathgb_core::dsl::{parse_problem, ProblemFile};
use pathgb_core::{Polynomial, Side};

pub const FIXTURES: &[(&str, &str)] = &[
    ("ex31", include_str!("../../../corpus/ex31.q")),
    ("ex32", include_str!("../../../corpus/ex32.q")),
    ("ex41", include_str!("../../../corpus/ex41.q")),
    ("ex42", include_str!("../../../corpus/ex42.q")),
    (
        "example_4_3_a",
        include_str!("../../../corpus/example_4_3_a.q"),
    ),
    (
        "example_4_3_b",
        include_str!("../../../corpus/example_4_3_b.q"),
    ),
    ("infinite", include_str!("../../../corpus/infinite.q")),
];

/// Parses the named fixture. Panics on unknown names.
pub fn problem(name: &str) -> ProblemFile {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture {name}"));
    parse_problem(text).expect("fixture parses")
}

/// Generators and side of the single ideal declared in a fixture.
pub fn ideal(file: &ProblemFile) -> (Vec<Polynomial>, Side) {
    let decl = file.ideals().first().expect("fixture declares an ideal");
    (decl.generators.clone(), decl.side)
}
