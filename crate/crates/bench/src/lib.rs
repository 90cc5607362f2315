//! Fixtures shared by the criterion benches.

use arcperm_core::{BDiagram, SigmaWord};

/// Diagrams of growing block count used to compare the generator routes.
pub fn diagrams() -> Vec<(&'static str, BDiagram)> {
    [
        ("m3", "1 2 3 | 4 7 8 | 5 6"),
        ("m4", "1 6 | 2 3 | 4 8 7 | 5"),
        ("m5", "1 4 | 2 | 3 6 | 5 8 | 7"),
        ("m6", "1 4 | 2 9 | 3 6 | 5 8 | 7 | 10"),
    ]
    .into_iter()
    .map(|(name, text)| (name, text.parse().expect("fixture parses")))
    .collect()
}

pub fn words() -> Vec<SigmaWord> {
    ["rkrRkR", "rrRrkRkR", "rrkkrkRRkR"]
        .into_iter()
        .map(|w| w.parse().expect("fixture parses"))
        .collect()
}
