//! Shared inputs for the benchmarks.

use qec_core::{build_family, FamilySpec, Graph};

/// Named graphs of increasing order used across benchmarks.
pub fn corpus() -> Vec<(&'static str, Graph)> {
    [
        ("C5", "cycle:5"),
        ("K3,2", "multipartite:3,2"),
        ("P8", "path:8"),
        ("K7-P4", "knp4:7"),
        ("K4,3,3", "multipartite:4,3,3"),
    ]
    .into_iter()
    .map(|(name, spec)| {
        let spec: FamilySpec = spec.parse().expect("valid spec");
        (name, build_family(&spec).expect("buildable family"))
    })
    .collect()
}
