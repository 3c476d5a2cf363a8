//! File formats, polytope expressions and the verification runner behind the
//! `poly` binary.

pub mod checks;
pub mod files;
pub mod parallel;
pub mod spec;

use std::fmt::Write;

use polydouble::poly::{f_polynomial, h_polynomial};
use polydouble::{DualPolytope, PolytopeSystem};

/// `m=5 n=2 f=[5,5] h=a^2+3*a*t+t^2 fpoly=a^2+5*a*t+5*t^2 mnf=5`.
pub fn describe(p: &DualPolytope) -> String {
    let f: Vec<String> = p.f_counts().iter().map(ToString::to_string).collect();
    format!(
        "m={} n={} f=[{}] h={:#} fpoly={:#} mnf={}",
        p.facet_count(),
        p.dim(),
        f.join(","),
        h_polynomial(p),
        f_polynomial(p),
        p.complex().minimal_non_faces().len()
    )
}

/// One vertex per line, lexicographically sorted, as reduced fractions.
pub fn render_vertices(system: &PolytopeSystem) -> String {
    let mut out = String::new();
    for v in &system.vertices().vertices {
        let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
        writeln!(out, "({})", coords.join(", ")).expect("writing to a string");
    }
    out
}
