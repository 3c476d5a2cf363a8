//! The identities behind `poly verify`, each producing both sides as text.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, ensure, Result};
use polydouble::complex::double_of_join_relabeling;
use polydouble::macohom::{
    check_doubling_budget, facet_split_report, toral_rank_report, DoublingReport,
};
use polydouble::poly::{
    double_h_by_face_sum, double_h_by_operator, double_h_closed_form, h_polynomial,
};
use polydouble::ring::{boundary, leibniz_sides};
use polydouble::{BettiTable, DualPolytope, FieldTag, SimplicialComplex, SpaceKind};
use serde::Serialize;

use crate::parallel;
use crate::spec::Spec;

/// Largest `2m` for which the double is enumerated face by face.
pub const DOUBLE_FACE_LIMIT: usize = 24;

/// Largest `2m` for which basic feasible solutions of the doubled slice are
/// enumerated.
pub const GEOM_DOUBLE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Theorem3,
    Lemma2,
    Operator,
    Dring,
    ProductDouble,
    GeomDouble,
    Lemma6,
    Trc,
    FacetSplit,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Theorem3,
        Check::Lemma2,
        Check::Operator,
        Check::Dring,
        Check::ProductDouble,
        Check::GeomDouble,
        Check::Lemma6,
        Check::Trc,
        Check::FacetSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem3 => "theorem3",
            Check::Lemma2 => "lemma2",
            Check::Operator => "operator",
            Check::Dring => "dring",
            Check::ProductDouble => "productdouble",
            Check::GeomDouble => "geomdouble",
            Check::Lemma6 => "lemma6",
            Check::Trc => "trc",
            Check::FacetSplit => "facetsplit",
        }
    }
}

impl FromStr for Check {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| anyhow::anyhow!("unknown check {s:?}"))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    AtLeast,
}

/// One verified identity. A skipped check has no sides and no verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub check: String,
    pub input: String,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub pass: Option<bool>,
    #[serde(skip)]
    pub relation: Relation,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip: Option<String>,
}

impl Outcome {
    fn new(
        check: &str,
        input: &Spec,
        lhs: impl ToString,
        rhs: impl ToString,
        relation: Relation,
        pass: bool,
    ) -> Self {
        Outcome {
            check: check.to_string(),
            input: input.to_string(),
            lhs: Some(lhs.to_string()),
            rhs: Some(rhs.to_string()),
            pass: Some(pass),
            relation,
            skip: None,
        }
    }

    pub fn skipped(check: Check, input: &Spec, reason: String) -> Self {
        Outcome {
            check: check.to_string(),
            input: input.to_string(),
            lhs: None,
            rhs: None,
            pass: None,
            relation: Relation::Equal,
            skip: Some(reason),
        }
    }

    pub fn failed(&self) -> bool {
        self.pass == Some(false)
    }

    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("outcome serializes")
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(lhs), Some(rhs), Some(pass)) = (&self.lhs, &self.rhs, self.pass) else {
            let reason = self.skip.as_deref().unwrap_or("");
            return write!(f, "{} {}: SKIP ({reason})", self.check, self.input);
        };
        let verdict = if pass { "PASS" } else { "FAIL" };
        let relation = match self.relation {
            Relation::Equal => "lhs = rhs",
            Relation::AtLeast => "lhs >= rhs",
        };
        write!(
            f,
            "{} {}: {verdict} ({relation})\n  lhs: {lhs}\n  rhs: {rhs}",
            self.check, self.input
        )
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub field: FieldTag,
    pub threads: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            field: FieldTag::Rationals,
            threads: 1,
        }
    }
}

/// Runs one check on an already resolved polytope.
pub fn run(check: Check, spec: &Spec, p: &DualPolytope, opts: Options) -> Result<Vec<Outcome>> {
    let m = p.facet_count() as u32;
    let n = p.dim() as u32;
    let name = check.name();
    let out = match check {
        Check::Theorem3 => {
            let lhs = h_of_double(p)?;
            let rhs = double_h_closed_form(&h_polynomial(p), m, n)?;
            vec![Outcome::new(
                name,
                spec,
                format!("{lhs:#}"),
                format!("{rhs:#}"),
                Relation::Equal,
                lhs == rhs,
            )]
        }
        Check::Lemma2 => {
            let lhs = h_of_double(p)?;
            let rhs = double_h_by_face_sum(p)?;
            vec![Outcome::new(
                name,
                spec,
                format!("{lhs:#}"),
                format!("{rhs:#}"),
                Relation::Equal,
                lhs == rhs,
            )]
        }
        Check::Operator => {
            let h = h_polynomial(p);
            let lhs = double_h_by_operator(&h, m)?;
            let rhs = double_h_closed_form(&h, m, n)?;
            vec![Outcome::new(
                name,
                spec,
                format!("{lhs:#}"),
                format!("{rhs:#}"),
                Relation::Equal,
                lhs == rhs,
            )]
        }
        Check::Dring => {
            let lhs = boundary(p)?.h_polynomial();
            let rhs = h_polynomial(p).derivative_sum();
            let first = Outcome::new(
                "dring:h",
                spec,
                format!("{lhs:#}"),
                format!("{rhs:#}"),
                Relation::Equal,
                lhs == rhs,
            );
            let (a, b) = factors(spec, p)?;
            let (lhs, rhs) = leibniz_sides(&a, &b)?;
            let pass = lhs == rhs;
            vec![
                first,
                Outcome::new("dring:leibniz", spec, lhs, rhs, Relation::Equal, pass),
            ]
        }
        Check::ProductDouble => {
            let (a, b) = factors(spec, p)?;
            let joined = a.product(&b)?;
            ensure!(
                2 * joined.facet_count() <= 64,
                "the double of a {}-facet product exceeds 64 vertices",
                joined.facet_count()
            );
            let lhs = joined.double()?;
            let rhs = a.double()?.product(&b.double()?)?;
            let map = double_of_join_relabeling(a.facet_count(), b.facet_count());
            let pass = lhs.complex().equal_under_relabel(rhs.complex(), &map)?;
            vec![Outcome::new(
                name,
                spec,
                summary(lhs.complex()),
                summary(rhs.complex()),
                Relation::Equal,
                pass,
            )]
        }
        Check::GeomDouble => vec![geom_double(spec, p)?],
        Check::Lemma6 => {
            let report = doubling_report(p.complex(), opts)?;
            let lhs = format!("{} {}", report.z.hrk(), compact(&report.z));
            let rhs = format!("{} {}", report.r_double.hrk(), compact(&report.r_double));
            vec![Outcome::new(
                name,
                spec,
                lhs,
                rhs,
                Relation::Equal,
                report.pass(),
            )]
        }
        Check::Trc => {
            let report = doubling_report(p.complex(), opts)?;
            let trc = toral_rank_report(p, &report.z, &report.r_double);
            vec![Outcome::new(
                name,
                spec,
                trc.hrk_z,
                trc.bound(),
                Relation::AtLeast,
                trc.pass(),
            )]
        }
        Check::FacetSplit => {
            let hrk_r =
                parallel::hochster_betti(p.complex(), SpaceKind::R, opts.field, opts.threads)?
                    .hrk();
            let mut rhs = Vec::with_capacity(p.facet_count());
            let mut pass = true;
            for v in 0..p.facet_count() {
                let report = facet_split_report(p, v, hrk_r, opts.field)?;
                pass &= report.pass();
                rhs.push(format!(
                    "{}:2^{}*{}",
                    v + 1,
                    report.disjoint_facets,
                    report.hrk_r_facet
                ));
            }
            vec![Outcome::new(
                name,
                spec,
                hrk_r,
                rhs.join(" "),
                Relation::AtLeast,
                pass,
            )]
        }
    };
    Ok(out)
}

/// Every check; those that cannot run on this input are reported as skipped.
pub fn run_all(spec: &Spec, p: &DualPolytope, opts: Options) -> Vec<Outcome> {
    let mut out = Vec::new();
    for check in Check::ALL {
        match run(check, spec, p, opts) {
            Ok(outcomes) => out.extend(outcomes),
            Err(e) => out.push(Outcome::skipped(check, spec, format!("{e:#}"))),
        }
    }
    out
}

pub fn h_of_double(p: &DualPolytope) -> Result<polydouble::BivariatePolynomial> {
    let doubled = 2 * p.facet_count();
    ensure!(doubled <= DOUBLE_FACE_LIMIT, "face enumeration of the double on {doubled} vertices exceeds the budget of {DOUBLE_FACE_LIMIT}");
    Ok(h_polynomial(&p.double()?))
}

/// The factors of a top-level product, otherwise `P` and a segment.
fn factors(spec: &Spec, p: &DualPolytope) -> Result<(DualPolytope, DualPolytope)> {
    match spec.factors() {
        Some((a, b)) => Ok((a.dual()?, b.dual()?)),
        None => Ok((p.clone(), polydouble::catalog::simplex(1)?)),
    }
}

fn geom_double(spec: &Spec, p: &DualPolytope) -> Result<Outcome> {
    let doubled = 2 * p.facet_count();
    ensure!(
        doubled <= GEOM_DOUBLE_LIMIT,
        "vertex enumeration on {doubled} coordinates exceeds the budget of {GEOM_DOUBLE_LIMIT}"
    );
    let Some(system) = spec.system()? else {
        bail!("no H-representation for a complex file");
    };
    let slice = system.linear_slice()?;
    let found = slice.double()?.enumerate_vertices()?;
    let expected = p.double()?;
    let (m, n) = (p.facet_count(), p.dim());
    let columns = 2 * m;
    let zeros = found
        .vertices
        .incidences
        .iter()
        .map(|z| z.len())
        .min()
        .unwrap_or(0);
    let pass = system.dual_complex()? == *p
        && found.dual == expected
        && found.dual.dim() == m + n
        && found.dual.facet_count() == columns
        && found.vertices.incidences.iter().all(|z| z.len() == m + n);
    let lhs = format!(
        "{} vertices, {zeros} zero and {} positive coordinates each; {}",
        found.vertices.len(),
        columns - zeros,
        summary(found.dual.complex())
    );
    let rhs = format!(
        "{} vertices, {} zero and {} positive coordinates each; {}",
        expected.complex().maximal_faces().len(),
        m + n,
        m - n,
        summary(expected.complex())
    );
    Ok(Outcome::new(
        Check::GeomDouble.name(),
        spec,
        lhs,
        rhs,
        Relation::Equal,
        pass,
    ))
}

fn doubling_report(k: &SimplicialComplex, opts: Options) -> Result<DoublingReport> {
    check_doubling_budget(k)?;
    let z = parallel::hochster_betti(k, SpaceKind::Z, opts.field, opts.threads)?;
    let r_double = parallel::hochster_betti(&k.double()?, SpaceKind::R, opts.field, opts.threads)?;
    Ok(DoublingReport { z, r_double })
}

/// Vertex count, number of maximal faces and their size; equality itself is
/// decided on the face sets.
pub fn summary(k: &SimplicialComplex) -> String {
    format!(
        "{} vertices, {} maximal faces of size {}",
        k.vertex_count(),
        k.maximal_faces().len(),
        k.max_face_size()
    )
}

/// `{0:1,3:5,4:5,7:1}`.
pub fn compact(table: &BettiTable) -> String {
    let parts: Vec<String> = table
        .ranks
        .iter()
        .map(|(d, r)| format!("{d}:{r}"))
        .collect();
    format!("{{{}}}", parts.join(","))
}
