//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use polydouble::catalog::{polygon, simplex};
use polydouble::poly::{
    double_h_by_face_sum, double_h_by_operator, double_h_closed_form, h_polynomial,
};
use polydouble::ring::{boundary, leibniz_sides};
use polydouble::{DualPolytope, FieldTag, PolytopeSystem, SpaceKind};
use polydouble_cli::checks::{self, compact, Check, Options};
use polydouble_cli::files;
use polydouble_cli::parallel::hochster_betti;
use polydouble_cli::spec::{catalog, Spec};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn resolved() -> Vec<(Spec, DualPolytope)> {
    catalog()
        .into_iter()
        .map(|s| {
            let p = s.dual().expect("catalog entry resolves");
            (s, p)
        })
        .collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, || {
        format!("took {spent:.1?}, limit {limit:?}")
    })
}

fn closed(p: &DualPolytope) -> polydouble::BivariatePolynomial {
    double_h_closed_form(&h_polynomial(p), p.facet_count() as u32, p.dim() as u32)
        .expect("degrees match")
}

fn closed_form_matches_double() -> Verdict {
    let start = Instant::now();
    let cases = resolved();
    for (s, p) in &cases {
        let lhs = checks::h_of_double(p).map_err(|e| format!("{s}: {e:#}"))?;
        ensure(lhs == closed(p), || {
            format!("{s}: {lhs:#} vs {:#}", closed(p))
        })?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} polytopes", cases.len()))
}

fn face_sum_matches_double() -> Verdict {
    let cases = resolved();
    for (s, p) in &cases {
        let lhs = checks::h_of_double(p).map_err(|e| format!("{s}: {e:#}"))?;
        let rhs = double_h_by_face_sum(p).map_err(|e| format!("{s}: {e}"))?;
        ensure(lhs == rhs, || format!("{s}: {lhs:#} vs {rhs:#}"))?;
    }
    Ok(format!("{} polytopes", cases.len()))
}

fn operator_matches_closed_form() -> Verdict {
    let cases = resolved();
    for (s, p) in &cases {
        let lhs = double_h_by_operator(&h_polynomial(p), p.facet_count() as u32)
            .map_err(|e| format!("{s}: {e}"))?;
        ensure(lhs == closed(p), || {
            format!("{s}: {lhs:#} vs {:#}", closed(p))
        })?;
    }
    Ok(format!("{} polytopes", cases.len()))
}

fn differential_ring() -> Verdict {
    let cases = resolved();
    for (s, p) in &cases {
        let lhs = boundary(p).map_err(|e| e.to_string())?.h_polynomial();
        ensure(lhs == h_polynomial(p).derivative_sum(), || {
            format!("{s}: h(dP) = {lhs:#}")
        })?;
    }
    let mut pairs = 0;
    for (s, p) in &cases {
        for (t, q) in &cases {
            if p.facet_count() + q.facet_count() > 12 {
                continue;
            }
            let (lhs, rhs) = leibniz_sides(p, q).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || format!("({s}, {t}): {lhs} vs {rhs}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{} boundaries, {pairs} products", cases.len()))
}

fn product_double_commutes() -> Verdict {
    for text in [
        "product(simplex:1,simplex:1)",
        "product(simplex:2,simplex:1)",
        "product(polygon:5,simplex:1)",
    ] {
        let spec = Spec::parse(text).map_err(|e| e.to_string())?;
        let p = spec.dual().map_err(|e| e.to_string())?;
        let outcome = checks::run(Check::ProductDouble, &spec, &p, Options::default())
            .map_err(|e| format!("{e:#}"))?;
        ensure(outcome.iter().all(|o| o.pass == Some(true)), || {
            format!("{text}: {outcome:?}")
        })?;
    }
    Ok("3 pairs".into())
}

fn geometric_double_agrees() -> Verdict {
    let start = Instant::now();
    let pentagon = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/pentagon.json");
    let inputs = [
        "simplex:1".to_string(),
        "simplex:2".into(),
        "cube:2".into(),
        format!("hrep:{}", pentagon.display()),
    ];
    for text in &inputs {
        let spec = Spec::parse(text).map_err(|e| e.to_string())?;
        let p = spec.dual().map_err(|e| format!("{e:#}"))?;
        let outcome = checks::run(Check::GeomDouble, &spec, &p, Options::default())
            .map_err(|e| format!("{e:#}"))?;
        ensure(outcome[0].pass == Some(true), || {
            format!("{text}: {outcome:?}")
        })?;
    }
    let system: PolytopeSystem = files::read_hrep(&pentagon).map_err(|e| format!("{e:#}"))?;
    let found = system
        .linear_slice()
        .and_then(|s| s.double())
        .and_then(|s| s.enumerate_vertices())
        .map_err(|e| e.to_string())?;
    ensure(found.vertices.len() == 40, || {
        format!("{} vertices", found.vertices.len())
    })?;
    ensure(
        found.vertices.incidences.iter().all(|z| z.len() == 7),
        || "zero counts differ from 7".into(),
    )?;
    ensure(
        found.dual.dim() == 7 && found.dual.facet_count() == 10,
        || "wrong shape".into(),
    )?;
    within(start, Duration::from_secs(30))?;
    Ok("4 inputs; doubled pentagon has 40 vertices with 7 zero coordinates".into())
}

fn moment_angle_totals() -> Verdict {
    let start = Instant::now();
    let expected = [
        ("simplex:1", 2),
        ("simplex:2", 2),
        ("polygon:4", 4),
        ("polygon:5", 12),
        ("polygon:6", 36),
    ];
    for (text, hrk) in expected {
        let p = Spec::parse(text)
            .and_then(|s| s.dual())
            .map_err(|e| e.to_string())?;
        for field in [FieldTag::Rationals, FieldTag::TwoElementField] {
            let opts = Options { field, threads: 1 };
            let outcome = checks::run(Check::Lemma6, &Spec::parse(text).unwrap(), &p, opts)
                .map_err(|e| format!("{e:#}"))?;
            let z =
                hochster_betti(p.complex(), SpaceKind::Z, field, 1).map_err(|e| e.to_string())?;
            ensure(outcome[0].pass == Some(true), || {
                format!("{text} over {field}: {outcome:?}")
            })?;
            ensure(z.hrk() == hrk, || {
                format!("{text} over {field}: hrk {} != {hrk}", z.hrk())
            })?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok("2, 2, 4, 12, 36 over Q and F2".into())
}

fn toral_rank_bound() -> Verdict {
    let mut strict = Vec::new();
    for (s, p) in resolved() {
        let outcome = checks::run(Check::Trc, &s, &p, Options::default())
            .map_err(|e| format!("{s}: {e:#}"))?;
        let o = &outcome[0];
        ensure(o.pass == Some(true), || format!("{s}: {o:?}"))?;
        let (lhs, rhs) = (
            o.lhs.clone().unwrap_or_default(),
            o.rhs.clone().unwrap_or_default(),
        );
        let tight = matches!(s, Spec::Cube(_) | Spec::Simplex(_));
        ensure(!tight || lhs == rhs, || {
            format!("{s}: expected {lhs} = {rhs}")
        })?;
        if let Spec::Polygon(m) = s {
            ensure(m < 5 || lhs != rhs, || {
                format!("{s}: expected {lhs} > {rhs}")
            })?;
            if m == 5 || m == 6 {
                strict.push(format!("{lhs} > {rhs}"));
            }
        }
    }
    ensure(strict == ["12 > 8", "36 > 16"], || format!("{strict:?}"))?;
    Ok(format!(
        "equality on cubes and simplices, {}",
        strict.join(", ")
    ))
}

fn facet_splitting() -> Verdict {
    let mut vertices = 0;
    for (s, p) in resolved() {
        let outcome = checks::run(Check::FacetSplit, &s, &p, Options::default())
            .map_err(|e| format!("{s}: {e:#}"))?;
        ensure(outcome[0].pass == Some(true), || {
            format!("{s}: {:?}", outcome[0])
        })?;
        vertices += p.facet_count();
    }
    Ok(format!("{vertices} vertices"))
}

fn structural_invariants() -> Verdict {
    for (s, p) in resolved() {
        ensure(h_polynomial(&p).is_palindromic(), || {
            format!("{s}: h not palindromic")
        })?;
        let z = hochster_betti(p.complex(), SpaceKind::Z, FieldTag::Rationals, 1)
            .map_err(|e| e.to_string())?;
        let top = p.facet_count() + p.dim();
        ensure(z.is_symmetric_about(top), || {
            format!("{s}: Z table {} not symmetric about {top}", compact(&z))
        })?;
    }
    let pentagon = polygon(5).map_err(|e| e.to_string())?;
    let z = hochster_betti(pentagon.complex(), SpaceKind::Z, FieldTag::Rationals, 1)
        .map_err(|e| e.to_string())?;
    let r = hochster_betti(pentagon.complex(), SpaceKind::R, FieldTag::Rationals, 1)
        .map_err(|e| e.to_string())?;
    ensure(compact(&z) == "{0:1,3:5,4:5,7:1}", || compact(&z))?;
    ensure(compact(&r) == "{0:1,1:10,2:1}", || compact(&r))?;
    ensure(
        simplex(0).map(|p| h_polynomial(&p).is_palindromic()) == Ok(true),
        || "point".into(),
    )?;
    Ok("palindromic h, symmetric Z tables, pentagon tables exact".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "closed form of the doubled h-polynomial",
            closed_form_matches_double,
        ),
        (
            "face sum for the doubled h-polynomial",
            face_sum_matches_double,
        ),
        ("operator form of doubling", operator_matches_closed_form),
        ("differential ring and Leibniz rule", differential_ring),
        ("product commutes with doubling", product_double_commutes),
        (
            "geometric and combinatorial doubling agree",
            geometric_double_agrees,
        ),
        ("total ranks of Z_K and R_L(K)", moment_angle_totals),
        ("toral rank bound", toral_rank_bound),
        ("facet splitting inequality", facet_splitting),
        ("structural invariants", structural_invariants),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let spent = start.elapsed();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{spent:.2?}]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{spent:.2?}]", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
