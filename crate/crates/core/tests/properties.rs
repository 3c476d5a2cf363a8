//! Randomized invariants of doubling, the polynomial ring and the
//! cohomology engine.

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use polydouble::catalog::{cube_system, polygon, polygon_system, simplex, simplex_system};
use polydouble::complex::{double_of_join_relabeling, DualPolytope, SimplicialComplex};
use polydouble::macohom::{compare_with_real_double, hochster_betti};
use polydouble::poly::{
    double_h_by_face_sum, double_h_by_operator, double_h_closed_form, h_polynomial,
};
use polydouble::ring::{boundary, leibniz_sides};
use polydouble::{BivariatePolynomial, FieldTag, Mask, PolytopeSystem, SpaceKind};

/// Any complex on at most `max` vertices, vertices renumbered to be used.
fn complex(max: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(1u64..(1 << max), 0..6).prop_map(|gens| {
        let used = gens.iter().fold(Mask::EMPTY, |acc, g| acc.union(Mask(*g)));
        let faces: Vec<Mask> = gens.iter().map(|g| Mask(*g).compress(used)).collect();
        SimplicialComplex::new(used.len(), faces).unwrap()
    })
}

#[derive(Clone, Copy, Debug)]
enum Factor {
    Simplex(usize),
    Polygon(usize),
}

impl Factor {
    fn dual(self) -> DualPolytope {
        match self {
            Factor::Simplex(n) => simplex(n).unwrap(),
            Factor::Polygon(m) => polygon(m).unwrap(),
        }
    }

    fn system(self) -> PolytopeSystem {
        match self {
            Factor::Simplex(1) => cube_system(1).unwrap(),
            Factor::Simplex(n) => simplex_system(n).unwrap(),
            Factor::Polygon(m) => polygon_system(m).unwrap(),
        }
    }
}

fn factors(max_facets: usize) -> impl Strategy<Value = Vec<Factor>> {
    let factor = prop_oneof![
        (1usize..=3).prop_map(Factor::Simplex),
        (3usize..=6).prop_map(Factor::Polygon)
    ];
    prop::collection::vec(factor, 1..=3).prop_filter("too many facets", move |fs| {
        let facets: usize = fs.iter().map(|f| f.dual().facet_count()).sum();
        facets <= max_facets
    })
}

/// Products of catalog polytopes.
fn polytope(max_facets: usize) -> impl Strategy<Value = DualPolytope> {
    factors(max_facets).prop_map(|fs| {
        fs.iter()
            .skip(1)
            .fold(fs[0].dual(), |acc, f| acc.product(&f.dual()).unwrap())
    })
}

fn poly() -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec((-20i64..20, 0u32..4, 0u32..4), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(BivariatePolynomial::zero(), |acc, (c, i, j)| {
                acc + BivariatePolynomial::monomial(c, i, j)
            })
    })
}

fn homogeneous(n: usize) -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec(-9i64..10, n + 1)
        .prop_map(|c| BivariatePolynomial::homogeneous_from_coefficients(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_matches_pair_rule(k in complex(5)) {
        let d = k.double().unwrap();
        prop_assert_eq!(d.vertex_count(), 2 * k.vertex_count());
        prop_assert_eq!(d.maximal_faces().to_vec(), common::brute_double(&k));
    }

    #[test]
    fn double_minimal_non_faces_are_doubled(k in complex(6)) {
        let m = k.vertex_count();
        let expected: BTreeSet<Mask> =
            k.minimal_non_faces().into_iter().map(|t| t.union(t.shift_up(m))).collect();
        prop_assert_eq!(k.double().unwrap().minimal_non_faces(), expected);
    }

    #[test]
    fn double_commutes_with_join(k1 in complex(4), k2 in complex(4)) {
        let lhs = k1.join(&k2).unwrap().double().unwrap();
        let rhs = k1.double().unwrap().join(&k2.double().unwrap()).unwrap();
        let map = double_of_join_relabeling(k1.vertex_count(), k2.vertex_count());
        prop_assert_eq!(lhs.equal_under_relabel(&rhs, &map), Ok(true));
    }

    #[test]
    fn full_subcomplexes(k in complex(6), bits in any::<u64>()) {
        let all = Mask::full(k.vertex_count());
        prop_assert_eq!(&k.full_subcomplex(all).unwrap(), &k);
        let j = Mask(bits).intersection(all);
        let sub = k.full_subcomplex(j).unwrap();
        prop_assert_eq!(sub.vertex_count(), j.len());
        let inside = common::brute_faces(&k).into_iter().filter(|f| f.is_subset(j)).count();
        prop_assert_eq!(sub.faces().len(), inside);
        prop_assert_eq!(&sub.full_subcomplex(Mask::full(j.len())).unwrap(), &sub);
    }

    #[test]
    fn z_and_r_have_equal_total_rank(k in complex(6), f2 in any::<bool>()) {
        let field = if f2 { FieldTag::TwoElementField } else { FieldTag::Rationals };
        let z = hochster_betti(&k, SpaceKind::Z, field).unwrap();
        let r = hochster_betti(&k, SpaceKind::R, field).unwrap();
        prop_assert_eq!(z.hrk(), r.hrk());
        prop_assert_eq!(z.ranks, common::brute_hochster(&k, false, f2));
    }

    #[test]
    fn z_equals_r_of_double_for_any_complex(k in complex(5)) {
        let report = compare_with_real_double(&k, FieldTag::Rationals).unwrap();
        prop_assert!(report.pass(), "{:?}", report);
    }

    #[test]
    fn display_parse_round_trip(p in poly()) {
        prop_assert_eq!(&p.to_string().parse::<BivariatePolynomial>().unwrap(), &p);
        prop_assert_eq!(&format!("{p:#}").parse::<BivariatePolynomial>().unwrap(), &p);
    }

    #[test]
    fn ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!((&p * &q).derivative_sum(), &(&p.derivative_sum() * &q) + &(&p * &q.derivative_sum()));
    }

    #[test]
    fn closed_form_and_operator_agree(extra in 0u32..4, h in (0usize..5).prop_flat_map(homogeneous)) {
        let n = h.homogeneous_degree().unwrap_or(0);
        let m = n + extra;
        if !h.is_zero() {
            prop_assert_eq!(double_h_by_operator(&h, m).unwrap(), double_h_closed_form(&h, m, n).unwrap());
        }
    }

    #[test]
    fn polytope_identities(p in polytope(8)) {
        let h = h_polynomial(&p);
        let (m, n) = (p.facet_count() as u32, p.dim() as u32);
        prop_assert!(h.is_palindromic());
        prop_assert_eq!(h.coefficient_vector().unwrap(), common::h_vector_by_binomials(p.complex(), p.dim()));
        let closed = double_h_closed_form(&h, m, n).unwrap();
        prop_assert_eq!(&double_h_by_operator(&h, m).unwrap(), &closed);
        prop_assert_eq!(&double_h_by_face_sum(&p).unwrap(), &closed);
        prop_assert_eq!(&h_polynomial(&p.double().unwrap()), &closed);
    }

    #[test]
    fn links_are_polytopes(p in polytope(10)) {
        for v in 0..p.facet_count() {
            let (link, _) = p.link(Mask::singleton(v)).unwrap();
            prop_assert_eq!(link.dim(), p.dim() - 1);
            prop_assert!(DualPolytope::validate(link.complex().clone(), link.dim()).is_ok());
        }
        prop_assert_eq!(boundary(&p).unwrap().h_polynomial(), h_polynomial(&p).derivative_sum());
    }

    #[test]
    fn leibniz(p in polytope(6), q in polytope(6)) {
        let (lhs, rhs) = leibniz_sides(&p, &q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_commutes_with_double(p in polytope(4), q in polytope(5)) {
        let lhs = p.product(&q).unwrap().double().unwrap();
        let rhs = p.double().unwrap().product(&q.double().unwrap()).unwrap();
        let map = double_of_join_relabeling(p.facet_count(), q.facet_count());
        prop_assert_eq!(lhs.complex().equal_under_relabel(rhs.complex(), &map), Ok(true));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn geometric_double_matches_combinatorial(fs in factors(6)) {
        let p = fs.iter().skip(1).fold(fs[0].dual(), |acc, f| acc.product(&f.dual()).unwrap());
        let s = fs.iter().skip(1).fold(fs[0].system(), |acc, f| acc.product(&f.system()).unwrap());
        prop_assert_eq!(&s.dual_complex().unwrap(), &p);
        let slice = s.linear_slice().unwrap();
        prop_assert_eq!(&slice.enumerate_vertices().unwrap().dual, &p);
        let doubled = slice.double().unwrap().enumerate_vertices().unwrap();
        prop_assert_eq!(&doubled.dual, &p.double().unwrap());
        prop_assert_eq!(&slice.double().unwrap().to_system().unwrap().dual_complex().unwrap(), &doubled.dual);
    }
}
