//! The differential ring of simple polytopes: formal integer combinations
//! multiplied by the product of polytopes, with `d(P)` the sum of the facets.

use core::fmt;

use alloc::collections::BTreeMap;

use num_bigint::BigInt;

use crate::complex::{ComplexError, DualPolytope};
use crate::poly::{h_polynomial, BivariatePolynomial};
use crate::vertex_set::Mask;

/// `Σ k_i P_i` with nonzero coefficients. Terms whose dual complexes are
/// identical (same labels) are merged; isomorphic but differently labeled
/// complexes stay separate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormalPolytopeSum {
    terms: BTreeMap<DualPolytope, i64>,
}

impl FormalPolytopeSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(p: DualPolytope) -> Self {
        let mut s = Self::zero();
        s.add_term(1, p);
        s
    }

    pub fn add_term(&mut self, coefficient: i64, p: DualPolytope) {
        if coefficient == 0 {
            return;
        }
        let slot = self.terms.entry(p).or_insert(0);
        *slot += coefficient;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &DualPolytope)> {
        self.terms.iter().map(|(p, c)| (*c, p))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FormalPolytopeSum) -> FormalPolytopeSum {
        let mut out = self.clone();
        for (c, p) in other.terms() {
            out.add_term(c, p.clone());
        }
        out
    }

    pub fn negate(&self) -> FormalPolytopeSum {
        FormalPolytopeSum {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }

    /// Bilinear extension of the product of polytopes.
    pub fn product(&self, other: &FormalPolytopeSum) -> Result<FormalPolytopeSum, ComplexError> {
        let mut out = FormalPolytopeSum::zero();
        for (c1, p1) in self.terms() {
            for (c2, p2) in other.terms() {
                out.add_term(c1 * c2, p1.product(p2)?);
            }
        }
        Ok(out)
    }

    /// `d` extended linearly.
    pub fn boundary(&self) -> Result<FormalPolytopeSum, ComplexError> {
        let mut out = FormalPolytopeSum::zero();
        for (c, p) in self.terms() {
            for (c2, facet) in boundary(p)?.terms() {
                out.add_term(c * c2, facet.clone());
            }
        }
        Ok(out)
    }

    /// `Σ k_i h(P_i)`.
    pub fn h_polynomial(&self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (c, p) in self.terms() {
            out += &h_polynomial(p).scale(&BigInt::from(c));
        }
        out
    }
}

/// `d(P) = Σ F_i`: the link of every vertex of the dual complex. The point has
/// no facets and maps to the empty sum.
pub fn boundary(p: &DualPolytope) -> Result<FormalPolytopeSum, ComplexError> {
    let mut out = FormalPolytopeSum::zero();
    for v in 0..p.facet_count() {
        let (facet, _) = p.link(Mask::singleton(v))?;
        out.add_term(1, facet);
    }
    Ok(out)
}

/// Renders `k1*name1 + k2*name2` using `name` for each polytope.
pub struct Named<'a, F> {
    pub sum: &'a FormalPolytopeSum,
    pub name: F,
}

impl<F, D> fmt::Display for Named<'_, F>
where
    F: Fn(&DualPolytope) -> D,
    D: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sum.is_zero() {
            return f.write_str("0");
        }
        for (k, (c, p)) in self.sum.terms().enumerate() {
            match (k, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}*{}", c.unsigned_abs(), (self.name)(p))?;
        }
        Ok(())
    }
}

impl fmt::Display for FormalPolytopeSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Named {
            sum: self,
            name: |p: &DualPolytope| alloc::format!("P(m={},n={})", p.facet_count(), p.dim()),
        }
        .fmt(f)
    }
}

/// Terms of `d(P × Q)` and of `dP × Q + P × dQ`, for comparison.
pub fn leibniz_sides(
    p: &DualPolytope,
    q: &DualPolytope,
) -> Result<(FormalPolytopeSum, FormalPolytopeSum), ComplexError> {
    let lhs = boundary(&p.product(q)?)?;
    let sp = FormalPolytopeSum::single(p.clone());
    let sq = FormalPolytopeSum::single(q.clone());
    let rhs = boundary(p)?.product(&sq)?.add(&sp.product(&boundary(q)?)?);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cube, polygon, simplex};
    use alloc::vec::Vec;

    #[test]
    fn boundaries_of_small_polytopes() {
        let segment = simplex(1).unwrap();
        let d = boundary(&polygon(5).unwrap()).unwrap();
        assert_eq!(d.terms().collect::<Vec<_>>(), [(5, &segment)]);
        let d = boundary(&segment).unwrap();
        assert_eq!(d.terms().collect::<Vec<_>>(), [(2, &DualPolytope::point())]);
        let d = boundary(&cube(2).unwrap()).unwrap();
        assert_eq!(d.terms().collect::<Vec<_>>(), [(4, &segment)]);
        assert!(boundary(&DualPolytope::point()).unwrap().is_zero());
    }

    #[test]
    fn h_of_sums() {
        let segment = simplex(1).unwrap();
        let mut s = FormalPolytopeSum::zero();
        s.add_term(5, segment);
        assert_eq!(s.h_polynomial(), "5*a + 5*t".parse().unwrap());
        assert!(FormalPolytopeSum::zero().h_polynomial().is_zero());
        let pentagon = FormalPolytopeSum::single(polygon(5).unwrap());
        assert!(pentagon.add(&pentagon.negate()).is_zero());
    }

    #[test]
    fn products() {
        let segment = simplex(1).unwrap();
        assert_eq!(segment.product(&segment).unwrap(), cube(2).unwrap());
        let prism = simplex(2).unwrap().product(&segment).unwrap();
        assert_eq!((prism.facet_count(), prism.dim()), (5, 3));
        let p = polygon(5).unwrap();
        assert_eq!(p.product(&DualPolytope::point()).unwrap(), p);
    }

    #[test]
    fn rendering() {
        let mut s = FormalPolytopeSum::single(simplex(1).unwrap());
        s.add_term(-3, DualPolytope::point());
        assert_eq!(alloc::format!("{s}"), "-3*P(m=0,n=0) + 1*P(m=2,n=1)");
    }
}
