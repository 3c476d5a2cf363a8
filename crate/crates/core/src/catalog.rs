//! Standard families: simplices, cubes and polygons, as dual complexes and as
//! rational H-representations with matching facet order.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::complex::{ComplexError, DualPolytope, SimplicialComplex};
use crate::geom::{GeomError, PolytopeSystem};
use crate::linalg::{rational, Rational};
use crate::vertex_set::Mask;

/// `∂Δ^n` on `n + 1` vertices; `simplex(0)` is the point.
pub fn simplex(n: usize) -> Result<DualPolytope, ComplexError> {
    if n == 0 {
        return Ok(DualPolytope::point());
    }
    let all = Mask::full(n + 1);
    let complex = SimplicialComplex::new(n + 1, all.iter().map(|v| all.remove(v)))?;
    DualPolytope::validate(complex, n)
}

/// `I^n`, dual to the join of `n` copies of two points; facets `2k, 2k + 1`
/// are the opposite sides `x_k = 0` and `x_k = 1`.
pub fn cube(n: usize) -> Result<DualPolytope, ComplexError> {
    let segment = simplex(1)?;
    (0..n).try_fold(DualPolytope::point(), |acc, _| acc.product(&segment))
}

/// The `m`-gon, dual to the cycle `0 - 1 - .. - (m-1) - 0`.
pub fn polygon(m: usize) -> Result<DualPolytope, ComplexError> {
    if m < 3 {
        return Err(ComplexError::NotPure {
            face: Mask::EMPTY,
            found: m,
            expected: 3,
        });
    }
    let edges = (0..m).map(|i| Mask::from_iter([i, (i + 1) % m]));
    DualPolytope::validate(SimplicialComplex::new(m, edges)?, 2)
}

/// `x_i >= 0` for `i < n` and `1 - Σ x_i >= 0`.
pub fn simplex_system(n: usize) -> Result<PolytopeSystem, GeomError> {
    if n == 0 {
        return Ok(PolytopeSystem::point());
    }
    let mut a = Vec::with_capacity(n + 1);
    let mut b = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![Rational::zero(); n];
        row[i] = rational(1);
        a.push(row);
        b.push(rational(0));
    }
    a.push(vec![rational(-1); n]);
    b.push(rational(1));
    PolytopeSystem::validate(a, b)
}

/// `0 <= x_k <= 1`, rows ordered `x_0, 1 - x_0, x_1, 1 - x_1, ..`.
pub fn cube_system(n: usize) -> Result<PolytopeSystem, GeomError> {
    let segment = PolytopeSystem::validate(
        vec![vec![rational(1)], vec![rational(-1)]],
        vec![rational(0), rational(1)],
    )?;
    (0..n).try_fold(PolytopeSystem::point(), |acc, _| acc.product(&segment))
}

/// An `m`-gon cut out by tangent lines of the parabola `y = x^2` at
/// `x = 2k - (m - 2)` for `k = 0, .., m - 2` and the cap `y <= (m-2)^2 + 1`.
///
/// Facet `k < m - 1` is the `k`-th tangent; consecutive tangents meet, so
/// the facet order follows the boundary and matches [`polygon`].
pub fn polygon_system(m: usize) -> Result<PolytopeSystem, GeomError> {
    if m < 3 {
        return Err(GeomError::RankDeficient {
            rank: m.min(2),
            expected: 2,
        });
    }
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for k in 0..m as i64 - 1 {
        let u = 2 * k - (m as i64 - 2);
        // y - 2u x + u^2 >= 0
        a.push(vec![rational(-2 * u), rational(1)]);
        b.push(rational(u * u));
    }
    let cap = (m as i64 - 2).pow(2) + 1;
    a.push(vec![rational(0), rational(-1)]);
    b.push(rational(cap));
    PolytopeSystem::validate(a, b)
}
