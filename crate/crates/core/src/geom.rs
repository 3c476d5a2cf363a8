//! Exact rational geometry of simple polytopes.
//!
//! A polytope `P = {x : Ax + b >= 0}` embeds into the positive orthant of
//! `R^m` through `x ↦ Ax + b`; its image is the slice `{y >= 0 : Cy = q}`
//! where the rows of `C` span the left kernel of `A` and `q = Cb`. Doubling
//! replaces `C` by `[C | C]`, which the vertex enumerator here turns back into
//! a dual complex for comparison with the combinatorial double.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::complex::{ComplexError, DualPolytope, SimplicialComplex};
use crate::linalg::{self, Combinations, Rational};
use crate::vertex_set::{Mask, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("row {row} has {found} entries, expected {expected}")]
    Shape {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("{0} inequalities exceed the limit of 64")]
    TooManyRows(usize),
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron is empty")]
    Empty,
    #[error("vertex {vertex} is tight on {tight} inequalities, expected {expected}")]
    NotSimple {
        vertex: usize,
        tight: usize,
        expected: usize,
    },
    #[error("inequality {0} does not support a facet")]
    RedundantRow(usize),
    #[error("an embedded vertex violates the derived slice equations")]
    SliceMismatch,
    #[error("slice has no feasible basis")]
    Infeasible,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Exact vertex coordinates with the facets (inequalities or zero
/// coordinates) each vertex lies on, sorted lexicographically by coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    pub vertices: Vec<Vec<Rational>>,
    pub incidences: Vec<Mask>,
}

impl VertexSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn from_map(map: BTreeMap<Vec<Rational>, Mask>) -> Self {
        let (vertices, incidences) = map.into_iter().unzip();
        VertexSet {
            vertices,
            incidences,
        }
    }
}

/// A validated H-representation `{x in R^n : Ax + b >= 0}` of a bounded simple
/// polytope whose `m` inequalities are all facet-defining.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeSystem {
    a: Vec<Vec<Rational>>,
    b: Vec<Rational>,
    dim: usize,
    vertices: VertexSet,
}

impl PolytopeSystem {
    /// The dimension is the row length of `a`; with no rows it is zero.
    pub fn validate(a: Vec<Vec<Rational>>, b: Vec<Rational>) -> Result<Self, GeomError> {
        let dim = a.first().map_or(0, Vec::len);
        Self::validate_with_dim(a, b, dim)
    }

    pub fn validate_with_dim(
        a: Vec<Vec<Rational>>,
        b: Vec<Rational>,
        dim: usize,
    ) -> Result<Self, GeomError> {
        let m = a.len();
        if b.len() != m {
            return Err(GeomError::Shape {
                row: m,
                found: b.len(),
                expected: m,
            });
        }
        if m > MAX_VERTICES {
            return Err(GeomError::TooManyRows(m));
        }
        if let Some((row, r)) = a.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(GeomError::Shape {
                row,
                found: r.len(),
                expected: dim,
            });
        }
        let rank = linalg::rank(&a, dim);
        if rank != dim {
            return Err(GeomError::RankDeficient {
                rank,
                expected: dim,
            });
        }
        if !recession_cone_is_trivial(&a, dim) {
            return Err(GeomError::Unbounded);
        }
        let vertices = vertices_of(&a, &b, dim);
        if vertices.is_empty() {
            return Err(GeomError::Empty);
        }
        for (k, tight) in vertices.incidences.iter().enumerate() {
            if tight.len() != dim {
                return Err(GeomError::NotSimple {
                    vertex: k,
                    tight: tight.len(),
                    expected: dim,
                });
            }
        }
        for row in 0..m {
            let on_row: Vec<&Vec<Rational>> = vertices
                .vertices
                .iter()
                .zip(&vertices.incidences)
                .filter(|(_, tight)| tight.contains(row))
                .map(|(v, _)| v)
                .collect();
            let Some((base, rest)) = on_row.split_first() else {
                return Err(GeomError::RedundantRow(row));
            };
            let diffs: Vec<Vec<Rational>> = rest
                .iter()
                .map(|v| v.iter().zip(base.iter()).map(|(x, y)| x - y).collect())
                .collect();
            if dim == 0 || linalg::rank(&diffs, dim) != dim - 1 {
                return Err(GeomError::RedundantRow(row));
            }
        }
        Ok(PolytopeSystem {
            a,
            b,
            dim,
            vertices,
        })
    }

    /// The point, `R^0` with no inequalities.
    pub fn point() -> Self {
        Self::validate(Vec::new(), Vec::new()).expect("the point is a valid system")
    }

    pub fn a(&self) -> &[Vec<Rational>] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.a.len()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    /// Maximal faces are the sets of inequalities tight at each vertex.
    pub fn dual_complex(&self) -> Result<DualPolytope, GeomError> {
        let complex =
            SimplicialComplex::new(self.facet_count(), self.vertices.incidences.iter().copied())?;
        Ok(DualPolytope::validate(complex, self.dim)?)
    }

    /// `i_P(x) = Ax + b`.
    pub fn embed(&self, x: &[Rational]) -> Vec<Rational> {
        self.a
            .iter()
            .zip(&self.b)
            .map(|(row, bi)| linalg::dot(row, x) + bi)
            .collect()
    }

    /// The slice `{y >= 0 : Cy = q}` with `C` the canonical integer basis of
    /// the left kernel of `A`.
    pub fn linear_slice(&self) -> Result<LinearSlice, GeomError> {
        let m = self.facet_count();
        let a_t = linalg::transpose(&self.a, self.dim);
        let c: Vec<Vec<BigInt>> = linalg::kernel_basis(&a_t, m)
            .iter()
            .map(|row| linalg::primitive_integer_row(row))
            .collect();
        let q = c.iter().map(|row| int_dot(row, &self.b)).collect();
        let slice = LinearSlice::new(c, q, m)?;
        for v in &self.vertices.vertices {
            if !slice.contains(&self.embed(v)) {
                return Err(GeomError::SliceMismatch);
            }
        }
        Ok(slice)
    }

    /// `P × Q` with the inequalities of `self` first.
    pub fn product(&self, other: &PolytopeSystem) -> Result<PolytopeSystem, GeomError> {
        let dim = self.dim + other.dim;
        let mut a = Vec::with_capacity(self.a.len() + other.a.len());
        for row in &self.a {
            let mut r = row.clone();
            r.resize(dim, Rational::zero());
            a.push(r);
        }
        for row in &other.a {
            let mut r = vec![Rational::zero(); self.dim];
            r.extend(row.iter().cloned());
            a.push(r);
        }
        let b = self.b.iter().chain(&other.b).cloned().collect();
        Self::validate_with_dim(a, b, dim)
    }
}

/// `x` with `Ax + b >= 0` from every invertible choice of `dim` tight rows.
pub fn vertices_of(a: &[Vec<Rational>], b: &[Rational], dim: usize) -> VertexSet {
    let mut found: BTreeMap<Vec<Rational>, Mask> = BTreeMap::new();
    for rows in Combinations::new(a.len(), dim) {
        let lhs: Vec<Vec<Rational>> = rows.iter().map(|&i| a[i].clone()).collect();
        let rhs: Vec<Rational> = rows.iter().map(|&i| -b[i].clone()).collect();
        let Some(x) = linalg::solve_square(&lhs, &rhs) else {
            continue;
        };
        if found.contains_key(&x) {
            continue;
        }
        let mut tight = Mask::EMPTY;
        let mut feasible = true;
        for (i, (row, bi)) in a.iter().zip(b).enumerate() {
            let slack = linalg::dot(row, &x) + bi;
            if slack.is_negative() {
                feasible = false;
                break;
            }
            if slack.is_zero() {
                tight = tight.insert(i);
            }
        }
        if feasible {
            found.insert(x, tight);
        }
    }
    VertexSet::from_map(found)
}

/// Whether `{x : Ax >= 0} = {0}`, decided by Fourier–Motzkin: for every
/// coordinate `k` and sign `s`, the system with `x_k = s` must be infeasible.
pub fn recession_cone_is_trivial(a: &[Vec<Rational>], dim: usize) -> bool {
    for k in 0..dim {
        for s in [Rational::one(), -Rational::one()] {
            let system: Vec<Inequality> = a
                .iter()
                .map(|row| {
                    let coeffs = row
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != k)
                        .map(|(_, x)| x.clone())
                        .collect();
                    Inequality {
                        coeffs,
                        constant: &row[k] * &s,
                    }
                })
                .collect();
            if fourier_motzkin_feasible(system, dim.saturating_sub(1)) {
                return false;
            }
        }
    }
    true
}

/// `coeffs · x + constant >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Inequality {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl Inequality {
    /// Divides by the largest absolute entry so duplicates collapse.
    fn normalized(mut self) -> Self {
        let scale = self
            .coeffs
            .iter()
            .chain(core::iter::once(&self.constant))
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Rational::zero);
        if !scale.is_zero() {
            for x in self.coeffs.iter_mut() {
                *x /= &scale;
            }
            self.constant /= &scale;
        }
        self
    }
}

/// Feasibility of a system of non-strict inequalities in `vars` unknowns by
/// eliminating the last variable repeatedly.
pub fn fourier_motzkin_feasible(system: Vec<Inequality>, vars: usize) -> bool {
    let mut current: BTreeSet<Inequality> =
        system.into_iter().map(Inequality::normalized).collect();
    for var in (0..vars).rev() {
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        let mut next = BTreeSet::new();
        for ineq in current {
            let c = ineq.coeffs[var].clone();
            let mut rest = ineq;
            rest.coeffs.pop();
            if c.is_positive() {
                positive.push((c, rest));
            } else if c.is_negative() {
                negative.push((c, rest));
            } else {
                next.insert(rest);
            }
        }
        for (cp, p) in &positive {
            for (cn, n) in &negative {
                // cp > 0, cn < 0: (-cn) * p + cp * n drops the variable
                let wp = -cn.clone();
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| &wp * x + cp * y)
                    .collect();
                let constant = &wp * &p.constant + cp * &n.constant;
                next.insert(Inequality { coeffs, constant }.normalized());
            }
        }
        current = next;
    }
    current.iter().all(|ineq| !ineq.constant.is_negative())
}

fn int_dot(row: &[BigInt], x: &[Rational]) -> Rational {
    row.iter().zip(x).fold(Rational::zero(), |acc, (c, v)| {
        acc + v * Rational::from_integer(c.clone())
    })
}

/// `{y in R^N : y >= 0, Cy = q}` with integer `C` of full row rank.
///
/// The columns of `C` are the linear Gale configuration of the polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSlice {
    c: Vec<Vec<BigInt>>,
    q: Vec<Rational>,
    columns: usize,
}

impl LinearSlice {
    pub fn new(c: Vec<Vec<BigInt>>, q: Vec<Rational>, columns: usize) -> Result<Self, GeomError> {
        if q.len() != c.len() {
            return Err(GeomError::Shape {
                row: c.len(),
                found: q.len(),
                expected: c.len(),
            });
        }
        if let Some((row, r)) = c.iter().enumerate().find(|(_, r)| r.len() != columns) {
            return Err(GeomError::Shape {
                row,
                found: r.len(),
                expected: columns,
            });
        }
        if columns > MAX_VERTICES {
            return Err(GeomError::TooManyRows(columns));
        }
        let slice = LinearSlice { c, q, columns };
        let rank = linalg::rank(&slice.rational_matrix(), columns);
        if rank != slice.rows() {
            return Err(GeomError::RankDeficient {
                rank,
                expected: slice.rows(),
            });
        }
        Ok(slice)
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.c
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.q
    }

    pub fn rows(&self) -> usize {
        self.c.len()
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    /// `N - r`, the dimension of the polytope the slice cuts out.
    pub fn polytope_dim(&self) -> usize {
        self.columns - self.rows()
    }

    /// Column `i` of `C`, the Gale vector of facet `i`.
    pub fn gale_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.columns)
            .map(|i| self.c.iter().map(|row| row[i].clone()).collect())
            .collect()
    }

    fn rational_matrix(&self) -> Vec<Vec<Rational>> {
        self.c
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| Rational::from_integer(x.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn contains(&self, y: &[Rational]) -> bool {
        y.len() == self.columns
            && y.iter().all(|v| !v.is_negative())
            && self
                .c
                .iter()
                .zip(&self.q)
                .all(|(row, qj)| &int_dot(row, y) == qj)
    }

    /// `Σ c_{j,i} (x_i + x_i') = q_j`: the matrix `[C | C]` on `2N` columns.
    pub fn double(&self) -> Result<LinearSlice, GeomError> {
        let c = self
            .c
            .iter()
            .map(|row| row.iter().chain(row.iter()).cloned().collect())
            .collect();
        LinearSlice::new(c, self.q.clone(), 2 * self.columns)
    }

    /// Basic feasible solutions and the dual complex whose maximal faces are
    /// their zero sets.
    pub fn enumerate_vertices(&self) -> Result<SliceVertices, GeomError> {
        let r = self.rows();
        let n = self.columns;
        let dim = n - r;
        if r == 0 && n > 0 {
            return Err(GeomError::Unbounded);
        }
        let matrix = self.rational_matrix();
        let mut found: BTreeMap<Vec<Rational>, Mask> = BTreeMap::new();
        for basis in Combinations::new(n, r) {
            let sub: Vec<Vec<Rational>> = matrix
                .iter()
                .map(|row| basis.iter().map(|&i| row[i].clone()).collect())
                .collect();
            let Some(xb) = linalg::solve_square(&sub, &self.q) else {
                continue;
            };
            if xb.iter().any(|x| x.is_negative()) {
                continue;
            }
            let mut y = vec![Rational::zero(); n];
            for (&i, x) in basis.iter().zip(xb) {
                y[i] = x;
            }
            let zeros: Mask = y
                .iter()
                .enumerate()
                .filter(|(_, x)| x.is_zero())
                .map(|(i, _)| i)
                .collect();
            found.insert(y, zeros);
        }
        if found.is_empty() {
            return Err(GeomError::Infeasible);
        }
        let vertices = VertexSet::from_map(found);
        for (k, zeros) in vertices.incidences.iter().enumerate() {
            if zeros.len() != dim {
                return Err(GeomError::NotSimple {
                    vertex: k,
                    tight: zeros.len(),
                    expected: dim,
                });
            }
        }
        let complex = SimplicialComplex::new(n, vertices.incidences.iter().copied())?;
        let dual = DualPolytope::validate(complex, dim)?;
        Ok(SliceVertices { vertices, dual })
    }

    /// An H-representation of the slice in coordinates along `ker C`:
    /// `y = y0 + K z`, and `y >= 0` becomes `K z + y0 >= 0`.
    pub fn to_system(&self) -> Result<PolytopeSystem, GeomError> {
        let n = self.columns;
        let mut aug: Vec<Vec<Rational>> = self
            .rational_matrix()
            .into_iter()
            .zip(&self.q)
            .map(|(mut row, qj)| {
                row.push(qj.clone());
                row
            })
            .collect();
        let pivots = linalg::rref(&mut aug, n);
        let mut y0 = vec![Rational::zero(); n];
        for (row, &p) in aug.iter().zip(&pivots) {
            y0[p] = row[n].clone();
        }
        let kernel = linalg::kernel_basis(&self.rational_matrix(), n);
        let a: Vec<Vec<Rational>> = (0..n)
            .map(|i| kernel.iter().map(|v| v[i].clone()).collect())
            .collect();
        PolytopeSystem::validate_with_dim(a, y0, self.polytope_dim())
    }
}

/// Vertices of a slice together with its dual complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceVertices {
    pub vertices: VertexSet,
    pub dual: DualPolytope,
}
