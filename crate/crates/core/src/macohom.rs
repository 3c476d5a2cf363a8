//! Betti numbers of moment-angle complexes `Z_K` and real moment-angle
//! complexes `R_K` from reduced homology of full subcomplexes:
//!
//! ```text
//! dim H^k(Z_K) = Σ_{J ⊆ [m]} dim H̃_{k-|J|-1}(K_J)
//! dim H^k(R_K) = Σ_{J ⊆ [m]} dim H̃_{k-1}(K_J)
//! ```
//!
//! with `K_∅ = {∅}` contributing `H̃_{-1} = 1`, i.e. the class in degree 0.
//! Subsets `J` are visited in increasing mask order and the per-degree sums are
//! plain integer additions, so any partition of the mask range gives the same
//! table.

use core::fmt;
use core::ops::Range;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::complex::{ComplexError, DualPolytope, SimplicialComplex};
use crate::vertex_set::Mask;

/// Largest vertex count accepted by [`hochster_betti`].
pub const HOCHSTER_VERTEX_LIMIT: usize = 20;

/// Largest `m` for which the real side of the doubling check, on `2m`
/// vertices, is attempted.
pub const DOUBLING_CHECK_LIMIT: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("{vertices} vertices exceed the budget of {limit}")]
    BudgetExceeded { vertices: usize, limit: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldTag {
    #[default]
    Rationals,
    TwoElementField,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::Rationals => "Q",
            FieldTag::TwoElementField => "F2",
        })
    }
}

/// Which space the table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceKind {
    /// The moment-angle complex `Z_K`.
    Z,
    /// The real moment-angle complex `R_K`.
    R,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::Z => "Z",
            SpaceKind::R => "R",
        })
    }
}

/// Cohomology ranks by degree; degrees with rank zero are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub space: SpaceKind,
    pub field: FieldTag,
    pub vertex_count: usize,
    pub ranks: BTreeMap<usize, u64>,
}

impl BettiTable {
    pub fn rank(&self, degree: usize) -> u64 {
        self.ranks.get(&degree).copied().unwrap_or(0)
    }

    /// Total rank `Σ_i dim H^i`.
    pub fn hrk(&self) -> u64 {
        self.ranks.values().sum()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.ranks.keys().next_back().copied()
    }

    /// Whether `b_k = b_{top - k}` for every `k`.
    pub fn is_symmetric_about(&self, top: usize) -> bool {
        self.ranks
            .iter()
            .all(|(&k, &r)| k <= top && self.rank(top - k) == r)
    }
}

/// `k: rank` lines in ascending degree, then `hrk: N`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in &self.ranks {
            writeln!(f, "{k}: {r}")?;
        }
        write!(f, "hrk: {}", self.hrk())
    }
}

/// Reduced homology ranks of `k`, entry `i` holding dimension `i - 1`.
pub fn reduced_homology_ranks(k: &SimplicialComplex, field: FieldTag) -> Vec<u64> {
    reduced_betti(&k.faces_by_size(), field)
}

/// Precomputed faces of `K` from which each full subcomplex is filtered.
#[derive(Clone, Debug)]
pub struct HochsterEngine {
    faces: Vec<Vec<Mask>>,
    vertex_count: usize,
    space: SpaceKind,
    field: FieldTag,
}

impl HochsterEngine {
    pub fn new(
        k: &SimplicialComplex,
        space: SpaceKind,
        field: FieldTag,
    ) -> Result<Self, HomologyError> {
        if k.vertex_count() > HOCHSTER_VERTEX_LIMIT {
            return Err(HomologyError::BudgetExceeded {
                vertices: k.vertex_count(),
                limit: HOCHSTER_VERTEX_LIMIT,
            });
        }
        Ok(HochsterEngine {
            faces: k.faces_by_size(),
            vertex_count: k.vertex_count(),
            space,
            field,
        })
    }

    /// Number of full subcomplexes, `2^m`.
    pub fn subset_count(&self) -> u64 {
        1u64 << self.vertex_count
    }

    /// Adds the contributions of the subsets whose masks lie in `masks`.
    pub fn accumulate(&self, masks: Range<u64>, ranks: &mut BTreeMap<usize, u64>) {
        let mut sub: Vec<Vec<Mask>> = vec![Vec::new(); self.faces.len()];
        for bits in masks {
            let j = Mask(bits);
            let mut top = 0;
            for (size, level) in self.faces.iter().enumerate() {
                let out = &mut sub[size];
                out.clear();
                out.extend(level.iter().copied().filter(|f| f.is_subset(j)));
                if !out.is_empty() {
                    top = size;
                }
            }
            let betti = reduced_betti(&sub[..=top], self.field);
            for (size, b) in betti.into_iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let degree = match self.space {
                    SpaceKind::Z => size + j.len(),
                    SpaceKind::R => size,
                };
                *ranks.entry(degree).or_insert(0) += b;
            }
        }
    }

    pub fn table(&self, ranks: BTreeMap<usize, u64>) -> BettiTable {
        BettiTable {
            space: self.space,
            field: self.field,
            vertex_count: self.vertex_count,
            ranks,
        }
    }

    pub fn run(&self) -> BettiTable {
        let mut ranks = BTreeMap::new();
        self.accumulate(0..self.subset_count(), &mut ranks);
        self.table(ranks)
    }
}

/// Betti table of `Z_K` or `R_K` over `field`.
pub fn hochster_betti(
    k: &SimplicialComplex,
    space: SpaceKind,
    field: FieldTag,
) -> Result<BettiTable, HomologyError> {
    Ok(HochsterEngine::new(k, space, field)?.run())
}

/// Reduced Betti numbers from faces grouped by size (`faces[0] = [∅]`),
/// entry `s` holding dimension `s - 1`.
///
/// Boundary ranks are computed from the top dimension down; a face that is
/// the pivot of a reduced column one dimension up has a column that reduces
/// to zero, so it is skipped.
fn reduced_betti(faces: &[Vec<Mask>], field: FieldTag) -> Vec<u64> {
    let top = faces.len() - 1;
    // ranks[s] = rank of the boundary from size s to size s - 1
    let mut ranks = vec![0usize; top + 2];
    let mut skip: Vec<bool> = vec![false; faces[top].len()];
    for s in (1..=top).rev() {
        let columns = boundary_columns(&faces[s], &faces[s - 1], &skip);
        let (rank, lows) = column_rank(columns, field);
        ranks[s] = rank;
        skip = vec![false; faces[s - 1].len()];
        for low in lows {
            skip[low as usize] = true;
        }
    }
    (0..=top)
        .map(|s| (faces[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

fn boundary_columns(hi: &[Mask], lo: &[Mask], skip: &[bool]) -> Vec<Vec<(u32, i8)>> {
    hi.iter()
        .zip(skip)
        .filter(|(_, &s)| !s)
        .map(|(sigma, _)| {
            let mut col: Vec<(u32, i8)> = sigma
                .iter()
                .enumerate()
                .map(|(pos, v)| {
                    let row = lo
                        .binary_search(&sigma.remove(v))
                        .expect("faces are closed under subsets");
                    (row as u32, if pos % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

/// Rank and pivot rows after left-to-right column reduction.
fn column_rank(columns: Vec<Vec<(u32, i8)>>, field: FieldTag) -> (usize, Vec<u32>) {
    match field {
        FieldTag::TwoElementField => {
            let cols = columns
                .into_iter()
                .map(|c| c.into_iter().map(|(r, _)| (r, F2)).collect())
                .collect();
            reduce(cols).expect("F2 arithmetic cannot overflow")
        }
        FieldTag::Rationals => {
            let small: Vec<Vec<(u32, i64)>> = columns
                .iter()
                .map(|c| c.iter().map(|&(r, x)| (r, x as i64)).collect())
                .collect();
            reduce(small).unwrap_or_else(|| {
                let big = columns
                    .into_iter()
                    .map(|c| c.into_iter().map(|(r, x)| (r, BigInt::from(x))).collect())
                    .collect();
                reduce(big).expect("BigInt arithmetic cannot overflow")
            })
        }
    }
}

type Column<E> = Vec<(u32, E)>;

/// Scalars usable in fraction-free column reduction.
trait Entry: Clone {
    /// `a * col - b * other` where `a`, `b` are the low entries of `other`
    /// and `col`, divided by the content; `None` on overflow.
    fn eliminate(col: &Column<Self>, other: &Column<Self>) -> Option<Column<Self>>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct F2;

impl Entry for F2 {
    fn eliminate(col: &Column<F2>, other: &Column<F2>) -> Option<Column<F2>> {
        let mut out = Vec::with_capacity(col.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < col.len() && j < other.len() {
            match col[i].0.cmp(&other[j].0) {
                core::cmp::Ordering::Less => {
                    out.push(col[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(other[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&col[i..]);
        out.extend_from_slice(&other[j..]);
        Some(out)
    }
}

impl Entry for i64 {
    fn eliminate(col: &Column<i64>, other: &Column<i64>) -> Option<Column<i64>> {
        let a = other.last()?.1;
        let b = col.last()?.1;
        let g = a.gcd(&b);
        let (a, b) = (a / g, b / g);
        let mut out: Column<i64> = Vec::with_capacity(col.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < col.len() || j < other.len() {
            let (row, value) = match (col.get(i), other.get(j)) {
                (Some(&(r1, x)), Some(&(r2, _))) if r1 < r2 => {
                    i += 1;
                    (r1, a.checked_mul(x)?)
                }
                (Some(&(r1, _)), Some(&(r2, y))) if r2 < r1 => {
                    j += 1;
                    (r2, b.checked_mul(y)?.checked_neg()?)
                }
                (Some(&(r1, x)), Some(&(_, y))) => {
                    i += 1;
                    j += 1;
                    (r1, a.checked_mul(x)?.checked_sub(b.checked_mul(y)?)?)
                }
                (Some(&(r1, x)), None) => {
                    i += 1;
                    (r1, a.checked_mul(x)?)
                }
                (None, Some(&(r2, y))) => {
                    j += 1;
                    (r2, b.checked_mul(y)?.checked_neg()?)
                }
                (None, None) => unreachable!(),
            };
            if value != 0 {
                out.push((row, value));
            }
        }
        let content = out.iter().fold(0i64, |acc, (_, x)| acc.gcd(x));
        if content > 1 {
            for (_, x) in out.iter_mut() {
                *x /= content;
            }
        }
        Some(out)
    }
}

impl Entry for BigInt {
    fn eliminate(col: &Column<BigInt>, other: &Column<BigInt>) -> Option<Column<BigInt>> {
        let a = other.last()?.1.clone();
        let b = col.last()?.1.clone();
        let g = a.gcd(&b);
        let (a, b) = (&a / &g, &b / &g);
        let mut merged: BTreeMap<u32, BigInt> = BTreeMap::new();
        for (r, x) in col {
            *merged.entry(*r).or_default() += &a * x;
        }
        for (r, y) in other {
            *merged.entry(*r).or_default() -= &b * y;
        }
        let mut out: Column<BigInt> = merged.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        let content = out.iter().fold(BigInt::zero(), |acc, (_, x)| acc.gcd(x));
        if content.abs() > BigInt::from(1) {
            for (_, x) in out.iter_mut() {
                *x /= &content;
            }
        }
        Some(out)
    }
}

fn reduce<E: Entry>(columns: Vec<Column<E>>) -> Option<(usize, Vec<u32>)> {
    let mut pivot_of: BTreeMap<u32, usize> = BTreeMap::new();
    let mut reduced: Vec<Column<E>> = Vec::new();
    let mut lows = Vec::new();
    for mut col in columns {
        while let Some(&(low, _)) = col.last() {
            match pivot_of.get(&low) {
                Some(&j) => col = E::eliminate(&col, &reduced[j])?,
                None => break,
            }
        }
        if let Some(&(low, _)) = col.last() {
            pivot_of.insert(low, reduced.len());
            reduced.push(col);
            lows.push(low);
        }
    }
    Some((reduced.len(), lows))
}

/// Outcome of comparing `Z_K` with `R_{L(K)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublingReport {
    pub z: BettiTable,
    pub r_double: BettiTable,
}

impl DoublingReport {
    pub fn totals_agree(&self) -> bool {
        self.z.hrk() == self.r_double.hrk()
    }

    pub fn degrees_agree(&self) -> bool {
        self.z.ranks == self.r_double.ranks
    }

    pub fn pass(&self) -> bool {
        self.totals_agree() && self.degrees_agree()
    }
}

/// Computes `H^*(Z_K)` and `H^*(R_{L(K)})`.
pub fn compare_with_real_double(
    k: &SimplicialComplex,
    field: FieldTag,
) -> Result<DoublingReport, HomologyError> {
    check_doubling_budget(k)?;
    let z = hochster_betti(k, SpaceKind::Z, field)?;
    let r_double = hochster_betti(&k.double()?, SpaceKind::R, field)?;
    Ok(DoublingReport { z, r_double })
}

pub fn check_doubling_budget(k: &SimplicialComplex) -> Result<(), HomologyError> {
    if k.vertex_count() > DOUBLING_CHECK_LIMIT {
        return Err(HomologyError::BudgetExceeded {
            vertices: k.vertex_count(),
            limit: DOUBLING_CHECK_LIMIT,
        });
    }
    Ok(())
}

/// The bound `hrk >= 2^(m-n)` for `Z_P` and for `R_{L(P)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToralRankReport {
    pub m: usize,
    pub n: usize,
    pub hrk_z: u64,
    pub hrk_r_double: u64,
}

impl ToralRankReport {
    pub fn bound(&self) -> u64 {
        1u64 << (self.m - self.n)
    }

    pub fn margin_z(&self) -> i128 {
        self.hrk_z as i128 - self.bound() as i128
    }

    pub fn margin_r_double(&self) -> i128 {
        self.hrk_r_double as i128 - self.bound() as i128
    }

    pub fn pass(&self) -> bool {
        self.margin_z() >= 0 && self.margin_r_double() >= 0
    }
}

pub fn toral_rank_report(
    p: &DualPolytope,
    z: &BettiTable,
    r_double: &BettiTable,
) -> ToralRankReport {
    ToralRankReport {
        m: p.facet_count(),
        n: p.dim(),
        hrk_z: z.hrk(),
        hrk_r_double: r_double.hrk(),
    }
}

pub fn verify_toral_rank_bound(
    p: &DualPolytope,
    field: FieldTag,
) -> Result<ToralRankReport, HomologyError> {
    let report = compare_with_real_double(p.complex(), field)?;
    Ok(toral_rank_report(p, &report.z, &report.r_double))
}

/// `hrk(R_K) >= 2^k hrk(R_{link v})` with `k` the number of facets disjoint
/// from facet `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSplitReport {
    pub vertex: usize,
    pub disjoint_facets: usize,
    pub hrk_r: u64,
    pub hrk_r_facet: u64,
}

impl FacetSplitReport {
    pub fn rhs(&self) -> u64 {
        (1u64 << self.disjoint_facets) * self.hrk_r_facet
    }

    pub fn pass(&self) -> bool {
        self.hrk_r >= self.rhs()
    }
}

pub fn verify_facet_splitting(
    p: &DualPolytope,
    vertex: usize,
    field: FieldTag,
) -> Result<FacetSplitReport, HomologyError> {
    let hrk_r = hochster_betti(p.complex(), SpaceKind::R, field)?.hrk();
    facet_split_report(p, vertex, hrk_r, field)
}

/// Same as [`verify_facet_splitting`] with `hrk(R_K)` already known.
pub fn facet_split_report(
    p: &DualPolytope,
    vertex: usize,
    hrk_r: u64,
    field: FieldTag,
) -> Result<FacetSplitReport, HomologyError> {
    let disjoint_facets = p.disjoint_facet_count(vertex)?;
    let (facet, _) = p.link(Mask::singleton(vertex))?;
    let hrk_r_facet = hochster_betti(facet.complex(), SpaceKind::R, field)?.hrk();
    Ok(FacetSplitReport {
        vertex,
        disjoint_facets,
        hrk_r,
        hrk_r_facet,
    })
}
