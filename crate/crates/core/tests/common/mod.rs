//! Brute-force references, written against definitions only.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use polydouble::complex::SimplicialComplex;
use polydouble::Mask;

pub fn masks(k: &SimplicialComplex) -> Vec<Mask> {
    (0..1u64 << k.vertex_count()).map(Mask).collect()
}

/// Every face, by testing every vertex subset.
pub fn brute_faces(k: &SimplicialComplex) -> Vec<Mask> {
    masks(k).into_iter().filter(|s| k.is_face(*s)).collect()
}

pub fn maximal(faces: &[Mask]) -> Vec<Mask> {
    let mut out: Vec<Mask> = faces
        .iter()
        .copied()
        .filter(|f| !faces.iter().any(|g| g != f && f.is_subset(*g)))
        .collect();
    out.sort();
    out
}

/// Maximal faces of the double from the pair rule applied to all `2^(2m)` sets.
pub fn brute_double(k: &SimplicialComplex) -> Vec<Mask> {
    let m = k.vertex_count();
    let faces: Vec<Mask> = (0..1u64 << (2 * m))
        .map(Mask)
        .filter(|s| {
            let pairs: Mask = (0..m)
                .filter(|&i| s.contains(i) && s.contains(i + m))
                .collect();
            k.is_face(pairs)
        })
        .collect();
    maximal(&faces)
}

/// Maximal faces of the link, in the original labels.
pub fn brute_link(k: &SimplicialComplex, sigma: Mask) -> Vec<Mask> {
    let faces: Vec<Mask> = brute_faces(k)
        .into_iter()
        .filter(|t| t.is_disjoint(sigma) && k.is_face(t.union(sigma)))
        .collect();
    maximal(&faces)
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `h_j = Σ_{i <= j} (-1)^(j-i) C(n-i, j-i) F_i`, `F_i` the number of
/// `i`-element faces.
pub fn h_vector_by_binomials(k: &SimplicialComplex, n: usize) -> Vec<BigInt> {
    let mut counts = vec![0i64; n + 1];
    for f in brute_faces(k) {
        counts[f.len()] += 1;
    }
    let n = n as i64;
    (0..=n)
        .map(|j| {
            (0..=j).fold(BigInt::zero(), |acc, i| {
                let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                acc + binomial(n - i, j - i) * counts[i as usize] * sign
            })
        })
        .collect()
}

/// Rank by dense Gaussian elimination over Q.
fn rank_q(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &rows[r][c];
            let pivot = rows[r].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot).skip(c) {
                *x -= &f * y;
            }
        }
        r += 1;
    }
    r
}

fn rank_f2(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][c] {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot).skip(c) {
                    *x ^= *y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced Betti numbers, entry `s` in dimension `s - 1`, via dense boundary matrices.
pub fn dense_reduced_betti(k: &SimplicialComplex, over_f2: bool) -> Vec<u64> {
    let faces = brute_faces(k);
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let by_size: Vec<Vec<Mask>> = (0..=top)
        .map(|s| faces.iter().copied().filter(|f| f.len() == s).collect())
        .collect();
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let (hi, lo) = (&by_size[s], &by_size[s - 1]);
        let entry = |row: &Mask, col: &Mask| -> i64 {
            if !row.is_subset(*col) {
                return 0;
            }
            let v = col.difference(*row).iter().next().unwrap();
            let pos = col.iter().position(|w| w == v).unwrap();
            if pos % 2 == 0 {
                1
            } else {
                -1
            }
        };
        ranks[s] = if over_f2 {
            rank_f2(
                lo.iter()
                    .map(|r| hi.iter().map(|c| entry(r, c) != 0).collect())
                    .collect(),
            )
        } else {
            rank_q(
                lo.iter()
                    .map(|r| {
                        hi.iter()
                            .map(|c| BigRational::from_integer(entry(r, c).into()))
                            .collect()
                    })
                    .collect(),
            )
        };
    }
    (0..=top)
        .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
        .collect()
}

/// Hochster sums using `full_subcomplex` and dense homology.
pub fn brute_hochster(k: &SimplicialComplex, real: bool, over_f2: bool) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for j in masks(k) {
        let sub = k.full_subcomplex(j).unwrap();
        for (s, b) in dense_reduced_betti(&sub, over_f2).into_iter().enumerate() {
            if b > 0 {
                let degree = if real { s } else { s + j.len() };
                *out.entry(degree).or_insert(0) += b;
            }
        }
    }
    out
}
