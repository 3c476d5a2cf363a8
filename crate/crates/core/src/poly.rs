//! Integer polynomials in two variables `a` (alpha) and `t`.
//!
//! f- and h-polynomials of simple polytopes live here, together with three
//! independent routes to the h-polynomial of the double: the face sum over
//! all faces of `P`, the divided-derivative operator, and the closed form
//! `(a + t)^(m - n) h(P)(a^2, t^2)`.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::complex::{ComplexError, DualPolytope};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree {degree} exceeds m = {m}")]
    DegreeExceedsM { degree: u32, m: u32 },
    #[error("expected a homogeneous polynomial of degree {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: String },
    #[error("cannot parse polynomial at byte {at}: {reason}")]
    Parse { at: usize, reason: &'static str },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Exponent pair `(i, j)` of the monomial `a^i t^j`.
pub type Exponents = (u32, u32);

/// A polynomial in `Z[a, t]`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * a^i * t^j`.
    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c.into());
        p
    }

    pub fn alpha() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `a + t`.
    pub fn alpha_plus_t() -> Self {
        Self::alpha() + Self::t()
    }

    /// Builds `Σ c_j a^(d-j) t^j` from `[c_0, .., c_d]`.
    pub fn homogeneous_from_coefficients<C: Into<BigInt> + Clone>(coefficients: &[C]) -> Self {
        let d = coefficients.len().saturating_sub(1) as u32;
        let mut p = Self::zero();
        for (j, c) in coefficients.iter().enumerate() {
            p.add_term((d - j as u32, j as u32), c.clone().into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// The common total degree of all terms; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|(i, j)| i + j);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// `[c_0, .., c_d]` with `c_j` the coefficient of `a^(d-j) t^j`.
    pub fn coefficient_vector(&self) -> Result<Vec<BigInt>, PolyError> {
        let d = self.homogeneous_degree().ok_or(PolyError::NotHomogeneous)?;
        Ok((0..=d).map(|j| self.coefficient(d - j, j)).collect())
    }

    /// Whether the coefficient vector reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        match self.coefficient_vector() {
            Ok(v) => v.iter().eq(v.iter().rev()),
            Err(_) => false,
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(*e, v * c);
        }
        out
    }

    /// `p(a - t, t)`: turns an f-polynomial into an h-polynomial.
    pub fn shift_alpha_by_minus_t(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let row = binomial_row(i);
            for (k, b) in row.into_iter().enumerate() {
                let k = k as u32;
                let sign = if k % 2 == 1 {
                    -BigInt::one()
                } else {
                    BigInt::one()
                };
                out.add_term((i - k, j + k), c * b * sign);
            }
        }
        out
    }

    /// `p(a^2, t^2)`.
    pub fn square_variables(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(i, j), c)| ((2 * i, 2 * j), c.clone()))
            .collect();
        BivariatePolynomial { terms }
    }

    /// `(∂/∂a + ∂/∂t) p`.
    pub fn derivative_sum(&self) -> Self {
        self.divided_derivative(1)
    }

    /// `(∂/∂a + ∂/∂t)^k p / k!`, kept in integers through
    /// `D_k(a^i t^j) = Σ_l C(i, l) C(j, k - l) a^(i-l) t^(j-k+l)`.
    pub fn divided_derivative(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            let row_i = binomial_row(i);
            let row_j = binomial_row(j);
            for l in 0..=k.min(i) {
                let rest = k - l;
                if rest > j {
                    continue;
                }
                let coeff = c * &row_i[l as usize] * &row_j[rest as usize];
                out.add_term((i - l, j - rest), coeff);
            }
        }
        out
    }

    fn sorted_terms(&self) -> Vec<(Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|((a1, t1), _), ((a2, t2), _)| (a2 + t2, a2).cmp(&(a1 + t1, a1)));
        v
    }
}

/// `[C(n, 0), .., C(n, n)]`.
fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = row[k as usize].clone() * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(mut self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&BivariatePolynomial> for BivariatePolynomial {
    fn add_assign(&mut self, rhs: &BivariatePolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(mut self) -> BivariatePolynomial {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        self + &(-rhs.clone())
    }
}

impl Sub for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self - &rhs
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self * &rhs
    }
}

/// Degree-lexicographic rendering, `a^2 + 3*a*t + t^2`; the alternate flag
/// drops the spaces, `a^2+3*a*t+t^2`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let compact = f.alternate();
        for (k, ((i, j), c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative, compact) {
                (0, true, _) => f.write_str("-")?,
                (0, false, _) => {}
                (_, true, true) => f.write_str("-")?,
                (_, false, true) => f.write_str("+")?,
                (_, true, false) => f.write_str(" - ")?,
                (_, false, false) => f.write_str(" + ")?,
            }
            let magnitude = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || (i == 0 && j == 0) {
                factors.push(magnitude.to_string());
            }
            for (name, e) in [("a", i), ("t", j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(alloc::format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for BivariatePolynomial {
    type Err = PolyError;

    /// Accepts the rendering grammar: signed terms of `*`-separated factors,
    /// each an integer, `a`, `t` or `α`, optionally raised with `^`.
    fn from_str(s: &str) -> Result<Self, PolyError> {
        Parser { src: s, pos: 0 }.polynomial()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn err(&self, reason: &'static str) -> PolyError {
        PolyError::Parse {
            at: self.pos,
            reason,
        }
    }

    fn polynomial(&mut self) -> Result<BivariatePolynomial, PolyError> {
        let mut out = BivariatePolynomial::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = match self.peek() {
                None => break,
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            };
            first = false;
            let term = self.term()?;
            out += &if negative { -term } else { term };
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<BivariatePolynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok(acc);
            }
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
    }

    fn factor(&mut self) -> Result<BivariatePolynomial, PolyError> {
        self.skip_ws();
        let c = self.peek().ok_or_else(|| self.err("expected a factor"))?;
        if c.is_ascii_digit() {
            let digits = self.digits();
            let value: BigInt = digits.parse().map_err(|_| self.err("bad integer"))?;
            return Ok(BivariatePolynomial::constant(value));
        }
        let base = match c {
            'a' | 'α' => BivariatePolynomial::alpha(),
            't' => BivariatePolynomial::t(),
            _ => return Err(self.err("unexpected character")),
        };
        self.pos += c.len_utf8();
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }
}

/// `f(P)(a, t) = a^n + f_{n-1,1} a^(n-1) t + .. + f_{0,n} t^n`.
pub fn f_polynomial(p: &DualPolytope) -> BivariatePolynomial {
    let mut coefficients = vec![BigInt::one()];
    coefficients.extend(p.f_counts().into_iter().map(BigInt::from));
    BivariatePolynomial::homogeneous_from_coefficients(&coefficients)
}

/// `h(P)(a, t) = f(P)(a - t, t)`.
pub fn h_polynomial(p: &DualPolytope) -> BivariatePolynomial {
    f_polynomial(p).shift_alpha_by_minus_t()
}

/// Sum over the faces `G` of `P` (including `P`, excluding the empty face)
/// of `(-1)^c (a t)^c (a + t)^(m - c) h(G)` with `c = codim G`.
pub fn double_h_by_face_sum(p: &DualPolytope) -> Result<BivariatePolynomial, PolyError> {
    let m = p.facet_count() as u32;
    let at = BivariatePolynomial::monomial(1, 1, 1);
    let sum = BivariatePolynomial::alpha_plus_t();
    let mut out = BivariatePolynomial::zero();
    let mut weights: BTreeMap<u32, BivariatePolynomial> = BTreeMap::new();
    for sigma in p.complex().faces() {
        let c = sigma.len() as u32;
        let weight = weights.entry(c).or_insert_with(|| {
            let w = &at.pow(c) * &sum.pow(m - c);
            if c % 2 == 1 {
                -w
            } else {
                w
            }
        });
        let (face, _) = p.link(sigma)?;
        out += &(&*weight * &h_polynomial(&face));
    }
    Ok(out)
}

/// `Σ_k (-1)^k (a t)^k (a + t)^(m - k) D_k(h)`, the doubling operator
/// `(a+t)^m exp(-(a t)/(a+t) (∂_a + ∂_t))` with the factorials and the
/// negative powers of `a + t` cancelled in advance.
pub fn double_h_by_operator(
    h: &BivariatePolynomial,
    m: u32,
) -> Result<BivariatePolynomial, PolyError> {
    let n = h.homogeneous_degree().ok_or(PolyError::NotHomogeneous)?;
    if n > m {
        return Err(PolyError::DegreeExceedsM { degree: n, m });
    }
    let at = BivariatePolynomial::monomial(1, 1, 1);
    let sum = BivariatePolynomial::alpha_plus_t();
    let mut out = BivariatePolynomial::zero();
    for k in 0..=n {
        let term = &(&at.pow(k) * &sum.pow(m - k)) * &h.divided_derivative(k);
        out += &if k % 2 == 1 { -term } else { term };
    }
    Ok(out)
}

/// `(a + t)^(m - n) h(a^2, t^2)`.
pub fn double_h_closed_form(
    h: &BivariatePolynomial,
    m: u32,
    n: u32,
) -> Result<BivariatePolynomial, PolyError> {
    if h.homogeneous_degree() != Some(n) {
        return Err(PolyError::DegreeMismatch {
            expected: n,
            found: h.to_string(),
        });
    }
    if m < n {
        return Err(PolyError::DegreeExceedsM { degree: n, m });
    }
    Ok(&BivariatePolynomial::alpha_plus_t().pow(m - n) * &h.square_variables())
}
