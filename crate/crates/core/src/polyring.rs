//! Sparse multivariate polynomials over the rationals, graded pieces of
//! ideals, rational generating series and integer interpolation.
//!
//! Monomials are ordered by graded lexicographic order. Degree bases are
//! listed in decreasing order, so `x^d` comes first and the last variable
//! to the power `d` comes last.

use crate::error::{Result, SplineError};
use crate::linalg::{primitive_integer_vector, Eliminator};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

/// Exponent vector. Comparison is graded lexicographic: total degree
/// first, then lexicographic comparison of the exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise quotient when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn var_name(nvars: usize, i: usize) -> String {
    const NAMES: [&str; 4] = ["x", "y", "z", "w"];
    if nvars <= 4 {
        NAMES[i].to_string()
    } else {
        format!("x{i}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", var_name(self.0.len(), i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of the given total degree, in decreasing graded
/// lexicographic order, with an index lookup table.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    pub nvars: usize,
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl DegreeBasis {
    pub fn new(nvars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut stack = vec![0u32; nvars];
        fill(&mut monomials, &mut stack, 0, degree);
        fn fill(out: &mut Vec<Monomial>, stack: &mut Vec<u32>, var: usize, left: u32) {
            if var + 1 == stack.len() {
                stack[var] = left;
                out.push(Monomial(stack.clone()));
                return;
            }
            for e in (0..=left).rev() {
                stack[var] = e;
                fill(out, stack, var + 1, left - e);
            }
        }
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        DegreeBasis { nvars, degree, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Sparse polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(Monomial::variable(nvars, var), BigRational::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, BigRational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing graded lexicographic order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| m.degree());
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Self::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Appends one variable and pads every term up to `target` with powers
    /// of it; `target` defaults to the total degree.
    pub fn homogenize(&self, target: Option<u32>) -> Result<Polynomial> {
        let deg = self.total_degree().unwrap_or(0);
        let target = target.unwrap_or(deg);
        if target < deg {
            return Err(SplineError::Validation(format!(
                "cannot homogenize a degree {deg} polynomial to degree {target}"
            )));
        }
        let nv = self.nvars + 1;
        let mut out = Polynomial::zero(nv);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.push(target - m.degree());
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut v = m.0.clone();
            v[var] = e - 1;
            out.add_term(Monomial(v), c * BigRational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficient vector in the given degree basis; fails on terms of a
    /// different degree.
    pub fn to_vector(&self, basis: &DegreeBasis) -> Result<Vec<(usize, BigRational)>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let idx = basis.index_of(m).ok_or_else(|| {
                SplineError::Validation(format!(
                    "term {m} does not have degree {}",
                    basis.degree
                ))
            })?;
            out.push((idx, c.clone()));
        }
        Ok(out)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialRepr {
    nvars: usize,
    terms: Vec<(Vec<u32>, String)>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = PolynomialRepr {
            nvars: self.nvars,
            terms: self
                .terms_desc()
                .map(|(m, c)| (m.0.clone(), c.to_string()))
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PolynomialRepr::deserialize(d)?;
        let mut p = Polynomial::zero(repr.nvars);
        for (exps, coeff) in repr.terms {
            if exps.len() != repr.nvars {
                return Err(D::Error::custom("exponent vector arity mismatch"));
            }
            let c = parse_rational(&coeff).map_err(D::Error::custom)?;
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }
}

/// Nonzero homogeneous linear form with primitive integer coefficients and
/// positive first nonzero coefficient, so projectively equal forms compare
/// equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LinearForm {
    pub coeffs: Vec<BigInt>,
}

impl LinearForm {
    pub fn from_rationals(coeffs: &[BigRational]) -> Option<LinearForm> {
        primitive_integer_vector(coeffs).map(|coeffs| LinearForm { coeffs })
    }

    pub fn from_integers(coeffs: Vec<i64>) -> Option<LinearForm> {
        let rats: Vec<BigRational> = coeffs
            .into_iter()
            .map(|c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Self::from_rationals(&rats)
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    /// Index of the first nonzero coefficient.
    pub fn leading_var(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).expect("forms are nonzero")
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let nv = self.coeffs.len();
        let mut p = Polynomial::zero(nv);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(
                    Monomial::variable(nv, i),
                    BigRational::from_integer(c.clone()),
                );
            }
        }
        p
    }

    pub fn power(&self, e: u32) -> Polynomial {
        self.to_polynomial().pow(e)
    }

    /// Dot product against an integer (projective) point.
    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        self.coeffs.iter().zip(point).map(|(c, p)| c * p).sum()
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

impl serde::Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Binomial coefficient, zero outside the usual range.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: i128 = 1;
    for i in 0..k {
        num = num * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(num).expect("binomial overflow")
}

/// dim of the degree `d` piece of a polynomial ring in `nvars` variables.
pub fn dim_full_space(nvars: usize, d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        binom(d + nvars as i64 - 1, nvars as i64 - 1)
    }
}

/// Rational series `numerator(t) / (1 - t)^denom_pow` with integer
/// numerator coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GeneratingSeries {
    pub numerator: Vec<i64>,
    pub denom_pow: u32,
}

impl GeneratingSeries {
    pub fn new(numerator: Vec<i64>, denom_pow: u32) -> Self {
        let mut numerator = numerator;
        while numerator.last() == Some(&0) {
            numerator.pop();
        }
        GeneratingSeries { numerator, denom_pow }
    }

    pub fn coefficient(&self, d: i64) -> i64 {
        let e = self.denom_pow as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(i, &c)| c * binom(d - i as i64 + e - 1, e - 1))
            .sum()
    }

    /// Recovers the numerator from leading coefficients of the series.
    /// Requires the trailing `margin` numerator coefficients of the window
    /// to vanish, as evidence that the whole numerator was seen.
    pub fn from_coefficients(dims: &[i64], denom_pow: u32, margin: usize) -> Result<Self> {
        if dims.len() < margin + 1 {
            return Err(SplineError::NotStabilized(format!(
                "window of {} coefficients is too short",
                dims.len()
            )));
        }
        let e = denom_pow as i64;
        let mut numerator = Vec::with_capacity(dims.len());
        for j in 0..dims.len() {
            let mut c = 0i64;
            for i in 0..=j.min(denom_pow as usize) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                c += sign * binom(e, i as i64) * dims[j - i];
            }
            numerator.push(c);
        }
        if numerator.iter().rev().take(margin).any(|&c| c != 0) {
            return Err(SplineError::NotStabilized(format!(
                "numerator terms still present at degrees {}..{}",
                dims.len() - margin,
                dims.len() - 1
            )));
        }
        Ok(Self::new(numerator, denom_pow))
    }
}

impl fmt::Display for GeneratingSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_empty() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        let mut first = true;
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{i}")?;
                }
            }
        }
        write!(f, ") / (1-t)^{}", self.denom_pow)
    }
}

/// Matrix of the multiplication map `(g_1, ..., g_s) . R_{d - deg g_i} ->
/// R_d` for homogeneous generators, in the monomial bases.
pub struct GradedPiece {
    pub target: DegreeBasis,
    /// (generator index, source monomial, column entries by target row).
    pub columns: Vec<(usize, Monomial, Vec<(usize, BigRational)>)>,
}

impl GradedPiece {
    pub fn rank(&self) -> usize {
        let mut elim = Eliminator::new();
        for (_, _, col) in &self.columns {
            let entries: Vec<(u32, BigRational)> =
                col.iter().map(|(i, c)| (*i as u32, c.clone())).collect();
            elim.insert_rationals(&entries);
        }
        elim.rank()
    }

    pub fn num_rows(&self) -> usize {
        self.target.len()
    }

    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }
}

/// Degree `d` piece of the ideal generated by homogeneous polynomials.
/// Fails when a generator is zero or inhomogeneous.
pub fn graded_piece_matrix(gens: &[Polynomial], nvars: usize, d: u32) -> Result<GradedPiece> {
    let target = DegreeBasis::new(nvars, d);
    let mut columns = Vec::new();
    for (gi, g) in gens.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(SplineError::Validation(format!(
                "generator {gi} lives in {} variables, expected {nvars}",
                g.nvars()
            )));
        }
        let deg = g.homogeneous_degree().ok_or_else(|| {
            SplineError::Validation(format!("generator {gi} is zero or inhomogeneous"))
        })?;
        if deg > d {
            continue;
        }
        for m in &DegreeBasis::new(nvars, d - deg).monomials {
            let mut col = Vec::with_capacity(g.num_terms());
            for (gm, c) in g.terms_desc() {
                let idx = target.index_of(&gm.mul(m)).expect("degree bookkeeping");
                col.push((idx, c.clone()));
            }
            columns.push((gi, m.clone(), col));
        }
    }
    Ok(GradedPiece { target, columns })
}

/// Dimension of the degree `d` piece of the ideal generated by `gens`.
pub fn ideal_piece_dim(gens: &[Polynomial], nvars: usize, d: u32) -> Result<usize> {
    Ok(graded_piece_matrix(gens, nvars, d)?.rank())
}

/// Interpolating polynomial through integer points, by Newton divided
/// differences; coefficients ascending by power.
pub fn interpolate_integer_points(points: &[(i64, i64)]) -> Vec<BigRational> {
    assert!(!points.is_empty());
    let xs: Vec<BigRational> = points
        .iter()
        .map(|p| BigRational::from_integer(BigInt::from(p.0)))
        .collect();
    let mut dd: Vec<BigRational> = points
        .iter()
        .map(|p| BigRational::from_integer(BigInt::from(p.1)))
        .collect();
    let n = points.len();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // Accumulate dd[i] * prod_{j<i} (x - x_j).
    let mut coeffs = vec![BigRational::zero(); n];
    let mut prod = vec![BigRational::zero(); n + 1];
    prod[0] = BigRational::one();
    let mut prod_len = 1;
    for i in 0..n {
        for j in 0..prod_len {
            coeffs[j] += &dd[i] * &prod[j];
        }
        // prod *= (x - x_i)
        for j in (0..prod_len).rev() {
            let shifted = prod[j].clone();
            prod[j + 1] += &shifted;
            prod[j] = -&xs[i] * &shifted;

        }
        prod_len += 1;
    }
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

pub fn eval_univariate(coeffs: &[BigRational], x: i64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(x));
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

/// Renders a univariate polynomial with rational coefficients, highest
/// power first, e.g. `2d^2 - 6d + 10`.
pub fn pretty_univariate(coeffs: &[BigRational], var: &str) -> String {
    let mut out = String::new();
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = if neg { -c.clone() } else { c.clone() };
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if i == 0 {
            out.push_str(&abs.to_string());
        } else {
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(var);
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    if first {
        out.push('0');
    }
    out
}

/// Parses a rational written as `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    if t.is_empty() {
        return Err(SplineError::Parse("empty rational literal".into()));
    }
    BigRational::from_str(t)
        .map_err(|e| SplineError::Parse(format!("bad rational {t:?}: {e}")))
}

pub fn format_rational(r: &BigRational) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn degree_basis_is_decreasing_and_complete() {
        let b = DegreeBasis::new(3, 4);
        assert_eq!(b.len() as i64, dim_full_space(3, 4));
        for w in b.monomials.windows(2) {
            assert!(w[0] > w[1]);
        }
        assert_eq!(b.monomials[0], Monomial(vec![4, 0, 0]));
        assert_eq!(b.monomials.last().unwrap(), &Monomial(vec![0, 0, 4]));
        for (i, m) in b.monomials.iter().enumerate() {
            assert_eq!(b.index_of(m), Some(i));
        }
    }

    #[test]
    fn homogenize_pads_with_a_new_last_variable() {
        // x + y - 1 in two affine variables becomes x + y - z.
        let nv = 2;
        let p = &(&Polynomial::variable(nv, 0) + &Polynomial::variable(nv, 1))
            - &Polynomial::one(nv);
        let h = p.homogenize(None).unwrap();
        let expected = Polynomial::from_terms(
            3,
            vec![
                (Monomial(vec![1, 0, 0]), rat(1)),
                (Monomial(vec![0, 1, 0]), rat(1)),
                (Monomial(vec![0, 0, 1]), rat(-1)),
            ],
        );
        assert_eq!(h, expected);
        assert_eq!(h.homogeneous_degree(), Some(1));
    }

    #[test]
    fn quotient_series_of_a_monomial_ideal() {
        // R = Q[x, y] modulo (x^2, x*y) has dimensions 1, 2, 1, 1, 1, ...
        let dims = [1i64, 2, 1, 1, 1, 1, 1, 1];
        let s = GeneratingSeries::from_coefficients(&dims, 2, 2).unwrap();
        assert_eq!(s.numerator, vec![1, 0, -2, 1]);
        for (d, &v) in dims.iter().enumerate() {
            assert_eq!(s.coefficient(d as i64), v);
        }
        assert_eq!(s.to_string(), "(1 - 2*t^2 + t^3) / (1-t)^2");
    }

    #[test]
    fn short_windows_are_rejected() {
        // 1, 2, 3, ... with numerator margin 2 over (1-t)^1 cannot settle.
        let dims = [1i64, 2, 3, 4, 5];
        assert!(matches!(
            GeneratingSeries::from_coefficients(&dims, 1, 2),
            Err(SplineError::NotStabilized(_))
        ));
    }

    #[test]
    fn ideal_piece_dims_of_two_squares() {
        // (x^2, y^2) in Q[x, y]: degree 2 piece has dimension 2, degree 3
        // piece has dimension 4 (x^3, x^2 y, x y^2, y^3).
        let gens = vec![
            Polynomial::variable(2, 0).pow(2),
            Polynomial::variable(2, 1).pow(2),
        ];
        let piece = graded_piece_matrix(&gens, 2, 2).unwrap();
        assert_eq!((piece.num_rows(), piece.num_cols()), (3, 2));
        assert_eq!(piece.rank(), 2);
        assert_eq!(ideal_piece_dim(&gens, 2, 3).unwrap(), 4);
    }

    #[test]
    fn inhomogeneous_generators_are_rejected() {
        let g = &Polynomial::variable(2, 0) + &Polynomial::one(2);
        assert!(graded_piece_matrix(&[g], 2, 3).is_err());
    }

    #[test]
    fn interpolation_recovers_a_quadratic() {
        let pts: Vec<(i64, i64)> = (5..=8).map(|d| (d, 2 * d * d + 2)).collect();
        let coeffs = interpolate_integer_points(&pts);
        assert_eq!(coeffs, vec![rat(2), rat(0), rat(2)]);
        assert_eq!(pretty_univariate(&coeffs, "d"), "2d^2 + 2");
        assert_eq!(eval_univariate(&coeffs, 20), rat(802));
    }

    #[test]
    fn linear_forms_normalize_projectively() {
        let a = LinearForm::from_integers(vec![-2, 4, 0]).unwrap();
        let b = LinearForm::from_integers(vec![1, -2, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.leading_var(), 0);
        assert_eq!(a.to_polynomial().to_string(), "x - 2*y");
    }

    #[test]
    fn polynomial_serde_round_trip() {
        let p = Polynomial::from_terms(
            3,
            vec![
                (Monomial(vec![2, 0, 0]), rat(3)),
                (Monomial(vec![0, 1, 1]), BigRational::new(BigInt::from(-1), BigInt::from(2))),
            ],
        );
        let json = serde_json::to_string(&p).unwrap();
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(p, back);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn basis_count_matches_binomial(nvars in 1usize..5, d in 0u32..8) {
            let b = DegreeBasis::new(nvars, d);
            prop_assert_eq!(b.len() as i64, dim_full_space(nvars, d as i64));
        }

        #[test]
        fn series_coefficients_round_trip(nums in proptest::collection::vec(-5i64..=5, 1..5),
                                          e in 1u32..4) {
            let s = GeneratingSeries::new(nums, e);
            let window: Vec<i64> = (0..(s.numerator.len() as i64 + 3))
                .map(|d| s.coefficient(d))
                .collect();
            let back = GeneratingSeries::from_coefficients(&window, e, 2).unwrap();
            prop_assert_eq!(back, s);
        }

        #[test]
        fn interpolation_matches_samples(coeffs in proptest::collection::vec(-6i64..=6, 1..5)) {
            let pts: Vec<(i64, i64)> = (0..coeffs.len() as i64 + 2)
                .map(|x| {
                    let mut acc = 0i64;
                    for c in coeffs.iter().rev() {
                        acc = acc * x + c;
                    }
                    (x, acc)
                })
                .collect();
            let fit = interpolate_integer_points(&pts);
            for (x, y) in pts {
                prop_assert_eq!(eval_univariate(&fit, x), rat(y));
            }
        }
    }
}
