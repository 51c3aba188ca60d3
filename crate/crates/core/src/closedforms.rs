//! Closed-form dimension counts: the classical lower bound, the exact star
//! formula, power ideals in two variables and their minimal resolutions,
//! and the assembled quadratic polynomial for planar complexes whose cells
//! meet a fixed smoothness order.
//!
//! Everything here is a formula; the matrix routines in this module exist
//! only as oracles for the tests, and the acceptance suite replays each
//! formula against the kernel computations in `splinemod`.

use crate::cellcomplex::EmbeddedComplex;
use crate::error::{Result, SplineError};
use crate::geomprimes::{cycle_ideals, xi_candidates, XiLocus};
use crate::polyring::{binom, ideal_piece_dim, LinearForm, Polynomial};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

fn require_planar_simplicial(c: &EmbeddedComplex) -> Result<()> {
    if c.k != 2 || !c.is_simplicial() {
        return Err(SplineError::Unsupported(
            "the closed-form vertex counts need a planar simplicial complex".into(),
        ));
    }
    Ok(())
}

/// Per-vertex correction term: the count of spurious syzygies a vertex
/// with `n` distinct edge slopes contributes in degrees `r + 1 ..= d`.
fn vertex_defect(n: usize, r: u32, d: i64) -> i64 {
    let (r, n) = (r as i64, n as i64);
    let mut sigma = 0;
    for j in 1..=(d - r).max(0) {
        let term = r + 1 + j * (1 - n);
        if term <= 0 {
            break;
        }
        sigma += term;
    }
    sigma
}

/// Classical lower bound for the dimension of the degree `d` piece of the
/// smoothness-`r` spline space on a planar simplicial complex. The bound
/// holds in every degree and is known to be attained from `3r + 2` on.
pub fn schumaker_lower_bound(c: &EmbeddedComplex, r: u32, d: i64) -> Result<i64> {
    require_planar_simplicial(c)?;
    if d < 0 {
        return Ok(0);
    }
    let interior = c.interior_f_vector();
    let (v0, e0) = (interior[0] as i64, interior[1] as i64);
    let r_ = r as i64;
    let mut lb = binom(d + 2, 2) + binom(d - r_ + 1, 2) * e0
        - (binom(d + 2, 2) - binom(r_ + 2, 2)).max(0) * v0;
    for v in c.interior_vertices() {
        lb += vertex_defect(c.distinct_hyperplane_count(v)?, r, d);
    }
    Ok(lb)
}

/// Exact dimension of the degree `d` spline space on the star of a single
/// interior vertex. Same shape as the lower bound with one interior
/// vertex; on a star it is an equality in every degree.
pub fn star_dimension(c: &EmbeddedComplex, r: u32, d: i64) -> Result<i64> {
    require_planar_simplicial(c)?;
    let Some(center) = c.star_center() else {
        return Err(SplineError::Geometry(
            "the complex is not the star of a single interior vertex".into(),
        ));
    };
    if d < 0 {
        return Ok(0);
    }
    let e0 = c.interior_f_vector()[1] as i64;
    let r_ = r as i64;
    let n = c.distinct_hyperplane_count(center)?;
    Ok(binom(d + 2, 2) + binom(d - r_ + 1, 2) * e0
        - (binom(d + 2, 2) - binom(r_ + 2, 2)).max(0)
        + vertex_defect(n, r, d))
}

/// Dimension of the degree `t` piece of an ideal generated by powers
/// `l_i^{alpha_i}` of pairwise distinct linear forms in two variables.
pub fn plf_dim(alphas: &[u32], t: i64) -> i64 {
    if t < 0 {
        return 0;
    }
    let expected: i64 = alphas.iter().map(|&a| (t - a as i64 + 1).max(0)).sum();
    expected.min(t + 1)
}

/// Matrix oracle for [`plf_dim`]: the actual rank of the degree `t`
/// graded piece of the ideal generated by the `l_i^{alpha_i}`.
pub fn power_ideal_dim(forms: &[LinearForm], alphas: &[u32], t: i64) -> Result<i64> {
    if forms.len() != alphas.len() {
        return Err(SplineError::Validation(format!(
            "{} forms against {} exponents",
            forms.len(),
            alphas.len()
        )));
    }
    if forms.iter().any(|f| f.nvars() != 2) {
        return Err(SplineError::Validation("power ideal forms live in two variables".into()));
    }
    if t < 0 {
        return Ok(0);
    }
    let gens: Vec<Polynomial> = forms.iter().zip(alphas).map(|(f, &a)| f.power(a)).collect();
    Ok(ideal_piece_dim(&gens, 2, t as u32)? as i64)
}

/// Trims a sorted exponent list to the subsequence whose powers minimally
/// generate the ideal: the two smallest always survive, and each further
/// exponent survives while `(m - 1) * alpha <= sum(kept) - m`.
pub fn minimal_generators(alphas: &[u32]) -> Result<Vec<u32>> {
    if alphas.windows(2).any(|w| w[0] > w[1]) {
        return Err(SplineError::Validation(
            "exponents must be sorted in weakly increasing order".into(),
        ));
    }
    let mut kept: Vec<u32> = alphas.iter().take(2).copied().collect();
    let mut sum: i64 = kept.iter().map(|&a| a as i64).sum();
    for &a in alphas.iter().skip(2) {
        let m = kept.len() as i64;
        if (m - 1) * a as i64 > sum - m {
            break;
        }
        kept.push(a);
        sum += a as i64;
    }
    Ok(kept)
}

/// Largest degree carrying a first syzygy of the power ideal with the
/// given (minimal, sorted) exponents; the syzygies live in degrees
/// `omega` and `omega + 1` only.
pub fn omega(alphas: &[u32]) -> Result<i64> {
    let t = alphas.len() as i64;
    if t < 2 {
        return Err(SplineError::Validation(
            "syzygy degrees need at least two generators".into(),
        ));
    }
    let sum: i64 = alphas.iter().map(|&a| a as i64).sum();
    Ok((sum - t).div_euclid(t - 1) + 1)
}

/// Syzygy counts of a uniform power ideal read off the closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformSyzygy {
    pub r: u32,
    pub alpha: u32,
    pub s1: i64,
    pub s2: i64,
}

/// First syzygies of an ideal of powers of distinct forms in two
/// variables: `a` syzygies in degree `omega + 1` and the rest in degree
/// `omega`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyData {
    /// The minimal exponents actually used.
    pub alphas: Vec<u32>,
    pub n: usize,
    pub omega: i64,
    /// Syzygies in degree `omega + 1`; the other `n - 1 - a` sit in
    /// degree `omega`.
    pub a: i64,
    /// Set when the minimal exponents are all equal.
    pub uniform: Option<UniformSyzygy>,
}

fn uniform_syzygy(n: usize, r: u32) -> UniformSyzygy {
    let alpha = (r + 1) / (n as u32 - 1);
    let (n_, r_, al) = (n as i64, r as i64, alpha as i64);
    UniformSyzygy { r, alpha, s1: (n_ - 1) * al + n_ - r_ - 2, s2: r_ + 1 - (n_ - 1) * al }
}

/// Minimal free resolution data of the power ideal: trims to minimal
/// generators, then places the `n - 1` syzygies in degrees `omega` and
/// `omega + 1`.
pub fn resolution_data(alphas: &[u32]) -> Result<SyzygyData> {
    let kept = minimal_generators(alphas)?;
    let om = omega(&kept)?;
    let t = kept.len() as i64;
    let sum: i64 = kept.iter().map(|&a| a as i64).sum();
    let a = sum + (1 - t) * om;
    debug_assert!((0..t).contains(&a), "syzygy split out of range");
    let uniform = if kept.iter().all(|&x| x == kept[0]) {
        Some(uniform_syzygy(kept.len(), kept[0] - 1))
    } else {
        None
    };
    Ok(SyzygyData { n: kept.len(), alphas: kept, omega: om, a, uniform })
}

/// Hilbert function of the quotient by the power ideal, read off the
/// resolution `0 -> S(-omega-1)^a + S(-omega)^(n-1-a) -> sum S(-alpha_i)
/// -> J -> 0` in two variables. Exact in every degree.
pub fn resolution_hf(data: &SyzygyData, d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    let ideal: i64 = data.alphas.iter().map(|&al| (d - al as i64 + 1).max(0)).sum::<i64>()
        - (data.n as i64 - 1 - data.a) * (d - data.omega + 1).max(0)
        - data.a * (d - data.omega).max(0);
    d + 1 - ideal
}

/// Hilbert function of the quotient by the power ideal in two variables:
/// the dimension of the degree `i` cokernel piece.
pub fn mixed_hf(alphas: &[u32], i: i64) -> i64 {
    if i < 0 {
        return 0;
    }
    (i + 1 - plf_dim(alphas, i)).max(0)
}

/// Coefficient vector (ascending) of the polynomial `C(d - c + k, k)` in
/// `d`, i.e. the Hilbert polynomial of a rank-one free module generated
/// in degree `c` over `k + 1` variables.
fn shifted_binomial_poly(c: i64, k: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::one()];
    for j in 1..=k as i64 {
        // Multiply by (d - c + j).
        let shift = BigRational::from_integer(BigInt::from(j - c));
        let mut next = vec![BigRational::zero(); out.len() + 1];
        for (i, co) in out.iter().enumerate() {
            next[i + 1] += co;
            next[i] += co * &shift;
        }
        out = next;
    }
    let factorial: BigInt = (1..=k as i64).map(BigInt::from).product();
    let factorial = BigRational::from_integer(factorial);
    for co in &mut out {
        *co /= &factorial;
    }
    out
}

/// Hilbert polynomial (coefficients ascending in `d`) of the quotient of
/// a polynomial ring in `k + 1` variables by the ideal of `(r + 1)`-st
/// powers of `n` distinct forms spanning a pencil.
pub fn rmodi_hilbert_poly(n: usize, r: u32, k: usize) -> Result<Vec<BigRational>> {
    if n < 2 {
        return Err(SplineError::Validation("a pencil ideal needs at least two forms".into()));
    }
    if k < 1 {
        return Err(SplineError::Validation("the ambient ring needs at least two variables".into()));
    }
    let syz = uniform_syzygy(n, r);
    let (r_, al) = (r as i64, syz.alpha as i64);
    let mut out = vec![BigRational::zero(); k + 1];
    let mut add = |scale: i64, c: i64| {
        let scale = BigRational::from_integer(BigInt::from(scale));
        for (i, co) in shifted_binomial_poly(c, k).iter().enumerate() {
            out[i] += co * &scale;
        }
    };
    add(1, 0);
    add(-(n as i64), r_ + 1);
    add(syz.s1, r_ + 1 + al);
    add(syz.s2, r_ + 2 + al);
    while out.len() > 1 && out.last().map(|c| c.is_zero()).unwrap_or(false) {
        out.pop();
    }
    Ok(out)
}

/// Eventual dimension contributed per degree by a cycle whose edges use
/// `n_distinct` projectively distinct forms, at smoothness `r`.
pub fn cycle_contribution(n_distinct: usize, r: u32) -> Result<i64> {
    if n_distinct < 2 {
        return Err(SplineError::Validation("a cycle carries at least two distinct forms".into()));
    }
    let n = n_distinct.min(r as usize + 2) as i64;
    let r_ = r as i64;
    let alpha = (r_ + 1).div_euclid(n - 1);
    let c = BigRational::from_integer(BigInt::from(binom(r_ + 2, 2)))
        + BigRational::new(
            BigInt::from(alpha * (2 * r_ + 3 + alpha - n * (1 + alpha))),
            BigInt::from(2),
        );
    assert!(c.is_integer(), "cycle contribution must be integral");
    assert!(!c.is_negative(), "cycle contribution must be nonnegative");
    Ok(c.to_integer().try_into().expect("contribution fits i64"))
}

/// One cycle's entry in the assembled polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct CycleReport {
    pub xi: XiLocus,
    pub cells: Vec<usize>,
    /// Projectively distinct forms around the cycle.
    pub distinct_forms: usize,
    /// Minimal generators of the attached power ideal.
    pub n: usize,
    pub alpha: u32,
    pub s1: i64,
    pub s2: i64,
    pub contribution: i64,
}

/// The quadratic dimension polynomial of a planar complex, split into the
/// face-count part and the per-cycle corrections.
#[derive(Clone, Debug)]
pub struct PlanarMainReport {
    pub r: u32,
    pub f2: i64,
    /// Interior edge count.
    pub f01: i64,
    pub quadratic: BigRational,
    pub linear: BigRational,
    /// Full constant term: `constant_face_part + cycle_sum`.
    pub constant: BigRational,
    pub constant_face_part: i64,
    pub cycle_sum: i64,
    pub cycles: Vec<CycleReport>,
    /// The polynomial provably equals the dimension from this degree on.
    pub verified_from: i64,
    /// Expected (but not proven) to agree already from this degree.
    pub conjectural_from: i64,
}

impl PlanarMainReport {
    /// Coefficients ascending in `d`.
    pub fn coefficients(&self) -> Vec<BigRational> {
        vec![self.constant.clone(), self.linear.clone(), self.quadratic.clone()]
    }

    pub fn eval(&self, d: i64) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(d));
        (&self.quadratic * &d + &self.linear) * &d + &self.constant
    }
}

impl Serialize for PlanarMainReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PlanarMainReport", 11)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("f2", &self.f2)?;
        st.serialize_field("interior_edges", &self.f01)?;
        st.serialize_field("quadratic", &self.quadratic.to_string())?;
        st.serialize_field("linear", &self.linear.to_string())?;
        st.serialize_field("constant", &self.constant.to_string())?;
        st.serialize_field("constant_face_part", &self.constant_face_part)?;
        st.serialize_field("cycle_sum", &self.cycle_sum)?;
        st.serialize_field("cycles", &self.cycles)?;
        st.serialize_field("verified_from", &self.verified_from)?;
        st.serialize_field("conjectural_from", &self.conjectural_from)?;
        st.end()
    }
}

/// Assembles the eventual dimension polynomial of the smoothness-`r`
/// spline space on a planar complex with convex cells:
///
/// ```text
/// (f2/2) d^2 + (3 f2 - 2 (r+1) e) / 2 d + f2 + (C(r,2) - 1) e + sum c_xi
/// ```
///
/// with `e` the interior edge count and one `c_xi` per cycle around a
/// codimension-two locus.
pub fn planar_main(c: &EmbeddedComplex, r: u32) -> Result<PlanarMainReport> {
    if c.k != 2 {
        return Err(SplineError::Unsupported(
            "the dimension polynomial is assembled for planar complexes".into(),
        ));
    }
    let f2 = c.num_cells() as i64;
    let f01 = c.interior_f_vector()[1] as i64;
    let r_ = r as i64;
    let mut cycles = Vec::new();
    let mut cycle_sum = 0;
    for xi in xi_candidates(c)? {
        for cyc in cycle_ideals(c, &xi, r)? {
            let syz = uniform_syzygy(cyc.n, r);
            let contribution = cycle_contribution(cyc.distinct_forms.len(), r)?;
            cycle_sum += contribution;
            cycles.push(CycleReport {
                xi: xi.clone(),
                cells: cyc.cells.clone(),
                distinct_forms: cyc.distinct_forms.len(),
                n: cyc.n,
                alpha: syz.alpha,
                s1: syz.s1,
                s2: syz.s2,
                contribution,
            });
        }
    }
    let constant_face_part = f2 + (binom(r_, 2) - 1) * f01;
    Ok(PlanarMainReport {
        r,
        f2,
        f01,
        quadratic: BigRational::new(BigInt::from(f2), BigInt::from(2)),
        linear: BigRational::new(BigInt::from(3 * f2 - 2 * (r_ + 1) * f01), BigInt::from(2)),
        constant: BigRational::from_integer(BigInt::from(constant_face_part + cycle_sum)),
        constant_face_part,
        cycle_sum,
        cycles,
        verified_from: 3 * r_ + 2,
        conjectural_from: 2 * r_ + 1,
    })
}
