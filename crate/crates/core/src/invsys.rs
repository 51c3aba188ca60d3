//! Fat point schemes in the projective line and plane, their exact Hilbert
//! functions, and the dual description through sums of powers of linear
//! forms.
//!
//! A form of degree `j` lies in the ideal of the scheme exactly when all
//! partial derivatives of order `m_i - 1` vanish at the `i`-th point, so
//! the Hilbert function is a rank computation. Dually, the degree `j`
//! piece of the inverse system is spanned by `l_p^{j - n_i} * S_{n_i}`
//! with `n_i = m_i - 1`, and the two dimensions must agree; the tests and
//! the acceptance suite replay that equality together with the expected
//! (independent-conditions) count.

use crate::error::{Result, SplineError};
use crate::linalg::{dense_kernel_basis, dense_rank, primitive_integer_vector};
use crate::polyring::{binom, parse_rational, DegreeBasis, LinearForm, Monomial, Polynomial};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

/// Hard cap on evaluation matrix sides; inputs past this are refused
/// rather than churned through.
const DESK_LIMIT: usize = 6000;

/// A finite set of distinct projective points with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatPointScheme {
    /// Ambient projective dimension, 1 or 2.
    pub n: usize,
    /// Primitive integer coordinates, one row per point.
    pub points: Vec<Vec<BigInt>>,
    pub mults: Vec<u32>,
}

impl FatPointScheme {
    pub fn new(points: Vec<Vec<BigRational>>, mults: Vec<u32>, n: usize) -> Result<Self> {
        if !(1..=2).contains(&n) {
            return Err(SplineError::Validation(format!(
                "fat points live in the projective line or plane, got P^{n}"
            )));
        }
        if points.len() != mults.len() {
            return Err(SplineError::Validation(format!(
                "{} points against {} multiplicities",
                points.len(),
                mults.len()
            )));
        }
        let mut normalized: Vec<Vec<BigInt>> = Vec::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if p.len() != n + 1 {
                return Err(SplineError::Validation(format!(
                    "point {i} has {} coordinates, expected {}",
                    p.len(),
                    n + 1
                )));
            }
            let Some(prim) = primitive_integer_vector(p) else {
                return Err(SplineError::Validation(format!("point {i} is the zero vector")));
            };
            if normalized.contains(&prim) {
                return Err(SplineError::Validation(format!(
                    "point {i} coincides with an earlier point"
                )));
            }
            normalized.push(prim);
        }
        if mults.iter().any(|&m| m == 0) {
            return Err(SplineError::Validation("multiplicities must be at least 1".into()));
        }
        Ok(FatPointScheme { n, points: normalized, mults })
    }

    pub fn from_integers(points: &[Vec<i64>], mults: &[u32], n: usize) -> Result<Self> {
        let rats = points
            .iter()
            .map(|p| p.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
            .collect();
        Self::new(rats, mults.to_vec(), n)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    /// The dual linear form of a point: coordinates as coefficients.
    pub fn dual_form(&self, i: usize) -> LinearForm {
        LinearForm { coeffs: self.points[i].clone() }
    }

    /// The same support with different multiplicities.
    pub fn with_mults(&self, mults: Vec<u32>) -> Result<Self> {
        if mults.len() != self.points.len() {
            return Err(SplineError::Validation(format!(
                "{} points against {} multiplicities",
                self.points.len(),
                mults.len()
            )));
        }
        if mults.iter().any(|&m| m == 0) {
            return Err(SplineError::Validation("multiplicities must be at least 1".into()));
        }
        Ok(FatPointScheme { n: self.n, points: self.points.clone(), mults })
    }
}

impl Serialize for FatPointScheme {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FatPointScheme", 3)?;
        st.serialize_field("dim", &self.n)?;
        let pts: Vec<Vec<String>> =
            self.points.iter().map(|p| p.iter().map(|c| c.to_string()).collect()).collect();
        st.serialize_field("points", &pts)?;
        st.serialize_field("multiplicities", &self.mults)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawScheme {
    dim: usize,
    points: Vec<Vec<String>>,
    multiplicities: Vec<u32>,
}

pub fn load_points_json(text: &str) -> Result<FatPointScheme> {
    let raw: RawScheme =
        serde_json::from_str(text).map_err(|e| crate::error::json_parse_error("points", text, &e))?;
    let mut points = Vec::with_capacity(raw.points.len());
    for (i, p) in raw.points.iter().enumerate() {
        let mut row = Vec::with_capacity(p.len());
        for c in p {
            row.push(
                parse_rational(c)
                    .map_err(|e| SplineError::Parse(format!("point {i}: {e}")))?,
            );
        }
        points.push(row);
    }
    FatPointScheme::new(points, raw.multiplicities, raw.dim)
}

/// Falling factorial product `prod_i beta_i (beta_i - 1) ... (beta_i -
/// alpha_i + 1)`, the coefficient of differentiating `y^beta` by
/// `x^alpha`.
fn falling(beta: &Monomial, alpha: &Monomial) -> BigInt {
    let mut c = BigInt::one();
    for (&b, &a) in beta.0.iter().zip(&alpha.0) {
        for t in 0..a {
            c *= BigInt::from(b as i64 - t as i64);
        }
    }
    c
}

/// Differentiation action of `f` on `g`: every `x_i` in `f` acts as the
/// partial derivative with respect to the matching variable of `g`.
pub fn apolar_action(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.nvars() != g.nvars() {
        return Err(SplineError::Validation(format!(
            "action between {} and {} variables",
            f.nvars(),
            g.nvars()
        )));
    }
    let mut out = Polynomial::zero(g.nvars());
    for (alpha, a) in f.terms_desc() {
        for (beta, b) in g.terms_desc() {
            if let Some(rest) = beta.checked_div(alpha) {
                let scale = BigRational::from_integer(falling(beta, alpha));
                out.add_term(rest, a * b * scale);
            }
        }
    }
    Ok(out)
}

fn guard_size(rows: usize, cols: usize) -> Result<()> {
    if rows > DESK_LIMIT || cols > DESK_LIMIT {
        return Err(SplineError::Limit(format!(
            "evaluation matrix of shape {rows} x {cols} exceeds the desk-scale limit"
        )));
    }
    Ok(())
}

/// Matrix whose kernel is the degree `j` piece of the scheme ideal: one
/// row per point per derivative of order `m_i - 1`, one column per degree
/// `j` monomial. Below degree `m_i` the power ideal vanishes outright, so
/// the order drops to `j` there and the conditions pin every coefficient.
fn evaluation_rows(x: &FatPointScheme, j: i64, basis: &DegreeBasis) -> Result<Vec<Vec<BigRational>>> {
    let mut rows = Vec::new();
    for (p, &m) in x.points.iter().zip(&x.mults) {
        let order = (m - 1).min(j as u32);
        for alpha in &DegreeBasis::new(x.nvars(), order).monomials {
            let mut row = vec![BigRational::zero(); basis.len()];
            for (col, beta) in basis.monomials.iter().enumerate() {
                if let Some(rest) = beta.checked_div(alpha) {
                    let mut v = falling(beta, alpha);
                    for (&e, c) in rest.0.iter().zip(p) {
                        v *= c.pow(e);
                    }
                    row[col] = BigRational::from_integer(v);
                }
            }
            rows.push(row);
            guard_size(rows.len(), basis.len())?;
        }
    }
    Ok(rows)
}

/// Hilbert function `dim (R/I_X)_j`, computed as the rank of the
/// derivative evaluation matrix.
pub fn fatpoints_hf(x: &FatPointScheme, j: i64) -> Result<i64> {
    if j < 0 {
        return Ok(0);
    }
    let basis = DegreeBasis::new(x.nvars(), j as u32);
    guard_size(0, basis.len())?;
    let rows = evaluation_rows(x, j, &basis)?;
    Ok(dense_rank(&rows) as i64)
}

/// Exact dimension of the degree `j` piece of the scheme ideal.
pub fn ideal_dim(x: &FatPointScheme, j: i64) -> Result<i64> {
    Ok(binom(j + x.n as i64, x.n as i64) - fatpoints_hf(x, j)?)
}

/// Independent-conditions count for `R/I` and the ideal, as a pair
/// `(hf, ideal)`: `min{dim S_j, sum C(m_i + n - 1, n)}` and its
/// complement.
pub fn expected_hf(x: &FatPointScheme, j: i64) -> (i64, i64) {
    if j < 0 {
        return (0, 0);
    }
    let n = x.n as i64;
    let full = binom(j + n, n);
    let conditions: i64 =
        x.mults.iter().map(|&m| binom(m as i64 + n - 1, n)).sum();
    let hf = full.min(conditions);
    (hf, full - hf)
}

/// Dimension of the degree `j` inverse system, spanned by
/// `l_{p_i}^{j - n_i} * S_{n_i}` (all of `S_j` once `j <= n_i`).
pub fn inverse_system_dim(x: &FatPointScheme, j: i64) -> Result<i64> {
    if j < 0 {
        return Ok(0);
    }
    let basis = DegreeBasis::new(x.nvars(), j as u32);
    guard_size(0, basis.len())?;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for gen in inverse_system_generators(x, j) {
        let mut row = vec![BigRational::zero(); basis.len()];
        for (mon, c) in gen.terms_desc() {
            row[basis.index_of(mon).expect("degree j monomial")] = c.clone();
        }
        rows.push(row);
        guard_size(rows.len(), basis.len())?;
    }
    Ok(dense_rank(&rows) as i64)
}

/// The spanning set `l_{p_i}^{j - n_i} * y^gamma`, `|gamma| = n_i`, with
/// the whole monomial basis substituted when `j <= n_i`.
fn inverse_system_generators(x: &FatPointScheme, j: i64) -> Vec<Polynomial> {
    let nv = x.nvars();
    let mut gens = Vec::new();
    for (i, &m) in x.mults.iter().enumerate() {
        let ni = (m - 1) as i64;
        if j <= ni {
            for mon in &DegreeBasis::new(nv, j as u32).monomials {
                gens.push(Polynomial::from_terms(
                    nv,
                    vec![(mon.clone(), BigRational::one())],
                ));
            }
            continue;
        }
        let power = x.dual_form(i).power((j - ni) as u32);
        for mon in &DegreeBasis::new(nv, ni as u32).monomials {
            let mut shifted = Polynomial::zero(nv);
            for (pm, pc) in power.terms_desc() {
                shifted.add_term(pm.mul(mon), pc.clone());
            }
            gens.push(shifted);
        }
    }
    gens
}

/// Verifies the dual description of a fat point ideal given by the dual
/// forms and socle degrees `n_i`: the span of `l_i^{j - n_i} * S_{n_i}`
/// has the same dimension as the Hilbert function of the scheme with
/// multiplicities `n_i + 1`.
pub fn apolarity_check(forms: &[LinearForm], exponents: &[u32], j: i64) -> Result<bool> {
    if forms.len() != exponents.len() {
        return Err(SplineError::Validation(format!(
            "{} forms against {} exponents",
            forms.len(),
            exponents.len()
        )));
    }
    let Some(first) = forms.first() else {
        return Ok(true);
    };
    let n = first.nvars() - 1;
    let points: Vec<Vec<BigRational>> = forms
        .iter()
        .map(|f| f.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
        .collect();
    let mults: Vec<u32> = exponents.iter().map(|&e| e + 1).collect();
    let x = FatPointScheme::new(points, mults, n)?;
    Ok(inverse_system_dim(&x, j)? == fatpoints_hf(&x, j)?)
}

/// Dimension of the space of degree `j` dual forms annihilated by the
/// full degree `j` piece of the scheme ideal under the differentiation
/// action. Agrees with [`fatpoints_hf`] because the pairing is perfect.
pub fn annihilated_dim(x: &FatPointScheme, j: i64) -> Result<i64> {
    if j < 0 {
        return Ok(0);
    }
    let basis = DegreeBasis::new(x.nvars(), j as u32);
    guard_size(0, basis.len())?;
    let eval = evaluation_rows(x, j, &basis)?;
    let ideal_basis = dense_kernel_basis(&eval, basis.len());
    // f acting on the degree j monomial y^beta is the scalar
    // coeff_f(beta) * beta!, so each ideal element gives one linear
    // condition on the dual coefficients.
    let mut rows = Vec::with_capacity(ideal_basis.len());
    for f in &ideal_basis {
        let row: Vec<BigRational> = basis
            .monomials
            .iter()
            .zip(f)
            .map(|(beta, c)| c * BigRational::from_integer(falling(beta, beta)))
            .collect();
        rows.push(row);
    }
    Ok(basis.len() as i64 - dense_rank(&rows) as i64)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ShghRow {
    pub j: i64,
    pub expected_ideal: i64,
    pub actual_ideal: i64,
    /// `actual - expected`; nonzero flags a failure of the conditions to
    /// be independent.
    pub deficit: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShghReport {
    pub seed: u64,
    pub scheme: FatPointScheme,
    pub rows: Vec<ShghRow>,
}

/// Samples integer points in general position in the plane: pairwise
/// distinct and with no three collinear.
pub fn sample_general_points(count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<i64>>> {
    let mut pts: Vec<Vec<i64>> = Vec::with_capacity(count);
    let mut attempts = 0;
    while pts.len() < count {
        attempts += 1;
        if attempts > 1000 {
            return Err(SplineError::Limit(
                "could not sample points in general position".into(),
            ));
        }
        let cand = vec![rng.gen_range(-30..=30i64), rng.gen_range(-30..=30i64), 1];
        if pts.contains(&cand) {
            continue;
        }
        let collinear = pts.iter().enumerate().any(|(a, p)| {
            pts[a + 1..].iter().any(|q| {
                let det = p[0] * (q[1] - cand[1]) - p[1] * (q[0] - cand[0])
                    + (q[0] * cand[1] - q[1] * cand[0]);
                det == 0
            })
        });
        if !collinear {
            pts.push(cand);
        }
    }
    Ok(pts)
}

/// Samples pairwise non-proportional linear forms with small integer
/// coefficients from a seeded generator.
pub fn sample_distinct_forms(count: usize, nvars: usize, seed: u64) -> Result<Vec<LinearForm>> {
    if nvars == 0 {
        return Err(SplineError::Validation("forms need at least one variable".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: Vec<Vec<BigInt>> = Vec::with_capacity(count);
    let mut forms = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while forms.len() < count {
        attempts += 1;
        if attempts > 1000 * count.max(1) {
            return Err(SplineError::Limit("could not sample enough distinct forms".into()));
        }
        let coeffs: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-9..=9)).collect();
        let rats: Vec<BigRational> =
            coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        let Some(prim) = primitive_integer_vector(&rats) else {
            continue;
        };
        if seen.contains(&prim) {
            continue;
        }
        seen.push(prim);
        forms.push(LinearForm::from_integers(coeffs).expect("nonzero coefficients"));
    }
    Ok(forms)
}

/// Compares actual against expected ideal dimensions for a seeded sample
/// of general plane points with the given multiplicities, over a degree
/// range.
pub fn shgh_scan(mults: &[u32], degrees: std::ops::RangeInclusive<i64>, seed: u64) -> Result<ShghReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = sample_general_points(mults.len(), &mut rng)?;
    let scheme = FatPointScheme::from_integers(&pts, mults, 2)?;
    let mut rows = Vec::new();
    for j in degrees {
        let (_, expected_ideal) = expected_hf(&scheme, j);
        let actual_ideal = ideal_dim(&scheme, j)?;
        rows.push(ShghRow {
            j,
            expected_ideal,
            actual_ideal,
            deficit: actual_ideal - expected_ideal,
        });
    }
    Ok(ShghReport { seed, scheme, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::dim_full_space;

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| {
                    (Monomial(e.to_vec()), BigRational::from_integer(BigInt::from(*c)))
                })
                .collect(),
        )
    }

    #[test]
    fn differentiation_action_examples() {
        // x^2 acting on y^3 is the second derivative 6y.
        let f = poly(1, &[(&[2], 1)]);
        let g = poly(1, &[(&[3], 1)]);
        assert_eq!(apolar_action(&f, &g).unwrap(), poly(1, &[(&[1], 6)]));
        // Differentiating with respect to the other variable kills y1^2.
        let f = poly(2, &[(&[1, 0], 1)]);
        let g = poly(2, &[(&[0, 2], 1)]);
        assert!(apolar_action(&f, &g).unwrap().is_zero());
        // (x0 + x1) acting on (y0 + y1)^3 = 6 (y0 + y1)^2.
        let f = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let sum = poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let g = sum.pow(3);
        let expected = sum.pow(2).scaled(&BigRational::from_integer(BigInt::from(6)));
        assert_eq!(apolar_action(&f, &g).unwrap(), expected);
        assert!(apolar_action(&poly(1, &[(&[1], 1)]), &poly(2, &[(&[1, 0], 1)])).is_err());
    }

    #[test]
    fn action_composes_multiplicatively() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut random_poly = |deg: u32| {
            let basis = DegreeBasis::new(2, deg);
            Polynomial::from_terms(
                2,
                basis
                    .monomials
                    .iter()
                    .map(|m| {
                        (m.clone(), BigRational::from_integer(BigInt::from(rng.gen_range(-3..=3i64))))
                    })
                    .collect(),
            )
        };
        for _ in 0..6 {
            let f = random_poly(1);
            let g = random_poly(2);
            let h = random_poly(5);
            let fg = &f * &g;
            let lhs = apolar_action(&fg, &h).unwrap();
            let rhs = apolar_action(&f, &apolar_action(&g, &h).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn scheme_validation() {
        assert!(FatPointScheme::from_integers(&[vec![1, 0, 0]], &[2], 2).is_ok());
        // Projectively equal points are rejected.
        assert!(FatPointScheme::from_integers(&[vec![1, 2, 1], vec![2, 4, 2]], &[1, 1], 2).is_err());
        assert!(FatPointScheme::from_integers(&[vec![0, 0, 0]], &[1], 2).is_err());
        assert!(FatPointScheme::from_integers(&[vec![1, 0]], &[0], 1).is_err());
        assert!(FatPointScheme::from_integers(&[vec![1, 0, 0, 0]], &[1], 3).is_err());
        assert!(FatPointScheme::from_integers(&[vec![1, 0, 0]], &[1, 1], 2).is_err());
    }

    #[test]
    fn points_json_round_trip() {
        let x = load_points_json(
            r#"{"dim": 2, "points": [["1","0","0"], ["0","1","0"]], "multiplicities": [2, 2]}"#,
        )
        .unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(x.mults, vec![2, 2]);
        let json = serde_json::to_string(&x).unwrap();
        let back = load_points_json(&json).unwrap();
        assert_eq!(back, x);
        assert!(matches!(load_points_json("{"), Err(SplineError::Parse(_))));
        assert!(matches!(
            load_points_json(r#"{"dim": 2, "points": [["1","q","0"]], "multiplicities": [1]}"#),
            Err(SplineError::Parse(_))
        ));
    }

    #[test]
    fn two_double_points_leave_the_doubled_line() {
        let x = FatPointScheme::from_integers(&[vec![1, 0, 0], vec![0, 1, 0]], &[2, 2], 2).unwrap();
        assert_eq!(fatpoints_hf(&x, 2).unwrap(), 5);
        assert_eq!(ideal_dim(&x, 2).unwrap(), 1);
        let (ehf, eideal) = expected_hf(&x, 2);
        assert_eq!((ehf, eideal), (6, 0));
        // The surviving quartic form of the ideal is z^2: kernel of the
        // evaluation matrix has the double line only.
        let basis = DegreeBasis::new(3, 2);
        let rows = evaluation_rows(&x, 2, &basis).unwrap();
        let kernel = dense_kernel_basis(&rows, basis.len());
        assert_eq!(kernel.len(), 1);
        let nonzero: Vec<&Monomial> = basis
            .monomials
            .iter()
            .zip(&kernel[0])
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, _)| m)
            .collect();
        assert_eq!(nonzero, vec![&Monomial(vec![0, 0, 2])]);
    }

    #[test]
    fn five_general_double_points_leave_the_doubled_conic() {
        let pts = [
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 1],
            vec![1, 2, 3],
        ];
        let x = FatPointScheme::from_integers(&pts, &[2; 5], 2).unwrap();
        assert_eq!(ideal_dim(&x, 4).unwrap(), 1);
        assert_eq!(expected_hf(&x, 4), (15, 0));
        assert_eq!(fatpoints_hf(&x, 4).unwrap(), 14);
    }

    #[test]
    fn one_simple_point_is_one_condition() {
        let x = FatPointScheme::from_integers(&[vec![1, 2, 1]], &[1], 2).unwrap();
        for j in 1..=5 {
            assert_eq!(fatpoints_hf(&x, j).unwrap(), 1);
            assert_eq!(ideal_dim(&x, j).unwrap(), binom(j + 2, 2) - 1);
        }
        let empty = FatPointScheme::from_integers(&[], &[], 2).unwrap();
        assert_eq!(expected_hf(&empty, 3).1, binom(5, 2));
        assert_eq!(ideal_dim(&empty, 3).unwrap(), binom(5, 2));
    }

    #[test]
    fn dual_span_matches_the_hilbert_function() {
        // Two points in the line with first-order duals, degree 3.
        let forms = [
            LinearForm::from_integers(vec![1, 0]).unwrap(),
            LinearForm::from_integers(vec![0, 1]).unwrap(),
        ];
        assert!(apolarity_check(&forms, &[1, 1], 3).unwrap());
        // A single point spans l^(j-n) S_n of dimension n + 1 in the line.
        let x = FatPointScheme::from_integers(&[vec![1, 1]], &[3], 1).unwrap();
        for j in 3..=6 {
            assert_eq!(inverse_system_dim(&x, j).unwrap(), 3);
            assert_eq!(fatpoints_hf(&x, j).unwrap(), 3);
        }
        // Low degrees: the inverse system is everything.
        let x2 = FatPointScheme::from_integers(&[vec![1, 0, 0], vec![1, 5, 2]], &[4, 1], 2).unwrap();
        for j in 0..=3 {
            assert_eq!(inverse_system_dim(&x2, j).unwrap(), dim_full_space(3, j));
        }
    }

    #[test]
    fn annihilator_and_span_routes_agree() {
        let schemes = [
            FatPointScheme::from_integers(&[vec![1, 0, 0], vec![0, 1, 0]], &[2, 2], 2).unwrap(),
            FatPointScheme::from_integers(
                &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]],
                &[2, 1, 3, 1],
                2,
            )
            .unwrap(),
            FatPointScheme::from_integers(&[vec![1, 2], vec![1, 0], vec![3, 1]], &[2, 2, 1], 1)
                .unwrap(),
        ];
        for x in &schemes {
            for j in 0..=6 {
                let hf = fatpoints_hf(x, j).unwrap();
                assert_eq!(inverse_system_dim(x, j).unwrap(), hf, "j={j}");
                assert_eq!(annihilated_dim(x, j).unwrap(), hf, "j={j}");
            }
        }
    }

    #[test]
    fn ideal_elements_annihilate_the_dual_span() {
        let x = FatPointScheme::from_integers(
            &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 1]],
            &[2, 2, 1],
            2,
        )
        .unwrap();
        let j = 3;
        let basis = DegreeBasis::new(3, j as u32);
        let rows = evaluation_rows(&x, j, &basis).unwrap();
        let kernel = dense_kernel_basis(&rows, basis.len());
        assert!(!kernel.is_empty());
        let gens = inverse_system_generators(&x, j);
        for f in &kernel {
            let fp = Polynomial::from_terms(
                3,
                basis.monomials.iter().cloned().zip(f.iter().cloned()).collect(),
            );
            for g in &gens {
                assert!(apolar_action(&fp, g).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn seeded_scans_reproduce_the_classical_deficits() {
        let two_doubles = shgh_scan(&[2, 2], 1..=3, 42).unwrap();
        let at = |rows: &[ShghRow], j: i64| rows.iter().find(|r| r.j == j).unwrap().clone();
        assert_eq!(at(&two_doubles.rows, 2).deficit, 1);
        assert_eq!(at(&two_doubles.rows, 3).deficit, 0);
        let five_doubles = shgh_scan(&[2; 5], 3..=5, 42).unwrap();
        assert_eq!(at(&five_doubles.rows, 4).deficit, 1);
        assert_eq!(at(&five_doubles.rows, 5).deficit, 0);
        let nine_simple = shgh_scan(&[1; 9], 3..=3, 7).unwrap();
        assert_eq!(at(&nine_simple.rows, 3).deficit, 0);
        // Determinism: identical seed, identical report.
        let again = shgh_scan(&[2, 2], 1..=3, 42).unwrap();
        assert_eq!(again.scheme, two_doubles.scheme);
        assert_eq!(again.rows, two_doubles.rows);
        // Deficits are never negative: conditions can only collapse.
        for report in [&two_doubles, &five_doubles, &nine_simple] {
            assert!(report.rows.iter().all(|r| r.deficit >= 0));
        }
    }

    #[test]
    fn oversize_inputs_are_refused() {
        let x = FatPointScheme::from_integers(&[vec![1, 0, 0]], &[1], 2).unwrap();
        assert!(matches!(fatpoints_hf(&x, 300), Err(SplineError::Limit(_))));
    }
}
