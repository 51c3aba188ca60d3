//! The graded presentation of the spline module on the cone over a complex
//! and the degree-by-degree dimension oracle.
//!
//! A piecewise polynomial on the cone assigns one homogeneous polynomial of
//! degree `d` to each cell; it is a spline of smoothness `α` when, for each
//! interior facet `τ` with form `l_τ`, the difference of the two adjacent
//! polynomials is divisible by `l_τ^{α_τ + 1}`. Writing `∂` for the signed
//! incidence matrix of cells against interior facets and `D` for the
//! diagonal matrix of the `l_τ^{α_τ + 1}`, the splines in degree `d` are
//! the kernel of the block matrix `[∂ | D]`.
//!
//! The rank of `[∂ | D]` in degree `d` splits: the diagonal block is
//! injective, so the rank equals the number of its columns plus the rank of
//! `∂` taken with entries in the quotients `R / (l_τ^{α_τ + 1})`. Each
//! quotient is handled by a unimodular change of coordinates moving `l_τ`
//! to the first variable, where reduction is plain truncation of exponents;
//! this keeps all arithmetic over the integers. An independent dense
//! construction of the full block matrix cross-checks both the kernel and
//! cokernel dimensions in the tests, as does a divide-with-remainder
//! implementation of the same quotients.

use crate::cellcomplex::EmbeddedComplex;
use crate::error::{Result, SplineError};
use crate::linalg::{unimodular_completion, unimodular_inverse, Eliminator, SparseVec};
use crate::polyring::{
    dim_full_space, eval_univariate, interpolate_integer_points, pretty_univariate,
    DegreeBasis, LinearForm, Monomial, Polynomial,
};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::HashMap;

/// Smoothness orders across the interior facets, aligned with the facet
/// row order of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn uniform(c: &EmbeddedComplex, r: u32) -> Self {
        ExponentVector(vec![r; c.interior_facets().len()])
    }

    pub fn from_vec(c: &EmbeddedComplex, v: Vec<u32>) -> Result<Self> {
        let want = c.interior_facets().len();
        if v.len() != want {
            return Err(SplineError::Validation(format!(
                "exponent vector has {} entries, complex has {want} interior facets",
                v.len()
            )));
        }
        Ok(ExponentVector(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The block matrix `[∂ | D]` together with its column shifts.
pub struct GradedPresentation {
    /// Signed incidence block; rows follow the interior facet order.
    pub incidence: Vec<Vec<i64>>,
    /// Diagonal entries `l_τ^{α_τ + 1}`.
    pub diagonal: Vec<Polynomial>,
    pub forms: Vec<LinearForm>,
    pub alphas: ExponentVector,
    pub num_cells: usize,
}

impl GradedPresentation {
    pub fn num_rows(&self) -> usize {
        self.diagonal.len()
    }

    pub fn num_cols(&self) -> usize {
        self.num_cells + self.diagonal.len()
    }

    /// Degree shifts of the columns: 0 on the cell block, `α_τ + 1` on the
    /// diagonal block.
    pub fn column_shifts(&self) -> Vec<u32> {
        let mut shifts = vec![0; self.num_cells];
        shifts.extend(self.alphas.0.iter().map(|&a| a + 1));
        shifts
    }
}

pub fn build_presentation(
    c: &EmbeddedComplex,
    alphas: &ExponentVector,
) -> Result<GradedPresentation> {
    check_alphas(c, alphas)?;
    let incidence = c.boundary_matrix_relative(c.k);
    for (r, row) in incidence.iter().enumerate() {
        let nz: Vec<i64> = row.iter().copied().filter(|&x| x != 0).collect();
        debug_assert!(
            nz.len() == 2 && nz[0] + nz[1] == 0,
            "facet row {r} must have two opposite entries"
        );
    }
    let forms = c.interior_facet_forms();
    let diagonal = forms
        .iter()
        .zip(&alphas.0)
        .map(|(l, &a)| l.power(a + 1))
        .collect();
    Ok(GradedPresentation {
        incidence,
        diagonal,
        forms,
        alphas: alphas.clone(),
        num_cells: c.num_cells(),
    })
}

fn check_alphas(c: &EmbeddedComplex, alphas: &ExponentVector) -> Result<()> {
    if alphas.0.len() != c.interior_facets().len() {
        return Err(SplineError::Validation(format!(
            "exponent vector has {} entries, complex has {} interior facets",
            alphas.0.len(),
            c.interior_facets().len()
        )));
    }
    Ok(())
}

/// Change of coordinates adapted to one facet form: `u = U x` with
/// `u_0 = l_τ`, so that dividing by `l_τ^a` becomes truncation of the
/// `u_0` exponent. Stores `x_i = Σ_j V[i][j] u_j` with integer `V`.
struct FacetReduction {
    a: u32,
    x_in_u: Vec<Vec<BigInt>>,
}

impl FacetReduction {
    fn new(form: &LinearForm, a: u32) -> Self {
        let u = unimodular_completion(&form.coeffs);
        let x_in_u = unimodular_inverse(&u);
        FacetReduction { a, x_in_u }
    }
}

/// Monomials of one degree in the `u` coordinates with first exponent
/// below the truncation bound; they descend to a basis of the quotient.
struct UBasis {
    mons: Vec<Monomial>,
    idx: HashMap<Monomial, usize>,
}

impl UBasis {
    fn new(nvars: usize, d: u32, a: u32) -> Self {
        let mons: Vec<Monomial> = DegreeBasis::new(nvars, d)
            .monomials
            .into_iter()
            .filter(|m| m.0[0] < a)
            .collect();
        let idx = mons.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        UBasis { mons, idx }
    }

    fn len(&self) -> usize {
        self.mons.len()
    }
}

/// Per-degree normal forms of every ambient monomial in one facet
/// quotient, as sparse integer vectors over the `u`-monomial basis.
struct FacetTable {
    ub: UBasis,
    nf: Vec<Vec<(u32, BigInt)>>,
}

/// Incremental per-degree oracle for the presentation `[∂ | D]`.
pub struct PresentationOracle<'a> {
    c: &'a EmbeddedComplex,
    reductions: Vec<FacetReduction>,
    /// (facet row, sign) pairs per cell.
    cell_rows: Vec<Vec<(usize, i64)>>,
    d: i64,
    xbasis: DegreeBasis,
    tables: Vec<FacetTable>,
}

impl<'a> PresentationOracle<'a> {
    pub fn new(c: &'a EmbeddedComplex, alphas: &ExponentVector) -> Result<Self> {
        check_alphas(c, alphas)?;
        let forms = c.interior_facet_forms();
        let reductions: Vec<FacetReduction> = forms
            .iter()
            .zip(&alphas.0)
            .map(|(l, &a)| FacetReduction::new(l, a + 1))
            .collect();
        let mut cell_rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); c.num_cells()];
        for (row, facet) in c.interior_facets().iter().enumerate() {
            for &(cell, sign) in &facet.cofaces {
                cell_rows[cell].push((row, sign));
            }
        }
        let nvars = c.k + 1;
        let xbasis = DegreeBasis::new(nvars, 0);
        let tables = reductions
            .iter()
            .map(|red| {
                let ub = UBasis::new(nvars, 0, red.a);
                FacetTable { ub, nf: vec![vec![(0, BigInt::one())]] }
            })
            .collect();
        Ok(PresentationOracle {
            c,
            reductions,
            cell_rows,
            d: 0,
            xbasis,
            tables,
        })
    }

    /// Rebuilds the normal form tables for the next degree: multiply each
    /// degree `d` normal form by one variable and truncate.
    fn advance(&mut self) {
        let nvars = self.c.k + 1;
        let next = self.d + 1;
        let nbasis = DegreeBasis::new(nvars, next as u32);
        let mut new_tables = Vec::with_capacity(self.tables.len());
        for (red, table) in self.reductions.iter().zip(&self.tables) {
            let ub = UBasis::new(nvars, next as u32, red.a);
            let mut nf = Vec::with_capacity(nbasis.len());
            for m in &nbasis.monomials {
                let var = m.0.iter().rposition(|&e| e > 0).expect("positive degree");
                let mut prev = m.0.clone();
                prev[var] -= 1;
                let prev_idx = self
                    .xbasis
                    .index_of(&Monomial(prev))
                    .expect("parent monomial");
                let mut dense = vec![BigInt::zero(); ub.len()];
                for (widx, coeff) in &table.nf[prev_idx] {
                    let w = &table.ub.mons[*widx as usize];
                    for (j, vij) in red.x_in_u[var].iter().enumerate() {
                        if vij.is_zero() {
                            continue;
                        }
                        if j == 0 && w.0[0] + 1 >= red.a {
                            continue;
                        }
                        let mut e = w.0.clone();
                        e[j] += 1;
                        let target = ub.idx[&Monomial(e)];
                        dense[target] += coeff * vij;
                    }
                }
                let sparse: Vec<(u32, BigInt)> = dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| (i as u32, v))
                    .collect();
                nf.push(sparse);
            }
            new_tables.push(FacetTable { ub, nf });
        }
        self.d = next;
        self.xbasis = nbasis;
        self.tables = new_tables;
    }

    fn advance_to(&mut self, d: i64) {
        assert!(d >= self.d, "oracle only advances forward");
        while self.d < d {
            self.advance();
        }
    }

    /// Rank of the incidence block with entries in the facet quotients,
    /// together with the total quotient dimension (the target size).
    fn quotient_rank_and_target(&self) -> (i64, i64) {
        let mut offsets = Vec::with_capacity(self.tables.len() + 1);
        let mut total = 0u32;
        for t in &self.tables {
            offsets.push(total);
            total += t.ub.len() as u32;
        }
        offsets.push(total);
        let mut columns: Vec<SparseVec> = Vec::new();
        for rows in &self.cell_rows {
            for mi in 0..self.xbasis.len() {
                let mut entries: Vec<(u32, BigInt)> = Vec::new();
                for &(row, sign) in rows {
                    let off = offsets[row];
                    for (local, coeff) in &self.tables[row].nf[mi] {
                        let v = if sign >= 0 { coeff.clone() } else { -coeff };
                        entries.push((off + local, v));
                    }
                }
                if !entries.is_empty() {
                    columns.push(SparseVec::from_big_entries(entries));
                }
            }
        }
        columns.sort_by_key(|c| c.nnz());
        let mut elim = Eliminator::new();
        for col in columns {
            elim.insert(col);
        }
        (elim.rank() as i64, total as i64)
    }

    /// Kernel dimension of `[∂ | D]` in degree `d`.
    pub fn spline_dim(&mut self, d: i64) -> i64 {
        if d < 0 {
            return 0;
        }
        self.advance_to(d);
        let (rank, _) = self.quotient_rank_and_target();
        self.c.num_cells() as i64 * dim_full_space(self.c.k + 1, d) - rank
    }

    /// Cokernel dimension of `[∂ | D]` in degree `d`.
    pub fn cokernel_dim(&mut self, d: i64) -> i64 {
        if d < 0 {
            return 0;
        }
        self.advance_to(d);
        let (rank, target) = self.quotient_rank_and_target();
        target - rank
    }
}

pub fn spline_dim(c: &EmbeddedComplex, alphas: &ExponentVector, d: i64) -> Result<i64> {
    let mut oracle = PresentationOracle::new(c, alphas)?;
    Ok(oracle.spline_dim(d))
}

pub fn cokernel_dim(c: &EmbeddedComplex, alphas: &ExponentVector, d: i64) -> Result<i64> {
    let mut oracle = PresentationOracle::new(c, alphas)?;
    Ok(oracle.cokernel_dim(d))
}

/// Dimension table over a contiguous degree window.
#[derive(Clone, Debug, Serialize)]
pub struct DimensionTable {
    pub start: i64,
    pub dims: Vec<i64>,
}

impl DimensionTable {
    pub fn degrees(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.dims.iter().enumerate().map(|(i, &v)| (self.start + i as i64, v))
    }
}

/// Spline dimensions for every degree in `start ..= end`. Degrees are
/// split into contiguous chunks, one per available thread; each chunk
/// advances its own oracle incrementally.
pub fn dimension_table(
    c: &EmbeddedComplex,
    alphas: &ExponentVector,
    start: i64,
    end: i64,
) -> Result<DimensionTable> {
    if end < start {
        return Err(SplineError::Validation(format!(
            "empty degree window {start}..{end}"
        )));
    }
    check_alphas(c, alphas)?;
    let degrees: Vec<i64> = (start..=end).collect();
    let threads = rayon::current_num_threads().max(1);
    let chunk = degrees.len().div_ceil(threads);
    let dims: Vec<i64> = {
        use rayon::prelude::*;
        degrees
            .par_chunks(chunk)
            .map(|ds| {
                let mut oracle = PresentationOracle::new(c, alphas).expect("validated above");
                ds.iter().map(|&d| oracle.spline_dim(d)).collect::<Vec<i64>>()
            })
            .flatten()
            .collect()
    };
    Ok(DimensionTable { start, dims })
}

/// Polynomial fit of the tail of a dimension table.
#[derive(Clone, Debug)]
pub struct HilbertFit {
    /// Coefficients by ascending power.
    pub coeffs: Vec<BigRational>,
    /// First degree of the window from which the fit matches all table
    /// entries onward.
    pub stabilization_degree: i64,
}

impl HilbertFit {
    pub fn pretty(&self) -> String {
        pretty_univariate(&self.coeffs, "d")
    }

    pub fn eval(&self, d: i64) -> BigRational {
        eval_univariate(&self.coeffs, d)
    }
}

impl Serialize for HilbertFit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HilbertFit", 3)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.serialize_field("pretty", &self.pretty())?;
        st.serialize_field("stabilization_degree", &self.stabilization_degree)?;
        st.end()
    }
}

/// Interpolates a degree `<= k` polynomial through the last `k + 1` table
/// entries and accepts it only when the two preceding entries also match.
pub fn fit_hilbert_polynomial(table: &DimensionTable, k: usize) -> Result<HilbertFit> {
    let n = table.dims.len();
    if n < k + 3 {
        return Err(SplineError::Validation(format!(
            "window of length {n} is too short to fit and confirm a degree {k} polynomial"
        )));
    }
    let pts: Vec<(i64, i64)> = table
        .degrees()
        .skip(n - (k + 1))
        .collect();
    let coeffs = interpolate_integer_points(&pts);
    for (d, v) in table.degrees().skip(n - (k + 3)).take(2) {
        if eval_univariate(&coeffs, d) != BigRational::from_integer(BigInt::from(v)) {
            return Err(SplineError::NotStabilized(format!(
                "fitted polynomial disagrees with the table at degree {d}"
            )));
        }
    }
    let mut stab = table.start;
    for (d, v) in table.degrees().rev() {
        if eval_univariate(&coeffs, d) == BigRational::from_integer(BigInt::from(v)) {
            stab = d;
        } else {
            break;
        }
    }
    Ok(HilbertFit { coeffs, stabilization_degree: stab })
}

/// Quotient and remainder of `p` on division by `l^a`, eliminating the
/// leading variable of `l`: `p = q * l^a + rem` with every remainder term
/// of exponent `< a` in that variable.
pub fn divide_by_form_power(p: &Polynomial, l: &LinearForm, a: u32) -> (Polynomial, Polynomial) {
    let nvars = l.nvars();
    assert_eq!(p.nvars(), nvars);
    if a == 0 {
        return (p.clone(), Polynomial::zero(nvars));
    }
    let g = l.power(a);
    let v = l.leading_var();
    let lc = BigRational::from_integer(l.coeffs[v].clone()).pow(a as i32);
    let mut rem = p.clone();
    let mut quo = Polynomial::zero(nvars);
    loop {
        let Some((m, c)) = rem
            .terms_desc()
            .find(|(m, _)| m.0[v] >= a)
            .map(|(m, c)| (m.clone(), c.clone()))
        else {
            break;
        };
        let mut e = m.0.clone();
        e[v] -= a;
        let qc = c / &lc;
        let mut qterm = Polynomial::zero(nvars);
        qterm.add_term(Monomial(e), qc);
        quo = &quo + &qterm;
        rem = &rem - &(&qterm * &g);
    }
    (quo, rem)
}

#[derive(Debug, Clone, Serialize)]
pub struct SplineWitness {
    /// Row index of the first interior facet where smoothness fails.
    pub facet_row: usize,
    pub form: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplineCheck {
    pub smooth: bool,
    pub witness: Option<SplineWitness>,
    /// Common homogeneous degree after homogenisation.
    pub degree: u32,
}

/// Checks the defining divisibility conditions for a tuple of per-cell
/// polynomials. Affine input (`k` variables) is homogenised to the common
/// total degree; homogeneous input (`k + 1` variables) is taken as is.
pub fn is_spline(
    c: &EmbeddedComplex,
    alphas: &ExponentVector,
    tuple: &[Polynomial],
) -> Result<SplineCheck> {
    check_alphas(c, alphas)?;
    if tuple.len() != c.num_cells() {
        return Err(SplineError::Validation(format!(
            "tuple has {} polynomials, complex has {} cells",
            tuple.len(),
            c.num_cells()
        )));
    }
    let k = c.k;
    let polys: Vec<Polynomial> = if tuple.iter().all(|p| p.nvars() == k) {
        let target = tuple.iter().filter_map(|p| p.total_degree()).max().unwrap_or(0);
        tuple
            .iter()
            .map(|p| p.homogenize(Some(target)))
            .collect::<Result<_>>()?
    } else if tuple.iter().all(|p| p.nvars() == k + 1) {
        let mut degree: Option<u32> = None;
        for p in tuple {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree().ok_or_else(|| {
                SplineError::Validation("homogeneous input contains an inhomogeneous polynomial".into())
            })?;
            if *degree.get_or_insert(d) != d {
                return Err(SplineError::Validation(
                    "homogeneous input mixes degrees".into(),
                ));
            }
        }
        tuple.to_vec()
    } else {
        return Err(SplineError::Validation(format!(
            "polynomials must all have {k} (affine) or {} (homogeneous) variables",
            k + 1
        )));
    };
    let degree = polys.iter().filter_map(|p| p.homogeneous_degree()).max().unwrap_or(0);
    for (row, facet) in c.interior_facets().iter().enumerate() {
        let mut diff = Polynomial::zero(k + 1);
        for &(cell, sign) in &facet.cofaces {
            let signed = if sign >= 0 {
                polys[cell].clone()
            } else {
                -&polys[cell]
            };
            diff = &diff + &signed;
        }
        let (_, rem) = divide_by_form_power(&diff, &facet.form, alphas.0[row] + 1);
        if !rem.is_zero() {
            return Ok(SplineCheck {
                smooth: false,
                witness: Some(SplineWitness {
                    facet_row: row,
                    form: facet.form.to_string(),
                }),
                degree,
            });
        }
    }
    Ok(SplineCheck { smooth: true, witness: None, degree })
}

/// Dense rational matrix of `[∂ | D]` in degree `d`; slow reference used
/// by tests and cross-checks.
pub fn dense_presentation_matrix(
    c: &EmbeddedComplex,
    alphas: &ExponentVector,
    d: i64,
) -> Result<Vec<Vec<BigRational>>> {
    check_alphas(c, alphas)?;
    let nvars = c.k + 1;
    let basis = DegreeBasis::new(nvars, d.max(0) as u32);
    let nrows = c.interior_facets().len() * basis.len();
    let row_of = |facet: usize, mono: usize| facet * basis.len() + mono;
    let mut cols: Vec<Vec<BigRational>> = Vec::new();
    for cell in 0..c.num_cells() {
        for mi in 0..basis.len() {
            let mut col = vec![BigRational::zero(); nrows];
            for (row, facet) in c.interior_facets().iter().enumerate() {
                for &(cc, sign) in &facet.cofaces {
                    if cc == cell {
                        col[row_of(row, mi)] +=
                            BigRational::from_integer(BigInt::from(sign));
                    }
                }
            }
            cols.push(col);
        }
    }
    for (row, facet) in c.interior_facets().iter().enumerate() {
        let a = alphas.0[row] + 1;
        let shift = d - a as i64;
        if shift < 0 {
            continue;
        }
        let power = facet.form.power(a);
        for m in &DegreeBasis::new(nvars, shift as u32).monomials {
            let mut col = vec![BigRational::zero(); nrows];
            let mut prod = Polynomial::zero(nvars);
            prod.add_term(m.clone(), BigRational::one());
            let prod = &prod * &power;
            for (mono, coeff) in prod.terms_desc() {
                col[row_of(row, basis.index_of(mono).expect("degree d term"))] = coeff.clone();
            }
            cols.push(col);
        }
    }
    // Transpose to rows for the dense routines.
    let mut rows = vec![vec![BigRational::zero(); cols.len()]; nrows];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            if !v.is_zero() {
                rows[i][j] = v.clone();
            }
        }
    }
    Ok(rows)
}
