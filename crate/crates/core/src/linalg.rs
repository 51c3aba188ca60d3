//! Sparse exact linear algebra over the rationals.
//!
//! Rank computations run on integer vectors through a fraction-free
//! elimination: every stored pivot row is primitive (content one) with a
//! positive leading entry, and each elimination step combines rows in an
//! `i128` fast path, promoting to arbitrary precision only when an entry
//! leaves the `i64` range. A dense rational elimination lives alongside as
//! a slow oracle for tests, plus small integer matrix utilities (unimodular
//! completion of a primitive vector, determinants, adjugate inverses).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use num_integer::Integer;
use std::collections::BTreeMap;

/// Sorted sparse integer vector with no zero entries. `Small` entries fit
/// in `i64`; a vector is promoted to `Big` when elimination overflows.
#[derive(Clone, Debug)]
pub enum SparseVec {
    Small(Vec<(u32, i64)>),
    Big(Vec<(u32, BigInt)>),
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl SparseVec {
    pub fn from_entries(mut entries: Vec<(u32, i64)>) -> Self {
        entries.sort_by_key(|e| e.0);
        entries.dedup_by(|cur, prev| {
            if cur.0 == prev.0 {
                prev.1 = prev.1.checked_add(cur.1).expect("entry overflow");
                true
            } else {
                false
            }
        });
        entries.retain(|e| e.1 != 0);
        SparseVec::Small(entries)
    }

    pub fn from_big_entries(mut entries: Vec<(u32, BigInt)>) -> Self {
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        entries.dedup_by(|cur, prev| {
            if cur.0 == prev.0 {
                prev.1 += std::mem::take(&mut cur.1);
                true
            } else {
                false
            }
        });
        entries.retain(|e| !e.1.is_zero());
        Self::demote(entries)
    }

    /// Sums duplicate columns, clears denominators and strips content;
    /// `None` for the zero vector.
    pub fn from_rationals(entries: &[(u32, BigRational)]) -> Option<Self> {
        let mut merged: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (col, val) in entries {
            *merged.entry(*col).or_insert_with(BigRational::zero) += val;
        }
        merged.retain(|_, v| !v.is_zero());
        if merged.is_empty() {
            return None;
        }
        let mut lcm = BigInt::one();
        for v in merged.values() {
            lcm = lcm.lcm(v.denom());
        }
        let big: Vec<(u32, BigInt)> = merged
            .into_iter()
            .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
            .collect();
        let mut v = Self::demote(big);
        v.strip_content();
        Some(v)
    }

    fn demote(entries: Vec<(u32, BigInt)>) -> Self {
        let mut small = Vec::with_capacity(entries.len());
        for (c, v) in &entries {
            match i64::try_from(v) {
                Ok(x) => small.push((*c, x)),
                Err(_) => return SparseVec::Big(entries),
            }
        }
        SparseVec::Small(small)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SparseVec::Small(v) => v.is_empty(),
            SparseVec::Big(v) => v.is_empty(),
        }
    }

    pub fn nnz(&self) -> usize {
        match self {
            SparseVec::Small(v) => v.len(),
            SparseVec::Big(v) => v.len(),
        }
    }

    pub fn leading_col(&self) -> Option<u32> {
        match self {
            SparseVec::Small(v) => v.first().map(|e| e.0),
            SparseVec::Big(v) => v.first().map(|e| e.0),
        }
    }

    fn leading_val_big(&self) -> BigInt {
        match self {
            SparseVec::Small(v) => BigInt::from(v[0].1),
            SparseVec::Big(v) => v[0].1.clone(),
        }
    }

    pub fn to_big(&self) -> Vec<(u32, BigInt)> {
        match self {
            SparseVec::Small(v) => v.iter().map(|e| (e.0, BigInt::from(e.1))).collect(),
            SparseVec::Big(v) => v.clone(),
        }
    }

    pub fn strip_content(&mut self) {
        match self {
            SparseVec::Small(v) => {
                let mut g: u128 = 0;
                for e in v.iter() {
                    g = gcd_u128(g, e.1.unsigned_abs() as u128);
                }
                if g > 1 {
                    for e in v.iter_mut() {
                        e.1 /= g as i64;
                    }
                }
            }
            SparseVec::Big(v) => {
                let mut g = BigInt::zero();
                for e in v.iter() {
                    g = g.gcd(&e.1);
                }
                if !g.is_zero() && !g.is_one() {
                    for e in v.iter_mut() {
                        e.1 = &e.1 / &g;
                    }
                }
                let taken = std::mem::take(v);
                *self = Self::demote(taken);
            }
        }
    }

    /// Primitive with positive leading entry.
    pub fn normalize(&mut self) {
        self.strip_content();
        let neg = match self {
            SparseVec::Small(v) => v.first().map(|e| e.1 < 0).unwrap_or(false),
            SparseVec::Big(v) => v.first().map(|e| e.1.is_negative()).unwrap_or(false),
        };
        if neg {
            match self {
                SparseVec::Small(v) => v.iter_mut().for_each(|e| e.1 = -e.1),
                SparseVec::Big(v) => v.iter_mut().for_each(|e| e.1 = -&e.1),
            }
        }
    }
}

fn merge_small(a: &[(u32, i64)], ca: i128, b: &[(u32, i64)], cb: i128) -> Vec<(u32, i128)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0, ca * a[i].1 as i128));
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, cb * b[j].1 as i128));
            j += 1;
        } else {
            let v = ca * a[i].1 as i128 + cb * b[j].1 as i128;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn merge_big(a: &[(u32, BigInt)], ca: &BigInt, b: &[(u32, BigInt)], cb: &BigInt) -> Vec<(u32, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0, ca * &a[i].1));
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, cb * &b[j].1));
            j += 1;
        } else {
            let v = ca * &a[i].1 + cb * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Cancels the leading column of `v` against pivot `row` (same leading
/// column): returns `lead(row) * v - v[col] * row`, content stripped.
fn eliminate_step(v: &SparseVec, row: &SparseVec) -> SparseVec {
    debug_assert_eq!(v.leading_col(), row.leading_col());
    match (v, row) {
        (SparseVec::Small(a), SparseVec::Small(b)) => {
            let p = b[0].1 as i128;
            let c = a[0].1 as i128;
            let merged = merge_small(a, p, b, -c);
            let mut g: u128 = 0;
            for e in &merged {
                g = gcd_u128(g, e.1.unsigned_abs());
            }
            let g = if g == 0 { 1 } else { g };
            let mut small = Vec::with_capacity(merged.len());
            let mut big: Option<Vec<(u32, BigInt)>> = None;
            for (col, val) in &merged {
                let val = val / g as i128;
                if let Some(bigv) = &mut big {
                    bigv.push((*col, BigInt::from(val)));
                } else {
                    match i64::try_from(val) {
                        Ok(x) => small.push((*col, x)),
                        Err(_) => {
                            let mut bigv: Vec<(u32, BigInt)> =
                                small.iter().map(|e| (e.0, BigInt::from(e.1))).collect();
                            bigv.push((*col, BigInt::from(val)));
                            big = Some(bigv);
                        }
                    }
                }
            }
            match big {
                Some(b) => SparseVec::Big(b),
                None => SparseVec::Small(small),
            }
        }
        _ => {
            let a = v.to_big();
            let b = row.to_big();
            let p = b[0].1.clone();
            let c = -a[0].1.clone();
            let mut out = SparseVec::Big(merge_big(&a, &p, &b, &c));
            out.strip_content();
            out
        }
    }
}

/// Incremental echelon form keyed by pivot column. Rows are primitive with
/// positive leading entries; the pivot set and the normal forms computed by
/// [`Eliminator::reduce`] depend only on the row space, not on insertion
/// order.
#[derive(Default)]
pub struct Eliminator {
    rows: BTreeMap<u32, SparseVec>,
}

impl Eliminator {
    pub fn new() -> Self {
        Eliminator { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.keys().copied()
    }

    pub fn has_pivot(&self, col: u32) -> bool {
        self.rows.contains_key(&col)
    }

    /// Inserts a vector, eliminating against existing pivots first.
    /// Returns true when the rank grows.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        loop {
            let Some(col) = v.leading_col() else {
                return false;
            };
            match self.rows.get(&col) {
                Some(row) => v = eliminate_step(&v, row),
                None => {
                    v.normalize();
                    self.rows.insert(col, v);
                    return true;
                }
            }
        }
    }

    pub fn insert_rationals(&mut self, entries: &[(u32, BigRational)]) -> bool {
        match SparseVec::from_rationals(entries) {
            Some(v) => self.insert(v),
            None => false,
        }
    }

    pub fn reduces_to_zero(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        loop {
            let Some(col) = v.leading_col() else {
                return true;
            };
            match self.rows.get(&col) {
                Some(row) => v = eliminate_step(&v, row),
                None => return false,
            }
        }
    }

    /// Canonical normal form of `v` modulo the row space: the unique vector
    /// congruent to `v` with no support on pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> Vec<(u32, BigRational)> {
        let mut work = v.to_big();
        let mut scale = BigRational::one();
        let mut i = 0;
        while i < work.len() {
            let col = work[i].0;
            match self.rows.get(&col) {
                None => i += 1,
                Some(row) => {
                    let p = row.leading_val_big();
                    let c = -work[i].1.clone();
                    work = merge_big(&work, &p, &row.to_big(), &c);
                    scale /= BigRational::from_integer(p);
                    let mut g = BigInt::zero();
                    for e in &work {
                        g = g.gcd(&e.1);
                    }
                    if !g.is_zero() && !g.is_one() {
                        for e in work.iter_mut() {
                            e.1 = &e.1 / &g;
                        }
                        scale *= BigRational::from_integer(g);
                    }
                }
            }
        }
        work.into_iter()
            .map(|(c, n)| (c, &scale * BigRational::from_integer(n)))
            .collect()
    }
}

/// Plain rational Gaussian elimination; test oracle for [`Eliminator`].
pub fn dense_rank(matrix: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = matrix.iter().filter(|r| !r.is_empty()).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                for c in col..ncols {
                    let sub = &f * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Basis of `{ x : A x = 0 }` where the slice holds the rows of `A`.
pub fn dense_kernel_basis(matrix: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = matrix.iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for c in 0..ncols {
            m[rank][c] = &m[rank][c] * &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..ncols {
                    let sub = &f * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Scales a rational vector to a primitive integer vector with a positive
/// first nonzero entry. `None` for the zero vector.
pub fn primitive_integer_vector(v: &[BigRational]) -> Option<Vec<BigInt>> {
    if v.iter().all(|x| x.is_zero()) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_one() {
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    Some(ints)
}

/// Determinant by Laplace expansion; intended for n <= 5.
pub fn int_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * int_determinant(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

/// Completes a primitive integer vector to a square integer matrix with
/// determinant +-1 whose first row is the given vector.
pub fn unimodular_completion(c: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = c.len();
    assert!(n >= 1);
    let mut g = BigInt::zero();
    for x in c {
        g = g.gcd(x);
    }
    assert!(g.is_one(), "vector must be primitive");
    if n == 1 {
        return vec![vec![c[0].clone()]];
    }
    let mut gf = BigInt::zero();
    for x in &c[..n - 1] {
        gf = gf.gcd(x);
    }
    if gf.is_zero() {
        // c = (0, ..., 0, t) with |t| = 1.
        let mut rows = vec![c.to_vec()];
        for i in 0..n - 1 {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            rows.push(e);
        }
        return rows;
    }
    let front: Vec<BigInt> = c[..n - 1].iter().map(|x| x / &gf).collect();
    let inner = unimodular_completion(&front);
    let eg = gf.extended_gcd(&c[n - 1]);
    debug_assert!(eg.gcd.is_one());
    let (u, w) = (eg.x, eg.y);
    let mut rows = vec![c.to_vec()];
    for inner_row in inner.iter().skip(1) {
        let mut r: Vec<BigInt> = inner_row.clone();
        r.push(BigInt::zero());
        rows.push(r);
    }
    let mut last: Vec<BigInt> = front.iter().map(|x| -&w * x).collect();
    last.push(u);
    rows.push(last);
    debug_assert!({
        let d = int_determinant(&rows);
        (&d * &d).is_one()
    });
    rows
}

/// Inverse of an integer matrix with determinant +-1, via the adjugate.
pub fn unimodular_inverse(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let det = int_determinant(m);
    assert!((&det * &det).is_one(), "matrix must be unimodular");
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| m[r][c].clone())
                        .collect()
                })
                .collect();
            let mut cof = int_determinant(&minor);
            if (i + j) % 2 == 1 {
                cof = -cof;
            }
            inv[i][j] = &cof * &det;
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn dense_from_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    fn elim_rank(rows: &[Vec<i64>]) -> usize {
        let mut e = Eliminator::new();
        for r in rows {
            let entries: Vec<(u32, i64)> = r
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| (i as u32, x))
                .collect();
            e.insert(SparseVec::from_entries(entries));
        }
        e.rank()
    }

    #[test]
    fn rank_of_skew_circulant() {
        // Rows sum to zero, so the rank drops by one.
        let rows = vec![vec![-1, 0, 1], vec![1, -1, 0], vec![0, 1, -1]];
        assert_eq!(elim_rank(&rows), 2);
        assert_eq!(dense_rank(&dense_from_rows(&rows)), 2);
        let kernel = dense_kernel_basis(&dense_from_rows(&rows), 3);
        assert_eq!(kernel.len(), 1);
    }

    #[test]
    fn duplicate_and_scaled_rows_do_not_raise_rank() {
        let mut e = Eliminator::new();
        assert!(e.insert(SparseVec::from_entries(vec![(0, 2), (2, 4)])));
        assert!(!e.insert(SparseVec::from_entries(vec![(0, 1), (2, 2)])));
        assert!(!e.insert(SparseVec::from_entries(vec![(0, -3), (2, -6)])));
        assert!(e.insert(SparseVec::from_entries(vec![(1, 7)])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn rational_rows_are_cleared_to_primitive_integers() {
        let mut e = Eliminator::new();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(e.insert_rationals(&[(0, half), (1, third)]));
        assert_eq!(e.rank(), 1);
        // 1/2 x0 + 1/3 x1 scales to 3 x0 + 2 x1.
        assert!(!e.insert(SparseVec::from_entries(vec![(0, 3), (1, 2)])));
    }

    #[test]
    fn reduce_zeroes_pivot_columns_and_is_congruent() {
        let mut e = Eliminator::new();
        e.insert(SparseVec::from_entries(vec![(0, 1), (1, 2), (3, 1)]));
        e.insert(SparseVec::from_entries(vec![(1, 3), (2, 1)]));
        let v = SparseVec::from_entries(vec![(0, 5), (1, 1), (2, 2), (3, 4)]);
        let nf = e.reduce(&v);
        for (col, _) in &nf {
            assert!(!e.has_pivot(*col), "normal form touches pivot column {col}");
        }
        // v - nf must lie in the row space.
        let mut diff: Vec<(u32, BigRational)> = v
            .to_big()
            .into_iter()
            .map(|(c, n)| (c, BigRational::from_integer(n)))
            .collect();
        for (col, val) in &nf {
            diff.push((*col, -val.clone()));
        }
        let diff = SparseVec::from_rationals(&diff).expect("nonzero difference expected");
        assert!(e.reduces_to_zero(&diff));
    }

    #[test]
    fn big_entries_promote_and_still_match_dense() {
        let a: i64 = 3_037_000_499; // floor(sqrt(2^63)) - ish, squares overflow i64
        let rows = vec![vec![a, a - 1, 0], vec![a - 2, a - 3, 1], vec![0, 1, a]];
        assert_eq!(elim_rank(&rows), dense_rank(&dense_from_rows(&rows)));
    }

    #[test]
    fn completion_of_small_vectors() {
        for c in [vec![2, 1, -2], vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![3, 5, 7]] {
            let c: Vec<BigInt> = c.into_iter().map(BigInt::from).collect();
            let u = unimodular_completion(&c);
            assert_eq!(u[0], c);
            let d = int_determinant(&u);
            assert!((&d * &d).is_one(), "det {d} not a unit");
            let inv = unimodular_inverse(&u);
            for i in 0..u.len() {
                for j in 0..u.len() {
                    let mut s = BigInt::zero();
                    for k in 0..u.len() {
                        s += &u[i][k] * &inv[k][j];
                    }
                    assert_eq!(s, if i == j { BigInt::one() } else { BigInt::zero() });
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn sparse_rank_matches_dense(rows in proptest::collection::vec(
            proptest::collection::vec(-9i64..=9, 5), 1..7)) {
            prop_assert_eq!(elim_rank(&rows), dense_rank(&dense_from_rows(&rows)));
        }

        #[test]
        fn rank_is_insertion_order_invariant(rows in proptest::collection::vec(
            proptest::collection::vec(-4i64..=4, 4), 1..6)) {
            let forward = elim_rank(&rows);
            let mut rev = rows.clone();
            rev.reverse();
            prop_assert_eq!(forward, elim_rank(&rev));
        }

        #[test]
        fn reduce_is_canonical_across_insertion_orders(
            rows in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 5), 2..5),
            probe in proptest::collection::vec(-4i64..=4, 5)) {
            let build = |rs: &[Vec<i64>]| {
                let mut e = Eliminator::new();
                for r in rs {
                    let entries: Vec<(u32, i64)> = r.iter().enumerate()
                        .filter(|(_, &x)| x != 0)
                        .map(|(i, &x)| (i as u32, x))
                        .collect();
                    e.insert(SparseVec::from_entries(entries));
                }
                e
            };
            let e1 = build(&rows);
            let mut rev = rows.clone();
            rev.reverse();
            let e2 = build(&rev);
            let p: Vec<(u32, i64)> = probe.iter().enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| (i as u32, x))
                .collect();
            let v = SparseVec::from_entries(p);
            prop_assert_eq!(e1.reduce(&v), e2.reduce(&v));
        }

        #[test]
        fn scaled_rows_do_not_change_rank(rows in proptest::collection::vec(
            proptest::collection::vec(-5i64..=5, 4), 1..5),
            scale in 1i64..=7) {
            let scaled: Vec<Vec<i64>> = rows.iter()
                .map(|r| r.iter().map(|&x| x * scale).collect())
                .collect();
            prop_assert_eq!(elim_rank(&rows), elim_rank(&scaled));
        }

        #[test]
        fn completion_is_unimodular(raw in proptest::collection::vec(-20i64..=20, 2..5)) {
            let mut g: i64 = 0;
            for &x in &raw { g = num_integer::gcd(g, x.abs()); }
            prop_assume!(g != 0);
            let c: Vec<BigInt> = raw.iter().map(|&x| BigInt::from(x / g)).collect();
            let u = unimodular_completion(&c);
            prop_assert_eq!(&u[0], &c);
            let d = int_determinant(&u);
            prop_assert!((&d * &d).is_one());
        }
    }
}
