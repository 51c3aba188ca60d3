//! Embedded simplicial and polyhedral complexes.
//!
//! A complex of dimension `k` (2 or 3) is embedded in `R^k` with rational
//! vertex coordinates. Polyhedral inputs are planar complexes whose cells
//! are strictly convex polygons given as vertex cycles; simplicial inputs
//! list `k + 1` vertices per cell. Two-dimensional cells are normalised to
//! counterclockwise order, and every interior facet carries the primitive
//! integer form of its affine span, homogenised with a final variable.

use crate::error::{Result, SplineError};
use crate::linalg::dense_kernel_basis;
use crate::polyring::{parse_rational, LinearForm};
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Degeneracy,
    NonConvex,
    Pseudomanifold,
    Connectivity,
    EdgeBasis,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, detail: impl Into<String>) -> Self {
        Violation { kind, detail: detail.into() }
    }
}

#[derive(Debug, Clone)]
pub struct FaceData {
    /// Sorted vertex ids.
    pub verts: Vec<usize>,
    pub interior: bool,
}

/// Interior face of codimension one, with its incidence data.
#[derive(Debug, Clone)]
pub struct InteriorFacet {
    /// Index into the facet list of the complex.
    pub face_idx: usize,
    /// Sorted vertex ids.
    pub verts: Vec<usize>,
    /// Planar only: the orientation used for this facet's row, as a
    /// (from, to) vertex pair.
    pub orientation: Option<(usize, usize)>,
    /// (cell index, incidence sign) for the two cells glued along it.
    pub cofaces: Vec<(usize, i64)>,
    /// Primitive integer form of the affine span in `k + 1` variables.
    pub form: LinearForm,
}

pub struct EmbeddedComplex {
    pub name: Option<String>,
    pub k: usize,
    pub vertices: Vec<Vec<BigRational>>,
    /// Top cells; two-dimensional cells are counterclockwise vertex cycles.
    pub cells: Vec<Vec<usize>>,
    pub polyhedral: bool,
    /// Faces by dimension `0 ..= k`; `faces[k]` holds sorted cell keys in
    /// input order, lower dimensions are sorted by vertex key.
    faces: Vec<Vec<FaceData>>,
    interior_facets: Vec<InteriorFacet>,
}

#[derive(Deserialize)]
struct RawComplex {
    name: Option<String>,
    dim: usize,
    vertices: Vec<Vec<String>>,
    maximal_faces: Vec<Vec<usize>>,
    #[serde(default)]
    polyhedral: bool,
    edge_basis: Option<Vec<(usize, usize)>>,
}

fn rat_det(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = BigRational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &rat_det(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

fn cross2(u: (&BigRational, &BigRational), v: (&BigRational, &BigRational)) -> BigRational {
    u.0 * v.1 - u.1 * v.0
}

fn twice_signed_area(pts: &[&Vec<BigRational>]) -> BigRational {
    let n = pts.len();
    let mut s = BigRational::zero();
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        s += &a[0] * &b[1] - &b[0] * &a[1];
    }
    s
}

pub fn load_complex_json(text: &str) -> Result<EmbeddedComplex> {
    let raw = parse_raw(text)?;
    match build(raw) {
        Ok(c) => Ok(c),
        Err(violations) => {
            let lines: Vec<String> = violations
                .iter()
                .map(|v| format!("{:?}: {}", v.kind, v.detail))
                .collect();
            Err(SplineError::Validation(lines.join("; ")))
        }
    }
}

/// Structural violations of a candidate complex, as data. Parse failures
/// still error.
pub fn complex_violations(text: &str) -> Result<Vec<Violation>> {
    let raw = parse_raw(text)?;
    Ok(match build(raw) {
        Ok(_) => Vec::new(),
        Err(v) => v,
    })
}

fn parse_raw(text: &str) -> Result<RawComplex> {
    serde_json::from_str(text).map_err(|e| crate::error::json_parse_error("complex", text, &e))
}

fn build(raw: RawComplex) -> std::result::Result<EmbeddedComplex, Vec<Violation>> {
    let mut bad = Vec::new();
    let k = raw.dim;
    if !(k == 2 || k == 3) {
        bad.push(Violation::new(
            ViolationKind::Degeneracy,
            format!("only dimensions 2 and 3 are supported, got {k}"),
        ));
        return Err(bad);
    }
    if raw.polyhedral && k != 2 {
        bad.push(Violation::new(
            ViolationKind::Degeneracy,
            "polyhedral cells are only supported in dimension 2",
        ));
        return Err(bad);
    }

    let mut vertices: Vec<Vec<BigRational>> = Vec::with_capacity(raw.vertices.len());
    for (i, coords) in raw.vertices.iter().enumerate() {
        if coords.len() != k {
            bad.push(Violation::new(
                ViolationKind::Degeneracy,
                format!("vertex {i} has {} coordinates, expected {k}", coords.len()),
            ));
            continue;
        }
        let mut p = Vec::with_capacity(k);
        for c in coords {
            match parse_rational(c) {
                Ok(r) => p.push(r),
                Err(e) => {
                    bad.push(Violation::new(
                        ViolationKind::Degeneracy,
                        format!("vertex {i}: {e}"),
                    ));
                }
            }
        }
        if p.len() == k {
            vertices.push(p);
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }

    let nv = vertices.len();
    for (i, f) in raw.maximal_faces.iter().enumerate() {
        if f.iter().any(|&v| v >= nv) {
            bad.push(Violation::new(
                ViolationKind::Degeneracy,
                format!("cell {i} references a vertex out of range"),
            ));
        }
        let distinct: HashSet<usize> = f.iter().copied().collect();
        if distinct.len() != f.len() {
            bad.push(Violation::new(
                ViolationKind::Degeneracy,
                format!("cell {i} repeats a vertex"),
            ));
        }
        let want = k + 1;
        if !raw.polyhedral && f.len() != want {
            bad.push(Violation::new(
                ViolationKind::Degeneracy,
                format!("simplicial cell {i} has {} vertices, expected {want}", f.len()),
            ));
        }
        if raw.polyhedral && f.len() < 3 {
            bad.push(Violation::new(
                ViolationKind::Degeneracy,
                format!("cell {i} has fewer than 3 vertices"),
            ));
        }
    }
    if raw.maximal_faces.is_empty() {
        bad.push(Violation::new(ViolationKind::Connectivity, "no maximal faces"));
    }
    if !bad.is_empty() {
        return Err(bad);
    }

    // Coincident vertices.
    {
        let mut seen: BTreeMap<Vec<BigRational>, usize> = BTreeMap::new();
        for (i, p) in vertices.iter().enumerate() {
            if let Some(&j) = seen.get(p) {
                bad.push(Violation::new(
                    ViolationKind::Degeneracy,
                    format!("vertices {j} and {i} coincide"),
                ));
            } else {
                seen.insert(p.clone(), i);
            }
        }
    }
    {
        let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (i, f) in raw.maximal_faces.iter().enumerate() {
            let mut key = f.clone();
            key.sort_unstable();
            if let Some(&j) = seen.get(&key) {
                bad.push(Violation::new(
                    ViolationKind::Pseudomanifold,
                    format!("cells {j} and {i} have the same vertex set"),
                ));
            } else {
                seen.insert(key, i);
            }
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }

    // Per-cell geometry; two-dimensional cells are normalised to
    // counterclockwise cycles.
    let mut cells = raw.maximal_faces.clone();
    if k == 2 {
        for (i, cell) in cells.iter_mut().enumerate() {
            let pts: Vec<&Vec<BigRational>> = cell.iter().map(|&v| &vertices[v]).collect();
            let area2 = twice_signed_area(&pts);
            if area2.is_zero() {
                bad.push(Violation::new(
                    ViolationKind::Degeneracy,
                    format!("cell {i} has zero area"),
                ));
                continue;
            }
            if area2.is_negative() {
                cell[1..].reverse();
            }
            let pts: Vec<&Vec<BigRational>> = cell.iter().map(|&v| &vertices[v]).collect();
            let n = cell.len();
            for j in 0..n {
                let a = pts[j];
                let b = pts[(j + 1) % n];
                let c = pts[(j + 2) % n];
                let u = (&(&b[0] - &a[0]), &(&b[1] - &a[1]));
                let v = (&(&c[0] - &b[0]), &(&c[1] - &b[1]));
                let cr = cross2((u.0, u.1), (v.0, v.1));
                if cr.is_zero() {
                    bad.push(Violation::new(
                        ViolationKind::Degeneracy,
                        format!("cell {i} has collinear consecutive vertices"),
                    ));
                } else if cr.is_negative() {
                    bad.push(Violation::new(
                        ViolationKind::NonConvex,
                        format!("cell {i} is not strictly convex"),
                    ));
                }
            }
        }
    } else {
        for (i, cell) in cells.iter().enumerate() {
            let base = &vertices[cell[0]];
            let rows: Vec<Vec<BigRational>> = cell[1..]
                .iter()
                .map(|&v| (0..k).map(|c| &vertices[v][c] - &base[c]).collect())
                .collect();
            if rat_det(&rows).is_zero() {
                bad.push(Violation::new(
                    ViolationKind::Degeneracy,
                    format!("cell {i} is degenerate (zero volume)"),
                ));
            }
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }

    // Face lattice.
    let mut faces: Vec<Vec<FaceData>> = vec![Vec::new(); k + 1];
    let mut index: Vec<BTreeMap<Vec<usize>, usize>> = vec![BTreeMap::new(); k + 1];
    for cell in &cells {
        let mut key = cell.clone();
        key.sort_unstable();
        faces[k].push(FaceData { verts: key, interior: true });
    }
    let mut lower: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); k];
    let mut facet_cells: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (ci, cell) in cells.iter().enumerate() {
        let facets: Vec<Vec<usize>> = if k == 2 {
            let n = cell.len();
            (0..n)
                .map(|j| {
                    let mut e = vec![cell[j], cell[(j + 1) % n]];
                    e.sort_unstable();
                    e
                })
                .collect()
        } else {
            (0..4)
                .map(|drop| {
                    let mut key = cell.clone();
                    key.sort_unstable();
                    key.remove(drop);
                    key
                })
                .collect()
        };
        for f in facets {
            facet_cells.entry(f.clone()).or_default().push(ci);
            lower[k - 1].insert(f);
        }
        for &v in cell {
            lower[0].insert(vec![v]);
        }
        if k == 3 {
            let mut key = cell.clone();
            key.sort_unstable();
            for a in 0..4 {
                for b in a + 1..4 {
                    lower[1].insert(vec![key[a], key[b]]);
                }
            }
        }
    }
    for (facet, cs) in &facet_cells {
        if cs.len() > 2 {
            bad.push(Violation::new(
                ViolationKind::Pseudomanifold,
                format!("facet {facet:?} lies in {} cells", cs.len()),
            ));
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }

    // Boundary closure: everything contained in a boundary facet.
    let boundary_facets: Vec<&Vec<usize>> = facet_cells
        .iter()
        .filter(|(_, cs)| cs.len() == 1)
        .map(|(f, _)| f)
        .collect();
    let mut boundary_faces: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); k];
    for f in &boundary_facets {
        boundary_faces[k - 1].insert((*f).clone());
        for &v in f.iter() {
            boundary_faces[0].insert(vec![v]);
        }
        if k == 3 {
            for a in 0..f.len() {
                for b in a + 1..f.len() {
                    boundary_faces[1].insert(vec![f[a], f[b]]);
                }
            }
        }
    }
    for dim in 0..k {
        for key in &lower[dim] {
            let interior = !boundary_faces[dim].contains(key);
            index[dim].insert(key.clone(), faces[dim].len());
            faces[dim].push(FaceData { verts: key.clone(), interior });
        }
    }

    // Connectivity of the cell adjacency graph, plus unused vertices.
    {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
        for cs in facet_cells.values() {
            if cs.len() == 2 {
                adj[cs[0]].push(cs[1]);
                adj[cs[1]].push(cs[0]);
            }
        }
        let mut seen = vec![false; cells.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for &d in &adj[c] {
                if !seen[d] {
                    seen[d] = true;
                    stack.push(d);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            bad.push(Violation::new(
                ViolationKind::Connectivity,
                "cells are not connected through shared facets",
            ));
        }
        let mut used = vec![false; nv];
        for cell in &cells {
            for &v in cell {
                used[v] = true;
            }
        }
        for (v, u) in used.iter().enumerate() {
            if !u {
                bad.push(Violation::new(
                    ViolationKind::Connectivity,
                    format!("vertex {v} lies in no cell"),
                ));
            }
        }
    }
    if !bad.is_empty() {
        return Err(bad);
    }

    // Interior facet rows: explicit edge basis order when given, sorted
    // vertex key order otherwise.
    let interior_keys: Vec<Vec<usize>> = facet_cells
        .iter()
        .filter(|(_, cs)| cs.len() == 2)
        .map(|(f, _)| f.clone())
        .collect();
    let mut row_facets: Vec<(Vec<usize>, Option<(usize, usize)>)> = Vec::new();
    if let Some(eb) = &raw.edge_basis {
        if k != 2 {
            bad.push(Violation::new(
                ViolationKind::EdgeBasis,
                "edge_basis is only meaningful in dimension 2",
            ));
            return Err(bad);
        }
        let want: BTreeSet<Vec<usize>> = interior_keys.iter().cloned().collect();
        let mut got: BTreeSet<Vec<usize>> = BTreeSet::new();
        for &(a, b) in eb {
            let mut key = vec![a, b];
            key.sort_unstable();
            if !want.contains(&key) {
                bad.push(Violation::new(
                    ViolationKind::EdgeBasis,
                    format!("({a}, {b}) is not an interior edge"),
                ));
            } else if !got.insert(key.clone()) {
                bad.push(Violation::new(
                    ViolationKind::EdgeBasis,
                    format!("({a}, {b}) listed twice"),
                ));
            } else {
                row_facets.push((key, Some((a, b))));
            }
        }
        if got.len() != want.len() {
            bad.push(Violation::new(
                ViolationKind::EdgeBasis,
                format!("edge_basis lists {} of {} interior edges", got.len(), want.len()),
            ));
        }
        if !bad.is_empty() {
            return Err(bad);
        }
    } else {
        for key in &interior_keys {
            let orientation = if k == 2 { Some((key[0], key[1])) } else { None };
            row_facets.push((key.clone(), orientation));
        }
    }

    let mut interior_facets = Vec::with_capacity(row_facets.len());
    for (key, orientation) in row_facets {
        let form = facet_form(k, &vertices, &key);
        let cs = &facet_cells[&key];
        let cofaces: Vec<(usize, i64)> = cs
            .iter()
            .map(|&ci| (ci, incidence_sign(k, &cells[ci], &key, orientation)))
            .collect();
        let face_idx = index[k - 1][&key];
        interior_facets.push(InteriorFacet { face_idx, verts: key, orientation, cofaces, form });
    }

    Ok(EmbeddedComplex {
        name: raw.name,
        k,
        vertices,
        cells,
        polyhedral: raw.polyhedral,
        faces,
        interior_facets,
    })
}

/// Primitive integer form (in `k + 1` variables) of the affine span of a
/// facet. The last variable homogenises the constant term.
fn facet_form(k: usize, vertices: &[Vec<BigRational>], key: &[usize]) -> LinearForm {
    let coeffs: Vec<BigRational> = if k == 2 {
        let a = &vertices[key[0]];
        let b = &vertices[key[1]];
        let nx = &b[1] - &a[1];
        let ny = &a[0] - &b[0];
        let c = -(&nx * &a[0] + &ny * &a[1]);
        vec![nx, ny, c]
    } else {
        let a = &vertices[key[0]];
        let u: Vec<BigRational> = (0..3).map(|i| &vertices[key[1]][i] - &a[i]).collect();
        let v: Vec<BigRational> = (0..3).map(|i| &vertices[key[2]][i] - &a[i]).collect();
        let nx = &u[1] * &v[2] - &u[2] * &v[1];
        let ny = &u[2] * &v[0] - &u[0] * &v[2];
        let nz = &u[0] * &v[1] - &u[1] * &v[0];
        let c = -(&nx * &a[0] + &ny * &a[1] + &nz * &a[2]);
        vec![nx, ny, nz, c]
    };
    LinearForm::from_rationals(&coeffs).expect("facet spans are non-degenerate")
}

fn incidence_sign(k: usize, cell: &[usize], key: &[usize], orientation: Option<(usize, usize)>) -> i64 {
    if k == 2 {
        let (from, to) = orientation.expect("planar facets carry an orientation");
        let n = cell.len();
        for j in 0..n {
            let (a, b) = (cell[j], cell[(j + 1) % n]);
            if (a, b) == (from, to) {
                return 1;
            }
            if (a, b) == (to, from) {
                return -1;
            }
        }
        unreachable!("cell does not contain its facet");
    } else {
        let mut sorted = cell.to_vec();
        sorted.sort_unstable();
        let drop = sorted
            .iter()
            .position(|v| !key.contains(v))
            .expect("facet omits one vertex");
        if drop % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl EmbeddedComplex {
    pub fn is_simplicial(&self) -> bool {
        !self.polyhedral
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    /// Faces of the given dimension (sorted vertex keys).
    pub fn faces(&self, dim: usize) -> &[FaceData] {
        &self.faces[dim]
    }

    pub fn interior_facets(&self) -> &[InteriorFacet] {
        &self.interior_facets
    }

    /// Forms of the interior facets, in row order.
    pub fn interior_facet_forms(&self) -> Vec<LinearForm> {
        self.interior_facets.iter().map(|f| f.form.clone()).collect()
    }

    /// Total face counts by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.len()).collect()
    }

    /// Interior face counts by dimension.
    pub fn interior_f_vector(&self) -> Vec<usize> {
        self.faces
            .iter()
            .map(|f| f.iter().filter(|x| x.interior).count())
            .collect()
    }

    /// Indices of interior faces of a dimension, in the order used for
    /// chain complex terms and boundary matrices. Facets follow the row
    /// order of [`EmbeddedComplex::interior_facets`]; every other
    /// dimension is sorted by vertex key.
    pub fn term_faces(&self, dim: usize) -> Vec<usize> {
        if dim == self.k {
            (0..self.faces[self.k].len()).collect()
        } else if dim == self.k - 1 {
            self.interior_facets.iter().map(|f| f.face_idx).collect()
        } else {
            (0..self.faces[dim].len())
                .filter(|&i| self.faces[dim][i].interior)
                .collect()
        }
    }

    /// Boundary matrix from interior `i`-faces to interior `(i-1)`-faces,
    /// rows and columns in `term_faces` order.
    pub fn boundary_matrix_relative(&self, i: usize) -> Vec<Vec<i64>> {
        assert!(i >= 1 && i <= self.k);
        let cols = self.term_faces(i);
        let rows = self.term_faces(i - 1);
        let row_of: HashMap<usize, usize> =
            rows.iter().enumerate().map(|(r, &f)| (f, r)).collect();
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        if i == self.k {
            for (r, facet) in self.interior_facets.iter().enumerate() {
                for &(cell, sign) in &facet.cofaces {
                    m[r][cell] = sign;
                }
            }
            return m;
        }
        if i == 1 {
            // Edges: oriented rows for planar facets, min -> max otherwise.
            for (c, &fi) in cols.iter().enumerate() {
                let (from, to) = if self.k == 2 {
                    self.interior_facets[c].orientation.expect("planar orientation")
                } else {
                    let v = &self.faces[1][fi].verts;
                    (v[0], v[1])
                };
                if let Some(&r) = row_of.get(&self.face_index(0, &[to])) {
                    m[r][c] += 1;
                }
                if let Some(&r) = row_of.get(&self.face_index(0, &[from])) {
                    m[r][c] -= 1;
                }
            }
            return m;
        }
        // k = 3, i = 2: triangles to edges with alternating signs.
        for (c, &fi) in cols.iter().enumerate() {
            let t = &self.faces[2][fi].verts;
            for drop in 0..3 {
                let e: Vec<usize> = (0..3).filter(|&j| j != drop).map(|j| t[j]).collect();
                let sign = if drop % 2 == 0 { 1 } else { -1 };
                if let Some(&r) = row_of.get(&self.face_index(1, &e)) {
                    m[r][c] += sign;
                }
            }
        }
        m
    }

    fn face_index(&self, dim: usize, key: &[usize]) -> usize {
        self.faces[dim]
            .iter()
            .position(|f| f.verts == key)
            .expect("face lookup")
    }

    /// Interior facet rows whose face contains the given face.
    pub fn facet_rows_containing(&self, dim: usize, face_idx: usize) -> Vec<usize> {
        let verts = &self.faces[dim][face_idx].verts;
        self.interior_facets
            .iter()
            .enumerate()
            .filter(|(_, f)| verts.iter().all(|v| f.verts.contains(v)))
            .map(|(r, _)| r)
            .collect()
    }

    /// Primitive forms spanning the linear forms that vanish on the affine
    /// span of a face (in `k + 1` homogeneous variables).
    pub fn face_vanishing_forms(&self, dim: usize, face_idx: usize) -> Vec<LinearForm> {
        let verts = &self.faces[dim][face_idx].verts;
        let rows: Vec<Vec<BigRational>> = verts
            .iter()
            .map(|&v| {
                let mut row = self.vertices[v].clone();
                row.push(BigRational::one());
                row
            })
            .collect();
        dense_kernel_basis(&rows, self.k + 1)
            .into_iter()
            .map(|v| LinearForm::from_rationals(&v).expect("kernel basis vectors are nonzero"))
            .collect()
    }

    /// Number of projectively distinct facet spans through an interior
    /// vertex.
    pub fn distinct_hyperplane_count(&self, vertex: usize) -> Result<usize> {
        if vertex >= self.vertices.len() {
            return Err(SplineError::Validation(format!("no vertex {vertex}")));
        }
        let idx = self.face_index(0, &[vertex]);
        if !self.faces[0][idx].interior {
            return Err(SplineError::Validation(format!(
                "vertex {vertex} is not interior"
            )));
        }
        let forms: BTreeSet<&LinearForm> = self
            .interior_facets
            .iter()
            .filter(|f| f.verts.contains(&vertex))
            .map(|f| &f.form)
            .collect();
        Ok(forms.len())
    }

    /// The unique interior vertex, when the complex is its star: every cell
    /// must contain it.
    pub fn star_center(&self) -> Option<usize> {
        let interior: Vec<usize> = self.faces[0]
            .iter()
            .filter(|f| f.interior)
            .map(|f| f.verts[0])
            .collect();
        match interior.as_slice() {
            [v] if self.cells.iter().all(|c| c.contains(v)) => Some(*v),
            _ => None,
        }
    }

    pub fn interior_vertices(&self) -> Vec<usize> {
        self.faces[0]
            .iter()
            .filter(|f| f.interior)
            .map(|f| f.verts[0])
            .collect()
    }
}
