//! Codimension-two loci of a planar polyhedral complex and the cycles they
//! carry.
//!
//! Away from points where several interior edge spans meet, the cokernel of
//! the spline presentation is locally trivial; the interesting loci ξ are
//! the pairwise intersection points of the edge span lines, taken
//! projectively so that parallel pencils meet at infinity. Around each ξ
//! the cells touching an incident edge form a graph whose components are
//! paths or cycles; only the cycles contribute, each through the ideal
//! generated by the powers of the distinct edge forms around it.

use crate::cellcomplex::EmbeddedComplex;
use crate::closedforms::minimal_generators;
use crate::error::{Result, SplineError};
use crate::polyring::LinearForm;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A candidate codimension-two locus: a projective point lying on at least
/// two projectively distinct interior edge spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiLocus {
    /// Primitive coordinates (X : Y : W); the affine point is (X/W, Y/W)
    /// and W = 0 marks a point at infinity.
    pub point: [BigInt; 3],
    /// Rows of the interior edges whose span contains the point.
    pub incident_edges: Vec<usize>,
}

impl XiLocus {
    pub fn at_infinity(&self) -> bool {
        self.point[2].is_zero()
    }

    pub fn affine(&self) -> Option<(BigRational, BigRational)> {
        if self.at_infinity() {
            return None;
        }
        let w = BigRational::from_integer(self.point[2].clone());
        Some((
            BigRational::from_integer(self.point[0].clone()) / &w,
            BigRational::from_integer(self.point[1].clone()) / &w,
        ))
    }
}

impl fmt::Display for XiLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.point[0], self.point[1], self.point[2])
    }
}

impl Serialize for XiLocus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("XiLocus", 4)?;
        let p: Vec<String> = self.point.iter().map(|c| c.to_string()).collect();
        st.serialize_field("point", &p)?;
        st.serialize_field("at_infinity", &self.at_infinity())?;
        let affine = self
            .affine()
            .map(|(x, y)| vec![x.to_string(), y.to_string()]);
        st.serialize_field("affine", &affine)?;
        st.serialize_field("incident_edges", &self.incident_edges)?;
        st.end()
    }
}

fn normalize_triple(mut p: [BigInt; 3]) -> Option<[BigInt; 3]> {
    let mut g = BigInt::zero();
    for c in &p {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return None;
    }
    for c in &mut p {
        *c = &*c / &g;
    }
    if p.iter().find(|c| !c.is_zero()).map(|c| c.is_negative()).unwrap_or(false) {
        for c in &mut p {
            *c = -&*c;
        }
    }
    Some(p)
}

fn cross(a: &LinearForm, b: &LinearForm) -> Option<[BigInt; 3]> {
    let (a, b) = (&a.coeffs, &b.coeffs);
    normalize_triple([
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

fn vanishes_at(form: &LinearForm, p: &[BigInt; 3]) -> bool {
    form.eval_int(p).is_zero()
}

fn require_planar(c: &EmbeddedComplex) -> Result<()> {
    if c.k != 2 {
        return Err(SplineError::Unsupported(
            "codimension-two locus analysis needs a planar complex".into(),
        ));
    }
    Ok(())
}

/// All projective points lying on at least two projectively distinct
/// interior edge spans: every interior vertex and every concurrency point,
/// including points at infinity for parallel pencils. Sorted by
/// coordinates for deterministic output.
pub fn xi_candidates(c: &EmbeddedComplex) -> Result<Vec<XiLocus>> {
    require_planar(c)?;
    let forms = c.interior_facet_forms();
    let distinct: Vec<&LinearForm> = {
        let mut seen = BTreeSet::new();
        forms.iter().filter(|f| seen.insert(*f)).collect()
    };
    let mut points: BTreeSet<[BigInt; 3]> = BTreeSet::new();
    for (i, a) in distinct.iter().enumerate() {
        for b in &distinct[i + 1..] {
            if let Some(p) = cross(a, b) {
                points.insert(p);
            }
        }
    }
    for v in c.interior_vertices() {
        let x = &c.vertices[v][0];
        let y = &c.vertices[v][1];
        let den = x.denom().lcm(y.denom());
        let p = [
            (x * BigRational::from_integer(den.clone())).to_integer(),
            (y * BigRational::from_integer(den.clone())).to_integer(),
            den,
        ];
        if let Some(p) = normalize_triple(p) {
            points.insert(p);
        }
    }
    let mut out = Vec::new();
    for point in points {
        let incident: Vec<usize> = forms
            .iter()
            .enumerate()
            .filter(|(_, f)| vanishes_at(f, &point))
            .map(|(row, _)| row)
            .collect();
        let span_count = incident
            .iter()
            .map(|&row| &forms[row])
            .collect::<BTreeSet<_>>()
            .len();
        if span_count >= 2 {
            out.push(XiLocus { point, incident_edges: incident });
        }
    }
    Ok(out)
}

/// One connected component of the graph around a locus.
#[derive(Clone, Debug, Serialize)]
pub struct XiComponent {
    pub cells: Vec<usize>,
    pub edge_rows: Vec<usize>,
    pub is_cycle: bool,
}

/// Cells touching an edge through ξ, joined along those edges.
#[derive(Clone, Debug, Serialize)]
pub struct XiGraph {
    pub xi: XiLocus,
    pub cells: Vec<usize>,
    /// (cell, cell, interior edge row) per qualifying edge.
    pub edges: Vec<(usize, usize, usize)>,
    pub components: Vec<XiComponent>,
}

/// Builds the incidence graph of the locus. Convexity of the cells caps
/// every valence at two; a higher valence means the input geometry is
/// degenerate and is reported as an error.
pub fn build_xi_graph(c: &EmbeddedComplex, xi: &XiLocus) -> Result<XiGraph> {
    require_planar(c)?;
    let mut edges = Vec::new();
    let mut valence: BTreeMap<usize, usize> = BTreeMap::new();
    for &row in &xi.incident_edges {
        let facet = &c.interior_facets()[row];
        let cf = &facet.cofaces;
        debug_assert_eq!(cf.len(), 2, "interior edges have two cofaces");
        edges.push((cf[0].0, cf[1].0, row));
        for &(cell, _) in cf {
            *valence.entry(cell).or_insert(0) += 1;
        }
    }
    for (&cell, &v) in &valence {
        if v > 2 {
            return Err(SplineError::Geometry(format!(
                "{v} edge spans of cell {cell} pass through {xi}; a convex face admits at most two"
            )));
        }
    }
    let cells: Vec<usize> = valence.keys().copied().collect();
    // Component sweep over a graph with maximum valence two.
    let mut assigned: BTreeMap<usize, usize> = BTreeMap::new();
    let mut components: Vec<XiComponent> = Vec::new();
    for &start in &cells {
        if assigned.contains_key(&start) {
            continue;
        }
        let id = components.len();
        let mut member_cells = vec![start];
        assigned.insert(start, id);
        let mut frontier = vec![start];
        let mut edge_rows = BTreeSet::new();
        while let Some(cell) = frontier.pop() {
            for &(a, b, row) in &edges {
                if a == cell || b == cell {
                    edge_rows.insert(row);
                    let other = if a == cell { b } else { a };
                    if !assigned.contains_key(&other) {
                        assigned.insert(other, id);
                        member_cells.push(other);
                        frontier.push(other);
                    }
                }
            }
        }
        member_cells.sort_unstable();
        let is_cycle = edge_rows.len() == member_cells.len();
        components.push(XiComponent {
            cells: member_cells,
            edge_rows: edge_rows.into_iter().collect(),
            is_cycle,
        });
    }
    Ok(XiGraph { xi: xi.clone(), cells, edges, components })
}

/// A cycle component with its attached ideal data.
#[derive(Clone, Debug, Serialize)]
pub struct CycleData {
    pub cells: Vec<usize>,
    pub edge_rows: Vec<usize>,
    /// Projectively distinct edge forms around the cycle.
    pub distinct_forms: Vec<LinearForm>,
    /// The same forms written in coordinates on the pencil of lines
    /// through ξ (two variables).
    pub restricted: Vec<LinearForm>,
    /// Number of minimal generators of the ideal of (r+1)-st powers.
    pub n: usize,
}

/// Extracts the cycle components of the locus graph together with the
/// minimal-generator count of each attached ideal.
pub fn cycle_ideals(c: &EmbeddedComplex, xi: &XiLocus, r: u32) -> Result<Vec<CycleData>> {
    let graph = build_xi_graph(c, xi)?;
    let forms = c.interior_facet_forms();
    let mut out = Vec::new();
    for comp in &graph.components {
        if !comp.is_cycle {
            continue;
        }
        let mut distinct: Vec<LinearForm> = Vec::new();
        for &row in &comp.edge_rows {
            if !distinct.contains(&forms[row]) {
                distinct.push(forms[row].clone());
            }
        }
        if distinct.len() < 2 {
            return Err(SplineError::Geometry(format!(
                "cycle at {xi} uses a single edge span"
            )));
        }
        let restricted = restrict_to_pencil(&distinct)?;
        let n = minimal_generators(&vec![r + 1; distinct.len()])?.len();
        out.push(CycleData {
            cells: comp.cells.clone(),
            edge_rows: comp.edge_rows.clone(),
            distinct_forms: distinct,
            restricted,
            n,
        });
    }
    Ok(out)
}

/// Writes forms lying in a common pencil as linear forms in the first two:
/// `g = λ f₀ + μ f₁` becomes the two-variable form `λ y₀ + μ y₁`.
fn restrict_to_pencil(forms: &[LinearForm]) -> Result<Vec<LinearForm>> {
    let f0 = &forms[0].coeffs;
    let f1 = &forms[1].coeffs;
    // Find an invertible 2x2 minor of the basis pair.
    let mut rows = None;
    'outer: for i in 0..3 {
        for j in i + 1..3 {
            if (&f0[i] * &f1[j] - &f0[j] * &f1[i]) != BigInt::zero() {
                rows = Some((i, j));
                break 'outer;
            }
        }
    }
    let Some((i, j)) = rows else {
        return Err(SplineError::Geometry(
            "pencil basis forms are proportional".into(),
        ));
    };
    let det = BigRational::from_integer(&f0[i] * &f1[j] - &f0[j] * &f1[i]);
    let mut out = Vec::with_capacity(forms.len());
    for g in forms {
        let gc = &g.coeffs;
        let lam = BigRational::from_integer(&gc[i] * &f1[j] - &gc[j] * &f1[i]) / &det;
        let mu = BigRational::from_integer(&f0[i] * &gc[j] - &f0[j] * &gc[i]) / &det;
        // Membership in the pencil: the remaining coordinate must agree.
        for t in 0..3 {
            let lhs = BigRational::from_integer(gc[t].clone());
            let rhs = &lam * BigRational::from_integer(f0[t].clone())
                + &mu * BigRational::from_integer(f1[t].clone());
            if lhs != rhs {
                return Err(SplineError::Geometry(format!(
                    "form {g} does not lie in the pencil of {} and {}",
                    forms[0], forms[1]
                )));
            }
        }
        let restricted = LinearForm::from_rationals(&[lam, mu])
            .ok_or_else(|| SplineError::Geometry("zero form in pencil".into()))?;
        out.push(restricted);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num::One;

    fn locus_at(cands: &[XiLocus], triple: [i64; 3]) -> Option<&XiLocus> {
        let want: Vec<BigInt> = triple.iter().map(|&c| BigInt::from(c)).collect();
        cands.iter().find(|x| x.point.as_slice() == want.as_slice())
    }

    #[test]
    fn quadrilateral_complex_loci() {
        let th = fixtures::th();
        let cands = xi_candidates(&th).unwrap();
        // Three interior vertices, the central concurrency point, and
        // three simple crossing points of non-adjacent spans.
        assert_eq!(cands.len(), 7);
        let origin = locus_at(&cands, [0, 0, 1]).expect("central point");
        assert_eq!(origin.incident_edges.len(), 3);
        for v in th.interior_vertices() {
            let (x, y) = (&th.vertices[v][0], &th.vertices[v][1]);
            assert!(
                cands.iter().any(|c| c
                    .affine()
                    .map(|(cx, cy)| &cx == x && &cy == y)
                    .unwrap_or(false)),
                "vertex {v} missing"
            );
        }
        assert!(cands.iter().all(|c| !c.at_infinity()));

        let g = build_xi_graph(&th, origin).unwrap();
        assert_eq!(g.components.len(), 1);
        assert!(g.components[0].is_cycle);
        assert_eq!(g.components[0].cells, vec![0, 1, 2]);

        // Every interior vertex carries a triangle cycle.
        let mut cycle_count = 0;
        for c in &cands {
            for comp in build_xi_graph(&th, c).unwrap().components {
                if comp.is_cycle {
                    cycle_count += 1;
                    assert_eq!(comp.cells.len(), 3);
                }
            }
        }
        assert_eq!(cycle_count, 4);

        let cycles = cycle_ideals(&th, origin, 1).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].distinct_forms.len(), 3);
        assert_eq!(cycles[0].n, 3);
        // r = 0 keeps only two of the three power generators.
        assert_eq!(cycle_ideals(&th, origin, 0).unwrap()[0].n, 2);
    }

    #[test]
    fn perturbed_complex_loses_the_central_cycle() {
        let thp = fixtures::thp();
        let cands = xi_candidates(&thp).unwrap();
        let origin = locus_at(&cands, [0, 0, 1]).expect("two spans still cross at the origin");
        assert_eq!(origin.incident_edges.len(), 2);
        let g = build_xi_graph(&thp, origin).unwrap();
        assert!(g.components.iter().all(|c| !c.is_cycle));
        assert!(cycle_ideals(&thp, origin, 1).unwrap().is_empty());

        // Cycles survive only at the three interior vertices.
        let vertex_points: Vec<[BigInt; 3]> = thp
            .interior_vertices()
            .iter()
            .map(|&v| {
                let (x, y) = (&thp.vertices[v][0], &thp.vertices[v][1]);
                normalize_triple([x.to_integer(), y.to_integer(), BigInt::one()]).unwrap()
            })
            .collect();
        let mut cycles = 0;
        for c in &cands {
            let found = cycle_ideals(&thp, c, 1).unwrap().len();
            if found > 0 {
                assert!(vertex_points.iter().any(|p| p == &c.point), "cycle away from a vertex at {c}");
            }
            cycles += found;
        }
        assert_eq!(cycles, 3);
    }

    #[test]
    fn parallel_spans_meet_at_infinity() {
        let strip = fixtures::strip3();
        let cands = xi_candidates(&strip).unwrap();
        assert_eq!(cands.len(), 1);
        let inf = &cands[0];
        assert!(inf.at_infinity());
        assert_eq!(inf.incident_edges.len(), 2);
        let g = build_xi_graph(&strip, inf).unwrap();
        assert_eq!(g.components.len(), 1);
        assert!(!g.components[0].is_cycle);
        assert_eq!(g.components[0].cells, vec![0, 1, 2]);
    }

    #[test]
    fn repeated_spans_in_a_cycle_count_once() {
        let ring = fixtures::ring4();
        let cands = xi_candidates(&ring).unwrap();
        assert_eq!(cands.len(), 1);
        let origin = &cands[0];
        assert_eq!(origin.incident_edges.len(), 4);
        let cycles = cycle_ideals(&ring, origin, 2).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].cells.len(), 4);
        assert_eq!(cycles[0].edge_rows.len(), 4);
        assert_eq!(cycles[0].distinct_forms.len(), 2);
        assert_eq!(cycles[0].n, 2);
    }

    #[test]
    fn pencil_restriction_is_exact() {
        let th = fixtures::th();
        let cands = xi_candidates(&th).unwrap();
        let origin = locus_at(&cands, [0, 0, 1]).unwrap();
        let cycles = cycle_ideals(&th, origin, 1).unwrap();
        let cyc = &cycles[0];
        assert_eq!(cyc.restricted.len(), 3);
        // Restricted forms must be pairwise independent in two variables.
        for i in 0..cyc.restricted.len() {
            for j in i + 1..cyc.restricted.len() {
                let a = &cyc.restricted[i].coeffs;
                let b = &cyc.restricted[j].coeffs;
                assert_ne!(&a[0] * &b[1], &a[1] * &b[0], "{i} {j}");
            }
        }
    }

    #[test]
    fn fabricated_triple_valence_is_rejected() {
        let th = fixtures::th();
        // Three edge rows of cell 1 declared through one point: the graph
        // construction must refuse rather than build a valence-3 vertex.
        let rows: Vec<usize> = th
            .interior_facets()
            .iter()
            .enumerate()
            .filter(|(_, f)| f.cofaces.iter().any(|&(cell, _)| cell == 1))
            .map(|(row, _)| row)
            .collect();
        assert!(rows.len() >= 3);
        let fake = XiLocus {
            point: [BigInt::from(7), BigInt::from(9), BigInt::one()],
            incident_edges: rows,
        };
        match build_xi_graph(&th, &fake) {
            Err(SplineError::Geometry(msg)) => assert!(msg.contains("at most two")),
            other => panic!("expected geometry error, got {other:?}"),
        }
    }

    #[test]
    fn loci_are_stable_under_rational_rotation() {
        let th = fixtures::th();
        // Rotate by the 3-4-5 rotation and translate by (1, 2).
        let rot = |x: &BigRational, y: &BigRational| {
            let (a, b) = (
                BigRational::new(BigInt::from(3), BigInt::from(5)),
                BigRational::new(BigInt::from(4), BigInt::from(5)),
            );
            (
                &a * x - &b * y + BigRational::one(),
                &b * x + &a * y + BigRational::from_integer(BigInt::from(2)),
            )
        };
        let verts: Vec<String> = th
            .vertices
            .iter()
            .map(|v| {
                let (x, y) = rot(&v[0], &v[1]);
                format!("[\"{x}\", \"{y}\"]")
            })
            .collect();
        let faces: Vec<String> = th
            .cells
            .iter()
            .map(|c| format!("{c:?}"))
            .collect();
        let json = format!(
            "{{\"name\":\"th-rot\",\"dim\":2,\"polyhedral\":true,\"vertices\":[{}],\"maximal_faces\":[{}]}}",
            verts.join(","),
            faces.join(",")
        );
        let rotated = crate::cellcomplex::load_complex_json(&json).unwrap();
        let a = xi_candidates(&th).unwrap();
        let b = xi_candidates(&rotated).unwrap();
        assert_eq!(a.len(), b.len());
        let rotated_points: Vec<Option<(BigRational, BigRational)>> =
            b.iter().map(|x| x.affine()).collect();
        for x in &a {
            match x.affine() {
                Some((px, py)) => {
                    let moved = rot(&px, &py);
                    assert!(
                        rotated_points.iter().flatten().any(|p| p == &(moved.clone())),
                        "missing rotated image of {x}"
                    );
                }
                None => assert!(b.iter().any(|y| y.at_infinity())),
            }
        }
        // Cycle structure carries over: the rotated central point still
        // has a triangle cycle with three distinct forms.
        let (ox, oy) = rot(&BigRational::zero(), &BigRational::zero());
        let center = b
            .iter()
            .find(|x| x.affine().map(|p| p == (ox.clone(), oy.clone())).unwrap_or(false))
            .expect("rotated center");
        let cycles = cycle_ideals(&rotated, center, 1).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].n, 3);
    }
}
