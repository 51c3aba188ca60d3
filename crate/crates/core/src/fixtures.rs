//! Bundled example complexes used by tests, verification suites and the
//! command line `goldens` subcommand.
//!
//! Planar simplicial: `fexm` (a fan of four triangles around the origin),
//! `crisscross` (four triangles, two diagonal lines), `star3` and `star6`
//! (stars with three distinct slopes), `grid` (a 3 x 3 triangulated square
//! with one interior vertex), `onetri`. Planar polyhedral: `th` (three
//! quadrilaterals around a central triangle), `thp` (the same with one
//! outer vertex moved to break symmetry), `strip3` (a row of three unit
//! squares), `ring4` (a square annulus). Three-dimensional simplicial:
//! `octahedron` (eight tetrahedra around the origin), `fourtet`, `twotet`,
//! `onetet`.

use crate::cellcomplex::{load_complex_json, EmbeddedComplex};

macro_rules! fixture {
    ($fn_name:ident, $const_name:ident, $file:literal) => {
        pub const $const_name: &str =
            include_str!(concat!("../../../fixtures/", $file, ".json"));

        pub fn $fn_name() -> EmbeddedComplex {
            load_complex_json($const_name).expect(concat!("bundled fixture ", $file))
        }
    };
}

fixture!(fexm, FEXM_JSON, "fexm");
fixture!(crisscross, CRISSCROSS_JSON, "crisscross");
fixture!(star3, STAR3_JSON, "star3");
fixture!(star6, STAR6_JSON, "star6");
fixture!(grid, GRID_JSON, "grid");
fixture!(onetri, ONETRI_JSON, "onetri");
fixture!(th, TH_JSON, "th");
fixture!(thp, THP_JSON, "thp");
fixture!(strip3, STRIP3_JSON, "strip3");
fixture!(ring4, RING4_JSON, "ring4");
fixture!(octahedron, OCTAHEDRON_JSON, "octahedron");
fixture!(fourtet, FOURTET_JSON, "fourtet");
fixture!(twotet, TWOTET_JSON, "twotet");
fixture!(onetet, ONETET_JSON, "onetet");

/// Every bundled complex, with its name.
pub fn all() -> Vec<(&'static str, EmbeddedComplex)> {
    vec![
        ("fexm", fexm()),
        ("crisscross", crisscross()),
        ("star3", star3()),
        ("star6", star6()),
        ("grid", grid()),
        ("onetri", onetri()),
        ("th", th()),
        ("thp", thp()),
        ("strip3", strip3()),
        ("ring4", ring4()),
        ("octahedron", octahedron()),
        ("fourtet", fourtet()),
        ("twotet", twotet()),
        ("onetet", onetet()),
    ]
}

/// Planar simplicial fixtures.
pub fn planar_simplicial() -> Vec<(&'static str, EmbeddedComplex)> {
    vec![
        ("fexm", fexm()),
        ("crisscross", crisscross()),
        ("star3", star3()),
        ("star6", star6()),
        ("grid", grid()),
    ]
}

/// Fixtures that are stars of a single interior vertex.
pub fn stars() -> Vec<(&'static str, EmbeddedComplex)> {
    vec![
        ("crisscross", crisscross()),
        ("star3", star3()),
        ("star6", star6()),
        ("fexm", fexm()),
    ]
}

/// Fixture source text by name, for the command line front end.
pub fn by_name(name: &str) -> Option<&'static str> {
    match name {
        "fexm" => Some(FEXM_JSON),
        "crisscross" => Some(CRISSCROSS_JSON),
        "star3" => Some(STAR3_JSON),
        "star6" => Some(STAR6_JSON),
        "grid" => Some(GRID_JSON),
        "onetri" => Some(ONETRI_JSON),
        "th" => Some(TH_JSON),
        "thp" => Some(THP_JSON),
        "strip3" => Some(STRIP3_JSON),
        "ring4" => Some(RING4_JSON),
        "octahedron" => Some(OCTAHEDRON_JSON),
        "fourtet" => Some(FOURTET_JSON),
        "twotet" => Some(TWOTET_JSON),
        "onetet" => Some(ONETET_JSON),
        _ => None,
    }
}
