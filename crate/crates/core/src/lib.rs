//! Exact-arithmetic engine for dimensions, Hilbert functions and homological
//! invariants of piecewise polynomial (spline) spaces on embedded simplicial
//! and polyhedral complexes.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`]: sparse fraction-free elimination over the rationals.
//! * [`polyring`]: sparse multivariate polynomials, graded pieces, series.
//! * [`cellcomplex`]: embedded complexes, boundary matrices, facet forms.
//! * [`splinemod`]: the graded presentation of the spline module and the
//!   degree-by-degree dimension oracle.
//! * [`chainhomology`]: quotient chain complexes on interior faces and their
//!   homology.
//! * [`geomprimes`]: codimension-two loci, their dual graphs and cycles.
//! * [`closedforms`]: closed dimension formulas and the planar Hilbert
//!   polynomial with per-cycle corrections.
//! * [`invsys`]: Macaulay inverse systems and fatpoint Hilbert functions.
//! * [`fixtures`]: bundled example complexes.
//! * [`goldens`]: the end-to-end verification suites.

pub mod error;
pub mod linalg;
pub mod polyring;
pub mod cellcomplex;
pub mod splinemod;
pub mod chainhomology;
pub mod geomprimes;
pub mod closedforms;
pub mod invsys;
pub mod fixtures;
pub mod goldens;

pub use error::{Result, SplineError};

/// Caps the global worker pool used for degree sweeps. Returns false when
/// the pool was already initialised, in which case the earlier cap stays.
pub fn set_thread_cap(threads: usize) -> bool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build_global()
        .is_ok()
}
