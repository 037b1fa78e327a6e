//! Exact-arithmetic invariants of knots and boundary links: Alexander
//! modules, Blanchfield and Conway pairings, torsion decompositions, and
//! algebraic-genus bounds, all computed over Λ = Z[t, t⁻¹] without floating
//! point or modular shortcuts.
//!
//! The crate is organised bottom-up:
//!
//! * [`laurent`] — the ring Λ, its involution, and unit normalization;
//! * [`fraction`] — Q(t), the localization Λ_S = Z[t, t⁻¹, (t−1)⁻¹], and
//!   residue classes in Q(t)/Λ and Q(t)/Λ_S;
//! * [`matrix`] — dense matrices over Λ, exact determinants, and integer
//!   signatures;
//! * [`seifert`] — Seifert matrices of knots and block Seifert systems of
//!   boundary links, with the explicit Whitehead-double and parallel-copy
//!   constructions;
//! * [`alexander`] — Alexander polynomials and torsion decompositions of
//!   presented modules;
//! * [`blanchfield`] — the presented Blanchfield pairing, the localized
//!   linking form, and certificate checking;
//! * [`genus`] — search for algebraic-genus witnesses and Hermitian
//!   presentations.

// index-heavy matrix kernels read better with explicit loops
#![allow(clippy::needless_range_loop)]

pub mod alexander;
pub mod blanchfield;
pub mod error;
pub mod fraction;
pub mod genus;
pub mod laurent;
pub mod lattice;
pub mod matrix;
pub mod seifert;

pub use alexander::{
    alexander_polynomial, is_torsion_free, ln_family_module, presentation, torsion_decomposition,
    PresentedModule, SliceVerdict, TorsionDecomposition,
};
pub use blanchfield::{
    build_h, conway_pair, verify_certificate, CertificateReport, HermitianPresentation,
};
pub use error::{Error, Result};
pub use fraction::{Ambient, Fraction, ResidueClass};
pub use genus::{
    algebraic_genus, find_hermitian_presentation, shake_genus, z_genus_knot, z_genus_link,
    GenusReport, SearchBudget, ShakeGenusReport,
};
pub use laurent::{LaurentPoly, UnitNormalization};
pub use matrix::{IntMatrix, IntSymMatrix, LambdaMatrix};
pub use seifert::{
    internal_band_sum, parallel_link, random_boundary_system, random_seifert, whitehead_double_2,
    whitehead_double_3, BoundarySeifertSystem, KnotSeifert, OrientationVector,
};
