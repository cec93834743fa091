//! Finite racks and quandles, their generalized rack polynomials, and the
//! rack counting invariants of framed links enhanced by subrack polynomials.
//!
//! Elements are labelled `1..=n` throughout the public API and the text
//! formats.
//!
//! ```
//! use rackkit::{rack_polynomial, RackTable};
//!
//! let t: RackTable = "3\n2 2 2\n1 1 1\n3 3 3".parse()?;
//! assert_eq!(rack_polynomial(&t, 1, 1)?.to_string(), "2*t + s^3*t");
//! # Ok::<(), rackkit::Error>(())
//! ```

pub mod coloring;
pub mod diagram;
pub mod error;
pub mod gen;
pub mod invariant;
pub mod iso;
pub mod perm;
pub mod poly;
pub mod props;
pub mod quotient;
pub mod rack;
pub mod rackpoly;

pub use coloring::{enumerate_colorings, image_subrack, is_coloring, Coloring};
pub use diagram::{components_and_writhe, Crossing, LinkDiagram};
pub use error::{Error, Result};
pub use gen::{alexander, constant_action, ts_rack};
pub use invariant::{
    enhanced_invariant, framed_colorings, rack_counting, EnhancedInvariant, FramedColoring,
    FramingVector, RackCount,
};
pub use iso::{
    complete_scan_bound, is_homomorphism, isomorphic, rp_family_scan,
    verify_constant_action_classification, ClassificationReport, IsoResult, ScanReport,
};
pub use perm::{CycleType, Permutation};
pub use poly::TwoVarPoly;
pub use props::{properties_report, validate_rack, AxiomViolation, PropertyReport};
pub use quotient::{operator_equivalence_quotient, quotient_by, OperatorQuotient, Partition};
pub use rack::RackTable;
pub use rackpoly::{
    closure, enumerate_subracks, exponent_profile, rack_polynomial, rack_polynomial_with,
    subrack_polynomial, subrack_polynomial_with, ExponentProfile, IndexConvention, RackPolynomials,
    Subset,
};
