//! Wavefront-set relations on flat 3+1 spacetime, signature `(+,-,-,-)`.
//!
//! Relation points are stored in the primed convention `(x, y, k_x, k_y)`
//! with `k_y` sign-flipped relative to the wavefront set, so that the relation
//! of a composed kernel is the plain composition of relations and the delta
//! kernel is the identity `k_y = k_x`.

pub mod compose;
pub mod geometry;
pub mod io;
pub mod relation;
pub mod sample;

pub use compose::{compose_check, CompositionReport, Violation};
pub use geometry::{eta, future_directed, in_causal_future, in_causal_past, is_null, sharp, Vec4, METRIC};
pub use io::{samples_from_csv, samples_to_csv, SampleIoError};
pub use relation::{classify_wf_point, geodesic_related, CotangentPoint, Relation, WfPoint, DEFAULT_TOL};
