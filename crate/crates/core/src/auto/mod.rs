//! Plane polynomial maps, their structured subgroups, and named generators.

mod elem;
mod generators;
mod plane;

pub use elem::{AffineAuto, ElemAuto};
pub use generators::{g_n_element, named_generator, tau_delta, GnElem, Named};
pub use plane::{Flags, PlaneAuto};
