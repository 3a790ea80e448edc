//! Shared numerical substrate: quadrature, finite differences, and
//! reproducible random streams.

mod diff;
mod quadrature;
mod stream;

pub use diff::{central_difference, default_step};
pub use quadrature::{integrate, QuadratureRule, QuadratureSpec};
pub use stream::RandomStream;
