//! Cover numbers: bounds, the size-by-size search, and the census of
//! distinct optimal covers.

mod bounds;
mod report;
mod solve;

pub use bounds::{lower_bound, upper_bound};
pub use report::{Bounds, CoverNumberReport, GraphSummary, WitnessReport};
pub use solve::{cover_number, distinct_optimal_covers, Budgets, DriverOptions, Mode, Witness};
