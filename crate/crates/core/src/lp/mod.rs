//! The realizability linear program: is there a positive weighting of the
//! segments under which every path of a cover is a shortest path?

mod program;
mod simplex;

pub use program::{
    build_feasibility_program, check_fixed_weights, cover_feasibility, paths_feasibility,
    program_for_paths, LpProgram,
};
pub use simplex::{
    solve_feasibility, solve_feasibility_with_budget, FeasibilityResult, DEFAULT_PIVOT_BUDGET,
};
