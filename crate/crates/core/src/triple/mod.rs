//! Geodesibility of systems of two or three paths, and a machine check of
//! the three-path case analysis by linear programming.

mod config;
mod system;

pub use config::{
    check_admissible, config_dot, config_to_graph, diff_paper, enumerate_group, group_configs,
    AtlasRow, TripleConfig, GROUP1, GROUP1_ADMISSIBLE, GROUP1_ADMISSIBLE_IDENTIFIED,
    GROUP2_ADMISSIBLE, GROUP2_ROWS,
};
pub use system::{
    classify_three, compatible_orientation_two, construct_metric_two, orders_agree,
    partial_order_weighting, OrientedPathSystem, Realization, Verdict,
};
