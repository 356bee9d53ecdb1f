//! Fractal-dimension checks by box counting.

pub mod cells;
pub mod dimension;
pub mod levelset;

pub use cells::{
    box_dimension, box_dimension_with, cell_counts, count_cells, distinct_sum_counts, DigitSet,
    DimensionEstimate,
};
pub use dimension::{eggleston_dimension, golden_dimension, log3_2, similarity_root_013, target_dimension};
pub use levelset::{
    hex_digit, level_function, level_set, levelset_dimension_10, quaternary_digits,
    quaternary_to_delta, LevelMembers, LevelSet,
};
