//! Counting optimal representations.
//!
//! * [`r_count`]: the digit-by-digit recursion, a brute-force oracle;
//! * [`MatrixFamily`] and [`optimal_count`]: the linear representation built
//!   from G̃;
//! * [`r_seq`], [`s_seq`], [`t_vector`]: the extremal sequences;
//! * [`max_optimal_bounded`]: exhaustive maximum over bounded W-NAFs;
//! * [`frequency_table`], [`efficiency_ratio`]: digit densities.

mod frequency;
mod matrix;
mod recursion;
mod search;
mod seq;

pub use frequency::{efficiency_ratio, frequency_table, FrequencyRow, EFFICIENCY_FORMULA};
pub use matrix::{build_matrices, matrices, optimal_count, t_vector, Matrix, MatrixFamily};
pub use recursion::{r_count, RCounter};
pub use search::{max_optimal_bounded, MaxSearch, DEFAULT_GAP_BOUND};
pub use seq::{r_seq, s_seq, GROWTH_RATE};
