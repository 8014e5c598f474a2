//! Optimal (minimal Hamming weight) representations of Gaussian integers in
//! base `i - 1` and Eisenstein integers in base `w - 1`.
//!
//! * [`ring`]: exact arithmetic and the digit sets;
//! * [`repr`]: digit strings and their block decomposition;
//! * [`naf`]: W-NAF extraction and the recoding transducer;
//! * [`optgraph`]: the optimal-path graph, enumeration and sampling;
//! * [`count`]: counting machinery and extremal sequences;
//! * [`extremal`]: the strings that attain the maximal counts.

pub mod count;
pub mod error;
pub mod extremal;
pub mod naf;
pub mod optgraph;
pub mod repr;
pub mod ring;

pub use count::{
    build_matrices, efficiency_ratio, frequency_table, max_optimal_bounded, optimal_count, r_count, r_seq,
    s_seq, t_vector, MatrixFamily,
};
pub use error::{Error, Result};
pub use extremal::{attainers, extremal_string, unit_orbit, verify_extremal, Variant};
pub use naf::{wnaf, Transducer, TransducerEdge};
pub use optgraph::{
    build_full_graph, condense, enumerate_optimal, restrict_optimal, sample_optimal, CondensedGraph,
    Enumeration, GraphKind, LabeledGraph, Sampler,
};
pub use repr::{Block, BlockString, DigitString};
pub use ring::{Digit, RingElem, System};
