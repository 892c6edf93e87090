//! Java source analysis, design-pattern detection and summary generation.

pub mod graph;
pub mod ir;
pub mod java;
pub mod patterns;
pub mod pipeline;
pub mod summary;
