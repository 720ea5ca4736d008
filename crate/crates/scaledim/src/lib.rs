//! Workbench for finite rational-valued function classes: scale-sensitive
//! combinatorial dimensions, one-inclusion-graph prediction with ternary
//! don't-care labels and threshold aggregation, exact l1 packing and proper
//! covering, explicit sample-size bound evaluators, and seeded simulation
//! harnesses that measure how tightly the implemented strategies meet the
//! bounds they are sold with.
//!
//! Everything that decides a branch is exact rational arithmetic on a shared
//! value grid; floats appear only in log-domain bound evaluation and Monte
//! Carlo standard errors. All searches are deterministic: ties break
//! lexicographically and randomized experiments are reproducible from
//! (seed, trial index) alone.

pub mod bounds;
pub mod class;
pub mod cli;
pub mod dims;
pub mod error;
pub mod generators;
pub mod guard;
pub mod packing;
pub mod predict;
pub mod simulate;
pub mod value;
pub mod verify;

pub use class::{
    l1, psi, psi_class, quantize, restrict, DiscreteDistribution, FunctionClass, JointSample,
    LabeledSample, Ternary, TernaryClass,
};
pub use error::{Error, Result};
pub use value::{parse_rat, rat, Rat, Value};
