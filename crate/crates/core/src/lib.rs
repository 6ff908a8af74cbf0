//! Synthesis of single-UB C programs and differential testing of sanitizers.

pub mod harness;
pub mod lang;
pub mod matching;
pub mod minivm;
pub mod oracle;
pub mod profile;
pub mod seedgen;
pub mod synth;
pub mod toolchain;
