//! Verification suite, benchmark harness and structured output for the
//! generalized Pell toolkit. The `pellsum` binary is a thin dispatcher over
//! these modules.

pub mod bench;
pub mod output;
pub mod verify;
