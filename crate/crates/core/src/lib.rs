//! Exact plethysm coefficients, Littlewood–Richardson coefficients and the
//! stability sequences obtained by growing both plethysm indices together.
//!
//! Start from [`Engine`], which owns the memo tables shared by every
//! computation. Partition utilities live in [`partition`], the
//! Littlewood–Richardson rule in [`lr`], the plethysm machinery in
//! [`plethysm`], an independent brute-force check in [`oracle`], and the
//! sequence experiments in [`stability`]. The command-line harness is
//! built on [`cli`].

pub mod character;
pub mod cli;
pub mod engine;
pub mod error;
pub mod expansion;
pub mod lr;
pub mod oracle;
pub mod partition;
pub mod plethysm;
pub mod stability;
mod truncated;

pub use engine::Engine;
pub use error::{Error, Result};
pub use expansion::{PowerSumExpansion, SchurExpansion};
pub use lr::{is_good_sequence, lr_coefficient, lr_fillings, skew_schur_expansion, LrFilling};
pub use oracle::plethysm_oracle;
pub use partition::{partitions_of, Partition, SkewShape};
pub use plethysm::{involution_map, powersum_plethysm};
pub use stability::{
    detect_stabilization, IdentityCheck, Monotonicity, RecurrenceMode, ScanBounds, ScanReport, SequenceReport,
    SequenceSpec,
};

/// Version tag stamped on every emitted record.
pub const ENGINE_VERSION: &str = concat!("plethysm-core/", env!("CARGO_PKG_VERSION"));
