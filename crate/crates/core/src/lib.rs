//! Spin-image shape descriptors generated through a master-worker runtime
//! with interchangeable loop schedulers.
//!
//! The crate is organized around the pipeline stages:
//!
//! - [`geometry`]: oriented point clouds, file loaders, and synthetic
//!   generators
//! - [`spinimage`]: the projection, binning, and accumulation math, plus the
//!   sequential reference path
//! - [`scheduling`]: chunk calculators for the `static`, `ss`, `gss`, and
//!   `fac` techniques
//! - [`runtime`]: the master-worker execution model over in-process channels
//!   or TCP, with per-worker slowdown emulation
//! - [`bench`]: weak/strong scaling experiments, load-balance metrics, and
//!   CSV/JSON reports

pub mod bench;
pub mod error;
pub mod geometry;
pub mod runtime;
pub mod scheduling;
pub mod spinimage;

pub use error::Error;
pub use geometry::{load_point_cloud, synth_cloud, CloudFormat, OrientedPoint, PointCloud, SynthKind};
pub use runtime::{run_distributed, run_local, run_worker, RunReport, RuntimeOptions, WorkerConfig, WorkerId};
pub use scheduling::{chunk_sequence, Scheduler, SchedulerKind};
pub use spinimage::{generate_all_sequential, generate_range, generate_spin_image, SpinImage, SpinImageParams};

/// A `Result` specialized to this crate's [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
