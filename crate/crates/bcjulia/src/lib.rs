//! Bicomplex arithmetic and Julia set generation.
//!
//! The crate provides exact-semantics bicomplex arithmetic with its
//! idempotent decomposition, classical and bicomplex dynamics of
//! `P_c(w) = w^2 + c` (forward iteration, fixed points, inverse iteration),
//! a boundary builder that assembles bicomplex Julia sets from cartesian
//! pieces, and an epsilon-cut slicer with CSV/PLY/XYZ exporters.

pub mod bicomplex;
pub mod bicomplex_dynamics;
pub mod boundary;
pub mod cloud;
pub mod dynamics;
pub mod error;
pub mod export;
pub mod manifest;
pub mod slice;

pub use bicomplex::{ball_contains, Bicomplex, Complex, Discus, IdempotentPair};
pub use bicomplex_dynamics::{
    bc_fixed_points, bc_inverse_step, dendrite_heuristic, iim_bicomplex, iterate_forward_bc,
    seed_in_jxj, BicomplexFixedPoint, BicomplexParam, DendriteVerdict, ForwardRoute,
};
pub use boundary::{build_julia_boundary, build_theorem33_boundary, cartesian_combine};
pub use cloud::{CloudStats, PointCloud4D, Tag, TaggedPoint};
pub use dynamics::{
    choose_seed_point, filled_julia_contains, fixed_points, iim, inverse_step, iterate_forward,
    sample_filled_julia, Classification, FixedPointInfo, GridSpec, IimConfig, IimMode,
};
pub use error::Error;
pub use slice::{slice3d, Axis, SliceSpec, SlicedPoint};
