//! crlab — a desk-scale computational laboratory for the boundary
//! asymptotics of Szegő and Bergman kernels on model strictly
//! pseudoconvex domains.
//!
//! The crate has three layers:
//!
//! * exact algebra: [`microexpand`] (singular Φ-expansions),
//!   [`symbolcalc`] (truncated microdifferential symbols) and
//!   [`pseudoherm`] (pseudohermitian curvature calculus on S³), all over
//!   exact rational scalars;
//! * numerics: [`kernels`] (reproducing-kernel diagonals of Reinhardt
//!   domains and disk bundles by orthonormal summation), [`asymfit`]
//!   (extraction of singular-expansion coefficients, in particular the
//!   `ε⁰·log ε` coefficient) and [`volumes`] (Bergman volume expansions
//!   and the end-to-end log-invariant pipeline);
//! * orchestration: [`profile_expr`], [`manifest`], [`report`] and [`cli`]
//!   behind the `crlab` binary.
//!
//! Each major capability has a runnable example under `examples/`.

pub mod asymfit;
pub mod cli;
pub mod diskbundle;
pub mod kernels;
pub mod manifest;
pub mod microexpand;
pub mod profile_expr;
pub mod pseudoherm;
pub mod quad;
pub mod report;
pub mod scalar;
pub mod symbolcalc;
pub mod volumes;
