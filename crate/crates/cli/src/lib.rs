//! Library half of the `semiflat` command-line workbench.
//!
//! The binary is a thin argument parser over three pieces that live here so
//! integration tests can drive them in-process:
//!
//! * [`config`] — the JSON workspace format: named semirings, semimodule
//!   constructions, morphisms, caps, and a list of analyses to run.
//! * [`runner`] — executes a workspace into a report, one entry per
//!   analysis, without letting one failure abort the batch.
//! * [`repro`] — the bundled reproduction suite of known results, rendered
//!   as a claim -> verdict table by `semiflat reproduce-paper`.
//! * [`report`] — the report model and its text/structured renderings,
//!   byte-identical across runs and parallelism settings.

pub mod config;
pub mod report;
pub mod repro;
pub mod runner;
