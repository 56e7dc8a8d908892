//! Split graphs built from combinatorial block designs, their exact adjacency
//! spectra, and a classifier for connected bidegreed split graphs of diameter
//! three with exactly four distinct eigenvalues.

#![allow(clippy::needless_range_loop)]

pub mod binary;
pub mod classify;
pub mod design;
pub mod graph;
pub mod input;
pub mod linalg;
pub mod report;
pub mod spectral;
