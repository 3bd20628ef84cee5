//! File formats, verification reports and the command-line front end for
//! [`vwlab_core`].

pub mod cli;
pub mod formats;
pub mod paperlab;
