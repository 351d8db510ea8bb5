//! Chevalley-basis Lie algebras over GF(2) and the classification of nilpotent
//! elements admitting `[h,e] = e`, an `s`-overalgebra, a `pgl2`-triple or an
//! `sl2`-triple.

pub mod chevalley;
pub mod error;
pub mod exceptional;
pub mod gf2;
pub mod gf4;
pub mod overalg;
pub mod rootdata;
pub mod salg;
pub mod specs;
pub mod sweep;
pub mod theorems;

pub use error::{Error, Result};
