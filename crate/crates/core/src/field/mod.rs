//! Exact arithmetic in `GF(2)[u, v]`, in `L = GF(2)(u, v)` and in the
//! subfield `F = GF(2)(u^2, v^2)`, plus coordinates of `L` over `F`.
//!
//! `[L : F] = 4` and every square of `L` lies in `F`, so `L / F` is a purely
//! inseparable extension of degree four.

mod basis;
mod echelon;
mod elem;
mod modgcd;
mod parse;
mod poly;
mod random;
pub(crate) mod upoly;

pub use basis::{is_in_f, is_in_intermediate, standard_coords, standard_recompose, BasisL, FCoords};
pub use elem::{FElem, LElem};
pub use parse::{parse_elem, parse_poly};
pub use poly::BivarPolyGF2;
pub use random::{random_basis, random_elem, random_f_elem, random_nonzero_elem, random_outside_f};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an element of F")]
    NotInF(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("generator {0} lies in F")]
    GeneratorInF(String),
    #[error("cannot parse {input:?} at byte {pos}: {msg}")]
    Parse { input: String, pos: usize, msg: String },
}

// Free-function forms of the operator methods.

pub fn l_add(x: &LElem, y: &LElem) -> LElem {
    x + y
}

pub fn l_mul(x: &LElem, y: &LElem) -> LElem {
    x * y
}

pub fn l_inv(x: &LElem) -> Result<LElem, FieldError> {
    x.try_inv()
}

pub fn square(x: &LElem) -> FElem {
    x.square()
}

pub fn poly_mul(a: &BivarPolyGF2, b: &BivarPolyGF2) -> BivarPolyGF2 {
    a.mul(b)
}

pub fn poly_gcd(a: &BivarPolyGF2, b: &BivarPolyGF2) -> BivarPolyGF2 {
    a.gcd(b)
}
