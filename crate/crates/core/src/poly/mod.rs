//! Polynomials over exact fields.

mod binary;
mod monomial;
mod multi;
mod parse;
mod profile;
mod resultant;
mod univariate;

pub use binary::{BinaryForm, BinarySquarefree};
pub use monomial::Monomial;
pub(crate) use monomial::grevlex_cmp;
pub use multi::{hessian3, MultiPoly, PolyRing};
pub use parse::parse_poly;
pub use profile::MultiplicityProfile;
pub use resultant::{det_bareiss, sylvester_matrix, sylvester_resultant};
pub use univariate::{UniPoly, UniSquarefree};

use crate::error::Result;
use crate::field::{Field, Ring};

/// Sylvester resultant of two binary forms of their declared degrees.
pub fn resultant_binary<R: Ring>(f: &BinaryForm<R>, g: &BinaryForm<R>) -> Result<R::Elem> {
    f.resultant(g)
}

/// Monic gcd of two univariate polynomials.
pub fn gcd_univ<F: Field>(f: &UniPoly<F>, g: &UniPoly<F>) -> UniPoly<F> {
    f.gcd(g)
}
