//! Exact computations for the enumerative geometry of lines in `P^3`.
//!
//! Coefficients live in [`Rationals`] or a [`PrimeField`]; polynomials in
//! [`PolyRing`]. Lines carry primal and dual Plücker coordinates
//! ([`LineP3`]). On top of that sit Chow and Hurwitz forms
//! ([`chowforms`]), the Chow ring of the Grassmannian ([`schubert`]),
//! closed-form counts ([`formulas`]), a Gröbner engine ([`solver`]) and
//! brute-force counting [`oracles`].

pub mod chowforms;
pub mod error;
pub mod field;
pub mod formulas;
pub mod linalg;
pub mod linegeom;
pub mod oracles;
pub mod poly;
pub mod rng;
pub mod schubert;
pub mod solver;

pub use chowforms::{ContactClass, ContactKind, HurwitzProfile, RationalSpaceCurve, SecantClass, SurfaceP3};
pub use error::{Error, Result};
pub use field::{Field, Fp, PrimeField, Rationals, Ring, DEFAULT_PRIME};
pub use formulas::{CurveData, PlaneCurveSing};
pub use linegeom::{LineP3, ProjPlane3, ProjPoint3};
pub use oracles::{OracleReport, PlaneParametrization};
pub use poly::{BinaryForm, Monomial, MultiPoly, MultiplicityProfile, PolyRing, UniPoly};
pub use rng::{GenericRng, DEFAULT_SEED};
pub use schubert::{Bidegree, SchubertClass};
pub use solver::{GroebnerBasis, MonomialOrder, QuotientDim};
