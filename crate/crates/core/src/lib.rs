//! Exact constructions and verification tools for injective morphisms from
//! products of projective spaces and weighted projective spaces into small
//! projective spaces.
//!
//! The algebra layer ([`exactalg`]) is generic over a [`Field`]; the rest of
//! the crate mostly works over ℚ through the aliases below.

pub mod constructions;
pub mod error;
pub mod exactalg;
pub mod graphgadget;
pub mod modp;
pub mod morphism;
pub mod rng;
pub mod sepinv;
pub mod spaces;
pub mod suite;
pub mod tensors;

pub use error::{Error, Result};
pub use exactalg::binary::BinaryForm;
pub use exactalg::linalg::Matrix;
pub use exactalg::poly::{ExponentVector, Polynomial};
pub use exactalg::scalar::{Field, Fp};
pub use exactalg::univariate::UniPoly;
pub use spaces::{ProjectivePoint, SpaceDescriptor};

/// Arbitrary-precision rationals.
pub type Q = num_rational::BigRational;
pub type QPoly = Polynomial<Q>;
pub type QMatrix = Matrix<Q>;
pub type QBinaryForm = BinaryForm<Q>;
pub type QUniPoly = UniPoly<Q>;
pub type QPoint = ProjectivePoint<Q>;

/// Shorthand for an integer-valued rational.
pub fn qi(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// Shorthand for `n/d`.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}
