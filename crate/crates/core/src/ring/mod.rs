//! Exact Laurent polynomials over the rationals.
//!
//! Everything here works with arbitrary-precision rational coefficients.
//! Alexander polynomials are only defined up to units `q * t^k`, so the
//! module also provides a canonical representative of each associate class
//! ([`UnitNormalForm`]) which turns "equal up to units" into `==`.

mod cyclotomic;
mod laurent;
mod multi;
mod text;
mod univariate;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicFactorization};
pub use laurent::LaurentPoly;
pub use multi::MultiLaurentPoly;
pub(crate) use univariate::divrem as dense_divrem;

/// Reduced fraction of arbitrary-precision integers with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("multiplicity is undefined for a unit or zero factor")]
    DegenerateFactor,
    #[error("cannot parse polynomial at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Largest power of a factor dividing a polynomial.
///
/// The zero polynomial is divisible by every power, which is reported as
/// `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Multiplicity {
    Finite(u32),
    Infinite,
}

impl Multiplicity {
    pub fn finite(self) -> Option<u32> {
        match self {
            Multiplicity::Finite(k) => Some(k),
            Multiplicity::Infinite => None,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(k) => write!(f, "{k}"),
            Multiplicity::Infinite => f.write_str("infinity"),
        }
    }
}

/// Canonical associate of a Laurent polynomial.
///
/// Integer coefficients with content 1, every variable has minimum exponent
/// 0, and the leading coefficient in graded-lex order (`t0 < t1 < ...`) is
/// positive. Zero normalizes to itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitNormalForm<P>(P);

impl<P> UnitNormalForm<P> {
    pub fn as_poly(&self) -> &P {
        &self.0
    }

    pub fn into_poly(self) -> P {
        self.0
    }

    pub(crate) fn new_unchecked(p: P) -> Self {
        UnitNormalForm(p)
    }
}

impl<P: fmt::Display> fmt::Display for UnitNormalForm<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<P> std::ops::Deref for UnitNormalForm<P> {
    type Target = P;
    fn deref(&self) -> &P {
        &self.0
    }
}

/// Scalar that turns a coefficient list into a primitive integer vector.
///
/// For reduced fractions the content is `gcd(numerators) / lcm(denominators)`.
pub(crate) fn primitive_multiplier<'a>(coeffs: impl Iterator<Item = &'a Rational>) -> Rational {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for c in coeffs {
        den_lcm = den_lcm.lcm(c.denom());
        num_gcd = num_gcd.gcd(c.numer());
    }
    if num_gcd.is_zero() {
        return Rational::one();
    }
    Rational::new(den_lcm, num_gcd.abs())
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
