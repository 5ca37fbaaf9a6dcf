use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::univariate::{self, Dense};
use super::{int, primitive_multiplier, Multiplicity, Rational, RingError, UnitNormalForm};

/// Element of `Q[t, t^-1]`, stored sparsely by exponent.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `1 - t`.
    pub fn one_minus_t() -> Self {
        Self::from_coeffs(0, &[1, -1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exponent: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { terms }
    }

    /// `sum_i coeffs[i] * t^(low + i)` with integer coefficients.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (low + i as i64, int(c))))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: map }
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: i64) -> Self {
        Self::from_terms([(n, Rational::one()), (0, -Rational::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Units of `Q[t, t^-1]` are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> Rational {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Width of the exponent range; this is the degree of the normal form.
    pub fn span(&self) -> Option<u64> {
        Some((self.max_exponent()? - self.min_exponent()?) as u64)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect() }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces `t` by `t^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e - 1, c * Rational::from_integer(e.into()))))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    pub(crate) fn to_dense(&self) -> (i64, Dense) {
        let Some(low) = self.min_exponent() else {
            return (0, Vec::new());
        };
        let high = self.max_exponent().unwrap();
        let mut v = vec![Rational::zero(); (high - low + 1) as usize];
        for (&e, c) in &self.terms {
            v[(e - low) as usize] = c.clone();
        }
        (low, v)
    }

    pub(crate) fn from_dense(low: i64, coeffs: &Dense) -> Self {
        LaurentPoly {
            terms: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (low + i as i64, c.clone()))
                .collect(),
        }
    }

    pub fn normalize(&self) -> UnitNormalForm<LaurentPoly> {
        let Some(low) = self.min_exponent() else {
            return UnitNormalForm::new_unchecked(Self::zero());
        };
        let mut m = primitive_multiplier(self.terms.values());
        if self.terms.values().next_back().unwrap().is_negative() {
            m = -m;
        }
        UnitNormalForm::new_unchecked(self.shift(-low).scale(&m))
    }

    pub fn is_normalized(&self) -> bool {
        self.normalize().as_poly() == self
    }

    pub fn gcd(&self, other: &Self) -> UnitNormalForm<LaurentPoly> {
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        LaurentPoly::from_dense(0, &univariate::gcd(&a, &b)).normalize()
    }

    /// The quotient `self / divisor` in `Q[t, t^-1]` when it exists.
    ///
    /// `0 / 0` is `Some(0)`; anything nonzero divided by zero is `None`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_zero() {
            return None;
        }
        let (la, a) = self.to_dense();
        let (lb, b) = divisor.to_dense();
        let (q, r) = univariate::divrem(&a, &b);
        r.is_empty().then(|| Self::from_dense(la - lb, &q))
    }

    /// True iff `other = self * c` for some Laurent polynomial `c`.
    pub fn divides(&self, other: &Self) -> bool {
        other.exact_div(self).is_some()
    }

    /// Largest `k` with `factor^k | self`.
    pub fn multiplicity(&self, factor: &Self) -> Result<Multiplicity, RingError> {
        if factor.is_zero() || factor.is_unit() {
            return Err(RingError::DegenerateFactor);
        }
        if self.is_zero() {
            return Ok(Multiplicity::Infinite);
        }
        let mut k = 0;
        let mut rest = self.clone();
        while let Some(q) = rest.exact_div(factor) {
            rest = q;
            k += 1;
        }
        Ok(Multiplicity::Finite(k))
    }

    /// Largest `k` with `(1 - t)^k | self`, infinite for zero.
    pub fn multiplicity_of_one_minus_t(&self) -> Multiplicity {
        self.multiplicity(&Self::one_minus_t()).expect("1 - t is a non-unit")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(&e, c)| {
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            (c, mono)
        });
        super::text::write_terms(f, terms)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = RingError;

    /// Parses the one-variable text format, e.g. `t^-1 - 1 + t`.
    fn from_str(s: &str) -> Result<Self, RingError> {
        super::text::parse_univariate(s)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let entry = terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let (la, a) = self.to_dense();
        let (lb, b) = rhs.to_dense();
        LaurentPoly::from_dense(la + lb, &univariate::mul(&a, &b))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_identities() {
        assert_eq!(p("t - 1") * p("t + 1"), p("t^2 - 1"));
        assert_eq!(&p("t^3 - 2/3*t") + &LaurentPoly::zero(), p("t^3 - 2/3*t"));
        assert!((p("t") - p("t")).is_zero());
    }

    #[test]
    fn derivative_examples() {
        let p: LaurentPoly = "t^3 - 2*t + 5 + t^-2".parse().unwrap();
        assert_eq!(p.derivative(), "3*t^2 - 2 - 2*t^-3".parse().unwrap());
        assert!(LaurentPoly::constant(Rational::from_integer(4.into())).derivative().is_zero());
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(p("3/2*t^-1 - 3/2 + 3/2*t").normalize().as_poly(), &p("t^2 - t + 1"));
        assert_eq!(p("-t^5").normalize().as_poly(), &LaurentPoly::one());
        assert!(LaurentPoly::zero().normalize().is_zero());
        assert_eq!(p("1 - t").normalize().as_poly(), &p("t - 1"));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("t^2 - 1").gcd(&p("t^3 - 1")).as_poly(), &p("t - 1"));
        let q = p("5*t^-2 + t^3");
        assert_eq!(LaurentPoly::zero().gcd(&q), q.normalize());
        let a = p("1 - t").pow(2);
        let b = p("1 - t") * p("1 + t");
        assert_eq!(a.gcd(&b).as_poly(), &p("t - 1"));
    }

    #[test]
    fn divisibility_examples() {
        let big = p("t - 1") * p("t^6 - 1").pow(4);
        assert!(p("t^2 - t + 1").divides(&big));
        assert!(p("t^7 + 3").divides(&LaurentPoly::zero()));
        assert!(!p("t - 2").divides(&p("t^2 - 1")));
        assert!(!LaurentPoly::zero().divides(&p("t")));
        assert!(LaurentPoly::zero().divides(&LaurentPoly::zero()));
    }

    #[test]
    fn multiplicity_examples() {
        let f = p("t - 1") * p("t^4 - 1").pow(2);
        let q = LaurentPoly::one_minus_t();
        assert_eq!(f.multiplicity(&q).unwrap(), Multiplicity::Finite(3));
        assert_eq!(LaurentPoly::zero().multiplicity(&q).unwrap(), Multiplicity::Infinite);
        assert_eq!(p("t^2 - t + 1").multiplicity(&q).unwrap(), Multiplicity::Finite(0));
        assert_eq!(f.multiplicity(&p("-3*t^2")), Err(RingError::DegenerateFactor));
        assert_eq!(f.multiplicity(&LaurentPoly::zero()), Err(RingError::DegenerateFactor));
    }

    #[test]
    fn display_round_trips_through_parser() {
        let f = p("-2/3*t^-2 + t - 7 + t^4");
        assert_eq!(f.to_string(), "t^4 + t - 7 - 2/3*t^-2");
        assert_eq!(p(&f.to_string()), f);
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-t").to_string(), "-t");
    }
}
