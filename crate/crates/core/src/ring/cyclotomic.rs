//! Cyclotomic factors of one-variable polynomials.
//!
//! A cyclotomic factor `Φ_n` of a polynomial of degree `D` satisfies
//! `φ(n) <= D`, and `φ(n) >= sqrt(n / 2)` bounds the search to `n <= 2 D^2`.
//! Factors are found by trial division with `Φ_n` over that range.

use std::fmt;

use super::{LaurentPoly, RingError, UnitNormalForm};

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn mobius(n: u64) -> i8 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// `Φ_n = prod_{k | n} (t^k - 1)^{μ(n/k)}`.
pub fn cyclotomic_polynomial(n: u64) -> LaurentPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for k in 1..=n {
        if !n.is_multiple_of(k) {
            continue;
        }
        match mobius(n / k) {
            1 => num = &num * &LaurentPoly::t_pow_minus_one(k as i64),
            -1 => den = &den * &LaurentPoly::t_pow_minus_one(k as i64),
            _ => {}
        }
    }
    num.exact_div(&den).expect("Möbius product is a polynomial")
}

/// `p ≐ prod Φ_n^{m_n} * remainder`, with no cyclotomic factor left in the
/// remainder.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CyclotomicFactorization {
    /// `(n, m_n)` in increasing `n`.
    pub factors: Vec<(u64, u32)>,
    #[serde(serialize_with = "crate::io::serialize_display")]
    pub remainder: UnitNormalForm<LaurentPoly>,
}

impl CyclotomicFactorization {
    pub fn is_cyclotomic_product(&self) -> bool {
        self.remainder.as_poly() == &LaurentPoly::one()
    }

    pub fn reassemble(&self) -> LaurentPoly {
        self.factors
            .iter()
            .map(|&(n, m)| cyclotomic_polynomial(n).pow(m))
            .fold(self.remainder.as_poly().clone(), |acc, f| &acc * &f)
    }
}

impl fmt::Display for CyclotomicFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(n, m)| if m == 1 { format!("Phi_{n}") } else { format!("Phi_{n}^{m}") })
            .collect();
        if !self.is_cyclotomic_product() || parts.is_empty() {
            parts.push(format!("({})", self.remainder));
        }
        f.write_str(&parts.join(" * "))
    }
}

impl LaurentPoly {
    pub fn cyclotomic_factorization(&self) -> Result<CyclotomicFactorization, RingError> {
        if self.is_zero() {
            return Err(RingError::ZeroPolynomial);
        }
        let mut rest = self.normalize().into_poly();
        let mut factors = Vec::new();
        let mut n: u64 = 1;
        loop {
            let deg = rest.span().unwrap();
            if deg == 0 || n > 2 * deg * deg {
                break;
            }
            if euler_phi(n) <= deg {
                let phi = cyclotomic_polynomial(n);
                let mut mult = 0;
                while let Some(q) = rest.exact_div(&phi) {
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((n, mult));
                }
            }
            n += 1;
        }
        Ok(CyclotomicFactorization { factors, remainder: rest.normalize() })
    }
}
