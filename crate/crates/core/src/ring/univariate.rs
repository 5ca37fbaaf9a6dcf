//! Dense polynomials in one variable, `coeffs[i]` multiplying `t^i`.
//!
//! Internal kernel for [`super::LaurentPoly`]; callers shift Laurent
//! polynomials into `Q[t]` before using these routines.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) type Dense = Vec<Rational>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &Dense) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn mul(a: &Dense, b: &Dense) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division `a = q * b + r` with `deg r < deg b`.
///
/// Panics if `b` is zero.
pub(crate) fn divrem(a: &Dense, b: &Dense) -> (Dense, Dense) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = Rational::one() / &b[db];
    let mut r = a.clone();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                r[shift + j] -= &c * y;
            }
        }
        // the leading term cancels exactly
        r[dr] = Rational::zero();
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Monic gcd over `Q[t]`; gcd(0, 0) = 0.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = std::mem::replace(&mut y, r);
        make_monic(&mut y);
    }
    make_monic(&mut x);
    x
}

pub(crate) fn make_monic(p: &mut Dense) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            for c in p.iter_mut() {
                *c /= &lead;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::int;

    fn dense(cs: &[i64]) -> Dense {
        cs.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn divrem_reassembles() {
        let a = dense(&[1, 0, 0, 0, 1]);
        let b = dense(&[1, 1]);
        let (q, r) = divrem(&a, &b);
        let mut back = mul(&q, &b);
        back.resize(a.len().max(back.len()), Rational::zero());
        for (i, c) in r.iter().enumerate() {
            back[i] += c;
        }
        trim(&mut back);
        assert_eq!(back, a);
        assert_eq!(r, dense(&[2]));
    }

    #[test]
    fn gcd_of_cyclotomic_multiples() {
        // t^2 - 1 and t^3 - 1
        let g = gcd(&dense(&[-1, 0, 1]), &dense(&[-1, 0, 0, 1]));
        assert_eq!(g, dense(&[-1, 1]));
    }
}
