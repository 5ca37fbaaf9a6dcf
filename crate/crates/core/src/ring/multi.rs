use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{primitive_multiplier, LaurentPoly, Rational, RingError, UnitNormalForm};

/// Element of `Q[t0^±1, ..., t_{k-1}^±1]`, stored sparsely by exponent vector.
///
/// The map is ordered lexicographically with `t0` most significant, which
/// is the monomial order used for exact division.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiLaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

/// Graded-lex comparison with `t0 < t1 < ...`.
fn grlex(a: &[i64], b: &[i64]) -> Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

impl MultiLaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiLaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    /// The variable `t_i` in a ring of `nvars` variables.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Vec<i64>, c: Rational) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        MultiLaurentPoly { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeats. Panics if an exponent vector has the wrong length.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rational)>) -> Self {
        let mut map: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        MultiLaurentPoly { nvars, terms: map }
    }

    pub fn from_univariate(p: &LaurentPoly) -> Self {
        Self::from_terms(1, p.terms().map(|(e, c)| (vec![e], c.clone())))
    }

    /// Parses the multivariable text format, e.g. `2/3*t0^2*t1 - 1`.
    pub fn parse(s: &str, nvars: Option<usize>) -> Result<Self, RingError> {
        super::text::parse_multivariate(s, nvars)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[i64]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// The univariate polynomial when there is exactly one variable.
    pub fn to_univariate(&self) -> Option<LaurentPoly> {
        (self.nvars == 1)
            .then(|| LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (e[0], c.clone()))))
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(RingError::VariableMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_term(&mut terms, e.clone(), c);
        }
        Ok(MultiLaurentPoly { nvars: self.nvars, terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                add_term(&mut terms, e, &(ca * cb));
            }
        }
        Ok(MultiLaurentPoly { nvars: self.nvars, terms })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiLaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        MultiLaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars);
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

    fn min_exponents(&self) -> Vec<i64> {
        let mut mins = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (m, x) in mins.iter_mut().zip(e) {
                *m = (*m).min(*x);
            }
        }
        mins
    }

    /// Associate with every minimum exponent equal to zero.
    fn to_polynomial(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let neg: Vec<i64> = self.min_exponents().iter().map(|m| -m).collect();
        self.shift(&neg)
    }

    /// Replaces every `t_i` by `t^exponents[i]`.
    pub fn substitute(&self, exponents: &[i64]) -> Result<LaurentPoly, RingError> {
        if exponents.len() != self.nvars {
            return Err(RingError::ExponentLength { expected: self.nvars, got: exponents.len() });
        }
        Ok(LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| {
            (e.iter().zip(exponents).map(|(a, b)| a * b).sum(), c.clone())
        })))
    }

    pub fn normalize(&self) -> UnitNormalForm<MultiLaurentPoly> {
        if self.is_zero() {
            return UnitNormalForm::new_unchecked(self.clone());
        }
        let p = self.to_polynomial();
        let mut m = primitive_multiplier(p.terms.values());
        let lead = p.terms.iter().max_by(|a, b| grlex(a.0, b.0)).unwrap().1;
        if lead.is_negative() {
            m = -m;
        }
        UnitNormalForm::new_unchecked(p.scale(&m))
    }

    pub fn gcd(&self, other: &Self) -> Result<UnitNormalForm<MultiLaurentPoly>, RingError> {
        self.check(other)?;
        Ok(gcd_poly(&self.to_polynomial(), &other.to_polynomial()).normalize())
    }

    /// The quotient `self / divisor` in the Laurent ring when it exists.
    /// `0 / 0` is `Some(0)`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>, RingError> {
        self.check(divisor)?;
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        if divisor.is_zero() {
            return Ok(None);
        }
        let mins_a = self.min_exponents();
        let mins_b = divisor.min_exponents();
        let q = poly_exact_div(&self.to_polynomial(), &divisor.to_polynomial());
        let shift: Vec<i64> = mins_a.iter().zip(&mins_b).map(|(a, b)| a - b).collect();
        Ok(q.map(|q| q.shift(&shift)))
    }

    /// True iff `other = self * c` for some `c`.
    pub fn divides(&self, other: &Self) -> Result<bool, RingError> {
        Ok(other.exact_div(self)?.is_some())
    }
}

fn add_term(terms: &mut BTreeMap<Vec<i64>, Rational>, e: Vec<i64>, c: &Rational) {
    use std::collections::btree_map::Entry;
    match terms.entry(e) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c.clone());
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Exact division of polynomials (all exponents nonnegative) by repeated
/// cancellation of lex-leading terms. A single divisor is a Groebner basis
/// of its ideal, so a leading term that is not divisible proves `b ∤ a`.
fn poly_exact_div(a: &MultiLaurentPoly, b: &MultiLaurentPoly) -> Option<MultiLaurentPoly> {
    let (lead_e, lead_c) = b.terms.last_key_value().expect("nonzero divisor");
    let lead_inv = lead_c.recip();
    let mut rem = a.terms.clone();
    let mut quot = BTreeMap::new();
    while let Some((e, c)) = rem.last_key_value() {
        let diff: Vec<i64> = e.iter().zip(lead_e).map(|(x, y)| x - y).collect();
        if diff.iter().any(|&d| d < 0) {
            return None;
        }
        let coef = c * &lead_inv;
        for (be, bc) in &b.terms {
            let key: Vec<i64> = be.iter().zip(&diff).map(|(x, y)| x + y).collect();
            add_term(&mut rem, key, &(-(&coef * bc)));
        }
        quot.insert(diff, coef);
    }
    Some(MultiLaurentPoly { nvars: a.nvars, terms: quot })
}

/// Coefficients in the last variable, each living in `nvars - 1` variables.
fn split_last(p: &MultiLaurentPoly) -> Vec<MultiLaurentPoly> {
    let k = p.nvars;
    let mut out: Vec<MultiLaurentPoly> = Vec::new();
    for (e, c) in &p.terms {
        let d = e[k - 1] as usize;
        if out.len() <= d {
            out.resize(d + 1, MultiLaurentPoly::zero(k - 1));
        }
        out[d].terms.insert(e[..k - 1].to_vec(), c.clone());
    }
    out
}

fn join_last(coeffs: &[MultiLaurentPoly], k: usize) -> MultiLaurentPoly {
    let mut terms = BTreeMap::new();
    for (d, coeff) in coeffs.iter().enumerate() {
        for (e, c) in &coeff.terms {
            let mut full = e.clone();
            full.push(d as i64);
            terms.insert(full, c.clone());
        }
    }
    MultiLaurentPoly { nvars: k, terms }
}

fn trim(v: &mut Vec<MultiLaurentPoly>) {
    while v.last().is_some_and(MultiLaurentPoly::is_zero) {
        v.pop();
    }
}

fn rescale(v: &mut [MultiLaurentPoly]) {
    let m = primitive_multiplier(v.iter().flat_map(|p| p.terms.values()));
    if !m.is_one() {
        for p in v.iter_mut() {
            *p = p.scale(&m);
        }
    }
}

fn content(coeffs: &[MultiLaurentPoly]) -> MultiLaurentPoly {
    let mut g = MultiLaurentPoly::zero(coeffs[0].nvars);
    for c in coeffs {
        g = gcd_poly(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

/// Divides out the polynomial and rational content of a coefficient vector.
fn primitive_part(mut v: Vec<MultiLaurentPoly>) -> Vec<MultiLaurentPoly> {
    trim(&mut v);
    if v.is_empty() {
        return v;
    }
    let c = content(&v);
    if !c.is_constant() {
        for p in v.iter_mut() {
            *p = poly_exact_div(p, &c).expect("content divides every coefficient");
        }
    }
    rescale(&mut v);
    v
}

/// Pseudo-remainder of `a` by `b` in the last variable (`deg a >= deg b`).
fn pseudo_rem(a: &[MultiLaurentPoly], b: &[MultiLaurentPoly]) -> Vec<MultiLaurentPoly> {
    let db = b.len() - 1;
    let lead_b = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lead_r = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = &*x * lead_b;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&lead_r * bj);
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
        rescale(&mut r);
    }
    r
}

/// gcd of polynomials with nonnegative exponents, up to a rational factor.
fn gcd_poly(a: &MultiLaurentPoly, b: &MultiLaurentPoly) -> MultiLaurentPoly {
    let k = a.nvars;
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if k == 0 || a.is_constant() || b.is_constant() {
        return MultiLaurentPoly::one(k);
    }
    if a == b {
        return a.clone();
    }
    let ac = split_last(a);
    let bc = split_last(b);
    let ca = content(&ac);
    let cb = content(&bc);
    let g = gcd_poly(&ca, &cb);
    let mut pa = primitive_part(ac);
    let mut pb = primitive_part(bc);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_empty() {
        let r = pseudo_rem(&pa, &pb);
        pa = std::mem::replace(&mut pb, primitive_part(r));
    }
    &join_last(std::slice::from_ref(&g), k) * &join_last(&pa, k)
}

impl fmt::Debug for MultiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurentPoly[{}]({self})", self.nvars)
    }
}

impl fmt::Display for MultiLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by(|a, b| grlex(b.0, a.0));
        let terms = entries.into_iter().map(|(e, c)| {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("t{i}") } else { format!("t{i}^{x}") })
                .collect();
            (c, mono.join("*"))
        });
        super::text::write_terms(f, terms)
    }
}

impl Add<&MultiLaurentPoly> for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    /// Panics on variable-count mismatch; see [`MultiLaurentPoly::checked_add`].
    fn add(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub<&MultiLaurentPoly> for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn sub(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        self + &(-rhs)
    }
}

impl Mul<&MultiLaurentPoly> for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    /// Panics on variable-count mismatch; see [`MultiLaurentPoly::checked_mul`].
    fn mul(self, rhs: &MultiLaurentPoly) -> MultiLaurentPoly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &MultiLaurentPoly {
    type Output = MultiLaurentPoly;
    fn neg(self) -> MultiLaurentPoly {
        MultiLaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, k: usize) -> MultiLaurentPoly {
        MultiLaurentPoly::parse(s, Some(k)).unwrap()
    }

    #[test]
    fn expansion() {
        let f = m("t0*t1 - 1", 2);
        assert_eq!(&f * &f, m("t0^2*t1^2 - 2*t0*t1 + 1", 2));
        assert_eq!(&f + &MultiLaurentPoly::zero(2), f);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = MultiLaurentPoly::one(2);
        let b = MultiLaurentPoly::one(3);
        assert_eq!(
            a.checked_add(&b),
            Err(RingError::VariableMismatch { left: 2, right: 3 })
        );
        assert!(a.checked_mul(&b).is_err());
        assert!(a.gcd(&b).is_err());
    }

    #[test]
    fn substitution_examples() {
        let f = m("t0*t1 - 1", 2);
        assert_eq!(f.substitute(&[-2, 1]).unwrap(), "t^-1 - 1".parse().unwrap());
        let g = m("t0*t1*t2 - 1", 3);
        assert_eq!(g.substitute(&[-3, 1, 1]).unwrap(), "t^-1 - 1".parse().unwrap());
        assert_eq!(g.substitute(&[1, 1, 1]).unwrap(), "t^3 - 1".parse().unwrap());
        assert!(g.substitute(&[1, 1]).is_err());
    }

    #[test]
    fn normal_form_uses_graded_lex_leading_term() {
        // leading term in grlex with t0 < t1 is t1, coefficient -1
        let f = m("3*t0 - 3*t1", 2);
        assert_eq!(f.normalize().as_poly(), &m("t1 - t0", 2));
        let g = m("-t0^-1*t1^2 + t0^2", 2);
        assert_eq!(g.normalize().as_poly(), &m("t0^3 - t1^2", 2));
        assert_eq!(g.normalize().to_string(), "t0^3 - t1^2");
    }

    #[test]
    fn multivariable_gcd() {
        let a = m("t0*t1 - 1", 2);
        let b = m("t0 + t1^2", 2);
        let c = m("t0 - 1", 2);
        let g = (&a * &b).gcd(&(&a * &c)).unwrap();
        assert_eq!(g, a.normalize());
        let h = m("1 - t1", 2).gcd(&m("t0 - 1", 2)).unwrap();
        assert_eq!(h.as_poly(), &MultiLaurentPoly::one(2));
        let sq = a.pow(2);
        assert_eq!(sq.gcd(&(&a * &c)).unwrap(), a.normalize());
        assert_eq!(MultiLaurentPoly::zero(2).gcd(&b).unwrap(), b.normalize());
    }

    #[test]
    fn exact_division() {
        let a = m("t0*t1*t2 - 1", 3);
        let b = m("t0^-1 + t2", 3);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap().unwrap(), b);
        assert!(!m("t0 - 2", 3).divides(&prod).unwrap());
        assert!(a.divides(&MultiLaurentPoly::zero(3)).unwrap());
    }
}
