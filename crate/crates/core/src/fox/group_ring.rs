use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::group::{AbelMap, Word};
use crate::ring::{MultiLaurentPoly, Rational};

/// Element of `Q[F_n]`: a finite rational combination of reduced words.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, Rational>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::term(w, Rational::one())
    }

    pub fn term(w: Word, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Image under `θ`: each word `w` goes to the monomial `t^φ(w)`.
    pub fn theta(&self, phi: &AbelMap) -> MultiLaurentPoly {
        MultiLaurentPoly::from_terms(
            phi.rank(),
            self.terms.iter().map(|(w, c)| (phi.image(w), c.clone())),
        )
    }
}

impl Add<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Sub<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Mul<&GroupRingElement> for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a * b, x * y);
            }
        }
        out
    }
}

impl fmt::Debug for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*[{w}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Fox derivative `∂w/∂x_j`: `∂x_i/∂x_j = δ_ij` and `∂(uv) = ∂u + u ∂v`.
pub fn fox_derivative(w: &Word, j: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &(g, e) in w.syllables() {
        if g == j {
            if e > 0 {
                for k in 0..e {
                    out.add_term(&prefix * &Word::power(g, k), Rational::one());
                }
            } else {
                for k in 1..=-e {
                    out.add_term(&prefix * &Word::power(g, -k), -Rational::one());
                }
            }
        }
        prefix = &prefix * &Word::power(g, e);
    }
    out
}
