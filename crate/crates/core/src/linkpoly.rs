//! Alexander invariants of coloured, possibly marked, braid-closure links.
//!
//! Components are the cycles of the braid permutation, ordered by smallest
//! strand. In the multivariable polynomial the marked component (if any)
//! carries `t0` and the remaining components follow in that order.

use crate::braid::{closure_presentation, BraidError, BraidWord};
use crate::fox::{alexander_one_variable, alexander_polynomial, FoxError};
use crate::group::{AbelMap, Presentation};
use crate::ring::{LaurentPoly, MultiLaurentPoly, UnitNormalForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinkError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error("expected {expected} colours (one per component), got {got}")]
    ColourCount { expected: usize, got: usize },
    #[error("components {0} and {1} both carry colour 0")]
    SeveralOnLine(usize, usize),
    #[error("marked component {0} does not exist")]
    MarkedOutOfRange(usize),
    #[error("marked component {0} must be the one coloured 0")]
    MarkedNotOnLine(usize),
    #[error("degree must be positive, got {0}")]
    BadDegree(i64),
    #[error("the multivariable polynomial needs at least two components")]
    SingleComponent,
    #[error("hat polynomial paths disagree: direct {direct} vs substituted {substituted}")]
    PathMismatch { direct: String, substituted: String },
}

/// Closure of a braid with a colour per component, an optional marked
/// component and the ambient degree used by the twisted polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedLink {
    braid: BraidWord,
    components: Vec<Vec<usize>>,
    colours: Vec<usize>,
    marked: Option<usize>,
    degree: i64,
}

impl MarkedLink {
    pub fn new(
        braid: BraidWord,
        colours: Vec<usize>,
        marked: Option<usize>,
        degree: i64,
    ) -> Result<Self, LinkError> {
        let components = braid.strand_components();
        if colours.len() != components.len() {
            return Err(LinkError::ColourCount { expected: components.len(), got: colours.len() });
        }
        let zeros: Vec<usize> = (0..colours.len()).filter(|&i| colours[i] == 0).collect();
        if zeros.len() > 1 {
            return Err(LinkError::SeveralOnLine(zeros[0], zeros[1]));
        }
        if let Some(m) = marked {
            if m >= components.len() {
                return Err(LinkError::MarkedOutOfRange(m));
            }
            if colours[m] != 0 {
                return Err(LinkError::MarkedNotOnLine(m));
            }
            if degree < 1 {
                return Err(LinkError::BadDegree(degree));
            }
        }
        Ok(Self { braid, components, colours, marked, degree })
    }

    /// Unmarked link with every component in colour 1.
    pub fn plain(braid: BraidWord) -> Self {
        let n = braid.strand_components().len();
        Self::new(braid, vec![1; n], None, 1).expect("valid plain link")
    }

    /// Link whose component `m` is coloured 0 and marked, the others 1.
    pub fn with_marked(braid: BraidWord, m: usize, degree: i64) -> Result<Self, LinkError> {
        let n = braid.strand_components().len();
        let colours = (0..n).map(|i| usize::from(i != m)).collect();
        Self::new(braid, colours, Some(m), degree)
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    /// Strand sets of the components, 0-based.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn marked_component(&self) -> Option<usize> {
        self.marked
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Component carrying colour 0, if any.
    pub fn line_component(&self) -> Option<usize> {
        self.colours.iter().position(|&c| c == 0)
    }

    /// Variable index of each component: marked first, then the rest.
    pub fn variable_order(&self) -> Vec<usize> {
        let mut order = vec![0; self.components.len()];
        let mut next = usize::from(self.marked.is_some());
        for (c, slot) in order.iter_mut().enumerate() {
            if Some(c) == self.marked {
                continue;
            }
            *slot = next;
            next += 1;
        }
        order
    }

    pub fn presentation(&self) -> Presentation {
        closure_presentation(&self.braid)
    }

    fn component_of_strand(&self) -> Vec<usize> {
        let mut of = vec![0; self.braid.strands()];
        for (c, strands) in self.components.iter().enumerate() {
            for &s in strands {
                of[s] = c;
            }
        }
        of
    }

    fn meridian_map(&self, value: impl Fn(usize) -> Vec<i64>, rank: usize) -> AbelMap {
        let images = self.component_of_strand().into_iter().map(value).collect();
        AbelMap::new(rank, images).expect("image lengths match")
    }
}

/// Multivariable Alexander polynomial, one variable per component.
pub fn multivariable_delta(l: &MarkedLink) -> Result<UnitNormalForm<MultiLaurentPoly>, LinkError> {
    let mu = l.component_count();
    if mu < 2 {
        return Err(LinkError::SingleComponent);
    }
    let var = l.variable_order();
    let phi = l.meridian_map(|c| (0..mu).map(|j| i64::from(j == var[c])).collect(), mu);
    Ok(alexander_polynomial(&l.presentation(), &phi)?)
}

/// One-variable Alexander polynomial: every meridian goes to `t`.
pub fn one_variable_delta(l: &MarkedLink) -> Result<UnitNormalForm<LaurentPoly>, LinkError> {
    let phi = AbelMap::all_ones(l.braid.strands());
    Ok(alexander_one_variable(&l.presentation(), &phi)?)
}

/// Twisted polynomial `Δ̂`: the marked meridian goes to `-d`, every other
/// meridian to 1. Computed directly and as `(1-t) Δ(t^-d, t, …, t)`; the two must agree.
/// Unmarked links give the one-variable polynomial.
pub fn hat_delta(l: &MarkedLink) -> Result<UnitNormalForm<LaurentPoly>, LinkError> {
    let Some(m) = l.marked else {
        return one_variable_delta(l);
    };
    if l.component_count() < 2 {
        return Err(LinkError::SingleComponent);
    }
    let direct = direct_with(l, m)?;
    let substituted = hat_delta_substituted(l)?;
    if direct != substituted {
        return Err(LinkError::PathMismatch {
            direct: direct.to_string(),
            substituted: substituted.to_string(),
        });
    }
    Ok(direct)
}

/// `Δ̂` from Fox calculus with the twisted meridian map alone.
pub fn hat_delta_direct(l: &MarkedLink) -> Result<UnitNormalForm<LaurentPoly>, LinkError> {
    match l.marked {
        Some(m) => direct_with(l, m),
        None => one_variable_delta(l),
    }
}

fn direct_with(l: &MarkedLink, m: usize) -> Result<UnitNormalForm<LaurentPoly>, LinkError> {
    let d = l.degree;
    let phi = l.meridian_map(|c| vec![if c == m { -d } else { 1 }], 1);
    let delta = alexander_polynomial(&l.presentation(), &phi)?;
    Ok(delta.to_univariate().expect("one variable").normalize())
}

/// `(1-t) Δ(t^-d, t, …, t)` from the multivariable polynomial.
pub fn hat_delta_substituted(l: &MarkedLink) -> Result<UnitNormalForm<LaurentPoly>, LinkError> {
    let multi = multivariable_delta(l)?;
    let mut exps = vec![1; l.component_count()];
    if l.marked.is_some() {
        exps[0] = -l.degree;
    }
    let sub = multi.substitute(&exps).expect("one exponent per variable");
    Ok((LaurentPoly::one_minus_t() * sub).normalize())
}

/// Torres consistency `Δ(t) ≐ (1-t) Δ(t, …, t)` for links with at least two
/// components; `None` for knots.
pub fn torres_consistent(l: &MarkedLink) -> Result<Option<bool>, LinkError> {
    if l.component_count() < 2 {
        return Ok(None);
    }
    let one = one_variable_delta(l)?;
    let multi = multivariable_delta(l)?;
    let sub = multi.substitute(&vec![1; l.component_count()]).expect("one exponent per variable");
    Ok(Some((LaurentPoly::one_minus_t() * sub).normalize() == one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::full_twist;

    fn u(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn torus(d: usize) -> MarkedLink {
        MarkedLink::plain(full_twist(d).unwrap())
    }

    #[test]
    fn validation() {
        let b = full_twist(3).unwrap();
        assert!(matches!(MarkedLink::new(b.clone(), vec![0, 1], None, 3), Err(LinkError::ColourCount { .. })));
        assert!(matches!(MarkedLink::new(b.clone(), vec![0, 0, 1], None, 3), Err(LinkError::SeveralOnLine(0, 1))));
        assert!(matches!(MarkedLink::new(b.clone(), vec![1, 0, 1], Some(0), 3), Err(LinkError::MarkedNotOnLine(0))));
        assert!(matches!(MarkedLink::new(b.clone(), vec![0, 1, 1], Some(0), 0), Err(LinkError::BadDegree(0))));
        assert!(MarkedLink::new(b, vec![1, 0, 2], Some(1), 3).is_ok());
    }

    #[test]
    fn variable_order_puts_marked_first() {
        let l = MarkedLink::with_marked(full_twist(3).unwrap(), 1, 4).unwrap();
        assert_eq!(l.variable_order(), vec![1, 0, 2]);
        assert_eq!(torus(3).variable_order(), vec![0, 1, 2]);
    }

    #[test]
    fn knots() {
        let trefoil = MarkedLink::plain(BraidWord::new(2, vec![1, 1, 1]).unwrap());
        assert_eq!(one_variable_delta(&trefoil).unwrap().as_poly(), &u("t^2 - t + 1"));
        assert_eq!(hat_delta(&trefoil).unwrap().as_poly(), &u("t^2 - t + 1"));
        assert_eq!(multivariable_delta(&trefoil), Err(LinkError::SingleComponent));
        let unknot = MarkedLink::plain(BraidWord::new(2, vec![1]).unwrap());
        assert_eq!(one_variable_delta(&unknot).unwrap().as_poly(), &LaurentPoly::one());
    }

    #[test]
    fn hopf_link() {
        let hopf = torus(2);
        assert!(multivariable_delta(&hopf).unwrap().is_unit());
        assert_eq!(one_variable_delta(&hopf).unwrap().as_poly(), &u("t - 1"));
        for d in [2, 3, 7] {
            let marked = MarkedLink::with_marked(full_twist(2).unwrap(), 0, d).unwrap();
            assert_eq!(hat_delta(&marked).unwrap().as_poly(), &u("t - 1"));
        }
        assert_eq!(torres_consistent(&hopf), Ok(Some(true)));
    }

    #[test]
    fn generalized_hopf_link() {
        let m = multivariable_delta(&torus(3)).unwrap();
        assert_eq!(m.as_poly(), &MultiLaurentPoly::parse("t0*t1*t2 - 1", Some(3)).unwrap());
        assert_eq!(one_variable_delta(&torus(3)).unwrap().as_poly(), &(u("t - 1") * u("t^3 - 1")));
        assert_eq!(torres_consistent(&torus(3)), Ok(Some(true)));
    }

    #[test]
    fn marked_knot_is_rejected() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let l = MarkedLink::new(b, vec![0], Some(0), 3).unwrap();
        assert_eq!(hat_delta(&l), Err(LinkError::SingleComponent));
    }
}
