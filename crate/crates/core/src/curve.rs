//! Combinatorics of a curve `C` together with the line `L`: Euler
//! characteristic, first Betti number and the boundary polynomial
//! `(1-t)^{b_1(C ∪ L)} ∏ Δ̂_{K_i}`.
//!
//! Colour 0 is the line; colour `j ≥ 1` is the `j`-th component of `C`.
//! Transverse points of `C ∩ L` must be listed as on-line singularities
//! (marked Hopf links).

use crate::linkpoly::{hat_delta, LinkError, MarkedLink};
use crate::ring::{LaurentPoly, UnitNormalForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("component 0 must be the line: degree 1, genus 0")]
    BadLine,
    #[error("the curve needs at least one component besides the line")]
    NoComponents,
    #[error("component {0} has degree 0")]
    ZeroDegree(usize),
    #[error("singularity {index}: colour {colour} names no component")]
    UnknownColour { index: usize, colour: usize },
    #[error("singularity {index}: on-line flag disagrees with its colouring")]
    LineFlag { index: usize },
    #[error("singularity {index}: the line component must be marked")]
    LineNotMarked { index: usize },
    #[error("singularity {index}: marked degree {got} differs from the curve degree {expected}")]
    DegreeMismatch { index: usize, expected: i64, got: i64 },
    #[error("singularity {index}: {source}")]
    Link { index: usize, source: LinkError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveComponent {
    pub name: String,
    pub degree: u32,
    pub genus: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Singularity {
    pub link: MarkedLink,
    pub on_line: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    components: Vec<CurveComponent>,
    singularities: Vec<Singularity>,
}

impl CurveData {
    pub fn new(components: Vec<CurveComponent>, singularities: Vec<Singularity>) -> Result<Self, CurveError> {
        match components.first() {
            Some(l) if l.degree == 1 && l.genus == 0 => {}
            _ => return Err(CurveError::BadLine),
        }
        if components.len() < 2 {
            return Err(CurveError::NoComponents);
        }
        if let Some(j) = components.iter().position(|c| c.degree == 0) {
            return Err(CurveError::ZeroDegree(j));
        }
        let d: i64 = components[1..].iter().map(|c| i64::from(c.degree)).sum();
        for (index, s) in singularities.iter().enumerate() {
            if let Some(&colour) = s.link.colours().iter().find(|&&c| c >= components.len()) {
                return Err(CurveError::UnknownColour { index, colour });
            }
            let line = s.link.line_component();
            if line.is_some() != s.on_line {
                return Err(CurveError::LineFlag { index });
            }
            if line.is_some() {
                if s.link.marked_component() != line {
                    return Err(CurveError::LineNotMarked { index });
                }
                if s.link.degree() != d {
                    return Err(CurveError::DegreeMismatch { index, expected: d, got: s.link.degree() });
                }
            }
        }
        Ok(Self { components, singularities })
    }

    pub fn components(&self) -> &[CurveComponent] {
        &self.components
    }

    pub fn singularities(&self) -> &[Singularity] {
        &self.singularities
    }

    /// Degree of `C` (the line excluded).
    pub fn degree(&self) -> i64 {
        self.components[1..].iter().map(|c| i64::from(c.degree)).sum()
    }

    /// Number of irreducible components of `C`.
    pub fn curve_components(&self) -> usize {
        self.components.len() - 1
    }

    /// Branches through each singular point, counting only included colours.
    fn branches(&self, include_line: bool) -> impl Iterator<Item = i64> + '_ {
        self.singularities
            .iter()
            .map(move |s| s.link.colours().iter().filter(|&&c| include_line || c != 0).count() as i64)
            .filter(|&b| b > 0)
    }

    fn included(&self, include_line: bool) -> &[CurveComponent] {
        if include_line {
            &self.components
        } else {
            &self.components[1..]
        }
    }

    /// `Σ_j (2 - 2 g_j) - Σ_p (β(p) - 1)`.
    pub fn euler_characteristic(&self, include_line: bool) -> i64 {
        let smooth: i64 = self.included(include_line).iter().map(|c| 2 - 2 * i64::from(c.genus)).sum();
        smooth - self.branches(include_line).map(|b| b - 1).sum::<i64>()
    }

    /// `2 Σ_j g_j + Σ_p (β(p) - 1) - c + 1`.
    pub fn first_betti(&self, include_line: bool) -> i64 {
        let comps = self.included(include_line);
        let genus: i64 = comps.iter().map(|c| 2 * i64::from(c.genus)).sum();
        genus + self.branches(include_line).map(|b| b - 1).sum::<i64>() - comps.len() as i64 + 1
    }

    /// `Δ̂` of every singularity, in input order.
    pub fn local_polynomials(&self) -> Result<Vec<UnitNormalForm<LaurentPoly>>, CurveError> {
        self.singularities
            .iter()
            .enumerate()
            .map(|(index, s)| hat_delta(&s.link).map_err(|source| CurveError::Link { index, source }))
            .collect()
    }

    /// `(1-t)^{b_1(C ∪ L)} ∏_i Δ̂_{K_i}`.
    pub fn boundary_delta(&self) -> Result<UnitNormalForm<LaurentPoly>, CurveError> {
        let product: LaurentPoly = self.local_polynomials()?.into_iter().map(UnitNormalForm::into_poly).product();
        let b1 = self.first_betti(true);
        Ok((LaurentPoly::one_minus_t().pow(b1.max(0) as u32) * product).normalize())
    }

    pub fn affine_counts(&self) -> AffineCounts {
        let on_line = self.singularities.iter().filter(|s| s.on_line).count() as i64;
        let s_aff = self.singularities.len() as i64 - on_line;
        AffineCounts {
            singularities: s_aff,
            components: self.curve_components() as i64,
            euler_nonsingular: self.euler_characteristic(false) - on_line - s_aff,
        }
    }
}

/// `(s, ℓ, χ(C^ns))` for the affine part `C \ L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct AffineCounts {
    pub singularities: i64,
    pub components: i64,
    pub euler_nonsingular: i64,
}
