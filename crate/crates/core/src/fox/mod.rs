//! Fox calculus and Alexander polynomials of a group with a map to `Z^k`.
//!
//! The Alexander polynomial of `(G, φ)` is the gcd of the `(n-1)`-minors of
//! the Fox matrix, 0 when there are fewer than `n - 1` relators or every
//! such minor vanishes. With a single generator the only minor is the empty
//! one, so the answer is 1.

mod elimination;
mod group_ring;
mod minors;

pub use elimination::univariate_determinantal_divisor;
pub use group_ring::{fox_derivative, GroupRingElement};
pub use minors::minors_gcd;

use crate::group::{AbelMap, GroupError, Presentation};
use crate::ring::{int, LaurentPoly, MultiLaurentPoly, Rational, UnitNormalForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FoxError {
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `m x n` matrix with entry `(i, j) = θ(∂r_i/∂x_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoxMatrix {
    nvars: usize,
    cols: usize,
    entries: Vec<Vec<MultiLaurentPoly>>,
}

impl FoxMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiLaurentPoly {
        &self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[MultiLaurentPoly] {
        &self.entries[i]
    }

    /// Entries as one-variable polynomials; `None` unless `nvars == 1`.
    pub fn to_univariate(&self) -> Option<Vec<Vec<LaurentPoly>>> {
        if self.nvars != 1 {
            return None;
        }
        Some(
            self.entries
                .iter()
                .map(|row| row.iter().map(|e| e.to_univariate().unwrap()).collect())
                .collect(),
        )
    }
}

/// Fox matrix of a presentation. Entries are computed from the abelian
/// images of relator prefixes, without forming group-ring elements.
pub fn fox_matrix(p: &Presentation, phi: &AbelMap) -> Result<FoxMatrix, FoxError> {
    phi.validate_for(p)?;
    Ok(fox_matrix_unchecked(p, phi))
}

fn fox_matrix_unchecked(p: &Presentation, phi: &AbelMap) -> FoxMatrix {
    let n = p.generator_count();
    let k = phi.rank();
    let entries = p
        .relators()
        .iter()
        .map(|r| {
            let mut cols: Vec<Vec<(Vec<i64>, Rational)>> = vec![Vec::new(); n];
            let mut prefix = vec![0i64; k];
            for &(g, e) in r.syllables() {
                let step = &phi.images()[g];
                let at = |prefix: &[i64], s: i64| -> Vec<i64> {
                    prefix.iter().zip(step).map(|(a, b)| a + s * b).collect()
                };
                if e > 0 {
                    for s in 0..e {
                        cols[g].push((at(&prefix, s), int(1)));
                    }
                } else {
                    for s in 1..=-e {
                        cols[g].push((at(&prefix, -s), int(-1)));
                    }
                }
                prefix = at(&prefix, e);
            }
            cols.into_iter().map(|terms| MultiLaurentPoly::from_terms(k, terms)).collect()
        })
        .collect();
    FoxMatrix { nvars: k, cols: n, entries }
}

/// Alexander polynomial of `(G, φ)` for a surjective `φ: G -> Z^k`,
/// unit-normalized.
pub fn alexander_polynomial(
    p: &Presentation,
    phi: &AbelMap,
) -> Result<UnitNormalForm<MultiLaurentPoly>, FoxError> {
    let m = fox_matrix(p, phi)?;
    let n = p.generator_count();
    if n <= 1 {
        return Ok(MultiLaurentPoly::one(phi.rank()).normalize());
    }
    if m.rows() < n - 1 {
        return Ok(MultiLaurentPoly::zero(phi.rank()).normalize());
    }
    if let Some(entries) = m.to_univariate() {
        let d = univariate_determinantal_divisor(&entries, n - 1);
        return Ok(MultiLaurentPoly::from_univariate(d.as_poly()).normalize());
    }
    Ok(minors_gcd(&m, n - 1))
}

/// One-variable Alexander polynomial for the map sending every basis
/// vector of `Z^k` to 1, computed directly from the composed map.
pub fn alexander_one_variable(
    p: &Presentation,
    phi: &AbelMap,
) -> Result<UnitNormalForm<LaurentPoly>, FoxError> {
    let summed = phi.summed();
    let d = alexander_polynomial(p, &summed)?;
    Ok(d.to_univariate().expect("one variable").normalize())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Word;

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        let names: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let relators = rels.iter().map(|r| Word::parse(r, &names).unwrap()).collect();
        Presentation::new(names, relators).unwrap()
    }

    fn trefoil() -> Presentation {
        pres(&["x", "y"], &["x y x y^-1 x^-1 y^-1"])
    }

    fn hopf() -> Presentation {
        pres(&["x", "y"], &["x y x^-1 y^-1"])
    }

    fn z3() -> Presentation {
        pres(&["x", "y", "z"], &["x y x^-1 y^-1", "x z x^-1 z^-1", "y z y^-1 z^-1"])
    }

    fn u(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn standard_basis(k: usize) -> AbelMap {
        AbelMap::new(k, (0..k).map(|i| (0..k).map(|j| (i == j) as i64).collect()).collect()).unwrap()
    }

    #[test]
    fn trefoil_matrix() {
        let m = fox_matrix(&trefoil(), &AbelMap::all_ones(2)).unwrap();
        let row = m.to_univariate().unwrap().remove(0);
        assert_eq!(row[0], u("1 - t + t^2"));
        assert_eq!(row[1], -u("1 - t + t^2"));
    }

    #[test]
    fn hopf_matrix() {
        let m = fox_matrix(&hopf(), &standard_basis(2)).unwrap();
        assert_eq!(m.entry(0, 0), &MultiLaurentPoly::parse("1 - t1", Some(2)).unwrap());
        assert_eq!(m.entry(0, 1), &MultiLaurentPoly::parse("t0 - 1", Some(2)).unwrap());
    }

    #[test]
    fn matrix_agrees_with_group_ring_route() {
        let p = z3();
        let phi = AbelMap::new(2, vec![vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let m = fox_matrix(&p, &phi).unwrap();
        for (i, r) in p.relators().iter().enumerate() {
            for j in 0..3 {
                assert_eq!(m.entry(i, j), &fox_derivative(r, j).theta(&phi));
            }
        }
    }

    #[test]
    fn empty_matrix_for_free_cyclic_group() {
        let p = pres(&["x"], &[]);
        let m = fox_matrix(&p, &AbelMap::all_ones(1)).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 1));
        assert_eq!(alexander_polynomial(&p, &AbelMap::all_ones(1)).unwrap().as_poly(), &MultiLaurentPoly::one(1));
    }

    #[test]
    fn alexander_examples() {
        let one = AbelMap::all_ones(2);
        let d = alexander_one_variable(&trefoil(), &one).unwrap();
        assert_eq!(d.as_poly(), &u("t^2 - t + 1"));
        let d = alexander_one_variable(&z3(), &AbelMap::all_ones(3)).unwrap();
        assert_eq!(d.as_poly(), &u("t - 1").pow(2));
        let free = pres(&["x", "y"], &[]);
        assert!(alexander_one_variable(&free, &one).unwrap().is_zero());
    }

    #[test]
    fn one_variable_from_multivariable_maps() {
        let d = alexander_one_variable(&hopf(), &standard_basis(2)).unwrap();
        assert_eq!(d.as_poly(), &u("t - 1"));
        let multi = alexander_polynomial(&hopf(), &standard_basis(2)).unwrap();
        assert_eq!(multi.as_poly(), &MultiLaurentPoly::one(2));
    }

    #[test]
    fn rejects_bad_maps() {
        assert!(matches!(
            alexander_polynomial(&trefoil(), &AbelMap::scalar(&[2, 2])),
            Err(FoxError::Group(GroupError::NotSurjective { .. }))
        ));
        assert!(matches!(
            alexander_polynomial(&trefoil(), &standard_basis(2)),
            Err(FoxError::Group(GroupError::Incompatible { .. }))
        ));
    }

    #[test]
    fn wirtinger_trefoil_matches_two_generator_presentation() {
        // z = x y x^-1, x = y z y^-1
        let w = pres(&["x", "y", "z"], &["x y x^-1 z^-1", "y z y^-1 x^-1"]);
        let a = alexander_one_variable(&w, &AbelMap::all_ones(3)).unwrap();
        let b = alexander_one_variable(&trefoil(), &AbelMap::all_ones(2)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn elimination_and_minors_agree() {
        for (p, n) in [(trefoil(), 2), (z3(), 3), (hopf(), 2)] {
            let m = fox_matrix(&p, &AbelMap::all_ones(n)).unwrap();
            let by_minors = minors_gcd(&m, n - 1);
            let by_elim = univariate_determinantal_divisor(&m.to_univariate().unwrap(), n - 1);
            assert_eq!(by_minors.to_univariate().unwrap().normalize(), by_elim);
        }
    }
}
