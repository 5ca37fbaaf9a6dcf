//! Braid words, the Artin action on the free group, and the presentations
//! built from braids: Zariski–van Kampen for curve complements and the
//! closure presentation for links.
//!
//! Conventions: `σ_i` sends `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i` and
//! the action of a product `ab` is `φ_a ∘ φ_b`. Under these conventions the
//! product `x_1 x_2 ⋯ x_d` is fixed by every braid.

use std::fmt;

use crate::group::{GroupError, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("letter {letter} is not a generator of the braid group on {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("word uses generator x{index} but only {strands} strands are available")]
    WordOutOfRange { index: usize, strands: usize },
    #[error("the factors do not compose to the full twist on {0} strands")]
    NotFullTwist(usize),
    #[error("no adjacent factor pair at position {0}")]
    BadHurwitzPosition(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Element of `B_d` as a word in the standard generators: letter `i > 0`
/// is `σ_i`, `i < 0` is `σ_{|i|}⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(BraidError::LetterOutOfRange { letter, strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        Self { strands: self.strands, letters: self.letters.repeat(n as usize) }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, BraidError> {
        check_strands(self.strands, other.strands)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    /// Images `β(x_1), …, β(x_d)` of the free generators.
    pub fn artin_images(&self) -> Vec<Word> {
        let mut img: Vec<Word> = (0..self.strands).map(Word::generator).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (a, b) = (img[i].clone(), img[i + 1].clone());
            if l > 0 {
                img[i] = &(&a * &b) * &a.inverse();
                img[i + 1] = a;
            } else {
                img[i] = b.clone();
                img[i + 1] = &(&b.inverse() * &a) * &b;
            }
        }
        img
    }

    /// Permutation of strand positions: entry `i` is where strand `i` ends.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // at[p] = strand now at position p; invert
        let mut perm = vec![0; self.strands];
        for (p, &s) in at.iter().enumerate() {
            perm[s] = p;
        }
        perm
    }

    /// Cycles of the underlying permutation (the components of the closure),
    /// 0-based, each sorted, ordered by smallest strand.
    pub fn strand_components(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut out = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut s = start;
            while !seen[s] {
                seen[s] = true;
                cycle.push(s);
                s = perm[s];
            }
            cycle.sort_unstable();
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1 (B_{})", self.strands);
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_strands(left: usize, right: usize) -> Result<(), BraidError> {
    if left == right {
        Ok(())
    } else {
        Err(BraidError::StrandMismatch { left, right })
    }
}

/// Image of `w` under the automorphism induced by `b`.
pub fn artin_action(b: &BraidWord, w: &Word) -> Result<Word, BraidError> {
    if let Some(index) = w.max_generator().filter(|&g| g >= b.strands) {
        return Err(BraidError::WordOutOfRange { index: index + 1, strands: b.strands });
    }
    Ok(w.apply_endomorphism(&b.artin_images())?)
}

/// Equality in `B_d`, decided through the (faithful) Artin representation.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    check_strands(a.strands, b.strands)?;
    Ok(a.artin_images() == b.artin_images())
}

/// `(σ_1 σ_2 ⋯ σ_{d-1})^d`.
pub fn full_twist(d: usize) -> Result<BraidWord, BraidError> {
    if d < 2 {
        return Err(BraidError::TooFewStrands(d));
    }
    let row: Vec<i32> = (1..d as i32).collect();
    BraidWord::new(d, row.repeat(d))
}

/// Ordered braid monodromy `β_1, …, β_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    strands: usize,
    factors: Vec<BraidWord>,
}

impl Factorization {
    pub fn new(strands: usize, factors: Vec<BraidWord>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for f in &factors {
            check_strands(strands, f.strands)?;
        }
        Ok(Self { strands, factors })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[BraidWord] {
        &self.factors
    }

    pub fn product(&self) -> BraidWord {
        let letters = self.factors.iter().flat_map(|f| f.letters.iter().copied()).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Replaces the factors `(a, b)` at positions `k, k+1` by `(a b a⁻¹, a)`.
    /// The ordered product is unchanged.
    pub fn hurwitz_move(&self, k: usize) -> Result<Self, BraidError> {
        if k + 1 >= self.factors.len() {
            return Err(BraidError::BadHurwitzPosition(k));
        }
        let a = &self.factors[k];
        let b = &self.factors[k + 1];
        let conj = a.checked_mul(b)?.checked_mul(&a.inverse())?;
        let mut factors = self.factors.clone();
        factors[k] = conj;
        factors[k + 1] = a.clone();
        Ok(Self { strands: self.strands, factors })
    }

    /// Number of orbits of strands under the permutations of all factors,
    /// i.e. the number of irreducible components of the affine curve.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.strands).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for f in &self.factors {
            for (s, p) in f.permutation().into_iter().enumerate() {
                let (a, b) = (find(&mut parent, s), find(&mut parent, p));
                parent[a] = b;
            }
        }
        (0..self.strands).filter(|&s| find(&mut parent, s) == s).count()
    }
}

/// Whether the ordered product of the factors equals the full twist.
pub fn validate_factorization(f: &Factorization) -> bool {
    let twist = full_twist(f.strands).expect("strand count checked on construction");
    f.product().artin_images() == twist.artin_images()
}

fn braid_relators(b: &BraidWord, upto: usize, out: &mut Vec<Word>) {
    for (i, img) in b.artin_images().into_iter().enumerate().take(upto) {
        out.push(&img * &Word::generator(i).inverse());
    }
}

/// Zariski–van Kampen presentation: generators `x_1, …, x_d`, a relator
/// `β(x_i) x_i⁻¹` for every factor and every `i`, and `x_1 ⋯ x_d` when
/// `projective`. Trivial relators are dropped.
pub fn zvk_presentation(f: &Factorization, projective: bool) -> Result<Presentation, BraidError> {
    if !validate_factorization(f) {
        return Err(BraidError::NotFullTwist(f.strands));
    }
    let d = f.strands;
    let mut relators = Vec::new();
    for b in &f.factors {
        braid_relators(b, d, &mut relators);
    }
    if projective {
        relators.push(Word::reduce((0..d).map(|i| (i, 1))));
    }
    Ok(Presentation::with_default_names(d, relators)?)
}

/// Link-group presentation of the closure of `b`: relators `β(x_i) x_i⁻¹`
/// for `i < d`; the last one is a consequence of the others.
pub fn closure_presentation(b: &BraidWord) -> Presentation {
    let mut relators = Vec::new();
    braid_relators(b, b.strands - 1, &mut relators);
    Presentation::with_default_names(b.strands, relators).expect("generators in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(d: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(d, l.to_vec()).unwrap()
    }

    fn x(i: usize) -> Word {
        Word::generator(i)
    }

    #[test]
    fn validation() {
        assert_eq!(BraidWord::new(1, vec![]), Err(BraidError::TooFewStrands(1)));
        assert!(matches!(BraidWord::new(3, vec![3]), Err(BraidError::LetterOutOfRange { letter: 3, .. })));
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(3, vec![-2, 1]).is_ok());
    }

    #[test]
    fn generator_action() {
        let s1 = b(2, &[1]);
        assert_eq!(artin_action(&s1, &x(0)).unwrap(), Word::reduce([(0, 1), (1, 1), (0, -1)]));
        assert_eq!(artin_action(&s1, &x(1)).unwrap(), x(0));
        assert!(matches!(artin_action(&s1, &x(2)), Err(BraidError::WordOutOfRange { .. })));
        let back = artin_action(&s1.inverse(), &artin_action(&s1, &x(0)).unwrap()).unwrap();
        assert_eq!(back, x(0));
    }

    #[test]
    fn product_of_generators_is_fixed() {
        let prod = Word::reduce((0..4).map(|i| (i, 1)));
        for word in [vec![1, 2, -3, 1, 1], vec![3, 3, -2, 1, -1, 2], vec![]] {
            assert_eq!(artin_action(&b(4, &word), &prod).unwrap(), prod);
        }
    }

    #[test]
    fn braid_relations() {
        assert!(braid_equal(&b(3, &[1, 2, 1]), &b(3, &[2, 1, 2])).unwrap());
        assert!(!braid_equal(&b(2, &[1]), &b(2, &[-1])).unwrap());
        assert!(braid_equal(&b(3, &[1, 2, 1, 2, 1, 2]), &full_twist(3).unwrap()).unwrap());
        assert!(braid_equal(&b(4, &[1, 3]), &b(4, &[3, 1])).unwrap());
        assert!(matches!(braid_equal(&b(2, &[1]), &b(3, &[1])), Err(BraidError::StrandMismatch { .. })));
    }

    #[test]
    fn twist_words() {
        assert_eq!(full_twist(2).unwrap().letters(), &[1, 1]);
        assert_eq!(full_twist(3).unwrap().letters(), &[1, 2, 1, 2, 1, 2]);
        assert!(full_twist(1).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(b(2, &[1]).strand_components(), vec![vec![0, 1]]);
        assert_eq!(full_twist(3).unwrap().strand_components().len(), 3);
        assert_eq!(b(3, &[1, 2]).strand_components(), vec![vec![0, 1, 2]]);
        assert_eq!(b(4, &[2]).strand_components(), vec![vec![0], vec![1, 2], vec![3]]);
    }

    #[test]
    fn factorizations() {
        let f = |l: &[&[i32]]| Factorization::new(2, l.iter().map(|w| b(2, w)).collect()).unwrap();
        assert!(validate_factorization(&f(&[&[1], &[1]])));
        assert!(!validate_factorization(&f(&[&[1]])));
        assert!(!validate_factorization(&f(&[])));
        let cusp = Factorization::new(
            3,
            vec![b(3, &[1, 1, 1]), b(3, &[-1, 2, 1]), b(3, &[1]), b(3, &[2])],
        )
        .unwrap();
        assert!(validate_factorization(&cusp));
        for k in 0..3 {
            assert!(validate_factorization(&cusp.hurwitz_move(k).unwrap()));
        }
        assert!(cusp.hurwitz_move(3).is_err());
        assert_eq!(cusp.component_count(), 1);
    }

    #[test]
    fn presentations() {
        let two_lines = Factorization::new(2, vec![b(2, &[1, 1])]).unwrap();
        let p = zvk_presentation(&two_lines, false).unwrap();
        assert_eq!(p.abelianization().free_rank, 2);
        let p = zvk_presentation(&two_lines, true).unwrap();
        assert_eq!(p.abelianization().free_rank, 1);
        let bad = Factorization::new(2, vec![b(2, &[1])]).unwrap();
        assert_eq!(zvk_presentation(&bad, false), Err(BraidError::NotFullTwist(2)));

        let unknot = closure_presentation(&b(2, &[1]));
        assert_eq!(unknot.abelianization().free_rank, 1);
        let hopf = closure_presentation(&full_twist(2).unwrap());
        assert_eq!(hopf.relators().len(), 1);
        assert_eq!(hopf.abelianization().free_rank, 2);
    }
}
