//! Free-group words, finite presentations and maps to free abelian groups.

mod smith;
mod word;

pub use smith::smith_invariants;
pub use word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("no image given for generator {0}")]
    MissingImage(usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed word token `{0}`")]
    BadToken(String),
    #[error("abelian map has {got} images for {expected} generators")]
    ImageCount { expected: usize, got: usize },
    #[error("image of generator {generator} has length {got}, expected rank {rank}")]
    RankMismatch { generator: usize, rank: usize, got: usize },
    #[error("abelian map target rank must be at least 1")]
    ZeroRank,
    #[error("abelian map is not surjective onto Z^{rank}")]
    NotSurjective { rank: usize },
    #[error("abelian map does not vanish on relator {relator}")]
    Incompatible { relator: usize },
}

/// `<x_1, ..., x_n | r_1, ..., r_m>`.
///
/// Relators are freely reduced and trivial relators are dropped on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        let count = generators.len();
        for r in &relators {
            if let Some(index) = r.max_generator().filter(|&g| g >= count) {
                return Err(GroupError::GeneratorOutOfRange { index, count });
            }
        }
        let relators = relators.into_iter().filter(|r| !r.is_identity()).collect();
        Ok(Presentation { generators, relators })
    }

    /// Generators named `x1, ..., xn`.
    pub fn with_default_names(n: usize, relators: Vec<Word>) -> Result<Self, GroupError> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// The same generators with extra relators appended.
    pub fn with_extra_relators(&self, extra: impl IntoIterator<Item = Word>) -> Result<Self, GroupError> {
        let mut relators = self.relators.clone();
        relators.extend(extra);
        Self::new(self.generators.clone(), relators)
    }

    /// `H_1` of the presented group: free rank and torsion coefficients.
    pub fn abelianization(&self) -> Abelianization {
        let n = self.generator_count();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|r| r.exponent_sums(n)).collect();
        let invariants = smith_invariants(&rows, n);
        let free_rank = n - invariants.len();
        let torsion = invariants.into_iter().filter(|&d| d > 1).collect();
        Abelianization { free_rank, torsion }
    }
}

/// `Z^free_rank ⊕ ⊕ Z/torsion[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    pub free_rank: usize,
    pub torsion: Vec<i128>,
}

/// Homomorphism from a free group to `Z^rank`, given on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelMap {
    rank: usize,
    images: Vec<Vec<i64>>,
}

impl AbelMap {
    pub fn new(rank: usize, images: Vec<Vec<i64>>) -> Result<Self, GroupError> {
        if rank == 0 {
            return Err(GroupError::ZeroRank);
        }
        for (generator, img) in images.iter().enumerate() {
            if img.len() != rank {
                return Err(GroupError::RankMismatch { generator, rank, got: img.len() });
            }
        }
        Ok(AbelMap { rank, images })
    }

    /// Every generator to `1 ∈ Z`.
    pub fn all_ones(generators: usize) -> Self {
        AbelMap { rank: 1, images: vec![vec![1]; generators] }
    }

    /// One-variable map from integer images.
    pub fn scalar(images: &[i64]) -> Self {
        AbelMap { rank: 1, images: images.iter().map(|&x| vec![x]).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    pub fn image(&self, w: &Word) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        for &(g, e) in w.syllables() {
            for (acc, x) in v.iter_mut().zip(&self.images[g]) {
                *acc += e * x;
            }
        }
        v
    }

    /// Composition with `Z^rank -> Z`, `(a_i) -> sum a_i`.
    pub fn summed(&self) -> Self {
        AbelMap { rank: 1, images: self.images.iter().map(|v| vec![v.iter().sum()]).collect() }
    }

    /// The images span `Z^rank`.
    pub fn is_surjective(&self) -> bool {
        let inv = smith_invariants(&self.images, self.rank);
        inv.len() == self.rank && inv.iter().all(|&d| d == 1)
    }

    /// Checks that this map is a well-defined surjection from the presented
    /// group.
    pub fn validate_for(&self, p: &Presentation) -> Result<(), GroupError> {
        if self.images.len() != p.generator_count() {
            return Err(GroupError::ImageCount { expected: p.generator_count(), got: self.images.len() });
        }
        if let Some(relator) = p.relators().iter().position(|r| self.image(r).iter().any(|&x| x != 0)) {
            return Err(GroupError::Incompatible { relator });
        }
        if !self.is_surjective() {
            return Err(GroupError::NotSurjective { rank: self.rank });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_drops_trivial_relators_and_checks_indices() {
        let p = Presentation::with_default_names(2, vec![Word::identity(), Word::generator(1)]).unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(
            Presentation::with_default_names(1, vec![Word::generator(3)]),
            Err(GroupError::GeneratorOutOfRange { index: 3, count: 1 })
        );
    }

    #[test]
    fn abelianization_of_small_groups() {
        let x = Word::generator(0);
        let y = Word::generator(1);
        let comm = &(&(&x * &y) * &x.inverse()) * &y.inverse();
        let z2 = Presentation::with_default_names(2, vec![comm]).unwrap();
        assert_eq!(z2.abelianization(), Abelianization { free_rank: 2, torsion: vec![] });
        let cyc = Presentation::with_default_names(2, vec![x.pow(2) * y.pow(-3), x.pow(4)]).unwrap();
        let ab = cyc.abelianization();
        assert_eq!(ab.free_rank, 0);
        assert_eq!(ab.torsion.iter().product::<i128>(), 12);
    }

    #[test]
    fn surjectivity() {
        assert!(AbelMap::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap().is_surjective());
        assert!(!AbelMap::new(2, vec![vec![1, 1], vec![2, 2]]).unwrap().is_surjective());
        assert!(AbelMap::scalar(&[-3, 1]).is_surjective());
        assert!(!AbelMap::scalar(&[2, 4]).is_surjective());
        assert_eq!(AbelMap::new(0, vec![]), Err(GroupError::ZeroRank));
    }

    #[test]
    fn validate_for_rejects_incompatible_maps() {
        let p = Presentation::with_default_names(2, vec![Word::generator(0) * Word::power(1, -1)]).unwrap();
        assert!(AbelMap::all_ones(2).validate_for(&p).is_ok());
        let bad = AbelMap::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(bad.validate_for(&p), Err(GroupError::Incompatible { relator: 0 }));
        assert!(matches!(AbelMap::all_ones(3).validate_for(&p), Err(GroupError::ImageCount { .. })));
    }
}
