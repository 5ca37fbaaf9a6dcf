use std::fmt;
use std::ops::Mul;

use super::GroupError;

/// Freely reduced word in a free group, run-length encoded as
/// `(generator, exponent)` syllables.
///
/// Adjacent syllables always have distinct generators and every exponent is
/// nonzero; the empty word is the identity.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn generator(g: usize) -> Self {
        Self::power(g, 1)
    }

    pub fn power(g: usize, e: i64) -> Self {
        let mut w = Self::identity();
        w.push(g, e);
        w
    }

    /// Free reduction of an arbitrary sequence of syllables.
    pub fn reduce(letters: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Self::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((last, x)) if *last == g => {
                *x += e;
                if *x == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    fn append(&mut self, other: &Word) {
        for &(g, e) in &other.syllables {
            self.push(g, e);
        }
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting `x^e` as `|e|` letters.
    pub fn letter_count(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.syllables.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Self {
        Word { syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..n.unsigned_abs() {
            out.append(&base);
        }
        out
    }

    pub fn conjugate_by(&self, by: &Word) -> Self {
        &(by * self) * &by.inverse()
    }

    /// Exponent sum of each of the first `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for &(g, e) in &self.syllables {
            v[g] += e;
        }
        v
    }

    /// Image under the endomorphism `x_g -> images[g]`, freely reduced.
    pub fn apply_endomorphism(&self, images: &[Word]) -> Result<Word, GroupError> {
        let mut out = Self::identity();
        for &(g, e) in &self.syllables {
            let img = images.get(g).ok_or(GroupError::MissingImage(g))?;
            if e > 0 {
                for _ in 0..e {
                    out.append(img);
                }
            } else {
                let inv = img.inverse();
                for _ in 0..-e {
                    out.append(&inv);
                }
            }
        }
        Ok(out)
    }

    /// Parses whitespace-separated tokens `name` or `name^e`.
    pub fn parse(text: &str, names: &[String]) -> Result<Self, GroupError> {
        let mut w = Self::identity();
        for token in text.split_whitespace() {
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let e: i64 =
                        e.parse().map_err(|_| GroupError::BadToken(token.to_string()))?;
                    if e == 0 {
                        return Err(GroupError::BadToken(token.to_string()));
                    }
                    (n, e)
                }
                None => (token, 1),
            };
            let g = names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
            w.push(g, exp);
        }
        Ok(w)
    }

    /// Text form using the given generator names.
    pub fn format(&self, names: &[String]) -> String {
        if self.is_identity() {
            return "1".into();
        }
        let name = |g: usize| names.get(g).cloned().unwrap_or_else(|| format!("x{}", g + 1));
        self.syllables
            .iter()
            .map(|&(g, e)| if e == 1 { name(g) } else { format!("{}^{e}", name(g)) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl Mul<&Word> for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        let mut out = self.clone();
        out.append(rhs);
        out
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(mut self, rhs: Word) -> Word {
        self.append(&rhs);
        self
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Uses the names `x1, x2, ...`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(&[]))
    }
}
