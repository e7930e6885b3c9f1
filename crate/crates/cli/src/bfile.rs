//! OEIS b-files: lines `n a(n)` with `n` ascending by one from 1.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BFileError {
    #[error("line {line}: {why}")]
    Malformed { line: usize, why: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BFile {
    terms: Vec<BigUint>,
}

impl BFile {
    pub fn new(terms: Vec<BigUint>) -> Self {
        BFile { terms }
    }

    /// `a(1), a(2), …`.
    pub fn terms(&self) -> &[BigUint] {
        &self.terms
    }

    pub fn render(&self) -> String {
        self.terms
            .iter()
            .enumerate()
            .map(|(i, a)| format!("{} {a}\n", i + 1))
            .collect()
    }

    /// Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self, BFileError> {
        let mut terms = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |why: String| BFileError::Malformed { line: i + 1, why };
            let mut f = line.split_whitespace();
            let (Some(n), Some(a), None) = (f.next(), f.next(), f.next()) else {
                return Err(bad(format!("expected `n a(n)`, got {line:?}")));
            };
            let n: usize = n.parse().map_err(|_| bad(format!("bad index {n:?}")))?;
            if n != terms.len() + 1 {
                return Err(bad(format!(
                    "index {n} where {} was expected",
                    terms.len() + 1
                )));
            }
            terms.push(a.parse().map_err(|_| bad(format!("bad term {a:?}")))?);
        }
        Ok(BFile { terms })
    }

    /// First index (1-based) where `self` and `expected` differ, over the
    /// shorter of the two.
    pub fn first_mismatch(&self, expected: &[BigUint]) -> Option<usize> {
        self.terms
            .iter()
            .zip(expected)
            .position(|(a, b)| a != b)
            .map(|i| i + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn terms(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn round_trip() {
        let b = BFile::new(terms(&[1, 1, 2, 3, 6]));
        assert_eq!(b.render(), "1 1\n2 1\n3 2\n4 3\n5 6\n");
        assert_eq!(BFile::parse(&b.render()).unwrap(), b);
    }

    #[test]
    fn rejects_gaps_and_junk() {
        assert!(BFile::parse("1 1\n3 2\n").is_err());
        assert!(BFile::parse("1 x\n").is_err());
        assert!(BFile::parse("0 1\n").is_err());
        assert_eq!(
            BFile::parse("# A008929\n\n1 1\n").unwrap().terms(),
            &terms(&[1])[..]
        );
    }

    #[test]
    fn mismatch_index() {
        let b = BFile::new(terms(&[1, 1, 2, 4]));
        assert_eq!(b.first_mismatch(&terms(&[1, 1, 2, 3])), Some(4));
        assert_eq!(b.first_mismatch(&terms(&[1, 1])), None);
    }
}
