//! Braid words over the Artin generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::LinkError;

/// One letter `σ_i^{±1}`; `generator` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub positive: bool,
}

impl Letter {
    pub fn new(generator: usize, positive: bool) -> Self {
        Self {
            generator,
            positive,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            positive: !self.positive,
            ..self
        }
    }

    /// Signed integer token, `-k` for `σ_k^{-1}`.
    pub fn token(self) -> i64 {
        if self.positive {
            self.generator as i64
        } else {
            -(self.generator as i64)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, LinkError> {
        if strands == 0 {
            return Err(LinkError::NoStrands);
        }
        for l in &letters {
            if l.generator == 0 || l.generator >= strands {
                return Err(LinkError::GeneratorOutOfRange {
                    generator: l.token(),
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, LinkError> {
        Self::new(strands, Vec::new())
    }

    /// Builds a word from signed generator indices.
    pub fn from_tokens(strands: usize, tokens: &[i64]) -> Result<Self, LinkError> {
        let letters = tokens
            .iter()
            .map(|&k| {
                if k == 0 {
                    return Err(LinkError::BadToken {
                        token: k.to_string(),
                    });
                }
                let g = k.unsigned_abs() as usize;
                if g >= strands {
                    return Err(LinkError::GeneratorOutOfRange {
                        generator: k,
                        strands,
                    });
                }
                Ok(Letter::new(g, k > 0))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    /// Parses whitespace separated signed generator indices.
    pub fn parse(text: &str, strands: usize) -> Result<Self, LinkError> {
        if strands == 0 {
            return Err(LinkError::NoStrands);
        }
        let tokens = text
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>().map_err(|_| LinkError::BadToken {
                    token: t.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_tokens(strands, &tokens)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn tokens(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.token()).collect()
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation `self · other`, read left to right.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands,
            letters,
        }
    }

    /// Places `other` on the strands to the right of `self`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let shift = self.strands;
        let mut letters = self.letters.clone();
        letters.extend(
            other
                .letters
                .iter()
                .map(|l| Letter::new(l.generator + shift, l.positive)),
        );
        Self {
            strands: self.strands + other.strands,
            letters,
        }
    }

    /// Sum of letter exponents.
    pub fn exponent_sum(&self) -> i64 {
        self.letters
            .iter()
            .map(|l| if l.positive { 1 } else { -1 })
            .sum()
    }

    /// Underlying permutation, reading letters bottom to top: the strand
    /// starting at position `i` ends at position `perm[i]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        // at[pos] = starting strand currently at pos
        for l in &self.letters {
            at.swap(l.generator - 1, l.generator);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    /// Number of cycles of the underlying permutation.
    pub fn permutation_cycles(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for i in 0..perm.len() {
            if seen[i] {
                continue;
            }
            cycles += 1;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
        cycles
    }

    /// The full twist `Δ²` on all strands, `(σ_1 ⋯ σ_{n-1})^n`.
    pub fn full_twist(strands: usize) -> Result<Self, LinkError> {
        let row: Vec<Letter> = (1..strands).map(|g| Letter::new(g, true)).collect();
        let letters = row.iter().copied().cycle().take(row.len() * strands).collect();
        Self::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", l.token())?;
        }
        Ok(())
    }
}
