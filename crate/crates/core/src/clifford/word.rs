use std::fmt;

use crate::error::{Error, Result};

/// Normalized product of distinct frame generators, stored as a bit set.
///
/// Bit `j - 1` stands for `c(e_j)`; generator 4 is the normal covector.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(u8);

impl Word {
    pub const IDENTITY: Word = Word(0);

    pub fn generator(j: u8) -> Word {
        assert!((1..=4).contains(&j), "generator index {j} out of range");
        Word(1 << (j - 1))
    }

    pub fn from_bits(bits: u8) -> Word {
        Word(bits & 0xf)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }

    pub fn indices(self) -> Vec<u8> {
        (1..=4).filter(|j| self.0 & (1 << (j - 1)) != 0).collect()
    }

    /// Product of normalized words: sign and the resulting word.
    ///
    /// Moving each generator of `b` left past the larger generators of `a`
    /// costs one sign each; every shared generator then squares to `-1`.
    pub fn mul(self, b: Word) -> (i8, Word) {
        let mut swaps = 0;
        for j in 0..4 {
            if b.0 & (1 << j) != 0 {
                swaps += (self.0 >> (j + 1)).count_ones();
            }
        }
        swaps += (self.0 & b.0).count_ones();
        (if swaps % 2 == 0 { 1 } else { -1 }, Word(self.0 ^ b.0))
    }

    /// Normalizes an arbitrary generator sequence.
    pub fn from_sequence(seq: &[u8]) -> (i8, Word) {
        seq.iter().fold((1, Word::IDENTITY), |(s, w), &j| {
            let (t, v) = w.mul(Word::generator(j));
            (s * t, v)
        })
    }

    pub fn parse(s: &str) -> Result<Word> {
        if s == "1" {
            return Ok(Word::IDENTITY);
        }
        let mut seq = Vec::new();
        for part in s.split('.') {
            let j = part
                .strip_prefix('c')
                .and_then(|d| d.parse::<u8>().ok())
                .filter(|d| (1..=4).contains(d))
                .ok_or_else(|| Error::Parse(s.to_string()))?;
            seq.push(j);
        }
        if seq.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(Word::from_sequence(&seq).1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.indices().iter().map(|j| format!("c{j}")).collect();
        f.write_str(&parts.join("."))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_square_to_minus_one() {
        for j in 1..=4 {
            assert_eq!(Word::generator(j).mul(Word::generator(j)), (-1, Word::IDENTITY));
        }
    }

    #[test]
    fn distinct_generators_anticommute() {
        for i in 1..=4 {
            for j in 1..=4 {
                if i != j {
                    let (s, w) = Word::generator(i).mul(Word::generator(j));
                    let (t, v) = Word::generator(j).mul(Word::generator(i));
                    assert_eq!(w, v);
                    assert_eq!(s, -t);
                }
            }
        }
    }

    #[test]
    fn text_form() {
        let (s, w) = Word::from_sequence(&[4, 1, 3]);
        assert_eq!(w.to_string(), "c1.c3.c4");
        assert_eq!(s, 1);
        assert_eq!(Word::parse("c1.c3.c4").unwrap(), w);
        assert_eq!(Word::parse("1").unwrap(), Word::IDENTITY);
        assert!(Word::parse("c3.c1").is_err());
    }
}
