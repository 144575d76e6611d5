//! Finite words over the two-letter alphabet `{a, b}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

/// A word; the empty word counts as both positive and negative.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn repeat(letter: Letter, n: usize) -> Self {
        Word(vec![letter; n])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.0.first() != Some(&Letter::B)
    }

    pub fn is_negative(&self) -> bool {
        self.0.first() != Some(&Letter::A)
    }

    /// Exchange every `a` with `b`.
    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|l| l.swapped()).collect())
    }

    /// Same word with the first letter switched; the empty word is unchanged.
    pub fn first_switched(&self) -> Word {
        let mut w = self.clone();
        if let Some(first) = w.0.first_mut() {
            *first = first.swapped();
        }
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.0.len())].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word(self.0[start.min(self.0.len())..].to_vec())
    }

    /// True if `w[k] == w[k + period]` wherever both are defined.
    pub fn has_period(&self, period: usize) -> bool {
        period > 0 && self.0.iter().zip(self.0.iter().skip(period)).all(|(x, y)| x == y)
    }

    pub(crate) fn set(&mut self, k: usize, letter: Letter) {
        self.0[k] = letter;
    }

    /// Compact run-length form, e.g. `ab^3ab^2`; the empty word prints as `ε`.
    pub fn to_power_string(&self) -> String {
        if self.0.is_empty() {
            return "ε".to_string();
        }
        let mut out = String::new();
        let mut k = 0;
        while k < self.0.len() {
            let letter = self.0[k];
            let run = self.0[k..].iter().take_while(|&&l| l == letter).count();
            out.push(letter.as_char());
            if run > 1 {
                out.push('^');
                out.push_str(&run.to_string());
            }
            k += run;
        }
        out
    }

    /// Run-length segments `(letter, count)`.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut runs: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.0 {
            match runs.last_mut() {
                Some((last, count)) if *last == l => *count += 1,
                _ => runs.push((l, 1)),
            }
        }
        runs
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.to_power_string())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts plain (`abbab`) and power (`ab^2ab`) forms; `""`, `ε` and `e` denote the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { input: s.to_string(), expected: "a word over {a, b}" };
        let t = s.trim();
        if t.is_empty() || t == "ε" || t == "e" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut chars = t.chars().peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                'a' => Letter::A,
                'b' => Letter::B,
                _ => return Err(bad()),
            };
            let mut count = 1usize;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                count = digits.parse().map_err(|_| bad())?;
            }
            letters.extend(std::iter::repeat_n(letter, count));
        }
        Ok(Word(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
