use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::AlgebraError;

/// A finitely supported map `m -> p_m(y)` from `Z^n` to Laurent
/// polynomials, read as the element `sum_m p_m(y) chi^m` of `Q[M][y, 1/y]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CharacterSum {
    n: usize,
    terms: BTreeMap<Vec<i64>, LaurentPoly>,
}

impl CharacterSum {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `p * chi^m`
    pub fn single(m: Vec<i64>, p: LaurentPoly) -> Self {
        let mut s = Self::zero(m.len());
        s.add_term(m, &p);
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, m: &[i64]) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic order of the character.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &LaurentPoly)> + '_ {
        self.terms.iter().map(|(m, p)| (m.as_slice(), p))
    }

    /// Adds `p * chi^m`.
    ///
    /// # Panics
    /// If `m` does not have length `n`.
    pub fn add_term(&mut self, m: Vec<i64>, p: &LaurentPoly) {
        assert_eq!(m.len(), self.n, "character of the wrong dimension");
        if p.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(p.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += p;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CharacterSum) -> Result<CharacterSum, AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let mut out = self.clone();
        for (m, p) in &other.terms {
            out.add_term(m.clone(), p);
        }
        Ok(out)
    }

    pub fn scale(&self, p: &LaurentPoly) -> CharacterSum {
        self.map_values(|v| v * p)
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_values<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> CharacterSum {
        let terms = self
            .terms
            .iter()
            .map(|(m, p)| (m.clone(), f(p)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        CharacterSum { n: self.n, terms }
    }

    /// The involution `chi^m -> chi^{-m}`.
    pub fn negate_characters(&self) -> CharacterSum {
        CharacterSum {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, p)| (m.iter().map(|x| -x).collect(), p.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficient polynomials (the image of `chi^m -> 1`).
    pub fn total(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for p in self.terms.values() {
            acc += p;
        }
        acc
    }
}

impl fmt::Display for CharacterSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, p)| {
                let m: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                format!("({})*chi^({})", p, m.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    m: Vec<i64>,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct CharSumJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for CharacterSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CharSumJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, p)| TermJson {
                    m: m.clone(),
                    coeff: p.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CharacterSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = CharSumJson::deserialize(d)?;
        let mut out = CharacterSum::zero(raw.n);
        for t in raw.terms {
            if t.m.len() != raw.n {
                return Err(D::Error::custom(format!(
                    "character {:?} has length {}, expected {}",
                    t.m,
                    t.m.len(),
                    raw.n
                )));
            }
            out.add_term(t.m, &t.coeff);
        }
        Ok(out)
    }
}
