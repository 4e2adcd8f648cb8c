use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{format_rat, parse_rat, Rat};
use super::AlgebraError;

/// A homogeneous polynomial function on `Z^n` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    n: usize,
    degree: u32,
    monomials: BTreeMap<Vec<u32>, Rat>,
}

impl HomogPoly {
    /// Builds the polynomial, merging repeated exponent vectors and dropping
    /// zero coefficients. Fails if the exponent vectors have the wrong length
    /// or the surviving monomials do not share one total degree.
    pub fn new<I>(n: usize, monomials: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut merged: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (exps, c) in monomials {
            if exps.len() != n {
                return Err(AlgebraError::DimensionMismatch {
                    expected: n,
                    got: exps.len(),
                });
            }
            *merged.entry(exps).or_insert_with(Rat::zero) += c;
        }
        merged.retain(|_, c| !c.is_zero());
        let mut degree = None;
        for exps in merged.keys() {
            let d: u32 = exps.iter().sum();
            match degree {
                None => degree = Some(d),
                Some(expected) if expected != d => {
                    return Err(AlgebraError::NotHomogeneous { expected, found: d })
                }
                _ => {}
            }
        }
        Ok(Self {
            n,
            degree: degree.unwrap_or(0),
            monomials: merged,
        })
    }

    /// The constant function `c`.
    pub fn constant(n: usize, c: Rat) -> Self {
        Self::new(n, [(vec![0; n], c)]).expect("constant is homogeneous")
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rat::one())
    }

    /// The linear form `sum coeffs[i] * m_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        Self::new(
            n,
            coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; n];
                e[i] = 1;
                (e, c.clone())
            }),
        )
        .expect("linear form is homogeneous")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&[u32], &Rat)> + '_ {
        self.monomials.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn eval(&self, m: &[i64]) -> Result<Rat, AlgebraError> {
        if m.len() != self.n {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.n,
                got: m.len(),
            });
        }
        Ok(self.eval_unchecked(m))
    }

    pub(crate) fn eval_unchecked(&self, m: &[i64]) -> Rat {
        let mut acc = Rat::zero();
        for (exps, c) in &self.monomials {
            let mut term = c.clone();
            for (x, e) in m.iter().zip(exps) {
                if *e > 0 {
                    term *= Rat::from_integer(num_traits::pow((*x).into(), *e as usize));
                }
            }
            acc += term;
        }
        acc
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .monomials
            .iter()
            .map(|(exps, c)| {
                let mut s = format_rat(c);
                for (i, e) in exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => s.push_str(&format!("*m{}", i + 1)),
                        _ => s.push_str(&format!("*m{}^{}", i + 1, e)),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct HomogJson {
    n: usize,
    monomials: Vec<MonomialJson>,
}

impl Serialize for HomogPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        HomogJson {
            n: self.n,
            monomials: self
                .monomials
                .iter()
                .map(|(e, c)| MonomialJson {
                    exps: e.clone(),
                    coeff: format_rat(c),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomogPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = HomogJson::deserialize(d)?;
        let mut monos = Vec::with_capacity(raw.monomials.len());
        for m in raw.monomials {
            monos.push((m.exps, parse_rat(&m.coeff).map_err(D::Error::custom)?));
        }
        HomogPoly::new(raw.n, monos).map_err(D::Error::custom)
    }
}
