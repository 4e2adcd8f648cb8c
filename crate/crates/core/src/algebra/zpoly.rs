use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use super::rat::{format_rat, Rat};
use super::AlgebraError;

/// A polynomial `sum_k c_k(y) z^k` in the dilation variable `z` whose
/// coefficients are Laurent polynomials in `y`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<LaurentPoly>", into = "Vec<LaurentPoly>")]
pub struct ZPoly {
    coeffs: Vec<LaurentPoly>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn eval(&self, z: &Rat) -> LaurentPoly {
        // Horner
        let mut acc = LaurentPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc.scale(z) + c;
        }
        acc
    }

    pub fn eval_int(&self, z: i64) -> LaurentPoly {
        self.eval(&Rat::from_integer(z.into()))
    }
}

impl From<Vec<LaurentPoly>> for ZPoly {
    fn from(v: Vec<LaurentPoly>) -> Self {
        ZPoly::new(v)
    }
}

impl From<ZPoly> for Vec<LaurentPoly> {
    fn from(z: ZPoly) -> Self {
        z.coeffs
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*z"),
                _ => format!("({c})*z^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Multiplies a dense rational polynomial (ascending coefficients) by `z - a`.
fn mul_linear(p: &[Rat], a: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * a;
    }
    out
}

/// Exact Lagrange interpolation of Laurent-valued samples.
///
/// Interpolation is linear in the values, so each `y`-coefficient is
/// interpolated independently through the same Lagrange basis.
pub fn lagrange_interpolate(
    samples: &[(Rat, LaurentPoly)],
    degree_bound: usize,
) -> Result<ZPoly, AlgebraError> {
    if samples.is_empty() {
        return Err(AlgebraError::NoSamples);
    }
    if samples.len() != degree_bound + 1 {
        return Err(AlgebraError::SampleCount {
            expected: degree_bound + 1,
            bound: degree_bound,
            got: samples.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for (x, _) in samples {
        if !seen.insert(x.clone()) {
            return Err(AlgebraError::DuplicateNode(format_rat(x)));
        }
    }

    let mut coeffs = vec![LaurentPoly::zero(); samples.len()];
    for (i, (xi, vi)) in samples.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        let mut basis = vec![Rat::one()];
        let mut denom = Rat::one();
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i != j {
                basis = mul_linear(&basis, xj);
                denom *= xi - xj;
            }
        }
        let inv = denom.recip();
        for (k, b) in basis.iter().enumerate() {
            if !b.is_zero() {
                coeffs[k] += &vi.scale(&(b * &inv));
            }
        }
    }
    Ok(ZPoly::new(coeffs))
}
