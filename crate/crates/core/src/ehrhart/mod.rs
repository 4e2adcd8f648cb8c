//! Weighted Ehrhart theory: equivariant character sums, the weighted
//! Ehrhart values and polynomials, and exact checks of the reciprocity,
//! duality and purity identities relating them.
//!
//! Values at negative dilations always come from the interpolated
//! polynomial, never from the closed-face formula they are compared with.

mod report;
mod suite;

pub use report::{Check, EhrhartReport, SuiteReport};
pub use suite::{run_suite, NamedPhi, NamedWeight, Suite};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{lagrange_interpolate, AlgebraError, CharacterSum, HomogPoly, LaurentPoly, Rat, ZPoly};
use crate::polytope::{points_by_face, FaceId, FaceLattice, PointsByFace, PolytopeError};
use crate::stanley::{Stanley, StanleyError};
use crate::weights::{dualize, WeightError, WeightFunction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EhrhartError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Stanley(#[from] StanleyError),
    #[error("interpolated polynomial gives {interpolated} at l = {ell}, direct evaluation gives {direct}")]
    Overdetermination {
        ell: i64,
        interpolated: String,
        direct: String,
    },
    #[error("interpolated constant term {interpolated} differs from the closed formula {formula}")]
    ConstantTerm { interpolated: String, formula: String },
}

/// `E` carries the extra factor `(1+y)^deg(phi)`; `Etilde` does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    E,
    #[serde(rename = "Etilde")]
    ETilde,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::E, Variant::ETilde];

    pub fn name(self) -> &'static str {
        match self {
            Variant::E => "E",
            Variant::ETilde => "Etilde",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "E" => Ok(Variant::E),
            "Etilde" | "ETilde" | "Ẽ" => Ok(Variant::ETilde),
            other => Err(format!("unknown variant {other:?}, expected E or Etilde")),
        }
    }
}

fn sign_pow(k: u32) -> Rat {
    Rat::from_integer(if k % 2 == 0 { 1 } else { -1 }.into())
}

/// Image of `sum_m s(m) chi^m` under `chi^m -> phi(-m)` (`Etilde`) or
/// `chi^m -> phi(-(1+y) m)` (`E`).
pub fn apply_phi(s: &CharacterSum, phi: &HomogPoly, variant: Variant) -> Result<LaurentPoly, EhrhartError> {
    if s.n() != phi.n() {
        return Err(AlgebraError::DimensionMismatch {
            expected: phi.n(),
            got: s.n(),
        }
        .into());
    }
    let mut acc = LaurentPoly::zero();
    for (m, p) in s.terms() {
        let neg: Vec<i64> = m.iter().map(|x| -x).collect();
        let v = phi.eval_unchecked(&neg);
        if !v.is_zero() {
            acc += &p.scale(&v);
        }
    }
    Ok(match variant {
        Variant::ETilde => acc,
        Variant::E => &acc * &LaurentPoly::one_plus_y().pow(phi.degree()),
    })
}

/// The involution `chi^m -> chi^{-m}`.
pub fn negate_characters(s: &CharacterSum) -> CharacterSum {
    s.negate_characters()
}

type SumKey = (i64, HomogPoly);
type PolyKey = (WeightFunction, HomogPoly, Variant);

/// Computation context for one polytope. Lattice point partitions, per-face
/// `phi`-sums and interpolated polynomials are cached.
pub struct Ehrhart<'a> {
    lattice: &'a FaceLattice,
    stanley: Stanley<'a>,
    points: Mutex<HashMap<i64, Arc<PointsByFace>>>,
    sums: Mutex<HashMap<SumKey, Arc<Vec<Rat>>>>,
    polys: Mutex<HashMap<PolyKey, ZPoly>>,
}

impl<'a> Ehrhart<'a> {
    pub fn new(lattice: &'a FaceLattice) -> Self {
        Self {
            lattice,
            stanley: Stanley::new(lattice),
            points: Mutex::default(),
            sums: Mutex::default(),
            polys: Mutex::default(),
        }
    }

    pub fn lattice(&self) -> &'a FaceLattice {
        self.lattice
    }

    pub fn stanley(&self) -> &Stanley<'a> {
        &self.stanley
    }

    pub fn points(&self, ell: i64) -> Result<Arc<PointsByFace>, EhrhartError> {
        if let Some(p) = self.points.lock().unwrap().get(&ell) {
            return Ok(p.clone());
        }
        let p = Arc::new(points_by_face(self.lattice, ell)?);
        self.points.lock().unwrap().insert(ell, p.clone());
        Ok(p)
    }

    fn check_phi(&self, phi: &HomogPoly) -> Result<(), EhrhartError> {
        if phi.n() != self.lattice.n() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.lattice.n(),
                got: phi.n(),
            }
            .into());
        }
        Ok(())
    }

    /// `sum_{m in Relint(lQ)} phi(m)` for every face `Q`, indexed by face id.
    pub fn relint_sums(&self, phi: &HomogPoly, ell: i64) -> Result<Arc<Vec<Rat>>, EhrhartError> {
        self.check_phi(phi)?;
        let key = (ell, phi.clone());
        if let Some(s) = self.sums.lock().unwrap().get(&key) {
            return Ok(s.clone());
        }
        let pts = self.points(ell)?;
        let sums: Vec<Rat> = (0..self.lattice.len())
            .map(|q| {
                pts.relint(q)
                    .iter()
                    .fold(Rat::zero(), |acc, m| acc + phi.eval_unchecked(m))
            })
            .collect();
        let sums = Arc::new(sums);
        self.sums.lock().unwrap().insert(key, sums.clone());
        Ok(sums)
    }

    /// `sum_{m in lQ} phi(m)` over the closed face.
    pub fn closed_sum(&self, phi: &HomogPoly, ell: i64, q: FaceId) -> Result<Rat, EhrhartError> {
        let sums = self.relint_sums(phi, ell)?;
        Ok(self
            .lattice
            .faces_below(q)
            .fold(Rat::zero(), |acc, e| acc + &sums[e]))
    }

    /// The equivariant Hodge polynomial as a character sum:
    ///
    /// * `l > 0`: `sum_Q f_Q (1+y)^dim Q sum_{m in Relint(lQ)} chi^{-m}`
    /// * `l = -k < 0`: `sum_Q f_Q (-1-y)^dim Q sum_{m in kQ} chi^{m}`
    /// * `l = 0`: `(sum_Q f_Q (-1-y)^dim Q) chi^0`
    pub fn hodge_character_sum(&self, f: &WeightFunction, ell: i64) -> Result<CharacterSum, EhrhartError> {
        f.check(self.lattice)?;
        let n = self.lattice.n();
        let mut out = CharacterSum::zero(n);
        match ell {
            0 => {
                let mut total = LaurentPoly::zero();
                for (q, v) in f.values() {
                    total += &(v * &LaurentPoly::minus_one_minus_y().pow(self.lattice.dim(q) as u32));
                }
                out.add_term(vec![0; n], &total);
            }
            l if l > 0 => {
                let pts = self.points(l)?;
                for (q, v) in f.values() {
                    let c = v * &LaurentPoly::one_plus_y().pow(self.lattice.dim(q) as u32);
                    for m in pts.relint(q) {
                        out.add_term(m.iter().map(|x| -x).collect(), &c);
                    }
                }
            }
            l => {
                let pts = self.points(-l)?;
                for (q, v) in f.values() {
                    let c = v * &LaurentPoly::minus_one_minus_y().pow(self.lattice.dim(q) as u32);
                    for m in pts.closed(self.lattice, q) {
                        out.add_term(m.clone(), &c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `sum_Q f_Q (1+y)^(dim Q [+ deg phi]) sum_{m in Relint(lQ)} phi(m)` for
    /// `l >= 1`, the bracketed exponent only for [`Variant::E`].
    pub fn weighted_value(
        &self,
        f: &WeightFunction,
        phi: &HomogPoly,
        ell: i64,
        variant: Variant,
    ) -> Result<LaurentPoly, EhrhartError> {
        f.check(self.lattice)?;
        if ell <= 0 {
            return Err(PolytopeError::NonPositiveDilation(ell).into());
        }
        let sums = self.relint_sums(phi, ell)?;
        let extra = match variant {
            Variant::E => phi.degree(),
            Variant::ETilde => 0,
        };
        let mut acc = LaurentPoly::zero();
        for (q, v) in f.values() {
            if sums[q].is_zero() {
                continue;
            }
            let e = self.lattice.dim(q) as u32 + extra;
            acc += &(v * &LaurentPoly::one_plus_y().pow(e)).scale(&sums[q]);
        }
        Ok(acc)
    }

    /// Closed formula for the value at `l = 0`:
    /// `sum_Q f_Q (-1-y)^(dim Q + deg phi) phi(0)` for `E`, and
    /// `sum_Q f_Q (-1-y)^dim Q (-1)^deg phi phi(0)` for `Etilde`.
    pub fn constant_term(
        &self,
        f: &WeightFunction,
        phi: &HomogPoly,
        variant: Variant,
    ) -> Result<LaurentPoly, EhrhartError> {
        self.closed_face_formula(f, phi, variant, |_| Ok(phi.eval_unchecked(&vec![0; phi.n()])))
    }

    /// Right-hand side of reciprocity: the constant-term formula with
    /// `phi(0)` replaced by the sum of `phi` over the closed face `lQ`.
    pub fn reciprocity_rhs(
        &self,
        f: &WeightFunction,
        phi: &HomogPoly,
        ell: i64,
        variant: Variant,
    ) -> Result<LaurentPoly, EhrhartError> {
        self.closed_face_formula(f, phi, variant, |q| self.closed_sum(phi, ell, q))
    }

    fn closed_face_formula<S>(
        &self,
        f: &WeightFunction,
        phi: &HomogPoly,
        variant: Variant,
        face_sum: S,
    ) -> Result<LaurentPoly, EhrhartError>
    where
        S: Fn(FaceId) -> Result<Rat, EhrhartError>,
    {
        f.check(self.lattice)?;
        self.check_phi(phi)?;
        let deg = phi.degree();
        let mut acc = LaurentPoly::zero();
        for (q, v) in f.values() {
            let s = face_sum(q)?;
            if s.is_zero() {
                continue;
            }
            let d = self.lattice.dim(q) as u32;
            let factor = match variant {
                Variant::E => LaurentPoly::minus_one_minus_y().pow(d + deg),
                Variant::ETilde => LaurentPoly::minus_one_minus_y().pow(d).scale(&sign_pow(deg)),
            };
            acc += &(v * &factor).scale(&s);
        }
        Ok(acc)
    }

    /// Interpolates the weighted Ehrhart polynomial in `z` from the values at
    /// `l = 1..=D+1`, `D = n + deg phi`, then insists that it also matches
    /// direct evaluation at `l = D+2, D+3` and the constant-term formula at
    /// `l = 0`.
    pub fn polynomial(
        &self,
        f: &WeightFunction,
        phi: &HomogPoly,
        variant: Variant,
    ) -> Result<ZPoly, EhrhartError> {
        f.check(self.lattice)?;
        self.check_phi(phi)?;
        let key = (f.clone(), phi.clone(), variant);
        if let Some(z) = self.polys.lock().unwrap().get(&key) {
            return Ok(z.clone());
        }
        let bound = self.lattice.n() + phi.degree() as usize;
        let samples = (1..=bound as i64 + 1)
            .map(|l| Ok((Rat::from_integer(l.into()), self.weighted_value(f, phi, l, variant)?)))
            .collect::<Result<Vec<_>, EhrhartError>>()?;
        let z = lagrange_interpolate(&samples, bound)?;

        for l in [bound as i64 + 2, bound as i64 + 3] {
            let direct = self.weighted_value(f, phi, l, variant)?;
            let interpolated = z.eval_int(l);
            if direct != interpolated {
                return Err(EhrhartError::Overdetermination {
                    ell: l,
                    interpolated: interpolated.to_string(),
                    direct: direct.to_string(),
                });
            }
        }
        let formula = self.constant_term(f, phi, variant)?;
        let interpolated = z.eval_int(0);
        if formula != interpolated {
            return Err(EhrhartError::ConstantTerm {
                interpolated: interpolated.to_string(),
                formula: formula.to_string(),
            });
        }
        self.polys.lock().unwrap().insert(key, z.clone());
        Ok(z)
    }

    /// `E(-l, y)` against the closed-face sum formula.
    pub fn verify_reciprocity(
        &self,
        f: &WeightFunction,
        phi: &HomogPoly,
        ell: i64,
        variant: Variant,
    ) -> Result<Check, EhrhartError> {
        let lhs = self.polynomial(f, phi, variant)?.eval_int(-ell);
        let rhs = self.reciprocity_rhs(f, phi, ell, variant)?;
        Ok(Check::new("reciprocity", ell, variant, &lhs, &rhs))
    }

    /// `E_f(-l, y) = (-y)^deg phi E_{D f}(l, 1/y)`, or with `(-1)^deg phi`
    /// for `Etilde`.
    pub fn verify_duality_reciprocity(
        &self,
        f: &WeightFunction,
        phi: &HomogPoly,
        ell: i64,
        variant: Variant,
    ) -> Result<Check, EhrhartError> {
        let lhs = self.polynomial(f, phi, variant)?.eval_int(-ell);
        let dual = dualize(self.lattice, f)?;
        let value = self.weighted_value(&dual, phi, ell, variant)?.substitute_inverse();
        let deg = phi.degree();
        let factor = match variant {
            Variant::E => LaurentPoly::neg_y_pow(deg as i64),
            Variant::ETilde => LaurentPoly::constant(sign_pow(deg)),
        };
        let rhs = &factor * &value;
        Ok(Check::new("duality_reciprocity", ell, variant, &lhs, &rhs))
    }

    /// Purity for the g-weights of `q2`:
    /// `E(-l, y) = (-y)^(dim q2 + deg phi) E(l, 1/y)`, or
    /// `(-y)^dim q2 (-1)^deg phi` for `Etilde`.
    pub fn verify_purity(
        &self,
        q2: FaceId,
        phi: &HomogPoly,
        ell: i64,
        variant: Variant,
    ) -> Result<Check, EhrhartError> {
        let f = self.stanley.g_weight_function(q2)?;
        let lhs = self.polynomial(&f, phi, variant)?.eval_int(-ell);
        let value = self.weighted_value(&f, phi, ell, variant)?.substitute_inverse();
        let dim = self.lattice.dim(q2) as i64;
        let deg = phi.degree();
        let factor = match variant {
            Variant::E => LaurentPoly::neg_y_pow(dim + deg as i64),
            Variant::ETilde => LaurentPoly::neg_y_pow(dim).scale(&sign_pow(deg)),
        };
        let rhs = &factor * &value;
        let mut check = Check::new("purity", ell, variant, &lhs, &rhs);
        check.params.insert("face".into(), q2.to_string());
        Ok(check)
    }

    /// `chi_y(lD; D f) = chi_{1/y}(-lD; f)` with `m -> -m`, as character sums.
    pub fn verify_hodge_duality(&self, f: &WeightFunction, ell: i64) -> Result<Check, EhrhartError> {
        if ell <= 0 {
            return Err(PolytopeError::NonPositiveDilation(ell).into());
        }
        let dual = dualize(self.lattice, f)?;
        let lhs = self.hodge_character_sum(&dual, ell)?;
        let rhs = self
            .hodge_character_sum(f, -ell)?
            .map_values(LaurentPoly::substitute_inverse)
            .negate_characters();
        let mut check = Check::compare("hodge_duality", &lhs, &rhs);
        check.params.insert("l".into(), ell.to_string());
        Ok(check)
    }

    /// The `Etilde`, `phi = 1` image of the `l = 0` character sum of the
    /// g-weights of `P`, with `y -> -y`, against the Stanley `h`-polynomial.
    pub fn verify_h_link(&self) -> Result<Check, EhrhartError> {
        let g = self.stanley.g_weight_function(self.lattice.top())?;
        let s = self.hodge_character_sum(&g, 0)?;
        let one = HomogPoly::one(self.lattice.n());
        let lhs = apply_phi(&s, &one, Variant::ETilde)?.substitute_neg();
        let rhs = self.stanley.h_polynomial().at_y();
        Ok(Check::compare("h_link", &lhs, &rhs))
    }
}

/// One-off helpers mirroring the methods of [`Ehrhart`].
pub fn hodge_character_sum(
    lattice: &FaceLattice,
    f: &WeightFunction,
    ell: i64,
) -> Result<CharacterSum, EhrhartError> {
    Ehrhart::new(lattice).hodge_character_sum(f, ell)
}

pub fn weighted_ehrhart_value(
    lattice: &FaceLattice,
    f: &WeightFunction,
    phi: &HomogPoly,
    ell: i64,
    variant: Variant,
) -> Result<LaurentPoly, EhrhartError> {
    Ehrhart::new(lattice).weighted_value(f, phi, ell, variant)
}

pub fn ehrhart_polynomial(
    lattice: &FaceLattice,
    f: &WeightFunction,
    phi: &HomogPoly,
    variant: Variant,
) -> Result<ZPoly, EhrhartError> {
    Ehrhart::new(lattice).polynomial(f, phi, variant)
}
