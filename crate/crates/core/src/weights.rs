//! Weight functions: Laurent-polynomial weights on the nonempty faces of a
//! polytope, forming a free module over `Q[y, 1/y]`, and the duality
//! involution on that module.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{LaurentPoly, Rat};
use crate::polytope::{FaceId, FaceLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight function belongs to polytope {got}, expected {expected}")]
    LatticeMismatch { expected: String, got: String },
    #[error("weights live on nonempty faces only")]
    EmptyFace,
    #[error("no face with id {0}")]
    UnknownFace(FaceId),
}

/// Map from nonempty face ids to Laurent polynomials; absent means zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "WeightJson")]
pub struct WeightFunction {
    polytope_hash: String,
    values: BTreeMap<FaceId, LaurentPoly>,
}

#[derive(Deserialize)]
struct WeightJson {
    polytope_hash: String,
    values: BTreeMap<FaceId, LaurentPoly>,
}

impl From<WeightJson> for WeightFunction {
    fn from(raw: WeightJson) -> Self {
        let mut values = raw.values;
        values.retain(|_, v| !v.is_zero());
        Self {
            polytope_hash: raw.polytope_hash,
            values,
        }
    }
}

fn check_face(lattice: &FaceLattice, q: FaceId) -> Result<(), WeightError> {
    if q >= lattice.len() {
        return Err(WeightError::UnknownFace(q));
    }
    if lattice.dim(q) < 0 {
        return Err(WeightError::EmptyFace);
    }
    Ok(())
}

impl WeightFunction {
    pub fn zero(lattice: &FaceLattice) -> Self {
        Self {
            polytope_hash: lattice.polytope_hash().to_string(),
            values: BTreeMap::new(),
        }
    }

    /// Weight `1` on every nonempty face.
    pub fn all_ones(lattice: &FaceLattice) -> Self {
        Self::from_values(lattice, lattice.nonempty_faces().map(|q| (q, LaurentPoly::one())))
            .expect("nonempty faces")
    }

    /// The Kronecker weight: `1` at `q`, zero elsewhere.
    pub fn delta(lattice: &FaceLattice, q: FaceId) -> Result<Self, WeightError> {
        Self::from_values(lattice, [(q, LaurentPoly::one())])
    }

    pub fn from_values<I>(lattice: &FaceLattice, values: I) -> Result<Self, WeightError>
    where
        I: IntoIterator<Item = (FaceId, LaurentPoly)>,
    {
        let mut out = Self::zero(lattice);
        for (q, v) in values {
            check_face(lattice, q)?;
            out.add_at(q, &v);
        }
        Ok(out)
    }

    /// Random weight: each nonempty face is nonzero with probability 1/2,
    /// with coefficients uniform in `-3..=3` on exponents `-2..=2`.
    pub fn random<R: Rng>(lattice: &FaceLattice, rng: &mut R) -> Self {
        let mut out = Self::zero(lattice);
        for q in lattice.nonempty_faces() {
            if rng.gen_bool(0.5) {
                let p = LaurentPoly::from_terms(
                    (-2..=2).map(|k| (k, Rat::from_integer(rng.gen_range(-3..=3).into()))),
                );
                out.add_at(q, &p);
            }
        }
        out
    }

    pub fn random_seeded(lattice: &FaceLattice, seed: u64) -> Self {
        Self::random(lattice, &mut ChaCha8Rng::seed_from_u64(seed))
    }

    fn add_at(&mut self, q: FaceId, p: &LaurentPoly) {
        let slot = self.values.entry(q).or_default();
        *slot += p;
        if slot.is_zero() {
            self.values.remove(&q);
        }
    }

    pub fn polytope_hash(&self) -> &str {
        &self.polytope_hash
    }

    pub fn get(&self, q: FaceId) -> LaurentPoly {
        self.values.get(&q).cloned().unwrap_or_default()
    }

    /// Nonzero values in face order.
    pub fn values(&self) -> impl Iterator<Item = (FaceId, &LaurentPoly)> + '_ {
        self.values.iter().map(|(q, v)| (*q, v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Confirms that this weight function belongs to `lattice`.
    pub fn check(&self, lattice: &FaceLattice) -> Result<(), WeightError> {
        if self.polytope_hash != lattice.polytope_hash() {
            return Err(WeightError::LatticeMismatch {
                expected: lattice.polytope_hash().to_string(),
                got: self.polytope_hash.clone(),
            });
        }
        self.values.keys().try_for_each(|&q| check_face(lattice, q))
    }

    pub fn add(&self, other: &WeightFunction) -> Result<WeightFunction, WeightError> {
        if self.polytope_hash != other.polytope_hash {
            return Err(WeightError::LatticeMismatch {
                expected: self.polytope_hash.clone(),
                got: other.polytope_hash.clone(),
            });
        }
        let mut out = self.clone();
        for (q, v) in &other.values {
            out.add_at(*q, v);
        }
        Ok(out)
    }

    /// Pointwise multiplication by `p`.
    pub fn scale(&self, p: &LaurentPoly) -> WeightFunction {
        self.map_values(|v| v * p)
    }

    pub fn map_values<F: Fn(&LaurentPoly) -> LaurentPoly>(&self, f: F) -> WeightFunction {
        WeightFunction {
            polytope_hash: self.polytope_hash.clone(),
            values: self
                .values
                .iter()
                .map(|(q, v)| (*q, f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(q, v)| format!("{q}: {v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The duality involution on weight functions:
///
/// `D(f)_Q(y) = sum_{Q <= E <= P} (1+y)^(dim E - dim Q) (-y)^(-dim E) f_E(1/y)`,
///
/// with `E` ranging over nonempty faces.
pub fn dualize(lattice: &FaceLattice, f: &WeightFunction) -> Result<WeightFunction, WeightError> {
    f.check(lattice)?;
    let one_plus_y = LaurentPoly::one_plus_y();
    // (-y)^(-dim E) f_E(1/y), computed once per face
    let twisted: BTreeMap<FaceId, LaurentPoly> = f
        .values()
        .map(|(e, v)| {
            let d = lattice.dim(e) as i64;
            (e, &LaurentPoly::neg_y_pow(-d) * &v.substitute_inverse())
        })
        .collect();
    let mut out = WeightFunction::zero(lattice);
    for q in lattice.nonempty_faces() {
        let dq = lattice.dim(q);
        let mut acc = LaurentPoly::zero();
        for (e, t) in &twisted {
            if lattice.leq(q, *e) {
                let gap = (lattice.dim(*e) - dq) as u32;
                acc += &(&one_plus_y.pow(gap) * t);
            }
        }
        out.add_at(q, &acc);
    }
    Ok(out)
}
