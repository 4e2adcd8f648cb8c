//! Stanley's toric f/g/h-polynomials on the face posets of polar faces.
//!
//! The polar face `Q°` inside `Q'°` is never built geometrically. Its face
//! poset is the interval `[Q, Q']` of the face lattice with the order
//! reversed, which is all the recursion needs.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::Mutex;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{format_rat, LaurentPoly, Rat};
use crate::polytope::{FaceId, FaceLattice};
use crate::weights::WeightFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StanleyError {
    #[error("face {0} is not a face of {1}")]
    NotComparable(FaceId, FaceId),
    #[error("polar g-polynomials are indexed by nonempty faces")]
    EmptyFace,
    #[error("no face with id {0}")]
    UnknownFace(FaceId),
    #[error("interval [{0}, {1}] is not Eulerian")]
    NotEulerian(FaceId, FaceId),
}

/// Polynomial in the abstract variable `t`, ascending dense coefficients
/// with no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyT(Vec<Rat>);

impl PolyT {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self(vec![Rat::one()])
    }

    /// `t - 1`
    pub fn t_minus_one() -> Self {
        Self(vec![-Rat::one(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `t^d p(1/t)`; requires `d >= deg p`.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.0.len() <= d + 1, "degree exceeds reversal length");
        let mut c = self.0.clone();
        c.resize(d + 1, Rat::zero());
        c.reverse();
        Self::new(c)
    }

    /// The substitution `t -> -y`.
    pub fn at_neg_y(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.0.iter().enumerate().map(|(i, c)| {
            let c = if i % 2 == 0 { c.clone() } else { -c };
            (i as i64, c)
        }))
    }

    /// The substitution `t -> y`.
    pub fn at_y(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.0.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }
}

impl Add<&PolyT> for &PolyT {
    type Output = PolyT;
    fn add(self, rhs: &PolyT) -> PolyT {
        let len = self.0.len().max(rhs.0.len());
        PolyT::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&PolyT> for &PolyT {
    type Output = PolyT;
    fn sub(self, rhs: &PolyT) -> PolyT {
        let len = self.0.len().max(rhs.0.len());
        PolyT::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&PolyT> for &PolyT {
    type Output = PolyT;
    fn mul(self, rhs: &PolyT) -> PolyT {
        if self.0.is_empty() || rhs.0.is_empty() {
            return PolyT::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyT::new(out)
    }
}

impl fmt::Display for PolyT {
    /// `1 + 2*t + 1*t^2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rat(c),
                1 => format!("{}*t", format_rat(c)),
                _ => format!("{}*t^{}", format_rat(c), i),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The interval `[bottom, top]` of a face lattice with the order reversed:
/// `top` is the minimum, `bottom` the maximum, and `rank(e) = dim top - dim e`.
/// It is the face poset of the polar face of `bottom` inside `top`.
#[derive(Clone, Copy, Debug)]
pub struct ReversedInterval<'a> {
    lattice: &'a FaceLattice,
    bottom: FaceId,
    top: FaceId,
}

impl<'a> ReversedInterval<'a> {
    pub fn new(lattice: &'a FaceLattice, bottom: FaceId, top: FaceId) -> Result<Self, StanleyError> {
        for q in [bottom, top] {
            if q >= lattice.len() {
                return Err(StanleyError::UnknownFace(q));
            }
        }
        if !lattice.leq(bottom, top) {
            return Err(StanleyError::NotComparable(bottom, top));
        }
        Ok(Self {
            lattice,
            bottom,
            top,
        })
    }

    pub fn bottom(&self) -> FaceId {
        self.bottom
    }

    pub fn top(&self) -> FaceId {
        self.top
    }

    /// Faces `e` with `bottom <= e <= top`.
    pub fn elements(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.lattice
            .faces_above(self.bottom)
            .filter(|&e| self.lattice.leq(e, self.top))
    }

    pub fn rank(&self, e: FaceId) -> i32 {
        self.lattice.dim(self.top) - self.lattice.dim(e)
    }

    /// Rank of the maximum element `bottom`.
    pub fn max_rank(&self) -> i32 {
        self.rank(self.bottom)
    }

    /// Every nontrivial subinterval has equally many elements of even and
    /// odd rank.
    pub fn is_eulerian(&self) -> bool {
        let elems: Vec<FaceId> = self.elements().collect();
        let l = self.lattice;
        for &a in &elems {
            for &b in &elems {
                if a == b || !l.leq(a, b) {
                    continue;
                }
                let balance: i32 = elems
                    .iter()
                    .filter(|&&c| l.leq(a, c) && l.leq(c, b))
                    .map(|&c| if self.rank(c) % 2 == 0 { 1 } else { -1 })
                    .sum();
                if balance != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Memoized Stanley recursion over the reversed intervals of one lattice.
pub struct Stanley<'a> {
    lattice: &'a FaceLattice,
    memo: Mutex<HashMap<(FaceId, FaceId), (PolyT, PolyT)>>,
}

impl<'a> Stanley<'a> {
    pub fn new(lattice: &'a FaceLattice) -> Self {
        Self {
            lattice,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn lattice(&self) -> &'a FaceLattice {
        self.lattice
    }

    /// `(f, g)` of a reversed interval.
    ///
    /// With `r + 1` the rank of the interval,
    /// `f(t) = sum_{x < max} g([min, x]) (t - 1)^(r - rank x)` and `g` keeps
    /// the first differences `k_i - k_(i-1)` of the coefficients of `f` for
    /// `i <= r / 2`. A one-element interval has `f = g = 1`.
    pub fn fg(&self, interval: &ReversedInterval<'_>) -> Result<(PolyT, PolyT), StanleyError> {
        if !interval.is_eulerian() {
            return Err(StanleyError::NotEulerian(interval.bottom, interval.top));
        }
        Ok(self.fg_unchecked(interval.bottom, interval.top))
    }

    fn fg_unchecked(&self, bottom: FaceId, top: FaceId) -> (PolyT, PolyT) {
        if let Some(hit) = self.memo.lock().unwrap().get(&(bottom, top)) {
            return hit.clone();
        }
        let result = if bottom == top {
            (PolyT::one(), PolyT::one())
        } else {
            let l = self.lattice;
            let db = l.dim(bottom);
            // r = dim top - dim bottom - 1; the exponent r - rank(e) is
            // dim e - dim bottom - 1.
            let r = (l.dim(top) - db - 1) as usize;
            let mut f = PolyT::zero();
            for e in l.faces_above(bottom) {
                if e == bottom || !l.leq(e, top) {
                    continue;
                }
                let (_, g_sub) = self.fg_unchecked(e, top);
                let exp = (l.dim(e) - db - 1) as u32;
                f = &f + &(&g_sub * &PolyT::t_minus_one().pow(exp));
            }
            let g = PolyT::new(
                (0..=r / 2)
                    .map(|i| {
                        let prev = if i == 0 { Rat::zero() } else { f.coeff(i - 1) };
                        f.coeff(i) - prev
                    })
                    .collect(),
            );
            (f, g)
        };
        self.memo
            .lock()
            .unwrap()
            .insert((bottom, top), result.clone());
        result
    }

    /// `g` of the polar face of `q` in `q2`.
    pub fn polar_g(&self, q: FaceId, q2: FaceId) -> Result<PolyT, StanleyError> {
        for f in [q, q2] {
            if f >= self.lattice.len() {
                return Err(StanleyError::UnknownFace(f));
            }
            if self.lattice.dim(f) < 0 {
                return Err(StanleyError::EmptyFace);
            }
        }
        let interval = ReversedInterval::new(self.lattice, q, q2)?;
        Ok(self.fg(&interval)?.1)
    }

    /// `f_Q(y) = g_{Q°}(-y)` for `Q <= q2`, zero otherwise.
    pub fn g_weight_function(&self, q2: FaceId) -> Result<WeightFunction, StanleyError> {
        if q2 >= self.lattice.len() {
            return Err(StanleyError::UnknownFace(q2));
        }
        if self.lattice.dim(q2) < 0 {
            return Err(StanleyError::EmptyFace);
        }
        let values = self
            .lattice
            .faces_below(q2)
            .filter(|&q| self.lattice.dim(q) >= 0)
            .map(|q| Ok((q, self.polar_g(q, q2)?.at_neg_y())))
            .collect::<Result<Vec<_>, StanleyError>>()?;
        Ok(WeightFunction::from_values(self.lattice, values).expect("nonempty faces"))
    }

    /// The `h`-polynomial of the polar polytope: `f` of the whole reversed
    /// lattice `[empty, P]`.
    pub fn h_polynomial(&self) -> PolyT {
        let l = self.lattice;
        self.fg_unchecked(l.empty_face(), l.top()).0
    }
}

pub fn stanley_fg(interval: &ReversedInterval<'_>) -> Result<(PolyT, PolyT), StanleyError> {
    Stanley::new(interval.lattice).fg(interval)
}

pub fn polar_g(lattice: &FaceLattice, q: FaceId, q2: FaceId) -> Result<PolyT, StanleyError> {
    Stanley::new(lattice).polar_g(q, q2)
}

pub fn g_weight_function(lattice: &FaceLattice, q2: FaceId) -> Result<WeightFunction, StanleyError> {
    Stanley::new(lattice).g_weight_function(q2)
}

pub fn h_polynomial(lattice: &FaceLattice) -> PolyT {
    Stanley::new(lattice).h_polynomial()
}
