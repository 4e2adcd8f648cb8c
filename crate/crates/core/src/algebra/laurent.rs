use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::{format_rat, parse_rat, Rat};

/// A Laurent polynomial `sum c_k y^k` with rational coefficients.
///
/// Zero coefficients are never stored, so derived equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rat::from_integer(c.into()))
    }

    /// `c * y^k`.
    pub fn monomial(c: Rat, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// `y`
    pub fn y() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// `1 + y`
    pub fn one_plus_y() -> Self {
        Self::one() + Self::y()
    }

    /// `-1 - y`
    pub fn minus_one_minus_y() -> Self {
        -Self::one_plus_y()
    }

    /// `(-y)^k` for any integer `k`.
    pub fn neg_y_pow(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(Rat::from_integer(sign.into()), k)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rat)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, k: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Rat {
        self.terms.get(&k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplication by `y^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// The standard duality `p(y) -> p(1/y)`.
    pub fn substitute_inverse(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (-k, v.clone())).collect(),
        }
    }

    /// `p(y) -> p(-y)`.
    pub fn substitute_neg(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, if k.rem_euclid(2) == 0 { v.clone() } else { -v }))
                .collect(),
        }
    }

    /// Value at `y = 0`; `None` when a negative power of `y` is present.
    pub fn eval_at_zero(&self) -> Option<Rat> {
        match self.min_exp() {
            Some(k) if k < 0 => None,
            _ => Some(self.coeff(0)),
        }
    }

    /// Value at a nonzero rational `y`.
    pub fn eval(&self, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (k, c) in &self.terms {
            let p = if *k >= 0 {
                num_traits::pow(y.clone(), *k as usize)
            } else {
                num_traits::pow(y.recip(), k.unsigned_abs() as usize)
            };
            acc += c * p;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical rendering, e.g. `-1*y^-1 + 2 + 3*y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| match *k {
                0 => format_rat(c),
                1 => format!("{}*y", format_rat(c)),
                _ => format!("{}*y^{}", format_rat(c), k),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl From<Rat> for LaurentPoly {
    fn from(c: Rat) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        Self {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: i64,
    coeff: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(k, c)| TermJson {
                exp: *k,
                coeff: format_rat(c),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for t in terms {
            let c = parse_rat(&t.coeff).map_err(serde::de::Error::custom)?;
            out.add_term(t.exp, c);
        }
        Ok(out)
    }
}
