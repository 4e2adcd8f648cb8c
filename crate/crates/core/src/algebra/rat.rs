use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::AlgebraError;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Renders `p/q`, or just `p` for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let err = || AlgebraError::ParseRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rat::from_integer).map_err(|_| err()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q == BigInt::from(0) {
                return Err(err());
            }
            Ok(Rat::new(p, q))
        }
    }
}
