use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;
use num_bigint::BigInt;
use num_rational::BigRational;

use super::{ExactError, Scalar};

/// The ground field: the rationals or a prime field `GF(p)`.
///
/// Text form is `"Q"` or `"GF(p)"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(Kind);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Rationals,
    Prime(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// `GF(p)`; the modulus is checked for primality by trial division.
    pub fn prime(p: u64) -> Result<Self, ExactError> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        Ok(FieldSpec(Kind::Prime(p as u32)))
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0, Kind::Rationals)
    }

    /// The prime modulus, or `None` over `Q`.
    pub fn modulus(&self) -> Option<u32> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    /// 0 for `Q`, `p` for `GF(p)`.
    pub fn characteristic(&self) -> u32 {
        self.modulus().unwrap_or(0)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar::rational(BigRational::from_integer(BigInt::from(v))),
            Kind::Prime(p) => Scalar::residue(v.rem_euclid(p as i64) as u32, p),
        }
    }

    /// The scalar `num / den`. Fails when `den` vanishes in this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, ExactError> {
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        n.checked_div(&d)
    }

    /// Parses the text form of a scalar: `"-3/4"`, `"7"`. Over `GF(p)` any
    /// integer (or integer fraction) is accepted and reduced to its residue.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, ExactError> {
        let err = || ExactError::Parse {
            what: "scalar",
            text: text.to_string(),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| err())?,
            None => BigInt::from(1),
        };
        let n = self.scalar_from_bigint(&num);
        let d = self.scalar_from_bigint(&den);
        n.checked_div(&d).map_err(|_| err())
    }

    fn scalar_from_bigint(&self, v: &BigInt) -> Scalar {
        match self.0 {
            Kind::Rationals => Scalar::rational(BigRational::from_integer(v.clone())),
            Kind::Prime(p) => {
                let m = BigInt::from(p);
                let r = ((v % &m) + &m) % &m;
                let r: u32 = r.try_into().expect("residue fits the modulus");
                Scalar::residue(r, p)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => f.write_str("Q"),
            Kind::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" {
            return Ok(FieldSpec::rationals());
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ExactError::Parse {
                what: "field",
                text: s.to_string(),
            })?;
        let p: u64 = inner.trim().parse().map_err(|_| ExactError::Parse {
            what: "field",
            text: s.to_string(),
        })?;
        FieldSpec::prime(p)
    }
}
