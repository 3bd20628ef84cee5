use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ExactError, FieldSpec};

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator; residues
/// are canonical representatives in `[0, p)`.
///
/// The operator impls (`&a + &b`, ...) panic when the operands live in
/// different fields. Use [`scalar_arith`] or the `checked_*` methods when the
/// fields are not known to agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar(Repr);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact `a op b` with field checking.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ScalarOp) -> Result<Scalar, ExactError> {
    match op {
        ScalarOp::Add => a.checked_add(b),
        ScalarOp::Sub => a.checked_sub(b),
        ScalarOp::Mul => a.checked_mul(b),
        ScalarOp::Div => a.checked_div(b),
    }
}

fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn pow_mod(mut base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1 % p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Scalar {
    pub(crate) fn rational(r: BigRational) -> Self {
        Scalar(Repr::Rational(r))
    }

    pub(crate) fn residue(value: u32, modulus: u32) -> Self {
        debug_assert!(value < modulus);
        Scalar(Repr::Residue { value, modulus })
    }

    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::rationals(),
            Repr::Residue { modulus, .. } => FieldSpec::prime(*modulus as u64).expect("residue modulus is prime"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_zero(),
            Repr::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_one(),
            Repr::Residue { value, .. } => *value == 1,
        }
    }

    /// Strictly negative rational. Residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.is_negative(),
            Repr::Residue { .. } => false,
        }
    }

    /// The canonical residue, over `GF(p)` only.
    pub fn residue_value(&self) -> Option<u32> {
        match &self.0 {
            Repr::Residue { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }

    /// Numerator and denominator of a rational scalar.
    pub fn as_ratio(&self) -> Option<(&BigInt, &BigInt)> {
        match &self.0 {
            Repr::Rational(r) => Some((r.numer(), r.denom())),
            Repr::Residue { .. } => None,
        }
    }

    /// Rational canonical form, or residue range for `GF(p)`.
    pub fn is_canonical(&self) -> bool {
        match &self.0 {
            Repr::Rational(r) => r.denom().is_positive() && num_integer::Integer::gcd(r.numer(), r.denom()).is_one(),
            Repr::Residue { value, modulus } => value < modulus,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<(), ExactError> {
        let ok = match (&self.0, &other.0) {
            (Repr::Rational(_), Repr::Rational(_)) => true,
            (Repr::Residue { modulus: p, .. }, Repr::Residue { modulus: q, .. }) => p == q,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(ExactError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        self.same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        self.same_field(other)?;
        Ok(self.add_unchecked(&other.neg_ref()))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        self.same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ExactError> {
        self.same_field(other)?;
        let inv = other.inverse()?;
        Ok(self.mul_unchecked(&inv))
    }

    pub fn inverse(&self) -> Result<Scalar, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rational(r) => Scalar::rational(r.recip()),
            Repr::Residue { value, modulus } => Scalar::residue(pow_mod(*value, *modulus - 2, *modulus), *modulus),
        })
    }

    fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::rational(a + b),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                let s = (*a as u64 + *b as u64) % *modulus as u64;
                Scalar::residue(s as u32, *modulus)
            }
            _ => unreachable!("field checked by caller"),
        }
    }

    fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar::rational(a * b),
            (Repr::Residue { value: a, modulus }, Repr::Residue { value: b, .. }) => {
                Scalar::residue(mul_mod(*a, *b, *modulus), *modulus)
            }
            _ => unreachable!("field checked by caller"),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Rational(a) => Scalar::rational(-a),
            Repr::Residue { value, modulus } => Scalar::residue((*modulus - *value) % *modulus, *modulus),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(_) => write!(f, "{self}"),
            Repr::Residue { value, modulus } => write!(f, "{value} (mod {modulus})"),
        }
    }
}
