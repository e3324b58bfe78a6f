//! Exact ground fields: prime fields `F_p` and the rationals.
//!
//! Every structure in the crate is generic over a [`Field`]. The field value
//! itself is carried alongside the data (a `PrimeField` knows its modulus), so
//! two matrices over different primes can never be silently combined.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a - c * b`, the elimination kernel.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }

    fn descriptor(&self) -> FieldDescriptor;

    /// Parse a scalar in the JSON encoding used by problem files.
    fn parse_scalar(&self, v: &serde_json::Value) -> Result<Self::Elem>;
    fn scalar_to_json(&self, a: &Self::Elem) -> serde_json::Value;
    fn format(&self, a: &Self::Elem) -> String;
}

/// Runtime description of a field, as it appears in problem files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldDescriptor {
    #[serde(rename = "Fp")]
    Fp { p: u32 },
    #[serde(rename = "Q")]
    Q,
}

impl Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Fp { p } => write!(f, "F_{p}"),
            FieldDescriptor::Q => write!(f, "Q"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_p`. Elements are canonical representatives in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i64(v)
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let p = self.p as u64;
        let mut base = *a as u64 % p;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(acc as u32)
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn sub_mul(&self, a: &u32, c: &u32, b: &u32) -> u32 {
        let p = self.p as u64;
        let cb = *c as u64 * *b as u64 % p;
        ((*a as u64 + p - cb) % p) as u32
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Fp { p: self.p }
    }
    fn parse_scalar(&self, v: &serde_json::Value) -> Result<u32> {
        match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(|i| self.reduce_i64(i))
                .ok_or_else(|| Error::Schema(format!("scalar {n} is not an integer"))),
            other => Err(Error::Schema(format!(
                "F_{} scalars must be integers, found {other}",
                self.p
            ))),
        }
    }
    fn scalar_to_json(&self, a: &u32) -> serde_json::Value {
        serde_json::Value::from(*a)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
}

/// The field of rational numbers, with arbitrary-precision numerators and
/// denominators kept in lowest terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Q
    }
    fn parse_scalar(&self, v: &serde_json::Value) -> Result<BigRational> {
        match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(|i| self.from_i64(i))
                .ok_or_else(|| Error::Schema(format!("scalar {n} is not an integer"))),
            serde_json::Value::String(s) => parse_rational(s),
            other => Err(Error::Schema(format!(
                "Q scalars must be \"a/b\" strings or integers, found {other}"
            ))),
        }
    }
    fn scalar_to_json(&self, a: &BigRational) -> serde_json::Value {
        serde_json::Value::String(self.format(a))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Schema(format!("cannot parse rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    // BigRational::new normalizes sign and reduces.
    let r = BigRational::new(num, den);
    debug_assert!(r.denom().is_positive());
    Ok(r)
}

/// Run `$body` with `$f` bound to the concrete field named by a descriptor.
///
/// ```
/// use cotorlab::{with_field, field::{Field, FieldDescriptor}};
/// let d = FieldDescriptor::Fp { p: 5 };
/// let s = with_field!(d, f => f.format(&f.from_i64(-1))).unwrap();
/// assert_eq!(s, "4");
/// ```
#[macro_export]
macro_rules! with_field {
    ($desc:expr, $f:ident => $body:expr) => {{
        match $desc {
            $crate::field::FieldDescriptor::Fp { p } => {
                $crate::field::PrimeField::new(p).map(|$f| $body)
            }
            $crate::field::FieldDescriptor::Q => {
                let $f = $crate::field::Rationals;
                Ok::<_, $crate::error::Error>($body)
            }
        }
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_modulus_rejected() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn fp_canonical_representatives() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(f.from_i64(12), 2);
        assert_eq!(f.inv(&2), Some(3));
        assert_eq!(f.inv(&0), None);
        for a in 1..5 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = Rationals;
        let x = q.parse_scalar(&serde_json::json!("6/-4")).unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.format(&q.from_i64(7)), "7");
        assert!(q.parse_scalar(&serde_json::json!("1/0")).is_err());
        assert!(q.parse_scalar(&serde_json::json!(true)).is_err());
    }

    #[test]
    fn descriptor_json() {
        let d: FieldDescriptor = serde_json::from_str(r#"{"type":"Fp","p":3}"#).unwrap();
        assert_eq!(d, FieldDescriptor::Fp { p: 3 });
        let d: FieldDescriptor = serde_json::from_str(r#"{"type":"Q"}"#).unwrap();
        assert_eq!(d, FieldDescriptor::Q);
    }
}
