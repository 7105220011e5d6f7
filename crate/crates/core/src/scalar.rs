//! Exact scalars over Q and prime fields F_p.
//!
//! Every scalar is kept in canonical form: rationals in lowest terms with a
//! positive denominator, residues in `0..p`. Structural equality is therefore
//! field equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    /// F_p, rejecting composite or out-of-range moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// `Some(p)` over F_p.
    pub fn modulus(&self) -> Option<u32> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rationals => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => u64::from(*p),
            Field::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(i64::from(*p)) as u32,
                modulus: *p,
            },
        }
    }

    /// `num/den` reduced into the field. Fails when `den` vanishes in it.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::InvalidParams(format!("{den} is not invertible in {self}")))?;
        Ok(&self.from_i64(num) * &inv)
    }

    /// All field elements in residue order; `None` over Q.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.modulus().map(|p| {
            (0..p)
                .map(|v| Scalar::Residue {
                    value: v,
                    modulus: p,
                })
                .collect()
        })
    }

    /// The nonzero elements; `None` over Q.
    pub fn units(&self) -> Option<Vec<Scalar>> {
        self.elements()
            .map(|els| els.into_iter().filter(|s| !s.is_zero()).collect())
    }

    pub fn zeros(&self, n: usize) -> Vec<Scalar> {
        vec![self.zero(); n]
    }

    /// Standard basis vector `e_i` of length `n`.
    pub fn unit_vector(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = self.zeros(n);
        v[i] = self.one();
        v
    }

    /// Parses a scalar written as `a/b`, `a` (over Q) or an integer (over F_p).
    /// The flag reports whether the input was not already in canonical form.
    pub fn parse_scalar(&self, text: &str) -> Result<(Scalar, bool)> {
        let t = text.trim();
        match self {
            Field::Rationals => {
                let (num, den) = match t.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (t, "1"),
                };
                let num = BigInt::from_str(num)
                    .map_err(|_| Error::Parse(format!("bad rational numerator in `{t}`")))?;
                let den = BigInt::from_str(den)
                    .map_err(|_| Error::Parse(format!("bad rational denominator in `{t}`")))?;
                if den.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{t}`")));
                }
                let raw_den = den.clone();
                let raw_num = num.clone();
                let q = BigRational::new(num, den);
                let changed = q.denom() != &raw_den || q.numer() != &raw_num;
                Ok((Scalar::Rational(q), changed))
            }
            Field::Prime(p) => {
                let v = i64::from_str(t)
                    .map_err(|_| Error::Parse(format!("bad residue `{t}` for F_{p}")))?;
                let s = self.from_i64(v);
                let changed = v < 0 || v >= i64::from(*p);
                Ok((s, changed))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `Fp:5`, `F5` and `F_5`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let digits = t
            .strip_prefix("Fp:")
            .or_else(|| t.strip_prefix("F_"))
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::Parse(format!("unknown field `{t}` (use Q or Fp:<prime>)")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in `{t}`")))?;
        Field::prime(p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact element of a [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(
                    u64::from(*value),
                    u64::from(*modulus) - 2,
                    u64::from(*modulus),
                ) as u32,
                modulus: *modulus,
            },
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The residue as an integer in `0..p`.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    /// The representative in `(-p/2, p/2]` over F_p, the integer value over Q
    /// when integral.
    pub fn signed(&self) -> Option<i64> {
        match self {
            Scalar::Residue { value, modulus } => {
                let (v, p) = (i64::from(*value), i64::from(*modulus));
                Some(if v > p / 2 { v - p } else { v })
            }
            Scalar::Rational(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Rational(_) => None,
        }
    }

    /// Key used for "signed lexicographic" tie-breaks.
    pub(crate) fn signed_key(&self) -> (i64, i64) {
        match self {
            Scalar::Residue { .. } => {
                let s = self.signed().unwrap_or(0);
                (s.abs(), if s < 0 { 0 } else { 1 })
            }
            Scalar::Rational(q) => {
                let approx = q.to_f64().unwrap_or(0.0);
                (
                    (approx.abs() * 1e6) as i64,
                    if q.is_negative() { 0 } else { 1 },
                )
            }
        }
    }

    fn check_same(&self, other: &Scalar) {
        debug_assert_eq!(self.field(), other.field(), "mixed-field arithmetic");
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (Scalar::Residue { value: a, .. }, Scalar::Residue { value: b, .. }) => a.cmp(b),
            (Scalar::Rational(_), Scalar::Residue { .. }) => Ordering::Less,
            (Scalar::Residue { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((u64::from(*a) + u64::from(*b)) % u64::from(*modulus)) as u32,
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: ((u64::from(*a) * u64::from(*b)) % u64::from(*modulus)) as u32,
                    modulus: *modulus,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// `Σ a_i b_i`.
pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| s * x).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        let q = Field::Rationals;
        let (a, changed) = q.parse_scalar("6/-4").unwrap();
        assert_eq!(a.to_string(), "-3/2");
        assert!(changed);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.from_i64(-1), f5.from_i64(4));
        assert_eq!(f5.from_i64(3).inv().unwrap(), f5.from_i64(2));
    }

    #[test]
    fn rejects_composite_moduli() {
        assert!(matches!(Field::prime(4), Err(Error::NotPrime(4))));
        assert!(Field::prime(1).is_err());
        assert!("Fp:9".parse::<Field>().is_err());
        assert_eq!("Fp:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
    }

    #[test]
    fn signed_residues() {
        let f7 = Field::Prime(7);
        assert_eq!(f7.from_i64(6).signed(), Some(-1));
        assert_eq!(f7.from_i64(3).signed(), Some(3));
        assert_eq!(f7.from_i64(3).pow(6), f7.one());
    }
}
