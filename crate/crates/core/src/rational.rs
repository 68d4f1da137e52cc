//! Exact rationals and the combinatorial scalars built on them.
//!
//! [`Rat`] is always kept in lowest terms with a positive denominator, so
//! structural equality is numeric equality.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// `num/den`, reduced. Fails on a zero denominator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rat> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    /// Literal constructor for fixed fractions.
    ///
    /// Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Rat {
        Rat::new(num, den).expect("Rat::frac with zero denominator")
    }

    pub fn int(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    /// `n + 1/2`
    pub fn half_plus(n: i64) -> Rat {
        Rat::frac(2 * n + 1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Exact division; `Err` on a zero divisor.
    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rat> {
        Rat::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Rat {
        Rat(num_traits::pow(self.0.clone(), e as usize))
    }

    /// `(-1)^e`
    pub fn sign_pow(e: i64) -> Rat {
        if e.rem_euclid(2) == 0 {
            Rat::one()
        } else {
            -Rat::one()
        }
    }

    /// Integer value, if this is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::int(n)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

/// Scans an optionally signed run of ASCII digits starting at byte `start`.
/// Returns the end offset.
pub(crate) fn scan_integer(s: &[u8], start: usize, allow_sign: bool) -> Option<usize> {
    let mut pos = start;
    if allow_sign && pos < s.len() && s[pos] == b'-' {
        pos += 1;
    }
    let digits = pos;
    while pos < s.len() && s[pos].is_ascii_digit() {
        pos += 1;
    }
    (pos > digits).then_some(pos)
}

/// Scans `num` or `num/den` at byte `start`; returns the value and the end offset.
/// Columns in errors are 1-based offsets into `s`.
pub(crate) fn scan_rat(s: &str, start: usize) -> Result<(Rat, usize)> {
    let bytes = s.as_bytes();
    let num_end =
        scan_integer(bytes, start, true).ok_or_else(|| parse_err(start + 1, "expected integer"))?;
    let num: BigInt = s[start..num_end].parse().expect("scanned digits");
    if num_end < bytes.len() && bytes[num_end] == b'/' {
        let den_start = num_end + 1;
        let den_end = scan_integer(bytes, den_start, false)
            .ok_or_else(|| parse_err(den_start + 1, "expected denominator"))?;
        let den: BigInt = s[den_start..den_end].parse().expect("scanned digits");
        if den.is_zero() {
            return Err(parse_err(den_start + 1, "zero denominator"));
        }
        Ok((Rat::new(num, den)?, den_end))
    } else {
        Ok((Rat::int(num), num_end))
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rat> {
        let (r, end) = scan_rat(s, 0)?;
        if end != s.len() {
            return Err(parse_err(end + 1, "trailing input"));
        }
        Ok(r)
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $op:tt) => {
        impl $Trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $Trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl $Trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl $Trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);

// Panics on a zero divisor, like integer division. Use `checked_div` when
// the divisor is data-dependent.
forward_binop!(Div, div, /);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, r| acc + r)
    }
}

impl Product for Rat {
    fn product<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::one(), |acc, r| acc * r)
    }
}

/// The index pair `(i, m)` of the polynomial families, with `p = 2m + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyIndex {
    pub i: u32,
    pub m: u32,
}

impl FamilyIndex {
    pub fn new(i: u32, m: u32) -> FamilyIndex {
        FamilyIndex { i, m }
    }

    pub fn p(&self) -> u32 {
        2 * self.m + self.i
    }
}

/// Falling factorial `(alpha)_k = alpha (alpha - 1) ... (alpha - k + 1)`.
///
/// For negative `k` this is `1 / (alpha + |k|)_{|k|}`, the unique extension with
/// `(alpha)_{j+k} = (alpha)_j (alpha - j)_k`.
pub fn falling_factorial(alpha: &Rat, k: i64) -> Result<Rat> {
    if k >= 0 {
        let mut acc = Rat::one();
        let mut factor = alpha.clone();
        let one = Rat::one();
        for _ in 0..k {
            acc *= &factor;
            factor -= &one;
        }
        Ok(acc)
    } else {
        let n = -k;
        let denom = falling_factorial(&(alpha + Rat::int(n)), n)?;
        if denom.is_zero() {
            return Err(Error::FallingFactorialPole {
                alpha: alpha.to_string(),
                k,
            });
        }
        denom.recip()
    }
}

/// Binomial coefficient; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::UnsupportedBinomial { n, k });
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Ok(acc)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// `B(u + i + 1/2, m + 1)` evaluated as `m! / (m + i + u + 1/2)_{m+1}`.
pub fn beta_half(u: u32, i: u32, m: u32) -> Rat {
    let alpha = Rat::half_plus(i64::from(m + i + u));
    let ff = falling_factorial(&alpha, i64::from(m) + 1).expect("nonnegative length");
    // half-integer factors never vanish
    Rat::int(factorial(u64::from(m))) / ff
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| Rat::frac(n, d))
    }

    fn half_or_int() -> impl Strategy<Value = Rat> {
        (-20i64..20, 1i64..=2).prop_map(|(n, d)| Rat::frac(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &a), &Rat::zero());
        }

        #[test]
        fn falling_factorial_splits(alpha in half_or_int(), j in 0i64..=8, k in -8i64..=8) {
            let lhs = falling_factorial(&alpha, j + k);
            let right = falling_factorial(&(&alpha - Rat::int(j)), k);
            if let (Ok(lhs), Ok(right)) = (lhs, right) {
                let left = falling_factorial(&alpha, j).unwrap();
                prop_assert_eq!(lhs, left * right);
            }
        }

        #[test]
        fn text_round_trip(a in small_rat()) {
            prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
        }
    }
}
