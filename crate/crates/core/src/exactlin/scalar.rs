//! Exact field elements: arbitrary-precision rationals and residues modulo a prime.
//!
//! Rationals keep a machine-word fast path and promote to big integers only when a
//! result no longer fits. Both representations are canonical (lowest terms, positive
//! denominator), so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rational {
    /// Numerator and denominator both fit in an `i64` (and neither is `i64::MIN`).
    Small { num: i64, den: i64 },
    /// Anything larger.
    Big { num: Box<BigInt>, den: Box<BigInt> },
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn fits(x: i128) -> bool {
    x > i64::MIN as i128 && x <= i64::MAX as i128
}

impl Rational {
    pub fn zero() -> Self {
        Rational::Small { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Rational::Small { num: 1, den: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        if n == i64::MIN {
            return Self::from_big(BigInt::from(n), BigInt::one());
        }
        Rational::Small { num: n, den: 1 }
    }

    /// Builds `num/den`, reducing. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd_i128(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if fits(n) && fits(d) {
            Rational::Small { num: n as i64, den: d as i64 }
        } else {
            Self::from_big(BigInt::from(n), BigInt::from(d))
        }
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (mut n, mut d) = (&num / &g, &den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        match (n.to_i64(), d.to_i64()) {
            (Some(a), Some(b)) if a != i64::MIN && b != i64::MIN => Rational::Small { num: a, den: b },
            _ => Rational::Big { num: Box::new(n), den: Box::new(d) },
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small { num, .. } => BigInt::from(*num),
            Rational::Big { num, .. } => (**num).clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small { den, .. } => BigInt::from(*den),
            Rational::Big { den, .. } => (**den).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rational::Small { num: 0, .. })
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rational::Small { den, .. } => *den == 1,
            Rational::Big { den, .. } => den.is_one(),
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        match self {
            Rational::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Rational::Big { num, den } => Self::from_big((**den).clone(), (**num).clone()),
        }
    }

    pub(crate) fn add_ref(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a + c, b)
                } else {
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(
                self.numer() * rhs.denom() + rhs.numer() * self.denom(),
                self.denom() * rhs.denom(),
            ),
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Rational::Small { num: a, den: b }, Rational::Small { num: c, den: d }) => {
                if *a == 0 || *c == 0 {
                    return Self::zero();
                }
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.numer() * rhs.numer(), self.denom() * rhs.denom()),
        }
    }

    pub(crate) fn neg_ref(&self) -> Self {
        match self {
            Rational::Small { num, den } => Rational::Small { num: -num, den: *den },
            Rational::Big { num, den } => Self::from_big(-(**num).clone(), (**den).clone()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.numer() * other.denom()).cmp(&(other.numer() * self.denom()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
        match s.split_once('/') {
            None => Ok(Self::from_big(s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one())),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Self::from_big(n, d))
            }
        }
    }
}

/// The characteristic context of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// GF(p) for a prime p.
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// `0` selects the rationals; anything else must be a prime.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        match c {
            0 => Ok(Field::Rationals),
            p if is_prime(p) => Ok(Field::Prime(p)),
            p => Err(Error::Field(format!("{p} is not a prime characteristic"))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn int(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::from_int(n),
            Field::Prime(p) => Scalar::Mod { v: n.rem_euclid(*p as i64) as u64, p: *p },
        }
    }

    /// Moves a scalar into this field; rationals reduce modulo p when the denominator allows.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (Field::Rationals, Scalar::Rat(_)) => Ok(s.clone()),
            (Field::Prime(p), Scalar::Mod { p: q, .. }) if p == q => Ok(s.clone()),
            (Field::Prime(p), Scalar::Rat(r)) => reduce_mod(r, *p)
                .map(|v| Scalar::Mod { v, p: *p })
                .ok_or_else(|| Error::Field(format!("{r} has no image in GF({p})"))),
            _ => Err(Error::Field(format!("scalar {s} does not belong to {self:?}"))),
        }
    }
}

fn reduce_mod(r: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = r.numer().mod_floor(&pb).to_u64()?;
    let d = r.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, inv_mod(d, p), p))
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} is not invertible modulo {p}");
    t.rem_euclid(p as i128) as u64
}

/// An exact scalar. Rational literals combine with GF(p) residues by reduction, so
/// `Scalar::zero()` and `Scalar::one()` are usable in every characteristic. Combining
/// residues of two different primes panics: it is a programming error.
#[derive(Clone)]
pub enum Scalar {
    Rat(Rational),
    Mod { v: u64, p: u64 },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(Rational::from_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(Rational::new(n, d))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => *r == Rational::one(),
            Scalar::Mod { v, .. } => *v == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    pub fn inv(&self) -> Self {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
            Scalar::Mod { v, p } => {
                assert!(*v != 0, "division by zero");
                Scalar::Mod { v: inv_mod(*v, *p), p: *p }
            }
        }
    }

    fn binop(
        &self,
        rhs: &Self,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        md: impl Fn(u64, u64, u64) -> u64,
    ) -> Self {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(rat(a, b)),
            (Scalar::Mod { v: a, p }, Scalar::Mod { v: b, p: q }) => {
                assert_eq!(p, q, "mixed characteristics");
                Scalar::Mod { v: md(*a, *b, *p), p: *p }
            }
            (Scalar::Mod { v: a, p }, Scalar::Rat(b)) => {
                let b = reduce_mod(b, *p).expect("rational not representable modulo p");
                Scalar::Mod { v: md(*a, b, *p), p: *p }
            }
            (Scalar::Rat(a), Scalar::Mod { v: b, p }) => {
                let a = reduce_mod(a, *p).expect("rational not representable modulo p");
                Scalar::Mod { v: md(a, *b, *p), p: *p }
            }
        }
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        self.binop(rhs, |a, b| a.add_ref(b), |a, b, p| (a + b) % p)
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        self.binop(rhs, |a, b| a.mul_ref(b), mulmod)
    }

    pub fn neg_ref(&self) -> Self {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r.neg_ref()),
            Scalar::Mod { v, p } => Scalar::Mod { v: (p - v) % p, p: *p },
        }
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Mod { v, p } => write!(f, "{v} (mod {p})"),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Mod { v, p }, Scalar::Mod { v: w, p: q }) => p == q && v == w,
            (Scalar::Mod { v, p }, Scalar::Rat(r)) | (Scalar::Rat(r), Scalar::Mod { v, p }) => {
                reduce_mod(r, *p) == Some(*v)
            }
        }
    }
}

impl Eq for Scalar {}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$inner(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.mul_ref(&rhs.inv())
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.mul_ref(&rhs.inv())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if !rhs.is_zero() {
            *self = self.add_ref(rhs);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if !rhs.is_zero() {
            *self = self.sub_ref(rhs);
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Scalar::Rat(s.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rational::new(4, -6), Rational::new(-2, 3));
        assert_eq!(Rational::new(4, -6).to_string(), "-2/3");
        assert_eq!("10/5".parse::<Rational>().unwrap().to_string(), "2");
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn promotes_past_machine_words() {
        let big = Scalar::from_int(i64::MAX);
        let sq = &big * &big;
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(sq, Scalar::Rat(Rational::Big { .. })));
        let third = Scalar::ratio(1, 3);
        assert_eq!(&(&sq * &third) * &Scalar::from_int(3), sq);
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::from_characteristic(7).unwrap();
        let three = f.int(3);
        assert_eq!(three.inv(), f.int(5));
        assert_eq!(&three + &f.int(5), f.int(1));
        // rational literals reduce into the residue field
        assert_eq!(&three * &Scalar::ratio(1, 3), f.int(1));
        assert!(Field::from_characteristic(9).is_err());
        assert!(f.coerce(&Scalar::ratio(1, 7)).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed characteristics")]
    fn mixing_primes_panics() {
        let _ = Field::Prime(5).int(1) + Field::Prime(7).int(1);
    }

    fn small_rat() -> impl Strategy<Value = Scalar> {
        (-1_000_000i64..1_000_000, 1i64..1_000_000).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&(&a / &b) * &b, a);
            }
        }
    }
}
