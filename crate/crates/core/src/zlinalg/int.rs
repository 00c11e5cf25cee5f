//! Arbitrary-precision integers that stay inline while they fit in an `i64`.
//!
//! Cohomology matrices are dominated by tiny entries (0, ±1, small torsion
//! residues), so the fast path never allocates. Any overflow promotes the
//! value to a [`BigInt`]; results are demoted again whenever they fit.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

#[derive(Clone)]
enum Repr {
    Small(i64),
    Big(BigInt),
}

/// An exact integer.
#[derive(Clone)]
pub struct Int(Repr);

impl Int {
    pub const ZERO: Int = Int(Repr::Small(0));
    pub const ONE: Int = Int(Repr::Small(1));

    #[inline]
    pub const fn small(v: i64) -> Int {
        Int(Repr::Small(v))
    }

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int(Repr::Small(v)),
            None => Int(Repr::Big(b)),
        }
    }

    fn to_big(&self) -> BigInt {
        match &self.0 {
            Repr::Small(v) => BigInt::from(*v),
            Repr::Big(b) => b.clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v > 0,
            Repr::Big(b) => b.is_positive(),
        }
    }

    pub fn abs(&self) -> Int {
        match &self.0 {
            Repr::Small(v) => match v.checked_abs() {
                Some(a) => Int::small(a),
                None => Int::from_big(BigInt::from(*v).abs()),
            },
            Repr::Big(b) => Int::from_big(b.abs()),
        }
    }

    /// Compares absolute values.
    pub fn cmp_abs(&self, other: &Int) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.unsigned_abs().cmp(&b.unsigned_abs()),
            _ => self.to_big().abs().cmp(&other.to_big().abs()),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(v) => Some(*v),
            Repr::Big(_) => None,
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        self.to_big()
    }

    /// Floor division; panics on a zero divisor.
    pub fn div_floor(&self, d: &Int) -> Int {
        assert!(!d.is_zero(), "division by zero");
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &d.0) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                let adjust = r != 0 && ((r < 0) != (*b < 0));
                return Int::small(if adjust { q - 1 } else { q });
            }
        }
        Int::from_big(self.to_big().div_floor(&d.to_big()))
    }

    /// Remainder in `[0, |d|)`.
    pub fn mod_floor_abs(&self, d: &Int) -> Int {
        assert!(!d.is_zero(), "division by zero");
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &d.0) {
            if let Some(m) = b.checked_abs() {
                return Int::small(a.rem_euclid(m));
            }
        }
        Int::from_big(self.to_big().mod_floor(&d.to_big().abs()))
    }

    /// Residue of least absolute value modulo `d > 0`, in `(-d/2, d/2]`.
    pub fn mod_symmetric(&self, d: &Int) -> Int {
        let r = self.mod_floor_abs(d);
        let twice = &r + &r;
        if twice.cmp_abs(d) == Ordering::Greater {
            &r - &d.abs()
        } else {
            r
        }
    }

    /// Quotient `q` minimizing `|self - q*d|`.
    pub fn div_round(&self, d: &Int) -> Int {
        let r = self.mod_symmetric(&d.abs());
        let exact = self - &r;
        exact.div_exact(d)
    }

    /// Division that is known to be exact.
    pub fn div_exact(&self, d: &Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &d.0) {
            if let Some(q) = a.checked_div(*b) {
                debug_assert_eq!(a % b, 0);
                return Int::small(q);
            }
        }
        Int::from_big(self.to_big() / d.to_big())
    }

    /// True when `d` divides `self`; zero divides only zero.
    pub fn is_multiple_of(&self, d: &Int) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        self.mod_floor_abs(d).is_zero()
    }

    pub fn gcd(&self, other: &Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &other.0) {
            if let (Some(mut x), Some(mut y)) = (a.checked_abs(), b.checked_abs()) {
                while y != 0 {
                    let t = x % y;
                    x = y;
                    y = t;
                }
                return Int::small(x);
            }
        }
        Int::from_big(self.to_big().gcd(&other.to_big()))
    }

    /// `self -= q * x`, the inner step of every elimination loop.
    #[inline]
    pub fn sub_mul_assign(&mut self, q: &Int, x: &Int) {
        if let (Repr::Small(s), Repr::Small(a), Repr::Small(b)) = (&mut self.0, &q.0, &x.0) {
            if let Some(v) = a.checked_mul(*b).and_then(|p| s.checked_sub(p)) {
                *s = v;
                return;
            }
        }
        *self = Int::from_big(self.to_big() - q.to_big() * x.to_big());
    }

    pub fn pow(&self, e: u32) -> Int {
        let mut acc = Int::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn factorial(n: u64) -> Int {
        (1..=n).fold(Int::ONE, |acc, i| &acc * &Int::from(i))
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::small(v as i64)
    }
}

impl From<u64> for Int {
    fn from(v: u64) -> Self {
        match i64::try_from(v) {
            Ok(s) => Int::small(s),
            Err(_) => Int::from_big(BigInt::from(v)),
        }
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Self {
        Int::from(v as u64)
    }
}

impl From<BigInt> for Int {
    fn from(b: BigInt) -> Self {
        Int::from_big(b)
    }
}

impl PartialEq for Int {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            // normalized: a Big never fits in i64
            _ => false,
        }
    }
}

impl Eq for Int {}

impl Hash for Int {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(v) => v.hash(state),
            Repr::Big(b) => b.hash(state),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add<&'a Int> for &'a Int {
    type Output = Int;
    fn add(self, rhs: &'a Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(v) = a.checked_add(*b) {
                return Int::small(v);
            }
        }
        Int::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Int> for &'a Int {
    type Output = Int;
    fn sub(self, rhs: &'a Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(v) = a.checked_sub(*b) {
                return Int::small(v);
            }
        }
        Int::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Int> for &'a Int {
    type Output = Int;
    fn mul(self, rhs: &'a Int) -> Int {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(v) = a.checked_mul(*b) {
                return Int::small(v);
            }
        }
        Int::from_big(self.to_big() * rhs.to_big())
    }
}

impl Add for Int {
    type Output = Int;
    fn add(self, rhs: Int) -> Int {
        &self + &rhs
    }
}

impl Sub for Int {
    type Output = Int;
    fn sub(self, rhs: Int) -> Int {
        &self - &rhs
    }
}

impl Mul for Int {
    type Output = Int;
    fn mul(self, rhs: Int) -> Int {
        &self * &rhs
    }
}

impl<'a> AddAssign<&'a Int> for Int {
    fn add_assign(&mut self, rhs: &'a Int) {
        if let (Repr::Small(a), Repr::Small(b)) = (&mut self.0, &rhs.0) {
            if let Some(v) = a.checked_add(*b) {
                *a = v;
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl<'a> SubAssign<&'a Int> for Int {
    fn sub_assign(&mut self, rhs: &'a Int) {
        if let (Repr::Small(a), Repr::Small(b)) = (&mut self.0, &rhs.0) {
            if let Some(v) = a.checked_sub(*b) {
                *a = v;
                return;
            }
        }
        *self = &*self - rhs;
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Int::small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Repr::Big(b) => Int::from_big(-b.clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::ZERO
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::ONE
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => write!(f, "{v}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Small values serialize as JSON numbers, large ones as decimal strings.
impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match &self.0 {
            Repr::Small(v) => s.serialize_i64(*v),
            Repr::Big(b) => s.serialize_str(&b.to_string()),
        }
    }
}
