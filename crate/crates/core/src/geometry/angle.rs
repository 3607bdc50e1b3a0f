//! Exact rational angles, measured in degrees.
//!
//! Every angle that participates in a vertex-sum check is an [`ExactAngle`].
//! Values are kept reduced with a positive denominator, and all arithmetic is
//! checked: an overflow is reported as [`Error::Overflow`] instead of wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational number of degrees, `num / den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawAngle", into = "RawAngle")]
pub struct ExactAngle {
    num: i64,
    den: i64,
}

#[derive(Serialize, Deserialize)]
struct RawAngle {
    num: i64,
    den: i64,
}

impl TryFrom<RawAngle> for ExactAngle {
    type Error = Error;
    fn try_from(raw: RawAngle) -> Result<Self> {
        ExactAngle::new(raw.num, raw.den)
    }
}

impl From<ExactAngle> for RawAngle {
    fn from(a: ExactAngle) -> Self {
        RawAngle { num: a.num, den: a.den }
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

impl ExactAngle {
    pub const ZERO: ExactAngle = ExactAngle { num: 0, den: 1 };
    pub const STRAIGHT: ExactAngle = ExactAngle { num: 180, den: 1 };
    pub const FULL: ExactAngle = ExactAngle { num: 360, den: 1 };

    /// Builds `num / den` degrees, reducing the fraction. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(num, den).max(1);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Ok(ExactAngle { num: narrow(n)?, den: narrow(d)? })
    }

    pub const fn degrees(deg: i64) -> Self {
        ExactAngle { num: deg, den: 1 }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let n = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        let d = self.den as i128 * rhs.den as i128;
        Self::from_i128(n, d)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.checked_add(-rhs)
    }

    /// Multiplies by the rational `p / q`.
    pub fn checked_scale(self, p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroDenominator);
        }
        Self::from_i128(self.num as i128 * p as i128, self.den as i128 * q as i128)
    }

    pub fn checked_mul_int(self, k: i64) -> Result<Self> {
        self.checked_scale(k, 1)
    }

    /// Reduces into the half-open range `[0°, 360°)`.
    pub fn normalized(self) -> Self {
        let period = 360i128 * self.den as i128;
        let n = (self.num as i128).rem_euclid(period);
        // `n < 360 * den` and the fraction stays reduced: gcd(n, den) = gcd(num, den) = 1.
        ExactAngle { num: n as i64, den: self.den }
    }

    /// Largest angle of which both inputs are integer multiples.
    pub fn gcd(self, other: Self) -> Result<Self> {
        let n = gcd(
            self.num as i128 * other.den as i128,
            other.num as i128 * self.den as i128,
        );
        let d = self.den as i128 * other.den as i128;
        Self::from_i128(n, d)
    }

    /// True when `self` is an integer multiple of `unit` (a zero unit only divides zero).
    pub fn is_multiple_of(self, unit: Self) -> bool {
        if unit.num == 0 {
            return self.num == 0;
        }
        let n = self.num as i128 * unit.den as i128;
        let d = self.den as i128 * unit.num as i128;
        n % d == 0
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn to_radians(self) -> f64 {
        // Split the integer part first so large numerators lose no precision.
        let whole = self.num.div_euclid(self.den);
        let frac = self.num.rem_euclid(self.den) as f64 / self.den as f64;
        ((whole.rem_euclid(360)) as f64 + frac).to_radians()
    }

    /// `(cos, sin)` of the angle, exact at multiples of 90°.
    pub fn cos_sin(self) -> (f64, f64) {
        let n = self.normalized();
        if n.den == 1 && n.num % 90 == 0 {
            return match n.num {
                0 => (1.0, 0.0),
                90 => (0.0, 1.0),
                180 => (-1.0, 0.0),
                _ => (0.0, -1.0),
            };
        }
        let r = n.to_radians();
        (r.cos(), r.sin())
    }
}

impl Add for ExactAngle {
    type Output = ExactAngle;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("exact angle overflow")
    }
}

impl Sub for ExactAngle {
    type Output = ExactAngle;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("exact angle overflow")
    }
}

impl Neg for ExactAngle {
    type Output = ExactAngle;
    fn neg(self) -> Self {
        ExactAngle { num: -self.num, den: self.den }
    }
}

impl std::iter::Sum for ExactAngle {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ExactAngle::ZERO, |acc, a| acc + a)
    }
}

impl Ord for ExactAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for ExactAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}°", self)
    }
}

impl fmt::Display for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for ExactAngle {
    type Err = Error;

    /// Accepts `"120"`, `"-7/2"` or `"22.5"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not an angle: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            return ExactAngle::new(n, d);
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let neg = int.starts_with('-');
            let whole: i64 = if int == "-" || int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let den = 10i64.pow(frac.len() as u32);
            let f: i64 = frac.parse().map_err(|_| bad())?;
            let mag = whole.abs().checked_mul(den).and_then(|v| v.checked_add(f)).ok_or(Error::Overflow)?;
            return ExactAngle::new(if neg { -mag } else { mag }, den);
        }
        Ok(ExactAngle::degrees(s.parse().map_err(|_| bad())?))
    }
}
