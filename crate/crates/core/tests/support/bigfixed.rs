//! Binary fixed-point reals on `BigInt` for reference computations.
//!
//! A value is `raw / 2^FRAC`. The integer part is unbounded, so numbers like
//! `e^5000` are held exactly to `FRAC` fractional bits (about 96 decimal
//! digits), far beyond the 50 digits the checks need.

use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

const FRAC: u64 = 320;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fixed(BigInt);

fn ln2() -> &'static Fixed {
    static LN2: OnceLock<Fixed> = OnceLock::new();
    // ln 2 = 2 atanh(1/3)
    LN2.get_or_init(|| Fixed::from_int(2) * atanh(&(Fixed::one() / Fixed::from_int(3))))
}

/// `atanh(z)` for `|z| <= 1/3`.
fn atanh(z: &Fixed) -> Fixed {
    let z2 = z.clone() * z.clone();
    let mut power = z.clone();
    let mut sum = Fixed::zero();
    let mut k = 0i64;
    while !power.0.is_zero() {
        sum = sum + power.clone() / Fixed::from_int(2 * k + 1);
        power = power * z2.clone();
        k += 1;
    }
    sum
}

impl Fixed {
    pub fn zero() -> Self {
        Fixed(BigInt::zero())
    }

    pub fn one() -> Self {
        Fixed(BigInt::one() << FRAC)
    }

    pub fn from_int(v: i64) -> Self {
        Fixed(BigInt::from(v) << FRAC)
    }

    /// The exact value of an `f64`.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite());
        if v == 0.0 {
            return Self::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mantissa, e) = if exp == 0 {
            (frac, -1074)
        } else {
            (frac | 1u64 << 52, exp - 1075)
        };
        let m = BigInt::from(sign) * BigInt::from(mantissa);
        let shift = e + FRAC as i64;
        if shift >= 0 {
            Fixed(m << shift as u64)
        } else {
            Fixed(m >> (-shift) as u64)
        }
    }

    /// Parses a plain decimal such as `53.989` exactly (up to the final
    /// rounding to `FRAC` bits).
    pub fn from_decimal(s: &str) -> Self {
        let (neg, body) = match s.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, s),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        let digits: BigInt = format!("{int}{frac}").parse().expect("decimal digits");
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let v = Fixed((digits << FRAC) / scale);
        if neg {
            -v
        } else {
            v
        }
    }

    pub fn to_f64(&self) -> f64 {
        let shifted: BigInt = self.0.clone() >> (FRAC - 64);
        shifted.to_f64().expect("finite") / 2f64.powi(64)
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Fixed(self.0.abs())
    }

    pub fn exp(&self) -> Self {
        let k = (self.to_f64() / std::f64::consts::LN_2).round() as i64;
        let r = self.clone() - ln2().clone() * Fixed::from_int(k);
        // exp(r) = exp(r / 2^8)^(2^8)
        let small = Fixed(r.0 >> 8u32);
        let mut term = Fixed::one();
        let mut sum = Fixed::one();
        let mut i = 1i64;
        loop {
            term = term * small.clone() / Fixed::from_int(i);
            if term.0.is_zero() {
                break;
            }
            sum = sum + term.clone();
            i += 1;
        }
        for _ in 0..8 {
            sum = sum.clone() * sum;
        }
        if k >= 0 {
            Fixed(sum.0 << k as u64)
        } else {
            Fixed(sum.0 >> (-k) as u64)
        }
    }

    pub fn ln(&self) -> Self {
        assert!(self.is_positive(), "ln of non-positive value");
        // self = m 2^k with m in [1, 2)
        let k = self.0.bits() as i64 - 1 - FRAC as i64;
        let m = if k >= 0 {
            Fixed(self.0.clone() >> k as u64)
        } else {
            Fixed(self.0.clone() << (-k) as u64)
        };
        let z = (m.clone() - Fixed::one()) / (m + Fixed::one());
        Fixed::from_int(k) * ln2().clone() + Fixed::from_int(2) * atanh(&z)
    }

    pub fn powf(&self, e: &Fixed) -> Self {
        (e.clone() * self.ln()).exp()
    }
}

impl Add for Fixed {
    type Output = Fixed;
    fn add(self, o: Fixed) -> Fixed {
        Fixed(self.0 + o.0)
    }
}

impl Sub for Fixed {
    type Output = Fixed;
    fn sub(self, o: Fixed) -> Fixed {
        Fixed(self.0 - o.0)
    }
}

impl Mul for Fixed {
    type Output = Fixed;
    fn mul(self, o: Fixed) -> Fixed {
        Fixed((self.0 * o.0) >> FRAC)
    }
}

impl Div for Fixed {
    type Output = Fixed;
    fn div(self, o: Fixed) -> Fixed {
        Fixed((self.0 << FRAC) / o.0)
    }
}

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed(-self.0)
    }
}
