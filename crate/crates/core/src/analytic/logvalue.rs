use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn flip(self) -> Self {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

/// A real number stored as a sign and the natural log of its magnitude, so
/// that quantities like `exp(exp(30.5))` stay representable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogValue {
    sign: Sign,
    /// ln |v|; `-inf` for zero.
    log_magnitude: f64,
}

/// ln(e^a + e^b).
pub fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    hi + (lo - hi).exp().ln_1p()
}

/// ln(e^a - e^b) for a > b.
pub fn log_sub_exp(a: f64, b: f64) -> f64 {
    debug_assert!(a >= b);
    if b == f64::NEG_INFINITY {
        return a;
    }
    a + (-(b - a).exp_m1()).ln()
}

impl LogValue {
    pub const ZERO: LogValue = LogValue {
        sign: Sign::Zero,
        log_magnitude: f64::NEG_INFINITY,
    };
    pub const ONE: LogValue = LogValue {
        sign: Sign::Positive,
        log_magnitude: 0.0,
    };

    /// The positive value `e^ln_value`.
    pub fn from_ln(ln_value: f64) -> Self {
        if ln_value == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        Self {
            sign: Sign::Positive,
            log_magnitude: ln_value,
        }
    }

    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            Self::ZERO
        } else if v > 0.0 {
            Self::from_ln(v.ln())
        } else {
            Self {
                sign: Sign::Negative,
                log_magnitude: (-v).ln(),
            }
        }
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn is_zero(self) -> bool {
        self.sign == Sign::Zero
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Positive
    }

    /// ln |v|.
    pub fn ln_abs(self) -> f64 {
        self.log_magnitude
    }

    /// The plain value; overflows to ±inf outside the f64 range.
    pub fn to_f64(self) -> f64 {
        match self.sign {
            Sign::Zero => 0.0,
            Sign::Positive => self.log_magnitude.exp(),
            Sign::Negative => -self.log_magnitude.exp(),
        }
    }

    pub fn abs(self) -> Self {
        match self.sign {
            Sign::Zero => self,
            _ => Self::from_ln(self.log_magnitude),
        }
    }

    pub fn recip(self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Self {
            sign: self.sign,
            log_magnitude: -self.log_magnitude,
        }
    }

    /// `v^exponent` for positive `v`.
    pub fn powf(self, exponent: f64) -> Self {
        match self.sign {
            Sign::Zero if exponent > 0.0 => Self::ZERO,
            Sign::Positive => Self::from_ln(self.log_magnitude * exponent),
            _ => panic!("powf of a non-positive LogValue"),
        }
    }

    /// ln v as a LogValue (for the `log x` factors). Requires `v > 0`.
    pub fn ln(self) -> Self {
        assert!(self.is_positive(), "ln of a non-positive LogValue");
        Self::from_f64(self.log_magnitude)
    }

    pub fn scale(self, factor: f64) -> Self {
        self * Self::from_f64(factor)
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Zero => write!(f, "0"),
            Sign::Positive => write!(f, "exp({})", self.log_magnitude),
            Sign::Negative => write!(f, "-exp({})", self.log_magnitude),
        }
    }
}

impl Neg for LogValue {
    type Output = LogValue;
    fn neg(self) -> LogValue {
        LogValue {
            sign: self.sign.flip(),
            log_magnitude: self.log_magnitude,
        }
    }
}

impl Mul for LogValue {
    type Output = LogValue;
    fn mul(self, rhs: LogValue) -> LogValue {
        let sign = self.sign.times(rhs.sign);
        if sign == Sign::Zero {
            return LogValue::ZERO;
        }
        LogValue {
            sign,
            log_magnitude: self.log_magnitude + rhs.log_magnitude,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for LogValue {
    type Output = LogValue;
    fn div(self, rhs: LogValue) -> LogValue {
        self * rhs.recip()
    }
}

impl Add for LogValue {
    type Output = LogValue;
    fn add(self, rhs: LogValue) -> LogValue {
        match (self.sign, rhs.sign) {
            (Sign::Zero, _) => rhs,
            (_, Sign::Zero) => self,
            (a, b) if a == b => LogValue {
                sign: a,
                log_magnitude: log_add_exp(self.log_magnitude, rhs.log_magnitude),
            },
            _ => {
                let (big, small) = if self.log_magnitude >= rhs.log_magnitude {
                    (self, rhs)
                } else {
                    (rhs, self)
                };
                if big.log_magnitude == small.log_magnitude {
                    return LogValue::ZERO;
                }
                LogValue {
                    sign: big.sign,
                    log_magnitude: log_sub_exp(big.log_magnitude, small.log_magnitude),
                }
            }
        }
    }
}

impl Sub for LogValue {
    type Output = LogValue;
    fn sub(self, rhs: LogValue) -> LogValue {
        self + (-rhs)
    }
}

impl PartialOrd for LogValue {
    fn partial_cmp(&self, other: &LogValue) -> Option<Ordering> {
        let rank = |s: Sign| match s {
            Sign::Negative => 0,
            Sign::Zero => 1,
            Sign::Positive => 2,
        };
        match rank(self.sign).cmp(&rank(other.sign)) {
            Ordering::Equal => match self.sign {
                Sign::Zero => Some(Ordering::Equal),
                Sign::Positive => self.log_magnitude.partial_cmp(&other.log_magnitude),
                Sign::Negative => other.log_magnitude.partial_cmp(&self.log_magnitude),
            },
            ord => Some(ord),
        }
    }
}
