use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exact non-negative rational. Comparisons cross-multiply in 128 bits, so
/// support thresholds like 2/3 are decided exactly; the stored numerator and
/// denominator are kept as given (a support of 2/4 renders as `2/4`).
#[derive(Debug, Clone, Copy)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den != 0, "ratio denominator must be non-zero");
        Ratio { num, den }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Parses `p/q`, a bare integer, or a decimal such as `0.5` (read as the
    /// exact fraction 5/10, never as a binary float).
    pub fn parse(text: &str) -> Result<Ratio> {
        let text = text.trim();
        let bad = || Error::BadRatio(text.to_string());
        if let Some((p, q)) = text.split_once('/') {
            let num: u64 = p.trim().parse().map_err(|_| bad())?;
            let den: u64 = q.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            return Ok(Ratio::new(num, den));
        }
        if let Some((int, frac)) = text.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let frac_digits = frac.len() as u32;
            if frac_digits > 18 {
                return Err(bad());
            }
            let scale = 10u64.pow(frac_digits);
            let frac: u64 = frac.parse().map_err(|_| bad())?;
            let num = int.checked_mul(scale).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?;
            return Ok(Ratio::new(num, scale));
        }
        let num: u64 = text.parse().map_err(|_| bad())?;
        Ok(Ratio::new(num, 1))
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Ratio) -> bool {
        self.num as u128 * other.den as u128 == other.num as u128 * self.den as u128
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
