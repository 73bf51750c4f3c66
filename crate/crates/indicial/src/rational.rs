//! Parsing and rendering of exact rationals.
//!
//! The interchange format is the string `"p/q"`, or just `"p"` when the
//! denominator is one. Decimal literals convert to the exact rational they
//! denote (`0.74` is `37/50`, never a binary float), so boundary
//! comparisons against thresholds stay exact.

use crate::{Error, Int, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Format a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p/q`, an integer literal, or a decimal literal (optionally with
/// an exponent, `1.5e3`) into the exact rational it denotes.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Input("empty rational literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: Int = num
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad numerator {num:?}")))?;
        let d: Int = den
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad denominator {den:?}")))?;
        if d.is_zero() {
            return Err(Error::Input("zero denominator".into()));
        }
        return Ok(Rat::new(n, d));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<Rat> {
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::Input(format!("bad exponent {e:?}")))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (int_part, frac_part) = match mant.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mant, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(Error::Input(format!("bad decimal literal {s:?}")));
    }
    let n: Int = digits
        .parse()
        .map_err(|_| Error::Input(format!("bad decimal literal {s:?}")))?;
    let scale = frac_part.len() as i64 - exp;
    let ten = Int::from(10);
    Ok(if scale >= 0 {
        Rat::new(n, ten.pow(scale as u32))
    } else {
        Rat::from(n * ten.pow((-scale) as u32))
    })
}

/// A decimal rendering of a rational: `digits` is a string of `sig` decimal
/// digits d1 d2 ... (no point), and the value is `0.d1d2... * 10^exp10`
/// up to the sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub negative: bool,
    pub digits: String,
    pub exp10: i64,
}

impl Decimal {
    /// Scientific notation `d.ddd...e+X`.
    pub fn sci(&self) -> String {
        let sign = if self.negative { "-" } else { "" };
        let (head, tail) = self.digits.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{:+}", self.exp10 - 1)
        } else {
            format!("{sign}{head}.{tail}e{:+}", self.exp10 - 1)
        }
    }

    /// Plain positional notation when the exponent is moderate, otherwise
    /// scientific.
    pub fn plain_or_sci(&self) -> String {
        let sign = if self.negative { "-" } else { "" };
        let k = self.exp10;
        let n = self.digits.len() as i64;
        if k > 21 || k < -5 {
            return self.sci();
        }
        if k <= 0 {
            let zeros = "0".repeat((-k) as usize);
            format!("{sign}0.{zeros}{}", self.digits)
        } else if k >= n {
            let zeros = "0".repeat((k - n) as usize);
            format!("{sign}{}{zeros}", self.digits)
        } else {
            let (i, f) = self.digits.split_at(k as usize);
            format!("{sign}{i}.{f}")
        }
    }
}

/// Render `r` to `sig` significant decimal digits with round-half-even,
/// computed exactly.
pub fn render_sig(r: &Rat, sig: usize) -> Decimal {
    assert!(sig >= 1, "need at least one significant digit");
    if r.is_zero() {
        return Decimal {
            negative: false,
            digits: "0".repeat(sig),
            exp10: 0,
        };
    }
    let negative = r.is_negative();
    let a = r.abs();
    // exp10 = smallest k with a < 10^k
    let mut exp10 = approx_exp10(&a);
    let ten = Int::from(10);
    loop {
        let lo_ok = a >= pow10_rat(exp10 - 1);
        let hi_ok = a < pow10_rat(exp10);
        if lo_ok && hi_ok {
            break;
        }
        exp10 += if !hi_ok { 1 } else { -1 };
    }
    // m = round(a * 10^(sig - exp10)), half to even
    let shift = sig as i64 - exp10;
    let (num, den) = if shift >= 0 {
        (a.numer() * ten.pow(shift as u32), a.denom().clone())
    } else {
        (a.numer().clone(), a.denom() * ten.pow((-shift) as u32))
    };
    let (mut q, rem) = num.div_rem(&den);
    let twice = &rem * 2;
    if twice > den || (twice == den && q.is_odd()) {
        q += 1;
    }
    let cap = ten.pow(sig as u32);
    if q == cap {
        q = ten.pow(sig as u32 - 1);
        exp10 += 1;
    }
    let mut digits = q.to_string();
    debug_assert!(digits.len() <= sig);
    while digits.len() < sig {
        digits.insert(0, '0'); // can only happen for q = 10^(sig-1) edge
    }
    Decimal {
        negative,
        digits,
        exp10,
    }
}

fn pow10_rat(k: i64) -> Rat {
    let ten = Int::from(10);
    if k >= 0 {
        Rat::from(ten.pow(k as u32))
    } else {
        Rat::new(Int::one(), ten.pow((-k) as u32))
    }
}

/// Cheap first guess for the decimal exponent; corrected exactly by the caller.
fn approx_exp10(a: &Rat) -> i64 {
    let bits = a.numer().bits() as i64 - a.denom().bits() as i64;
    (bits as f64 * std::f64::consts::LOG10_2).round() as i64
}

/// Rough f64 value, usable only for size estimates (never for decisions).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let bits = r.numer().bits() as i64 - r.denom().bits() as i64;
        let sign = if r.is_negative() { -1.0 } else { 1.0 };
        sign * (bits as f64 * std::f64::consts::LN_2).exp()
    })
}
