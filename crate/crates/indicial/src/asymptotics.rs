//! High-precision evaluation of the self-adjointness threshold `c_n` and
//! the asymptotic comparison tables.
//!
//! `c_n` is never touched by floating root-finding: the certified
//! isolating interval from [`crate::thresholds`] is bisected exactly until
//! the decimal rendering at the requested number of significant digits is
//! stable, so every printed digit inherits the Sturm certificate. The
//! comparison quantities `(2n^2/pi)^{2n}`, `2n^2/pi`, `c_n^(1/2n)` and
//! `n/sin(pi/(2n))` are evaluated in explicit-precision floating
//! arithmetic with `precision = 4*digits + 32` bits.

use crate::mp;
use crate::rational::{render_sig, Decimal};
use crate::thresholds::{threshold_set, ThresholdValue};
use crate::{Error, Rat, Result};
use num_traits::Signed;
use serde::Serialize;

/// One row of the asymptotic tables.
#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticRow {
    pub n: u32,
    /// `c_n` at the requested significant digits.
    pub cn: String,
    /// `(2n^2/pi)^{2n}`.
    pub conjecture: String,
    /// `2n^2/pi`.
    pub lower: String,
    /// `c_n^(1/(2n))`.
    pub mid: String,
    /// `n/sin(pi/(2n))`.
    pub upper: String,
    /// strict sandwich `lower < mid < upper`, checked, not assumed.
    pub sandwich_ok: bool,
}

/// `c_n` to `digits` significant digits (correctly rounded), by exact
/// bisection of the certified interval.
pub fn cn_highprec(n: u32, digits: usize) -> Result<String> {
    if digits == 0 || digits > 50 {
        return Err(Error::Input("digits must be between 1 and 50".into()));
    }
    let set = threshold_set(n)?;
    Ok(set.c_n().decimal(digits))
}

/// `c_n` as a rational approximation good to `extra` bits beyond the
/// decimal target, for feeding the floating comparisons.
fn cn_rational(n: u32, digits: usize) -> Result<Rat> {
    let set = threshold_set(n)?;
    match set.c_n() {
        ThresholdValue::Exact(r) => Ok(r.clone()),
        ThresholdValue::Algebraic(iv) => {
            let mut iv = iv.clone();
            // 4 bits per decimal digit plus slack
            let scale = iv.midpoint().abs();
            let eps = scale * Rat::new(crate::Int::from(1), crate::Int::from(1) << (4 * digits + 16) as u64);
            iv.refine_to(&eps);
            Ok(iv.midpoint())
        }
    }
}

fn decimal_str(d: &Decimal) -> String {
    d.sci()
}

/// Rows `1..=n_max` for the growth comparison (`c_n` vs `(2n^2/pi)^{2n}`).
pub fn table_a2(n_max: u32, digits: usize) -> Result<Vec<AsymptoticRow>> {
    (1..=n_max).map(|n| row(n, digits)).collect()
}

/// Rows `1..=n_max` for the sandwich comparison at >= 8 significant digits.
pub fn table_a3(n_max: u32) -> Result<Vec<AsymptoticRow>> {
    (1..=n_max).map(|n| row(n, 8)).collect()
}

fn row(n: u32, digits: usize) -> Result<AsymptoticRow> {
    let digits = digits.max(2);
    let p = 4 * digits + 32;
    let cn_str = cn_highprec(n, digits)?;
    let cn_rat = cn_rational(n, digits + 4)?;
    let cn_f = mp::from_rat(&cn_rat, p);
    let pi = mp::pi(p);
    let two_n2 = mp::from_u64(2 * n as u64 * n as u64, p);
    let lower = mp::div(&two_n2, &pi, p);
    let conj = mp::powi(&lower, 2 * n as usize, p);
    let mid = {
        // c_n^(1/(2n)) via exp(ln(c_n)/(2n))
        let l = mp::ln(&cn_f, p);
        let e = mp::div(&l, &mp::from_u64(2 * n as u64, p), p);
        mp::exp(&e, p)
    };
    let upper = {
        let angle = mp::div(&pi, &mp::from_u64(2 * n as u64, p), p);
        let s = mp::sin(&angle, p);
        mp::div(&mp::from_u64(n as u64, p), &s, p)
    };
    // the strict sandwich is a conjecture: check it against the certified
    // interval endpoints, not just the midpoint
    let sandwich_ok = {
        let set = threshold_set(n)?;
        let (lo_rat, hi_rat) = match set.c_n() {
            ThresholdValue::Exact(r) => (r.clone(), r.clone()),
            ThresholdValue::Algebraic(iv) => {
                let mut iv = iv.clone();
                let scale = iv.midpoint().abs();
                let eps = scale
                    * Rat::new(crate::Int::from(1), crate::Int::from(1) << (4 * digits + 16) as u64);
                iv.refine_to(&eps);
                (iv.lo().clone(), iv.hi().clone())
            }
        };
        let root_of = |r: &Rat| {
            let l = mp::ln(&mp::from_rat(r, p), p);
            mp::exp(&mp::div(&l, &mp::from_u64(2 * n as u64, p), p), p)
        };
        let mid_lo = root_of(&lo_rat);
        let mid_hi = root_of(&hi_rat);
        lower < mid_lo && mid_hi < upper
    };
    Ok(AsymptoticRow {
        n,
        cn: cn_str,
        conjecture: decimal_str(&mp::render(&conj, digits)),
        lower: decimal_str(&mp::render(&lower, digits)),
        mid: decimal_str(&mp::render(&mid, digits)),
        upper: decimal_str(&mp::render(&upper, digits)),
        sandwich_ok,
    })
}

/// CSV emitters with fixed headers (comma fields, `\n` endings).
pub fn table_a2_csv(rows: &[AsymptoticRow]) -> String {
    let mut out = String::from("n,c_n,conjecture\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.n, r.cn, r.conjecture));
    }
    out
}

pub fn table_a3_csv(rows: &[AsymptoticRow]) -> String {
    let mut out = String::from("n,lower,cn_root,upper,sandwich\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.n, r.lower, r.mid, r.upper, r.sandwich_ok
        ));
    }
    out
}

/// Stability probe used by the tests: rendering with extra guard bits must
/// not change the digits.
pub fn cn_render_is_stable(n: u32, digits: usize) -> Result<bool> {
    let a = cn_highprec(n, digits)?;
    let r = cn_rational(n, digits + 12)?;
    let b = render_sig(&r, digits).plain_or_sci();
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cn_values_small_n() {
        assert_eq!(cn_highprec(1, 2).unwrap(), "0.75");
        assert_eq!(cn_highprec(2, 6).unwrap(), "45.0000");
        assert_eq!(cn_highprec(3, 6).unwrap(), "36201.2");
        assert_eq!(cn_highprec(4, 16).unwrap(), "117089256.9368802");
    }

    #[test]
    fn digit_guard() {
        assert!(cn_highprec(3, 0).is_err());
        assert!(cn_highprec(3, 51).is_err());
    }

    #[test]
    fn row_n1_matches_printed_values() {
        let r = row(1, 8).unwrap();
        // 2/pi = 0.63661977, sqrt(3)/2 = 0.86602540, 1/sin(pi/2) = 1
        assert!(r.lower.starts_with("6.3661977e-1"));
        assert!(r.mid.starts_with("8.6602540e-1"));
        assert!(r.upper.starts_with("1.0000000e+0"));
        assert!(r.sandwich_ok);
    }

    #[test]
    fn rendering_is_stable_under_guard_bits() {
        for n in [2u32, 3, 4, 5] {
            assert!(cn_render_is_stable(n, 10).unwrap(), "n={n}");
        }
    }
}
