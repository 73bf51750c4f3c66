//! The certified threshold set `c_n^(1) < ... < c_n^(n)`, the
//! classification bands, deficiency indices and the self-adjointness
//! threshold `c_n = c_n^(n)`.
//!
//! Thresholds are carried as exact objects: the distinguished entry
//! `(-1)^(n-1) q_0` (and any rational root of `h_{n-1}`) as a rational,
//! the rest as Sturm-certified isolating intervals on `h_{n-1}`. Band
//! membership for rational `c` is then decidable with no tolerance, which
//! is what makes the closed/open boundary conventions meaningful.
//!
//! The band pattern over the sorted thresholds `t_1 < ... < t_n` (n >= 2):
//!
//! ```text
//!   (-inf, t_1]                                   n+1
//!   (t_k, t_{k+1}]      1 <= k < floor(n/2)       n+2k+1
//!   (t_k, t_{k+1})      k = floor(n/2)            2n
//!   [t_k, t_{k+1})      floor(n/2) < k <= n-1     n+2(n-k)
//!   [t_n, +inf)                                   n
//! ```
//!
//! and for n = 1 simply `(-inf, 3/4) -> 2`, `[3/4, inf) -> 1`.

use crate::hurwitz::{build_hurwitz, HurwitzFamily};
use crate::indicial::q0_closed_form;
use crate::rational::{format_rat, render_sig};
use crate::rootcount::count_on_line;
use crate::sturm::{isolate_real_roots, IsolatingInterval};
use crate::{Error, Int, Rat, Result};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// One threshold: exactly known, or certified by an isolating interval on
/// `h_{n-1}`.
#[derive(Clone, Debug)]
pub enum ThresholdValue {
    Exact(Rat),
    Algebraic(IsolatingInterval),
}

impl ThresholdValue {
    /// Midpoint (exact value when exact).
    pub fn approx(&self) -> Rat {
        match self {
            ThresholdValue::Exact(r) => r.clone(),
            ThresholdValue::Algebraic(iv) => iv.midpoint(),
        }
    }

    /// Compare a rational query point against this threshold, exactly.
    pub fn compare(&self, c: &Rat) -> Ordering {
        match self {
            ThresholdValue::Exact(r) => c.cmp(r),
            ThresholdValue::Algebraic(iv) => match iv.clone().compare_point(c) {
                Ordering::Equal => Ordering::Equal,
                // compare_point orders root vs c; flip to c vs root
                Ordering::Less => Ordering::Greater,
                Ordering::Greater => Ordering::Less,
            },
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ThresholdValue::Exact(_))
    }

    /// Decimal rendering at `digits` significant digits, refined until the
    /// rendering is stable.
    pub fn decimal(&self, digits: usize) -> String {
        match self {
            ThresholdValue::Exact(r) => render_sig(r, digits).plain_or_sci(),
            ThresholdValue::Algebraic(iv) => {
                let mut iv = iv.clone();
                loop {
                    let lo = render_sig(iv.lo(), digits);
                    let hi = render_sig(iv.hi(), digits);
                    if lo == hi {
                        return lo.plain_or_sci();
                    }
                    let w = iv.width() / Rat::from(Int::from(16));
                    iv.refine_to(&w);
                }
            }
        }
    }

    /// JSON: exact values as rational strings, intervals as
    /// `{"interval": [lo, hi], "decimal": ...}`.
    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        match self {
            ThresholdValue::Exact(r) => serde_json::Value::String(format_rat(r)),
            ThresholdValue::Algebraic(iv) => serde_json::json!({
                "interval": [format_rat(iv.lo()), format_rat(iv.hi())],
                "decimal": self.decimal(digits),
            }),
        }
    }
}

/// The `n` certified constants, sorted ascending, with the distinguished
/// rational entry `(-1)^(n-1) q_0` marked.
#[derive(Clone, Debug)]
pub struct ThresholdSet {
    n: u32,
    entries: Vec<ThresholdValue>,
    distinguished: usize,
}

impl ThresholdSet {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> &[ThresholdValue] {
        &self.entries
    }

    /// 0-based index of the distinguished entry (position ceil(n/2), 1-based).
    pub fn distinguished_index(&self) -> usize {
        self.distinguished
    }

    /// The self-adjointness threshold `c_n`, the largest entry.
    pub fn c_n(&self) -> &ThresholdValue {
        self.entries.last().unwrap()
    }
}

static CACHE: OnceLock<Mutex<HashMap<u32, Arc<OnceLock<Arc<ThresholdSet>>>>>> = OnceLock::new();

/// Certified threshold set for order `n`, cached per `n` (at-most-once
/// construction; distinct orders may build in parallel).
pub fn threshold_set(n: u32) -> Result<Arc<ThresholdSet>> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    let cell = {
        let map = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().unwrap();
        guard.entry(n).or_insert_with(|| Arc::new(OnceLock::new())).clone()
    };
    if let Some(v) = cell.get() {
        return Ok(v.clone());
    }
    let built = Arc::new(build_threshold_set(n)?);
    Ok(cell.get_or_init(|| built).clone())
}

fn build_threshold_set(n: u32) -> Result<ThresholdSet> {
    let distinguished_value = if n % 2 == 1 {
        q0_closed_form(n)
    } else {
        -q0_closed_form(n)
    };
    if n == 1 {
        return Ok(ThresholdSet {
            n,
            entries: vec![ThresholdValue::Exact(distinguished_value)],
            distinguished: 0,
        });
    }
    let fam = build_hurwitz(n)?;
    let h = fam.h_poly();
    if fam.h_at(&distinguished_value).is_zero() {
        return Err(Error::Invariant(
            "h polynomial vanishes at the distinguished rational".into(),
        ));
    }
    let mut entries: Vec<ThresholdValue> = Vec::with_capacity(n as usize);
    if h.degree() == Some(1) {
        // exact rational root
        let root = -(&h.coeff(0) / &h.coeff(1));
        entries.push(ThresholdValue::Exact(root));
    } else {
        let mut ivs = isolate_real_roots(h)?;
        if ivs.len() != n as usize - 1 {
            return Err(Error::Invariant(format!(
                "h_{} has {} real roots, expected {}",
                n - 1,
                ivs.len(),
                n - 1
            )));
        }
        for iv in ivs.iter_mut() {
            iv.refine_default();
            // exact rational roots surface as zero-width pinches on dyadic
            // midpoints; promote when the endpoint is a root
            if h.eval(iv.hi()).is_zero() {
                entries.push(ThresholdValue::Exact(iv.hi().clone()));
            } else {
                entries.push(ThresholdValue::Algebraic(iv.clone()));
            }
        }
    }
    entries.push(ThresholdValue::Exact(distinguished_value.clone()));
    // sort with certified separation: refine intervals until disjoint from
    // each other and from every exact entry
    certify_separation(&mut entries, &fam)?;
    entries.sort_by(|a, b| a.approx().cmp(&b.approx()));
    let distinguished = entries
        .iter()
        .position(|e| matches!(e, ThresholdValue::Exact(r) if *r == distinguished_value))
        .ok_or_else(|| Error::Invariant("distinguished entry lost".into()))?;
    let set = ThresholdSet {
        n,
        entries,
        distinguished,
    };
    verify_structure(&set)?;
    Ok(set)
}

fn certify_separation(entries: &mut [ThresholdValue], fam: &HurwitzFamily) -> Result<()> {
    // refine until no interval contains any exact entry and intervals are
    // pairwise disjoint
    let exacts: Vec<Rat> = entries
        .iter()
        .filter_map(|e| match e {
            ThresholdValue::Exact(r) => Some(r.clone()),
            _ => None,
        })
        .collect();
    for e in entries.iter_mut() {
        if let ThresholdValue::Algebraic(iv) = e {
            for x in &exacts {
                if fam.h_at(x).is_zero() {
                    return Err(Error::Invariant(
                        "exact threshold is also a root of h".into(),
                    ));
                }
                // refine until x is outside (lo, hi]
                while iv.lo() < x && x <= iv.hi() {
                    let w = iv.width() / Rat::from(Int::from(4));
                    iv.refine_to(&w);
                }
            }
        }
    }
    // pairwise disjointness: isolation already guarantees it for intervals
    // from the same polynomial; re-check cheaply
    let mut spans: Vec<(Rat, Rat)> = entries
        .iter()
        .map(|e| match e {
            ThresholdValue::Exact(r) => (r.clone(), r.clone()),
            ThresholdValue::Algebraic(iv) => (iv.lo().clone(), iv.hi().clone()),
        })
        .collect();
    spans.sort_by(|a, b| a.0.cmp(&b.0));
    for w in spans.windows(2) {
        if w[0].1 >= w[1].0 && w[0] != w[1] {
            return Err(Error::Invariant("threshold intervals overlap".into()));
        }
    }
    Ok(())
}

fn verify_structure(set: &ThresholdSet) -> Result<()> {
    let n = set.n;
    // strict ordering
    for w in set.entries.windows(2) {
        let hi_of_lo = match &w[0] {
            ThresholdValue::Exact(r) => r.clone(),
            ThresholdValue::Algebraic(iv) => iv.hi().clone(),
        };
        let lo_of_hi = match &w[1] {
            ThresholdValue::Exact(r) => r.clone(),
            ThresholdValue::Algebraic(iv) => iv.lo().clone(),
        };
        if hi_of_lo > lo_of_hi {
            return Err(Error::Invariant("thresholds not strictly ordered".into()));
        }
    }
    // sign split: floor(n/2) negative, the rest positive
    let negatives = set
        .entries
        .iter()
        .filter(|e| e.compare(&Rat::zero()) == Ordering::Greater)
        .count();
    if negatives != (n / 2) as usize {
        return Err(Error::Invariant(format!(
            "expected {} negative thresholds, found {negatives}",
            n / 2
        )));
    }
    // distinguished position ceil(n/2) (1-based)
    if set.distinguished + 1 != n.div_ceil(2) as usize {
        return Err(Error::Invariant(format!(
            "distinguished entry at position {}, expected {}",
            set.distinguished + 1,
            n.div_ceil(2)
        )));
    }
    // c_n >= q_0
    let q0 = q0_closed_form(n);
    match set.c_n().compare(&q0) {
        Ordering::Greater => {
            return Err(Error::Invariant("c_n < q_0".into()));
        }
        _ => {}
    }
    Ok(())
}

/// `#_{L^2}`: the number of solutions square-integrable near the origin,
/// per the five-case band formula. Agrees with `count_right(n, c).0`.
pub fn classify(n: u32, c: &Rat) -> Result<usize> {
    let set = threshold_set(n)?;
    let n_us = n as usize;
    if n == 1 {
        return Ok(match set.entries[0].compare(c) {
            Ordering::Less => 2,
            _ => 1, // c >= 3/4
        });
    }
    // relation of c to each threshold
    let rels: Vec<Ordering> = set.entries.iter().map(|t| t.compare(c)).collect();
    let half = (n / 2) as usize;
    if let Some(j0) = rels.iter().position(|r| *r == Ordering::Equal) {
        let j = j0 + 1; // 1-based
        return Ok(if j <= half {
            // t_j belongs to the band ending at t_j
            if j == 1 {
                n_us + 1
            } else {
                n_us + 2 * (j - 1) + 1
            }
        } else if j == n_us {
            n_us
        } else {
            n_us + 2 * (n_us - j)
        });
    }
    let below = rels.iter().filter(|r| **r == Ordering::Greater).count(); // thresholds < c
    Ok(match below {
        0 => n_us + 1,
        k if k == n_us => n_us,
        k if k < half => n_us + 2 * k + 1,
        k if k == half => 2 * n_us,
        k => n_us + 2 * (n_us - k),
    })
}

/// Deficiency indices `n_± = #_{L^2} - n`, always in `[0, n]`.
pub fn deficiency_indices(n: u32, c: &Rat) -> Result<usize> {
    let count = classify(n, c)?;
    Ok(count - n as usize)
}

/// Essential self-adjointness of the minimal operator: deficiency zero,
/// equivalently `c >= c_n`. Both characterizations are computed and must
/// agree.
pub fn is_essentially_selfadjoint(n: u32, c: &Rat) -> Result<bool> {
    let by_count = classify(n, c)? == n as usize;
    let set = threshold_set(n)?;
    // compare(c) orders c against the threshold: c >= c_n iff not Less
    let by_threshold = set.c_n().compare(c) != Ordering::Less;
    if by_count != by_threshold {
        return Err(Error::Invariant(
            "deficiency count and threshold comparison disagree".into(),
        ));
    }
    Ok(by_count)
}

/// Self-adjointness threshold rendered to `digits` significant digits,
/// with the certifying interval (or exact value).
pub fn selfadjoint_threshold(n: u32, digits: usize) -> Result<(String, ThresholdValue)> {
    let set = threshold_set(n)?;
    let v = set.c_n().clone();
    Ok((v.decimal(digits.max(1)), v))
}

/// One classification band: a maximal interval of constant `#_{L^2}`.
#[derive(Clone, Debug)]
pub struct ClassificationBand {
    /// `None` for -infinity.
    pub lo: Option<ThresholdValue>,
    /// `None` for +infinity.
    pub hi: Option<ThresholdValue>,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub count: usize,
}

/// The full partition of the real line with `#_{L^2}` per band; the counts
/// sweep every integer from `n` to `2n`.
pub fn band_table(n: u32) -> Result<Vec<ClassificationBand>> {
    let set = threshold_set(n)?;
    let n_us = n as usize;
    if n == 1 {
        let t = set.entries[0].clone();
        return Ok(vec![
            ClassificationBand {
                lo: None,
                hi: Some(t.clone()),
                lo_closed: false,
                hi_closed: false,
                count: 2,
            },
            ClassificationBand {
                lo: Some(t),
                hi: None,
                lo_closed: true,
                hi_closed: false,
                count: 1,
            },
        ]);
    }
    let half = (n / 2) as usize;
    let t = &set.entries;
    let mut bands = Vec::with_capacity(n_us + 1);
    bands.push(ClassificationBand {
        lo: None,
        hi: Some(t[0].clone()),
        lo_closed: false,
        hi_closed: true,
        count: n_us + 1,
    });
    for k in 1..n_us {
        let (lo_closed, hi_closed, count) = if k < half {
            (false, true, n_us + 2 * k + 1)
        } else if k == half {
            (false, false, 2 * n_us)
        } else {
            (true, false, n_us + 2 * (n_us - k))
        };
        bands.push(ClassificationBand {
            lo: Some(t[k - 1].clone()),
            hi: Some(t[k].clone()),
            lo_closed,
            hi_closed,
            count,
        });
    }
    bands.push(ClassificationBand {
        lo: Some(t[n_us - 1].clone()),
        hi: None,
        lo_closed: true,
        hi_closed: false,
        count: n_us,
    });
    Ok(bands)
}

/// Empirical check of the converse crossing property: every threshold
/// carries at least one root on the line. Exact entries use the exact
/// on-line count; interval entries refine until a root of the indicial
/// polynomial at the midpoint sits within the interval's reach of the line.
pub fn thresholds_have_line_roots(n: u32) -> Result<bool> {
    let set = threshold_set(n)?;
    for e in set.entries() {
        match e {
            ThresholdValue::Exact(r) => {
                if count_on_line(n, r)? == 0 {
                    return Ok(false);
                }
            }
            ThresholdValue::Algebraic(iv) => {
                let mut iv = iv.clone();
                let eps = Rat::new(Int::one(), Int::one() << 120)
                    * if iv.midpoint().abs() > Rat::one() {
                        iv.midpoint().abs()
                    } else {
                        Rat::one()
                    };
                iv.refine_to(&eps);
                let mid = iv.midpoint();
                let inv = crate::rootcount::numeric_roots(n, &mid, 192)?;
                let p = 192;
                let half = crate::mp::from_rat(&Rat::new(Int::from(-1), Int::from(2)), p);
                let near = inv.roots().iter().any(|(z, _)| {
                    crate::mp::sub(&z.re, &half, p).abs() < crate::mp::pow2(-40, p)
                });
                if !near {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_rat;

    fn rat(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    #[test]
    fn threshold_sets_small_n() {
        let s1 = threshold_set(1).unwrap();
        assert_eq!(s1.entries().len(), 1);
        assert!(matches!(&s1.entries()[0], ThresholdValue::Exact(r) if *r == rat("3/4")));

        let s2 = threshold_set(2).unwrap();
        assert_eq!(s2.entries().len(), 2);
        assert!(matches!(&s2.entries()[0], ThresholdValue::Exact(r) if *r == rat("-105/16")));
        assert!(matches!(&s2.entries()[1], ThresholdValue::Exact(r) if *r == rat("45")));
        assert_eq!(s2.distinguished_index(), 0);

        let s3 = threshold_set(3).unwrap();
        assert_eq!(s3.entries().len(), 3);
        assert_eq!(s3.distinguished_index(), 1);
        assert!(matches!(&s3.entries()[1], ThresholdValue::Exact(r) if *r == rat("10395/64")));
        // outer pair are the roots of 27c^2 - 958720c - 677376000
        let quad = crate::poly::qpoly_from_strs(&["-677376000", "-958720", "27"]).unwrap();
        for k in [0usize, 2] {
            if let ThresholdValue::Algebraic(iv) = &s3.entries()[k] {
                assert_eq!(iv.poly().monic(), quad.monic().monic());
                let lo = quad.eval(iv.lo());
                let hi = quad.eval(iv.hi());
                assert!(lo.is_negative() != hi.is_negative() || hi.is_zero());
            } else {
                panic!("expected interval at position {k}");
            }
        }
    }

    #[test]
    fn selfadjoint_threshold_digits() {
        let (s, _) = selfadjoint_threshold(2, 6).unwrap();
        assert_eq!(s, "45.0000");
        let (s, _) = selfadjoint_threshold(3, 15).unwrap();
        assert_eq!(s, "36201.1645283357");
    }

    #[test]
    fn classification_bands_n2() {
        // (-inf, -105/16] -> 3, (-105/16, 45) -> 4, [45, inf) -> 2
        assert_eq!(classify(2, &rat("-105/16")).unwrap(), 3);
        assert_eq!(classify(2, &rat("-7")).unwrap(), 3);
        assert_eq!(classify(2, &rat("0")).unwrap(), 4);
        assert_eq!(classify(2, &rat("44")).unwrap(), 4);
        assert_eq!(classify(2, &rat("45")).unwrap(), 2);
        assert_eq!(classify(2, &rat("100")).unwrap(), 2);
    }

    #[test]
    fn classification_bands_n3() {
        assert_eq!(classify(3, &rat("-700")).unwrap(), 4);
        assert_eq!(classify(3, &rat("-692")).unwrap(), 6);
        assert_eq!(classify(3, &rat("0")).unwrap(), 6);
        assert_eq!(classify(3, &rat("10395/64")).unwrap(), 5);
        assert_eq!(classify(3, &rat("200")).unwrap(), 5);
        assert_eq!(classify(3, &rat("36202")).unwrap(), 3);
    }

    #[test]
    fn classification_n1() {
        assert_eq!(classify(1, &rat("1/2")).unwrap(), 2);
        assert_eq!(classify(1, &rat("3/4")).unwrap(), 1);
        assert_eq!(classify(1, &rat("2")).unwrap(), 1);
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(deficiency_indices(1, &rat("3/4")).unwrap(), 0);
        assert_eq!(deficiency_indices(2, &rat("0")).unwrap(), 2);
        assert_eq!(deficiency_indices(3, &rat("100000")).unwrap(), 0);
    }

    #[test]
    fn selfadjointness_boundary() {
        assert!(is_essentially_selfadjoint(1, &rat("3/4")).unwrap());
        assert!(!is_essentially_selfadjoint(1, &rat("0.74")).unwrap());
        assert!(!is_essentially_selfadjoint(2, &rat("44")).unwrap());
        assert!(is_essentially_selfadjoint(2, &rat("45")).unwrap());
        assert!(is_essentially_selfadjoint(3, &rat("36202")).unwrap());
        assert!(!is_essentially_selfadjoint(3, &rat("36201")).unwrap());
    }

    #[test]
    fn band_tables() {
        let b = band_table(2).unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(
            b.iter().map(|x| x.count).collect::<Vec<_>>(),
            vec![3, 4, 2]
        );
        assert!(b[0].hi_closed && !b[1].lo_closed && !b[1].hi_closed && b[2].lo_closed);

        let b = band_table(3).unwrap();
        assert_eq!(
            b.iter().map(|x| x.count).collect::<Vec<_>>(),
            vec![4, 6, 5, 3]
        );

        let b = band_table(1).unwrap();
        assert_eq!(b.iter().map(|x| x.count).collect::<Vec<_>>(), vec![2, 1]);
    }

    #[test]
    fn count_sequences_sweep_n_to_2n() {
        for n in 2..=6u32 {
            let b = band_table(n).unwrap();
            let counts: Vec<usize> = b.iter().map(|x| x.count).collect();
            let mut sorted = counts.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(
                sorted,
                ((n as usize)..=(2 * n as usize)).collect::<Vec<_>>(),
                "n={n}"
            );
            // left side ascends by 2 to 2n, right side descends by 2 to n
            let peak = counts.iter().position(|&c| c == 2 * n as usize).unwrap();
            for w in counts[..=peak].windows(2) {
                assert!(w[1] == w[0] + 2 || w[1] == w[0] + 1, "n={n}");
            }
            for w in counts[peak..].windows(2) {
                assert!(w[0] == w[1] + 2 || w[0] == w[1] + 1, "n={n}");
            }
        }
    }

    #[test]
    fn structure_invariants_through_n8() {
        for n in 1..=8u32 {
            let s = threshold_set(n).unwrap();
            assert_eq!(s.entries().len(), n as usize, "n={n}");
            // verify_structure ran during construction; re-check the headline
            // numbers here
            let negs = s
                .entries()
                .iter()
                .filter(|e| e.compare(&Rat::zero()) == Ordering::Greater)
                .count();
            assert_eq!(negs, (n / 2) as usize, "n={n} sign split");
            assert_eq!(s.distinguished_index() + 1, n.div_ceil(2) as usize, "n={n}");
            let q0 = q0_closed_form(n);
            assert_ne!(s.c_n().compare(&q0), Ordering::Greater, "n={n} c_n >= q0");
        }
    }

    #[test]
    fn exact_thresholds_carry_line_roots() {
        for n in 1..=4u32 {
            assert!(thresholds_have_line_roots(n).unwrap(), "n={n}");
        }
    }
}
