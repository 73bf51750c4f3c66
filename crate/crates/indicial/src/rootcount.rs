//! Counting and locating the roots of `D_{2n}(.; c)` relative to the
//! critical line `Re = -1/2`.
//!
//! Two independent routes are implemented and cross-checked:
//!
//! * an exact route through the signs of the leading principal minors of
//!   the classical Hurwitz matrix of `D_{2n}(z - 1/2; c)` (valid whenever
//!   no minor vanishes, which in particular forces no root on the line);
//! * a certified numeric route: exact square-free decomposition over Q
//!   fixes every multiplicity, Sturm isolation pins the real roots and the
//!   on-line roots exactly, and Aberth iteration with inclusion-disk
//!   certification locates the rest.
//!
//! On-line roots are always counted exactly: writing
//! `D_{2n}(-1/2 + iy; c) = A(y) + i B(y)` with `A` even and `B` odd, the
//! roots on the line are the common real roots of `A` and `B`, i.e. the
//! real roots of `gcd(A, B)`, with multiplicities preserved.

use crate::indicial::{beta_roots, build_indicial, shifted_coeffs};
use crate::matrix::leading_principal_minors;
use crate::mp::{self, Cx};
use crate::poly::Polynomial;
use crate::sturm::{isolate_real_roots, sturm_count, Bound};
use crate::{Error, Int, QPoly, Rat, Result};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Default working precision (bits) for the numeric route.
pub const DEFAULT_PRECISION: usize = 256;
/// Sweep cap for the simultaneous iteration.
const MAX_SWEEPS: usize = 200;
/// Precision-escalation cap for line certification.
const MAX_ESCALATIONS: usize = 4;

/// Real and imaginary parts of `D_{2n}(-1/2 + iy; c)` as polynomials in `y`.
#[derive(Clone, Debug)]
pub struct LinePair {
    pub a: QPoly,
    pub b: QPoly,
}

/// `A(y) + i B(y) = Q(iy)` where `Q(w) = D_{2n}(w - 1/2; c)`.
pub fn line_pair(n: u32, c: &Rat) -> Result<LinePair> {
    let fam = build_indicial(n)?;
    let q = shifted_coeffs(&fam)?;
    let deg = 2 * n as usize;
    let mut qc: Vec<Rat> = q.q().to_vec();
    qc[0] = q.constant_with(n, c);
    let mut a = vec![Rat::zero(); deg + 1];
    let mut b = vec![Rat::zero(); deg + 1];
    for (j, coeff) in qc.iter().enumerate() {
        // i^j cycles +1, +i, -1, -i
        match j % 4 {
            0 => a[j] = coeff.clone(),
            1 => b[j] = coeff.clone(),
            2 => a[j] = -coeff.clone(),
            _ => b[j] = -coeff.clone(),
        }
    }
    Ok(LinePair {
        a: Polynomial::new(a),
        b: Polynomial::new(b),
    })
}

/// Exact number of roots (with multiplicity) of `D_{2n}(.; c)` on the line
/// `Re = -1/2`.
pub fn count_on_line(n: u32, c: &Rat) -> Result<usize> {
    Ok(on_line_structure(n, c)?.total)
}

/// The exact on-line data: `gcd(A, B)` and its real roots by multiplicity.
pub(crate) struct OnLine {
    /// multiplicity -> square-free factor of gcd(A, B) carrying that
    /// multiplicity, restricted to factors with real roots
    pub factors: Vec<(QPoly, usize)>,
    pub total: usize,
}

pub(crate) fn on_line_structure(n: u32, c: &Rat) -> Result<OnLine> {
    let lp = line_pair(n, c)?;
    let g = lp.a.gcd(&lp.b)?;
    if g.degree().unwrap_or(0) == 0 {
        return Ok(OnLine {
            factors: Vec::new(),
            total: 0,
        });
    }
    let decomposition = g.squarefree_decomposition()?;
    let mut factors = Vec::new();
    let mut total = 0usize;
    for (f, m) in decomposition {
        let distinct = sturm_count(&f, &Bound::NegInf, &Bound::PosInf)?;
        if distinct > 0 {
            total += m * distinct;
            factors.push((f, m));
        }
    }
    Ok(OnLine { factors, total })
}

/// Outcome of the exact minor-sign route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalfPlaneCount {
    /// All 2n leading principal minors are nonzero; the triple is exact.
    Exact { gt: usize, on: usize, lt: usize },
    /// Some minor vanishes; fall back to the certified numeric route.
    Degenerate { on: usize },
}

/// Exact (gt, on, lt) through Hurwitz minor signs when nondegenerate.
///
/// With `p(z) = D_{2n}(z - 1/2; c)` (roots shifted so the critical line is
/// the imaginary axis), the number of roots with `Re > 0` equals the
/// number of sign variations of `1, D_1, D_2/D_1, ..., D_{2n}/D_{2n-1}`
/// over the classical (unnegated) Hurwitz minors of `p`.
pub fn count_halfplanes_exact(n: u32, c: &Rat) -> Result<HalfPlaneCount> {
    let on = count_on_line(n, c)?;
    let fam = build_indicial(n)?;
    let q = shifted_coeffs(&fam)?;
    let size = 2 * n as usize;
    // descending coefficients a_k, constant term with the coupling folded in
    let mut a: Vec<Rat> = (0..=size).map(|k| q.q()[size - k].clone()).collect();
    a[size] = q.constant_with(n, c);
    // classical layout, row-scaled by positive integers to clear denominators
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(size);
    for i in 1..=size {
        let mut l = Int::one();
        for j in 1..=size {
            let k = 2 * j as isize - i as isize;
            if k >= 0 && k as usize <= size {
                l = l.lcm(a[k as usize].denom());
            }
        }
        rows.push(
            (1..=size)
                .map(|j| {
                    let k = 2 * j as isize - i as isize;
                    if k < 0 || k as usize > size {
                        Int::zero()
                    } else {
                        let e = &a[k as usize];
                        e.numer() * (&l / e.denom())
                    }
                })
                .collect(),
        );
    }
    let minors = leading_principal_minors(&rows);
    if minors.len() < size || minors.last().unwrap().is_zero() {
        return Ok(HalfPlaneCount::Degenerate { on });
    }
    if on != 0 {
        // a root on the line forces det or the Orlando factor to vanish;
        // reaching here would mean the two exact routes disagree
        return Err(Error::Invariant(
            "nonzero on-line count with nonvanishing minors".into(),
        ));
    }
    // sign variations of 1, D1, D2/D1, ...
    let signs: Vec<i8> = minors
        .iter()
        .map(|m| if m.is_negative() { -1 } else { 1 })
        .collect();
    let mut seq = Vec::with_capacity(size + 1);
    seq.push(1i8);
    let mut prev = 1i8;
    for s in signs {
        seq.push(s * prev);
        prev = s;
    }
    let gt = seq.windows(2).filter(|w| w[0] != w[1]).count();
    Ok(HalfPlaneCount::Exact {
        gt,
        on: 0,
        lt: size - gt,
    })
}

/// How a root inventory was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    ExactMinors,
    CertifiedNumeric,
    Hybrid,
}

/// Labeled roots of `D_{2n}(.; c)` with multiplicities and the triple
/// count against the line `Re = -1/2`. Roots are sorted ascending by
/// (re, im); conjugate pairs are exactly symmetric by construction.
#[derive(Clone, Debug)]
pub struct RootInventory {
    n: u32,
    c: Rat,
    precision: usize,
    roots: Vec<(Cx, usize)>,
    counts: (usize, usize, usize),
    method: CountMethod,
}

impl RootInventory {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn roots(&self) -> &[(Cx, usize)] {
        &self.roots
    }

    /// (gt, on, lt): counts with multiplicity of roots right of, on, and
    /// left of the line.
    pub fn counts(&self) -> (usize, usize, usize) {
        self.counts
    }

    pub fn method(&self) -> CountMethod {
        self.method
    }

    /// JSON per the interchange format: roots as [re, im, multiplicity]
    /// with decimal strings, plus the count triple.
    pub fn to_json(&self, digits: usize) -> serde_json::Value {
        let roots: Vec<serde_json::Value> = self
            .roots
            .iter()
            .map(|(z, m)| {
                serde_json::json!([
                    mp::render(&z.re, digits).sci(),
                    mp::render(&z.im, digits).sci(),
                    m.to_string()
                ])
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "c": crate::rational::format_rat(&self.c),
            "precision_bits": self.precision,
            "method": serde_json::to_value(self.method).unwrap(),
            "roots": roots,
            "counts": { "gt": self.counts.0, "on": self.counts.1, "lt": self.counts.2 },
        })
    }
}

/// Deterministic jitter source (fixed seed, splitmix64).
struct Jitter(u64);

impl Jitter {
    fn new() -> Self {
        Jitter(0x9e3779b97f4a7c15)
    }

    fn next_unit(&mut self) -> f64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    }
}

/// All roots of one square-free factor by Aberth-Ehrlich iteration.
/// `seed_roots` supplies initial guesses (jittered); falls back to a
/// circle of the factor's Cauchy bound radius.
fn aberth(factor: &QPoly, seeds: &[Cx], p: usize) -> Result<Vec<Cx>> {
    let deg = factor.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 0 {
        return Ok(Vec::new());
    }
    let wp = p + 64;
    let coeffs: Vec<Cx> = factor
        .coeffs()
        .iter()
        .map(|c| Cx::from_rat(c, wp))
        .collect();
    let dcoeffs: Vec<Cx> = factor
        .derivative()
        .coeffs()
        .iter()
        .map(|c| Cx::from_rat(c, wp))
        .collect();
    let mut z: Vec<Cx> = seeds.iter().map(|s| Cx::new(s.re.clone(), s.im.clone())).collect();
    debug_assert_eq!(z.len(), deg);
    let tol = mp::pow2(-(p as i64) - 8, wp);
    let tiny = mp::pow2(-2 * (wp as i64), wp);
    for _sweep in 0..MAX_SWEEPS {
        let mut worst = mp::from_f64(0.0, wp);
        for k in 0..deg {
            let fz = eval_cx(&coeffs, &z[k], wp);
            if fz.is_zero() {
                continue;
            }
            let dfz = eval_cx(&dcoeffs, &z[k], wp);
            let newton = if dfz.is_zero() {
                // escape a critical point deterministically
                Cx::new(mp::pow2(-(p as i64) / 2, wp), mp::from_f64(0.0, wp))
            } else {
                fz.div(&dfz, wp)
            };
            let mut s = Cx::zero(wp);
            for j in 0..deg {
                if j == k {
                    continue;
                }
                let d = z[k].sub(&z[j], wp);
                if d.norm_sqr(wp) < tiny {
                    continue;
                }
                s = s.add(&Cx::one(wp).div(&d, wp), wp);
            }
            let denom = Cx::one(wp).sub(&newton.mul(&s, wp), wp);
            let w = if denom.is_zero() {
                newton.clone()
            } else {
                newton.div(&denom, wp)
            };
            z[k] = z[k].sub(&w, wp);
            let scale = mp::add(&mp::from_f64(1.0, wp), &z[k].abs(wp), wp);
            let rel = mp::div(&w.abs(wp), &scale, wp);
            if rel > worst {
                worst = rel;
            }
            if !z[k].is_finite() {
                return Err(Error::NoConvergence(MAX_SWEEPS));
            }
        }
        if worst < tol {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

fn eval_cx(coeffs: &[Cx], z: &Cx, p: usize) -> Cx {
    let mut acc = Cx::zero(p);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, p).add(c, p);
    }
    acc
}

/// Initial guesses for one square-free factor. When the factor is the
/// whole indicial polynomial at large coupling, the comparison roots are
/// already close; otherwise start from a circle at the Cauchy bound.
fn initial_guesses(family_hint: Option<(u32, &Rat)>, factor: &QPoly, p: usize) -> Vec<Cx> {
    let deg = factor.degree().unwrap();
    let mut jitter = Jitter::new();
    let use_beta = family_hint
        .is_some_and(|(n, c)| deg == 2 * n as usize && c.abs() >= Rat::one());
    let mut seeds = if use_beta {
        let (n, c) = family_hint.unwrap();
        beta_roots(n, c, p)
    } else {
        // circle at the Cauchy bound of the factor
        let lead = factor.leading().unwrap();
        let mut m = Rat::zero();
        for co in factor.coeffs() {
            let r = (co / lead).abs();
            if r > m {
                m = r;
            }
        }
        let radius = mp::from_rat(&(m + Rat::one()), p);
        let pi = mp::pi(p);
        (0..deg)
            .map(|k| {
                let theta = mp::div(
                    &mp::mul(&pi, &mp::from_f64(2.0 * k as f64 + 0.5, p), p),
                    &mp::from_u64(deg as u64, p),
                    p,
                );
                Cx::new(
                    mp::mul(&radius, &mp::cos(&theta, p), p),
                    mp::mul(&radius, &mp::sin(&theta, p), p),
                )
            })
            .collect()
    };
    // deterministic relative jitter of 1e-3 breaks symmetric stalemates
    for s in seeds.iter_mut() {
        let scale = mp::add(&s.abs(p), &mp::from_f64(1.0, p), p);
        let dr = mp::mul(&scale, &mp::from_f64(1e-3 * jitter.next_unit(), p), p);
        let di = mp::mul(&scale, &mp::from_f64(1e-3 * jitter.next_unit(), p), p);
        s.re = mp::add(&s.re, &dr, p);
        s.im = mp::add(&s.im, &di, p);
    }
    seeds.truncate(deg);
    seeds
}

/// Certified roots of an arbitrary rational polynomial, with exact
/// multiplicities from the square-free decomposition over Q (never from
/// cluster proximity). Real roots come from Sturm isolation and carry
/// `im = 0` exactly; nonreal roots come from Aberth iteration and are
/// entered as exactly conjugate pairs.
pub fn certified_roots(poly: &QPoly, precision: usize) -> Result<Vec<(Cx, usize)>> {
    let p = precision.max(53);
    let decomposition = poly.squarefree_decomposition()?;
    let mut out = roots_from_decomposition(&decomposition, p, None)?;
    out.sort_by(|a, b| a.0.cmp_re_im(&b.0));
    Ok(out)
}

fn roots_from_decomposition(
    decomposition: &[(QPoly, usize)],
    p: usize,
    family_hint: Option<(u32, &Rat)>,
) -> Result<Vec<(Cx, usize)>> {
    let mut out: Vec<(Cx, usize)> = Vec::new();
    for (factor, mult) in decomposition {
        let deg = factor.degree().unwrap();
        // exact real roots of the factor
        let mut real_ivs = isolate_real_roots(factor)?;
        for iv in real_ivs.iter_mut() {
            iv.refine_to(&pow2_rat(-(p as i64) - 8, &iv.midpoint()));
        }
        let n_complex = deg - real_ivs.len();
        debug_assert!(n_complex % 2 == 0);
        let mut placed: Vec<Cx> = real_ivs
            .iter()
            .map(|iv| {
                let v = iv.exact_root().unwrap_or_else(|| iv.midpoint());
                Cx::from_rat(&v, p)
            })
            .collect();
        if n_complex > 0 {
            let seeds = initial_guesses(family_hint, factor, p);
            let approx = aberth(factor, &seeds, p)?;
            // drop the approximations nearest to each certified real root,
            // keep the rest as the complex ones
            let mut taken = vec![false; approx.len()];
            for iv in &real_ivs {
                let target = Cx::from_rat(&iv.midpoint(), p);
                let mut best = usize::MAX;
                let mut best_d: Option<astro_float::BigFloat> = None;
                for (i, a) in approx.iter().enumerate() {
                    if taken[i] {
                        continue;
                    }
                    let d = a.sub(&target, p).norm_sqr(p);
                    if best_d.as_ref().is_none_or(|b| d < *b) {
                        best = i;
                        best_d = Some(d);
                    }
                }
                taken[best] = true;
            }
            let mut complex: Vec<Cx> = approx
                .into_iter()
                .zip(taken)
                .filter_map(|(a, t)| (!t).then_some(a))
                .collect();
            // conjugate symmetry: rebuild the lower half from the upper half
            let zero = mp::from_f64(0.0, p);
            let mut upper: Vec<Cx> = complex
                .iter()
                .filter(|z| z.im > zero)
                .cloned()
                .collect();
            if 2 * upper.len() != complex.len() {
                return Err(Error::Uncertifiable(p));
            }
            upper.sort_by(|a, b| a.cmp_re_im(b));
            complex = upper
                .iter()
                .flat_map(|z| [z.clone(), z.conj(p)])
                .collect();
            placed.extend(complex);
        }
        for z in placed {
            out.push((z, *mult));
        }
    }
    Ok(out)
}

/// Certified numeric inventory of all `2n` roots.
///
/// Multiplicities come from the exact square-free decomposition over Q,
/// never from cluster proximity. Real roots and on-line roots are pinned
/// by Sturm isolation and entered with exact `im = 0` (respectively exact
/// `re = -1/2`); the remaining roots carry Aberth values certified by
/// inclusion disks that stay clear of the line.
pub fn numeric_roots(n: u32, c: &Rat, precision: usize) -> Result<RootInventory> {
    if precision < 53 {
        return Err(Error::Input("precision must be at least 53 bits".into()));
    }
    let mut p = precision;
    let mut last_err = None;
    for _ in 0..=MAX_ESCALATIONS {
        match numeric_roots_at(n, c, precision, p) {
            Ok(inv) => return Ok(inv),
            Err(Error::Uncertifiable(_)) | Err(Error::NoConvergence(_)) => {
                last_err = Some(Error::Uncertifiable(p));
                p *= 2;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or(Error::Uncertifiable(p)))
}

fn numeric_roots_at(n: u32, c: &Rat, precision: usize, p: usize) -> Result<RootInventory> {
    let fam = build_indicial(n)?;
    let poly = fam.at(c);
    let half = Rat::new(Int::from(-1), Int::from(2));
    let on_line = on_line_structure(n, c)?;
    // refined y-values of on-line roots, with their multiplicity in D
    let mut line_roots: Vec<(Rat, Rat, usize)> = Vec::new(); // (y_lo, y_hi, mult)
    for (f, m) in &on_line.factors {
        for mut iv in isolate_real_roots(f)? {
            iv.refine_to(&pow2_rat(-(p as i64) - 8, &iv.midpoint()));
            line_roots.push((iv.lo().clone(), iv.hi().clone(), *m));
        }
    }

    let decomposition = poly.squarefree_decomposition()?;
    let mut out = roots_from_decomposition(&decomposition, p, Some((n, c)))?;
    // snap on-line roots to re = -1/2 exactly
    for (z, mult) in out.iter_mut() {
        if let Some((ylo, yhi, _)) = line_roots.iter().find(|(ylo, yhi, lm)| {
            *lm == *mult && {
                // does z look like -1/2 + iy with y in (ylo, yhi]?
                let y = mp::to_rat(&z.im);
                let re = mp::to_rat(&z.re);
                match (re, y) {
                    (Some(re), Some(y)) => {
                        (&re - &half).abs() < loose_radius(p)
                            && y > ylo - loose_width(ylo, yhi)
                            && y <= yhi + loose_width(ylo, yhi)
                    }
                    _ => false,
                }
            }
        }) {
            let ymid = (ylo + yhi) / Rat::from(Int::from(2));
            *z = Cx::new(mp::from_rat(&half, p), mp::from_rat(&ymid, p));
        }
    }

    // certify: every root is exactly on the line or its inclusion disk
    // avoids it
    let half_f = mp::from_rat(&half, p);
    let mut gt = 0usize;
    let mut on = 0usize;
    let mut lt = 0usize;
    for (z, mult) in &out {
        let re_exact = mp::to_rat(&z.re);
        if re_exact.as_ref() == Some(&half) {
            on += mult;
            continue;
        }
        // disk radius from the square-free factor the root belongs to
        let factor = decomposition
            .iter()
            .find(|(_, m)| m == mult)
            .map(|(f, _)| f)
            .unwrap();
        let fz = eval_cx(
            &factor.coeffs().iter().map(|q| Cx::from_rat(q, p)).collect::<Vec<_>>(),
            z,
            p,
        );
        let dfz = eval_cx(
            &factor
                .derivative()
                .coeffs()
                .iter()
                .map(|q| Cx::from_rat(q, p))
                .collect::<Vec<_>>(),
            z,
            p,
        );
        let deg = factor.degree().unwrap();
        let radius = if fz.is_zero() {
            mp::from_f64(0.0, p)
        } else if dfz.is_zero() {
            return Err(Error::Uncertifiable(p));
        } else {
            mp::mul(
                &mp::from_u64(deg as u64, p),
                &fz.div(&dfz, p).abs(p),
                p,
            )
        };
        let dist = mp::sub(&z.re, &half_f, p).abs();
        if dist <= radius {
            return Err(Error::Uncertifiable(p));
        }
        if z.re > half_f {
            gt += mult;
        } else {
            lt += mult;
        }
    }
    if on != on_line.total {
        return Err(Error::Uncertifiable(p));
    }
    if gt + on + lt != 2 * n as usize {
        return Err(Error::Invariant(format!(
            "count triple ({gt},{on},{lt}) does not sum to {}",
            2 * n
        )));
    }
    let mut roots = out;
    roots.sort_by(|a, b| a.0.cmp_re_im(&b.0));
    Ok(RootInventory {
        n,
        c: c.clone(),
        precision,
        roots,
        counts: (gt, on, lt),
        method: if on > 0 {
            CountMethod::Hybrid
        } else {
            CountMethod::CertifiedNumeric
        },
    })
}

fn pow2_rat(k: i64, scale_hint: &Rat) -> Rat {
    let base = Rat::new(Int::one(), Int::one() << (-k).max(0) as u64);
    let s = scale_hint.abs();
    if s > Rat::one() {
        base * s
    } else {
        base
    }
}

fn loose_radius(p: usize) -> Rat {
    Rat::new(Int::one(), Int::one() << (p / 2).min(512) as u64)
}

fn loose_width(lo: &Rat, hi: &Rat) -> Rat {
    (hi - lo).abs() + Rat::new(Int::one(), Int::from(1024))
}

/// Exact triple (gt, on, lt): minor signs when nondegenerate, otherwise
/// the exact on-line count plus the certified numeric split.
pub fn count_right(n: u32, c: &Rat) -> Result<(usize, usize, usize)> {
    match count_halfplanes_exact(n, c)? {
        HalfPlaneCount::Exact { gt, on, lt } => Ok((gt, on, lt)),
        HalfPlaneCount::Degenerate { .. } => {
            let inv = numeric_roots(n, c, DEFAULT_PRECISION)?;
            Ok(inv.counts())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::qpoly_from_strs;
    use crate::rational::parse_rat;

    fn rat(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    #[test]
    fn line_pair_n1_at_threshold() {
        // Q(w) = w^2 - 2w at c = 3/4: A = -y^2, B = -2y, common root y = 0
        let lp = line_pair(1, &rat("3/4")).unwrap();
        assert_eq!(lp.a, qpoly_from_strs(&["0", "0", "-1"]).unwrap());
        assert_eq!(lp.b, qpoly_from_strs(&["0", "-2"]).unwrap());
        assert_eq!(count_on_line(1, &rat("3/4")).unwrap(), 1);
    }

    #[test]
    fn no_line_roots_at_n2_c0() {
        let lp = line_pair(2, &Rat::zero()).unwrap();
        let g = lp.a.gcd(&lp.b).unwrap();
        assert_eq!(g.degree(), Some(0));
        assert_eq!(count_on_line(2, &Rat::zero()).unwrap(), 0);
    }

    #[test]
    fn line_roots_at_n2_c45() {
        // common roots y = +- sqrt(11)/2
        let c = rat("45");
        let lp = line_pair(2, &c).unwrap();
        let g = lp.a.gcd(&lp.b).unwrap();
        // monic even quadratic y^2 - 11/4
        assert_eq!(g, qpoly_from_strs(&["-11/4", "0", "1"]).unwrap());
        assert_eq!(count_on_line(2, &c).unwrap(), 2);
    }

    #[test]
    fn line_root_multiplicity_at_negative_q0() {
        assert_eq!(count_on_line(2, &rat("-105/16")).unwrap(), 1);
        assert_eq!(count_on_line(3, &rat("10395/64")).unwrap(), 1);
    }

    #[test]
    fn small_coupling_has_no_line_roots() {
        for n in 1..=4u32 {
            let q0 = crate::indicial::q0_closed_form(n);
            let c = &q0 / Rat::from(Int::from(2));
            assert_eq!(count_on_line(n, &c).unwrap(), 0, "n={n} +");
            assert_eq!(count_on_line(n, &(-c)).unwrap(), 0, "n={n} -");
        }
    }

    #[test]
    fn exact_route_small_cases() {
        assert_eq!(
            count_halfplanes_exact(1, &Rat::zero()).unwrap(),
            HalfPlaneCount::Exact { gt: 2, on: 0, lt: 0 }
        );
        assert_eq!(
            count_halfplanes_exact(2, &Rat::zero()).unwrap(),
            HalfPlaneCount::Exact { gt: 4, on: 0, lt: 0 }
        );
        assert_eq!(
            count_halfplanes_exact(2, &rat("100")).unwrap(),
            HalfPlaneCount::Exact { gt: 2, on: 0, lt: 2 }
        );
    }

    #[test]
    fn numeric_route_integer_roots() {
        let inv = numeric_roots(3, &Rat::zero(), 128).unwrap();
        assert_eq!(inv.counts(), (6, 0, 0));
        for (k, (z, m)) in inv.roots().iter().enumerate() {
            assert_eq!(*m, 1);
            let expect = Rat::from(Int::from(k as i64));
            let d = mp::sub(&z.re, &mp::from_rat(&expect, 128), 128).abs();
            assert!(d < mp::pow2(-100, 128), "root {k}");
            assert!(z.im.is_zero());
        }
    }

    #[test]
    fn numeric_route_double_roots_at_c1_n2() {
        // D_4(z;1) = (z^2-3z+1)^2: roots (3±sqrt 5)/2, multiplicity 2
        let inv = numeric_roots(2, &Rat::one(), 192).unwrap();
        assert_eq!(inv.roots().len(), 2);
        assert!(inv.roots().iter().all(|(_, m)| *m == 2));
        assert_eq!(inv.counts(), (4, 0, 0));
        let lo = &inv.roots()[0].0;
        let s5 = mp::sqrt(&mp::from_u64(5, 192), 192);
        let expect = mp::div(
            &mp::sub(&mp::from_u64(3, 192), &s5, 192),
            &mp::from_u64(2, 192),
            192,
        );
        assert!(mp::sub(&lo.re, &expect, 192).abs() < mp::pow2(-150, 192));
    }

    #[test]
    fn numeric_route_threshold_snaps_to_line() {
        let inv = numeric_roots(1, &rat("3/4"), 128).unwrap();
        // roots -1/2 and 3/2
        assert_eq!(inv.counts(), (1, 1, 0));
        assert_eq!(inv.method(), CountMethod::Hybrid);
        let on_root = &inv.roots()[0].0;
        assert_eq!(mp::to_rat(&on_root.re).unwrap(), rat("-1/2"));
    }

    #[test]
    fn count_right_examples() {
        assert_eq!(count_right(2, &rat("45")).unwrap(), (2, 2, 0));
        assert_eq!(count_right(3, &rat("200")).unwrap(), (5, 0, 1));
        assert_eq!(count_right(1, &rat("-1/4")).unwrap(), (2, 0, 0));
    }

    #[test]
    fn conjugate_and_trace_invariants() {
        let c = rat("7/3");
        for n in [2u32, 3] {
            let inv = numeric_roots(n, &c, 192).unwrap();
            let p = 192;
            // trace: sum of roots = n(2n-1)
            let mut s = Cx::zero(p);
            for (z, m) in inv.roots() {
                for _ in 0..*m {
                    s = s.add(z, p);
                }
            }
            let expect = mp::from_u64((n * (2 * n - 1)) as u64, p);
            assert!(mp::sub(&s.re, &expect, p).abs() < mp::pow2(-120, p));
            assert!(s.im.abs() < mp::pow2(-120, p));
            // conjugate closure
            for (z, _) in inv.roots() {
                if !z.im.is_zero() {
                    let conj = z.conj(p);
                    assert!(inv
                        .roots()
                        .iter()
                        .any(|(w, _)| w.sub(&conj, p).abs(p) < mp::pow2(-120, p)));
                }
            }
        }
    }
}
