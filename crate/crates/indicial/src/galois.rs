//! Mod-p factorization evidence for the threshold polynomials.
//!
//! `h_{n-1}` normalizes to the monic `g_{n-1} = (-1)^(floor(n/2)) (2n^2)^(-n) h_{n-1}`;
//! clearing denominators (the least common denominator `m` of the
//! coefficients) gives the monic integer polynomial `m^(deg) g(X/m)`.
//! Reducing mod p and reading off the distinct-degree factorization yields
//! a degree multiset; for primes where the reduction is square-free that
//! multiset is a cycle type of the Galois group (Dedekind), and finding an
//! irreducible reduction, an (n-2)-cycle pattern and a transposition
//! pattern pins the group down to the full symmetric group.
//!
//! Only degree multisets are ever computed: equal-degree splitting would
//! add nothing, since the cycle-type argument consumes only the shape.

use crate::hurwitz::build_hurwitz;
use crate::rational::format_rat;
use crate::{Error, Int, QPoly, Rat, Result};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

/// Normalize `h` (degree n-1) to the monic `g_{n-1}`.
pub fn g_normalize(h: &QPoly, n: u32) -> Result<QPoly> {
    if h.degree() != Some(n as usize - 1) {
        return Err(Error::Input(format!(
            "expected degree {}, got {:?}",
            n as usize - 1,
            h.degree()
        )));
    }
    let base = Rat::from(Int::from(2 * (n as i64) * (n as i64)));
    let mut scale = Rat::one();
    for _ in 0..n {
        scale = scale * &base;
    }
    let factor = if (n / 2) % 2 == 1 { -scale } else { scale };
    let g = h.scale(&(Rat::one() / factor));
    match g.leading() {
        Some(l) if l.is_one() => Ok(g),
        _ => Err(Error::Invariant(
            "normalized threshold polynomial is not monic".into(),
        )),
    }
}

/// Monic integer polynomial `m^(deg) g(X/m)` together with the scale `m`.
#[derive(Clone, Debug)]
pub struct IntegerMonicPoly {
    coeffs: Vec<Int>,
    scale: Int,
}

impl IntegerMonicPoly {
    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scale(&self) -> &Int {
        &self.scale
    }
}

/// Clear denominators of a monic rational polynomial: `m` is the least
/// common denominator of the coefficients, and the result is
/// `m^(deg) g(X/m)`, monic with integer coefficients.
pub fn clear_denominators(g: &QPoly) -> Result<IntegerMonicPoly> {
    let deg = g.degree().ok_or(Error::ZeroPolynomial)?;
    if !g.leading().unwrap().is_one() {
        return Err(Error::Input("polynomial must be monic".into()));
    }
    let mut m = Int::one();
    for c in g.coeffs() {
        m = m.lcm(c.denom());
    }
    // coefficient of X^j picks up m^(deg-j)
    let mut coeffs = Vec::with_capacity(deg + 1);
    for (j, c) in g.coeffs().iter().enumerate() {
        let mut p = Int::one();
        for _ in 0..(deg - j) {
            p *= &m;
        }
        let scaled = c * Rat::from(p);
        if !scaled.denom().is_one() {
            return Err(Error::Invariant(
                "denominator clearing left a fractional coefficient".into(),
            ));
        }
        coeffs.push(scaled.numer().clone());
    }
    Ok(IntegerMonicPoly { coeffs, scale: m })
}

/// `g_{n-1}` for order `n`, straight from the Hurwitz family.
pub fn g_poly(n: u32) -> Result<QPoly> {
    if n < 2 {
        return Err(Error::Input("the normalized polynomial needs n >= 2".into()));
    }
    let fam = build_hurwitz(n)?;
    g_normalize(fam.h_poly(), n)
}

/// Reduction of an integer polynomial mod a machine-word prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    p: u64,
    // ascending, no trailing zeros
    c: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn bigint_mod(v: &Int, p: u64) -> u64 {
    let m = v.mod_floor(&Int::from(p));
    m.to_u64().expect("reduced residue fits")
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn reduce(f: &IntegerMonicPoly, p: u64) -> Self {
        ModPoly::new(p, f.coeffs().iter().map(|v| bigint_mod(v, p)).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn x() -> Vec<u64> {
        vec![0, 1]
    }

    pub fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&l) if l == 1 => self.clone(),
            Some(&l) => {
                let inv = invmod(l, self.p);
                ModPoly::new(
                    self.p,
                    self.c.iter().map(|&x| mulmod(x, inv, self.p)).collect(),
                )
            }
        }
    }

    pub fn derivative(&self) -> Self {
        if self.c.len() <= 1 {
            return ModPoly::new(self.p, vec![]);
        }
        let c = self.c[1..]
            .iter()
            .enumerate()
            .map(|(k, &x)| mulmod(x, (k as u64 + 1) % self.p, self.p))
            .collect();
        ModPoly::new(self.p, c)
    }

    pub fn rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let mut r = self.c.clone();
        if r.len() < dd + 1 {
            return self.clone();
        }
        let inv = invmod(*d.c.last().unwrap(), self.p);
        for i in (dd..r.len()).rev() {
            let top = r[i];
            if top == 0 {
                continue;
            }
            let f = mulmod(top, inv, self.p);
            for (j, &dc) in d.c.iter().enumerate() {
                let idx = i - dd + j;
                let sub = mulmod(f, dc, self.p);
                r[idx] = (r[idx] + self.p - sub) % self.p;
            }
        }
        r.truncate(dd);
        ModPoly::new(self.p, r)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::new(self.p, out)
    }

    pub fn mulrem(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let len = self.c.len().max(o.c.len());
        let mut out = vec![0u64; len];
        for i in 0..len {
            let a = self.c.get(i).copied().unwrap_or(0);
            let b = o.c.get(i).copied().unwrap_or(0);
            out[i] = (a + self.p - b) % self.p;
        }
        ModPoly::new(self.p, out)
    }

    pub fn exact_div(&self, d: &Self) -> Self {
        // exact by construction in the DDF loop
        let dd = d.degree().expect("nonzero divisor");
        let mut r = self.c.clone();
        let inv = invmod(*d.c.last().unwrap(), self.p);
        let mut q = vec![0u64; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let top = r[i];
            if top == 0 {
                continue;
            }
            let f = mulmod(top, inv, self.p);
            q[i - dd] = f;
            for (j, &dc) in d.c.iter().enumerate() {
                let idx = i - dd + j;
                let sub = mulmod(f, dc, self.p);
                r[idx] = (r[idx] + self.p - sub) % self.p;
            }
        }
        ModPoly::new(self.p, q)
    }

    /// `x^(p^k)` mod self via repeated Frobenius powers.
    fn frobenius(&self, base: &Self) -> Self {
        // base^p mod self by square-and-multiply on the exponent p
        let mut acc = ModPoly::new(self.p, vec![1]);
        let mut sq = base.clone();
        let mut e = self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulrem(&sq, self);
            }
            sq = sq.mulrem(&sq, self);
            e >>= 1;
        }
        acc
    }
}

/// Result of reducing mod p and factoring by distinct degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FactorShape {
    /// gcd(f, f') is nonconstant mod p: the prime is unusable for
    /// cycle-type evidence and searches skip it.
    NotSquareFree,
    /// Sorted degree multiset of the irreducible factors.
    Degrees(Vec<usize>),
}

/// Distinct-degree factorization shape of `f` mod `p`.
pub fn factor_degrees_mod_p(f: &IntegerMonicPoly, p: u64) -> Result<FactorShape> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let fp = ModPoly::reduce(f, p);
    if fp.degree() != Some(f.degree()) {
        // monic input, so the degree always survives reduction
        return Err(Error::Invariant("degree dropped under reduction".into()));
    }
    let d = fp.gcd(&fp.derivative());
    if d.degree().unwrap_or(0) > 0 {
        return Ok(FactorShape::NotSquareFree);
    }
    let mut degrees = Vec::new();
    let mut rest = fp.monic();
    let x = ModPoly::new(p, ModPoly::x());
    let mut h = x.rem(&rest);
    let mut dstep = 0usize;
    while rest.degree().unwrap_or(0) > 0 {
        dstep += 1;
        if 2 * dstep > rest.degree().unwrap() {
            // remainder is a single irreducible factor
            degrees.push(rest.degree().unwrap());
            break;
        }
        h = rest.frobenius(&h);
        let g = rest.gcd(&h.sub(&x));
        let gd = g.degree().unwrap_or(0);
        if gd > 0 {
            debug_assert_eq!(gd % dstep, 0);
            for _ in 0..gd / dstep {
                degrees.push(dstep);
            }
            rest = rest.exact_div(&g).monic();
            h = h.rem(&rest);
        }
    }
    degrees.sort();
    Ok(FactorShape::Degrees(degrees))
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in `[lo, hi)` by a simple segmented sieve.
fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi <= lo {
        return Vec::new();
    }
    let mut base = Vec::new();
    let root = (hi as f64).sqrt() as u64 + 2;
    let mut sieve = vec![true; (root + 1) as usize];
    for i in 2..=root {
        if sieve[i as usize] {
            base.push(i);
            let mut j = i * i;
            while j <= root {
                sieve[j as usize] = false;
                j += i;
            }
        }
    }
    let len = (hi - lo) as usize;
    let mut seg = vec![true; len];
    for &p in &base {
        let start = lo.div_ceil(p).max(2) * p;
        let mut j = start;
        while j < hi {
            seg[(j - lo) as usize] = false;
            j += p;
        }
    }
    (0..len)
        .filter(|&i| seg[i] && lo + i as u64 >= 2)
        .map(|i| lo + i as u64)
        .collect()
}

/// Cycle-type targets used as Galois-group evidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CycleTarget {
    /// Irreducible reduction: an (n-1)-cycle on the n-1 roots.
    FullCycle,
    /// One factor of degree n-2 and one linear factor.
    NMinus2Cycle,
    /// Exactly one quadratic factor, all other factors linear.
    Transposition,
}

impl CycleTarget {
    /// The degree multiset matching this target for a polynomial of the
    /// given degree.
    pub fn pattern(&self, degree: usize) -> Vec<usize> {
        match self {
            CycleTarget::FullCycle => vec![degree],
            CycleTarget::NMinus2Cycle => {
                let mut v = vec![1, degree - 1];
                v.sort();
                v
            }
            CycleTarget::Transposition => {
                let mut v = vec![1usize; degree.saturating_sub(2)];
                v.push(2);
                v.sort();
                v
            }
        }
    }
}

/// A prime found to realize a target cycle type, with the witnessing
/// degree multiset.
#[derive(Clone, Debug, Serialize)]
pub struct CycleTypeEvidence {
    pub target: CycleTarget,
    pub prime: u64,
    pub degrees: Vec<usize>,
}

const SEARCH_BLOCK: u64 = 1 << 14;

/// Smallest prime `<= p_max` whose square-free reduction matches the
/// target pattern; `None` when no prime below the bound works. The block
/// search is parallel inside each block and takes the global minimum, so
/// the answer is schedule-independent.
pub fn find_cycle_type_prime(
    f: &IntegerMonicPoly,
    target: CycleTarget,
    p_max: u64,
) -> Result<Option<CycleTypeEvidence>> {
    let pattern = target.pattern(f.degree());
    let mut lo = 2u64;
    while lo <= p_max {
        let hi = (lo + SEARCH_BLOCK).min(p_max + 1);
        let primes = primes_in(lo, hi);
        let hit = primes
            .par_iter()
            .filter_map(|&p| match factor_degrees_mod_p(f, p) {
                Ok(FactorShape::Degrees(d)) if d == pattern => Some((p, d)),
                _ => None,
            })
            .min_by_key(|(p, _)| *p);
        if let Some((prime, degrees)) = hit {
            return Ok(Some(CycleTypeEvidence {
                target,
                prime,
                degrees,
            }));
        }
        lo = hi;
    }
    Ok(None)
}

/// Smallest prime with irreducible reduction: a sufficient witness for
/// irreducibility over Q (Gauss).
pub fn irreducibility_witness(f: &IntegerMonicPoly, p_max: u64) -> Result<Option<u64>> {
    Ok(find_cycle_type_prime(f, CycleTarget::FullCycle, p_max)?.map(|e| e.prime))
}

/// One row of the smallest-prime table.
#[derive(Clone, Debug, Serialize)]
pub struct CycleTableRow {
    pub n: u32,
    pub full_cycle: Option<u64>,
    pub n_minus_2_cycle: Option<u64>,
    pub transposition: Option<u64>,
}

/// Regenerate the smallest-prime table for `n` in `[n_min, n_max]`.
pub fn cycle_table(n_min: u32, n_max: u32, p_max: u64) -> Result<Vec<CycleTableRow>> {
    (n_min..=n_max)
        .map(|n| {
            let g = g_poly(n)?;
            let f = clear_denominators(&g)?;
            Ok(CycleTableRow {
                n,
                full_cycle: find_cycle_type_prime(&f, CycleTarget::FullCycle, p_max)?
                    .map(|e| e.prime),
                n_minus_2_cycle: find_cycle_type_prime(&f, CycleTarget::NMinus2Cycle, p_max)?
                    .map(|e| e.prime),
                transposition: find_cycle_type_prime(&f, CycleTarget::Transposition, p_max)?
                    .map(|e| e.prime),
            })
        })
        .collect()
}

/// JSON evidence for one order: scale, witnesses and their shapes.
pub fn evidence_json(n: u32, p_max: u64) -> Result<serde_json::Value> {
    let g = g_poly(n)?;
    let f = clear_denominators(&g)?;
    let mut targets = serde_json::Map::new();
    for t in [
        CycleTarget::FullCycle,
        CycleTarget::NMinus2Cycle,
        CycleTarget::Transposition,
    ] {
        let key = match t {
            CycleTarget::FullCycle => "full-cycle",
            CycleTarget::NMinus2Cycle => "n-minus-2-cycle",
            CycleTarget::Transposition => "transposition",
        };
        let v = match find_cycle_type_prime(&f, t, p_max)? {
            Some(e) => serde_json::json!({ "prime": e.prime, "degrees": e.degrees }),
            None => serde_json::json!({ "prime": null, "searched_to": p_max }),
        };
        targets.insert(key.to_string(), v);
    }
    Ok(serde_json::json!({
        "n": n,
        "scale": f.scale().to_string(),
        "g_coefficients": g.coeffs().iter().map(format_rat).collect::<Vec<_>>(),
        "targets": targets,
    }))
}
