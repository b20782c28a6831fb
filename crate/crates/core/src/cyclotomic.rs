//! Exact arithmetic in `Z[ζ_N]`, stored as residues modulo the cyclotomic
//! polynomial `Φ_N` in the power basis `1, ζ, …, ζ^{φ(N)-1}`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug)]
pub(crate) struct RingData {
    pub phi: usize,
    /// `Φ_N`, low degree first, monic of degree `phi`.
    pub poly: Vec<i64>,
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    assert!(lead == 1 || lead == -1);
    let mut q = vec![0i64; num.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd] * lead;
        q[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact division");
    q
}

/// Coefficients of `Φ_n`, low degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n >= 1);
    let mut p = vec![0i64; n + 1];
    p[0] = -1;
    p[n] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_divide_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

pub(crate) fn ring(level: usize) -> Arc<RingData> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<RingData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("ring cache poisoned");
    guard
        .entry(level)
        .or_insert_with(|| {
            let poly = cyclotomic_polynomial(level);
            Arc::new(RingData {
                phi: poly.len() - 1,
                poly,
            })
        })
        .clone()
}

/// Euler's totient, as the degree of `Φ_n`.
pub fn totient(n: usize) -> usize {
    ring(n).phi
}

/// Reduces a polynomial in `ζ` (any length) modulo `Φ_N`, in place.
pub(crate) fn reduce_i128(level: usize, v: &mut [i128]) -> Option<()> {
    let r = ring(level);
    for k in (r.phi..v.len()).rev() {
        let c = v[k];
        if c == 0 {
            continue;
        }
        let base = k - r.phi;
        for (j, &pj) in r.poly[..r.phi].iter().enumerate() {
            v[base + j] = v[base + j].checked_sub(c.checked_mul(pj as i128)?)?;
        }
        v[k] = 0;
    }
    Some(())
}

pub(crate) fn reduce_big(level: usize, v: &mut [BigInt]) {
    let r = ring(level);
    for k in (r.phi..v.len()).rev() {
        if v[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[k]);
        let base = k - r.phi;
        for (j, &pj) in r.poly[..r.phi].iter().enumerate() {
            if pj != 0 {
                v[base + j] -= &c * pj;
            }
        }
    }
}

/// An element of `Z[ζ_N]` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    level: usize,
    coeffs: Vec<BigInt>,
}

impl Cyclotomic {
    pub fn zero(level: usize) -> Self {
        Self {
            level,
            coeffs: vec![BigInt::zero(); totient(level)],
        }
    }

    pub fn one(level: usize) -> Self {
        Self::from_int(level, 1)
    }

    pub fn from_int(level: usize, n: i64) -> Self {
        let mut z = Self::zero(level);
        z.coeffs[0] = BigInt::from(n);
        z
    }

    /// `ζ_N^k` for any integer `k`.
    pub fn zeta_pow(level: usize, k: i64) -> Self {
        let mut v = vec![0i128; level];
        v[k.rem_euclid(level as i64) as usize] = 1;
        Self::from_group_ring_i128(level, &v).expect("unit vector reduces")
    }

    /// From a length-`N` vector of coefficients of `ζ^0 … ζ^{N-1}`.
    pub fn from_group_ring(level: usize, v: &[BigInt]) -> Self {
        assert_eq!(v.len(), level, "group ring vector length");
        let mut w = v.to_vec();
        reduce_big(level, &mut w);
        w.truncate(totient(level));
        Self { level, coeffs: w }
    }

    /// Like [`from_group_ring`](Self::from_group_ring) for machine integers;
    /// `None` if the reduction overflows.
    pub fn from_group_ring_i128(level: usize, v: &[i128]) -> Option<Self> {
        assert_eq!(v.len(), level, "group ring vector length");
        let mut w = v.to_vec();
        reduce_i128(level, &mut w)?;
        let phi = totient(level);
        Some(Self {
            level,
            coeffs: w[..phi].iter().map(|&c| BigInt::from(c)).collect(),
        })
    }

    /// From power-basis coefficients (length `φ(N)`).
    pub fn from_coefficients(level: usize, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), totient(level), "coefficient count");
        Self { level, coeffs }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as decimal strings, for reports.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_level(&self, other: &Self) {
        assert_eq!(self.level, other.level, "cyclotomic levels differ");
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.level;
        let mut v = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[(n - k) % n] = c.clone();
        }
        Self::from_group_ring(n, &v)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// `x · conj(x)`.
    pub fn abs_squared(&self) -> Self {
        self * &self.conj()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.level);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplication by `ζ^k`.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        let n = self.level as i64;
        let mut v = vec![BigInt::zero(); self.level];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[(j as i64 + k).rem_euclid(n) as usize] += c;
        }
        Self::from_group_ring(self.level, &v)
    }

    fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// Complex embedding `ζ ↦ e^{2πi/N}`.
    pub fn to_complex(&self) -> (f64, f64) {
        if self.max_bits() <= 48 {
            let n = self.level as f64;
            let (mut re, mut im) = (0.0, 0.0);
            for (k, c) in self.coeffs.iter().enumerate() {
                let c = c.to_f64().expect("small coefficient");
                let t = 2.0 * std::f64::consts::PI * k as f64 / n;
                re += c * t.cos();
                im += c * t.sin();
            }
            (re, im)
        } else {
            fixed::embed(self.level, &self.coeffs, self.max_bits())
        }
    }

    /// `|x|` under the complex embedding.
    pub fn modulus(&self) -> f64 {
        let (re, im) = self.to_complex();
        re.hypot(im)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[{}]{:?}", self.level, self.coefficient_strings())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.check_level(rhs);
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.check_level(rhs);
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.check_level(rhs);
        let n = self.level;
        let mut v = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[(i + j) % n] += a * b;
                }
            }
        }
        Cyclotomic::from_group_ring(n, &v)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Fixed-point evaluation for coefficients too large for `f64` summation.
mod fixed {
    use num_bigint::BigInt;
    use num_traits::{ToPrimitive, Zero};

    fn atan_inv(x: u64, prec: u64) -> BigInt {
        // atan(1/x) * 2^prec
        let one = unit(prec);
        let x2 = BigInt::from(x) * x;
        let mut term = one / x;
        let mut sum = BigInt::zero();
        let mut k = 0u64;
        while !term.is_zero() {
            let t = &term / (2 * k + 1);
            if k % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
            term /= &x2;
            k += 1;
        }
        sum
    }

    fn unit(bits: u64) -> BigInt {
        BigInt::from(1) << bits
    }

    fn pi(prec: u64) -> BigInt {
        let guard = 16;
        let p = prec + guard;
        let v = atan_inv(5, p) * 16 - atan_inv(239, p) * 4;
        v >> guard
    }

    /// cos and sin of `theta` (fixed point, |theta| small) by Taylor series.
    fn cos_sin(theta: &BigInt, prec: u64) -> (BigInt, BigInt) {
        let one = unit(prec);
        let mut cos = one.clone();
        let mut sin = theta.clone();
        let mut term = theta.clone();
        let mut k = 1u64;
        loop {
            // term_k = theta^k / k!
            term = ((&term * theta) >> prec) / (k + 1);
            k += 1;
            if term.is_zero() {
                break;
            }
            match k % 4 {
                0 => cos += &term,
                1 => sin += &term,
                2 => cos -= &term,
                _ => sin -= &term,
            }
        }
        (cos, sin)
    }

    pub fn embed(level: usize, coeffs: &[BigInt], bits: u64) -> (f64, f64) {
        let prec = bits + 96;
        let theta = (pi(prec) * 2) / level as u64;
        let (c, s) = cos_sin(&theta, prec);
        // Horner in ζ from the top coefficient down.
        let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
        for coeff in coeffs.iter().rev() {
            let nre = (&re * &c - &im * &s) >> prec;
            let nim = (&re * &s + &im * &c) >> prec;
            re = nre + (coeff << prec);
            im = nim;
        }
        let scale = |v: BigInt| -> f64 {
            let shift = prec.saturating_sub(60);
            let v = v >> shift;
            v.to_f64().unwrap() / 2f64.powi((prec - shift) as i32)
        };
        (scale(re), scale(im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(20), vec![1, 0, -1, 0, 1, 0, -1, 0, 1]);
        assert_eq!(totient(28), 12);
        assert_eq!(totient(32), 16);
        assert_eq!(totient(36), 12);
        assert_eq!(totient(40), 16);
    }

    #[test]
    fn zeta_has_order_n() {
        for n in [20usize, 28, 32, 36, 40] {
            assert_eq!(Cyclotomic::zeta_pow(n, n as i64), Cyclotomic::one(n));
            assert_ne!(Cyclotomic::zeta_pow(n, n as i64 / 2), Cyclotomic::one(n));
            assert_eq!(
                Cyclotomic::zeta_pow(n, n as i64 / 2),
                Cyclotomic::from_int(n, -1)
            );
            let z = Cyclotomic::zeta_pow(n, 1);
            assert_eq!(z.pow(n as u32), Cyclotomic::one(n));
            assert_eq!(&z * &z.conj(), Cyclotomic::one(n));
        }
    }

    #[test]
    fn embedding_matches_exponential() {
        let n = 28;
        for k in 0..n {
            let (re, im) = Cyclotomic::zeta_pow(n, k as i64).to_complex();
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            assert!((re - t.cos()).abs() < 1e-12 && (im - t.sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn high_precision_embedding_agrees() {
        // (1 + ζ)^k has large coefficients but modest modulus at the root.
        let n = 20;
        let x = &Cyclotomic::one(n) + &Cyclotomic::zeta_pow(n, 9);
        let big = x.pow(90);
        assert!(big.max_bits() > 48);
        let (re, im) = big.to_complex();
        let t = 2.0 * std::f64::consts::PI * 9.0 / 20.0;
        let (bre, bim) = (1.0 + t.cos(), t.sin());
        let m = bre.hypot(bim).powi(90);
        let a = bim.atan2(bre) * 90.0;
        assert!((re - m * a.cos()).abs() < 1e-9 * m.max(1.0));
        assert!((im - m * a.sin()).abs() < 1e-9 * m.max(1.0));
    }

    #[test]
    fn ring_laws_on_samples() {
        let n = 20;
        let a = &Cyclotomic::zeta_pow(n, 3) + &Cyclotomic::from_int(n, 2);
        let b = &Cyclotomic::zeta_pow(n, 7) - &Cyclotomic::zeta_pow(n, 11);
        let c = Cyclotomic::zeta_pow(n, 13);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        assert!(a.abs_squared().is_real());
        assert!((&a - &a).is_zero());
    }
}
