//! Exact arithmetic in 2-power cyclotomic fields Q(ζ), ζ a primitive 2^m-th root of unity.
//!
//! An element is stored as a coefficient vector over the power basis
//! `ζ^0, …, ζ^(N-1)` with `N = 2^(m-1)`, reduced modulo `ζ^N = -1`. Values are
//! always kept at the smallest modulus that contains them, so two numbers are
//! equal exactly when their stored forms are equal and the derived `Eq`/`Hash`
//! are field equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i64>;

/// Largest modulus accepted anywhere in the crate (ζ of order 2^20).
pub const MAX_MODULUS: u32 = 20;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNumber {
    m: u32,
    coeffs: Vec<Rational>,
}

fn basis_len(m: u32) -> usize {
    1usize << (m - 1)
}

impl CycNumber {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNumber {
            m: 1,
            coeffs: vec![r],
        }
    }

    /// `ζ_{2^m}^k` for any integer `k`.
    pub fn root_of_unity(k: i64, m: u32) -> Self {
        assert!((1..=MAX_MODULUS).contains(&m), "modulus {m} out of range");
        let order = 1i64 << m;
        let n = basis_len(m) as i64;
        let k = k.rem_euclid(order);
        let mut coeffs = vec![Rational::zero(); n as usize];
        if k < n {
            coeffs[k as usize] = Rational::one();
        } else {
            coeffs[(k - n) as usize] = -Rational::one();
        }
        Self::normalized(m, coeffs)
    }

    /// The imaginary unit `i = ζ_4`.
    pub fn i() -> Self {
        Self::root_of_unity(1, 2)
    }

    /// `√2 = ζ_8 + ζ_8^{-1}`.
    pub fn sqrt2() -> Self {
        &Self::root_of_unity(1, 3) + &Self::root_of_unity(-1, 3)
    }

    /// Build from a coefficient vector at modulus `m`; the result is reduced
    /// to its minimal modulus.
    pub fn from_coeffs(m: u32, coeffs: Vec<Rational>) -> Self {
        assert!((1..=MAX_MODULUS).contains(&m), "modulus {m} out of range");
        assert_eq!(
            coeffs.len(),
            basis_len(m),
            "coefficient vector has wrong length"
        );
        Self::normalized(m, coeffs)
    }

    fn normalized(mut m: u32, mut coeffs: Vec<Rational>) -> Self {
        while m > 1 && coeffs.iter().skip(1).step_by(2).all(Zero::is_zero) {
            coeffs = coeffs.into_iter().step_by(2).collect();
            m -= 1;
        }
        CycNumber { m, coeffs }
    }

    /// Smallest `m` such that this number lies in Q(ζ_{2^m}).
    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients over the power basis of Q(ζ_{2^m}), `m ≥ self.modulus()`.
    pub fn lift(&self, m: u32) -> Vec<Rational> {
        assert!(m >= self.m, "cannot lift to a smaller modulus");
        let stride = 1usize << (m - self.m);
        let mut out = vec![Rational::zero(); basis_len(m)];
        for (j, c) in self.coeffs.iter().enumerate() {
            out[j * stride] = *c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.m == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.m == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.m == 1).then(|| self.coeffs[0])
    }

    /// If this number is `±ζ_{2^m}^j`, return the exponent of the root of
    /// unity as a fraction `k / 2^m` of a full turn (`k` in `[0, 2^m)`).
    pub fn as_root_of_unity(&self) -> Option<(u64, u32)> {
        let mut nonzero = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (j, c) = nonzero.next()?;
        if nonzero.next().is_some() {
            return None;
        }
        let n = basis_len(self.m) as u64;
        if c.is_one() {
            Some((j as u64, self.m))
        } else if *c == -Rational::one() {
            Some((j as u64 + n, self.m))
        } else {
            None
        }
    }

    pub fn scale(&self, r: Rational) -> Self {
        Self::normalized(self.m, self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        out[0] = self.coeffs[0];
        for k in 1..n {
            // ζ^{-k} = -ζ^{N-k}
            out[n - k] = -self.coeffs[k];
        }
        Self::normalized(self.m, out)
    }

    /// The Galois automorphism ζ ↦ -ζ, which fixes Q(ζ²).
    fn galois_negate(&self) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { *c })
            .collect();
        Self::normalized(self.m, out)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.m == 1 {
            return Some(Self::from_rational(self.coeffs[0].recip()));
        }
        // x · σ(x) lies in the subfield fixed by σ, which has smaller modulus.
        let s = self.galois_negate();
        let norm = self * &s;
        debug_assert!(norm.m < self.m);
        Some(&s * &norm.inv()?)
    }

    /// (z + z̄) / 2
    pub fn real_part(&self) -> Self {
        (self + &self.conj()).scale(Rational::new(1, 2))
    }

    /// (z - z̄) / 2i
    pub fn imag_part(&self) -> Self {
        let diff = self - &self.conj();
        (&diff * &Self::i()).scale(Rational::new(-1, 2))
    }

    /// |z|² = z z̄
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    /// `√r` for a positive rational `r` when `r` or `2r` is a rational square;
    /// the second case uses `√2 = ζ₈ + ζ₈⁻¹`.
    pub fn sqrt_of_rational(&self) -> Option<Self> {
        let r = self.as_rational()?;
        if !r.is_positive() {
            return None;
        }
        let (p, q) = (*r.numer() as u64, *r.denom() as u64);
        let pq = p.checked_mul(q)?;
        if let Some(s) = exact_sqrt(pq) {
            return Some(Self::from_rational(Ratio::new(s as i64, q as i64)));
        }
        // √(p/q) = √(2pq) / (2q) · √2
        let s = exact_sqrt(pq.checked_mul(2)?)?;
        Some(Self::sqrt2().scale(Ratio::new(s as i64, 2 * q as i64)))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn zip_lifted(x: &CycNumber, y: &CycNumber) -> (u32, Vec<Rational>, Vec<Rational>) {
    let m = x.m.max(y.m);
    (m, x.lift(m), y.lift(m))
}

impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        let (m, a, b) = zip_lifted(self, rhs);
        CycNumber::normalized(m, a.iter().zip(&b).map(|(p, q)| p + q).collect())
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        let (m, a, b) = zip_lifted(self, rhs);
        CycNumber::normalized(m, a.iter().zip(&b).map(|(p, q)| p - q).collect())
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        let (m, a, b) = zip_lifted(self, rhs);
        let n = a.len();
        let mut out = vec![Rational::zero(); n];
        for (i, p) in a.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for (j, q) in b.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                let k = i + j;
                if k < n {
                    out[k] += p * q;
                } else {
                    out[k - n] -= p * q;
                }
            }
        }
        CycNumber::normalized(m, out)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for CycNumber {
            type Output = CycNumber;
            fn $f(self, rhs: CycNumber) -> CycNumber {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order = 1u64 << self.m;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{order}^{k}")?,
                (_, false) => write!(f, "{mag}*z{order}^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn exact_sqrt(n: u64) -> Option<u64> {
    let s = n.isqrt();
    (s * s == n).then_some(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64, m: u32) -> CycNumber {
        CycNumber::root_of_unity(k, m)
    }

    #[test]
    fn root_of_unity_has_full_order() {
        for m in 1..=6 {
            let zeta = z(1, m);
            assert!(zeta.pow(1 << m).is_one(), "ζ^(2^m) != 1 at m={m}");
            if m > 1 {
                assert!(!zeta.pow(1 << (m - 1)).is_one());
                assert_eq!(zeta.pow(1 << (m - 1)), CycNumber::from_integer(-1));
            }
        }
    }

    #[test]
    fn normalization_drops_to_smallest_field() {
        // ζ_16^4 = i = ζ_4
        assert_eq!(z(4, 4), CycNumber::i());
        assert_eq!(z(4, 4).modulus(), 2);
        assert_eq!(z(8, 4), CycNumber::from_integer(-1));
        assert_eq!(CycNumber::sqrt2().modulus(), 3);
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(CycNumber::sqrt2().pow(2), CycNumber::from_integer(2));
    }

    #[test]
    fn conjugation_is_an_involution_fixing_norms() {
        let x = &z(3, 4) + &CycNumber::from_rational(Rational::new(1, 3));
        assert_eq!(x.conj().conj(), x);
        let n = x.norm_sq();
        assert_eq!(n.conj(), n);
        assert_eq!(z(1, 5).conj(), z(-1, 5));
    }

    #[test]
    fn inverse_round_trips() {
        let x = &(&z(1, 4) + &z(5, 4)) + &CycNumber::from_integer(2);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(CycNumber::zero().inv().is_none());
        assert_eq!(
            CycNumber::sqrt2().inv().unwrap(),
            CycNumber::sqrt2().scale(Rational::new(1, 2))
        );
    }

    #[test]
    fn real_and_imaginary_parts() {
        let i = CycNumber::i();
        assert!(i.real_part().is_zero());
        assert!(i.imag_part().is_one());
        let zeta8 = z(1, 3);
        let half_root2 = CycNumber::sqrt2().scale(Rational::new(1, 2));
        assert_eq!(zeta8.real_part(), half_root2);
        assert_eq!(zeta8.imag_part(), half_root2);
    }

    #[test]
    fn recognizes_roots_of_unity() {
        assert_eq!(z(3, 4).as_root_of_unity(), Some((3, 4)));
        assert_eq!(z(-1, 4).as_root_of_unity(), Some((15, 4)));
        assert_eq!(CycNumber::from_integer(-1).as_root_of_unity(), Some((1, 1)));
        assert_eq!(CycNumber::one().as_root_of_unity(), Some((0, 1)));
        assert_eq!(CycNumber::sqrt2().as_root_of_unity(), None);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(CycNumber::i().to_string(), "z4^1");
        assert_eq!((-&z(1, 3)).to_string(), "-z8^1");
        assert_eq!(CycNumber::zero().to_string(), "0");
        let x = &CycNumber::from_rational(Rational::new(1, 2)) - &z(1, 3);
        assert_eq!(x.to_string(), "1/2 - z8^1");
    }

    #[test]
    fn square_roots_of_rationals() {
        let four = CycNumber::from_integer(4);
        assert_eq!(four.sqrt_of_rational(), Some(CycNumber::from_integer(2)));
        let two = CycNumber::from_integer(2);
        assert_eq!(two.sqrt_of_rational(), Some(CycNumber::sqrt2()));
        let half = CycNumber::from_rational(Ratio::new(1, 2));
        let root = half.sqrt_of_rational().unwrap();
        assert_eq!(&root * &root, half);
        assert_eq!(CycNumber::from_integer(3).sqrt_of_rational(), None);
        assert_eq!(CycNumber::from_integer(-4).sqrt_of_rational(), None);
    }
}
