//! Elements of the discrete 2-toral groups S ≤ SU(2) and S̄ ≤ SO(3).
//!
//! A torus element is a dyadic fraction of a full turn, so the SU(2) matrix
//! `diag(e^{2πiθ}, e^{-2πiθ})` is the angle `θ`. An element of `S` is a pair
//! `(θ, ε)` standing for `diag(e^{2πiθ}, e^{-2πiθ}) · 𝐢^ε`.

use std::cmp::Ordering;
use std::fmt;

use crate::fingroup::GroupElement;

/// Largest denominator exponent an angle may carry.
pub const MAX_LEVEL: u32 = 62;

/// `num / 2^level` in Q/Z, with `num` odd unless the angle is zero (then `level = 0`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DyadicAngle {
    num: u64,
    level: u32,
}

impl DyadicAngle {
    pub const ZERO: DyadicAngle = DyadicAngle { num: 0, level: 0 };
    pub const HALF: DyadicAngle = DyadicAngle { num: 1, level: 1 };

    /// `num / 2^level`, reduced into `[0, 1)` and normalized.
    pub fn new(num: i64, level: u32) -> Self {
        assert!(
            level <= MAX_LEVEL,
            "angle level {level} exceeds {MAX_LEVEL}"
        );
        let modulus = 1i128 << level;
        let num = (num as i128).rem_euclid(modulus) as u64;
        Self::normalized(num, level)
    }

    fn normalized(num: u64, level: u32) -> Self {
        if num == 0 {
            return Self::ZERO;
        }
        let tz = num.trailing_zeros().min(level);
        DyadicAngle {
            num: num >> tz,
            level: level - tz,
        }
    }

    /// A generator of the cyclic subgroup of order `2^level` of the torus.
    pub fn unit(level: u32) -> Self {
        Self::new(1, level)
    }

    pub fn num(self) -> u64 {
        self.num
    }

    /// Exponent of the reduced denominator; the angle has order `2^level` in Q/Z.
    pub fn level(self) -> u32 {
        self.level
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// Numerator over the common denominator `2^level`, `level ≥ self.level()`.
    pub fn numerator_at(self, level: u32) -> u64 {
        assert!(level >= self.level && level <= MAX_LEVEL);
        self.num << (level - self.level)
    }

    pub fn add(self, other: Self) -> Self {
        let level = self.level.max(other.level);
        let modulus = 1u128 << level;
        let sum = (self.numerator_at(level) as u128 + other.numerator_at(level) as u128) % modulus;
        Self::normalized(sum as u64, level)
    }

    pub fn neg(self) -> Self {
        if self.is_zero() {
            return self;
        }
        DyadicAngle {
            num: (1u64 << self.level) - self.num,
            level: self.level,
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.neg())
    }

    pub fn double(self) -> Self {
        if self.level == 0 {
            return Self::ZERO;
        }
        Self::new((self.num << 1) as i64, self.level)
    }

    /// One of the two halves of this angle: `num / 2^(level+1)`.
    pub fn halve(self) -> Self {
        if self.is_zero() {
            return Self::ZERO;
        }
        Self::normalized(self.num, self.level + 1)
    }

    /// Whether the angle lies in the subgroup `(1/2^k) Z / Z`.
    pub fn within_level(self, k: u32) -> bool {
        self.level <= k
    }

    /// The representative of `self + (1/2^k) Z` in `[0, 1/2^k)`.
    pub fn reduce_mod(self, k: u32) -> Self {
        if self.level <= k {
            return Self::ZERO;
        }
        let modulus = 1u64 << (self.level - k);
        Self::normalized(self.num % modulus, self.level)
    }

    /// Fraction of a turn as a float, for display only.
    pub fn as_f64(self) -> f64 {
        self.num as f64 / (1u64 << self.level) as f64
    }
}

impl Ord for DyadicAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        let level = self.level.max(other.level);
        self.numerator_at(level).cmp(&other.numerator_at(level))
    }
}

impl PartialOrd for DyadicAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.level)
        }
    }
}

impl fmt::Debug for DyadicAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Common surface of the two discrete 2-toral element types.
pub trait ToralElement: GroupElement + Copy + Ord {
    fn from_parts(angle: DyadicAngle, flip: bool) -> Self;
    fn angle(&self) -> DyadicAngle;
    fn flip(&self) -> bool;
}

/// An element of S = ⟨T, 𝐢⟩ ≤ SU(2), where 𝐢 inverts T and 𝐢² = -I.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SElement {
    pub flip: bool,
    pub angle: DyadicAngle,
}

impl SElement {
    pub const IDENTITY: SElement = SElement {
        flip: false,
        angle: DyadicAngle::ZERO,
    };
    /// -I
    pub const MINUS_ONE: SElement = SElement {
        flip: false,
        angle: DyadicAngle::HALF,
    };
    /// 𝐢 = [[0, 1], [-1, 0]]
    pub const I: SElement = SElement {
        flip: true,
        angle: DyadicAngle::ZERO,
    };

    pub fn torus(angle: DyadicAngle) -> Self {
        SElement { flip: false, angle }
    }

    pub fn reflection(angle: DyadicAngle) -> Self {
        SElement { flip: true, angle }
    }

    /// (θ₁,ε₁)(θ₂,ε₂) = (θ₁ + (-1)^ε₁ θ₂ + ε₁ε₂/2, ε₁ ⊕ ε₂)
    pub fn mul(self, rhs: Self) -> Self {
        let turned = if self.flip {
            rhs.angle.neg()
        } else {
            rhs.angle
        };
        let mut angle = self.angle.add(turned);
        if self.flip && rhs.flip {
            angle = angle.add(DyadicAngle::HALF);
        }
        SElement {
            flip: self.flip ^ rhs.flip,
            angle,
        }
    }

    pub fn inverse(self) -> Self {
        if self.flip {
            SElement {
                flip: true,
                angle: self.angle.add(DyadicAngle::HALF),
            }
        } else {
            SElement {
                flip: false,
                angle: self.angle.neg(),
            }
        }
    }

    /// Image in S̄ ≤ SO(3) under the quotient by {±I}: (θ, ε) ↦ (2θ, ε).
    pub fn to_sbar(self) -> SbarElement {
        SbarElement {
            flip: self.flip,
            angle: self.angle.double(),
        }
    }
}

impl GroupElement for SElement {
    fn op(&self, rhs: &Self) -> Self {
        self.mul(*rhs)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl ToralElement for SElement {
    fn from_parts(angle: DyadicAngle, flip: bool) -> Self {
        SElement { flip, angle }
    }
    fn angle(&self) -> DyadicAngle {
        self.angle
    }
    fn flip(&self) -> bool {
        self.flip
    }
}

impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.angle, u8::from(self.flip))
    }
}

impl fmt::Debug for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of S̄ = T̄ ⋊ Z/2 ≤ SO(3); the reflection squares to the identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SbarElement {
    pub flip: bool,
    pub angle: DyadicAngle,
}

impl SbarElement {
    pub const IDENTITY: SbarElement = SbarElement {
        flip: false,
        angle: DyadicAngle::ZERO,
    };

    pub fn torus(angle: DyadicAngle) -> Self {
        SbarElement { flip: false, angle }
    }

    pub fn reflection(angle: DyadicAngle) -> Self {
        SbarElement { flip: true, angle }
    }

    /// (θ₁,ε₁)(θ₂,ε₂) = (θ₁ + (-1)^ε₁ θ₂, ε₁ ⊕ ε₂)
    pub fn mul(self, rhs: Self) -> Self {
        let turned = if self.flip {
            rhs.angle.neg()
        } else {
            rhs.angle
        };
        SbarElement {
            flip: self.flip ^ rhs.flip,
            angle: self.angle.add(turned),
        }
    }

    pub fn inverse(self) -> Self {
        if self.flip {
            self
        } else {
            SbarElement {
                flip: false,
                angle: self.angle.neg(),
            }
        }
    }

    /// A preimage in S (the other one is its product with -I).
    pub fn lift(self) -> SElement {
        SElement {
            flip: self.flip,
            angle: self.angle.halve(),
        }
    }
}

impl GroupElement for SbarElement {
    fn op(&self, rhs: &Self) -> Self {
        self.mul(*rhs)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
}

impl ToralElement for SbarElement {
    fn from_parts(angle: DyadicAngle, flip: bool) -> Self {
        SbarElement { flip, angle }
    }
    fn angle(&self) -> DyadicAngle {
        self.angle
    }
    fn flip(&self) -> bool {
        self.flip
    }
}

impl fmt::Display for SbarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})~", self.angle, u8::from(self.flip))
    }
}

impl fmt::Debug for SbarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(num: i64, level: u32) -> DyadicAngle {
        DyadicAngle::new(num, level)
    }

    #[test]
    fn angles_normalize() {
        assert_eq!(a(2, 3), a(1, 2));
        assert_eq!(a(8, 3), DyadicAngle::ZERO);
        assert_eq!(a(-1, 2), a(3, 2));
        assert_eq!(a(4, 3).level(), 1);
        assert_eq!(DyadicAngle::ZERO.level(), 0);
    }

    #[test]
    fn angle_arithmetic() {
        assert_eq!(a(1, 2).add(a(1, 4)), a(5, 4));
        assert_eq!(a(3, 4).add(a(5, 4)), a(1, 1));
        assert_eq!(a(1, 3).neg(), a(7, 3));
        assert_eq!(a(3, 3).double(), a(3, 2));
        assert_eq!(DyadicAngle::HALF.double(), DyadicAngle::ZERO);
        assert_eq!(a(3, 3).halve(), a(3, 4));
        assert_eq!(a(5, 4).reduce_mod(2), a(1, 4));
        assert_eq!(a(1, 2).reduce_mod(2), DyadicAngle::ZERO);
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(SElement::I.mul(SElement::I), SElement::MINUS_ONE);
    }

    #[test]
    fn i_times_j_is_k() {
        let j = SElement::torus(a(1, 2));
        assert_eq!(SElement::I.mul(j), SElement::reflection(a(3, 2)));
    }

    #[test]
    fn identity_is_neutral() {
        let x = SElement::torus(a(3, 8));
        assert_eq!(x.mul(SElement::IDENTITY), x);
        assert_eq!(SElement::IDENTITY.mul(x), x);
    }

    #[test]
    fn quotient_kills_minus_one() {
        assert_eq!(SElement::MINUS_ONE.to_sbar(), SbarElement::IDENTITY);
        let r = SbarElement::reflection(DyadicAngle::ZERO);
        assert_eq!(r.mul(r), SbarElement::IDENTITY);
    }
}
