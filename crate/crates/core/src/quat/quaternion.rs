use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use super::angle::{DyadicAngle, SElement, SbarElement, MAX_LEVEL};
use super::cyclotomic::{CycNumber, Rational, MAX_MODULUS};
use super::QuatError;
use crate::fingroup::{FiniteGroup, GroupElement};

/// The matrix `[[a, b], [-b̄, ā]]` with entries in a 2-power cyclotomic field.
///
/// Products are 2×2 matrix products. Elements of SU(2) are the ones with
/// `|a|² + |b|² = 1`; non-unit values appear only as intermediate vectors in
/// linear solves.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycQuaternion {
    pub a: CycNumber,
    pub b: CycNumber,
}

impl CycQuaternion {
    pub fn new(a: CycNumber, b: CycNumber) -> Self {
        CycQuaternion { a, b }
    }

    pub fn identity() -> Self {
        Self::new(CycNumber::one(), CycNumber::zero())
    }

    pub fn minus_identity() -> Self {
        Self::new(CycNumber::from_integer(-1), CycNumber::zero())
    }

    /// 𝐢 = [[0, 1], [-1, 0]]
    pub fn qi() -> Self {
        Self::new(CycNumber::zero(), CycNumber::one())
    }

    /// 𝐣 = [[i, 0], [0, -i]]
    pub fn qj() -> Self {
        Self::new(CycNumber::i(), CycNumber::zero())
    }

    /// 𝐤 = [[0, -i], [-i, 0]]
    pub fn qk() -> Self {
        Self::new(CycNumber::zero(), -CycNumber::i())
    }

    /// `w + x𝐢 + y𝐣 + z𝐤` for real coordinates.
    pub fn from_coords(coords: &[CycNumber; 4]) -> Self {
        let [w, x, y, z] = coords;
        let i = CycNumber::i();
        Self::new(w + &(y * &i), x - &(z * &i))
    }

    /// Real coordinates `(w, x, y, z)` along `1, 𝐢, 𝐣, 𝐤`.
    pub fn coords(&self) -> [CycNumber; 4] {
        [
            self.a.real_part(),
            self.b.real_part(),
            self.a.imag_part(),
            -self.b.imag_part(),
        ]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // [[a1, b1], [-b̄1, ā1]] · [[a2, b2], [-b̄2, ā2]]
        let a = &(&self.a * &rhs.a) - &(&self.b * &rhs.b.conj());
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a.conj());
        Self::new(a, b)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.a, -&self.b)
    }

    pub fn scale(&self, s: &CycNumber) -> Self {
        // s must be real; a complex scalar would leave the quaternion shape
        Self::new(&self.a * s, &self.b * s)
    }

    /// Quaternionic conjugate, which is the inverse for unit quaternions.
    pub fn conj(&self) -> Self {
        Self::new(self.a.conj(), -&self.b)
    }

    /// `|a|² + |b|²`, the determinant.
    pub fn norm(&self) -> CycNumber {
        &self.a.norm_sq() + &self.b.norm_sq()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Matrix trace `a + ā`.
    pub fn trace(&self) -> CycNumber {
        &self.a + &self.a.conj()
    }

    /// Pure part `(a - Re a, b)`, which spans the maximal torus through `self`.
    pub fn imaginary_part(&self) -> Self {
        Self::new(&self.a - &self.a.real_part(), self.b.clone())
    }

    /// Whether this element lies in the centre {±I} of SU(2) (or is real, for non-units).
    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.a == self.a.conj()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.conj())
    }

    /// Smallest modulus holding both entries.
    pub fn modulus(&self) -> u32 {
        self.a.modulus().max(self.b.modulus())
    }

    /// Recognize a unit quaternion as an element of S, when it is one.
    pub fn to_s_element(&self) -> Option<SElement> {
        if self.b.is_zero() {
            let (k, m) = self.a.as_root_of_unity()?;
            Some(SElement::torus(DyadicAngle::new(k as i64, m)))
        } else if self.a.is_zero() {
            let (k, m) = self.b.as_root_of_unity()?;
            Some(SElement::reflection(DyadicAngle::new(k as i64, m)))
        } else {
            None
        }
    }
}

impl GroupElement for CycQuaternion {
    fn op(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn inv(&self) -> Self {
        self.conj()
    }
}

impl fmt::Display for CycQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[a={}, b={}]", self.a, self.b)
    }
}

impl fmt::Debug for CycQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element of SO(3) = SU(2)/{±I}: a unit quaternion up to sign, stored
/// with the sign that makes its first nonzero coefficient positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjQuaternion(CycQuaternion);

impl ProjQuaternion {
    pub fn new(q: CycQuaternion) -> Self {
        let first =
            q.a.coeffs()
                .iter()
                .chain(q.b.coeffs())
                .find(|c| !c.is_zero())
                .copied()
                .unwrap_or_else(Rational::zero);
        if first < Rational::zero() {
            ProjQuaternion(q.neg())
        } else {
            ProjQuaternion(q)
        }
    }

    pub fn identity() -> Self {
        Self::new(CycQuaternion::identity())
    }

    pub fn lift(&self) -> &CycQuaternion {
        &self.0
    }

    /// Trace of the rotation, `4w² - 1 = tr(q)² - 1`; independent of the sign of the lift.
    pub fn rotation_trace(&self) -> CycNumber {
        let t = self.0.trace();
        &(&t * &t) - &CycNumber::one()
    }
}

impl GroupElement for ProjQuaternion {
    fn op(&self, rhs: &Self) -> Self {
        Self::new(self.0.mul(&rhs.0))
    }
    fn inv(&self) -> Self {
        Self::new(self.0.conj())
    }
}

impl fmt::Display for ProjQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.0)
    }
}

impl fmt::Debug for ProjQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Matrix of an element of S: `(θ, 0) ↦ diag(ζ, ζ̄)` and `(θ, 1) ↦ diag(ζ, ζ̄)·𝐢`,
/// with `ζ = e^{2πiθ}` computed in Q(ζ_{2^modulus}).
pub fn s_to_quaternion(x: SElement, modulus: u32) -> Result<CycQuaternion, QuatError> {
    let level = x.angle.level();
    if level > modulus {
        return Err(QuatError::Precision {
            needed: level,
            modulus,
        });
    }
    if level > MAX_MODULUS {
        return Err(QuatError::Precision {
            needed: level,
            modulus: MAX_MODULUS,
        });
    }
    let zeta = CycNumber::root_of_unity(x.angle.num() as i64, level.max(1));
    Ok(if x.flip {
        CycQuaternion::new(CycNumber::zero(), zeta)
    } else {
        CycQuaternion::new(zeta, CycNumber::zero())
    })
}

/// Rotation in SO(3) represented by an element of S̄.
pub fn sbar_to_rotation(x: SbarElement, modulus: u32) -> Result<ProjQuaternion, QuatError> {
    if x.angle.level() >= MAX_LEVEL {
        return Err(QuatError::Precision {
            needed: x.angle.level() + 1,
            modulus,
        });
    }
    Ok(ProjQuaternion::new(s_to_quaternion(x.lift(), modulus)?))
}

/// SU(2)-centralizer of a set of unit quaternions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommutantClass {
    /// Every generator is ±I; the centralizer is all of SU(2).
    Central,
    /// All generators lie in the maximal torus through `axis` (a pure
    /// quaternion, not normalized); that torus is the centralizer.
    AxisLine(CycQuaternion),
    /// Two generators fail to commute; the centralizer is {±I}.
    Generic,
}

impl CommutantClass {
    /// Whether `q` centralizes the generating set.
    pub fn contains(&self, q: &CycQuaternion) -> bool {
        match self {
            CommutantClass::Central => true,
            CommutantClass::AxisLine(axis) => q.commutes_with(axis),
            CommutantClass::Generic => q.is_real(),
        }
    }
}

/// Classify the centralizer in SU(2) of the subgroup generated by `gens`.
///
/// Two non-central unit quaternions commute exactly when their pure parts are
/// parallel, so one non-central generator fixes the only candidate torus.
pub fn commutant_class(gens: &[CycQuaternion]) -> CommutantClass {
    let mut non_central = gens.iter().filter(|g| !g.is_real());
    let Some(first) = non_central.next() else {
        return CommutantClass::Central;
    };
    if non_central.all(|g| g.commutes_with(first)) {
        CommutantClass::AxisLine(first.imaginary_part())
    } else {
        CommutantClass::Generic
    }
}

/// Close `gens` under multiplication, failing once more than `cap` elements appear.
pub fn finite_closure(
    gens: &[CycQuaternion],
    cap: usize,
) -> Result<FiniteGroup<CycQuaternion>, QuatError> {
    FiniteGroup::generate(CycQuaternion::identity(), gens, cap)
        .map_err(|_| QuatError::NotFinite { cap })
}

/// Elements of the binary octahedral group used to generate it: the
/// quaternion units 𝐢, 𝐣, the order-6 element ω = (-1 + 𝐢 + 𝐣 + 𝐤)/2 and the
/// order-8 element τ = (1 + 𝐢)/√2.
pub fn binary_octahedral_generators() -> Vec<CycQuaternion> {
    let half = CycNumber::from_rational(Ratio::new(1, 2));
    let omega = CycQuaternion::from_coords(&[-&half, half.clone(), half.clone(), half]);
    let inv_root2 = CycNumber::sqrt2().scale(Ratio::new(1, 2));
    let tau = CycQuaternion::from_coords(&[
        inv_root2.clone(),
        inv_root2,
        CycNumber::zero(),
        CycNumber::zero(),
    ]);
    vec![CycQuaternion::qi(), CycQuaternion::qj(), omega, tau]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::angle::DyadicAngle;

    fn a(num: i64, level: u32) -> DyadicAngle {
        DyadicAngle::new(num, level)
    }

    #[test]
    fn named_units_multiply_as_quaternions() {
        let (i, j, k) = (
            CycQuaternion::qi(),
            CycQuaternion::qj(),
            CycQuaternion::qk(),
        );
        let minus = CycQuaternion::minus_identity();
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
        for q in [&i, &j, &k] {
            assert_eq!(q.mul(q), minus);
            assert!(q.is_unit());
        }
    }

    #[test]
    fn coordinates_round_trip() {
        for q in binary_octahedral_generators() {
            assert_eq!(CycQuaternion::from_coords(&q.coords()), q);
        }
        let k = CycQuaternion::qk();
        let c = k.coords();
        assert!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_one());
    }

    #[test]
    fn s_elements_map_to_matrices() {
        assert_eq!(
            s_to_quaternion(SElement::I, 4).unwrap(),
            CycQuaternion::qi()
        );
        assert_eq!(
            s_to_quaternion(SElement::IDENTITY, 4).unwrap(),
            CycQuaternion::identity()
        );
        assert_eq!(
            s_to_quaternion(SElement::torus(a(1, 2)), 4).unwrap(),
            CycQuaternion::qj()
        );
        assert_eq!(
            s_to_quaternion(SElement::reflection(a(3, 2)), 4).unwrap(),
            CycQuaternion::qk()
        );
    }

    #[test]
    fn precision_is_checked() {
        let x = SElement::torus(a(1, 5));
        assert_eq!(
            s_to_quaternion(x, 4),
            Err(QuatError::Precision {
                needed: 5,
                modulus: 4
            })
        );
        assert!(s_to_quaternion(x, 5).is_ok());
    }

    #[test]
    fn recognizes_s_elements() {
        let x = SElement::reflection(a(5, 3));
        assert_eq!(s_to_quaternion(x, 3).unwrap().to_s_element(), Some(x));
        let omega = &binary_octahedral_generators()[2];
        assert_eq!(omega.to_s_element(), None);
    }

    #[test]
    fn commutant_examples() {
        let (i, j) = (CycQuaternion::qi(), CycQuaternion::qj());
        assert_eq!(
            commutant_class(&[i.clone(), j.clone()]),
            CommutantClass::Generic
        );
        assert_eq!(
            commutant_class(&[CycQuaternion::identity()]),
            CommutantClass::Central
        );
        assert_eq!(
            commutant_class(&[CycQuaternion::minus_identity(), CycQuaternion::identity()]),
            CommutantClass::Central
        );
        match commutant_class(std::slice::from_ref(&j)) {
            CommutantClass::AxisLine(axis) => {
                assert_eq!(axis, j);
                // the diagonal torus centralizes 𝐣, 𝐢 does not
                let t = s_to_quaternion(SElement::torus(a(1, 3)), 3).unwrap();
                let cls = CommutantClass::AxisLine(axis);
                assert!(cls.contains(&t));
                assert!(!cls.contains(&i));
            }
            other => panic!("expected an axis, got {other:?}"),
        }
    }

    #[test]
    fn closure_sizes() {
        let (i, j) = (CycQuaternion::qi(), CycQuaternion::qj());
        assert_eq!(
            finite_closure(&[i.clone(), j.clone()], 128)
                .unwrap()
                .order(),
            8
        );
        assert_eq!(
            finite_closure(&[CycQuaternion::minus_identity()], 128)
                .unwrap()
                .order(),
            2
        );
        assert_eq!(
            finite_closure(&binary_octahedral_generators(), 128)
                .unwrap()
                .order(),
            48
        );
        assert!(matches!(
            finite_closure(&binary_octahedral_generators(), 40),
            Err(QuatError::NotFinite { cap: 40 })
        ));
    }

    #[test]
    fn rotation_trace_ignores_sign() {
        let q = binary_octahedral_generators()[3].clone();
        let p = ProjQuaternion::new(q.clone());
        assert_eq!(p, ProjQuaternion::new(q.neg()));
        // τ is a quarter turn: trace 1 + 2 cos(π/2) = 1
        assert!(p.rotation_trace().is_one());
    }
}
