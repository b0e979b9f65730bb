//! Symbolic subgroups of the maximal discrete 2-toral groups S ≤ SU(2) and
//! S̄ ≤ SO(3).
//!
//! Every subgroup of S is either a torus subgroup `Z/2^k` (or the whole
//! torus `T` for `k = ∞`) or is generated by such a subgroup and one element
//! `(θ, 1)` outside the torus. The latter are written `Ext(k, θ)` with `θ`
//! reduced modulo the torus part.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::fingroup::{FiniteGroup, Subgroup};
use crate::quat::{DyadicAngle, SElement, SbarElement, ToralElement, MAX_LEVEL};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StoralError {
    #[error("{0} is infinite and cannot be materialized")]
    Infinite(SSubgroup),
    #[error("{0} does not contain -I")]
    MissingCenter(SSubgroup),
    #[error("{0} does not live in the requested ambient group")]
    WrongAmbient(SSubgroup),
    #[error("{0} is not a subgroup of {1}")]
    NotContained(SSubgroup, SSubgroup),
    #[error("level {0} is too large to materialize")]
    TooLarge(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Su2,
    So3,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Su2 => "su2",
            Ambient::So3 => "so3",
        })
    }
}

impl FromStr for Ambient {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "su2" => Ok(Ambient::Su2),
            "so3" => Ok(Ambient::So3),
            other => Err(format!("unknown ambient group {other:?}")),
        }
    }
}

/// Carrier types tied to an ambient group.
pub trait AmbientElement: ToralElement {
    const AMBIENT: Ambient;
}

impl AmbientElement for SElement {
    const AMBIENT: Ambient = Ambient::Su2;
}

impl AmbientElement for SbarElement {
    const AMBIENT: Ambient = Ambient::So3;
}

/// `k` in `Z/2^k`, or the whole torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TorusLevel {
    Finite(u32),
    Infinite,
}

impl TorusLevel {
    pub fn finite(self) -> Option<u32> {
        match self {
            TorusLevel::Finite(k) => Some(k),
            TorusLevel::Infinite => None,
        }
    }

    fn contains(self, angle: DyadicAngle) -> bool {
        match self {
            TorusLevel::Finite(k) => angle.within_level(k),
            TorusLevel::Infinite => true,
        }
    }

    fn min(self, n: u32) -> u32 {
        self.finite().map_or(n, |k| k.min(n))
    }
}

impl fmt::Display for TorusLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorusLevel::Finite(k) => write!(f, "{k}"),
            TorusLevel::Infinite => f.write_str("inf"),
        }
    }
}

/// A subgroup of S (ambient SU(2)) or S̄ (ambient SO(3)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SSubgroup {
    ambient: Ambient,
    level: TorusLevel,
    extension: Option<DyadicAngle>,
}

impl SSubgroup {
    pub fn torus(ambient: Ambient, level: TorusLevel) -> Self {
        SSubgroup {
            ambient,
            level,
            extension: None,
        }
    }

    pub fn finite_torus(ambient: Ambient, k: u32) -> Self {
        Self::torus(ambient, TorusLevel::Finite(k))
    }

    /// `⟨Z/2^k, (θ, 1)⟩`; in S the torus part always contains `-I`, so `k`
    /// is raised to at least 1 there.
    pub fn ext(ambient: Ambient, level: TorusLevel, angle: DyadicAngle) -> Self {
        let level = match (ambient, level) {
            (Ambient::Su2, TorusLevel::Finite(0)) => TorusLevel::Finite(1),
            _ => level,
        };
        let angle = match level {
            TorusLevel::Finite(k) => angle.reduce_mod(k),
            TorusLevel::Infinite => DyadicAngle::ZERO,
        };
        SSubgroup {
            ambient,
            level,
            extension: Some(angle),
        }
    }

    pub fn finite_ext(ambient: Ambient, k: u32) -> Self {
        Self::ext(ambient, TorusLevel::Finite(k), DyadicAngle::ZERO)
    }

    /// The whole group S or S̄.
    pub fn whole(ambient: Ambient) -> Self {
        Self::ext(ambient, TorusLevel::Infinite, DyadicAngle::ZERO)
    }

    pub fn trivial(ambient: Ambient) -> Self {
        Self::finite_torus(ambient, 0)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn level(&self) -> TorusLevel {
        self.level
    }

    pub fn extension(&self) -> Option<DyadicAngle> {
        self.extension
    }

    pub fn is_infinite(&self) -> bool {
        self.level == TorusLevel::Infinite
    }

    pub fn is_torus_subgroup(&self) -> bool {
        self.extension.is_none()
    }

    pub fn order(&self) -> Option<u64> {
        let k = self.level.finite()?;
        Some((1u64 << k) * if self.extension.is_some() { 2 } else { 1 })
    }

    /// The torus part `P ∩ T`.
    pub fn torus_part(&self) -> SSubgroup {
        Self::torus(self.ambient, self.level)
    }

    pub fn contains<E: AmbientElement>(&self, x: &E) -> bool {
        if E::AMBIENT != self.ambient {
            return false;
        }
        match (x.flip(), self.extension) {
            (false, _) => self.level.contains(x.angle()),
            (true, None) => false,
            (true, Some(theta)) => self.level.contains(x.angle().sub(theta)),
        }
    }

    /// Subgroup inclusion.
    pub fn is_subgroup_of(&self, other: &SSubgroup) -> bool {
        if self.ambient != other.ambient || self.level > other.level {
            return false;
        }
        match (self.extension, other.extension) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => other.level.contains(a.sub(b)),
        }
    }

    /// The representative of the S-conjugacy class: conjugation by `(s, 0)`
    /// moves the coset angle by `2s`, so every extension is conjugate to one
    /// with angle 0.
    pub fn class_representative(&self) -> SSubgroup {
        match self.extension {
            None => *self,
            Some(_) => Self::ext(self.ambient, self.level, DyadicAngle::ZERO),
        }
    }

    /// `P ∩ S_n`.
    pub fn truncate(&self, n: u32) -> SSubgroup {
        let k = TorusLevel::Finite(self.level.min(n));
        match self.extension {
            None => Self::torus(self.ambient, k),
            Some(theta) if theta.within_level(n) => Self::ext(self.ambient, k, theta),
            Some(_) => Self::torus(self.ambient, k),
        }
    }

    /// Smallest truncation level containing the subgroup.
    pub fn min_level(&self) -> Option<u32> {
        let k = self.level.finite()?;
        Some(k.max(self.extension.map_or(0, |t| t.level())))
    }

    /// Short name of the isomorphism type.
    pub fn name(&self) -> String {
        let bar = if self.ambient == Ambient::So3 {
            "bar"
        } else {
            ""
        };
        match (self.level, self.extension) {
            (TorusLevel::Infinite, None) => format!("T{bar}"),
            (TorusLevel::Infinite, Some(_)) => format!("S{bar}"),
            (TorusLevel::Finite(0), None) => "1".into(),
            (TorusLevel::Finite(k), None) => format!("Z/{}", 1u64 << k),
            (TorusLevel::Finite(k), Some(_)) => match (self.ambient, k) {
                (Ambient::Su2, 1) => "Z/4".into(),
                (Ambient::Su2, k) => format!("Q{}", 1u64 << (k + 1)),
                (Ambient::So3, 0) => "Z/2".into(),
                (Ambient::So3, 1) => "V".into(),
                (Ambient::So3, k) => format!("D{}", 1u64 << (k + 1)),
            },
        }
    }

    /// Generators as elements of the ambient carrier.
    pub fn generators<E: AmbientElement>(&self) -> Result<Vec<E>, StoralError> {
        if E::AMBIENT != self.ambient {
            return Err(StoralError::WrongAmbient(*self));
        }
        let k = self.level.finite().ok_or(StoralError::Infinite(*self))?;
        if k > MAX_LEVEL - 2 {
            return Err(StoralError::TooLarge(k));
        }
        let mut gens = Vec::new();
        if k > 0 {
            gens.push(E::from_parts(DyadicAngle::unit(k), false));
        }
        if let Some(theta) = self.extension {
            gens.push(E::from_parts(theta, true));
        }
        Ok(gens)
    }

    /// The subgroup as a concrete finite group.
    pub fn materialize<E: AmbientElement>(&self) -> Result<FiniteGroup<E>, StoralError> {
        let gens = self.generators::<E>()?;
        let identity = E::from_parts(DyadicAngle::ZERO, false);
        FiniteGroup::generate(identity, &gens, usize::MAX).map_err(|_| StoralError::Infinite(*self))
    }

    /// Recognize a finite subgroup of S (or S̄) from its elements.
    pub fn recognize<E: AmbientElement>(elements: &[E]) -> Option<SSubgroup> {
        let k = elements
            .iter()
            .filter(|x| !x.flip())
            .map(|x| x.angle().level())
            .max()?;
        let candidate = match elements.iter().filter(|x| x.flip()).min() {
            None => Self::finite_torus(E::AMBIENT, k),
            Some(r) => Self::ext(E::AMBIENT, TorusLevel::Finite(k), r.angle()),
        };
        let order = candidate.order()?;
        (order == elements.len() as u64 && elements.iter().all(|x| candidate.contains(x)))
            .then_some(candidate)
    }
}

impl Ord for SSubgroup {
    /// Classes are ordered by torus level, then extension flag, then angle.
    fn cmp(&self, other: &Self) -> Ordering {
        (
            self.ambient,
            self.level,
            self.extension.is_some(),
            self.extension,
        )
            .cmp(&(
                other.ambient,
                other.level,
                other.extension.is_some(),
                other.extension,
            ))
    }
}

impl PartialOrd for SSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.extension {
            None => write!(f, "Torus({})", self.level),
            Some(theta) => write!(f, "Ext({}, {})", self.level, theta),
        }
    }
}

impl Serialize for SSubgroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One representative per S-conjugacy class, finite torus levels up to
/// `up_to_level`, plus the infinite classes `T` and `S`.
///
/// In S̄ a single reflection `(0, 1)` generates a subgroup of order 2 not
/// contained in the torus, so `Ext(0, 0)` is listed there as well.
pub fn enumerate_subgroup_classes(ambient: Ambient, up_to_level: u32) -> Vec<SSubgroup> {
    let first_ext = match ambient {
        Ambient::Su2 => 1,
        Ambient::So3 => 0,
    };
    let mut out: Vec<SSubgroup> = (0..=up_to_level)
        .map(|k| SSubgroup::finite_torus(ambient, k))
        .chain((first_ext..=up_to_level).map(|k| SSubgroup::finite_ext(ambient, k)))
        .chain([
            SSubgroup::torus(ambient, TorusLevel::Infinite),
            SSubgroup::whole(ambient),
        ])
        .collect();
    out.sort();
    out
}

/// The centralizer `C_S(P)` (or `C_S̄(P)`).
pub fn s_centralizer(p: &SSubgroup) -> SSubgroup {
    let amb = p.ambient;
    let whole = SSubgroup::whole(amb);
    let torus = SSubgroup::torus(amb, TorusLevel::Infinite);
    // elements of order at most 2 in T are central in S, larger ones are only
    // centralized by T
    let torus_part_centralizer = match p.level {
        TorusLevel::Finite(k) if k <= 1 => whole,
        _ => torus,
    };
    match p.extension {
        None => torus_part_centralizer,
        Some(theta) => {
            // C((θ,1)) = {±1, ±(θ,1)} resp. {1, (1/2,0), (θ,1), (θ+1/2,1)}
            let reflection_centralizer = SSubgroup::ext(amb, TorusLevel::Finite(1), theta);
            if torus_part_centralizer == whole {
                reflection_centralizer
            } else {
                SSubgroup::finite_torus(amb, 1)
            }
        }
    }
}

/// The normalizer `N_S(P)` (or `N_S̄(P)`).
pub fn s_normalizer(p: &SSubgroup) -> SSubgroup {
    match (p.level, p.extension) {
        (_, None) | (TorusLevel::Infinite, _) => SSubgroup::whole(p.ambient),
        // (s,0)(θ,1)(s,0)⁻¹ = (θ+2s, 1), which lies in P iff 2s ∈ Z/2^k
        (TorusLevel::Finite(k), Some(theta)) => {
            SSubgroup::ext(p.ambient, TorusLevel::Finite(k + 1), theta)
        }
    }
}

/// Image in S̄ of a subgroup of S containing `-I`.
pub fn so3_quotient(p: &SSubgroup) -> Result<SSubgroup, StoralError> {
    if p.ambient != Ambient::Su2 {
        return Err(StoralError::WrongAmbient(*p));
    }
    let level = match p.level {
        TorusLevel::Finite(0) => return Err(StoralError::MissingCenter(*p)),
        TorusLevel::Finite(k) => TorusLevel::Finite(k - 1),
        TorusLevel::Infinite => TorusLevel::Infinite,
    };
    Ok(match p.extension {
        None => SSubgroup::torus(Ambient::So3, level),
        Some(theta) => SSubgroup::ext(Ambient::So3, level, theta.double()),
    })
}

/// Full preimage in S of a subgroup of S̄.
pub fn so3_preimage(p: &SSubgroup) -> Result<SSubgroup, StoralError> {
    if p.ambient != Ambient::So3 {
        return Err(StoralError::WrongAmbient(*p));
    }
    let level = match p.level {
        TorusLevel::Finite(k) => TorusLevel::Finite(k + 1),
        TorusLevel::Infinite => TorusLevel::Infinite,
    };
    Ok(match p.extension {
        None => SSubgroup::torus(Ambient::Su2, level),
        Some(theta) => SSubgroup::ext(Ambient::Su2, level, theta.halve()),
    })
}

/// Subgroup generated by the squares of `P`.
pub fn squares_subgroup(p: &SSubgroup) -> SSubgroup {
    let amb = p.ambient;
    let torus_squares = match p.level {
        TorusLevel::Finite(k) => TorusLevel::Finite(k.saturating_sub(1)),
        TorusLevel::Infinite => TorusLevel::Infinite,
    };
    match (amb, p.extension) {
        // elements outside the torus square to -I
        (Ambient::Su2, Some(_)) => match torus_squares {
            TorusLevel::Finite(k) => SSubgroup::finite_torus(amb, k.max(1)),
            TorusLevel::Infinite => SSubgroup::torus(amb, TorusLevel::Infinite),
        },
        _ => SSubgroup::torus(amb, torus_squares),
    }
}

/// The finite truncation `S_n` (order `2^{n+1}`).
pub fn truncation<E: AmbientElement>(n: u32) -> Result<FiniteGroup<E>, StoralError> {
    SSubgroup::finite_ext(E::AMBIENT, n).materialize()
}

/// The elements of `P` inside a materialized truncation, as an index set.
pub fn subgroup_in<E: AmbientElement>(group: &FiniteGroup<E>, p: &SSubgroup) -> Subgroup {
    Subgroup::from_indices(
        (0..group.order())
            .filter(|&i| p.contains(group.element(i)))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::is_isomorphic;
    use crate::fingroup::library::{dihedral, generalized_quaternion, identify};

    const SU: Ambient = Ambient::Su2;
    const SO: Ambient = Ambient::So3;

    fn names(list: &[SSubgroup]) -> Vec<String> {
        list.iter().map(SSubgroup::name).collect()
    }

    #[test]
    fn su2_classes_at_level_three() {
        let classes = enumerate_subgroup_classes(SU, 3);
        assert_eq!(
            names(&classes),
            ["1", "Z/2", "Z/4", "Z/4", "Q8", "Z/8", "Q16", "T", "S"]
        );
    }

    #[test]
    fn so3_classes_include_v_and_d8() {
        let classes = enumerate_subgroup_classes(SO, 2);
        assert!(classes.contains(&SSubgroup::finite_ext(SO, 1)));
        assert!(classes.contains(&SSubgroup::finite_ext(SO, 2)));
        assert_eq!(SSubgroup::finite_ext(SO, 1).name(), "V");
        assert_eq!(SSubgroup::finite_ext(SO, 2).name(), "D8");
    }

    #[test]
    fn centralizers() {
        let t = SSubgroup::torus(SU, TorusLevel::Infinite);
        assert_eq!(s_centralizer(&t), t);
        assert_eq!(s_centralizer(&SSubgroup::trivial(SU)), SSubgroup::whole(SU));
        assert_eq!(
            s_centralizer(&SSubgroup::finite_ext(SU, 2)),
            SSubgroup::finite_torus(SU, 1)
        );
        let v = SSubgroup::finite_ext(SO, 1);
        assert_eq!(s_centralizer(&v), v);
    }

    #[test]
    fn normalizers() {
        assert_eq!(
            s_normalizer(&SSubgroup::finite_ext(SU, 2)),
            SSubgroup::finite_ext(SU, 3)
        );
        assert_eq!(s_normalizer(&SSubgroup::whole(SU)), SSubgroup::whole(SU));
        assert_eq!(
            s_normalizer(&SSubgroup::finite_ext(SO, 1)),
            SSubgroup::finite_ext(SO, 2)
        );
    }

    #[test]
    fn quotient_and_preimage() {
        assert_eq!(
            so3_quotient(&SSubgroup::finite_ext(SU, 2)).unwrap(),
            SSubgroup::finite_ext(SO, 1)
        );
        assert_eq!(
            so3_quotient(&SSubgroup::torus(SU, TorusLevel::Infinite)).unwrap(),
            SSubgroup::torus(SO, TorusLevel::Infinite)
        );
        assert!(matches!(
            so3_quotient(&SSubgroup::trivial(SU)),
            Err(StoralError::MissingCenter(_))
        ));
        for p in enumerate_subgroup_classes(SO, 4) {
            assert_eq!(so3_quotient(&so3_preimage(&p).unwrap()).unwrap(), p);
        }
    }

    #[test]
    fn materialized_types() {
        let q8 = SSubgroup::finite_ext(SU, 2)
            .materialize::<SElement>()
            .unwrap();
        assert!(is_isomorphic(&q8, &generalized_quaternion(8)).is_some());
        let triv = SSubgroup::trivial(SU).materialize::<SElement>().unwrap();
        assert_eq!(triv.order(), 1);
        let d8 = SSubgroup::finite_ext(SO, 2)
            .materialize::<SbarElement>()
            .unwrap();
        assert_eq!(d8.order(), 8);
        let involutions = (0..8).filter(|&x| d8.element_order(x) == 2).count();
        assert_eq!(involutions, 5);
        assert!(is_isomorphic(&d8, &dihedral(8)).is_some());
        assert_eq!(identify(&q8), "Q8");
        assert!(matches!(
            SSubgroup::whole(SU).materialize::<SElement>(),
            Err(StoralError::Infinite(_))
        ));
        assert!(matches!(
            SSubgroup::whole(SU).materialize::<SbarElement>(),
            Err(StoralError::WrongAmbient(_))
        ));
    }

    #[test]
    fn recognition_round_trips() {
        let p = SSubgroup::ext(SU, TorusLevel::Finite(2), DyadicAngle::new(1, 3));
        let g = p.materialize::<SElement>().unwrap();
        assert_eq!(SSubgroup::recognize(g.elements()), Some(p));
        assert_eq!(p.class_representative(), SSubgroup::finite_ext(SU, 2));
    }

    #[test]
    fn inclusion_and_truncation() {
        let q8 = SSubgroup::finite_ext(SU, 2);
        let q16 = SSubgroup::finite_ext(SU, 3);
        assert!(q8.is_subgroup_of(&q16));
        assert!(!q16.is_subgroup_of(&q8));
        assert!(SSubgroup::finite_torus(SU, 5).is_subgroup_of(&SSubgroup::whole(SU)));
        assert_eq!(SSubgroup::whole(SU).truncate(3), q16);
        let shifted = SSubgroup::ext(SU, TorusLevel::Finite(1), DyadicAngle::new(1, 3));
        assert!(!shifted.is_subgroup_of(&q8));
        assert!(shifted.is_subgroup_of(&SSubgroup::finite_ext(SU, 3)));
    }

    #[test]
    fn squares() {
        assert_eq!(
            squares_subgroup(&SSubgroup::finite_ext(SU, 2)),
            SSubgroup::finite_torus(SU, 1)
        );
        assert_eq!(
            squares_subgroup(&SSubgroup::finite_ext(SO, 1)),
            SSubgroup::trivial(SO)
        );
        assert_eq!(
            squares_subgroup(&SSubgroup::finite_torus(SU, 3)),
            SSubgroup::finite_torus(SU, 2)
        );
    }
}
