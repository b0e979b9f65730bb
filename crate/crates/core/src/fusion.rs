//! The fusion system of SU(2) (resp. SO(3)) over S (resp. S̄).
//!
//! For finite subgroups a map `f: P → P'` is a morphism of the fusion system
//! exactly when it preserves the character of the defining representation:
//! the SU(2) trace, or the SO(3) rotation trace `tr² - 1` of a lift.

use serde::Serialize;
use thiserror::Error;

use crate::fingroup::library::identify;
use crate::fingroup::{
    inner_automorphisms, isomorphisms_with, o2_radical, FiniteGroup, GroupError, Perm,
};
use crate::quat::{
    s_to_quaternion, sbar_to_rotation, CycNumber, QuatError, SElement, SbarElement, DEFAULT_MODULUS,
};
use crate::storal::{
    enumerate_subgroup_classes, s_centralizer, s_normalizer, squares_subgroup, Ambient, SSubgroup,
    StoralError, TorusLevel,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error(transparent)]
    Storal(#[from] StoralError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Quat(#[from] QuatError),
}

/// Ambient group, working truncation level and cyclotomic modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FusionContext {
    pub ambient: Ambient,
    pub level: u32,
    pub modulus: u32,
}

impl FusionContext {
    pub fn new(ambient: Ambient, level: u32) -> Self {
        FusionContext {
            ambient,
            level,
            modulus: DEFAULT_MODULUS,
        }
    }

    pub fn with_modulus(mut self, modulus: u32) -> Self {
        self.modulus = modulus;
        self
    }

    /// The modulus actually used: large enough for every element of `S_level`
    /// and its lifts.
    pub fn effective_modulus(&self) -> u32 {
        self.modulus.max(self.level + 2)
    }

    /// Order of the Weyl group `W = N(T)/T`, read off the symbolic normalizer
    /// and centralizer of the torus.
    pub fn weyl_order(&self) -> u64 {
        let t = SSubgroup::torus(self.ambient, TorusLevel::Infinite);
        infinite_index(&s_normalizer(&t), &s_centralizer(&t))
    }

    pub fn classes(&self) -> Vec<SSubgroup> {
        enumerate_subgroup_classes(self.ambient, self.level)
    }
}

/// `[big : small]` for `small ≤ big` with the same torus level.
fn infinite_index(big: &SSubgroup, small: &SSubgroup) -> u64 {
    debug_assert!(small.is_subgroup_of(big) && small.level() == big.level());
    match (big.extension(), small.extension()) {
        (Some(_), None) => 2,
        _ => 1,
    }
}

/// A finite subgroup as an abstract group together with its character.
#[derive(Debug, Clone)]
pub struct Realized {
    pub group: FiniteGroup<usize>,
    pub traces: Vec<CycNumber>,
    pub labels: Vec<String>,
}

/// Materialize `P` and evaluate the character of the defining representation.
pub fn realize(ctx: &FusionContext, p: &SSubgroup) -> Result<Realized, FusionError> {
    let m = ctx.effective_modulus().max(p.min_level().unwrap_or(0) + 2);
    match p.ambient() {
        Ambient::Su2 => {
            let g = p.materialize::<SElement>()?;
            let traces = g
                .elements()
                .iter()
                .map(|x| Ok(s_to_quaternion(*x, m)?.trace()))
                .collect::<Result<_, QuatError>>()?;
            let labels = g.elements().iter().map(ToString::to_string).collect();
            Ok(Realized {
                group: g.abstract_copy(),
                traces,
                labels,
            })
        }
        Ambient::So3 => {
            let g = p.materialize::<SbarElement>()?;
            let traces = g
                .elements()
                .iter()
                .map(|x| Ok(sbar_to_rotation(*x, m)?.rotation_trace()))
                .collect::<Result<_, QuatError>>()?;
            let labels = g.elements().iter().map(ToString::to_string).collect();
            Ok(Realized {
                group: g.abstract_copy(),
                traces,
                labels,
            })
        }
    }
}

/// `P^• = P · I(P^[1])₀`.
///
/// `P^[1]` is the subgroup generated by squares. The Weyl group fixes it
/// pointwise exactly when it consists of elements of order at most 2; then
/// the fixed torus `I` is finite and `I₀ = 1`. Otherwise `I = T`.
pub fn bullet(p: &SSubgroup) -> SSubgroup {
    let squares = squares_subgroup(p);
    let weyl_fixes_squares = squares.is_subgroup_of(&SSubgroup::finite_torus(p.ambient(), 1));
    if weyl_fixes_squares {
        return *p;
    }
    match p.extension() {
        None => SSubgroup::torus(p.ambient(), TorusLevel::Infinite),
        Some(_) => SSubgroup::whole(p.ambient()),
    }
}

/// Whether the traces agree under `φ`.
fn preserves_character<'a>(a: &'a Realized, b: &'a Realized) -> impl Fn(usize, usize) -> bool + 'a {
    move |x, y| a.traces[x] == b.traces[y]
}

/// Whether `P` and `P'` are conjugate in the ambient Lie group.
pub fn is_f_conjugate(
    ctx: &FusionContext,
    p: &SSubgroup,
    q: &SSubgroup,
) -> Result<bool, FusionError> {
    if p.ambient() != q.ambient() {
        return Ok(false);
    }
    match (p.is_infinite(), q.is_infinite()) {
        (true, true) => return Ok(p.extension().is_some() == q.extension().is_some()),
        (false, false) => {}
        _ => return Ok(false),
    }
    if p == q {
        return Ok(true);
    }
    if p.order() != q.order() {
        return Ok(false);
    }
    let (a, b) = (realize(ctx, p)?, realize(ctx, q)?);
    let compat = preserves_character(&a, &b);
    Ok(!isomorphisms_with(&a.group, &b.group, &compat, Some(1)).is_empty())
}

/// `Aut_F(P)` and `Out_F(P) = Aut_F(P)/Aut_P(P)`.
#[derive(Debug, Clone)]
pub struct AutF {
    /// The automorphisms as permutations of the realized elements; absent
    /// for infinite `P`.
    pub aut: Option<FiniteGroup<Perm>>,
    /// `None` when `Aut_F(P)` is infinite.
    pub aut_order: Option<u64>,
    pub out: FiniteGroup<usize>,
}

pub fn aut_f(ctx: &FusionContext, p: &SSubgroup) -> Result<AutF, FusionError> {
    if p.is_infinite() {
        // N_G(T)/C_G(T) = W acts on T by inversion; for S the normalizer in the
        // ambient group is S itself, so every automorphism is inner.
        let out_order = if p.is_torus_subgroup() {
            ctx.weyl_order()
        } else {
            1
        };
        let out = crate::fingroup::library::cyclic(out_order as usize).abstract_copy();
        let aut_order = p.is_torus_subgroup().then_some(out_order);
        return Ok(AutF {
            aut: None,
            aut_order,
            out,
        });
    }
    let r = realize(ctx, p)?;
    let compat = preserves_character(&r, &r);
    let perms = isomorphisms_with(&r.group, &r.group, &compat, None)
        .into_iter()
        .map(|m| Perm(m.images.into_iter().map(|x| x as u32).collect()))
        .collect();
    let aut = FiniteGroup::from_elements(perms)?;
    let inner = inner_automorphisms(&r.group, &aut);
    let out = aut.quotient(&inner)?.abstract_copy();
    Ok(AutF {
        aut_order: Some(aut.order() as u64),
        aut: Some(aut),
        out,
    })
}

/// Representatives of the enumerated classes F-conjugate to `P`.
pub fn f_conjugates(ctx: &FusionContext, p: &SSubgroup) -> Result<Vec<SSubgroup>, FusionError> {
    let mut out = Vec::new();
    for q in ctx.classes() {
        if is_f_conjugate(ctx, p, &q)? {
            out.push(q);
        }
    }
    Ok(out)
}

/// Every F-conjugate of `P` contains its S-centralizer.
pub fn is_centric(ctx: &FusionContext, p: &SSubgroup) -> Result<bool, FusionError> {
    let mut conjugates = f_conjugates(ctx, &p.class_representative())?;
    if !conjugates.contains(p) {
        conjugates.push(*p);
    }
    Ok(conjugates
        .iter()
        .all(|q| s_centralizer(q).is_subgroup_of(q)))
}

/// `O₂(Out_F(P))` is trivial.
pub fn is_radical(ctx: &FusionContext, p: &SSubgroup) -> Result<bool, FusionError> {
    let out = aut_f(ctx, p)?.out;
    Ok(o2_radical(&out)?.order() == 1)
}

/// One row of the classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FusionClassReport {
    pub subgroup: SSubgroup,
    pub name: String,
    pub order: Option<u64>,
    pub is_centric: bool,
    pub is_radical: bool,
    pub bullet: SSubgroup,
    pub aut_f_order: Option<u64>,
    pub out_f_order: u64,
    pub out_f_iso_tag: String,
}

impl FusionClassReport {
    pub fn is_centric_radical(&self) -> bool {
        self.is_centric && self.is_radical
    }
}

pub fn report_for(ctx: &FusionContext, p: &SSubgroup) -> Result<FusionClassReport, FusionError> {
    let aut = aut_f(ctx, p)?;
    let radical = o2_radical(&aut.out)?.order() == 1;
    Ok(FusionClassReport {
        subgroup: *p,
        name: p.name(),
        order: p.order(),
        is_centric: is_centric(ctx, p)?,
        is_radical: radical,
        bullet: bullet(p),
        aut_f_order: aut.aut_order,
        out_f_order: aut.out.order() as u64,
        out_f_iso_tag: identify(&aut.out),
    })
}

/// Reports for every enumerated class, in enumeration order.
pub fn classify_centric_radical(
    ctx: &FusionContext,
) -> Result<Vec<FusionClassReport>, FusionError> {
    ctx.classes().iter().map(|p| report_for(ctx, p)).collect()
}

/// The centric-radical subgroups expected for each ambient group: the
/// quaternion group and S for SU(2), the Klein group and S̄ for SO(3).
pub fn expected_centric_radicals(ambient: Ambient) -> Vec<SSubgroup> {
    let small = match ambient {
        Ambient::Su2 => SSubgroup::finite_ext(ambient, 2),
        Ambient::So3 => SSubgroup::finite_ext(ambient, 1),
    };
    vec![small, SSubgroup::whole(ambient)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::DyadicAngle;

    const SU: Ambient = Ambient::Su2;
    const SO: Ambient = Ambient::So3;

    fn su(level: u32) -> FusionContext {
        FusionContext::new(SU, level)
    }

    #[test]
    fn bullet_examples() {
        let z8 = SSubgroup::finite_torus(SU, 3);
        assert_eq!(bullet(&z8), SSubgroup::torus(SU, TorusLevel::Infinite));
        assert_eq!(bullet(&SSubgroup::trivial(SU)), SSubgroup::trivial(SU));
        let q8 = SSubgroup::finite_ext(SU, 2);
        assert_eq!(bullet(&q8), q8);
        assert_eq!(bullet(&SSubgroup::finite_ext(SU, 3)), SSubgroup::whole(SU));
    }

    #[test]
    fn f_conjugacy_examples() {
        let ctx = su(3);
        let z4_torus = SSubgroup::finite_torus(SU, 2);
        let z4_i = SSubgroup::finite_ext(SU, 1);
        assert!(is_f_conjugate(&ctx, &z4_torus, &z4_i).unwrap());
        assert!(is_f_conjugate(&ctx, &z4_i, &z4_i).unwrap());
        assert!(!is_f_conjugate(&ctx, &SSubgroup::finite_torus(SU, 1), &z4_i).unwrap());
        let t = SSubgroup::torus(SU, TorusLevel::Infinite);
        assert!(!is_f_conjugate(&ctx, &t, &SSubgroup::whole(SU)).unwrap());
        assert!(!is_f_conjugate(&ctx, &t, &z4_i).unwrap());
    }

    #[test]
    fn so3_involutions_are_fused() {
        let ctx = FusionContext::new(SO, 3);
        let central = SSubgroup::finite_torus(SO, 1);
        let reflection = SSubgroup::ext(SO, TorusLevel::Finite(0), DyadicAngle::ZERO);
        assert!(is_f_conjugate(&ctx, &central, &reflection).unwrap());
    }

    #[test]
    fn automizers() {
        let ctx = su(3);
        let q8 = aut_f(&ctx, &SSubgroup::finite_ext(SU, 2)).unwrap();
        assert_eq!(q8.aut_order, Some(24));
        assert_eq!(identify(&q8.out), "Sym(3)");
        let t = aut_f(&ctx, &SSubgroup::torus(SU, TorusLevel::Infinite)).unwrap();
        assert_eq!(t.out.order(), 2);
        let v = aut_f(&FusionContext::new(SO, 3), &SSubgroup::finite_ext(SO, 1)).unwrap();
        assert_eq!(v.aut_order, Some(6));
        assert_eq!(v.out.order(), 6);
    }

    #[test]
    fn centric_and_radical_examples() {
        let ctx = su(3);
        assert!(is_centric(&ctx, &SSubgroup::finite_ext(SU, 2)).unwrap());
        assert!(!is_centric(&ctx, &SSubgroup::finite_torus(SU, 3)).unwrap());
        assert!(!is_centric(&ctx, &SSubgroup::finite_ext(SU, 1)).unwrap());
        assert!(!is_centric(&ctx, &SSubgroup::trivial(SU)).unwrap());
        assert!(is_radical(&ctx, &SSubgroup::whole(SU)).unwrap());
        assert!(!is_radical(&ctx, &SSubgroup::finite_ext(SU, 1)).unwrap());
        let so = FusionContext::new(SO, 3);
        assert!(!is_radical(&so, &SSubgroup::finite_ext(SO, 2)).unwrap());
    }

    #[test]
    fn classification_matches_expectation() {
        for ambient in [SU, SO] {
            let reports = classify_centric_radical(&FusionContext::new(ambient, 4)).unwrap();
            let cr: Vec<SSubgroup> = reports
                .iter()
                .filter(|r| r.is_centric_radical())
                .map(|r| r.subgroup)
                .collect();
            assert_eq!(cr, expected_centric_radicals(ambient));
        }
    }
}
