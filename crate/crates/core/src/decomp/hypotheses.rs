//! Centralizer hypotheses for the transporter category: for every
//! centric-radical `P`, `C_G(P) = Z(P)` and it is a finite 2-group.

use serde::Serialize;

use super::model::{ambient_centralizer, embed_generators, embed_subgroup, same_set, Carrier};
use super::DecompError;
use crate::fingroup::{is_p_group, FiniteGroup, GroupElement};
use crate::fusion::FusionContext;
use crate::quat::{commutant_class, CommutantClass, CycQuaternion, ProjQuaternion};
use crate::storal::{s_centralizer, Ambient, SSubgroup, TorusLevel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub ambient: Ambient,
    pub subgroup: String,
    /// `None` when the centralizer is infinite.
    pub centralizer_order: Option<usize>,
    pub center_order: usize,
    pub centralizer_is_center: bool,
    pub finite_2_group: bool,
    /// The symbolic centralizer in `S` agrees with the computed one.
    pub symbolic_agrees: bool,
    pub method: String,
    pub detail: Option<String>,
}

impl HypothesisCheck {
    pub fn pass(&self) -> bool {
        self.centralizer_is_center && self.finite_2_group && self.symbolic_agrees
    }
}

/// SU(2): the commutant of the generators; {±I} when two of them fail to commute.
fn su2_centralizer(gens: &[CycQuaternion]) -> Option<Vec<CycQuaternion>> {
    match commutant_class(gens) {
        CommutantClass::Generic => Some(vec![CycQuaternion::identity(), CycQuaternion::minus_identity()]),
        CommutantClass::Central | CommutantClass::AxisLine(_) => None,
    }
}

/// SO(3): the centralizer of the Klein subgroup `⟨(1/2, 0), (θ, 1)⟩ ≤ P` from
/// signed intertwiners on lifts, filtered by the remaining generators.
fn so3_centralizer(p: &SSubgroup, gens: &[ProjQuaternion], m: u32) -> Option<Vec<ProjQuaternion>> {
    let theta = p.extension()?;
    let klein = SSubgroup::ext(Ambient::So3, TorusLevel::Finite(1), theta);
    if !klein.is_subgroup_of(p) {
        return None;
    }
    let klein_gens = embed_generators::<ProjQuaternion>(&klein, m).ok()?;
    let candidates = ambient_centralizer(&klein_gens).ok()?;
    Some(
        candidates
            .into_iter()
            .filter(|c| gens.iter().all(|x| c.op(x) == x.op(c)))
            .collect(),
    )
}

fn check<E: Carrier>(
    ctx: &FusionContext,
    p: &SSubgroup,
    centralizer: impl Fn(&[E]) -> Option<Vec<E>>,
    method: &str,
) -> Result<HypothesisCheck, DecompError> {
    let m = ctx.effective_modulus();
    let finite = if p.is_infinite() { p.truncate(ctx.level) } else { *p };
    let gens = embed_generators::<E>(&finite, m)?;
    let elements = embed_subgroup::<E>(&finite, m)?;
    let group = FiniteGroup::from_elements(elements)?;
    let center: Vec<E> = group
        .center()
        .members()
        .iter()
        .map(|&i| group.element(i).clone())
        .collect();
    let c = centralizer(&gens);
    let symbolic = s_centralizer(p);
    let symbolic_elements = embed_subgroup::<E>(&symbolic.truncate(ctx.level), m)?;
    let symbolic_agrees = !symbolic.is_infinite()
        && c.as_ref().is_some_and(|c| same_set(c, &symbolic_elements));
    Ok(HypothesisCheck {
        ambient: ctx.ambient,
        subgroup: p.name(),
        centralizer_order: c.as_ref().map(Vec::len),
        center_order: center.len(),
        centralizer_is_center: c.as_ref().is_some_and(|c| same_set(c, &center)),
        finite_2_group: c.as_ref().is_some_and(|c| is_p_group(c.len(), 2)),
        symbolic_agrees,
        method: method.into(),
        detail: None,
    })
}

fn failed(ctx: &FusionContext, p: &SSubgroup, e: DecompError) -> HypothesisCheck {
    HypothesisCheck {
        ambient: ctx.ambient,
        subgroup: p.name(),
        centralizer_order: None,
        center_order: 0,
        centralizer_is_center: false,
        finite_2_group: false,
        symbolic_agrees: false,
        method: "none".into(),
        detail: Some(e.to_string()),
    }
}

/// Check the hypotheses for each subgroup in `subgroups` (infinite ones
/// through their truncation at `ctx.level`).
pub fn verify_hypotheses(ctx: &FusionContext, subgroups: &[SSubgroup]) -> Vec<HypothesisCheck> {
    subgroups
        .iter()
        .map(|p| {
            let result = match ctx.ambient {
                Ambient::Su2 => check::<CycQuaternion>(ctx, p, su2_centralizer, "commutant"),
                Ambient::So3 => check::<ProjQuaternion>(
                    ctx,
                    p,
                    |gens| so3_centralizer(p, gens, ctx.effective_modulus()),
                    "signed intertwiners on lifts of the Klein subgroup",
                ),
            };
            result.unwrap_or_else(|e| failed(ctx, p, e))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::expected_centric_radicals;

    #[test]
    fn centric_radicals_satisfy_the_hypotheses() {
        for ambient in [Ambient::Su2, Ambient::So3] {
            let ctx = FusionContext::new(ambient, 4);
            let checks = verify_hypotheses(&ctx, &expected_centric_radicals(ambient));
            assert_eq!(checks.len(), 2);
            for c in &checks {
                assert!(c.pass(), "{c:?}");
            }
        }
        let ctx = FusionContext::new(Ambient::So3, 4);
        let v = verify_hypotheses(&ctx, &expected_centric_radicals(Ambient::So3));
        assert_eq!(v[0].centralizer_order, Some(4));
        assert_eq!(v[1].centralizer_order, Some(2));
    }

    #[test]
    fn non_centric_subgroup_fails() {
        let ctx = FusionContext::new(Ambient::Su2, 4);
        let z4 = SSubgroup::finite_torus(Ambient::Su2, 2);
        let checks = verify_hypotheses(&ctx, &[z4]);
        assert!(!checks[0].pass());
        assert_eq!(checks[0].centralizer_order, None);
    }
}
