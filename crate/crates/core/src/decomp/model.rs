//! Transporter categories on the centric-radical subgroups.
//!
//! Objects are the small subgroup (Q₈, resp. V) at height 0 and the
//! truncation `S_n` (resp. `S̄_n`) at height 1. Morphisms `P → P'` are the
//! elements `g` of the universe `U = S_n · N(P_small)` with `g P g⁻¹ ≤ P'`.

use std::collections::HashSet;
use std::fmt::Display;

use super::category::{CatObject, FiniteCategory, GroupArrow};
use super::DecompError;
use crate::fingroup::{all_isomorphisms, FiniteGroup, GroupElement, CLOSURE_CAP};
use crate::fusion::FusionContext;
use crate::quat::linear::{intertwiner_space, unit_on_line};
use crate::quat::{
    binary_octahedral_generators, finite_closure, s_to_quaternion, sbar_to_rotation,
    CycQuaternion, ProjQuaternion, QuatError, SElement, SbarElement,
};
use crate::storal::{AmbientElement, Ambient, SSubgroup};

/// Concrete matrix carriers for the two ambient groups.
pub trait Carrier: GroupElement + Display {
    type Symbolic: AmbientElement;
    const AMBIENT: Ambient;
    /// Whether the carrier is a quotient by `{±I}`.
    const PROJECTIVE: bool;

    fn embed(x: Self::Symbolic, modulus: u32) -> Result<Self, QuatError>;
    fn lift(&self) -> CycQuaternion;
    fn from_lift(q: CycQuaternion) -> Self;
}

impl Carrier for CycQuaternion {
    type Symbolic = SElement;
    const AMBIENT: Ambient = Ambient::Su2;
    const PROJECTIVE: bool = false;

    fn embed(x: SElement, modulus: u32) -> Result<Self, QuatError> {
        s_to_quaternion(x, modulus)
    }
    fn lift(&self) -> CycQuaternion {
        self.clone()
    }
    fn from_lift(q: CycQuaternion) -> Self {
        q
    }
}

impl Carrier for ProjQuaternion {
    type Symbolic = SbarElement;
    const AMBIENT: Ambient = Ambient::So3;
    const PROJECTIVE: bool = true;

    fn embed(x: SbarElement, modulus: u32) -> Result<Self, QuatError> {
        sbar_to_rotation(x, modulus)
    }
    fn lift(&self) -> CycQuaternion {
        ProjQuaternion::lift(self).clone()
    }
    fn from_lift(q: CycQuaternion) -> Self {
        ProjQuaternion::new(q)
    }
}

/// The elements of a finite symbolic subgroup, in the carrier.
pub fn embed_subgroup<E: Carrier>(p: &SSubgroup, modulus: u32) -> Result<Vec<E>, DecompError> {
    let g = p.materialize::<E::Symbolic>()?;
    Ok(g.elements()
        .iter()
        .map(|x| E::embed(*x, modulus))
        .collect::<Result<_, _>>()?)
}

pub fn embed_generators<E: Carrier>(p: &SSubgroup, modulus: u32) -> Result<Vec<E>, DecompError> {
    Ok(p.generators::<E::Symbolic>()?
        .into_iter()
        .map(|x| E::embed(x, modulus))
        .collect::<Result<_, _>>()?)
}

/// Ambient elements `g` with `g x g⁻¹ = y` for every pair, assuming the
/// solution set is finite.
///
/// In SO(3) the equations hold up to sign on lifts, so every sign pattern is
/// solved separately.
pub fn realizing_elements<E: Carrier>(pairs: &[(E, E)]) -> Result<Vec<E>, DecompError> {
    let patterns: usize = if E::PROJECTIVE { 1 << pairs.len() } else { 1 };
    let mut out: Vec<E> = Vec::new();
    for pattern in 0..patterns {
        let lifted: Vec<(CycQuaternion, CycQuaternion)> = pairs
            .iter()
            .enumerate()
            .map(|(k, (x, y))| {
                let y = y.lift();
                let y = if pattern >> k & 1 == 1 { y.neg() } else { y };
                (x.lift(), y)
            })
            .collect();
        let space = intertwiner_space(&lifted);
        match space.len() {
            0 => {}
            1 => {
                let g = unit_on_line(&space[0])
                    .ok_or_else(|| DecompError::Hypothesis("intertwiner has no unit multiple".into()))?;
                for h in [g.clone(), g.neg()] {
                    let e = E::from_lift(h);
                    if !out.contains(&e) {
                        out.push(e);
                    }
                }
            }
            d => {
                return Err(DecompError::Hypothesis(format!(
                    "solution space of dimension {d} is not finite"
                )))
            }
        }
    }
    Ok(out)
}

/// `N_G(P)` for a finite `P`: every automorphism of `P` realized by conjugation.
pub fn ambient_normalizer<E: Carrier>(p: &FiniteGroup<E>) -> Result<Vec<E>, DecompError> {
    let gens = p.generators().to_vec();
    let mut out: Vec<E> = Vec::new();
    for f in all_isomorphisms(p, p, None) {
        let pairs: Vec<(E, E)> = gens
            .iter()
            .map(|&x| (p.element(x).clone(), p.element(f.apply(x)).clone()))
            .collect();
        for g in realizing_elements(&pairs)? {
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

/// `C_G(P)` for a finite `P` with finite centralizer.
pub fn ambient_centralizer<E: Carrier>(gens: &[E]) -> Result<Vec<E>, DecompError> {
    let pairs: Vec<(E, E)> = gens.iter().map(|x| (x.clone(), x.clone())).collect();
    realizing_elements(&pairs)
}

/// The reference closure `⟨Q, ω, τ⟩` (binary octahedral group), or its image in SO(3).
pub fn octahedral_closure<E: Carrier>() -> Result<FiniteGroup<E>, DecompError> {
    let gens: Vec<E> = binary_octahedral_generators().into_iter().map(E::from_lift).collect();
    let identity = E::from_lift(CycQuaternion::identity());
    let g = FiniteGroup::generate(identity, &gens, CLOSURE_CAP)
        .map_err(|_| QuatError::NotFinite { cap: CLOSURE_CAP })?;
    Ok(g)
}

/// Check that `elements` is the binary octahedral group inside SU(2).
pub fn is_binary_octahedral(elements: &[CycQuaternion]) -> bool {
    let o48 = match finite_closure(&binary_octahedral_generators(), CLOSURE_CAP) {
        Ok(g) => g,
        Err(_) => return false,
    };
    same_set(o48.elements(), elements)
}

pub fn same_set<E: GroupElement>(a: &[E], b: &[E]) -> bool {
    let sa: HashSet<&E> = a.iter().collect();
    let sb: HashSet<&E> = b.iter().collect();
    sa.len() == a.len() && sa == sb
}

/// Index of the small object and of the big object.
pub const SMALL: usize = 0;
pub const BIG: usize = 1;

/// The centric-radical transporter category at a truncation level, with the
/// subgroups it was built from.
#[derive(Clone, Debug)]
pub struct TransporterModel<E> {
    pub ambient: Ambient,
    pub level: u32,
    pub small_subgroup: SSubgroup,
    pub big_subgroup: SSubgroup,
    /// Elements of the small subgroup.
    pub small: Vec<E>,
    /// Elements of the truncation `S_n`.
    pub big: Vec<E>,
    /// `N_G(P_small)`, computed from intertwiners.
    pub small_normalizer: Vec<E>,
    pub category: FiniteCategory<GroupArrow<E>>,
}

fn conjugates_into<E: Carrier>(g: &E, gens: &[E], target: &HashSet<E>) -> bool {
    let g_inv = g.inv();
    gens.iter().all(|x| target.contains(&g.op(x).op(&g_inv)))
}

/// Build the transporter category on the centric-radical classes `classes`:
/// one finite subgroup and the whole group.
pub fn build_transporter<E: Carrier>(
    ctx: &FusionContext,
    classes: &[SSubgroup],
) -> Result<TransporterModel<E>, DecompError> {
    if ctx.ambient != E::AMBIENT {
        return Err(DecompError::Config("carrier does not match the ambient group".into()));
    }
    let m = ctx.effective_modulus();
    let (small_subgroup, whole) = match classes {
        [a, b] if !a.is_infinite() && *b == SSubgroup::whole(ctx.ambient) => (*a, *b),
        _ => {
            return Err(DecompError::Config(format!(
                "expected one finite centric-radical class and the whole group, got {}",
                classes.iter().map(|p| p.name()).collect::<Vec<_>>().join(", ")
            )))
        }
    };
    let big_subgroup = whole.truncate(ctx.level);
    if ctx.level < small_subgroup.min_level().unwrap_or(0) + 1 {
        return Err(DecompError::Config(format!(
            "level {} is too small to contain the normalizer of {}",
            ctx.level,
            small_subgroup.name()
        )));
    }
    let small = embed_subgroup::<E>(&small_subgroup, m)?;
    let big = embed_subgroup::<E>(&big_subgroup, m)?;
    let small_group = FiniteGroup::from_elements(small.clone())?;
    let small_normalizer = ambient_normalizer(&small_group)?;

    // U = S_n · N, deduplicated, in a deterministic order
    let identity = E::from_lift(CycQuaternion::identity());
    let mut universe: Vec<E> = vec![identity.clone()];
    let mut seen: HashSet<E> = HashSet::from([identity.clone()]);
    for s in &big {
        for n in &small_normalizer {
            let u = s.op(n);
            if seen.insert(u.clone()) {
                universe.push(u);
            }
        }
    }
    let small_gens = embed_generators::<E>(&small_subgroup, m)?;
    let big_gens = embed_generators::<E>(&big_subgroup, m)?;
    let small_set: HashSet<E> = small.iter().cloned().collect();
    let big_set: HashSet<E> = big.iter().cloned().collect();

    let objects = vec![
        CatObject {
            name: small_subgroup.name(),
            height: 0,
        },
        CatObject {
            name: whole.name(),
            height: 1,
        },
    ];
    let mut category = FiniteCategory::new(
        objects,
        vec![GroupArrow(identity.clone()), GroupArrow(identity.clone())],
    );
    let sources = [(&small_gens, SMALL), (&big_gens, BIG)];
    let targets = [(&small_set, SMALL), (&big_set, BIG)];
    for (gens, x) in sources {
        for (target, y) in targets {
            let mut hom: Vec<GroupArrow<E>> = vec![];
            if x == y {
                hom.push(GroupArrow(identity.clone()));
            }
            hom.extend(
                universe
                    .iter()
                    .filter(|g| !(x == y && **g == identity))
                    .filter(|g| conjugates_into(*g, gens, target))
                    .cloned()
                    .map(GroupArrow),
            );
            category.set_hom(x, y, hom);
        }
    }
    Ok(TransporterModel {
        ambient: ctx.ambient,
        level: ctx.level,
        small_subgroup,
        big_subgroup,
        small,
        big,
        small_normalizer,
        category,
    })
}

impl<E: Carrier> TransporterModel<E> {
    pub fn aut(&self, x: usize) -> Vec<E> {
        self.category.hom(x, x).iter().map(|a| a.0.clone()).collect()
    }

    /// `N(P_small) ∩ S_n`, as a list of carrier elements.
    pub fn chain_normalizer(&self) -> Vec<E> {
        let big: HashSet<&E> = self.big.iter().collect();
        self.small_normalizer
            .iter()
            .filter(|g| big.contains(g))
            .cloned()
            .collect()
    }
}
