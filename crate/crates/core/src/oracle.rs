//! Brute-force cross-checks of the symbolic engine on finite truncations.
//!
//! Every suite compares a symbolic answer with one computed from explicit
//! multiplication tables or explicit matrices, exhaustively over `S_n` for
//! `n` up to the requested level.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::decomp::diagram::decompose_with;
use crate::decomp::model::{octahedral_closure, Carrier};
use crate::fingroup::{all_isomorphisms, FiniteGroup, GroupElement, Subgroup};
use crate::fusion::{bullet, is_f_conjugate, FusionContext};
use crate::quat::linear::{intertwiner_space, rank};
use crate::quat::{commutant_class, CycNumber, CycQuaternion, ProjQuaternion, SElement, ToralElement};
use crate::storal::{
    enumerate_subgroup_classes, s_centralizer, s_normalizer, so3_preimage, so3_quotient,
    squares_subgroup, subgroup_in, truncation, Ambient, SSubgroup, TorusLevel,
};

/// Largest level at which the exhaustive suites run.
pub const EXHAUSTIVE_MAX_LEVEL: u32 = 5;
/// Largest level for the pairwise intertwiner suite.
const INTERTWINER_MAX_LEVEL: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub status: Status,
    /// Number of individual comparisons made.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl SuiteResult {
    fn skipped(name: &str, why: String) -> Self {
        SuiteResult {
            name: name.into(),
            status: Status::Skipped,
            checked: 0,
            detail: Some(why),
        }
    }

    fn from_outcome(name: &str, outcome: Result<usize, String>) -> Self {
        match outcome {
            Ok(checked) => SuiteResult {
                name: name.into(),
                status: Status::Pass,
                checked,
                detail: None,
            },
            Err(detail) => SuiteResult {
                name: name.into(),
                status: Status::Fail,
                checked: 0,
                detail: Some(detail),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub ambient: Ambient,
    pub level: u32,
    pub suites: Vec<SuiteResult>,
}

impl OracleReport {
    pub fn all_pass(&self) -> bool {
        self.suites.iter().all(|s| s.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&SuiteResult> {
        self.suites.iter().filter(|s| s.status == Status::Fail).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("oracle suites for {} up to level {}\n", self.ambient, self.level);
        for r in &self.suites {
            let tag = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(s, "[{tag}] {} ({} checks)", r.name, r.checked);
            if let Some(d) = &r.detail {
                let _ = write!(s, ": {d}");
            }
            s.push('\n');
        }
        s
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn elements_of<E: Clone + Eq + std::hash::Hash>(g: &FiniteGroup<E>, h: &Subgroup) -> Vec<E> {
    h.members().iter().map(|&i| g.element(i).clone()).collect()
}

fn recognize_in<E: crate::storal::AmbientElement>(
    g: &FiniteGroup<E>,
    h: &Subgroup,
) -> Result<SSubgroup, String> {
    SSubgroup::recognize(&elements_of(g, h)).ok_or_else(|| {
        format!("subgroup of order {} is not of torus or extension type", h.order())
    })
}

/// Group axioms on the multiplication tables of the truncations.
fn suite_axioms<E: Carrier>(level: u32) -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=level {
        let g = truncation::<E::Symbolic>(n).map_err(|e| e.to_string())?;
        g.check_axioms().map_err(|e| format!("S_{n}: {e}"))?;
        ensure(g.order() == 1 << (n + 1), || format!("S_{n} has order {}", g.order()))?;
        checked += 1;
    }
    Ok(checked)
}

/// The matrix representation is an injective homomorphism on every truncation.
fn suite_representation<E: Carrier>(level: u32) -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=level {
        let g = truncation::<E::Symbolic>(n).map_err(|e| e.to_string())?;
        let m = n + 2;
        let images: Vec<E> = g
            .elements()
            .iter()
            .map(|x| E::embed(*x, m))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let distinct: HashSet<&E> = images.iter().collect();
        ensure(distinct.len() == images.len(), || format!("S_{n}: representation is not injective"))?;
        for x in 0..g.order() {
            for y in 0..g.order() {
                ensure(images[g.mul(x, y)] == images[x].op(&images[y]), || {
                    format!("S_{n}: ρ(xy) ≠ ρ(x)ρ(y) at {:?} · {:?}", g.element(x), g.element(y))
                })?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Every subgroup of `S_n` is `S_{n+1}`-conjugate to exactly one enumerated class.
fn suite_enumeration<E: Carrier>(ambient: Ambient, level: u32) -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=level {
        let g = truncation::<E::Symbolic>(n).map_err(|e| e.to_string())?;
        let big = truncation::<E::Symbolic>(n + 1).map_err(|e| e.to_string())?;
        let classes: Vec<SSubgroup> = enumerate_subgroup_classes(ambient, n)
            .into_iter()
            .filter(|p| !p.is_infinite())
            .collect();
        let class_sets: Vec<Subgroup> = classes.iter().map(|p| subgroup_in(&big, p)).collect();
        let mut hit = vec![false; classes.len()];
        for h in g.all_subgroups() {
            let p = recognize_in(&g, &h)?;
            let as_big = big
                .subset_of(&elements_of(&g, &h))
                .map_err(|e| e.to_string())?;
            let matches: Vec<usize> = (0..classes.len())
                .filter(|&c| {
                    class_sets[c].order() == as_big.order()
                        && (0..big.order()).any(|x| big.conjugate(x, &as_big) == class_sets[c])
                })
                .collect();
            ensure(matches.len() == 1, || {
                format!("S_{n}: {p} is conjugate to {} enumerated classes", matches.len())
            })?;
            ensure(classes[matches[0]] == p.class_representative(), || {
                format!("S_{n}: {p} has representative {} but is conjugate to {}", p.class_representative(), classes[matches[0]])
            })?;
            hit[matches[0]] = true;
            checked += 1;
        }
        ensure(hit.iter().all(|&h| h), || format!("S_{n}: an enumerated class does not occur"))?;
    }
    Ok(checked)
}

/// Symbolic centralizers and normalizers against brute force in `S_n`.
fn suite_centralizers<E: Carrier>(level: u32) -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=level {
        let g = truncation::<E::Symbolic>(n).map_err(|e| e.to_string())?;
        for h in g.all_subgroups() {
            let p = recognize_in(&g, &h)?;
            let c = g.centralizer(&h).map_err(|e| e.to_string())?;
            let nz = g.normalizer(&h).map_err(|e| e.to_string())?;
            ensure(c == subgroup_in(&g, &s_centralizer(&p)), || {
                format!("S_{n}: centralizer of {p} is {} but brute force has order {}", s_centralizer(&p), c.order())
            })?;
            ensure(nz == subgroup_in(&g, &s_normalizer(&p)), || {
                format!("S_{n}: normalizer of {p} is {} but brute force has order {}", s_normalizer(&p), nz.order())
            })?;
            checked += 2;
        }
    }
    Ok(checked)
}

/// Squares generate the symbolic `P^[1]` and lie in the torus.
fn suite_squares<E: Carrier>(level: u32) -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=level {
        let g = truncation::<E::Symbolic>(n).map_err(|e| e.to_string())?;
        for h in g.all_subgroups() {
            let p = recognize_in(&g, &h)?;
            let squares: Vec<usize> = h.members().iter().map(|&x| g.mul(x, x)).collect();
            ensure(squares.iter().all(|&s| !g.element(s).flip()), || {
                format!("S_{n}: a square in {p} leaves the torus")
            })?;
            let generated = g.subgroup_generated(&squares);
            ensure(generated == subgroup_in(&g, &squares_subgroup(&p)), || {
                format!("S_{n}: squares of {p} generate order {}, symbolic {}", generated.order(), squares_subgroup(&p))
            })?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// Passing to SO(3) commutes with normalizers and inverts the preimage.
fn suite_quotient(level: u32) -> Result<usize, String> {
    let mut checked = 0;
    let mut classes = enumerate_subgroup_classes(Ambient::Su2, level + 1);
    classes.retain(|p| p.contains(&SElement::MINUS_ONE));
    for p in classes {
        let q = so3_quotient(&p).map_err(|e| e.to_string())?;
        let nq = so3_quotient(&s_normalizer(&p)).map_err(|e| e.to_string())?;
        ensure(nq == s_normalizer(&q), || format!("N({p}) maps to {nq}, not N({q})"))?;
        ensure(so3_preimage(&q).map_err(|e| e.to_string())? == p, || format!("{p} is not the preimage of its image"))?;
        if !p.is_infinite() {
            let elements: HashSet<_> = p
                .materialize::<SElement>()
                .map_err(|e| e.to_string())?
                .elements()
                .iter()
                .map(|x| x.to_sbar())
                .collect();
            let image = q.materialize::<crate::quat::SbarElement>().map_err(|e| e.to_string())?;
            let image: HashSet<_> = image.elements().iter().copied().collect();
            ensure(elements == image, || format!("image of {p} is not {q} elementwise"))?;
        }
        checked += 1;
    }
    Ok(checked)
}

/// Idempotence, extensivity and monotonicity of the bullet functor, plus
/// its fixed points and the torus criterion in SU(2).
fn suite_bullet(ambient: Ambient, level: u32) -> Result<usize, String> {
    let classes = enumerate_subgroup_classes(ambient, level);
    let mut checked = 0;
    for p in &classes {
        let b = bullet(p);
        ensure(bullet(&b) == b, || format!("bullet is not idempotent on {p}"))?;
        ensure(p.is_subgroup_of(&b), || format!("{p} is not contained in its bullet {b}"))?;
        for q in &classes {
            if p.is_subgroup_of(q) {
                ensure(b.is_subgroup_of(&bullet(q)), || format!("bullet is not monotone on {p} ≤ {q}"))?;
                checked += 1;
            }
        }
        if ambient == Ambient::Su2 {
            let torus = SSubgroup::torus(ambient, TorusLevel::Infinite);
            if SSubgroup::finite_torus(ambient, 3).is_subgroup_of(&p.torus_part()) {
                ensure(torus.is_subgroup_of(&b), || format!("{p} contains Z/8 but its bullet {b} misses T"))?;
            }
        }
        checked += 2;
    }
    let fixed: Vec<SSubgroup> = match ambient {
        Ambient::Su2 => vec![SSubgroup::finite_ext(ambient, 2), SSubgroup::finite_ext(ambient, 1)],
        Ambient::So3 => vec![SSubgroup::finite_ext(ambient, 1)],
    };
    for p in fixed {
        ensure(bullet(&p) == p, || format!("{p} is not a bullet fixed point"))?;
        checked += 1;
    }
    Ok(checked)
}

fn same_elements<E: GroupElement>(a: &[E], b: &[E]) -> bool {
    let sa: HashSet<&E> = a.iter().collect();
    let sb: HashSet<&E> = b.iter().collect();
    sa == sb
}

fn conjugate_set<E: GroupElement>(g: &E, xs: &[E]) -> Vec<E> {
    let gi = g.inv();
    xs.iter().map(|x| g.op(x).op(&gi)).collect()
}

/// Character-criterion F-conjugacy against explicit conjugation by the
/// octahedral group, on class representatives inside its 2-Sylow.
fn suite_character_octahedral<E: Carrier>(ctx: &FusionContext) -> Result<usize, String> {
    let sylow_level = match ctx.ambient {
        Ambient::Su2 => 3,
        Ambient::So3 => 2,
    };
    let m = ctx.effective_modulus();
    let octahedral = octahedral_closure::<E>().map_err(|e| e.to_string())?;
    let sylow = truncation::<E::Symbolic>(sylow_level).map_err(|e| e.to_string())?;
    let reps: Vec<(SSubgroup, Vec<E>)> = sylow
        .all_subgroups()
        .iter()
        .map(|h| {
            let p = recognize_in(&sylow, h)?;
            let xs = elements_of(&sylow, h)
                .into_iter()
                .map(|x| E::embed(x, m))
                .collect::<Result<Vec<E>, _>>()
                .map_err(|e| e.to_string())?;
            Ok((p, xs))
        })
        .collect::<Result<Vec<_>, String>>()?
        .into_iter()
        .filter(|(p, _)| p.class_representative() == *p)
        .collect();
    let mut checked = 0;
    for (p, xs) in &reps {
        for (q, ys) in &reps {
            let by_character = is_f_conjugate(ctx, p, q).map_err(|e| e.to_string())?;
            let by_conjugation = xs.len() == ys.len()
                && octahedral
                    .elements()
                    .iter()
                    .any(|g| same_elements(&conjugate_set(g, xs), ys));
            ensure(by_character == by_conjugation, || {
                format!("{p} and {q}: character says {by_character}, octahedral conjugation says {by_conjugation}")
            })?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// Whether some isomorphism `P → Q` is induced by conjugation in the ambient
/// Lie group: a nonzero real intertwiner exists for some sign pattern.
fn conjugate_by_intertwiner<E: Carrier>(p: &FiniteGroup<E>, q: &FiniteGroup<E>) -> bool {
    let gens = p.generators().to_vec();
    let patterns: usize = if E::PROJECTIVE { 1 << gens.len() } else { 1 };
    all_isomorphisms(p, q, None).iter().any(|f| {
        (0..patterns).any(|pattern| {
            let pairs: Vec<(CycQuaternion, CycQuaternion)> = gens
                .iter()
                .enumerate()
                .map(|(k, &x)| {
                    let y = q.element(f.apply(x)).lift();
                    let y = if pattern >> k & 1 == 1 { y.neg() } else { y };
                    (p.element(x).lift(), y)
                })
                .collect();
            !intertwiner_space(&pairs).is_empty()
        })
    })
}

/// Character-criterion F-conjugacy against intertwiners, all subgroup pairs.
fn suite_character_intertwiner<E: Carrier>(ctx: &FusionContext, level: u32) -> Result<usize, String> {
    let mut checked = 0;
    let m = ctx.effective_modulus().max(level + 2);
    for n in 1..=level {
        let g = truncation::<E::Symbolic>(n).map_err(|e| e.to_string())?;
        let subgroups: Vec<(SSubgroup, FiniteGroup<E>)> = g
            .all_subgroups()
            .iter()
            .map(|h| {
                let p = recognize_in(&g, h)?;
                let xs = elements_of(&g, h)
                    .into_iter()
                    .map(|x| E::embed(x, m))
                    .collect::<Result<Vec<E>, _>>()
                    .map_err(|e| e.to_string())?;
                Ok((p, FiniteGroup::from_elements(xs).map_err(|e| e.to_string())?))
            })
            .collect::<Result<_, String>>()?;
        for (i, (p, pg)) in subgroups.iter().enumerate() {
            for (q, qg) in &subgroups[i..] {
                if pg.order() != qg.order() {
                    continue;
                }
                let by_character = is_f_conjugate(ctx, p, q).map_err(|e| e.to_string())?;
                let by_matrices = conjugate_by_intertwiner(pg, qg);
                ensure(by_character == by_matrices, || {
                    format!("S_{n}: {p} and {q}: character says {by_character}, intertwiners say {by_matrices}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Solution spaces of `g x = ε(x) x g` over all sign patterns `ε`.
fn signed_commutant_spaces<E: Carrier>(xs: &[E]) -> Vec<Vec<[CycNumber; 4]>> {
    let gens: Vec<&E> = xs.iter().filter(|x| !x.lift().is_real()).collect();
    (0..1usize << gens.len())
        .map(|pattern| {
            let pairs: Vec<(CycQuaternion, CycQuaternion)> = gens
                .iter()
                .enumerate()
                .map(|(k, x)| {
                    let y = x.lift();
                    (x.lift(), if pattern >> k & 1 == 1 { y.neg() } else { y })
                })
                .collect();
            intertwiner_space(&pairs)
        })
        .filter(|space| !space.is_empty())
        .collect()
}

fn in_span(space: &[[CycNumber; 4]], q: &CycQuaternion) -> bool {
    let mut rows: Vec<Vec<CycNumber>> = space.iter().map(|v| v.to_vec()).collect();
    let before = rank(&rows);
    rows.push(q.coords().to_vec());
    rank(&rows) == before
}

/// Predicted centralizers against brute force inside the octahedral group.
fn suite_commutant<E: Carrier>() -> Result<usize, String> {
    let o = octahedral_closure::<E>().map_err(|e| e.to_string())?;
    let mut checked = 0;
    for h in o.all_subgroups() {
        let xs = elements_of(&o, &h);
        if E::PROJECTIVE {
            // g centralizes H iff its lift solves g x = ±x g for some sign pattern
            let sub = FiniteGroup::from_elements(xs.clone()).map_err(|e| e.to_string())?;
            let gens: Vec<E> = sub.generators().iter().map(|&i| sub.element(i).clone()).collect();
            let spaces = signed_commutant_spaces(&gens);
            for g in o.elements() {
                let commutes = xs.iter().all(|x| g.op(x) == x.op(g));
                let predicted = spaces.iter().any(|space| in_span(space, &g.lift()));
                ensure(predicted == commutes, || {
                    format!("signed commutant misjudges {g} on a subgroup of order {}", xs.len())
                })?;
            }
        } else {
            let lifts: Vec<CycQuaternion> = xs.iter().map(Carrier::lift).collect();
            let class = commutant_class(&lifts);
            for g in o.elements() {
                let commutes = xs.iter().all(|x| g.op(x) == x.op(g));
                ensure(class.contains(&g.lift()) == commutes, || {
                    format!("commutant class {class:?} misjudges {g} on a subgroup of order {}", xs.len())
                })?;
            }
        }
        checked += 1;
    }
    Ok(checked)
}

fn suite_grothendieck<E: Carrier>(ctx: &FusionContext) -> Result<usize, String> {
    let d = decompose_with::<E>(ctx).map_err(|e| e.to_string())?;
    let w = &d.diagram.grothendieck;
    ensure(w.pass(), || format!("witness functor fails: {w:?}"))?;
    Ok(w.hom_counts.len())
}

fn run_for<E: Carrier>(ctx: &FusionContext) -> Vec<SuiteResult> {
    let level = ctx.level;
    let ambient = ctx.ambient;
    let exhaustive = level.min(EXHAUSTIVE_MAX_LEVEL);
    let note_cap = |cap: u32| {
        (level > cap).then(|| format!("exhaustive search capped at level {cap}"))
    };
    let with_note = |mut r: SuiteResult, cap: u32| {
        if r.status == Status::Pass {
            r.detail = note_cap(cap);
        }
        r
    };
    let mut out = vec![
        with_note(SuiteResult::from_outcome("group axioms of S_n", suite_axioms::<E>(exhaustive)), EXHAUSTIVE_MAX_LEVEL),
        with_note(
            SuiteResult::from_outcome("matrix representation is a faithful homomorphism", suite_representation::<E>(exhaustive)),
            EXHAUSTIVE_MAX_LEVEL,
        ),
        with_note(
            SuiteResult::from_outcome("subgroup enumeration is a transversal", suite_enumeration::<E>(ambient, exhaustive)),
            EXHAUSTIVE_MAX_LEVEL,
        ),
        with_note(
            SuiteResult::from_outcome("symbolic centralizers and normalizers", suite_centralizers::<E>(exhaustive)),
            EXHAUSTIVE_MAX_LEVEL,
        ),
        with_note(SuiteResult::from_outcome("squares subgroup", suite_squares::<E>(exhaustive)), EXHAUSTIVE_MAX_LEVEL),
        SuiteResult::from_outcome("quotient to SO(3) commutes with normalizers", suite_quotient(level)),
        SuiteResult::from_outcome("bullet functor", suite_bullet(ambient, level)),
    ];
    if level >= 3 {
        out.push(SuiteResult::from_outcome(
            "character criterion vs octahedral conjugation",
            suite_character_octahedral::<E>(ctx),
        ));
    } else {
        out.push(SuiteResult::skipped(
            "character criterion vs octahedral conjugation",
            "needs level at least 3".into(),
        ));
    }
    out.push(with_note(
        SuiteResult::from_outcome(
            "character criterion vs intertwiners",
            suite_character_intertwiner::<E>(ctx, level.min(INTERTWINER_MAX_LEVEL)),
        ),
        INTERTWINER_MAX_LEVEL,
    ));
    out.push(SuiteResult::from_outcome("centralizers inside the octahedral group", suite_commutant::<E>()));
    if !(3..=EXHAUSTIVE_MAX_LEVEL).contains(&level) {
        out.push(SuiteResult::skipped(
            "Grothendieck witness",
            format!("runs at levels 3 to {EXHAUSTIVE_MAX_LEVEL}"),
        ));
    } else {
        out.push(SuiteResult::from_outcome("Grothendieck witness", suite_grothendieck::<E>(ctx)));
    }
    out
}

/// Run every suite for the ambient group and level of `ctx`.
pub fn run_oracles(ctx: &FusionContext) -> OracleReport {
    let suites = match ctx.ambient {
        Ambient::Su2 => run_for::<CycQuaternion>(ctx),
        Ambient::So3 => run_for::<ProjQuaternion>(ctx),
    };
    OracleReport {
        ambient: ctx.ambient,
        level: ctx.level,
        suites,
    }
}

/// A multiplication table on named elements, as read from or written to disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub name: String,
    pub elements: Vec<String>,
    /// `table[i][j]` is the index of `elements[i] · elements[j]`.
    pub table: Vec<Vec<u32>>,
}

impl TableFile {
    pub fn from_group<E: Clone + Eq + std::hash::Hash + std::fmt::Display>(name: &str, g: &FiniteGroup<E>) -> Self {
        let n = g.order();
        TableFile {
            name: name.into(),
            elements: g.elements().iter().map(ToString::to_string).collect(),
            table: (0..n).map(|i| g.table()[i * n..(i + 1) * n].to_vec()).collect(),
        }
    }
}

/// Check the group axioms on a table file.
pub fn check_table(file: &TableFile) -> SuiteResult {
    let name = format!("group axioms of table {}", file.name);
    let outcome = (|| {
        let n = file.elements.len();
        ensure(file.table.iter().all(|row| row.len() == n), || "table is not square".into())?;
        let flat: Vec<u32> = file.table.iter().flatten().copied().collect();
        let g = FiniteGroup::from_table(file.elements.clone(), flat).map_err(|e| e.to_string())?;
        g.check_axioms().map_err(|e| e.to_string())?;
        Ok(n * n)
    })();
    SuiteResult::from_outcome(&name, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_one_skips_the_deep_suites() {
        let r = run_oracles(&FusionContext::new(Ambient::Su2, 1));
        assert!(r.all_pass(), "{}", r.to_text());
        assert!(r.suites.iter().any(|s| s.status == Status::Skipped));
    }

    #[test]
    fn level_three_passes_for_both_ambients() {
        for ambient in [Ambient::Su2, Ambient::So3] {
            let r = run_oracles(&FusionContext::new(ambient, 3));
            assert!(r.all_pass(), "{}", r.to_text());
            assert!(r.suites.iter().all(|s| s.status == Status::Pass));
        }
    }

    #[test]
    fn tables_round_trip_and_tampering_is_caught() {
        let g = truncation::<SElement>(2).unwrap();
        let mut file = TableFile::from_group("Q8", &g);
        assert_eq!(check_table(&file).status, Status::Pass);
        // swap an intercalate: rows 1, 2 and two columns where they exchange values
        let n = file.elements.len();
        'search: for r1 in 1..n {
            for r2 in r1 + 1..n {
                for c1 in 1..n {
                    for c2 in c1 + 1..n {
                        let t = &file.table;
                        if t[r1][c1] == t[r2][c2] && t[r1][c2] == t[r2][c1] {
                            let (a, b) = (t[r1][c1], t[r1][c2]);
                            file.table[r1][c1] = b;
                            file.table[r1][c2] = a;
                            file.table[r2][c1] = a;
                            file.table[r2][c2] = b;
                            if check_table(&file).status == Status::Fail {
                                break 'search;
                            }
                            file.table[r1][c1] = a;
                            file.table[r1][c2] = b;
                            file.table[r2][c1] = b;
                            file.table[r2][c2] = a;
                        }
                    }
                }
            }
        }
        let r = check_table(&file);
        assert_eq!(r.status, Status::Fail);
        assert!(r.detail.unwrap().contains("associativity"));
    }
}
