use std::collections::{BTreeMap, VecDeque};
use std::hash::Hash;

use super::{FiniteGroup, GroupError, GroupMap, Perm, Subgroup, AUT_BUDGET};

const UNSET: usize = usize::MAX;

/// Cheap isomorphism invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub order: usize,
    pub order_profile: BTreeMap<u64, usize>,
    pub center_order: usize,
    pub derived_order: usize,
}

pub fn invariants<E: Clone + Eq + Hash>(g: &FiniteGroup<E>) -> GroupInvariants {
    GroupInvariants {
        order: g.order(),
        order_profile: g.order_profile(),
        center_order: g.center().order(),
        derived_order: g.commutator_subgroup().order(),
    }
}

/// Walk the Cayley graph of `⟨gens⟩` assigning `φ(x·g) = φ(x)·φ(g)`. Returns
/// `None` on a clash or when two elements get the same image.
fn extend_partial<E, F>(
    src: &FiniteGroup<E>,
    dst: &FiniteGroup<F>,
    gens: &[usize],
    images: &[usize],
    injective: bool,
    compat: &dyn Fn(usize, usize) -> bool,
) -> Option<Vec<usize>>
where
    E: Clone + Eq + Hash,
    F: Clone + Eq + Hash,
{
    let mut map = vec![UNSET; src.order()];
    let mut used = vec![false; dst.order()];
    map[src.identity()] = dst.identity();
    used[dst.identity()] = true;
    let mut queue = VecDeque::from([src.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = src.mul(x, g);
            let target = dst.mul(map[x], img);
            if map[y] == UNSET {
                if (injective && used[target]) || !compat(y, target) {
                    return None;
                }
                map[y] = target;
                used[target] = true;
                queue.push_back(y);
            } else if map[y] != target {
                return None;
            }
        }
    }
    Some(map)
}

/// The homomorphism sending `gens[k] ↦ images[k]`, if there is one and `gens`
/// generate the source.
pub fn extend_homomorphism<E, F>(
    src: &FiniteGroup<E>,
    dst: &FiniteGroup<F>,
    gens: &[usize],
    images: &[usize],
) -> Option<GroupMap>
where
    E: Clone + Eq + Hash,
    F: Clone + Eq + Hash,
{
    let map = extend_partial(src, dst, gens, images, false, &|_, _| true)?;
    if map.contains(&UNSET) {
        return None;
    }
    Some(GroupMap { images: map })
}

/// Isomorphisms `src → dst`, at most `limit` of them.
pub fn all_isomorphisms<E, F>(
    src: &FiniteGroup<E>,
    dst: &FiniteGroup<F>,
    limit: Option<usize>,
) -> Vec<GroupMap>
where
    E: Clone + Eq + Hash,
    F: Clone + Eq + Hash,
{
    isomorphisms_with(src, dst, &|_, _| true, limit)
}

/// Isomorphisms `φ` with `compat(x, φ(x))` for every element `x`.
pub fn isomorphisms_with<E, F>(
    src: &FiniteGroup<E>,
    dst: &FiniteGroup<F>,
    compat: &dyn Fn(usize, usize) -> bool,
    limit: Option<usize>,
) -> Vec<GroupMap>
where
    E: Clone + Eq + Hash,
    F: Clone + Eq + Hash,
{
    let mut out = Vec::new();
    if src.order() != dst.order() {
        return out;
    }
    let gens = src.generators().to_vec();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = src.element_order(g);
            (0..dst.order())
                .filter(|&y| dst.element_order(y) == k && compat(g, y))
                .collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(gens.len());
    let ctx = Search {
        src,
        dst,
        gens: &gens,
        candidates: &candidates,
        compat,
        limit,
    };
    ctx.run(&mut chosen, &mut out);
    out
}

struct Search<'a, E, F> {
    src: &'a FiniteGroup<E>,
    dst: &'a FiniteGroup<F>,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    compat: &'a dyn Fn(usize, usize) -> bool,
    limit: Option<usize>,
}

impl<E: Clone + Eq + Hash, F: Clone + Eq + Hash> Search<'_, E, F> {
    fn run(&self, chosen: &mut Vec<usize>, out: &mut Vec<GroupMap>) {
        if self.limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        let depth = chosen.len();
        if depth == self.gens.len() {
            if let Some(map) =
                extend_partial(self.src, self.dst, self.gens, chosen, true, self.compat)
            {
                if !map.contains(&UNSET) {
                    out.push(GroupMap { images: map });
                }
            }
            return;
        }
        for &y in &self.candidates[depth] {
            chosen.push(y);
            if extend_partial(
                self.src,
                self.dst,
                &self.gens[..=depth],
                chosen,
                true,
                self.compat,
            )
            .is_some()
            {
                self.run(chosen, out);
            }
            chosen.pop();
        }
    }
}

pub fn is_isomorphic<E, F>(a: &FiniteGroup<E>, b: &FiniteGroup<F>) -> Option<GroupMap>
where
    E: Clone + Eq + Hash,
    F: Clone + Eq + Hash,
{
    if invariants(a) != invariants(b) {
        return None;
    }
    all_isomorphisms(a, b, Some(1)).pop()
}

/// `Aut(G)` as permutations of the element indices of `G`.
pub fn automorphism_group<E: Clone + Eq + Hash>(
    g: &FiniteGroup<E>,
) -> Result<FiniteGroup<Perm>, GroupError> {
    if g.order() > AUT_BUDGET {
        return Err(GroupError::BudgetExceeded {
            order: g.order(),
            budget: AUT_BUDGET,
        });
    }
    let perms = all_isomorphisms(g, g, None)
        .into_iter()
        .map(|m| Perm(m.images.into_iter().map(|x| x as u32).collect()))
        .collect();
    FiniteGroup::from_elements(perms)
}

/// The conjugation automorphisms inside `aut = automorphism_group(g)`.
pub fn inner_automorphisms<E: Clone + Eq + Hash>(
    g: &FiniteGroup<E>,
    aut: &FiniteGroup<Perm>,
) -> Subgroup {
    let members = (0..g.order())
        .map(|x| {
            let p = Perm((0..g.order()).map(|y| g.conj(x, y) as u32).collect());
            aut.index_of(&p)
                .expect("inner automorphisms are automorphisms")
        })
        .collect();
    Subgroup::from_indices(members)
}

#[cfg(test)]
mod tests {
    use super::super::library::{cyclic, dihedral, generalized_quaternion, klein_four, symmetric};
    use super::*;

    #[test]
    fn automorphism_orders() {
        assert_eq!(automorphism_group(&klein_four()).unwrap().order(), 6);
        assert_eq!(automorphism_group(&cyclic(8)).unwrap().order(), 4);
        assert_eq!(automorphism_group(&dihedral(8)).unwrap().order(), 8);
        assert_eq!(
            automorphism_group(&generalized_quaternion(8))
                .unwrap()
                .order(),
            24
        );
        assert_eq!(
            automorphism_group(&generalized_quaternion(16))
                .unwrap()
                .order(),
            32
        );
        assert_eq!(automorphism_group(&symmetric(3)).unwrap().order(), 6);
    }

    #[test]
    fn inner_automorphisms_of_q8() {
        let q8 = generalized_quaternion(8);
        let aut = automorphism_group(&q8).unwrap();
        let inn = inner_automorphisms(&q8, &aut);
        assert_eq!(inn.order(), 4);
        assert!(aut.is_normal(&inn));
        let out = aut.quotient(&inn).unwrap();
        assert!(is_isomorphic(&out, &symmetric(3)).is_some());
    }

    #[test]
    fn isomorphism_detects_differences() {
        assert!(is_isomorphic(&dihedral(8), &generalized_quaternion(8)).is_none());
        assert!(is_isomorphic(&cyclic(4), &klein_four()).is_none());
        let map = is_isomorphic(&dihedral(6), &symmetric(3)).unwrap();
        assert!(map.is_homomorphism(&dihedral(6), &symmetric(3)));
        assert!(map.is_injective());
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            automorphism_group(&cyclic(128)).unwrap_err(),
            GroupError::BudgetExceeded {
                order: 128,
                budget: AUT_BUDGET
            }
        );
    }
}
