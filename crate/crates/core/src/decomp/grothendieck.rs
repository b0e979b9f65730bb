//! The Grothendieck construction of a poset-indexed diagram of groups, and an
//! explicit functor comparing it with a subdivision category.

use std::collections::HashSet;

use serde::Serialize;

use super::category::{Arrow, CatObject, FiniteCategory, GroupArrow};
use super::subdivision::{SubArrow, Subdivision};
use super::DecompError;
use crate::fingroup::GroupElement;

/// Groups `B(x)` on the nodes of a poset, all inside one carrier, with
/// `B(x → y)` the inclusion `B(x) ⊆ B(y)`.
#[derive(Clone, Debug)]
pub struct PosetDiagram<E> {
    pub nodes: Vec<CatObject>,
    pub groups: Vec<Vec<E>>,
    /// Strict relations `x < y`; must be transitively closed.
    pub less: Vec<(usize, usize)>,
    pub identity: E,
}

impl<E: GroupElement> PosetDiagram<E> {
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y || self.less.contains(&(x, y))
    }

    fn check(&self) -> Result<(), DecompError> {
        for (x, group) in self.groups.iter().enumerate() {
            let set: HashSet<&E> = group.iter().collect();
            if !set.contains(&self.identity) {
                return Err(DecompError::NotFunctorial(format!("B({}) lacks the identity", self.nodes[x].name)));
            }
            if group.iter().any(|a| group.iter().any(|b| !set.contains(&a.op(b)))) {
                return Err(DecompError::NotFunctorial(format!("B({}) is not a group", self.nodes[x].name)));
            }
        }
        for &(x, y) in &self.less {
            let target: HashSet<&E> = self.groups[y].iter().collect();
            if !self.groups[x].iter().all(|g| target.contains(g)) {
                return Err(DecompError::NotFunctorial(format!(
                    "B({}) is not contained in B({})",
                    self.nodes[x].name, self.nodes[y].name
                )));
            }
            for &(y2, z) in &self.less {
                if y2 == y && !self.leq(x, z) {
                    return Err(DecompError::NotFunctorial("relation is not transitive".into()));
                }
            }
        }
        Ok(())
    }
}

/// `Gr(B)`: objects are the nodes, `Hom(x, y) = B(y)` when `x ≤ y`, and
/// `(x → y, b)` followed by `(y → z, c)` is `(x → z, c·b)`.
pub fn grothendieck<E: GroupElement>(d: &PosetDiagram<E>) -> Result<FiniteCategory<GroupArrow<E>>, DecompError> {
    d.check()?;
    let n = d.nodes.len();
    let mut c = FiniteCategory::new(d.nodes.clone(), vec![GroupArrow(d.identity.clone()); n]);
    for x in 0..n {
        for y in 0..n {
            let hom = if d.leq(x, y) {
                d.groups[y].iter().cloned().map(GroupArrow).collect()
            } else {
                vec![]
            };
            c.set_hom(x, y, hom);
        }
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub objects_bijective: bool,
    pub homs_bijective: bool,
    pub functorial: bool,
    pub preserves_identities: bool,
    /// Hom-set sizes compared, as `(source, target, count)`.
    pub hom_counts: Vec<(String, String, usize)>,
}

impl WitnessReport {
    pub fn pass(&self) -> bool {
        self.objects_bijective && self.homs_bijective && self.functorial && self.preserves_identities
    }
}

/// The unique order-preserving placement of chain `d` inside chain `c`.
fn placement(c: &[usize], d: &[usize]) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for y in d {
        let i = (start..c.len()).find(|&i| c[i] == *y)?;
        if c[i + 1..].contains(y) {
            return None;
        }
        out.push(i);
        start = i + 1;
    }
    Some(out)
}

/// Check the functor `Gr(B) → s(C)` sending node `x` to chain `object_map[x]`
/// and `(x → y, b)` to the subdivision morphism whose components are all `b`.
pub fn witness_functor<E: GroupElement>(
    gr: &FiniteCategory<GroupArrow<E>>,
    sub: &Subdivision<GroupArrow<E>>,
    object_map: &[usize],
) -> Result<WitnessReport, DecompError> {
    let n = gr.object_count();
    let image: HashSet<usize> = object_map.iter().copied().collect();
    let objects_bijective = object_map.len() == n && image.len() == n && n == sub.category.object_count();

    let apply = |x: usize, y: usize, b: &GroupArrow<E>| -> Option<SubArrow<GroupArrow<E>>> {
        let c = &sub.chains[object_map[x]];
        let d = &sub.chains[object_map[y]];
        let positions = placement(&c.objects, &d.objects)?;
        Some(SubArrow {
            components: vec![b.clone(); positions.len()],
            positions,
        })
    };

    let mut homs_bijective = true;
    let mut hom_counts = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (fx, fy) = (object_map[x], object_map[y]);
            let mut hit = HashSet::new();
            for b in gr.hom(x, y) {
                match apply(x, y, b).and_then(|f| sub.category.find(fx, fy, &f)) {
                    Some(k) => {
                        hit.insert(k);
                    }
                    None => homs_bijective = false,
                }
            }
            let target = sub.category.hom(fx, fy).len();
            if hit.len() != gr.hom(x, y).len() || hit.len() != target {
                homs_bijective = false;
            }
            if target > 0 {
                hom_counts.push((
                    gr.objects()[x].name.clone(),
                    gr.objects()[y].name.clone(),
                    target,
                ));
            }
        }
    }

    let mut functorial = true;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for f in gr.hom(x, y) {
                    for g in gr.hom(y, z) {
                        let lhs = apply(x, z, &f.then(g));
                        let rhs = apply(x, y, f).zip(apply(y, z, g)).map(|(a, b)| a.then(&b));
                        if lhs.is_none() || lhs != rhs {
                            functorial = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    let preserves_identities =
        (0..n).all(|x| apply(x, x, gr.identity(x)).as_ref() == Some(sub.category.identity(object_map[x])));
    Ok(WitnessReport {
        objects_bijective,
        homs_bijective,
        functorial,
        preserves_identities,
        hom_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::library::symmetric;
    use crate::fingroup::Perm;

    #[test]
    fn one_node_poset() {
        let g = symmetric(3);
        let d = PosetDiagram {
            nodes: vec![CatObject { name: "G".into(), height: 0 }],
            groups: vec![g.elements().to_vec()],
            less: vec![],
            identity: Perm::identity(3),
        };
        let c = grothendieck(&d).unwrap();
        assert_eq!(c.hom(0, 0).len(), 6);
        c.check_composition().unwrap();
    }

    #[test]
    fn non_functorial_input_is_rejected() {
        let swap = Perm::from_cycles(3, &[&[0, 1]]);
        let other = Perm::from_cycles(3, &[&[1, 2]]);
        let id = Perm::identity(3);
        let node = |n: &str| CatObject { name: n.into(), height: 0 };
        let d = PosetDiagram {
            nodes: vec![node("a"), node("b")],
            groups: vec![vec![id.clone(), swap], vec![id.clone(), other]],
            less: vec![(0, 1)],
            identity: id,
        };
        assert!(matches!(grothendieck(&d), Err(DecompError::NotFunctorial(_))));
    }

    #[test]
    fn placements() {
        assert_eq!(placement(&[0, 1], &[1]), Some(vec![1]));
        assert_eq!(placement(&[0, 1], &[0, 1]), Some(vec![0, 1]));
        assert_eq!(placement(&[0], &[1]), None);
    }
}
