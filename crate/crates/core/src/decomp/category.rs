use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use super::DecompError;
use crate::fingroup::{FiniteGroup, GroupElement};

/// Morphism payloads that know how to compose.
pub trait Arrow: Clone + Eq + Hash + Debug {
    /// First `self`, then `next`.
    fn then(&self, next: &Self) -> Self;
}

/// A morphism given by a group element, composed by multiplication:
/// `g` followed by `h` is `h·g`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupArrow<E>(pub E);

impl<E: GroupElement> Arrow for GroupArrow<E> {
    fn then(&self, next: &Self) -> Self {
        GroupArrow(next.0.op(&self.0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatObject {
    pub name: String,
    pub height: u32,
}

/// Action of `Aut(y)` on `Hom(x, y)` by postcomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsorInfo {
    pub count: usize,
    pub acting_order: usize,
    pub free: bool,
    pub orbits: usize,
}

impl TorsorInfo {
    pub fn is_torsor(&self) -> bool {
        self.free && self.orbits == 1
    }
}

/// A category with finitely many objects and explicit hom-sets.
#[derive(Clone, Debug)]
pub struct FiniteCategory<A> {
    objects: Vec<CatObject>,
    identities: Vec<A>,
    homs: BTreeMap<(usize, usize), Vec<A>>,
    index: HashMap<(usize, usize), HashMap<A, usize>>,
}

impl<A: Arrow> FiniteCategory<A> {
    pub fn new(objects: Vec<CatObject>, identities: Vec<A>) -> Self {
        assert_eq!(objects.len(), identities.len());
        FiniteCategory {
            objects,
            identities,
            homs: BTreeMap::new(),
            index: HashMap::new(),
        }
    }

    pub fn set_hom(&mut self, x: usize, y: usize, arrows: Vec<A>) {
        let lookup = arrows.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        self.index.insert((x, y), lookup);
        self.homs.insert((x, y), arrows);
    }

    pub fn objects(&self) -> &[CatObject] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn identity(&self, x: usize) -> &A {
        &self.identities[x]
    }

    pub fn hom(&self, x: usize, y: usize) -> &[A] {
        self.homs.get(&(x, y)).map_or(&[], Vec::as_slice)
    }

    pub fn find(&self, x: usize, y: usize, f: &A) -> Option<usize> {
        self.index.get(&(x, y))?.get(f).copied()
    }

    /// Composites land in the right hom-set and identities are neutral.
    pub fn check_composition(&self) -> Result<(), DecompError> {
        let n = self.objects.len();
        for x in 0..n {
            if self.find(x, x, &self.identities[x]).is_none() {
                return Err(self.violation(format!("identity of {} is missing", self.objects[x].name)));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for f in self.hom(x, y) {
                    if &self.identities[x].then(f) != f || &f.then(&self.identities[y]) != f {
                        return Err(self.violation(format!(
                            "identity law fails on Hom({}, {})",
                            self.objects[x].name, self.objects[y].name
                        )));
                    }
                    for z in 0..n {
                        for g in self.hom(y, z) {
                            if self.find(x, z, &f.then(g)).is_none() {
                                return Err(self.violation(format!(
                                    "composite {} -> {} -> {} leaves Hom({}, {})",
                                    self.objects[x].name,
                                    self.objects[y].name,
                                    self.objects[z].name,
                                    self.objects[x].name,
                                    self.objects[z].name
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Associativity on every composable triple, as long as the number of
    /// triples stays under `budget`.
    pub fn check_associativity(&self, budget: usize) -> Result<bool, DecompError> {
        let n = self.objects.len();
        let mut total = 0usize;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        total += self.hom(x, y).len() * self.hom(y, z).len() * self.hom(z, w).len();
                    }
                }
            }
        }
        if total > budget {
            return Ok(false);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        for f in self.hom(x, y) {
                            for g in self.hom(y, z) {
                                let fg = f.then(g);
                                for h in self.hom(z, w) {
                                    if fg.then(h) != f.then(&g.then(h)) {
                                        return Err(self.violation("associativity fails".into()));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every endomorphism is invertible.
    pub fn is_ei(&self) -> bool {
        (0..self.objects.len()).all(|x| {
            let id = &self.identities[x];
            self.hom(x, x).iter().all(|f| self.hom(x, x).iter().any(|g| &f.then(g) == id))
        })
    }

    /// Morphisms between distinct objects strictly raise the height, and
    /// there are none between distinct objects of equal height.
    pub fn respects_heights(&self) -> bool {
        self.homs.iter().all(|(&(x, y), arrows)| {
            x == y || arrows.is_empty() || self.objects[x].height < self.objects[y].height
        })
    }

    /// `Aut(x)` as an abstract group; the product `a·b` is "`b`, then `a`".
    pub fn automorphism_group(&self, x: usize) -> Result<FiniteGroup<A>, DecompError> {
        let elements = self.hom(x, x).to_vec();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let p = self
                    .find(x, x, &b.then(a))
                    .ok_or_else(|| self.violation("endomorphisms are not closed".into()))?;
                table.push(p as u32);
            }
        }
        FiniteGroup::from_table(elements, table).map_err(|e| self.violation(e.to_string()))
    }

    /// The action of `Aut(y)` on `Hom(x, y)` by postcomposition.
    pub fn torsor(&self, x: usize, y: usize) -> TorsorInfo {
        let homs = self.hom(x, y);
        let auts = self.hom(y, y);
        let id = &self.identities[y];
        let mut parent: Vec<usize> = (0..homs.len()).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut free = true;
        for (i, f) in homs.iter().enumerate() {
            for a in auts {
                let fa = f.then(a);
                if &fa == f && a != id {
                    free = false;
                }
                if let Some(j) = self.find(x, y, &fa) {
                    let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let orbits = (0..homs.len()).filter(|&i| root(&mut parent, i) == i).count();
        TorsorInfo {
            count: homs.len(),
            acting_order: auts.len(),
            free,
            orbits,
        }
    }

    fn violation(&self, what: String) -> DecompError {
        DecompError::Category(what)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fingroup::library::symmetric;
    use crate::fingroup::Perm;

    /// Transporter category of Sym(3) on {1, ⟨(0 1)⟩}.
    fn small() -> FiniteCategory<GroupArrow<Perm>> {
        let g = symmetric(3);
        let id = Perm::identity(3);
        let swap = Perm::from_cycles(3, &[&[0, 1]]);
        let objects = vec![
            CatObject { name: "1".into(), height: 0 },
            CatObject { name: "C2".into(), height: 1 },
        ];
        let mut c = FiniteCategory::new(objects, vec![GroupArrow(id.clone()), GroupArrow(id.clone())]);
        let all: Vec<_> = g.elements().iter().cloned().map(GroupArrow).collect();
        let norm: Vec<_> = [id.clone(), swap.clone()].into_iter().map(GroupArrow).collect();
        c.set_hom(0, 0, all.clone());
        c.set_hom(0, 1, all);
        c.set_hom(1, 1, norm);
        c
    }

    #[test]
    fn axioms_and_ei() {
        let c = small();
        assert!(c.check_composition().is_ok());
        assert!(c.check_associativity(1_000_000).unwrap());
        assert!(c.is_ei());
        assert!(c.respects_heights());
        assert_eq!(c.automorphism_group(1).unwrap().order(), 2);
    }

    #[test]
    fn torsors() {
        let c = small();
        let t = c.torsor(0, 1);
        assert_eq!(t.count, 6);
        assert!(t.free);
        assert_eq!(t.orbits, 3);
        assert!(!t.is_torsor());
        assert!(c.torsor(1, 1).is_torsor());
    }

    #[test]
    fn missing_composite_is_reported() {
        let mut c = small();
        c.set_hom(1, 1, vec![GroupArrow(Perm::identity(3)), GroupArrow(Perm::from_cycles(3, &[&[0, 1, 2]]))]);
        assert!(c.check_composition().is_err());
    }
}
