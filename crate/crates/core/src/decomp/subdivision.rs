//! The subdivision category of an EI-category with heights.
//!
//! Objects are strictly height-increasing chains `c₀ → c₁ → … → c_k`. A
//! morphism `c → c'` picks, for every member of `c'`, a position in `c`
//! holding the same object (order preserving) and an isomorphism from that
//! member of `c` to the member of `c'`, compatible with the chain arrows.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::category::{Arrow, CatObject, FiniteCategory};
use super::DecompError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chain<A> {
    pub objects: Vec<usize>,
    /// `arrows[i]: objects[i] → objects[i + 1]`
    pub arrows: Vec<A>,
}

impl<A: Arrow> Chain<A> {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    /// The composite arrow from position `i` to position `j ≥ i`.
    fn span(&self, i: usize, j: usize, base: &FiniteCategory<A>) -> A {
        let mut f = base.identity(self.objects[i]).clone();
        for a in &self.arrows[i..j] {
            f = f.then(a);
        }
        f
    }

    pub fn name(&self, base: &FiniteCategory<A>) -> String {
        self.objects
            .iter()
            .map(|&x| base.objects()[x].name.as_str())
            .collect::<Vec<_>>()
            .join("<")
    }
}

/// A morphism of the subdivision category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubArrow<A> {
    /// For each member of the target chain, its position in the source chain.
    pub positions: Vec<usize>,
    /// `components[j]`: source member at `positions[j]` → target member `j`.
    pub components: Vec<A>,
}

impl<A: Arrow> Arrow for SubArrow<A> {
    fn then(&self, next: &Self) -> Self {
        SubArrow {
            positions: next.positions.iter().map(|&j| self.positions[j]).collect(),
            components: next
                .positions
                .iter()
                .zip(&next.components)
                .map(|(&j, c)| self.components[j].then(c))
                .collect(),
        }
    }
}

/// One isomorphism class of chains.
#[derive(Clone, Debug, Serialize)]
pub struct ChainClass {
    pub name: String,
    pub length: usize,
    /// Number of chains in the class.
    pub size: usize,
    pub aut_order: usize,
}

#[derive(Clone, Debug)]
pub struct Subdivision<A> {
    /// Class representatives, indexed like the objects of `category`.
    pub chains: Vec<Chain<A>>,
    pub classes: Vec<ChainClass>,
    pub category: FiniteCategory<SubArrow<A>>,
}

/// All strictly height-increasing chains of `base`.
pub fn enumerate_chains<A: Arrow>(base: &FiniteCategory<A>) -> Vec<Chain<A>> {
    let n = base.object_count();
    let mut out = Vec::new();
    let mut stack: Vec<Chain<A>> = (0..n)
        .rev()
        .map(|x| Chain {
            objects: vec![x],
            arrows: vec![],
        })
        .collect();
    while let Some(c) = stack.pop() {
        let last = *c.objects.last().expect("chains are non-empty");
        let h = base.objects()[last].height;
        for y in (0..n).rev() {
            if base.objects()[y].height <= h {
                continue;
            }
            for f in base.hom(last, y).iter().rev() {
                let mut d = c.clone();
                d.objects.push(y);
                d.arrows.push(f.clone());
                stack.push(d);
            }
        }
        out.push(c);
    }
    out
}

fn inverse<A: Arrow>(base: &FiniteCategory<A>, x: usize, f: &A) -> Option<A> {
    let id = base.identity(x);
    base.hom(x, x).iter().find(|g| &f.then(g) == id).cloned()
}

/// Chains isomorphic to `c`, found by changing one component at a time.
fn orbit<A: Arrow>(base: &FiniteCategory<A>, c: &Chain<A>) -> Result<Vec<Chain<A>>, DecompError> {
    let mut seen: HashMap<Chain<A>, ()> = HashMap::from([(c.clone(), ())]);
    let mut out = vec![c.clone()];
    let mut queue = VecDeque::from([c.clone()]);
    while let Some(d) = queue.pop_front() {
        for (i, &x) in d.objects.iter().enumerate() {
            for a in base.hom(x, x) {
                let a_inv = inverse(base, x, a)
                    .ok_or_else(|| DecompError::Category("category is not EI".into()))?;
                let mut e = d.clone();
                if i > 0 {
                    e.arrows[i - 1] = e.arrows[i - 1].then(a);
                }
                if i < e.arrows.len() {
                    e.arrows[i] = a_inv.then(&e.arrows[i]);
                }
                if seen.insert(e.clone(), ()).is_none() {
                    out.push(e.clone());
                    queue.push_back(e);
                }
            }
        }
    }
    Ok(out)
}

/// Order-preserving maps from positions of `target` into positions of
/// `source` that respect the objects.
fn embeddings(source: &[usize], target: &[usize]) -> Vec<Vec<usize>> {
    fn go(source: &[usize], target: &[usize], start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = acc.len();
        if j == target.len() {
            out.push(acc.clone());
            return;
        }
        for i in start..source.len() {
            if source[i] == target[j] {
                acc.push(i);
                go(source, target, i + 1, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(source, target, 0, &mut Vec::new(), &mut out);
    out
}

/// All subdivision morphisms `c → d`.
pub fn morphisms<A: Arrow>(base: &FiniteCategory<A>, c: &Chain<A>, d: &Chain<A>) -> Vec<SubArrow<A>> {
    let mut out = Vec::new();
    for positions in embeddings(&c.objects, &d.objects) {
        let mut partial: Vec<Vec<A>> = vec![vec![]];
        for (j, &y) in d.objects.iter().enumerate() {
            let mut next = Vec::new();
            for comps in &partial {
                for a in base.hom(y, y) {
                    let compatible = j == 0 || {
                        let prev = &comps[j - 1];
                        let lhs = prev.then(&d.arrows[j - 1]);
                        let rhs = c.span(positions[j - 1], positions[j], base).then(a);
                        lhs == rhs
                    };
                    if compatible {
                        let mut extended = comps.clone();
                        extended.push(a.clone());
                        next.push(extended);
                    }
                }
            }
            partial = next;
        }
        out.extend(partial.into_iter().map(|components| SubArrow {
            positions: positions.clone(),
            components,
        }));
    }
    out
}

/// The skeletal subdivision category: one object per isomorphism class of
/// chains, with height `max length - length`.
pub fn subdivide<A: Arrow>(base: &FiniteCategory<A>) -> Result<Subdivision<A>, DecompError> {
    if !base.is_ei() {
        return Err(DecompError::Category("subdivision needs an EI-category".into()));
    }
    let mut assigned: HashMap<Chain<A>, usize> = HashMap::new();
    let mut reps: Vec<(Chain<A>, usize)> = Vec::new();
    for c in enumerate_chains(base) {
        if assigned.contains_key(&c) {
            continue;
        }
        let members = orbit(base, &c)?;
        for m in &members {
            assigned.insert(m.clone(), reps.len());
        }
        reps.push((c, members.len()));
    }
    let max_len = reps.iter().map(|(c, _)| c.len()).max().unwrap_or(0);
    reps.sort_by(|(a, _), (b, _)| {
        (max_len - a.len(), &a.objects).cmp(&(max_len - b.len(), &b.objects))
    });

    let objects: Vec<CatObject> = reps
        .iter()
        .map(|(c, _)| CatObject {
            name: c.name(base),
            height: (max_len - c.len()) as u32,
        })
        .collect();
    let identities = reps
        .iter()
        .map(|(c, _)| SubArrow {
            positions: (0..c.len()).collect(),
            components: c.objects.iter().map(|&x| base.identity(x).clone()).collect(),
        })
        .collect();
    let mut category = FiniteCategory::new(objects, identities);
    for (i, (c, _)) in reps.iter().enumerate() {
        for (j, (d, _)) in reps.iter().enumerate() {
            let mut homs = morphisms(base, c, d);
            if i == j {
                let id = category.identity(i).clone();
                homs.retain(|f| f != &id);
                homs.insert(0, id);
            }
            category.set_hom(i, j, homs);
        }
    }
    let classes = reps
        .iter()
        .enumerate()
        .map(|(i, (c, size))| ChainClass {
            name: c.name(base),
            length: c.len(),
            size: *size,
            aut_order: category.hom(i, i).len(),
        })
        .collect();
    Ok(Subdivision {
        chains: reps.into_iter().map(|(c, _)| c).collect(),
        classes,
        category,
    })
}

impl<A: Arrow> Subdivision<A> {
    pub fn find_chain(&self, objects: &[usize]) -> Option<usize> {
        self.chains.iter().position(|c| c.objects == objects)
    }

    /// The `i`-th components of the automorphisms of chain `x`.
    pub fn restriction(&self, x: usize, i: usize) -> Vec<A> {
        self.category.hom(x, x).iter().map(|f| f.components[i].clone()).collect()
    }

    /// Restriction to every member is injective.
    pub fn restrictions_injective(&self, x: usize) -> bool {
        (0..self.chains[x].len()).all(|i| {
            let r = self.restriction(x, i);
            let set: std::collections::HashSet<&A> = r.iter().collect();
            set.len() == r.len()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::category::GroupArrow;
    use crate::fingroup::library::symmetric;
    use crate::fingroup::{GroupElement, Perm};

    fn p(c: &[&[u32]]) -> Perm {
        Perm::from_cycles(3, c)
    }

    /// Sym(3) transporter category on 1 < ⟨(0 1)⟩ < Sym(3).
    fn three_level() -> FiniteCategory<GroupArrow<Perm>> {
        let g = symmetric(3);
        let all: Vec<Perm> = g.elements().to_vec();
        let subgroups: Vec<Vec<Perm>> = vec![
            vec![Perm::identity(3)],
            vec![Perm::identity(3), p(&[&[0, 1]])],
            all.clone(),
        ];
        let objects = ["1", "C2", "S3"]
            .iter()
            .enumerate()
            .map(|(h, n)| CatObject { name: n.to_string(), height: h as u32 })
            .collect();
        let id = GroupArrow(Perm::identity(3));
        let mut c = FiniteCategory::new(objects, vec![id.clone(), id.clone(), id.clone()]);
        for x in 0..3 {
            for y in 0..3 {
                let mut hom: Vec<GroupArrow<Perm>> = vec![];
                if x <= y {
                    for g in &all {
                        let inside = subgroups[x]
                            .iter()
                            .all(|s| subgroups[y].contains(&g.op(s).op(&g.inv())));
                        if inside {
                            hom.push(GroupArrow(g.clone()));
                        }
                    }
                }
                c.set_hom(x, y, hom);
            }
        }
        c
    }

    #[test]
    fn chains_and_classes() {
        let base = three_level();
        base.check_composition().unwrap();
        let chains = enumerate_chains(&base);
        let expected = 3 + 6 + 6 + 6 + 6 * 6;
        assert_eq!(chains.len(), expected);
        let s = subdivide(&base).unwrap();
        // 7 classes: 3 singletons, 3 pairs, 1 triple
        assert_eq!(s.chains.len(), 7);
        assert_eq!(s.category.objects()[0].height, 0);
        s.category.check_composition().unwrap();
        assert!(s.category.is_ei());
        assert!(s.category.respects_heights());
        let full = s.find_chain(&[0, 1, 2]).unwrap();
        assert_eq!(s.category.hom(full, full).len(), 2);
        assert!(s.restrictions_injective(full));
        let pair = s.find_chain(&[1, 2]).unwrap();
        assert_eq!(s.category.hom(pair, pair).len(), 2);
    }

    #[test]
    fn one_object_category_is_its_own_subdivision() {
        let g = symmetric(3);
        let objects = vec![CatObject { name: "G".into(), height: 0 }];
        let mut c = FiniteCategory::new(objects, vec![GroupArrow(Perm::identity(3))]);
        c.set_hom(0, 0, g.elements().iter().cloned().map(GroupArrow).collect());
        let s = subdivide(&c).unwrap();
        assert_eq!(s.chains.len(), 1);
        assert_eq!(s.category.hom(0, 0).len(), 6);
        assert!(s.category.automorphism_group(0).is_ok());
    }
}
