//! A small finite-group engine built on explicit multiplication tables.
//!
//! Every group here has order at most a few thousand, so all algorithms are
//! exhaustive: subgroups are sorted index sets, normalizers and centralizers
//! come from direct conjugation, and isomorphisms are found by backtracking
//! over generator images.

mod character;
mod iso;
pub mod library;
mod perm;
mod radical;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

pub use character::{character_of_embedding, character_with, ClassFunction};
pub use iso::{
    all_isomorphisms, automorphism_group, extend_homomorphism, inner_automorphisms, invariants,
    is_isomorphic, isomorphisms_with, GroupInvariants,
};
pub use perm::Perm;
pub use radical::{is_p_group, o2_radical, op_radical};

/// Largest group the brute-force automorphism and radical searches accept.
pub const AUT_BUDGET: usize = 64;
/// Default cap on closures.
pub const CLOSURE_CAP: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("subset is not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group of order {order} exceeds the brute-force budget {budget}")]
    BudgetExceeded { order: usize, budget: usize },
    #[error("closure exceeded {cap} elements")]
    CapExceeded { cap: usize },
    #[error("element is not in the group")]
    NotInGroup,
    #[error("group axiom violated: {0}")]
    Axiom(String),
}

/// Carrier values that know how to multiply and invert themselves.
pub trait GroupElement: Clone + Eq + Hash + Debug {
    fn op(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
}

/// A subgroup (or plain subset) of a [`FiniteGroup`], as sorted element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn from_indices(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }
}

/// A homomorphism given by the images of source element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupMap {
    pub images: Vec<usize>,
}

impl GroupMap {
    pub fn identity(n: usize) -> Self {
        GroupMap {
            images: (0..n).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_homomorphism<E: Clone + Eq + Hash, F: Clone + Eq + Hash>(
        &self,
        src: &FiniteGroup<E>,
        dst: &FiniteGroup<F>,
    ) -> bool {
        self.images.len() == src.order()
            && (0..src.order()).all(|x| {
                (0..src.order())
                    .all(|y| self.images[src.mul(x, y)] == dst.mul(self.images[x], self.images[y]))
            })
    }

    pub fn is_injective(&self) -> bool {
        let set: HashSet<_> = self.images.iter().collect();
        set.len() == self.images.len()
    }

    /// `self ∘ first`
    pub fn after(&self, first: &GroupMap) -> GroupMap {
        GroupMap {
            images: first.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_indices(self.images.clone())
    }
}

/// A finite group: carrier values plus a full multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    table: Vec<u32>,
    inverse: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
}

impl<E: Clone + Eq + Hash> FiniteGroup<E> {
    /// Build from carrier values and a row-major table (`table[i*n + j]` is the
    /// index of `elements[i] * elements[j]`). Checks that the table is a Latin
    /// square with an identity; associativity is left to [`check_axioms`](Self::check_axioms).
    pub fn from_table(elements: Vec<E>, table: Vec<u32>) -> Result<Self, GroupError> {
        let mut g = Self::from_table_unchecked(elements, table)?;
        g.generators = g.greedy_generators();
        Ok(g)
    }

    /// Like [`from_table`](Self::from_table) but keeps whatever table is given
    /// as long as identity and inverses can be located. Used to build
    /// deliberately corrupted fixtures.
    pub fn from_table_unchecked(elements: Vec<E>, table: Vec<u32>) -> Result<Self, GroupError> {
        let n = elements.len();
        if n == 0 || table.len() != n * n {
            return Err(GroupError::Axiom(
                "table shape does not match element count".into(),
            ));
        }
        if table.iter().any(|&t| t as usize >= n) {
            return Err(GroupError::Axiom("product outside the element list".into()));
        }
        let identity = (0..n)
            .find(|&e| {
                (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x)
            })
            .ok_or_else(|| GroupError::Axiom("no two-sided identity".into()))?;
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x * n + y] as usize == identity)
                    .ok_or_else(|| GroupError::Axiom(format!("element {x} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect::<HashMap<_, _>>();
        if index.len() != n {
            return Err(GroupError::Axiom("duplicate elements".into()));
        }
        Ok(FiniteGroup {
            elements,
            index,
            table,
            inverse,
            identity,
            generators: vec![],
        })
    }

    /// Check closure, identity, inverses and associativity. Associativity uses
    /// Light's test against the stored generators.
    pub fn check_axioms(&self) -> Result<(), GroupError> {
        let n = self.order();
        for x in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for y in 0..n {
                row[self.mul(x, y)] = true;
                col[self.mul(y, x)] = true;
            }
            if row.iter().chain(&col).any(|seen| !seen) {
                return Err(GroupError::Axiom(format!(
                    "row or column {x} is not a permutation"
                )));
            }
            if self.mul(x, self.inverse[x]) != self.identity
                || self.mul(self.inverse[x], x) != self.identity
            {
                return Err(GroupError::Axiom(format!(
                    "inverse of element {x} is one-sided"
                )));
            }
        }
        let gens = if self.generators.is_empty() {
            (0..n).collect()
        } else {
            self.generators.clone()
        };
        if self.subgroup_generated(&gens).order() != n {
            return Err(GroupError::Axiom(
                "stored generators do not generate".into(),
            ));
        }
        for &g in &gens {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(GroupError::Axiom(format!(
                            "associativity fails at ({x}, {g}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.elements.len() + y] as usize
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// A small generating set.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// `g x g⁻¹`
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse[g])
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup {
            members: vec![self.identity],
        }
    }

    /// Indices of the given carrier values; fails if one is missing.
    pub fn subset_of(&self, values: &[E]) -> Result<Subgroup, GroupError> {
        values
            .iter()
            .map(|v| self.index_of(v).ok_or(GroupError::NotInGroup))
            .collect::<Result<Vec<_>, _>>()
            .map(Subgroup::from_indices)
    }

    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut members = vec![self.identity];
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_indices(members)
    }

    pub fn is_subgroup(&self, h: &Subgroup) -> bool {
        !h.members.is_empty()
            && h.members.iter().all(|&x| {
                h.members
                    .iter()
                    .all(|&y| h.contains(self.mul(x, self.inverse[y])))
            })
    }

    pub fn conjugate(&self, g: usize, h: &Subgroup) -> Subgroup {
        Subgroup::from_indices(h.members.iter().map(|&x| self.conj(g, x)).collect())
    }

    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup, GroupError> {
        if !self.is_subgroup(h) {
            return Err(GroupError::NotSubgroup);
        }
        Ok(Subgroup {
            members: (0..self.order())
                .filter(|&g| h.members.iter().all(|&x| h.contains(self.conj(g, x))))
                .collect(),
        })
    }

    pub fn centralizer(&self, h: &Subgroup) -> Result<Subgroup, GroupError> {
        if !self.is_subgroup(h) {
            return Err(GroupError::NotSubgroup);
        }
        Ok(self.centralizer_of_set(h.members()))
    }

    pub fn centralizer_of_set(&self, xs: &[usize]) -> Subgroup {
        Subgroup {
            members: (0..self.order())
                .filter(|&g| xs.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
                .collect(),
        }
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer_of_set(&(0..self.order()).collect::<Vec<_>>())
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_subgroup(h)
            && (0..self.order()).all(|g| h.members.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.conj(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn normal_closure(&self, xs: &[usize]) -> Subgroup {
        let conjugates: Vec<usize> = xs
            .iter()
            .flat_map(|&x| (0..self.order()).map(move |g| (g, x)))
            .map(|(g, x)| self.conj(g, x))
            .collect();
        self.subgroup_generated(&conjugates)
    }

    /// Smallest subgroup containing both.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let gens: Vec<usize> = a.members.iter().chain(&b.members).copied().collect();
        self.subgroup_generated(&gens)
    }

    /// All normal subgroups: joins of normal closures of conjugacy classes.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let class_closures: Vec<Subgroup> = self
            .conjugacy_classes()
            .iter()
            .map(|c| self.normal_closure(&c[..1]))
            .collect();
        Self::close_under_join(self, vec![self.trivial()], &class_closures)
    }

    /// Every subgroup: joins of cyclic subgroups.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let cyclic: HashSet<Subgroup> = (0..self.order())
            .map(|x| self.subgroup_generated(&[x]))
            .collect();
        let mut cyclic: Vec<Subgroup> = cyclic.into_iter().collect();
        cyclic.sort();
        Self::close_under_join(self, vec![self.trivial()], &cyclic)
    }

    fn close_under_join(&self, start: Vec<Subgroup>, atoms: &[Subgroup]) -> Vec<Subgroup> {
        let mut found: HashSet<Subgroup> = start.iter().cloned().collect();
        let mut queue: VecDeque<Subgroup> = start.into();
        while let Some(h) = queue.pop_front() {
            for a in atoms {
                if a.is_subset_of(&h) {
                    continue;
                }
                let j = self.join(&h, a);
                if found.insert(j.clone()) {
                    queue.push_back(j);
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
        out
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        let n = self.order();
        let comms: HashSet<usize> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| self.mul(self.mul(x, y), self.mul(self.inverse[x], self.inverse[y])))
            .collect();
        self.subgroup_generated(&comms.into_iter().collect::<Vec<_>>())
    }

    /// Number of elements of each order.
    pub fn order_profile(&self) -> BTreeMap<u64, usize> {
        let mut profile = BTreeMap::new();
        for x in 0..self.order() {
            *profile.entry(self.element_order(x)).or_insert(0) += 1;
        }
        profile
    }

    /// The subgroup `h` as a group in its own right.
    pub fn restrict(&self, h: &Subgroup) -> Result<FiniteGroup<E>, GroupError> {
        if !self.is_subgroup(h) {
            return Err(GroupError::NotSubgroup);
        }
        let pos: HashMap<usize, usize> =
            h.members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let m = h.order();
        let mut table = Vec::with_capacity(m * m);
        for &x in &h.members {
            for &y in &h.members {
                table.push(pos[&self.mul(x, y)] as u32);
            }
        }
        let elements = h
            .members
            .iter()
            .map(|&x| self.elements[x].clone())
            .collect();
        FiniteGroup::from_table(elements, table)
    }

    /// `G / N` with cosets as carrier values (listed in index order).
    pub fn quotient(&self, normal: &Subgroup) -> Result<FiniteGroup<Vec<E>>, GroupError> {
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &k in &normal.members {
                coset_of[self.mul(x, k)] = id;
            }
        }
        let q = reps.len();
        let mut table = Vec::with_capacity(q * q);
        for &x in &reps {
            for &y in &reps {
                table.push(coset_of[self.mul(x, y)] as u32);
            }
        }
        let elements = reps
            .iter()
            .map(|&x| {
                let mut coset: Vec<usize> =
                    normal.members.iter().map(|&k| self.mul(x, k)).collect();
                coset.sort_unstable();
                coset
                    .into_iter()
                    .map(|i| self.elements[i].clone())
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(elements, table)
    }

    /// The natural map onto `quotient(normal)`, as indices.
    pub fn quotient_map(&self, normal: &Subgroup, quotient: &FiniteGroup<Vec<E>>) -> GroupMap {
        let images = (0..self.order())
            .map(|x| {
                let mut coset: Vec<usize> =
                    normal.members.iter().map(|&k| self.mul(x, k)).collect();
                coset.sort_unstable();
                let key: Vec<E> = coset
                    .into_iter()
                    .map(|i| self.elements[i].clone())
                    .collect();
                quotient
                    .index_of(&key)
                    .expect("coset is an element of the quotient")
            })
            .collect();
        GroupMap { images }
    }

    /// Relabel the carrier through an injective map. The table is kept, so
    /// `f` must be a homomorphism for the result to mean anything.
    pub fn map_elements<F: Clone + Eq + Hash>(
        &self,
        f: impl Fn(&E) -> F,
    ) -> Result<FiniteGroup<F>, GroupError> {
        let elements: Vec<F> = self.elements.iter().map(f).collect();
        let index: HashMap<F, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        if index.len() != elements.len() {
            return Err(GroupError::Axiom("relabelling is not injective".into()));
        }
        Ok(FiniteGroup {
            elements,
            index,
            table: self.table.clone(),
            inverse: self.inverse.clone(),
            identity: self.identity,
            generators: self.generators.clone(),
        })
    }

    /// The same group with each element replaced by its index.
    pub fn abstract_copy(&self) -> FiniteGroup<usize> {
        FiniteGroup {
            elements: (0..self.order()).collect(),
            index: (0..self.order()).map(|i| (i, i)).collect(),
            table: self.table.clone(),
            inverse: self.inverse.clone(),
            identity: self.identity,
            generators: self.generators.clone(),
        }
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let n = self.order();
        let mut gens = Vec::new();
        let mut current = self.trivial();
        while current.order() < n {
            let best = (0..n)
                .filter(|&x| !current.contains(x))
                .map(|x| {
                    let mut trial = gens.clone();
                    trial.push(x);
                    (
                        self.subgroup_generated(&trial).order(),
                        std::cmp::Reverse(x),
                    )
                })
                .max()
                .map(|(_, std::cmp::Reverse(x))| x)
                .expect("a missing element exists");
            gens.push(best);
            current = self.subgroup_generated(&gens);
        }
        gens
    }
}

impl<E: GroupElement> FiniteGroup<E> {
    /// Close `gens` under multiplication, starting from `identity`.
    pub fn generate(identity: E, gens: &[E], cap: usize) -> Result<Self, GroupError> {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<E, usize> = HashMap::from([(identity, 0)]);
        let mut frontier = 0;
        while frontier < elements.len() {
            let x = elements[frontier].clone();
            frontier += 1;
            for g in gens {
                let y = x.op(g);
                if !index.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
        }
        let mut g = Self::from_elements_indexed(elements, index)?;
        let mut gen_idx: Vec<usize> = gens
            .iter()
            .map(|x| g.index[x])
            .filter(|&i| i != g.identity)
            .collect();
        gen_idx.dedup();
        g.generators = gen_idx;
        Ok(g)
    }

    /// The group formed by an explicit list of carrier values, which must be
    /// closed under multiplication.
    pub fn from_elements(elements: Vec<E>) -> Result<Self, GroupError> {
        let index: HashMap<E, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        if index.len() != elements.len() {
            return Err(GroupError::Axiom("duplicate elements".into()));
        }
        let mut g = Self::from_elements_indexed(elements, index)?;
        g.generators = g.greedy_generators();
        Ok(g)
    }

    fn from_elements_indexed(
        elements: Vec<E>,
        index: HashMap<E, usize>,
    ) -> Result<Self, GroupError> {
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for x in &elements {
            for y in &elements {
                let p = index.get(&x.op(y)).ok_or_else(|| {
                    GroupError::Axiom("set is not closed under multiplication".into())
                })?;
                table.push(*p as u32);
            }
        }
        Self::from_table_unchecked(elements, table)
    }
}
