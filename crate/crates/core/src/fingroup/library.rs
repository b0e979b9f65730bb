//! Reference groups and naming by isomorphism type.

use std::hash::Hash;

use super::{
    extend_homomorphism, is_isomorphic, FiniteGroup, GroupElement, GroupMap, Perm, CLOSURE_CAP,
};
use crate::quat::{binary_octahedral_generators, finite_closure};

/// `a^i b^j` in `⟨a, b | a^m, b² = a^s, b a b⁻¹ = a^r⟩`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Metacyclic {
    m: u32,
    r: u32,
    s: u32,
    pub i: u32,
    pub j: bool,
}

impl GroupElement for Metacyclic {
    fn op(&self, rhs: &Self) -> Self {
        let m = u64::from(self.m);
        let twist = if self.j { u64::from(self.r) } else { 1 };
        let mut i = (u64::from(self.i) + twist * u64::from(rhs.i)) % m;
        if self.j && rhs.j {
            i = (i + u64::from(self.s)) % m;
        }
        Metacyclic {
            i: i as u32,
            j: self.j ^ rhs.j,
            ..*self
        }
    }

    fn inv(&self) -> Self {
        // brute force in the cyclic group generated by self
        let mut y = *self;
        loop {
            let next = y.op(self);
            if next.i == 0 && !next.j {
                return y;
            }
            y = next;
        }
    }
}

fn metacyclic(m: u32, r: u32, s: u32) -> FiniteGroup<Metacyclic> {
    let e = Metacyclic {
        m,
        r,
        s,
        i: 0,
        j: false,
    };
    let a = Metacyclic { i: 1 % m, ..e };
    let b = Metacyclic { j: true, ..e };
    FiniteGroup::generate(e, &[a, b], usize::MAX).expect("metacyclic data is consistent")
}

pub fn cyclic(n: usize) -> FiniteGroup<Perm> {
    let cycle: Vec<u32> = (0..n as u32).collect();
    let gen = Perm::from_cycles(n, &[&cycle]);
    FiniteGroup::generate(Perm::identity(n), &[gen], usize::MAX).expect("cyclic group closes")
}

pub fn klein_four() -> FiniteGroup<Perm> {
    let a = Perm::from_cycles(4, &[&[0, 1], &[2, 3]]);
    let b = Perm::from_cycles(4, &[&[0, 2], &[1, 3]]);
    FiniteGroup::generate(Perm::identity(4), &[a, b], usize::MAX).expect("klein group closes")
}

pub fn symmetric(n: usize) -> FiniteGroup<Perm> {
    let cycle: Vec<u32> = (0..n as u32).collect();
    let gens = [
        Perm::from_cycles(n, &[&[0, 1]]),
        Perm::from_cycles(n, &[&cycle]),
    ];
    FiniteGroup::generate(Perm::identity(n), &gens, usize::MAX).expect("symmetric group closes")
}

/// Dihedral group of the given order (`2m`).
pub fn dihedral(order: usize) -> FiniteGroup<Metacyclic> {
    let m = (order / 2) as u32;
    metacyclic(m, m - 1, 0)
}

/// Generalized quaternion group of the given order (a power of 2, at least 8).
pub fn generalized_quaternion(order: usize) -> FiniteGroup<Metacyclic> {
    let m = (order / 2) as u32;
    metacyclic(m, m - 1, m / 2)
}

/// Semidihedral group of the given order (a power of 2, at least 16).
pub fn semidihedral(order: usize) -> FiniteGroup<Metacyclic> {
    let m = (order / 2) as u32;
    metacyclic(m, m / 2 - 1, 0)
}

/// `a` of order `|G|/2`, `b² = a^{|G|/4}`, `b a b⁻¹ = a⁻¹`, and `⟨a, b⟩ = G`.
/// Returns the isomorphism from [`generalized_quaternion`] sending the
/// standard generators to `a` and `b`.
pub fn check_quaternion_presentation<E: Clone + Eq + Hash>(
    g: &FiniteGroup<E>,
    a: usize,
    b: usize,
) -> Result<GroupMap, String> {
    let n = g.order();
    if n < 8 || !n.is_power_of_two() {
        return Err(format!("order {n} is not a power of two at least 8"));
    }
    let m = (n / 2) as u64;
    if g.element_order(a) != m {
        return Err(format!("a has order {} instead of {m}", g.element_order(a)));
    }
    if g.mul(b, b) != g.pow(a, m / 2) {
        return Err("b² differs from the central involution a^(n/4)".into());
    }
    if g.conj(b, a) != g.inv(a) {
        return Err("b does not invert a".into());
    }
    if g.subgroup_generated(&[a, b]).order() != n {
        return Err("a and b do not generate".into());
    }
    let model = generalized_quaternion(n);
    let ma = model
        .index_of(&Metacyclic {
            i: 1,
            j: false,
            ..*model.element(model.identity())
        })
        .expect("a");
    let mb = model
        .index_of(&Metacyclic {
            i: 0,
            j: true,
            ..*model.element(model.identity())
        })
        .expect("b");
    let map =
        extend_homomorphism(&model, g, &[ma, mb], &[a, b]).ok_or("presentation does not extend")?;
    if !map.is_injective() {
        return Err("presentation map is not injective".into());
    }
    Ok(map)
}

/// Some pair satisfying [`check_quaternion_presentation`].
pub fn find_quaternion_presentation<E: Clone + Eq + Hash>(
    g: &FiniteGroup<E>,
) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 8 || !n.is_power_of_two() {
        return None;
    }
    let m = (n / 2) as u64;
    let a = (0..n).find(|&x| g.element_order(x) == m)?;
    (0..n)
        .find(|&b| check_quaternion_presentation(g, a, b).is_ok())
        .map(|b| (a, b))
}

fn elementary_abelian_rank<E: Clone + Eq + Hash>(g: &FiniteGroup<E>) -> Option<u32> {
    let n = g.order();
    let exponent_two = (0..n).all(|x| g.mul(x, x) == g.identity());
    (exponent_two && n.is_power_of_two()).then(|| n.trailing_zeros())
}

/// A short name for the isomorphism type, or `order n` when not recognized.
pub fn identify<E: Clone + Eq + Hash>(g: &FiniteGroup<E>) -> String {
    let n = g.order();
    if n == 1 {
        return "1".into();
    }
    if (0..n).any(|x| g.element_order(x) == n as u64) {
        return format!("Z/{n}");
    }
    if let Some(k) = elementary_abelian_rank(g) {
        return format!("(Z/2)^{k}");
    }
    if n == 6 && is_isomorphic(g, &symmetric(3)).is_some() {
        return "Sym(3)".into();
    }
    if n == 24 && is_isomorphic(g, &symmetric(4)).is_some() {
        return "Sym(4)".into();
    }
    if n == 48 {
        let o48 = finite_closure(&binary_octahedral_generators(), CLOSURE_CAP)
            .expect("binary octahedral group closes");
        if is_isomorphic(g, &o48).is_some() {
            return "2O".into();
        }
    }
    if n.is_power_of_two() && n >= 8 {
        if is_isomorphic(g, &dihedral(n)).is_some() {
            return format!("D{n}");
        }
        if find_quaternion_presentation(g).is_some() {
            return format!("Q{n}");
        }
        if n >= 16 && is_isomorphic(g, &semidihedral(n)).is_some() {
            return format!("SD{n}");
        }
        if n == 8 && g.is_abelian() {
            return "Z/4xZ/2".into();
        }
    }
    format!("order {n}")
}
