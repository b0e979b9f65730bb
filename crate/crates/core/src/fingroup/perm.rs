use std::fmt;

use super::GroupElement;

/// A permutation of `0..n`, composed right to left: `(p * q)(x) = p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Build from disjoint cycles on `0..n`.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Self {
        let mut p: Vec<u32> = (0..n as u32).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                p[x as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm(p)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        self.0
            .iter()
            .all(|&x| (x as usize) < seen.len() && !std::mem::replace(&mut seen[x as usize], true))
    }
}

impl GroupElement for Perm {
    fn op(&self, rhs: &Self) -> Self {
        Perm(rhs.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    fn inv(&self) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u32;
        }
        Perm(out)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_right_to_left() {
        let p = Perm::from_cycles(3, &[&[0, 1]]);
        let q = Perm::from_cycles(3, &[&[1, 2]]);
        // p(q(1)) = p(2) = 2
        assert_eq!(p.op(&q).apply(1), 2);
        assert_eq!(p.op(&q).op(&p.op(&q).inv()), Perm::identity(3));
        assert!(p.is_valid());
        assert!(!Perm(vec![0, 0]).is_valid());
    }
}
