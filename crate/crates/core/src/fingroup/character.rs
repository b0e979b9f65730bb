use std::hash::Hash;

use super::FiniteGroup;
use crate::quat::{CycNumber, CycQuaternion};

/// A function on a group that is constant on conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub classes: Vec<Vec<usize>>,
    pub values: Vec<CycNumber>,
}

impl ClassFunction {
    /// Value at the element with index `x`.
    pub fn value_at(&self, x: usize) -> &CycNumber {
        let k = self
            .classes
            .iter()
            .position(|c| c.binary_search(&x).is_ok())
            .expect("every element has a class");
        &self.values[k]
    }

    /// The values listed element by element.
    pub fn by_element(&self, n: usize) -> Vec<CycNumber> {
        let mut out = vec![CycNumber::zero(); n];
        for (class, v) in self.classes.iter().zip(&self.values) {
            for &x in class {
                out[x] = v.clone();
            }
        }
        out
    }
}

/// Class function `x ↦ trace(x)`; `trace` must be conjugation invariant.
pub fn character_with<E: Clone + Eq + Hash>(
    g: &FiniteGroup<E>,
    trace: impl Fn(&E) -> CycNumber,
) -> ClassFunction {
    let classes = g.conjugacy_classes();
    let values = classes.iter().map(|c| trace(g.element(c[0]))).collect();
    ClassFunction { classes, values }
}

/// Character of the 2-dimensional representation `x ↦ rep(x)` into SU(2).
pub fn character_of_embedding<E: Clone + Eq + Hash>(
    g: &FiniteGroup<E>,
    rep: impl Fn(&E) -> CycQuaternion,
) -> ClassFunction {
    character_with(g, |x| rep(x).trace())
}
