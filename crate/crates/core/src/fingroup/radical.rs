use std::hash::Hash;

use super::{FiniteGroup, GroupError, Subgroup, AUT_BUDGET};

pub fn is_p_group(order: usize, p: usize) -> bool {
    let mut n = order;
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// The largest normal `p`-subgroup.
pub fn op_radical<E: Clone + Eq + Hash>(
    g: &FiniteGroup<E>,
    p: usize,
) -> Result<Subgroup, GroupError> {
    if g.order() > AUT_BUDGET {
        return Err(GroupError::BudgetExceeded {
            order: g.order(),
            budget: AUT_BUDGET,
        });
    }
    Ok(g.normal_subgroups()
        .into_iter()
        .filter(|h| is_p_group(h.order(), p))
        .max_by_key(Subgroup::order)
        .expect("the trivial subgroup is a normal p-subgroup"))
}

pub fn o2_radical<E: Clone + Eq + Hash>(g: &FiniteGroup<E>) -> Result<Subgroup, GroupError> {
    op_radical(g, 2)
}
