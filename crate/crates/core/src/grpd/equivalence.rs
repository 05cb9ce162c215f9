//! Deciding equivalence of finite groupoids by comparing skeleta.

use crate::error::Result;
use crate::grpd::group::DEFAULT_ISO_BOUND;
use crate::grpd::groupoid::FiniteGroupoid;

/// Equivalence check with the default isomorphism bound.
pub fn equivalence_check(x: &FiniteGroupoid, y: &FiniteGroupoid) -> Result<bool> {
    equivalence_check_bounded(x, y, DEFAULT_ISO_BOUND)
}

/// Two groupoids are equivalent iff their components can be matched with
/// isomorphic automorphism groups. Group isomorphism is decided by brute
/// force for groups of order at most `bound`.
pub fn equivalence_check_bounded(
    x: &FiniteGroupoid,
    y: &FiniteGroupoid,
    bound: usize,
) -> Result<bool> {
    if x.n_components() != y.n_components() {
        return Ok(false);
    }
    let mut used = vec![false; y.n_components()];
    // isomorphism is an equivalence relation, so greedy matching is exact
    'outer: for c in 0..x.n_components() {
        let g = x.aut_group(c);
        for d in 0..y.n_components() {
            if used[d] || y.aut_group(d).order() != g.order() {
                continue;
            }
            if g.is_isomorphic(y.aut_group(d), bound)? {
                used[d] = true;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::grpd::constructions::{delooping, discrete};
    use crate::grpd::group::FiniteGroup;

    #[test]
    fn examples() {
        let c4 = delooping(&FiniteGroup::cyclic(4));
        let v4 = delooping(&FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2),
            &FiniteGroup::cyclic(2),
        ));
        assert!(equivalence_check(&c4, &c4).unwrap());
        assert!(!equivalence_check(&c4, &v4).unwrap());
        assert!(!equivalence_check(&discrete(2), &delooping(&FiniteGroup::cyclic(2))).unwrap());
        let s5 = delooping(&FiniteGroup::symmetric(5));
        assert!(matches!(
            equivalence_check_bounded(&s5, &s5, 100),
            Err(Error::Capacity { order: 120, .. })
        ));
        assert!(equivalence_check(&s5, &s5).unwrap());
    }
}
