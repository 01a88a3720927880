//! Group actions by automorphisms, given as one permutation per group element.

use thiserror::Error;

use super::abelian::FinAbGroup;
use super::group::FiniteGroup;

/// An action of a finite group on a set of `target_order` points, where every
/// permutation preserves the target's group structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAction {
    group: FiniteGroup,
    target_order: usize,
    perms: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("expected one permutation per group element ({0}), got {1}")]
    WrongLength(usize, usize),
    #[error("permutation for element {0} does not preserve the target group structure")]
    NotAutomorphism(usize),
    #[error("the identity does not act as the identity permutation")]
    IdentityNotFixed,
    #[error("action is not a homomorphism at ({0}, {1})")]
    NotHomomorphic(usize, usize),
}

impl ActionError {
    pub fn code(&self) -> &'static str {
        match self {
            ActionError::WrongLength(..) => "WrongLength",
            ActionError::NotAutomorphism(..) => "NotAutomorphism",
            ActionError::IdentityNotFixed => "IdentityNotFixed",
            ActionError::NotHomomorphic(..) => "NotHomomorphic",
        }
    }

    pub fn witness(&self) -> serde_json::Value {
        match self {
            ActionError::WrongLength(want, got) => serde_json::json!([want, got]),
            ActionError::NotAutomorphism(g) => serde_json::json!([g]),
            ActionError::IdentityNotFixed => serde_json::Value::Null,
            ActionError::NotHomomorphic(g, h) => serde_json::json!([g, h]),
        }
    }
}

fn check_action(
    group: &FiniteGroup,
    perms: &[Vec<usize>],
    is_automorphism: impl Fn(&[usize]) -> bool,
    target_order: usize,
) -> Result<GAction, ActionError> {
    if perms.len() != group.order() {
        return Err(ActionError::WrongLength(group.order(), perms.len()));
    }
    for (g, p) in perms.iter().enumerate() {
        let mut seen = vec![false; target_order];
        if p.len() != target_order {
            return Err(ActionError::NotAutomorphism(g));
        }
        for &y in p {
            if y >= target_order || seen[y] {
                return Err(ActionError::NotAutomorphism(g));
            }
            seen[y] = true;
        }
        if !is_automorphism(p) {
            return Err(ActionError::NotAutomorphism(g));
        }
    }
    if perms[0].iter().enumerate().any(|(x, &y)| x != y) {
        return Err(ActionError::IdentityNotFixed);
    }
    for g in 0..group.order() {
        for h in 0..group.order() {
            let gh = group.mul(g, h);
            if (0..target_order).any(|x| perms[gh][x] != perms[g][perms[h][x]]) {
                return Err(ActionError::NotHomomorphic(g, h));
            }
        }
    }
    Ok(GAction {
        group: group.clone(),
        target_order,
        perms: perms.to_vec(),
    })
}

/// Validates an action on a Cayley-table group.
pub fn validate_action(
    group: &FiniteGroup,
    target: &FiniteGroup,
    perms: &[Vec<usize>],
) -> Result<GAction, ActionError> {
    let n = target.order();
    check_action(
        group,
        perms,
        |p| (0..n).all(|x| (0..n).all(|y| p[target.mul(x, y)] == target.mul(p[x], p[y]))),
        n,
    )
}

/// Validates an action on a finite abelian group under the flat encoding.
pub fn validate_action_abelian(
    group: &FiniteGroup,
    target: &FinAbGroup,
    perms: &[Vec<usize>],
) -> Result<GAction, ActionError> {
    let n = target.order();
    check_action(
        group,
        perms,
        |p| (0..n).all(|x| (0..n).all(|y| p[target.add(x, y)] == target.add(p[x], p[y]))),
        n,
    )
}

impl GAction {
    /// The action where every group element acts as the identity.
    pub fn trivial(group: &FiniteGroup, target_order: usize) -> GAction {
        GAction {
            group: group.clone(),
            target_order,
            perms: vec![(0..target_order).collect(); group.order()],
        }
    }

    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.perms[g][x]
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn target_order(&self) -> usize {
        self.target_order
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }

    pub fn is_trivial(&self) -> bool {
        self.perms
            .iter()
            .all(|p| p.iter().enumerate().all(|(x, &y)| x == y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::group::cyclic_group;

    #[test]
    fn trivial_action_validates() {
        let g = cyclic_group(4).unwrap();
        let h = cyclic_group(5).unwrap();
        let a = GAction::trivial(&g, 5);
        assert!(validate_action(&g, &h, a.perms()).is_ok());
        assert!(a.is_trivial());
    }

    #[test]
    fn negation_action_of_z2_on_z3() {
        let g = cyclic_group(2).unwrap();
        let h = FinAbGroup::new(vec![3]).unwrap();
        let perms = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let a = validate_action_abelian(&g, &h, &perms).unwrap();
        assert_eq!(a.apply(1, 1), 2);
        assert!(!a.is_trivial());
    }

    #[test]
    fn shift_map_is_not_an_automorphism() {
        let g = cyclic_group(2).unwrap();
        let h = FinAbGroup::new(vec![4]).unwrap();
        let perms = vec![vec![0, 1, 2, 3], vec![1, 2, 3, 0]];
        assert_eq!(
            validate_action_abelian(&g, &h, &perms).unwrap_err(),
            ActionError::NotAutomorphism(1)
        );
    }

    #[test]
    fn identity_must_act_trivially() {
        let g = cyclic_group(2).unwrap();
        let h = FinAbGroup::new(vec![3]).unwrap();
        let perms = vec![vec![0, 2, 1], vec![0, 1, 2]];
        assert_eq!(
            validate_action_abelian(&g, &h, &perms).unwrap_err(),
            ActionError::IdentityNotFixed
        );
    }

    #[test]
    fn action_must_be_homomorphic() {
        // z4 where the generator acts by negation on z3 but its square acts
        // trivially is fine; make the square act by negation instead
        let g = cyclic_group(4).unwrap();
        let h = FinAbGroup::new(vec![3]).unwrap();
        let neg = vec![0, 2, 1];
        let id = vec![0, 1, 2];
        let perms = vec![id.clone(), neg.clone(), neg.clone(), id.clone()];
        assert!(matches!(
            validate_action_abelian(&g, &h, &perms).unwrap_err(),
            ActionError::NotHomomorphic(_, _)
        ));
        let good = vec![id.clone(), neg.clone(), id, neg];
        assert!(validate_action_abelian(&g, &h, &good).is_ok());
    }

    #[test]
    fn wrong_number_of_permutations() {
        let g = cyclic_group(2).unwrap();
        let h = FinAbGroup::new(vec![3]).unwrap();
        assert_eq!(
            validate_action_abelian(&g, &h, &[vec![0, 1, 2]]).unwrap_err(),
            ActionError::WrongLength(2, 1)
        );
    }
}
