//! Crossed modules and the example builders on finite groups.

use thiserror::Error;

use crate::finite_algebra::{
    automorphism_group, enumerate_homs, validate_action, validate_hom, ActionError, AutError,
    FiniteGroup, GAction, GroupHom, HomError,
};

/// A crossed module `(G, H, t, alpha)`: `t: H -> G` equivariant for the
/// action `alpha` of `G` on `H`, satisfying the Peiffer identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    g: FiniteGroup,
    h: FiniteGroup,
    t: GroupHom,
    alpha: GAction,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossedModuleError {
    #[error("t is not a homomorphism: {0}")]
    NotHomomorphic(#[from] HomError),
    #[error("alpha is not a valid action: {0}")]
    InvalidAction(#[from] ActionError),
    #[error("equivariance fails at (g={0}, h={1}): t(alpha(g,h)) != g t(h) g^-1")]
    EquivarianceFailed(usize, usize),
    #[error("Peiffer identity fails at (h={0}, h'={1}): alpha(t(h), h') != h h' h^-1")]
    PeifferFailed(usize, usize),
    #[error("H is not abelian: elements {0} and {1} do not commute")]
    NotAbelian(usize, usize),
    #[error("the map is not surjective: element {0} has no preimage")]
    NotSurjective(usize),
    #[error("kernel is not central: kernel element {0} does not commute with {1}")]
    KernelNotCentral(usize, usize),
    #[error("{0}")]
    OrderBoundExceeded(#[from] AutError),
}

impl CrossedModuleError {
    pub fn code(&self) -> &'static str {
        match self {
            CrossedModuleError::NotHomomorphic(_) => "NotHomomorphic",
            CrossedModuleError::InvalidAction(_) => "InvalidAction",
            CrossedModuleError::EquivarianceFailed(..) => "EquivarianceFailed",
            CrossedModuleError::PeifferFailed(..) => "PeifferFailed",
            CrossedModuleError::NotAbelian(..) => "NotAbelian",
            CrossedModuleError::NotSurjective(..) => "NotSurjective",
            CrossedModuleError::KernelNotCentral(..) => "KernelNotCentral",
            CrossedModuleError::OrderBoundExceeded(_) => "OrderBoundExceeded",
        }
    }
}

/// Checks both crossed-module identities on raw tables.
pub fn validate_crossed_module(
    g: &FiniteGroup,
    h: &FiniteGroup,
    t_map: Vec<usize>,
    alpha_perms: &[Vec<usize>],
) -> Result<CrossedModule, CrossedModuleError> {
    let t = validate_hom(h, g, t_map)?;
    let alpha = validate_action(g, h, alpha_perms)?;
    from_parts(g.clone(), h.clone(), t, alpha)
}

pub(crate) fn from_parts(
    g: FiniteGroup,
    h: FiniteGroup,
    t: GroupHom,
    alpha: GAction,
) -> Result<CrossedModule, CrossedModuleError> {
    for gi in 0..g.order() {
        for hi in 0..h.order() {
            if t.apply(alpha.apply(gi, hi)) != g.conjugate(gi, t.apply(hi)) {
                return Err(CrossedModuleError::EquivarianceFailed(gi, hi));
            }
        }
    }
    for hi in 0..h.order() {
        for hj in 0..h.order() {
            if alpha.apply(t.apply(hi), hj) != h.conjugate(hi, hj) {
                return Err(CrossedModuleError::PeifferFailed(hi, hj));
            }
        }
    }
    Ok(CrossedModule { g, h, t, alpha })
}

impl CrossedModule {
    pub fn g(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    pub fn t(&self) -> &GroupHom {
        &self.t
    }

    pub fn alpha(&self) -> &GAction {
        &self.alpha
    }
}

/// The crossed module `(Aut(H), H, inner, tautological)`.
pub fn aut2group(h: &FiniteGroup, max_order: usize) -> Result<CrossedModule, CrossedModuleError> {
    let (aut, action) = automorphism_group(h, max_order)?;
    // t sends each element to conjugation by it
    let t_map: Vec<usize> = (0..h.order())
        .map(|x| {
            let conj: Vec<usize> = (0..h.order()).map(|y| h.conjugate(x, y)).collect();
            (0..aut.order())
                .find(|&a| (0..h.order()).all(|y| action.apply(a, y) == conj[y]))
                .expect("conjugation is an automorphism")
        })
        .collect();
    let t = validate_hom(h, &aut, t_map)?;
    from_parts(aut, h.clone(), t, action)
}

/// The crossed module of a central extension `p: H -> G`: `t = p` and `G`
/// acts through conjugation by (minimal-index) lifts, which is well defined
/// exactly when `ker p` is central.
pub fn central_extension_crossed(p: &GroupHom) -> Result<CrossedModule, CrossedModuleError> {
    let h = p.source().clone();
    let g = p.target().clone();
    let mut lift = vec![usize::MAX; g.order()];
    for x in 0..h.order() {
        let gx = p.apply(x);
        if lift[gx] == usize::MAX {
            lift[gx] = x;
        }
    }
    if let Some(missing) = lift.iter().position(|&l| l == usize::MAX) {
        return Err(CrossedModuleError::NotSurjective(missing));
    }
    for k in 0..h.order() {
        if p.apply(k) != 0 {
            continue;
        }
        for x in 0..h.order() {
            if h.mul(k, x) != h.mul(x, k) {
                return Err(CrossedModuleError::KernelNotCentral(k, x));
            }
        }
    }
    let perms: Vec<Vec<usize>> = (0..g.order())
        .map(|gx| (0..h.order()).map(|x| h.conjugate(lift[gx], x)).collect())
        .collect();
    // centrality makes the action independent of the chosen lift
    for x in 0..h.order() {
        let gx = p.apply(x);
        for (y, &image) in perms[gx].iter().enumerate() {
            assert_eq!(
                h.conjugate(x, y),
                image,
                "lift independence must follow from centrality"
            );
        }
    }
    let alpha = validate_action(&g, &h, &perms)?;
    from_parts(g, h, p.clone(), alpha)
}

/// The crossed module with trivial `t`, requiring `H` abelian.
pub fn trivial_t_crossed(
    g: &FiniteGroup,
    h: &FiniteGroup,
    alpha: &GAction,
) -> Result<CrossedModule, CrossedModuleError> {
    for hi in 0..h.order() {
        for hj in hi + 1..h.order() {
            if h.mul(hi, hj) != h.mul(hj, hi) {
                return Err(CrossedModuleError::NotAbelian(hi, hj));
            }
        }
    }
    let t = GroupHom::trivial(h, g);
    let alpha = validate_action(g, h, alpha.perms())?;
    from_parts(g.clone(), h.clone(), t, alpha)
}

/// Searches for a pair of isomorphisms carrying one crossed module to the
/// other (commuting with `t` and transporting `alpha`).  Deterministic:
/// first match in enumeration order.
pub fn crossed_isomorphic(
    a: &CrossedModule,
    b: &CrossedModule,
) -> Option<(GroupHom, GroupHom)> {
    if a.g.order() != b.g.order() || a.h.order() != b.h.order() {
        return None;
    }
    let g_isos: Vec<GroupHom> = enumerate_homs(&a.g, &b.g)
        .into_iter()
        .filter(|f| f.is_bijective())
        .collect();
    let h_isos: Vec<GroupHom> = enumerate_homs(&a.h, &b.h)
        .into_iter()
        .filter(|f| f.is_bijective())
        .collect();
    for pg in &g_isos {
        for ph in &h_isos {
            let t_ok = (0..a.h.order()).all(|x| pg.apply(a.t.apply(x)) == b.t.apply(ph.apply(x)));
            if !t_ok {
                continue;
            }
            let alpha_ok = (0..a.g.order()).all(|gx| {
                (0..a.h.order())
                    .all(|x| ph.apply(a.alpha.apply(gx, x)) == b.alpha.apply(pg.apply(gx), ph.apply(x)))
            });
            if alpha_ok {
                return Some((pg.clone(), ph.clone()));
            }
        }
    }
    None
}
