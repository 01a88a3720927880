//! Homomorphisms of skeletal 2-groups as triples (phi, psi, k), with exact
//! enumeration through the cohomology engine.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::cohomology::{
    closed_cochain_reps, count_closed_cochains, differential_at, is_coboundary, CohomologyError,
    GModule, NormalizedCochain,
};
use crate::finite_algebra::{
    enumerate_additive_maps, enumerate_homs as enumerate_group_homs, validate_action_abelian,
    AdditiveMap, GroupHom,
};
use crate::twogroups::Quadruple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("source and target do not match")]
    EndpointMismatch,
    #[error("{count} candidates exceed the enumeration bound {bound}")]
    BoundExceeded { count: u128, bound: usize },
    #[error("psi is not a module map over phi: witness ({g}, {h})")]
    NotModuleMap { g: usize, h: usize },
    #[error("dk differs from psi a - a' phi^3 at ({x}, {y}, {z})")]
    HomCoherenceFailed { x: usize, y: usize, z: usize },
    #[error("dp differs from k - k' at ({x}, {y})")]
    TwoHomCoherenceFailed { x: usize, y: usize },
    #[error("malformed data: {reason}")]
    Malformed { reason: &'static str },
    #[error("cohomology computation failed: {0}")]
    Cohomology(CohomologyError),
}

impl ClassifyError {
    pub fn code(&self) -> &'static str {
        match self {
            ClassifyError::EndpointMismatch => "EndpointMismatch",
            ClassifyError::BoundExceeded { .. } => "BoundExceeded",
            ClassifyError::NotModuleMap { .. } => "NotModuleMap",
            ClassifyError::HomCoherenceFailed { .. } => "HomCoherenceFailed",
            ClassifyError::TwoHomCoherenceFailed { .. } => "TwoHomCoherenceFailed",
            ClassifyError::Malformed { .. } => "Malformed",
            ClassifyError::Cohomology(_) => "Cohomology",
        }
    }
}

impl From<CohomologyError> for ClassifyError {
    fn from(e: CohomologyError) -> ClassifyError {
        match e {
            CohomologyError::BoundExceeded { needed, bound } => ClassifyError::BoundExceeded {
                count: needed,
                bound,
            },
            other => ClassifyError::Cohomology(other),
        }
    }
}

/// The coefficients of the target pulled back along `phi`: `G` acting on
/// `H'` through `alpha'(phi(-))`.  Cochains measuring a homomorphism (its
/// `k` and any `p` between parallel homomorphisms) live over this module.
pub fn twisted_module(source: &Quadruple, target: &Quadruple, phi: &GroupHom) -> GModule {
    let perms: Vec<Vec<usize>> = (0..source.group().order())
        .map(|g| {
            let pg = phi.apply(g);
            (0..target.coeffs().order())
                .map(|h| target.alpha().apply(pg, h))
                .collect()
        })
        .collect();
    let action = validate_action_abelian(source.group(), target.coeffs(), &perms)
        .expect("a pullback of a valid action along a homomorphism is valid");
    GModule::new(source.group().clone(), target.coeffs().clone(), action)
        .expect("pullback coefficients form a module")
}

fn module_condition_witness(
    source: &Quadruple,
    target: &Quadruple,
    phi: &GroupHom,
    psi: &AdditiveMap,
) -> Option<(usize, usize)> {
    for g in 0..source.group().order() {
        let pg = phi.apply(g);
        for h in 0..source.coeffs().order() {
            if psi.apply(source.alpha().apply(g, h)) != target.alpha().apply(pg, psi.apply(h)) {
                return Some((g, h));
            }
        }
    }
    None
}

/// The degree-3 cochain `psi a - a' phi^3` over the twisted module: the
/// exact obstruction that `k` must bound.
fn coherence_rhs(
    source: &Quadruple,
    target: &Quadruple,
    phi: &GroupHom,
    psi: &AdditiveMap,
    twisted: &GModule,
) -> NormalizedCochain {
    let n = source.group().order();
    let mut values = vec![0usize; n * n * n];
    for z in 0..n {
        for y in 0..n {
            for x in 0..n {
                let lhs = psi.apply(source.a().value_at(&[x, y, z]));
                let rhs = target
                    .a()
                    .value_at(&[phi.apply(x), phi.apply(y), phi.apply(z)]);
                values[x + n * y + n * n * z] = twisted.add(lhs, twisted.coeffs().neg(rhs));
            }
        }
    }
    NormalizedCochain::from_values(twisted, 3, values)
        .expect("the obstruction cochain is normalized")
}

/// A homomorphism of skeletal 2-groups in coordinates: a group map `phi`,
/// a coefficient map `psi` intertwining the actions, and a degree-2 cochain
/// `k` over the twisted module with `dk = psi a - a' phi^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialHom {
    source: Quadruple,
    target: Quadruple,
    phi: GroupHom,
    psi: AdditiveMap,
    k: NormalizedCochain,
}

impl SpecialHom {
    /// Validates every invariant and builds the homomorphism.
    pub fn new(
        source: &Quadruple,
        target: &Quadruple,
        phi: GroupHom,
        psi: AdditiveMap,
        k: NormalizedCochain,
    ) -> Result<SpecialHom, ClassifyError> {
        if phi.source() != source.group() || phi.target() != target.group() {
            return Err(ClassifyError::Malformed {
                reason: "phi must map the source group to the target group",
            });
        }
        if psi.source() != source.coeffs() || psi.target() != target.coeffs() {
            return Err(ClassifyError::Malformed {
                reason: "psi must map the source coefficients to the target coefficients",
            });
        }
        if let Some((g, h)) = module_condition_witness(source, target, &phi, &psi) {
            return Err(ClassifyError::NotModuleMap { g, h });
        }
        let twisted = twisted_module(source, target, &phi);
        if k.module() != &twisted || k.degree() != 2 {
            return Err(ClassifyError::Malformed {
                reason: "k must be a degree-2 cochain over the twisted module",
            });
        }
        let rhs = coherence_rhs(source, target, &phi, &psi, &twisted);
        let n = source.group().order();
        for z in 0..n {
            for y in 0..n {
                for x in 0..n {
                    if differential_at(&k, &[x, y, z]) != rhs.value_at(&[x, y, z]) {
                        return Err(ClassifyError::HomCoherenceFailed { x, y, z });
                    }
                }
            }
        }
        Ok(SpecialHom {
            source: source.clone(),
            target: target.clone(),
            phi,
            psi,
            k,
        })
    }

    /// The identity homomorphism of `q`.
    pub fn identity(q: &Quadruple) -> SpecialHom {
        let phi = GroupHom::identity(q.group());
        let twisted = twisted_module(q, q, &phi);
        let k = NormalizedCochain::zero(&twisted, 2);
        SpecialHom::new(q, q, phi, AdditiveMap::identity(q.coeffs()), k)
            .expect("the identity data satisfies every law")
    }

    pub fn source(&self) -> &Quadruple {
        &self.source
    }

    pub fn target(&self) -> &Quadruple {
        &self.target
    }

    pub fn phi(&self) -> &GroupHom {
        &self.phi
    }

    pub fn psi(&self) -> &AdditiveMap {
        &self.psi
    }

    pub fn k(&self) -> &NormalizedCochain {
        &self.k
    }
}

// shared sweep over (phi, psi) pairs: for each group map, the module-map
// psis and the particular solution of dk = psi a - a' phi^3 where one exists
struct HomPlan {
    phi: GroupHom,
    twisted: GModule,
    solved: Vec<(AdditiveMap, NormalizedCochain)>,
}

fn hom_plans(q: &Quadruple, q2: &Quadruple) -> Vec<HomPlan> {
    let psis = enumerate_additive_maps(q.coeffs(), q2.coeffs());
    enumerate_group_homs(q.group(), q2.group())
        .into_iter()
        .filter_map(|phi| {
            let twisted = twisted_module(q, q2, &phi);
            let solved: Vec<(AdditiveMap, NormalizedCochain)> = psis
                .iter()
                .filter(|psi| module_condition_witness(q, q2, &phi, psi).is_none())
                .filter_map(|psi| {
                    let rhs = coherence_rhs(q, q2, &phi, psi, &twisted);
                    is_coboundary(&rhs).map(|k0| (psi.clone(), k0))
                })
                .collect();
            (!solved.is_empty()).then_some(HomPlan {
                phi,
                twisted,
                solved,
            })
        })
        .collect()
}

/// Exact number of homomorphisms from `q` to `q2` without materializing
/// them.
pub fn count_homs(q: &Quadruple, q2: &Quadruple) -> BigInt {
    hom_plans(q, q2)
        .iter()
        .map(|plan| BigInt::from(plan.solved.len()) * count_closed_cochains(&plan.twisted, 2))
        .sum()
}

/// Every homomorphism from `q` to `q2` in a canonical order: group maps in
/// generator-image order, coefficient maps lexicographically, and the `k`
/// solutions as one particular solution plus each closed 2-cochain.
pub fn enumerate_homs(
    q: &Quadruple,
    q2: &Quadruple,
    cap: usize,
) -> Result<Vec<SpecialHom>, ClassifyError> {
    let plans = hom_plans(q, q2);
    let total: BigInt = plans
        .iter()
        .map(|plan| BigInt::from(plan.solved.len()) * count_closed_cochains(&plan.twisted, 2))
        .sum();
    if total > BigInt::from(cap) {
        return Err(ClassifyError::BoundExceeded {
            count: total.to_u128().unwrap_or(u128::MAX),
            bound: cap,
        });
    }
    let mut out = Vec::new();
    for plan in plans {
        let closed = closed_cochain_reps(&plan.twisted, 2, cap)?;
        for (psi, k0) in plan.solved {
            for z in &closed {
                let k = k0.add(z).expect("solutions share the twisted module");
                out.push(SpecialHom {
                    source: q.clone(),
                    target: q2.clone(),
                    phi: plan.phi.clone(),
                    psi: psi.clone(),
                    k,
                });
            }
        }
    }
    Ok(out)
}

/// The composite `first` then `second`, with
/// `k''(x, y) = psi'(k(x, y)) + k'(phi x, phi y)`.
pub fn compose_homs(first: &SpecialHom, second: &SpecialHom) -> Result<SpecialHom, ClassifyError> {
    if first.target != second.source {
        return Err(ClassifyError::EndpointMismatch);
    }
    let phi = first.phi.then(&second.phi);
    let psi = first.psi.then(&second.psi);
    let twisted = twisted_module(&first.source, &second.target, &phi);
    let n = first.source.group().order();
    let mut values = vec![0usize; n * n];
    for y in 0..n {
        for x in 0..n {
            let pushed = second.psi.apply(first.k.value_at(&[x, y]));
            let outer = second
                .k
                .value_at(&[first.phi.apply(x), first.phi.apply(y)]);
            values[x + n * y] = twisted.add(pushed, outer);
        }
    }
    let k = NormalizedCochain::from_values(&twisted, 2, values)
        .expect("composite comparison data is normalized");
    SpecialHom::new(&first.source, &second.target, phi, psi, k)
}

#[cfg(test)]
pub(crate) fn strict_z2_z2() -> Quadruple {
    use crate::finite_algebra::{cyclic_group, FinAbGroup};
    let z2 = cyclic_group(2).unwrap();
    let h = FinAbGroup::new(vec![2]).unwrap();
    Quadruple::strict(&GModule::trivial_module(z2, h))
}

#[cfg(test)]
pub(crate) fn nontrivial_z2_z2() -> Quadruple {
    let strict = strict_z2_z2();
    let mut values = vec![0usize; 8];
    values[7] = 1;
    let a = NormalizedCochain::from_values(strict.module(), 3, values).unwrap();
    Quadruple::new(strict.module().clone(), a).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::{cyclic_group, FinAbGroup};
    use crate::monoidal_groupoid::{
        brute_force_monoidal_functors, groupoid_from_quadruple, validate_monoidal_functor,
    };

    fn trivial_quadruple() -> Quadruple {
        let g = cyclic_group(1).unwrap();
        Quadruple::strict(&GModule::trivial_module(g, FinAbGroup::trivial()))
    }

    #[test]
    fn identity_hom_validates_and_composes() {
        for q in [strict_z2_z2(), nontrivial_z2_z2()] {
            let id = SpecialHom::identity(&q);
            assert_eq!(compose_homs(&id, &id).unwrap(), id);
        }
    }

    #[test]
    fn strict_z2_z2_has_eight_endomorphisms() {
        let q = strict_z2_z2();
        let homs = enumerate_homs(&q, &q, 1000).unwrap();
        assert_eq!(homs.len(), 8);
        assert_eq!(count_homs(&q, &q), BigInt::from(8));
        assert!(homs.contains(&SpecialHom::identity(&q)));
        // 2 phis x 2 psis x 2 ks: every combination occurs
        for phi_img in 0..2usize {
            for psi_img in 0..2usize {
                let found = homs
                    .iter()
                    .filter(|f| f.phi().apply(1) == phi_img && f.psi().apply(1) == psi_img)
                    .count();
                assert_eq!(found, 2);
            }
        }
    }

    #[test]
    fn trivial_target_admits_exactly_one_hom() {
        let q = nontrivial_z2_z2();
        let t = trivial_quadruple();
        let homs = enumerate_homs(&q, &t, 1000).unwrap();
        assert_eq!(homs.len(), 1);
    }

    #[test]
    fn counts_match_brute_force_functors() {
        let pairs = [
            (strict_z2_z2(), strict_z2_z2()),
            (nontrivial_z2_z2(), nontrivial_z2_z2()),
            (strict_z2_z2(), nontrivial_z2_z2()),
            (nontrivial_z2_z2(), strict_z2_z2()),
        ];
        for (q, q2) in pairs {
            let homs = enumerate_homs(&q, &q2, 10_000).unwrap();
            let (ms, _) = groupoid_from_quadruple(&q);
            let (md, _) = groupoid_from_quadruple(&q2);
            let functors = brute_force_monoidal_functors(&ms, &md, true, 1 << 24).unwrap();
            assert_eq!(homs.len(), functors.len());
        }
    }

    #[test]
    fn enumerated_homs_transport_to_valid_functors() {
        let q = nontrivial_z2_z2();
        let (m, _) = groupoid_from_quadruple(&q);
        for f in enumerate_homs(&q, &q, 1000).unwrap() {
            let functor = crate::classification::special_hom_to_functor(&f);
            assert_eq!(validate_monoidal_functor(&m, &m, &functor), Ok(()));
        }
    }

    #[test]
    fn composition_agrees_with_functor_composition() {
        let q = strict_z2_z2();
        let homs = enumerate_homs(&q, &q, 1000).unwrap();
        let (m, _) = groupoid_from_quadruple(&q);
        for f in &homs {
            for g in &homs {
                let direct =
                    crate::classification::special_hom_to_functor(&compose_homs(f, g).unwrap());
                let staged = crate::monoidal_groupoid::compose_functors(
                    &m,
                    &crate::classification::special_hom_to_functor(f),
                    &crate::classification::special_hom_to_functor(g),
                );
                assert_eq!(direct, staged);
            }
        }
    }

    #[test]
    fn endpoint_mismatch_and_bounds_are_reported() {
        let q = strict_z2_z2();
        let id_q = SpecialHom::identity(&q);
        let id_t = SpecialHom::identity(&trivial_quadruple());
        assert_eq!(
            compose_homs(&id_q, &id_t),
            Err(ClassifyError::EndpointMismatch)
        );
        assert!(matches!(
            enumerate_homs(&q, &q, 3),
            Err(ClassifyError::BoundExceeded { count: 8, bound: 3 })
        ));
    }

    #[test]
    fn invalid_triples_are_rejected_with_witnesses() {
        let strict = strict_z2_z2();
        let nontriv = nontrivial_z2_z2();
        // k = 0 cannot intertwine identity psi between distinct classes
        let phi = GroupHom::identity(strict.group());
        let psi = AdditiveMap::identity(strict.coeffs());
        let twisted = twisted_module(&strict, &nontriv, &phi);
        let k = NormalizedCochain::zero(&twisted, 2);
        assert_eq!(
            SpecialHom::new(&strict, &nontriv, phi, psi, k),
            Err(ClassifyError::HomCoherenceFailed { x: 1, y: 1, z: 1 })
        );
        // psi failing the module condition over a nontrivial action
        let z2 = cyclic_group(2).unwrap();
        let z3 = FinAbGroup::new(vec![3]).unwrap();
        let neg = crate::finite_algebra::validate_action_abelian(
            &z2,
            &z3,
            &[vec![0, 1, 2], vec![0, 2, 1]],
        )
        .unwrap();
        let q_neg = Quadruple::strict(&GModule::new(z2.clone(), z3.clone(), neg).unwrap());
        let q_triv = Quadruple::strict(&GModule::trivial_module(z2, z3));
        let phi = GroupHom::identity(q_neg.group());
        let psi = AdditiveMap::identity(q_neg.coeffs());
        let twisted = twisted_module(&q_neg, &q_triv, &phi);
        let k = NormalizedCochain::zero(&twisted, 2);
        assert_eq!(
            SpecialHom::new(&q_neg, &q_triv, phi, psi, k),
            Err(ClassifyError::NotModuleMap { g: 1, h: 1 })
        );
    }
}
