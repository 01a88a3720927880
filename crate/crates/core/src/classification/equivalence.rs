//! Equivalence of quadruples and exact counting of equivalence classes by
//! orbit enumeration on degree-3 cohomology classes.

use crate::cohomology::{classes_equal, cohomology_group, GModule, NormalizedCochain};
use crate::finite_algebra::{
    enumerate_additive_maps, enumerate_homs as enumerate_group_homs, AdditiveMap, GroupHom,
};
use crate::twogroups::Quadruple;

use crate::classification::hom::ClassifyError;

fn transports_action(
    phi: &GroupHom,
    psi: &AdditiveMap,
    src: &GModule,
    dst: &GModule,
) -> bool {
    (0..src.group().order()).all(|g| {
        let pg = phi.apply(g);
        (0..src.coeffs().order()).all(|h| psi.apply(src.act(g, h)) == dst.act(pg, psi.apply(h)))
    })
}

/// `psi a (phi^{-1})^3` as a cochain over the codomain module.
fn pushed_associator(
    a: &NormalizedCochain,
    phi: &GroupHom,
    psi: &AdditiveMap,
    dst: &GModule,
) -> NormalizedCochain {
    let inv = phi.inverse();
    let n = dst.group().order();
    let mut values = vec![0usize; n * n * n];
    for z in 0..n {
        for y in 0..n {
            for x in 0..n {
                values[x + n * y + n * n * z] =
                    psi.apply(a.value_at(&[inv.apply(x), inv.apply(y), inv.apply(z)]));
            }
        }
    }
    NormalizedCochain::from_values(dst, 3, values)
        .expect("a pushed normalized cochain stays normalized")
}

fn iso_pairs(
    src: &GModule,
    dst: &GModule,
    cap: usize,
) -> Result<Vec<(GroupHom, AdditiveMap)>, ClassifyError> {
    if src.group().order() != dst.group().order()
        || src.coeffs().invariant_factors() != dst.coeffs().invariant_factors()
    {
        return Ok(Vec::new());
    }
    let phis: Vec<GroupHom> = enumerate_group_homs(src.group(), dst.group())
        .into_iter()
        .filter(GroupHom::is_bijective)
        .collect();
    let psis: Vec<AdditiveMap> = enumerate_additive_maps(src.coeffs(), dst.coeffs())
        .into_iter()
        .filter(AdditiveMap::is_bijective)
        .collect();
    let count = (phis.len() as u128) * (psis.len() as u128);
    if count > cap as u128 {
        return Err(ClassifyError::BoundExceeded { count, bound: cap });
    }
    let mut pairs = Vec::new();
    for phi in &phis {
        for psi in &psis {
            if transports_action(phi, psi, src, dst) {
                pairs.push((phi.clone(), psi.clone()));
            }
        }
    }
    Ok(pairs)
}

/// Searches for a pair of isomorphisms carrying one quadruple onto the
/// other: `phi` and `psi` transporting the action, with the pushed
/// associator cohomologous to the target's.  Returns the first such pair
/// in canonical order, or `None`.
pub fn equivalent(
    q: &Quadruple,
    q2: &Quadruple,
    cap: usize,
) -> Result<Option<(GroupHom, AdditiveMap)>, ClassifyError> {
    for (phi, psi) in iso_pairs(q.module(), q2.module(), cap)? {
        let pushed = pushed_associator(q.a(), &phi, &psi, q2.module());
        if classes_equal(&pushed, q2.a()).expect("both cochains live over the target module") {
            return Ok(Some((phi, psi)));
        }
    }
    Ok(None)
}

/// Number of orbits of degree-3 cohomology classes of `module` under the
/// pairs of automorphisms preserving the action: the exact count of
/// inequivalent quadruples sharing this module.
pub fn count_equivalence_classes(
    module: &GModule,
    max_cells: usize,
) -> Result<usize, ClassifyError> {
    let coh = cohomology_group(module, 3, max_cells)?;
    let pairs = iso_pairs(module, module, max_cells)?;
    let classes = coh.class_group().order();
    let mut visited = vec![false; classes];
    let mut orbits = 0usize;
    for start in 0..classes {
        if visited[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        visited[start] = true;
        while let Some(c) = stack.pop() {
            let f = coh.representative_of(&coh.class_group().decode(c));
            for (phi, psi) in &pairs {
                let pushed = pushed_associator(&f, phi, psi, module);
                let coords = coh
                    .project(&pushed)
                    .expect("transported classes live in the same group");
                let idx = coh.class_group().encode(&coords);
                if !visited[idx] {
                    visited[idx] = true;
                    stack.push(idx);
                }
            }
        }
    }
    Ok(orbits)
}
