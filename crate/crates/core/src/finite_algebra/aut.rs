//! Automorphism groups by brute-force bijection search.

use thiserror::Error;

use super::action::{validate_action, GAction};
use super::group::{validate_group, FiniteGroup};
use super::hom::enumerate_homs;

/// Default cap on the order of groups fed to bijection searches.
pub const DEFAULT_MAX_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
}

/// The automorphism group of `h`, as a Cayley table over the automorphisms
/// sorted lexicographically by permutation table, together with its
/// tautological action on `h`.  The identity automorphism sorts first, so it
/// lands at index 0 as the table format requires.
pub fn automorphism_group(
    h: &FiniteGroup,
    max_order: usize,
) -> Result<(FiniteGroup, GAction), AutError> {
    if h.order() > max_order {
        return Err(AutError::OrderBoundExceeded {
            order: h.order(),
            bound: max_order,
        });
    }
    let autos: Vec<Vec<usize>> = enumerate_homs(h, h)
        .into_iter()
        .filter(|f| f.is_bijective())
        .map(|f| f.map().to_vec())
        .collect();
    let index_of = |p: &[usize]| autos.iter().position(|q| q == p).unwrap();
    let table: Vec<Vec<usize>> = autos
        .iter()
        .map(|a| {
            autos
                .iter()
                .map(|b| {
                    let ab: Vec<usize> = (0..h.order()).map(|x| a[b[x]]).collect();
                    index_of(&ab)
                })
                .collect()
        })
        .collect();
    let aut = validate_group(table).expect("automorphisms compose as a group");
    let action = validate_action(&aut, h, &autos).expect("the tautological action is valid");
    Ok((aut, action))
}
