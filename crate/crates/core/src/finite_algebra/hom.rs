//! Group homomorphisms and their brute-force enumeration.

use thiserror::Error;

use super::group::FiniteGroup;

/// A homomorphism between Cayley-table groups, stored as the full map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("expected a map of length {0}, got {1}")]
    WrongLength(usize, usize),
    #[error("image of element {0} is out of range")]
    OutOfRange(usize),
    #[error("identity is not sent to the identity")]
    IdentityNotPreserved,
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotHomomorphic(usize, usize),
}

impl HomError {
    pub fn code(&self) -> &'static str {
        match self {
            HomError::WrongLength(_, _) => "WrongLength",
            HomError::OutOfRange(_) => "OutOfRange",
            HomError::IdentityNotPreserved => "IdentityNotPreserved",
            HomError::NotHomomorphic(_, _) => "NotHomomorphic",
        }
    }
}

/// Checks the homomorphism law on a full map table.
pub fn validate_hom(
    source: &FiniteGroup,
    target: &FiniteGroup,
    map: Vec<usize>,
) -> Result<GroupHom, HomError> {
    if map.len() != source.order() {
        return Err(HomError::WrongLength(source.order(), map.len()));
    }
    for (x, &y) in map.iter().enumerate() {
        if y >= target.order() {
            return Err(HomError::OutOfRange(x));
        }
    }
    if map[0] != 0 {
        return Err(HomError::IdentityNotPreserved);
    }
    for a in 0..source.order() {
        for b in 0..source.order() {
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(HomError::NotHomomorphic(a, b));
            }
        }
    }
    Ok(GroupHom {
        source: source.clone(),
        target: target.clone(),
        map,
    })
}

impl GroupHom {
    pub fn trivial(source: &FiniteGroup, target: &FiniteGroup) -> GroupHom {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            map: vec![0; source.order()],
        }
    }

    pub fn identity(g: &FiniteGroup) -> GroupHom {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.order()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().for_each(|&y| seen[y] = true);
        self.source.order() == self.target.order() && seen.iter().all(|&s| s)
    }

    /// `other` after `self` (apply `self` first).
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(
            self.target, other.source,
            "composition endpoint mismatch"
        );
        GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        }
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> GroupHom {
        assert!(self.is_bijective(), "only bijective maps invert");
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        GroupHom {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        }
    }
}

/// All homomorphisms from `source` to `target`, ordered lexicographically by
/// map table.  The trivial homomorphism is always present (and sorts first).
pub fn enumerate_homs(source: &FiniteGroup, target: &FiniteGroup) -> Vec<GroupHom> {
    let gens = source.generators();
    // breadth-first discovery order from the identity along generator edges
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; source.order()];
    let mut order = vec![0usize];
    let mut seen = vec![false; source.order()];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for (gi, &g) in gens.iter().enumerate() {
            let y = source.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, gi));
                order.push(y);
            }
        }
    }
    let gen_orders: Vec<usize> = gens.iter().map(|&g| source.element_order(g)).collect();
    let mut homs = Vec::new();
    let mut images = vec![0usize; gens.len()];
    enumerate_rec(
        source, target, &gens, &gen_orders, &parent, &order, 0, &mut images, &mut homs,
    );
    homs.sort_by(|a, b| a.map.cmp(&b.map));
    homs
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    gen_orders: &[usize],
    parent: &[Option<(usize, usize)>],
    order: &[usize],
    i: usize,
    images: &mut Vec<usize>,
    out: &mut Vec<GroupHom>,
) {
    if i < gens.len() {
        for y in 0..target.order() {
            if gen_orders[i] % target.element_order(y) == 0 {
                images[i] = y;
                enumerate_rec(
                    source, target, gens, gen_orders, parent, order, i + 1, images, out,
                );
            }
        }
        return;
    }
    // build the candidate map along the spanning tree
    let mut map = vec![0usize; source.order()];
    for &x in &order[1..] {
        let (p, gi) = parent[x].unwrap();
        map[x] = target.mul(map[p], images[gi]);
    }
    // check every generator edge; this pins down the homomorphism law
    for x in 0..source.order() {
        for (gi, &g) in gens.iter().enumerate() {
            if map[source.mul(x, g)] != target.mul(map[x], images[gi]) {
                return;
            }
        }
    }
    out.push(GroupHom {
        source: source.clone(),
        target: target.clone(),
        map,
    });
}
