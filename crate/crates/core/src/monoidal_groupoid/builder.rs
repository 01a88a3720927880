//! The skeletal groupoid model of a quadruple and the inverse conversion.

use thiserror::Error;

use crate::cohomology::{CochainError, GModule, NormalizedCochain};
use crate::finite_algebra::{
    validate_action_abelian, validate_group, FinAbGroup, GroupError,
};
use crate::monoidal_groupoid::groupoid::{
    validate_monoidal_groupoid, MonoidalGroupoid, MonoidalGroupoidData,
};
use crate::twogroups::{Quadruple, QuadrupleError};

/// Per-object inverse data: an object `xbar` with unit `i_x: 1 -> x (x) xbar`
/// and counit `e_x: xbar (x) x -> 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceEntry {
    pub xbar: usize,
    pub i_mor: usize,
    pub e_mor: usize,
}

/// A choice of weak-inverse data for every object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseChoice {
    entries: Vec<ChoiceEntry>,
}

impl InverseChoice {
    pub fn new(entries: Vec<ChoiceEntry>) -> InverseChoice {
        InverseChoice { entries }
    }

    pub fn entries(&self) -> &[ChoiceEntry] {
        &self.entries
    }

    pub fn entry(&self, x: usize) -> &ChoiceEntry {
        &self.entries[x]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToQuadrupleError {
    #[error("not skeletal: morphisms exist from {x} to {y}")]
    NotSkeletal { x: usize, y: usize },
    #[error("unit constraint at object {x}: lunit or runit is not an identity")]
    UnitsNotIdentity { x: usize },
    #[error("objects do not form a group under tensor: {0}")]
    ObjectsNotGroup(GroupError),
    #[error("endomorphisms of the unit object do not commute")]
    EndomorphismsNotAbelian,
    #[error("extracted data is not a valid quadruple: {0}")]
    InvalidQuadruple(#[from] QuadrupleError),
}

impl ToQuadrupleError {
    pub fn code(&self) -> &'static str {
        match self {
            ToQuadrupleError::NotSkeletal { .. } => "NotSkeletal",
            ToQuadrupleError::UnitsNotIdentity { .. } => "UnitsNotIdentity",
            ToQuadrupleError::ObjectsNotGroup(_) => "ObjectsNotGroup",
            ToQuadrupleError::EndomorphismsNotAbelian => "EndomorphismsNotAbelian",
            ToQuadrupleError::InvalidQuadruple(_) => "InvalidQuadruple",
        }
    }
}

/// Raw groupoid tables for an arbitrary normalized 3-cochain `a` (no cocycle
/// requirement): objects are the group elements, `hom(x, x)` is the
/// coefficient group, morphism `(x, h)` has global index `x * |H| + h`, and
/// the associator component at `(x, y, z)` has coordinate `a(x, y, z)`.
/// Validation passes the pentagon exactly when `a` is a cocycle.
pub fn groupoid_data_from_cochain(a: &NormalizedCochain) -> MonoidalGroupoidData {
    assert_eq!(a.degree(), 3, "associator data must be a 3-cochain");
    let module = a.module();
    let g = module.group();
    let nh = module.coeffs().order();
    let n = g.order();
    let n_mor = n * nh;
    let obj = |f: usize| f / nh;
    let coord = |f: usize| f % nh;
    let comp = (0..n_mor)
        .map(|f| {
            (0..n_mor)
                .map(|gm| {
                    (obj(f) == obj(gm))
                        .then(|| obj(f) * nh + module.add(coord(f), coord(gm)))
                })
                .collect()
        })
        .collect();
    let tensor_mor = (0..n_mor)
        .map(|f| {
            (0..n_mor)
                .map(|gm| {
                    g.mul(obj(f), obj(gm)) * nh
                        + module.add(coord(f), module.act(obj(f), coord(gm)))
                })
                .collect()
        })
        .collect();
    let mut assoc = vec![0usize; n * n * n];
    for z in 0..n {
        for y in 0..n {
            for x in 0..n {
                assoc[x + n * y + n * n * z] =
                    g.mul(g.mul(x, y), z) * nh + a.value_at(&[x, y, z]);
            }
        }
    }
    MonoidalGroupoidData {
        n_objects: n,
        unit: 0,
        src: (0..n_mor).map(obj).collect(),
        tgt: (0..n_mor).map(obj).collect(),
        comp,
        tensor_obj: g.table().to_vec(),
        tensor_mor,
        assoc,
        lunit: (0..n).map(|x| x * nh).collect(),
        runit: (0..n).map(|x| x * nh).collect(),
    }
}

/// The groupoid model of a quadruple, with the canonical coherent inverse
/// choice: `xbar = x^-1`, `i_x` the identity coordinate, and `e_x` with
/// coordinate `a(xbar, x, xbar)`.
pub fn groupoid_from_quadruple(q: &Quadruple) -> (MonoidalGroupoid, InverseChoice) {
    let data = groupoid_data_from_cochain(q.a());
    let n_mor = data.src.len();
    let m = validate_monoidal_groupoid(data, n_mor)
        .expect("a cocycle associator satisfies every law");
    let g = q.group();
    let entries = (0..g.order())
        .map(|x| {
            let xbar = g.inv(x);
            ChoiceEntry {
                xbar,
                i_mor: 0,
                e_mor: q.a().value_at(&[xbar, x, xbar]),
            }
        })
        .collect();
    (m, InverseChoice::new(entries))
}

/// Reads the quadruple back off a skeletal groupoid with identity unit
/// constraints: `G` = objects under tensor, `H` = endomorphisms of the unit
/// in canonical abelian coordinates, `alpha(g, -)` by tensoring with
/// identities of `g` and its inverse, `a` from associator coordinates.
pub fn groupoid_to_quadruple(m: &MonoidalGroupoid) -> Result<Quadruple, ToQuadrupleError> {
    for f in 0..m.n_morphisms() {
        if m.src(f) != m.tgt(f) {
            return Err(ToQuadrupleError::NotSkeletal {
                x: m.src(f),
                y: m.tgt(f),
            });
        }
    }
    for x in 0..m.n_objects() {
        if m.lunit(x) != m.identity(x) || m.runit(x) != m.identity(x) {
            return Err(ToQuadrupleError::UnitsNotIdentity { x });
        }
    }
    let table: Vec<Vec<usize>> = (0..m.n_objects())
        .map(|x| (0..m.n_objects()).map(|y| m.tensor_obj(x, y)).collect())
        .collect();
    let g = validate_group(table).map_err(ToQuadrupleError::ObjectsNotGroup)?;

    // endomorphisms of the unit object, identity first
    let mut end1 = m.hom(0, 0);
    let id_pos = end1
        .iter()
        .position(|&f| f == m.identity(0))
        .expect("identity is an endomorphism of the unit");
    end1.swap(0, id_pos);
    if id_pos != 0 {
        end1[1..].sort_unstable();
    }
    let mut local = vec![usize::MAX; m.n_morphisms()];
    for (i, &f) in end1.iter().enumerate() {
        local[f] = i;
    }
    for &f in &end1 {
        for &e in &end1 {
            if m.compose(f, e) != m.compose(e, f) {
                return Err(ToQuadrupleError::EndomorphismsNotAbelian);
            }
        }
    }
    let end_table: Vec<Vec<usize>> = end1
        .iter()
        .map(|&f| {
            end1.iter()
                .map(|&e| local[m.compose(f, e).expect("unit endomorphisms compose")])
                .collect()
        })
        .collect();
    let end_group = validate_group(end_table).expect("unit endomorphisms form a group");
    let (hab, to_group) = FinAbGroup::from_finite_group(&end_group)
        .map_err(|_| ToQuadrupleError::EndomorphismsNotAbelian)?;
    let mut to_ab = vec![0usize; to_group.len()];
    for (c, &i) in to_group.iter().enumerate() {
        to_ab[i] = c;
    }

    // coordinate of an endomorphism of w, transported to the unit object by
    // tensoring with the identity of the tensor inverse of w
    let transport = |f: usize, w: usize| -> usize {
        let u = m.tensor_mor(f, m.identity(g.inv(w)));
        to_ab[local[u]]
    };
    let perms: Vec<Vec<usize>> = (0..g.order())
        .map(|gx| {
            (0..hab.order())
                .map(|c| {
                    let h_mor = end1[to_group[c]];
                    let u = m.tensor_mor(m.identity(gx), h_mor);
                    transport(u, gx)
                })
                .collect()
        })
        .collect();
    let alpha = validate_action_abelian(&g, &hab, &perms)
        .map_err(|e| QuadrupleError::from(CochainError::InvalidAction(e)))?;
    let module = GModule::new(g.clone(), hab, alpha).map_err(QuadrupleError::from)?;
    let n = g.order();
    let mut values = vec![0usize; n * n * n];
    for z in 0..n {
        for y in 0..n {
            for x in 0..n {
                let w = g.mul(g.mul(x, y), z);
                values[x + n * y + n * n * z] = transport(m.assoc(x, y, z), w);
            }
        }
    }
    let a = NormalizedCochain::from_values(&module, 3, values).map_err(QuadrupleError::from)?;
    Ok(Quadruple::new(module, a)?)
}

/// Trivial module of (Z/2, Z/2) for builder tests.
#[cfg(test)]
pub(crate) fn z2_z2_module() -> GModule {
    use crate::finite_algebra::cyclic_group;
    let z2 = cyclic_group(2).unwrap();
    let h = FinAbGroup::new(vec![2]).unwrap();
    GModule::trivial_module(z2, h)
}

/// The quadruple of (Z/2, Z/2, trivial) with the nonzero cocycle class.
#[cfg(test)]
pub(crate) fn nontrivial_z2_quadruple() -> Quadruple {
    let module = z2_z2_module();
    let mut values = vec![0; 8];
    values[7] = 1;
    let a = NormalizedCochain::from_values(&module, 3, values).unwrap();
    Quadruple::new(module, a).unwrap()
}
