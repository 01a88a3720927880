//! Skeletal classifying data: a group, an abelian coefficient module, and a
//! degree-3 cocycle.

use thiserror::Error;

use crate::cohomology::{differential_at, CochainError, GModule, NormalizedCochain};
use crate::finite_algebra::{
    validate_action_abelian, AbelianError, FinAbGroup, FiniteGroup, GAction,
};
use crate::twogroups::strict::{strict_to_crossed, StrictTwoGroup};

/// The classifying quadruple `(G, H, alpha, a)`: a finite group, an abelian
/// group of invariant factors, an action of `G` on `H`, and a normalized
/// degree-3 cocycle `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    module: GModule,
    a: NormalizedCochain,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadrupleError {
    #[error("cocycle belongs to a different module")]
    MismatchedModule,
    #[error("associator cochain has degree {got}, expected 3")]
    WrongDegree { got: usize },
    #[error("associator is not closed: nonzero differential at {0:?}")]
    NotCocycle(Vec<usize>),
    #[error("morphism {f} has different source and target")]
    NotSkeletal { f: usize },
    #[error("coefficients are not a valid abelian group: {0}")]
    InvalidCoefficients(#[from] AbelianError),
    #[error("invalid module data: {0}")]
    InvalidModule(#[from] CochainError),
}

impl QuadrupleError {
    pub fn code(&self) -> &'static str {
        match self {
            QuadrupleError::MismatchedModule => "MismatchedModule",
            QuadrupleError::WrongDegree { .. } => "WrongDegree",
            QuadrupleError::NotCocycle(_) => "NotCocycle",
            QuadrupleError::NotSkeletal { .. } => "NotSkeletal",
            QuadrupleError::InvalidCoefficients(_) => "InvalidCoefficients",
            QuadrupleError::InvalidModule(_) => "InvalidModule",
        }
    }
}

impl Quadruple {
    /// Checks that `a` is a normalized degree-3 cocycle over `module`.
    pub fn new(module: GModule, a: NormalizedCochain) -> Result<Quadruple, QuadrupleError> {
        if a.module() != &module {
            return Err(QuadrupleError::MismatchedModule);
        }
        if a.degree() != 3 {
            return Err(QuadrupleError::WrongDegree { got: a.degree() });
        }
        for idx in 0..module.tuple_count(4) {
            let tuple = module.index_tuple(idx, 4);
            if differential_at(&a, &tuple) != 0 {
                return Err(QuadrupleError::NotCocycle(tuple));
            }
        }
        Ok(Quadruple { module, a })
    }

    /// The quadruple with vanishing associator.
    pub fn strict(module: &GModule) -> Quadruple {
        Quadruple {
            module: module.clone(),
            a: NormalizedCochain::zero(module, 3),
        }
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn group(&self) -> &FiniteGroup {
        self.module.group()
    }

    pub fn coeffs(&self) -> &FinAbGroup {
        self.module.coeffs()
    }

    pub fn alpha(&self) -> &GAction {
        self.module.action()
    }

    pub fn a(&self) -> &NormalizedCochain {
        &self.a
    }
}

/// Extracts the quadruple of a skeletal strict 2-group (one where every
/// morphism is an endomorphism): `G = C0`, `H = ker s` in canonical abelian
/// coordinates, `alpha` by conjugation with identity morphisms, and `a = 0`.
pub fn skeletal_strict_to_quadruple(st: &StrictTwoGroup) -> Result<Quadruple, QuadrupleError> {
    for f in 0..st.c1().order() {
        if st.source(f) != st.target(f) {
            return Err(QuadrupleError::NotSkeletal { f });
        }
    }
    let (cm, _) = strict_to_crossed(st);
    let (hab, to_group) = FinAbGroup::from_finite_group(cm.h())?;
    let mut to_ab = vec![0usize; to_group.len()];
    for (a, &x) in to_group.iter().enumerate() {
        to_ab[x] = a;
    }
    let perms: Vec<Vec<usize>> = (0..st.c0().order())
        .map(|g| {
            (0..hab.order())
                .map(|a| to_ab[cm.alpha().apply(g, to_group[a])])
                .collect()
        })
        .collect();
    let alpha = validate_action_abelian(st.c0(), &hab, &perms)
        .map_err(CochainError::InvalidAction)?;
    let module = GModule::new(st.c0().clone(), hab, alpha)?;
    let a = NormalizedCochain::zero(&module, 3);
    Quadruple::new(module, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::{cyclic_group, validate_action};
    use crate::twogroups::crossed::{aut2group, trivial_t_crossed};
    use crate::twogroups::strict::crossed_to_strict;

    fn negation_module() -> GModule {
        let z2 = cyclic_group(2).unwrap();
        let h = FinAbGroup::new(vec![3]).unwrap();
        let alpha = validate_action_abelian(&z2, &h, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        GModule::new(z2, h, alpha).unwrap()
    }

    #[test]
    fn zero_associator_is_valid() {
        let q = Quadruple::strict(&negation_module());
        assert!(q.a().is_zero());
        assert_eq!(q.group().order(), 2);
        assert_eq!(q.coeffs().invariant_factors(), &[3]);
    }

    #[test]
    fn nontrivial_cocycle_on_z2() {
        // a(1,1,1) = 1 in z2 coefficients: the nontrivial class
        let z2 = cyclic_group(2).unwrap();
        let h = FinAbGroup::new(vec![2]).unwrap();
        let module = GModule::trivial_module(z2, h);
        let mut values = vec![0; 8];
        values[7] = 1;
        let a = NormalizedCochain::from_values(&module, 3, values).unwrap();
        let q = Quadruple::new(module, a).unwrap();
        assert!(!q.a().is_zero());
    }

    #[test]
    fn non_cocycle_rejected() {
        // on z3 trivial module, the spike at (1,1,1) is not closed
        let z3 = cyclic_group(3).unwrap();
        let h = FinAbGroup::new(vec![3]).unwrap();
        let module = GModule::trivial_module(z3, h);
        let mut values = vec![0; 27];
        values[module.tuple_index(&[1, 1, 1])] = 1;
        let a = NormalizedCochain::from_values(&module, 3, values).unwrap();
        let err = Quadruple::new(module, a).unwrap_err();
        assert!(matches!(err, QuadrupleError::NotCocycle(_)));
    }

    #[test]
    fn wrong_degree_rejected() {
        let module = negation_module();
        let a = NormalizedCochain::zero(&module, 2);
        assert!(matches!(
            Quadruple::new(module, a),
            Err(QuadrupleError::WrongDegree { got: 2 })
        ));
    }

    #[test]
    fn skeletal_extraction_recovers_action() {
        let z2 = cyclic_group(2).unwrap();
        let z3 = cyclic_group(3).unwrap();
        let alpha = validate_action(&z2, &z3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let cm = trivial_t_crossed(&z2, &z3, &alpha).unwrap();
        let st = crossed_to_strict(&cm);
        let q = skeletal_strict_to_quadruple(&st).unwrap();
        assert_eq!(q.group().order(), 2);
        assert_eq!(q.coeffs().invariant_factors(), &[3]);
        assert!(q.a().is_zero());
        // negation survives the coordinate change
        assert_eq!(q.alpha().apply(1, 1), q.coeffs().neg(1));
    }

    #[test]
    fn non_skeletal_strict_rejected() {
        let s3 = {
            let perms: Vec<Vec<usize>> = vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0],
            ];
            let table = perms
                .iter()
                .map(|p| {
                    perms
                        .iter()
                        .map(|q| {
                            let pq: Vec<usize> = (0..3).map(|x| p[q[x]]).collect();
                            perms.iter().position(|r| *r == pq).unwrap()
                        })
                        .collect()
                })
                .collect();
            crate::finite_algebra::validate_group(table).unwrap()
        };
        let st = crossed_to_strict(&aut2group(&s3, 24).unwrap());
        assert!(matches!(
            skeletal_strict_to_quadruple(&st),
            Err(QuadrupleError::NotSkeletal { .. })
        ));
    }

    #[test]
    fn skeletal_extraction_handles_nonelementary_kernel() {
        // trivial action of z2 on z4: kernel group is cyclic of order 4
        let z2 = cyclic_group(2).unwrap();
        let z4 = cyclic_group(4).unwrap();
        let cm = trivial_t_crossed(&z2, &z4, &GAction::trivial(&z2, 4)).unwrap();
        let q = skeletal_strict_to_quadruple(&crossed_to_strict(&cm)).unwrap();
        assert_eq!(q.coeffs().invariant_factors(), &[4]);
        assert!(q.alpha().is_trivial());
    }
}
