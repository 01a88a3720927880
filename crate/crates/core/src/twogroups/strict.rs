//! Strict 2-groups as group objects in categories: a group of objects, a
//! group of morphisms, and source/target/identity homomorphisms.

use thiserror::Error;

use crate::finite_algebra::{validate_group, validate_hom, FiniteGroup, GroupHom, HomError};
use crate::twogroups::crossed::{from_parts, CrossedModule};

/// A strict 2-group: groups `C0` (objects) and `C1` (morphisms) with
/// source/target maps `s, t: C1 -> C0` and identity section `i: C0 -> C1`,
/// all homomorphisms, whose induced composition satisfies the category laws
/// and interchange.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictTwoGroup {
    c0: FiniteGroup,
    c1: FiniteGroup,
    s: GroupHom,
    t: GroupHom,
    i: GroupHom,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrictError {
    #[error("{which} is not a homomorphism: {err}")]
    NotHomomorphic { which: &'static str, err: HomError },
    #[error("{which}(i({x})) != {x}: i is not a section")]
    SectionFailed { which: &'static str, x: usize },
    #[error("morphisms {f} and {g} are not composable")]
    NotComposable { f: usize, g: usize },
    #[error("composite of {f} then {g} given as {given}, expected {expected}")]
    CompositionMismatch {
        f: usize,
        g: usize,
        given: usize,
        expected: usize,
    },
    #[error("no composite given for composable pair {f} then {g}")]
    CompositionIncomplete { f: usize, g: usize },
    #[error("identity at object {x} is not a unit for morphism {f}")]
    UnitLawFailed { x: usize, f: usize },
    #[error("composition is not associative at ({f}, {g}, {h})")]
    AssociativityFailed { f: usize, g: usize, h: usize },
    #[error("interchange fails at pairs ({f}, {g}) and ({fp}, {gp})")]
    InterchangeFailed {
        f: usize,
        g: usize,
        fp: usize,
        gp: usize,
    },
}

impl StrictError {
    pub fn code(&self) -> &'static str {
        match self {
            StrictError::NotHomomorphic { .. } => "NotHomomorphic",
            StrictError::SectionFailed { .. } => "SectionFailed",
            StrictError::NotComposable { .. } => "NotComposable",
            StrictError::CompositionMismatch { .. } => "CompositionMismatch",
            StrictError::CompositionIncomplete { .. } => "CompositionIncomplete",
            StrictError::UnitLawFailed { .. } => "UnitLawFailed",
            StrictError::AssociativityFailed { .. } => "AssociativityFailed",
            StrictError::InterchangeFailed { .. } => "InterchangeFailed",
        }
    }
}

/// Validates the maps and all category laws.  When `comp` triples
/// `(f, g, g after f)` are supplied they must cover exactly the composable
/// pairs and agree with the composite forced by the group structure.
pub fn validate_strict_two_group(
    c0: &FiniteGroup,
    c1: &FiniteGroup,
    s_map: Vec<usize>,
    t_map: Vec<usize>,
    i_map: Vec<usize>,
    comp: Option<&[(usize, usize, usize)]>,
) -> Result<StrictTwoGroup, StrictError> {
    let hom = |which: &'static str, src: &FiniteGroup, tgt: &FiniteGroup, map: Vec<usize>| {
        validate_hom(src, tgt, map).map_err(|err| StrictError::NotHomomorphic { which, err })
    };
    let s = hom("s", c1, c0, s_map)?;
    let t = hom("t", c1, c0, t_map)?;
    let i = hom("i", c0, c1, i_map)?;
    for x in 0..c0.order() {
        if s.apply(i.apply(x)) != x {
            return Err(StrictError::SectionFailed { which: "s", x });
        }
        if t.apply(i.apply(x)) != x {
            return Err(StrictError::SectionFailed { which: "t", x });
        }
    }
    let st = StrictTwoGroup {
        c0: c0.clone(),
        c1: c1.clone(),
        s,
        t,
        i,
    };
    if let Some(triples) = comp {
        let mut seen = vec![false; c1.order() * c1.order()];
        for &(f, g, fg) in triples {
            match st.compose(f, g) {
                None => return Err(StrictError::NotComposable { f, g }),
                Some(expected) => {
                    if fg != expected {
                        return Err(StrictError::CompositionMismatch {
                            f,
                            g,
                            given: fg,
                            expected,
                        });
                    }
                }
            }
            seen[f * c1.order() + g] = true;
        }
        for f in 0..c1.order() {
            for g in 0..c1.order() {
                if st.composable(f, g) && !seen[f * c1.order() + g] {
                    return Err(StrictError::CompositionIncomplete { f, g });
                }
            }
        }
    }
    st.check_laws()?;
    Ok(st)
}

impl StrictTwoGroup {
    pub fn c0(&self) -> &FiniteGroup {
        &self.c0
    }

    pub fn c1(&self) -> &FiniteGroup {
        &self.c1
    }

    pub fn s(&self) -> &GroupHom {
        &self.s
    }

    pub fn t(&self) -> &GroupHom {
        &self.t
    }

    pub fn i(&self) -> &GroupHom {
        &self.i
    }

    pub fn source(&self, f: usize) -> usize {
        self.s.apply(f)
    }

    pub fn target(&self, f: usize) -> usize {
        self.t.apply(f)
    }

    pub fn identity(&self, x: usize) -> usize {
        self.i.apply(x)
    }

    pub fn composable(&self, f: usize, g: usize) -> bool {
        self.t.apply(f) == self.s.apply(g)
    }

    /// Composite `f` then `g`, defined when `t(f) = s(g)`.  Composition in a
    /// group object is forced: `g * i(t(f))^-1 * f` in `C1`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        if !self.composable(f, g) {
            return None;
        }
        let mid = self.c1.inv(self.i.apply(self.t.apply(f)));
        Some(self.c1.mul(self.c1.mul(g, mid), f))
    }

    /// The compositional inverse `i(s(f)) * f^-1 * i(t(f))`.
    pub fn vertical_inverse(&self, f: usize) -> usize {
        let a = self.i.apply(self.s.apply(f));
        let b = self.i.apply(self.t.apply(f));
        self.c1.mul(self.c1.mul(a, self.c1.inv(f)), b)
    }

    /// All composition triples `(f, g, g after f)` in lexicographic order.
    pub fn comp_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.c1.order() {
            for g in 0..self.c1.order() {
                if let Some(fg) = self.compose(f, g) {
                    out.push((f, g, fg));
                }
            }
        }
        out
    }

    fn check_laws(&self) -> Result<(), StrictError> {
        let n = self.c1.order();
        for f in 0..n {
            let x = self.source(f);
            let y = self.target(f);
            if self.compose(self.identity(x), f) != Some(f) {
                return Err(StrictError::UnitLawFailed { x, f });
            }
            if self.compose(f, self.identity(y)) != Some(f) {
                return Err(StrictError::UnitLawFailed { x: y, f });
            }
        }
        let mut composable_pairs = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if self.composable(f, g) {
                    composable_pairs.push((f, g));
                }
            }
        }
        for &(f, g) in &composable_pairs {
            let fg = self.compose(f, g).unwrap();
            if self.source(fg) != self.source(f) || self.target(fg) != self.target(g) {
                return Err(StrictError::AssociativityFailed { f, g, h: fg });
            }
            for h in 0..n {
                if !self.composable(g, h) {
                    continue;
                }
                let left = self.compose(fg, h).unwrap();
                let right = self.compose(f, self.compose(g, h).unwrap()).unwrap();
                if left != right {
                    return Err(StrictError::AssociativityFailed { f, g, h });
                }
            }
        }
        for &(f, g) in &composable_pairs {
            for &(fp, gp) in &composable_pairs {
                let lhs = self
                    .c1
                    .mul(self.compose(f, g).unwrap(), self.compose(fp, gp).unwrap());
                let rhs = self
                    .compose(self.c1.mul(f, fp), self.c1.mul(g, gp))
                    .expect("products of composable pairs are composable");
                if lhs != rhs {
                    return Err(StrictError::InterchangeFailed { f, g, fp, gp });
                }
            }
        }
        Ok(())
    }
}

/// Builds the strict 2-group of a crossed module: `C1 = H x| G` with
/// `(h, g) * (h', g') = (h * alpha(g, h'), g g')`, morphism `(h, g)` encoded
/// as `h + |H| * g`, running from `g` to `t(h) g`.
pub fn crossed_to_strict(cm: &CrossedModule) -> StrictTwoGroup {
    let (g, h) = (cm.g(), cm.h());
    let (ng, nh) = (g.order(), h.order());
    let n1 = nh * ng;
    let mut table = vec![vec![0usize; n1]; n1];
    for (a, row) in table.iter_mut().enumerate() {
        let (ha, ga) = (a % nh, a / nh);
        for (b, entry) in row.iter_mut().enumerate() {
            let (hb, gb) = (b % nh, b / nh);
            *entry = h.mul(ha, cm.alpha().apply(ga, hb)) + nh * g.mul(ga, gb);
        }
    }
    let c1 = validate_group(table).expect("semidirect product is a group");
    let s_map: Vec<usize> = (0..n1).map(|a| a / nh).collect();
    let t_map: Vec<usize> = (0..n1)
        .map(|a| g.mul(cm.t().apply(a % nh), a / nh))
        .collect();
    let i_map: Vec<usize> = (0..ng).map(|x| nh * x).collect();
    validate_strict_two_group(g, &c1, s_map, t_map, i_map, None)
        .expect("crossed module laws give a strict 2-group")
}

/// Recovers a crossed module from a strict 2-group: `H = ker s` with its own
/// multiplication table (elements listed by increasing `C1` index), `t`
/// restricted to the kernel, and `G = C0` acting by conjugation with
/// identity morphisms.  Also returns the embedding of kernel indices into
/// `C1`.
pub fn strict_to_crossed(st: &StrictTwoGroup) -> (CrossedModule, Vec<usize>) {
    let ker: Vec<usize> = (0..st.c1.order()).filter(|&f| st.source(f) == 0).collect();
    let pos = |f: usize| ker.binary_search(&f).expect("kernel is closed");
    let table: Vec<Vec<usize>> = ker
        .iter()
        .map(|&a| ker.iter().map(|&b| pos(st.c1.mul(a, b))).collect())
        .collect();
    let h = validate_group(table).expect("kernel of s is a group");
    let t_map: Vec<usize> = ker.iter().map(|&f| st.target(f)).collect();
    let t = validate_hom(&h, &st.c0, t_map).expect("t restricts to the kernel");
    let perms: Vec<Vec<usize>> = (0..st.c0.order())
        .map(|x| {
            let ix = st.identity(x);
            ker.iter().map(|&f| pos(st.c1.conjugate(ix, f))).collect()
        })
        .collect();
    let alpha = crate::finite_algebra::validate_action(&st.c0, &h, &perms)
        .expect("conjugation by identities acts on the kernel");
    let cm = from_parts(st.c0.clone(), h, t, alpha).expect("kernel data is a crossed module");
    (cm, ker)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_algebra::{cyclic_group, validate_action};
    use crate::twogroups::crossed::{
        aut2group, central_extension_crossed, crossed_isomorphic, trivial_t_crossed,
        validate_crossed_module,
    };

    fn s3() -> FiniteGroup {
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
        validate_group(table).unwrap()
    }

    fn z2_on_z3() -> CrossedModule {
        let z2 = cyclic_group(2).unwrap();
        let z3 = cyclic_group(3).unwrap();
        let alpha = validate_action(&z2, &z3, &[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        trivial_t_crossed(&z2, &z3, &alpha).unwrap()
    }

    fn one_object_strict(h: &FiniteGroup) -> Result<StrictTwoGroup, StrictError> {
        let triv = FiniteGroup::trivial();
        validate_strict_two_group(
            &triv,
            h,
            vec![0; h.order()],
            vec![0; h.order()],
            vec![0],
            None,
        )
    }

    #[test]
    fn semidirect_strict_from_crossed() {
        let st = crossed_to_strict(&z2_on_z3());
        assert_eq!(st.c0().order(), 2);
        assert_eq!(st.c1().order(), 6);
        // (h, g) = h + 3g: source g, target g (trivial t)
        assert_eq!(st.source(1 + 3), 1);
        assert_eq!(st.target(1 + 3), 1);
        // composing endomorphisms of 0 adds the h parts
        assert_eq!(st.compose(1, 2), Some(0));
        assert_eq!(st.compose(1, 1), Some(2));
        // morphisms over different objects do not compose
        assert_eq!(st.compose(1, 4), None);
    }

    #[test]
    fn strict_composite_matches_semidirect_formula() {
        // conjugation module on s3: C1 = s3 x| s3 of order 36
        let g = s3();
        let t_map: Vec<usize> = (0..6).collect();
        let perms: Vec<Vec<usize>> = (0..6)
            .map(|x| (0..6).map(|y| g.conjugate(x, y)).collect())
            .collect();
        let cm = validate_crossed_module(&g, &g, t_map, &perms).unwrap();
        let st = crossed_to_strict(&cm);
        assert_eq!(st.c1().order(), 36);
        for f in 0..36 {
            for gm in 0..36 {
                if let Some(c) = st.compose(f, gm) {
                    // (h, g) then (h', t(h) g) = (h' h, g)
                    let (hf, gf) = (f % 6, f / 6);
                    let hg = gm % 6;
                    assert_eq!(c, g.mul(hg, hf) + 6 * gf);
                }
            }
        }
    }

    #[test]
    fn round_trip_is_exact_for_builder_output() {
        let cms = vec![
            z2_on_z3(),
            aut2group(&s3(), 24).unwrap(),
            central_extension_crossed(
                &validate_hom(
                    &cyclic_group(4).unwrap(),
                    &cyclic_group(2).unwrap(),
                    vec![0, 1, 0, 1],
                )
                .unwrap(),
            )
            .unwrap(),
        ];
        for cm in cms {
            let st = crossed_to_strict(&cm);
            let (back, embed) = strict_to_crossed(&st);
            assert_eq!(back, cm);
            assert_eq!(embed, (0..cm.h().order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn round_trip_up_to_isomorphism_in_general() {
        let cm = aut2group(&cyclic_group(4).unwrap(), 24).unwrap();
        let st = crossed_to_strict(&cm);
        let (back, _) = strict_to_crossed(&st);
        assert!(crossed_isomorphic(&cm, &back).is_some());
    }

    #[test]
    fn one_object_requires_abelian() {
        assert!(one_object_strict(&cyclic_group(4).unwrap()).is_ok());
        let err = one_object_strict(&s3()).unwrap_err();
        assert!(matches!(err, StrictError::InterchangeFailed { .. }));
    }

    #[test]
    fn discrete_strict_has_identity_morphisms_only() {
        let g = s3();
        let n: Vec<usize> = (0..g.order()).collect();
        let st = validate_strict_two_group(&g, &g, n.clone(), n.clone(), n, None).unwrap();
        for f in 0..6 {
            assert_eq!(st.source(f), st.target(f));
            assert_eq!(st.compose(f, f), Some(f));
        }
    }

    #[test]
    fn section_failure_detected() {
        let z2 = cyclic_group(2).unwrap();
        let z4 = cyclic_group(4).unwrap();
        // i sends 1 to 2 and s = t = reduction mod 2, so s(i(1)) = 0 != 1
        let err = validate_strict_two_group(
            &z2,
            &z4,
            vec![0, 1, 0, 1],
            vec![0, 1, 0, 1],
            vec![0, 2],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, StrictError::SectionFailed { which: "s", x: 1 }));
    }

    #[test]
    fn comp_triples_checked_against_structure() {
        let st = crossed_to_strict(&z2_on_z3());
        let good = st.comp_triples();
        let c0 = st.c0().clone();
        let c1 = st.c1().clone();
        let rebuild = |triples: &[(usize, usize, usize)]| {
            validate_strict_two_group(
                &c0,
                &c1,
                st.s().map().to_vec(),
                st.t().map().to_vec(),
                st.i().map().to_vec(),
                Some(triples),
            )
        };
        assert_eq!(rebuild(&good).unwrap(), st);

        let mut bad = good.clone();
        bad[1].2 = (bad[1].2 + 1) % c1.order();
        assert!(matches!(
            rebuild(&bad).unwrap_err(),
            StrictError::CompositionMismatch { .. }
        ));

        assert!(matches!(
            rebuild(&good[..good.len() - 1]).unwrap_err(),
            StrictError::CompositionIncomplete { .. }
        ));

        assert!(matches!(
            rebuild(&[(1, 4, 0)]).unwrap_err(),
            StrictError::NotComposable { f: 1, g: 4 }
        ));
    }

    #[test]
    fn vertical_inverse_undoes_composition() {
        let st = crossed_to_strict(&aut2group(&s3(), 24).unwrap());
        for f in 0..st.c1().order() {
            let g = st.vertical_inverse(f);
            assert_eq!(st.source(g), st.target(f));
            assert_eq!(st.compose(f, g), Some(st.identity(st.source(f))));
            assert_eq!(st.compose(g, f), Some(st.identity(st.target(f))));
        }
    }

    #[test]
    fn kernel_action_uses_identity_conjugation() {
        let st = crossed_to_strict(&z2_on_z3());
        let (cm, _) = strict_to_crossed(&st);
        // the negation action is recovered
        assert_eq!(cm.alpha().apply(1, 1), 2);
        assert_eq!(cm.alpha().apply(1, 2), 1);
        assert_eq!(cm.alpha().perms(), z2_on_z3().alpha().perms());
    }
}
