//! Transport of coordinate homomorphisms to the groupoid models, the
//! derived inverse-comparison table, and strictification when the
//! associator class vanishes.

use crate::cohomology::is_coboundary;
use crate::finite_algebra::{AdditiveMap, GroupHom};
use crate::monoidal_groupoid::{groupoid_from_quadruple, MonoidalFunctor, MonoidalNatTrans};
use crate::twogroups::Quadruple;

use crate::classification::hom::SpecialHom;
use crate::classification::twohom::TwoHom;

/// The weak monoidal functor between builder groupoids presented by a
/// coordinate homomorphism: objects map by `phi`, endomorphism coordinates
/// by `psi`, and the comparison at `(x, y)` has coordinate `k(x, y)`.
pub fn special_hom_to_functor(f: &SpecialHom) -> MonoidalFunctor {
    let n = f.source().group().order();
    let nh = f.source().coeffs().order();
    let nh2 = f.target().coeffs().order();
    let f_obj: Vec<usize> = (0..n).map(|x| f.phi().apply(x)).collect();
    let f_mor: Vec<usize> = (0..n * nh)
        .map(|m| f.phi().apply(m / nh) * nh2 + f.psi().apply(m % nh))
        .collect();
    let mut f2 = vec![0usize; n * n];
    for y in 0..n {
        for x in 0..n {
            let obj = f
                .target()
                .group()
                .mul(f.phi().apply(x), f.phi().apply(y));
            f2[x + n * y] = obj * nh2 + f.k().value_at(&[x, y]);
        }
    }
    MonoidalFunctor {
        f_obj,
        f_mor,
        f2,
        f0: 0,
    }
}

/// The monoidal natural transformation presented by a 2-cell: the
/// component at `x` is the endomorphism of `phi(x)` with coordinate `p(x)`.
pub fn two_hom_to_nat_trans(t: &TwoHom) -> MonoidalNatTrans {
    let f = t.first();
    let n = f.source().group().order();
    let nh2 = f.target().coeffs().order();
    let theta = (0..n)
        .map(|x| f.phi().apply(x) * nh2 + t.p().value_at(&[x]))
        .collect();
    MonoidalNatTrans { theta }
}

/// The unique per-object comparison between the chosen weak inverse of the
/// image and the image of the chosen weak inverse, solved through the
/// groupoid models: at each object the counit compatibility square pins the
/// morphism down, and the unit compatibility square is then checked to
/// hold.  Returns the coordinate table indexed by source objects.
pub fn derive_f_minus1(f: &SpecialHom) -> Vec<usize> {
    let (ms, cs) = groupoid_from_quadruple(f.source());
    let (mt, ct) = groupoid_from_quadruple(f.target());
    let functor = special_hom_to_functor(f);
    let nh2 = f.target().coeffs().order();
    (0..ms.n_objects())
        .map(|x| {
            let fx = functor.f_obj[x];
            let src_entry = cs.entry(x);
            let xbar = src_entry.xbar;
            let tgt_entry = ct.entry(fx);
            let candidates = mt.hom(tgt_entry.xbar, functor.f_obj[xbar]);
            let rhs = mt.compose_chain(&[functor.f0, functor.f_mor[src_entry.i_mor]]);
            let solutions: Vec<usize> = candidates
                .iter()
                .copied()
                .filter(|&c| {
                    let lhs = mt.compose_chain(&[
                        tgt_entry.i_mor,
                        mt.tensor_mor(mt.identity(fx), c),
                        functor.f2_at(x, xbar),
                    ]);
                    lhs == rhs
                })
                .collect();
            assert_eq!(
                solutions.len(),
                1,
                "exactly one comparison solves the unit square at object {x}"
            );
            let c = solutions[0];
            let counit_lhs = mt.compose_chain(&[
                mt.tensor_mor(c, mt.identity(fx)),
                functor.f2_at(xbar, x),
                functor.f_mor[src_entry.e_mor],
            ]);
            let counit_rhs = mt.compose_chain(&[tgt_entry.e_mor, functor.f0]);
            assert_eq!(
                counit_lhs, counit_rhs,
                "the derived comparison satisfies the counit square at object {x}"
            );
            c % nh2
        })
        .collect()
}

/// When the associator class vanishes, the strict quadruple over the same
/// module together with the homomorphism `(id, id, w)` onto it, where `w`
/// bounds the associator exactly; `None` when the class is nonzero.
pub fn strictify_if_coboundary(q: &Quadruple) -> Option<(Quadruple, SpecialHom)> {
    let w = is_coboundary(q.a())?;
    let strict = Quadruple::strict(q.module());
    let hom = SpecialHom::new(
        q,
        &strict,
        GroupHom::identity(q.group()),
        AdditiveMap::identity(q.coeffs()),
        w,
    )
    .expect("an exact bounding cochain satisfies the homomorphism laws");
    Some((strict, hom))
}
