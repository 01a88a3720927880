//! Weak monoidal functors and monoidal natural transformations between
//! explicit-table monoidal groupoids, with brute-force enumeration.

use thiserror::Error;

use crate::monoidal_groupoid::groupoid::MonoidalGroupoid;

/// A candidate weak monoidal functor: object map, morphism map, the tensor
/// comparison `f2[x + n*y]: F(x) (x) F(y) -> F(x (x) y)`, and the unit
/// comparison `f0: 1' -> F(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalFunctor {
    pub f_obj: Vec<usize>,
    pub f_mor: Vec<usize>,
    pub f2: Vec<usize>,
    pub f0: usize,
}

impl MonoidalFunctor {
    pub fn f2_at(&self, x: usize, y: usize) -> usize {
        self.f2[x + self.f_obj.len() * y]
    }
}

/// A candidate monoidal natural transformation: one component per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalNatTrans {
    pub theta: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("malformed data: {reason}")]
    Malformed { reason: &'static str },
    #[error("law violated ({reason}) at {witness:?}")]
    LawFailed {
        reason: &'static str,
        witness: Vec<usize>,
    },
    #[error("{count} candidates exceed the enumeration bound {bound}")]
    BoundExceeded { count: u128, bound: u128 },
}

impl FunctorError {
    pub fn code(&self) -> &'static str {
        match self {
            FunctorError::Malformed { .. } => "Malformed",
            FunctorError::LawFailed { .. } => "LawFailed",
            FunctorError::BoundExceeded { .. } => "BoundExceeded",
        }
    }
}

fn law(reason: &'static str, witness: Vec<usize>) -> FunctorError {
    FunctorError::LawFailed { reason, witness }
}

/// Checks functoriality, the typing of `f2` and `f0`, naturality of `f2`,
/// and the associator and unit coherence squares, all exhaustively.
pub fn validate_monoidal_functor(
    src: &MonoidalGroupoid,
    dst: &MonoidalGroupoid,
    f: &MonoidalFunctor,
) -> Result<(), FunctorError> {
    let n = src.n_objects();
    let n_mor = src.n_morphisms();
    if f.f_obj.len() != n || f.f_obj.iter().any(|&x| x >= dst.n_objects()) {
        return Err(FunctorError::Malformed {
            reason: "object map must send objects to objects",
        });
    }
    if f.f_mor.len() != n_mor || f.f_mor.iter().any(|&m| m >= dst.n_morphisms()) {
        return Err(FunctorError::Malformed {
            reason: "morphism map must send morphisms to morphisms",
        });
    }
    if f.f2.len() != n * n || f.f2.iter().any(|&m| m >= dst.n_morphisms()) {
        return Err(FunctorError::Malformed {
            reason: "f2 must list one morphism per object pair",
        });
    }
    if f.f0 >= dst.n_morphisms() {
        return Err(FunctorError::Malformed {
            reason: "f0 out of range",
        });
    }
    for m in 0..n_mor {
        let fm = f.f_mor[m];
        if dst.src(fm) != f.f_obj[src.src(m)] || dst.tgt(fm) != f.f_obj[src.tgt(m)] {
            return Err(law("morphism image has wrong endpoints", vec![m]));
        }
    }
    for x in 0..n {
        if f.f_mor[src.identity(x)] != dst.identity(f.f_obj[x]) {
            return Err(law("identities not preserved", vec![x]));
        }
    }
    for a in 0..n_mor {
        for b in 0..n_mor {
            if let Some(ab) = src.compose(a, b) {
                let direct = f.f_mor[ab];
                let composed = dst
                    .compose(f.f_mor[a], f.f_mor[b])
                    .expect("images of a composable pair are composable");
                if direct != composed {
                    return Err(law("composition not preserved", vec![a, b]));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let c = f.f2_at(x, y);
            let want_src = dst.tensor_obj(f.f_obj[x], f.f_obj[y]);
            let want_tgt = f.f_obj[src.tensor_obj(x, y)];
            if dst.src(c) != want_src || dst.tgt(c) != want_tgt {
                return Err(law("f2 component ill-typed", vec![x, y]));
            }
        }
    }
    if dst.src(f.f0) != dst.unit() || dst.tgt(f.f0) != f.f_obj[src.unit()] {
        return Err(law("f0 ill-typed", vec![]));
    }
    // naturality of f2 in both arguments
    for a in 0..n_mor {
        for b in 0..n_mor {
            let lhs = dst
                .compose(f.f2_at(src.src(a), src.src(b)), f.f_mor[src.tensor_mor(a, b)])
                .unwrap();
            let rhs = dst
                .compose(
                    dst.tensor_mor(f.f_mor[a], f.f_mor[b]),
                    f.f2_at(src.tgt(a), src.tgt(b)),
                )
                .unwrap();
            if lhs != rhs {
                return Err(law("f2 not natural", vec![a, b]));
            }
        }
    }
    // associator compatibility
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let xy = src.tensor_obj(x, y);
                let yz = src.tensor_obj(y, z);
                let lhs = dst.compose_chain(&[
                    dst.tensor_mor(f.f2_at(x, y), dst.identity(f.f_obj[z])),
                    f.f2_at(xy, z),
                    f.f_mor[src.assoc(x, y, z)],
                ]);
                let rhs = dst.compose_chain(&[
                    dst.assoc(f.f_obj[x], f.f_obj[y], f.f_obj[z]),
                    dst.tensor_mor(dst.identity(f.f_obj[x]), f.f2_at(y, z)),
                    f.f2_at(x, yz),
                ]);
                if lhs != rhs {
                    return Err(law("associator square fails", vec![x, y, z]));
                }
            }
        }
    }
    // unit compatibility
    for x in 0..n {
        let lhs = dst.lunit(f.f_obj[x]);
        let rhs = dst.compose_chain(&[
            dst.tensor_mor(f.f0, dst.identity(f.f_obj[x])),
            f.f2_at(src.unit(), x),
            f.f_mor[src.lunit(x)],
        ]);
        if lhs != rhs {
            return Err(law("left unit square fails", vec![x]));
        }
        let lhs = dst.runit(f.f_obj[x]);
        let rhs = dst.compose_chain(&[
            dst.tensor_mor(dst.identity(f.f_obj[x]), f.f0),
            f.f2_at(x, src.unit()),
            f.f_mor[src.runit(x)],
        ]);
        if lhs != rhs {
            return Err(law("right unit square fails", vec![x]));
        }
    }
    Ok(())
}

/// The composite functor `first` then `second`.
pub fn compose_functors(
    dst: &MonoidalGroupoid,
    first: &MonoidalFunctor,
    second: &MonoidalFunctor,
) -> MonoidalFunctor {
    let n = first.f_obj.len();
    let f_obj: Vec<usize> = first.f_obj.iter().map(|&x| second.f_obj[x]).collect();
    let f_mor = first.f_mor.iter().map(|&m| second.f_mor[m]).collect();
    let mut f2 = vec![0usize; n * n];
    for y in 0..n {
        for x in 0..n {
            f2[x + n * y] = dst
                .compose(
                    second.f2_at(first.f_obj[x], first.f_obj[y]),
                    second.f_mor[first.f2_at(x, y)],
                )
                .expect("composite comparison morphisms are composable");
        }
    }
    let f0 = dst
        .compose(second.f0, second.f_mor[first.f0])
        .expect("composite unit comparisons are composable");
    MonoidalFunctor {
        f_obj,
        f_mor,
        f2,
        f0,
    }
}

// iterates the cartesian product of the candidate lists, first slot fastest
fn for_each_assignment(slots: &[Vec<usize>], mut visit: impl FnMut(&[usize])) {
    if slots.iter().any(|s| s.is_empty()) {
        return;
    }
    let mut idx = vec![0usize; slots.len()];
    loop {
        let current: Vec<usize> = idx.iter().zip(slots).map(|(&i, s)| s[i]).collect();
        visit(&current);
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < slots[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn candidate_count(slots: &[Vec<usize>]) -> u128 {
    slots
        .iter()
        .map(|s| s.len() as u128)
        .fold(1u128, |acc, k| acc.saturating_mul(k))
}

// typed candidate slots for one object assignment: all morphism images, all
// f2 components, then f0
fn functor_slots(
    src: &MonoidalGroupoid,
    dst: &MonoidalGroupoid,
    f_obj: &[usize],
    f0_identity: bool,
) -> Vec<Vec<usize>> {
    let n = src.n_objects();
    let mut slots = Vec::with_capacity(src.n_morphisms() + n * n + 1);
    for m in 0..src.n_morphisms() {
        slots.push(dst.hom(f_obj[src.src(m)], f_obj[src.tgt(m)]));
    }
    for y in 0..n {
        for x in 0..n {
            slots.push(dst.hom(
                dst.tensor_obj(f_obj[x], f_obj[y]),
                f_obj[src.tensor_obj(x, y)],
            ));
        }
    }
    let unit_id = dst.identity(dst.unit());
    let f0_candidates: Vec<usize> = dst
        .hom(dst.unit(), f_obj[src.unit()])
        .into_iter()
        .filter(|&c| !f0_identity || c == unit_id)
        .collect();
    slots.push(f0_candidates);
    slots
}

// f2 slots above are pushed row-major in y, so reorder into x + n*y
fn assemble(src: &MonoidalGroupoid, assignment: &[usize]) -> MonoidalFunctor {
    let n = src.n_objects();
    let n_mor = src.n_morphisms();
    let f_mor = assignment[..n_mor].to_vec();
    let mut f2 = vec![0usize; n * n];
    for y in 0..n {
        for x in 0..n {
            f2[x + n * y] = assignment[n_mor + x + n * y];
        }
    }
    MonoidalFunctor {
        f_obj: Vec::new(),
        f_mor,
        f2,
        f0: assignment[n_mor + n * n],
    }
}

/// Enumerates every weak monoidal functor from `src` to `dst` by sweeping
/// all typed candidates, in a canonical deterministic order.  When
/// `f0_identity` holds, only functors whose unit comparison is the identity
/// are kept.
pub fn brute_force_monoidal_functors(
    src: &MonoidalGroupoid,
    dst: &MonoidalGroupoid,
    f0_identity: bool,
    cap: u128,
) -> Result<Vec<MonoidalFunctor>, FunctorError> {
    let n = src.n_objects();
    let mut obj_maps = Vec::new();
    let obj_slots: Vec<Vec<usize>> = vec![(0..dst.n_objects()).collect(); n];
    for_each_assignment(&obj_slots, |a| obj_maps.push(a.to_vec()));
    let total: u128 = obj_maps
        .iter()
        .map(|f_obj| candidate_count(&functor_slots(src, dst, f_obj, f0_identity)))
        .fold(0u128, |acc, k| acc.saturating_add(k));
    if total > cap {
        return Err(FunctorError::BoundExceeded {
            count: total,
            bound: cap,
        });
    }
    let mut out = Vec::new();
    for f_obj in obj_maps {
        let slots = functor_slots(src, dst, &f_obj, f0_identity);
        for_each_assignment(&slots, |assignment| {
            let mut f = assemble(src, assignment);
            f.f_obj = f_obj.clone();
            if validate_monoidal_functor(src, dst, &f).is_ok() {
                out.push(f);
            }
        });
    }
    Ok(out)
}

/// Checks component typing, naturality, and the tensor and unit squares of
/// a monoidal natural transformation from `f` to `g`.
pub fn validate_monoidal_nat_trans(
    src: &MonoidalGroupoid,
    dst: &MonoidalGroupoid,
    f: &MonoidalFunctor,
    g: &MonoidalFunctor,
    t: &MonoidalNatTrans,
) -> Result<(), FunctorError> {
    let n = src.n_objects();
    if t.theta.len() != n || t.theta.iter().any(|&m| m >= dst.n_morphisms()) {
        return Err(FunctorError::Malformed {
            reason: "one component per object required",
        });
    }
    for x in 0..n {
        if dst.src(t.theta[x]) != f.f_obj[x] || dst.tgt(t.theta[x]) != g.f_obj[x] {
            return Err(law("component ill-typed", vec![x]));
        }
    }
    for m in 0..src.n_morphisms() {
        let lhs = dst.compose(f.f_mor[m], t.theta[src.tgt(m)]).unwrap();
        let rhs = dst.compose(t.theta[src.src(m)], g.f_mor[m]).unwrap();
        if lhs != rhs {
            return Err(law("component not natural", vec![m]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = src.tensor_obj(x, y);
            let lhs = dst.compose(f.f2_at(x, y), t.theta[xy]).unwrap();
            let rhs = dst
                .compose(dst.tensor_mor(t.theta[x], t.theta[y]), g.f2_at(x, y))
                .unwrap();
            if lhs != rhs {
                return Err(law("tensor square fails", vec![x, y]));
            }
        }
    }
    let lhs = dst.compose(f.f0, t.theta[src.unit()]).unwrap();
    if lhs != g.f0 {
        return Err(law("unit square fails", vec![]));
    }
    Ok(())
}

/// Enumerates every monoidal natural transformation from `f` to `g` in a
/// canonical deterministic order.
pub fn brute_force_nat_trans(
    src: &MonoidalGroupoid,
    dst: &MonoidalGroupoid,
    f: &MonoidalFunctor,
    g: &MonoidalFunctor,
    cap: u128,
) -> Result<Vec<MonoidalNatTrans>, FunctorError> {
    let slots: Vec<Vec<usize>> = (0..src.n_objects())
        .map(|x| dst.hom(f.f_obj[x], g.f_obj[x]))
        .collect();
    let total = candidate_count(&slots);
    if total > cap {
        return Err(FunctorError::BoundExceeded {
            count: total,
            bound: cap,
        });
    }
    let mut out = Vec::new();
    for_each_assignment(&slots, |assignment| {
        let t = MonoidalNatTrans {
            theta: assignment.to_vec(),
        };
        if validate_monoidal_nat_trans(src, dst, f, g, &t).is_ok() {
            out.push(t);
        }
    });
    Ok(out)
}
