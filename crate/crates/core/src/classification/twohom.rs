//! 2-homomorphisms between parallel homomorphisms: degree-1 cochains `p`
//! with twisted coboundary `k - k'`.

use crate::cohomology::{closed_cochain_reps, differential_at, is_coboundary, NormalizedCochain};
use crate::classification::hom::{ClassifyError, SpecialHom};

/// A 2-cell from `first` to `second`: a normalized degree-1 cochain `p`
/// over the shared twisted module with `dp = k - k'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoHom {
    first: SpecialHom,
    second: SpecialHom,
    p: NormalizedCochain,
}

impl TwoHom {
    /// Validates and builds a 2-cell between parallel homomorphisms.
    pub fn new(
        first: &SpecialHom,
        second: &SpecialHom,
        p: NormalizedCochain,
    ) -> Result<TwoHom, ClassifyError> {
        if first.source() != second.source() || first.target() != second.target() {
            return Err(ClassifyError::EndpointMismatch);
        }
        if first.phi() != second.phi() || first.psi() != second.psi() {
            return Err(ClassifyError::Malformed {
                reason: "a 2-cell requires equal phi and psi components",
            });
        }
        if p.module() != first.k().module() || p.degree() != 1 {
            return Err(ClassifyError::Malformed {
                reason: "p must be a degree-1 cochain over the twisted module",
            });
        }
        let gap = first
            .k()
            .sub(second.k())
            .expect("parallel homomorphisms share the twisted module");
        let n = first.source().group().order();
        for y in 0..n {
            for x in 0..n {
                if differential_at(&p, &[x, y]) != gap.value_at(&[x, y]) {
                    return Err(ClassifyError::TwoHomCoherenceFailed { x, y });
                }
            }
        }
        Ok(TwoHom {
            first: first.clone(),
            second: second.clone(),
            p,
        })
    }

    /// The identity 2-cell on `f`.
    pub fn identity(f: &SpecialHom) -> TwoHom {
        TwoHom::new(f, f, NormalizedCochain::zero(f.k().module(), 1))
            .expect("the zero cochain bounds k - k = 0")
    }

    pub fn first(&self) -> &SpecialHom {
        &self.first
    }

    pub fn second(&self) -> &SpecialHom {
        &self.second
    }

    pub fn p(&self) -> &NormalizedCochain {
        &self.p
    }
}

/// Every 2-cell from `first` to `second` in a canonical order; empty when
/// the homomorphisms differ in `phi` or `psi` or when `k - k'` is not exact.
pub fn enumerate_2homs(
    first: &SpecialHom,
    second: &SpecialHom,
    cap: usize,
) -> Result<Vec<TwoHom>, ClassifyError> {
    if first.source() != second.source() || first.target() != second.target() {
        return Err(ClassifyError::EndpointMismatch);
    }
    if first.phi() != second.phi() || first.psi() != second.psi() {
        return Ok(Vec::new());
    }
    let gap = first
        .k()
        .sub(second.k())
        .expect("parallel homomorphisms share the twisted module");
    let Some(p0) = is_coboundary(&gap) else {
        return Ok(Vec::new());
    };
    let closed = closed_cochain_reps(first.k().module(), 1, cap)?;
    closed
        .iter()
        .map(|z| {
            let p = p0.add(z).expect("solutions share the twisted module");
            TwoHom::new(first, second, p)
        })
        .collect()
}

/// Pastes 2-cells `a: F => G` and `b: G => H` into `F => H` with
/// `p'' = p + p'`.
pub fn vertical_compose_2homs(a: &TwoHom, b: &TwoHom) -> Result<TwoHom, ClassifyError> {
    if a.second != b.first {
        return Err(ClassifyError::EndpointMismatch);
    }
    let p = a
        .p
        .add(&b.p)
        .expect("pasted 2-cells share the twisted module");
    TwoHom::new(&a.first, &b.second, p)
}
