//! Cohomology groups as integer-lattice quotients, computed exactly through
//! Smith normal form.
//!
//! A normalized `n`-cochain is a tuple of coefficient values over the
//! identity-free argument tuples, i.e. an element of `Z^k` modulo the
//! "relation" lattice spanned by `d_j * e` for each coordinate (where `d_j`
//! is the invariant factor of that coordinate's coefficient slot).  The bar
//! differential lifts to an integer matrix on these coordinates, so cocycles,
//! coboundaries, and the quotient all become lattice computations.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::finite_algebra::{
    kernel_basis, mat_vec, smith_normal_form, solve_with, zeros, FinAbGroup, IntMatrixSNF, Mat,
};

use super::cochain::{differential, GModule, NormalizedCochain};

/// Default cap on the cell count of the largest integer matrix built while
/// computing a cohomology group.
pub const DEFAULT_MAX_CELLS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("computation needs {needed} units, exceeding the bound {bound}")]
    BoundExceeded { needed: u128, bound: usize },
    #[error("cohomology is computed in degree 1 and above")]
    DegreeZero,
    #[error("cochain does not belong to this cohomology group's module")]
    MismatchedModule,
    #[error("cochain is not a cocycle")]
    NotCocycle,
}

impl CohomologyError {
    pub fn code(&self) -> &'static str {
        match self {
            CohomologyError::BoundExceeded { .. } => "BoundExceeded",
            CohomologyError::DegreeZero => "DegreeZero",
            CohomologyError::MismatchedModule => "MismatchedModule",
            CohomologyError::NotCocycle => "NotCocycle",
        }
    }
}

/// Number of integer coordinates of a degree-`n` cochain.
fn coord_count(m: &GModule, n: usize) -> usize {
    m.free_slot_count(n) * m.coeffs().rank()
}

/// Integer coordinate vector of a cochain (identity-free slots only).
fn cochain_to_vec(f: &NormalizedCochain) -> Vec<BigInt> {
    let m = f.module();
    let rank = m.coeffs().rank();
    let slots = m.free_slot_count(f.degree());
    let mut v = vec![BigInt::zero(); slots * rank];
    for slot in 0..slots {
        let val = f.values()[m.slot_to_index(slot, f.degree())];
        for (j, &a) in m.coeffs().decode(val).iter().enumerate() {
            v[slot * rank + j] = BigInt::from(a);
        }
    }
    v
}

/// Cochain represented by an integer vector, reduced into canonical ranges.
fn vec_to_cochain(m: &GModule, n: usize, v: &[BigInt]) -> NormalizedCochain {
    let rank = m.coeffs().rank();
    let factors = m.coeffs().invariant_factors().to_vec();
    let mut out = NormalizedCochain::zero(m, n);
    for slot in 0..m.free_slot_count(n) {
        let tuple: Vec<usize> = (0..rank)
            .map(|j| {
                let d = BigInt::from(factors[j]);
                let r = ((&v[slot * rank + j] % &d) + &d) % &d;
                r.to_usize().unwrap()
            })
            .collect();
        let val = m.coeffs().encode(&tuple);
        let args = m.index_tuple(m.slot_to_index(slot, n), n);
        out.set_value(&args, val).unwrap();
    }
    out
}

/// The bar differential lifted to integer coordinates: a
/// `coord_count(n+1) x coord_count(n)` matrix (well defined modulo the
/// target relation lattice).
fn differential_matrix(m: &GModule, n: usize) -> Mat {
    let rank = m.coeffs().rank();
    let k_dom = coord_count(m, n);
    let k_tgt = coord_count(m, n + 1);
    let mut a = zeros(k_tgt, k_dom);
    for slot in 0..m.free_slot_count(n) {
        let args = m.index_tuple(m.slot_to_index(slot, n), n);
        for j in 0..rank {
            let mut basis = NormalizedCochain::zero(m, n);
            basis.set_value(&args, m.coeffs().generator(j)).unwrap();
            let col = cochain_to_vec(&differential(&basis));
            for (r, val) in col.into_iter().enumerate() {
                a[r][slot * rank + j] = val;
            }
        }
    }
    a
}

/// The relation lattice of degree-`n` coordinates: `diag(d_j)` per slot.
fn relation_matrix(m: &GModule, n: usize) -> Mat {
    let rank = m.coeffs().rank();
    let k = coord_count(m, n);
    let factors = m.coeffs().invariant_factors();
    let mut r = zeros(k, k);
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = BigInt::from(factors[i % rank.max(1)]);
    }
    r
}

fn hstack(a: &Mat, b: &Mat) -> Mat {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).cloned().collect())
        .collect()
}

/// Basis (as columns of a full-rank square matrix) of the lattice
/// `{x : A x lies in the target relation lattice}`.
fn cocycle_lattice(a: &Mat, r_tgt: &Mat, k_dom: usize) -> Mat {
    if k_dom == 0 {
        return zeros(0, 0);
    }
    let block = hstack(a, r_tgt);
    let ker = kernel_basis(&block);
    let mut p = zeros(k_dom, ker.len());
    for (c, v) in ker.iter().enumerate() {
        for (r, row) in p.iter_mut().enumerate() {
            row[c] = v[r].clone();
        }
    }
    column_lattice_basis(&p, k_dom)
}

/// Basis of the column lattice of `p`, which must have full rank `dim`:
/// the first `dim` columns of `U^{-1}`, scaled by the diagonal.
fn column_lattice_basis(p: &Mat, dim: usize) -> Mat {
    let snf = smith_normal_form(p);
    assert_eq!(snf.rank, dim, "lattice must have full rank");
    let mut basis = zeros(dim, dim);
    for i in 0..dim {
        for (r, row) in basis.iter_mut().enumerate() {
            row[i] = &snf.u_inv[r][i] * &snf.d[i][i];
        }
    }
    basis
}

/// A finite quotient `L / B` of a full-rank lattice by a finite-index
/// sublattice, with projection and representative maps.
#[derive(Debug, Clone)]
struct LatticeQuotient {
    dim: usize,
    /// invariant factors > 1 and their positions on the SNF diagonal
    factors: Vec<usize>,
    factor_pos: Vec<usize>,
    /// all diagonal entries (for the total order)
    deltas: Vec<BigInt>,
    basis: Mat,
    basis_snf: IntMatrixSNF,
    u_x: Mat,
    u_x_inv: Mat,
}

fn lattice_quotient(basis: Mat, den: &Mat) -> LatticeQuotient {
    let dim = basis.len();
    let basis_snf = smith_normal_form(&basis);
    let cols = if den.is_empty() { 0 } else { den[0].len() };
    let mut x = zeros(dim, cols);
    for c in 0..cols {
        let b: Vec<BigInt> = (0..dim).map(|r| den[r][c].clone()).collect();
        let sol = solve_with(&basis_snf, &b)
            .expect("denominator generators must lie in the numerator lattice");
        for (r, val) in sol.into_iter().enumerate() {
            x[r][c] = val;
        }
    }
    let snf_x = smith_normal_form(&x);
    assert_eq!(snf_x.rank, dim, "quotient must be finite");
    let deltas: Vec<BigInt> = (0..dim).map(|i| snf_x.d[i][i].clone()).collect();
    let mut factors = Vec::new();
    let mut factor_pos = Vec::new();
    for (i, d) in deltas.iter().enumerate() {
        let d = d.to_usize().expect("invariant factor fits a machine word");
        if d > 1 {
            factors.push(d);
            factor_pos.push(i);
        }
    }
    LatticeQuotient {
        dim,
        factors,
        factor_pos,
        deltas,
        basis,
        basis_snf,
        u_x: snf_x.u,
        u_x_inv: snf_x.u_inv,
    }
}

impl LatticeQuotient {
    /// Class coordinates of an integer vector, or `None` when the vector is
    /// not in the numerator lattice.
    fn project_vec(&self, v: &[BigInt]) -> Option<Vec<usize>> {
        let c = solve_with(&self.basis_snf, v)?;
        let z = mat_vec(&self.u_x, &c);
        Some(
            self.factor_pos
                .iter()
                .zip(&self.factors)
                .map(|(&i, &d)| {
                    let db = BigInt::from(d);
                    (((&z[i] % &db) + &db) % &db).to_usize().unwrap()
                })
                .collect(),
        )
    }

    /// An integer vector representing the class with the given coordinates.
    fn rep_vec(&self, coords: &[usize]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.factors.len());
        let mut z = vec![BigInt::zero(); self.dim];
        for (t, &i) in self.factor_pos.iter().enumerate() {
            z[i] = BigInt::from(coords[t]);
        }
        let c = mat_vec(&self.u_x_inv, &z);
        mat_vec(&self.basis, &c)
    }

    /// Total number of classes.
    fn order(&self) -> BigInt {
        self.deltas.iter().product()
    }
}

/// A computed cohomology group: its abstract abelian group, deterministic
/// representative cocycles (one per invariant factor), and exact projection
/// of arbitrary cocycles to class coordinates.
#[derive(Debug, Clone)]
pub struct CohomologyGroup {
    module: GModule,
    degree: usize,
    class_group: FinAbGroup,
    representatives: Vec<NormalizedCochain>,
    quotient: LatticeQuotient,
}

/// Computes `H^n = ker d_n / im d_{n-1}` on the normalized complex.
/// `max_cells` bounds the cell count of the largest matrix involved.
pub fn cohomology_group(
    module: &GModule,
    n: usize,
    max_cells: usize,
) -> Result<CohomologyGroup, CohomologyError> {
    if n == 0 {
        return Err(CohomologyError::DegreeZero);
    }
    let k_prev = coord_count(module, n - 1);
    let k_dom = coord_count(module, n);
    let k_tgt = coord_count(module, n + 1);
    let cells = (k_tgt as u128) * ((k_dom + k_tgt) as u128);
    let den_cells = (k_dom as u128) * ((k_prev + k_dom) as u128);
    let needed = cells.max(den_cells);
    if needed > max_cells as u128 {
        return Err(CohomologyError::BoundExceeded {
            needed,
            bound: max_cells,
        });
    }
    let a_n = differential_matrix(module, n);
    let r_tgt = relation_matrix(module, n + 1);
    let lattice = cocycle_lattice(&a_n, &r_tgt, k_dom);
    let a_prev = differential_matrix(module, n - 1);
    let r_dom = relation_matrix(module, n);
    let den = hstack(&a_prev, &r_dom);
    let quotient = lattice_quotient(lattice, &den);
    let class_group = FinAbGroup::new(quotient.factors.clone())
        .expect("SNF diagonal entries form a divisibility chain");
    let representatives = (0..quotient.factors.len())
        .map(|t| {
            let mut coords = vec![0; quotient.factors.len()];
            coords[t] = 1;
            vec_to_cochain(module, n, &quotient.rep_vec(&coords))
        })
        .collect();
    Ok(CohomologyGroup {
        module: module.clone(),
        degree: n,
        class_group,
        representatives,
        quotient,
    })
}

impl CohomologyGroup {
    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The abstract group `H^n` in invariant-factor form.
    pub fn class_group(&self) -> &FinAbGroup {
        &self.class_group
    }

    pub fn invariant_factors(&self) -> &[usize] {
        self.class_group.invariant_factors()
    }

    pub fn order(&self) -> usize {
        self.class_group.order()
    }

    /// One representative cocycle per invariant factor.
    pub fn representatives(&self) -> &[NormalizedCochain] {
        &self.representatives
    }

    /// Class coordinates of a cocycle (one entry per invariant factor).
    pub fn project(&self, f: &NormalizedCochain) -> Result<Vec<usize>, CohomologyError> {
        if f.module() != &self.module || f.degree() != self.degree {
            return Err(CohomologyError::MismatchedModule);
        }
        self.quotient
            .project_vec(&cochain_to_vec(f))
            .ok_or(CohomologyError::NotCocycle)
    }

    /// A deterministic cocycle representing the class with these coordinates.
    pub fn representative_of(&self, coords: &[usize]) -> NormalizedCochain {
        vec_to_cochain(&self.module, self.degree, &self.quotient.rep_vec(coords))
    }
}

/// A witness `w` with `differential(w) = f`, or `None` when `f` is not a
/// coboundary.  `f` must have degree at least 1.
pub fn is_coboundary(f: &NormalizedCochain) -> Option<NormalizedCochain> {
    let m = f.module();
    let n = f.degree();
    assert!(n >= 1, "coboundaries live in degree 1 and above");
    let k_prev = coord_count(m, n - 1);
    let a_prev = differential_matrix(m, n - 1);
    let r_dom = relation_matrix(m, n);
    let block = hstack(&a_prev, &r_dom);
    let sol = crate::finite_algebra::solve(&block, &cochain_to_vec(f))?;
    Some(vec_to_cochain(m, n - 1, &sol[..k_prev]))
}

/// Whether two cocycles are cohomologous: `f - f'` is a coboundary.
pub fn classes_equal(
    f: &NormalizedCochain,
    g: &NormalizedCochain,
) -> Result<bool, super::cochain::CochainError> {
    Ok(is_coboundary(&f.sub(g)?).is_some())
}

/// Exact number of closed (cocycle) cochains of degree `n`.
pub fn count_closed_cochains(module: &GModule, n: usize) -> BigInt {
    closed_quotient(module, n).order()
}

/// All closed cochains of degree `n`, in a deterministic order, provided
/// there are at most `cap` of them.
pub fn closed_cochain_reps(
    module: &GModule,
    n: usize,
    cap: usize,
) -> Result<Vec<NormalizedCochain>, CohomologyError> {
    let q = closed_quotient(module, n);
    let total = q.order();
    if total > BigInt::from(cap) {
        return Err(CohomologyError::BoundExceeded {
            needed: total.to_u128().unwrap_or(u128::MAX),
            bound: cap,
        });
    }
    let total = total.to_usize().unwrap();
    let mut out = Vec::with_capacity(total);
    let mut coords = vec![0usize; q.factors.len()];
    loop {
        out.push(vec_to_cochain(module, n, &q.rep_vec(&coords)));
        // advance mixed-radix counter over the factor coordinates
        let mut pos = 0;
        loop {
            if pos == coords.len() {
                return Ok(out);
            }
            coords[pos] += 1;
            if coords[pos] < q.factors[pos] {
                break;
            }
            coords[pos] = 0;
            pos += 1;
        }
    }
}

// the group of closed n-cochains, as cocycle lattice / relation lattice
fn closed_quotient(module: &GModule, n: usize) -> LatticeQuotient {
    let k_dom = coord_count(module, n);
    let a_n = differential_matrix(module, n);
    let r_tgt = relation_matrix(module, n + 1);
    let lattice = cocycle_lattice(&a_n, &r_tgt, k_dom);
    let r_dom = relation_matrix(module, n);
    lattice_quotient(lattice, &r_dom)
}
