//! Normalized cochains over a finite module and the bar differential.

use thiserror::Error;

use crate::finite_algebra::{validate_action_abelian, ActionError, FinAbGroup, FiniteGroup, GAction};

/// Coefficients for cohomology: an abelian group with an action of `group`
/// by additive automorphisms, plus lookup tables for fast arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModule {
    group: FiniteGroup,
    coeffs: FinAbGroup,
    action: GAction,
    add: Vec<Vec<usize>>,
    neg: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CochainError {
    #[error("group, coefficients, and action do not describe one module")]
    MismatchedModule,
    #[error("action is invalid: {0}")]
    InvalidAction(#[from] ActionError),
    #[error("expected {want} values, got {got}")]
    WrongLength { want: usize, got: usize },
    #[error("value at tuple index {0} is out of range")]
    ValueOutOfRange(usize),
    #[error("normalization fails: nonzero value on identity-containing tuple {0}")]
    NotNormalized(usize),
    #[error("cochain degrees differ")]
    DegreeMismatch,
}

impl CochainError {
    pub fn code(&self) -> &'static str {
        match self {
            CochainError::MismatchedModule => "MismatchedModule",
            CochainError::InvalidAction(_) => "InvalidAction",
            CochainError::WrongLength { .. } => "WrongLength",
            CochainError::ValueOutOfRange(_) => "ValueOutOfRange",
            CochainError::NotNormalized(_) => "NotNormalized",
            CochainError::DegreeMismatch => "DegreeMismatch",
        }
    }
}

impl GModule {
    /// Bundles a group, coefficients, and an action after checking they fit
    /// together (the action's group matches, and it acts additively on the
    /// coefficient encoding).
    pub fn new(
        group: FiniteGroup,
        coeffs: FinAbGroup,
        action: GAction,
    ) -> Result<GModule, CochainError> {
        if action.group() != &group || action.target_order() != coeffs.order() {
            return Err(CochainError::MismatchedModule);
        }
        validate_action_abelian(&group, &coeffs, action.perms())?;
        let m = coeffs.order();
        let add = (0..m)
            .map(|a| (0..m).map(|b| coeffs.add(a, b)).collect())
            .collect();
        let neg = (0..m).map(|a| coeffs.neg(a)).collect();
        Ok(GModule {
            group,
            coeffs,
            action,
            add,
            neg,
        })
    }

    /// The module with every group element acting as the identity.
    pub fn trivial_module(group: FiniteGroup, coeffs: FinAbGroup) -> GModule {
        let action = GAction::trivial(&group, coeffs.order());
        GModule::new(group, coeffs, action).expect("trivial actions are always valid")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &FinAbGroup {
        &self.coeffs
    }

    pub fn action(&self) -> &GAction {
        &self.action
    }

    #[inline]
    pub fn act(&self, g: usize, h: usize) -> usize {
        self.action.apply(g, h)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add[a][self.neg[b]]
    }

    /// Number of degree-`n` argument tuples, `|G|^n`.
    pub fn tuple_count(&self, n: usize) -> usize {
        self.group
            .order()
            .checked_pow(n as u32)
            .expect("tuple space exceeds the address space")
    }

    /// Flat index of an argument tuple (first component least significant).
    pub fn tuple_index(&self, tuple: &[usize]) -> usize {
        let base = self.group.order();
        tuple
            .iter()
            .rev()
            .fold(0, |acc, &g| {
                debug_assert!(g < base);
                acc * base + g
            })
    }

    /// Argument tuple of a flat index.
    pub fn index_tuple(&self, mut idx: usize, n: usize) -> Vec<usize> {
        let base = self.group.order();
        (0..n)
            .map(|_| {
                let g = idx % base;
                idx /= base;
                g
            })
            .collect()
    }

    /// Number of tuples avoiding the identity, `(|G|-1)^n`.
    pub fn free_slot_count(&self, n: usize) -> usize {
        (self.group.order() - 1)
            .checked_pow(n as u32)
            .expect("slot space exceeds the address space")
    }

    /// Flat tuple index of the `slot`-th identity-free tuple.
    pub fn slot_to_index(&self, slot: usize, n: usize) -> usize {
        let base = self.group.order() - 1;
        let mut rest = slot;
        let tuple: Vec<usize> = (0..n)
            .map(|_| {
                let g = rest % base + 1;
                rest /= base;
                g
            })
            .collect();
        self.tuple_index(&tuple)
    }

    /// Total number of normalized `n`-cochains, when it fits in a `u128`.
    pub fn cochain_space_size(&self, n: usize) -> Option<u128> {
        let mut size: u128 = 1;
        for _ in 0..self.free_slot_count(n) {
            size = size.checked_mul(self.coeffs.order() as u128)?;
        }
        Some(size)
    }
}

/// A function from `G`-tuples to coefficient elements that vanishes whenever
/// an argument is the identity, stored densely over all tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedCochain {
    module: GModule,
    degree: usize,
    values: Vec<usize>,
}

impl NormalizedCochain {
    pub fn zero(module: &GModule, degree: usize) -> NormalizedCochain {
        NormalizedCochain {
            values: vec![0; module.tuple_count(degree)],
            module: module.clone(),
            degree,
        }
    }

    /// Builds a cochain from a dense value table, checking range and
    /// normalization.
    pub fn from_values(
        module: &GModule,
        degree: usize,
        values: Vec<usize>,
    ) -> Result<NormalizedCochain, CochainError> {
        let want = module.tuple_count(degree);
        if values.len() != want {
            return Err(CochainError::WrongLength {
                want,
                got: values.len(),
            });
        }
        let order = module.coeffs().order();
        for (idx, &v) in values.iter().enumerate() {
            if v >= order {
                return Err(CochainError::ValueOutOfRange(idx));
            }
            if v != 0 && module.index_tuple(idx, degree).contains(&0) {
                return Err(CochainError::NotNormalized(idx));
            }
        }
        Ok(NormalizedCochain {
            module: module.clone(),
            degree,
            values,
        })
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn value_at(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        self.values[self.module.tuple_index(tuple)]
    }

    /// Sets one entry, enforcing normalization.
    pub fn set_value(&mut self, tuple: &[usize], v: usize) -> Result<(), CochainError> {
        let idx = self.module.tuple_index(tuple);
        if v >= self.module.coeffs().order() {
            return Err(CochainError::ValueOutOfRange(idx));
        }
        if v != 0 && tuple.contains(&0) {
            return Err(CochainError::NotNormalized(idx));
        }
        self.values[idx] = v;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    fn check_compatible(&self, other: &NormalizedCochain) -> Result<(), CochainError> {
        if self.module != other.module {
            return Err(CochainError::MismatchedModule);
        }
        if self.degree != other.degree {
            return Err(CochainError::DegreeMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &NormalizedCochain) -> Result<NormalizedCochain, CochainError> {
        self.check_compatible(other)?;
        Ok(NormalizedCochain {
            module: self.module.clone(),
            degree: self.degree,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| self.module.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &NormalizedCochain) -> Result<NormalizedCochain, CochainError> {
        self.check_compatible(other)?;
        Ok(NormalizedCochain {
            module: self.module.clone(),
            degree: self.degree,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| self.module.sub(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> NormalizedCochain {
        NormalizedCochain {
            module: self.module.clone(),
            degree: self.degree,
            values: self.values.iter().map(|&a| self.module.neg(a)).collect(),
        }
    }

    /// Integer scalar multiple.
    pub fn zmul(&self, n: i64) -> NormalizedCochain {
        let coeffs = self.module.coeffs().clone();
        NormalizedCochain {
            module: self.module.clone(),
            degree: self.degree,
            values: self.values.iter().map(|&a| coeffs.zmul(n, a)).collect(),
        }
    }
}

/// One value of the bar differential: `(df)(g0,...,gn)` for `f` of degree `n`.
pub fn differential_at(f: &NormalizedCochain, args: &[usize]) -> usize {
    let n = f.degree;
    debug_assert_eq!(args.len(), n + 1);
    let m = &f.module;
    let mut acc = m.act(args[0], f.value_at(&args[1..]));
    let mut merged = Vec::with_capacity(n);
    for i in 1..=n {
        merged.clear();
        merged.extend_from_slice(&args[..i - 1]);
        merged.push(m.group().mul(args[i - 1], args[i]));
        merged.extend_from_slice(&args[i + 1..]);
        let term = f.value_at(&merged);
        acc = if i % 2 == 1 {
            m.sub(acc, term)
        } else {
            m.add(acc, term)
        };
    }
    let last = f.value_at(&args[..n]);
    if (n + 1) % 2 == 1 {
        m.sub(acc, last)
    } else {
        m.add(acc, last)
    }
}

/// The bar differential, raising degree by one.  Output is normalized.
pub fn differential(f: &NormalizedCochain) -> NormalizedCochain {
    let m = &f.module;
    let n = f.degree;
    let values = (0..m.tuple_count(n + 1))
        .map(|idx| differential_at(f, &m.index_tuple(idx, n + 1)))
        .collect();
    NormalizedCochain {
        module: m.clone(),
        degree: n + 1,
        values,
    }
}

/// True iff the differential vanishes identically.
pub fn is_cocycle(f: &NormalizedCochain) -> bool {
    let m = &f.module;
    let n = f.degree;
    (0..m.tuple_count(n + 1)).all(|idx| differential_at(f, &m.index_tuple(idx, n + 1)) == 0)
}

/// Iterator over every normalized cochain of a given degree, in lexicographic
/// order of the identity-free value assignment (all-zero cochain first).
pub fn all_cochains(module: &GModule, degree: usize) -> AllCochains {
    AllCochains {
        module: module.clone(),
        degree,
        slot_index: (0..module.free_slot_count(degree))
            .map(|s| module.slot_to_index(s, degree))
            .collect(),
        counter: vec![0; module.free_slot_count(degree)],
        done: module.coeffs().order() == 0,
    }
}

pub struct AllCochains {
    module: GModule,
    degree: usize,
    slot_index: Vec<usize>,
    counter: Vec<usize>,
    done: bool,
}

impl Iterator for AllCochains {
    type Item = NormalizedCochain;

    fn next(&mut self) -> Option<NormalizedCochain> {
        if self.done {
            return None;
        }
        let mut values = vec![0; self.module.tuple_count(self.degree)];
        for (slot, &idx) in self.slot_index.iter().enumerate() {
            values[idx] = self.counter[slot];
        }
        let item = NormalizedCochain {
            module: self.module.clone(),
            degree: self.degree,
            values,
        };
        // advance the mixed-radix counter; most significant slot last
        let base = self.module.coeffs().order();
        let mut pos = 0;
        loop {
            if pos == self.counter.len() {
                self.done = true;
                break;
            }
            self.counter[pos] += 1;
            if self.counter[pos] < base {
                break;
            }
            self.counter[pos] = 0;
            pos += 1;
        }
        Some(item)
    }
}
