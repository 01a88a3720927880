//! Finite groups as Cayley tables with the identity fixed at index 0.

use thiserror::Error;

/// A finite group given by its full multiplication table.
///
/// `table[i][j]` is the index of the product of elements `i` and `j`.
/// The identity is always element 0; inverses are precomputed on validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

/// Violation found while checking the group axioms on a table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not square or has an entry out of range at ({0}, {1})")]
    NotClosed(usize, usize),
    #[error("element 0 is not a two-sided identity (fails at {0})")]
    NoIdentityAtZero(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no inverse (its row or column is not a permutation)")]
    MissingInverse(usize),
    #[error("a group must have at least one element")]
    InvalidOrder,
}

impl GroupError {
    /// Stable machine-readable code for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            GroupError::NotClosed(..) => "NotClosed",
            GroupError::NoIdentityAtZero(..) => "NoIdentityAtZero",
            GroupError::NotAssociative(..) => "NotAssociative",
            GroupError::MissingInverse(..) => "MissingInverse",
            GroupError::InvalidOrder => "InvalidOrder",
        }
    }

    /// Witness indices for the violated law, if any.
    pub fn witness(&self) -> serde_json::Value {
        match self {
            GroupError::NotClosed(i, j) => serde_json::json!([i, j]),
            GroupError::NoIdentityAtZero(i) => serde_json::json!([i]),
            GroupError::NotAssociative(i, j, k) => serde_json::json!([i, j, k]),
            GroupError::MissingInverse(i) => serde_json::json!([i]),
            GroupError::InvalidOrder => serde_json::Value::Null,
        }
    }
}

/// Checks all group axioms on `table` and returns the validated group.
pub fn validate_group(table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    let n = table.len();
    if n == 0 {
        return Err(GroupError::InvalidOrder);
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(GroupError::NotClosed(i, row.len().min(n)));
        }
        for (j, &e) in row.iter().enumerate() {
            if e >= n {
                return Err(GroupError::NotClosed(i, j));
            }
        }
    }
    for (i, row) in table.iter().enumerate() {
        if table[0][i] != i || row[0] != i {
            return Err(GroupError::NoIdentityAtZero(i));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(GroupError::NotAssociative(i, j, k));
                }
            }
        }
    }
    let mut inv = vec![usize::MAX; n];
    for i in 0..n {
        let mut row_seen = vec![false; n];
        let mut col_seen = vec![false; n];
        for j in 0..n {
            row_seen[table[i][j]] = true;
            col_seen[table[j][i]] = true;
            if table[i][j] == 0 {
                inv[i] = j;
            }
        }
        if row_seen.contains(&false) || col_seen.contains(&false) || inv[i] == usize::MAX {
            return Err(GroupError::MissingInverse(i));
        }
    }
    Ok(FiniteGroup {
        order: n,
        table,
        inv,
    })
}

/// The cyclic group of order `n`, with `table[i][j] = (i + j) mod n`.
pub fn cyclic_group(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidOrder);
    }
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    Ok(validate_group(table).expect("cyclic tables satisfy the group axioms"))
}

/// The direct product, with pairs `(i, j)` encoded as `i + |G|*j`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (n, m) = (g.order, h.order);
    let table = (0..n * m)
        .map(|x| {
            let (x1, x2) = (x % n, x / n);
            (0..n * m)
                .map(|y| {
                    let (y1, y2) = (y % n, y / n);
                    g.table[x1][y1] + n * h.table[x2][y2]
                })
                .collect()
        })
        .collect();
    validate_group(table).expect("products of groups satisfy the group axioms")
}

impl FiniteGroup {
    /// The one-element group.
    pub fn trivial() -> FiniteGroup {
        cyclic_group(1).unwrap()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Product of elements `i` and `j`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Inverse of element `i`.
    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i..self.order).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Multiplicative order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.table[x][i];
            k += 1;
        }
        k
    }

    /// Conjugate `h` by `g`: `g h g^{-1}`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.table[self.table[g][h]][self.inv[g]]
    }

    /// A small generating set, chosen greedily over element indices.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.span(&gens);
        for x in 1..self.order {
            if span.len() == self.order {
                break;
            }
            if !span.contains(&x) {
                gens.push(x);
                span = self.span(&gens);
            }
        }
        gens
    }

    /// All elements generated by `gens` (always contains the identity).
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_span = vec![false; self.order];
        in_span[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.table[x][g];
                if !in_span[y] {
                    in_span[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| in_span[x]).collect()
    }
}
