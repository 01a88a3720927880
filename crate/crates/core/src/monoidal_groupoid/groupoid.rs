//! Explicit-table weak monoidal groupoids and exhaustive law validation.

use thiserror::Error;

/// Default cap on total morphisms for the exhaustive law sweeps.
pub const DEFAULT_MAX_MORPHISMS: usize = 64;

/// Raw tables describing a candidate monoidal groupoid.  Morphisms are
/// globally indexed and must be sorted by (source, target); `comp[f][g]` is
/// the composite `f` then `g` where defined; `assoc` is flat over object
/// triples with the first component least significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalGroupoidData {
    pub n_objects: usize,
    pub unit: usize,
    pub src: Vec<usize>,
    pub tgt: Vec<usize>,
    pub comp: Vec<Vec<Option<usize>>>,
    pub tensor_obj: Vec<Vec<usize>>,
    pub tensor_mor: Vec<Vec<usize>>,
    pub assoc: Vec<usize>,
    pub lunit: Vec<usize>,
    pub runit: Vec<usize>,
}

/// A validated weak monoidal groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalGroupoid {
    data: MonoidalGroupoidData,
    ids: Vec<usize>,
    inverse: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("malformed tables: {reason}")]
    Malformed { reason: &'static str },
    #[error("{size} morphisms exceed the sweep bound {bound}")]
    SizeBoundExceeded { size: usize, bound: usize },
    #[error("category law violated ({reason}) at {witness:?}")]
    CategoryLawFailed {
        reason: &'static str,
        witness: Vec<usize>,
    },
    #[error("morphism {f} has no two-sided compositional inverse")]
    NotInvertible { f: usize },
    #[error("tensor is not functorial ({reason}) at {witness:?}")]
    FunctorialityFailed {
        reason: &'static str,
        witness: Vec<usize>,
    },
    #[error("structure morphism not natural ({reason}) at {witness:?}")]
    NaturalityFailed {
        reason: &'static str,
        witness: Vec<usize>,
    },
    #[error("pentagon fails at objects ({w}, {x}, {y}, {z})")]
    PentagonFailed {
        w: usize,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error("triangle fails at objects ({x}, {y})")]
    TriangleFailed { x: usize, y: usize },
}

impl GroupoidError {
    pub fn code(&self) -> &'static str {
        match self {
            GroupoidError::Malformed { .. } => "Malformed",
            GroupoidError::SizeBoundExceeded { .. } => "SizeBoundExceeded",
            GroupoidError::CategoryLawFailed { .. } => "CategoryLawFailed",
            GroupoidError::NotInvertible { .. } => "NotInvertible",
            GroupoidError::FunctorialityFailed { .. } => "FunctorialityFailed",
            GroupoidError::NaturalityFailed { .. } => "NaturalityFailed",
            GroupoidError::PentagonFailed { .. } => "PentagonFailed",
            GroupoidError::TriangleFailed { .. } => "TriangleFailed",
        }
    }
}

fn malformed(reason: &'static str) -> GroupoidError {
    GroupoidError::Malformed { reason }
}

/// Checks every law exhaustively: category axioms, invertibility, tensor
/// functoriality and interchange, naturality of the structure morphisms,
/// pentagon, and triangle — reporting the first violation.
pub fn validate_monoidal_groupoid(
    data: MonoidalGroupoidData,
    max_morphisms: usize,
) -> Result<MonoidalGroupoid, GroupoidError> {
    check_shape(&data)?;
    let n_mor = data.src.len();
    if n_mor > max_morphisms {
        return Err(GroupoidError::SizeBoundExceeded {
            size: n_mor,
            bound: max_morphisms,
        });
    }
    let ids = check_category(&data)?;
    let inverse = check_invertible(&data, &ids)?;
    let m = MonoidalGroupoid { data, ids, inverse };
    m.check_functoriality()?;
    m.check_naturality()?;
    m.check_pentagon()?;
    m.check_triangle()?;
    Ok(m)
}

fn check_shape(d: &MonoidalGroupoidData) -> Result<(), GroupoidError> {
    let n = d.n_objects;
    let n_mor = d.src.len();
    if n == 0 {
        return Err(malformed("at least one object required"));
    }
    if d.unit >= n {
        return Err(malformed("unit object out of range"));
    }
    if d.tgt.len() != n_mor {
        return Err(malformed("src and tgt lengths differ"));
    }
    if d.src.iter().chain(&d.tgt).any(|&x| x >= n) {
        return Err(malformed("morphism endpoint out of range"));
    }
    if !(1..n_mor).all(|f| (d.src[f - 1], d.tgt[f - 1]) <= (d.src[f], d.tgt[f])) {
        return Err(malformed("morphisms must be sorted by (source, target)"));
    }
    let square = |t: &Vec<Vec<usize>>, k: usize| t.len() == k && t.iter().all(|r| r.len() == k);
    if d.comp.len() != n_mor || d.comp.iter().any(|r| r.len() != n_mor) {
        return Err(malformed("comp table must be morphisms x morphisms"));
    }
    if d.comp.iter().flatten().any(|e| matches!(e, Some(v) if *v >= n_mor)) {
        return Err(malformed("comp entry out of range"));
    }
    if !square(&d.tensor_obj, n) || d.tensor_obj.iter().flatten().any(|&x| x >= n) {
        return Err(malformed("tensor_obj must be an objects x objects table"));
    }
    if !square(&d.tensor_mor, n_mor) || d.tensor_mor.iter().flatten().any(|&x| x >= n_mor) {
        return Err(malformed("tensor_mor must be a morphisms x morphisms table"));
    }
    if d.assoc.len() != n * n * n || d.assoc.iter().any(|&x| x >= n_mor) {
        return Err(malformed("assoc must list one morphism per object triple"));
    }
    if d.lunit.len() != n || d.runit.len() != n {
        return Err(malformed("lunit and runit must list one morphism per object"));
    }
    if d.lunit.iter().chain(&d.runit).any(|&x| x >= n_mor) {
        return Err(malformed("unit component out of range"));
    }
    Ok(())
}

fn check_category(d: &MonoidalGroupoidData) -> Result<Vec<usize>, GroupoidError> {
    let n_mor = d.src.len();
    for f in 0..n_mor {
        for g in 0..n_mor {
            let composable = d.tgt[f] == d.src[g];
            match d.comp[f][g] {
                Some(fg) => {
                    if !composable {
                        return Err(GroupoidError::CategoryLawFailed {
                            reason: "composite defined for non-composable pair",
                            witness: vec![f, g],
                        });
                    }
                    if d.src[fg] != d.src[f] || d.tgt[fg] != d.tgt[g] {
                        return Err(GroupoidError::CategoryLawFailed {
                            reason: "composite has wrong endpoints",
                            witness: vec![f, g, fg],
                        });
                    }
                }
                None => {
                    if composable {
                        return Err(GroupoidError::CategoryLawFailed {
                            reason: "missing composite of composable pair",
                            witness: vec![f, g],
                        });
                    }
                }
            }
        }
    }
    let mut ids = Vec::with_capacity(d.n_objects);
    for x in 0..d.n_objects {
        let found = (0..n_mor).find(|&e| {
            d.src[e] == x
                && d.tgt[e] == x
                && (0..n_mor).all(|f| {
                    (d.src[f] != x || d.comp[e][f] == Some(f))
                        && (d.tgt[f] != x || d.comp[f][e] == Some(f))
                })
        });
        match found {
            Some(e) => ids.push(e),
            None => {
                return Err(GroupoidError::CategoryLawFailed {
                    reason: "object has no identity morphism",
                    witness: vec![x],
                })
            }
        }
    }
    for f in 0..n_mor {
        for g in 0..n_mor {
            let Some(fg) = d.comp[f][g] else { continue };
            for h in 0..n_mor {
                let Some(gh) = d.comp[g][h] else { continue };
                if d.comp[fg][h] != d.comp[f][gh] {
                    return Err(GroupoidError::CategoryLawFailed {
                        reason: "composition is not associative",
                        witness: vec![f, g, h],
                    });
                }
            }
        }
    }
    Ok(ids)
}

fn check_invertible(d: &MonoidalGroupoidData, ids: &[usize]) -> Result<Vec<usize>, GroupoidError> {
    let n_mor = d.src.len();
    let mut inverse = Vec::with_capacity(n_mor);
    for f in 0..n_mor {
        let found = (0..n_mor).find(|&g| {
            d.comp[f][g] == Some(ids[d.src[f]]) && d.comp[g][f] == Some(ids[d.tgt[f]])
        });
        match found {
            Some(g) => inverse.push(g),
            None => return Err(GroupoidError::NotInvertible { f }),
        }
    }
    Ok(inverse)
}

impl MonoidalGroupoid {
    pub fn n_objects(&self) -> usize {
        self.data.n_objects
    }

    pub fn n_morphisms(&self) -> usize {
        self.data.src.len()
    }

    pub fn unit(&self) -> usize {
        self.data.unit
    }

    pub fn src(&self, f: usize) -> usize {
        self.data.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.data.tgt[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.ids[x]
    }

    /// Composite `f` then `g` where `tgt(f) = src(g)`.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.data.comp[f][g]
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    pub fn tensor_obj(&self, x: usize, y: usize) -> usize {
        self.data.tensor_obj[x][y]
    }

    pub fn tensor_mor(&self, f: usize, g: usize) -> usize {
        self.data.tensor_mor[f][g]
    }

    pub fn assoc(&self, x: usize, y: usize, z: usize) -> usize {
        let n = self.data.n_objects;
        self.data.assoc[x + n * y + n * n * z]
    }

    pub fn lunit(&self, x: usize) -> usize {
        self.data.lunit[x]
    }

    pub fn runit(&self, x: usize) -> usize {
        self.data.runit[x]
    }

    pub fn data(&self) -> &MonoidalGroupoidData {
        &self.data
    }

    /// Morphisms from `x` to `y` in increasing global order.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.n_morphisms())
            .filter(|&f| self.data.src[f] == x && self.data.tgt[f] == y)
            .collect()
    }

    /// Chains composites left to right, panicking on type mismatch (callers
    /// check well-typedness first).
    pub(crate) fn compose_chain(&self, steps: &[usize]) -> usize {
        let mut acc = steps[0];
        for &s in &steps[1..] {
            acc = self.compose(acc, s).expect("chain must be composable");
        }
        acc
    }

    fn check_functoriality(&self) -> Result<(), GroupoidError> {
        let d = &self.data;
        let n_mor = self.n_morphisms();
        for f in 0..n_mor {
            for g in 0..n_mor {
                let fg = d.tensor_mor[f][g];
                if d.src[fg] != d.tensor_obj[d.src[f]][d.src[g]]
                    || d.tgt[fg] != d.tensor_obj[d.tgt[f]][d.tgt[g]]
                {
                    return Err(GroupoidError::FunctorialityFailed {
                        reason: "tensor has wrong endpoints",
                        witness: vec![f, g],
                    });
                }
            }
        }
        for x in 0..d.n_objects {
            for y in 0..d.n_objects {
                if d.tensor_mor[self.ids[x]][self.ids[y]] != self.ids[d.tensor_obj[x][y]] {
                    return Err(GroupoidError::FunctorialityFailed {
                        reason: "tensor does not preserve identities",
                        witness: vec![x, y],
                    });
                }
            }
        }
        let mut pairs = Vec::new();
        for f in 0..n_mor {
            for g in 0..n_mor {
                if d.comp[f][g].is_some() {
                    pairs.push((f, g));
                }
            }
        }
        for &(f, fp) in &pairs {
            for &(g, gp) in &pairs {
                let lhs = d.tensor_mor[d.comp[f][fp].unwrap()][d.comp[g][gp].unwrap()];
                let rhs = self
                    .compose(d.tensor_mor[f][g], d.tensor_mor[fp][gp])
                    .expect("tensors of composable pairs are composable");
                if lhs != rhs {
                    return Err(GroupoidError::FunctorialityFailed {
                        reason: "tensor does not preserve composition",
                        witness: vec![f, fp, g, gp],
                    });
                }
            }
        }
        Ok(())
    }

    fn check_naturality(&self) -> Result<(), GroupoidError> {
        let d = &self.data;
        let n = d.n_objects;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let a = self.assoc(x, y, z);
                    let want_src = d.tensor_obj[d.tensor_obj[x][y]][z];
                    let want_tgt = d.tensor_obj[x][d.tensor_obj[y][z]];
                    if d.src[a] != want_src || d.tgt[a] != want_tgt {
                        return Err(GroupoidError::NaturalityFailed {
                            reason: "associator component ill-typed",
                            witness: vec![x, y, z],
                        });
                    }
                }
            }
        }
        for x in 0..n {
            let l = d.lunit[x];
            if d.src[l] != d.tensor_obj[d.unit][x] || d.tgt[l] != x {
                return Err(GroupoidError::NaturalityFailed {
                    reason: "left unit component ill-typed",
                    witness: vec![x],
                });
            }
            let r = d.runit[x];
            if d.src[r] != d.tensor_obj[x][d.unit] || d.tgt[r] != x {
                return Err(GroupoidError::NaturalityFailed {
                    reason: "right unit component ill-typed",
                    witness: vec![x],
                });
            }
        }
        let n_mor = self.n_morphisms();
        for f in 0..n_mor {
            for g in 0..n_mor {
                for h in 0..n_mor {
                    let lhs = self
                        .compose(
                            d.tensor_mor[d.tensor_mor[f][g]][h],
                            self.assoc(d.tgt[f], d.tgt[g], d.tgt[h]),
                        )
                        .unwrap();
                    let rhs = self
                        .compose(
                            self.assoc(d.src[f], d.src[g], d.src[h]),
                            d.tensor_mor[f][d.tensor_mor[g][h]],
                        )
                        .unwrap();
                    if lhs != rhs {
                        return Err(GroupoidError::NaturalityFailed {
                            reason: "associator not natural",
                            witness: vec![f, g, h],
                        });
                    }
                }
            }
        }
        for f in 0..n_mor {
            let lhs = self
                .compose(d.tensor_mor[self.ids[d.unit]][f], d.lunit[d.tgt[f]])
                .unwrap();
            let rhs = self.compose(d.lunit[d.src[f]], f).unwrap();
            if lhs != rhs {
                return Err(GroupoidError::NaturalityFailed {
                    reason: "left unit not natural",
                    witness: vec![f],
                });
            }
            let lhs = self
                .compose(d.tensor_mor[f][self.ids[d.unit]], d.runit[d.tgt[f]])
                .unwrap();
            let rhs = self.compose(d.runit[d.src[f]], f).unwrap();
            if lhs != rhs {
                return Err(GroupoidError::NaturalityFailed {
                    reason: "right unit not natural",
                    witness: vec![f],
                });
            }
        }
        Ok(())
    }

    fn check_pentagon(&self) -> Result<(), GroupoidError> {
        let d = &self.data;
        let n = d.n_objects;
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let lhs = self.compose_chain(&[
                            d.tensor_mor[self.assoc(w, x, y)][self.ids[z]],
                            self.assoc(w, d.tensor_obj[x][y], z),
                            d.tensor_mor[self.ids[w]][self.assoc(x, y, z)],
                        ]);
                        let rhs = self.compose_chain(&[
                            self.assoc(d.tensor_obj[w][x], y, z),
                            self.assoc(w, x, d.tensor_obj[y][z]),
                        ]);
                        if lhs != rhs {
                            return Err(GroupoidError::PentagonFailed { w, x, y, z });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_triangle(&self) -> Result<(), GroupoidError> {
        let d = &self.data;
        for x in 0..d.n_objects {
            for y in 0..d.n_objects {
                let lhs = self.compose_chain(&[
                    self.assoc(x, d.unit, y),
                    d.tensor_mor[self.ids[x]][d.lunit[y]],
                ]);
                let rhs = d.tensor_mor[d.runit[x]][self.ids[y]];
                if lhs != rhs {
                    return Err(GroupoidError::TriangleFailed { x, y });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn from_data_unchecked(data: MonoidalGroupoidData) -> MonoidalGroupoid {
    let ids = check_category(&data).expect("test data must satisfy category laws");
    let inverse = check_invertible(&data, &ids).expect("test data must be a groupoid");
    MonoidalGroupoid {
        data,
        ids,
        inverse,
    }
}

/// Corrupt one-object tables with End(1) the symmetric group on three
/// letters: a groupoid categorically, but interchange cannot hold, so it
/// only exists through the unchecked constructor.
#[cfg(test)]
pub(crate) fn s3_one_object_data() -> MonoidalGroupoidData {
    let perms: Vec<Vec<usize>> = vec![
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![2, 1, 0],
    ];
    let mul = |i: usize, j: usize| {
        let p: Vec<usize> = (0..3).map(|x| perms[i][perms[j][x]]).collect();
        perms.iter().position(|r| *r == p).unwrap()
    };
    // f then g is the permutation g after f
    let comp: Vec<Vec<Option<usize>>> = (0..6)
        .map(|f| (0..6).map(|g| Some(mul(g, f))).collect())
        .collect();
    MonoidalGroupoidData {
        n_objects: 1,
        unit: 0,
        src: vec![0; 6],
        tgt: vec![0; 6],
        comp,
        tensor_obj: vec![vec![0]],
        tensor_mor: (0..6).map(|f| (0..6).map(|g| mul(g, f)).collect()).collect(),
        assoc: vec![0],
        lunit: vec![0],
        runit: vec![0],
    }
}

/// Discrete monoidal groupoid on the two-element monoid {1, m} with
/// m*m = m: valid, but m has no weak inverse.
#[cfg(test)]
pub(crate) fn idempotent_monoid_data() -> MonoidalGroupoidData {
    MonoidalGroupoidData {
        n_objects: 2,
        unit: 0,
        src: vec![0, 1],
        tgt: vec![0, 1],
        comp: vec![vec![Some(0), None], vec![None, Some(1)]],
        tensor_obj: vec![vec![0, 1], vec![1, 1]],
        tensor_mor: vec![vec![0, 1], vec![1, 1]],
        assoc: vec![0, 1, 1, 1, 1, 1, 1, 1],
        lunit: vec![0, 1],
        runit: vec![0, 1],
    }
}
