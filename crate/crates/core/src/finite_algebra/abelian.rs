//! Finite abelian groups in invariant-factor form, and additive maps between
//! them.
//!
//! Elements of a group with factors `d1 | d2 | ... | dk` are tuples
//! `(a1, ..., ak)` with `ai` in `0..di`, flattened to a single index
//! least-significant-factor-first: `idx = sum ai * prod_{j<i} dj`.

use thiserror::Error;

use super::group::{cyclic_group, direct_product, FiniteGroup};

/// A finite abelian group described by its invariant factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAbGroup {
    invariant_factors: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("invariant factor {0} is below 2")]
    FactorBelowTwo(usize),
    #[error("invariant factor {0} does not divide the next factor {1}")]
    BrokenDivisibility(usize, usize),
    #[error("the group is not abelian: elements {0} and {1} do not commute")]
    NotAbelian(usize, usize),
    #[error("table is not additive at ({0}, {1})")]
    NotAdditive(usize, usize),
    #[error("generator {0} image has order {1}, which does not divide {2}")]
    GeneratorOrderMismatch(usize, usize, usize),
    #[error("expected {0} generator images, got {1}")]
    WrongGeneratorCount(usize, usize),
    #[error("expected a table of length {0}, got {1}")]
    WrongTableLength(usize, usize),
    #[error("generator image {0} is out of range")]
    ImageOutOfRange(usize),
}

impl AbelianError {
    pub fn code(&self) -> &'static str {
        match self {
            AbelianError::FactorBelowTwo(_) => "FactorBelowTwo",
            AbelianError::BrokenDivisibility(_, _) => "BrokenDivisibility",
            AbelianError::NotAbelian(_, _) => "NotAbelian",
            AbelianError::NotAdditive(_, _) => "NotAdditive",
            AbelianError::GeneratorOrderMismatch(_, _, _) => "GeneratorOrderMismatch",
            AbelianError::WrongGeneratorCount(_, _) => "WrongGeneratorCount",
            AbelianError::WrongTableLength(_, _) => "WrongTableLength",
            AbelianError::ImageOutOfRange(_) => "ImageOutOfRange",
        }
    }
}

impl FinAbGroup {
    /// Builds the group, checking `2 <= d1 | d2 | ... | dk`.
    pub fn new(invariant_factors: Vec<usize>) -> Result<FinAbGroup, AbelianError> {
        for (i, &d) in invariant_factors.iter().enumerate() {
            if d < 2 {
                return Err(AbelianError::FactorBelowTwo(d));
            }
            if i + 1 < invariant_factors.len() && invariant_factors[i + 1] % d != 0 {
                return Err(AbelianError::BrokenDivisibility(d, invariant_factors[i + 1]));
            }
        }
        Ok(FinAbGroup { invariant_factors })
    }

    pub fn trivial() -> FinAbGroup {
        FinAbGroup {
            invariant_factors: Vec::new(),
        }
    }

    pub fn invariant_factors(&self) -> &[usize] {
        &self.invariant_factors
    }

    /// Number of invariant factors (tuple length).
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> usize {
        self.invariant_factors.iter().product()
    }

    /// Flat index of a component tuple.
    pub fn encode(&self, tuple: &[usize]) -> usize {
        assert_eq!(tuple.len(), self.rank(), "tuple length mismatch");
        let mut idx = 0;
        let mut stride = 1;
        for (&a, &d) in tuple.iter().zip(&self.invariant_factors) {
            assert!(a < d, "component out of range");
            idx += a * stride;
            stride *= d;
        }
        idx
    }

    /// Component tuple of a flat index.
    pub fn decode(&self, idx: usize) -> Vec<usize> {
        assert!(idx < self.order().max(1), "index out of range");
        let mut rest = idx;
        self.invariant_factors
            .iter()
            .map(|&d| {
                let a = rest % d;
                rest /= d;
                a
            })
            .collect()
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.decode(a), self.decode(b));
        let sum: Vec<usize> = ta
            .iter()
            .zip(&tb)
            .zip(&self.invariant_factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let t: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        self.encode(&t)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Integer scalar multiple `n * a`, for any sign of `n`.
    pub fn zmul(&self, n: i64, a: usize) -> usize {
        let t: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &d)| {
                let d = d as i64;
                (((n * x as i64) % d + d) % d) as usize
            })
            .collect();
        self.encode(&t)
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.decode(a)
            .iter()
            .zip(&self.invariant_factors)
            .fold(1, |acc, (&x, &d)| lcm(acc, d / gcd(d, x)))
    }

    /// Flat index of the generator of the `i`-th factor.
    pub fn generator(&self, i: usize) -> usize {
        let mut tuple = vec![0; self.rank()];
        tuple[i] = 1;
        self.encode(&tuple)
    }

    /// The same group as a Cayley table under the normative index encoding.
    pub fn as_finite_group(&self) -> FiniteGroup {
        let mut g = FiniteGroup::trivial();
        for &d in &self.invariant_factors {
            g = direct_product(&g, &cyclic_group(d).unwrap());
        }
        g
    }

    /// Recognizes an abelian Cayley-table group: returns the invariant-factor
    /// form together with an isomorphism `to_group[canonical] = table index`.
    pub fn from_finite_group(g: &FiniteGroup) -> Result<(FinAbGroup, Vec<usize>), AbelianError> {
        let n = g.order();
        for i in 0..n {
            for j in i + 1..n {
                if g.mul(i, j) != g.mul(j, i) {
                    return Err(AbelianError::NotAbelian(i, j));
                }
            }
        }
        if n == 1 {
            return Ok((FinAbGroup::trivial(), vec![0]));
        }
        let orders: Vec<usize> = (0..n).map(|x| g.element_order(x)).collect();
        let factors = invariant_factors_from_torsion(g, &orders);
        let ab = FinAbGroup::new(factors.clone()).expect("torsion analysis yields a valid chain");
        // tables already in canonical coordinates relabel by the identity
        if ab.as_finite_group().table() == g.table() {
            return Ok((ab, (0..n).collect()));
        }
        // generator images: exact-order elements, spans growing by one factor
        // at a time (largest factor first); the first tuple found in index
        // order wins, so the result is deterministic
        let mut images = vec![0usize; factors.len()];
        let found = search_generators(g, &orders, &factors, factors.len(), &mut images, n);
        assert!(found, "an abelian group always splits into its invariant factors");
        let to_group: Vec<usize> = (0..ab.order())
            .map(|idx| {
                let tuple = ab.decode(idx);
                tuple
                    .iter()
                    .zip(&images)
                    .fold(0, |acc, (&a, &img)| (0..a).fold(acc, |y, _| g.mul(y, img)))
            })
            .collect();
        Ok((ab, to_group))
    }
}

// picks an image of exact order factors[i-1] for each factor, largest first,
// requiring the span to multiply by that factor at every step
fn search_generators(
    g: &FiniteGroup,
    orders: &[usize],
    factors: &[usize],
    i: usize,
    images: &mut [usize],
    remaining: usize,
) -> bool {
    if i == 0 {
        return true;
    }
    let d = factors[i - 1];
    let need_span = g.order() / remaining * d;
    for x in 0..g.order() {
        if orders[x] != d {
            continue;
        }
        images[i - 1] = x;
        let span = g.span(&images[i - 1..]);
        if span.len() == need_span
            && search_generators(g, orders, factors, i - 1, images, remaining / d)
        {
            return true;
        }
    }
    false
}

// reads off the multiset of prime-power cyclic orders from torsion counts,
// then zips them largest-with-largest into an invariant-factor chain
fn invariant_factors_from_torsion(g: &FiniteGroup, orders: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    // per prime: descending list of exponents of the cyclic p-power factors
    let mut per_prime: Vec<Vec<u32>> = Vec::new();
    for &p in &primes {
        let mut sigma = vec![0u32]; // sigma[k] = log_p #{x : p^k x = 0}
        loop {
            let k = sigma.len() as u32;
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count();
            let log = exact_log(count, p);
            if Some(&log) == sigma.last() {
                break;
            }
            sigma.push(log);
        }
        // number of factors with exponent >= k is sigma[k] - sigma[k-1]
        let mut exps = Vec::new();
        for k in 1..sigma.len() {
            let at_least_k = sigma[k] - sigma[k - 1];
            let at_least_next = if k + 1 < sigma.len() {
                sigma[k + 1] - sigma[k]
            } else {
                0
            };
            for _ in 0..at_least_k - at_least_next {
                exps.push(k as u32);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        per_prime.push(exps);
    }
    let slots = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..slots)
        .map(|j| {
            primes
                .iter()
                .zip(&per_prime)
                .map(|(&p, exps)| exps.get(j).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    factors.reverse();
    factors
}

fn exact_log(mut n: usize, p: usize) -> u32 {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % p, 0, "count must be a power of the prime");
        n /= p;
        k += 1;
    }
    k
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// An additive (homomorphic) map between finite abelian groups, stored as the
/// full index-to-index table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveMap {
    source: FinAbGroup,
    target: FinAbGroup,
    table: Vec<usize>,
}

impl AdditiveMap {
    /// Builds the map from images of the canonical generators.
    pub fn from_gen_images(
        source: &FinAbGroup,
        target: &FinAbGroup,
        gen_images: &[usize],
    ) -> Result<AdditiveMap, AbelianError> {
        if gen_images.len() != source.rank() {
            return Err(AbelianError::WrongGeneratorCount(
                source.rank(),
                gen_images.len(),
            ));
        }
        for (i, (&img, &d)) in gen_images.iter().zip(source.invariant_factors()).enumerate() {
            if img >= target.order() {
                return Err(AbelianError::ImageOutOfRange(img));
            }
            let o = target.element_order(img);
            if d % o != 0 {
                return Err(AbelianError::GeneratorOrderMismatch(i, o, d));
            }
        }
        let table = (0..source.order())
            .map(|idx| {
                source
                    .decode(idx)
                    .iter()
                    .zip(gen_images)
                    .fold(0, |acc, (&a, &img)| {
                        target.add(acc, target.zmul(a as i64, img))
                    })
            })
            .collect();
        Ok(AdditiveMap {
            source: source.clone(),
            target: target.clone(),
            table,
        })
    }

    /// Builds the map from a full table, checking additivity.
    pub fn from_table(
        source: &FinAbGroup,
        target: &FinAbGroup,
        table: Vec<usize>,
    ) -> Result<AdditiveMap, AbelianError> {
        if table.len() != source.order() {
            return Err(AbelianError::WrongTableLength(source.order(), table.len()));
        }
        for &y in &table {
            if y >= target.order() {
                return Err(AbelianError::ImageOutOfRange(y));
            }
        }
        let gen_images: Vec<usize> = (0..source.rank())
            .map(|i| table[source.generator(i)])
            .collect();
        let built = AdditiveMap::from_gen_images(source, target, &gen_images)?;
        if built.table != table {
            // find a witness pair for the failed additivity
            for a in 0..source.order() {
                for b in 0..source.order() {
                    if table[source.add(a, b)] != target.add(table[a], table[b]) {
                        return Err(AbelianError::NotAdditive(a, b));
                    }
                }
            }
            unreachable!("a non-additive table must violate some pair");
        }
        Ok(built)
    }

    pub fn identity(h: &FinAbGroup) -> AdditiveMap {
        AdditiveMap {
            source: h.clone(),
            target: h.clone(),
            table: (0..h.order()).collect(),
        }
    }

    pub fn zero(source: &FinAbGroup, target: &FinAbGroup) -> AdditiveMap {
        AdditiveMap {
            source: source.clone(),
            target: target.clone(),
            table: vec![0; source.order()],
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.table.iter().for_each(|&y| seen[y] = true);
        self.source.order() == self.target.order() && seen.iter().all(|&s| s)
    }

    /// `other` after `self` (apply `self` first).
    pub fn then(&self, other: &AdditiveMap) -> AdditiveMap {
        assert_eq!(self.target, other.source, "composition mismatch");
        AdditiveMap {
            source: self.source.clone(),
            target: other.target.clone(),
            table: self.table.iter().map(|&y| other.table[y]).collect(),
        }
    }
}

/// All additive maps between two groups, ordered lexicographically by table.
pub fn enumerate_additive_maps(source: &FinAbGroup, target: &FinAbGroup) -> Vec<AdditiveMap> {
    let mut maps = Vec::new();
    let mut images = vec![0usize; source.rank()];
    enumerate_rec(source, target, 0, &mut images, &mut maps);
    maps.sort_by(|a, b| a.table.cmp(&b.table));
    maps
}

fn enumerate_rec(
    source: &FinAbGroup,
    target: &FinAbGroup,
    i: usize,
    images: &mut Vec<usize>,
    out: &mut Vec<AdditiveMap>,
) {
    if i == source.rank() {
        out.push(AdditiveMap::from_gen_images(source, target, images).unwrap());
        return;
    }
    let d = source.invariant_factors()[i];
    for y in 0..target.order() {
        if d % target.element_order(y) == 0 {
            images[i] = y;
            enumerate_rec(source, target, i + 1, images, out);
        }
    }
}
