//! Weak-inverse search and the improvement of inverse choices to coherent
//! (adjoint-equivalence) form.

use thiserror::Error;

use crate::monoidal_groupoid::builder::{ChoiceEntry, InverseChoice};
use crate::monoidal_groupoid::groupoid::MonoidalGroupoid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChoiceError {
    #[error("some object has no weak inverse")]
    NotWeak2Group,
    #[error("inverse choice ill-typed at object {x}")]
    IllTypedChoice { x: usize },
}

impl ChoiceError {
    pub fn code(&self) -> &'static str {
        match self {
            ChoiceError::NotWeak2Group => "NotWeak2Group",
            ChoiceError::IllTypedChoice { .. } => "IllTypedChoice",
        }
    }
}

/// Checks the entry at `x`: `i_x: 1 -> x (x) xbar` and `e_x: xbar (x) x -> 1`.
fn check_entry(m: &MonoidalGroupoid, c: &InverseChoice, x: usize) -> Result<(), ChoiceError> {
    if c.len() != m.n_objects() || x >= m.n_objects() {
        return Err(ChoiceError::IllTypedChoice {
            x: x.min(c.len().min(m.n_objects())),
        });
    }
    let entry = c.entry(x);
    if entry.xbar >= m.n_objects()
        || entry.i_mor >= m.n_morphisms()
        || entry.e_mor >= m.n_morphisms()
    {
        return Err(ChoiceError::IllTypedChoice { x });
    }
    let well_typed = m.src(entry.i_mor) == m.unit()
        && m.tgt(entry.i_mor) == m.tensor_obj(x, entry.xbar)
        && m.src(entry.e_mor) == m.tensor_obj(entry.xbar, x)
        && m.tgt(entry.e_mor) == m.unit();
    if !well_typed {
        return Err(ChoiceError::IllTypedChoice { x });
    }
    Ok(())
}

fn check_choice(m: &MonoidalGroupoid, c: &InverseChoice) -> Result<(), ChoiceError> {
    (0..m.n_objects()).try_for_each(|x| check_entry(m, c, x))
}

/// Finds the least object `y` weakly inverse to `x`, together with the least
/// morphisms `i: 1 -> x (x) y` and `e: y (x) x -> 1`.
pub fn find_weak_inverse(m: &MonoidalGroupoid, x: usize) -> Option<(usize, usize, usize)> {
    (0..m.n_objects()).find_map(|y| {
        let e = *m.hom(m.tensor_obj(y, x), m.unit()).first()?;
        let i = *m.hom(m.unit(), m.tensor_obj(x, y)).first()?;
        Some((y, i, e))
    })
}

/// True when every object has a weak inverse (invertibility of morphisms is
/// already part of validation).
pub fn is_weak_2group(m: &MonoidalGroupoid) -> bool {
    (0..m.n_objects()).all(|x| find_weak_inverse(m, x).is_some())
}

// the replacement unit: i_x, then every structure move needed to cancel the
// old unit against e_x on the right
fn improved_i(m: &MonoidalGroupoid, c: &InverseChoice, x: usize) -> usize {
    let entry = c.entry(x);
    let xb = entry.xbar;
    let xxb = m.tensor_obj(x, xb);
    m.compose_chain(&[
        entry.i_mor,
        m.tensor_mor(m.identity(x), m.inverse(m.lunit(xb))),
        m.tensor_mor(
            m.identity(x),
            m.tensor_mor(m.inverse(entry.e_mor), m.identity(xb)),
        ),
        m.tensor_mor(m.identity(x), m.assoc(xb, x, xb)),
        m.inverse(m.assoc(x, xb, xxb)),
        m.tensor_mor(m.inverse(entry.i_mor), m.identity(xxb)),
        m.inverse(m.assoc(m.unit(), x, xb)),
        m.tensor_mor(m.lunit(x), m.identity(xb)),
    ])
}

// the mirrored composite that cancels the old unit on the left instead
fn mirror_i(m: &MonoidalGroupoid, c: &InverseChoice, x: usize) -> usize {
    let entry = c.entry(x);
    let xb = entry.xbar;
    m.compose_chain(&[
        entry.i_mor,
        m.tensor_mor(m.inverse(m.runit(x)), m.identity(xb)),
        m.tensor_mor(
            m.tensor_mor(m.identity(x), m.inverse(entry.e_mor)),
            m.identity(xb),
        ),
        m.tensor_mor(m.inverse(m.assoc(x, xb, x)), m.identity(xb)),
        m.tensor_mor(
            m.tensor_mor(m.inverse(entry.i_mor), m.identity(x)),
            m.identity(xb),
        ),
        m.tensor_mor(m.lunit(x), m.identity(xb)),
    ])
}

/// Keeps each `xbar` and `e_x` and replaces `i_x` so that the zig-zag
/// identities hold; idempotent, and coherent inputs come back unchanged.
pub fn improve(
    m: &MonoidalGroupoid,
    choices: &InverseChoice,
) -> Result<InverseChoice, ChoiceError> {
    if !is_weak_2group(m) {
        return Err(ChoiceError::NotWeak2Group);
    }
    check_choice(m, choices)?;
    let entries = (0..m.n_objects())
        .map(|x| ChoiceEntry {
            xbar: choices.entry(x).xbar,
            i_mor: improved_i(m, choices, x),
            e_mor: choices.entry(x).e_mor,
        })
        .collect();
    Ok(InverseChoice::new(entries))
}

/// Evaluates both zig-zag composites at `x` and reports whether each equals
/// the respective identity.
pub fn check_zigzags(
    m: &MonoidalGroupoid,
    choices: &InverseChoice,
    x: usize,
) -> Result<(bool, bool), ChoiceError> {
    check_entry(m, choices, x)?;
    let entry = choices.entry(x);
    let xb = entry.xbar;
    let first = m.compose_chain(&[
        m.inverse(m.lunit(x)),
        m.tensor_mor(entry.i_mor, m.identity(x)),
        m.assoc(x, xb, x),
        m.tensor_mor(m.identity(x), entry.e_mor),
        m.runit(x),
    ]) == m.identity(x);
    let second = m.compose_chain(&[
        m.inverse(m.runit(xb)),
        m.tensor_mor(m.identity(xb), entry.i_mor),
        m.inverse(m.assoc(xb, x, xb)),
        m.tensor_mor(entry.e_mor, m.identity(xb)),
        m.lunit(xb),
    ]) == m.identity(xb);
    Ok((first, second))
}

/// True when the replacement unit at `x` agrees with its mirrored form — an
/// identity of composites that holds for every well-typed choice, exposed
/// for testing.
pub fn check_alt_iprime(
    m: &MonoidalGroupoid,
    choices: &InverseChoice,
    x: usize,
) -> Result<bool, ChoiceError> {
    check_entry(m, choices, x)?;
    Ok(improved_i(m, choices, x) == mirror_i(m, choices, x))
}

/// True when the endomorphisms of the unit commute and their composition
/// agrees with tensoring, transported along the left unitor.
pub fn eckmann_hilton_check(m: &MonoidalGroupoid) -> bool {
    let end1 = m.hom(m.unit(), m.unit());
    let l1 = m.lunit(m.unit());
    end1.iter().all(|&f| {
        end1.iter().all(|&g| {
            let fg = m.compose(f, g).expect("unit endomorphisms compose");
            let gf = m.compose(g, f).expect("unit endomorphisms compose");
            let tensored = m.compose_chain(&[m.inverse(l1), m.tensor_mor(f, g), l1]);
            fg == gf && fg == tensored
        })
    })
}
