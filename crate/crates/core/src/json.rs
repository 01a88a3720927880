//! JSON encodings for every table kind: kind-tagged objects with stable
//! field names, exact round trips, and deterministic single-line output.
//!
//! Flat tables index their first argument least significantly: a table over
//! pairs stores `(f, g)` at `f + count * g`, a table over object triples
//! stores `(x, y, z)` at `x + n*y + n*n*z`, and cochain values follow the
//! same mixed-radix rule.  Abelian elements appear as component tuples in
//! invariant-factor coordinates.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::classification::{twisted_module, SpecialHom, TwoHom};
use crate::cohomology::{GModule, NormalizedCochain};
use crate::finite_algebra::{
    validate_action, validate_action_abelian, validate_group, validate_hom, AdditiveMap,
    FinAbGroup, FiniteGroup, GAction,
};
use crate::monoidal_groupoid::{
    validate_monoidal_groupoid, ChoiceEntry, InverseChoice, MonoidalGroupoid,
    MonoidalGroupoidData,
};
use crate::twogroups::{
    validate_crossed_module, validate_strict_two_group, CrossedModule, Quadruple, StrictTwoGroup,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JsonError {
    /// The document does not have the expected shape; maps to a parse
    /// failure at the command line.
    #[error("{0}")]
    Shape(String),
    /// The document parses but the data violates a structural law; maps to
    /// a validation failure at the command line.
    #[error("{code}: {message}")]
    Invalid { code: &'static str, message: String },
}

fn shape(msg: impl Into<String>) -> JsonError {
    JsonError::Shape(msg.into())
}

fn invalid(code: &'static str, message: impl Into<String>) -> JsonError {
    JsonError::Invalid {
        code,
        message: message.into(),
    }
}

/// Serializes a value compactly with a trailing newline; keys emit in
/// sorted order, so equal values yield byte-identical lines.
pub fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Parses a JSON document from text.
pub fn from_text(text: &str) -> Result<Value, JsonError> {
    serde_json::from_str(text).map_err(|e| shape(format!("invalid json: {e}")))
}

fn as_obj(v: &Value) -> Result<&Map<String, Value>, JsonError> {
    v.as_object().ok_or_else(|| shape("expected a json object"))
}

fn get<'a>(o: &'a Map<String, Value>, key: &str) -> Result<&'a Value, JsonError> {
    o.get(key)
        .ok_or_else(|| shape(format!("missing field \"{key}\"")))
}

/// The `kind` tag of a document.
pub fn kind_of(v: &Value) -> Result<&str, JsonError> {
    get(as_obj(v)?, "kind")?
        .as_str()
        .ok_or_else(|| shape("field \"kind\" must be a string"))
}

fn expect_kind<'a>(v: &'a Value, kind: &str) -> Result<&'a Map<String, Value>, JsonError> {
    let o = as_obj(v)?;
    let got = get(o, "kind")?
        .as_str()
        .ok_or_else(|| shape("field \"kind\" must be a string"))?;
    if got != kind {
        return Err(shape(format!("expected kind \"{kind}\", got \"{got}\"")));
    }
    Ok(o)
}

fn as_usize(v: &Value, what: &str) -> Result<usize, JsonError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| shape(format!("{what} must be a nonnegative integer")))
}

fn as_usize_vec(v: &Value, what: &str) -> Result<Vec<usize>, JsonError> {
    v.as_array()
        .ok_or_else(|| shape(format!("{what} must be an array")))?
        .iter()
        .map(|e| as_usize(e, what))
        .collect()
}

fn as_usize_mat(v: &Value, what: &str) -> Result<Vec<Vec<usize>>, JsonError> {
    v.as_array()
        .ok_or_else(|| shape(format!("{what} must be an array of arrays")))?
        .iter()
        .map(|row| as_usize_vec(row, what))
        .collect()
}

fn as_int_vec(v: &Value, what: &str) -> Result<Vec<i64>, JsonError> {
    v.as_array()
        .ok_or_else(|| shape(format!("{what} must be an array")))?
        .iter()
        .map(|e| {
            e.as_i64()
                .ok_or_else(|| shape(format!("{what} must contain integers")))
        })
        .collect()
}

pub fn group_to_value(g: &FiniteGroup) -> Value {
    json!({"kind": "group", "order": g.order(), "table": g.table()})
}

pub fn parse_group(v: &Value) -> Result<FiniteGroup, JsonError> {
    let o = expect_kind(v, "group")?;
    let order = as_usize(get(o, "order")?, "order")?;
    let table = as_usize_mat(get(o, "table")?, "table")?;
    if table.len() != order {
        return Err(shape(format!(
            "order is {order} but the table has {} rows",
            table.len()
        )));
    }
    validate_group(table).map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn abelian_to_value(h: &FinAbGroup) -> Value {
    json!({"kind": "abelian", "invariant_factors": h.invariant_factors()})
}

pub fn parse_abelian(v: &Value) -> Result<FinAbGroup, JsonError> {
    let o = expect_kind(v, "abelian")?;
    let factors = as_usize_vec(get(o, "invariant_factors")?, "invariant_factors")?;
    FinAbGroup::new(factors).map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn action_to_value(a: &GAction) -> Value {
    json!({"kind": "action", "perms": a.perms()})
}

/// Context-free part of an action document: every row a permutation of a
/// common index range.
pub fn parse_action_perms(v: &Value) -> Result<Vec<Vec<usize>>, JsonError> {
    let o = expect_kind(v, "action")?;
    let perms = as_usize_mat(get(o, "perms")?, "perms")?;
    for (g, row) in perms.iter().enumerate() {
        let mut seen = vec![false; row.len()];
        for &x in row {
            if x >= row.len() || seen[x] {
                return Err(shape(format!("perms[{g}] is not a permutation")));
            }
            seen[x] = true;
        }
        if row.len() != perms[0].len() {
            return Err(shape("perms rows differ in length".to_string()));
        }
    }
    Ok(perms)
}

pub fn parse_action_group(
    v: &Value,
    g: &FiniteGroup,
    h: &FiniteGroup,
) -> Result<GAction, JsonError> {
    let perms = parse_action_perms(v)?;
    validate_action(g, h, &perms).map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn parse_action_abelian(
    v: &Value,
    g: &FiniteGroup,
    h: &FinAbGroup,
) -> Result<GAction, JsonError> {
    let perms = parse_action_perms(v)?;
    validate_action_abelian(g, h, &perms).map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn cochain_to_value(f: &NormalizedCochain) -> Value {
    let coeffs = f.module().coeffs();
    let values: Vec<Vec<usize>> = f.values().iter().map(|&h| coeffs.decode(h)).collect();
    json!({"kind": "cochain", "degree": f.degree(), "values": values})
}

/// Context-free part of a cochain document: the degree and the value
/// tuples, each tuple of a common length.
pub fn parse_cochain_shape(v: &Value) -> Result<(usize, Vec<Vec<usize>>), JsonError> {
    let o = expect_kind(v, "cochain")?;
    let degree = as_usize(get(o, "degree")?, "degree")?;
    let values = as_usize_mat(get(o, "values")?, "values")?;
    if let Some(first) = values.first() {
        if values.iter().any(|t| t.len() != first.len()) {
            return Err(shape("cochain value tuples differ in length".to_string()));
        }
    }
    Ok((degree, values))
}

pub fn parse_cochain(v: &Value, module: &GModule) -> Result<NormalizedCochain, JsonError> {
    let (degree, tuples) = parse_cochain_shape(v)?;
    let coeffs = module.coeffs();
    let mut values = Vec::with_capacity(tuples.len());
    for (i, t) in tuples.iter().enumerate() {
        if t.len() != coeffs.rank()
            || t.iter()
                .zip(coeffs.invariant_factors())
                .any(|(&a, &d)| a >= d)
        {
            return Err(invalid(
                "ValueOutOfRange",
                format!("value at tuple index {i} is not an element tuple"),
            ));
        }
        values.push(coeffs.encode(t));
    }
    NormalizedCochain::from_values(module, degree, values)
        .map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn crossed_module_to_value(cm: &CrossedModule) -> Value {
    json!({
        "kind": "crossed_module",
        "G": group_to_value(cm.g()),
        "H": group_to_value(cm.h()),
        "t": cm.t().map(),
        "alpha": action_to_value(cm.alpha()),
    })
}

pub fn parse_crossed_module(v: &Value) -> Result<CrossedModule, JsonError> {
    let o = expect_kind(v, "crossed_module")?;
    let g = parse_group(get(o, "G")?)?;
    let h = parse_group(get(o, "H")?)?;
    let t = as_usize_vec(get(o, "t")?, "t")?;
    let perms = parse_action_perms(get(o, "alpha")?)?;
    validate_crossed_module(&g, &h, t, &perms).map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn strict_to_value(st: &StrictTwoGroup) -> Value {
    json!({
        "kind": "strict_two_group",
        "C0": group_to_value(st.c0()),
        "C1": group_to_value(st.c1()),
        "s": st.s().map(),
        "t": st.t().map(),
        "i": st.i().map(),
    })
}

pub fn parse_strict(v: &Value) -> Result<StrictTwoGroup, JsonError> {
    let o = expect_kind(v, "strict_two_group")?;
    let c0 = parse_group(get(o, "C0")?)?;
    let c1 = parse_group(get(o, "C1")?)?;
    let s = as_usize_vec(get(o, "s")?, "s")?;
    let t = as_usize_vec(get(o, "t")?, "t")?;
    let i = as_usize_vec(get(o, "i")?, "i")?;
    let comp: Option<Vec<(usize, usize, usize)>> = match o.get("comp") {
        None => None,
        Some(raw) => Some(
            as_usize_mat(raw, "comp")?
                .into_iter()
                .map(|triple| {
                    if triple.len() != 3 {
                        return Err(shape("comp entries must be [f, g, composite] triples"));
                    }
                    Ok((triple[0], triple[1], triple[2]))
                })
                .collect::<Result<_, _>>()?,
        ),
    };
    validate_strict_two_group(&c0, &c1, s, t, i, comp.as_deref())
        .map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn quadruple_to_value(q: &Quadruple) -> Value {
    json!({
        "kind": "two_group",
        "group": group_to_value(q.group()),
        "coeffs": abelian_to_value(q.coeffs()),
        "alpha": action_to_value(q.alpha()),
        "a": cochain_to_value(q.a()),
    })
}

pub fn parse_quadruple(v: &Value) -> Result<Quadruple, JsonError> {
    let o = expect_kind(v, "two_group")?;
    let g = parse_group(get(o, "group")?)?;
    let h = parse_abelian(get(o, "coeffs")?)?;
    let alpha = parse_action_abelian(get(o, "alpha")?, &g, &h)?;
    let module = GModule::new(g, h, alpha).map_err(|e| invalid(e.code(), e.to_string()))?;
    let a = parse_cochain(get(o, "a")?, &module)?;
    Quadruple::new(module, a).map_err(|e| invalid(e.code(), e.to_string()))
}

/// Serializes a groupoid whose morphism indices are grouped by
/// `(source, target)` blocks in ascending order — true of every groupoid
/// this crate produces.
pub fn groupoid_to_value(m: &MonoidalGroupoid) -> Result<Value, JsonError> {
    let d = m.data();
    let n = d.n_objects;
    let n_mor = d.src.len();
    let mut homs = vec![vec![0usize; n]; n];
    for f in 0..n_mor {
        homs[d.src[f]][d.tgt[f]] += 1;
    }
    let mut expected = Vec::with_capacity(n_mor);
    for (x, row) in homs.iter().enumerate() {
        for (y, &count) in row.iter().enumerate() {
            expected.extend((0..count).map(|_| (x, y)));
        }
    }
    let actual: Vec<(usize, usize)> = (0..n_mor).map(|f| (d.src[f], d.tgt[f])).collect();
    if expected != actual {
        return Err(invalid(
            "NotBlockOrdered",
            "morphism indices are not grouped by (source, target)",
        ));
    }
    let mut comp = Vec::with_capacity(n_mor * n_mor);
    let mut tensor_mor = Vec::with_capacity(n_mor * n_mor);
    for g in 0..n_mor {
        for f in 0..n_mor {
            comp.push(d.comp[f][g].map_or(-1i64, |c| c as i64));
            tensor_mor.push(d.tensor_mor[f][g] as i64);
        }
    }
    Ok(json!({
        "kind": "monoidal_groupoid",
        "objects": n,
        "homs": homs,
        "comp": comp,
        "tensor_obj": d.tensor_obj,
        "tensor_mor": tensor_mor,
        "assoc": d.assoc,
        "lunit": d.lunit,
        "runit": d.runit,
    }))
}

pub fn parse_groupoid(v: &Value, max_morphisms: usize) -> Result<MonoidalGroupoid, JsonError> {
    let o = expect_kind(v, "monoidal_groupoid")?;
    let n = as_usize(get(o, "objects")?, "objects")?;
    let homs = as_usize_mat(get(o, "homs")?, "homs")?;
    if homs.len() != n || homs.iter().any(|row| row.len() != n) {
        return Err(shape(format!("homs must be a {n} by {n} count matrix")));
    }
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    for (x, row) in homs.iter().enumerate() {
        for (y, &count) in row.iter().enumerate() {
            for _ in 0..count {
                src.push(x);
                tgt.push(y);
            }
        }
    }
    let n_mor = src.len();
    let flat_pairs = |raw: &Value, what: &str| -> Result<Vec<i64>, JsonError> {
        let flat = as_int_vec(raw, what)?;
        if flat.len() != n_mor * n_mor {
            return Err(shape(format!(
                "{what} must have {} entries",
                n_mor * n_mor
            )));
        }
        Ok(flat)
    };
    let comp_flat = flat_pairs(get(o, "comp")?, "comp")?;
    let tensor_flat = flat_pairs(get(o, "tensor_mor")?, "tensor_mor")?;
    let mut comp = vec![vec![None; n_mor]; n_mor];
    let mut tensor_mor = vec![vec![0usize; n_mor]; n_mor];
    for g in 0..n_mor {
        for f in 0..n_mor {
            let c = comp_flat[f + n_mor * g];
            if c < -1 {
                return Err(shape("comp entries must be -1 or morphism indices"));
            }
            comp[f][g] = (c >= 0).then_some(c as usize);
            let t = tensor_flat[f + n_mor * g];
            if t < 0 {
                return Err(shape("tensor_mor entries must be morphism indices"));
            }
            tensor_mor[f][g] = t as usize;
        }
    }
    let tensor_obj = as_usize_mat(get(o, "tensor_obj")?, "tensor_obj")?;
    let assoc = as_usize_vec(get(o, "assoc")?, "assoc")?;
    let lunit = as_usize_vec(get(o, "lunit")?, "lunit")?;
    let runit = as_usize_vec(get(o, "runit")?, "runit")?;
    if tensor_obj.len() != n
        || tensor_obj.iter().any(|row| row.len() != n)
        || tensor_obj.iter().flatten().any(|&x| x >= n)
    {
        return Err(shape(format!("tensor_obj must be a {n} by {n} object table")));
    }
    if lunit.len() != n || runit.len() != n {
        return Err(shape(format!("lunit and runit must have {n} entries")));
    }
    if lunit.iter().chain(&runit).any(|&f| f >= n_mor) {
        return Err(shape("lunit and runit must contain morphism indices"));
    }
    // the unit object is not stored: it is the least object whose left and
    // right unitor sources match the tensor rows
    let unit = (0..n)
        .find(|&u| {
            (0..n).all(|x| {
                src[lunit[x]] == tensor_obj[u][x] && src[runit[x]] == tensor_obj[x][u]
            })
        })
        .ok_or_else(|| {
            invalid(
                "Malformed",
                "no object is consistent with the unitors as a unit",
            )
        })?;
    let data = MonoidalGroupoidData {
        n_objects: n,
        unit,
        src,
        tgt,
        comp,
        tensor_obj,
        tensor_mor,
        assoc,
        lunit,
        runit,
    };
    validate_monoidal_groupoid(data, max_morphisms).map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn choice_to_value(c: &InverseChoice) -> Value {
    let entries: Vec<Value> = c
        .entries()
        .iter()
        .enumerate()
        .map(|(x, e)| json!({"x": x, "xbar": e.xbar, "i_mor": e.i_mor, "e_mor": e.e_mor}))
        .collect();
    json!({"kind": "inverse_choice", "entries": entries})
}

pub fn parse_choice(v: &Value) -> Result<InverseChoice, JsonError> {
    let o = expect_kind(v, "inverse_choice")?;
    let raw = get(o, "entries")?
        .as_array()
        .ok_or_else(|| shape("entries must be an array"))?;
    let mut entries = Vec::with_capacity(raw.len());
    for (pos, e) in raw.iter().enumerate() {
        let eo = as_obj(e)?;
        if as_usize(get(eo, "x")?, "x")? != pos {
            return Err(shape(format!("entries[{pos}] must carry x = {pos}")));
        }
        entries.push(ChoiceEntry {
            xbar: as_usize(get(eo, "xbar")?, "xbar")?,
            i_mor: as_usize(get(eo, "i_mor")?, "i_mor")?,
            e_mor: as_usize(get(eo, "e_mor")?, "e_mor")?,
        });
    }
    Ok(InverseChoice::new(entries))
}

pub fn special_hom_to_value(f: &SpecialHom) -> Value {
    let coeffs = f.target().coeffs();
    let psi: Vec<Vec<usize>> = f.psi().table().iter().map(|&h| coeffs.decode(h)).collect();
    json!({
        "kind": "special_hom",
        "phi": f.phi().map(),
        "psi": psi,
        "k": cochain_to_value(f.k()),
    })
}

/// Raw pieces of a homomorphism document: the object map, the image
/// tuples, and the comparison cochain document.
pub type SpecialHomShape = (Vec<usize>, Vec<Vec<usize>>, Value);

/// Context-free part of a homomorphism document.
pub fn parse_special_hom_shape(v: &Value) -> Result<SpecialHomShape, JsonError> {
    let o = expect_kind(v, "special_hom")?;
    let phi = as_usize_vec(get(o, "phi")?, "phi")?;
    let psi = as_usize_mat(get(o, "psi")?, "psi")?;
    let k = get(o, "k")?;
    parse_cochain_shape(k)?;
    Ok((phi, psi, k.clone()))
}

pub fn parse_special_hom(
    v: &Value,
    source: &Quadruple,
    target: &Quadruple,
) -> Result<SpecialHom, JsonError> {
    let (phi_map, psi_tuples, k_value) = parse_special_hom_shape(v)?;
    let phi = validate_hom(source.group(), target.group(), phi_map)
        .map_err(|e| invalid(e.code(), e.to_string()))?;
    let coeffs = target.coeffs();
    if psi_tuples.len() != source.coeffs().order() {
        return Err(shape(format!(
            "psi must list {} images",
            source.coeffs().order()
        )));
    }
    let mut table = Vec::with_capacity(psi_tuples.len());
    for (i, t) in psi_tuples.iter().enumerate() {
        if t.len() != coeffs.rank()
            || t.iter()
                .zip(coeffs.invariant_factors())
                .any(|(&a, &d)| a >= d)
        {
            return Err(invalid(
                "ImageOutOfRange",
                format!("psi image {i} is not an element tuple"),
            ));
        }
        table.push(coeffs.encode(t));
    }
    let src_coeffs = source.coeffs();
    let gen_images: Vec<usize> = (0..src_coeffs.rank())
        .map(|j| {
            let mut e = vec![0usize; src_coeffs.rank()];
            e[j] = 1;
            table[src_coeffs.encode(&e)]
        })
        .collect();
    let psi = AdditiveMap::from_gen_images(src_coeffs, coeffs, &gen_images)
        .map_err(|e| invalid(e.code(), e.to_string()))?;
    if psi.table() != table.as_slice() {
        return Err(invalid("NotAdditive", "psi table is not additive"));
    }
    let twisted = twisted_module(source, target, &phi);
    let k = parse_cochain(&k_value, &twisted)?;
    SpecialHom::new(source, target, phi, psi, k).map_err(|e| invalid(e.code(), e.to_string()))
}

pub fn two_hom_to_value(t: &TwoHom) -> Value {
    json!({"kind": "two_hom", "p": cochain_to_value(t.p())})
}

/// Context-free part of a 2-cell document.
pub fn parse_two_hom_shape(v: &Value) -> Result<Value, JsonError> {
    let o = expect_kind(v, "two_hom")?;
    let p = get(o, "p")?;
    parse_cochain_shape(p)?;
    Ok(p.clone())
}

pub fn parse_two_hom(
    v: &Value,
    first: &SpecialHom,
    second: &SpecialHom,
) -> Result<TwoHom, JsonError> {
    let p_value = parse_two_hom_shape(v)?;
    let p = parse_cochain(&p_value, first.k().module())?;
    TwoHom::new(first, second, p).map_err(|e| invalid(e.code(), e.to_string()))
}
