//! JSON (de)serialization for quantales, categories, modules, and results.
//!
//! The on-disk formats are:
//!
//! * quantale descriptor: `{"builtin": "bool2", "params": {"levels": 4}}`
//!   (`params` only where the builtin takes one);
//! * category: `{"quantale": <descriptor>, "elements": [labels],
//!   "structure": [[value literals]]}` (row-major, rows indexed like
//!   `elements`);
//! * module: `{"source": <category or path string>, "target": <category or
//!   path string>, "matrix": [[value literals]]}`;
//! * distance result: `{"value": literal, "witness": …, "attainment":
//!   "exact"|"gap", "gap": literal|null}`.
//!
//! Value literals are JSON booleans for `bool2`, decimal strings, fractions
//! `"p/q"` or `"inf"` for the cost quantale (bare JSON integers are also
//! accepted), `"i/n"` fractions for the Lukasiewicz chains, and
//! `"bot"|"k"|"top"` for the three-element chain.

use serde_json::{json, Map, Value as Json};

use crate::enriched::{make_vcategory, VCategory};
use crate::error::{Error, Result};
use crate::gromov::{Attainment, GromovResult, Witness};
use crate::quantale::{format_cost, make_builtin, parse_cost, Quantale, Value};
use crate::vmodule::{make_vmodule, VModule};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Renders a quantale descriptor.
pub fn quantale_to_json(q: &Quantale) -> Json {
    match q {
        Quantale::Lukasiewicz { levels } => {
            json!({"builtin": "lukasiewicz", "params": {"levels": levels}})
        }
        Quantale::Bool2 => json!({"builtin": "bool2"}),
        Quantale::Cost => json!({"builtin": "cost"}),
        Quantale::ThreeChain => json!({"builtin": "three_chain"}),
    }
}

/// Parses a quantale descriptor.
pub fn quantale_from_json(v: &Json) -> Result<Quantale> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("quantale descriptor must be an object"))?;
    let name = obj
        .get("builtin")
        .and_then(Json::as_str)
        .ok_or_else(|| parse_err("quantale descriptor needs a `builtin` string"))?;
    let levels = obj
        .get("params")
        .and_then(|p| p.get("levels"))
        .map(|l| {
            l.as_u64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| parse_err("`levels` must be a small positive integer"))
        })
        .transpose()?;
    make_builtin(name, levels)
}

/// Renders one quantale element as its JSON literal.
pub fn value_to_json(q: &Quantale, v: Value) -> Json {
    match (q, v) {
        (Quantale::Bool2, Value::Bool(b)) => Json::Bool(b),
        (Quantale::Cost, Value::Cost(c)) => Json::String(format_cost(c)),
        _ => Json::String(q.format_value(v)),
    }
}

/// Parses one quantale element from its JSON literal.
pub fn value_from_json(q: &Quantale, v: &Json) -> Result<Value> {
    let parsed = match q {
        Quantale::Bool2 => Value::Bool(
            v.as_bool()
                .ok_or_else(|| parse_err(format!("expected a boolean, got {v}")))?,
        ),
        Quantale::Cost => match v {
            Json::String(s) => Value::Cost(parse_cost(s)?),
            Json::Number(n) => {
                let i = n
                    .as_i64()
                    .ok_or_else(|| parse_err("cost numbers must be integers; use a string for fractions"))?;
                Value::Cost(parse_cost(&i.to_string())?)
            }
            other => return Err(parse_err(format!("bad cost literal {other}"))),
        },
        Quantale::Lukasiewicz { levels } => {
            let s = v
                .as_str()
                .ok_or_else(|| parse_err(format!("expected a chain fraction string, got {v}")))?;
            Value::Level(parse_level(s, *levels)?)
        }
        Quantale::ThreeChain => {
            let s = v
                .as_str()
                .ok_or_else(|| parse_err(format!("expected bot/k/top, got {v}")))?;
            match s {
                "bot" => Value::Level(0),
                "k" => Value::Level(1),
                "top" => Value::Level(2),
                other => return Err(parse_err(format!("bad three_chain literal `{other}`"))),
            }
        }
    };
    q.guard(parsed)?;
    Ok(parsed)
}

/// Parses a chain fraction `i/n` (or a bare integer 0/1) against `levels`.
fn parse_level(text: &str, levels: u32) -> Result<u32> {
    let bad = || parse_err(format!("bad chain literal `{text}` for {levels} levels"));
    let (num, den) = match text.trim().split_once('/') {
        Some((p, q)) => (
            p.trim().parse::<u64>().map_err(|_| bad())?,
            q.trim().parse::<u64>().map_err(|_| bad())?,
        ),
        None => (text.trim().parse::<u64>().map_err(|_| bad())?, 1),
    };
    if den == 0 || (num * u64::from(levels)) % den != 0 {
        return Err(bad());
    }
    let level = num * u64::from(levels) / den;
    u32::try_from(level).map_err(|_| bad())
}

/// Renders a category with its quantale, carrier, and structure table.
pub fn category_to_json(x: &VCategory) -> Json {
    let q = x.quantale();
    let structure: Vec<Json> = (0..x.len())
        .map(|i| Json::Array((0..x.len()).map(|j| value_to_json(q, x.a(i, j))).collect()))
        .collect();
    json!({
        "quantale": quantale_to_json(q),
        "elements": x.carrier(),
        "structure": structure,
    })
}

/// Parses and validates a category.
pub fn category_from_json(v: &Json) -> Result<VCategory> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("category must be an object"))?;
    let q = quantale_from_json(
        obj.get("quantale")
            .ok_or_else(|| parse_err("category needs a `quantale` descriptor"))?,
    )?;
    let elements: Vec<String> = obj
        .get("elements")
        .and_then(Json::as_array)
        .ok_or_else(|| parse_err("category needs an `elements` array"))?
        .iter()
        .map(|e| {
            e.as_str()
                .map(str::to_owned)
                .ok_or_else(|| parse_err("carrier labels must be strings"))
        })
        .collect::<Result<_>>()?;
    let entries = matrix_from_json(
        &q,
        obj.get("structure")
            .ok_or_else(|| parse_err("category needs a `structure` matrix"))?,
        elements.len(),
        elements.len(),
    )?;
    make_vcategory(q, elements, entries)
}

fn matrix_from_json(q: &Quantale, v: &Json, rows: usize, cols: usize) -> Result<Vec<Value>> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err("matrix must be an array of rows"))?;
    if arr.len() != rows {
        return Err(parse_err(format!(
            "matrix has {} rows, expected {rows}",
            arr.len()
        )));
    }
    let mut out = Vec::with_capacity(rows * cols);
    for row in arr {
        let row = row
            .as_array()
            .ok_or_else(|| parse_err("matrix rows must be arrays"))?;
        if row.len() != cols {
            return Err(parse_err(format!(
                "matrix row has {} entries, expected {cols}",
                row.len()
            )));
        }
        for cell in row {
            out.push(value_from_json(q, cell)?);
        }
    }
    Ok(out)
}

fn matrix_to_json(q: &Quantale, rows: usize, cols: usize, at: impl Fn(usize, usize) -> Value) -> Json {
    Json::Array(
        (0..rows)
            .map(|i| Json::Array((0..cols).map(|j| value_to_json(q, at(i, j))).collect()))
            .collect(),
    )
}

/// Renders a module with inline endpoint categories.
pub fn module_to_json(phi: &VModule) -> Json {
    json!({
        "source": category_to_json(phi.source()),
        "target": category_to_json(phi.target()),
        "matrix": matrix_to_json(
            phi.quantale(),
            phi.source().len(),
            phi.target().len(),
            |i, j| phi.phi(i, j),
        ),
    })
}

/// Parses and validates a module. The `source`/`target` fields hold either
/// an inline category object or a path string; path strings are handed to
/// `resolve` (the CLI resolves them relative to the module file).
pub fn module_from_json(
    v: &Json,
    resolve: &dyn Fn(&str) -> Result<VCategory>,
) -> Result<VModule> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("module must be an object"))?;
    let endpoint = |field: &str| -> Result<VCategory> {
        match obj.get(field) {
            Some(Json::String(path)) => resolve(path),
            Some(inline) => category_from_json(inline),
            None => Err(parse_err(format!("module needs a `{field}` category"))),
        }
    };
    let source = endpoint("source")?;
    let target = endpoint("target")?;
    let entries = matrix_from_json(
        source.quantale(),
        obj.get("matrix")
            .ok_or_else(|| parse_err("module needs a `matrix`"))?,
        source.len(),
        target.len(),
    )?;
    make_vmodule(&source, &target, entries)
}

/// Renders a distance result (value, witness, attainment, gap).
pub fn result_to_json(q: &Quantale, r: &GromovResult) -> Json {
    let witness = match &r.witness {
        Witness::Module(phi) => module_to_json(phi),
        Witness::Pair(fwd, back) => json!({
            "forward": module_to_json(fwd),
            "backward": module_to_json(back),
        }),
    };
    let mut obj = Map::new();
    obj.insert("value".into(), value_to_json(q, r.value));
    obj.insert("witness".into(), witness);
    obj.insert(
        "attainment".into(),
        Json::String(
            match r.attainment {
                Attainment::Exact => "exact",
                Attainment::Gap => "gap",
            }
            .into(),
        ),
    );
    obj.insert(
        "gap".into(),
        r.gap.map_or(Json::Null, |g| value_to_json(q, g)),
    );
    Json::Object(obj)
}

/// Reads and parses a JSON file, tagging IO and syntax errors with the path.
pub fn read_json_file(path: &str) -> Result<Json> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.into(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| parse_err(format!("{path}: {e}")))
}
