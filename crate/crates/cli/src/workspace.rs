//! Named knots and operators, and loading of input files.

use knotloc_core::library;
use knotloc_core::operator::{DoublingOperator, ExpressionJson, KnotExpression, NameTable, OperatorJson};
use knotloc_core::seifert::KnotJson;
use knotloc_core::{Error, SeifertMatrix};
use serde::Deserialize;
use serde_json::Value;
use std::path::Path;

pub enum Failure {
    Usage(String),
    Rejected(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Rejected(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Rejected(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Format(_) => Failure::Usage(e.to_string()),
            _ => Failure::Rejected(e.to_string()),
        }
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

#[derive(Deserialize)]
struct LibraryFile {
    #[serde(default)]
    knots: Vec<KnotJson>,
    #[serde(default)]
    operators: Vec<OperatorJson>,
}

pub struct Workspace {
    pub table: NameTable,
}

fn read_json(path: &str) -> Outcome<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path} is not valid JSON: {e}")))
}

fn decode<T: for<'de> Deserialize<'de>>(v: Value, path: &str, what: &str) -> Outcome<T> {
    serde_json::from_value(v).map_err(|e| Failure::Usage(format!("{path} is not a valid {what} file: {e}")))
}

impl Workspace {
    pub fn load(libs: &[String]) -> Outcome<Self> {
        let mut ws = Workspace { table: library::builtin() };
        for path in libs {
            let v = read_json(path)?;
            if v.get("seifert").is_some() {
                let k = ws.knot_from_value(v, path)?;
                ws.add_knot(k, path)?;
            } else if v.get("pattern_seifert").is_some() {
                let o = DoublingOperator::from_json(&decode(v, path, "operator")?)?;
                ws.add_operator(o, path)?;
            } else {
                let lib: LibraryFile = decode(v, path, "library")?;
                for k in &lib.knots {
                    let m = SeifertMatrix::from_json(k)?;
                    ws.add_knot(m, path)?;
                }
                for o in &lib.operators {
                    ws.add_operator(DoublingOperator::from_json(o)?, path)?;
                }
            }
        }
        Ok(ws)
    }

    fn add_knot(&mut self, k: SeifertMatrix, path: &str) -> Outcome<()> {
        let name = k.name().unwrap_or_default().to_string();
        if name.is_empty() {
            return Err(Failure::Usage(format!("knot in {path} has no name")));
        }
        if self.table.knots.contains_key(&name) {
            return Err(Failure::Usage(format!("knot name {name:?} from {path} is already defined")));
        }
        self.table.knots.insert(name, k);
        Ok(())
    }

    fn add_operator(&mut self, o: DoublingOperator, path: &str) -> Outcome<()> {
        if self.table.operators.contains_key(&o.name) {
            return Err(Failure::Usage(format!("operator name {:?} from {path} is already defined", o.name)));
        }
        self.table.operators.insert(o.name.clone(), o);
        Ok(())
    }

    fn knot_from_value(&self, v: Value, path: &str) -> Outcome<SeifertMatrix> {
        let k: KnotJson = decode(v, path, "knot")?;
        Ok(SeifertMatrix::from_json(&k)?)
    }

    /// A built-in or loaded knot name, or a knot file.
    pub fn knot(&self, arg: &str) -> Outcome<SeifertMatrix> {
        if let Some(k) = self.table.knots.get(arg) {
            return Ok(k.clone());
        }
        if Path::new(arg).exists() {
            return self.knot_from_value(read_json(arg)?, arg);
        }
        Err(Failure::Usage(format!(
            "{arg:?} is neither a known knot nor a file; known knots: {}",
            self.table.knots.keys().filter(|k| !k.ends_with("-pattern")).cloned().collect::<Vec<_>>().join(", ")
        )))
    }

    /// A built-in or loaded operator name, or an operator file.
    pub fn operator(&self, arg: &str) -> Outcome<DoublingOperator> {
        if let Some(o) = self.table.operators.get(arg) {
            return Ok(o.clone());
        }
        if Path::new(arg).exists() {
            let j: OperatorJson = decode(read_json(arg)?, arg, "operator")?;
            return Ok(DoublingOperator::from_json(&j)?);
        }
        Err(Failure::Usage(format!(
            "{arg:?} is neither a known operator (Rp1 .. Rp{}) nor a file",
            library::FAMILY_SIZE
        )))
    }

    pub fn expression(&self, path: &str) -> Outcome<KnotExpression> {
        let j: ExpressionJson = decode(read_json(path)?, path, "expression")?;
        Ok(KnotExpression::from_json(&j, &self.table)?)
    }

    pub fn json_file<T: for<'de> Deserialize<'de>>(&self, path: &str, what: &str) -> Outcome<T> {
        decode(read_json(path)?, path, what)
    }
}
