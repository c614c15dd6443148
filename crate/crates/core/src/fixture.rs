//! JSONL fixtures with expectation blocks.
//!
//! Each line names a semigroup (and optionally an ideal and a tangent-cone
//! presentation) plus an `expect` object. Every key of `expect` is compared
//! exactly against the recomputed value of the same key.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graded::{crosscheck_presentation, MonomialIdeal};
use crate::hilbert::analyze;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

const DEFAULT_UPTO: usize = 20;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    #[serde(default)]
    pub name: Option<String>,
    pub gens: Vec<usize>,
    #[serde(default)]
    pub ideal: Option<Vec<usize>>,
    /// Tangent-cone presentation in CLI syntax, e.g. `"1,0,1;0,6,0"`.
    #[serde(default)]
    pub presentation: Option<String>,
    #[serde(default)]
    pub vars: Option<usize>,
    #[serde(default)]
    pub upto: Option<usize>,
    #[serde(default)]
    pub expect: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldDiff {
    pub field: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub line: usize,
    pub name: String,
    pub diffs: Vec<FieldDiff>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

/// Parses a JSONL document; blank lines are skipped. Errors carry the
/// 1-based line number.
pub fn parse_fixtures(text: &str) -> std::result::Result<Vec<(usize, Fixture)>, (usize, String)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str::<Fixture>(l)
                .map(|f| (i + 1, f))
                .map_err(|e| (i + 1, e.to_string()))
        })
        .collect()
}

impl Fixture {
    fn label(&self, line: usize) -> String {
        self.name.clone().unwrap_or_else(|| {
            let gens: Vec<String> = self.gens.iter().map(usize::to_string).collect();
            format!("line {line} <{}>", gens.join(","))
        })
    }

    fn presentation(&self) -> Result<Option<MonomialIdeal>> {
        self.presentation
            .as_deref()
            .map(|p| MonomialIdeal::parse_with_vars(p, self.vars))
            .transpose()
    }

    /// Everything an `expect` block may refer to.
    pub fn compute(&self) -> Result<Map<String, Value>> {
        let s = NumericalSemigroup::new(&self.gens)?;
        let ideal = match &self.ideal {
            Some(offsets) => RelativeIdeal::new(&s, offsets)?,
            None => RelativeIdeal::ring(&s),
        };
        let data = analyze(&s, &ideal)?;
        let Value::Object(mut out) = serde_json::to_value(&data).expect("serializable") else {
            unreachable!()
        };
        out.insert("frobenius".into(), json!(s.frobenius()));
        out.insert("multiplicity".into(), json!(s.multiplicity()));
        out.insert("embdim".into(), json!(s.embedding_dimension()));
        out.insert("genus".into(), json!(s.genus()));
        out.insert("symmetric".into(), json!(s.is_symmetric()));
        out.insert("arf".into(), json!(s.is_arf()));
        out.insert("min_mult".into(), json!(s.has_minimal_multiplicity()));
        if let Some(p) = self.presentation()? {
            let report = crosscheck_presentation(&s, &p, self.upto.unwrap_or(DEFAULT_UPTO))?;
            out.insert("crosscheck_equal".into(), json!(report.equal));
            if let Some(Value::Array(w)) = self.expect.get("socle") {
                let w: Vec<usize> = serde_json::from_value(Value::Array(w.clone()))
                    .map_err(|e| Error::Parse(format!("socle: {e}")))?;
                if p.is_socle_witness(&w)? {
                    out.insert("socle".into(), json!(w));
                }
            }
        }
        Ok(out)
    }

    pub fn check(&self, line: usize) -> FixtureOutcome {
        let name = self.label(line);
        let actual = match self.compute() {
            Ok(a) => a,
            Err(e) => {
                return FixtureOutcome {
                    line,
                    name,
                    diffs: vec![FieldDiff {
                        field: "<compute>".into(),
                        expected: "success".into(),
                        actual: e.to_string(),
                    }],
                }
            }
        };
        let diffs = self
            .expect
            .iter()
            .filter_map(|(k, want)| {
                let got = actual.get(k);
                (got != Some(want)).then(|| FieldDiff {
                    field: k.clone(),
                    expected: want.to_string(),
                    actual: got.map_or_else(|| "<absent>".into(), Value::to_string),
                })
            })
            .collect();
        FixtureOutcome { line, name, diffs }
    }
}
