//! JSON instance and solution formats (1-based vertices, rows, columns and labels).
//!
//! ```json
//! {"kind": "path", "n": 4, "classes": [1, 1, 2, 1]}
//! {"kind": "power_cycle", "n": 8, "s": 4, "classes": [1, 1, 1, 1, 2, 2, 2, 2]}
//! {"n": 2, "m": 2, "colors": [[1, 2], [2, 1]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::{ColorMatrix, CoreError, GraphKind, Report, VertexPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntervalJson {
    pub kind: GraphKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    pub classes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BipartiteJson {
    pub n: usize,
    pub m: usize,
    pub colors: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub allow_empty: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Interval(VertexPartition),
    Bipartite(ColorMatrix),
}

impl IntervalJson {
    pub fn into_partition(self) -> Result<VertexPartition, CoreError> {
        if self.classes.len() != self.n {
            return Err(CoreError::InvalidInstance(format!(
                "n = {} but {} class labels given",
                self.n,
                self.classes.len()
            )));
        }
        let s = match (self.kind, self.s) {
            (GraphKind::PowerCycle, Some(s)) => s,
            (GraphKind::PowerCycle, None) => {
                return Err(CoreError::InvalidInstance("power_cycle requires s".into()));
            }
            (_, None) | (_, Some(2)) => 2,
            (kind, Some(s)) => {
                return Err(CoreError::InvalidInstance(format!("s = {s} is not allowed for {kind:?}")));
            }
        };
        VertexPartition::from_one_based(self.kind, s, &self.classes)
    }

    pub fn from_partition(p: &VertexPartition) -> Self {
        Self {
            kind: p.kind(),
            n: p.n(),
            s: (p.kind() == GraphKind::PowerCycle).then_some(p.s()),
            classes: p.one_based_labels(),
        }
    }
}

impl BipartiteJson {
    pub fn into_matrix(self) -> Result<ColorMatrix, CoreError> {
        if self.colors.len() != self.n {
            return Err(CoreError::InvalidInstance(format!(
                "n = {} but {} rows given",
                self.n,
                self.colors.len()
            )));
        }
        ColorMatrix::from_one_based(self.m, &self.colors, self.allow_empty)
    }

    pub fn from_matrix(a: &ColorMatrix) -> Self {
        Self { n: a.n(), m: a.m(), colors: a.one_based_rows(), allow_empty: a.allows_empty() }
    }
}

/// Parses either instance family; the presence of `"kind"` selects the interval schema.
pub fn parse_instance(text: &str) -> Result<Instance, CoreError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CoreError::InvalidInstance(format!("malformed JSON: {e}")))?;
    if value.get("kind").is_some() {
        let raw: IntervalJson =
            serde_json::from_value(value).map_err(|e| CoreError::InvalidInstance(e.to_string()))?;
        Ok(Instance::Interval(raw.into_partition()?))
    } else {
        let raw: BipartiteJson =
            serde_json::from_value(value).map_err(|e| CoreError::InvalidInstance(e.to_string()))?;
        Ok(Instance::Bipartite(raw.into_matrix()?))
    }
}

pub fn render_instance(instance: &Instance) -> String {
    match instance {
        Instance::Interval(p) => serde_json::to_string(&IntervalJson::from_partition(p)),
        Instance::Bipartite(a) => serde_json::to_string(&BipartiteJson::from_matrix(a)),
    }
    .expect("instance serializes")
}

#[derive(Debug, Clone, Serialize)]
pub struct SetSolution {
    pub set: Vec<usize>,
    pub report: Report,
}

#[derive(Debug, Clone, Serialize)]
pub struct PermSolution {
    pub perm: Vec<usize>,
    pub report: Report,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_families() {
        let p = parse_instance(r#"{"kind":"path","n":4,"classes":[1,1,2,1]}"#).unwrap();
        assert_eq!(p, Instance::Interval(VertexPartition::path(&[1, 1, 2, 1]).unwrap()));
        let q = parse_instance(r#"{"kind":"power_cycle","n":4,"s":4,"classes":[1,1,1,1]}"#).unwrap();
        assert!(matches!(q, Instance::Interval(ref v) if v.s() == 4));
        let b = parse_instance(r#"{"n":2,"m":2,"colors":[[1,2],[2,1]]}"#).unwrap();
        assert!(matches!(b, Instance::Bipartite(ref a) if a.sizes() == [2, 2]));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_instance("{").is_err());
        assert!(parse_instance(r#"{"kind":"path","n":3,"classes":[1,1]}"#).is_err());
        assert!(parse_instance(r#"{"kind":"cycle","n":3,"s":3,"classes":[1,1,1]}"#).is_err());
        assert!(parse_instance(r#"{"kind":"power_cycle","n":3,"classes":[1,1,1]}"#).is_err());
        assert!(parse_instance(r#"{"n":2,"m":2,"colors":[[1,2]]}"#).is_err());
        assert!(parse_instance(r#"{"kind":"path","n":1,"classes":[1],"extra":0}"#).is_err());
    }

    #[test]
    fn render_round_trips() {
        for text in [
            r#"{"kind":"cycle","n":5,"classes":[1,2,1,2,1]}"#,
            r#"{"kind":"power_cycle","n":5,"s":4,"classes":[1,2,1,2,1]}"#,
            r#"{"n":2,"m":3,"colors":[[1,2],[1,1]],"allow_empty":true}"#,
        ] {
            let inst = parse_instance(text).unwrap();
            assert_eq!(render_instance(&inst), text);
            assert_eq!(parse_instance(&render_instance(&inst)).unwrap(), inst);
        }
    }
}
