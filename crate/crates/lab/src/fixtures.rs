//! Named instances with known verdicts, shipped as JSON under `fixtures/`.

use fairrep_bipartite2::{check_rigidity, exact_count_matching, Bip2Error};
use fairrep_core::{parse_instance, render_instance, ColorMatrix, Instance, Rational, VertexPartition};
use fairrep_interval::{oracle_optimum, OracleCaps};
use serde::Serialize;
use serde_json::json;

use crate::conjectures::{check_equirep00_all, check_rainbow, check_stein, check_treesconj0, GRAPH_BUDGET};
use crate::graph::{LabelledGraph, LabelledGraphJson};
use crate::LabError;

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub file: &'static str,
    pub description: &'static str,
    pub text: &'static str,
}

macro_rules! fixture {
    ($name:literal, $file:literal, $desc:literal) => {
        Fixture { name: $name, file: $file, description: $desc, text: include_str!(concat!("../../../fixtures/", $file)) }
    };
}

pub const FIXTURES: &[Fixture] = &[
    fixture!("p4", "p4.json", "P_4 with V_1 = {1, 2, 4}: optimum Σb = 1/2 at {1, 3}"),
    fixture!("remark20", "remark20.json", "20-vertex path, 5 classes of 4: optimum Σb = 2"),
    fixture!("rigid6", "rigid6.json", "[3]×[3] ∪ {4,5,6}² in K_6,6: rigid, no matching meets F in 3 edges"),
    fixture!("three_c4", "three_c4.json", "four sets of 3 edges on three disjoint 4-cycles: no rainbow matching"),
    fixture!("z4", "z4.json", "addition table of Z_4: no full transversal"),
    fixture!("z6", "z6.json", "addition table of Z_6: no full transversal"),
    fixture!("stein4", "stein4.json", "Stein matrix n = 4: no full transversal, a partial one of size 3"),
    fixture!("stein5", "stein5.json", "Stein matrix n = 5: no full transversal, a partial one of size 4"),
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

/// A parsed fixture: a core instance or a labelled bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureInstance {
    Core(Instance),
    Graph(LabelledGraph),
}

/// Parses any fixture text; an `"edges"` key selects the graph schema.
pub fn parse_fixture_text(text: &str) -> Result<FixtureInstance, LabError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| LabError::Invalid(format!("malformed JSON: {e}")))?;
    if value.get("edges").is_some() {
        let raw: LabelledGraphJson = serde_json::from_value(value).map_err(|e| LabError::Invalid(e.to_string()))?;
        Ok(FixtureInstance::Graph(LabelledGraph::from_json(raw)?))
    } else {
        Ok(FixtureInstance::Core(parse_instance(text)?))
    }
}

pub fn render_fixture_instance(instance: &FixtureInstance) -> String {
    match instance {
        FixtureInstance::Core(i) => render_instance(i),
        FixtureInstance::Graph(g) => serde_json::to_string(&g.to_json()).expect("graph serializes"),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub summary: String,
    pub detail: serde_json::Value,
}

impl Fixture {
    pub fn instance(&self) -> Result<FixtureInstance, LabError> {
        parse_fixture_text(self.text)
    }

    /// Recomputes the fixture's verdict from scratch.
    pub fn run(&self) -> Result<FixtureOutcome, LabError> {
        let inst = self.instance()?;
        let (passed, summary, detail) = match (self.name, &inst) {
            ("p4" | "remark20", FixtureInstance::Core(Instance::Interval(p))) => path_fixture(self.name, p)?,
            ("rigid6", FixtureInstance::Core(Instance::Bipartite(a))) => rigid_fixture(a)?,
            ("three_c4", FixtureInstance::Graph(g)) => {
                let v = check_rainbow(g, GRAPH_BUDGET)?;
                let ok = !v.holds && v.max_degree == 2 && v.set_sizes.iter().all(|&s| s == 3);
                (ok, format!("rainbow matching: {}, Δ = {}, set sizes {:?}", v.holds, v.max_degree, v.set_sizes), json!(v))
            }
            ("z4" | "z6" | "stein4" | "stein5", FixtureInstance::Core(Instance::Bipartite(a))) => {
                let v = check_stein(a)?;
                let mut ok = !v.full_transversal;
                let mut detail = json!({ "stein": v });
                if self.name.starts_with("stein") {
                    ok &= v.max_parts + 1 == a.n();
                    let relaxed = check_equirep00_all(a)?;
                    ok &= relaxed.iter().all(|r| r.holds);
                    detail["equirep00"] = json!(relaxed);
                }
                (ok, format!("full transversal: {}, most parts met: {} of {}", v.full_transversal, v.max_parts, a.n()), detail)
            }
            _ => return Err(LabError::Invalid(format!("fixture {} has an unexpected instance type", self.name))),
        };
        Ok(FixtureOutcome { name: self.name, passed, summary, detail })
    }
}

fn path_fixture(name: &str, p: &VertexPartition) -> Result<(bool, String, serde_json::Value), LabError> {
    let (set, opt) = oracle_optimum(p, OracleCaps::default())?;
    let trees = check_treesconj0(p, OracleCaps::default())?;
    let one_based: Vec<usize> = set.iter().map(|v| v + 1).collect();
    let ok = match name {
        "p4" => opt == Rational::new(1, 2) && one_based == [1, 3] && trees.holds,
        _ => opt == Rational::from_integer(2) && trees.holds,
    };
    Ok((
        ok,
        format!("optimum Σb = {opt} at {one_based:?}; both bounds together: {}", trees.holds),
        json!({ "optimum": opt.to_string(), "optimum_set": one_based, "treesconj0": trees }),
    ))
}

fn rigid_fixture(a: &ColorMatrix) -> Result<(bool, String, serde_json::Value), LabError> {
    let cert = check_rigidity(a)?;
    let achievable = match exact_count_matching(a, 3) {
        Err(Bip2Error::RigidInfeasible { achievable }) => Some(achievable),
        _ => None,
    };
    let one = |v: &Option<Vec<usize>>| v.as_ref().map(|v| v.iter().map(|x| x + 1).collect::<Vec<_>>());
    let (k, l) = (one(&cert.k), one(&cert.l));
    let ok = cert.rigid
        && k.as_deref() == Some(&[1, 2, 3][..])
        && l.as_deref() == Some(&[1, 2, 3][..])
        && achievable.as_deref() == Some(&[0, 2, 4, 6][..]);
    Ok((
        ok,
        format!("rigid: {}, K = {:?}, L = {:?}, count 3 achievable set {:?}", cert.rigid, k, l, achievable),
        json!({ "rigid": cert.rigid, "k": k, "l": l, "achievable": achievable }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_round_trips_and_passes() {
        for f in FIXTURES {
            let inst = f.instance().unwrap();
            let again = parse_fixture_text(&render_fixture_instance(&inst)).unwrap();
            assert_eq!(inst, again, "{}", f.name);
            let out = f.run().unwrap();
            assert!(out.passed, "{}: {}", f.name, out.summary);
        }
    }
}
