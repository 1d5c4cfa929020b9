//! Brute-force deciders for open fair-representation conjectures, seeded
//! sweeps over small instance families, and the named example instances.

pub mod conjectures;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod graph;
pub mod sweep;
pub mod verify;

pub use conjectures::{
    check_equirep00, check_equirep00_all, check_prefix_fair, check_rainbow, check_stein, check_treesconj0,
    check_underrep, EquirepVerdict, PrefixVerdict, RainbowVerdict, SteinVerdict, TreesVerdict, UnderrepVerdict,
    GRAPH_BUDGET, MATRIX_CAP,
};
pub use enumerate::{for_each_labelling, for_each_matrix_up_to_symmetry, matrix_family_size};
pub use error::LabError;
pub use fixtures::{fixture, parse_fixture_text, render_fixture_instance, Fixture, FixtureInstance, FixtureOutcome, FIXTURES};
pub use graph::{LabelledGraph, LabelledGraphJson};
pub use sweep::{run_sweep, ConjectureId, Counterexample, SweepConfig, SweepMode, SweepOutcome};

use fairrep_core::Rational;
use serde::Serializer;

pub(crate) fn ratio_str<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}
