use serde_json::Value;

use crate::SchemaName;

const CLASSIFY: &str = include_str!("../schemas/classify.json");
const WITNESS: &str = include_str!("../schemas/witness.json");
const INVARIANTS: &str = include_str!("../schemas/invariants.json");
const SAMPLE: &str = include_str!("../schemas/sample.json");
const REDUCE: &str = include_str!("../schemas/reduce.json");
const RADICAL_CHECK: &str = include_str!("../schemas/radical-check.json");
const GAUGE_FIX: &str = include_str!("../schemas/gauge-fix.json");
const ENERGY: &str = include_str!("../schemas/energy.json");
const MEASURE_DENSITY: &str = include_str!("../schemas/measure-density.json");
const ERROR: &str = include_str!("../schemas/error.json");

/// The output schema of a subcommand, as shipped in `schemas/`.
pub fn schema(name: SchemaName) -> Value {
    let text = match name {
        SchemaName::Classify => CLASSIFY,
        SchemaName::Witness => WITNESS,
        SchemaName::Invariants => INVARIANTS,
        SchemaName::Sample => SAMPLE,
        SchemaName::Reduce => REDUCE,
        SchemaName::RadicalCheck => RADICAL_CHECK,
        SchemaName::GaugeFix => GAUGE_FIX,
        SchemaName::Energy => ENERGY,
        SchemaName::MeasureDensity => MEASURE_DENSITY,
        SchemaName::Error => ERROR,
    };
    serde_json::from_str(text).expect("shipped schemas are valid JSON")
}
