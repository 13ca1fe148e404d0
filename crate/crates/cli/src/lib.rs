//! JSON front end for the `moncross` library.

pub mod cases;
pub mod wire;

use rayon::prelude::*;
use serde_json::Value;

pub use cases::{run_case, Command, Failure, Flags, Limits};

/// One output document per input case, in input order.
pub struct BatchOutput {
    pub documents: Vec<Result<Value, Failure>>,
    pub batch: bool,
}

/// Parse the input text and run every case in it. A top-level array is a
/// batch of independent cases, run in parallel.
pub fn run_text(command: Command, text: &str, flags: Flags, limits: Limits) -> Result<BatchOutput, Failure> {
    let value: Value = serde_json::from_str(text).map_err(|e| Failure::Schema(e.to_string()))?;
    Ok(match value {
        Value::Array(items) => BatchOutput {
            documents: items.into_par_iter().map(|v| run_case(command, v, flags, limits)).collect(),
            batch: true,
        },
        single => BatchOutput { documents: vec![run_case(command, single, flags, limits)], batch: false },
    })
}

/// The JSON document printed in place of a failed case inside a batch.
pub fn failure_document(f: &Failure) -> Value {
    serde_json::json!({ "error": { "code": f.exit_code(), "message": f.to_string() } })
}
