//! Writing a model to its canonical file form, reading it back and checking
//! a user-defined model with fractional structure constants.

use std::fmt::Write as _;

use paraframe::catalog::{builtin, ModelSpec};
use paraframe::report::{run_check, CheckOptions};
use paraframe::Result;

const SCALED: &str = r#"{
  "name": "scaled_heisenberg",
  "dim": 3,
  "structure_constants": [[2, 1, 3, "-1/2"]],
  "metric": [["1", "0", "0"], ["0", "-1", "0"], ["0", "0", "1"]],
  "phi": [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "0"]],
  "xi": ["0", "0", "1"],
  "eta": ["0", "0", "1"]
}"#;

pub fn run() -> Result<String> {
    let mut out = String::new();
    let text = builtin("para_heisenberg")?.to_json();
    let back = ModelSpec::from_json_str(&text)?;
    let _ = writeln!(out, "round trip identical: {}", back.to_json() == text);

    let spec = ModelSpec::from_json_str(SCALED)?;
    for (i, j, k, c) in &spec.structure_constants {
        let _ = writeln!(out, "{}: c^{k}_{i}{j} = {c}", spec.name);
    }
    let report = run_check(&spec, &CheckOptions::default())?;
    let _ = writeln!(
        out,
        "quasi-para-Sasakian: {}, scal = {}, overall {}",
        report.classification_flag("quasi_para_sasakian").unwrap_or(false),
        report.summary.scal,
        report.overall()
    );
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
