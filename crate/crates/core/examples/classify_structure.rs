//! Axioms and structure classes of the builtin models.

use std::fmt::Write as _;

use paraframe::catalog::{builtin, BUILTIN_NAMES};
use paraframe::paracontact::classify;
use paraframe::{levi_civita, Result};

pub fn run() -> Result<String> {
    let mut out = String::new();
    for name in BUILTIN_NAMES {
        let s = builtin(name)?.structure()?;
        let report = classify(&s, &levi_civita(s.base())?);
        let _ = writeln!(out, "{name}");
        let _ = write!(out, "{report}");
        if !report.quasi_para_sasakian.pass {
            let _ = writeln!(out, "  {}", report.quasi_para_sasakian);
        }
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
