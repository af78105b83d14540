//! Constant φ-para-holomorphic sectional curvature, the η-Einstein fit it
//! forces and the PC-Bochner tensor.

use std::fmt::Write as _;

use paraframe::catalog::builtin;
use paraframe::identities::{detect_h, eta_einstein_fit, pc_bochner};
use paraframe::{curvature_bundle, levi_civita, Result};

pub fn run() -> Result<String> {
    let mut out = String::new();
    for name in ["paper_example", "para_heisenberg"] {
        let s = builtin(name)?.structure()?;
        let cb = curvature_bundle(s.base(), &levi_civita(s.base())?)?;
        let hol = detect_h(&s, &cb)?;
        let fit = eta_einstein_fit(&s, &cb)?;
        let bochner = pc_bochner(&s, &cb)?;
        let _ = writeln!(out, "{name}: H = {} (model match {})", hol.h, hol.matches_model);
        let _ = writeln!(out, "  Ric = a g + b η⊗η with (a, b) = ({}, {}), exact {}", fit.a, fit.b, fit.exact);
        let _ = writeln!(out, "  PC-Bochner k = {}, {}", bochner.k, bochner.zero);
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
