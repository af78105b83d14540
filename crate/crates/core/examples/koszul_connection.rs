//! Levi-Civita connection of the three-dimensional example group from its
//! structure constants and metric, printed as the table of `∇_{E_i}E_j`.

use std::fmt::Write as _;

use paraframe::catalog::builtin;
use paraframe::{levi_civita, Result};

pub fn run() -> Result<String> {
    let mut out = String::new();
    for name in ["paper_example", "para_heisenberg"] {
        let frame = builtin(name)?.frame()?;
        let conn = levi_civita(&frame)?;
        let _ = writeln!(out, "{name}");
        for i in 0..frame.dim() {
            for j in 0..frame.dim() {
                let v = conn.nabla_basis(i, j);
                if !v.is_zero() {
                    let _ = writeln!(out, "  ∇_E{} E{} = {v}", i + 1, j + 1);
                }
            }
        }
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
