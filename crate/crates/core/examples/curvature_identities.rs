//! Curvature of a quasi-para-Sasakian frame and the identities it satisfies
//! along `ξ` and under `φ`.

use std::fmt::Write as _;

use paraframe::catalog::builtin;
use paraframe::identities::{verify_phi_curvature, verify_xi_curvature};
use paraframe::{curvature_bundle, levi_civita, nabla_curvature, Result};

pub fn run() -> Result<String> {
    let mut out = String::new();
    let s = builtin("para_heisenberg")?.structure()?;
    let conn = levi_civita(s.base())?;
    let cb = curvature_bundle(s.base(), &conn)?;
    let nabla_r = nabla_curvature(s.base(), &conn, &cb)?;

    for i in 0..s.dim() {
        let row: Vec<String> = (0..s.dim()).map(|j| cb.ricci.get(&[i, j]).to_string()).collect();
        let _ = writeln!(out, "Ric[E{}] = ({})", i + 1, row.join(", "));
    }
    let _ = writeln!(out, "scal = {}", cb.scal);
    for report in verify_xi_curvature(&s, &cb, &nabla_r)?
        .into_iter()
        .chain(verify_phi_curvature(&s, &cb)?)
    {
        let _ = writeln!(out, "{report}");
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
