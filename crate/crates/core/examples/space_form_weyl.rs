//! A five-dimensional space form of curvature `-1`: its Ricci data and the
//! vanishing of the Weyl tensor.

use std::fmt::Write as _;

use paraframe::curvature::space_form_riemann;
use paraframe::identities::{constant_curvature_test, weyl_tensor, weyl_traces_vanish};
use paraframe::{rat, CurvatureBundle, Result, SymMatrix};

pub fn run() -> Result<String> {
    let mut out = String::new();
    let g = SymMatrix::diagonal(&[rat(1), rat(-1), rat(1), rat(-1), rat(1)]);
    let cb = CurvatureBundle::from_riemann(g.clone(), space_form_riemann(&g, &rat(-1)))?;
    let weyl = weyl_tensor(&cb)?;
    let _ = writeln!(out, "scal = {}", cb.scal);
    let _ = writeln!(out, "constant curvature = {:?}", constant_curvature_test(&cb).map(|c| c.to_string()));
    let _ = writeln!(out, "Weyl tensor zero: {}", weyl.is_zero());
    let _ = writeln!(out, "{}", weyl_traces_vanish(&cb, &weyl));
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
