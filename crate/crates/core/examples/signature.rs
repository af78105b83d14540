//! Signature of symmetric rational matrices by congruence, including forms
//! whose diagonal vanishes entirely.

use std::fmt::Write as _;

use paraframe::algebra::signature;
use paraframe::{rat, Result, SymMatrix};

pub fn run() -> Result<String> {
    let mut out = String::new();
    let forms = [
        ("diag(1,-1,1)", SymMatrix::diagonal(&[rat(1), rat(-1), rat(1)])),
        (
            "hyperbolic pair",
            SymMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]])?,
        ),
        (
            "zero diagonal 3x3",
            SymMatrix::from_rows(vec![
                vec![rat(0), rat(1), rat(1)],
                vec![rat(1), rat(0), rat(1)],
                vec![rat(1), rat(1), rat(0)],
            ])?,
        ),
    ];
    for (label, m) in forms {
        let (p, q) = signature(&m)?;
        let _ = writeln!(out, "{label}: ({p},{q}), det {}", m.determinant());
    }
    Ok(out)
}

fn main() -> Result<()> {
    print!("{}", run()?);
    Ok(())
}
