//! Step-by-step replays of two small constructions, for display.

use crate::error::Result;
use crate::field::PrimeModulus;
use crate::matrix::MatZp;
use crate::mubset::{generate_power_set, generate_rep_set, verify_lemma1};
use crate::poly::{poly_is_irreducible, poly_is_primitive, PolyZp};
use crate::symrep::{symmetrize_companion, tridiag_char_poly, SymRepWitness, TridiagSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub label: String,
    pub value: String,
}

fn step(label: &str, value: impl ToString) -> Step {
    Step {
        label: label.to_string(),
        value: value.to_string(),
    }
}

/// Companion symmetrization of `x^3 + x^2 + 2x + 1` over Z_3.
pub fn companion_27() -> Result<Vec<Step>> {
    let p = PrimeModulus::new(3)?;
    let f = PolyZp::new(p, vec![1, 2, 1, 1]);
    let w = symmetrize_companion(&f)?;
    let mut out = vec![
        step("f", &f),
        step("irreducible", poly_is_irreducible(&f)?),
        step("C", w.c.as_ref().expect("companion witness")),
        step("B_0", w.b.as_ref().expect("companion witness")),
        step("g", w.g.as_ref().expect("odd p")),
    ];
    let pm = w.p.as_ref().expect("companion witness");
    out.push(step("P", pm));
    out.push(step("P^-1", pm.inverse()?));
    out.push(step("Q", &w.q));
    out.push(step("Q^2", w.q.pow(2)));
    let s = generate_rep_set(&w)?;
    out.push(step("graph bases", s.dimension()));
    out.push(step("bases with computational", s.dimension() + 1));
    out.push(step(
        "determinant check",
        if verify_lemma1(&s).passed() {
            "pass"
        } else {
            "fail"
        },
    ));
    Ok(out)
}

/// Tridiagonal construction with `d = (1, 0, 0)` over Z_2.
pub fn tridiagonal_8() -> Result<Vec<Step>> {
    let p = PrimeModulus::new(2)?;
    let spec = TridiagSpec::new(p, vec![1, 0, 0])?;
    let f = tridiag_char_poly(&spec);
    let w = SymRepWitness::from_tridiag(&spec)?;
    let mut out = vec![
        step("d", "(1, 0, 0)"),
        step("Q", &w.q),
        step("char poly", &f),
        step("irreducible", poly_is_irreducible(&f)?),
        step("primitive", poly_is_primitive(&f)?),
    ];
    let s = generate_rep_set(&w)?;
    for (i, a) in s.matrices().iter().enumerate() {
        out.push(step(&format!("A_{i}"), a));
    }
    let mut power = MatZp::identity(p, 3)?;
    for i in 0..7 {
        out.push(step(&format!("Q^{i}"), &power));
        power = power.checked_mul(&w.q)?;
    }
    let same = generate_power_set(&w).is_ok();
    out.push(step("powers and zero give the same set", same));
    out.push(step(
        "determinant check",
        if verify_lemma1(&s).passed() {
            "pass"
        } else {
            "fail"
        },
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replays_run() {
        let c = companion_27().unwrap();
        assert!(c.iter().any(|s| s.label == "g" && s.value == "2"));
        let d = tridiagonal_8().unwrap();
        assert!(d
            .iter()
            .any(|s| s.label == "char poly" && s.value == "x^3 + x^2 + 1"));
    }
}
