//! Teichmüller lifts: the canonical roots of unity inside the p-adic units.

use core_arith::{PadicError, PadicInt};

/// The unique `(p-1)`-th root of unity congruent to `a` mod `p`, to `m`
/// digits, for an odd prime `p` and a unit `a`.
///
/// Computed by iterating `x -> x^p`: the map contracts each step one digit
/// closer to the fixed point, so at most `m` iterations are needed; the loop
/// stops as soon as an iterate is fixed.
pub fn teichmuller(p: u64, a: u64, m: u32) -> Result<PadicInt, PadicError> {
    if p == 2 {
        return Err(PadicError::EvenPrime);
    }
    if a % p == 0 {
        return Err(PadicError::NotAUnit(a.into(), p, 1));
    }
    let mut x = PadicInt::from_i64(p, m, (a % p) as i64);
    for _ in 0..=m {
        let next = x.pow(p);
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    unreachable!("x -> x^p gains a digit per step and must stabilize within m iterations");
}
