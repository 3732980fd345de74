//! Benchmark fixtures.

use wha_core::wha::WhaElement;
use wha_core::{CycloScalar, WhaAlgebra};

/// A dense-ish element with small integer coefficients on every `stride`-th basis vector.
pub fn spread_element(alg: &WhaAlgebra, offset: usize, stride: usize) -> WhaElement {
    let mut x = alg.zero();
    for (k, i) in (offset % alg.dim()..alg.dim())
        .step_by(stride.max(1))
        .enumerate()
    {
        x.add_term(
            i,
            CycloScalar::from_integer(alg.level(), (k % 5) as i64 - 2),
        );
    }
    x
}
