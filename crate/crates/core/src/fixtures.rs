//! Reference tensors and operators on sl(2,1).
//!
//! The six standard tails, the four nonstandard tails, and the exotic
//! operator that solves the full system without coming from any admissible
//! triple. These are frozen tables used by the reproduction command and the
//! acceptance suite.

use crate::algebra::{AlgebraElement, SuperAlgebra};
use crate::operator::{LinearOperator, OpSpace};
use crate::scalar::rat;
use crate::tensor::Tensor2;

/// Non-Cartan tails of the six standard r-matrices, indexed by diagram in
/// enumeration order.
pub fn standard_tails_sl21() -> Vec<Tensor2> {
    vec![
        Tensor2::from_terms(&[((2, 1), (1, 2), 1, 1), ((3, 2), (2, 3), 1, 1), ((3, 1), (1, 3), 1, 1)]),
        Tensor2::from_terms(&[((2, 1), (1, 2), 1, 1), ((2, 3), (3, 2), -1, 1), ((3, 1), (1, 3), 1, 1)]),
        Tensor2::from_terms(&[((2, 1), (1, 2), 1, 1), ((2, 3), (3, 2), -1, 1), ((1, 3), (3, 1), -1, 1)]),
        Tensor2::from_terms(&[((1, 2), (2, 1), 1, 1), ((2, 3), (3, 2), -1, 1), ((1, 3), (3, 1), -1, 1)]),
        Tensor2::from_terms(&[((1, 2), (2, 1), 1, 1), ((3, 2), (2, 3), 1, 1), ((1, 3), (3, 1), -1, 1)]),
        Tensor2::from_terms(&[((1, 2), (2, 1), 1, 1), ((3, 2), (2, 3), 1, 1), ((3, 1), (1, 3), 1, 1)]),
    ]
}

/// Extra terms of the four nonstandard r-matrices, keyed by
/// (diagram index, triple index) in enumeration order.
pub fn nonstandard_additions_sl21() -> Vec<((usize, usize), Tensor2)> {
    let plus_pair =
        Tensor2::from_terms(&[((3, 1), (3, 2), 1, 1), ((3, 2), (3, 1), 1, 1)]);
    let minus_pair =
        Tensor2::from_terms(&[((1, 3), (2, 3), -1, 1), ((2, 3), (1, 3), -1, 1)]);
    vec![
        ((1, 1), plus_pair.clone()),
        ((1, 2), minus_pair.clone()),
        ((4, 1), minus_pair),
        ((4, 2), plus_pair),
    ]
}

/// The Cartan parameter of the exotic solution:
/// (−E22−E33) ⊗ (E11+E33).
pub fn exotic_r0_sl21() -> Tensor2 {
    Tensor2::product(
        &AlgebraElement::from_terms(&[(2, 2, -1), (3, 3, -1)]),
        &AlgebraElement::from_terms(&[(1, 1, 1), (3, 3, 1)]),
    )
}

/// The exotic r-matrix on sl(2,1):
/// r₀ + E12⊗E21 − E13⊗E31 + E32⊗E23 − E13⊗E13 + E23⊗E23.
pub fn exotic_r_sl21() -> Tensor2 {
    exotic_r0_sl21().add(&Tensor2::from_terms(&[
        ((1, 2), (2, 1), 1, 1),
        ((1, 3), (3, 1), -1, 1),
        ((3, 2), (2, 3), 1, 1),
        ((1, 3), (1, 3), -1, 1),
        ((2, 3), (2, 3), 1, 1),
    ]))
}

/// The exotic operator as a table of images:
/// f(E11+E33) = 0, f(E22+E33) = E22+E33, f(E21) = 0, f(E12) = E12,
/// f(E23) = 0, f(E13) = E13, f(E31) = −E13, f(E32) = E23+E32.
pub fn exotic_f_sl21(alg: &SuperAlgebra) -> LinearOperator {
    let table: Vec<(AlgebraElement, AlgebraElement)> = vec![
        (
            AlgebraElement::from_terms(&[(1, 1, 1), (3, 3, 1)]),
            AlgebraElement::zero(),
        ),
        (
            AlgebraElement::from_terms(&[(2, 2, 1), (3, 3, 1)]),
            AlgebraElement::from_terms(&[(2, 2, 1), (3, 3, 1)]),
        ),
        (AlgebraElement::unit(2, 1), AlgebraElement::zero()),
        (AlgebraElement::unit(1, 2), AlgebraElement::unit(1, 2)),
        (AlgebraElement::unit(2, 3), AlgebraElement::zero()),
        (AlgebraElement::unit(1, 3), AlgebraElement::unit(1, 3)),
        (
            AlgebraElement::unit(3, 1),
            AlgebraElement::from_terms(&[(1, 3, -1)]),
        ),
        (
            AlgebraElement::unit(3, 2),
            AlgebraElement::from_terms(&[(2, 3, 1), (3, 2, 1)]),
        ),
    ];
    // images of the algebra basis by linearity over the table
    let map = crate::construct::SubalgebraMap { pairs: table };
    let images: Vec<AlgebraElement> = alg
        .basis()
        .iter()
        .map(|b| map.apply(alg, b).expect("table spans sl(2,1)"))
        .collect();
    LinearOperator::from_images(alg, OpSpace::Full, &images).expect("images lie in the algebra")
}

/// An operator with f + f* = 1 whose image is not closed under the bracket;
/// a negative control for the subalgebra check.
pub fn closure_violating_f_sl21(alg: &SuperAlgebra) -> LinearOperator {
    let half = rat(1, 2);
    let images: Vec<AlgebraElement> = alg
        .basis()
        .iter()
        .map(|b| {
            if b == &AlgebraElement::unit(1, 3) {
                AlgebraElement::from_terms(&[(1, 3, 1), (3, 1, 1)])
            } else if b == &AlgebraElement::unit(3, 1) {
                AlgebraElement::zero()
            } else {
                b.scale(&half)
            }
        })
        .collect();
    LinearOperator::from_images(alg, OpSpace::Full, &images).expect("images lie in the algebra")
}
