//! Exact-arithmetic construction and verification of classical r-matrices on the
//! Lie superalgebras gl(m,n) and sl(m,n).
//!
//! An r-matrix here is an element `r` of g⊗g solving the graded classical
//! Yang-Baxter equation `[r12,r13] + [r12,r23] + [r13,r23] = 0` together with
//! the unitarity condition `r12 + r21 = Ω`, where Ω is the quadratic Casimir
//! 2-tensor. Such solutions are produced from admissible triples (Γ₁, Γ₂, τ)
//! of simple roots on a chosen Dynkin diagram, in the Belavin-Drinfeld style,
//! and every equation is re-checked by independent brute-force expansion.
//!
//! The pipeline:
//!
//! * [`algebra`] — the concrete algebras, super-bracket, supertrace form,
//!   dual bases and the Casimir element;
//! * [`roots`] — Dynkin diagrams (simple root systems), odd reflections,
//!   positive roots, normalized root vectors, Cartan vectors and Ω₀;
//! * [`triples`] — admissible triples, the extension τ̄ and the induced
//!   partial order on positive roots;
//! * [`construct`] — the isomorphism φ, φ-consistent root vectors, the exact
//!   solver for the Cartan parameter r₀, the tensor assembly, the operator
//!   route f = f₀ ⊕ f₊ ⊕ f₋ and the (modified) Cayley transform;
//! * [`verify`] — residual computations and equation checkers, all exact.
//!
//! Scalars are arbitrary-precision rationals throughout; there is no floating
//! point anywhere and no tolerance in any check. The `parallel` feature (on by
//! default) runs the heavier verification loops on rayon; a build with
//! `--no-default-features` is fully sequential and produces identical results.

pub mod algebra;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod linalg;
pub mod operator;
pub mod roots;
pub mod sample;
pub mod scalar;
pub mod tensor;
pub mod triples;
pub mod verify;

pub use algebra::{AlgebraElement, AlgebraKind, BasisIndex, SuperAlgebra};
pub use error::{Error, Result};
pub use operator::{LinearOperator, OpSpace};
pub use roots::{DynkinDiagram, Root};
pub use scalar::Rat;
pub use tensor::{Tensor2, Tensor3};
pub use triples::AdmissibleTriple;
