//! Independent brute-force verification of every equation in the pipeline.
//!
//! Nothing here reuses construction shortcuts: the Yang-Baxter residual is a
//! full graded expansion in g⊗g⊗g, the unitarity residual compares against
//! the Casimir term by term, and the operator-side checks run over all
//! homogeneous basis pairs. All verdicts are exact; a report never contains
//! an approximation.
//!
//! With the `parallel` feature the entry-pair and basis-pair loops fan out on
//! rayon; the sequential variants (`*_seq`) are always available and produce
//! identical results, which the bench suite compares.

use num_traits::Zero;
use serde_json::Value;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::algebra::{AlgebraElement, SuperAlgebra};
use crate::construct::{cayley, CayleyData};
use crate::error::Result;
use crate::linalg::{Mat, RowBasis};
use crate::operator::{LinearOperator, OpSpace};
use crate::scalar::Rat;
use crate::tensor::{embed, graded_bracket, Positions, Tensor2, Tensor3};

/// Split a list of pair jobs into partial tensors and merge them; the merge
/// is an exact commutative sum, so the result does not depend on chunking.
fn sum_tensor3(parts: Vec<Tensor3>) -> Tensor3 {
    let mut out = Tensor3::zero();
    for p in parts {
        out.merge(p);
    }
    out
}

/// Yang-Baxter residual `[r12,r13] + [r12,r23] + [r13,r23]`, sequential.
pub fn cybe_residual_seq(r: &Tensor2, alg: &SuperAlgebra) -> Tensor3 {
    let t12_13 = graded_bracket(&embed(r, Positions::P12), &embed(r, Positions::P13), alg)
        .expect("supported placement");
    let t12_23 = graded_bracket(&embed(r, Positions::P12), &embed(r, Positions::P23), alg)
        .expect("supported placement");
    let t13_23 = graded_bracket(&embed(r, Positions::P13), &embed(r, Positions::P23), alg)
        .expect("supported placement");
    t12_13.add(&t12_23).add(&t13_23)
}

/// Yang-Baxter residual; parallel over the entries of the first factor when
/// the `parallel` feature is on.
pub fn cybe_residual(r: &Tensor2, alg: &SuperAlgebra) -> Tensor3 {
    #[cfg(feature = "parallel")]
    {
        let entries: Vec<(crate::algebra::BasisIndex, crate::algebra::BasisIndex, Rat)> =
            r.iter().map(|(&(a, b), c)| (a, b, c.clone())).collect();
        let parts: Vec<Tensor3> = entries
            .par_iter()
            .map(|&(a, b, ref c)| {
                let mut slice = Tensor2::zero();
                slice.add_term(a, b, c.clone());
                let t12_13 =
                    graded_bracket(&embed(&slice, Positions::P12), &embed(r, Positions::P13), alg)
                        .expect("supported placement");
                let t12_23 =
                    graded_bracket(&embed(&slice, Positions::P12), &embed(r, Positions::P23), alg)
                        .expect("supported placement");
                let t13_23 =
                    graded_bracket(&embed(&slice, Positions::P13), &embed(r, Positions::P23), alg)
                        .expect("supported placement");
                t12_13.add(&t12_23).add(&t13_23)
            })
            .collect();
        sum_tensor3(parts)
    }
    #[cfg(not(feature = "parallel"))]
    {
        cybe_residual_seq(r, alg)
    }
}

/// Unitarity residual `r + r21 − Ω` with the graded flip.
pub fn unitarity_residual(r: &Tensor2, alg: &SuperAlgebra) -> Tensor2 {
    r.add(&r.graded_flip(alg)).sub(alg.casimir())
}

/// Residual of the adjoint action of a homogeneous `x` on a 2-tensor:
/// `[x⊗1 + 1⊗x, t] = Σ ([x,a]⊗b + (−1)^{|x||a|} a⊗[x,b])`. Zero for the
/// Casimir and every `x`.
pub fn ad_invariance_residual(
    x: &AlgebraElement,
    t: &Tensor2,
    alg: &SuperAlgebra,
) -> Result<Tensor2> {
    let px = alg.element_parity(x)?;
    let mut out = Tensor2::zero();
    for (&(a, b), c) in t.iter() {
        let ea = AlgebraElement::unit(a.i, a.j);
        let eb = AlgebraElement::unit(b.i, b.j);
        out.add_product(&alg.bracket(x, &ea).scale(c), &eb);
        let sign = if px * alg.index_parity(a) == 1 {
            crate::scalar::int(-1)
        } else {
            crate::scalar::int(1)
        };
        out.add_product(&ea.scale(&(c * sign)), &alg.bracket(x, &eb));
    }
    Ok(out)
}

/// Extract the operator f with `r = (f ⊗ 1) Ω`: contract the second leg of r
/// against each basis vector through the form.
pub fn r_to_f(r: &Tensor2, alg: &SuperAlgebra) -> Result<LinearOperator> {
    let images: Vec<AlgebraElement> =
        alg.basis().iter().map(|b| r.contract_second(alg, b)).collect();
    LinearOperator::from_images(alg, OpSpace::Full, &images)
}

/// The 2-tensor `(f ⊗ 1) Ω = Σ_a (−1)^{|I_a|} f(I_a) ⊗ I_a*`.
pub fn f_to_r(f: &LinearOperator, alg: &SuperAlgebra) -> Result<Tensor2> {
    crate::tensor::apply_left(f, alg.casimir(), alg)
}

/// Adjoint with respect to the invariant form (re-exported convenience).
pub fn adjoint(f: &LinearOperator, alg: &SuperAlgebra) -> LinearOperator {
    f.adjoint(alg)
}

/// Result of the operator-side checks `f + f* = 1` and
/// `(f−1)[f(x),f(y)] = f([(f−1)x,(f−1)y])` over all basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FCheck {
    pub unitarity_ok: bool,
    /// Basis-pair indices where the bracket identity fails.
    pub failures: Vec<(usize, usize)>,
}

impl FCheck {
    pub fn passed(&self) -> bool {
        self.unitarity_ok && self.failures.is_empty()
    }
}

fn f_ybe_pair_fails(
    f: &LinearOperator,
    fm1: &LinearOperator,
    alg: &SuperAlgebra,
    a: usize,
    b: usize,
) -> bool {
    let x = &alg.basis()[a];
    let y = &alg.basis()[b];
    let fx = alg.from_coords(&f.mat.col(a));
    let fy = alg.from_coords(&f.mat.col(b));
    let fm1x = alg.from_coords(&fm1.mat.col(a));
    let fm1y = alg.from_coords(&fm1.mat.col(b));
    let _ = (x, y);
    let lhs = fm1.apply(alg, &alg.bracket(&fx, &fy)).expect("basis images stay inside");
    let rhs = f.apply(alg, &alg.bracket(&fm1x, &fm1y)).expect("basis images stay inside");
    lhs != rhs
}

/// Sequential basis-pair check.
pub fn f_equations_check_seq(f: &LinearOperator, alg: &SuperAlgebra) -> FCheck {
    let id = LinearOperator::identity(alg, OpSpace::Full);
    let unitarity_ok = f.add(&f.adjoint(alg)).map(|s| s == id).unwrap_or(false);
    let fm1 = f.sub(&id).expect("same space");
    let d = alg.dim();
    let mut failures = Vec::new();
    for a in 0..d {
        for b in 0..d {
            if f_ybe_pair_fails(f, &fm1, alg, a, b) {
                failures.push((a, b));
            }
        }
    }
    FCheck { unitarity_ok, failures }
}

/// Check `f + f* = 1` and the bracket identity on all homogeneous basis
/// pairs; bilinearity makes basis pairs sufficient.
pub fn f_equations_check(f: &LinearOperator, alg: &SuperAlgebra) -> FCheck {
    #[cfg(feature = "parallel")]
    {
        let id = LinearOperator::identity(alg, OpSpace::Full);
        let unitarity_ok = f.add(&f.adjoint(alg)).map(|s| s == id).unwrap_or(false);
        let fm1 = f.sub(&id).expect("same space");
        let d = alg.dim();
        let pairs: Vec<(usize, usize)> =
            (0..d).flat_map(|a| (0..d).map(move |b| (a, b))).collect();
        let mut failures: Vec<(usize, usize)> = pairs
            .par_iter()
            .filter(|&&(a, b)| f_ybe_pair_fails(f, &fm1, alg, a, b))
            .cloned()
            .collect();
        failures.sort_unstable();
        FCheck { unitarity_ok, failures }
    }
    #[cfg(not(feature = "parallel"))]
    {
        f_equations_check_seq(f, alg)
    }
}

/// Meta-test of the dictionary between the tensor and operator sides: given
/// `f + f* = 1`, the Yang-Baxter residual of `(f⊗1)Ω` vanishes exactly when
/// the basis-pair identity holds. Returns whether the two verdicts agree.
pub fn lemma1_equivalence_test(f: &LinearOperator, alg: &SuperAlgebra) -> Result<bool> {
    let r = f_to_r(f, alg)?;
    let tensor_side = cybe_residual(&r, alg).is_zero();
    let operator_side = f_equations_check(f, alg).failures.is_empty();
    Ok(tensor_side == operator_side)
}

/// Outcome of the Cayley-transform checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CayleyReport {
    /// Im(f) and Im(f−1) are closed under the bracket.
    pub subalgebras: bool,
    /// Θ is well-formed (kernel inclusions, orthogonality identities,
    /// matching quotient dimensions, invertible matrix) and a bracket
    /// isomorphism on the quotients.
    pub isomorphism: bool,
    /// Θ preserves the induced form on the quotients.
    pub isometry: bool,
}

impl CayleyReport {
    pub fn passed(&self) -> bool {
        self.subalgebras && self.isomorphism && self.isometry
    }
}

fn orthogonal_complement(space: &RowBasis, alg: &SuperAlgebra) -> RowBasis {
    let dim = alg.dim();
    if space.rank() == 0 {
        return RowBasis::from_vectors(dim, Mat::zeros(0, dim).nullspace());
    }
    let rows: Vec<Vec<Rat>> = space.rows().iter().map(|w| alg.gram().mul_vec(w)).collect();
    RowBasis::from_vectors(dim, Mat::from_rows(rows).nullspace())
}

fn closed_under_bracket(space: &RowBasis, alg: &SuperAlgebra) -> bool {
    let elems: Vec<AlgebraElement> =
        space.rows().iter().map(|v| alg.from_coords(v)).collect();
    for x in &elems {
        for y in &elems {
            let b = alg.bracket(x, y);
            match alg.coords(&b) {
                Ok(c) => {
                    if !space.contains(&c) {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
    }
    true
}

/// Apply Θ to an arbitrary vector of Im(f−1); returns quotient coordinates
/// over the codomain representatives.
fn theta_apply(data: &CayleyData, f: &LinearOperator, v: &[Rat]) -> Option<Vec<Rat>> {
    let dim = f.dim();
    let m1 = f.mat.sub(&Mat::identity(dim));
    let x = m1.solve(v)?;
    let w = f.mat.mul_vec(&x);
    let cols = data.codomain_reps.len() + data.kernel_fm1.rank();
    let mut mat = Mat::zeros(dim, cols);
    for (c, rep) in data.codomain_reps.iter().enumerate() {
        for r in 0..dim {
            mat.set(r, c, rep[r].clone());
        }
    }
    for (k, row) in data.kernel_fm1.rows().iter().enumerate() {
        for r in 0..dim {
            mat.set(r, data.codomain_reps.len() + k, row[r].clone());
        }
    }
    let sol = mat.solve(&w)?;
    if mat.mul_vec(&sol) != w {
        return None;
    }
    Some(sol[..data.codomain_reps.len()].to_vec())
}

/// Verify: (a) bracket closure of Im(f), Im(f−1); (b) Θ well-formed and
/// bijective; (c) Θ a bracket homomorphism on the quotients; (d) form
/// preservation. The report merges (b) and (c) into `isomorphism`.
pub fn cayley_check(f: &LinearOperator, alg: &SuperAlgebra) -> Result<CayleyReport> {
    let data = cayley(f, alg)?;
    let subalgebras =
        closed_under_bracket(&data.image_f, alg) && closed_under_bracket(&data.image_fm1, alg);

    // kernel inclusions and the orthogonality identities of a unitary-like f
    let mut well_formed = data.kernel_f.rows().iter().all(|v| data.image_fm1.contains(v))
        && data.kernel_fm1.rows().iter().all(|v| data.image_f.contains(v));
    well_formed &= orthogonal_complement(&data.image_fm1, alg).same_span(&data.kernel_f);
    well_formed &= orthogonal_complement(&data.image_f, alg).same_span(&data.kernel_fm1);
    well_formed &= data.domain_reps.len() == data.codomain_reps.len();
    well_formed &= data.theta.nrows() == data.theta.ncols()
        && (data.theta.nrows() == 0 || !data.theta.det().is_zero());

    // bracket must descend to the quotient: [C1, Ker f] ⊆ Ker f
    let mut homomorphism = well_formed;
    if homomorphism {
        'outer: for u in data.image_fm1.rows() {
            for k in data.kernel_f.rows() {
                let b = alg.bracket(&alg.from_coords(u), &alg.from_coords(k));
                match alg.coords(&b) {
                    Ok(c) if data.kernel_f.contains(&c) => {}
                    _ => {
                        homomorphism = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    if homomorphism {
        'pairs: for u in &data.domain_reps {
            for v in &data.domain_reps {
                let bracket = alg.bracket(&alg.from_coords(u), &alg.from_coords(v));
                let Ok(bc) = alg.coords(&bracket) else {
                    homomorphism = false;
                    break 'pairs;
                };
                let Some(lhs) = theta_apply(&data, f, &bc) else {
                    homomorphism = false;
                    break 'pairs;
                };
                let (Some(tu), Some(tv)) =
                    (theta_apply(&data, f, u), theta_apply(&data, f, v))
                else {
                    homomorphism = false;
                    break 'pairs;
                };
                let lift = |coords: &[Rat]| {
                    let mut x = AlgebraElement::zero();
                    for (rep, c) in data.codomain_reps.iter().zip(coords) {
                        x = x.add(&alg.from_coords(rep).scale(c));
                    }
                    x
                };
                let rhs_elem = alg.bracket(&lift(&tu), &lift(&tv));
                let Ok(rhs_coords) = alg.coords(&rhs_elem) else {
                    homomorphism = false;
                    break 'pairs;
                };
                // reduce the bracket of representatives to quotient coordinates
                let cols = data.codomain_reps.len() + data.kernel_fm1.rank();
                let dim = alg.dim();
                let mut mat = Mat::zeros(dim, cols);
                for (c, rep) in data.codomain_reps.iter().enumerate() {
                    for r in 0..dim {
                        mat.set(r, c, rep[r].clone());
                    }
                }
                for (k, row) in data.kernel_fm1.rows().iter().enumerate() {
                    for r in 0..dim {
                        mat.set(r, data.codomain_reps.len() + k, row[r].clone());
                    }
                }
                let Some(sol) = mat.solve(&rhs_coords) else {
                    homomorphism = false;
                    break 'pairs;
                };
                if mat.mul_vec(&sol) != rhs_coords
                    || sol[..data.codomain_reps.len()] != lhs[..]
                {
                    homomorphism = false;
                    break 'pairs;
                }
            }
        }
    }

    // isometry on quotient representatives
    let mut isometry = well_formed;
    if isometry {
        'iso: for u in &data.domain_reps {
            for v in &data.domain_reps {
                let (Some(tu), Some(tv)) =
                    (theta_apply(&data, f, u), theta_apply(&data, f, v))
                else {
                    isometry = false;
                    break 'iso;
                };
                let lift = |coords: &[Rat]| {
                    let mut x = AlgebraElement::zero();
                    for (rep, c) in data.codomain_reps.iter().zip(coords) {
                        x = x.add(&alg.from_coords(rep).scale(c));
                    }
                    x
                };
                let lhs = alg.form(&lift(&tu), &lift(&tv));
                let rhs = alg.form(&alg.from_coords(u), &alg.from_coords(v));
                if lhs != rhs {
                    isometry = false;
                    break 'iso;
                }
            }
        }
    }

    Ok(CayleyReport { subalgebras, isomorphism: homomorphism, isometry })
}

/// Complete verification verdict for an r-matrix candidate.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub unitarity_residual: Tensor2,
    pub cybe_residual: Tensor3,
    pub f_unitarity_ok: bool,
    pub f_ybe_failures: Vec<(usize, usize)>,
    pub cayley: CayleyReport,
    pub notes: String,
}

impl VerificationReport {
    pub fn unitarity_ok(&self) -> bool {
        self.unitarity_residual.is_zero()
    }

    pub fn cybe_ok(&self) -> bool {
        self.cybe_residual.is_zero()
    }

    pub fn passed(&self) -> bool {
        self.unitarity_ok()
            && self.cybe_ok()
            && self.f_unitarity_ok
            && self.f_ybe_failures.is_empty()
            && self.cayley.passed()
    }

    /// Report JSON with booleans per check and residual entry counts.
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "unitarity": self.unitarity_ok(),
            "cybe": self.cybe_ok(),
            "f_unitarity": self.f_unitarity_ok,
            "f_ybe": self.f_ybe_failures.is_empty(),
            "cayley": {
                "subalgebras": self.cayley.subalgebras,
                "isomorphism": self.cayley.isomorphism,
                "isometry": self.cayley.isometry,
            },
            "residual_norms": [self.unitarity_residual.len(), self.cybe_residual.len()],
            "notes": self.notes,
        })
    }
}

/// Run every check against a candidate tensor: residuals, the derived
/// operator, and the Cayley criteria.
pub fn verify_r_matrix(r: &Tensor2, alg: &SuperAlgebra) -> Result<VerificationReport> {
    let unitarity_residual = unitarity_residual(r, alg);
    let cybe = cybe_residual(r, alg);
    let f = r_to_f(r, alg)?;
    let fcheck = f_equations_check(&f, alg);
    let cayley = cayley_check(&f, alg)?;
    Ok(VerificationReport {
        unitarity_residual,
        cybe_residual: cybe,
        f_unitarity_ok: fcheck.unitarity_ok,
        f_ybe_failures: fcheck.failures,
        cayley,
        notes: String::new(),
    })
}
