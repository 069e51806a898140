//! From an admissible triple to an r-matrix.
//!
//! Two routes are implemented and cross-checked:
//!
//! * the tensor formula `r = r₀ + Σ_{α>0} e_{−α}⊗e_α +
//!   Σ_{α<β} (e_{−α}⊗e_β − (−1)^{|α|} e_β⊗e_{−α})` over φ-consistent root
//!   vectors, and
//! * the operator route `r = (f ⊗ 1)Ω` with `f = f₀ ⊕ f₊ ⊕ f₋`, where
//!   `f₊ = −(ψ + ψ² + ⋯)` for the nilpotent shift ψ induced by τ̄ on the
//!   positive part and `f₋ = 1 + ψ* + ψ*² + ⋯` on the negative part.
//!
//! The Cartan parameter r₀ is a genuinely free (affine) family; [`solve_r0`]
//! returns a canonical particular solution together with a basis of the
//! homogeneous solutions.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Mat, RowBasis};
use crate::operator::{LinearOperator, OpSpace};
use crate::roots::{cartan_vector, positive_roots, root_vector_pair, simple_support, Root};
use crate::scalar::Rat;
use crate::tensor::{apply_left, Tensor2};
use crate::triples::{order_respecting_positive_roots, AdmissibleTriple};

/// A linear map defined on a subalgebra, stored as (domain vector, image)
/// pairs over homogeneous basis vectors of the domain.
#[derive(Clone, Debug)]
pub struct SubalgebraMap {
    pub pairs: Vec<(AlgebraElement, AlgebraElement)>,
}

impl SubalgebraMap {
    /// Apply to an element of the domain span; fails outside the span.
    pub fn apply(&self, alg: &SuperAlgebra, x: &AlgebraElement) -> Result<AlgebraElement> {
        let dim = alg.dim();
        let mut mat = Mat::zeros(dim, self.pairs.len());
        for (col, (dom, _)) in self.pairs.iter().enumerate() {
            for (row, v) in alg.coords(dom)?.into_iter().enumerate() {
                mat.set(row, col, v);
            }
        }
        let rhs = alg.coords(x)?;
        let c = mat.solve(&rhs).ok_or(Error::NotInAlgebra)?;
        if mat.mul_vec(&c) != rhs {
            return Err(Error::NotInAlgebra);
        }
        let mut out = AlgebraElement::zero();
        for ((_, img), v) in self.pairs.iter().zip(&c) {
            out = out.add(&img.scale(v));
        }
        Ok(out)
    }
}

/// Root vectors for all ±positive roots of a diagram, keyed by root.
pub type RootVectors = BTreeMap<Root, AlgebraElement>;

/// Default (table) root vectors for every positive root and its negative.
pub fn default_root_vectors(t: &AdmissibleTriple, alg: &SuperAlgebra) -> Result<RootVectors> {
    let mut vectors = RootVectors::new();
    for rho in positive_roots(&t.diagram) {
        let (e, f) = root_vector_pair(&t.diagram, &rho, alg)?;
        vectors.insert(rho.neg(), f);
        vectors.insert(rho, e);
    }
    Ok(vectors)
}

/// The normalized dual of a root vector: the unique y in the opposite root
/// space with (x, y) = 1.
fn normalized_dual(alg: &SuperAlgebra, x: &AlgebraElement) -> Result<AlgebraElement> {
    let mut it = x.iter();
    let (&idx, c) = it.next().ok_or(Error::UnreachableRootVector)?;
    if it.next().is_some() {
        return Err(Error::UnreachableRootVector);
    }
    let sign = if alg.line_parity(idx.i) == 1 { crate::scalar::int(-1) } else { crate::scalar::int(1) };
    let mut y = AlgebraElement::zero();
    y.add_term(crate::algebra::BasisIndex::new(idx.j, idx.i), sign / c.clone());
    Ok(y)
}

/// Scalar N with `bracket = N · reference` for two vectors of the same
/// one-dimensional root space.
fn proportionality(bracket: &AlgebraElement, reference: &AlgebraElement) -> Result<Rat> {
    let (&idx, rc) = reference.iter().next().ok_or(Error::UnreachableRootVector)?;
    let n = bracket.coeff(idx) / rc.clone();
    if bracket != &reference.scale(&n) || n.is_zero() {
        return Err(Error::UnreachableRootVector);
    }
    Ok(n)
}

struct Propagator<'a> {
    t: &'a AdmissibleTriple,
    alg: &'a SuperAlgebra,
    vectors: RootVectors,
}

impl<'a> Propagator<'a> {
    fn new(t: &'a AdmissibleTriple, alg: &'a SuperAlgebra) -> Result<Self> {
        Ok(Propagator { t, alg, vectors: default_root_vectors(t, alg)? })
    }

    fn vector(&self, rho: &Root) -> Result<&AlgebraElement> {
        self.vectors.get(rho).ok_or(Error::NotPositiveRoot)
    }

    /// Split a composite positive root as (first simple of its support, rest).
    fn split(&self, rho: &Root) -> Result<Option<(Root, Root)>> {
        let support = simple_support(&self.t.diagram, rho).ok_or(Error::NotPositiveRoot)?;
        if support.len() <= 1 {
            return Ok(None);
        }
        let gamma = self.t.diagram.simple_roots[support[0]].clone();
        let rest = rho.add(&gamma.neg());
        Ok(Some((gamma, rest)))
    }

    /// φ(e_ρ) for a positive ρ ∈ Γ̄₁, evaluated on the current vectors.
    fn phi_pos(&self, rho: &Root) -> Result<AlgebraElement> {
        match self.split(rho)? {
            None => {
                let target = self.t.tau_bar(rho)?;
                Ok(self.vector(&target)?.clone())
            }
            Some((gamma, rest)) => {
                let bracket = self.alg.bracket(self.vector(&gamma)?, self.vector(&rest)?);
                let n = proportionality(&bracket, self.vector(rho)?)?;
                let img = self
                    .alg
                    .bracket(&self.phi_pos(&gamma)?, &self.phi_pos(&rest)?)
                    .scale(&(crate::scalar::int(1) / n));
                Ok(img)
            }
        }
    }

    /// φ(e_{−ρ}) for a positive ρ ∈ Γ̄₁.
    fn phi_neg(&self, rho: &Root) -> Result<AlgebraElement> {
        match self.split(rho)? {
            None => {
                let target = self.t.tau_bar(rho)?;
                Ok(self.vector(&target.neg())?.clone())
            }
            Some((gamma, rest)) => {
                let bracket =
                    self.alg.bracket(self.vector(&gamma.neg())?, self.vector(&rest.neg())?);
                let n = proportionality(&bracket, self.vector(&rho.neg())?)?;
                let img = self
                    .alg
                    .bracket(&self.phi_neg(&gamma)?, &self.phi_neg(&rest)?)
                    .scale(&(crate::scalar::int(1) / n));
                Ok(img)
            }
        }
    }

    /// Push vectors forward along τ̄ in topological order of the induced
    /// partial order, so that φ(e_ρ) = e_{τ̄ρ} holds afterwards.
    fn run(&mut self) -> Result<()> {
        let sources: Vec<Root> = order_respecting_positive_roots(self.t)?
            .into_iter()
            .filter(|rho| self.t.gamma_bar(1).contains(rho))
            .collect();
        for rho in sources {
            let image = self.phi_pos(&rho)?;
            let target = self.t.tau_bar(&rho)?;
            let dual = normalized_dual(self.alg, &image)?;
            self.vectors.insert(target.neg(), dual);
            self.vectors.insert(target, image);
        }
        Ok(())
    }
}

/// Root vectors rescaled so that φ(e_ρ) = e_{τ̄ρ} for all ρ ∈ Γ̄₁ while
/// keeping (e_ρ, e_{−ρ}) = 1.
pub fn consistent_root_vectors(t: &AdmissibleTriple, alg: &SuperAlgebra) -> Result<RootVectors> {
    let mut p = Propagator::new(t, alg)?;
    p.run()?;
    Ok(p.vectors)
}

/// The isomorphism φ: g₁ → g₂ on its basis: root vectors of ±Γ̄₁ and the
/// Cartan vectors of Γ₁.
pub fn build_phi(t: &AdmissibleTriple, alg: &SuperAlgebra) -> Result<SubalgebraMap> {
    let mut p = Propagator::new(t, alg)?;
    p.run()?;
    let mut pairs = Vec::new();
    for rho in t.gamma_bar(1) {
        let e = p.vector(&rho)?.clone();
        pairs.push((e, p.phi_pos(&rho)?));
        let f = p.vector(&rho.neg())?.clone();
        pairs.push((f, p.phi_neg(&rho)?));
    }
    for &k in &t.gamma1 {
        let gamma = &t.diagram.simple_roots[k];
        let target = &t.diagram.simple_roots[t.tau[&k]];
        pairs.push((cartan_vector(gamma, alg), cartan_vector(target, alg)));
    }
    Ok(SubalgebraMap { pairs })
}

/// The affine family of Cartan parameters for a triple.
#[derive(Clone, Debug)]
pub struct R0Solution {
    pub f0_particular: LinearOperator,
    pub f0_nullspace: Vec<LinearOperator>,
    pub particular: Tensor2,
    pub nullspace: Vec<Tensor2>,
}

impl R0Solution {
    /// The r₀ tensor `particular + Σ coefficients·nullspace`.
    pub fn member(&self, coefficients: &[Rat]) -> Tensor2 {
        assert_eq!(coefficients.len(), self.nullspace.len());
        let mut r0 = self.particular.clone();
        for (g, c) in self.nullspace.iter().zip(coefficients) {
            r0 = r0.add(&g.scale(c));
        }
        r0
    }
}

/// Solve the exact linear system for f₀ on the Cartan:
/// `f₀ + f₀* = 1` and `f₀(h_α) = (f₀ − 1)(h_{τα})` for α ∈ Γ₁, then map
/// solutions to tensors through `r₀ = (f₀ ⊗ 1) Ω₀`.
///
/// The particular solution is canonical: its component along the nullspace
/// (in the entrywise inner product on matrices) is zero, which for the empty
/// triple yields exactly f₀ = ½·1.
pub fn solve_r0(t: &AdmissibleTriple, alg: &SuperAlgebra) -> Result<R0Solution> {
    let d = alg.cartan_dim();
    let vars = d * d;
    let g = alg.cartan_gram();
    let g_inv = alg.cartan_gram_inv();

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();

    // f₀ + G⁻¹ f₀ᵀ G = 1
    for i in 0..d {
        for j in 0..d {
            let mut row = vec![Rat::zero(); vars];
            row[i * d + j] += crate::scalar::int(1);
            for l in 0..d {
                for k in 0..d {
                    row[l * d + k] += g_inv.at(i, k) * g.at(l, j);
                }
            }
            rows.push(row);
            rhs.push(if i == j { crate::scalar::int(1) } else { Rat::zero() });
        }
    }

    // f₀(h_α − h_{τα}) = −h_{τα} for each α ∈ Γ₁
    for (&a, &b) in &t.tau {
        let h_a = alg.cartan_coords(&cartan_vector(&t.diagram.simple_roots[a], alg))?;
        let h_b = alg.cartan_coords(&cartan_vector(&t.diagram.simple_roots[b], alg))?;
        for r in 0..d {
            let mut row = vec![Rat::zero(); vars];
            for c in 0..d {
                row[r * d + c] = &h_a[c] - &h_b[c];
            }
            rows.push(row);
            rhs.push(-h_b[r].clone());
        }
    }

    let system = Mat::from_rows(rows);
    let particular_vec = system.solve(&rhs).ok_or(Error::CartanSystemInconsistent)?;
    let null_vecs = system.nullspace();

    // make the particular solution canonical: remove its nullspace component
    let particular_vec = if null_vecs.is_empty() {
        particular_vec
    } else {
        let k = null_vecs.len();
        let dot = |a: &[Rat], b: &[Rat]| -> Rat { a.iter().zip(b).map(|(x, y)| x * y).sum() };
        let normal = Mat::from_fn(k, k, |r, c| dot(&null_vecs[r], &null_vecs[c]));
        let b: Vec<Rat> = null_vecs.iter().map(|nv| dot(&particular_vec, nv)).collect();
        let coeffs = normal.solve(&b).expect("nullspace Gram matrix is invertible");
        let mut v = particular_vec;
        for (nv, c) in null_vecs.iter().zip(&coeffs) {
            for (x, y) in v.iter_mut().zip(nv) {
                *x -= c * y;
            }
        }
        v
    };

    let to_op = |v: &[Rat]| {
        LinearOperator::new(OpSpace::Cartan, Mat::from_fn(d, d, |r, c| v[r * d + c].clone()))
    };
    let f0_particular = to_op(&particular_vec);
    let f0_nullspace: Vec<LinearOperator> = null_vecs.iter().map(|v| to_op(v)).collect();

    let omega0 = alg.omega0();
    let particular = apply_left(&f0_particular, omega0, alg)?;
    let nullspace = f0_nullspace
        .iter()
        .map(|op| apply_left(op, omega0, alg))
        .collect::<Result<Vec<_>>>()?;

    Ok(R0Solution { f0_particular, f0_nullspace, particular, nullspace })
}

/// An assembled r-matrix with its provenance.
#[derive(Clone, Debug)]
pub struct RMatrix {
    pub tensor: Tensor2,
    pub triple: AdmissibleTriple,
    pub r0: Tensor2,
}

impl RMatrix {
    /// The non-Cartan tail: the assembled tensor minus its r₀ part.
    pub fn tail(&self) -> Tensor2 {
        self.tensor.sub(&self.r0)
    }
}

/// Assemble `r = r₀ + Σ_{α>0} e_{−α}⊗e_α + Σ_{α<β} (e_{−α}⊗e_β −
/// (−1)^{|α|} e_β⊗e_{−α})` over the φ-consistent root vectors.
pub fn assemble_r(t: &AdmissibleTriple, r0: &Tensor2, alg: &SuperAlgebra) -> Result<RMatrix> {
    let vectors = consistent_root_vectors(t, alg)?;
    let mut tensor = r0.clone();
    for rho in positive_roots(&t.diagram) {
        let e = &vectors[&rho];
        let f = &vectors[&rho.neg()];
        tensor.add_product(f, e);
    }
    for (alpha, beta) in &crate::triples::partial_order(t)?.pairs {
        let e_neg_alpha = &vectors[&alpha.neg()];
        let e_beta = &vectors[beta];
        tensor.add_product(e_neg_alpha, e_beta);
        let sign = if alpha.parity(alg.m()) == 1 {
            crate::scalar::int(1)
        } else {
            crate::scalar::int(-1)
        };
        tensor.add_product(&e_beta.scale(&sign), e_neg_alpha);
    }
    Ok(RMatrix { tensor, triple: t.clone(), r0: r0.clone() })
}

/// The operator route: ψ = φ on g₁ ∩ n₊ and 0 on the rest of n₊;
/// `f = f₀ ⊕ −(ψ + ψ² + ⋯) ⊕ (1 + ψ* + ψ*² + ⋯)` as one matrix on the full
/// basis.
pub fn build_f(
    t: &AdmissibleTriple,
    f0: &LinearOperator,
    alg: &SuperAlgebra,
) -> Result<LinearOperator> {
    if f0.space != OpSpace::Cartan {
        return Err(Error::SpaceMismatch);
    }
    let vectors = consistent_root_vectors(t, alg)?;
    let pos = positive_roots(&t.diagram);
    let bar1 = t.gamma_bar(1);

    // ψ on the full basis: e_ρ ↦ e_{τ̄ρ} for ρ ∈ Γ̄₁ positive, zero elsewhere
    let dim = alg.dim();
    let mut psi = Mat::zeros(dim, dim);
    for rho in &pos {
        if !bar1.contains(rho) {
            continue;
        }
        let source = &vectors[rho];
        let target = &vectors[&t.tau_bar(rho)?];
        let source_coords = alg.coords(source)?;
        let target_coords = alg.coords(target)?;
        // e_ρ is a scalar multiple of a single basis vector
        let col = source_coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::UnreachableRootVector)?;
        if source_coords.iter().enumerate().any(|(k, c)| k != col && !c.is_zero()) {
            return Err(Error::UnreachableRootVector);
        }
        let scale = source_coords[col].recip();
        for (row, v) in target_coords.iter().enumerate() {
            psi.set(row, col, v * &scale);
        }
    }
    let psi = LinearOperator::new(OpSpace::Full, psi);

    // f₊ = −(ψ + ψ² + ⋯), finite because ψ is nilpotent
    let mut f_plus = Mat::zeros(dim, dim);
    let mut power = psi.mat.clone();
    let mut steps = 0;
    while !power.is_zero() {
        f_plus = f_plus.sub(&power);
        power = power.mul(&psi.mat);
        steps += 1;
        if steps > dim {
            return Err(Error::NotNilpotent);
        }
    }

    // f₋ = 1 + ψ* + ψ*² + ⋯ restricted to n₋
    let psi_star = psi.adjoint(alg);
    let mut proj_neg = Mat::zeros(dim, dim);
    for (k, b) in alg.basis().iter().enumerate() {
        let is_negative_root_vector = b.len() == 1 && {
            let (&idx, _) = b.iter().next().unwrap();
            idx.i != idx.j && {
                let rho = Root::from_lines(alg.total(), idx.i, idx.j);
                simple_support(&t.diagram, &rho).is_none()
            }
        };
        if is_negative_root_vector {
            proj_neg.set(k, k, crate::scalar::int(1));
        }
    }
    let mut f_minus = proj_neg;
    let mut power = psi_star.mat.clone();
    let mut steps = 0;
    while !power.is_zero() {
        f_minus = f_minus.add(&power);
        power = power.mul(&psi_star.mat);
        steps += 1;
        if steps > dim {
            return Err(Error::NotNilpotent);
        }
    }

    let f0_full = f0.embed_cartan(alg)?;
    let mat = f0_full.mat.add(&f_plus).add(&f_minus);
    Ok(LinearOperator::new(OpSpace::Full, mat))
}

/// Quotient data of the (modified) Cayley transform
/// Θ : Im(f−1)/Ker(f) → Im(f)/Ker(f−1), (f−1)x ↦ f x.
#[derive(Clone, Debug)]
pub struct CayleyData {
    pub image_f: RowBasis,
    pub image_fm1: RowBasis,
    pub kernel_f: RowBasis,
    pub kernel_fm1: RowBasis,
    /// Coset representatives (coordinate vectors) spanning Im(f−1)/Ker(f).
    pub domain_reps: Vec<Vec<Rat>>,
    /// Coset representatives spanning Im(f)/Ker(f−1).
    pub codomain_reps: Vec<Vec<Rat>>,
    /// Matrix of Θ in the representative bases.
    pub theta: Mat,
}

impl CayleyData {
    pub fn quotient_dim(&self) -> usize {
        self.domain_reps.len()
    }
}

/// Express `v` in the spanning set `reps ∪ kernel`; returns the coefficients
/// over `reps` when possible.
fn quotient_coords(
    reps: &[Vec<Rat>],
    kernel: &RowBasis,
    v: &[Rat],
) -> Option<Vec<Rat>> {
    let dim = v.len();
    let cols = reps.len() + kernel.rank();
    let mut mat = Mat::zeros(dim, cols);
    for (c, rep) in reps.iter().enumerate() {
        for r in 0..dim {
            mat.set(r, c, rep[r].clone());
        }
    }
    for (k, row) in kernel.rows().iter().enumerate() {
        for r in 0..dim {
            mat.set(r, reps.len() + k, row[r].clone());
        }
    }
    let sol = mat.solve(v)?;
    if mat.mul_vec(&sol) != v {
        return None;
    }
    Some(sol[..reps.len()].to_vec())
}

/// Compute the Cayley quotient data of an operator on the full space.
pub fn cayley(f: &LinearOperator, alg: &SuperAlgebra) -> Result<CayleyData> {
    if f.space != OpSpace::Full {
        return Err(Error::SpaceMismatch);
    }
    let dim = alg.dim();
    let identity = Mat::identity(dim);
    let m = &f.mat;
    let m1 = m.sub(&identity);

    let cols = |mat: &Mat| -> Vec<Vec<Rat>> { (0..dim).map(|c| mat.col(c)).collect() };
    let image_f = RowBasis::from_vectors(dim, cols(m));
    let image_fm1 = RowBasis::from_vectors(dim, cols(&m1));
    let kernel_f = RowBasis::from_vectors(dim, m.nullspace());
    let kernel_fm1 = RowBasis::from_vectors(dim, m1.nullspace());

    // coset representatives: image rows that enlarge the kernel span
    let mut acc = kernel_f.clone();
    let mut domain_reps = Vec::new();
    for row in image_fm1.rows() {
        if acc.insert(row.clone()) {
            domain_reps.push(row.clone());
        }
    }
    let mut acc = kernel_fm1.clone();
    let mut codomain_reps = Vec::new();
    for row in image_f.rows() {
        if acc.insert(row.clone()) {
            codomain_reps.push(row.clone());
        }
    }

    let mut theta = Mat::zeros(codomain_reps.len(), domain_reps.len());
    for (col, u) in domain_reps.iter().enumerate() {
        let x = m1.solve(u).ok_or(Error::NotInAlgebra)?;
        let w = m.mul_vec(&x);
        let coords =
            quotient_coords(&codomain_reps, &kernel_fm1, &w).ok_or(Error::NotInAlgebra)?;
        for (row, v) in coords.into_iter().enumerate() {
            theta.set(row, col, v);
        }
    }

    Ok(CayleyData {
        image_f,
        image_fm1,
        kernel_f,
        kernel_fm1,
        domain_reps,
        codomain_reps,
        theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::enumerate_diagrams;
    use crate::scalar::{int, rat};
    use crate::triples::enumerate_triples;

    fn sl21() -> SuperAlgebra {
        SuperAlgebra::sl(2, 1).unwrap()
    }

    fn d2_triple(alg: &SuperAlgebra) -> AdmissibleTriple {
        let d2 = enumerate_diagrams(alg)[1].clone();
        enumerate_triples(&d2)[1].clone()
    }

    #[test]
    fn empty_triple_keeps_default_vectors() {
        let alg = sl21();
        for d in enumerate_diagrams(&alg) {
            let t = AdmissibleTriple::empty(&d);
            let defaults = default_root_vectors(&t, &alg).unwrap();
            let consistent = consistent_root_vectors(&t, &alg).unwrap();
            assert_eq!(defaults, consistent);
        }
    }

    #[test]
    fn phi_on_d2_triple_sends_e13_to_e32() {
        let alg = sl21();
        let t = d2_triple(&alg);
        let phi = build_phi(&t, &alg).unwrap();
        let e13 = AlgebraElement::unit(1, 3);
        assert_eq!(phi.apply(&alg, &e13).unwrap(), AlgebraElement::unit(3, 2));
        // Cartan: h_{α1+α2} ↦ h_{−α2}
        let h_src = cartan_vector(&t.diagram.simple_roots[0], &alg);
        let h_dst = cartan_vector(&t.diagram.simple_roots[1], &alg);
        assert_eq!(phi.apply(&alg, &h_src).unwrap(), h_dst);
    }

    #[test]
    fn phi_preserves_the_form_on_g1() {
        let alg = sl21();
        let t = d2_triple(&alg);
        let phi = build_phi(&t, &alg).unwrap();
        for (x, fx) in &phi.pairs {
            for (y, fy) in &phi.pairs {
                assert_eq!(alg.form(fx, fy), alg.form(x, y));
            }
        }
    }

    #[test]
    fn phi_is_a_bracket_homomorphism_on_g1() {
        let alg = sl21();
        let t = d2_triple(&alg);
        let phi = build_phi(&t, &alg).unwrap();
        for (x, _) in &phi.pairs {
            for (y, _) in &phi.pairs {
                let lhs = phi.apply(&alg, &alg.bracket(x, y));
                if let Ok(lhs) = lhs {
                    let rhs = alg.bracket(
                        &phi.apply(&alg, x).unwrap(),
                        &phi.apply(&alg, y).unwrap(),
                    );
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn solve_r0_empty_triple_is_half_omega0() {
        let alg = sl21();
        let d1 = enumerate_diagrams(&alg)[0].clone();
        let sol = solve_r0(&AdmissibleTriple::empty(&d1), &alg).unwrap();
        assert_eq!(sol.particular, alg.omega0().scale(&rat(1, 2)));
        // nullspace is the antisymmetric part of h⊗h: C(2,2) = 1 generator
        assert_eq!(sol.nullspace.len(), 1);
        for g in &sol.nullspace {
            assert_eq!(g.add(&g.graded_flip(&alg)), Tensor2::zero());
        }
    }

    #[test]
    fn solve_r0_d2_triple_matches_published_r0() {
        let alg = sl21();
        let t = d2_triple(&alg);
        let sol = solve_r0(&t, &alg).unwrap();
        // unique solution (−E22−E33) ⊗ (E11+E33)
        assert!(sol.nullspace.is_empty());
        let expected = Tensor2::product(
            &AlgebraElement::from_terms(&[(2, 2, -1), (3, 3, -1)]),
            &AlgebraElement::from_terms(&[(1, 1, 1), (3, 3, 1)]),
        );
        assert_eq!(sol.particular, expected);
    }

    #[test]
    fn r0_solutions_satisfy_both_equations() {
        let alg = sl21();
        for d in enumerate_diagrams(&alg) {
            for t in enumerate_triples(&d) {
                let sol = solve_r0(&t, &alg).unwrap();
                let mut members = vec![sol.particular.clone()];
                for g in &sol.nullspace {
                    members.push(sol.particular.add(g));
                }
                for r0 in members {
                    // unitarity on the Cartan
                    assert_eq!(r0.add(&r0.graded_flip(&alg)), *alg.omega0());
                    // (τα ⊗ 1) r0 + (1 ⊗ α) r0 = 0
                    for (&a, &b) in &t.tau {
                        let h_a = cartan_vector(&t.diagram.simple_roots[a], &alg);
                        let h_b = cartan_vector(&t.diagram.simple_roots[b], &alg);
                        let lhs = r0
                            .weight_contract_left(&alg, &h_b)
                            .add(&r0.weight_contract_right(&alg, &h_a));
                        assert!(lhs.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn assembled_tails_match_the_tables() {
        let alg = sl21();
        let diagrams = enumerate_diagrams(&alg);

        // standard tail on D1
        let d1 = &diagrams[0];
        let t = AdmissibleTriple::empty(d1);
        let sol = solve_r0(&t, &alg).unwrap();
        let r = assemble_r(&t, &sol.particular, &alg).unwrap();
        let expected_tail = Tensor2::from_terms(&[
            ((2, 1), (1, 2), 1, 1),
            ((3, 2), (2, 3), 1, 1),
            ((3, 1), (1, 3), 1, 1),
        ]);
        assert_eq!(r.tail(), expected_tail);

        // nonstandard tails on D5
        let d5 = &diagrams[4];
        let triples = enumerate_triples(d5);
        let t_ns2 = &triples[2]; // τ(α2) = −α1−α2
        let sol = solve_r0(t_ns2, &alg).unwrap();
        let r = assemble_r(t_ns2, &sol.particular, &alg).unwrap();
        let expected_tail = Tensor2::from_terms(&[
            ((1, 2), (2, 1), 1, 1),
            ((3, 2), (2, 3), 1, 1),
            ((1, 3), (3, 1), -1, 1),
            ((3, 2), (3, 1), 1, 1),
            ((3, 1), (3, 2), 1, 1),
        ]);
        assert_eq!(r.tail(), expected_tail);

        // reverse triple on D2 subtracts the odd pair
        let d2 = &diagrams[1];
        let t_ns3 = &enumerate_triples(d2)[2];
        let sol = solve_r0(t_ns3, &alg).unwrap();
        let r = assemble_r(t_ns3, &sol.particular, &alg).unwrap();
        let expected_tail = Tensor2::from_terms(&[
            ((2, 1), (1, 2), 1, 1),
            ((2, 3), (3, 2), -1, 1),
            ((3, 1), (1, 3), 1, 1),
            ((1, 3), (2, 3), -1, 1),
            ((2, 3), (1, 3), -1, 1),
        ]);
        assert_eq!(r.tail(), expected_tail);
    }

    #[test]
    fn operator_route_on_d2_triple() {
        let alg = sl21();
        let t = d2_triple(&alg);
        let sol = solve_r0(&t, &alg).unwrap();
        let f = build_f(&t, &sol.f0_particular, &alg).unwrap();
        assert!(f.is_even(&alg));
        // ψ² = 0 here, so f₊ = −ψ: f(E13) = −E32 and f kills the other positives
        assert_eq!(
            f.apply(&alg, &AlgebraElement::unit(1, 3)).unwrap(),
            AlgebraElement::from_terms(&[(3, 2, -1)])
        );
        assert!(f.apply(&alg, &AlgebraElement::unit(1, 2)).unwrap().is_zero());
        assert!(f.apply(&alg, &AlgebraElement::unit(3, 2)).unwrap().is_zero());
        // f + f* = 1
        let sum = f.add(&f.adjoint(&alg)).unwrap();
        assert_eq!(sum, LinearOperator::identity(&alg, OpSpace::Full));
        // both routes agree
        let via_operator = apply_left(&f, alg.casimir(), &alg).unwrap();
        let assembled = assemble_r(&t, &sol.particular, &alg).unwrap();
        assert_eq!(via_operator, assembled.tensor);
        // constructed f is singular on both sides
        assert_eq!(f.det(), int(0));
        let fm1 = f.sub(&LinearOperator::identity(&alg, OpSpace::Full)).unwrap();
        assert_eq!(fm1.det(), int(0));
    }

    #[test]
    fn cayley_of_d2_triple_f_restricts_to_phi() {
        let alg = sl21();
        let t = d2_triple(&alg);
        let sol = solve_r0(&t, &alg).unwrap();
        let f = build_f(&t, &sol.f0_particular, &alg).unwrap();
        let data = cayley(&f, &alg).unwrap();
        assert_eq!(data.quotient_dim(), 2);
        assert_eq!(data.theta.nrows(), 2);
        // Ker(f) = Im(f−1)^⊥
        let dim = alg.dim();
        let perp_rows: Vec<Vec<Rat>> = data
            .image_fm1
            .rows()
            .iter()
            .map(|w| alg.gram().mul_vec(w))
            .collect();
        let perp = Mat::from_rows(perp_rows);
        let perp_basis = RowBasis::from_vectors(dim, perp.nullspace());
        assert!(perp_basis.same_span(&data.kernel_f));
    }
}
