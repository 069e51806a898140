//! Rational linear operators on the algebra or on its Cartan subalgebra.
//!
//! An operator is a dense rational matrix over the ordered basis of its
//! space. Adjoints are taken with respect to the supertrace form:
//! `f* = G⁻¹ fᵀ G` for the Gram matrix `G` of the basis.

use num_traits::Zero;

use crate::algebra::{AlgebraElement, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::Rat;

/// Which basis an operator matrix refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OpSpace {
    /// The full algebra basis.
    Full,
    /// The Cartan basis only (used for the `f₀` block).
    Cartan,
}

/// A linear operator as a matrix over the chosen basis; columns are images
/// of basis vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearOperator {
    pub space: OpSpace,
    pub mat: Mat,
}

impl LinearOperator {
    pub fn new(space: OpSpace, mat: Mat) -> Self {
        assert_eq!(mat.nrows(), mat.ncols());
        LinearOperator { space, mat }
    }

    fn space_dim(alg: &SuperAlgebra, space: OpSpace) -> usize {
        match space {
            OpSpace::Full => alg.dim(),
            OpSpace::Cartan => alg.cartan_dim(),
        }
    }

    pub fn identity(alg: &SuperAlgebra, space: OpSpace) -> Self {
        LinearOperator::new(space, Mat::identity(Self::space_dim(alg, space)))
    }

    pub fn zero(alg: &SuperAlgebra, space: OpSpace) -> Self {
        LinearOperator::new(space, Mat::zeros(Self::space_dim(alg, space), Self::space_dim(alg, space)))
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    /// Build from images of the basis vectors of the space.
    pub fn from_images(alg: &SuperAlgebra, space: OpSpace, images: &[AlgebraElement]) -> Result<Self> {
        let d = Self::space_dim(alg, space);
        assert_eq!(images.len(), d);
        let mut mat = Mat::zeros(d, d);
        for (col, img) in images.iter().enumerate() {
            let coords = match space {
                OpSpace::Full => alg.coords(img)?,
                OpSpace::Cartan => alg.cartan_coords(img)?,
            };
            for (row, v) in coords.into_iter().enumerate() {
                mat.set(row, col, v);
            }
        }
        Ok(LinearOperator::new(space, mat))
    }

    pub fn apply(&self, alg: &SuperAlgebra, x: &AlgebraElement) -> Result<AlgebraElement> {
        match self.space {
            OpSpace::Full => {
                let c = alg.coords(x)?;
                Ok(alg.from_coords(&self.mat.mul_vec(&c)))
            }
            OpSpace::Cartan => {
                let c = alg.cartan_coords(x)?;
                Ok(alg.cartan_from_coords(&self.mat.mul_vec(&c)))
            }
        }
    }

    pub fn compose(&self, other: &LinearOperator) -> Result<LinearOperator> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(LinearOperator::new(self.space, self.mat.mul(&other.mat)))
    }

    pub fn add(&self, other: &LinearOperator) -> Result<LinearOperator> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(LinearOperator::new(self.space, self.mat.add(&other.mat)))
    }

    pub fn sub(&self, other: &LinearOperator) -> Result<LinearOperator> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(LinearOperator::new(self.space, self.mat.sub(&other.mat)))
    }

    pub fn scale(&self, s: &Rat) -> LinearOperator {
        LinearOperator::new(self.space, self.mat.scale(s))
    }

    pub fn det(&self) -> Rat {
        self.mat.det()
    }

    fn grams<'a>(&self, alg: &'a SuperAlgebra) -> (&'a Mat, &'a Mat) {
        match self.space {
            OpSpace::Full => (alg.gram(), alg.gram_inv()),
            OpSpace::Cartan => (alg.cartan_gram(), alg.cartan_gram_inv()),
        }
    }

    /// Adjoint with respect to the invariant form: `f* = G⁻¹ fᵀ G`.
    pub fn adjoint(&self, alg: &SuperAlgebra) -> LinearOperator {
        let (g, g_inv) = self.grams(alg);
        LinearOperator::new(self.space, g_inv.mul(&self.mat.transpose()).mul(g))
    }

    /// An operator is even when it preserves the parity of every homogeneous
    /// basis vector. (Cartan operators are trivially even.)
    pub fn is_even(&self, alg: &SuperAlgebra) -> bool {
        match self.space {
            OpSpace::Cartan => true,
            OpSpace::Full => {
                for col in 0..self.dim() {
                    for row in 0..self.dim() {
                        if !self.mat.at(row, col).is_zero()
                            && alg.basis_parity(row) != alg.basis_parity(col)
                        {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }

    /// Embed a Cartan operator into the full space, acting as zero on all
    /// root vectors.
    pub fn embed_cartan(&self, alg: &SuperAlgebra) -> Result<LinearOperator> {
        if self.space != OpSpace::Cartan {
            return Err(Error::SpaceMismatch);
        }
        let mut images = Vec::with_capacity(alg.dim());
        for b in alg.basis() {
            match alg.cartan_coords(b) {
                Ok(c) => {
                    let img = alg.cartan_from_coords(&self.mat.mul_vec(&c));
                    images.push(img);
                }
                Err(_) => images.push(AlgebraElement::zero()),
            }
        }
        LinearOperator::from_images(alg, OpSpace::Full, &images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;
    use crate::scalar::{int, rat};

    #[test]
    fn adjoint_is_involution() {
        let alg = SuperAlgebra::sl(2, 1).unwrap();
        let d = alg.dim();
        let mat = Mat::from_fn(d, d, |r, c| {
            if alg.basis_parity(r) == alg.basis_parity(c) {
                rat((r * d + c + 1) as i64 % 5 - 2, (c + 1) as i64)
            } else {
                int(0)
            }
        });
        let f = LinearOperator::new(OpSpace::Full, mat);
        let id = LinearOperator::identity(&alg, OpSpace::Full);
        assert_eq!(id.adjoint(&alg), id);
        assert_eq!(f.adjoint(&alg).adjoint(&alg), f);
        // defining property on a couple of vectors
        let x = AlgebraElement::from_terms(&[(1, 2, 1), (2, 1, 3)]);
        let y = AlgebraElement::from_terms(&[(2, 1, 2), (1, 1, 1), (2, 2, -1)]);
        let fx = f.apply(&alg, &x).unwrap();
        let fsy = f.adjoint(&alg).apply(&alg, &y).unwrap();
        assert_eq!(alg.form(&fx, &y), alg.form(&x, &fsy));
    }

    #[test]
    fn evenness_detection() {
        let alg = SuperAlgebra::gl(1, 1).unwrap();
        let id = LinearOperator::identity(&alg, OpSpace::Full);
        assert!(id.is_even(&alg));
        // map an even vector to an odd one
        let images = vec![
            AlgebraElement::unit(1, 2), // E11 ↦ E12: parity broken
            AlgebraElement::zero(),
            AlgebraElement::zero(),
            AlgebraElement::zero(),
        ];
        let f = LinearOperator::from_images(&alg, OpSpace::Full, &images).unwrap();
        assert!(!f.is_even(&alg));
    }

    #[test]
    fn cartan_embedding_acts_as_zero_on_roots() {
        let alg = SuperAlgebra::sl(2, 1).unwrap();
        let f0 = LinearOperator::identity(&alg, OpSpace::Cartan).scale(&rat(1, 2));
        let f = f0.embed_cartan(&alg).unwrap();
        let h = alg.cartan_basis()[0].clone();
        assert_eq!(f.apply(&alg, &h).unwrap(), h.scale(&rat(1, 2)));
        let e12 = AlgebraElement::unit(1, 2);
        assert!(f.apply(&alg, &e12).unwrap().is_zero());
    }
}
