//! Test-only dense oracle, independent of the sparse implementation path.
//!
//! Elements are dense (m+n)×(m+n) rational matrices, brackets go through
//! full dense matrix products with an explicit parity split, and the
//! Yang-Baxter sum is evaluated over dense rank-3 arrays indexed by the flat
//! elementary basis, with structure constants tabulated up front.

use superbd_core::linalg::Mat;
use superbd_core::scalar::{int, Rat};
use superbd_core::{AlgebraElement, BasisIndex, SuperAlgebra, Tensor2, Tensor3};

use num_traits::Zero;

pub struct DenseOracle {
    pub m: usize,
    pub n: usize,
}

pub type Dense = Vec<Vec<Rat>>;

impl DenseOracle {
    pub fn new(alg: &SuperAlgebra) -> Self {
        DenseOracle { m: alg.m(), n: alg.n() }
    }

    pub fn t(&self) -> usize {
        self.m + self.n
    }

    pub fn dense(&self, x: &AlgebraElement) -> Dense {
        let t = self.t();
        let mut out = vec![vec![Rat::zero(); t]; t];
        for (&idx, c) in x.iter() {
            out[idx.i - 1][idx.j - 1] = c.clone();
        }
        out
    }

    pub fn from_dense(&self, d: &Dense) -> AlgebraElement {
        let mut x = AlgebraElement::zero();
        for (i, row) in d.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                x.add_term(BasisIndex::new(i + 1, j + 1), c.clone());
            }
        }
        x
    }

    pub fn mul(&self, a: &Dense, b: &Dense) -> Dense {
        let t = self.t();
        let mut out = vec![vec![Rat::zero(); t]; t];
        for i in 0..t {
            for k in 0..t {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..t {
                    let v = &a[i][k] * &b[k][j];
                    out[i][j] = &out[i][j] + &v;
                }
            }
        }
        out
    }

    pub fn supertrace(&self, a: &Dense) -> Rat {
        let mut s = Rat::zero();
        for k in 0..self.t() {
            if k < self.m {
                s += &a[k][k];
            } else {
                s -= &a[k][k];
            }
        }
        s
    }

    fn line_parity(&self, k1: usize) -> u8 {
        u8::from(k1 > self.m)
    }

    /// Parity of a dense matrix assumed homogeneous; panics on mixed input.
    pub fn parity(&self, a: &Dense) -> u8 {
        let mut p = None;
        for i in 0..self.t() {
            for j in 0..self.t() {
                if !a[i][j].is_zero() {
                    let q = (self.line_parity(i + 1) + self.line_parity(j + 1)) % 2;
                    match p {
                        None => p = Some(q),
                        Some(r) => assert_eq!(r, q, "oracle input must be homogeneous"),
                    }
                }
            }
        }
        p.unwrap_or(0)
    }

    /// Dense super-bracket of homogeneous inputs.
    pub fn bracket(&self, a: &Dense, b: &Dense) -> Dense {
        let pa = self.parity(a);
        let pb = self.parity(b);
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        let t = self.t();
        let mut out = vec![vec![Rat::zero(); t]; t];
        for i in 0..t {
            for j in 0..t {
                out[i][j] = if pa * pb == 1 {
                    &ab[i][j] + &ba[i][j]
                } else {
                    &ab[i][j] - &ba[i][j]
                };
            }
        }
        out
    }

    pub fn form(&self, a: &Dense, b: &Dense) -> Rat {
        self.supertrace(&self.mul(a, b))
    }

    // flat index over elementary matrices
    fn flat(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.t() + (j - 1)
    }

    fn unflat(&self, a: usize) -> (usize, usize) {
        (a / self.t() + 1, a % self.t() + 1)
    }

    fn flat_parity(&self, a: usize) -> u8 {
        let (i, j) = self.unflat(a);
        (self.line_parity(i) + self.line_parity(j)) % 2
    }

    /// Structure constants of the elementary basis from dense products.
    fn structure_constants(&self) -> Vec<Vec<Vec<Rat>>> {
        let d = self.t() * self.t();
        let elem = |a: usize| -> Dense {
            let (i, j) = self.unflat(a);
            let mut m = vec![vec![Rat::zero(); self.t()]; self.t()];
            m[i - 1][j - 1] = int(1);
            m
        };
        let mut c = vec![vec![vec![Rat::zero(); d]; d]; d];
        for a in 0..d {
            for b in 0..d {
                let br = self.bracket(&elem(a), &elem(b));
                for i in 1..=self.t() {
                    for j in 1..=self.t() {
                        c[a][b][self.flat(i, j)] = br[i - 1][j - 1].clone();
                    }
                }
            }
        }
        c
    }

    fn dense2(&self, r: &Tensor2) -> Vec<Vec<Rat>> {
        let d = self.t() * self.t();
        let mut out = vec![vec![Rat::zero(); d]; d];
        for (&(a, b), c) in r.iter() {
            out[self.flat(a.i, a.j)][self.flat(b.i, b.j)] = c.clone();
        }
        out
    }

    /// Dense Yang-Baxter residual over the flat basis, reconstructed as a
    /// sparse tensor for comparison.
    pub fn cybe(&self, r: &Tensor2) -> Tensor3 {
        let d = self.t() * self.t();
        let sc = self.structure_constants();
        let rd = self.dense2(r);
        let mut out = vec![vec![vec![Rat::zero(); d]; d]; d];
        for a1 in 0..d {
            for a2 in 0..d {
                if rd[a1][a2].is_zero() {
                    continue;
                }
                for b1 in 0..d {
                    for b2 in 0..d {
                        if rd[b1][b2].is_zero() {
                            continue;
                        }
                        let q = &rd[a1][a2] * &rd[b1][b2];
                        // [r12, r13]: (−1)^{|a2||b1|} [a1,b1] ⊗ a2 ⊗ b2
                        let s12_13 = self.flat_parity(a2) * self.flat_parity(b1);
                        for w in 0..d {
                            if !sc[a1][b1][w].is_zero() {
                                let v = &q * &sc[a1][b1][w];
                                let v = if s12_13 == 1 { -v } else { v };
                                out[w][a2][b2] = &out[w][a2][b2] + &v;
                            }
                        }
                        // [r12, r23]: a1 ⊗ [a2,b1] ⊗ b2
                        for w in 0..d {
                            if !sc[a2][b1][w].is_zero() {
                                let v = &q * &sc[a2][b1][w];
                                out[a1][w][b2] = &out[a1][w][b2] + &v;
                            }
                        }
                        // [r13, r23]: (−1)^{|a2||b1|} a1 ⊗ b1 ⊗ [a2,b2]
                        let s13_23 = self.flat_parity(a2) * self.flat_parity(b1);
                        for w in 0..d {
                            if !sc[a2][b2][w].is_zero() {
                                let v = &q * &sc[a2][b2][w];
                                let v = if s13_23 == 1 { -v } else { v };
                                out[a1][b1][w] = &out[a1][b1][w] + &v;
                            }
                        }
                    }
                }
            }
        }
        let mut sparse = Tensor3::zero();
        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    if !out[x][y][z].is_zero() {
                        let (i1, j1) = self.unflat(x);
                        let (i2, j2) = self.unflat(y);
                        let (i3, j3) = self.unflat(z);
                        sparse.add_term(
                            BasisIndex::new(i1, j1),
                            BasisIndex::new(i2, j2),
                            BasisIndex::new(i3, j3),
                            out[x][y][z].clone(),
                        );
                    }
                }
            }
        }
        sparse
    }
}

/// Binomial coefficient, for shuffle-word counting.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Brute-force positive roots: every root of the algebra whose unique
/// expansion over the simple roots has nonnegative integer coefficients.
pub fn brute_force_positive_roots(
    d: &superbd_core::DynkinDiagram,
    alg: &SuperAlgebra,
) -> Vec<superbd_core::Root> {
    let t = alg.total();
    let rank = d.rank();
    // columns are the simple roots
    let mat = Mat::from_fn(t, rank, |r, c| int(d.simple_roots[c].weight[r]));
    let mut out = Vec::new();
    for p in 1..=t {
        for q in 1..=t {
            if p == q {
                continue;
            }
            let rho = superbd_core::Root::from_lines(t, p, q);
            let rhs: Vec<Rat> = rho.weight.iter().map(|&w| int(w)).collect();
            if let Some(sol) = mat.solve(&rhs) {
                if mat.mul_vec(&sol) == rhs
                    && sol.iter().all(|c| c >= &Rat::zero() && c.is_integer())
                {
                    out.push(rho);
                }
            }
        }
    }
    out
}
