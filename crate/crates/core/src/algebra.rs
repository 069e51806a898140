//! The Lie superalgebras gl(m,n) and sl(m,n) in their defining representation.
//!
//! Elements are sparse rational combinations of elementary matrices `E_ij`,
//! graded by `|E_ij| = [i] + [j] mod 2` where `[k] = 0` for `k ≤ m` and `1`
//! for `k > m`. The super-bracket is `[x,y] = xy − (−1)^{|x||y|} yx` computed
//! by matrix multiplication, and the invariant form is the supertrace form
//! `(x,y) = str(xy)` with `str` carrying a minus sign on the odd-odd block.
//!
//! For sl(m,n) the root vectors stay elementary matrices and only the Cartan
//! is re-based to supertraceless combinations; `sl(m,m)` is rejected because
//! its form degenerates. Dual bases, the quadratic Casimir 2-tensor Ω and its
//! Cartan part Ω₀ are precomputed at construction time.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json;
use crate::linalg::Mat;
use crate::scalar::{int, Rat};
use crate::tensor::Tensor2;

/// Which algebra of type A we are working in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    Gl,
    Sl,
}

impl AlgebraKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraKind::Gl => "gl",
            AlgebraKind::Sl => "sl",
        }
    }
}

/// A matrix position (1-based) labelling the elementary matrix `E_ij`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisIndex {
    pub i: usize,
    pub j: usize,
}

impl BasisIndex {
    pub fn new(i: usize, j: usize) -> Self {
        BasisIndex { i, j }
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i <= 9 && self.j <= 9 {
            write!(f, "E{}{}", self.i, self.j)
        } else {
            write!(f, "E{}_{}", self.i, self.j)
        }
    }
}

/// Sparse rational combination of elementary matrices.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct AlgebraElement {
    coeffs: BTreeMap<BasisIndex, Rat>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    /// The elementary matrix `E_ij`.
    pub fn unit(i: usize, j: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(BasisIndex::new(i, j), int(1));
        AlgebraElement { coeffs }
    }

    /// Integer combination given as `(i, j, coefficient)` terms.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let mut x = AlgebraElement::zero();
        for &(i, j, c) in terms {
            x.add_term(BasisIndex::new(i, j), int(c));
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisIndex, &Rat)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, idx: BasisIndex) -> Rat {
        self.coeffs.get(&idx).cloned().unwrap_or_else(Rat::zero)
    }

    /// Add `c · E_idx`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, idx: BasisIndex, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(idx).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (&idx, c) in other.iter() {
            out.add_term(idx, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (&idx, c) in other.iter() {
            out.add_term(idx, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> AlgebraElement {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * s)).collect(),
        }
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }

    /// Associative matrix product in the defining representation.
    pub fn matmul(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                if a.j == b.i {
                    out.add_term(BasisIndex::new(a.i, b.j), ca * cb);
                }
            }
        }
        out
    }

    /// JSON encoding `{"coeffs": [[[i,j],num,den], ...]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(idx, c)| {
                let (num, den) = json::rat_to_values(c);
                Value::Array(vec![json::index_pair_to_value(idx.i, idx.j), num, den])
            })
            .collect();
        serde_json::json!({ "coeffs": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let entries = json::get_field(v, "coeffs")?
            .as_array()
            .ok_or_else(|| Error::Json("`coeffs` must be an array".into()))?;
        let mut x = AlgebraElement::zero();
        for e in entries {
            let arr = e
                .as_array()
                .filter(|a| a.len() == 3)
                .ok_or_else(|| Error::Json("coefficient entry must be [[i,j],num,den]".into()))?;
            let (i, j) = json::index_pair_from_value(&arr[0])?;
            x.add_term(BasisIndex::new(i, j), json::rat_from_values(&arr[1], &arr[2])?);
        }
        Ok(x)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (idx, c)) in self.coeffs.iter().enumerate() {
            let (sign, mag) = if c < &Rat::zero() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if k == 0 && sign == "+" {
                if json::is_one(&mag) {
                    write!(f, "{idx}")?;
                } else {
                    write!(f, "{mag} {idx}")?;
                }
            } else if json::is_one(&mag) {
                write!(f, " {sign} {idx}")?;
            } else {
                write!(f, " {sign} {mag} {idx}")?;
            }
        }
        Ok(())
    }
}

/// One of the concrete algebras, with its graded basis and form data.
#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    kind: AlgebraKind,
    m: usize,
    n: usize,
    basis: Vec<AlgebraElement>,
    basis_parity: Vec<u8>,
    dual_basis: Vec<AlgebraElement>,
    cartan_basis: Vec<AlgebraElement>,
    cartan_dual: Vec<AlgebraElement>,
    gram: Mat,
    gram_inv: Mat,
    cartan_gram: Mat,
    cartan_gram_inv: Mat,
    casimir: Tensor2,
    omega0: Tensor2,
}

impl SuperAlgebra {
    /// Build gl(m,n) or sl(m,n). Rejects `m = 0`, `n = 0`, and sl(m,m).
    pub fn make(kind: AlgebraKind, m: usize, n: usize) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidRank { m, n });
        }
        if kind == AlgebraKind::Sl && m == n {
            return Err(Error::DegenerateSl { m });
        }
        let t = m + n;
        let line_parity = |k: usize| u8::from(k > m);

        let mut basis = Vec::new();
        match kind {
            AlgebraKind::Gl => {
                for i in 1..=t {
                    for j in 1..=t {
                        basis.push(AlgebraElement::unit(i, j));
                    }
                }
            }
            AlgebraKind::Sl => {
                // Cartan directions first: supertraceless combinations of the
                // neighbouring diagonal units, h_k = (-1)^{[k]} E_kk - (-1)^{[k+1]} E_k+1,k+1.
                for k in 1..t {
                    let mut h = AlgebraElement::zero();
                    let sk = if line_parity(k) == 0 { 1 } else { -1 };
                    let sk1 = if line_parity(k + 1) == 0 { 1 } else { -1 };
                    h.add_term(BasisIndex::new(k, k), int(sk));
                    h.add_term(BasisIndex::new(k + 1, k + 1), int(-sk1));
                    basis.push(h);
                }
                for i in 1..=t {
                    for j in 1..=t {
                        if i != j {
                            basis.push(AlgebraElement::unit(i, j));
                        }
                    }
                }
            }
        }

        let mut alg = SuperAlgebra {
            kind,
            m,
            n,
            basis,
            basis_parity: Vec::new(),
            dual_basis: Vec::new(),
            cartan_basis: Vec::new(),
            cartan_dual: Vec::new(),
            gram: Mat::zeros(0, 0),
            gram_inv: Mat::zeros(0, 0),
            cartan_gram: Mat::zeros(0, 0),
            cartan_gram_inv: Mat::zeros(0, 0),
            casimir: Tensor2::zero(),
            omega0: Tensor2::zero(),
        };

        alg.basis_parity = alg
            .basis
            .iter()
            .map(|b| alg.element_parity(b).expect("basis vectors are homogeneous"))
            .collect();

        let d = alg.basis.len();
        alg.gram = Mat::from_fn(d, d, |a, b| alg.form(&alg.basis[a], &alg.basis[b]));
        alg.gram_inv = alg.gram.inverse().expect("supertrace form is non-degenerate");
        alg.dual_basis = (0..d)
            .map(|a| {
                let mut x = AlgebraElement::zero();
                for b in 0..d {
                    let x_b = alg.basis[b].scale(alg.gram_inv.at(b, a));
                    x = x.add(&x_b);
                }
                x
            })
            .collect();

        alg.cartan_basis = match kind {
            AlgebraKind::Gl => (1..=t).map(|k| AlgebraElement::unit(k, k)).collect(),
            AlgebraKind::Sl => alg.basis[..t - 1].to_vec(),
        };
        let cd = alg.cartan_basis.len();
        alg.cartan_gram =
            Mat::from_fn(cd, cd, |a, b| alg.form(&alg.cartan_basis[a], &alg.cartan_basis[b]));
        alg.cartan_gram_inv = alg
            .cartan_gram
            .inverse()
            .expect("form restricted to the Cartan is non-degenerate");
        alg.cartan_dual = (0..cd)
            .map(|a| {
                let mut x = AlgebraElement::zero();
                for b in 0..cd {
                    let x_b = alg.cartan_basis[b].scale(alg.cartan_gram_inv.at(b, a));
                    x = x.add(&x_b);
                }
                x
            })
            .collect();

        let mut casimir = Tensor2::zero();
        for a in 0..d {
            let sign = if alg.basis_parity[a] == 1 { int(-1) } else { int(1) };
            casimir.add_product(&alg.basis[a].scale(&sign), &alg.dual_basis[a]);
        }
        alg.casimir = casimir;

        let mut omega0 = Tensor2::zero();
        for a in 0..cd {
            omega0.add_product(&alg.cartan_basis[a], &alg.cartan_dual[a]);
        }
        alg.omega0 = omega0;

        Ok(alg)
    }

    pub fn gl(m: usize, n: usize) -> Result<Self> {
        SuperAlgebra::make(AlgebraKind::Gl, m, n)
    }

    pub fn sl(m: usize, n: usize) -> Result<Self> {
        SuperAlgebra::make(AlgebraKind::Sl, m, n)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the defining representation, m + n.
    pub fn total(&self) -> usize {
        self.m + self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `[k]`: 0 on the first m lines, 1 on the last n.
    pub fn line_parity(&self, k: usize) -> u8 {
        u8::from(k > self.m)
    }

    /// `|E_ij| = [i] + [j] mod 2`.
    pub fn index_parity(&self, idx: BasisIndex) -> u8 {
        (self.line_parity(idx.i) + self.line_parity(idx.j)) % 2
    }

    /// Parity of a homogeneous element; the zero element counts as even.
    /// Fails on a mixed-parity element.
    pub fn element_parity(&self, x: &AlgebraElement) -> Result<u8> {
        let mut parity = None;
        for (&idx, _) in x.iter() {
            let p = self.index_parity(idx);
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return Err(Error::NotHomogeneous),
                _ => {}
            }
        }
        Ok(parity.unwrap_or(0))
    }

    /// Split into even and odd parts.
    pub fn parity_parts(&self, x: &AlgebraElement) -> (AlgebraElement, AlgebraElement) {
        let mut even = AlgebraElement::zero();
        let mut odd = AlgebraElement::zero();
        for (&idx, c) in x.iter() {
            if self.index_parity(idx) == 0 {
                even.add_term(idx, c.clone());
            } else {
                odd.add_term(idx, c.clone());
            }
        }
        (even, odd)
    }

    /// Super-bracket `[x,y] = xy − (−1)^{|x||y|} yx`, extended bilinearly over
    /// the homogeneous parts of the inputs.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let (xe, xo) = self.parity_parts(x);
        let (ye, yo) = self.parity_parts(y);
        let mut out = AlgebraElement::zero();
        for (xp, xh) in [(0u8, &xe), (1u8, &xo)] {
            if xh.is_zero() {
                continue;
            }
            for (yp, yh) in [(0u8, &ye), (1u8, &yo)] {
                if yh.is_zero() {
                    continue;
                }
                let forward = xh.matmul(yh);
                let backward = yh.matmul(xh);
                out = out.add(&forward);
                if xp * yp == 1 {
                    out = out.add(&backward);
                } else {
                    out = out.sub(&backward);
                }
            }
        }
        out
    }

    /// Supertrace: Σ_{k≤m} x_kk − Σ_{k>m} x_kk.
    pub fn supertrace(&self, x: &AlgebraElement) -> Rat {
        let mut s = Rat::zero();
        for (&idx, c) in x.iter() {
            if idx.i == idx.j {
                if self.line_parity(idx.i) == 0 {
                    s += c;
                } else {
                    s -= c;
                }
            }
        }
        s
    }

    /// The invariant form (x, y) = str(xy).
    pub fn form(&self, x: &AlgebraElement, y: &AlgebraElement) -> Rat {
        // str(xy) only needs the diagonal of the product.
        let mut s = Rat::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                if a.j == b.i && b.j == a.i {
                    let v = ca * cb;
                    if self.line_parity(a.i) == 0 {
                        s += v;
                    } else {
                        s -= v;
                    }
                }
            }
        }
        s
    }

    /// Dual of an elementary matrix with respect to the supertrace form:
    /// `E_ij* = (−1)^{[i]} E_ji`.
    pub fn dual_index(&self, idx: BasisIndex) -> AlgebraElement {
        let sign = if self.line_parity(idx.i) == 1 { -1 } else { 1 };
        AlgebraElement::from_terms(&[(idx.j, idx.i, sign)])
    }

    pub fn basis(&self) -> &[AlgebraElement] {
        &self.basis
    }

    pub fn basis_parity(&self, a: usize) -> u8 {
        self.basis_parity[a]
    }

    pub fn dual_basis(&self) -> &[AlgebraElement] {
        &self.dual_basis
    }

    pub fn cartan_basis(&self) -> &[AlgebraElement] {
        &self.cartan_basis
    }

    pub fn cartan_dim(&self) -> usize {
        self.cartan_basis.len()
    }

    pub fn cartan_dual(&self) -> &[AlgebraElement] {
        &self.cartan_dual
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Mat {
        &self.gram_inv
    }

    pub fn cartan_gram(&self) -> &Mat {
        &self.cartan_gram
    }

    pub fn cartan_gram_inv(&self) -> &Mat {
        &self.cartan_gram_inv
    }

    /// Coordinates of `x` in the full basis; fails if `x` is outside the
    /// algebra (for sl: not supertraceless).
    pub fn coords(&self, x: &AlgebraElement) -> Result<Vec<Rat>> {
        let c: Vec<Rat> = self.dual_basis.iter().map(|d| self.form(x, d)).collect();
        if &self.from_coords(&c) == x {
            Ok(c)
        } else {
            Err(Error::NotInAlgebra)
        }
    }

    pub fn from_coords(&self, c: &[Rat]) -> AlgebraElement {
        assert_eq!(c.len(), self.dim());
        let mut x = AlgebraElement::zero();
        for (b, v) in self.basis.iter().zip(c) {
            x = x.add(&b.scale(v));
        }
        x
    }

    pub fn contains(&self, x: &AlgebraElement) -> bool {
        self.coords(x).is_ok()
    }

    /// Coordinates in the Cartan basis; fails off the Cartan.
    pub fn cartan_coords(&self, x: &AlgebraElement) -> Result<Vec<Rat>> {
        let c: Vec<Rat> = self.cartan_dual.iter().map(|d| self.form(x, d)).collect();
        if &self.cartan_from_coords(&c) == x {
            Ok(c)
        } else {
            Err(Error::NotInAlgebra)
        }
    }

    pub fn cartan_from_coords(&self, c: &[Rat]) -> AlgebraElement {
        assert_eq!(c.len(), self.cartan_dim());
        let mut x = AlgebraElement::zero();
        for (b, v) in self.cartan_basis.iter().zip(c) {
            x = x.add(&b.scale(v));
        }
        x
    }

    /// The quadratic Casimir 2-tensor Ω = Σ_a (−1)^{|I_a|} I_a ⊗ I_a*.
    pub fn casimir(&self) -> &Tensor2 {
        &self.casimir
    }

    /// The Cartan part Ω₀ of the Casimir.
    pub fn omega0(&self) -> &Tensor2 {
        &self.omega0
    }

    /// JSON descriptor `{"kind":"sl","m":2,"n":1}`.
    pub fn descriptor_json(&self) -> Value {
        serde_json::json!({ "kind": self.kind.as_str(), "m": self.m, "n": self.n })
    }

    pub fn from_descriptor_json(v: &Value) -> Result<Self> {
        let kind = match json::get_field(v, "kind")?.as_str() {
            Some("gl") => AlgebraKind::Gl,
            Some("sl") => AlgebraKind::Sl,
            other => return Err(Error::Json(format!("unknown algebra kind {other:?}"))),
        };
        let m = json::get_field(v, "m")?
            .as_u64()
            .ok_or_else(|| Error::Json("`m` must be a positive integer".into()))?;
        let n = json::get_field(v, "n")?
            .as_u64()
            .ok_or_else(|| Error::Json("`n` must be a positive integer".into()))?;
        SuperAlgebra::make(kind, m as usize, n as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn dimensions_and_odd_counts() {
        let gl21 = SuperAlgebra::gl(2, 1).unwrap();
        assert_eq!(gl21.dim(), 9);
        let odd = (0..gl21.dim()).filter(|&a| gl21.basis_parity(a) == 1).count();
        assert_eq!(odd, 4);

        let sl21 = SuperAlgebra::sl(2, 1).unwrap();
        assert_eq!(sl21.dim(), 8);
        assert_eq!(sl21.cartan_dim(), 2);
    }

    #[test]
    fn rejects_degenerate_cases() {
        assert!(matches!(SuperAlgebra::sl(2, 2), Err(Error::DegenerateSl { m: 2 })));
        assert!(matches!(SuperAlgebra::gl(0, 1), Err(Error::InvalidRank { .. })));
        assert!(matches!(SuperAlgebra::sl(1, 0), Err(Error::InvalidRank { .. })));
        assert!(SuperAlgebra::gl(1, 1).is_ok());
    }

    #[test]
    fn bracket_examples_gl21() {
        let alg = SuperAlgebra::gl(2, 1).unwrap();
        let e12 = AlgebraElement::unit(1, 2);
        let e21 = AlgebraElement::unit(2, 1);
        assert_eq!(
            alg.bracket(&e12, &e21),
            AlgebraElement::from_terms(&[(1, 1, 1), (2, 2, -1)])
        );
        // both odd: anticommutator
        let e23 = AlgebraElement::unit(2, 3);
        let e32 = AlgebraElement::unit(3, 2);
        assert_eq!(
            alg.bracket(&e23, &e32),
            AlgebraElement::from_terms(&[(2, 2, 1), (3, 3, 1)])
        );
        let e13 = AlgebraElement::unit(1, 3);
        assert!(alg.bracket(&e13, &e23).is_zero());
    }

    #[test]
    fn form_examples_gl21() {
        let alg = SuperAlgebra::gl(2, 1).unwrap();
        let e12 = AlgebraElement::unit(1, 2);
        let e21 = AlgebraElement::unit(2, 1);
        let e23 = AlgebraElement::unit(2, 3);
        let e32 = AlgebraElement::unit(3, 2);
        assert_eq!(alg.form(&e12, &e21), int(1));
        assert_eq!(alg.form(&e32, &e23), int(-1));
        // consistency: even against odd vanishes
        assert_eq!(alg.form(&e12, &e23), int(0));
        let h = AlgebraElement::unit(1, 1);
        assert_eq!(alg.form(&h, &e32), int(0));
    }

    #[test]
    fn dual_examples_gl21() {
        let alg = SuperAlgebra::gl(2, 1).unwrap();
        assert_eq!(alg.dual_index(BasisIndex::new(1, 2)), AlgebraElement::unit(2, 1));
        assert_eq!(
            alg.dual_index(BasisIndex::new(3, 1)),
            AlgebraElement::from_terms(&[(1, 3, -1)])
        );
        for i in 1..=3 {
            for j in 1..=3 {
                let e = AlgebraElement::unit(i, j);
                let d = alg.dual_index(BasisIndex::new(i, j));
                assert_eq!(alg.form(&e, &d), int(1));
            }
        }
    }

    #[test]
    fn dual_involution_sign() {
        let alg = SuperAlgebra::gl(2, 1).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let idx = BasisIndex::new(i, j);
                let d = alg.dual_index(idx);
                // dual is a signed elementary matrix; apply the rule again
                let (&didx, dc) = d.iter().next().unwrap();
                let dd = alg.dual_index(didx).scale(dc);
                let expected_sign = if alg.index_parity(idx) == 1 { -1 } else { 1 };
                assert_eq!(dd, AlgebraElement::from_terms(&[(i, j, expected_sign)]));
            }
        }
    }

    #[test]
    fn casimir_gl11_expands_as_expected() {
        let alg = SuperAlgebra::gl(1, 1).unwrap();
        let expected = Tensor2::from_terms(&[
            ((1, 1), (1, 1), 1, 1),
            ((1, 2), (2, 1), -1, 1),
            ((2, 1), (1, 2), 1, 1),
            ((2, 2), (2, 2), -1, 1),
        ]);
        assert_eq!(alg.casimir(), &expected);
    }

    #[test]
    fn casimir_gl_matches_direct_formula() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let alg = SuperAlgebra::gl(m, n).unwrap();
            let t = m + n;
            let mut direct = Tensor2::zero();
            for i in 1..=t {
                for j in 1..=t {
                    let sign = if alg.line_parity(j) == 1 { -1 } else { 1 };
                    direct.add_product(
                        &AlgebraElement::from_terms(&[(i, j, sign)]),
                        &AlgebraElement::unit(j, i),
                    );
                }
            }
            assert_eq!(alg.casimir(), &direct);
        }
    }

    #[test]
    fn casimir_sl_is_projection_of_gl_casimir() {
        for (m, n) in [(2, 1), (1, 2), (3, 1), (1, 3)] {
            let sl = SuperAlgebra::sl(m, n).unwrap();
            let gl = SuperAlgebra::gl(m, n).unwrap();
            let t = m + n;
            // gl = sl ⊥ C·1, so Ω_sl = Ω_gl − 1⊗1/(m−n).
            let id: Vec<(usize, usize, i64)> = (1..=t).map(|k| (k, k, 1)).collect();
            let one = AlgebraElement::from_terms(&id);
            let mut correction = Tensor2::zero();
            correction.add_product(&one, &one.scale(&rat(1, m as i64 - n as i64)));
            let projected = gl.casimir().sub(&correction);
            assert_eq!(sl.casimir(), &projected);
        }
    }

    #[test]
    fn sl_members_are_supertraceless() {
        let alg = SuperAlgebra::sl(2, 1).unwrap();
        for b in alg.basis() {
            assert_eq!(alg.supertrace(b), int(0));
        }
        assert!(!alg.contains(&AlgebraElement::unit(1, 1)));
        let u = AlgebraElement::from_terms(&[(1, 1, 1), (3, 3, 1)]);
        assert!(alg.contains(&u));
    }

    #[test]
    fn parity_queries() {
        let alg = SuperAlgebra::gl(2, 1).unwrap();
        let x = AlgebraElement::unit(1, 3);
        assert_eq!(alg.element_parity(&x).unwrap(), 1);
        let mixed = x.add(&AlgebraElement::unit(1, 2));
        assert!(matches!(alg.element_parity(&mixed), Err(Error::NotHomogeneous)));
        assert_eq!(alg.element_parity(&AlgebraElement::zero()).unwrap(), 0);
    }

    #[test]
    fn coords_round_trip() {
        let alg = SuperAlgebra::sl(3, 1).unwrap();
        let x = AlgebraElement::from_terms(&[(1, 2, 3), (2, 1, -5), (1, 1, 2), (2, 2, -2)]);
        let c = alg.coords(&x).unwrap();
        assert_eq!(alg.from_coords(&c), x);
    }

    #[test]
    fn descriptor_json_round_trip() {
        let alg = SuperAlgebra::sl(2, 1).unwrap();
        let v = alg.descriptor_json();
        let back = SuperAlgebra::from_descriptor_json(&v).unwrap();
        assert_eq!(back.kind(), AlgebraKind::Sl);
        assert_eq!((back.m(), back.n()), (2, 1));
    }
}
