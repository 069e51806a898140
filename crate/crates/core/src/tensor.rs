//! Sparse graded 2- and 3-tensors.
//!
//! Tensors are stored over elementary-matrix coordinates: an entry
//! `((i1,j1),(i2,j2)) → q` stands for `q · E_i1j1 ⊗ E_i2j2`. Keys are kept in
//! a sorted map with no stored zeros, so equality of tensors is structural
//! equality and serialization order is canonical.
//!
//! The graded flip sends `x ⊗ y` to `(−1)^{|x||y|} y ⊗ x` on homogeneous
//! terms; with this convention the Casimir 2-tensor is flip-invariant. The
//! bracket of two 2-tensors embedded into three tensor legs follows the
//! graded identities
//!
//! ```text
//! [a⊗b⊗1, c⊗1⊗d] = (−1)^{|b||c|} [a,c] ⊗ b ⊗ d
//! [a⊗b⊗1, 1⊗c⊗d] = a ⊗ [b,c] ⊗ d
//! [a⊗1⊗b, 1⊗c⊗d] = (−1)^{|b||c|} a ⊗ c ⊗ [b,d]
//! ```
//!
//! which is exactly what the Yang-Baxter residual needs; the identity leg is
//! never materialized.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::Value;

use crate::algebra::{AlgebraElement, BasisIndex, SuperAlgebra};
use crate::error::{Error, Result};
use crate::json;
use crate::operator::LinearOperator;
use crate::scalar::{int, Rat};

/// Sparse rational element of g ⊗ g in elementary-matrix coordinates.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Tensor2 {
    entries: BTreeMap<(BasisIndex, BasisIndex), Rat>,
}

/// Sparse rational element of g ⊗ g ⊗ g.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Tensor3 {
    entries: BTreeMap<(BasisIndex, BasisIndex, BasisIndex), Rat>,
}

/// Which two legs of a triple tensor product a 2-tensor occupies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Positions {
    P12,
    P13,
    P23,
}

/// A 2-tensor together with its leg placement; the missing leg carries the
/// implicit identity.
#[derive(Clone, Debug)]
pub struct Embedded<'a> {
    pub tensor: &'a Tensor2,
    pub positions: Positions,
}

/// Place a 2-tensor on two of three legs.
pub fn embed(tensor: &Tensor2, positions: Positions) -> Embedded<'_> {
    Embedded { tensor, positions }
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2::default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(BasisIndex, BasisIndex), &Rat)> {
        self.entries.iter()
    }

    pub fn coeff(&self, a: BasisIndex, b: BasisIndex) -> Rat {
        self.entries.get(&(a, b)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, a: BasisIndex, b: BasisIndex, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.entries.entry((a, b)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.entries.remove(&(a, b));
        }
    }

    /// Accumulate `x ⊗ y` for two algebra elements.
    pub fn add_product(&mut self, x: &AlgebraElement, y: &AlgebraElement) {
        for (&a, ca) in x.iter() {
            for (&b, cb) in y.iter() {
                self.add_term(a, b, ca * cb);
            }
        }
    }

    pub fn product(x: &AlgebraElement, y: &AlgebraElement) -> Tensor2 {
        let mut t = Tensor2::zero();
        t.add_product(x, y);
        t
    }

    /// Integer entries given as `((i1,j1),(i2,j2),num,den)`.
    pub fn from_terms(terms: &[((usize, usize), (usize, usize), i64, i64)]) -> Tensor2 {
        let mut t = Tensor2::zero();
        for &((i1, j1), (i2, j2), num, den) in terms {
            t.add_term(
                BasisIndex::new(i1, j1),
                BasisIndex::new(i2, j2),
                crate::scalar::rat(num, den),
            );
        }
        t
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for (&(a, b), c) in other.iter() {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for (&(a, b), c) in other.iter() {
            out.add_term(a, b, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> Tensor2 {
        if s.is_zero() {
            return Tensor2::zero();
        }
        Tensor2 { entries: self.entries.iter().map(|(&k, v)| (k, v * s)).collect() }
    }

    pub fn neg(&self) -> Tensor2 {
        Tensor2 { entries: self.entries.iter().map(|(&k, v)| (k, -v.clone())).collect() }
    }

    /// Graded flip: Σ (−1)^{|x||y|} y ⊗ x on homogeneous terms.
    pub fn graded_flip(&self, alg: &SuperAlgebra) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (&(a, b), c) in self.iter() {
            let sign = alg.index_parity(a) * alg.index_parity(b);
            let v = if sign == 1 { -c.clone() } else { c.clone() };
            out.add_term(b, a, v);
        }
        out
    }

    /// Group entries by the second leg: each slice `(k, w)` satisfies
    /// `self = Σ_k w_k ⊗ E_k`.
    pub fn second_slices(&self) -> BTreeMap<BasisIndex, AlgebraElement> {
        let mut slices: BTreeMap<BasisIndex, AlgebraElement> = BTreeMap::new();
        for (&(a, b), c) in self.iter() {
            slices.entry(b).or_default().add_term(a, c.clone());
        }
        slices
    }

    /// Contract the second leg against `x` through the form: Σ a · (b, x).
    pub fn contract_second(&self, alg: &SuperAlgebra, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (b, w) in self.second_slices() {
            let pairing = alg.form(&AlgebraElement::unit(b.i, b.j), x);
            if !pairing.is_zero() {
                out = out.add(&w.scale(&pairing));
            }
        }
        out
    }

    /// `(λ ⊗ 1)(t)` for the weight functional λ(x) = (h, x): Σ (h,a) · b.
    pub fn weight_contract_left(&self, alg: &SuperAlgebra, h: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&(a, b), c) in self.iter() {
            let v = alg.form(h, &AlgebraElement::unit(a.i, a.j));
            if !v.is_zero() {
                out.add_term(b, v * c);
            }
        }
        out
    }

    /// `(1 ⊗ λ)(t)` for λ(x) = (h, x): Σ (h,b) · a.
    pub fn weight_contract_right(&self, alg: &SuperAlgebra, h: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&(a, b), c) in self.iter() {
            let v = alg.form(h, &AlgebraElement::unit(b.i, b.j));
            if !v.is_zero() {
                out.add_term(a, v * c);
            }
        }
        out
    }

    /// JSON encoding `{"entries": [[[i1,j1],[i2,j2],num,den], ...]}` with
    /// entries sorted lexicographically.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(&(a, b), c)| {
                let (num, den) = json::rat_to_values(c);
                Value::Array(vec![
                    json::index_pair_to_value(a.i, a.j),
                    json::index_pair_to_value(b.i, b.j),
                    num,
                    den,
                ])
            })
            .collect();
        serde_json::json!({ "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let entries = json::get_field(v, "entries")?
            .as_array()
            .ok_or_else(|| Error::Json("`entries` must be an array".into()))?;
        let mut t = Tensor2::zero();
        for e in entries {
            let arr = e.as_array().filter(|a| a.len() == 4).ok_or_else(|| {
                Error::Json("tensor entry must be [[i1,j1],[i2,j2],num,den]".into())
            })?;
            let (i1, j1) = json::index_pair_from_value(&arr[0])?;
            let (i2, j2) = json::index_pair_from_value(&arr[1])?;
            t.add_term(
                BasisIndex::new(i1, j1),
                BasisIndex::new(i2, j2),
                json::rat_from_values(&arr[2], &arr[3])?,
            );
        }
        Ok(t)
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(a, b), c)) in self.entries.iter().enumerate() {
            let (sign, mag) = if c < &Rat::zero() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if k > 0 || sign == "-" {
                write!(f, "{} ", sign)?;
            }
            if mag != int(1) {
                write!(f, "{} ", mag)?;
            }
            write!(f, "{} (x) {}", a, b)?;
            if k + 1 < self.entries.len() {
                write!(f, " ")?;
            }
        }
        Ok(())
    }
}

impl Tensor3 {
    pub fn zero() -> Self {
        Tensor3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(BasisIndex, BasisIndex, BasisIndex), &Rat)> {
        self.entries.iter()
    }

    pub fn add_term(&mut self, a: BasisIndex, b: BasisIndex, c: BasisIndex, v: Rat) {
        if v.is_zero() {
            return;
        }
        let entry = self.entries.entry((a, b, c)).or_insert_with(Rat::zero);
        *entry += v;
        if entry.is_zero() {
            self.entries.remove(&(a, b, c));
        }
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        for (&(a, b, c), v) in other.iter() {
            out.add_term(a, b, c, v.clone());
        }
        out
    }

    /// Merge in place; used to fold partial sums.
    pub fn merge(&mut self, other: Tensor3) {
        for ((a, b, c), v) in other.entries {
            self.add_term(a, b, c, v);
        }
    }

    /// JSON encoding with a third index pair per entry.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|(&(a, b, c), v)| {
                let (num, den) = json::rat_to_values(v);
                Value::Array(vec![
                    json::index_pair_to_value(a.i, a.j),
                    json::index_pair_to_value(b.i, b.j),
                    json::index_pair_to_value(c.i, c.j),
                    num,
                    den,
                ])
            })
            .collect();
        serde_json::json!({ "entries": entries })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let entries = json::get_field(v, "entries")?
            .as_array()
            .ok_or_else(|| Error::Json("`entries` must be an array".into()))?;
        let mut t = Tensor3::zero();
        for e in entries {
            let arr = e.as_array().filter(|a| a.len() == 5).ok_or_else(|| {
                Error::Json("tensor entry must be [[i1,j1],[i2,j2],[i3,j3],num,den]".into())
            })?;
            let (i1, j1) = json::index_pair_from_value(&arr[0])?;
            let (i2, j2) = json::index_pair_from_value(&arr[1])?;
            let (i3, j3) = json::index_pair_from_value(&arr[2])?;
            t.add_term(
                BasisIndex::new(i1, j1),
                BasisIndex::new(i2, j2),
                BasisIndex::new(i3, j3),
                json::rat_from_values(&arr[3], &arr[4])?,
            );
        }
        Ok(t)
    }
}

/// `[E_a, E_b]` for elementary matrices: up to two elementary terms.
fn elementary_bracket(
    alg: &SuperAlgebra,
    a: BasisIndex,
    b: BasisIndex,
) -> impl Iterator<Item = (BasisIndex, i8)> {
    let mut terms = [None, None];
    if a.j == b.i {
        terms[0] = Some((BasisIndex::new(a.i, b.j), 1i8));
    }
    if b.j == a.i {
        let sign = if alg.index_parity(a) * alg.index_parity(b) == 1 { 1 } else { -1 };
        terms[1] = Some((BasisIndex::new(b.i, a.j), sign));
    }
    terms.into_iter().flatten()
}

/// Bracket of two embedded 2-tensors inside g ⊗ g ⊗ g.
///
/// Supported placements are (12,13), (12,23) and (13,23) — the combinations
/// the Yang-Baxter sum consists of.
pub fn graded_bracket(a: &Embedded<'_>, b: &Embedded<'_>, alg: &SuperAlgebra) -> Result<Tensor3> {
    use Positions::*;
    let mut out = Tensor3::zero();
    match (a.positions, b.positions) {
        (P12, P13) => {
            // [x⊗y⊗1, u⊗1⊗v] = (−1)^{|y||u|} [x,u] ⊗ y ⊗ v
            for (&(x, y), cx) in a.tensor.iter() {
                for (&(u, v), cu) in b.tensor.iter() {
                    let sign = alg.index_parity(y) * alg.index_parity(u);
                    let coeff = if sign == 1 { -(cx * cu) } else { cx * cu };
                    for (w, s) in elementary_bracket(alg, x, u) {
                        out.add_term(w, y, v, &coeff * int(s as i64));
                    }
                }
            }
        }
        (P12, P23) => {
            // [x⊗y⊗1, 1⊗u⊗v] = x ⊗ [y,u] ⊗ v
            for (&(x, y), cx) in a.tensor.iter() {
                for (&(u, v), cu) in b.tensor.iter() {
                    let coeff = cx * cu;
                    for (w, s) in elementary_bracket(alg, y, u) {
                        out.add_term(x, w, v, &coeff * int(s as i64));
                    }
                }
            }
        }
        (P13, P23) => {
            // [x⊗1⊗y, 1⊗u⊗v] = (−1)^{|y||u|} x ⊗ u ⊗ [y,v]
            for (&(x, y), cx) in a.tensor.iter() {
                for (&(u, v), cu) in b.tensor.iter() {
                    let sign = alg.index_parity(y) * alg.index_parity(u);
                    let coeff = if sign == 1 { -(cx * cu) } else { cx * cu };
                    for (w, s) in elementary_bracket(alg, y, v) {
                        out.add_term(x, u, w, &coeff * int(s as i64));
                    }
                }
            }
        }
        _ => return Err(Error::UnsupportedBracket),
    }
    Ok(out)
}

/// `(f ⊗ 1) t`: apply an operator to the first tensor leg.
pub fn apply_left(f: &LinearOperator, t: &Tensor2, alg: &SuperAlgebra) -> Result<Tensor2> {
    let mut out = Tensor2::zero();
    for (b, w) in t.second_slices() {
        let image = f.apply(alg, &w)?;
        for (&a, c) in image.iter() {
            out.add_term(a, b, c.clone());
        }
    }
    Ok(out)
}
