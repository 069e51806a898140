//! Root systems, Borel choices (simple root systems), Dynkin diagrams, odd
//! reflections, normalized root vectors, Cartan vectors and Ω₀.
//!
//! For gl(m,n)/sl(m,n) every root is a difference of two weight lines: the m
//! even lines ε₁..ε_m and the n odd lines λ₁..λ_n, with the weight-space form
//! `(ε_i, ε_j) = δ_ij`, `(λ_i, λ_j) = −δ_ij`, mixed pairs orthogonal. A
//! simple root system reachable from the distinguished one by odd reflections
//! and global negation is encoded as a pair (order, sign): a shuffle word of
//! the weight lines (even lines in increasing order, odd lines in increasing
//! order) whose consecutive differences, times the sign, are the simple
//! roots. Odd reflections act inside this set by swapping adjacent lines.

use std::fmt;

use serde_json::Value;

use crate::algebra::{AlgebraElement, SuperAlgebra};
use crate::error::{Error, Result};
use crate::json;
use crate::linalg::Mat;
use crate::scalar::{int, Rat};
use crate::tensor::Tensor2;

/// A root as an integer weight vector of length m + n over the ε/λ lines.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Root {
    pub weight: Vec<i64>,
}

impl Root {
    /// The root (line p) − (line q); lines are 1-based matrix indices.
    pub fn from_lines(total: usize, p: usize, q: usize) -> Self {
        assert!(p != q && 1 <= p && p <= total && 1 <= q && q <= total);
        let mut weight = vec![0i64; total];
        weight[p - 1] = 1;
        weight[q - 1] = -1;
        Root { weight }
    }

    pub fn neg(&self) -> Root {
        Root { weight: self.weight.iter().map(|w| -w).collect() }
    }

    pub fn add(&self, other: &Root) -> Root {
        assert_eq!(self.weight.len(), other.weight.len());
        Root { weight: self.weight.iter().zip(&other.weight).map(|(a, b)| a + b).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.weight.iter().all(|&w| w == 0)
    }

    /// The line carrying the +1 entry, if the weight has root shape.
    pub fn plus_line(&self) -> Option<usize> {
        self.root_lines().map(|(p, _)| p)
    }

    /// The line carrying the −1 entry.
    pub fn minus_line(&self) -> Option<usize> {
        self.root_lines().map(|(_, q)| q)
    }

    /// `(plus line, minus line)` when the weight is exactly one +1 and one −1.
    pub fn root_lines(&self) -> Option<(usize, usize)> {
        let mut plus = None;
        let mut minus = None;
        for (k, &w) in self.weight.iter().enumerate() {
            match w {
                0 => {}
                1 if plus.is_none() => plus = Some(k + 1),
                -1 if minus.is_none() => minus = Some(k + 1),
                _ => return None,
            }
        }
        plus.zip(minus)
    }

    /// Parity: 1 iff the two lines straddle the even/odd boundary.
    pub fn parity(&self, m: usize) -> u8 {
        match self.root_lines() {
            Some((p, q)) => u8::from((p > m) != (q > m)),
            None => 0,
        }
    }

    /// Weight-space form induced by the supertrace form on the Cartan.
    pub fn form(&self, other: &Root, m: usize) -> Rat {
        let mut s = 0i64;
        for (k, (a, b)) in self.weight.iter().zip(&other.weight).enumerate() {
            if k < m {
                s += a * b;
            } else {
                s -= a * b;
            }
        }
        int(s)
    }

    pub fn is_isotropic(&self, m: usize) -> bool {
        self.form(self, m) == int(0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .weight
            .iter()
            .enumerate()
            .filter(|(_, &w)| w != 0)
            .map(|(k, &w)| {
                let mag = if w.abs() == 1 { String::new() } else { format!("{}", w.abs()) };
                let sign = if w < 0 { "-" } else { "+" };
                format!("{sign}{mag}x{}", k + 1)
            })
            .collect();
        write!(f, "{}", terms.join(""))
    }
}

/// A simple root system for gl(m,n)/sl(m,n), as a shuffle word plus a global
/// sign, with the simple roots and their Gram matrix derived.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DynkinDiagram {
    pub m: usize,
    pub n: usize,
    /// Permutation of the weight lines 1..=m+n; even lines appear in
    /// increasing order among themselves and so do odd lines.
    pub order: Vec<usize>,
    pub sign: i8,
    pub simple_roots: Vec<Root>,
    pub gram: Mat,
}

impl DynkinDiagram {
    pub fn new(m: usize, n: usize, order: Vec<usize>, sign: i8) -> Self {
        let total = m + n;
        assert_eq!(order.len(), total);
        assert!(sign == 1 || sign == -1);
        let simple_roots: Vec<Root> = (0..total - 1)
            .map(|k| {
                let r = Root::from_lines(total, order[k], order[k + 1]);
                if sign == 1 { r } else { r.neg() }
            })
            .collect();
        let gram = Mat::from_fn(total - 1, total - 1, |a, b| {
            simple_roots[a].form(&simple_roots[b], m)
        });
        DynkinDiagram { m, n, order, sign, simple_roots, gram }
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn total(&self) -> usize {
        self.m + self.n
    }

    pub fn parities(&self) -> Vec<u8> {
        self.simple_roots.iter().map(|r| r.parity(self.m)).collect()
    }

    /// Position of a root in the simple root list.
    pub fn simple_index(&self, root: &Root) -> Option<usize> {
        self.simple_roots.iter().position(|r| r == root)
    }

    /// Recover the (order, sign) encoding from an ordered simple-root list.
    pub fn from_simple_roots(m: usize, n: usize, roots: &[Root]) -> Option<Self> {
        let total = m + n;
        if roots.len() + 1 != total {
            return None;
        }
        'signs: for sign in [1i8, -1] {
            let mut order = Vec::with_capacity(total);
            for (k, r) in roots.iter().enumerate() {
                let r = if sign == 1 { r.clone() } else { r.neg() };
                let (p, q) = r.root_lines()?;
                if k == 0 {
                    order.push(p);
                } else if order[k] != p {
                    continue 'signs;
                }
                order.push(q);
            }
            let mut seen = vec![false; total];
            if order.iter().all(|&l| {
                let fresh = !seen[l - 1];
                seen[l - 1] = true;
                fresh
            }) {
                let d = DynkinDiagram::new(m, n, order, sign);
                if d.simple_roots == roots {
                    return Some(d);
                }
            }
        }
        None
    }

    /// Diagram JSON: order labels, sign, simple roots as weight vectors and
    /// their parities.
    pub fn to_json(&self) -> Value {
        let labels: Vec<Value> = self
            .order
            .iter()
            .map(|&l| {
                let s = if l <= self.m {
                    format!("e{l}")
                } else {
                    format!("o{}", l - self.m)
                };
                Value::String(s)
            })
            .collect();
        let roots: Vec<Value> = self
            .simple_roots
            .iter()
            .map(|r| Value::Array(r.weight.iter().map(|&w| Value::from(w)).collect()))
            .collect();
        let parities: Vec<Value> =
            self.parities().iter().map(|&p| Value::from(p as u64)).collect();
        serde_json::json!({
            "order": labels,
            "sign": self.sign,
            "simple_roots": roots,
            "parities": parities,
        })
    }

    pub fn from_json(m: usize, n: usize, v: &Value) -> Result<Self> {
        let labels = json::get_field(v, "order")?
            .as_array()
            .ok_or_else(|| Error::Json("`order` must be an array".into()))?;
        let sign = json::get_field(v, "sign")?
            .as_i64()
            .filter(|&s| s == 1 || s == -1)
            .ok_or_else(|| Error::Json("`sign` must be 1 or -1".into()))? as i8;
        let mut order = Vec::new();
        for l in labels {
            let s = l
                .as_str()
                .ok_or_else(|| Error::Json("order labels must be strings".into()))?;
            let (prefix, idx) = s.split_at(1);
            let k: usize = idx
                .parse()
                .map_err(|_| Error::Json(format!("bad line label `{s}`")))?;
            let line = match prefix {
                "e" if k >= 1 && k <= m => k,
                "o" if k >= 1 && k <= n => m + k,
                _ => return Err(Error::Json(format!("bad line label `{s}`"))),
            };
            order.push(line);
        }
        if order.len() != m + n {
            return Err(Error::Json("wrong number of order labels".into()));
        }
        Ok(DynkinDiagram::new(m, n, order, sign))
    }
}

/// All simple root systems reachable from the distinguished one by odd
/// reflections and global negation, without duplicates. Enumeration order is
/// deterministic: sign +1 first, shuffle words in lexicographic order with
/// even lines before odd ones.
pub fn enumerate_diagrams(alg: &SuperAlgebra) -> Vec<DynkinDiagram> {
    let (m, n) = (alg.m(), alg.n());
    let mut words: Vec<Vec<bool>> = Vec::new();
    // all words with m `false` (even) and n `true` (odd) entries
    let mut stack = vec![(Vec::<bool>::new(), m, n)];
    while let Some((word, me, no)) = stack.pop() {
        if me == 0 && no == 0 {
            words.push(word);
            continue;
        }
        // push odd-first so even-first comes out of the stack last… we sort below anyway
        if no > 0 {
            let mut w = word.clone();
            w.push(true);
            stack.push((w, me, no - 1));
        }
        if me > 0 {
            let mut w = word;
            w.push(false);
            stack.push((w, me - 1, no));
        }
    }
    words.sort();

    let mut diagrams: Vec<DynkinDiagram> = Vec::new();
    for sign in [1i8, -1] {
        for word in &words {
            let mut next_even = 1;
            let mut next_odd = m + 1;
            let order: Vec<usize> = word
                .iter()
                .map(|&odd| {
                    if odd {
                        let l = next_odd;
                        next_odd += 1;
                        l
                    } else {
                        let l = next_even;
                        next_even += 1;
                        l
                    }
                })
                .collect();
            let d = DynkinDiagram::new(m, n, order, sign);
            if !diagrams.iter().any(|x| x.simple_roots == d.simple_roots) {
                diagrams.push(d);
            }
        }
    }
    diagrams
}

/// Odd reflection at an odd isotropic simple root α: α ↦ −α, β ↦ β + α when
/// (α, β) ≠ 0, β ↦ β otherwise.
pub fn odd_reflection(d: &DynkinDiagram, alpha: &Root) -> Result<DynkinDiagram> {
    let Some(pos) = d.simple_index(alpha) else {
        return Err(Error::NotOddSimpleRoot);
    };
    if alpha.parity(d.m) != 1 || !alpha.is_isotropic(d.m) {
        return Err(Error::NotOddSimpleRoot);
    }
    let new_roots: Vec<Root> = d
        .simple_roots
        .iter()
        .enumerate()
        .map(|(k, beta)| {
            if k == pos {
                beta.neg()
            } else if alpha.form(beta, d.m) != int(0) {
                beta.add(alpha)
            } else {
                beta.clone()
            }
        })
        .collect();
    DynkinDiagram::from_simple_roots(d.m, d.n, &new_roots)
        .ok_or(Error::NotOddSimpleRoot)
}

/// Positive roots of the diagram: all nonnegative integral combinations of
/// the simple roots that are roots, ordered by their position pair.
pub fn positive_roots(d: &DynkinDiagram) -> Vec<Root> {
    let total = d.total();
    let mut out = Vec::new();
    for i in 0..total {
        for j in i + 1..total {
            let r = Root::from_lines(total, d.order[i], d.order[j]);
            out.push(if d.sign == 1 { r } else { r.neg() });
        }
    }
    out
}

/// Positions (0-based, into the simple-root list) whose sum gives the
/// positive root `rho`; `None` when `rho` is not positive for `d`.
pub fn simple_support(d: &DynkinDiagram, rho: &Root) -> Option<Vec<usize>> {
    let r = if d.sign == 1 { rho.clone() } else { rho.neg() };
    let (p, q) = r.root_lines()?;
    let i = d.order.iter().position(|&l| l == p)?;
    let j = d.order.iter().position(|&l| l == q)?;
    if i < j {
        Some((i..j).collect())
    } else {
        None
    }
}

/// The default normalized root vector pair `(e_ρ, e_{−ρ})` for a positive
/// root: `e_ρ = E_pq` and `e_{−ρ} = (−1)^{[p]} E_qp`, so that
/// `(e_ρ, e_{−ρ}) = 1`.
pub fn root_vector_pair(
    d: &DynkinDiagram,
    rho: &Root,
    alg: &SuperAlgebra,
) -> Result<(AlgebraElement, AlgebraElement)> {
    if simple_support(d, rho).is_none() {
        return Err(Error::NotPositiveRoot);
    }
    let (p, q) = rho.root_lines().ok_or(Error::NotPositiveRoot)?;
    let e_plus = AlgebraElement::unit(p, q);
    let sign = if alg.line_parity(p) == 1 { -1 } else { 1 };
    let e_minus = AlgebraElement::from_terms(&[(q, p, sign)]);
    Ok((e_plus, e_minus))
}

/// The Cartan vector h_ρ with `(h_ρ, h) = ρ(h)` for all Cartan h:
/// `h_ρ = Σ_k (−1)^{[k]} ρ_k E_kk`.
pub fn cartan_vector(rho: &Root, alg: &SuperAlgebra) -> AlgebraElement {
    let mut h = AlgebraElement::zero();
    for (k, &w) in rho.weight.iter().enumerate() {
        if w != 0 {
            let sign = if alg.line_parity(k + 1) == 1 { -1 } else { 1 };
            h.add_term(crate::algebra::BasisIndex::new(k + 1, k + 1), int(sign * w));
        }
    }
    h
}

/// The Cartan part Ω₀ of the Casimir. When the diagram's Cartan vectors
/// `h_α` span the Cartan (the sl case) the sum `Σ h_{α_i} ⊗ h_{α_i}*` is
/// taken over them; otherwise (gl) the algebra's Cartan basis is used. Both
/// give the same canonical tensor.
pub fn omega0(d: &DynkinDiagram, alg: &SuperAlgebra) -> Tensor2 {
    let h: Vec<AlgebraElement> =
        d.simple_roots.iter().map(|r| cartan_vector(r, alg)).collect();
    let rank = h.len();
    if rank == alg.cartan_dim() {
        let gram = Mat::from_fn(rank, rank, |a, b| alg.form(&h[a], &h[b]));
        if let Some(inv) = gram.inverse() {
            let mut t = Tensor2::zero();
            for a in 0..rank {
                let mut dual = AlgebraElement::zero();
                for b in 0..rank {
                    dual = dual.add(&h[b].scale(inv.at(b, a)));
                }
                t.add_product(&h[a], &dual);
            }
            return t;
        }
    }
    alg.omega0().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl21() -> SuperAlgebra {
        SuperAlgebra::sl(2, 1).unwrap()
    }

    /// The six simple-root systems of sl(2,1) in enumeration order, written
    /// in the ε/λ weight coordinates.
    fn expected_sl21_diagrams() -> Vec<Vec<Vec<i64>>> {
        vec![
            vec![vec![1, -1, 0], vec![0, 1, -1]],   // α1, α2
            vec![vec![1, 0, -1], vec![0, -1, 1]],   // α1+α2, −α2
            vec![vec![-1, 0, 1], vec![1, -1, 0]],   // −α1−α2, α1
            vec![vec![-1, 1, 0], vec![0, -1, 1]],   // −α1, −α2
            vec![vec![-1, 0, 1], vec![0, 1, -1]],   // −α1−α2, α2
            vec![vec![1, 0, -1], vec![-1, 1, 0]],   // α1+α2, −α1
        ]
    }

    #[test]
    fn six_diagrams_for_sl21_in_order() {
        let alg = sl21();
        let diagrams = enumerate_diagrams(&alg);
        assert_eq!(diagrams.len(), 6);
        for (d, expected) in diagrams.iter().zip(expected_sl21_diagrams()) {
            let got: Vec<Vec<i64>> =
                d.simple_roots.iter().map(|r| r.weight.clone()).collect();
            assert_eq!(got, expected);
        }
        // both simple roots odd exactly for the second and fifth diagram
        let both_odd: Vec<usize> = diagrams
            .iter()
            .enumerate()
            .filter(|(_, d)| d.parities() == vec![1, 1])
            .map(|(k, _)| k)
            .collect();
        assert_eq!(both_odd, vec![1, 4]);
    }

    #[test]
    fn gl11_deduplicates_negated_words() {
        let alg = SuperAlgebra::gl(1, 1).unwrap();
        let diagrams = enumerate_diagrams(&alg);
        assert_eq!(diagrams.len(), 2);
        assert_eq!(diagrams[0].simple_roots[0].weight, vec![1, -1]);
        assert_eq!(diagrams[1].simple_roots[0].weight, vec![-1, 1]);
    }

    #[test]
    fn odd_reflection_chains() {
        let alg = sl21();
        let diagrams = enumerate_diagrams(&alg);
        let (d1, d2, d3) = (&diagrams[0], &diagrams[1], &diagrams[2]);
        let (d4, d5, d6) = (&diagrams[3], &diagrams[4], &diagrams[5]);

        let alpha2 = d1.simple_roots[1].clone();
        assert_eq!(&odd_reflection(d1, &alpha2).unwrap(), d2);
        // reflecting back at the negated root restores the diagram
        assert_eq!(&odd_reflection(d2, &alpha2.neg()).unwrap(), d1);

        let a12 = d2.simple_roots[0].clone();
        assert_eq!(&odd_reflection(d2, &a12).unwrap(), d3);

        let neg_alpha2 = d4.simple_roots[1].clone();
        assert_eq!(&odd_reflection(d4, &neg_alpha2).unwrap(), d5);
        let neg_a12 = d5.simple_roots[0].clone();
        assert_eq!(&odd_reflection(d5, &neg_a12).unwrap(), d6);
    }

    #[test]
    fn odd_reflection_rejects_even_and_non_simple_roots() {
        let alg = sl21();
        let d1 = &enumerate_diagrams(&alg)[0];
        let alpha1 = d1.simple_roots[0].clone(); // even
        assert!(matches!(odd_reflection(d1, &alpha1), Err(Error::NotOddSimpleRoot)));
        let not_simple = alpha1.add(&d1.simple_roots[1]);
        assert!(matches!(odd_reflection(d1, &not_simple), Err(Error::NotOddSimpleRoot)));
    }

    #[test]
    fn positive_roots_examples() {
        let alg = sl21();
        let diagrams = enumerate_diagrams(&alg);
        let d1 = &diagrams[0];
        let pos: Vec<Vec<i64>> = positive_roots(d1).iter().map(|r| r.weight.clone()).collect();
        // α1, α1+α2, α2
        assert_eq!(pos, vec![vec![1, -1, 0], vec![1, 0, -1], vec![0, 1, -1]]);

        let d3 = &diagrams[2];
        let pos3: Vec<Vec<i64>> = positive_roots(d3).iter().map(|r| r.weight.clone()).collect();
        // −α1−α2, −α2, α1
        assert_eq!(pos3, vec![vec![-1, 0, 1], vec![0, -1, 1], vec![1, -1, 0]]);

        // |Δ⁺| = |Δ| / 2
        for d in &diagrams {
            assert_eq!(positive_roots(d).len(), 3);
        }
    }

    #[test]
    fn root_vector_pairs_follow_the_tables() {
        let alg = sl21();
        let diagrams = enumerate_diagrams(&alg);
        let d2 = &diagrams[1];
        // positive root −α2 = λ1 − ε2 has e = E32 and dual e = −E23
        let neg_alpha2 = Root { weight: vec![0, -1, 1] };
        let (e, f) = root_vector_pair(d2, &neg_alpha2, &alg).unwrap();
        assert_eq!(e, AlgebraElement::unit(3, 2));
        assert_eq!(f, AlgebraElement::from_terms(&[(2, 3, -1)]));
        // normalization holds on every positive root of every diagram
        for d in &diagrams {
            for rho in positive_roots(d) {
                let (e, f) = root_vector_pair(d, &rho, &alg).unwrap();
                assert_eq!(alg.form(&e, &f), int(1));
            }
        }
    }

    #[test]
    fn cartan_vectors() {
        let alg = sl21();
        // α = ε2 − λ1 has h_α = E22 + E33
        let alpha = Root { weight: vec![0, 1, -1] };
        assert_eq!(
            cartan_vector(&alpha, &alg),
            AlgebraElement::from_terms(&[(2, 2, 1), (3, 3, 1)])
        );
        assert_eq!(cartan_vector(&alpha.neg(), &alg), cartan_vector(&alpha, &alg).neg());
        // representing property (h_α, h) = α(h) on the Cartan basis
        for h in alg.cartan_basis() {
            let lhs = alg.form(&cartan_vector(&alpha, &alg), h);
            let alpha_of_h: Rat = alpha
                .weight
                .iter()
                .enumerate()
                .map(|(k, &w)| h.coeff(crate::algebra::BasisIndex::new(k + 1, k + 1)) * int(w))
                .sum();
            assert_eq!(lhs, alpha_of_h);
        }
    }

    #[test]
    fn simple_bracket_gives_cartan_vector() {
        let alg = sl21();
        for d in enumerate_diagrams(&alg) {
            for gamma in &d.simple_roots {
                let (pos, rho) = if simple_support(&d, gamma).is_some() {
                    (true, gamma.clone())
                } else {
                    (false, gamma.neg())
                };
                let (e, f) = root_vector_pair(&d, &rho, &alg).unwrap();
                let (e_gamma, e_neg) = if pos { (e, f) } else { (f, e) };
                assert_eq!(alg.bracket(&e_gamma, &e_neg), cartan_vector(gamma, &alg));
            }
        }
    }

    #[test]
    fn omega0_matches_published_form() {
        let alg = sl21();
        let d = &enumerate_diagrams(&alg)[0];
        let expected = Tensor2::product(
            &AlgebraElement::from_terms(&[(1, 1, 1), (3, 3, 1)]),
            &AlgebraElement::from_terms(&[(2, 2, -1), (3, 3, -1)]),
        )
        .add(&Tensor2::product(
            &AlgebraElement::from_terms(&[(2, 2, -1), (3, 3, -1)]),
            &AlgebraElement::from_terms(&[(1, 1, 1), (3, 3, 1)]),
        ));
        assert_eq!(omega0(d, &alg), expected);
        assert_eq!(alg.omega0(), &expected);
        // flip invariance (the Cartan is even)
        assert_eq!(expected.graded_flip(&alg), expected);
    }

    #[test]
    fn casimir_decomposes_into_cartan_and_root_parts() {
        for alg in [SuperAlgebra::sl(2, 1).unwrap(), SuperAlgebra::gl(2, 1).unwrap()] {
            for d in enumerate_diagrams(&alg) {
                let mut tail = Tensor2::zero();
                for rho in positive_roots(&d) {
                    let (e, f) = root_vector_pair(&d, &rho, &alg).unwrap();
                    let sign = if rho.parity(alg.m()) == 1 { int(-1) } else { int(1) };
                    tail.add_product(&e.scale(&sign), &f);
                    tail.add_product(&f, &e);
                }
                assert_eq!(alg.casimir().sub(alg.omega0()), tail);
            }
        }
    }

    #[test]
    fn diagram_json_round_trip() {
        let alg = sl21();
        for d in enumerate_diagrams(&alg) {
            let v = d.to_json();
            let back = DynkinDiagram::from_json(2, 1, &v).unwrap();
            assert_eq!(&back, &d);
        }
    }
}
