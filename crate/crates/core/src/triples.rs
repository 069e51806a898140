//! Admissible triples (Γ₁, Γ₂, τ), the linear extension τ̄ and the induced
//! partial order on positive roots.
//!
//! A triple is admissible when τ is an isometry for the Gram form, preserves
//! the parity of roots, and has no cycles: iterating τ on any element of Γ₁
//! eventually leaves Γ₁. Enumeration is a plain filter over all subset pairs
//! and bijections — the rank is m+n−1, so this is tiny at desk scale.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::json;
use crate::roots::{positive_roots, simple_support, DynkinDiagram, Root};

/// An admissible triple on a diagram; `gamma1`, `gamma2` and `tau` hold
/// 0-based indices into the diagram's simple-root list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleTriple {
    pub diagram: DynkinDiagram,
    pub gamma1: Vec<usize>,
    pub gamma2: Vec<usize>,
    pub tau: BTreeMap<usize, usize>,
}

/// The strict order α < β generated by β = τ̄ᵏ(α).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PartialOrder {
    pub pairs: BTreeSet<(Root, Root)>,
}

impl PartialOrder {
    pub fn less(&self, a: &Root, b: &Root) -> bool {
        self.pairs.contains(&(a.clone(), b.clone()))
    }
}

/// Check the three admissibility conditions.
pub fn is_admissible(
    d: &DynkinDiagram,
    gamma1: &[usize],
    gamma2: &[usize],
    tau: &BTreeMap<usize, usize>,
) -> bool {
    let rank = d.rank();
    let ok_indices = gamma1.iter().chain(gamma2).all(|&k| k < rank);
    if !ok_indices
        || gamma1.len() != gamma2.len()
        || tau.len() != gamma1.len()
        || !tau.keys().all(|k| gamma1.contains(k))
        || !tau.values().all(|v| gamma2.contains(v))
    {
        return false;
    }
    let distinct: BTreeSet<_> = tau.values().collect();
    if distinct.len() != tau.len() {
        return false;
    }
    // isometry: (τα, τβ) = (α, β) on all pairs from Γ₁
    for (&a, &ta) in tau {
        for (&b, &tb) in tau {
            if d.gram.at(ta, tb) != d.gram.at(a, b) {
                return false;
            }
        }
    }
    // parity preservation
    let parities = d.parities();
    if tau.iter().any(|(&a, &ta)| parities[a] != parities[ta]) {
        return false;
    }
    // no cycles: iterating τ must leave Γ₁
    for &start in gamma1 {
        let mut seen = BTreeSet::new();
        let mut cur = start;
        loop {
            if !seen.insert(cur) {
                return false;
            }
            match tau.get(&cur) {
                Some(&next) if gamma1.contains(&next) => cur = next,
                Some(_) => break,
                None => break,
            }
        }
    }
    true
}

fn subsets(rank: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, rank: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in start..rank {
            cur.push(k);
            rec(k + 1, rank, size, cur, out);
            cur.pop();
        }
    }
    rec(0, rank, size, &mut cur, &mut out);
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// All admissible triples on a diagram, the empty one included, in a
/// deterministic lexicographic order.
pub fn enumerate_triples(d: &DynkinDiagram) -> Vec<AdmissibleTriple> {
    let rank = d.rank();
    let mut out = Vec::new();
    for size in 0..=rank {
        for gamma1 in subsets(rank, size) {
            for gamma2 in subsets(rank, size) {
                for perm in permutations(&gamma2) {
                    let tau: BTreeMap<usize, usize> =
                        gamma1.iter().copied().zip(perm.iter().copied()).collect();
                    if is_admissible(d, &gamma1, &gamma2, &tau) {
                        out.push(AdmissibleTriple {
                            diagram: d.clone(),
                            gamma1: gamma1.clone(),
                            gamma2: gamma2.clone(),
                            tau,
                        });
                    }
                }
            }
        }
    }
    out
}

impl AdmissibleTriple {
    pub fn empty(d: &DynkinDiagram) -> Self {
        AdmissibleTriple {
            diagram: d.clone(),
            gamma1: Vec::new(),
            gamma2: Vec::new(),
            tau: BTreeMap::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.gamma1.is_empty()
    }

    /// Γ̄ᵢ: the positive roots whose simple support lies inside Γᵢ.
    pub fn gamma_bar(&self, which: usize) -> Vec<Root> {
        let gamma = if which == 1 { &self.gamma1 } else { &self.gamma2 };
        positive_roots(&self.diagram)
            .into_iter()
            .filter(|rho| {
                simple_support(&self.diagram, rho)
                    .map(|s| s.iter().all(|k| gamma.contains(k)))
                    .unwrap_or(false)
            })
            .collect()
    }

    /// τ̄ρ computed by linearity over the simple support of ρ ∈ Γ̄₁.
    pub fn tau_bar(&self, rho: &Root) -> Result<Root> {
        let support = simple_support(&self.diagram, rho).ok_or(Error::NotPositiveRoot)?;
        let mut image: Option<Root> = None;
        for k in &support {
            let target = *self.tau.get(k).ok_or(Error::NotPositiveRoot)?;
            let term = &self.diagram.simple_roots[target];
            image = Some(match image {
                None => term.clone(),
                Some(acc) => acc.add(term),
            });
        }
        let image = image.ok_or(Error::NotPositiveRoot)?;
        // the image of a root under an isometric, parity-preserving τ̄ is a root
        if simple_support(&self.diagram, &image).is_none() {
            return Err(Error::NotAdmissible);
        }
        Ok(image)
    }
}

/// Extend τ to Γ̄₁ → Γ̄₂ by linearity.
pub fn extend_tau(t: &AdmissibleTriple) -> Result<BTreeMap<Root, Root>> {
    let mut map = BTreeMap::new();
    for rho in t.gamma_bar(1) {
        let image = t.tau_bar(&rho)?;
        map.insert(rho, image);
    }
    Ok(map)
}

/// The partial order: α < β iff β = τ̄ᵏ(α) for some k ≥ 1, iterating while
/// the argument stays inside Γ̄₁.
pub fn partial_order(t: &AdmissibleTriple) -> Result<PartialOrder> {
    let bar1: BTreeSet<Root> = t.gamma_bar(1).into_iter().collect();
    let mut pairs = BTreeSet::new();
    for start in &bar1 {
        let mut cur = start.clone();
        while bar1.contains(&cur) {
            let next = t.tau_bar(&cur)?;
            pairs.insert((start.clone(), next.clone()));
            cur = next;
        }
    }
    Ok(PartialOrder { pairs })
}

/// Positive roots of the diagram sorted compatibly with the partial order
/// (sources before targets), ties broken lexicographically.
pub fn order_respecting_positive_roots(t: &AdmissibleTriple) -> Result<Vec<Root>> {
    let order = partial_order(t)?;
    let mut remaining: Vec<Root> = positive_roots(&t.diagram);
    remaining.sort();
    let mut out: Vec<Root> = Vec::new();
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|r| {
                !remaining
                    .iter()
                    .any(|s| s != r && order.less(s, r))
            })
            .ok_or(Error::NotAdmissible)?; // a cycle would contradict admissibility
        out.push(remaining.remove(pos));
    }
    Ok(out)
}

/// Triple JSON: `{"gamma1":[...],"gamma2":[...],"tau":[[from,to],...]}` with
/// 0-based indices into the diagram's simple-root list.
pub fn triple_to_json(t: &AdmissibleTriple) -> Value {
    let tau: Vec<Value> = t
        .tau
        .iter()
        .map(|(&a, &b)| Value::Array(vec![Value::from(a as u64), Value::from(b as u64)]))
        .collect();
    serde_json::json!({
        "gamma1": t.gamma1.iter().map(|&k| k as u64).collect::<Vec<_>>(),
        "gamma2": t.gamma2.iter().map(|&k| k as u64).collect::<Vec<_>>(),
        "tau": tau,
    })
}

pub fn triple_from_json(d: &DynkinDiagram, v: &Value) -> Result<AdmissibleTriple> {
    let read_indices = |name: &str| -> Result<Vec<usize>> {
        json::get_field(v, name)?
            .as_array()
            .ok_or_else(|| Error::Json(format!("`{name}` must be an array")))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|u| u as usize)
                    .ok_or_else(|| Error::Json(format!("`{name}` entries must be indices")))
            })
            .collect()
    };
    let gamma1 = read_indices("gamma1")?;
    let gamma2 = read_indices("gamma2")?;
    let tau_pairs = json::get_field(v, "tau")?
        .as_array()
        .ok_or_else(|| Error::Json("`tau` must be an array of pairs".into()))?;
    let mut tau = BTreeMap::new();
    for p in tau_pairs {
        let arr = p
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Json("`tau` entries must be [from,to]".into()))?;
        let a = arr[0].as_u64().ok_or_else(|| Error::Json("bad tau index".into()))?;
        let b = arr[1].as_u64().ok_or_else(|| Error::Json("bad tau index".into()))?;
        tau.insert(a as usize, b as usize);
    }
    if !is_admissible(d, &gamma1, &gamma2, &tau) {
        return Err(Error::NotAdmissible);
    }
    Ok(AdmissibleTriple { diagram: d.clone(), gamma1, gamma2, tau })
}
