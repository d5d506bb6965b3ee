//! Blow-up calculus on chains of curves: the chain attached to a weight
//! p/q, single blow-up and blow-down moves, and contraction to a minimal
//! model.

use num_traits::One;
use thiserror::Error;

use crate::exact::{int, Int};
use crate::hjcf::hj_expand;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("invalid fraction {p}/{q}: need 0 < p < q with gcd(p,q) = 1")]
    InvalidFraction { p: Int, q: Int },
    #[error("bad blow-up locus for chain of length {len}: {reason}")]
    BadLocus { len: usize, reason: String },
    #[error("node {0} has self-intersection {1}, not -1")]
    NotMinusOne(usize, Int),
    #[error("cannot blow down the last curve of a chain")]
    LastCurve,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainNode {
    pub label: String,
    pub self_int: Int,
}

impl ChainNode {
    pub fn new(label: impl Into<String>, self_int: Int) -> Self {
        ChainNode {
            label: label.into(),
            self_int,
        }
    }
}

/// A path of curves: consecutive nodes meet transversally in one point,
/// non-consecutive nodes are disjoint. `marker` flags the proper transform
/// of the original fiber, when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveChain {
    pub nodes: Vec<ChainNode>,
    pub marker: Option<usize>,
}

impl CurveChain {
    pub fn new(nodes: Vec<ChainNode>, marker: Option<usize>) -> Self {
        assert!(!nodes.is_empty(), "chain must be nonempty");
        if let Some(i) = marker {
            assert!(i < nodes.len(), "marker out of range");
        }
        CurveChain { nodes, marker }
    }

    /// Chain with the given self-intersections, labeled C0, C1, … and no
    /// marker.
    pub fn from_self_ints(self_ints: &[i64]) -> Self {
        let nodes = self_ints
            .iter()
            .enumerate()
            .map(|(i, &s)| ChainNode::new(format!("C{i}"), int(s)))
            .collect();
        CurveChain::new(nodes, None)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn self_ints(&self) -> Vec<Int> {
        self.nodes.iter().map(|n| n.self_int.clone()).collect()
    }

    pub fn reversed(&self) -> CurveChain {
        let n = self.len();
        CurveChain {
            nodes: self.nodes.iter().rev().cloned().collect(),
            marker: self.marker.map(|i| n - 1 - i),
        }
    }

    fn fresh_label(&self) -> String {
        let mut n = 1usize;
        loop {
            let candidate = format!("E{n}");
            if self.nodes.iter().all(|node| node.label != candidate) {
                return candidate;
            }
            n += 1;
        }
    }
}

/// Where to blow up: a general point of an end curve, or the intersection
/// point of nodes i and i+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlowupLocus {
    OnCurve(usize),
    AtIntersection(usize),
}

/// The chain replacing a fiber with parabolic weight p/q:
/// self-intersections [−e₁, …, −e_k, −1, −e′_l, …, −e′₁] with
/// [eᵢ] = hj_expand(p, q) and [e′ᵢ] = hj_expand(q−p, q). The leftmost node
/// is the fiber's proper transform and carries the marker.
pub fn blowup_chain(p: &Int, q: &Int) -> Result<CurveChain, ChainError> {
    let invalid = || ChainError::InvalidFraction {
        p: p.clone(),
        q: q.clone(),
    };
    let left = hj_expand(p, q).map_err(|_| invalid())?;
    let right = hj_expand(&(q - p), q).map_err(|_| invalid())?;
    let mut nodes = Vec::with_capacity(left.len() + right.len() + 1);
    for (i, e) in left.digits().iter().enumerate() {
        let label = if i == 0 {
            "F".to_string()
        } else {
            format!("E{}", i + 1)
        };
        nodes.push(ChainNode::new(label, -e));
    }
    nodes.push(ChainNode::new("S", -Int::one()));
    let l = right.len();
    for (j, e) in right.digits().iter().rev().enumerate() {
        // right-hand digits appear reversed: −e′_l first, −e′_1 last
        nodes.push(ChainNode::new(format!("Ep{}", l - j), -e));
    }
    Ok(CurveChain::new(nodes, Some(0)))
}

/// One blow-up move. `OnCurve(i)` is only legal at a chain end (a blow-up
/// at a general interior point would leave the path category): the end
/// curve drops by 1 and a new −1 curve is appended there.
/// `AtIntersection(i)` blows up the point where nodes i and i+1 meet: both
/// drop by 1 and a −1 curve is inserted between them.
pub fn blowup_step(chain: &CurveChain, locus: BlowupLocus) -> Result<CurveChain, ChainError> {
    let n = chain.len();
    let bad = |reason: &str| ChainError::BadLocus {
        len: n,
        reason: reason.to_string(),
    };
    let mut out = chain.clone();
    let fresh = ChainNode::new(out.fresh_label(), -Int::one());
    match locus {
        BlowupLocus::OnCurve(i) => {
            if i >= n {
                return Err(bad("index out of range"));
            }
            if i != 0 && i != n - 1 {
                return Err(bad("free blow-up only allowed at a chain end"));
            }
            out.nodes[i].self_int -= 1;
            if i == 0 && n > 1 {
                out.nodes.insert(0, fresh);
                out.marker = out.marker.map(|m| m + 1);
            } else {
                out.nodes.push(fresh);
            }
        }
        BlowupLocus::AtIntersection(i) => {
            if i + 1 >= n {
                return Err(bad("no intersection at this index"));
            }
            out.nodes[i].self_int -= 1;
            out.nodes[i + 1].self_int -= 1;
            out.nodes.insert(i + 1, fresh);
            if let Some(m) = out.marker {
                if m > i {
                    out.marker = Some(m + 1);
                }
            }
        }
    }
    Ok(out)
}

/// Contracts the −1 curve at index i, adding +1 to each neighbor.
pub fn blowdown_step(chain: &CurveChain, i: usize) -> Result<CurveChain, ChainError> {
    let n = chain.len();
    if i >= n {
        return Err(ChainError::BadLocus {
            len: n,
            reason: "index out of range".to_string(),
        });
    }
    if n == 1 {
        return Err(ChainError::LastCurve);
    }
    if chain.nodes[i].self_int != -Int::one() {
        return Err(ChainError::NotMinusOne(i, chain.nodes[i].self_int.clone()));
    }
    let mut out = chain.clone();
    if i > 0 {
        out.nodes[i - 1].self_int += 1;
    }
    if i + 1 < n {
        out.nodes[i + 1].self_int += 1;
    }
    out.nodes.remove(i);
    out.marker = match out.marker {
        Some(m) if m == i => None,
        Some(m) if m > i => Some(m - 1),
        other => other,
    };
    Ok(out)
}

/// Contracts −1 curves (leftmost first) until none remain or a single curve
/// is left; returns the minimal chain and the number of contractions.
pub fn contract_to_minimal(chain: &CurveChain) -> (CurveChain, usize) {
    let mut current = chain.clone();
    let mut count = 0;
    while current.len() >= 2 {
        let pos = current
            .nodes
            .iter()
            .position(|node| node.self_int == -Int::one());
        match pos {
            Some(i) => {
                current = blowdown_step(&current, i).expect("position found is a -1 curve");
                count += 1;
            }
            None => break,
        }
    }
    (current, count)
}
