//! Intersection forms on curve configurations and the exact symbolic
//! solution of Q·C = I for the Kähler class, plus the endpoint
//! (Gauss-Bonnet) integrals and the built-in worked examples.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::chains::{blowup_chain, CurveChain};
use crate::exact::SymPoly;
use crate::exact::{int, Int, Rational};
use crate::hjcf::hj_expand;
use crate::surface::{theoremB_construction, ConstructionReport};
use crate::toric::{
    classify_cone, resolve_fan, self_intersections, wps_fan, ConeType, Fan2D, LatticeVector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KahlerError {
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("intersection matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: matrix is {0}x{0} but volume vector has {1} entries")]
    DimensionMismatch(usize, usize),
    #[error("unknown example {0}")]
    UnknownExample(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// A configuration of curves with transverse intersections: nodes carry
/// self-intersections, edges carry intersection multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveConfig {
    pub nodes: Vec<ConfigNode>,
    pub edges: Vec<ConfigEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigNode {
    pub label: String,
    pub self_int: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigEdge {
    pub a: String,
    pub b: String,
    pub multiplicity: Int,
}

impl CurveConfig {
    pub fn new(nodes: Vec<ConfigNode>, edges: Vec<ConfigEdge>) -> Result<Self, KahlerError> {
        let mut labels = HashSet::new();
        for n in &nodes {
            if !labels.insert(n.label.as_str()) {
                return Err(KahlerError::InvalidConfig(format!(
                    "duplicate label {}",
                    n.label
                )));
            }
        }
        for e in &edges {
            if e.a == e.b {
                return Err(KahlerError::InvalidConfig(format!("self-edge at {}", e.a)));
            }
            for l in [&e.a, &e.b] {
                if !labels.contains(l.as_str()) {
                    return Err(KahlerError::UnknownLabel(l.clone()));
                }
            }
            if !e.multiplicity.is_positive() {
                return Err(KahlerError::InvalidConfig(format!(
                    "edge {}-{} has multiplicity {} < 1",
                    e.a, e.b, e.multiplicity
                )));
            }
        }
        Ok(CurveConfig { nodes, edges })
    }

    /// Path configuration from a chain: consecutive curves meet once.
    pub fn from_chain(chain: &CurveChain) -> Self {
        let nodes = chain
            .nodes
            .iter()
            .map(|n| ConfigNode {
                label: n.label.clone(),
                self_int: n.self_int.clone(),
            })
            .collect();
        let edges = chain
            .nodes
            .windows(2)
            .map(|w| ConfigEdge {
                a: w[0].label.clone(),
                b: w[1].label.clone(),
                multiplicity: Int::one(),
            })
            .collect();
        CurveConfig { nodes, edges }
    }

    pub fn labels(&self) -> Vec<String> {
        self.nodes.iter().map(|n| n.label.clone()).collect()
    }
}

/// The intersection form in a chosen basis order: symmetric, diagonal =
/// self-intersections, off-diagonal = edge multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    pub basis: Vec<String>,
    pub entries: Vec<Vec<Int>>,
}

#[allow(non_snake_case)]
pub fn assemble_Q(
    config: &CurveConfig,
    basis_order: &[String],
) -> Result<IntersectionMatrix, KahlerError> {
    let index: HashMap<&str, usize> = basis_order
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    if index.len() != basis_order.len() || basis_order.len() != config.nodes.len() {
        return Err(KahlerError::InvalidConfig(
            "basis order must be a permutation of the labels".to_string(),
        ));
    }
    let n = basis_order.len();
    let mut entries = vec![vec![Int::zero(); n]; n];
    for node in &config.nodes {
        let i = *index
            .get(node.label.as_str())
            .ok_or_else(|| KahlerError::UnknownLabel(node.label.clone()))?;
        entries[i][i] = node.self_int.clone();
    }
    for edge in &config.edges {
        let i = *index
            .get(edge.a.as_str())
            .ok_or_else(|| KahlerError::UnknownLabel(edge.a.clone()))?;
        let j = *index
            .get(edge.b.as_str())
            .ok_or_else(|| KahlerError::UnknownLabel(edge.b.clone()))?;
        entries[i][j] = edge.multiplicity.clone();
        entries[j][i] = edge.multiplicity.clone();
    }
    Ok(IntersectionMatrix {
        basis: basis_order.to_vec(),
        entries,
    })
}

/// Volumes ∫_C ω per curve label.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VolumeAssignment {
    pub values: BTreeMap<String, SymPoly>,
}

impl VolumeAssignment {
    pub fn new(values: BTreeMap<String, SymPoly>) -> Self {
        VolumeAssignment { values }
    }

    pub fn from_pairs<I: IntoIterator<Item = (String, SymPoly)>>(pairs: I) -> Self {
        VolumeAssignment {
            values: pairs.into_iter().collect(),
        }
    }
}

/// The class coefficients C with Q·C = I verified symbolically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerSolution {
    pub basis: Vec<String>,
    pub coefficients: BTreeMap<String, SymPoly>,
    pub det: Int,
    pub residual_checked: bool,
}

/// Fraction-free (Montante/Bareiss) Gauss-Jordan inverse of an integer
/// matrix: returns (det, det·A⁻¹) with every intermediate division exact.
fn bareiss_inverse(a: &[Vec<Int>]) -> Result<(Int, Vec<Vec<Int>>), KahlerError> {
    let n = a.len();
    let mut m: Vec<Vec<Int>> = (0..n)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..n).map(|j| if i == j { Int::one() } else { Int::zero() }));
            row
        })
        .collect();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n {
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(r) = pivot_row else {
            return Err(KahlerError::SingularMatrix);
        };
        if r != k {
            m.swap(r, k);
            sign = -sign;
        }
        let pivot = m[k][k].clone();
        for i in 0..n {
            if i == k {
                continue;
            }
            let factor = m[i][k].clone();
            for j in 0..2 * n {
                let val = (&pivot * &m[i][j] - &factor * &m[k][j]) / &prev;
                m[i][j] = val;
            }
        }
        prev = pivot;
    }
    // After full elimination every diagonal entry equals det up to the row
    // swap sign; the right block is that multiple of the inverse.
    let det = &sign * &m[n - 1][n - 1];
    let mut adj = vec![vec![Int::zero(); n]; n];
    for (i, row) in m.iter().enumerate() {
        let d = &row[i];
        debug_assert!(!d.is_zero());
        for j in 0..n {
            // row i of the augmented block is d·(A⁻¹ row i); rescale to det.
            let num = &det * &row[n + j];
            let (quo, rem) = num_integer::Integer::div_rem(&num, d);
            debug_assert!(rem.is_zero());
            adj[i][j] = quo;
        }
    }
    Ok((det, adj))
}

/// Exact symbolic solve of Q·C = I, one linear solve shared by every
/// monomial of I, with the residual Q·C − I re-checked as a polynomial
/// identity.
pub fn solve_class(
    q: &IntersectionMatrix,
    volumes: &VolumeAssignment,
) -> Result<KahlerSolution, KahlerError> {
    let n = q.basis.len();
    if volumes.values.len() != n {
        return Err(KahlerError::DimensionMismatch(n, volumes.values.len()));
    }
    let mut rhs = Vec::with_capacity(n);
    for label in &q.basis {
        let v = volumes
            .values
            .get(label)
            .ok_or_else(|| KahlerError::UnknownLabel(label.clone()))?;
        rhs.push(v.clone());
    }
    let (det, adj) = bareiss_inverse(&q.entries)?;
    let det_rat = Rational::from_integer(det.clone());
    let mut coefficients = BTreeMap::new();
    let mut solution = Vec::with_capacity(n);
    for i in 0..n {
        let mut c = SymPoly::zero();
        for (j, v) in rhs.iter().enumerate() {
            let w = Rational::from_integer(adj[i][j].clone()) / &det_rat;
            c = c + v.scale(&w);
        }
        solution.push(c.clone());
        coefficients.insert(q.basis[i].clone(), c);
    }
    for i in 0..n {
        let mut acc = SymPoly::zero();
        for j in 0..n {
            acc = acc + solution[j].scale(&Rational::from_integer(q.entries[i][j].clone()));
        }
        let residual = acc - rhs[i].clone();
        assert!(residual.is_zero(), "solver residual must vanish");
    }
    Ok(KahlerSolution {
        basis: q.basis.clone(),
        coefficients,
        det,
        residual_checked: true,
    })
}

/// A = ∫_{S₀} ω = −π·b·χ^orb and B = ∫_S ω = 2π(b−a)/(2rq), as polynomials
/// in the symbols pi, a, b.
pub fn endpoint_integrals(r: &Int, q: &Int, chi_orb: &Rational) -> (SymPoly, SymPoly) {
    let pi_b = SymPoly::symbol("pi") * SymPoly::symbol("b");
    let pi_a = SymPoly::symbol("pi") * SymPoly::symbol("a");
    let a_poly = pi_b.scale(&-chi_orb.clone());
    let w = Rational::new(Int::one(), r * q);
    let b_poly = (pi_b - pi_a).scale(&w);
    (a_poly, b_poly)
}

/// The curve configuration of a resolved fiber of weight p/q attached to
/// the zero section: S₀ meets the first chain curve. S₀'s self-intersection
/// defaults to −(l+1), where l is the length of the dual expansion, and can
/// be overridden.
pub fn standard_fiber_config(
    p: &Int,
    q: &Int,
    s0_self: Option<Int>,
) -> Result<CurveConfig, KahlerError> {
    let chain = blowup_chain(p, q)
        .map_err(|e| KahlerError::InvalidConfig(e.to_string()))?;
    let l = hj_expand(&(q - p), q)
        .map_err(|e| KahlerError::InvalidConfig(e.to_string()))?
        .len();
    let s0 = s0_self.unwrap_or_else(|| -int(l as i64 + 1));
    let mut config = CurveConfig::from_chain(&chain);
    config.nodes.insert(
        0,
        ConfigNode {
            label: "S0".to_string(),
            self_int: s0,
        },
    );
    config.edges.insert(
        0,
        ConfigEdge {
            a: "S0".to_string(),
            b: chain.nodes[0].label.clone(),
            multiplicity: Int::one(),
        },
    );
    Ok(config)
}

/// True iff the per-curve volumes sum to the total, as an exact polynomial
/// identity.
pub fn volume_partition_check(parts: &[SymPoly], total: &SymPoly) -> bool {
    let mut sum = SymPoly::zero();
    for p in parts {
        sum = sum + p.clone();
    }
    (sum - total.clone()).is_zero()
}

/// Report for the blow-up of the projective plane along a chain of three
/// exceptional curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cp2Report {
    pub config: CurveConfig,
    pub q: IntersectionMatrix,
    pub volumes: VolumeAssignment,
    pub solution: KahlerSolution,
}

/// Report for the ruled surface over the torus with one order-3 orbifold
/// point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cp1T2Report {
    pub construction: ConstructionReport,
    pub chain: CurveChain,
    /// Class evaluations [ω]·C per curve, in chain order with S0 first.
    pub evaluations: Vec<(String, SymPoly)>,
}

/// Report for the weighted projective plane with weights (1,2,3).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wps123Report {
    pub fan: Fan2D,
    pub resolved: Fan2D,
    pub self_ints: Vec<(LatticeVector, Int)>,
    /// Cone classification per (counterclockwise-consecutive) ray pair.
    pub singularities: Vec<((LatticeVector, LatticeVector), ConeType)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExampleReport {
    Cp2(Cp2Report),
    Cp1T2(Cp1T2Report),
    Wps123(Wps123Report),
}

pub fn builtin_example(name: &str) -> Result<ExampleReport, KahlerError> {
    match name {
        "cp2" => Ok(ExampleReport::Cp2(cp2_example()?)),
        "cp1t2" => Ok(ExampleReport::Cp1T2(cp1t2_example()?)),
        "wps123" => Ok(ExampleReport::Wps123(wps123_example()?)),
        other => Err(KahlerError::UnknownExample(other.to_string())),
    }
}

fn sym(name: &str) -> SymPoly {
    SymPoly::symbol(name)
}

fn cp2_example() -> Result<Cp2Report, KahlerError> {
    let nodes = [("H", -2), ("E3", -1), ("E2", -2), ("E1", -2)]
        .iter()
        .map(|&(l, s)| ConfigNode {
            label: l.to_string(),
            self_int: int(s),
        })
        .collect();
    let edges = [("H", "E3"), ("E3", "E2"), ("E2", "E1")]
        .iter()
        .map(|&(a, b)| ConfigEdge {
            a: a.to_string(),
            b: b.to_string(),
            multiplicity: Int::one(),
        })
        .collect();
    let config = CurveConfig::new(nodes, edges)?;
    let basis: Vec<String> = ["H", "E3", "E2", "E1"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let q = assemble_Q(&config, &basis)?;
    let eps2 = sym("eps2");
    let volumes = VolumeAssignment::from_pairs([
        ("H".to_string(), &eps2 * &sym("a3")),
        ("E3".to_string(), sym("a")),
        ("E2".to_string(), &eps2 * &sym("a2")),
        ("E1".to_string(), &eps2 * &sym("a1")),
    ]);
    let solution = solve_class(&q, &volumes)?;
    Ok(Cp2Report {
        config,
        q,
        volumes,
        solution,
    })
}

fn cp1t2_example() -> Result<Cp1T2Report, KahlerError> {
    let construction = theoremB_construction(1, &int(1), &[int(3)])
        .map_err(|e| KahlerError::InvalidConfig(e.to_string()))?;
    let chain = construction.points[0].chain.clone();
    let (a_poly, b_poly) = endpoint_integrals(&int(1), &int(3), &construction.chi_orb);
    let eps2 = sym("eps2");
    let evaluations = vec![
        ("S0".to_string(), a_poly),
        ("F".to_string(), &eps2 * &sym("a1")),
        ("E1".to_string(), &eps2 * &sym("a2")),
        ("E2".to_string(), &eps2 * &sym("a3")),
        ("E3".to_string(), b_poly),
    ];
    Ok(Cp1T2Report {
        construction,
        chain,
        evaluations,
    })
}

fn wps123_example() -> Result<Wps123Report, KahlerError> {
    let fan = wps_fan(&int(1), &int(2), &int(3))
        .map_err(|e| KahlerError::InvalidConfig(e.to_string()))?;
    let resolved = resolve_fan(&fan);
    let self_ints =
        self_intersections(&resolved).map_err(|e| KahlerError::InvalidConfig(e.to_string()))?;
    let singularities = fan
        .cones()
        .into_iter()
        .map(|cone| {
            let ty = classify_cone(&cone);
            ((cone.u().clone(), cone.v().clone()), ty)
        })
        .collect();
    Ok(Wps123Report {
        fan,
        resolved,
        self_ints,
        singularities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn assemble_q_cp2() {
        let rep = cp2_example().unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![-2, 1, 0, 0],
            vec![1, -1, 1, 0],
            vec![0, 1, -2, 1],
            vec![0, 0, 1, -2],
        ];
        for (row, erow) in rep.q.entries.iter().zip(&expect) {
            let got: Vec<i64> = row.iter().map(|v| i64::try_from(v).unwrap()).collect();
            assert_eq!(&got, erow);
        }
    }

    #[test]
    fn assemble_q_single_and_weighted_chain() {
        let config = CurveConfig::new(
            vec![ConfigNode {
                label: "S0".to_string(),
                self_int: int(-1),
            }],
            vec![],
        )
        .unwrap();
        let q = assemble_Q(&config, &labels(&["S0"])).unwrap();
        assert_eq!(q.entries, vec![vec![int(-1)]]);

        let config = standard_fiber_config(&int(1), &int(2), None).unwrap();
        let q = assemble_Q(&config, &config.labels()).unwrap();
        let got: Vec<Vec<i64>> = q
            .entries
            .iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect();
        assert_eq!(
            got,
            vec![
                vec![-2, 1, 0, 0],
                vec![1, -2, 1, 0],
                vec![0, 1, -1, 1],
                vec![0, 0, 1, -2],
            ]
        );
    }

    #[test]
    fn solve_small_systems() {
        let q = IntersectionMatrix {
            basis: labels(&["C"]),
            entries: vec![vec![int(-1)]],
        };
        let volumes = VolumeAssignment::from_pairs([("C".to_string(), sym("x"))]);
        let sol = solve_class(&q, &volumes).unwrap();
        assert_eq!(sol.coefficients["C"], -sym("x"));

        let q = IntersectionMatrix {
            basis: labels(&["A", "B"]),
            entries: vec![vec![int(-2), int(1)], vec![int(1), int(-1)]],
        };
        let volumes = VolumeAssignment::from_pairs([
            ("A".to_string(), SymPoly::constant(rat(1, 1))),
            ("B".to_string(), SymPoly::zero()),
        ]);
        let sol = solve_class(&q, &volumes).unwrap();
        assert_eq!(sol.coefficients["A"], SymPoly::constant(rat(-1, 1)));
        assert_eq!(sol.coefficients["B"], SymPoly::constant(rat(-1, 1)));
        assert_eq!(sol.det, int(1));
    }

    #[test]
    fn solve_detects_singular_and_mismatch() {
        let q = IntersectionMatrix {
            basis: labels(&["A", "B"]),
            entries: vec![vec![int(1), int(1)], vec![int(1), int(1)]],
        };
        let volumes = VolumeAssignment::from_pairs([
            ("A".to_string(), SymPoly::zero()),
            ("B".to_string(), SymPoly::zero()),
        ]);
        assert!(matches!(
            solve_class(&q, &volumes),
            Err(KahlerError::SingularMatrix)
        ));
        let short = VolumeAssignment::from_pairs([("A".to_string(), SymPoly::zero())]);
        assert!(matches!(
            solve_class(&q, &short),
            Err(KahlerError::DimensionMismatch(2, 1))
        ));
    }

    #[test]
    fn cp2_class_coefficients() {
        let rep = cp2_example().unwrap();
        let expect = [
            ("H", "3*a + 1*eps2*a3 + 2*eps2*a2 + 1*eps2*a1"),
            ("E3", "6*a + 3*eps2*a3 + 4*eps2*a2 + 2*eps2*a1"),
            ("E2", "4*a + 2*eps2*a3 + 2*eps2*a2 + 1*eps2*a1"),
            ("E1", "2*a + 1*eps2*a3 + 1*eps2*a2"),
        ];
        for (label, text) in expect {
            assert_eq!(
                rep.solution.coefficients[label],
                SymPoly::parse(text).unwrap(),
                "coefficient of {label}"
            );
        }
        assert!(rep.solution.residual_checked);
    }

    #[test]
    fn endpoint_integral_examples() {
        let (a, b) = endpoint_integrals(&int(1), &int(3), &rat(-2, 3));
        assert_eq!(a, SymPoly::parse("2/3*pi*b").unwrap());
        assert_eq!(b, SymPoly::parse("1/3*pi*b + -1/3*pi*a").unwrap());

        let subs: BTreeMap<String, Rational> =
            [("a".to_string(), rat(5, 1)), ("b".to_string(), rat(5, 1)),
             ("pi".to_string(), rat(1, 1))]
                .into_iter()
                .collect();
        assert_eq!(b.eval(&subs).unwrap(), rat(0, 1));

        let (a, b) = endpoint_integrals(&int(2), &int(5), &rat(-1, 1));
        assert_eq!(a, SymPoly::parse("1*pi*b").unwrap());
        assert_eq!(b, SymPoly::parse("1/10*pi*b + -1/10*pi*a").unwrap());
    }

    #[test]
    fn cp1t2_report_values() {
        let rep = cp1t2_example().unwrap();
        let ints: Vec<i64> = rep
            .chain
            .self_ints()
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect();
        assert_eq!(ints, vec![-2, -2, -1, -3]);
        let map: BTreeMap<_, _> = rep.evaluations.iter().cloned().collect();
        assert_eq!(map["S0"], SymPoly::parse("2/3*pi*b").unwrap());
        assert_eq!(map["E3"], SymPoly::parse("1/3*pi*b + -1/3*pi*a").unwrap());
        assert_eq!(map["F"], SymPoly::parse("1*eps2*a1").unwrap());
        assert_eq!(rep.construction.points[0].p, int(2));
        assert_eq!(rep.construction.bundle_degree, int(0));
    }

    #[test]
    fn wps123_report_values() {
        let rep = wps123_example().unwrap();
        let mut rays = rep.fan.rays().to_vec();
        rays.sort();
        let mut expected = vec![
            LatticeVector::from_i64(1, 0),
            LatticeVector::from_i64(0, 1),
            LatticeVector::from_i64(-2, -3),
        ];
        expected.sort();
        assert_eq!(rays, expected);
        let types: Vec<&ConeType> = rep.singularities.iter().map(|(_, t)| t).collect();
        assert!(types.contains(&&ConeType::Smooth));
        assert!(types.contains(&&ConeType::Quotient {
            p: int(1),
            q: int(2)
        }));
        assert!(types.contains(&&ConeType::Quotient {
            p: int(2),
            q: int(3)
        }));
    }

    #[test]
    fn volume_partition_examples() {
        let a1 = sym("a1");
        let a2 = sym("a2");
        let total = &a1 + &a2;
        assert!(volume_partition_check(&[a1.clone(), a2.clone()], &total));
        assert!(!volume_partition_check(&[a1.clone()], &total));

        let rep = cp2_example().unwrap();
        let eps2 = sym("eps2");
        let parts: Vec<SymPoly> = ["H", "E2", "E1"]
            .iter()
            .map(|l| rep.volumes.values[*l].clone())
            .collect();
        let total = &eps2 * &(&(&sym("a1") + &sym("a2")) + &sym("a3"));
        assert!(volume_partition_check(&parts, &total));
    }

    #[test]
    fn unknown_example_is_rejected() {
        assert!(matches!(
            builtin_example("nope"),
            Err(KahlerError::UnknownExample(_))
        ));
    }

    #[test]
    fn det_invariant_under_permutation() {
        let config = standard_fiber_config(&int(2), &int(5), None).unwrap();
        let base = config.labels();
        let q1 = assemble_Q(&config, &base).unwrap();
        let d1 = bareiss_inverse(&q1.entries).unwrap().0;
        let mut permuted = base.clone();
        permuted.reverse();
        let q2 = assemble_Q(&config, &permuted).unwrap();
        let d2 = bareiss_inverse(&q2.entries).unwrap().0;
        assert_eq!(d1.abs(), d2.abs());
    }
}
