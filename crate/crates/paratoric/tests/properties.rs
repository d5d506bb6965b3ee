//! Randomized invariants: continued fractions, chain moves, cone
//! classification under unimodular maps, fan identities, symbolic
//! polynomial ring laws, and solver behavior.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use paratoric::chains::{
    blowdown_step, blowup_chain, blowup_step, BlowupLocus, ChainNode, CurveChain,
};
use paratoric::exact::{int, Int, Rational, SymPoly};
use paratoric::hjcf::{hj_evaluate, hj_expand};
use paratoric::kahler::{assemble_Q, solve_class, CurveConfig, KahlerError, VolumeAssignment};
use paratoric::surface::{slope, ParabolicMark, ParabolicRuledSurface, ParabolicStructure,
    OrbifoldRiemannSurface, Section};
use paratoric::toric::{
    classify_cone, resolve_fan, self_intersections, singularity_cone, wps_fan, Cone2D, ConeType,
    CyclicGroupSpec, LatticeVector,
};

fn coprime_fraction() -> impl Strategy<Value = (i64, i64)> {
    (2i64..=400).prop_flat_map(|q| (1i64..q, Just(q))).prop_map(|(p, q)| {
        let g = num_integer::gcd(p, q);
        (p / g, q / g)
    })
}

fn inverse_mod(p: i64, q: i64) -> i64 {
    let ext = int(p).extended_gcd(&int(q));
    i64::try_from(&ext.x.mod_floor(&int(q))).unwrap()
}

/// Random unimodular matrix as a short product of elementary matrices.
fn unimodular() -> impl Strategy<Value = [i64; 4]> {
    (
        proptest::collection::vec((-3i64..=3, any::<bool>()), 0..5),
        any::<bool>(),
    )
        .prop_map(|(shears, flip)| {
            let (mut a, mut b, mut c, mut d) = (1i64, 0, 0, 1);
            for (k, upper) in shears {
                if upper {
                    // [[1,k],[0,1]] on the left
                    a += k * c;
                    b += k * d;
                } else {
                    c += k * a;
                    d += k * b;
                }
            }
            if flip {
                std::mem::swap(&mut a, &mut c);
                std::mem::swap(&mut b, &mut d);
            }
            [a, b, c, d]
        })
}

fn apply(m: &[i64; 4], v: &LatticeVector) -> LatticeVector {
    LatticeVector::new(
        int(m[0]) * &v.x + int(m[1]) * &v.y,
        int(m[2]) * &v.x + int(m[3]) * &v.y,
    )
}

proptest! {
    #[test]
    fn hj_roundtrip((p, q) in coprime_fraction()) {
        if p == q { return Ok(()); }
        let exp = hj_expand(&int(p), &int(q)).unwrap();
        prop_assert!(exp.digits().iter().all(|d| *d >= int(2)));
        prop_assert_eq!(hj_evaluate(&exp), (int(p), int(q)));
    }

    #[test]
    fn chain_length_identity((p, q) in coprime_fraction()) {
        if p == q { return Ok(()); }
        let chain = blowup_chain(&int(p), &int(q)).unwrap();
        let k = hj_expand(&int(p), &int(q)).unwrap().len();
        let l = hj_expand(&int(q - p), &int(q)).unwrap().len();
        prop_assert_eq!(chain.len(), k + l + 1);
    }

    #[test]
    fn blowdown_undoes_blowup(
        self_ints in proptest::collection::vec(-5i64..=2, 1..8),
        end in any::<bool>(),
        at in 0usize..8,
    ) {
        let chain = CurveChain::from_self_ints(&self_ints);
        let n = chain.len();
        let locus = if end {
            BlowupLocus::OnCurve(if at % 2 == 0 { 0 } else { n - 1 })
        } else if n >= 2 {
            BlowupLocus::AtIntersection(at % (n - 1))
        } else {
            BlowupLocus::OnCurve(0)
        };
        let blown = blowup_step(&chain, locus).unwrap();
        let new_index = blown
            .nodes
            .iter()
            .enumerate()
            .position(|(i, node)| {
                node.self_int == -Int::one()
                    && chain.nodes.iter().map(|n| &n.label).all(|l| *l != node.label)
                    && blown.nodes[..i].iter().chain(&blown.nodes[i + 1..]).count() == chain.len()
            })
            .unwrap();
        let back = blowdown_step(&blown, new_index).unwrap();
        prop_assert_eq!(back.self_ints(), chain.self_ints());
    }

    #[test]
    fn classify_is_unimodular_invariant((p, q) in coprime_fraction(), m in unimodular()) {
        if p == q { return Ok(()); }
        let spec = CyclicGroupSpec::new(int(p), int(q)).unwrap();
        let cone = singularity_cone(&spec);
        let image = Cone2D::new(apply(&m, cone.u()), apply(&m, cone.v())).unwrap();
        prop_assert_eq!(classify_cone(&image), ConeType::Quotient { p: int(p), q: int(q) });
        // Swapping the two rays reads the resolution chain backwards, which
        // inverts p modulo q.
        let swapped = Cone2D::new(apply(&m, cone.v()), apply(&m, cone.u())).unwrap();
        prop_assert_eq!(
            classify_cone(&swapped),
            ConeType::Quotient { p: int(inverse_mod(p, q)), q: int(q) }
        );
    }

    #[test]
    fn twelve_minus_3n(weights in (1i64..=6, 1i64..=6, 1i64..=6)) {
        let (a, b, c) = weights;
        if num_integer::gcd(a, b) != 1
            || num_integer::gcd(b, c) != 1
            || num_integer::gcd(a, c) != 1
        {
            return Ok(());
        }
        let resolved = resolve_fan(&wps_fan(&int(a), &int(b), &int(c)).unwrap());
        let selfints = self_intersections(&resolved).unwrap();
        let sum: Int = selfints.iter().map(|(_, s)| s.clone()).sum();
        prop_assert_eq!(sum, int(12 - 3 * selfints.len() as i64));
    }

    #[test]
    fn sympoly_ring_laws(
        ta in proptest::collection::vec(("[a-c]{1}", -9i64..=9, 1i64..=9), 0..5),
        tb in proptest::collection::vec(("[a-c]{1}", -9i64..=9, 1i64..=9), 0..5),
        tc in proptest::collection::vec(("[a-c]{1}", -9i64..=9, 1i64..=9), 0..5),
    ) {
        let build = |terms: &[(String, i64, i64)]| {
            let mut acc = SymPoly::zero();
            for (sym, num, den) in terms {
                acc = acc + SymPoly::symbol(sym).scale(&Rational::new(int(*num), int(*den)));
            }
            acc
        };
        let (a, b, c) = (build(&ta), build(&tb), build(&tc));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, SymPoly::zero());
        let text = a.to_string();
        prop_assert_eq!(SymPoly::parse(&text).unwrap(), a);
    }

    #[test]
    fn slope_difference_identities(
        degree in -6i64..=6,
        weights in proptest::collection::vec((1i64..=9, 2i64..=10), 0..5),
    ) {
        let marks: Vec<ParabolicMark> = weights
            .iter()
            .enumerate()
            .filter(|(_, (num, den))| num < den)
            .map(|(i, (num, den))| ParabolicMark {
                base_label: format!("A{i}"),
                section: Section::Infinity,
                weight: Rational::new(int(*num), int(*den)),
            })
            .collect();
        let total: Rational = marks.iter().map(|m| m.weight.clone()).sum();
        let m = ParabolicRuledSurface::new(
            OrbifoldRiemannSurface::smooth(0),
            int(degree),
            None,
            ParabolicStructure::new(marks).unwrap(),
        )
        .unwrap();
        let d = Rational::from_integer(int(degree));
        prop_assert_eq!(slope(&m, Section::Zero) - &total, d.clone());
        prop_assert_eq!(slope(&m, Section::Infinity) + &total, -d);
    }

    #[test]
    fn solver_agrees_with_back_multiplication(
        self_ints in proptest::collection::vec(-4i64..=1, 1..7),
    ) {
        let nodes: Vec<ChainNode> = self_ints
            .iter()
            .enumerate()
            .map(|(i, &s)| ChainNode::new(format!("C{i}"), int(s)))
            .collect();
        let chain = CurveChain::new(nodes, None);
        let config = CurveConfig::from_chain(&chain);
        let basis = config.labels();
        let q = assemble_Q(&config, &basis).unwrap();
        let volumes = VolumeAssignment::from_pairs(
            basis.iter().enumerate().map(|(i, l)| (l.clone(), SymPoly::symbol(&format!("v{i}")))),
        );
        match solve_class(&q, &volumes) {
            Ok(sol) => {
                prop_assert!(sol.residual_checked);
                prop_assert!(!sol.det.is_zero());
                for (i, _) in basis.iter().enumerate() {
                    let mut acc = SymPoly::zero();
                    for (j, l2) in basis.iter().enumerate() {
                        acc = acc + sol.coefficients[l2]
                            .scale(&Rational::from_integer(q.entries[i][j].clone()));
                    }
                    prop_assert_eq!(acc, volumes.values[&basis[i]].clone());
                }
            }
            Err(KahlerError::SingularMatrix) => {}
            Err(e) => prop_assert!(false, "unexpected error: {e}"),
        }
    }

    #[test]
    fn resolution_digits_on_random_cones((p, q) in coprime_fraction(), m in unimodular()) {
        if p == q { return Ok(()); }
        let spec = CyclicGroupSpec::new(int(p), int(q)).unwrap();
        let cone = singularity_cone(&spec);
        let image = Cone2D::new(apply(&m, cone.u()), apply(&m, cone.v())).unwrap();
        let inserted = paratoric::toric::resolve_cone(&image);
        prop_assert_eq!(inserted.len(), hj_expand(&int(p), &int(q)).unwrap().len());
        let mut rays = vec![image.u().clone()];
        rays.extend(inserted);
        rays.push(image.v().clone());
        for w in rays.windows(2) {
            prop_assert!(paratoric::toric::det(&w[0], &w[1]).abs().is_one());
        }
    }
}

#[test]
fn run_of_twos() {
    for k in 1i64..=50 {
        let exp = hj_expand(&int(k), &int(k + 1)).unwrap();
        assert_eq!(exp.digits(), vec![int(2); k as usize]);
    }
}

#[test]
fn sympoly_eval_consistency() {
    let poly = SymPoly::parse("3*a + 1*eps2*a3 + 2*eps2*a2 + 1*eps2*a1").unwrap();
    let assignment: BTreeMap<String, Rational> = [
        ("a", (2, 1)),
        ("a1", (1, 5)),
        ("a2", (1, 5)),
        ("a3", (3, 5)),
        ("eps2", (1, 10)),
    ]
    .into_iter()
    .map(|(k, (n, d))| (k.to_string(), Rational::new(int(n), int(d))))
    .collect();
    let value = poly.eval(&assignment).unwrap();
    assert_eq!(value, Rational::new(int(306), int(50)));
}
