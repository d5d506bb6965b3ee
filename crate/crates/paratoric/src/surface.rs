//! Orbifold Riemann surfaces, parabolic ruled surfaces, the arithmetic
//! behind the model construction (p_j, n_j, bundle degree, singularity
//! types), slope and instability checks, and the degree-realization recipe.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::chains::{blowup_chain, CurveChain};
use crate::exact::{int, rat_int, Int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("degree {d} is not realizable for genus {g}")]
    UnsupportedDegree { g: u32, d: Int },
    #[error("degenerate configuration: the recipe yields no marked points")]
    Degenerate,
    #[error("invalid surface data: {0}")]
    InvalidData(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldPoint {
    pub label: String,
    pub order: Int,
}

/// A closed Riemann surface of genus g with marked points of orders ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldRiemannSurface {
    pub genus: u32,
    pub points: Vec<OrbifoldPoint>,
}

impl OrbifoldRiemannSurface {
    pub fn new(genus: u32, points: Vec<OrbifoldPoint>) -> Result<Self, SurfaceError> {
        let mut labels = std::collections::HashSet::new();
        for pt in &points {
            if pt.order < int(2) {
                return Err(SurfaceError::InvalidData(format!(
                    "point {} has order {} < 2",
                    pt.label, pt.order
                )));
            }
            if !labels.insert(pt.label.clone()) {
                return Err(SurfaceError::InvalidData(format!(
                    "duplicate point label {}",
                    pt.label
                )));
            }
        }
        Ok(OrbifoldRiemannSurface { genus, points })
    }

    pub fn smooth(genus: u32) -> Self {
        OrbifoldRiemannSurface {
            genus,
            points: Vec::new(),
        }
    }
}

/// χ^orb = 2 − 2g − ∑(1 − 1/q_j), exactly.
pub fn euler_orb(s: &OrbifoldRiemannSurface) -> Rational {
    let mut chi = rat_int(2 - 2 * i64::from(s.genus));
    for pt in &s.points {
        chi -= Rational::one() - Rational::new(Int::one(), pt.order.clone());
    }
    chi
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    Zero,
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicMark {
    pub base_label: String,
    pub section: Section,
    pub weight: Rational,
}

/// One mark per chosen fiber, each with a weight in (0,1), sitting on the
/// zero or infinity section.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParabolicStructure {
    pub marks: Vec<ParabolicMark>,
}

impl ParabolicStructure {
    pub fn new(marks: Vec<ParabolicMark>) -> Result<Self, SurfaceError> {
        let mut labels = std::collections::HashSet::new();
        for m in &marks {
            if !m.weight.is_positive() || m.weight >= Rational::one() {
                return Err(SurfaceError::InvalidData(format!(
                    "weight {} at {} is not in (0,1)",
                    m.weight, m.base_label
                )));
            }
            if !labels.insert(m.base_label.clone()) {
                return Err(SurfaceError::InvalidData(format!(
                    "duplicate mark label {}",
                    m.base_label
                )));
            }
        }
        Ok(ParabolicStructure { marks })
    }
}

/// Formal description of the line bundle: L = K^r ⊗_j [A_j]^{r−n_j}, with
/// an optional flat twist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleSpec {
    pub r: Int,
    pub n: Vec<Int>,
    pub flat_twist: bool,
}

/// The ruled surface P(O ⊕ L) over a smooth base with a parabolic
/// structure; d = deg L.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicRuledSurface {
    pub base: OrbifoldRiemannSurface,
    pub bundle_degree: Int,
    pub bundle_spec: Option<BundleSpec>,
    pub parabolic: ParabolicStructure,
}

impl ParabolicRuledSurface {
    pub fn new(
        base: OrbifoldRiemannSurface,
        bundle_degree: Int,
        bundle_spec: Option<BundleSpec>,
        parabolic: ParabolicStructure,
    ) -> Result<Self, SurfaceError> {
        if let Some(spec) = &bundle_spec {
            let chi = int(2 - 2 * i64::from(base.genus));
            let mut expected = -(&spec.r * chi);
            for n in &spec.n {
                expected += &spec.r - n;
            }
            if expected != bundle_degree {
                return Err(SurfaceError::InvalidData(format!(
                    "bundle degree {bundle_degree} does not match the spec value {expected}"
                )));
            }
        }
        Ok(ParabolicRuledSurface {
            base,
            bundle_degree,
            bundle_spec,
            parabolic,
        })
    }
}

/// Per-point data of a model construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionPoint {
    pub label: String,
    pub q: Int,
    pub p: Int,
    pub n: Int,
    /// α_j = p_j / q_j.
    pub alpha: Rational,
    /// Singularity type A_{p,q} over the zero section.
    pub sing_zero: (Int, Int),
    /// Singularity type A_{q−p,q} over the infinity section.
    pub sing_infinity: (Int, Int),
    pub chain: CurveChain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub genus: u32,
    pub r: Int,
    pub points: Vec<ConstructionPoint>,
    pub chi_orb: Rational,
    pub bundle_degree: Int,
}

impl ConstructionReport {
    /// The ruled surface with all marks on the infinity section and weights
    /// α_j = p_j/q_j.
    pub fn parabolic_surface(&self) -> ParabolicRuledSurface {
        let marks = self
            .points
            .iter()
            .map(|pt| ParabolicMark {
                base_label: pt.label.clone(),
                section: Section::Infinity,
                weight: pt.alpha.clone(),
            })
            .collect();
        let spec = BundleSpec {
            r: self.r.clone(),
            n: self.points.iter().map(|pt| pt.n.clone()).collect(),
            flat_twist: false,
        };
        ParabolicRuledSurface::new(
            OrbifoldRiemannSurface::smooth(self.genus),
            self.bundle_degree.clone(),
            Some(spec),
            ParabolicStructure::new(marks).expect("weights p/q lie in (0,1)"),
        )
        .expect("degree formula holds by construction")
    }

    pub fn orbifold_base(&self) -> OrbifoldRiemannSurface {
        OrbifoldRiemannSurface::new(
            self.genus,
            self.points
                .iter()
                .map(|pt| OrbifoldPoint {
                    label: pt.label.clone(),
                    order: pt.q.clone(),
                })
                .collect(),
        )
        .expect("orders are at least 3")
    }
}

/// Runs the model construction: for each order q_j, p_j ≡ −r (mod q_j)
/// normalized to (0, q_j), n_j = (p_j + r)/q_j, bundle degree
/// d = r(2g−2) + ∑(r − n_j), singularity pair (A_{p_j,q_j}, A_{q_j−p_j,q_j})
/// and the blow-up chain of weight p_j/q_j.
#[allow(non_snake_case)]
pub fn theoremB_construction(
    g: u32,
    r: &Int,
    orders: &[Int],
) -> Result<ConstructionReport, SurfaceError> {
    if !r.is_positive() {
        return Err(SurfaceError::HypothesisViolation(format!(
            "r = {r} must be at least 1"
        )));
    }
    let mut points = Vec::with_capacity(orders.len());
    for (j, q) in orders.iter().enumerate() {
        if *q < int(3) {
            return Err(SurfaceError::HypothesisViolation(format!(
                "order q_{} = {q} is below 3",
                j + 1
            )));
        }
        if !q.gcd(r).is_one() {
            return Err(SurfaceError::HypothesisViolation(format!(
                "gcd(q_{} = {q}, r = {r}) is not 1",
                j + 1
            )));
        }
        let p = (-r).mod_floor(q);
        debug_assert!(p.is_positive() && p < *q);
        let n = (&p + r) / q;
        debug_assert_eq!(&(&n * q), &(&p + r));
        let label = format!("A{}", j + 1);
        let chain = blowup_chain(&p, q).expect("p/q is a proper fraction");
        points.push(ConstructionPoint {
            label,
            q: q.clone(),
            p: p.clone(),
            n,
            alpha: Rational::new(p.clone(), q.clone()),
            sing_zero: (p.clone(), q.clone()),
            sing_infinity: (q - &p, q.clone()),
            chain,
        });
    }
    let base = OrbifoldRiemannSurface::new(
        g,
        points
            .iter()
            .map(|pt| OrbifoldPoint {
                label: pt.label.clone(),
                order: pt.q.clone(),
            })
            .collect(),
    )?;
    let chi_orb = euler_orb(&base);
    if !chi_orb.is_negative() {
        return Err(SurfaceError::HypothesisViolation(format!(
            "orbifold Euler characteristic {chi_orb} is not negative"
        )));
    }
    let mut degree = r * int(2 * i64::from(g) - 2);
    for pt in &points {
        degree += r - &pt.n;
    }
    Ok(ConstructionReport {
        genus: g,
        r: r.clone(),
        points,
        chi_orb,
        bundle_degree: degree,
    })
}

/// Parabolic slope of the zero or infinity section:
/// μ(S) = S² + ∑_{marks off S} α_j − ∑_{marks on S} α_j, with S₀² = d and
/// S∞² = −d.
pub fn slope(m: &ParabolicRuledSurface, section: Section) -> Rational {
    let d = Rational::from_integer(m.bundle_degree.clone());
    let mut mu = match section {
        Section::Zero => d,
        Section::Infinity => -d,
    };
    for mark in &m.parabolic.marks {
        if mark.section == section {
            mu -= &mark.weight;
        } else {
            mu += &mark.weight;
        }
    }
    mu
}

/// The canonical sections with non-positive slope. An empty report does not
/// certify stability: only the zero and infinity sections are examined.
pub fn instability_report(m: &ParabolicRuledSurface) -> Vec<(Section, Rational)> {
    [Section::Zero, Section::Infinity]
        .into_iter()
        .filter_map(|s| {
            let mu = slope(m, s);
            if mu.is_positive() {
                None
            } else {
                Some((s, mu))
            }
        })
        .collect()
}

/// Deterministic realization of degree d ≥ 0 over genus g with order-3
/// points: g = 0 uses r = 2 and s = 4 + d points; g = 1 uses r = 2 and
/// s = d points (d = 0 is degenerate); g ≥ 2 uses r = 1, s = 1 when
/// d = 2g−2 and r = 2, s = d − (4g−4) when d ≥ 4g−3.
pub fn realize_degree(g: u32, d: &Int) -> Result<ConstructionReport, SurfaceError> {
    let unsupported = || SurfaceError::UnsupportedDegree {
        g,
        d: d.clone(),
    };
    if d.is_negative() {
        return Err(unsupported());
    }
    let (r, s): (Int, Int) = match g {
        0 => (int(2), int(4) + d),
        1 => {
            if d.is_zero() {
                return Err(SurfaceError::Degenerate);
            }
            (int(2), d.clone())
        }
        _ => {
            let gg = i64::from(g);
            if *d == int(2 * gg - 2) {
                (int(1), int(1))
            } else if *d >= int(4 * gg - 3) {
                (int(2), d - int(4 * gg - 4))
            } else {
                return Err(unsupported());
            }
        }
    };
    let s = usize::try_from(&s).map_err(|_| unsupported())?;
    let orders = vec![int(3); s];
    let report = theoremB_construction(g, &r, &orders)?;
    debug_assert_eq!(&report.bundle_degree, d);
    Ok(report)
}
