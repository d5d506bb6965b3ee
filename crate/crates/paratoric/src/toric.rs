//! 2D lattice cones and fans: cyclic quotient cone classification, minimal
//! resolution, weighted projective fans and self-intersection extraction.
//!
//! All orientation decisions use exact integer cross products. The normative
//! definition of the resolution is the convex-hull boundary of the nonzero
//! lattice points of the cone; continued fractions are the fast path, and
//! the test suite checks the two against each other.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{int, Int};
use crate::hjcf::{hj_expand, HJExpansion};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("degenerate cone: rays {0} and {1} are linearly dependent")]
    DegenerateCone(LatticeVector, LatticeVector),
    #[error("ray {0} is not a primitive nonzero lattice vector")]
    NotPrimitive(LatticeVector),
    #[error("duplicate ray {0} in fan")]
    DuplicateRay(LatticeVector),
    #[error("fan is not complete")]
    NotComplete,
    #[error("fan is not smooth: cone ({0}, {1}) has determinant {2}")]
    NotSmooth(LatticeVector, LatticeVector, Int),
    #[error("invalid weighted projective weights ({0}, {1}, {2}): need positive pairwise coprime integers")]
    InvalidWeights(Int, Int, Int),
    #[error("invalid cyclic group data ({p}, {q}): need 0 < p < q with gcd(p,q) = 1")]
    InvalidGroupSpec { p: Int, q: Int },
}

/// A point of ℤ²; fan rays are additionally primitive and nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub x: Int,
    pub y: Int,
}

impl LatticeVector {
    pub fn new(x: Int, y: Int) -> Self {
        LatticeVector { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        LatticeVector::new(int(x), int(y))
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.x.gcd(&self.y).is_one()
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, c: &Int) -> LatticeVector {
        LatticeVector::new(&self.x * c, &self.y * c)
    }
}

impl std::fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Exact cross product u.x·v.y − u.y·v.x.
pub fn det(u: &LatticeVector, v: &LatticeVector) -> Int {
    &u.x * &v.y - &u.y * &v.x
}

fn exact_div(num: &Int, den: &Int) -> Int {
    let (quo, rem) = num.div_rem(den);
    debug_assert!(rem.is_zero());
    quo
}

/// Integer 2×2 matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Mat2 {
    a: Int,
    b: Int,
    c: Int,
    d: Int,
}

impl Mat2 {
    fn apply(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector::new(
            &self.a * &v.x + &self.b * &v.y,
            &self.c * &v.x + &self.d * &v.y,
        )
    }

    fn det(&self) -> Int {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Inverse of a determinant ±1 matrix.
    fn inverse_unimodular(&self) -> Mat2 {
        let s = self.det();
        debug_assert!(s.abs().is_one());
        Mat2 {
            a: &self.d * &s,
            b: -(&self.b * &s),
            c: -(&self.c * &s),
            d: &self.a * &s,
        }
    }

    fn compose(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

/// A strictly convex two-dimensional lattice cone, stored with the rays in
/// the order they were given. Orientation is handled internally, so both
/// clockwise and counterclockwise ray pairs are accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone2D {
    u: LatticeVector,
    v: LatticeVector,
}

impl Cone2D {
    pub fn new(u: LatticeVector, v: LatticeVector) -> Result<Self, ToricError> {
        for r in [&u, &v] {
            if !r.is_primitive() {
                return Err(ToricError::NotPrimitive(r.clone()));
            }
        }
        if det(&u, &v).is_zero() {
            return Err(ToricError::DegenerateCone(u, v));
        }
        Ok(Cone2D { u, v })
    }

    pub fn from_i64(u: (i64, i64), v: (i64, i64)) -> Result<Self, ToricError> {
        Cone2D::new(
            LatticeVector::from_i64(u.0, u.1),
            LatticeVector::from_i64(v.0, v.1),
        )
    }

    pub fn u(&self) -> &LatticeVector {
        &self.u
    }

    pub fn v(&self) -> &LatticeVector {
        &self.v
    }
}

/// Generator data of the cyclic group Γ_{p,q} acting as
/// (z₀, z₁) ↦ (ζ z₀, ζᵖ z₁) for ζ a primitive q-th root of unity.
/// The roots of unity stay abstract; only (p, q) is kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicGroupSpec {
    p: Int,
    q: Int,
}

impl CyclicGroupSpec {
    pub fn new(p: Int, q: Int) -> Result<Self, ToricError> {
        if !crate::exact::is_proper_fraction(&p, &q) {
            return Err(ToricError::InvalidGroupSpec { p, q });
        }
        Ok(CyclicGroupSpec { p, q })
    }

    pub fn p(&self) -> &Int {
        &self.p
    }

    pub fn q(&self) -> &Int {
        &self.q
    }
}

/// Lattice type of a strictly convex cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeType {
    Smooth,
    /// Cyclic quotient singularity of type A_{p,q}.
    Quotient { p: Int, q: Int },
}

/// The model cone of an A_{p,q} singularity: u = (0,1), v = (q,−p).
pub fn singularity_cone(spec: &CyclicGroupSpec) -> Cone2D {
    Cone2D {
        u: LatticeVector::from_i64(0, 1),
        v: LatticeVector::new(spec.q.clone(), -spec.p.clone()),
    }
}

/// The unimodular transform sending u → (0,1) and v → (q,−p) with
/// 0 ≤ p < q = |det(u,v)|, together with (p, q).
fn model_transform(cone: &Cone2D) -> (Int, Int, Mat2) {
    let d = det(&cone.u, &cone.v);
    let q = d.abs();
    // Row one annihilates u; its sign is forced by requiring the image of v
    // to have first coordinate +q. Row two completes to row2·u = 1.
    let s = if d.is_negative() { Int::one() } else { -Int::one() };
    let ext = cone.u.x.extended_gcd(&cone.u.y);
    debug_assert!(ext.gcd.is_one());
    let m = Mat2 {
        a: &s * &cone.u.y,
        b: -(&s * &cone.u.x),
        c: ext.x.clone(),
        d: ext.y.clone(),
    };
    let mv = m.apply(&cone.v);
    debug_assert_eq!(mv.x, q);
    // Shear fixing (0,1) so the image of v becomes exactly (q, −p).
    let p = (-&mv.y).mod_floor(&q);
    let k = exact_div(&(-&p - &mv.y), &q);
    let shear = Mat2 {
        a: Int::one(),
        b: Int::zero(),
        c: k,
        d: Int::one(),
    };
    (p, q, shear.compose(&m))
}

/// Classifies a cone as smooth or as an A_{p,q} cyclic quotient.
///
/// The type is read off the unique unimodular transform sending the first
/// ray to (0,1) and the second to (q,−p); it is invariant under any
/// unimodular change of basis applied to both rays, while swapping the rays
/// replaces p by its inverse mod q (the resolution chain read backwards).
pub fn classify_cone(cone: &Cone2D) -> ConeType {
    let (p, q, _) = model_transform(cone);
    if q.is_one() {
        ConeType::Smooth
    } else {
        debug_assert!(crate::exact::is_proper_fraction(&p, &q));
        ConeType::Quotient { p, q }
    }
}

/// Minimal resolution of a cone: the rays to insert, in order from u to v.
///
/// The inserted rays are exactly the lattice points on the compact faces of
/// the boundary of conv((cone ∩ ℤ²) \ {0}); they are generated here through
/// the continued-fraction recurrence on the model cone.
pub fn resolve_cone(cone: &Cone2D) -> Vec<LatticeVector> {
    let (p, q, t) = model_transform(cone);
    if q.is_one() {
        return Vec::new();
    }
    let digits = hj_expand(&p, &q).expect("classification yields a proper fraction");
    let (inserted, terminal) = model_resolution_rays(&digits);
    let t_inv = t.inverse_unimodular();
    debug_assert_eq!(t_inv.apply(&terminal), cone.v);
    inserted.iter().map(|w| t_inv.apply(w)).collect()
}

/// Rays strictly between (0,1) and (q,−p) in the model cone, from the
/// recurrence w₀ = (0,1), w₁ = (1,0), wᵢ₊₁ = eᵢ·wᵢ − wᵢ₋₁; also returns the
/// terminal ray, which must come out as (q,−p).
fn model_resolution_rays(digits: &HJExpansion) -> (Vec<LatticeVector>, LatticeVector) {
    let mut prev = LatticeVector::from_i64(0, 1);
    let mut cur = LatticeVector::from_i64(1, 0);
    let mut out = Vec::with_capacity(digits.len());
    for e in digits.digits() {
        out.push(cur.clone());
        let next = LatticeVector::new(e * &cur.x - &prev.x, e * &cur.y - &prev.y);
        prev = std::mem::replace(&mut cur, next);
    }
    (out, cur)
}

/// A fan in ℤ²: primitive rays sorted counterclockwise. When `complete`,
/// consecutive cyclic ray pairs are positively oriented cones covering the
/// plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan2D {
    rays: Vec<LatticeVector>,
    complete: bool,
}

/// Counterclockwise order starting just above the positive x-axis.
fn angular_half(v: &LatticeVector) -> u8 {
    if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
        0
    } else {
        1
    }
}

fn angular_cmp(a: &LatticeVector, b: &LatticeVector) -> std::cmp::Ordering {
    angular_half(a)
        .cmp(&angular_half(b))
        .then_with(|| det(b, a).cmp(&Int::zero()))
}

impl Fan2D {
    pub fn new(rays: Vec<LatticeVector>, complete: bool) -> Result<Self, ToricError> {
        for r in &rays {
            if !r.is_primitive() {
                return Err(ToricError::NotPrimitive(r.clone()));
            }
        }
        let mut rays = rays;
        rays.sort_by(angular_cmp);
        rays.dedup();
        let fan = Fan2D { rays, complete };
        if complete && !fan.covers_plane() {
            return Err(ToricError::NotComplete);
        }
        Ok(fan)
    }

    fn covers_plane(&self) -> bool {
        self.rays.len() >= 3 && self.cyclic_pairs().all(|(a, b)| det(a, b).is_positive())
    }

    pub fn rays(&self) -> &[LatticeVector] {
        &self.rays
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    fn cyclic_pairs(&self) -> impl Iterator<Item = (&LatticeVector, &LatticeVector)> {
        let n = self.rays.len();
        (0..n).map(move |i| (&self.rays[i], &self.rays[(i + 1) % n]))
    }

    /// The cones of the fan: consecutive ray pairs, cyclically when complete.
    pub fn cones(&self) -> Vec<Cone2D> {
        let mut out = Vec::new();
        if self.complete {
            for (a, b) in self.cyclic_pairs() {
                out.push(Cone2D {
                    u: a.clone(),
                    v: b.clone(),
                });
            }
        } else {
            for w in self.rays.windows(2) {
                if det(&w[0], &w[1]).is_positive() {
                    out.push(Cone2D {
                        u: w[0].clone(),
                        v: w[1].clone(),
                    });
                }
            }
        }
        out
    }
}

/// Fan of the weighted projective plane CP²_{a,b,c} for positive pairwise
/// coprime weights: three primitive rays with a·v₀ + b·v₁ + c·v₂ = 0.
///
/// Rays are the images of the standard basis of ℤ³ in ℤ³ / ℤ·(a,b,c),
/// normalized so that v₁ = (1,0) and v₂ = (x, a) with 0 ≤ x < a. For a = 1
/// this is the textbook convention v₁ = (1,0), v₂ = (0,1), v₀ = (−b,−c).
pub fn wps_fan(a: &Int, b: &Int, c: &Int) -> Result<Fan2D, ToricError> {
    let bad = || ToricError::InvalidWeights(a.clone(), b.clone(), c.clone());
    if !a.is_positive() || !b.is_positive() || !c.is_positive() {
        return Err(bad());
    }
    if !a.gcd(b).is_one() || !b.gcd(c).is_one() || !a.gcd(c).is_one() {
        return Err(bad());
    }
    // Basis (r, s) of the lattice of integer functionals vanishing on
    // (a,b,c): with g = gcd(a,b) = x₀·a + y₀·b,
    //   r = (−b/g, a/g, 0),   s = (x₀·c, y₀·c, −g) / content.
    // The 2×2 minors of [r; s] are (a, b, c) up to sign and the content
    // division, so w ↦ (r·w, s·w) is the quotient map ℤ³/ℤ·(a,b,c) → ℤ².
    let g = a.gcd(b);
    let ea = a.extended_gcd(b);
    let s_raw = [&ea.x * c, &ea.y * c, -g.clone()];
    let content = s_raw[0].gcd(&s_raw[1]).gcd(&s_raw[2]);
    let s_vec = [
        &s_raw[0] / &content,
        &s_raw[1] / &content,
        &s_raw[2] / &content,
    ];
    let r_vec = [-(b / &g), a / &g, Int::zero()];
    let project =
        |i: usize| -> LatticeVector { LatticeVector::new(r_vec[i].clone(), s_vec[i].clone()) };
    let mut v0 = project(0);
    let mut v1 = project(1);
    let mut v2 = project(2);
    // The kernel basis is determined only up to orientation; flip the
    // second functional if needed so det(v1, v2) = +a.
    if det(&v1, &v2).is_negative() {
        for v in [&mut v0, &mut v1, &mut v2] {
            v.y = -std::mem::take(&mut v.y);
        }
    }
    let m = wps_basis_change(&v1, &v2).ok_or_else(bad)?;
    let rays = [m.apply(&v0), m.apply(&v1), m.apply(&v2)];
    for r in &rays {
        if !r.is_primitive() {
            return Err(bad());
        }
    }
    let relation = rays[0]
        .scale(a)
        .add(&rays[1].scale(b))
        .add(&rays[2].scale(c));
    if !relation.is_zero() {
        return Err(bad());
    }
    Fan2D::new(rays.to_vec(), true)
}

/// Unimodular matrix sending v₁ → (1,0) and v₂ → (x, a) with 0 ≤ x < a,
/// where a = det(v₁, v₂) > 0 by the kernel-basis construction.
fn wps_basis_change(v1: &LatticeVector, v2: &LatticeVector) -> Option<Mat2> {
    let a = det(v1, v2);
    if !a.is_positive() {
        return None;
    }
    let ext = v1.x.extended_gcd(&v1.y);
    if !ext.gcd.is_one() {
        return None;
    }
    // Row one satisfies row1·v1 = 1; row two annihilates v1. Then
    // M v1 = (1,0), M v2 = (·, a), det(M) = 1.
    let m = Mat2 {
        a: ext.x.clone(),
        b: ext.y.clone(),
        c: -v1.y.clone(),
        d: v1.x.clone(),
    };
    debug_assert!(m.det().is_one());
    let mv2 = m.apply(v2);
    debug_assert_eq!(mv2.y, a);
    // Shear fixing (1,0) to put the x-coordinate of v₂ into [0, a).
    let x = mv2.x.mod_floor(&a);
    let k = exact_div(&(&x - &mv2.x), &a);
    let shear = Mat2 {
        a: Int::one(),
        b: k,
        c: Int::zero(),
        d: Int::one(),
    };
    Some(shear.compose(&m))
}

/// Resolves every singular cone of the fan; new rays are exactly the union
/// of `resolve_cone` over the singular cones.
pub fn resolve_fan(fan: &Fan2D) -> Fan2D {
    let mut rays = fan.rays().to_vec();
    for cone in fan.cones() {
        rays.extend(resolve_cone(&cone));
    }
    Fan2D::new(rays, fan.is_complete()).expect("resolution preserves fan validity")
}

/// Self-intersections of the torus-invariant curves of a smooth complete
/// fan: for each ray with cyclic neighbors v₋ and v₊, the unique integer c
/// with v₋ + v₊ = c·v gives self-intersection −c.
pub fn self_intersections(fan: &Fan2D) -> Result<Vec<(LatticeVector, Int)>, ToricError> {
    if !fan.is_complete() {
        return Err(ToricError::NotComplete);
    }
    let rays = fan.rays();
    let n = rays.len();
    for i in 0..n {
        let d = det(&rays[i], &rays[(i + 1) % n]);
        if !d.is_one() {
            return Err(ToricError::NotSmooth(
                rays[i].clone(),
                rays[(i + 1) % n].clone(),
                d,
            ));
        }
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let prev = &rays[(i + n - 1) % n];
        let next = &rays[(i + 1) % n];
        let c = det(prev, next);
        debug_assert_eq!(prev.add(next), rays[i].scale(&c));
        out.push((rays[i].clone(), -c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(x: i64, y: i64) -> LatticeVector {
        LatticeVector::from_i64(x, y)
    }

    fn spec(p: i64, q: i64) -> CyclicGroupSpec {
        CyclicGroupSpec::new(int(p), int(q)).unwrap()
    }

    #[test]
    fn singularity_cone_convention() {
        let c = singularity_cone(&spec(2, 3));
        assert_eq!((c.u(), c.v()), (&lv(0, 1), &lv(3, -2)));
        let c = singularity_cone(&spec(1, 2));
        assert_eq!((c.u(), c.v()), (&lv(0, 1), &lv(2, -1)));
    }

    #[test]
    fn classify_examples() {
        let smooth = Cone2D::from_i64((1, 0), (0, 1)).unwrap();
        assert_eq!(classify_cone(&smooth), ConeType::Smooth);
        let c = Cone2D::from_i64((-2, -3), (0, 1)).unwrap();
        assert_eq!(
            classify_cone(&c),
            ConeType::Quotient {
                p: int(1),
                q: int(2)
            }
        );
        let c = Cone2D::from_i64((1, 0), (-2, -3)).unwrap();
        assert_eq!(
            classify_cone(&c),
            ConeType::Quotient {
                p: int(2),
                q: int(3)
            }
        );
    }

    #[test]
    fn classify_roundtrips_model_cones() {
        for q in 2i64..=40 {
            for p in 1..q {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let cone = singularity_cone(&spec(p, q));
                assert_eq!(
                    classify_cone(&cone),
                    ConeType::Quotient {
                        p: int(p),
                        q: int(q)
                    },
                    "p={p} q={q}"
                );
            }
        }
    }

    #[test]
    fn resolve_examples() {
        let c = singularity_cone(&spec(1, 2));
        assert_eq!(resolve_cone(&c), vec![lv(1, 0)]);
        let c = singularity_cone(&spec(2, 3));
        assert_eq!(resolve_cone(&c), vec![lv(1, 0), lv(2, -1)]);
        let smooth = Cone2D::from_i64((1, 0), (0, 1)).unwrap();
        assert!(resolve_cone(&smooth).is_empty());
    }

    #[test]
    fn resolution_is_unimodular_and_matches_digits() {
        for q in 2i64..=30 {
            for p in 1..q {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let cone = singularity_cone(&spec(p, q));
                let inserted = resolve_cone(&cone);
                let mut chain = vec![cone.u().clone()];
                chain.extend(inserted.iter().cloned());
                chain.push(cone.v().clone());
                for w in chain.windows(2) {
                    assert!(det(&w[0], &w[1]).abs().is_one());
                }
                // Neighbor-sum digits along the inserted rays.
                let digits: Vec<Int> = (1..chain.len() - 1)
                    .map(|i| {
                        let sum = chain[i - 1].add(&chain[i + 1]);
                        let e = if chain[i].x.is_zero() {
                            exact_div(&sum.y, &chain[i].y)
                        } else {
                            exact_div(&sum.x, &chain[i].x)
                        };
                        assert_eq!(chain[i].scale(&e), sum);
                        e
                    })
                    .collect();
                let expected = hj_expand(&int(p), &int(q)).unwrap();
                assert_eq!(digits, expected.digits(), "p={p} q={q}");
            }
        }
    }

    #[test]
    fn wps_fans() {
        let f = wps_fan(&int(1), &int(1), &int(1)).unwrap();
        let mut rays = f.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![lv(-1, -1), lv(0, 1), lv(1, 0)]);

        let f = wps_fan(&int(1), &int(2), &int(3)).unwrap();
        let mut rays = f.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![lv(-2, -3), lv(0, 1), lv(1, 0)]);

        let f = wps_fan(&int(1), &int(1), &int(2)).unwrap();
        let mut rays = f.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![lv(-1, -2), lv(0, 1), lv(1, 0)]);

        assert!(wps_fan(&int(2), &int(4), &int(3)).is_err());
        assert!(wps_fan(&int(0), &int(1), &int(1)).is_err());
    }

    #[test]
    fn wps_weight_relation_holds_generally() {
        for (a, b, c) in [(1i64, 2, 3), (2, 3, 5), (3, 4, 5), (1, 1, 1), (5, 7, 9)] {
            let f = wps_fan(&int(a), &int(b), &int(c)).unwrap();
            // There must be an assignment of the weights to the sorted rays
            // making the defining relation hold.
            let rays = f.rays();
            let weights = [int(a), int(b), int(c)];
            let perms = [
                [0usize, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ];
            let found = perms.iter().any(|perm| {
                rays[perm[0]]
                    .scale(&weights[0])
                    .add(&rays[perm[1]].scale(&weights[1]))
                    .add(&rays[perm[2]].scale(&weights[2]))
                    .is_zero()
            });
            assert!(found, "no weight relation for ({a},{b},{c})");
        }
    }

    #[test]
    fn resolve_wps123_adds_figure2_rays() {
        let f = wps_fan(&int(1), &int(2), &int(3)).unwrap();
        let resolved = resolve_fan(&f);
        let mut rays = resolved.rays().to_vec();
        rays.sort();
        let mut expected = vec![
            lv(1, 0),
            lv(0, 1),
            lv(-1, -1),
            lv(-2, -3),
            lv(-1, -2),
            lv(0, -1),
        ];
        expected.sort();
        assert_eq!(rays, expected);
    }

    #[test]
    fn cp2_fan_resolution_is_identity() {
        let f = wps_fan(&int(1), &int(1), &int(1)).unwrap();
        assert_eq!(resolve_fan(&f), f);
    }

    #[test]
    fn self_intersections_cp2() {
        let f = wps_fan(&int(1), &int(1), &int(1)).unwrap();
        for (_, s) in self_intersections(&f).unwrap() {
            assert_eq!(s, int(1));
        }
    }

    #[test]
    fn self_intersections_resolved_wps123() {
        let resolved = resolve_fan(&wps_fan(&int(1), &int(2), &int(3)).unwrap());
        let selfints = self_intersections(&resolved).unwrap();
        let get = |x: i64, y: i64| -> i64 {
            let v = lv(x, y);
            let entry = selfints.iter().find(|(r, _)| *r == v).unwrap();
            i64::try_from(&entry.1).unwrap()
        };
        assert_eq!(get(1, 0), 0);
        assert_eq!(get(0, 1), 1);
        assert_eq!(get(-1, -1), -2);
        assert_eq!(get(-2, -3), -1);
        assert_eq!(get(-1, -2), -2);
        assert_eq!(get(0, -1), -2);
        let total: i64 = [(1, 0), (0, 1), (-1, -1), (-2, -3), (-1, -2), (0, -1)]
            .iter()
            .map(|&(x, y)| get(x, y))
            .sum();
        assert_eq!(total, 12 - 3 * 6);
    }

    #[test]
    fn self_intersections_rejects_singular_fan() {
        let f = wps_fan(&int(1), &int(2), &int(3)).unwrap();
        assert!(matches!(
            self_intersections(&f),
            Err(ToricError::NotSmooth(..))
        ));
        let open = Fan2D::new(vec![lv(1, 0), lv(0, 1)], false).unwrap();
        assert!(matches!(
            self_intersections(&open),
            Err(ToricError::NotComplete)
        ));
    }

    #[test]
    fn degenerate_cone_is_rejected() {
        assert!(matches!(
            Cone2D::from_i64((1, 0), (-1, 0)),
            Err(ToricError::DegenerateCone(..))
        ));
        assert!(matches!(
            Cone2D::from_i64((2, 2), (0, 1)),
            Err(ToricError::NotPrimitive(..))
        ));
    }
}
