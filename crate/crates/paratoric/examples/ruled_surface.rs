//! Run the model construction for a parabolic ruled surface, then check
//! the slope of the infinity section against r·chi_orb.

use paratoric::exact::{format_rational, int, Rational};
use paratoric::surface::{instability_report, slope, theoremB_construction, Section};

fn main() {
    for (g, r, orders) in [
        (1u32, 1i64, vec![3i64]),
        (0, 2, vec![3, 3, 3, 3]),
        (2, 2, vec![5, 7]),
    ] {
        let qs: Vec<_> = orders.iter().map(|&q| int(q)).collect();
        let rep = theoremB_construction(g, &int(r), &qs).unwrap();
        println!(
            "g={g} r={r} orders={orders:?}: deg L = {}, chi_orb = {}",
            rep.bundle_degree,
            format_rational(&rep.chi_orb)
        );
        for pt in &rep.points {
            println!(
                "  {}: p={}, n={}, alpha={}, A_{{{},{}}} | A_{{{},{}}}",
                pt.label,
                pt.p,
                pt.n,
                format_rational(&pt.alpha),
                pt.sing_zero.0,
                pt.sing_zero.1,
                pt.sing_infinity.0,
                pt.sing_infinity.1
            );
        }
        let m = rep.parabolic_surface();
        let mu = slope(&m, Section::Infinity);
        let expect = Rational::from_integer(rep.r.clone()) * &rep.chi_orb;
        println!(
            "  mu(S_inf) = {} = r*chi_orb = {}",
            format_rational(&mu),
            format_rational(&expect)
        );
        for (section, mu) in instability_report(&m) {
            println!("  destabilizing: {section:?} with mu = {}", format_rational(&mu));
        }
    }
}
