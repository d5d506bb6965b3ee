//! Minus-sign continued fractions: expand a few weights and show the
//! roundtrip back to the fraction.

use paratoric::exact::int;
use paratoric::hjcf::{hj_evaluate, hj_expand};

fn main() {
    for (p, q) in [(1, 2), (2, 3), (1, 3), (5, 7), (11, 30), (89, 144)] {
        let exp = hj_expand(&int(p), &int(q)).unwrap();
        let digits: Vec<String> = exp.digits().iter().map(|d| d.to_string()).collect();
        let (back_p, back_q) = hj_evaluate(&exp);
        println!(
            "{p}/{q} = [{}] = {}  (roundtrip {back_p}/{back_q})",
            digits.join(", "),
            exp.nested_fraction_string()
        );
    }
}
