//! Classify a cyclic quotient cone and compute its minimal resolution,
//! checking the inserted rays against the continued-fraction digits.

use paratoric::exact::int;
use paratoric::hjcf::hj_expand;
use paratoric::toric::{classify_cone, resolve_cone, singularity_cone, CyclicGroupSpec};

fn main() {
    for (p, q) in [(1, 2), (2, 3), (1, 3), (3, 5), (7, 11)] {
        let spec = CyclicGroupSpec::new(int(p), int(q)).unwrap();
        let cone = singularity_cone(&spec);
        println!(
            "A_{{{p},{q}}}: cone({}, {}) classified as {:?}",
            cone.u(),
            cone.v(),
            classify_cone(&cone)
        );
        let inserted = resolve_cone(&cone);
        let rays: Vec<String> = inserted.iter().map(|r| r.to_string()).collect();
        let digits: Vec<String> = hj_expand(&int(p), &int(q))
            .unwrap()
            .digits()
            .iter()
            .map(|e| format!("-{e}"))
            .collect();
        println!(
            "  inserted rays: {}  self-intersections: [{}]",
            rays.join(" "),
            digits.join(", ")
        );
    }
}
