//! Build the fan of a weighted projective plane, resolve it, and read off
//! the self-intersections of the torus-invariant curves.

use paratoric::exact::int;
use paratoric::toric::{resolve_fan, self_intersections, wps_fan};

fn main() {
    for (a, b, c) in [(1, 1, 1), (1, 2, 3), (2, 3, 5)] {
        let fan = wps_fan(&int(a), &int(b), &int(c)).unwrap();
        let rays: Vec<String> = fan.rays().iter().map(|r| r.to_string()).collect();
        println!("CP^2_{{{a},{b},{c}}}: rays {}", rays.join(" "));
        let resolved = resolve_fan(&fan);
        let mut sum = int(0);
        for (ray, s) in self_intersections(&resolved).unwrap() {
            println!("  {ray} -> {s}");
            sum += s;
        }
        let n = resolved.rays().len();
        println!("  sum {sum} = 12 - 3*{n}");
    }
}
