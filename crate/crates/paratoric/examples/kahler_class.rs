//! Solve Q·C = I symbolically for a chain of curves: assemble the
//! intersection form, assign symbolic volumes, and print the exact class
//! coefficients.

use paratoric::exact::{int, SymPoly};
use paratoric::kahler::{
    assemble_Q, endpoint_integrals, solve_class, standard_fiber_config, VolumeAssignment,
};

fn main() {
    // weight 2/5: chain [-3,-2,-1,-2,-2,-3] plus the zero section
    let config = standard_fiber_config(&int(2), &int(5), None).unwrap();
    let basis = config.labels();
    let q = assemble_Q(&config, &basis).unwrap();
    for (label, row) in q.basis.iter().zip(&q.entries) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
        println!("Q[{label:>3}] = [{}]", cells.join(" "));
    }

    let volumes = VolumeAssignment::from_pairs(basis.iter().enumerate().map(|(i, l)| {
        let value = if l == "S0" {
            // Gauss-Bonnet endpoint value for r = 1, q = 5, chi_orb = -1
            endpoint_integrals(&int(1), &int(5), &paratoric::exact::rat(-1, 1)).0
        } else {
            SymPoly::symbol("eps2") * SymPoly::symbol(&format!("a{i}"))
        };
        (l.clone(), value)
    }));

    let solution = solve_class(&q, &volumes).unwrap();
    println!("det Q = {}", solution.det);
    for label in &solution.basis {
        println!("c_{label} = {}", solution.coefficients[label]);
    }
    println!("residual checked: {}", solution.residual_checked);
}
