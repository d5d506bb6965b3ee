//! The iterated blow-up chain of a parabolic weight, step by step: build
//! it, draw it, and contract it back down to the fiber.

use paratoric::chains::{blowup_chain, blowup_step, contract_to_minimal, BlowupLocus, CurveChain};
use paratoric::cli::render_chain_ascii;
use paratoric::exact::int;

fn main() {
    // the weight-2/3 chain built move by move from a fiber of square zero
    let mut chain = CurveChain::from_self_ints(&[0]);
    println!("start:  {}", render_chain_ascii(&chain));
    for locus in [
        BlowupLocus::OnCurve(0),
        BlowupLocus::AtIntersection(0),
        BlowupLocus::AtIntersection(1),
    ] {
        chain = blowup_step(&chain, locus).unwrap();
        println!("blowup: {}", render_chain_ascii(&chain));
    }

    for (p, q) in [(1, 2), (2, 3), (3, 5), (7, 11)] {
        let chain = blowup_chain(&int(p), &int(q)).unwrap();
        let (minimal, count) = contract_to_minimal(&chain);
        println!(
            "{p}/{q}: {}  --{count} contractions-->  {}",
            render_chain_ascii(&chain),
            render_chain_ascii(&minimal)
        );
    }
}
