//! Massed pairs, local minimization and rigid separations.
//!
//! Usage: massed_minimize

use knitweave::graph::named::{complete, complete_minus_matching};
use knitweave::structure::{enumerate_separations, is_p_massed, is_rigid, minimize_pair, KnitConvention, MinimizeOptions};
use knitweave::VertexSet;

fn main() -> knitweave::Result<()> {
    let l = complete_minus_matching(16, 4);
    let s = VertexSet::full(3);
    let p = 12;
    let report = is_p_massed(&l, s, p)?;
    println!(
        "K_16 minus 4 matching edges, |S| = 3: {p}-massed {} (ρ = {}, threshold {:?})",
        report.satisfied, report.rho_value, report.threshold
    );
    let options = MinimizeOptions {
        allow_knitted: true,
        ..MinimizeOptions::default()
    };
    let out = minimize_pair(&l, s, p, 3, &options)?;
    println!(
        "minimized to {} vertices and {} edges after {} moves; still massed {}",
        out.graph.n(),
        out.graph.edge_count(),
        out.log.len(),
        is_p_massed(&out.graph, out.terminals, p)?.satisfied
    );

    // two cliques sharing a triangle; the terminals sit in the first
    let mut g = complete(10);
    for u in 3..6 {
        for v in 6..10 {
            g.remove_edge(u, v);
        }
    }
    let s = VertexSet::from_iter([3, 4]);
    for sep in enumerate_separations(&g, s, 3)?.take(4) {
        let v = is_rigid(&g, &sep, &KnitConvention::EveryPartition)?;
        println!("separation A = {}, B = {} of order {}: rigid {}", sep.a, sep.b, sep.order(), v.knitted);
    }
    Ok(())
}
