//! Density conditions and the knitted-subgraph search on generated graphs.
//!
//! Usage: dense_neighborhood [graphs] [first seed]

use knitweave::certify::{dense_conditions, knitted1_check};
use knitweave::harness::{gen_dense_neighborhood, write_graph6};

fn main() -> knitweave::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let count = args.first().copied().unwrap_or(8);
    let first = args.get(1).copied().unwrap_or(0);
    for seed in first..first + count {
        let (h, center) = gen_dense_neighborhood(16, 18, seed)?;
        let report = dense_conditions(&h, 18);
        let verdict = knitted1_check(&h, 18, 50, seed)?;
        println!(
            "{} center {center}: case {:?}, δ = {}, low-degree {}, {:?} via {:?} on {} ({} systems checked)",
            write_graph6(&h),
            report.case,
            report.delta_h,
            report.low_degree_vertices,
            verdict.status,
            verdict.route,
            verdict.witness.map(|w| w.to_string()).unwrap_or_default(),
            verdict.systems_checked,
        );
    }
    Ok(())
}
