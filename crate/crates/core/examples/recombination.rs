//! Recombining colorings of two sides glued along a separator.
//!
//! Usage: recombination [fixtures] [first seed]

use knitweave::coloring::recombine;
use knitweave::harness::recombination_fixture;

fn main() -> knitweave::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let count = args.first().copied().unwrap_or(5);
    let first = args.get(1).copied().unwrap_or(0);
    for seed in first..first + count {
        let f = recombination_fixture(seed)?;
        let g = &f.gluing.graph;
        let s = f.gluing.separator();
        let out = recombine(&f.gluing, &f.plan, &f.phi2prime)?;
        let agrees = s.iter().all(|v| out.colors[v] == f.phi2prime.colors[v]);
        println!(
            "seed {seed}: n = {}, |S| = {}, r = {}, p = {}, {} coding colors, {} swaps, proper {}, agrees on S {agrees}",
            g.n(),
            s.len(),
            f.plan.palette_size,
            f.plan.p(),
            f.plan.coding_colors().len(),
            f.swaps,
            out.is_proper(g),
        );
    }
    Ok(())
}
