//! Profile knittedness of small cliques and a single knit on K_9.
//!
//! Usage: knit_k9

use std::time::Instant;

use knitweave::graph::named::{complete, complete_minus_matching};
use knitweave::solver::{is_k_linked, is_profile_knitted, knit, SystemMode, TerminalSpec};
use knitweave::VertexSet;

fn main() -> knitweave::Result<()> {
    let k9 = complete(9);
    let start = Instant::now();
    let v = is_profile_knitted(&k9, k9.vertices(), &[2, 2, 2, 2, 1])?;
    println!(
        "K_9 (2,2,2,2,1)-knitted: {} over {} partitions in {:.2?}",
        v.knitted,
        v.partitions_checked,
        start.elapsed()
    );

    let parts = vec![
        VertexSet::from_iter([0, 5]),
        VertexSet::from_iter([1, 6]),
        VertexSet::from_iter([2, 7]),
        VertexSet::from_iter([3, 8]),
        VertexSet::singleton(4),
    ];
    let spec = TerminalSpec::new(parts, VertexSet::EMPTY)?;
    let found = knit(&k9, &spec)?.expect("cliques are knitted");
    found.validate(&k9, &spec)?;
    println!("knit: {:?}", found.subgraphs);

    // deleting a matching from a small clique costs linkedness first at n = 8
    for (n, m) in [(8, 4), (9, 4), (10, 5)] {
        let g = complete_minus_matching(n, m);
        let linked = is_k_linked(&g, 3, SystemMode::Exhaustive)?;
        let knitted = is_profile_knitted(&g, g.vertices().iter().take(7).collect(), &[2, 2, 2, 1])?;
        println!(
            "K_{n} minus {m} matching edges: 3-linked {} ({} systems), first 7 vertices (2,2,2,1)-knitted {}",
            linked.linked, linked.systems_checked, knitted.knitted
        );
    }
    Ok(())
}
