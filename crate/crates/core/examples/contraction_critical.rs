//! Chromatic numbers and contraction-criticality of named graphs.
//!
//! Usage: contraction_critical

use knitweave::coloring::{chromatic_number, dirac_neighborhood_check, is_contraction_critical};
use knitweave::graph::named::{complete, cycle, petersen, with_universal_vertex};
use knitweave::Graph;

fn main() -> knitweave::Result<()> {
    let cases: Vec<(&str, Graph, usize)> = vec![
        ("K_4", complete(4), 4),
        ("K_5", complete(5), 5),
        ("C_5", cycle(5), 3),
        ("C_5 + universal vertex", with_universal_vertex(&cycle(5)), 4),
        ("C_7", cycle(7), 3),
    ];
    for (name, g, k) in cases {
        let v = is_contraction_critical(&g, k)?;
        print!("{name}: χ = {}, {k}-contraction-critical {}", v.chromatic_number, v.critical);
        if let Some(w) = &v.failing_minor {
            w.validate(&g)?;
            print!(", {k}-chromatic minor with branch sets {:?}", w.branch_sets);
        }
        println!(" ({} minor classes checked)", v.minors_checked);
    }

    let p = petersen();
    let (chi, coloring) = chromatic_number(&p);
    println!("Petersen: χ = {chi}, coloring {:?}", coloring.colors);
    println!("Petersen neighborhoods too independent for k = 4: {}", dirac_neighborhood_check(&p, 4).len());
    Ok(())
}
