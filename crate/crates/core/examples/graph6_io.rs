//! graph6 and edge-list encodings, with parse errors located by byte.
//!
//! Usage: graph6_io

use knitweave::graph::named::{complete, cycle, petersen};
use knitweave::harness::{gen_min_degree, parse_graph, parse_graph6, write_edge_list, write_graph6};

fn main() -> knitweave::Result<()> {
    for (name, g) in [("K_5", complete(5)), ("C_6", cycle(6)), ("Petersen", petersen())] {
        let text = write_graph6(&g);
        assert_eq!(parse_graph6(&text)?, g);
        println!("{name}: {text}");
    }
    let big = gen_min_degree(64, 20, 1)?;
    let text = write_graph6(&big);
    println!("64 vertices, {} edges: {}...", big.edge_count(), &text[..20]);
    assert_eq!(parse_graph6(&text)?, big);

    let list = write_edge_list(&cycle(4));
    print!("edge list of C_4:\n{list}");
    assert_eq!(parse_graph(&list)?, cycle(4));
    for bad in ["D?", "D?{x", "A`"] {
        println!("{bad:?}: {}", parse_graph6(bad).unwrap_err());
    }
    Ok(())
}
