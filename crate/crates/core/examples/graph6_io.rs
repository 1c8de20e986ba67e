//! graph6 encoding and decoding. Decodes the lines given as arguments, or
//! round-trips a few built-in graphs when there are none.

use spectral_matching::{graph6, Graph};

fn main() -> spectral_matching::Result<()> {
    let lines: Vec<String> = std::env::args().skip(1).collect();
    for line in &lines {
        match graph6::decode(line) {
            Ok(g) => println!("{line} n={} m={} degrees={:?}", g.order(), g.size(), g.degrees()),
            Err(e) => println!("{line}: {e}"),
        }
    }
    if !lines.is_empty() {
        return Ok(());
    }
    for g in [Graph::complete(5), Graph::cycle(8), Graph::path(4), Graph::empty(70)] {
        let line = graph6::encode(&g)?;
        let back = graph6::decode(&line)?;
        println!("n={:<3} m={:<3} {line} round-trip={}", g.order(), g.size(), back.edges() == g.edges());
    }
    Ok(())
}
