//! Posets driving a Part3 coefficient down as N grows.
//!
//!     cargo run --example negative_witness -- cdccdc

use eulerian::analysis::negative_witness;
use eulerian::CdWord;

fn main() -> eulerian::Result<()> {
    let word: CdWord = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "ccdccd".into())
        .parse()?;
    for copies in 1..=4 {
        let nw = negative_witness(&word, copies)?;
        println!(
            "N={copies}: {}, {} elements, [{word}] = {}",
            nw.construction(),
            nw.poset.element_count(),
            nw.coefficient
        );
    }
    Ok(())
}
