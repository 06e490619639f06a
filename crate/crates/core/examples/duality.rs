//! Dual posets reverse flag vectors and cd-words.

use eulerian::corpus::eulerian_corpus;
use eulerian::{cd_index, flag_vector};

fn main() -> eulerian::Result<()> {
    let corpus = eulerian_corpus()?;
    let mut asymmetric = 0;
    for e in &corpus {
        let cd = cd_index(&e.poset)?;
        let dual = e.poset.dual();
        assert_eq!(cd_index(&dual)?, cd.reversed());
        assert_eq!(flag_vector(&dual)?, flag_vector(&e.poset)?.reversed());
        if cd != cd.reversed() {
            asymmetric += 1;
            if asymmetric <= 3 {
                println!("{}\n  {cd}\n  dual: {}", e.name, cd.reversed());
            }
        }
    }
    println!(
        "{} posets checked, {asymmetric} with non-palindromic cd-index",
        corpus.len()
    );
    Ok(())
}
