//! Classify every cd-word of a degree, with certificates and bad subwords.

use eulerian::analysis::{classify_word, count_part1_words, note_count_formula, WordClass};
use eulerian::cd_words;

fn main() -> eulerian::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    for w in cd_words(n) {
        match classify_word(&w)? {
            WordClass::Part2 => println!("{w:<10} Part2"),
            WordClass::Part1a(c) | WordClass::Part1b(c) => {
                println!("{w:<10} {:<7} S={} T={} V={}", c.class, c.s, c.t, c.v)
            }
            WordClass::Part3(wit) => println!(
                "{w:<10} Part3   {} at letter {}",
                wit.subword, wit.letter_offset
            ),
        }
    }
    for n in 5..=12 {
        println!(
            "n={n:>2}: Part1 words {:>3}, formula {:>3}",
            count_part1_words(n)?,
            note_count_formula(n)
        );
    }
    Ok(())
}
