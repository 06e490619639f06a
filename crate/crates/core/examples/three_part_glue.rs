//! [d c^{n-4} d] on the doubled three-part glue for odd n.

use eulerian::cd::Letter;
use eulerian::{cd_index, lemma2_poset, CdWord};

fn main() -> eulerian::Result<()> {
    let n = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let mut letters = vec![Letter::D];
    letters.extend(std::iter::repeat_n(Letter::C, n - 4));
    letters.push(Letter::D);
    let w = CdWord::new(letters);

    for copies in 1..=3u64 {
        let p = lemma2_poset(n, copies)?;
        let c = cd_index(&p)?.coeff(&w);
        let k = copies as i64;
        println!(
            "N={copies}: {} elements, eulerian {}, [{w}] = {c}, 4(N^2-N^4) = {}",
            p.element_count(),
            p.is_eulerian().eulerian,
            4 * (k * k - k.pow(4))
        );
    }
    Ok(())
}
