//! [ccdcc] on the doubled rank-7 two-part glue.

use eulerian::{cd_index, lemma3_poset, CdWord};

fn main() -> eulerian::Result<()> {
    let w: CdWord = "ccdcc".parse()?;
    for copies in 1..=5u64 {
        let p = lemma3_poset(copies)?;
        let m = copies as i64 - 1;
        println!(
            "N={copies}: [ccdcc] = {:>4}  -2(N-1)^2 = {:>4}  eulerian {}",
            cd_index(&p)?.coeff(&w),
            -2 * m * m,
            p.is_eulerian().eulerian
        );
    }
    Ok(())
}
