//! Limit L-vectors of interval systems and the cd coefficients they induce.

use eulerian::analysis::{d_position_system, limit_cd_coefficient, limit_l_vector, LimitLVector};
use eulerian::{cd_words, IntervalSystem};

fn main() -> eulerian::Result<()> {
    for (n, ivs) in [
        (4, vec![(1, 4)]),
        (4, vec![(1, 2), (3, 4)]),
        (6, vec![(1, 4), (3, 6)]),
    ] {
        let sys = IntervalSystem::new(n, ivs)?;
        let lim = limit_l_vector(n, &sys)?;
        println!(
            "{:?}: {}",
            sys.intervals,
            serde_json::to_string(&lim).unwrap()
        );
    }

    let a = limit_l_vector(6, &IntervalSystem::new(6, [(1, 2), (2, 6)])?)?;
    let b = limit_l_vector(6, &IntervalSystem::new(6, [(1, 5), (5, 6)])?)?;
    println!("halved sum of the two rank-7 systems:");
    for (q, v) in LimitLVector::mean(&[a, b])? {
        println!("  {q}: {v}");
    }

    println!("limit coefficients at the d-positions of each word:");
    for w in cd_words(6) {
        let sys = d_position_system(&w);
        println!("  [{w}] = {}", limit_cd_coefficient(&w, &sys)?);
    }
    Ok(())
}
