//! The single-interval family dp(n, {[1, n]}, N) and its cd-index.

use eulerian::verify::lemma1_closed_form;
use eulerian::{cd_index, dp_poset, IntervalSystem};

fn main() -> eulerian::Result<()> {
    for n in [2, 4, 6] {
        let sys = IntervalSystem::new(n, [(1, n)])?;
        for copies in 1..=4 {
            let p = dp_poset(n, &sys, copies, false)?;
            println!(
                "n={n} N={copies}  chains {:>4}  {}",
                p.count_maximal_chains(),
                cd_index(&p)?
            );
        }
        // (N+1) c^n - N (cc-2d)^{n/2}, printed for comparison.
        println!("  closed form at N=1: {}", lemma1_closed_form(n, 1));
    }
    Ok(())
}
