//! Build a poset from an expression and print its invariants.
//!
//!     cargo run --example inspect -- "join(boolean(3), dp(4,[[1,4]],2))"

use eulerian::{cd_index, expr, flag_h, flag_vector, l_vector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "boolean(4)".into());
    let p = expr::build(&text)?;
    println!("{text}");
    println!("  rank {}, level sizes {:?}", p.rank(), p.level_sizes());
    println!("  maximal chains {}", p.count_maximal_chains());

    let report = p.is_eulerian();
    match &report.violation {
        None => println!("  eulerian"),
        Some(v) => println!(
            "  not eulerian: [{:?}, {:?}] has {} even, {} odd",
            v.x, v.y, v.even, v.odd
        ),
    }

    let f = flag_vector(&p)?;
    println!("  f = {}", serde_json::to_string(&f)?);
    let h = flag_h(&f);
    println!(
        "  h = {:?}",
        h.entries()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
    );
    println!("  L = {}", serde_json::to_string(&l_vector(&f))?);
    match cd_index(&p) {
        Ok(cd) => println!("  cd-index {cd}"),
        Err(e) => println!("  {e}"),
    }
    Ok(())
}
