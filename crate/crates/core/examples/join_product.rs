//! The join multiplies cd-indices.

use eulerian::corpus::join_pairs;
use eulerian::{cd_index, cd_product, expr, join};

fn main() -> eulerian::Result<()> {
    for (a, b) in join_pairs() {
        let (p, q) = (expr::build(&a)?, expr::build(&b)?);
        let j = join(&p, &q)?;
        let product = cd_product(&cd_index(&p)?, &cd_index(&q)?);
        let same = cd_index(&j)? == product;
        println!("{a} * {b}: rank {}, product matches {same}", j.rank());
    }
    Ok(())
}
