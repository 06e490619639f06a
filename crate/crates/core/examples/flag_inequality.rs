//! Both forms of the flag inequality over every valid (T, V) window.

use eulerian::analysis::{inequality_f_form, inequality_l_form, valid_windows};
use eulerian::{expr, flag_vector, l_vector};

fn main() -> eulerian::Result<()> {
    for text in ["boolean(4)", "lemma3(2)", "chain(4)"] {
        let f = flag_vector(&expr::build(text)?)?;
        let l = l_vector(&f);
        let windows = valid_windows(f.n())?;
        let mut negative = 0;
        for w in &windows {
            let ff = inequality_f_form(&f, &w.t(), &w.v())?;
            let lf = inequality_l_form(&l, &w.t(), &w.v())?;
            if ff.sign() == num_bigint::Sign::Minus {
                negative += 1;
                if negative == 1 {
                    println!("  {text}: T={} V={} f-form {ff} L-form {lf}", w.t(), w.v());
                }
            }
        }
        println!("{text}: {} windows, {negative} negative", windows.len());
    }
    Ok(())
}
