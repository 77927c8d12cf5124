//! Rational generating functions, closed forms, and the printed alternating
//! forms that do not hold.

use fibtile::genfun::{
    alternating_sum_gf, alternating_sum_partial_fractions, closed_form_alt, closed_form_sum,
    printed_alternating_lucas_partial_fractions, printed_closed_form_alt, rational_to_string,
    weighted_sum_gf, RationalGF, SeqKind,
};
use num_rational::BigRational;

fn show(c: &[BigRational]) -> String {
    c.iter().map(rational_to_string).collect::<Vec<_>>().join(" ")
}

fn main() -> fibtile::Result<()> {
    println!("{}: {}", RationalGF::fibonacci(), show(&RationalGF::fibonacci().series_coeffs(12)));
    println!("{}: {}", RationalGF::lucas(), show(&RationalGF::lucas().series_coeffs(12)));

    let gf: RationalGF = "1,1 / 1,-1/2".parse()?;
    println!("{gf}: {}", show(&gf.series_coeffs(6)));

    let w = weighted_sum_gf(SeqKind::Lucas, 2);
    println!("sum 2^k L_k has gf {w}: {}", show(&w.series_coeffs(8)));

    for n in 0..6 {
        println!(
            "m=3 n={n}: sum F = {}, sum L = {}, alt F = {}, alt L = {}",
            closed_form_sum(SeqKind::Fibonacci, n, 3)?,
            closed_form_sum(SeqKind::Lucas, n, 3)?,
            closed_form_alt(SeqKind::Fibonacci, n, 3)?,
            closed_form_alt(SeqKind::Lucas, n, 3)?,
        );
    }

    println!(
        "printed alternating forms at m=3 n=1: Lucas {}, Fibonacci {}",
        printed_closed_form_alt(SeqKind::Lucas, 1, 3),
        printed_closed_form_alt(SeqKind::Fibonacci, 1, 3)
    );
    let m = 3;
    println!(
        "Lucas alternating decomposition: corrected matches {}, printed matches {}",
        alternating_sum_partial_fractions(SeqKind::Lucas, m) == alternating_sum_gf(SeqKind::Lucas, m),
        printed_alternating_lucas_partial_fractions(m) == alternating_sum_gf(SeqKind::Lucas, m)
    );
    Ok(())
}
