//! Fibonacci, Lucas and a custom C-finite recurrence.

use fibtile::sequences::{check_lemma1, check_pell, fib, lucas, CFiniteSpec};

fn main() -> fibtile::Result<()> {
    for n in [0, 1, 2, 10, 50, 100] {
        println!("F({n}) = {}  L({n}) = {}", fib(n), lucas(n));
    }

    // Pell numbers: P(n) = 2P(n-1) + P(n-2)
    let pell = CFiniteSpec::from_i64(&[2, 1], &[0, 1])?;
    let terms: Vec<String> = pell.terms(10).iter().map(ToString::to_string).collect();
    println!("Pell: {}", terms.join(" "));

    let ok = (1..=500).all(|n| check_lemma1(n) == Ok(true)) && (0..=500).all(check_pell);
    println!("L(n) = F(n-1) + F(n+1) and L^2 - 5F^2 = 4(-1)^n for n <= 500: {ok}");
    Ok(())
}
