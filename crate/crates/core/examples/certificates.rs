//! Finite certificates for the identity families, and a refused one.

use fibtile::identity::{certify_against, certify_cfinite, Identity, IdentityId};
use fibtile::sequences::{fib, Annihilator};
use fibtile::Error;
use num_bigint::BigInt;
use num_traits::Pow;

fn main() -> fibtile::Result<()> {
    print!("{}", certify_cfinite(&Identity::fixed(IdentityId::Sury)?)?.as_text());
    for m in 2..=10 {
        for id in [Identity::general(m)?, Identity::alternating(m)?] {
            let c = certify_cfinite(&id)?;
            println!("{id}: order {}, {} terms checked", c.annihilator_order, c.checked.len());
        }
    }

    let id = Identity::general(3)?;
    let wrong = |n: u64| Pow::pow(&BigInt::from(3), n + 1) * fib(n);
    let ann = Annihilator::fibonacci().scaled(&BigInt::from(3));
    match certify_against(&id, &wrong, &ann) {
        Err(Error::CertificateRefused { witness, lhs, rhs }) => {
            println!("3^(n+1) F(n) refused at n = {witness}: {lhs} != {rhs}")
        }
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
