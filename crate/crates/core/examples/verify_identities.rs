//! Each identity checked by summation, generating functions and tilings.

use fibtile::identity::{
    verify_by_genfun, verify_by_tilings, verify_direct, Identity, IdentityId,
};
use fibtile::tiling::Cap;

fn main() -> fibtile::Result<()> {
    let sury = Identity::fixed(IdentityId::Sury)?;
    print!("{}", verify_direct(&sury, 10).as_text());

    let cases = [
        Identity::fixed(IdentityId::Theorem2)?,
        Identity::general(4)?,
        Identity::alternating(5)?,
        Identity::fixed(IdentityId::Corollary)?,
    ];
    for id in cases {
        let direct = verify_direct(&id, 150);
        let genfun = verify_by_genfun(&id, 150)?;
        println!(
            "{id}: direct {}, genfun {}, tables equal {}",
            direct.pass,
            genfun.pass,
            direct.rows == genfun.rows
        );
        match verify_by_tilings(&id, 6, Cap::default()) {
            Ok(r) => println!("  tilings: {}", r.pass),
            Err(e) => println!("  tilings: {e}"),
        }
    }
    Ok(())
}
