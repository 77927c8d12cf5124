//! Cutting bracelets open at the seam.

use fibtile::bijection::unfold_bracelet;
use fibtile::tiling::{enumerate_bracelet, Cap, ColorScheme};

fn main() -> fibtile::Result<()> {
    let one = ColorScheme::new(1)?;
    for b in enumerate_bracelet(5, one, Cap::default())? {
        println!("{b:>14}  ->  {}", unfold_bracelet(&b)?);
    }
    Ok(())
}
