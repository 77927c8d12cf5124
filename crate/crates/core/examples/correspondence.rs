//! The two fold variants and the full board-to-bracelet correspondence.

use fibtile::bijection::{correspond, fold_board, verify_correspondence, Target, Variant};
use fibtile::tiling::{BoardTiling, Cap, ColorScheme, Tile};

fn main() -> fibtile::Result<()> {
    let m = ColorScheme::new(3)?;
    let board = BoardTiling::new(
        vec![Tile::square(2), Tile::domino(5), Tile::square(3), Tile::square(1)],
        m,
    )?;
    println!("board {board}");
    for v in Variant::BOTH {
        let f = fold_board(&board, v, m)?;
        let target = match correspond(&board, v, m)? {
            Target::Bracelet(b) => format!("bracelet {b}"),
            Target::ExtraBoard { family, board } => format!("extra board {board} in family {family}"),
        };
        println!("  variant {v}: folds to {}, counted as {target}", f.bracelet);
    }

    let report = verify_correspondence(3, m, Cap::default())?;
    print!("{}", report.as_text());
    Ok(())
}
