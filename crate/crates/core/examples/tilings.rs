//! Colored board and bracelet tilings: listing, counting, classes and JSON.

use fibtile::tiling::{
    count_board, count_bracelet, enumerate_board, enumerate_bracelet, partition_board,
    partition_bracelet, Cap, ColorScheme,
};

fn main() -> fibtile::Result<()> {
    let two = ColorScheme::new(2)?;
    println!("The eight (2,2)-boards:");
    for t in enumerate_board(2, two, Cap::default())? {
        println!("  {t}");
    }

    println!("The (3,2)-bracelets (~ marks a domino wrapping the seam):");
    for b in enumerate_bracelet(3, two, Cap::default())? {
        print!("{b}  ");
    }
    println!();

    let three = ColorScheme::new(3)?;
    for n in 0..=6 {
        println!(
            "n={n}: {} boards, {} bracelets with m=3",
            count_board(n, three),
            count_bracelet(n, three)
        );
    }

    let boards = partition_board(3, three, Cap::default())?;
    println!(
        "(3,3)-boards by last non-white tile: {} square, {} domino, plus {}",
        boards.square.len(),
        boards.domino.len(),
        boards.all_white
    );
    let bracelets = partition_bracelet(3, three, Cap::default())?;
    let by_color: Vec<usize> = bracelets.by_color.iter().map(Vec::len).collect();
    println!(
        "(3,3)-bracelets by cell 3: squares {by_color:?}, in phase {}, out of phase {}",
        bracelets.in_phase.len(),
        bracelets.out_of_phase.len()
    );

    let first = &enumerate_bracelet(4, two, Cap::default())?[20];
    println!("JSON: {}", first.to_record(two).to_json());

    match enumerate_board(40, two, Cap(1_000_000)) {
        Err(e) => println!("refused: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
