//! Fold and unfold maps between board tilings and bracelet tilings.
//!
//! Unfolding an in-phase `n`-bracelet gives an `n`-board with the same tile
//! list; unfolding an out-of-phase one drops the domino over cells `n, 1` and
//! leaves an `(n-2)`-board. Uncolored, these biject bracelets onto
//! `boards(n) ⊎ boards(n-2)`; with `m²` domino colors each `(n-2)`-board
//! is hit once per color of the removed domino.
//!
//! Folding goes the other way. For a board that is not all white, let `k` be
//! the last cell covered by a tile other than a white square. Cells
//! `k+1..n` are cut off and cells `k` and `1` are glued into a `k`-bracelet.
//! There are two variants:
//!
//! * variant 1 keeps the tiles verbatim, so a square of color `c_i` (`i ≥ 2`)
//!   lands in class `c_i` and a final domino gives an in-phase bracelet;
//! * variant 2 recolors the final square `c_i → c_{i-1}` and re-glues a
//!   final domino across cells `k, 1`, giving an out-of-phase bracelet.
//!
//! With the two formal 0-bracelets absorbing the all-white board, the two
//! variants hit every bracelet of length `≤ n`, and the classes
//! `c_2..c_{m-1}` twice. Those duplicates are unfolded into `(k-1)`-boards,
//! one extra board family per duplicated color, and
//! [`verify_correspondence`] checks that the resulting map from
//! `{1, 2} × boards(n)` is a bijection.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Pow;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tiling::{
    count_board, count_bracelet, enumerate_board, BoardClass, BoardTiling, BraceletClass,
    BraceletTiling, Cap, ColorScheme, Phase, Tile, TileKind, WHITE,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

impl Variant {
    pub const BOTH: [Variant; 2] = [Variant::One, Variant::Two];

    pub fn index(self) -> u8 {
        match self {
            Variant::One => 1,
            Variant::Two => 2,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FoldResult {
    pub bracelet: BraceletTiling,
    /// Cell of the last non-white tile in the source board; equals the
    /// bracelet length.
    pub source_position: usize,
    pub variant: Variant,
}

pub fn unfold_bracelet(b: &BraceletTiling) -> Result<BoardTiling> {
    if b.length() == 0 {
        return Err(Error::param("bracelet", "0-bracelets cannot be unfolded"));
    }
    let tiles = match b.phase() {
        Phase::In => b.tiles().to_vec(),
        Phase::Out => b.tiles()[1..].to_vec(),
    };
    Ok(BoardTiling::from_valid(tiles))
}

pub fn fold_board(t: &BoardTiling, variant: Variant, scheme: ColorScheme) -> Result<FoldResult> {
    for &tile in t.tiles() {
        scheme.check(tile)?;
    }
    let idx = t.last_non_white().ok_or_else(|| {
        Error::param(
            "board",
            "the all-white tiling folds to a 0-bracelet by convention and has no fold",
        )
    })?;
    let mut kept = t.tiles()[..=idx].to_vec();
    let last = kept[idx];
    let k = t.length() - t.tiles()[idx + 1..].len();
    let bracelet = match (variant, last.kind) {
        (Variant::One, _) => BraceletTiling::from_valid(Phase::In, kept),
        (Variant::Two, TileKind::Square) => {
            kept[idx] = Tile::square(last.color - 1);
            BraceletTiling::from_valid(Phase::In, kept)
        }
        (Variant::Two, TileKind::Domino) => {
            kept.rotate_right(1);
            BraceletTiling::from_valid(Phase::Out, kept)
        }
    };
    Ok(FoldResult {
        bracelet,
        source_position: k,
        variant,
    })
}

/// Inverse of [`fold_board`]: undo the recoloring or re-gluing, then pad with
/// white squares up to length `n`.
pub fn unfold_fold(result: &FoldResult, n: usize) -> Result<BoardTiling> {
    let b = &result.bracelet;
    if b.length() == 0 || b.length() > n {
        return Err(Error::param(
            "n",
            format!("fold of length {} cannot come from an {n}-board", b.length()),
        ));
    }
    let mut tiles = b.tiles().to_vec();
    match (result.variant, b.class()) {
        (Variant::Two, BraceletClass::OutOfPhase) => tiles.rotate_left(1),
        (Variant::Two, BraceletClass::Square(c)) => {
            let last = tiles.len() - 1;
            tiles[last] = Tile::square(c + 1);
        }
        (Variant::One, BraceletClass::Square(WHITE)) | (Variant::One, BraceletClass::OutOfPhase) => {
            return Err(Error::param("fold", "not in the image of variant 1"))
        }
        (Variant::Two, BraceletClass::InPhaseDomino) => {
            return Err(Error::param("fold", "not in the image of variant 2"))
        }
        _ => {}
    }
    tiles.resize(tiles.len() + n - b.length(), Tile::square(WHITE));
    Ok(BoardTiling::from_valid(tiles))
}

/// Where an element of `{1, 2} × boards(n)` is sent by the full
/// correspondence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Bracelet(BraceletTiling),
    /// A `(k-1)`-board obtained by unfolding a duplicated square-ended
    /// `k`-bracelet; `family` is the duplicated color minus one, in `1..=m-2`.
    ExtraBoard { family: u32, board: BoardTiling },
}

/// Applies the full correspondence to one board and one variant.
pub fn correspond(t: &BoardTiling, variant: Variant, scheme: ColorScheme) -> Result<Target> {
    if t.last_non_white().is_none() {
        let phase = match variant {
            Variant::One => Phase::In,
            Variant::Two => Phase::Out,
        };
        return Ok(Target::Bracelet(BraceletTiling::empty(phase)));
    }
    let fold = fold_board(t, variant, scheme)?;
    match (variant, fold.bracelet.class()) {
        (Variant::Two, BraceletClass::Square(c)) if c >= 2 && c < scheme.m() => {
            let tiles = fold.bracelet.tiles();
            Ok(Target::ExtraBoard {
                family: c - 1,
                board: BoardTiling::from_valid(tiles[..tiles.len() - 1].to_vec()),
            })
        }
        _ => Ok(Target::Bracelet(fold.bracelet)),
    }
}

/// Image counts for bracelets of one length `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthCounts {
    pub k: usize,
    /// Variant-1 images ending in a square, indexed by color - 1.
    pub variant1_squares: Vec<u64>,
    pub variant1_in_phase: u64,
    /// Variant-2 images ending in a square, indexed by color - 1.
    pub variant2_squares: Vec<u64>,
    pub variant2_out_of_phase: u64,
    /// Variant-2 images in duplicated classes, re-routed to `(k-1)`-boards.
    pub extra_boards: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassTotals {
    /// Distinct bracelets of length `1..=n` reached in each square class.
    pub by_color: Vec<u64>,
    pub in_phase: u64,
    pub out_of_phase: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub n: usize,
    pub m: u32,
    pub boards: u64,
    pub board_square_class: u64,
    pub board_domino_class: u64,
    pub per_length: Vec<LengthCounts>,
    pub cumulative: ClassTotals,
    pub zero_bracelets: u64,
    pub extra_boards: u64,
    /// Number of distinct targets reached; must equal `2·boards`.
    pub targets: u64,
    /// `Σ_{k=0..n} m^k·L(k) + (m-2)·Σ_{k=0..n-1} m^k·F(k+1)`.
    pub expected_targets: String,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Enumerates `boards(n)` under `scheme`, applies both fold variants and the
/// full correspondence, and checks injectivity, declared classes and the
/// bookkeeping total. A failed check is reported, not returned as an error.
pub fn verify_correspondence(
    n: usize,
    scheme: ColorScheme,
    cap: Cap,
) -> Result<CorrespondenceReport> {
    if n == 0 {
        return Err(Error::param("n", "must be at least 1"));
    }
    let m = scheme.m();
    if m < 2 {
        return Err(Error::param("m", "the correspondence needs m >= 2"));
    }
    let boards = enumerate_board(n, scheme, cap)?;
    let mut witness: Option<String> = None;
    let mut fail = |msg: String| {
        if witness.is_none() {
            witness = Some(msg);
        }
    };

    let mut per_length: Vec<LengthCounts> = (1..=n)
        .map(|k| LengthCounts {
            k,
            variant1_squares: vec![0; m as usize],
            variant1_in_phase: 0,
            variant2_squares: vec![0; m as usize],
            variant2_out_of_phase: 0,
            extra_boards: 0,
        })
        .collect();
    let mut square_class = 0u64;
    let mut domino_class = 0u64;
    let mut folds: [HashMap<BraceletTiling, &BoardTiling>; 2] = [HashMap::new(), HashMap::new()];
    let mut targets: HashMap<Target, (Variant, &BoardTiling)> = HashMap::new();
    let mut cumulative = ClassTotals {
        by_color: vec![0; m as usize],
        in_phase: 0,
        out_of_phase: 0,
    };
    let mut zero_bracelets = 0u64;
    let mut extra_boards = 0u64;

    for t in &boards {
        match t.class() {
            BoardClass::Square { .. } => square_class += 1,
            BoardClass::Domino { .. } => domino_class += 1,
            BoardClass::AllWhite => {}
        }
        for variant in Variant::BOTH {
            if t.class() != BoardClass::AllWhite {
                let fold = fold_board(t, variant, scheme)?;
                let k = fold.source_position;
                if fold.bracelet.length() != k || k == 0 || k > n {
                    fail(format!("{t} folds to a bracelet of length {} with k = {k}", fold.bracelet.length()));
                    continue;
                }
                let counts = &mut per_length[k - 1];
                let declared = match (variant, fold.bracelet.class()) {
                    (Variant::One, BraceletClass::Square(c)) if c >= 2 => {
                        counts.variant1_squares[c as usize - 1] += 1;
                        true
                    }
                    (Variant::One, BraceletClass::InPhaseDomino) => {
                        counts.variant1_in_phase += 1;
                        true
                    }
                    (Variant::Two, BraceletClass::Square(c)) if c < m => {
                        counts.variant2_squares[c as usize - 1] += 1;
                        true
                    }
                    (Variant::Two, BraceletClass::OutOfPhase) => {
                        counts.variant2_out_of_phase += 1;
                        true
                    }
                    _ => false,
                };
                if !declared {
                    fail(format!(
                        "variant {variant} sends {t} to {} outside its declared classes",
                        fold.bracelet
                    ));
                }
                if unfold_fold(&fold, n).ok().as_ref() != Some(t) {
                    fail(format!("variant {variant} fold of {t} does not invert"));
                }
                let slot = &mut folds[variant.index() as usize - 1];
                if let Some(prev) = slot.insert(fold.bracelet.clone(), t) {
                    fail(format!(
                        "variant {variant} is not injective: {prev} and {t} both fold to {}",
                        fold.bracelet
                    ));
                }
            }

            let target = correspond(t, variant, scheme)?;
            match &target {
                Target::Bracelet(b) => match b.class() {
                    BraceletClass::Empty(_) => zero_bracelets += 1,
                    BraceletClass::Square(c) => cumulative.by_color[c as usize - 1] += 1,
                    BraceletClass::InPhaseDomino => cumulative.in_phase += 1,
                    BraceletClass::OutOfPhase => cumulative.out_of_phase += 1,
                },
                Target::ExtraBoard { family, board } => {
                    extra_boards += 1;
                    per_length[board.length()].extra_boards += 1;
                    if *family == 0 || *family > m - 2 || board.length() >= n {
                        fail(format!("{t} lands outside the extra board families"));
                    }
                }
            }
            if let Some((pv, prev)) = targets.insert(target, (variant, t)) {
                fail(format!(
                    "targets collide: ({pv}, {prev}) and ({variant}, {t})"
                ));
            }
        }
    }

    // Every reached class must be reached exactly as often as it has members,
    // so the injective map is also onto.
    let m_big = BigInt::from(m);
    for k in 1..=n {
        let class_square = Pow::pow(&m_big, k as u32 - 1) * crate::sequences::fib(k as u64);
        let class_domino = Pow::pow(&m_big, k as u32) * crate::sequences::fib(k as u64 - 1);
        let c = &per_length[k - 1];
        for color in 1..=m {
            let reached = c.variant1_squares[color as usize - 1] + c.variant2_squares[color as usize - 1];
            let expected = if color == 1 || color == m { 1u32 } else { 2 } * class_square.clone();
            if BigInt::from(reached) != expected {
                fail(format!(
                    "length {k}: class c_{color} reached {reached} times, expected {expected}"
                ));
            }
        }
        if BigInt::from(c.variant1_in_phase) != class_domino
            || BigInt::from(c.variant2_out_of_phase) != class_domino
        {
            fail(format!("length {k}: domino classes not covered exactly once"));
        }
    }

    let mut expected = BigInt::from(0);
    for k in 0..=n {
        expected += count_bracelet(k, scheme);
    }
    for k in 0..n {
        expected += BigInt::from(m - 2) * count_board(k, scheme);
    }
    let reached = targets.len() as u64;
    if BigInt::from(reached) != expected || reached != 2 * boards.len() as u64 {
        fail(format!(
            "bookkeeping: {reached} targets, expected {expected} = 2·{}",
            boards.len()
        ));
    }

    Ok(CorrespondenceReport {
        n,
        m,
        boards: boards.len() as u64,
        board_square_class: square_class,
        board_domino_class: domino_class,
        per_length,
        cumulative,
        zero_bracelets,
        extra_boards,
        targets: reached,
        expected_targets: expected.to_string(),
        pass: witness.is_none(),
        witness,
    })
}

impl CorrespondenceReport {
    pub fn expected_targets(&self) -> BigInt {
        self.expected_targets.parse().expect("decimal")
    }

    pub fn as_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "correspondence n={} m={}: {} boards ({} square-ended, {} domino-ended, 1 all-white)\n",
            self.n, self.m, self.boards, self.board_square_class, self.board_domino_class
        ));
        s.push_str("k  v1-squares  v1-in  v2-squares  v2-out  extra\n");
        for c in &self.per_length {
            s.push_str(&format!(
                "{}  {:?}  {}  {:?}  {}  {}\n",
                c.k, c.variant1_squares, c.variant1_in_phase, c.variant2_squares, c.variant2_out_of_phase, c.extra_boards
            ));
        }
        let colors: Vec<String> = self.cumulative.by_color.iter().map(u64::to_string).collect();
        s.push_str(&format!(
            "cumulative: squares [{}], in-phase {}, out-of-phase {}, 0-bracelets {}, extra boards {}\n",
            colors.join(", "),
            self.cumulative.in_phase,
            self.cumulative.out_of_phase,
            self.zero_bracelets,
            self.extra_boards
        ));
        s.push_str(&format!(
            "targets {} = expected {} = 2·{}: {}\n",
            self.targets,
            self.expected_targets,
            self.boards,
            if self.pass { "PASS" } else { "FAIL" }
        ));
        if let Some(w) = &self.witness {
            s.push_str(&format!("witness: {w}\n"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::tiling::enumerate_bracelet;

    fn scheme(m: u32) -> ColorScheme {
        ColorScheme::new(m).unwrap()
    }

    #[test]
    fn unfold_examples() {
        let s = scheme(1);
        let b = BraceletTiling::new(Phase::In, vec![Tile::square(1), Tile::domino(1)], s).unwrap();
        assert_eq!(unfold_bracelet(&b).unwrap().tiles(), b.tiles());
        let out = BraceletTiling::new(Phase::Out, vec![Tile::domino(1)], s).unwrap();
        assert_eq!(unfold_bracelet(&out).unwrap(), BoardTiling::all_white(0));
        assert!(unfold_bracelet(&BraceletTiling::empty(Phase::In)).is_err());
    }

    #[test]
    fn unfold_is_bijective_onto_boards() {
        // For m > 1 the out-of-phase fibres are labelled by the straddling
        // domino color; for m = 1 this is the plain l(n) = f(n) + f(n-2).
        for m in 1..=2 {
            for n in 1..=8 {
                let s = scheme(m);
                let bracelets = enumerate_bracelet(n, s, Cap::default()).unwrap();
                let mut images = HashSet::new();
                for b in &bracelets {
                    let label = match b.phase() {
                        Phase::In => 0,
                        Phase::Out => b.tiles()[0].color,
                    };
                    assert!(images.insert((label, unfold_bracelet(b).unwrap())));
                }
                let mut expected: HashSet<_> = enumerate_board(n, s, Cap::default())
                    .unwrap()
                    .into_iter()
                    .map(|t| (0, t))
                    .collect();
                if n >= 2 {
                    for c in 1..=s.domino_colors() {
                        expected.extend(
                            enumerate_board(n - 2, s, Cap::default())
                                .unwrap()
                                .into_iter()
                                .map(|t| (c, t)),
                        );
                    }
                }
                assert_eq!(images, expected, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn fold_examples() {
        let s = scheme(2);
        let t = BoardTiling::new(vec![Tile::square(2), Tile::square(1)], s).unwrap();
        let v2 = fold_board(&t, Variant::Two, s).unwrap();
        assert_eq!(v2.source_position, 1);
        assert_eq!(v2.bracelet.class(), BraceletClass::Square(1));
        assert_eq!(v2.bracelet.length(), 1);
        let v1 = fold_board(&t, Variant::One, s).unwrap();
        assert_eq!(v1.bracelet.class(), BraceletClass::Square(2));

        let d = BoardTiling::new(vec![Tile::domino(2)], s).unwrap();
        let f = fold_board(&d, Variant::One, s).unwrap();
        assert_eq!(f.bracelet, BraceletTiling::new(Phase::In, vec![Tile::domino(2)], s).unwrap());
        let f = fold_board(&d, Variant::Two, s).unwrap();
        assert_eq!(f.bracelet, BraceletTiling::new(Phase::Out, vec![Tile::domino(2)], s).unwrap());

        assert!(fold_board(&BoardTiling::all_white(3), Variant::One, s).is_err());
    }

    #[test]
    fn out_of_phase_fold_moves_domino_to_front() {
        let s = scheme(3);
        let t = BoardTiling::new(
            vec![Tile::square(2), Tile::domino(7), Tile::square(1)],
            s,
        )
        .unwrap();
        let f = fold_board(&t, Variant::Two, s).unwrap();
        assert_eq!(f.source_position, 3);
        assert_eq!(f.bracelet.to_string(), "~[==7][2]");
        assert_eq!(unfold_fold(&f, 4).unwrap(), t);
    }

    #[test]
    fn variant1_images_worked_example() {
        // m=3, n=3: variant-1 images of the square class cover c_2 and c_3, 22 each.
        let s = scheme(3);
        let mut per_color = [0usize; 3];
        for t in enumerate_board(3, s, Cap::default()).unwrap() {
            if let BoardClass::Square { .. } = t.class() {
                if let BraceletClass::Square(c) = fold_board(&t, Variant::One, s).unwrap().bracelet.class() {
                    per_color[c as usize - 1] += 1;
                }
            }
        }
        assert_eq!(per_color, [0, 22, 22]);
    }

    #[test]
    fn correspondence_small_cases() {
        let r = verify_correspondence(1, scheme(2), Cap::default()).unwrap();
        assert!(r.pass, "{:?}", r.witness);
        assert_eq!(r.targets, 4);
        assert_eq!(r.cumulative.by_color, [1, 1]);
        assert_eq!(r.zero_bracelets, 2);

        let r = verify_correspondence(3, scheme(3), Cap::default()).unwrap();
        assert!(r.pass, "{:?}", r.witness);
        assert_eq!(r.cumulative.by_color, [22, 22, 22]);
        assert_eq!((r.cumulative.in_phase, r.cumulative.out_of_phase), (36, 36));
        assert_eq!((r.board_square_class, r.board_domino_class), (44, 36));
        assert_eq!(r.extra_boards, 22);
        assert_eq!(r.targets, 162);

        assert!(verify_correspondence(0, scheme(2), Cap::default()).is_err());
        assert!(verify_correspondence(2, scheme(1), Cap::default()).is_err());
        assert!(matches!(
            verify_correspondence(5, scheme(3), Cap(10)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn round_trip_variant1() {
        let s = scheme(3);
        for t in enumerate_board(5, s, Cap::default()).unwrap() {
            if t.last_non_white().is_some() {
                for v in Variant::BOTH {
                    let f = fold_board(&t, v, s).unwrap();
                    assert_eq!(unfold_fold(&f, 5).unwrap(), t);
                }
            }
        }
    }
}
