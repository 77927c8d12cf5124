//! Colored square/domino tilings of linear boards and circular bracelets.
//!
//! An `(n, m)`-tiling uses squares in `m` colors and dominoes in `m²`
//! colors. Color 1 is white. Boards are listed left to right; bracelets are
//! listed from cell 1, and an out-of-phase bracelet lists the domino that
//! covers cells `n` and `1` first.
//!
//! Enumeration is exhaustive and lexicographic in the canonical encoding
//! (squares before dominoes, lower colors first). Since the number of
//! objects grows like `mⁿ·φⁿ`, every enumerating function takes a [`Cap`]
//! and refuses to start when the exact count exceeds it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::{fib, lucas};

pub const WHITE: u32 = 1;

/// Number of available colors: `m` for squares, `m²` for dominoes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColorScheme {
    m: u32,
}

impl ColorScheme {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::param("m", "must be at least 1"));
        }
        if m > u16::MAX as u32 {
            return Err(Error::param("m", "must fit in 16 bits"));
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn square_colors(&self) -> u32 {
        self.m
    }

    pub fn domino_colors(&self) -> u32 {
        self.m * self.m
    }

    pub(crate) fn check(&self, tile: Tile) -> Result<()> {
        let limit = match tile.kind {
            TileKind::Square => self.square_colors(),
            TileKind::Domino => self.domino_colors(),
        };
        if tile.color == 0 || tile.color > limit {
            return Err(Error::InvalidTiling(format!(
                "{tile} has color {} outside 1..={limit} (m = {})",
                tile.color, self.m
            )));
        }
        Ok(())
    }
}

/// Maximum number of tilings an enumeration may materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cap(pub u64);

impl Cap {
    pub const DEFAULT: Cap = Cap(10_000_000);

    pub fn check(self, count: &BigInt) -> Result<()> {
        if *count > BigInt::from(self.0) {
            return Err(Error::CapExceeded {
                count: count.clone(),
                cap: self.0,
            });
        }
        Ok(())
    }
}

impl Default for Cap {
    fn default() -> Self {
        Cap::DEFAULT
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileKind {
    Square,
    Domino,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    pub kind: TileKind,
    pub color: u32,
}

impl Tile {
    pub const fn square(color: u32) -> Self {
        Self {
            kind: TileKind::Square,
            color,
        }
    }

    pub const fn domino(color: u32) -> Self {
        Self {
            kind: TileKind::Domino,
            color,
        }
    }

    pub fn span(&self) -> usize {
        match self.kind {
            TileKind::Square => 1,
            TileKind::Domino => 2,
        }
    }

    pub fn is_white_square(&self) -> bool {
        self.kind == TileKind::Square && self.color == WHITE
    }

    pub fn is_domino(&self) -> bool {
        self.kind == TileKind::Domino
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TileKind::Square => write!(f, "[{}]", self.color),
            TileKind::Domino => write!(f, "[=={}]", self.color),
        }
    }
}

fn span_of(tiles: &[Tile]) -> usize {
    tiles.iter().map(Tile::span).sum()
}

fn render_tiles(f: &mut fmt::Formatter<'_>, tiles: &[Tile]) -> fmt::Result {
    if tiles.is_empty() {
        return f.write_str("()");
    }
    for t in tiles {
        write!(f, "{t}")?;
    }
    Ok(())
}

/// A tiling of a `1 × n` board.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoardTiling {
    length: usize,
    tiles: Vec<Tile>,
}

/// Class of a board tiling by its last tile that is not a white square.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoardClass {
    /// Non-white square of the given color ending at cell `k`.
    Square { k: usize, color: u32 },
    /// Domino covering cells `k-1` and `k`.
    Domino { k: usize },
    AllWhite,
}

impl BoardTiling {
    pub fn new(tiles: Vec<Tile>, scheme: ColorScheme) -> Result<Self> {
        for &t in &tiles {
            scheme.check(t)?;
        }
        Ok(Self::from_valid(tiles))
    }

    pub(crate) fn from_valid(tiles: Vec<Tile>) -> Self {
        Self {
            length: span_of(&tiles),
            tiles,
        }
    }

    pub fn all_white(n: usize) -> Self {
        Self::from_valid(vec![Tile::square(WHITE); n])
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn into_tiles(self) -> Vec<Tile> {
        self.tiles
    }

    /// Index into `tiles` of the last tile that is not a white square.
    pub fn last_non_white(&self) -> Option<usize> {
        self.tiles.iter().rposition(|t| !t.is_white_square())
    }

    pub fn class(&self) -> BoardClass {
        match self.last_non_white() {
            None => BoardClass::AllWhite,
            Some(idx) => {
                let k = span_of(&self.tiles[..=idx]);
                let tile = self.tiles[idx];
                match tile.kind {
                    TileKind::Square => BoardClass::Square {
                        k,
                        color: tile.color,
                    },
                    TileKind::Domino => BoardClass::Domino { k },
                }
            }
        }
    }
}

impl fmt::Display for BoardTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_tiles(f, &self.tiles)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    In,
    Out,
}

/// A tiling of a circular board of length `n`.
///
/// The two length-0 bracelets, one per phase, carry no tiles; they exist so
/// that the bracelet count at `n = 0` equals `L(0) = 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraceletTiling {
    length: usize,
    phase: Phase,
    tiles: Vec<Tile>,
}

/// Class of a bracelet tiling by the tile covering cell `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BraceletClass {
    Square(u32),
    InPhaseDomino,
    OutOfPhase,
    /// One of the two formal 0-bracelets.
    Empty(Phase),
}

impl BraceletTiling {
    pub fn new(phase: Phase, tiles: Vec<Tile>, scheme: ColorScheme) -> Result<Self> {
        for &t in &tiles {
            scheme.check(t)?;
        }
        if phase == Phase::Out && !tiles.is_empty() && !tiles[0].is_domino() {
            return Err(Error::InvalidTiling(
                "an out-of-phase bracelet must start with the domino covering cells n and 1"
                    .into(),
            ));
        }
        Ok(Self::from_valid(phase, tiles))
    }

    pub(crate) fn from_valid(phase: Phase, tiles: Vec<Tile>) -> Self {
        Self {
            length: span_of(&tiles),
            phase,
            tiles,
        }
    }

    pub fn empty(phase: Phase) -> Self {
        Self::from_valid(phase, Vec::new())
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn class(&self) -> BraceletClass {
        if self.tiles.is_empty() {
            return BraceletClass::Empty(self.phase);
        }
        if self.phase == Phase::Out {
            return BraceletClass::OutOfPhase;
        }
        let last = self.tiles[self.tiles.len() - 1];
        match last.kind {
            TileKind::Square => BraceletClass::Square(last.color),
            TileKind::Domino => BraceletClass::InPhaseDomino,
        }
    }
}

impl fmt::Display for BraceletTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase == Phase::Out {
            f.write_str("~")?;
        }
        render_tiles(f, &self.tiles)
    }
}

/// `mⁿ·F(n+1)` colored board tilings of length `n`.
pub fn count_board(n: usize, scheme: ColorScheme) -> BigInt {
    BigInt::from(scheme.m()).pow(n as u32) * fib(n as u64 + 1)
}

/// `mⁿ·L(n)` colored bracelet tilings of length `n`.
pub fn count_bracelet(n: usize, scheme: ColorScheme) -> BigInt {
    BigInt::from(scheme.m()).pow(n as u32) * lucas(n as u64)
}

/// Calls `visit` with every board tiling of length `n`, in lexicographic
/// order, without materializing the full list.
pub fn for_each_board(n: usize, scheme: ColorScheme, mut visit: impl FnMut(&[Tile])) {
    fn rec(
        remaining: usize,
        scheme: ColorScheme,
        acc: &mut Vec<Tile>,
        visit: &mut impl FnMut(&[Tile]),
    ) {
        if remaining == 0 {
            visit(acc);
            return;
        }
        for c in 1..=scheme.square_colors() {
            acc.push(Tile::square(c));
            rec(remaining - 1, scheme, acc, visit);
            acc.pop();
        }
        if remaining >= 2 {
            for c in 1..=scheme.domino_colors() {
                acc.push(Tile::domino(c));
                rec(remaining - 2, scheme, acc, visit);
                acc.pop();
            }
        }
    }
    let mut acc = Vec::with_capacity(n);
    rec(n, scheme, &mut acc, &mut visit);
}

pub fn enumerate_board(n: usize, scheme: ColorScheme, cap: Cap) -> Result<Vec<BoardTiling>> {
    let count = count_board(n, scheme);
    cap.check(&count)?;
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    for_each_board(n, scheme, |tiles| {
        out.push(BoardTiling::from_valid(tiles.to_vec()))
    });
    Ok(out)
}

/// All bracelet tilings of length `n`: in-phase ones first (these are the
/// board tilings of length `n`), then out-of-phase ones.
pub fn enumerate_bracelet(
    n: usize,
    scheme: ColorScheme,
    cap: Cap,
) -> Result<Vec<BraceletTiling>> {
    let count = count_bracelet(n, scheme);
    cap.check(&count)?;
    if n == 0 {
        return Ok(vec![
            BraceletTiling::empty(Phase::In),
            BraceletTiling::empty(Phase::Out),
        ]);
    }
    let mut out = Vec::with_capacity(count.to_usize().unwrap_or(0));
    for_each_board(n, scheme, |tiles| {
        out.push(BraceletTiling::from_valid(Phase::In, tiles.to_vec()))
    });
    if n >= 2 {
        for c in 1..=scheme.domino_colors() {
            for_each_board(n - 2, scheme, |tiles| {
                let mut v = Vec::with_capacity(tiles.len() + 1);
                v.push(Tile::domino(c));
                v.extend_from_slice(tiles);
                out.push(BraceletTiling::from_valid(Phase::Out, v));
            });
        }
    }
    Ok(out)
}

/// Board tilings of length `n` split by their last non-white tile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoardPartition {
    pub square: Vec<BoardTiling>,
    pub domino: Vec<BoardTiling>,
    pub all_white: BoardTiling,
}

impl BoardPartition {
    pub fn total(&self) -> usize {
        self.square.len() + self.domino.len() + 1
    }
}

/// Bracelet tilings of length `n ≥ 1` split by the tile covering cell `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraceletPartition {
    /// `by_color[i]` holds the tilings whose cell `n` is a square of color `i + 1`.
    pub by_color: Vec<Vec<BraceletTiling>>,
    pub in_phase: Vec<BraceletTiling>,
    pub out_of_phase: Vec<BraceletTiling>,
}

impl BraceletPartition {
    pub fn total(&self) -> usize {
        self.by_color.iter().map(Vec::len).sum::<usize>()
            + self.in_phase.len()
            + self.out_of_phase.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TilingPartition {
    Board(BoardPartition),
    Bracelet(BraceletPartition),
}

pub fn partition_board(n: usize, scheme: ColorScheme, cap: Cap) -> Result<BoardPartition> {
    let mut square = Vec::new();
    let mut domino = Vec::new();
    let mut all_white = None;
    for t in enumerate_board(n, scheme, cap)? {
        match t.class() {
            BoardClass::Square { .. } => square.push(t),
            BoardClass::Domino { .. } => domino.push(t),
            BoardClass::AllWhite => all_white = Some(t),
        }
    }
    Ok(BoardPartition {
        square,
        domino,
        all_white: all_white.expect("the all-white tiling is always enumerated"),
    })
}

pub fn partition_bracelet(
    n: usize,
    scheme: ColorScheme,
    cap: Cap,
) -> Result<BraceletPartition> {
    if n == 0 {
        return Err(Error::param(
            "n",
            "0-bracelets carry no tiles and have no class, use n >= 1",
        ));
    }
    let mut by_color = vec![Vec::new(); scheme.m() as usize];
    let mut in_phase = Vec::new();
    let mut out_of_phase = Vec::new();
    for b in enumerate_bracelet(n, scheme, cap)? {
        match b.class() {
            BraceletClass::Square(c) => by_color[c as usize - 1].push(b),
            BraceletClass::InPhaseDomino => in_phase.push(b),
            BraceletClass::OutOfPhase => out_of_phase.push(b),
            BraceletClass::Empty(_) => unreachable!("n >= 1"),
        }
    }
    Ok(BraceletPartition {
        by_color,
        in_phase,
        out_of_phase,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecordKind {
    Board,
    Bracelet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TileLetter {
    #[serde(rename = "s")]
    Square,
    #[serde(rename = "d")]
    Domino,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TileRecord {
    pub t: TileLetter,
    pub c: u32,
}

/// JSON form of a single tiling:
/// `{"kind":"board","length":2,"m":2,"tiles":[{"t":"s","c":1},...]}`.
/// `phase` is present for bracelets only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TilingRecord {
    pub kind: RecordKind,
    pub length: usize,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase: Option<Phase>,
    pub tiles: Vec<TileRecord>,
}

/// Either kind of tiling, as carried by a [`TilingRecord`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tiling {
    Board(BoardTiling),
    Bracelet(BraceletTiling),
}

impl From<Tile> for TileRecord {
    fn from(t: Tile) -> Self {
        TileRecord {
            t: match t.kind {
                TileKind::Square => TileLetter::Square,
                TileKind::Domino => TileLetter::Domino,
            },
            c: t.color,
        }
    }
}

impl From<TileRecord> for Tile {
    fn from(r: TileRecord) -> Self {
        match r.t {
            TileLetter::Square => Tile::square(r.c),
            TileLetter::Domino => Tile::domino(r.c),
        }
    }
}

impl BoardTiling {
    pub fn to_record(&self, scheme: ColorScheme) -> TilingRecord {
        TilingRecord {
            kind: RecordKind::Board,
            length: self.length,
            m: scheme.m(),
            phase: None,
            tiles: self.tiles.iter().copied().map(Into::into).collect(),
        }
    }
}

impl BraceletTiling {
    pub fn to_record(&self, scheme: ColorScheme) -> TilingRecord {
        TilingRecord {
            kind: RecordKind::Bracelet,
            length: self.length,
            m: scheme.m(),
            phase: Some(self.phase),
            tiles: self.tiles.iter().copied().map(Into::into).collect(),
        }
    }
}

impl TilingRecord {
    /// Validates the record and rebuilds the tiling it describes.
    pub fn to_tiling(&self) -> Result<(ColorScheme, Tiling)> {
        let scheme = ColorScheme::new(self.m)?;
        let tiles: Vec<Tile> = self.tiles.iter().copied().map(Into::into).collect();
        let tiling = match (self.kind, self.phase) {
            (RecordKind::Board, None) => Tiling::Board(BoardTiling::new(tiles, scheme)?),
            (RecordKind::Board, Some(_)) => {
                return Err(Error::InvalidTiling("board records carry no phase".into()))
            }
            (RecordKind::Bracelet, Some(phase)) => {
                Tiling::Bracelet(BraceletTiling::new(phase, tiles, scheme)?)
            }
            (RecordKind::Bracelet, None) => {
                return Err(Error::InvalidTiling("bracelet records need a phase".into()))
            }
        };
        let actual = match &tiling {
            Tiling::Board(b) => b.length(),
            Tiling::Bracelet(b) => b.length(),
        };
        if actual != self.length {
            return Err(Error::InvalidTiling(format!(
                "record declares length {} but its tiles cover {actual} cells",
                self.length
            )));
        }
        Ok((scheme, tiling))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn scheme(m: u32) -> ColorScheme {
        ColorScheme::new(m).unwrap()
    }

    #[test]
    fn board_counts_small() {
        let cap = Cap::default();
        assert_eq!(enumerate_board(2, scheme(2), cap).unwrap().len(), 8);
        assert_eq!(enumerate_board(0, scheme(3), cap).unwrap().len(), 1);
        assert_eq!(enumerate_board(3, scheme(2), cap).unwrap().len(), 24);
        assert_eq!(count_board(4, scheme(2)), BigInt::from(80));
        assert_eq!(count_board(3, scheme(3)), BigInt::from(81));
        assert_eq!(count_bracelet(0, scheme(5)), BigInt::from(2));
    }

    #[test]
    fn bracelet_counts_small() {
        let cap = Cap::default();
        let two = enumerate_bracelet(2, scheme(1), cap).unwrap();
        assert_eq!(two.len(), 3);
        let rendered: Vec<String> = two.iter().map(ToString::to_string).collect();
        assert_eq!(rendered, ["[1][1]", "[==1]", "~[==1]"]);
        assert_eq!(enumerate_bracelet(0, scheme(2), cap).unwrap().len(), 2);
        assert_eq!(enumerate_bracelet(3, scheme(3), cap).unwrap().len(), 108);
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        for m in 1..=3 {
            let boards = enumerate_board(5, scheme(m), Cap::default()).unwrap();
            assert!(boards.windows(2).all(|w| w[0] < w[1]));
            let bracelets = enumerate_bracelet(5, scheme(m), Cap::default()).unwrap();
            assert!(bracelets.windows(2).all(|w| w[0] < w[1]));
            let set: HashSet<_> = bracelets.iter().collect();
            assert_eq!(set.len(), bracelets.len());
        }
    }

    #[test]
    fn cap_exceeded_names_count() {
        let err = enumerate_board(3, scheme(2), Cap(23)).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                count: BigInt::from(24),
                cap: 23
            }
        );
        assert!(err.to_string().contains("24"));
        assert!(enumerate_board(3, scheme(2), Cap(24)).is_ok());
    }

    #[test]
    fn board_partition_examples() {
        let p = partition_board(3, scheme(3), Cap::default()).unwrap();
        assert_eq!((p.square.len(), p.domino.len()), (44, 36));
        assert_eq!(p.all_white, BoardTiling::all_white(3));

        let p = partition_board(0, scheme(4), Cap::default()).unwrap();
        assert!(p.square.is_empty() && p.domino.is_empty());
        assert_eq!(p.all_white.length(), 0);

        let p = partition_board(2, scheme(2), Cap::default()).unwrap();
        assert_eq!((p.square.len(), p.domino.len(), p.total()), (3, 4, 8));
    }

    #[test]
    fn three_colour_two_cell_boards() {
        // (3,3)-boards in the square class whose last non-white square sits on cell 2
        let p = partition_board(3, scheme(3), Cap::default()).unwrap();
        let k2: Vec<String> = p
            .square
            .iter()
            .filter(|t| matches!(t.class(), BoardClass::Square { k: 2, .. }))
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            k2,
            ["[1][2][1]", "[1][3][1]", "[2][2][1]", "[2][3][1]", "[3][2][1]", "[3][3][1]"]
        );
    }

    #[test]
    fn bracelet_partition_examples() {
        let p = partition_bracelet(3, scheme(3), Cap::default()).unwrap();
        let sizes: Vec<usize> = p.by_color.iter().map(Vec::len).collect();
        assert_eq!(sizes, [18, 18, 18]);
        assert_eq!((p.in_phase.len(), p.out_of_phase.len(), p.total()), (27, 27, 108));

        let p = partition_bracelet(1, scheme(2), Cap::default()).unwrap();
        let sizes: Vec<usize> = p.by_color.iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 1]);
        assert!(p.in_phase.is_empty() && p.out_of_phase.is_empty());

        let p = partition_bracelet(2, scheme(1), Cap::default()).unwrap();
        assert_eq!(
            (p.by_color[0].len(), p.in_phase.len(), p.out_of_phase.len()),
            (1, 1, 1)
        );
        assert!(partition_bracelet(0, scheme(2), Cap::default()).is_err());
    }

    #[test]
    fn invalid_tilings_rejected() {
        let s = scheme(2);
        assert!(BoardTiling::new(vec![Tile::square(3)], s).is_err());
        assert!(BoardTiling::new(vec![Tile::domino(5)], s).is_err());
        assert!(BoardTiling::new(vec![Tile::domino(4)], s).is_ok());
        assert!(BraceletTiling::new(Phase::Out, vec![Tile::square(1), Tile::domino(1)], s).is_err());
        assert!(ColorScheme::new(0).is_err());
    }

    #[test]
    fn record_validation() {
        let bad_len = r#"{"kind":"board","length":3,"m":2,"tiles":[{"t":"d","c":1}]}"#;
        assert!(TilingRecord::from_json(bad_len).unwrap().to_tiling().is_err());
        let no_phase = r#"{"kind":"bracelet","length":1,"m":2,"tiles":[{"t":"s","c":1}]}"#;
        assert!(TilingRecord::from_json(no_phase).unwrap().to_tiling().is_err());
        let ok = r#"{"kind":"bracelet","length":2,"m":2,"phase":"out","tiles":[{"t":"d","c":3}]}"#;
        let rec = TilingRecord::from_json(ok).unwrap();
        assert_eq!(rec.to_json(), ok);
        let (_, t) = rec.to_tiling().unwrap();
        assert_eq!(
            t,
            Tiling::Bracelet(BraceletTiling::new(Phase::Out, vec![Tile::domino(3)], scheme(2)).unwrap())
        );
        assert!(TilingRecord::from_json(r#"{"kind":"board"}"#).is_err());
    }

    #[test]
    fn ascii_rendering() {
        let b = BoardTiling::new(vec![Tile::square(2), Tile::domino(3)], scheme(2)).unwrap();
        assert_eq!(b.to_string(), "[2][==3]");
        assert_eq!(BraceletTiling::empty(Phase::Out).to_string(), "~()");
        assert_eq!(BoardTiling::all_white(0).to_string(), "()");
    }
}
