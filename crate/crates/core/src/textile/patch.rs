//! Finite configurations of tiles.
//!
//! Local coordinates `(x, y)` have `x` increasing rightward and `y`
//! upward; `origin` is the global position of local `(0, 0)`. Cells may be
//! empty: propagation from a diagonal only determines a band around it.

use crate::bool_matrix::BoolMatrix;

use super::{TextileError, TextileSystem, Tile};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Patch {
    width: usize,
    height: usize,
    origin: (i64, i64),
    cells: Vec<Option<Tile>>,
}

/// Tiles read down-right from `start`: the `m`-th tile sits at
/// `(start.0 + m, start.1 - m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalWord {
    pub tiles: Vec<Tile>,
    pub start: (i64, i64),
}

impl DiagonalWord {
    pub fn new(tiles: Vec<Tile>) -> Self {
        DiagonalWord {
            tiles,
            start: (0, 0),
        }
    }
}

impl Patch {
    pub fn empty(width: usize, height: usize, origin: (i64, i64)) -> Self {
        Patch {
            width,
            height,
            origin,
            cells: vec![None; width * height],
        }
    }

    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> Option<Tile>,
    ) -> Self {
        let mut p = Self::empty(width, height, (0, 0));
        for y in 0..height {
            for x in 0..width {
                p.cells[y * width + x] = f(x, y);
            }
        }
        p
    }

    /// Rows listed top to bottom, as drawn.
    pub fn from_rows_top_down(rows: Vec<Vec<Tile>>) -> Self {
        let height = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        let mut p = Self::empty(width, height, (0, 0));
        for (r, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), width, "ragged patch");
            let y = height - 1 - r;
            for (x, t) in row.into_iter().enumerate() {
                p.cells[y * width + x] = Some(t);
            }
        }
        p
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn origin(&self) -> (i64, i64) {
        self.origin
    }

    pub fn with_origin(mut self, origin: (i64, i64)) -> Self {
        self.origin = origin;
        self
    }

    pub fn get(&self, x: usize, y: usize) -> Option<&Tile> {
        if x < self.width && y < self.height {
            self.cells[y * self.width + x].as_ref()
        } else {
            None
        }
    }

    pub fn set(&mut self, x: usize, y: usize, t: Option<Tile>) {
        assert!(x < self.width && y < self.height, "cell outside patch");
        self.cells[y * self.width + x] = t;
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    pub fn tile_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn global(&self, x: usize, y: usize) -> (i64, i64) {
        (self.origin.0 + x as i64, self.origin.1 + y as i64)
    }

    /// The tiles on the line from the top-left cell down-right, as long as
    /// they are present.
    pub fn main_diagonal(&self) -> DiagonalWord {
        let mut tiles = Vec::new();
        if self.height > 0 {
            for m in 0..self.width.min(self.height) {
                match self.get(m, self.height - 1 - m) {
                    Some(t) => tiles.push(t.clone()),
                    None => break,
                }
            }
        }
        DiagonalWord {
            tiles,
            start: self.global(0, self.height.saturating_sub(1)),
        }
    }

    /// Copy with every tile off the main diagonal removed.
    pub fn diagonal_only(&self) -> Patch {
        let mut p = Patch::empty(self.width, self.height, self.origin);
        for m in 0..self.width.min(self.height) {
            let y = self.height - 1 - m;
            p.set(m, y, self.get(m, y).cloned());
        }
        p
    }
}

/// Every pair of neighbouring tiles agrees on the shared edge: top of a tile
/// equals the bottom of the tile above, right equals the left of the tile to
/// its right.
pub fn is_paved(p: &Patch) -> bool {
    for y in 0..p.height {
        for x in 0..p.width {
            let Some(t) = p.get(x, y) else { continue };
            if let Some(up) = p.get(x, y + 1) {
                if t.top != up.bottom {
                    return false;
                }
            }
            if let Some(right) = p.get(x + 1, y) {
                if t.right != right.left {
                    return false;
                }
            }
        }
    }
    true
}

/// For every fully populated sub-rectangle, the composite obtained by going
/// down its left column (η letters) and then along its bottom row (ρ
/// letters) is nonzero.
pub fn patch_admissible(sys: &TextileSystem, p: &Patch) -> Result<bool, TextileError> {
    if !is_paved(p) {
        return Err(TextileError::NotPaved);
    }
    let n = sys.dim();
    let mut eta = vec![None; p.width * p.height];
    let mut rho = vec![None; p.width * p.height];
    for y in 0..p.height {
        for x in 0..p.width {
            if let Some(t) = p.get(x, y) {
                if sys.tile_index(t).is_none() {
                    return Err(TextileError::UnknownTile(t.clone()));
                }
                eta[y * p.width + x] = sys.eta().matrix(&t.left);
                rho[y * p.width + x] = sys.rho().matrix(&t.bottom);
            }
        }
    }
    let present = |x: usize, y: usize| p.get(x, y).is_some();

    for x0 in 0..p.width {
        for y1 in 0..p.height {
            let mut column = BoolMatrix::identity(n);
            for y0 in (0..=y1).rev() {
                if !present(x0, y0) {
                    break;
                }
                column = column.mul(eta[y0 * p.width + x0].expect("present"));
                let mut path = column.clone();
                for x1 in x0..p.width {
                    if !(y0..=y1).all(|y| present(x1, y)) {
                        break;
                    }
                    path = path.mul(rho[y0 * p.width + x1].expect("present"));
                    if path.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Reconstructs the band of taxicab radius `radius` around a diagonal.
///
/// For a diagonal of length `k` the result is a `k×k` patch whose cells on
/// the line `x + y = k - 1 + s` are filled for `|s| ≤ radius`. A cell above
/// the line is `κ⁻¹` of its left neighbour's right edge and its lower
/// neighbour's top edge; a cell below is `κ` of its upper neighbour's bottom
/// edge and its right neighbour's left edge.
pub fn propagate_from_diagonal(
    sys: &TextileSystem,
    d: &DiagonalWord,
    radius: usize,
) -> Result<Patch, TextileError> {
    let k = d.tiles.len();
    if k == 0 {
        return Err(TextileError::EmptyDiagonal);
    }
    let mut composite = BoolMatrix::identity(sys.dim());
    for t in &d.tiles {
        let m = sys
            .composite(t)
            .ok_or_else(|| TextileError::UnknownTile(t.clone()))?;
        composite = composite.mul(m);
    }
    if composite.is_zero() {
        return Err(TextileError::InadmissibleDiagonal);
    }

    let origin = (d.start.0, d.start.1 - (k as i64 - 1));
    let mut p = Patch::empty(k, k, origin);
    for (m, t) in d.tiles.iter().enumerate() {
        p.set(m, k - 1 - m, Some(t.clone()));
    }
    for s in 1..=radius.min(k - 1) {
        for x in s..k {
            let y = k - 1 + s - x;
            let left = p.get(x - 1, y).expect("filled on the previous line");
            let lower = p.get(x, y - 1).expect("filled on the previous line");
            let t = sys
                .tile_from_left_bottom(&left.right, &lower.top)
                .ok_or(TextileError::Incompatible(p.global(x, y)))?
                .clone();
            p.set(x, y, Some(t));
        }
        for x in 0..k - s {
            let y = k - 1 - s - x;
            let upper = p.get(x, y + 1).expect("filled on the previous line");
            let right = p.get(x + 1, y).expect("filled on the previous line");
            let t = sys
                .tile_from_top_right(&upper.bottom, &right.left)
                .ok_or(TextileError::Incompatible(p.global(x, y)))?
                .clone();
            p.set(x, y, Some(t));
        }
    }
    Ok(p)
}
