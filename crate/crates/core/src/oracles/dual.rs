use super::extended::{ExtendedBoard, Mark};
use crate::compact::is_canonical;
use crate::error::{Error, Result};
use crate::grid::{Configuration, Direction};

/// The empty cells of a compact board, seen as a puzzle of their own.
///
/// The primal bounding box is treated as a torus and shifted so that its
/// full columns and full rows sit at the left and bottom. Every empty cell
/// then lies in the `a''` by `b''` frame to the upper right, which is the
/// dual board. `offset` records how far the primal box was shifted; it
/// locates the primal walls inside the frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualBoard {
    pub width: usize,
    pub height: usize,
    pub offset: (usize, usize),
    cells: Vec<Option<u32>>,
}

impl DualBoard {
    pub fn of(board: &ExtendedBoard) -> Self {
        let c = board.configuration();
        let (a, b) = (c.width(), c.height());
        let full_cols: Vec<usize> = (0..a).filter(|&x| c.column_count(x) == b).collect();
        let full_rows: Vec<usize> = (0..b).filter(|&y| c.row_count(y) == a).collect();
        let (dx, dy) = (full_cols[0], full_rows[0]);
        let (a1, b1) = (full_cols.len(), full_rows.len());
        let (width, height) = (a - a1, b - b1);
        let mut cells = vec![None; width * height];
        for y in 0..b {
            for x in 0..a {
                if let Mark::Empty(e) = board.at(x, y) {
                    let tx = (x + a - dx) % a - a1;
                    let ty = (y + b - dy) % b - b1;
                    cells[ty * width + tx] = Some(e);
                }
            }
        }
        Self {
            width,
            height,
            offset: (dx, dy),
            cells,
        }
    }

    pub fn get(&self, x: usize, y: usize) -> Option<u32> {
        self.cells[y * self.width + x]
    }

    pub fn token_count(&self) -> usize {
        self.cells.iter().flatten().count()
    }

    /// The dual tokens as an ordinary configuration; token `i` is empty
    /// cell `i` of the primal board.
    pub fn configuration(&self) -> Option<Configuration> {
        let mut tokens: Vec<(u32, (i64, i64))> = (0..self.height)
            .flat_map(|y| (0..self.width).filter_map(move |x| self.get(x, y).map(|e| (e, (x as i64, y as i64)))))
            .collect();
        tokens.sort_unstable();
        Configuration::from_tokens(tokens.into_iter().map(|(_, p)| (p, 'o'))).ok()
    }

    /// Effect on the dual board of a push `d` on the primal board.
    ///
    /// With `wall` the position of the primal box side facing `d`, lines
    /// touching the wall are the primal lines that cannot move. If there are
    /// none the dual is unchanged. Otherwise those lines are pulled one step
    /// away from the wall, or equivalently every other line moves one step
    /// toward it when the shortest primal lines are the ones stuck.
    pub fn pull(&self, d: Direction) -> Self {
        let mut out = self.clone();
        if self.cells.is_empty() {
            return out;
        }
        let horizontal = d.is_horizontal();
        let (len, lines) = if horizontal { (self.width, self.height) } else { (self.height, self.width) };
        let offset = if horizontal { &mut out.offset.0 } else { &mut out.offset.1 };
        let idx = |line: usize, k: usize| if horizontal { line * self.width + k } else { k * self.width + line };
        let extent = |line: usize| {
            let ks: Vec<usize> = (0..len).filter(|&k| self.cells[idx(line, k)].is_some()).collect();
            ks.first().map(|&lo| (lo, ks[ks.len() - 1] + 1))
        };
        let far = matches!(d, Direction::Right | Direction::Up);
        let wall = len - *offset;
        let touching: Vec<bool> = (0..lines)
            .map(|l| match extent(l) {
                Some((lo, hi)) => {
                    if far {
                        lo == wall
                    } else {
                        hi == wall
                    }
                }
                None => false,
            })
            .collect();
        if !touching.contains(&true) {
            if far {
                *offset += 1;
            } else {
                *offset -= 1;
            }
            return out;
        }
        let shortest_stuck = if far { wall == 0 } else { *offset == 0 };
        // +1 moves away from the origin along the line
        let (movers, step): (Vec<usize>, isize) = if shortest_stuck {
            ((0..lines).filter(|&l| !touching[l]).collect(), if far { 1 } else { -1 })
        } else {
            if far {
                *offset += 1;
            } else {
                *offset -= 1;
            }
            ((0..lines).filter(|&l| touching[l]).collect(), if far { -1 } else { 1 })
        };
        for l in movers {
            let old: Vec<Option<u32>> = (0..len).map(|k| self.cells[idx(l, k)]).collect();
            for k in 0..len {
                let from = k as isize - step;
                out.cells[idx(l, k)] = if (0..len as isize).contains(&from) { old[from as usize] } else { None };
            }
        }
        out
    }
}

/// Dual board of a canonical configuration.
pub fn dual_config(k: &Configuration) -> Result<DualBoard> {
    if !is_canonical(k) {
        return Err(Error::NotCanonical);
    }
    Ok(DualBoard::of(&ExtendedBoard::new(k)?))
}

pub fn dual_pull(board: &DualBoard, d: Direction) -> DualBoard {
    board.pull(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compact::CanonicalShape;

    #[test]
    fn small_duals() {
        let full = dual_config(&"AB\nCD".parse().unwrap()).unwrap();
        assert_eq!((full.width, full.height, full.token_count()), (0, 0, 0));
        let one = dual_config(&"AB.\nCDE".parse().unwrap()).unwrap();
        assert_eq!((one.width, one.height, one.token_count()), (1, 1, 1));
        for d in Direction::ALL {
            assert_eq!(dual_pull(&one, d).configuration(), one.configuration());
        }
    }

    #[test]
    fn token_count_is_box_minus_tokens() {
        for n in 1..=8 {
            for shape in CanonicalShape::all(n) {
                let k = shape.labeled();
                let dual = dual_config(&k).unwrap();
                assert_eq!(dual.token_count(), k.area() - n);
            }
        }
    }

    #[test]
    fn canonical_dual_is_flush_top_right() {
        let k = CanonicalShape::from_rows(&[5, 4, 2, 2]).unwrap().labeled();
        let dual = dual_config(&k).unwrap();
        assert_eq!(dual.configuration().unwrap().format_grid(), "ooo\nooo\n..o");
    }
}
