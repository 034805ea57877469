//! Puzzle files: a start grid and a goal grid separated by a `---` line.
//!
//! ```text
//! # kind: permutation
//! # any other "# " line is kept as a note
//! AB.
//! CDE
//! ---
//! CA.
//! DEB
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::Configuration;
use crate::perm::{is_solvable, Unsolvable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PuzzleKind {
    /// Reach a full rectangle.
    Compaction,
    /// Reach a relabeling of the same shape.
    Permutation,
}

impl fmt::Display for PuzzleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PuzzleKind::Compaction => "compaction",
            PuzzleKind::Permutation => "permutation",
        })
    }
}

impl FromStr for PuzzleKind {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s {
            "compaction" => Ok(PuzzleKind::Compaction),
            "permutation" => Ok(PuzzleKind::Permutation),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuzzleInstance {
    pub id: String,
    pub kind: PuzzleKind,
    pub start: Configuration,
    pub goal: Configuration,
    pub notes: String,
}

impl PuzzleInstance {
    /// Checks that the instance is well posed. A permutation puzzle may still
    /// be unsolvable (parity, for example); that is not an error here.
    pub fn validate(&self) -> Result<()> {
        match self.kind {
            PuzzleKind::Compaction => {
                if !self.goal.is_box() {
                    return Err(Error::PuzzleFormat {
                        line: 0,
                        message: "compaction goal must be a full rectangle".into(),
                    });
                }
                if self.goal.len() != self.start.len() {
                    return Err(Error::CountMismatch {
                        expected: self.goal.len(),
                        found: self.start.len(),
                    });
                }
            }
            PuzzleKind::Permutation => {
                let v = is_solvable(&self.start, &self.goal);
                if let Some(
                    r @ (Unsolvable::NotCompact
                    | Unsolvable::ShapeMismatch
                    | Unsolvable::CoreMismatch
                    | Unsolvable::LabelMismatch),
                ) = v.reason
                {
                    return Err(Error::PuzzleFormat {
                        line: 0,
                        message: format!("not a valid permutation puzzle: {r}"),
                    });
                }
            }
        }
        Ok(())
    }

    /// Parses and validates. Without a `# kind:` line the kind is guessed:
    /// a full-rectangle goal makes it a compaction puzzle.
    pub fn parse(id: &str, text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.split('\n').map(|l| l.strip_suffix('\r').unwrap_or(l)).collect();
        let mut kind = None;
        let mut notes = Vec::new();
        let mut i = 0;
        while i < lines.len() && (lines[i].starts_with("# ") || lines[i].trim().is_empty()) {
            if let Some(rest) = lines[i].strip_prefix("# ") {
                match rest.trim().strip_prefix("kind:") {
                    Some(k) => {
                        kind = Some(k.trim().parse::<PuzzleKind>().map_err(|_| Error::PuzzleFormat {
                            line: i + 1,
                            message: format!("unknown kind {:?}", k.trim()),
                        })?);
                    }
                    None => notes.push(rest.trim()),
                }
            }
            i += 1;
        }
        let sep = lines[i..]
            .iter()
            .position(|l| l.trim() == "---")
            .map(|p| p + i)
            .ok_or(Error::PuzzleFormat {
                line: lines.len(),
                message: "missing `---` separator".into(),
            })?;
        let mut end = lines.len();
        while end > sep + 1 && lines[end - 1].trim().is_empty() {
            end -= 1;
        }
        let grid = |from: usize, to: usize| -> Result<Configuration> {
            if from == to {
                return Err(Error::PuzzleFormat {
                    line: from + 1,
                    message: "empty grid".into(),
                });
            }
            Configuration::parse_grid(&lines[from..to].join("\n")).map_err(|e| match e {
                Error::IllegalChar { line, column, ch } => Error::PuzzleFormat {
                    line: from + line,
                    message: format!("illegal character {ch:?} at column {column}"),
                },
                other => Error::PuzzleFormat {
                    line: from + 1,
                    message: other.to_string(),
                },
            })
        };
        let start = grid(i, sep)?;
        let goal = grid(sep + 1, end)?;
        let kind = kind.unwrap_or(if goal.is_box() && !start.is_box() {
            PuzzleKind::Compaction
        } else {
            PuzzleKind::Permutation
        });
        let p = Self {
            id: id.to_string(),
            kind,
            start,
            goal,
            notes: notes.join("\n"),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# kind: {}\n", self.kind);
        for note in self.notes.lines() {
            out.push_str("# ");
            out.push_str(note);
            out.push('\n');
        }
        out.push_str(&self.start.format_grid());
        out.push_str("\n---\n");
        out.push_str(&self.goal.format_grid());
        out.push('\n');
        out
    }
}
