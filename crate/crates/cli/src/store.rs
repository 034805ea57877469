//! Read-only puzzle directory. Every `*.puzzle` file is one instance, named by
//! its file stem.

use std::collections::BTreeMap;
use std::io;
use std::path::{Path, PathBuf};

use linepush::puzzle::PuzzleInstance;

pub const EXTENSION: &str = "puzzle";

#[derive(Debug, Default)]
pub struct PuzzleStore {
    puzzles: BTreeMap<String, PuzzleInstance>,
    /// Files that failed to load, with the reason.
    pub rejected: Vec<(PathBuf, String)>,
}

impl PuzzleStore {
    pub fn load(dir: &Path) -> io::Result<Self> {
        let mut store = Self::default();
        let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|e| e == EXTENSION))
            .collect();
        paths.sort();
        for path in paths {
            let id = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            let text = std::fs::read_to_string(&path)?;
            match PuzzleInstance::parse(&id, &text) {
                Ok(p) => {
                    store.puzzles.insert(id, p);
                }
                Err(e) => store.rejected.push((path, e.to_string())),
            }
        }
        Ok(store)
    }

    pub fn from_instances(instances: impl IntoIterator<Item = PuzzleInstance>) -> Self {
        Self {
            puzzles: instances.into_iter().map(|p| (p.id.clone(), p)).collect(),
            rejected: Vec::new(),
        }
    }

    pub fn get(&self, id: &str) -> Option<&PuzzleInstance> {
        self.puzzles.get(id)
    }

    /// Sorted by id.
    pub fn iter(&self) -> impl Iterator<Item = &PuzzleInstance> {
        self.puzzles.values()
    }

    pub fn len(&self) -> usize {
        self.puzzles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.puzzles.is_empty()
    }
}
