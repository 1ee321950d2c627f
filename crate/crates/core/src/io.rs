//! JSON files for groups, braces, cocycles and solutions.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use crate::brace::{BraceError, BraceFile, SkewBrace};
use crate::constructions::{CocycleDatum, CocycleFile, ConstructionError};
use crate::groups::{FiniteGroup, GroupError, GroupFile};
use crate::ybe::{Solution, SolutionFile, YbeError};

#[derive(Error, Debug)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: invalid JSON: {source}")]
    Parse { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {source}")]
    Group { path: PathBuf, source: GroupError },
    #[error("{path}: {source}")]
    Brace { path: PathBuf, source: BraceError },
    #[error("{path}: {source}")]
    Construction { path: PathBuf, source: ConstructionError },
    #[error("{path}: {source}")]
    Solution { path: PathBuf, source: YbeError },
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_owned(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|source| IoError::Parse {
        path: path.to_owned(),
        source,
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), IoError> {
    let text = serde_json::to_string(value).expect("file types serialize");
    fs::write(path, text + "\n").map_err(|source| IoError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, IoError> {
    FiniteGroup::from_file(&read_json::<GroupFile>(path)?).map_err(|source| IoError::Group {
        path: path.to_owned(),
        source,
    })
}

pub fn load_brace(path: &Path) -> Result<SkewBrace, IoError> {
    SkewBrace::from_file(&read_json::<BraceFile>(path)?).map_err(|source| IoError::Brace {
        path: path.to_owned(),
        source,
    })
}

pub fn save_brace(path: &Path, a: &SkewBrace) -> Result<(), IoError> {
    write_json(path, &a.to_file())
}

pub fn load_cocycle(path: &Path) -> Result<CocycleDatum, IoError> {
    CocycleDatum::from_file(&read_json::<CocycleFile>(path)?).map_err(|source| IoError::Construction {
        path: path.to_owned(),
        source,
    })
}

pub fn load_solution(path: &Path) -> Result<Solution, IoError> {
    Solution::from_file(&read_json::<SolutionFile>(path)?).map_err(|source| IoError::Solution {
        path: path.to_owned(),
        source,
    })
}

pub fn save_solution(path: &Path, s: &Solution) -> Result<(), IoError> {
    write_json(path, &s.to_file())
}
