//! Line-oriented group catalogs.
//!
//! ```text
//! # comment
//! group 16 9 Q16
//! gen (1,2,3,4,5,6,7,8)(9,10,11,12,13,14,15,16)
//! gen (1,9,5,13)(2,16,6,12)(3,15,7,11)(4,14,8,10)
//! ```
//!
//! The name is the rest of the header line and may contain spaces.

use std::fs;
use std::path::{Path, PathBuf};

use super::{FiniteGroup, Perm};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub order: usize,
    pub index: usize,
    pub name: String,
    pub generators: Vec<Perm>,
}

impl CatalogEntry {
    /// Build the group and check the declared order.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        let g = FiniteGroup::from_generators(&self.generators, cap)?;
        if g.order() != self.order {
            return Err(Error::Contract(format!(
                "catalog entry ({},{}) {} generates a group of order {}",
                self.order,
                self.index,
                self.name,
                g.order()
            )));
        }
        Ok(g.with_label(self.name.clone()))
    }

    pub fn key(&self) -> (usize, usize) {
        (self.order, self.index)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

fn parse_error(line_no: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("catalog line {line_no}: {msg}"))
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("group") {
            let mut parts = rest.split_whitespace();
            let order = parts
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| parse_error(line_no, "expected order"))?;
            let index = parts
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| parse_error(line_no, "expected index"))?;
            let name = parts.collect::<Vec<_>>().join(" ");
            if name.is_empty() {
                return Err(parse_error(line_no, "missing group name"));
            }
            entries.push(CatalogEntry { order, index, name, generators: Vec::new() });
        } else if let Some(rest) = line.strip_prefix("gen") {
            let entry = entries
                .last_mut()
                .ok_or_else(|| parse_error(line_no, "gen line before any group header"))?;
            let p = Perm::parse(rest, None).map_err(|e| parse_error(line_no, e))?;
            entry.generators.push(p);
        } else {
            return Err(parse_error(line_no, format!("unrecognised line {line:?}")));
        }
    }
    for e in &mut entries {
        e.generators = super::perm::pad_all(std::mem::take(&mut e.generators));
    }
    Ok(entries)
}

impl Catalog {
    pub fn from_entries(entries: Vec<CatalogEntry>) -> Self {
        let mut c = Catalog::default();
        c.extend(entries);
        c
    }

    /// Add entries; keys already present are kept from the first source.
    pub fn extend(&mut self, entries: Vec<CatalogEntry>) {
        for e in entries {
            if !self.entries.iter().any(|x| x.key() == e.key()) {
                self.entries.push(e);
            }
        }
        self.entries.sort_by_key(|e| e.key());
    }

    pub fn load_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("cannot read catalog {}: {e}", path.display())))?;
        Ok(Self::from_entries(parse_catalog(&text)?))
    }

    /// Load every `*.cat` file of a directory, in file-name order.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        let rd = fs::read_dir(dir)
            .map_err(|e| Error::Io(format!("cannot read catalog directory {}: {e}", dir.display())))?;
        let mut files: Vec<PathBuf> = rd
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "cat"))
            .collect();
        files.sort();
        let mut cat = Catalog::default();
        for f in files {
            cat.extend(Self::load_file(&f)?.entries);
        }
        Ok(cat)
    }

    /// A file loads that file; a directory loads all catalogs inside it.
    pub fn load(path: &Path) -> Result<Self> {
        if path.is_dir() {
            Self::load_dir(path)
        } else {
            Self::load_file(path)
        }
    }

    pub fn get(&self, order: usize, index: usize) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.order == order && e.index == index)
    }

    pub fn in_range(&self, min: usize, max: usize) -> Vec<&CatalogEntry> {
        self.entries.iter().filter(|e| e.order >= min && e.order <= max).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# two small groups
group 2 1 C2
gen (1,2)

group 4 2 C2 x C2   # Klein
gen (1,2)
gen (3,4)
group 1 1 1
";

    #[test]
    fn parses_sample() {
        let e = parse_catalog(SAMPLE).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e[1].name, "C2 x C2");
        assert_eq!(e[1].generators[0].degree(), 4);
        assert!(e[2].generators.is_empty());
        let cat = Catalog::from_entries(e);
        assert_eq!(cat.entries[0].key(), (1, 1));
        assert_eq!(cat.get(4, 2).unwrap().build(64).unwrap().order(), 4);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_catalog("gen (1,2)").is_err());
        assert!(parse_catalog("group x 1 C2").is_err());
        assert!(parse_catalog("group 2 1 C2\nfoo").is_err());
        let bad = parse_catalog("group 3 1 C3\ngen (1,2)").unwrap();
        assert!(bad[0].build(64).is_err());
    }
}
