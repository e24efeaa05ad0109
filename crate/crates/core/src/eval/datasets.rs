//! Evaluation dataset formats.
//!
//! * word similarity: `word1 word2 score`, whitespace or tab separated;
//!   extra columns are ignored, `#` starts a comment line, and a first line
//!   whose score does not parse is taken as a header.
//! * categorization: `word<TAB>category` (any whitespace accepted).
//! * sentence similarity: `sentence1<TAB>sentence2<TAB>score`.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct WordPair {
    pub first: String,
    pub second: String,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WordSimDataset {
    pub name: String,
    pub pairs: Vec<WordPair>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CategorizationDataset {
    pub name: String,
    /// `(word, category)` in file order.
    pub items: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SentencePair {
    pub first: String,
    pub second: String,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StsDataset {
    pub name: String,
    pub pairs: Vec<SentencePair>,
}

fn parse_err(name: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: name.to_string(),
        line,
        msg: msg.into(),
    }
}

fn parse_score(name: &str, line: usize, s: &str) -> Result<f64> {
    match s.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(parse_err(name, line, format!("bad score '{s}'"))),
    }
}

fn content_lines<R: BufRead>(r: R) -> impl Iterator<Item = Result<(usize, String)>> {
    r.lines().enumerate().filter_map(|(i, l)| match l {
        Err(e) => Some(Err(e.into())),
        Ok(l) => {
            let l = l.strip_suffix('\r').map(str::to_string).unwrap_or(l);
            let t = l.trim();
            (!t.is_empty() && !t.starts_with('#')).then(|| Ok((i + 1, l)))
        }
    })
}

fn open(path: &Path) -> Result<(BufReader<File>, String)> {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok((BufReader::new(File::open(path)?), name))
}

impl WordSimDataset {
    pub fn parse<R: BufRead>(reader: R, name: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut first = true;
        for item in content_lines(reader) {
            let (lineno, line) = item?;
            let cols: Vec<&str> = line.split_whitespace().collect();
            if cols.len() < 3 {
                return Err(parse_err(name, lineno, "expected 'word1 word2 score'"));
            }
            let score = match parse_score(name, lineno, cols[2]) {
                Ok(s) => s,
                Err(_) if first => {
                    first = false;
                    continue;
                }
                Err(e) => return Err(e),
            };
            first = false;
            pairs.push(WordPair {
                first: cols[0].to_string(),
                second: cols[1].to_string(),
                score,
            });
        }
        if pairs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self {
            name: name.to_string(),
            pairs,
        })
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let (r, name) = open(path.as_ref())?;
        Self::parse(r, &name)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl CategorizationDataset {
    pub fn parse<R: BufRead>(reader: R, name: &str) -> Result<Self> {
        let mut items = Vec::new();
        for item in content_lines(reader) {
            let (lineno, line) = item?;
            let (word, cat) = match line.split_once('\t') {
                Some((w, c)) => (w.trim(), c.trim()),
                None => {
                    let mut it = line.split_whitespace();
                    match (it.next(), it.next(), it.next()) {
                        (Some(w), Some(c), None) => (w, c),
                        _ => return Err(parse_err(name, lineno, "expected 'word<TAB>category'")),
                    }
                }
            };
            if word.is_empty() || cat.is_empty() {
                return Err(parse_err(name, lineno, "empty word or category"));
            }
            items.push((word.to_string(), cat.to_string()));
        }
        let ds = Self {
            name: name.to_string(),
            items,
        };
        if ds.k() < 2 {
            return Err(parse_err(name, 0, "need at least two categories"));
        }
        Ok(ds)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let (r, name) = open(path.as_ref())?;
        Self::parse(r, &name)
    }

    /// Distinct category labels, sorted.
    pub fn categories(&self) -> Vec<&str> {
        let set: BTreeSet<&str> = self.items.iter().map(|(_, c)| c.as_str()).collect();
        set.into_iter().collect()
    }

    /// Number of gold categories.
    pub fn k(&self) -> usize {
        self.categories().len()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

impl StsDataset {
    pub fn parse<R: BufRead>(reader: R, name: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for item in content_lines(reader) {
            let (lineno, line) = item?;
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(parse_err(
                    name,
                    lineno,
                    "expected 'sentence1<TAB>sentence2<TAB>score'",
                ));
            }
            pairs.push(SentencePair {
                first: cols[0].to_string(),
                second: cols[1].to_string(),
                score: parse_score(name, lineno, cols[2])?,
            });
        }
        if pairs.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Self {
            name: name.to_string(),
            pairs,
        })
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let (r, name) = open(path.as_ref())?;
        Self::parse(r, &name)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}
