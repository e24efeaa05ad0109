//! Word-embedding tables and the GloVe / fastText text format.
//!
//! One record per line: a token followed by `d` numbers, separated by single
//! spaces or tabs. A leading line of exactly two integers (`V D`, the
//! fastText `.vec` header) is detected and consumed. LF and CRLF are both
//! accepted; output always uses LF and no header.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Vocabulary-to-vector map with a uniform dimension.
///
/// Vectors live in one contiguous row-major buffer in vocabulary order.
#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingTable {
    name: String,
    dim: usize,
    lowercase: bool,
    vocab: Vec<String>,
    index: HashMap<String, usize>,
    data: Vec<f64>,
}

impl EmbeddingTable {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        Self {
            name: name.into(),
            dim,
            lowercase: false,
            vocab: Vec::new(),
            index: HashMap::new(),
            data: Vec::new(),
        }
    }

    /// Table whose keys and lookups are folded to lowercase.
    pub fn lowercased(mut self) -> Self {
        self.lowercase = true;
        self
    }

    /// Builds a table from `(word, vector)` pairs; duplicates keep the first.
    pub fn from_pairs<S, I>(name: impl Into<String>, dim: usize, pairs: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (S, Vec<f64>)>,
    {
        let mut t = Self::new(name, dim);
        for (w, v) in pairs {
            t.insert(w.as_ref(), &v)?;
        }
        Ok(t)
    }

    /// Adds a word. Returns `false` (and stores nothing) if the key exists.
    pub fn insert(&mut self, word: &str, vector: &[f64]) -> Result<bool> {
        if vector.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: vector.len(),
            });
        }
        let key = self.key(word);
        if self.index.contains_key(&key) {
            return Ok(false);
        }
        self.index.insert(key.clone(), self.vocab.len());
        self.vocab.push(key);
        self.data.extend_from_slice(vector);
        Ok(true)
    }

    fn key(&self, word: &str) -> String {
        if self.lowercase {
            word.to_lowercase()
        } else {
            word.to_string()
        }
    }

    /// Exact-match retrieval; `None` means out of vocabulary.
    pub fn lookup(&self, word: &str) -> Option<&[f64]> {
        let idx = if self.lowercase {
            *self.index.get(&word.to_lowercase())?
        } else {
            *self.index.get(word)?
        };
        Some(self.row(idx))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.lookup(word).is_some()
    }

    /// Vector of the `idx`-th vocabulary entry.
    pub fn row(&self, idx: usize) -> &[f64] {
        &self.data[idx * self.dim..(idx + 1) * self.dim]
    }

    pub fn position(&self, word: &str) -> Option<usize> {
        self.index.get(&self.key(word)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &[f64])> + '_ {
        self.vocab
            .iter()
            .enumerate()
            .map(move |(i, w)| (w.as_str(), self.row(i)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.vocab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vocab.is_empty()
    }

    pub fn vocab(&self) -> &[String] {
        &self.vocab
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn is_lowercase(&self) -> bool {
        self.lowercase
    }

    /// New table over the same vocabulary with each vector replaced by
    /// `rows[i]`. All rows must have length `dim`.
    pub(crate) fn with_rows(&self, name: String, dim: usize, rows: Vec<Vec<f64>>) -> Self {
        debug_assert_eq!(rows.len(), self.vocab.len());
        let mut data = Vec::with_capacity(rows.len() * dim);
        for r in rows {
            debug_assert_eq!(r.len(), dim);
            data.extend(r);
        }
        Self {
            name,
            dim,
            lowercase: self.lowercase,
            vocab: self.vocab.clone(),
            index: self.index.clone(),
            data,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    /// Reject any record whose length differs from this.
    pub expected_dim: Option<usize>,
    /// Fold tokens (and later lookups) to lowercase.
    pub lowercase: bool,
    /// Stop after this many distinct words.
    pub max_vocab: Option<usize>,
}

/// A loaded table plus the number of malformed lines that were skipped.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub table: EmbeddingTable,
    pub skipped_lines: usize,
}

fn fields(line: &str) -> impl Iterator<Item = &str> {
    line.split([' ', '\t']).filter(|s| !s.is_empty())
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut it = fields(line);
    let v = it.next()?.parse().ok()?;
    let d = it.next()?.parse().ok()?;
    it.next().is_none().then_some((v, d))
}

/// Parses a text embedding stream.
pub fn load_embeddings<R: BufRead>(source: R, options: &LoadOptions) -> Result<Loaded> {
    load_named(source, options, "embeddings")
}

/// [`load_embeddings`] from a file; the table is named after the path.
pub fn load_embeddings_file(path: impl AsRef<Path>, options: &LoadOptions) -> Result<Loaded> {
    let path = path.as_ref();
    let file = File::open(path)?;
    load_named(BufReader::new(file), options, &path.display().to_string())
}

fn load_named<R: BufRead>(source: R, options: &LoadOptions, name: &str) -> Result<Loaded> {
    let mut expected = options.expected_dim;
    let mut enforced = expected.is_some();
    let mut table: Option<EmbeddingTable> = None;
    let mut skipped = 0;
    let mut first = true;
    let mut values = Vec::new();

    for (lineno, line) in source.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() {
            continue;
        }
        if first {
            first = false;
            if let Some((_, d)) = parse_header(line) {
                match expected {
                    Some(e) if e != d => {
                        return Err(Error::DimensionMismatch {
                            expected: e,
                            found: d,
                        })
                    }
                    _ => {
                        expected = Some(d);
                        enforced = true;
                    }
                }
                continue;
            }
        }

        let mut it = fields(line);
        let Some(word) = it.next() else {
            skipped += 1;
            continue;
        };
        values.clear();
        let mut bad = false;
        for tok in it {
            match tok.parse::<f64>() {
                Ok(v) if v.is_finite() => values.push(v),
                _ => {
                    bad = true;
                    break;
                }
            }
        }
        if bad || values.is_empty() {
            skipped += 1;
            continue;
        }

        let dim = *expected.get_or_insert(values.len());
        if values.len() != dim {
            return Err(if enforced {
                Error::DimensionMismatch {
                    expected: dim,
                    found: values.len(),
                }
            } else {
                Error::InconsistentDimension {
                    line: lineno + 1,
                    expected: dim,
                    found: values.len(),
                }
            });
        }
        let t = table.get_or_insert_with(|| {
            let t = EmbeddingTable::new(name, dim);
            if options.lowercase {
                t.lowercased()
            } else {
                t
            }
        });
        t.insert(word, &values)?;
        if options.max_vocab.is_some_and(|m| t.len() >= m) {
            break;
        }
    }

    let table = table.ok_or(Error::EmptyInput)?;
    Ok(Loaded {
        table,
        skipped_lines: skipped,
    })
}

/// Default number of decimals written by [`save_embeddings`].
pub const DEFAULT_PRECISION: usize = 6;

/// Writes `word v1 v2 ...` lines with `precision` decimals.
///
/// `precision == 0` rounds every component to an integer.
pub fn save_embeddings<W: Write>(table: &EmbeddingTable, sink: W, precision: usize) -> Result<()> {
    let mut out = BufWriter::new(sink);
    for (word, v) in table.iter() {
        write_record(&mut out, word, v, precision)?;
    }
    out.flush()?;
    Ok(())
}

pub fn save_embeddings_file(
    table: &EmbeddingTable,
    path: impl AsRef<Path>,
    precision: usize,
) -> Result<()> {
    save_embeddings(table, File::create(path)?, precision)
}

/// One record in the text format.
pub fn write_record<W: Write>(out: &mut W, key: &str, v: &[f64], precision: usize) -> Result<()> {
    out.write_all(key.as_bytes())?;
    for x in v {
        write!(out, " {x:.precision$}")?;
    }
    out.write_all(b"\n")?;
    Ok(())
}
