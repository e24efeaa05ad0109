//! Wavelet-packet compression of word embeddings and DWT-DCT sentence
//! encoding, with an intrinsic evaluation harness.
//!
//! The building blocks, bottom up:
//!
//! * [`filter`]: orthogonal filter pairs (Haar, Daubechies, Symlets, Coiflets)
//! * [`dwt`]: periodized single-level DWT, its inverse, and packet trees
//! * [`dct`]: orthonormal DCT-II
//! * [`embedding`]: GloVe / fastText text tables
//! * [`compress`]: per-word subband selection plus baselines
//! * [`sentence`]: fixed-size sentence vectors
//! * [`eval`]: similarity, categorization and nearest-neighbour evaluation
//!
//! ```
//! use wavelet_embed::{compress::CompressionSpec, dwt::packet_level, filter::WaveletFilter};
//!
//! let spec = CompressionSpec::parse("coif2", "D,AD,AAD").unwrap();
//! assert_eq!(spec.output_dim(300), 263);
//!
//! let x: Vec<f64> = (0..300).map(|i| (i as f64 * 0.1).sin()).collect();
//! let bands = packet_level(&x, &WaveletFilter::new("db4").unwrap(), 2).unwrap();
//! assert_eq!(bands.len(), 4);
//! assert!(bands.iter().all(|b| b.coeffs.len() == 75));
//! ```

pub mod cli;
pub mod compress;
pub mod dct;
pub mod dwt;
pub mod embedding;
pub mod error;
pub mod eval;
pub mod filter;
pub mod sentence;

pub use compress::{compress_table, compress_word, CompressionSpec, RandomPool};
pub use embedding::{load_embeddings, save_embeddings, EmbeddingTable, LoadOptions};
pub use error::{Error, Result};
pub use filter::WaveletFilter;
pub use sentence::{encode, encode_tokens, SentenceEncoderConfig, SentenceVector};

/// Seed used by seeded commands when none is given.
pub const DEFAULT_SEED: u64 = 1234;
