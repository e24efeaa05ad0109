//! Runs every example's `run` against the bundled fixtures.

#![allow(dead_code)]

#[path = "../examples/compress_words.rs"]
mod compress_words;
#[path = "../examples/concept_categorization.rs"]
mod concept_categorization;
#[path = "../examples/filters.rs"]
mod filters;
#[path = "../examples/nearest_neighbors.rs"]
mod nearest_neighbors;
#[path = "../examples/sentence_encoding.rs"]
mod sentence_encoding;
#[path = "../examples/sts_eval.rs"]
mod sts_eval;
#[path = "../examples/word_similarity.rs"]
mod word_similarity;

#[test]
fn filters_reconstruct() {
    assert!(filters::run().unwrap() < 1e-9);
}

#[test]
fn compress_words_dims() {
    assert_eq!(compress_words::run(&[]).unwrap(), (8, 6));
}

#[test]
fn sentence_encoding_widths() {
    assert_eq!(sentence_encoding::run().unwrap(), vec![16, 16, 16, 16]);
}

#[test]
fn word_similarity_full_level_matches_raw() {
    let v = word_similarity::run(&[]).unwrap();
    assert_eq!(v.len(), 4);
    assert_eq!(v[0], v[1]);
}

#[test]
fn nearest_neighbors_of_cat() {
    let ns = nearest_neighbors::run(&[]).unwrap();
    assert_eq!(ns.len(), 5);
    let top: Vec<&str> = ns[..2].iter().map(|n| n.word.as_str()).collect();
    assert!(top.contains(&"dog") && top.contains(&"bird"));
}

#[test]
fn concept_categorization_separates() {
    assert_eq!(concept_categorization::run(&[]).unwrap(), 1.0);
}

#[test]
fn sts_level_zero_matches_average() {
    let r = sts_eval::run(&[]).unwrap();
    assert_eq!(r[0].0, "avg");
    assert!((r[0].1 - r[1].1).abs() < 1e-12);
}
