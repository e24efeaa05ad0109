//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! The optional external-data check reads fastText 300-d vectors from the
//! path in `WAVELET_EMBED_FASTTEXT` and is skipped when that is unset.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use wavelet_embed::compress::{
    average_words, compress_table, compress_word, output_dim, CompressionSpec,
};
use wavelet_embed::dct::dct_ii;
use wavelet_embed::dwt::{dwt_1d, idwt_1d, packet_concat, packet_level, PacketPath};
use wavelet_embed::embedding::{load_embeddings_file, LoadOptions};
use wavelet_embed::eval::{
    cosine, eval_categorization, eval_word_similarity, pearson, spearman, CategorizationDataset,
    WordPair, WordSimDataset,
};
use wavelet_embed::sentence::encode;
use wavelet_embed::{EmbeddingTable, SentenceEncoderConfig, WaveletFilter};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, ok: impl Into<String>, fail: impl Into<String>) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(fail.into())
    }
}

fn perfect_reconstruction() -> Outcome {
    let start = Instant::now();
    let mut r = rng(100);
    let mut worst: f64 = 0.0;
    for f in WaveletFilter::all() {
        for _ in 0..200 {
            let n = r.random_range(1..=512);
            let x = random_vec(&mut r, n);
            let (a, d) = dwt_1d(&x, &f).map_err(|e| e.to_string())?;
            let y = idwt_1d(&a, &d, &f, n).map_err(|e| e.to_string())?;
            worst = worst.max(max_abs_diff(&x, &y));
        }
    }
    let took = start.elapsed();
    check(
        worst <= 1e-9 && took < Duration::from_secs(60),
        format!("24 filters x 200 signals, max err {worst:.1e}, {took:.2?}"),
        format!("max err {worst:.1e} (tol 1e-9), {took:.2?}"),
    )
}

fn filter_integrity() -> Outcome {
    let bad: Vec<String> = WaveletFilter::all()
        .into_iter()
        .filter(|f| !f.check().passes(1e-10))
        .map(|f| format!("{f}: {:?}", f.check()))
        .collect();
    check(
        bad.is_empty(),
        "all 24 filters within 1e-10",
        bad.join("; "),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut r = rng(101);
    let mut dwt_err: f64 = 0.0;
    for f in WaveletFilter::all() {
        for n in 1..=32 {
            let x = random_vec(&mut r, n);
            let (a, d) = dwt_1d(&x, &f).map_err(|e| e.to_string())?;
            let (oa, od) = dwt_by_matrix(&x, f.low(), f.high());
            dwt_err = dwt_err
                .max(max_abs_diff(&a, &oa))
                .max(max_abs_diff(&d, &od));
        }
    }
    let mut dct_err: f64 = 0.0;
    for n in 1..=64 {
        let x = random_vec(&mut r, n);
        let c = dct_ii(&x).map_err(|e| e.to_string())?;
        dct_err = dct_err.max(max_abs_diff(c.values(), &dct_definition(&x)));
    }
    check(
        dwt_err <= 1e-10 && dct_err <= 1e-10,
        format!("dwt vs matrix {dwt_err:.1e}, dct vs definition {dct_err:.1e}"),
        format!("dwt err {dwt_err:.1e}, dct err {dct_err:.1e} (tol 1e-10)"),
    )
}

fn dimension_reproduction() -> Outcome {
    let cases = [("D", 150), ("D,AD", 225), ("D,AD,AAD", 263)];
    let x = random_vec(&mut rng(102), 300);
    for f in WaveletFilter::all() {
        for (paths, want) in cases {
            let spec = CompressionSpec::parse(f.name(), paths).map_err(|e| e.to_string())?;
            let predicted = output_dim(spec.paths(), 300);
            let actual = compress_word(&x, &spec).map_err(|e| e.to_string())?.len();
            if predicted != want || actual != want {
                return Err(format!(
                    "{f} {paths}: predicted {predicted}, actual {actual}, want {want}"
                ));
            }
        }
    }
    Ok("150 / 225 / 263 at d=300 for every filter".into())
}

fn fixed_size_sentences() -> Outcome {
    let mut r = rng(103);
    for (level, k) in [(1, 1), (2, 1), (1, 2)] {
        let cfg = SentenceEncoderConfig::new(WaveletFilter::new("coif2").unwrap(), level, k)
            .map_err(|e| e.to_string())?;
        for n in [1, 5, 40] {
            let words: Vec<Vec<f64>> = (0..n).map(|_| random_vec(&mut r, 300)).collect();
            let len = encode(&words, &cfg)
                .map_err(|e| e.to_string())?
                .values
                .len();
            if len != 300 {
                return Err(format!("L={level} K={k} N={n}: length {len}"));
            }
        }
    }
    Ok("length 300 for (L,K) in {(1,1),(2,1),(1,2)}, N in {1,5,40}".into())
}

fn linearity_bridge() -> Outcome {
    let mut r = rng(104);
    let mut bridge: f64 = 0.0;
    let mut avg_cos: f64 = 0.0;
    for f in WaveletFilter::all() {
        for _ in 0..10 {
            let words: Vec<Vec<f64>> = (0..4).map(|_| random_vec(&mut r, 8)).collect();
            let cfg = SentenceEncoderConfig::new(f.clone(), 1, 1).unwrap();
            let enc = encode(&words, &cfg).map_err(|e| e.to_string())?.values;
            let mean = average_words(&words).unwrap();
            let expected: Vec<f64> = packet_concat(&mean, &f, 1)
                .unwrap()
                .into_iter()
                .map(|x| 2.0 * x)
                .collect();
            bridge = bridge.max(max_abs_diff(&enc, &expected));

            let pure = SentenceEncoderConfig::new(f.clone(), 0, 1).unwrap();
            let enc0 = encode(&words, &pure).unwrap().values;
            avg_cos = avg_cos.max((cosine(&enc0, &mean).unwrap() - 1.0).abs());
        }
    }
    check(
        bridge <= 1e-9 && avg_cos <= 1e-9,
        format!("sqrt(N)-mean identity {bridge:.1e}, |cos(L0,AVG)-1| {avg_cos:.1e}"),
        format!("bridge {bridge:.1e}, cos gap {avg_cos:.1e} (tol 1e-9)"),
    )
}

fn full_level_orthogonality() -> Outcome {
    let mut r = rng(105);
    let spec = CompressionSpec::parse("coif2", "A,D").unwrap();
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let u = random_vec(&mut r, 300);
        let v = random_vec(&mut r, 300);
        let before = cosine(&u, &v).unwrap();
        let after = cosine(
            &compress_word(&u, &spec).unwrap(),
            &compress_word(&v, &spec).unwrap(),
        )
        .unwrap();
        worst = worst.max((before - after).abs());
    }

    let words: Vec<String> = (0..12).map(|i| format!("w{i}")).collect();
    let table = EmbeddingTable::from_pairs(
        "toy",
        16,
        words.iter().map(|w| (w.as_str(), random_vec(&mut r, 16))),
    )
    .unwrap();
    let ds = WordSimDataset {
        name: "toy".into(),
        pairs: (0..25)
            .map(|i| WordPair {
                first: words[i % 12].clone(),
                second: words[(i * 5 + 1) % 12].clone(),
                score: r.random_range(0.0..10.0),
            })
            .collect(),
    };
    let before = eval_word_similarity(&table, &ds).map_err(|e| e.to_string())?;
    let compressed = compress_table(&table, &spec).map_err(|e| e.to_string())?;
    let after = eval_word_similarity(&compressed, &ds).map_err(|e| e.to_string())?;
    check(
        worst <= 1e-7 && before == after,
        format!(
            "max cosine drift {worst:.1e}; word-sim report unchanged ({:.4})",
            before.value
        ),
        format!("cosine drift {worst:.1e}, reports {before:?} vs {after:?}"),
    )
}

fn statistics_oracles() -> Outcome {
    let mut r = rng(106);
    let mut worst: f64 = 0.0;
    for trial in 0..100 {
        let n = r.random_range(3..40);
        let xs: Vec<f64> = (0..n).map(|_| r.random_range(0..6) as f64).collect();
        let ys: Vec<f64> = if trial % 2 == 0 {
            (0..n).map(|_| r.random_range(0..4) as f64).collect()
        } else {
            random_vec(&mut r, n)
        };
        if let (Ok(s), Ok(p)) = (spearman(&xs, &ys), pearson(&xs, &ys)) {
            worst = worst
                .max((s - spearman_brute(&xs, &ys)).abs())
                .max((p - pearson_raw_sums(&xs, &ys)).abs());
        }
    }
    if worst > 1e-12 {
        return Err(format!("rank statistics differ by {worst:.1e} (tol 1e-12)"));
    }

    let mut checked = 0;
    for trial in 0..60u64 {
        let n = r.random_range(4..=8);
        let k = r.random_range(2..=3);
        let (points, labels) = clustered_instance(&mut r, n, k);
        let mut distinct = labels.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() < 2 {
            continue;
        }
        let labels: Vec<usize> = labels
            .iter()
            .map(|l| distinct.binary_search(l).unwrap())
            .collect();
        let words: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let table = EmbeddingTable::from_pairs(
            "pts",
            2,
            words
                .iter()
                .zip(&points)
                .map(|(w, p)| (w.as_str(), p.clone())),
        )
        .unwrap();
        let ds = CategorizationDataset {
            name: "pts".into(),
            items: words
                .iter()
                .zip(&labels)
                .map(|(w, l)| (w.clone(), l.to_string()))
                .collect(),
        };
        let got = eval_categorization(&table, &ds, trial)
            .map_err(|e| e.to_string())?
            .value;
        let (_, oracle) = exhaustive_partition(&points, &labels, ds.k());
        if got != oracle {
            return Err(format!(
                "trial {trial}: purity {got} vs exhaustive {oracle}"
            ));
        }
        checked += 1;
    }
    Ok(format!(
        "rank stats within {worst:.1e}; purity exact on {checked} small instances"
    ))
}

fn time_packet_level(x: &[f64], f: &WaveletFilter) -> Duration {
    const REPS: usize = 20;
    (0..9)
        .map(|_| {
            let t = Instant::now();
            for _ in 0..REPS {
                std::hint::black_box(packet_level(std::hint::black_box(x), f, 3).unwrap());
            }
            t.elapsed()
        })
        .min()
        .unwrap()
}

fn complexity() -> Outcome {
    let f = WaveletFilter::new("coif2").unwrap();
    let mut r = rng(107);
    let small = random_vec(&mut r, 2048);
    let large = random_vec(&mut r, 4096);
    time_packet_level(&small, &f);
    let ts = time_packet_level(&small, &f);
    let tl = time_packet_level(&large, &f);
    let ratio = tl.as_secs_f64() / ts.as_secs_f64();
    check(
        ratio < 2.5,
        format!("t(4096)/t(2048) = {ratio:.2} at L=3"),
        format!("ratio {ratio:.2} >= 2.5"),
    )
}

fn external_fasttext() -> Option<Outcome> {
    let path = std::env::var_os("WAVELET_EMBED_FASTTEXT")?;
    let run = || -> Outcome {
        let table = load_embeddings_file(&path, &LoadOptions::default())
            .map_err(|e| e.to_string())?
            .table;
        let get = |t: &EmbeddingTable, w: &str| {
            t.lookup(w)
                .map(<[f64]>::to_vec)
                .ok_or(format!("'{w}' missing"))
        };
        let bg = cosine(&get(&table, "boy")?, &get(&table, "girl")?).unwrap();
        let dc = cosine(&get(&table, "dog")?, &get(&table, "cow")?).unwrap();
        let spec = CompressionSpec::new(
            WaveletFilter::new("coif2").unwrap(),
            vec!["A".parse::<PacketPath>().unwrap()],
        )
        .unwrap();
        let ca = |w: &str| -> Result<Vec<f64>, String> {
            compress_word(&get(&table, w)?, &spec).map_err(|e| e.to_string())
        };
        let dc_a = cosine(&ca("dog")?, &ca("cow")?).unwrap();
        check(
            (bg - 0.77).abs() <= 0.03 && (dc - 0.39).abs() <= 0.03 && dc_a > dc,
            format!("boy-girl {bg:.3}, dog-cow {dc:.3}, dog-cow on cA {dc_a:.3}"),
            format!("boy-girl {bg:.3} (0.77), dog-cow {dc:.3} (0.39), cA {dc_a:.3}"),
        )
    };
    Some(run())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("perfect reconstruction", perfect_reconstruction),
        ("filter-table integrity", filter_integrity),
        ("oracle equivalence", oracle_equivalence),
        ("dimension reproduction", dimension_reproduction),
        ("fixed-size sentence contract", fixed_size_sentences),
        ("linearity bridge", linearity_bridge),
        ("full-level orthogonality", full_level_orthogonality),
        ("statistics oracles", statistics_oracles),
        ("packet_level complexity", complexity),
    ];
    let mut failed = 0;
    println!("\nacceptance criteria");
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS  {name:<30} {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name:<30} {detail}");
            }
        }
    }
    match external_fasttext() {
        None => println!(
            "SKIP  {:<30} set WAVELET_EMBED_FASTTEXT to run",
            "fastText word-pair cosines"
        ),
        Some(Ok(d)) => println!("PASS  {:<30} {d}", "fastText word-pair cosines"),
        Some(Err(d)) => {
            failed += 1;
            println!("FAIL  {:<30} {d}", "fastText word-pair cosines");
        }
    }
    println!("{} failed\n", failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
