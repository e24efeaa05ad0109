//! Lists the supported filters, checks their taps, and shows the packet
//! tree of a 300-dimensional signal.
//!
//! ```text
//! cargo run --example filters
//! ```

use wavelet_embed::dwt::{dwt_1d, idwt_1d, packet_level, subband_len};
use wavelet_embed::{Result, WaveletFilter};

/// Returns the worst reconstruction error over all filters.
pub fn run() -> Result<f64> {
    let x: Vec<f64> = (0..300)
        .map(|i| (i as f64 * 0.37).sin() + 0.25 * (i as f64 * 1.9).cos())
        .collect();

    println!(
        "{:<7} {:>4} {:>12} {:>12}",
        "filter", "taps", "orth err", "recon err"
    );
    let mut worst: f64 = 0.0;
    for f in WaveletFilter::all() {
        let (a, d) = dwt_1d(&x, &f)?;
        let y = idwt_1d(&a, &d, &f, x.len())?;
        let err = x
            .iter()
            .zip(&y)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max);
        worst = worst.max(err);
        println!(
            "{:<7} {:>4} {:>12.1e} {:>12.1e}",
            f.name(),
            f.len(),
            f.check().max_orth_err,
            err
        );
    }

    let coif2 = WaveletFilter::new("coif2")?;
    println!("\npacket tree of a 300-d signal ({coif2})");
    for level in 1..=3 {
        let bands = packet_level(&x, &coif2, level)?;
        let names: Vec<String> = bands.iter().map(|b| b.path.band_name()).collect();
        println!(
            "  level {level}: {} bands x {} -> {}",
            bands.len(),
            subband_len(300, level),
            names.join(" ")
        );
    }
    Ok(worst)
}

fn main() -> Result<()> {
    let worst = run()?;
    println!("\nworst reconstruction error: {worst:.1e}");
    Ok(())
}
