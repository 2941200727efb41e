//! Statistics of the normalized (p+1)-deviation vectors, optionally writing
//! every vector to CSV for plotting.
//!
//!     cargo run --release --example deviation_statistics -- 300000 vectors.csv

use std::path::Path;

use power_residues::scanner::{diagram2_stats, write_csv};

fn main() {
    let mut args = std::env::args().skip(1);
    let p_max: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(20_000);
    let (stats, rows) = diagram2_stats(p_max, None).unwrap();
    println!("{stats}");
    if let Some(path) = args.next() {
        write_csv(&rows, Path::new(&path)).unwrap();
        println!("wrote {} rows to {path}", rows.len());
    }
}
