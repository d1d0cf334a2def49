//! Median twisted decode time at k = 2 as n doubles. Run with --release.

use rankcode::bench::{median_decode_time, timing_code};

fn main() -> rankcode::Result<()> {
    let mut prev = None;
    for n in [4, 8] {
        let code = timing_code(3, n, 2, true, 5)?;
        let median = median_decode_time(&code, 21, 9)?;
        print!("n = {n}: median {:.1} us", median.as_secs_f64() * 1e6);
        if let Some(p) = prev {
            print!(", ratio {:.2}", median.as_secs_f64() / p);
        }
        println!();
        prev = Some(median.as_secs_f64());
    }
    Ok(())
}
