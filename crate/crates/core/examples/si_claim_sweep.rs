//! Sweeps the `s_i` claims over random hosts and prints per-claim counts.
//!
//! Usage: `cargo run --release --example si_claim_sweep -- [samples] [seed] [n_lo n_hi d_lo d_hi]`

use knitweave::harness::{campaign_lemma_si, SiCampaign};

fn main() -> knitweave::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let mut params = SiCampaign {
        samples: args.first().copied().unwrap_or(200) as usize,
        seed: args.get(1).copied().unwrap_or(0),
        ..SiCampaign::default()
    };
    if let [_, _, n_lo, n_hi, d_lo, d_hi] = args[..] {
        params.sizes = (n_lo as usize, n_hi as usize);
        params.degrees = (d_lo as usize, d_hi as usize);
    }
    let report = campaign_lemma_si(&params)?;
    report.revalidate()?;
    let s = &report.summary;
    println!(
        "{} instances: {} pass, {} vacuous, {} with violations",
        s.instances, s.passed, s.vacuous, s.violations
    );
    for (claim, count) in &s.checks {
        println!("  {claim:<34} {count:>9} checks");
    }
    for cx in report.counterexamples.iter().take(10) {
        println!("  counterexample: {}", serde_json::to_string(&cx.certificate)?);
    }
    Ok(())
}
