//! Replays the 4-linkage pipeline on dense hosts and prints each stage.
//!
//! Usage: `cargo run --release --example pipeline_replay -- [samples] [seed]`

use knitweave::harness::{campaign_pipeline_4linked, Certificate, PipelineCampaign};

fn main() -> knitweave::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let params = PipelineCampaign {
        samples: args.first().copied().unwrap_or(2) as usize,
        seed: args.get(1).copied().unwrap_or(0),
        ..PipelineCampaign::default()
    };
    let report = campaign_pipeline_4linked(&params)?;
    report.revalidate()?;
    for rec in &report.instances {
        println!("{}: {:?} in {:.0} ms", rec.descriptor, rec.verdict, rec.wall_ms.unwrap_or(0.0));
        if let Some(Certificate::Pipeline(cert)) = &rec.certificate {
            println!(
                "  minimized to {} vertices, center {} (case {:?}), witness {} by {:?}",
                cert.original.len(),
                cert.center,
                cert.case,
                cert.witness,
                cert.route
            );
            for path in &cert.linkage.paths {
                println!("  path {path:?}");
            }
        }
    }
    Ok(())
}
