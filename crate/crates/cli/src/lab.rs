use autk2::lab::{default_bound, digits_suite, gamma_relations_check, logscale_suite, pgroup_suite, pingpong_suite};
use autk2::report::Report;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::commands::Output;
use crate::error::CliError;
use crate::LabCmd;

/// The groups scanned by `lab pgroup` when no `--p`/`--r` is given.
pub const DEFAULT_PGROUP_CASES: [(u64, u32); 5] = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)];

fn name(cmd: &LabCmd) -> &'static str {
    match cmd {
        LabCmd::Pingpong { .. } => "pingpong",
        LabCmd::Gamma { .. } => "gamma",
        LabCmd::Pgroup { .. } => "pgroup",
        LabCmd::Digits { .. } => "digits",
        LabCmd::Logscale { .. } => "logscale",
    }
}

/// Run a suite over ℚ. The second value is whether every check passed.
pub fn run_lab(cmd: &LabCmd, seed: u64) -> Result<(Output, bool), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rep: Report = match cmd {
        LabCmd::Pingpong { pairs, words } => pingpong_suite(&mut rng, *pairs, *words)?,
        LabCmd::Gamma { words } => gamma_relations_check(&mut rng, *words)?,
        LabCmd::Pgroup { p, r, bound } => {
            let cases = match (p, r) {
                (Some(p), Some(r)) => vec![(*p, *r)],
                (None, None) => DEFAULT_PGROUP_CASES.to_vec(),
                _ => return Err(CliError::Usage("--p and --r go together".into())),
            };
            pgroup_suite(&cases, bound.unwrap_or_else(default_bound))?
        }
        LabCmd::Digits { p, n } => digits_suite(*p, *n)?,
        LabCmd::Logscale { random } => logscale_suite(&mut rng, *random)?,
    };
    let suite = name(cmd);
    let summary = rep.summary();
    let mut out = Output {
        text: rep.to_string().lines().map(str::to_string).collect(),
        records: rep
            .records
            .iter()
            .map(|r| {
                let mut v = serde_json::to_value(r).expect("plain record");
                v["suite"] = json!(suite);
                v
            })
            .collect(),
        warnings: vec![],
    };
    out.records
        .push(json!({ "suite": suite, "summary": summary, "pass": rep.pass() }));
    Ok((out, rep.pass()))
}
