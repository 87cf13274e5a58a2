use std::fs;
use std::io::Read;

use autk2::amalgam::Witness;
use autk2::matrix::efactor_product;
use autk2::prelude::*;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::field::FieldSel;
use crate::{AlgebraCmd, CornerSide, WitnessContext};

/// What a command prints: text lines, or one JSON record per line.
#[derive(Default)]
pub struct Output {
    pub text: Vec<String>,
    pub records: Vec<Value>,
    /// Printed on standard error in text mode.
    pub warnings: Vec<String>,
}

impl Output {
    fn single(command: &str, field: FieldSel, result: impl ToString) -> Self {
        let result = result.to_string();
        Output {
            records: vec![json!({ "command": command, "field": field.to_string(), "result": result })],
            text: vec![result],
            warnings: vec![],
        }
    }
}

pub struct Ctx {
    pub field: FieldSel,
    pub verify: bool,
}

fn auto<F: Field>(src: &str) -> Result<PlaneAuto<F>, CliError> {
    src.parse().map_err(|e| CliError::in_source(e, src))
}

fn polymat<F: Field>(src: &str) -> Result<PolyMat2<F>, CliError> {
    parse_polymat(src).map_err(|e| CliError::in_source(e, src))
}

/// The contents of `path`, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {path}: {e}")))
    }
}

fn word<F: Field>(path: &str) -> Result<AmalgamWord<F>, CliError> {
    let src = read_input(path)?;
    parse_word(&src).map_err(|e| CliError::in_source(e, &src))
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::Verify(what()))
    }
}

fn word_output<F: Field>(command: &str, w: &AmalgamWord<F>, extra: Option<(&str, String)>) -> Output {
    let text: Vec<String> = w.to_string().lines().map(str::to_string).collect();
    let mut records = vec![json!({ "command": command, "version": autk2::amalgam::WORD_FORMAT_VERSION })];
    for line in &text[1..] {
        let (kind, payload) = line.split_once(": ").expect("word lines are `kind: payload`");
        records.push(json!({ "kind": kind, "payload": payload }));
    }
    let mut out = Output {
        text,
        records,
        warnings: vec![],
    };
    if let Some((k, v)) = extra {
        out.text.push(format!("# {k}: {v}"));
        out.records.push(json!({ k: v }));
    }
    out
}

fn pair_lines<A: std::fmt::Display, B: std::fmt::Display>(
    command: &str,
    pairs: impl Iterator<Item = (A, B, Value)>,
) -> Output {
    let mut out = Output::default();
    for (a, b, rec) in pairs {
        out.text.push(format!("{a} | {b}"));
        out.records.push(rec);
    }
    if out.text.is_empty() {
        out.text.push("identity".into());
    }
    out.records
        .insert(0, json!({ "command": command, "length": out.records.len() }));
    out
}

fn witness_output<F: Field>(w: &Witness<F>) -> Output {
    let r = w.record();
    Output {
        text: vec![
            format!("label: {}", r.label),
            format!("conjugator: {}", r.conjugator),
            format!("conjugate: {}", r.conjugate),
        ],
        records: vec![serde_json::to_value(&r).expect("plain record")],
        warnings: vec![],
    }
}

pub fn run_algebra<F: Field>(cmd: &AlgebraCmd, ctx: &Ctx) -> Result<Output, CliError> {
    let field = ctx.field;
    match cmd {
        AlgebraCmd::Compose { autos } => {
            let maps = autos.iter().map(|s| auto::<F>(s)).collect::<Result<Vec<_>, _>>()?;
            let mut acc = PlaneAuto::identity();
            for m in &maps {
                acc = acc.compose(m);
            }
            Ok(Output::single("compose", field, acc))
        }
        AlgebraCmd::Invert { auto: src } => {
            let phi = auto::<F>(src)?;
            let inv = invert(&phi)?;
            if ctx.verify {
                check(
                    phi.compose(&inv).is_identity() && inv.compose(&phi).is_identity(),
                    || format!("{inv} does not invert {phi}"),
                )?;
            }
            Ok(Output::single("invert", field, inv))
        }
        AlgebraCmd::Jacobian { auto: src } => {
            let phi = auto::<F>(src)?;
            let j = phi.jacobian();
            let unit = phi.jacobian_unit().is_some();
            let mut out = Output::single("jacobian", field, &j);
            out.records[0]["automorphism_candidate"] = json!(unit);
            if !unit {
                out.warnings.push(format!(
                    "warning: not an automorphism: jacobian {j} is not a nonzero constant"
                ));
            }
            Ok(out)
        }
        AlgebraCmd::Classify { auto: src } => {
            let flags = auto::<F>(src)?.classify();
            let names = flags.names();
            let text = if names.is_empty() {
                "none".to_string()
            } else {
                names.join(" ")
            };
            let mut rec = serde_json::to_value(flags).expect("plain record");
            rec["command"] = json!("classify");
            rec["field"] = json!(field.to_string());
            Ok(Output {
                text: vec![text],
                records: vec![rec],
                warnings: vec![],
            })
        }
        AlgebraCmd::Generator { name } => {
            let g = named_generator::<F>(name)?;
            Ok(Output::single("generator", field, g))
        }
        AlgebraCmd::Factor { auto: src } => {
            let phi = auto::<F>(src)?;
            let w = vdk_factor(&phi)?;
            if ctx.verify {
                check(w.recompose() == phi, || {
                    "factor word does not recompose to the input".into()
                })?;
            }
            Ok(word_output("factor", &w, None))
        }
        AlgebraCmd::Nf { word: path } => {
            let w = word::<F>(path)?;
            let n = normal_form(&w);
            if ctx.verify {
                check(n.recompose() == w.recompose(), || {
                    "normal form denotes a different map".into()
                })?;
            }
            let ty = word_type(&n)?;
            Ok(word_output("nf", &n, Some(("type", ty.to_string()))))
        }
        AlgebraCmd::Corner { word: path, side } => {
            let w = normal_form(&word::<F>(path)?);
            let side = match side {
                CornerSide::Affine => Side::Affine,
                CornerSide::Elementary => Side::Elem,
            };
            let gamma = conjugate_to_corner(&w, side)?;
            let ty = word_type(&w.conjugate_by(&gamma))?;
            if ctx.verify {
                check(ty == WordType::Gamma(side, side), || format!("conjugate has type {ty}"))?;
            }
            Ok(word_output("corner", &gamma, Some(("conjugate-type", ty.to_string()))))
        }
        AlgebraCmd::Witness { auto: src, context, r } => {
            let g = auto::<F>(src)?;
            let ctx_h = match context {
                WitnessContext::Saut0 => HContext::SAut0,
                WitnessContext::Borel => HContext::Borel,
                WitnessContext::Congruence => {
                    let r = r
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("--r is required for the congruence context".into()))?;
                    HContext::Congruence {
                        r: parse_scalar(r).map_err(|e| CliError::in_source(e, r))?,
                    }
                }
            };
            let w = hypothesis_h_witness(&g, &ctx_h)?;
            if ctx.verify {
                let inv = invert(&w.conjugator)?;
                check(w.conjugator.compose(&g).compose(&inv) == w.conjugate, || {
                    "conjugate mismatch".into()
                })?;
            }
            Ok(witness_output(&w))
        }
        AlgebraCmd::FreeNf { auto: src } => {
            let phi = auto::<F>(src)?;
            let w = free1_decompose(&phi)?;
            if ctx.verify {
                check(w.recompose() == phi, || {
                    "free word does not recompose to the input".into()
                })?;
            }
            Ok(pair_lines(
                "free-nf",
                w.pairs
                    .iter()
                    .map(|(d, f)| (d, f, json!({ "delta": d, "f": f.to_string() }))),
            ))
        }
        AlgebraCmd::ToMatrix { auto: src } => {
            let phi = auto::<F>(src)?;
            let m = to_matrix(&phi)?;
            if ctx.verify {
                check(from_matrix(&m)? == phi, || {
                    "matrix does not map back to the input".into()
                })?;
            }
            Ok(Output::single("to-matrix", field, m))
        }
        AlgebraCmd::FromMatrix { matrix } => {
            let g = polymat::<F>(matrix)?;
            let phi = from_matrix(&g)?;
            if ctx.verify {
                check(to_matrix(&phi)? == g, || {
                    "automorphism does not map back to the input".into()
                })?;
            }
            Ok(Output::single("from-matrix", field, phi))
        }
        AlgebraCmd::MatFactor { matrix } => {
            let g = polymat::<F>(matrix)?;
            let fs = matrix_factor(&g)?;
            if ctx.verify {
                check(efactor_product(&fs) == g, || {
                    "factors do not multiply to the input".into()
                })?;
            }
            let mut out = pair_lines(
                "mat-factor",
                fs.iter().map(|f| {
                    (
                        &f.delta,
                        format!("{} | {}", f.c, f.k),
                        serde_json::to_value(f).expect("plain record"),
                    )
                }),
            );
            out.records[0]["field"] = json!(field.to_string());
            Ok(out)
        }
        AlgebraCmd::MatNf { matrix } => {
            let g = polymat::<F>(matrix)?;
            let w = matrix_free_nf(&g)?;
            if ctx.verify {
                check(w.product() == g, || "free word does not multiply to the input".into())?;
            }
            Ok(pair_lines(
                "mat-nf",
                w.pairs
                    .iter()
                    .map(|(d, h)| (d, h, json!({ "delta": d, "h": h.to_string() }))),
            ))
        }
    }
}
