use std::io::Read;

use chebdyn_core::{
    build_diagram, classify, classify_with, default_scan_bound, detect_growth, detect_growth_of_kind, detect_period,
    growth_factor, promote_certificate, resolution_period, syzygy_trace, ChebContext, DiagramSpec, Family,
    GrowthCertificate, GrowthKind, IntMatrix, PeriodCertificate, Verdict,
};
use serde_json::{json, Map, Value};

use crate::args::{Cli, Command, Source};
use crate::error::CliError;
use crate::matrix_file::{entry_value, matrix_to_value, parse_matrix_file};
use crate::render::Envelope;

struct Loaded {
    x: IntMatrix,
    spec: Option<DiagramSpec>,
    input: Map<String, Value>,
}

fn parse_family(name: &str) -> Result<Family, CliError> {
    name.parse()
        .map_err(|_| CliError::Usage(format!("unknown family {name:?}")))
}

fn load(source: &Source, stdin: &mut dyn Read) -> Result<Loaded, CliError> {
    let mut input = Map::new();
    match (&source.family, &source.matrix) {
        (Some(_), Some(_)) => Err(CliError::Usage("--family and --matrix are mutually exclusive".into())),
        (None, None) => Err(CliError::Usage("one of --family or --matrix is required".into())),
        (None, Some(_)) if source.n.is_some() => Err(CliError::Usage("--n applies to --family only".into())),
        (Some(name), None) => {
            let family = parse_family(name)?;
            let index = match (source.n, family.fixed_index()) {
                (Some(n), _) => n,
                (None, Some(fixed)) => fixed,
                (None, None) => return Err(CliError::Usage(format!("--n is required for family {family}"))),
            };
            let spec = build_diagram(family, index)?;
            input.insert("source".into(), "family".into());
            input.insert("family".into(), family.name().into());
            input.insert("index".into(), index.into());
            input.insert("size".into(), spec.size().into());
            Ok(Loaded {
                x: spec.adjacency.clone(),
                spec: Some(spec),
                input,
            })
        }
        (None, Some(path)) => {
            let label = path.display().to_string();
            let mut text = String::new();
            let read = if label == "-" {
                stdin.read_to_string(&mut text).map(drop)
            } else {
                std::fs::read_to_string(path).map(|t| text = t)
            };
            read.map_err(|e| CliError::Io {
                path: label.clone(),
                reason: e.to_string(),
            })?;
            let x = parse_matrix_file(&text).map_err(|source| CliError::Parse {
                path: label.clone(),
                source,
            })?;
            input.insert("source".into(), "matrix".into());
            input.insert("path".into(), label.into());
            input.insert("size".into(), x.dim().into());
            Ok(Loaded { x, spec: None, input })
        }
    }
}

fn witness(k: usize, m: &IntMatrix) -> Value {
    json!({"k": k, "matrix": matrix_to_value(m)})
}

fn period_certificate(cert: &PeriodCertificate) -> Value {
    let d = cert.first_zero;
    let p = cert.period;
    let mut ks = vec![d, p - 1, p];
    ks.dedup();
    json!({
        "type": "period",
        "first_zero": d,
        "period": p,
        "witnesses": ks.into_iter().map(|k| witness(k, &cert.witness_window[k])).collect::<Vec<_>>(),
    })
}

fn growth_certificate(cert: &GrowthCertificate) -> Value {
    let q = cert.q as i64;
    let witnesses: Vec<Value> = [q, q - 2]
        .iter()
        .map(|&k| witness(k as usize, cert.f(k).expect("in table")))
        .collect();
    json!({
        "type": "growth",
        "q": cert.q,
        "kind": cert.kind.name(),
        "z": matrix_to_value(&cert.z),
        "witnesses": witnesses,
    })
}

fn cmd_eval(loaded: Loaded, k: i64) -> Result<Envelope, CliError> {
    let Loaded { x, mut input, .. } = loaded;
    input.insert("k".into(), k.into());
    let mut env = Envelope::new("eval", Value::Object(input));
    let mut ctx = ChebContext::new(x)?;
    let fk = ctx.eval(k)?;
    env.result = json!({"k": k, "matrix": matrix_to_value(fk)});
    Ok(env)
}

fn cmd_period(loaded: Loaded, kmax: Option<usize>) -> Result<Envelope, CliError> {
    let Loaded { x, mut input, .. } = loaded;
    let bound = kmax.unwrap_or_else(|| default_scan_bound(x.dim()));
    input.insert("kmax".into(), bound.into());
    let mut env = Envelope::new("period", Value::Object(input));
    match detect_period(&x, bound)? {
        Some(cert) => {
            env.result = json!({"found": true, "first_zero": cert.first_zero, "period": cert.period});
            env.certificates.push(period_certificate(&cert));
        }
        None => {
            env.result = json!({"found": false});
            env.warnings.push(format!("no period certificate with first zero at k <= {bound}"));
        }
    }
    Ok(env)
}

fn cmd_growth(loaded: Loaded, kmax: Option<usize>) -> Result<Envelope, CliError> {
    let Loaded { x, spec, mut input } = loaded;
    let bound = kmax.unwrap_or_else(|| default_scan_bound(x.dim()));
    input.insert("kmax".into(), bound.into());
    let mut env = Envelope::new("growth", Value::Object(input));

    // Extrapolatable kinds first; the general kind is a fallback.
    let mut best: Option<GrowthCertificate> = None;
    for kind in [GrowthKind::Uniform, GrowthKind::Reversal] {
        if let Some(cert) = detect_growth_of_kind(&x, kind, bound)? {
            if best.as_ref().map_or(true, |b| cert.q < b.q) {
                best = Some(cert);
            }
        }
    }
    let any = detect_growth(&x, bound)?;
    let Some(cert) = best.or_else(|| any.clone()) else {
        env.result = json!({"found": false});
        env.warnings.push(format!("no growth certificate with q <= {bound}"));
        return Ok(env);
    };

    let mut result = json!({"found": true, "q": cert.q, "kind": cert.kind.name(), "z": matrix_to_value(&cert.z)});
    if let Some(a) = any.as_ref().filter(|a| a.q < cert.q) {
        result["least_general_q"] = a.q.into();
    }
    env.certificates.push(growth_certificate(&cert));
    if cert.kind != GrowthKind::Uniform {
        let promoted = promote_certificate(&x, &cert, bound.max(4 * cert.q))?;
        if promoted.uniform {
            result["uniform_q"] = promoted.certificate.q.into();
            env.certificates.push(growth_certificate(&promoted.certificate));
        } else {
            env.warnings.push("no uniform certificate found; extrapolation limited to the certified kind".into());
        }
    }
    env.result = result;
    if let Some(spec) = spec.filter(|s| s.family.is_extended()) {
        if let Ok(gf) = growth_factor(&spec) {
            env.warnings.extend(gf.note);
        }
    }
    Ok(env)
}

fn cmd_classify(loaded: Loaded, kmax: Option<usize>) -> Result<Envelope, CliError> {
    let Loaded { x, mut input, .. } = loaded;
    if let Some(k) = kmax {
        input.insert("kmax".into(), k.into());
    }
    let mut env = Envelope::new("classify", Value::Object(input));
    let c = match kmax {
        Some(k) => classify_with(&x, |_| k)?,
        None => classify(&x)?,
    };
    let family = c.family.as_ref().map(|id| {
        json!({
            "family": id.family.name(),
            "index": id.index,
            "permutation": id.permutation.iter().map(|p| p + 1).collect::<Vec<_>>(),
        })
    });
    env.result = json!({
        "verdict": c.verdict.name(),
        "scan_bound": c.scan_bound,
        "family": family,
    });
    match &c.verdict {
        Verdict::Finite(cert) => env.certificates.push(period_certificate(cert)),
        Verdict::Tame(cert) => env.certificates.push(growth_certificate(cert)),
        Verdict::Wild(ev) => env.certificates.push(json!({
            "type": "wild",
            "k": ev.k,
            "magnitude": entry_value(&ev.magnitude),
            "envelope": entry_value(&ev.envelope),
        })),
    }
    Ok(env)
}

fn resolution_summary(x: &IntMatrix, spec: Option<&DiagramSpec>, env: &mut Envelope) -> Value {
    let verdict = match classify(x) {
        Ok(c) => c.verdict,
        Err(e) => {
            env.warnings.push(format!("no summary: {e}"));
            return Value::Null;
        }
    };
    match verdict {
        Verdict::Finite(_) => match resolution_period(x) {
            Ok(Some(p)) => json!({"type": "period", "period": p}),
            Ok(None) => json!({"type": "period", "period": null}),
            Err(e) => {
                env.warnings.push(format!("no period: {e}"));
                Value::Null
            }
        },
        Verdict::Tame(cert) => {
            if let Some(gf) = spec.filter(|s| s.family.is_extended()).and_then(|s| growth_factor(s).ok()) {
                env.warnings.extend(gf.note);
                return json!({"type": "growth", "q": gf.q, "kind": gf.kind.name(), "reference_q": gf.reference_q});
            }
            let bound = default_scan_bound(x.dim()).max(4 * cert.q);
            match promote_certificate(x, &cert, bound) {
                Ok(p) => json!({"type": "growth", "q": p.certificate.q, "kind": p.certificate.kind.name()}),
                Err(_) => json!({"type": "growth", "q": cert.q, "kind": cert.kind.name()}),
            }
        }
        Verdict::Wild(_) => json!({"type": "wild"}),
    }
}

fn cmd_resolve(loaded: Loaded, simple: usize, steps: usize) -> Result<Envelope, CliError> {
    let Loaded { x, spec, mut input } = loaded;
    let n = x.dim();
    if simple == 0 || simple > n {
        return Err(CliError::Usage(format!("--simple must lie in 1..={n}")));
    }
    input.insert("simple".into(), simple.into());
    input.insert("steps".into(), steps.into());
    let mut env = Envelope::new("resolve", Value::Object(input));
    let trace = syzygy_trace(&x, simple, steps)?;
    let rows: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "step": s.k,
                "multiplicities": s.projective_multiplicities.iter().map(entry_value).collect::<Vec<_>>(),
                "simple_hit": s.simple_hit,
                "semisimple": s.semisimple_flag.as_ref().map(|(j, m)| format!("{m}*S{j}")),
            })
        })
        .collect();
    for s in trace.steps.iter().filter(|s| s.semisimple_flag.is_some()) {
        env.warnings.push(format!("step {}: semisimple syzygy that is not simple", s.k));
    }
    let hits: Vec<Value> = trace
        .hits()
        .into_iter()
        .map(|(k, j)| json!({"step": k, "simple": j}))
        .collect();
    let summary = resolution_summary(&x, spec.as_ref(), &mut env);
    env.result = json!({"trace": rows, "hits": hits, "summary": summary});
    Ok(env)
}

fn cmd_diagram(loaded: Loaded) -> Result<Envelope, CliError> {
    let Loaded { x, spec, input } = loaded;
    if spec.is_none() {
        return Err(CliError::Usage("diagram needs --family".into()));
    }
    let mut env = Envelope::new("diagram", Value::Object(input));
    env.result = json!({"matrix": matrix_to_value(&x)});
    Ok(env)
}

/// Runs one command. `stdin` is read only for `--matrix -`.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Result<Envelope, CliError> {
    match &cli.command {
        Command::Eval { source, k } => cmd_eval(load(source, stdin)?, *k),
        Command::Period { source, kmax } => cmd_period(load(source, stdin)?, *kmax),
        Command::Growth { source, kmax } => cmd_growth(load(source, stdin)?, *kmax),
        Command::Classify { source, kmax } => cmd_classify(load(source, stdin)?, *kmax),
        Command::Resolve { source, simple, steps } => cmd_resolve(load(source, stdin)?, *simple, *steps),
        Command::Diagram { source } => cmd_diagram(load(source, stdin)?),
    }
}
