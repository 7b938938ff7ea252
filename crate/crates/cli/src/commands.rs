use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;

use threshold_spectra::graphs::{l_graph, max_edges, quasi_star, tilde_s};
use threshold_spectra::report::{
    audit_record, certificate_record, float17, report_record, spectrum_record,
};
use threshold_spectra::search::{
    audit, enumerate_all, enumerate_threshold, verify_signless_size_2n_minus_2, verify_size_block,
    verify_sparse_quasi_star, verify_threshold_suffices,
};
use threshold_spectra::spectra::spectral_radius;
use threshold_spectra::transforms::{apply, certify, validate, Coverage};
use threshold_spectra::{
    Alpha, Error, FamilySpec, LabeledGraph, ThresholdGraph, TransformSpec, Universe,
    VerificationReport,
};

use crate::args::{Claim, Command, ConstructKind, Format, UniverseArg, VerifyArgs};

/// A failed invocation: one diagnostic line and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoConvergence { .. } => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::usage(format!("output error: {e}"))
    }
}

/// Exit code on success: 0, or 1 when a verification or certificate failed.
pub type Outcome = Result<u8, Failure>;

pub fn run(command: Command, format: Format, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Construct { kind } => construct(kind, format, out),
        Command::Rho { graph, alpha } => rho(&graph, alpha, format, out),
        Command::Transform { graph, spec, alpha } => transform(&graph, &spec, alpha, format, out),
        Command::Enumerate {
            n,
            m,
            connected,
            universe,
        } => enumerate(n, m, connected, universe, out),
        Command::Verify(args) => verify(args, format, out),
        Command::Audit { graph, r } => audit_cmd(&graph, r, format, out),
    }
}

fn is_creation_sequence(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c == 'I' || c == 'D')
}

fn read_graph(input: &str) -> Result<LabeledGraph, Failure> {
    if is_creation_sequence(input) {
        return Ok(input.parse::<ThresholdGraph>()?.to_labeled());
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::usage(format!("cannot read graph {input:?}: {e}")))?;
    Ok(text.parse()?)
}

fn read_threshold(input: &str) -> Result<ThresholdGraph, Failure> {
    if is_creation_sequence(input) {
        return Ok(input.parse()?);
    }
    Ok(ThresholdGraph::from_labeled(&read_graph(input)?)?)
}

fn edge_key(g: &LabeledGraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
        .collect();
    if edges.is_empty() {
        "empty".into()
    } else {
        edges.join("+")
    }
}

fn construct(kind: ConstructKind, format: Format, out: &mut dyn Write) -> Outcome {
    let g = match kind {
        ConstructKind::QuasiStar { n, m } => quasi_star(n, m)?,
        ConstructKind::LGraph { n, m } => l_graph(n, m)?,
        ConstructKind::TildeS { n, m } => tilde_s(n, m)?,
        ConstructKind::FromSeq { sequence } => sequence.parse()?,
        ConstructKind::FromDegseq { degrees } => ThresholdGraph::from_degree_sequence(&degrees)?,
    };
    let labeled = g.to_labeled();
    match format {
        Format::Structured => writeln!(
            out,
            "creation={g} n={} m={} edges={}",
            g.n(),
            g.m(),
            edge_key(&labeled)
        )?,
        Format::Text => {
            writeln!(out, "# creation sequence {g}")?;
            write!(out, "{labeled}")?;
        }
    }
    Ok(0)
}

fn rho(input: &str, alpha: Alpha, format: Format, out: &mut dyn Write) -> Outcome {
    let g = read_graph(input)?;
    let s = spectral_radius(&g, alpha)?;
    match format {
        Format::Structured => writeln!(out, "alpha={alpha} {}", spectrum_record(&s))?,
        Format::Text => {
            writeln!(out, "n={} m={} alpha={alpha}", g.n(), g.m())?;
            writeln!(out, "rho       {}", float17(s.rho))?;
            if alpha.is_half() {
                writeln!(out, "q = 2rho  {}", float17(2.0 * s.rho))?;
            }
            writeln!(
                out,
                "residual  {:.3e} after {} iterations",
                s.residual, s.iterations
            )?;
            let perron: Vec<String> = s.perron.iter().map(|x| format!("{x:.6}")).collect();
            writeln!(out, "perron    {}", perron.join(" "))?;
        }
    }
    Ok(0)
}

fn transform(
    input: &str,
    spec: &str,
    alpha: Option<Alpha>,
    format: Format,
    out: &mut dyn Write,
) -> Outcome {
    let g = read_threshold(input)?;
    let spec: TransformSpec = spec.replace([':', ','], " ").parse()?;
    let v = validate(&g, &spec)?;
    if let Some(reason) = &v.failure {
        return Err(Failure::usage(format!(
            "{spec} does not apply to {g}: {reason}"
        )));
    }
    let after = apply(&g, &spec)?;
    let narrow = v
        .narrow_row_reading
        .map_or("na".to_string(), |b| (b as u8).to_string());
    let Some(alpha) = alpha else {
        match format {
            Format::Structured => writeln!(
                out,
                "transform={} before={g} after={after} narrow_row_reading={narrow}",
                spec.to_string().replace(' ', ":")
            )?,
            Format::Text => {
                writeln!(out, "{spec}: {g} -> {after}")?;
                if v.readings_disagree() {
                    writeln!(
                        out,
                        "note: the narrow reading of the row condition rejects this spec"
                    )?;
                }
            }
        }
        return Ok(0);
    };
    let c = certify(&g, &spec, alpha)?;
    let ok = c.holds() && c.residuals_ok();
    match format {
        Format::Structured => writeln!(out, "{} after={after}", certificate_record(&c))?,
        Format::Text => {
            writeln!(out, "{spec} at alpha={alpha}: {g} -> {after}")?;
            writeln!(out, "rho before  {}", float17(c.rho_before))?;
            writeln!(out, "rho after   {}", float17(c.rho_after))?;
            writeln!(out, "difference  {:.3e}", c.delta())?;
            let coverage = match c.coverage {
                Coverage::AdjacentColumns => "k = q+1",
                Coverage::SkipColumn => "k = q+2, strict increase",
                Coverage::NotCovered => "none (no claim at this alpha or spacing)",
            };
            writeln!(out, "coverage    {coverage}")?;
            if let Some(eq) = c.predicted_equality {
                writeln!(
                    out,
                    "equality    predicted {eq}, observed {}",
                    c.observed_equality
                )?;
            }
            let (l1, l2) = c.residual_limit();
            writeln!(
                out,
                "identities  residuals {:.3e} / {:.3e} (limits {l1:.1e} / {l2:.1e})",
                c.residual_eq1, c.residual_eq2
            )?;
            writeln!(out, "{}", if ok { "ok" } else { "FAILED" })?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn enumerate(
    n: usize,
    m: usize,
    connected: bool,
    universe: UniverseArg,
    out: &mut dyn Write,
) -> Outcome {
    let universe = match universe {
        UniverseArg::Threshold => Universe::Threshold,
        UniverseArg::All => Universe::All,
    };
    let f = FamilySpec::new(n, m, connected, universe)?;
    match universe {
        Universe::Threshold => {
            for g in enumerate_threshold(&f)? {
                writeln!(out, "{g}")?;
            }
        }
        Universe::All => {
            for g in enumerate_all(&f)? {
                writeln!(out, "{}", edge_key(&g))?;
            }
        }
    }
    Ok(0)
}

fn alphas_or(given: &[Alpha], default: &[(i64, i64)]) -> Vec<Alpha> {
    if !given.is_empty() {
        return given.to_vec();
    }
    default
        .iter()
        .map(|&(p, q)| Alpha::new(p, q).expect("valid default alpha"))
        .collect()
}

fn at_least(range: &RangeInclusive<usize>, min: usize, what: &str) -> Result<(), Failure> {
    if *range.start() < min {
        return Err(Failure::usage(format!("{what} needs n >= {min}")));
    }
    Ok(())
}

fn verify(args: VerifyArgs, format: Format, out: &mut dyn Write) -> Outcome {
    let reports = match args.claim {
        Claim::T41 => {
            let ns = args.n.unwrap_or(4..=12);
            at_least(&ns, 4, "t41")?;
            verify_sparse_quasi_star(
                ns,
                &alphas_or(&args.alpha, &[(1, 2), (3, 5), (3, 4), (9, 10)]),
            )?
        }
        Claim::T12 => {
            if args.alpha.iter().any(|a| !a.is_half()) {
                return Err(Failure::usage("t12 is stated at alpha = 1/2 only"));
            }
            let ns = args.n.unwrap_or(4..=16);
            at_least(&ns, 4, "t12")?;
            verify_signless_size_2n_minus_2(ns)?
        }
        Claim::T42 => {
            let r = args.r.ok_or_else(|| Failure::usage("t42 needs --r"))?;
            let ns = args.n.unwrap_or(24..=24);
            if r == 0 || *ns.start() <= r {
                return Err(Failure::usage("t42 needs n > r >= 1"));
            }
            let alphas = alphas_or(&args.alpha, &[(1, 2), (3, 4)]);
            let mut all = Vec::new();
            for n in ns {
                all.extend(verify_size_block(r, n, &alphas)?);
            }
            all
        }
        Claim::Lemma24 => {
            let ns = args.n.unwrap_or(1..=7);
            at_least(&ns, 1, "lemma24")?;
            let alphas = alphas_or(&args.alpha, &[(0, 1), (1, 2), (3, 4)]);
            let mut all = Vec::new();
            for n in ns {
                let sizes = match args.m {
                    Some(m) => m..=m,
                    None => n - 1..=max_edges(n),
                };
                for m in sizes {
                    for &a in &alphas {
                        all.push(verify_threshold_suffices(n, m, a)?);
                    }
                }
            }
            all
        }
    };
    let mut text = String::new();
    for r in &reports {
        match format {
            Format::Structured => writeln!(text, "{}", report_record(r)),
            Format::Text => writeln!(text, "{}", text_report(r)),
        }
        .expect("writing to a string");
    }
    let mismatches = reports.iter().filter(|r| !r.matches_theorem).count();
    if format == Format::Text {
        writeln!(text, "# {} records, {mismatches} mismatches", reports.len())
            .expect("writing to a string");
    }
    out.write_all(text.as_bytes())?;
    Ok(if mismatches == 0 { 0 } else { 1 })
}

fn text_report(r: &VerificationReport) -> String {
    let gap = r.tie_gap.map_or("none".to_string(), |g| format!("{g:.3e}"));
    let mut line = format!(
        "{} n={} m={} alpha={}: rho={:.12} maximizers {} gap {gap} {}",
        r.family.tag(),
        r.family.n,
        r.family.m,
        r.alpha,
        r.rho_max,
        r.maximizers.join(" "),
        if r.matches_theorem { "ok" } else { "MISMATCH" }
    );
    if !r.matches_theorem {
        if let Some(expected) = &r.expected {
            let _ = write!(line, " (expected {})", expected.join(" "));
        }
    }
    if r.near_tie() {
        line.push_str(" [near tie]");
    }
    if r.outside_hypothesis {
        line.push_str(" [outside proven range]");
    }
    line
}

fn audit_cmd(input: &str, r: usize, format: Format, out: &mut dyn Write) -> Outcome {
    let g = read_threshold(input)?;
    let a = audit(&g, r)?;
    match format {
        Format::Structured => writeln!(out, "{}", audit_record(&a))?,
        Format::Text => {
            let opt = |x: Option<usize>| x.map_or("undefined".to_string(), |v| v.to_string());
            writeln!(out, "graph  {g} (n={}, r={r})", a.n)?;
            writeln!(out, "kappa  {}", a.kappa)?;
            let delta: Vec<String> = a
                .delta
                .iter()
                .map(|(j, c)| format!("delta_{j}={c}"))
                .collect();
            writeln!(out, "delta  {} (sum {})", delta.join(" "), a.delta_sum())?;
            writeln!(out, "s      {}", opt(a.s))?;
            writeln!(out, "theta  {}", opt(a.theta))?;
            let identity = match a.identity_holds {
                Some(true) => "n = sum delta + kappa holds",
                Some(false) => "n = sum delta + kappa FAILS",
                None => "not applicable",
            };
            writeln!(out, "check  {identity}")?;
        }
    }
    Ok(0)
}
