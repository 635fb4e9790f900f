use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use orbizeta::groups::standard_group;
use orbizeta::json::{complex, rep_from_str, rep_to_value};
use orbizeta::linalg::{c, C64};
use orbizeta::orbifold::parse_signature_label;
use orbizeta::representation::{admissible_lambdas, catalog_rep, random_rep, validate, Representation, DEFAULT_TOL};
use orbizeta::spectrum::{enumerate_spectrum, truncated_log_derivative, truncated_ruelle, truncated_selberg, Spectrum, Truncation};
use orbizeta::torsion::{assembled_torsion, closed_form_torsion, sign_distance};
use orbizeta::trace::{geometric_side, geometric_side_with_weight};
use orbizeta::zeta_contour::{
    elliptic_asymptotic, elliptic_asymptotic_closed_form, elliptic_asymptotic_fit, elliptic_closed_form, elliptic_contribution,
    eta_with_radius, identity_contribution, identity_unit_shifted, integer_check, multiplicity_rhs, ruelle_at_zero, DEFAULT_RADIUS,
};
use orbizeta::{Error, OrbifoldSignature};
use serde_json::{json, Value};
use suite::{junit_json, run_suite, verify_agreement, SuiteConfig};

#[derive(Parser)]
#[command(name = "orbizeta", version, about = "Torsion and zeta functions of hyperbolic orbisurfaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(clap::Args, Clone)]
struct RepArgs {
    /// Representation JSON file ({"n", "lambda", "A", "B", "C"}).
    #[arg(long, conflicts_with = "preset")]
    rep: Option<PathBuf>,
    /// Catalog representation, e.g. triangle-(2,3,7)-sl2 or trivial-(1;2).
    #[arg(long)]
    preset: Option<String>,
    /// Signature as JSON {"g":..,"nu":[..]} or as a label (g;ν1,…).
    #[arg(long)]
    sig: Option<String>,
    /// Relation tolerance for validation.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Assembled,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    #[value(name = "Z", alias = "z")]
    Z,
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "L", alias = "l")]
    L,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the presentation relations for a representation.
    ValidateRep(RepArgs),
    /// Build a random representation for a signature.
    RandomRep {
        #[arg(long)]
        sig: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Index into the admissible λ ≠ 1, sorted by argument.
        #[arg(long, default_value_t = 0)]
        lambda_index: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reidemeister torsion of the unit tangent bundle.
    Torsion {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Order and leading coefficient of the Ruelle zeta function at zero.
    Ruelle0(RepArgs),
    /// η(s) along the upper contour.
    Eta {
        #[command(flatten)]
        rep: RepArgs,
        /// s as re,im.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value_t = DEFAULT_RADIUS)]
        radius: f64,
    },
    /// Quadrature against closed forms for the identity and elliptic factors.
    EllipticCheck {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 1e-4)]
        eps: f64,
    },
    /// Integrality of the multiplicity expression.
    IntegerCheck {
        #[command(flatten)]
        rep: RepArgs,
        /// Weight; defaults to the weight of the representation.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<f64>,
        #[arg(long, default_value_t = 1e-8)]
        check_tol: f64,
    },
    /// Enumerate closed geodesics of a standard group and write a spectrum cache.
    Spectrum {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        max_length: f64,
        #[arg(long, default_value_t = 40)]
        max_word: usize,
    },
    /// Truncated Z, R or log-derivative L from a spectrum cache.
    Zeta {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        spectrum: PathBuf,
        #[arg(long, value_enum, default_value = "Z")]
        what: What,
        /// Length cutoff; defaults to the certified length of the cache.
        #[arg(long)]
        cutoff: Option<f64>,
        #[arg(long, default_value_t = 1e-3)]
        tail_tol: f64,
    },
    /// Geometric side of the trace formula.
    TraceGeom {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 0.0)]
        cutoff: f64,
        #[arg(long)]
        spectrum: Option<PathBuf>,
        /// Weight; defaults to the weight of the representation.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<f64>,
    },
    /// Closed-form torsion, assembled torsion, R(0) and 1/η(1) side by side.
    VerifyTheoremA {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = 1e-7)]
        comparison_tol: f64,
    },
    /// Run the acceptance suites.
    Suite {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        comparison_tol: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        random_reps: usize,
    },
}

/// JSON result plus whether the command's own check passed.
struct Outcome {
    value: Value,
    passed: bool,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Outcome { value, passed: true }
    }
}

fn parse_sig(text: &str) -> orbizeta::Result<OrbifoldSignature> {
    let t = text.trim();
    if t.starts_with('{') {
        serde_json::from_str(t).map_err(|e| Error::Input(format!("signature JSON: {e}")))
    } else {
        parse_signature_label(t)
    }
}

fn parse_complex(text: &str) -> orbizeta::Result<C64> {
    let parts: Vec<&str> = text.split(',').collect();
    let num = |p: &str| p.trim().parse::<f64>().map_err(|_| Error::Input(format!("bad complex number {text:?}")));
    match parts.as_slice() {
        [re] => Ok(c(num(re)?, 0.0)),
        [re, im] => Ok(c(num(re)?, num(im)?)),
        _ => Err(Error::Input(format!("expected re,im, got {text:?}"))),
    }
}

fn read(path: &Path) -> orbizeta::Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Loads and validates the representation; invalid input is reported, never coerced.
fn load(args: &RepArgs) -> orbizeta::Result<(Representation, OrbifoldSignature)> {
    let (rep, sig) = match (&args.rep, &args.preset) {
        (Some(path), _) => {
            let rep = rep_from_str(&read(path)?)?;
            let sig = parse_sig(args.sig.as_deref().ok_or_else(|| Error::Input("--sig is required with --rep".into()))?)?;
            (rep, sig)
        }
        (None, Some(p)) => {
            let (rep, sig) = catalog_rep(p)?;
            if let Some(s) = &args.sig {
                if parse_sig(s)? != sig {
                    return Err(Error::Input(format!("--sig does not match preset {p}")));
                }
            }
            (rep, sig)
        }
        (None, None) => return Err(Error::Input("one of --rep or --preset is required".into())),
    };
    let report = validate(&rep, &sig, args.tol)?;
    if !report.passed {
        return Err(Error::Input(format!(
            "representation fails validation: {}",
            serde_json::to_string(&report).expect("serialisable")
        )));
    }
    Ok((rep, sig))
}

fn validation_value(rep: &Representation, sig: &OrbifoldSignature, tol: f64) -> orbizeta::Result<Value> {
    Ok(serde_json::to_value(validate(rep, sig, tol)?).expect("serialisable"))
}

fn run(cmd: Cmd) -> orbizeta::Result<Outcome> {
    match cmd {
        Cmd::ValidateRep(args) => {
            let (rep, sig) = match (&args.rep, &args.preset) {
                (Some(path), _) => (
                    rep_from_str(&read(path)?)?,
                    parse_sig(args.sig.as_deref().ok_or_else(|| Error::Input("--sig is required with --rep".into()))?)?,
                ),
                (None, Some(p)) => catalog_rep(p)?,
                (None, None) => return Err(Error::Input("one of --rep or --preset is required".into())),
            };
            let report = validate(&rep, &sig, args.tol)?;
            let passed = report.passed;
            let mut v = serde_json::to_value(report).expect("serialisable");
            v["m"] = json!(rep.weight_m()?);
            Ok(Outcome { value: v, passed })
        }
        Cmd::RandomRep { sig, n, lambda_index, seed } => {
            let sig = parse_sig(&sig)?;
            let lams = admissible_lambdas(&sig, n);
            let lambda = *lams
                .get(lambda_index)
                .ok_or_else(|| Error::InfeasibleLambda(format!("{} admissible λ ≠ 1 for n = {n}", lams.len())))?;
            Ok(rep_to_value(&random_rep(&sig, n, lambda, seed)?).into())
        }
        Cmd::Torsion { rep, method } => {
            let tol = rep.tol;
            let (rep, sig) = load(&rep)?;
            let residuals = validation_value(&rep, &sig, tol)?;
            let v = match method {
                Method::Closed => json!({"method": "closed", "value": complex(closed_form_torsion(&rep, &sig)?.value)}),
                Method::Assembled => json!({"method": "assembled", "value": complex(assembled_torsion(&rep, &sig)?.value)}),
                Method::Both => {
                    let a = closed_form_torsion(&rep, &sig)?.value;
                    let b = assembled_torsion(&rep, &sig)?.value;
                    json!({
                        "method": "both",
                        "value": complex(a),
                        "assembled": complex(b),
                        "relative_disagreement": sign_distance(a, b),
                    })
                }
            };
            let mut v = v;
            v["sign_ambiguous"] = json!(true);
            v["residuals"] = residuals;
            Ok(v.into())
        }
        Cmd::Ruelle0(args) => {
            let (rep, sig) = load(&args)?;
            let r = ruelle_at_zero(&rep, &sig)?;
            Ok(json!({
                "order": r.vanishing_order,
                "leading": complex(r.leading_coefficient),
                "leading_s": complex(r.s_coefficient),
                "m": r.m,
                "sign_ambiguous": true,
            })
            .into())
        }
        Cmd::Eta { rep, s, radius } => {
            let (rep, sig) = load(&rep)?;
            let s = parse_complex(&s)?;
            let v = eta_with_radius(s, &rep, &sig, radius)?;
            Ok(json!({"s": complex(s), "value": complex(v), "m": rep.weight_m()?}).into())
        }
        Cmd::EllipticCheck { rep, eps } => {
            let (rep, sig) = load(&rep)?;
            elliptic_check(&rep, &sig, eps)
        }
        Cmd::IntegerCheck { rep, m, check_tol } => {
            let (rep, sig) = load(&rep)?;
            let m = m.map_or_else(|| rep.weight_m(), Ok)?;
            let chk = integer_check(multiplicity_rhs(&rep, &sig, m), check_tol);
            Ok(Outcome {
                value: json!({"value": complex(chk.value), "nearest": chk.nearest, "residual": chk.residual, "m": m}),
                passed: chk.passed,
            })
        }
        Cmd::Spectrum { preset, max_length, max_word } => {
            let grp = standard_group(&preset)?;
            let spec = enumerate_spectrum(&grp, max_length, max_word)?;
            Ok(serde_json::to_value(spec).expect("serialisable").into())
        }
        Cmd::Zeta { rep, s, spectrum, what, cutoff, tail_tol } => {
            let (rep, _) = load(&rep)?;
            let s = parse_complex(&s)?;
            let spec = Spectrum::load(&spectrum)?;
            let cutoff = cutoff.unwrap_or(spec.certified_length);
            let tr = Truncation { cutoff, tail_tol };
            let (name, v) = match what {
                What::Z => ("Z", truncated_selberg(s, &rep, &spec, &tr)?),
                What::R => ("R", truncated_ruelle(s, &rep, &spec, &tr)?),
                What::L => ("L", truncated_log_derivative(s, &rep, &spec, &tr)?),
            };
            Ok(json!({"what": name, "s": complex(s), "value": complex(v), "cutoff": cutoff, "preset": spec.preset}).into())
        }
        Cmd::TraceGeom { rep, t, cutoff, spectrum, m } => {
            let (rep, sig) = load(&rep)?;
            let spec = spectrum.map(|p| Spectrum::load(&p)).transpose()?;
            let g = match m {
                Some(m) => geometric_side_with_weight(t, &rep, &sig, spec.as_ref(), cutoff, m)?,
                None => geometric_side(t, &rep, &sig, spec.as_ref(), cutoff)?,
            };
            let mut v = serde_json::to_value(g).expect("serialisable");
            v["t"] = json!(t);
            v["cutoff"] = json!(cutoff);
            Ok(v.into())
        }
        Cmd::VerifyTheoremA { rep, comparison_tol } => {
            let (rep, sig) = load(&rep)?;
            let r = verify_agreement(&rep, &sig, comparison_tol)?;
            let passed = r.passed;
            Ok(Outcome { value: serde_json::to_value(r).expect("serialisable"), passed })
        }
        Cmd::Suite { filter, comparison_tol, seed, random_reps } => {
            let cfg = SuiteConfig { filter, comparison_tol, seed, random_reps };
            let results = run_suite(&cfg);
            for r in &results {
                eprintln!("{}", r.line());
            }
            let passed = results.iter().all(|r| r.passed);
            Ok(Outcome { value: junit_json(&results), passed })
        }
    }
}

fn elliptic_check(rep: &Representation, sig: &OrbifoldSignature, eps: f64) -> orbizeta::Result<Outcome> {
    let m = rep.weight_m()?;
    let mut cones = Vec::new();
    if m != 0.0 {
        for j in 0..sig.num_cones() {
            let v = elliptic_contribution(rep, sig, j, m)?;
            let r = elliptic_closed_form(rep, sig, j)?;
            cones.push(json!({
                "cone": j + 1,
                "quadrature": complex(v),
                "closed_form": complex(r),
                "modulus_error": (v.norm() - r.norm()).abs() / r.norm(),
                "phase_period": std::f64::consts::PI / sig.cone_orders()[j] as f64,
            }));
        }
        let id = identity_contribution(m, sig, rep.n)?;
        return Ok(json!({"m": m, "identity": complex(id), "cones": cones}).into());
    }
    for j in 0..sig.num_cones() {
        let fd = orbizeta::representation::fixed_decomposition(rep, sig, j)?;
        let v = elliptic_asymptotic(rep, sig, j, eps)?;
        let r = elliptic_asymptotic_closed_form(&fd, rep.n, sig.cone_orders()[j], eps);
        let fit = elliptic_asymptotic_fit(rep, sig, j, [eps * 10.0, eps])?;
        cones.push(json!({
            "cone": j + 1,
            "eps": eps,
            "quadrature": complex(v),
            "closed_form": complex(r),
            "slope": fit.slope,
            "expected_slope": fit.expected_slope,
            "prefactor_ratio": fit.prefactor_ratio,
        }));
    }
    let shifted = identity_unit_shifted(eps)?;
    Ok(json!({"m": 0.0, "identity_shifted": complex(shifted), "eps": eps, "cones": cones}).into())
}

fn configure_threads() {
    if let Some(n) = std::env::var("ORBIZETA_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.value).expect("serialisable");
            match &cli.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, text + "\n") {
                        eprintln!("error: {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => println!("{text}"),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let hint = match e {
                Error::NotAcyclic(_) => ", hint: run `orbizeta ruelle0` for the leading term at m = 0",
                _ => "",
            };
            eprintln!("error: {e}{hint}");
            ExitCode::from(if e.is_numerical() { 3 } else { 2 })
        }
    }
}
