//! Command-line driver: configure a family, run named verification suites,
//! emit a machine-readable JSON report. Exit code 0 means every requested
//! check passed, 1 means a verification failure, 2 a usage or parameter
//! error.

use clap::{Args, Parser, Subcommand};
use hopfdual::dual::DualError;
use hopfdual::families::{DAlgebra, FamilyError, LiuAlgebra, TaftAlgebra};
use hopfdual::hopf::verify_hopf_axioms;
use hopfdual::lemmas::{
    verify_dual_lemma_d, verify_dual_lemma_dihedral, verify_dual_lemma_liu, verify_dual_lemma_taft,
    LemmaId,
};
use hopfdual::pairing::*;
use hopfdual::presented::*;
use hopfdual::report::Report;
use hopfdual::scalar::{lcm_all, mentioned_root_orders, parse_scalar, CycloContext, CycloScalar};
use hopfdual::suites::{verify_matrix_lemmas, verify_scalars};
use serde::Serialize;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "hopfdual",
    version,
    about = "Exact verification suites for GK-dimension-one Hopf algebras and their finite duals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run named verification suites for one family.
    Verify(VerifyArgs),
    /// Run only the Gram non-degeneracy certificate at a truncation.
    Gram(GramArgs),
}

#[derive(Args, Clone)]
struct VerifyArgs {
    /// Family: taft | liu | dmx | dihedral
    #[arg(long)]
    family: String,
    /// Group order n (taft, liu).
    #[arg(long)]
    n: Option<u64>,
    /// Skew exponent v with 0 <= v <= n-1 (taft).
    #[arg(long)]
    v: Option<u64>,
    /// Central exponent omega (liu).
    #[arg(long)]
    omega: Option<u64>,
    /// Sector size m (dmx).
    #[arg(long)]
    m: Option<u64>,
    /// Degree parameter d (dmx); (1+m)d must be even.
    #[arg(long)]
    d: Option<u64>,
    /// Root of unity for the family, e.g. zeta3^1 (taft xi, liu gamma, dmx xi).
    #[arg(long)]
    xi: Option<String>,
    /// Ambient cyclotomic order override (defaults to the lcm the run needs).
    #[arg(long)]
    cyclo_order: Option<u64>,
    /// Comma-separated suites; defaults to every suite the family supports.
    #[arg(long)]
    suites: Option<String>,
    /// Exact scalar samples, e.g. "0,1,2,zeta3" (taft lambda, dihedral
    /// lambda, dmx alpha).
    #[arg(long)]
    lambda: Option<String>,
    /// Pair samples "a:b,a:b" (liu).
    #[arg(long)]
    pairs: Option<String>,
    /// x-degree bound for Taft bases.
    #[arg(long, default_value_t = 6)]
    l_max: u64,
    /// g-exponent range bound for Liu and two-sector bases.
    #[arg(long, default_value_t = 3)]
    j_bound: i64,
    /// F2-degree bound for dual-side bases.
    #[arg(long, default_value_t = 1)]
    s_max: u64,
    /// Generator word length bound for the theta suite.
    #[arg(long)]
    word_len: Option<usize>,
    /// Gram truncation depth.
    #[arg(long, default_value_t = 1)]
    gram_n: u64,
    /// Output path for the JSON report (stdout when omitted).
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Clone)]
struct GramArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    v: Option<u64>,
    #[arg(long)]
    omega: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    xi: Option<String>,
    #[arg(long)]
    cyclo_order: Option<u64>,
    /// Truncation depth.
    #[arg(long = "N", default_value_t = 1)]
    n_trunc: u64,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Serialize)]
struct SuiteReport {
    id: String,
    status: String,
    cases_total: u64,
    cases_failed: u64,
    witnesses: Vec<String>,
    #[serde(skip_serializing_if = "std::collections::BTreeMap::is_empty")]
    details: std::collections::BTreeMap<String, String>,
    millis: u128,
}

#[derive(Serialize)]
struct Document {
    config: ConfigEcho,
    suites: Vec<SuiteReport>,
    version: String,
}

#[derive(Serialize, Clone)]
struct ConfigEcho {
    family: String,
    params: String,
    cyclo_order: u64,
    suites: Vec<String>,
    bounds: String,
    samples: Vec<String>,
}

fn suite_report(report: Report, millis: u128) -> SuiteReport {
    SuiteReport {
        id: report.suite.clone(),
        status: if report.passed() {
            "pass".into()
        } else {
            "fail".into()
        },
        cases_total: report.cases_total,
        cases_failed: report.cases_failed,
        witnesses: report.witnesses,
        details: report.details,
        millis,
    }
}

struct UsageError(String);

impl From<FamilyError> for UsageError {
    fn from(e: FamilyError) -> Self {
        UsageError(e.to_string())
    }
}
impl From<hopfdual::scalar::ScalarError> for UsageError {
    fn from(e: hopfdual::scalar::ScalarError) -> Self {
        UsageError(e.to_string())
    }
}
impl From<DualError> for UsageError {
    fn from(e: DualError) -> Self {
        UsageError(e.to_string())
    }
}

const ALL_SUITES: &[&str] = &[
    "scalars",
    "matrix-lemmas",
    "hopf-axioms",
    "dual-lemmas",
    "theta",
    "pairing-axioms",
    "gram",
    "proof-matrix",
];

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Gram(args) => run_gram(args),
    };
    match outcome {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::from(0)
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_samples(
    ctx: &Arc<CycloContext>,
    raw: &Option<String>,
    default: &[&str],
) -> Result<Vec<CycloScalar>, UsageError> {
    let source: Vec<String> = match raw {
        Some(s) => s.split(',').map(|p| p.trim().to_string()).collect(),
        None => default.iter().map(|s| s.to_string()).collect(),
    };
    let mut out = Vec::new();
    for s in source {
        out.push(parse_scalar(ctx, &s)?);
    }
    Ok(out)
}

fn parse_pairs(
    ctx: &Arc<CycloContext>,
    raw: &Option<String>,
    default: &[(&str, &str)],
) -> Result<Vec<(CycloScalar, CycloScalar)>, UsageError> {
    let source: Vec<(String, String)> = match raw {
        Some(s) => s
            .split(',')
            .map(|p| {
                let (a, b) = p
                    .split_once(':')
                    .ok_or_else(|| UsageError(format!("pair sample {p:?} must look like a:b")))?;
                Ok((a.trim().to_string(), b.trim().to_string()))
            })
            .collect::<Result<_, UsageError>>()?,
        None => default
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    };
    let mut out = Vec::new();
    for (a, b) in source {
        out.push((parse_scalar(ctx, &a)?, parse_scalar(ctx, &b)?));
    }
    Ok(out)
}

/// Ambient cyclotomic order: the family's own root orders joined with every
/// root mentioned in the sample strings.
fn ambient_order(args: &VerifyArgs) -> Result<u64, UsageError> {
    let mut orders: Vec<u64> = Vec::new();
    match args.family.as_str() {
        "taft" => {
            let n = args
                .n
                .ok_or_else(|| UsageError("taft requires --n".into()))?;
            orders.push(n);
        }
        "liu" => {
            let n = args
                .n
                .ok_or_else(|| UsageError("liu requires --n".into()))?;
            let omega = args
                .omega
                .ok_or_else(|| UsageError("liu requires --omega".into()))?;
            orders.push(n);
            orders.push(omega);
            orders.push(2);
        }
        "dmx" => {
            let m = args
                .m
                .ok_or_else(|| UsageError("dmx requires --m".into()))?;
            let d = args
                .d
                .ok_or_else(|| UsageError("dmx requires --d".into()))?;
            if (1 + m) * d % 2 != 0 {
                return Err(UsageError("(1+m)d must be even".into()));
            }
            orders.push(2 * m);
            orders.push(2 * m * d);
        }
        "dihedral" => {
            orders.push(2);
        }
        other => return Err(UsageError(format!("unknown family {other:?}"))),
    }
    if let Some(xi) = &args.xi {
        orders.extend(mentioned_root_orders(xi));
    }
    if let Some(s) = &args.lambda {
        orders.extend(mentioned_root_orders(s));
    }
    if let Some(s) = &args.pairs {
        orders.extend(mentioned_root_orders(s));
    }
    if let Some(n) = args.cyclo_order {
        orders.push(n);
    }
    Ok(lcm_all(orders))
}

fn requested_suites(args: &VerifyArgs) -> Result<Vec<String>, UsageError> {
    let list: Vec<String> = match &args.suites {
        // default = every suite the family supports
        Some(s) => s.split(',').map(|x| x.trim().to_string()).collect(),
        None => ALL_SUITES
            .iter()
            .filter(|s| !(**s == "proof-matrix" && args.family == "dihedral"))
            .map(|s| s.to_string())
            .collect(),
    };
    for s in &list {
        if !ALL_SUITES.contains(&s.as_str()) {
            return Err(UsageError(format!("unknown suite {s:?}")));
        }
        if s == "proof-matrix" && args.family == "dihedral" {
            return Err(UsageError(
                "suite proof-matrix is not defined for family dihedral".into(),
            ));
        }
    }
    Ok(list)
}

fn run_verify(args: VerifyArgs) -> Result<bool, UsageError> {
    let order = ambient_order(&args)?;
    let ctx = CycloContext::new(order);
    let suites = requested_suites(&args)?;
    let mut reports: Vec<SuiteReport> = Vec::new();
    let echo_samples: Vec<String>;

    let word_len_default = if args.family == "dmx" { 2 } else { 3 };
    let word_len = args.word_len.unwrap_or(word_len_default);

    match args.family.as_str() {
        "taft" => {
            let n = args.n.unwrap();
            let v = args
                .v
                .ok_or_else(|| UsageError("taft requires --v (0 <= v <= n-1)".into()))?;
            let xi = match &args.xi {
                Some(s) => parse_scalar(&ctx, s)?,
                None => ctx.primitive_root(n)?,
            };
            let h = TaftAlgebra::new(&ctx, n, v, xi)?;
            let lambdas = parse_samples(&ctx, &args.lambda, &["0", "1", "2"])?;
            echo_samples = lambdas.iter().map(|l| l.exact_string()).collect();
            let p = TaftDual::new(&h);
            for suite in &suites {
                let t0 = Instant::now();
                let rs: Vec<Report> = match suite.as_str() {
                    "scalars" => vec![verify_scalars(&ctx, None, &[])?],
                    "matrix-lemmas" => vec![verify_matrix_lemmas(&ctx)],
                    "hopf-axioms" => {
                        let basis = h.basis_slice(args.l_max);
                        let pairs = all_pairs(&basis);
                        vec![verify_hopf_axioms(
                            &*h,
                            "taft",
                            &params_of(&args),
                            &basis,
                            &pairs,
                        )]
                    }
                    "dual-lemmas" => {
                        let mut out = Vec::new();
                        for id in LemmaId::for_family("taft") {
                            out.push(verify_dual_lemma_taft(&h, id, &lambdas, 2 * h.m)?);
                        }
                        out
                    }
                    "theta" => {
                        let mut gens = vec![
                            ThetaGen {
                                label: "Omega".into(),
                                elem: p.normalize(&[TaftGen::Omega]),
                                image: hopfdual::dual::taft_omega(&h),
                            },
                            ThetaGen {
                                label: "F1".into(),
                                elem: p.normalize(&[TaftGen::F1]),
                                image: hopfdual::dual::taft_e1(&h),
                            },
                            ThetaGen {
                                label: "F2".into(),
                                elem: p.normalize(&[TaftGen::F2]),
                                image: hopfdual::dual::taft_e2(&h),
                            },
                        ];
                        for lam in lambdas.iter().filter(|l| !l.is_zero()).take(2) {
                            gens.push(ThetaGen {
                                label: format!("Psi({})", lam.exact_string()),
                                elem: p.normalize(&[TaftGen::Psi(lam.clone())]),
                                image: hopfdual::dual::taft_psi(&h, lam),
                            });
                        }
                        let basis = h.basis_slice(args.l_max);
                        let pair_basis = h.basis_slice(args.l_max.min(3));
                        vec![verify_theta(
                            &p,
                            "taft",
                            &params_of(&args),
                            &gens,
                            word_len,
                            &basis,
                            &pair_basis,
                        )]
                    }
                    "pairing-axioms" => {
                        let f_samples = hbullet_taft(&p, args.s_max);
                        let take = f_samples.len().min(4);
                        let h_samples = h.basis_slice(3);
                        let ht = h_samples.len().min(6);
                        vec![verify_pairing_axioms(
                            &p,
                            "taft",
                            &params_of(&args),
                            &f_samples[..take],
                            &h_samples[..ht],
                        )]
                    }
                    "gram" => vec![gram_taft(&p, args.gram_n).report("taft", &params_of(&args))],
                    "proof-matrix" => {
                        let mut out = Vec::new();
                        for lam in [ctx.zero(), ctx.from_int(5)] {
                            out.push(proof_p33(&h, 1, &lam).report(
                                "P3.3",
                                "taft",
                                &format!("{} lambda={}", params_of(&args), lam.exact_string()),
                            ));
                        }
                        out
                    }
                    _ => unreachable!(),
                };
                let millis = t0.elapsed().as_millis();
                for r in rs {
                    reports.push(suite_report(r, millis));
                }
            }
        }
        "liu" => {
            let n = args.n.unwrap();
            let omega = args.omega.unwrap();
            let gamma = match &args.xi {
                Some(s) => parse_scalar(&ctx, s)?,
                None => ctx.primitive_root(n)?,
            };
            let h = LiuAlgebra::new(&ctx, n, omega, gamma)?;
            let pairs = parse_pairs(&ctx, &args.pairs, &[("1", "1"), ("2", "2"), ("2", "-2")])?;
            echo_samples = pairs
                .iter()
                .map(|(a, b)| format!("{}:{}", a.exact_string(), b.exact_string()))
                .collect();
            let p = LiuDual::new(&h);
            for suite in &suites {
                let t0 = Instant::now();
                let rs: Vec<Report> = match suite.as_str() {
                    "scalars" => vec![verify_scalars(&ctx, None, &[])?],
                    "matrix-lemmas" => vec![verify_matrix_lemmas(&ctx)],
                    "hopf-axioms" => {
                        let basis = h.basis_slice(args.j_bound);
                        let pairs2 = all_pairs(&basis);
                        vec![verify_hopf_axioms(
                            &*h,
                            "liu",
                            &params_of(&args),
                            &basis,
                            &pairs2,
                        )]
                    }
                    "dual-lemmas" => {
                        let mut out = Vec::new();
                        for id in LemmaId::for_family("liu") {
                            out.push(verify_dual_lemma_liu(&h, id, &pairs, args.j_bound)?);
                        }
                        out
                    }
                    "theta" => {
                        let mut gens = vec![
                            ThetaGen {
                                label: "F1".into(),
                                elem: p.normalize(&[LiuGen::F1])?,
                                image: hopfdual::dual::liu_e1(&h),
                            },
                            ThetaGen {
                                label: "F2".into(),
                                elem: p.normalize(&[LiuGen::F2])?,
                                image: hopfdual::dual::liu_e2(&h),
                            },
                        ];
                        for (a, b) in pairs
                            .iter()
                            .filter(|(a, b)| !(a.is_one() && b.is_one()))
                            .take(2)
                        {
                            gens.push(ThetaGen {
                                label: format!("Psi({},{})", a.exact_string(), b.exact_string()),
                                elem: p.normalize(&[LiuGen::Psi(a.clone(), b.clone())])?,
                                image: hopfdual::dual::liu_psi(&h, a, b)?,
                            });
                        }
                        let basis = h.basis_slice(args.j_bound);
                        let pair_basis = h.basis_slice(args.j_bound.min(2));
                        vec![verify_theta(
                            &p,
                            "liu",
                            &params_of(&args),
                            &gens,
                            word_len,
                            &basis,
                            &pair_basis,
                        )]
                    }
                    "pairing-axioms" => {
                        let f_samples = hbullet_liu(&p, args.s_max);
                        let take = f_samples.len().min(4);
                        let h_samples = h.basis_slice(2);
                        let ht = h_samples.len().min(6);
                        vec![verify_pairing_axioms(
                            &p,
                            "liu",
                            &params_of(&args),
                            &f_samples[..take],
                            &h_samples[..ht],
                        )]
                    }
                    "gram" => vec![gram_liu(&p, args.gram_n).report("liu", &params_of(&args))],
                    "proof-matrix" => {
                        vec![proof_p43(&h, 2, &ctx.from_int(3), &ctx.from_int(3)).report(
                            "P4.3",
                            "liu",
                            &format!("{} r=2 alpha=3 beta=3", params_of(&args)),
                        )]
                    }
                    _ => unreachable!(),
                };
                let millis = t0.elapsed().as_millis();
                for r in rs {
                    reports.push(suite_report(r, millis));
                }
            }
        }
        "dmx" | "dihedral" => {
            let (m, d) = if args.family == "dihedral" {
                (1, 1)
            } else {
                (args.m.unwrap(), args.d.unwrap())
            };
            let xi = match &args.xi {
                Some(s) => parse_scalar(&ctx, s)?,
                None => ctx.primitive_root(2 * m)?,
            };
            let h = DAlgebra::new(&ctx, m, d, xi)?;
            let default_alphas: &[&str] = if args.family == "dihedral" {
                &["1", "2", "-3", "1/2"]
            } else {
                &["1", "2"]
            };
            let alphas = parse_samples(&ctx, &args.lambda, default_alphas)?;
            echo_samples = alphas.iter().map(|l| l.exact_string()).collect();
            let p = DDual::new(&h);
            for suite in &suites {
                let t0 = Instant::now();
                let rs: Vec<Report> = match suite.as_str() {
                    "scalars" => vec![verify_scalars(&ctx, Some(&h), &alphas)?],
                    "matrix-lemmas" => vec![verify_matrix_lemmas(&ctx)],
                    "hopf-axioms" => {
                        let basis = h.basis_slice(args.j_bound);
                        let pairs2 = all_pairs(&basis);
                        vec![verify_hopf_axioms(
                            &*h,
                            &args.family,
                            &params_of(&args),
                            &basis,
                            &pairs2,
                        )]
                    }
                    "dual-lemmas" => {
                        if args.family == "dihedral" {
                            let nonzero: Vec<CycloScalar> =
                                alphas.iter().filter(|a| !a.is_zero()).cloned().collect();
                            vec![verify_dual_lemma_dihedral(&h, &nonzero, args.j_bound)?]
                        } else {
                            let mut out = Vec::new();
                            for id in LemmaId::for_family("dmx") {
                                out.push(verify_dual_lemma_d(
                                    &h,
                                    id,
                                    &alphas,
                                    args.j_bound.min(2),
                                )?);
                            }
                            out
                        }
                    }
                    "theta" => {
                        let a = ctx.from_int(2);
                        let b = a.pow_int(h.d as i64)?.mul(&ctx.one());
                        let mut gens = vec![
                            ThetaGen {
                                label: "Z(2,2^d)".into(),
                                elem: p.normalize(&[DGen::Z(a.clone(), b.clone())])?,
                                image: hopfdual::dual::d_zeta(&h, &a, &b)?,
                            },
                            ThetaGen {
                                label: "X(1,gamma)".into(),
                                elem: p.normalize(&[DGen::X(ctx.one(), h.gamma.clone())])?,
                                image: hopfdual::dual::d_chi(&h, &ctx.one(), &h.gamma)?,
                            },
                            ThetaGen {
                                label: "F2".into(),
                                elem: p.normalize(&[DGen::F2])?,
                                image: hopfdual::dual::d_e2(&h),
                            },
                        ];
                        if h.m >= 2 {
                            gens.push(ThetaGen {
                                label: "F1".into(),
                                elem: p.normalize(&[DGen::F1])?,
                                image: hopfdual::dual::d_e1(&h)?,
                            });
                        }
                        let basis = h.basis_slice(args.j_bound.min(2));
                        let pair_basis = h.basis_slice(1);
                        vec![verify_theta(
                            &p,
                            &args.family,
                            &params_of(&args),
                            &gens,
                            word_len,
                            &basis,
                            &pair_basis,
                        )]
                    }
                    "pairing-axioms" => {
                        let f_samples = if args.family == "dihedral" {
                            hbullet_dihedral(&p, args.s_max)
                        } else {
                            hbullet_d(&p, args.s_max)
                        };
                        let take = f_samples.len().min(4);
                        let h_samples = h.basis_slice(2);
                        let ht = h_samples.len().min(6);
                        vec![verify_pairing_axioms(
                            &p,
                            &args.family,
                            &params_of(&args),
                            &f_samples[..take],
                            &h_samples[..ht],
                        )]
                    }
                    "gram" => vec![gram_d(&p, args.gram_n).report(&args.family, &params_of(&args))],
                    "proof-matrix" => {
                        let a = ctx.from_int(2);
                        let b = a.pow_int(h.d as i64)?;
                        let mut out = Vec::new();
                        for case in [P56Case::Case1, P56Case::Case2, P56Case::Case3] {
                            out.push(proof_p56(&h, case, 1, &a, &b)?.report(
                                case.id(),
                                "dmx",
                                &format!("{} r=1 alpha=2", params_of(&args)),
                            ));
                        }
                        out
                    }
                    _ => unreachable!(),
                };
                let millis = t0.elapsed().as_millis();
                for r in rs {
                    reports.push(suite_report(r, millis));
                }
            }
        }
        other => return Err(UsageError(format!("unknown family {other:?}"))),
    }

    let all_passed = reports.iter().all(|r| r.status == "pass");
    let doc = Document {
        config: ConfigEcho {
            family: args.family.clone(),
            params: params_of(&args),
            cyclo_order: order,
            suites,
            bounds: format!(
                "l_max={} j_bound={} s_max={} word_len={} gram_n={}",
                args.l_max, args.j_bound, args.s_max, word_len, args.gram_n
            ),
            samples: echo_samples,
        },
        suites: reports,
        version: env!("CARGO_PKG_VERSION").to_string(),
    };
    emit(&doc, &args.out)?;
    Ok(all_passed)
}

fn run_gram(args: GramArgs) -> Result<bool, UsageError> {
    let vargs = VerifyArgs {
        family: args.family,
        n: args.n,
        v: args.v,
        omega: args.omega,
        m: args.m,
        d: args.d,
        xi: args.xi,
        cyclo_order: args.cyclo_order,
        suites: Some("gram".into()),
        lambda: None,
        pairs: None,
        l_max: 6,
        j_bound: 3,
        s_max: 1,
        word_len: None,
        gram_n: args.n_trunc,
        out: args.out,
    };
    run_verify(vargs)
}

fn params_of(args: &VerifyArgs) -> String {
    match args.family.as_str() {
        "taft" => format!("n={} v={}", args.n.unwrap_or(0), args.v.unwrap_or(0)),
        "liu" => format!(
            "n={} omega={}",
            args.n.unwrap_or(0),
            args.omega.unwrap_or(0)
        ),
        "dmx" => format!("m={} d={}", args.m.unwrap_or(0), args.d.unwrap_or(0)),
        "dihedral" => "m=1 d=1".into(),
        _ => String::new(),
    }
}

fn all_pairs<T: Clone>(basis: &[T]) -> Vec<(T, T)> {
    let mut out = Vec::with_capacity(basis.len() * basis.len());
    for a in basis {
        for b in basis {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn emit(doc: &Document, out: &Option<std::path::PathBuf>) -> Result<(), UsageError> {
    let body = serde_json::to_string_pretty(doc).expect("report serialization");
    match out {
        Some(path) => std::fs::write(path, body.as_bytes())
            .map_err(|e| UsageError(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{body}");
            Ok(())
        }
    }
}
