//! One function per subcommand. Each builds its inputs from the parsed
//! flags, runs the library, and assembles a [`Report`] plus an exit code.

use std::f64::consts::FRAC_PI_2;
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::{json, Value};

use spinpair::bloch::{BasisSpec, BlochAngles, SingleQubitState};
use spinpair::correlations::{
    check_plus_preserving, check_plus_to_minus, check_singlet, check_triplet,
    correlation_summary, equal_weight_basis, joint_probs, local_probs, pair_visibility,
    CriterionId, CriterionReport, JointProbs, Party,
};
use spinpair::oracle::verify_closed_forms;
use spinpair::pairstate::{PairKind, PairStateZ};
use spinpair::sampler::{chi_square, sample, RNG_ID};
use spinpair::Error;

use crate::args::{
    Cli, Command, CriteriaArgs, Kind, PairArgs, SampleArgs, ScanArgs, SingleArgs, Vary,
    VerifyArgs,
};
use crate::report::{assemble, csv_f64, csv_table, number, object, rho_value, Meta, Report};

/// 99.9% quantiles of the chi-square distribution for 1..=3 degrees of
/// freedom; a statistic beyond this is reported as a statistical failure.
const CHI2_999: [f64; 3] = [10.828, 13.816, 16.266];

pub struct CliError {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            kind: "usage",
            message: message.into(),
        }
    }

    pub fn to_json(&self) -> String {
        json!({"error": {"kind": self.kind, "message": self.message}}).to_string()
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let kind = match err {
            Error::NonFinite { .. } => "non_finite",
            Error::AngleOutOfRange { .. } => "angle_out_of_range",
            Error::NotNormalized { .. } => "not_normalized",
            Error::ZeroState => "zero_state",
            Error::DegenerateRatio => "degenerate_ratio",
            Error::KindMismatch { .. } => "kind_mismatch",
            Error::NoRealSolution => "no_real_solution",
            Error::Disentangled => "disentangled",
            Error::SpinDomain { .. } => "spin_domain",
            Error::InsufficientExpected { .. } => "insufficient_expected",
        };
        Self {
            kind,
            message: err.to_string(),
        }
    }
}

/// Runs the parsed command, prints its report to stdout, and returns the
/// process exit code. Usage-level failures come back as `Err`.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    let (report, format, exit) = match cli.command {
        Command::Single(args) => cmd_single(args)?,
        Command::Pair(args) => cmd_pair(args)?,
        Command::Criteria(args) => cmd_criteria(args)?,
        Command::Scan(args) => cmd_scan(args)?,
        Command::Verify(args) => cmd_verify(args)?,
        Command::Sample(args) => cmd_sample(args)?,
    };
    match format {
        crate::args::Format::Json => println!("{}", serde_json::to_string_pretty(&report.json)
            .expect("report serializes")),
        crate::args::Format::Csv => print!("{}", report.csv),
    }
    Ok(exit)
}

fn angle(v: f64, degrees: bool) -> f64 {
    if degrees {
        v.to_radians()
    } else {
        v
    }
}

fn build_state(args: &crate::args::StateArgs, degrees: bool) -> Result<PairStateZ, CliError> {
    let q = match args.q {
        Some(q) => q,
        None => {
            if !(0.0..=1.0).contains(&args.p) {
                return Err(CliError::usage(format!(
                    "--p {} needs an explicit --q; the default sqrt(1 - p^2) requires p in [0, 1]",
                    args.p
                )));
            }
            (1.0 - args.p * args.p).sqrt()
        }
    };
    let alpha = angle(args.alpha.unwrap_or(0.0), degrees);
    let kind = match args.kind {
        Kind::Minus => PairKind::MinusCorrelated,
        Kind::Plus => PairKind::PlusCorrelated,
    };
    let state = if args.normalize {
        PairStateZ::normalized(kind, args.p, q, alpha)
    } else {
        PairStateZ::new(kind, args.p, q, alpha)
    };
    Ok(state?)
}

fn build_bases(
    args: &crate::args::BasisArgs,
    degrees: bool,
) -> Result<(BasisSpec, Option<BasisSpec>), CliError> {
    let e = BasisSpec::new(
        angle(args.chi, degrees),
        angle(args.delta.unwrap_or(0.0), degrees),
    )?;
    let mixed = args.chi2.is_some() || args.delta2.is_some();
    let e_prime = if mixed {
        Some(BasisSpec::new(
            angle(args.chi2.unwrap_or(args.chi), degrees),
            angle(args.delta2.or(args.delta).unwrap_or(0.0), degrees),
        )?)
    } else {
        None
    };
    Ok((e, e_prime))
}

fn generated_seed() -> u64 {
    let nanos = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0);
    nanos ^ (std::process::id() as u64).rotate_left(32)
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    match seed {
        Some(s) => s,
        None => {
            let s = generated_seed();
            eprintln!("seed: {s}");
            s
        }
    }
}

fn kind_str(kind: Kind) -> &'static str {
    match kind {
        Kind::Minus => "minus",
        Kind::Plus => "plus",
    }
}

fn state_inputs(kind: Kind, state: &PairStateZ) -> Vec<(&'static str, Value)> {
    vec![
        ("kind", json!(kind_str(kind))),
        ("p", number(state.p())),
        ("q", number(state.q())),
        ("alpha", number(state.alpha())),
    ]
}

fn basis_inputs(e: &BasisSpec, e_prime: Option<&BasisSpec>) -> Vec<(&'static str, Value)> {
    let mut pairs = vec![
        ("chi", number(e.chi())),
        ("delta", number(e.delta())),
    ];
    match e_prime {
        Some(ep) => {
            pairs.push(("chi2", number(ep.chi())));
            pairs.push(("delta2", number(ep.delta())));
        }
        None => {
            pairs.push(("chi2", Value::Null));
            pairs.push(("delta2", Value::Null));
        }
    }
    pairs
}

type CommandOutput = (Report, crate::args::Format, u8);

fn cmd_single(args: SingleArgs) -> Result<CommandOutput, CliError> {
    let degrees = args.output.degrees;
    let angles = BlochAngles::new(angle(args.theta, degrees), angle(args.phi.unwrap_or(0.0), degrees))?;
    let state = SingleQubitState::from_angles(angles);
    let e = BasisSpec::new(
        angle(args.chi, degrees),
        angle(args.delta.unwrap_or(0.0), degrees),
    )?;

    let (p_e, p_ebar) = state.measure_probs(&e);
    let delta_p = state.delta_p(&e);
    let visibility = state.visibility(&e);

    let inputs = object(vec![
        ("theta", number(angles.theta())),
        ("phi", number(angles.phi())),
        ("chi", number(e.chi())),
        ("delta", number(e.delta())),
    ]);
    let results = object(vec![
        ("p_e", number(p_e)),
        ("p_ebar", number(p_ebar)),
        ("delta_p", number(delta_p)),
        ("visibility", number(visibility)),
    ]);
    let csv = csv_table(
        &["p_e", "p_ebar", "delta_p", "visibility"],
        vec![vec![
            csv_f64(p_e),
            csv_f64(p_ebar),
            csv_f64(delta_p),
            csv_f64(visibility),
        ]],
    );
    let report = assemble("single", inputs, results, Meta::plain(), csv);
    Ok((report, args.output.format, 0))
}

struct PairNumbers {
    joint: JointProbs,
    p_plus: f64,
    p_minus: f64,
    rho: f64,
    visibility: f64,
    p_a_e: f64,
    p_b_e: f64,
}

fn pair_numbers(
    state: &PairStateZ,
    e: &BasisSpec,
    e_prime: Option<&BasisSpec>,
) -> Result<PairNumbers, CliError> {
    let joint = joint_probs(state, e, e_prime).map_err(|err| match err {
        Error::KindMismatch { .. } => {
            CliError::usage("mixed bases (--chi2/--delta2) require --kind minus")
        }
        other => other.into(),
    })?;
    let visibility = pair_visibility(state, e, e_prime);
    let summary = correlation_summary(&joint, visibility);
    let (p_a_e, _) = local_probs(state, e, e_prime, Party::A)?;
    let (p_b_e, _) = local_probs(state, e, e_prime, Party::B)?;
    Ok(PairNumbers {
        joint,
        p_plus: summary.p_plus(),
        p_minus: summary.p_minus(),
        rho: summary.rho(),
        visibility,
        p_a_e,
        p_b_e,
    })
}

fn cmd_pair(args: PairArgs) -> Result<CommandOutput, CliError> {
    let degrees = args.output.degrees;
    let state = build_state(&args.state, degrees)?;
    let (e, e_prime) = build_bases(&args.basis, degrees)?;
    let n = pair_numbers(&state, &e, e_prime.as_ref())?;
    let dot = e.dot(e_prime.as_ref().unwrap_or(&e));

    let mut inputs = state_inputs(args.state.kind, &state);
    inputs.extend(basis_inputs(&e, e_prime.as_ref()));
    let results = object(vec![
        ("p_ee", number(n.joint.p_ee())),
        ("p_eeb", number(n.joint.p_eeb())),
        ("p_ebe", number(n.joint.p_ebe())),
        ("p_ebeb", number(n.joint.p_ebeb())),
        ("p_plus", number(n.p_plus)),
        ("p_minus", number(n.p_minus)),
        ("rho", rho_value(n.rho)),
        ("visibility", number(n.visibility)),
        ("e_dot_eprime", number(dot)),
        ("p_a_e", number(n.p_a_e)),
        ("p_b_e", number(n.p_b_e)),
    ]);
    let csv = csv_table(
        &[
            "p_ee",
            "p_eeb",
            "p_ebe",
            "p_ebeb",
            "p_plus",
            "p_minus",
            "rho",
            "visibility",
            "e_dot_eprime",
            "p_a_e",
            "p_b_e",
        ],
        vec![vec![
            csv_f64(n.joint.p_ee()),
            csv_f64(n.joint.p_eeb()),
            csv_f64(n.joint.p_ebe()),
            csv_f64(n.joint.p_ebeb()),
            csv_f64(n.p_plus),
            csv_f64(n.p_minus),
            csv_f64(n.rho),
            csv_f64(n.visibility),
            csv_f64(dot),
            csv_f64(n.p_a_e),
            csv_f64(n.p_b_e),
        ]],
    );
    let report = assemble("pair", object(inputs), results, Meta::plain(), csv);
    Ok((report, args.output.format, 0))
}

fn criterion_json(report: &CriterionReport) -> Value {
    let residuals: Vec<Value> = report
        .residuals
        .iter()
        .map(|r| object(vec![("name", json!(r.name)), ("value", number(r.value))]))
        .collect();
    object(vec![
        ("criterion", json!(report.id.as_str())),
        ("verdict", json!(report.verdict.as_str())),
        ("residuals", Value::Array(residuals)),
        ("note", report.note.map_or(Value::Null, |n| json!(n))),
    ])
}

fn criterion_rows(report: &CriterionReport, rows: &mut Vec<Vec<String>>) {
    for r in &report.residuals {
        rows.push(vec![
            report.id.as_str().to_string(),
            report.verdict.as_str().to_string(),
            r.name.to_string(),
            csv_f64(r.value),
        ]);
    }
}

fn cmd_criteria(args: CriteriaArgs) -> Result<CommandOutput, CliError> {
    let degrees = args.output.degrees;
    let state = build_state(&args.state, degrees)?;
    let e = BasisSpec::new(
        args.chi.map_or(FRAC_PI_2, |c| angle(c, degrees)),
        angle(args.delta.unwrap_or(0.0), degrees),
    )?;

    let reports = match state.kind() {
        PairKind::MinusCorrelated => vec![check_singlet(&state)?, check_triplet(&state, &e)?],
        PairKind::PlusCorrelated => vec![
            check_plus_preserving(&state, &e)?,
            check_plus_to_minus(&state, &e)?,
        ],
    };

    let mut rows = Vec::new();
    for r in &reports {
        criterion_rows(r, &mut rows);
    }
    let mut result_pairs = vec![(
        "criteria",
        Value::Array(reports.iter().map(criterion_json).collect()),
    )];

    if state.kind() == PairKind::MinusCorrelated {
        let equal_weight = match equal_weight_basis(&state) {
            Ok((m2_plus, m2_minus)) => {
                rows.push(vec![
                    CriterionId::EqualWeight.as_str().into(),
                    "satisfied".into(),
                    "m2_plus".into(),
                    csv_f64(m2_plus),
                ]);
                rows.push(vec![
                    CriterionId::EqualWeight.as_str().into(),
                    "satisfied".into(),
                    "m2_minus".into(),
                    csv_f64(m2_minus),
                ]);
                object(vec![
                    ("m2_plus", number(m2_plus)),
                    ("m2_minus", number(m2_minus)),
                ])
            }
            Err(err @ (Error::NoRealSolution | Error::Disentangled)) => {
                let reason = if matches!(err, Error::NoRealSolution) {
                    "no_real_solution"
                } else {
                    "disentangled"
                };
                rows.push(vec![
                    CriterionId::EqualWeight.as_str().into(),
                    "violated".into(),
                    "error".into(),
                    reason.into(),
                ]);
                object(vec![("error", json!(reason))])
            }
            Err(other) => return Err(other.into()),
        };
        result_pairs.push(("equal_weight", equal_weight));
    }

    let mut inputs = state_inputs(args.state.kind, &state);
    inputs.push(("chi", number(e.chi())));
    inputs.push(("delta", number(e.delta())));
    let csv = csv_table(&["criterion", "verdict", "residual", "value"], rows);
    let report = assemble(
        "criteria",
        object(inputs),
        object(result_pairs),
        Meta::plain(),
        csv,
    );
    Ok((report, args.output.format, 0))
}

fn cmd_scan(args: ScanArgs) -> Result<CommandOutput, CliError> {
    let degrees = args.output.degrees;
    if args.steps < 2 {
        return Err(CliError::usage("--steps must be at least 2"));
    }
    if !args.from.is_finite() || !args.to.is_finite() || args.from >= args.to {
        return Err(CliError::usage("--from must be smaller than --to"));
    }
    let fixed_conflict = match args.vary {
        Vary::Alpha => args.state.alpha.is_some(),
        Vary::Delta => args.basis.delta.is_some(),
        Vary::Chi => args.basis.chi.is_some(),
        Vary::Delta2 => args.basis.delta2.is_some(),
        Vary::Chi2 => args.basis.chi2.is_some(),
    };
    if fixed_conflict {
        return Err(CliError::usage(format!(
            "--vary {} conflicts with a fixed --{} value",
            args.vary.as_str(),
            args.vary.as_str()
        )));
    }
    let mixed = args.basis.chi2.is_some()
        || args.basis.delta2.is_some()
        || matches!(args.vary, Vary::Chi2 | Vary::Delta2);
    if mixed && args.state.kind == Kind::Plus {
        return Err(CliError::usage(
            "mixed bases (--chi2/--delta2/--vary chi2|delta2) require --kind minus",
        ));
    }
    if args.basis.chi.is_none() && args.vary != Vary::Chi {
        return Err(CliError::usage("--chi is required unless it is the swept parameter"));
    }

    let base_state = build_state(&args.state, degrees)?;
    let (from, to) = (angle(args.from, degrees), angle(args.to, degrees));
    // placeholder for the swept axis; overwritten per grid point when chi is varied
    let chi = angle(args.basis.chi.unwrap_or(args.from), degrees);
    let delta = angle(args.basis.delta.unwrap_or(0.0), degrees);
    let chi2 = args.basis.chi2.map(|v| angle(v, degrees)).unwrap_or(chi);
    let delta2 = args.basis.delta2.map(|v| angle(v, degrees)).unwrap_or(delta);

    let steps = args.steps;
    let mut rows = Vec::with_capacity(steps as usize + 1);
    let mut json_rows = Vec::with_capacity(steps as usize + 1);
    for i in 0..=steps {
        let v = if i == steps {
            to
        } else {
            from + i as f64 * (to - from) / steps as f64
        };
        let (mut alpha, mut chi_v, mut delta_v, mut chi2_v, mut delta2_v) =
            (base_state.alpha(), chi, delta, chi2, delta2);
        // an omitted chi2/delta2 keeps tracking its unprimed counterpart
        match args.vary {
            Vary::Alpha => alpha = v,
            Vary::Chi => {
                chi_v = v;
                if args.basis.chi2.is_none() {
                    chi2_v = v;
                }
            }
            Vary::Delta => {
                delta_v = v;
                if args.basis.delta2.is_none() {
                    delta2_v = v;
                }
            }
            Vary::Chi2 => chi2_v = v,
            Vary::Delta2 => delta2_v = v,
        }
        let state = PairStateZ::new(base_state.kind(), base_state.p(), base_state.q(), alpha)?;
        let e = BasisSpec::new(chi_v, delta_v)?;
        let e_prime = if mixed {
            Some(BasisSpec::new(chi2_v, delta2_v)?)
        } else {
            None
        };
        let n = pair_numbers(&state, &e, e_prime.as_ref())?;
        rows.push(vec![
            csv_f64(v),
            csv_f64(n.joint.p_ee()),
            csv_f64(n.joint.p_eeb()),
            csv_f64(n.joint.p_ebe()),
            csv_f64(n.joint.p_ebeb()),
            csv_f64(n.p_plus),
            csv_f64(n.p_minus),
            csv_f64(n.rho),
            csv_f64(n.p_a_e),
            csv_f64(n.p_b_e),
        ]);
        json_rows.push(object(vec![
            (args.vary.as_str(), number(v)),
            ("p_ee", number(n.joint.p_ee())),
            ("p_eeb", number(n.joint.p_eeb())),
            ("p_ebe", number(n.joint.p_ebe())),
            ("p_ebeb", number(n.joint.p_ebeb())),
            ("p_plus", number(n.p_plus)),
            ("p_minus", number(n.p_minus)),
            ("rho", rho_value(n.rho)),
            ("p_a_e", number(n.p_a_e)),
            ("p_b_e", number(n.p_b_e)),
        ]));
    }

    let mut inputs = state_inputs(args.state.kind, &base_state);
    inputs.push(("chi", number(chi)));
    inputs.push(("delta", number(delta)));
    if mixed {
        inputs.push(("chi2", number(chi2)));
        inputs.push(("delta2", number(delta2)));
    } else {
        inputs.push(("chi2", Value::Null));
        inputs.push(("delta2", Value::Null));
    }
    inputs.push(("vary", json!(args.vary.as_str())));
    inputs.push(("from", number(from)));
    inputs.push(("to", number(to)));
    inputs.push(("steps", json!(steps)));

    let header = [
        args.vary.as_str(),
        "p_ee",
        "p_eeb",
        "p_ebe",
        "p_ebeb",
        "p_plus",
        "p_minus",
        "rho",
        "p_a_e",
        "p_b_e",
    ];
    let csv = csv_table(&header, rows);
    let results = object(vec![
        ("vary", json!(args.vary.as_str())),
        ("rows", Value::Array(json_rows)),
    ]);
    let report = assemble("scan", object(inputs), results, Meta::plain(), csv);
    Ok((report, args.output.format, 0))
}

fn cmd_verify(args: VerifyArgs) -> Result<CommandOutput, CliError> {
    if args.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    if !args.tol.is_finite() || args.tol <= 0.0 {
        return Err(CliError::usage("--tol must be positive"));
    }
    let seed = resolve_seed(args.seed);
    let summary = verify_closed_forms(args.trials, seed, args.tol);

    let families: Vec<Value> = summary
        .families()
        .iter()
        .map(|f| {
            object(vec![
                ("family", json!(f.name)),
                ("max_deviation", number(f.max_deviation)),
                ("pass", json!(f.pass)),
            ])
        })
        .collect();
    let results = object(vec![
        ("families", Value::Array(families)),
        ("all_pass", json!(summary.all_pass())),
        ("max_deviation", number(summary.max_deviation())),
    ]);
    let inputs = object(vec![
        ("trials", json!(args.trials)),
        ("seed", json!(seed)),
        ("tol", number(args.tol)),
    ]);
    let rows = summary
        .families()
        .iter()
        .map(|f| {
            vec![
                f.name.to_string(),
                csv_f64(f.max_deviation),
                f.pass.to_string(),
            ]
        })
        .collect();
    let csv = csv_table(&["family", "max_deviation", "pass"], rows);
    let report = assemble(
        "verify",
        inputs,
        results,
        Meta::seeded(RNG_ID, seed),
        csv,
    );
    let exit = if summary.all_pass() { 0 } else { 1 };
    Ok((report, args.output.format, exit))
}

fn cmd_sample(args: SampleArgs) -> Result<CommandOutput, CliError> {
    if args.n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let degrees = args.output.degrees;
    let state = build_state(&args.state, degrees)?;
    let (e, e_prime) = build_bases(&args.basis, degrees)?;
    let joint = joint_probs(&state, &e, e_prime.as_ref()).map_err(|err| match err {
        Error::KindMismatch { .. } => {
            CliError::usage("mixed bases (--chi2/--delta2) require --kind minus")
        }
        other => other.into(),
    })?;
    let seed = resolve_seed(args.seed);
    let counts = sample(&joint, args.n, seed);
    // χ² needs at least two populated categories with expected counts of 5;
    // below that the tallies are still reported, just without a statistic
    let stats = match chi_square(&counts, &joint) {
        Ok(stats) => Some(stats),
        Err(Error::InsufficientExpected { .. }) => None,
        Err(other) => return Err(other.into()),
    };
    let exit = match &stats {
        Some(s) if s.statistic > CHI2_999[s.dof - 1] => 1,
        _ => 0,
    };

    let c = counts.counts();
    let freq = counts.frequencies();
    let expected = joint.as_array();
    let results = object(vec![
        ("count_ee", json!(c[0])),
        ("count_eeb", json!(c[1])),
        ("count_ebe", json!(c[2])),
        ("count_ebeb", json!(c[3])),
        ("freq_ee", number(freq[0])),
        ("freq_eeb", number(freq[1])),
        ("freq_ebe", number(freq[2])),
        ("freq_ebeb", number(freq[3])),
        ("p_ee", number(expected[0])),
        ("p_eeb", number(expected[1])),
        ("p_ebe", number(expected[2])),
        ("p_ebeb", number(expected[3])),
        (
            "chi_square",
            stats.as_ref().map_or(Value::Null, |s| number(s.statistic)),
        ),
        ("dof", stats.as_ref().map_or(Value::Null, |s| json!(s.dof))),
    ]);
    let mut inputs = state_inputs(args.state.kind, &state);
    inputs.extend(basis_inputs(&e, e_prime.as_ref()));
    inputs.push(("n", json!(args.n)));
    inputs.push(("seed", json!(seed)));

    let header = [
        "n",
        "seed",
        "count_ee",
        "count_eeb",
        "count_ebe",
        "count_ebeb",
        "freq_ee",
        "freq_eeb",
        "freq_ebe",
        "freq_ebeb",
        "p_ee",
        "p_eeb",
        "p_ebe",
        "p_ebeb",
        "chi_square",
        "dof",
    ];
    let row = vec![
        args.n.to_string(),
        seed.to_string(),
        c[0].to_string(),
        c[1].to_string(),
        c[2].to_string(),
        c[3].to_string(),
        csv_f64(freq[0]),
        csv_f64(freq[1]),
        csv_f64(freq[2]),
        csv_f64(freq[3]),
        csv_f64(expected[0]),
        csv_f64(expected[1]),
        csv_f64(expected[2]),
        csv_f64(expected[3]),
        stats.as_ref().map_or(String::new(), |s| csv_f64(s.statistic)),
        stats.as_ref().map_or(String::new(), |s| s.dof.to_string()),
    ];
    let csv = csv_table(&header, vec![row]);
    let report = assemble(
        "sample",
        object(inputs),
        results,
        Meta::seeded(counts.rng_id(), seed),
        csv,
    );
    Ok((report, args.output.format, exit))
}
