use std::fmt::Write as _;
use std::path::Path;

use depthfn::betti::{observed_limit_and_dstab, socle_nonzero};
use depthfn::buchberger::{
    buchberger_graph, claim1_check, claim2_decompose, lessdot_pairs, observation_check, power_grid,
    sigma_set, CoverKind,
};
use depthfn::constructions::{
    construct_from_spec, example_fixtures, ndr_witness, prop_ideal, socle_witness, DepthSpec,
    WitnessRequest,
};
use depthfn::depth_model::{predict_ndr, predict_spec};
use depthfn::document::{parse_ideal, serialize_ideal};
use depthfn::random::random_ideals;
use depthfn::taylor::taylor_betti;
use depthfn::{BettiEngine, DepthFunction, Error, Field, MonomialIdeal, Stability};

use crate::{Family, Which};

pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_CAP: u8 = 3;

/// Text for stdout and the exit status.
pub struct Outcome {
    pub text: String,
    pub status: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, status: 0 }
    }

    fn status(text: String, pass: bool) -> Self {
        Self { text, status: if pass { 0 } else { EXIT_MISMATCH } }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        Self { message: message.into(), code: EXIT_INVALID }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::LatticeCap { .. } | Error::OracleCap { .. } => EXIT_CAP,
            Error::Certificate(_) | Error::Model(_) => EXIT_MISMATCH,
            _ => EXIT_INVALID,
        };
        Self { message: err.to_string(), code }
    }
}

type CliResult = Result<Outcome, CliError>;

fn read_ideal(path: &Path) -> Result<MonomialIdeal, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_ideal(&text)?)
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
fn read_spec(arg: &str) -> Result<DepthSpec, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::invalid(format!("cannot read {arg}: {e}")))?
    };
    Ok(DepthSpec::from_json(&text)?)
}

fn write_document(ideal: &MonomialIdeal, out: Option<&Path>, text: &mut String) -> Result<(), CliError> {
    if let Some(path) = out {
        std::fs::write(path, serialize_ideal(ideal))
            .map_err(|e| CliError::invalid(format!("cannot write {}: {e}", path.display())))?;
        writeln!(text, "written\t{}", path.display()).unwrap();
    }
    Ok(())
}

fn describe_prediction(f: &DepthFunction, text: &mut String) {
    writeln!(text, "predicted\t{f}").unwrap();
    writeln!(text, "limit\t{}", f.limit()).unwrap();
    writeln!(text, "dstab\t{}", f.dstab()).unwrap();
}

pub fn construct(spec_arg: &str, out: Option<&Path>) -> CliResult {
    let spec = read_spec(spec_arg)?;
    let ideal = construct_from_spec(&spec)?;
    let predicted = predict_spec(&spec)?;
    let mut text = String::new();
    writeln!(text, "spec\t{}", spec.to_json()).unwrap();
    if spec.multiplicities().is_empty() {
        writeln!(text, "note\tconstant function: principal ideal (x1) with {} free variables", spec.b())
            .unwrap();
    }
    writeln!(text, "ring\t{}", ideal.ring().var_names().join(" ")).unwrap();
    writeln!(text, "ideal\t{ideal}").unwrap();
    describe_prediction(&predicted, &mut text);
    write_document(&ideal, out, &mut text)?;
    Ok(Outcome::ok(text))
}

pub fn witness(n: usize, d: usize, r: usize, out: Option<&Path>) -> CliResult {
    let req = WitnessRequest::new(n, d, r);
    let case = req.case()?;
    let ideal = ndr_witness(&req)?;
    let predicted = predict_ndr(&req)?;
    let mut text = String::new();
    writeln!(text, "request\tn={n}\td={d}\tr={r}").unwrap();
    writeln!(text, "case\t{}", case.name()).unwrap();
    writeln!(text, "ring\t{}", ideal.ring().var_names().join(" ")).unwrap();
    writeln!(text, "ideal\t{ideal}").unwrap();
    describe_prediction(&predicted, &mut text);
    write_document(&ideal, out, &mut text)?;
    Ok(Outcome::ok(text))
}

fn observed_line(depths: &[usize], window: usize, model: Option<&DepthFunction>) -> Result<String, CliError> {
    let mut obs = observed_limit_and_dstab(depths, window)?;
    if let Some(f) = model {
        obs = obs.certify(f.limit(), f.dstab());
    }
    Ok(match obs {
        Stability::Stable { limit, dstab, certified } => format!(
            "observed\tlimit={limit}\tdstab={dstab}\tcertified={}\n",
            if certified { "yes" } else { "no" }
        ),
        Stability::Inconclusive { run, window } => {
            format!("observed\tinconclusive\trun={run}\twindow={window}\n")
        }
    })
}

fn depth_rows(ideal: &MonomialIdeal, kmax: usize, engine: &BettiEngine) -> Result<(String, Vec<usize>), CliError> {
    if kmax == 0 {
        return Err(CliError::invalid("kmax must be at least 1"));
    }
    let rows = engine.depth_prefix(ideal, kmax)?;
    let mut text = String::from("k\tdepth\tpd\tgens\tlattice\n");
    for row in &rows {
        let lattice = row.lattice_size.map_or("-".to_string(), |l| l.to_string());
        writeln!(
            text,
            "{}\t{}\t{}\t{}\t{}",
            row.k,
            row.depth,
            row.pd_quotient(ideal.arity()),
            row.num_generators,
            lattice
        )
        .unwrap();
    }
    Ok((text, rows.iter().map(|r| r.depth).collect()))
}

pub fn depth(path: &Path, kmax: usize, field: Field, window: usize, cap: usize) -> CliResult {
    let ideal = read_ideal(path)?;
    let engine = BettiEngine::new(field).with_lattice_cap(cap);
    let (mut text, depths) = depth_rows(&ideal, kmax, &engine)?;
    text.push_str(&observed_line(&depths, window, None)?);
    Ok(Outcome::ok(text))
}

pub fn betti(path: &Path, field: Field, quotient: bool, cap: usize) -> CliResult {
    let ideal = read_ideal(path)?;
    let mut table = BettiEngine::new(field).with_lattice_cap(cap).betti_table(&ideal)?;
    if quotient {
        table = table.to_quotient();
    }
    let mut text = String::from("i\tmultidegree\tbeta\n");
    for (i, b, d) in table.entries() {
        writeln!(text, "{i}\t{}\t{d}", ideal.ring().format(b)).unwrap();
    }
    let totals: Vec<String> = table.totals().iter().map(|t| t.to_string()).collect();
    writeln!(text, "totals\t{}", totals.join("\t")).unwrap();
    let pd_quotient = table.to_quotient().projective_dimension().unwrap_or(0);
    writeln!(text, "pd\t{pd_quotient}").unwrap();
    writeln!(text, "depth\t{}", ideal.arity() - pd_quotient).unwrap();
    Ok(Outcome::ok(text))
}

pub fn predict(spec: Option<&str>, n: Option<usize>, d: Option<usize>, r: Option<usize>) -> CliResult {
    let f = match (spec, n, d, r) {
        (Some(s), None, None, None) => predict_spec(&read_spec(s)?)?,
        (None, Some(n), Some(d), Some(r)) => predict_ndr(&WitnessRequest::new(n, d, r))?,
        _ => return Err(CliError::invalid("give either --spec or all of --n, --d, --r")),
    };
    let mut text = String::new();
    describe_prediction(&f, &mut text);
    writeln!(text, "json\t{}", f.to_json()).unwrap();
    Ok(Outcome::ok(text))
}

pub struct VerifyParams {
    pub family: Family,
    pub t: Option<usize>,
    pub spec: Option<String>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub r: Option<usize>,
    pub which: Option<Which>,
    pub kmax: usize,
    pub window: usize,
    pub expect: Option<String>,
}

fn parse_fields(arg: &str) -> Result<Vec<Field>, CliError> {
    if arg.eq_ignore_ascii_case("both") {
        Ok(vec![Field::Prime(2), Field::Prime(3)])
    } else {
        Ok(vec![arg.parse()?])
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::invalid(format!("this family needs {flag}")))
}

pub fn verify(p: &VerifyParams, field_arg: &str, cap: usize) -> CliResult {
    let fields = parse_fields(field_arg)?;
    if p.kmax == 0 {
        return Err(CliError::invalid("kmax must be at least 1"));
    }
    let (label, ideal, predicted) = match p.family {
        Family::Prop => {
            let t = need(p.t, "--t")?;
            let ideal = prop_ideal(t)?;
            (format!("prop t={t}"), ideal, DepthFunction::step(1, t - 1, 0))
        }
        Family::Spec => {
            let spec = read_spec(&need(p.spec.clone(), "--spec")?)?;
            (format!("spec {}", spec.to_json()), construct_from_spec(&spec)?, predict_spec(&spec)?)
        }
        Family::Ndr => {
            let req = WitnessRequest::new(need(p.n, "--n")?, need(p.d, "--d")?, need(p.r, "--r")?);
            let label = format!("ndr n={} d={} r={}", req.n, req.d, req.r);
            (label, ndr_witness(&req)?, predict_ndr(&req)?)
        }
        Family::Example => {
            let fx = example_fixtures()?;
            match need(p.which, "--which")? {
                Which::I => ("example I".to_string(), fx.i, fx.expected_i),
                Which::J => ("example J".to_string(), fx.j, fx.expected_j),
            }
        }
    };
    let predicted = match &p.expect {
        Some(json) => DepthFunction::from_json(json)?,
        None => predicted,
    };
    let want = predicted.values(p.kmax);
    let mut text = String::new();
    writeln!(text, "family\t{label}").unwrap();
    writeln!(text, "ideal\t{ideal}").unwrap();
    let source = if p.expect.is_some() { "expected" } else { "predicted" };
    writeln!(text, "{source}\t{predicted}").unwrap();
    let mut all_match = true;
    for field in fields {
        let engine = BettiEngine::new(field).with_lattice_cap(cap);
        let got = engine.depths(&ideal, p.kmax)?;
        writeln!(text, "field\t{field}").unwrap();
        writeln!(text, "k\t{source}\tcomputed").unwrap();
        for k in 1..=p.kmax {
            writeln!(text, "{k}\t{}\t{}", want[k - 1], got[k - 1]).unwrap();
        }
        match (1..=p.kmax).find(|&k| want[k - 1] != got[k - 1]) {
            None => writeln!(text, "result\tmatch").unwrap(),
            Some(k) => {
                all_match = false;
                writeln!(text, "result\tmismatch at k={k}").unwrap();
            }
        }
        text.push_str(&observed_line(&got, p.window, Some(&predicted))?);
    }
    Ok(Outcome::status(text, all_match))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

fn label(l: (usize, usize, usize)) -> String {
    format!("w({},{},{})", l.0, l.1, l.2)
}

pub fn buchberger(t: usize, n: usize, cap: usize) -> CliResult {
    let grid = power_grid(t, n)?;
    let ring = grid.ring.clone();
    let inside = grid.within_hypothesis();
    let mut text = String::new();
    writeln!(
        text,
        "grid\tt={t}\tn={n}\tlabels={}\tmatches_power={}\thypothesis={}",
        grid.len(),
        yes_no(grid.matches_power),
        if inside { "inside" } else { "outside" }
    )
    .unwrap();
    for (l, m) in grid.labels.iter().zip(&grid.monomials) {
        writeln!(text, "label\t{}\t{}", label(*l), ring.format(m)).unwrap();
    }
    for c in lessdot_pairs(&grid).pairs {
        let kind = match c.kind {
            CoverKind::Shift => "shift",
            CoverKind::BlockJump => "block-jump",
            CoverKind::Other => "other",
        };
        writeln!(text, "cover\t{}\t{}\t{kind}", label(c.lower), label(c.upper)).unwrap();
    }
    let power = prop_ideal(t)?.power(n)?;
    for line in buchberger_graph(&power)?.format_edges(&power).lines() {
        let (a, b) = line.split_once(" -- ").expect("edge format");
        writeln!(text, "edge\t{a}\t{b}").unwrap();
    }

    let c1 = claim1_check(t, n)?;
    let obs = observation_check(t, n)?;
    let mut c2_pairs = 0;
    let mut c2_failure = None;
    for i in 0..grid.len() {
        for j in i + 2..grid.len() {
            c2_pairs += 1;
            if let Err(e) = claim2_decompose(&grid, grid.labels[i], grid.labels[j]) {
                c2_failure.get_or_insert(e.to_string());
            }
        }
    }
    let sigma = sigma_set(&grid)?;
    let sigma_ok = sigma.iter().all(|s| s.presentation_vanishes(&grid));
    let beta1 = BettiEngine::default().with_lattice_cap(cap).betti_table(&power)?.total(1);

    for s in &sigma {
        writeln!(text, "sigma\t{}", s.format(&ring)).unwrap();
    }
    let report = |name: &str, pass: bool, detail: String, failure: &Option<String>, text: &mut String| {
        write!(text, "{name}\t{}\t{detail}", pass_fail(pass)).unwrap();
        if let Some(f) = failure {
            write!(text, "\t{f}").unwrap();
        }
        text.push('\n');
    };
    report("claim1", c1.pass, format!("checked={}", c1.checked), &c1.failure, &mut text);
    report("observation", obs.pass, format!("checked={}", obs.checked), &obs.failure, &mut text);
    report("claim2", c2_failure.is_none(), format!("pairs={c2_pairs}"), &c2_failure, &mut text);
    report("sigma", sigma_ok, format!("count={}\tbeta1={beta1}", sigma.len()), &None, &mut text);
    let pass = c1.pass && obs.pass && c2_failure.is_none() && sigma_ok && sigma.len() == beta1;
    writeln!(text, "result\t{}", if inside { pass_fail(pass) } else { "outside-hypothesis" }).unwrap();
    Ok(Outcome::status(text, pass || !inside))
}

pub fn socle(t: usize, n: usize) -> CliResult {
    let w = socle_witness(t, n)?;
    let ring = prop_ideal(t)?.ring().clone();
    let mut text = String::new();
    writeln!(text, "u\t{}", ring.format(&w.u)).unwrap();
    for (var, l, m) in &w.divisors {
        writeln!(text, "divisor\t{}\t{}\t{}", ring.var_names()[*var], label(*l), ring.format(m)).unwrap();
    }
    writeln!(text, "certified\tyes").unwrap();
    Ok(Outcome::ok(text))
}

pub fn oracle_check(seed: u64, count: usize, field: Field, cap: usize) -> CliResult {
    let engine = BettiEngine::new(field).with_lattice_cap(cap);
    let mut text = String::new();
    writeln!(text, "seed\t{seed}\ncount\t{count}\nfield\t{field}").unwrap();
    let (mut agree, mut socle_agree) = (0, 0);
    for (idx, ideal) in random_ideals(seed, count).iter().enumerate() {
        let table = engine.betti_table(ideal)?;
        let oracle = taylor_betti(ideal, field)?;
        match table.first_difference(&oracle) {
            None => agree += 1,
            Some((i, b)) => writeln!(
                text,
                "mismatch\t{idx}\t{ideal}\tbeta_{i} at {}: engine {} oracle {}",
                ideal.ring().format(&b),
                table.get(i, &b),
                oracle.get(i, &b)
            )
            .unwrap(),
        }
        let depth0 = table.projective_dimension() == Some(ideal.arity() - 1);
        if socle_nonzero(ideal)? == depth0 {
            socle_agree += 1;
        } else {
            writeln!(text, "socle-mismatch\t{idx}\t{ideal}").unwrap();
        }
    }
    let pass = agree == count && socle_agree == count;
    writeln!(text, "betti_agree\t{agree}\nsocle_agree\t{socle_agree}\nresult\t{}", pass_fail(pass)).unwrap();
    Ok(Outcome::status(text, pass))
}
