//! Named verification suites over a grid of small parameters, and the
//! machine-readable report they produce.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::current::{
    bimodule_iso_check, degeneration_check, gl_current_bracket, grade_zero_matches, graded_basis, graded_dim, has_unit,
    noncommutativity_witness, odot_elem, path_algebra_iso_check, AlElement, GlCurrent,
};
use crate::double::{
    check_double_jacobi, check_leibniz, check_skew, fuzz_corpus, jacobi_associativity_equivalence, matrix_poisson,
    necklace, necklace_poisson, symbol_match_matrix, symbol_match_trace, trace_bracket_lifts, PGen, SPoly, Verdict,
};
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::omega::{AlgebraSpec, Associativity, Builtin};
use crate::scalar::Scalar;
use crate::ugl::UAlgebra;
use crate::words::{all_words, cyclic_canonical, words_up_to, Word};
use crate::yangian::{ordered_monomials, tgens_up_to, Independence, YExpression, YangianContext};

/// The named suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Projection,
    Pbw,
    Splitting,
    Double,
    Symbols,
    Degeneration,
    Current,
    All,
}

impl Suite {
    pub const MEMBERS: [Suite; 7] = [
        Suite::Projection,
        Suite::Pbw,
        Suite::Splitting,
        Suite::Double,
        Suite::Symbols,
        Suite::Degeneration,
        Suite::Current,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Projection => "projection",
            Suite::Pbw => "pbw",
            Suite::Splitting => "splitting",
            Suite::Double => "double",
            Suite::Symbols => "symbols",
            Suite::Degeneration => "degeneration",
            Suite::Current => "current",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::MEMBERS
            .iter()
            .chain(&[Suite::All])
            .find(|m| m.to_string() == s)
            .copied()
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

/// Where an algebra comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaSource {
    Builtin(Builtin),
    File(PathBuf),
}

impl OmegaSource {
    /// A builtin name if it parses as one, otherwise a file path.
    pub fn parse(s: &str) -> Self {
        match s.parse::<Builtin>() {
            Ok(b) => OmegaSource::Builtin(b),
            Err(_) => OmegaSource::File(PathBuf::from(s)),
        }
    }

    pub fn load(&self) -> Result<Arc<AlgebraSpec>> {
        match self {
            OmegaSource::Builtin(b) => Ok(Arc::new(b.build()?)),
            OmegaSource::File(p) => Ok(Arc::new(AlgebraSpec::load(p)?)),
        }
    }
}

impl fmt::Display for OmegaSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaSource::Builtin(b) => write!(f, "{b}"),
            OmegaSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// Parameters of a suite run.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// `None` runs each suite on its default list of builtins.
    pub omega: Option<OmegaSource>,
    pub n_min: usize,
    pub n_max: usize,
    /// Largest `d`.
    pub d: usize,
    pub max_len: usize,
    pub max_deg: usize,
    pub s_values: Vec<Scalar>,
    pub seed: u64,
    /// Largest `N` any check may use.
    pub n_cap: usize,
    pub fuzz_count: usize,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            omega: None,
            n_min: 2,
            n_max: 4,
            d: 2,
            max_len: 3,
            max_deg: 2,
            s_values: ["0", "1", "-1", "5/2"]
                .iter()
                .map(|s| s.parse().expect("literal"))
                .collect(),
            seed: 20240601,
            n_cap: 7,
            fuzz_count: 50,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::InvalidArgument(format!(
                "empty N range {}..={}",
                self.n_min, self.n_max
            )));
        }
        if self.n_max < self.d {
            return Err(Error::InvalidArgument(format!("N range must reach d = {}", self.d)));
        }
        if self.max_len == 0 || self.max_deg == 0 {
            return Err(Error::InvalidArgument(
                "word length and degree bounds must be positive".into(),
            ));
        }
        if self.s_values.is_empty() {
            return Err(Error::InvalidArgument("need at least one value of s".into()));
        }
        if self.n_cap < self.n_max {
            return Err(Error::InvalidArgument("N cap is below the N range".into()));
        }
        Ok(())
    }

    fn settings(&self) -> Value {
        json!({
            "omega": self.omega.as_ref().map(|o| o.to_string()),
            "n_min": self.n_min,
            "n_max": self.n_max,
            "d": self.d,
            "max_len": self.max_len,
            "max_deg": self.max_deg,
            "s": self.s_values.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "seed": self.seed,
            "n_cap": self.n_cap,
            "fuzz_count": self.fuzz_count,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotStabilized,
}

/// One executed check.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub name: String,
    pub config: BTreeMap<String, String>,
    pub status: Status,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub not_stabilized: usize,
}

/// The outcome of a suite run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub suite: Suite,
    pub settings: Value,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    /// No failures and nothing left unstabilized.
    pub fn passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.not_stabilized == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON form with wall times zeroed, for reproducibility comparisons.
    pub fn to_json_without_times(&self) -> String {
        let mut r = self.clone();
        for rec in &mut r.records {
            rec.wall_ms = 0;
        }
        r.to_json()
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent)?;
            }
        }
        std::fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn find<'a>(&'a self, name: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.records.iter().filter(move |r| r.name == name)
    }

    /// Human-readable summary, one line per record.
    pub fn summary_text(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            let cfg: Vec<String> = r.config.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let status = serde_json::to_value(r.status)
                .expect("status")
                .as_str()
                .unwrap_or("")
                .to_string();
            s.push_str(&format!(
                "{status:<14} {:<24} {} ({} cases)\n",
                r.name,
                cfg.join(" "),
                r.cases
            ));
        }
        let m = &self.summary;
        s.push_str(&format!(
            "{} checks: {} pass, {} fail, {} skipped, {} not-stabilized\n",
            m.total, m.pass, m.fail, m.skipped, m.not_stabilized
        ));
        s
    }
}

struct Outcome {
    status: Status,
    cases: usize,
    witness: Option<Value>,
    details: Option<Value>,
}

impl Outcome {
    fn pass(cases: usize) -> Self {
        Self {
            status: Status::Pass,
            cases,
            witness: None,
            details: None,
        }
    }

    fn fail(cases: usize, witness: Value) -> Self {
        Self {
            status: Status::Fail,
            cases,
            witness: Some(witness),
            details: None,
        }
    }

    fn skipped(reason: impl Into<String>) -> Self {
        Self {
            status: Status::Skipped,
            cases: 0,
            witness: None,
            details: Some(json!({ "reason": reason.into() })),
        }
    }

    fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }
}

/// Runs `check` on every case; the first returned witness fails the sweep.
fn sweep<T>(cases: impl IntoIterator<Item = T>, mut check: impl FnMut(&T) -> Result<Option<Value>>) -> Result<Outcome> {
    let mut count = 0;
    for case in cases {
        count += 1;
        if let Some(w) = check(&case)? {
            return Ok(Outcome::fail(count, w));
        }
    }
    Ok(Outcome::pass(count))
}

fn verdict_witness(v: Verdict, describe: impl FnOnce() -> Value) -> Result<Option<Value>> {
    match v {
        Verdict::Match => Ok(None),
        Verdict::Mismatch => Ok(Some(describe())),
        Verdict::NotStabilized => Err(Error::NotStabilized(describe().to_string())),
    }
}

struct Runner<'a> {
    cfg: &'a SuiteConfig,
    records: Vec<Record>,
}

impl<'a> Runner<'a> {
    fn record(&mut self, name: &str, config: &[(&str, String)], check: impl FnOnce() -> Result<Outcome>) {
        let start = Instant::now();
        let outcome = match check() {
            Ok(o) => o,
            Err(Error::SizeLimit(msg)) => Outcome::skipped(msg),
            Err(Error::NotStabilized(msg)) => Outcome {
                status: Status::NotStabilized,
                cases: 0,
                witness: Some(json!({ "reason": msg })),
                details: None,
            },
            Err(e) => Outcome::fail(0, json!({ "error": e.to_string() })),
        };
        self.records.push(Record {
            name: name.to_string(),
            config: config.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            status: outcome.status,
            cases: outcome.cases,
            witness: outcome.witness,
            details: outcome.details,
            wall_ms: start.elapsed().as_millis() as u64,
        });
    }

    fn omegas(&self, defaults: &[Builtin]) -> Result<Vec<Arc<AlgebraSpec>>> {
        match &self.cfg.omega {
            Some(src) => Ok(vec![src.load()?]),
            None => defaults.iter().map(|b| Ok(Arc::new(b.build()?))).collect(),
        }
    }

    /// Word-length bound for an algebra: large algebras get shorter words.
    fn len_for(&self, alg: &AlgebraSpec) -> usize {
        if alg.dim() >= 4 {
            self.cfg.max_len.min(2)
        } else {
            self.cfg.max_len
        }
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.cfg.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

const C: Builtin = Builtin::DirectSum(1);
const C2: Builtin = Builtin::DirectSum(2);
const NULL2: Builtin = Builtin::Null(2);
const MAT2: Builtin = Builtin::Matrix(2);

fn wd(alg: &AlgebraSpec, w: &Word) -> String {
    w.display(alg).to_string()
}

/// Runs a suite.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    if let Some(src) = &cfg.omega {
        let alg = src.load()?;
        if cfg.suite != Suite::Double && !alg.check_associativity().passed() {
            return Err(Error::Precondition(format!("{} is not associative", alg.name())));
        }
    }
    let mut runner = Runner {
        cfg,
        records: Vec::new(),
    };
    let suites: Vec<Suite> = if cfg.suite == Suite::All {
        Suite::MEMBERS.to_vec()
    } else {
        vec![cfg.suite]
    };
    for s in suites {
        match s {
            Suite::Projection => projection(&mut runner)?,
            Suite::Pbw => pbw(&mut runner)?,
            Suite::Splitting => splitting(&mut runner)?,
            Suite::Double => double(&mut runner)?,
            Suite::Symbols => symbols(&mut runner)?,
            Suite::Degeneration => degeneration(&mut runner)?,
            Suite::Current => current(&mut runner)?,
            Suite::All => unreachable!(),
        }
    }
    let mut records = runner.records;
    records.sort_by(|a, b| (&a.name, &a.config).cmp(&(&b.name, &b.config)));
    let mut summary = Summary {
        total: records.len(),
        ..Summary::default()
    };
    for r in &records {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
            Status::NotStabilized => summary.not_stabilized += 1,
        }
    }
    Ok(Report {
        tool: "yangian".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        suite: cfg.suite,
        settings: cfg.settings(),
        records,
        summary,
    })
}

fn projection(r: &mut Runner) -> Result<()> {
    let cfg = r.cfg;
    for alg in r.omegas(&[C, C2, NULL2, MAT2])? {
        let len = r.len_for(&alg);
        let words = words_up_to(alg.dim(), len);
        let ctx = YangianContext::new(alg.clone(), 0);
        let name = alg.name().to_string();
        for n in cfg.n_min.max(2)..=cfg.n_max {
            let base = [
                ("omega", name.clone()),
                ("N", n.to_string()),
                ("max_len", len.to_string()),
            ];
            let top = n.saturating_sub(1).min(2);
            r.record("projection", &base, || {
                let (u, lo) = (ctx.algebra(n)?, ctx.algebra(n - 1)?);
                let cases = (1..=top).flat_map(|i| (1..=top).map(move |j| (i, j)));
                let cases = cases.flat_map(|ij| {
                    words
                        .iter()
                        .flat_map(move |w| cfg.s_values.iter().map(move |s| (ij, w, s)))
                });
                sweep(cases, |&((i, j), w, s)| {
                    let down = u.project_down(&u.t_elem(i, j, w, s)?, &lo)?;
                    Ok((down != lo.t_elem(i, j, w, s)?)
                        .then(|| json!({ "i": i, "j": j, "word": wd(&alg, w), "s": s.to_string() })))
                })
            });
            let top = n.min(2);
            r.record("reparametrization", &base, || {
                let u = ctx.algebra(n)?;
                let pairs: Vec<(&Scalar, &Scalar)> = cfg
                    .s_values
                    .iter()
                    .enumerate()
                    .flat_map(|(a, s)| cfg.s_values[a + 1..].iter().map(move |t| (s, t)))
                    .collect();
                let pairs = &pairs;
                let cases = (1..=top).flat_map(|i| (1..=top).map(move |j| (i, j)));
                let cases = cases.flat_map(|ij| words.iter().flat_map(move |w| pairs.iter().map(move |&p| (ij, w, p))));
                sweep(cases, |&((i, j), w, (s, t))| {
                    Ok((!u.reparametrize_check(i, j, w, s, t)?).then(
                        || json!({ "i": i, "j": j, "word": wd(&alg, w), "s": s.to_string(), "s_prime": t.to_string() }),
                    ))
                })
            });
            let cfg_deg = [
                ("omega", name.clone()),
                ("N", n.to_string()),
                ("max_deg", cfg.max_deg.to_string()),
            ];
            r.record("ideal-intersection", &cfg_deg, || {
                let rep = ctx.algebra(n)?.ideal_intersection_check(cfg.max_deg)?;
                let details = serde_json::to_value(rep).expect("serializable");
                Ok(if rep.passed() {
                    Outcome::pass(1)
                } else {
                    Outcome::fail(1, details.clone())
                }
                .with_details(details))
            });
        }
        if alg.dim() == 1 && alg.product(0, 0) == &LinComb::basis(0) {
            r.record("anchor", &[("omega", name.clone()), ("N", "2".into())], || {
                let u = ctx.algebra(2)?;
                let lo = ctx.algebra(1)?;
                sweep(cfg.s_values.iter(), |s| {
                    let (t, expect, expect_down) = anchor_values(&u, &lo, s)?;
                    Ok((t != expect || u.project_down(&t, &lo)? != expect_down)
                        .then(|| json!({ "s": s.to_string(), "got": t.to_text(&alg) })))
                })
            });
        }
    }
    Ok(())
}

/// `t_11((1,1);2;s)`, its hand-derived normal form
/// `E11² + E21E12 + E11 − E22 + (−2−s)E11`, and the projection
/// `E11² + (−1−s)E11`, over `Ω = C`.
pub fn anchor_values(
    u: &UAlgebra,
    lo: &UAlgebra,
    s: &Scalar,
) -> Result<(crate::ugl::UElement, crate::ugl::UElement, crate::ugl::UElement)> {
    let w = Word(vec![0, 0]);
    let t = u.t_elem(1, 1, &w, s)?;
    let g = |i, j| u.gen(i, j, 0);
    let mut terms = LinComb::new();
    terms.add_term(vec![g(1, 1)?, g(1, 1)?], Scalar::one());
    terms.add_term(vec![g(2, 1)?, g(1, 2)?], Scalar::one());
    terms.add_term(vec![g(1, 1)?], Scalar::one() + (Scalar::from(-2) - s));
    terms.add_term(vec![g(2, 2)?], -Scalar::one());
    let e11 = lo.gen(1, 1, 0)?;
    let mut down = LinComb::new();
    down.add_term(vec![e11, e11], Scalar::one());
    down.add_term(vec![e11], Scalar::from(-1) - s);
    Ok((t, u.element(terms), lo.element(down)))
}

fn pbw(r: &mut Runner) -> Result<()> {
    let cfg = r.cfg;
    let s0 = cfg.s_values[0].clone();
    for alg in r.omegas(&[C, C2, NULL2, MAT2])? {
        let name = alg.name().to_string();
        let len = match alg.dim() {
            1 => cfg.max_len,
            2 | 3 => cfg.max_len.min(2),
            _ => 1,
        };
        for d in 1..=cfg.d {
            let ctx = YangianContext::new(alg.clone(), d);
            let n = cfg.n_max.max(d);
            let config = [
                ("omega", name.clone()),
                ("d", d.to_string()),
                ("N", n.to_string()),
                ("max_len", len.to_string()),
                ("s", s0.to_string()),
            ];
            r.record("pbw-basis", &config, || {
                let rep = ctx.pbw_suite(len, len, n, &s0)?;
                let details = json!({ "rank": rep.rank, "count": rep.count });
                Ok(if rep.passed() {
                    Outcome::pass(rep.count)
                } else {
                    Outcome::fail(rep.count, json!({ "dependency": rep.witness }))
                }
                .with_details(details))
            });
            r.record(
                "evaluation-projection",
                &[("omega", name.clone()), ("d", d.to_string())],
                || {
                    let mut rng = r_rng(cfg, 11 + d as u64);
                    let pool = ordered_monomials(d, alg.dim(), 2, 2, &s0);
                    let ns: Vec<usize> = (cfg.n_min.max(d + 1).max(2)..=cfg.n_max).collect();
                    let trials: Vec<YExpression> = (0..4)
                        .map(|_| {
                            let mut y = YExpression::zero();
                            for _ in 0..3 {
                                let m = pool.choose(&mut rng).expect("nonempty").clone();
                                y = y.add(&YExpression::monomial(m).scale(&Scalar::from(rng.gen_range(-3i64..=3))));
                            }
                            y
                        })
                        .collect();
                    let cases = trials.iter().flat_map(|y| ns.iter().map(move |&n| (y, n)));
                    sweep(cases, |&(y, n)| {
                        let (u, lo) = (ctx.algebra(n)?, ctx.algebra(n - 1)?);
                        let down = u.project_down(&ctx.evaluate(y, n)?, &lo)?;
                        Ok((down != ctx.evaluate(y, n - 1)?).then(|| json!({ "N": n, "y": y.to_text(&alg) })))
                    })
                },
            );
            if alg.dim() <= 2 && d <= 2 {
                r.record("shift-automorphism", &[("omega", name.clone()), ("d", d.to_string())], || {
                    let mut rng = r_rng(cfg, 23 + d as u64);
                    let gens = tgens_up_to(d, alg.dim(), cfg.max_len.min(2), &s0);
                    let shifts: Vec<Scalar> = cfg.s_values.iter().filter(|c| !c.is_zero()).cloned().collect();
                    let shifts = if shifts.is_empty() { vec![Scalar::one()] } else { shifts };
                    let cases: Vec<_> = (0..4)
                        .map(|_| {
                            let g = gens.choose(&mut rng).expect("nonempty").clone();
                            let h = gens.choose(&mut rng).expect("nonempty").clone();
                            (g, h, shifts.choose(&mut rng).expect("nonempty").clone())
                        })
                        .collect();
                    sweep(cases, |(g, h, c)| {
                        let n = ctx.default_point(g.len() + h.len());
                        if n + 1 > cfg.n_cap {
                            return Err(Error::SizeLimit(format!("needs N = {} above cap {}", n + 1, cfg.n_cap)));
                        }
                        Ok((!ctx.shift_check(g, h, c, n)?).then(|| {
                            json!({ "g": g.display(&alg).to_string(), "h": h.display(&alg).to_string(), "c": c.to_string() })
                        }))
                    })
                });
            }
        }
        r.record("planted-dependency", &[("omega", name.clone())], || {
            let ctx = YangianContext::new(alg.clone(), 1);
            let t = YExpression::gen(ctx.tgen(1, 1, Word(vec![0]), s0.clone())?);
            let set = [t.clone(), t.scale(&Scalar::from(2))];
            let n = cfg.n_min.max(1);
            let got = ctx.independence_certificate(&set, n)?;
            let expect = Independence::Dependent(vec![Scalar::from(2), Scalar::from(-1)]);
            Ok(if got == expect {
                Outcome::pass(1)
            } else {
                Outcome::fail(1, json!({ "got": format!("{got:?}") }))
            })
        });
    }
    Ok(())
}

fn r_rng(cfg: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    Runner {
        cfg,
        records: Vec::new(),
    }
    .rng(salt)
}

fn splitting(r: &mut Runner) -> Result<()> {
    let cfg = r.cfg;
    for alg in r.omegas(&[C, C2])? {
        let name = alg.name().to_string();
        let mut probes: Vec<(usize, usize)> = (0..=cfg.d).map(|d| (d, 1)).collect();
        if alg.dim() == 1 {
            probes.push((0, 2));
            probes.push((1, 2));
        }
        for (d, deg) in probes {
            let ctx = YangianContext::new(alg.clone(), d);
            let lo = cfg.n_min.max(3).max(d + deg);
            for n in lo..=cfg.n_max {
                if n + 1 > cfg.n_cap {
                    continue;
                }
                let config = [
                    ("omega", name.clone()),
                    ("d", d.to_string()),
                    ("deg", deg.to_string()),
                    ("N", n.to_string()),
                ];
                r.record("splitting", &config, || {
                    let rep = ctx.splitting_probe(deg, n)?;
                    let details = serde_json::to_value(&rep).expect("serializable");
                    Ok(match rep.verdict {
                        crate::yangian::SplitVerdict::StabilizedMatch => Outcome::pass(2),
                        crate::yangian::SplitVerdict::Mismatch => Outcome::fail(2, details.clone()),
                        crate::yangian::SplitVerdict::NotStabilized => {
                            return Err(Error::NotStabilized(details.to_string()));
                        }
                    }
                    .with_details(details))
                });
            }
        }
        if alg.dim() == 1 && alg.detect_unit().is_some() {
            let d = cfg.d.clamp(1, 2);
            let ctx = YangianContext::new(alg.clone(), d);
            for n in cfg.n_min.max(3).max(d)..=cfg.n_max {
                r.record(
                    "invariants-commute",
                    &[("omega", name.clone()), ("d", d.to_string()), ("N", n.to_string())],
                    || {
                        Ok(if ctx.commutant_check(2, 2, n)? {
                            Outcome::pass(1)
                        } else {
                            Outcome::fail(1, json!({ "N": n }))
                        })
                    },
                );
            }
        }
    }
    Ok(())
}

fn double(r: &mut Runner) -> Result<()> {
    let cfg = r.cfg;
    for alg in r.omegas(&[C, C2, NULL2, MAT2])? {
        let name = alg.name().to_string();
        let len = r.len_for(&alg);
        let config = [("omega", name.clone()), ("max_len", len.to_string())];
        let show = |ws: &[&Word]| -> Value { json!(ws.iter().map(|w| wd(&alg, w)).collect::<Vec<_>>()) };
        r.record("skew", &config, || {
            Ok(match check_skew(&alg, len) {
                None => Outcome::pass(1),
                Some((a, b)) => Outcome::fail(1, show(&[&a, &b])),
            })
        });
        r.record("leibniz", &config, || {
            Ok(match check_leibniz(&alg, len) {
                None => Outcome::pass(1),
                Some((a, b, c)) => Outcome::fail(1, show(&[&a, &b, &c])),
            })
        });
        let associative = alg.check_associativity();
        r.record("associativity", &[("omega", name.clone())], || {
            Ok(match associative {
                Associativity::Pass => Outcome::pass(1),
                Associativity::Witness(i, j, k) => Outcome::fail(1, json!([alg.label(i), alg.label(j), alg.label(k)])),
            })
        });
        let jacobi = check_double_jacobi(&alg, len);
        r.record("double-jacobi", &config, || {
            Ok(match &jacobi {
                None => Outcome::pass(1),
                Some((a, b, c)) => Outcome::fail(1, show(&[a, b, c])),
            })
        });
        r.record("jacobi-equivalence", &config, || {
            let agrees = jacobi.is_none() == associative.passed();
            let details = json!({ "associative": associative.passed(), "jacobi": jacobi.is_none() });
            Ok(if agrees {
                Outcome::pass(1).with_details(details)
            } else {
                Outcome::fail(1, details)
            })
        });
    }
    r.record(
        "equivalence-fuzz",
        &[("count", cfg.fuzz_count.to_string()), ("seed", cfg.seed.to_string())],
        || {
            let corpus = fuzz_corpus(cfg.seed, cfg.fuzz_count)?;
            let mut assoc = 0;
            let mut examples = Vec::new();
            let out = sweep(corpus.iter(), |spec| {
                let rep = jacobi_associativity_equivalence(spec, 2);
                assoc += rep.associative as usize;
                if !rep.associative && examples.len() < 3 {
                    examples.push(json!({ "algebra": rep.algebra, "jacobi_witness": rep.jacobi_witness }));
                }
                Ok((!rep.agrees()).then(|| serde_json::to_value(&rep).expect("serializable")))
            })?;
            let details =
                json!({ "associative": assoc, "non_associative": corpus.len() - assoc, "examples": examples });
            Ok(out.with_details(details))
        },
    );
    Ok(())
}

fn symbols(r: &mut Runner) -> Result<()> {
    let cfg = r.cfg;
    let matrix_defaults = [C, C2];
    for alg in r.omegas(&matrix_defaults)? {
        let name = alg.name().to_string();
        let total = cfg.max_len.min(3);
        for d in 1..=cfg.d {
            let ctx = YangianContext::new(alg.clone(), d);
            for sum in 2..=total {
                let g = sum - 1;
                let n = cfg.n_max.max(g + d).max(d);
                if n + 1 > cfg.n_cap {
                    continue;
                }
                let config = [
                    ("omega", name.clone()),
                    ("d", d.to_string()),
                    ("len_sum", sum.to_string()),
                    ("N", n.to_string()),
                ];
                r.record("symbol-matrix", &config, || {
                    let mut cases = Vec::new();
                    for lx in 1..sum {
                        for x in all_words(alg.dim(), lx) {
                            for y in all_words(alg.dim(), sum - lx) {
                                for idx in index_tuples(d) {
                                    for s in &cfg.s_values {
                                        cases.push((idx, x.clone(), y.clone(), s.clone()));
                                    }
                                }
                            }
                        }
                    }
                    sweep(cases, |(idx, x, y, s)| {
                        let v = symbol_match_matrix(&ctx, *idx, x, y, s, n)?;
                        verdict_witness(v, || {
                            json!({ "ijkl": [idx.0, idx.1, idx.2, idx.3], "x": wd(&alg, x), "y": wd(&alg, y), "s": s.to_string() })
                        })
                    })
                });
            }
            let plen = if alg.dim() <= 2 { 2 } else { 1 };
            r.record(
                "matrix-poisson-lie",
                &[
                    ("omega", name.clone()),
                    ("d", d.to_string()),
                    ("max_len", plen.to_string()),
                ],
                || matrix_poisson_lie(&alg, d, plen),
            );
        }
    }
    for alg in r.omegas(&[C, MAT2, C2, NULL2])? {
        let name = alg.name().to_string();
        let len = cfg.max_len.min(2);
        let ctx = YangianContext::new(alg.clone(), 0);
        let n = cfg.n_max.max(2 * len - 1);
        if n < cfg.n_cap {
            let config = [
                ("omega", name.clone()),
                ("max_len", len.to_string()),
                ("N", n.to_string()),
            ];
            r.record("symbol-trace", &config, || {
                let words = words_up_to(alg.dim(), len);
                let cases = words.iter().flat_map(|x| words.iter().map(move |y| (x, y)));
                sweep(cases, |&(x, y)| {
                    let v = symbol_match_trace(&ctx, x, y, n)?;
                    verdict_witness(v, || json!({ "x": wd(&alg, x), "y": wd(&alg, y) }))
                })
            });
        }
        let tlen = if alg.dim() <= 2 { 3 } else { 2 };
        r.record(
            "trace-lie",
            &[("omega", name.clone()), ("max_len", tlen.to_string())],
            || trace_lie(&alg, tlen),
        );
    }
    Ok(())
}

fn all_triples<T>(v: &[T]) -> Vec<(&T, &T, &T)> {
    let mut out = Vec::with_capacity(v.len().pow(3));
    for a in v {
        for b in v {
            for c in v {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn index_tuples(d: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                for l in 1..=d {
                    v.push((i, j, k, l));
                }
            }
        }
    }
    v
}

/// Antisymmetry and Jacobi of the bracket on matrix generators on generators.
fn matrix_poisson_lie(alg: &AlgebraSpec, d: usize, len: usize) -> Result<Outcome> {
    let mut gens = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            for w in words_up_to(alg.dim(), len) {
                gens.push(SPoly::basis(vec![PGen::new(d, i, j, w)?]));
            }
        }
    }
    let br = |f: &SPoly, g: &SPoly| matrix_poisson(alg, d, f, g);
    let anti = sweep(gens.iter().flat_map(|a| gens.iter().map(move |b| (a, b))), |&(a, b)| {
        Ok((br(a, b)? != -&br(b, a)?).then(|| json!({ "pair": [format!("{a:?}"), format!("{b:?}")] })))
    })?;
    if anti.status != Status::Pass {
        return Ok(anti);
    }
    let triples = all_triples(&gens);
    sweep(triples, |&(a, b, c)| {
        let j = &(&br(a, &br(b, c)?)? + &br(b, &br(c, a)?)?) + &br(c, &br(a, b)?)?;
        Ok((!j.is_zero()).then(|| json!({ "triple": [format!("{a:?}"), format!("{b:?}"), format!("{c:?}")] })))
    })
}

/// Well-definedness on rotation classes, antisymmetry, and Jacobi of the
/// trace bracket.
fn trace_lie(alg: &AlgebraSpec, len: usize) -> Result<Outcome> {
    let words = words_up_to(alg.dim(), len);
    let rotations = |w: &Word| -> Vec<Word> {
        (0..w.len())
            .map(|k| w.slice(k, w.len()).concat(&w.slice(0, k)))
            .collect()
    };
    let lifts = sweep(
        words.iter().flat_map(|x| words.iter().map(move |y| (x, y))),
        |&(x, y)| {
            let base = trace_bracket_lifts(alg, x, y)?;
            for xr in rotations(x) {
                for yr in rotations(y) {
                    if trace_bracket_lifts(alg, &xr, &yr)? != base {
                        return Ok(Some(json!({ "x": wd(alg, x), "y": wd(alg, y) })));
                    }
                }
            }
            Ok(None)
        },
    )?;
    if lifts.status != Status::Pass {
        return Ok(lifts);
    }
    let mut classes: Vec<Word> = words
        .iter()
        .map(|w| cyclic_canonical(w).map(|c| c.word().clone()))
        .collect::<Result<_>>()?;
    classes.sort();
    classes.dedup();
    let polys: Vec<_> = classes.iter().map(necklace).collect::<Result<_>>()?;
    let br = |f: &_, g: &_| necklace_poisson(alg, f, g);
    let triples = all_triples(&polys);
    sweep(triples, |&(a, b, c)| {
        if br(a, b)? != -&br(b, a)? {
            return Ok(Some(json!({ "antisymmetry": [format!("{a:?}"), format!("{b:?}")] })));
        }
        let j = &(&br(a, &br(b, c)?)? + &br(b, &br(c, a)?)?) + &br(c, &br(a, b)?)?;
        Ok((!j.is_zero()).then(|| json!({ "jacobi": [format!("{a:?}"), format!("{b:?}"), format!("{c:?}")] })))
    })
}

fn degeneration(r: &mut Runner) -> Result<()> {
    let cfg = r.cfg;
    for alg in r.omegas(&[C, C2])? {
        let name = alg.name().to_string();
        let len = cfg.max_len.min(2);
        for d in 1..=cfg.d {
            let ctx = YangianContext::new(alg.clone(), d);
            for lx in 1..=len {
                for ly in 1..=len {
                    let n = cfg.n_min.max(d + lx + ly);
                    let config = [
                        ("omega", name.clone()),
                        ("d", d.to_string()),
                        ("len_x", lx.to_string()),
                        ("len_y", ly.to_string()),
                        ("N", n.to_string()),
                    ];
                    r.record("degeneration", &config, || {
                        if n + 1 > cfg.n_cap {
                            return Ok(Outcome::skipped(format!("needs N = {} above cap {}", n + 1, cfg.n_cap)));
                        }
                        let mut cases = Vec::new();
                        for x in all_words(alg.dim(), lx) {
                            for y in all_words(alg.dim(), ly) {
                                for idx in index_tuples(d) {
                                    for s in &cfg.s_values {
                                        cases.push((idx, x.clone(), y.clone(), s.clone()));
                                    }
                                }
                            }
                        }
                        sweep(cases, |(idx, x, y, s)| {
                            let v = degeneration_check(&ctx, *idx, x, y, s, n)?;
                            verdict_witness(v, || {
                                json!({ "ijkl": [idx.0, idx.1, idx.2, idx.3], "x": wd(&alg, x), "y": wd(&alg, y), "s": s.to_string() })
                            })
                        })
                    });
                }
            }
            r.record(
                "gl-current-display",
                &[("omega", name.clone()), ("d", d.to_string())],
                || current_display(&alg, d, len + 1),
            );
            r.record(
                "gl-current-lie",
                &[("omega", name.clone()), ("d", d.to_string())],
                || current_lie(&alg, d, len + 1, &mut r_rng(cfg, 41 + d as u64)),
            );
        }
    }
    Ok(())
}

/// `[E_ij⊗x, E_kl⊗y]` against `(XY)⊗(x⊙y) − (YX)⊗(y⊙x)` computed with
/// explicit `d × d` matrices.
fn current_display(alg: &AlgebraSpec, d: usize, max_len: usize) -> Result<Outcome> {
    let unit = |i: usize, j: usize| -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; d]; d];
        m[i - 1][j - 1] = 1;
        m
    };
    let matmul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    };
    let tensor = |m: &Vec<Vec<i64>>, t: &AlElement| -> GlCurrent {
        let mut out = GlCurrent::new();
        for (i, row) in m.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c != 0 {
                    for (w, v) in t {
                        out.add_term((i + 1, j + 1, w.clone()), v * &Scalar::from(c));
                    }
                }
            }
        }
        out
    };
    let words = words_up_to(alg.dim(), max_len);
    let mut cases = Vec::new();
    for (i, j, k, l) in index_tuples(d) {
        for x in &words {
            for y in &words {
                cases.push((i, j, k, l, x, y));
            }
        }
    }
    sweep(cases, |&(i, j, k, l, x, y)| {
        let a = GlCurrent::basis((i, j, x.clone()));
        let b = GlCurrent::basis((k, l, y.clone()));
        let got = gl_current_bracket(alg, d, &a, &b)?;
        let (xm, ym) = (unit(i, j), unit(k, l));
        let xy = odot_elem(alg, &AlElement::basis(x.clone()), &AlElement::basis(y.clone()))?;
        let yx = odot_elem(alg, &AlElement::basis(y.clone()), &AlElement::basis(x.clone()))?;
        let expect = &tensor(&matmul(&xm, &ym), &xy) - &tensor(&matmul(&ym, &xm), &yx);
        Ok((got != expect).then(|| json!({ "ijkl": [i, j, k, l], "x": wd(alg, x), "y": wd(alg, y) })))
    })
}

/// Antisymmetry and Jacobi of the current bracket on random generator
/// triples.
fn current_lie(alg: &AlgebraSpec, d: usize, max_len: usize, rng: &mut ChaCha8Rng) -> Result<Outcome> {
    let gens: Vec<GlCurrent> = (1..=d)
        .flat_map(|i| (1..=d).map(move |j| (i, j)))
        .flat_map(|(i, j)| {
            words_up_to(alg.dim(), max_len)
                .into_iter()
                .map(move |w| GlCurrent::basis((i, j, w)))
        })
        .collect();
    let br = |a: &GlCurrent, b: &GlCurrent| gl_current_bracket(alg, d, a, b);
    let triples: Vec<_> = (0..300)
        .map(|_| {
            (
                gens.choose(rng).expect("nonempty").clone(),
                gens.choose(rng).expect("nonempty").clone(),
                gens.choose(rng).expect("nonempty").clone(),
            )
        })
        .collect();
    sweep(triples, |(a, b, c)| {
        if br(a, b)? != -&br(b, a)? {
            return Ok(Some(json!({ "antisymmetry": [format!("{a:?}"), format!("{b:?}")] })));
        }
        let j = &(&br(a, &br(b, c)?)? + &br(b, &br(c, a)?)?) + &br(c, &br(a, b)?)?;
        Ok((!j.is_zero()).then(|| json!({ "jacobi": [format!("{a:?}"), format!("{b:?}"), format!("{c:?}")] })))
    })
}

fn current(r: &mut Runner) -> Result<()> {
    let cfg = r.cfg;
    r.record(
        "graded-dim",
        &[("max_d", "3".into()), ("max_L", "3".into()), ("max_grade", "3".into())],
        || {
            let cases = (1..=3usize).flat_map(|d| (1..=3usize).flat_map(move |l| (0..=3usize).map(move |n| (d, l, n))));
            sweep(cases, |&(d, l, n)| {
                let formula = (d * d) as u128 * (l as u128).pow(n as u32 + 1);
                let counted = graded_basis(l, d, n).len() as u128;
                let got = graded_dim(l, d, n).unwrap_or(0);
                Ok((got != formula || counted != formula)
                    .then(|| json!({ "d": d, "L": l, "n": n, "got": got.to_string(), "counted": counted.to_string() })))
            })
        },
    );
    for l in 1..=3 {
        r.record(
            "path-algebra",
            &[("L", l.to_string()), ("max_grade", "3".into())],
            || {
                Ok(if path_algebra_iso_check(l, 3)? {
                    Outcome::pass(1)
                } else {
                    Outcome::fail(1, json!({ "L": l }))
                })
            },
        );
    }
    for alg in r.omegas(&[C, C2, NULL2, MAT2])? {
        let name = alg.name().to_string();
        let config = [("omega", name.clone())];
        r.record("odot-associative", &config, || {
            let mut rng = r_rng(cfg, 57);
            let max_grade = if alg.dim() >= 4 { 2 } else { 3 };
            let pool: Vec<Word> = (1..=max_grade + 1).flat_map(|m| all_words(alg.dim(), m)).collect();
            let triples: Vec<_> = (0..200)
                .map(|_| {
                    (0..3)
                        .map(|_| pool.choose(&mut rng).expect("nonempty").clone())
                        .collect::<Vec<_>>()
                })
                .collect();
            sweep(triples, |t| {
                let [a, b, c] = [&t[0], &t[1], &t[2]].map(|w| AlElement::basis(w.clone()));
                let left = odot_elem(&alg, &odot_elem(&alg, &a, &b)?, &c)?;
                let right = odot_elem(&alg, &a, &odot_elem(&alg, &b, &c)?)?;
                let graded = left
                    .keys()
                    .all(|w| w.len() + 2 == t.iter().map(|x| x.len()).sum::<usize>());
                Ok((left != right || !graded).then(|| json!(t.iter().map(|w| wd(&alg, w)).collect::<Vec<_>>())))
            })
        });
        r.record("grade-zero", &config, || {
            Ok(if grade_zero_matches(&alg)? {
                Outcome::pass(1)
            } else {
                Outcome::fail(1, json!({ "omega": name }))
            })
        });
        r.record("unit", &config, || {
            let omega_unit = alg.detect_unit().is_some();
            let current_unit = has_unit(&alg, 2)?;
            let details = json!({ "omega_unit": omega_unit, "current_unit": current_unit });
            Ok(if omega_unit == current_unit {
                Outcome::pass(1).with_details(details)
            } else {
                Outcome::fail(1, details)
            })
        });
        r.record("noncommutative", &config, || {
            let expect = !(alg.is_null() || alg.dim() == 1);
            let witness = noncommutativity_witness(&alg, 1)?;
            let details = json!({ "expected_noncommutative": expect, "witness": witness.as_ref().map(|(x, y)| [wd(&alg, x), wd(&alg, y)]) });
            Ok(if witness.is_some() == expect { Outcome::pass(1).with_details(details) } else { Outcome::fail(1, details) })
        });
        if alg.detect_unit().is_some() {
            let max_grade = if alg.dim() == 1 { 3 } else { 2 };
            r.record(
                "bimodule-iso",
                &[("omega", name.clone()), ("max_grade", max_grade.to_string())],
                || {
                    let grades = bimodule_iso_check(&alg, max_grade)?;
                    let details = serde_json::to_value(&grades).expect("serializable");
                    Ok(if grades.iter().all(|g| g.passed()) {
                        Outcome::pass(grades.len()).with_details(details)
                    } else {
                        Outcome::fail(grades.len(), details)
                    })
                },
            );
        }
    }
    Ok(())
}
