use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use groupkit::algorithms::{
    self, ChoicePolicy, EnumConfig, Recording, RunConfig, DEFAULT_ENUM_LIMIT,
};
use groupkit::products::{self, MidTag};
use groupkit::{oracle, word, BuildOptions, ElementSet, Error, Group, GroupSpec};

use crate::args::*;
use crate::report::*;
use crate::verify;

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;
pub const EXIT_LIMIT: i32 = 5;

pub const ENV_MAX_ORDER: &str = "GROUPKIT_MAX_ORDER";
pub const ENV_ENUM_LIMIT: &str = "GROUPKIT_ENUM_LIMIT";

/// A failure that ends the command before a report exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    /// Attributes a library error to the flag whose value caused it.
    pub fn at(flag: &str, e: Error) -> Self {
        let code = match e.root() {
            Error::MidEmpty => EXIT_INAPPLICABLE,
            Error::SizeLimitExceeded { .. } | Error::EnumerationLimitExceeded { .. } => EXIT_LIMIT,
            Error::TraceMismatch => EXIT_INVARIANT,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: format!("{flag}: {e}"),
        }
    }

    pub fn usage(flag: &str, message: impl fmt::Display) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: format!("{flag}: {message}"),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

/// A finished command. `code` is nonzero when the report records a
/// failed check.
#[derive(Debug)]
pub struct Outcome {
    pub report: RunReport,
    pub format: Format,
    pub code: i32,
    pub warnings: Vec<String>,
}

impl Outcome {
    pub fn render(&self) -> String {
        match self.format {
            Format::Text => self.report.to_text(),
            Format::Json => self.report.to_json() + "\n",
        }
    }
}

type CmdResult = Result<Outcome, CliError>;

pub fn run(cli: Cli) -> CmdResult {
    let start = Instant::now();
    let mut outcome = match cli.command {
        Command::Rta(a) => cmd_rta(&a),
        Command::Mta(a) => cmd_mta(&a),
        Command::Msfa(a) => cmd_msfa(&a),
        Command::Mid(a) => cmd_mid(&a),
        Command::Enumerate(a) => cmd_enumerate(&a),
        Command::VerifyPaper(a) => cmd_verify_paper(&a),
        Command::Parse(a) => cmd_parse(&a),
    }?;
    outcome.report.timing_ms = start.elapsed().as_millis() as u64;
    Ok(outcome)
}

fn env_usize(name: &str) -> Result<Option<usize>, CliError> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::usage(name, format!("expected a positive integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

pub fn load_group(text: &str) -> Result<Group, CliError> {
    let spec: GroupSpec = match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::usage("--group", format!("cannot read {path}: {e}")))?
            .parse(),
        None => text.parse(),
    }
    .map_err(|e| CliError::at("--group", e))?;
    let mut opts = BuildOptions::default();
    if let Some(m) = env_usize(ENV_MAX_ORDER)? {
        opts.max_order = m;
    }
    groupkit::build_group_with(&spec, &opts).map_err(|e| CliError::at("--group", e))
}

fn subset(g: &Group, flag: &str, text: &str, warnings: &mut Vec<String>) -> Result<ElementSet, CliError> {
    let parsed = word::parse_subset_verbose(g, text).map_err(|e| CliError::at(flag, e))?;
    for d in parsed.duplicates {
        warnings.push(format!("{flag}: duplicate element {d:?} ignored"));
    }
    Ok(parsed.set)
}

fn subgroup(g: &Group, flag: &str, text: &str, warnings: &mut Vec<String>) -> Result<ElementSet, CliError> {
    let s = subset(g, flag, text, warnings)?;
    let ok = g.is_subgroup(&s).map_err(|e| CliError::at(flag, e))?;
    if !ok {
        return Err(CliError::usage(flag, format!("{} is not a subgroup", g.format_set(&s))));
    }
    Ok(s)
}

pub fn parse_policy(g: &Group, text: &str) -> Result<ChoicePolicy, CliError> {
    let text = text.trim();
    if text == "smallest" {
        return Ok(ChoicePolicy::Smallest);
    }
    if let Some(seed) = text.strip_prefix("random:") {
        return seed
            .trim()
            .parse()
            .map(ChoicePolicy::Random)
            .map_err(|_| CliError::usage("--policy", format!("bad seed {seed:?}")));
    }
    if let Some(script) = text.strip_prefix("script:") {
        return word::parse_sequence(g, script)
            .map(ChoicePolicy::Scripted)
            .map_err(|e| CliError::at("--policy", e));
    }
    Err(CliError::usage(
        "--policy",
        format!("expected smallest, random:<seed> or script:<e1,e2,...>, got {text:?}"),
    ))
}

fn policy_label(g: &Group, p: &ChoicePolicy) -> String {
    match p {
        ChoicePolicy::Smallest => "smallest".into(),
        ChoicePolicy::Random(seed) => format!("random:{seed}"),
        ChoicePolicy::Scripted(xs) => {
            let names: Vec<&str> = xs.iter().map(|&x| g.name(x)).collect();
            format!("script:{}", names.join(","))
        }
    }
}

struct Prepared {
    g: Group,
    h: ElementSet,
    g0: Option<usize>,
    cfg: RunConfig,
    inputs: Inputs,
    warnings: Vec<String>,
}

fn prepare(c: &RunCommon) -> Result<Prepared, CliError> {
    let g = load_group(&c.group.group)?;
    let mut warnings = Vec::new();
    let h = subgroup(&g, "-H", &c.h, &mut warnings)?;
    let g0 = c
        .g0
        .as_deref()
        .map(|t| word::parse_element(&g, t).map_err(|e| CliError::at("--g0", e)))
        .transpose()?;
    let policy = parse_policy(&g, &c.policy)?;
    let recording = match c.trace {
        TraceMode::Sizes => Recording::Sizes,
        TraceMode::Full => Recording::Full,
    };
    let inputs = Inputs {
        h: Some(g.names_of(&h)),
        k: None,
        g0: None,
        policy: Some(policy_label(&g, &policy)),
        recording: Some(recording),
    };
    Ok(Prepared {
        g,
        h,
        g0,
        cfg: RunConfig { policy, recording },
        inputs,
        warnings,
    })
}

fn finish(p: Prepared, mut report: RunReport, format: Format) -> Outcome {
    report.group = Some(GroupSummary::of(&p.g));
    report.inputs = Some(p.inputs);
    Outcome {
        report,
        format,
        code: 0,
        warnings: p.warnings,
    }
}

pub fn cmd_rta(a: &RtaArgs) -> CmdResult {
    let mut p = prepare(&a.common)?;
    let g0 = p.g0.unwrap_or(p.g.identity());
    p.inputs.g0 = Some(p.g.name(g0).to_string());
    let t = algorithms::rta(&p.g, &p.h, g0, &p.cfg).map_err(|e| CliError::at("--policy", e))?;
    let mut report = RunReport::new("rta");
    report.facts.index = Some(t.output.len());
    report.traces.push(TraceReport::of(&p.g, &t));
    Ok(finish(p, report, a.common.format))
}

pub fn cmd_mta(a: &MtaArgs) -> CmdResult {
    let mut p = prepare(&a.common)?;
    let k = subgroup(&p.g, "-K", &a.k, &mut p.warnings)?;
    let g0 = p.g0.unwrap_or(p.g.identity());
    p.inputs.k = Some(p.g.names_of(&k));
    p.inputs.g0 = Some(p.g.name(g0).to_string());
    let t = algorithms::mta(&p.g, &p.h, &k, g0, &p.cfg).map_err(|e| CliError::at("--policy", e))?;
    let mut report = RunReport::new("mta");
    report.facts.double_coset_count = Some(t.output.len());
    report.traces.push(TraceReport::of(&p.g, &t));
    Ok(finish(p, report, a.common.format))
}

pub fn cmd_msfa(a: &MsfaArgs) -> CmdResult {
    let mut p = prepare(&a.common)?;
    let k = subgroup(&p.g, "-K", &a.k, &mut p.warnings)?;
    p.inputs.k = Some(p.g.names_of(&k));
    let case = products::classify_mid(&p.g, &p.h, &k).map_err(|e| CliError::at("-K", e))?;
    if case.tag == MidTag::Empty {
        return Err(CliError::at("-H/-K", Error::MidEmpty));
    }
    // Default start: the identity when it lies in Mid, else the least element.
    let g0 = match p.g0 {
        Some(x) => x,
        None if case.mid_set.contains(p.g.identity()) => p.g.identity(),
        None => case.mid_set.first().expect("Mid is nonempty"),
    };
    p.inputs.g0 = Some(p.g.name(g0).to_string());
    let t = algorithms::msfa(&p.g, &p.h, &k, g0, &p.cfg).map_err(|e| CliError::at("--g0", e))?;
    let covered = products::triple_product(&p.g, &p.h, &t.output, &k)
        .map_err(|e| CliError::at("-K", e))?
        .is_full();

    let mut report = RunReport::new("msfa");
    report.facts.covers_group = Some(covered);
    report.facts.mid = Some(mid_report(&p.g, "conjugacy", &case.mid_set));
    report.traces.push(TraceReport::of(&p.g, &t));
    if covered {
        report.facts.double_coset_count = Some(t.output.len());
    } else if a.extend {
        let ext = algorithms::extend_to_middle_transversal(&p.g, &p.h, &k, &t, &p.cfg)
            .map_err(|e| CliError::at("--policy", e))?;
        report.facts.double_coset_count = Some(ext.output.len());
        report.traces.push(TraceReport::of(&p.g, &ext));
    }
    Ok(finish(p, report, a.common.format))
}

fn tag_of(s: &ElementSet) -> MidTag {
    if s.is_empty() {
        MidTag::Empty
    } else if s.is_full() {
        MidTag::Full
    } else {
        MidTag::ProperNonempty
    }
}

fn mid_report(g: &Group, method: &str, s: &ElementSet) -> MidReport {
    MidReport {
        method: method.to_string(),
        tag: tag_of(s),
        size: s.len(),
        elements: g.names_of(s),
    }
}

pub fn cmd_mid(a: &MidArgs) -> CmdResult {
    let g = load_group(&a.group.group)?;
    let mut warnings = Vec::new();
    let needs_subgroups = a.method != MidMethod::Definition;
    let (h, k) = if needs_subgroups {
        (
            subgroup(&g, "-H", &a.h, &mut warnings)?,
            subgroup(&g, "-K", &a.k, &mut warnings)?,
        )
    } else {
        (
            subset(&g, "-H", &a.h, &mut warnings)?,
            subset(&g, "-K", &a.k, &mut warnings)?,
        )
    };
    let by_definition = || products::mid_director(&g, &h, &k).map_err(|e| CliError::at("-H", e));
    let by_conjugacy = || products::mid_director_subgroups(&g, &h, &k).map_err(|e| CliError::at("-H", e));

    let mut report = RunReport::new("mid");
    let mut code = 0;
    let mid = match a.method {
        MidMethod::Definition => mid_report(&g, "definition", &by_definition()?),
        MidMethod::Conjugacy => mid_report(&g, "conjugacy", &by_conjugacy()?),
        MidMethod::Both => {
            let d = by_definition()?;
            let c = by_conjugacy()?;
            let agree = d == c;
            if !agree {
                code = EXIT_INVARIANT;
            }
            report.checks.push(Check {
                section: "mid".into(),
                name: "definition = conjugacy".into(),
                status: if agree { Status::Pass } else { Status::Fail },
                detail: format!("definition {}; conjugacy {}", g.format_set(&d), g.format_set(&c)),
            });
            mid_report(&g, "both", &d)
        }
    };
    report.facts.mid = Some(mid);
    report.group = Some(GroupSummary::of(&g));
    report.inputs = Some(Inputs {
        h: Some(g.names_of(&h)),
        k: Some(g.names_of(&k)),
        ..Inputs::default()
    });
    Ok(Outcome {
        report,
        format: a.format,
        code,
        warnings,
    })
}

fn what_label(w: What) -> &'static str {
    match w {
        What::RightTransversals => "right-transversals",
        What::MiddleTransversals => "middle-transversals",
        What::MiddleSubfactors => "middle-subfactors",
    }
}

fn via_label(v: Via) -> &'static str {
    match v {
        Via::Algorithm => "algorithm",
        Via::Oracle => "oracle",
        Via::Both => "both",
    }
}

pub fn cmd_enumerate(a: &EnumerateArgs) -> CmdResult {
    let g = load_group(&a.group.group)?;
    let mut warnings = Vec::new();
    let h = subgroup(&g, "-H", &a.h, &mut warnings)?;
    let k = match (a.what, &a.k) {
        (What::RightTransversals, None) => None,
        (What::RightTransversals, Some(_)) => {
            return Err(CliError::usage("-K", "not used for right-transversals"))
        }
        (_, Some(t)) => Some(subgroup(&g, "-K", t, &mut warnings)?),
        (_, None) => return Err(CliError::usage("-K", format!("required for {}", what_label(a.what)))),
    };
    let limit = match a.limit {
        Some(l) => l,
        None => env_usize(ENV_ENUM_LIMIT)?.unwrap_or(DEFAULT_ENUM_LIMIT),
    };
    if a.jobs == 0 {
        return Err(CliError::usage("--jobs", "must be at least 1"));
    }
    let cfg = EnumConfig {
        limit,
        jobs: a.jobs,
        upto_symmetry: a.upto_symmetry,
    };
    if a.what == What::MiddleSubfactors {
        let k = k.as_ref().expect("checked above");
        let mid = products::mid_director_subgroups(&g, &h, k).map_err(|e| CliError::at("-K", e))?;
        if mid.is_empty() {
            return Err(CliError::at("-H/-K", Error::MidEmpty));
        }
    }

    let algorithm_side = || -> Result<BTreeSet<ElementSet>, CliError> {
        let r = match (a.what, &k) {
            (What::RightTransversals, _) => algorithms::enumerate_all_right_transversals(&g, &h, &cfg),
            (What::MiddleTransversals, Some(k)) => algorithms::enumerate_all_middle_transversals(&g, &h, k, &cfg),
            (What::MiddleSubfactors, Some(k)) => algorithms::enumerate_all_middle_subfactors(&g, &h, k, &cfg),
            _ => unreachable!(),
        };
        let mut sets = r.map_err(|e| CliError::at("--limit", e))?;
        if a.inject_fault {
            sets.pop_first();
        }
        Ok(sets)
    };
    let oracle_side = || -> Result<BTreeSet<ElementSet>, CliError> {
        let r = match (a.what, &k) {
            (What::RightTransversals, _) => oracle::all_right_transversals(&g, &h, limit),
            (What::MiddleTransversals, Some(k)) => oracle::all_middle_transversals(&g, &h, k, limit),
            (What::MiddleSubfactors, Some(k)) => oracle::all_maximal_direct_triples(&g, &h, k, limit),
            _ => unreachable!(),
        };
        r.map_err(|e| CliError::at("--limit", e))
    };

    let mut report = RunReport::new("enumerate");
    let mut code = 0;
    let (listed, algorithm_count, oracle_count, agree) = match a.via {
        Via::Algorithm => {
            let s = algorithm_side()?;
            let n = s.len();
            (s, Some(n), None, None)
        }
        Via::Oracle => {
            let s = oracle_side()?;
            let n = s.len();
            (s, None, Some(n), None)
        }
        Via::Both => {
            let alg = algorithm_side()?;
            let ora = oracle_side()?;
            let agree = alg == ora;
            let detail = if agree {
                format!("{} sets on both sides", alg.len())
            } else {
                let missing: Vec<String> = ora.difference(&alg).take(3).map(|s| g.format_set(s)).collect();
                let extra: Vec<String> = alg.difference(&ora).take(3).map(|s| g.format_set(s)).collect();
                code = EXIT_INVARIANT;
                format!(
                    "algorithm {} vs oracle {}; missing from algorithm: [{}]; extra in algorithm: [{}]",
                    alg.len(),
                    ora.len(),
                    missing.join(" "),
                    extra.join(" ")
                )
            };
            report.checks.push(Check {
                section: "enumerate".into(),
                name: format!("{} algorithm = oracle", what_label(a.what)),
                status: if agree { Status::Pass } else { Status::Fail },
                detail,
            });
            let (na, no) = (alg.len(), ora.len());
            (alg, Some(na), Some(no), Some(agree))
        }
    };
    report.facts.enumeration = Some(EnumReport {
        what: what_label(a.what).into(),
        via: via_label(a.via).into(),
        count: listed.len(),
        algorithm_count,
        oracle_count,
        agree,
        sets: a.list.then(|| listed.iter().map(|s| g.names_of(s)).collect()),
    });
    report.group = Some(GroupSummary::of(&g));
    report.inputs = Some(Inputs {
        h: Some(g.names_of(&h)),
        k: k.as_ref().map(|k| g.names_of(k)),
        ..Inputs::default()
    });
    Ok(Outcome {
        report,
        format: a.format,
        code,
        warnings,
    })
}

pub fn cmd_verify_paper(a: &VerifyArgs) -> CmdResult {
    let sections = match &a.example {
        None => verify::Section::ALL.to_vec(),
        Some(name) => vec![verify::Section::from_name(name).ok_or_else(|| {
            CliError::usage(
                "--example",
                format!("unknown example {name:?}; expected one of {}", verify::Section::names().join(", ")),
            )
        })?],
    };
    let report = verify::run(&sections);
    let code = if report.has_failures() { EXIT_INVARIANT } else { 0 };
    Ok(Outcome {
        report,
        format: a.format,
        code,
        warnings: Vec::new(),
    })
}

pub fn cmd_parse(a: &ParseArgs) -> CmdResult {
    let g = load_group(&a.group.group)?;
    let parsed = word::parse_subset_verbose(&g, &a.subset).map_err(|e| CliError::at("--subset", e))?;
    let warnings = parsed
        .duplicates
        .iter()
        .map(|d| format!("--subset: duplicate element {d:?} ignored"))
        .collect();
    let mut report = RunReport::new("parse");
    report.group = Some(GroupSummary::of(&g));
    report.facts.parsed = Some(ParsedReport {
        elements: g.names_of(&parsed.set),
        duplicates: parsed.duplicates,
    });
    Ok(Outcome {
        report,
        format: a.format,
        code: 0,
        warnings,
    })
}
