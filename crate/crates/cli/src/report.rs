//! The serializable result of one command, and its text rendering.
//!
//! Element sets are arrays of canonical names sorted by element index.
//! `chosen` keeps choice order instead.

use std::fmt::Write as _;

use groupkit::algorithms::{AlgoTrace, Algorithm, Recording};
use groupkit::products::MidTag;
use groupkit::Group;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub command: String,
    pub group: Option<GroupSummary>,
    pub inputs: Option<Inputs>,
    pub traces: Vec<TraceReport>,
    pub facts: Facts,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSummary {
    pub kind: String,
    pub order: usize,
}

impl GroupSummary {
    pub fn of(g: &Group) -> Self {
        GroupSummary {
            kind: g.kind().to_string(),
            order: g.order(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Inputs {
    pub h: Option<Vec<String>>,
    pub k: Option<Vec<String>>,
    pub g0: Option<String>,
    pub policy: Option<String>,
    pub recording: Option<Recording>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceReport {
    pub algorithm: Algorithm,
    pub chosen: Vec<String>,
    pub chain_start: i64,
    pub chain_sizes: Vec<usize>,
    pub chains: Option<Vec<Vec<String>>>,
    pub n_steps: usize,
    pub output: Vec<String>,
}

impl TraceReport {
    pub fn of(g: &Group, t: &AlgoTrace) -> Self {
        TraceReport {
            algorithm: t.algorithm,
            chosen: t.chosen.iter().map(|&x| g.name(x).to_string()).collect(),
            chain_start: t.chain_start as i64,
            chain_sizes: t.chain_sizes.clone(),
            chains: t
                .chains
                .as_ref()
                .map(|cs| cs.iter().map(|c| g.names_of(c)).collect()),
            n_steps: t.n_steps,
            output: g.names_of(&t.output),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Facts {
    /// `[G:H]`, the size of a right transversal.
    pub index: Option<usize>,
    /// Number of `(H, K)` double cosets.
    pub double_coset_count: Option<usize>,
    /// Whether `HXK = G` for the sub-factor output `X`.
    pub covers_group: Option<bool>,
    pub mid: Option<MidReport>,
    pub enumeration: Option<EnumReport>,
    pub parsed: Option<ParsedReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MidReport {
    pub method: String,
    pub tag: MidTag,
    pub size: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumReport {
    pub what: String,
    pub via: String,
    pub count: usize,
    pub algorithm_count: Option<usize>,
    pub oracle_count: Option<usize>,
    pub agree: Option<bool>,
    pub sets: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParsedReport {
    pub elements: Vec<String>,
    pub duplicates: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub section: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

pub fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            group: None,
            inputs: None,
            traces: Vec::new(),
            facts: Facts::default(),
            checks: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Human-readable form. Leaves out `timing_ms` so output is reproducible.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(g) = &self.group {
            let _ = writeln!(out, "group: {} (order {})", g.kind, g.order);
        }
        if let Some(i) = &self.inputs {
            if let Some(h) = &i.h {
                let _ = writeln!(out, "H = {}", braces(h));
            }
            if let Some(k) = &i.k {
                let _ = writeln!(out, "K = {}", braces(k));
            }
            if let Some(g0) = &i.g0 {
                let _ = writeln!(out, "g0 = {g0}");
            }
            if let Some(p) = &i.policy {
                let _ = writeln!(out, "policy = {p}");
            }
        }
        for t in &self.traces {
            render_trace(&mut out, t);
        }
        let f = &self.facts;
        if let Some(p) = &f.parsed {
            let _ = writeln!(out, "subset = {} ({} elements)", braces(&p.elements), p.elements.len());
        }
        if let Some(n) = f.index {
            let _ = writeln!(out, "index [G:H] = {n}");
        }
        if let Some(n) = f.double_coset_count {
            let _ = writeln!(out, "double cosets = {n}");
        }
        if let Some(c) = f.covers_group {
            let _ = writeln!(out, "HXK = G: {}", if c { "yes" } else { "no" });
        }
        if let Some(m) = &f.mid {
            let _ = writeln!(
                out,
                "Mid(H, K) = {} ({} elements, {:?}, method {})",
                braces(&m.elements),
                m.size,
                m.tag,
                m.method
            );
        }
        if let Some(e) = &f.enumeration {
            let _ = writeln!(out, "{} via {}: {}", e.what, e.via, e.count);
            if let (Some(a), Some(o)) = (e.algorithm_count, e.oracle_count) {
                let _ = writeln!(out, "  algorithm {a}, oracle {o}");
            }
            if let Some(sets) = &e.sets {
                for s in sets {
                    let _ = writeln!(out, "  {}", braces(s));
                }
            }
        }
        let mut last_section = None;
        for c in &self.checks {
            if last_section != Some(&c.section) {
                let _ = writeln!(out, "== {}", c.section);
                last_section = Some(&c.section);
            }
            let _ = writeln!(out, "[{}] {}: {}", c.status.label(), c.name, c.detail);
        }
        if !self.checks.is_empty() {
            let count = |s| self.checks.iter().filter(|c| c.status == s).count();
            let _ = writeln!(
                out,
                "summary: {} pass, {} warn, {} fail",
                count(Status::Pass),
                count(Status::Warn),
                count(Status::Fail)
            );
        }
        out
    }
}

fn render_trace(out: &mut String, t: &TraceReport) {
    let label = match t.algorithm {
        Algorithm::Rta => "RTA",
        Algorithm::Mta => "MTA",
        Algorithm::Msfa => "MSFA",
        Algorithm::Extension => "extension",
    };
    let _ = writeln!(out, "{label}: chosen {}", t.chosen.join(", "));
    for (j, size) in t.chain_sizes.iter().enumerate() {
        let i = t.chain_start + j as i64;
        match t.chains.as_ref().map(|cs| &cs[j]) {
            Some(set) => {
                let _ = writeln!(out, "  C({i}) = {} ({size})", braces(set));
            }
            None => {
                let _ = writeln!(out, "  |C({i})| = {size}");
            }
        }
    }
    let _ = writeln!(out, "  N = {}", t.n_steps);
    let _ = writeln!(out, "  output = {}", braces(&t.output));
}
