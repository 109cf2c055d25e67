//! Bounded exhaustive verification of the statements about p-domination and
//! p-reinforcement, with machine-readable reports.
//!
//! A suite walks every tree up to a given order (or a seeded sample of
//! graphs), applies one predicate per instance, and reports the failures
//! sorted by canonical code, so equal inputs give equal reports apart from
//! the timing field.

mod figure1;
mod structural;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_code;
use crate::deficiency::{eta_exhaustive, mu_graph_with, EtaSearch};
use crate::domination::{
    all_minimum_p_dominating_sets_with, check_order, forced_vertices, gamma_p_exhaustive,
    gamma_p_with, private_neighbors,
};
use crate::error::{Error, Result};
use crate::family::{enumerate_members, recognize, recognize_exhaustive_with};
use crate::generate::{enumerate_trees, random_tree};
use crate::graph::Graph;
use crate::io::to_edge_list;
use crate::reinforcement::{r_p_by_definition_with, r_p_by_eta_with, r_p_with};
use crate::search::{deficiency, dominates, full_mask, Limits, MASK_BITS};

pub use figure1::{
    figure1_fixture_check, figure1_set, figure1_tree, figure1_values, Figure1Values,
    FIGURE1_EDGE_LIST, FIGURE1_SET, FIGURE1_X, FIGURE1_X1, FIGURE1_X2,
};
pub use structural::{
    structural_property_checks, structural_property_checks_with, CheckStatus, PropertyCheck,
    SetHint,
};

/// Every claim id understood by [`run_theorem_suite`].
pub const CLAIMS: &[&str] = &[
    "thm-1.2",
    "thm-2.2",
    "thm-2.2-graphs",
    "thm-2.4",
    "thm-3.2",
    "thm-3.3",
    "lem-3.4",
    "thm-3.5",
    "thm-4.4",
    "obs-1.2",
    "obs-2.1",
    "eta-monotone",
    "figure-1",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// The offending instance in edge-list format.
    pub tree: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub p: usize,
    pub n_max: usize,
    pub checked: usize,
    pub violations: Vec<Violation>,
    /// Trees with r_p = p + 1 per order, for suites that compute r_p.
    pub census: BTreeMap<usize, usize>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The JSON with `elapsed_ms` zeroed, identical across runs.
    pub fn to_json_without_timing(&self) -> String {
        VerificationReport {
            elapsed_ms: 0,
            ..self.clone()
        }
        .to_json()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Worker threads.
    pub jobs: usize,
    /// Seed for sampled suites.
    pub seed: u64,
    /// Number of graphs a sampled suite must check.
    pub samples: usize,
    /// Largest order at which the structural recognizer is also compared
    /// with the exhaustive one.
    pub exhaustive_cross_max: usize,
    pub limits: Limits,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            jobs: 1,
            seed: 0,
            samples: 200,
            exhaustive_cross_max: 12,
            limits: Limits::default(),
        }
    }
}

pub fn run_theorem_suite(
    claim: &str,
    p: usize,
    n_max: usize,
    jobs: usize,
) -> Result<VerificationReport> {
    run_theorem_suite_with(
        claim,
        p,
        n_max,
        &SuiteOptions {
            jobs,
            ..Default::default()
        },
    )
}

/// What one instance contributed.
#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    /// `Some(r_p == p + 1)` when the predicate computed r_p.
    extremal: Option<bool>,
}

impl Outcome {
    fn fail(&mut self, detail: impl Into<String>) {
        self.failures.push(detail.into());
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }
}

type Predicate = fn(&Graph, usize, &SuiteOptions) -> Result<Outcome>;

fn predicate(claim: &str) -> Option<Predicate> {
    Some(match claim {
        "thm-1.2" => thm_1_2,
        "thm-2.2" => thm_2_2,
        "thm-2.4" => thm_2_4,
        "thm-3.2" => thm_3_2,
        "thm-3.3" => |t, p, o| structural_claim(t, p, o, "thm-3.3"),
        "lem-3.4" => |t, p, o| structural_claim(t, p, o, "lem-3.4"),
        "thm-3.5" => |t, p, o| structural_claim(t, p, o, "thm-3.5"),
        "thm-4.4" => thm_4_4,
        "obs-1.2" => obs_1_2,
        "obs-2.1" => obs_2_1,
        "eta-monotone" => eta_monotone,
        _ => return None,
    })
}

fn min_p(claim: &str) -> usize {
    match claim {
        "thm-4.4" => 3,
        "thm-3.2" | "thm-3.3" | "lem-3.4" | "thm-3.5" => 2,
        _ => 1,
    }
}

/// Largest order the claim's predicate accepts.
fn order_limit(claim: &str, limits: &Limits) -> usize {
    let cap = |l: usize| l.min(MASK_BITS);
    match claim {
        "thm-2.2" | "thm-2.2-graphs" => cap(limits.definition),
        "thm-2.4" | "thm-3.2" => cap(limits.all_min_sets),
        "obs-1.2" | "obs-2.1" | "eta-monotone" => cap(limits.structural),
        "thm-4.4" => cap(limits.exhaustive_recognize),
        _ => usize::MAX,
    }
}

pub fn run_theorem_suite_with(
    claim: &str,
    p: usize,
    n_max: usize,
    opts: &SuiteOptions,
) -> Result<VerificationReport> {
    if claim == "figure-1" {
        return figure1_fixture_check();
    }
    if !CLAIMS.contains(&claim) {
        return Err(Error::UnknownClaim(claim.into()));
    }
    if claim == "thm-4.4" && p < 3 {
        return Err(Error::Unsupported("thm-4.4 is stated for p >= 3".into()));
    }
    check_order(p, min_p(claim))?;
    let limit = order_limit(claim, &opts.limits);
    if n_max > limit {
        return Err(Error::GuardExceeded {
            what: "verification suite",
            n: n_max,
            limit,
        });
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let mut report = if claim == "thm-2.2-graphs" {
        pool.install(|| sampled_graphs(p, n_max, opts))?
    } else {
        let check = predicate(claim).expect("claim is listed");
        let trees: Vec<Graph> = (1..=n_max).flat_map(enumerate_trees).collect();
        let outcomes: Vec<Outcome> = pool.install(|| {
            trees
                .par_iter()
                .map(|t| {
                    check(t, p, opts).unwrap_or_else(|e| Outcome {
                        failures: vec![format!("error: {e}")],
                        extremal: None,
                    })
                })
                .collect()
        });
        let mut report = aggregate(claim, p, n_max, &trees, &outcomes);
        if claim == "thm-4.4" {
            report
                .violations
                .extend(member_census_mismatches(p, n_max, &trees, &outcomes)?);
        }
        report
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn aggregate(
    claim: &str,
    p: usize,
    n_max: usize,
    trees: &[Graph],
    outcomes: &[Outcome],
) -> VerificationReport {
    let mut census = BTreeMap::new();
    if outcomes.iter().any(|o| o.extremal.is_some()) {
        for n in 1..=n_max {
            census.insert(n, 0);
        }
    }
    let mut found = Vec::new();
    for (t, o) in trees.iter().zip(outcomes) {
        if o.extremal == Some(true) {
            *census.entry(t.order()).or_insert(0) += 1;
        }
        if !o.failures.is_empty() {
            let code = canonical_code(t).unwrap_or_default();
            for f in &o.failures {
                found.push((code.clone(), to_edge_list(t), f.clone()));
            }
        }
    }
    found.sort();
    VerificationReport {
        claim: claim.into(),
        p,
        n_max,
        checked: trees.len(),
        violations: found
            .into_iter()
            .map(|(_, tree, detail)| Violation { tree, detail })
            .collect(),
        census,
        elapsed_ms: 0,
    }
}

/// The extremal trees found by r_p must be exactly the members grown from
/// `K_{1,p}`.
fn member_census_mismatches(
    p: usize,
    n_max: usize,
    trees: &[Graph],
    outcomes: &[Outcome],
) -> Result<Vec<Violation>> {
    let members = enumerate_members(p, n_max)?;
    let extremal: BTreeSet<Vec<u8>> = trees
        .iter()
        .zip(outcomes)
        .filter(|(_, o)| o.extremal == Some(true))
        .map(|(t, _)| canonical_code(t))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (code, (tree, _)) in &members {
        if !extremal.contains(code) {
            out.push(Violation {
                tree: to_edge_list(tree),
                detail: "grown member without r_p = p + 1".into(),
            });
        }
    }
    for (t, o) in trees.iter().zip(outcomes) {
        if o.extremal == Some(true) && !members.contains_key(&canonical_code(t)?) {
            out.push(Violation {
                tree: to_edge_list(t),
                detail: "r_p = p + 1 but not grown from K_{1,p}".into(),
            });
        }
    }
    Ok(out)
}

fn thm_1_2(t: &Graph, p: usize, o: &SuiteOptions) -> Result<Outcome> {
    let r = r_p_with(t, p, &o.limits)?.value;
    let mut out = Outcome {
        extremal: Some(r == p + 1),
        ..Default::default()
    };
    out.check(r <= p + 1, || format!("r_p = {r} > p + 1"));
    Ok(out)
}

/// r_p from its definition against η_p, plus both witnesses.
fn definition_vs_eta(g: &Graph, p: usize, limits: &Limits) -> Result<Outcome> {
    let mut out = Outcome::default();
    let gamma = gamma_p_with(g, p, limits)?.value;
    if gamma <= p {
        let r = r_p_by_definition_with(g, p, 1, limits)?.value;
        out.check(r == 0, || format!("gamma_p = {gamma} <= p but r_p = {r}"));
        return Ok(out);
    }
    let eta = r_p_by_eta_with(g, p, limits)?;
    let slow = eta_exhaustive(g, p, limits, EtaSearch::Restricted)?.total;
    out.check(eta.value == slow, || {
        format!("eta_p = {} but enumeration gives {slow}", eta.value)
    });
    out.check(eta.witness_verified, || {
        "eta witness does not lower gamma_p".into()
    });
    match r_p_by_definition_with(g, p, eta.value + 1, limits) {
        Ok(def) => {
            out.check(def.value == eta.value, || {
                format!("r_p by definition = {}, eta_p = {}", def.value, eta.value)
            });
            let lowered = gamma_p_exhaustive(&g.with_edges(&def.witness_edges)?, p, limits)?.value;
            out.check(lowered < gamma, || {
                format!(
                    "definition witness {:?} leaves gamma_p at {lowered}",
                    def.witness_edges
                )
            });
        }
        Err(Error::BudgetExhausted { .. }) => out.fail(format!(
            "no edge set of size <= {} lowers gamma_p, eta_p = {}",
            eta.value + 1,
            eta.value
        )),
        Err(e) => return Err(e),
    }
    Ok(out)
}

fn thm_2_2(t: &Graph, p: usize, o: &SuiteOptions) -> Result<Outcome> {
    definition_vs_eta(t, p, &o.limits)
}

/// Connected graphs that are not trees: a random tree plus one to three
/// random non-edges, keeping those with γ_p >= p + 1.
pub fn sample_non_tree_graphs(
    p: usize,
    n_max: usize,
    count: usize,
    seed: u64,
    limits: &Limits,
) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let lo = 4.min(n_max);
    let mut attempts = 0;
    while out.len() < count && attempts < count * 100 {
        attempts += 1;
        let n = rng.gen_range(lo..=n_max);
        let tree = random_tree(n, rng.gen());
        let mut extra = tree.complement_edges();
        if extra.is_empty() {
            continue;
        }
        extra.shuffle(&mut rng);
        let k = rng.gen_range(1..=extra.len().min(3));
        let g = tree.with_edges(&extra[..k])?;
        if gamma_p_with(&g, p, limits)?.value > p {
            out.push(g);
        }
    }
    Ok(out)
}

fn sampled_graphs(p: usize, n_max: usize, opts: &SuiteOptions) -> Result<VerificationReport> {
    let graphs = sample_non_tree_graphs(p, n_max, opts.samples, opts.seed, &opts.limits)?;
    let outcomes: Vec<Outcome> = graphs
        .par_iter()
        .map(|g| {
            definition_vs_eta(g, p, &opts.limits).unwrap_or_else(|e| Outcome {
                failures: vec![format!("error: {e}")],
                extremal: None,
            })
        })
        .collect();
    let mut violations: Vec<Violation> = graphs
        .iter()
        .zip(&outcomes)
        .flat_map(|(g, o)| {
            o.failures.iter().map(move |f| Violation {
                tree: to_edge_list(g),
                detail: f.clone(),
            })
        })
        .collect();
    violations.sort_by(|a, b| (&a.tree, &a.detail).cmp(&(&b.tree, &b.detail)));
    if graphs.len() < opts.samples {
        violations.push(Violation {
            tree: String::new(),
            detail: format!(
                "only {} of {} graphs with gamma_p >= p + 1 were found",
                graphs.len(),
                opts.samples
            ),
        });
    }
    Ok(VerificationReport {
        claim: "thm-2.2-graphs".into(),
        p,
        n_max,
        checked: graphs.len(),
        violations,
        census: BTreeMap::new(),
        elapsed_ms: 0,
    })
}

fn thm_2_4(t: &Graph, p: usize, o: &SuiteOptions) -> Result<Outcome> {
    let r = r_p_with(t, p, &o.limits)?.value;
    let mu = mu_graph_with(t, p, &o.limits)?.set_min;
    let mut out = Outcome {
        extremal: Some(r == p + 1),
        ..Default::default()
    };
    out.check(r <= mu, || format!("r_p = {r} > mu_p = {mu}"));
    out.check(r != 1 || mu == 1, || format!("r_p = 1 but mu_p = {mu}"));
    Ok(out)
}

fn thm_3_2(t: &Graph, p: usize, o: &SuiteOptions) -> Result<Outcome> {
    let r = r_p_with(t, p, &o.limits)?.value;
    let mut out = Outcome {
        extremal: Some(r == p + 1),
        ..Default::default()
    };
    if r != p + 1 {
        return Ok(out);
    }
    let sets = all_minimum_p_dominating_sets_with(t, p, &o.limits)?;
    out.check(sets.len() == 1, || format!("{} minimum sets", sets.len()));
    for d in &sets {
        for x in d.iter() {
            let empty = private_neighbors(t, p, d, x)?.is_empty();
            out.check(!empty, || {
                format!("x = {x} has no p-private neighbour in {d}")
            });
        }
    }
    Ok(out)
}

fn structural_claim(t: &Graph, p: usize, o: &SuiteOptions, claim: &str) -> Result<Outcome> {
    let r = r_p_with(t, p, &o.limits)?.value;
    let mut out = Outcome {
        extremal: Some(r == p + 1),
        ..Default::default()
    };
    if r != p + 1 {
        return Ok(out);
    }
    for c in structural_property_checks_with(t, p, &o.limits, &[])? {
        let counts = c.claim == claim || c.claim == "thm-3.2";
        match c.status {
            CheckStatus::Fail | CheckStatus::Skipped if counts => {
                out.fail(format!("{}: {:?}: {}", c.claim, c.status, c.detail))
            }
            _ => {}
        }
    }
    Ok(out)
}

fn thm_4_4(t: &Graph, p: usize, o: &SuiteOptions) -> Result<Outcome> {
    let r = r_p_with(t, p, &o.limits)?.value;
    let member = recognize(t, p)?.is_some();
    let mut out = Outcome {
        extremal: Some(r == p + 1),
        ..Default::default()
    };
    out.check(member == (r == p + 1), || {
        format!("recognized: {member}, r_p = {r}")
    });
    if t.order() <= o.exhaustive_cross_max {
        let slow = recognize_exhaustive_with(t, p, &o.limits)?.is_some();
        out.check(slow == member, || {
            format!("recognized: {member}, exhaustive: {slow}")
        });
    }
    Ok(out)
}

/// Every p-dominating set contains every vertex of degree below p.
fn obs_1_2(t: &Graph, p: usize, _: &SuiteOptions) -> Result<Outcome> {
    let mut out = Outcome::default();
    let nbr = t.masks();
    let forced = forced_vertices(t, p).to_mask();
    for d in 0..=full_mask(t.order()) {
        if dominates(&nbr, p, d) && forced & !d != 0 {
            out.fail(format!("p-dominating mask {d:#b} misses a forced vertex"));
            break;
        }
    }
    Ok(out)
}

/// Every minimiser of η_p over sets smaller than γ_p has γ_p - 1 vertices.
fn obs_2_1(t: &Graph, p: usize, o: &SuiteOptions) -> Result<Outcome> {
    let mut out = Outcome::default();
    let gamma = gamma_p_with(t, p, &o.limits)?.value;
    let nbr = t.masks();
    let small = || (0..=full_mask(t.order())).filter(|x| (x.count_ones() as usize) < gamma);
    let best = small()
        .map(|x| deficiency(&nbr, p, x))
        .min()
        .expect("the empty set qualifies");
    if let Some(x) =
        small().find(|&x| deficiency(&nbr, p, x) == best && x.count_ones() as usize != gamma - 1)
    {
        out.fail(format!(
            "minimiser {x:#b} has {} vertices, gamma_p = {gamma}",
            x.count_ones()
        ));
    }
    Ok(out)
}

/// Adding a vertex to `X` never raises η_p(V, X, T), and lowers it when
/// the added vertex was short.
fn eta_monotone(t: &Graph, p: usize, _: &SuiteOptions) -> Result<Outcome> {
    let mut out = Outcome::default();
    let nbr = t.masks();
    let n = t.order();
    for x in 0..=full_mask(n) {
        let before = deficiency(&nbr, p, x);
        for v in (0..n).filter(|&v| x & (1 << v) == 0) {
            let after = deficiency(&nbr, p, x | 1 << v);
            let short = ((nbr[v] & x).count_ones() as usize) < p;
            if after > before || (short && after >= before) {
                out.fail(format!("adding {v} to {x:#b}: {before} -> {after}"));
                return Ok(out);
            }
        }
    }
    Ok(out)
}
