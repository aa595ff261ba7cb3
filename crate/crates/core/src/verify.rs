//! Reproduces the published identities against golden files and brute force.
//!
//! Every check has a stable identifier such as `eq-t-prime/b=2` and belongs to
//! one numbered acceptance criterion. Brute-force comparisons honor a vertex
//! limit, so a lowered limit turns the larger comparisons into skips rather
//! than failures.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::csf::{self, csf, stable_partition_census, MAX_CSF_VERTICES};
use crate::error::{Error, Result};
use crate::graphs::{self, Graph};
use crate::ncsym;
use crate::partitions::{
    enumerate_special_rim_hook_tabloids, kostka, kostka_table, partitions_of, Partition,
};
use crate::rational::{format_rational, rat, Rational};
use crate::symfunc::{is_positive, multiply, principal_specialization_count, to_basis, Basis, SymFn};

/// Environment variable that lowers (never raises) the brute-force vertex limit.
pub const MAX_VERTICES_ENV: &str = "CHROMAPOS_MAX_VERTICES";

/// The vertex limit after applying [`MAX_VERTICES_ENV`], capped at `default`.
pub fn vertex_limit(default: usize) -> usize {
    std::env::var(MAX_VERTICES_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(default, |v| v.min(default))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    Foundations,
    ClosedForms,
    Schur,
}

impl Section {
    pub const ALL: [Section; 3] = [Section::Foundations, Section::ClosedForms, Section::Schur];

    pub fn number(self) -> u8 {
        match self {
            Section::Foundations => 2,
            Section::ClosedForms => 3,
            Section::Schur => 4,
        }
    }

    pub fn from_number(n: u8) -> Option<Section> {
        Section::ALL.into_iter().find(|s| s.number() == n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub id: String,
    pub section: Section,
    pub criterion: u8,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub records: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn criterion(&self, n: u8) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(move |r| r.criterion == n)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub sections: Vec<Section>,
    pub deep: bool,
    pub max_vertices: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            sections: Section::ALL.to_vec(),
            deep: false,
            max_vertices: vertex_limit(MAX_CSF_VERTICES),
        }
    }
}

/// Golden records: `[key]` header lines followed by free-form bodies.
#[derive(Debug)]
pub struct Golden {
    name: &'static str,
    records: BTreeMap<String, String>,
}

impl Golden {
    pub fn parse(name: &'static str, text: &str) -> Golden {
        let mut records = BTreeMap::new();
        let mut current: Option<(String, String)> = None;
        for line in text.lines() {
            let t = line.trim();
            if t.starts_with('#') || t.is_empty() {
                continue;
            }
            if t.starts_with('[') && t.ends_with(']') {
                if let Some((k, v)) = current.take() {
                    records.insert(k, v);
                }
                current = Some((t[1..t.len() - 1].to_string(), String::new()));
            } else if let Some((_, body)) = current.as_mut() {
                body.push_str(t);
                body.push('\n');
            }
        }
        if let Some((k, v)) = current {
            records.insert(k, v);
        }
        Golden { name, records }
    }

    pub fn text(&self, key: &str) -> Result<&str> {
        self.records
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::Internal(format!("golden file {} has no record [{key}]", self.name)))
    }

    pub fn sym(&self, key: &str) -> Result<SymFn> {
        SymFn::parse_terms(self.text(key)?, Basis::E)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }
}

macro_rules! golden {
    ($name:literal) => {
        Golden::parse($name, include_str!(concat!("../golden/", $name, ".txt")))
    };
}

pub fn golden_small_forms() -> Golden {
    golden!("small-forms")
}
pub fn golden_t_prime() -> Golden {
    golden!("eq-t-prime")
}
pub fn golden_xhb() -> Golden {
    golden!("eq-xhb")
}
pub fn golden_pmn() -> Golden {
    golden!("eq-pmn")
}
pub fn golden_tab() -> Golden {
    golden!("eq-tab")
}
pub fn golden_xs() -> Golden {
    golden!("eq-xs")
}
pub fn golden_counterexamples() -> Golden {
    golden!("counterexample-coefficients")
}
pub fn golden_xf1() -> Golden {
    golden!("eq-xf1")
}
pub fn golden_am() -> Golden {
    golden!("eq-am")
}
pub fn golden_xf() -> Golden {
    golden!("eq-xf")
}
pub fn golden_kostka_fork() -> Golden {
    golden!("kostka-matrix-fork")
}
pub fn golden_tabloid_count() -> Golden {
    golden!("tabloid-count")
}
pub fn golden_tabloid_coefficient() -> Golden {
    golden!("tabloid-coefficient")
}

/// Named test graphs with at most eight vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut push = |name: String, g: Result<Graph>| out.push((name, g.expect("corpus graph")));
    for n in 1..=8 {
        push(format!("path-{n}"), graphs::path(n));
    }
    for n in 3..=8 {
        push(format!("cycle-{n}"), graphs::cycle(n));
    }
    for n in 2..=6 {
        push(format!("complete-{n}"), graphs::complete(n));
    }
    for n in 1..=3 {
        push(format!("empty-{n}"), Graph::empty(n));
    }
    push("claw".into(), Ok(graphs::claw()));
    push("net".into(), Ok(graphs::net()));
    push("bull".into(), Ok(graphs::bull()));
    push("fork".into(), Ok(graphs::fork()));
    push("s-graph".into(), Ok(graphs::s_graph()));
    for (a, b) in [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (3, 4), (4, 3), (5, 3), (6, 2)] {
        push(format!("tadpole-{a}-{b}"), graphs::tadpole(a, b));
    }
    for (m, n) in [(3, 2), (4, 3), (4, 4), (5, 2), (6, 3)] {
        push(format!("path-with-leaf-{m}-{n}"), graphs::path_with_leaf(m, n));
    }
    for b in 1..=3 {
        push(format!("twinned-tadpole4-{b}"), csf::twinned_tadpole4(b));
        push(format!("hb-{b}"), csf::hb_graph(b));
    }
    for k in 1..=3 {
        push(format!("fork-clan-{k}"), csf::fork_clan(k));
    }
    push("claw-clan-1".into(), graphs::clan(&graphs::claw(), 4, 1));
    push("bull-twin-3".into(), graphs::twin(&graphs::bull(), 3));
    push(
        "p2-plus-c3".into(),
        graphs::disjoint_union(&graphs::path(2).unwrap(), &graphs::cycle(3).unwrap()),
    );
    push(
        "k1-plus-p4".into(),
        graphs::disjoint_union(&graphs::path(1).unwrap(), &graphs::path(4).unwrap()),
    );
    out
}

enum Outcome {
    Pass { expected: String, actual: String },
    Fail { expected: String, actual: String },
}

fn compare(expected: impl fmt::Display, actual: impl fmt::Display) -> Outcome {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    if expected == actual {
        Outcome::Pass { expected, actual }
    } else {
        Outcome::Fail { expected, actual }
    }
}

fn all_equal(expected: &SymFn, others: &[(&str, &SymFn)]) -> Outcome {
    let exp = expected.to_string();
    let mismatch: Vec<String> = others
        .iter()
        .filter(|(_, f)| *f != expected)
        .map(|(label, f)| format!("{label}:\n{f}"))
        .collect();
    if mismatch.is_empty() {
        let labels: Vec<&str> = others.iter().map(|(l, _)| *l).collect();
        Outcome::Pass { expected: exp, actual: format!("agrees: {}", labels.join(", ")) }
    } else {
        Outcome::Fail { expected: exp, actual: mismatch.join("\n") }
    }
}

fn truth(ok: bool, what: impl Into<String>) -> Outcome {
    let what = what.into();
    if ok {
        Outcome::Pass { expected: what.clone(), actual: what }
    } else {
        Outcome::Fail { expected: what, actual: "does not hold".into() }
    }
}

struct Runner {
    options: VerifyOptions,
    section: Section,
    records: Vec<CheckRecord>,
}

impl Runner {
    fn check(&mut self, id: impl Into<String>, criterion: u8, body: impl FnOnce(&Runner) -> Result<Outcome>) {
        let start = Instant::now();
        let result = body(self);
        let elapsed = start.elapsed();
        let (status, expected, actual) = match result {
            Ok(Outcome::Pass { expected, actual }) => (Status::Pass, expected, actual),
            Ok(Outcome::Fail { expected, actual }) => (Status::Fail, expected, actual),
            Err(e @ Error::TooLarge { .. }) => (Status::Skipped, String::new(), e.to_string()),
            Err(e) => (Status::Fail, String::new(), format!("error: {e}")),
        };
        self.records.push(CheckRecord {
            id: id.into(),
            section: self.section,
            criterion,
            status,
            expected,
            actual,
            elapsed,
        });
    }

    /// Brute-force `X_G` in the monomial basis, subject to the vertex limit.
    fn brute(&self, g: &Graph) -> Result<SymFn> {
        self.admit(g)?;
        csf(g)
    }

    fn brute_in(&self, g: &Graph, basis: Basis) -> Result<SymFn> {
        to_basis(&self.brute(g)?, basis)
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        if g.order() > self.options.max_vertices {
            return Err(Error::TooLarge {
                what: "brute-force graph",
                size: g.order(),
                guard: MAX_VERTICES_ENV,
                limit: self.options.max_vertices,
            });
        }
        Ok(())
    }

    fn deep(&self, normal: usize) -> usize {
        normal + usize::from(self.options.deep)
    }
}

/// Re-derives the embedded small expansions by brute force; a mismatch
/// means a transcription error and aborts the run.
pub fn check_embedded_constants() -> Result<()> {
    let sf = csf::small_forms();
    let gold = golden_small_forms();
    let k2 = graphs::path(2)?;
    let cases: [(&str, &SymFn, Graph); 6] = [
        ("P3", &sf.p3, graphs::path(3)?),
        ("P4", &sf.p4, graphs::path(4)?),
        ("C2", &sf.c2, k2),
        ("C3", &sf.c3, graphs::cycle(3)?),
        ("C4", &sf.c4, graphs::cycle(4)?),
        ("S", &sf.s, graphs::s_graph()),
    ];
    for (key, embedded, g) in cases {
        let brute = to_basis(&csf(&g)?, Basis::E)?;
        if *embedded != gold.sym(key)? || brute != *embedded {
            return Err(Error::Internal(format!(
                "embedded constant {key} disagrees with its golden record or brute force"
            )));
        }
    }
    Ok(())
}

pub fn run(options: &VerifyOptions) -> Result<VerifyReport> {
    check_embedded_constants()?;
    let mut runner = Runner { options: options.clone(), section: Section::Foundations, records: Vec::new() };
    let mut sections = options.sections.clone();
    sections.sort();
    sections.dedup();
    for s in sections {
        runner.section = s;
        match s {
            Section::Foundations => foundations(&mut runner),
            Section::ClosedForms => closed_forms(&mut runner),
            Section::Schur => schur(&mut runner),
        }
    }
    Ok(VerifyReport { records: runner.records })
}

fn foundations(r: &mut Runner) {
    for n in 1..=r.deep(8) {
        r.check(format!("kostka-unitriangular/n={n}"), 10, |_| {
            let t = kostka_table(n)?;
            let size = t.partitions.len();
            let mut ok = true;
            for i in 0..size {
                for j in 0..size {
                    let k = t.forward[i][j];
                    ok &= if i == j { k == 1 } else if i > j { k == 0 } else { true };
                    let dot: Rational = (0..size).map(|l| &t.inverse[i][l] * rat(t.forward[l][j] as i64)).sum();
                    ok &= dot == rat(i64::from(i == j));
                }
            }
            Ok(truth(ok, format!("K upper unitriangular and K^-1 K = I on {size} partitions")))
        });
    }
    for n in 1..=r.deep(8) {
        r.check(format!("hook-length/n={n}"), 10, |_| {
            let mut bad = Vec::new();
            for lam in partitions_of(n) {
                let hooks: BigInt = lam.hook_lengths().iter().flatten().map(|&h| BigInt::from(h)).product();
                let formula = crate::rational::factorial(n) / hooks;
                let counted = BigInt::from(count_standard_tableaux(lam.parts()));
                if formula != counted {
                    bad.push(format!("{lam}: {formula} vs {counted}"));
                }
            }
            Ok(truth(bad.is_empty(), format!("n!/Π h = #SYT for all λ ⊢ {n} {}", bad.join("; "))))
        });
    }
    r.check("round-trip/200-random", 10, |_| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
        let mut failures = Vec::new();
        for i in 0..200 {
            let f = random_element(&mut rng, 8);
            for via in [Basis::M, Basis::E, Basis::S] {
                let back = to_basis(&to_basis(&f, via)?, f.basis())?;
                if back != f {
                    failures.push(format!("#{i} via {via}"));
                }
            }
        }
        Ok(truth(failures.is_empty(), format!("200 elements survive every round trip {}", failures.join(", "))))
    });
    let corpus = corpus();
    r.check("multiplicativity/20-random-pairs", 10, |r| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        let mut failures = Vec::new();
        let mut tried = 0;
        while tried < 20 {
            let (gn, g) = corpus.choose(&mut rng).expect("corpus");
            let (hn, h) = corpus.choose(&mut rng).expect("corpus");
            if g.order() + h.order() > 10 {
                continue;
            }
            tried += 1;
            let u = graphs::disjoint_union(g, h)?;
            let lhs = r.brute_in(&u, Basis::E)?;
            let rhs = multiply(&r.brute(g)?, &r.brute(h)?)?;
            if lhs != rhs {
                failures.push(format!("{gn} + {hn}"));
            }
        }
        Ok(truth(failures.is_empty(), format!("X of a disjoint union is the product {}", failures.join(", "))))
    });
    for (name, g) in corpus.iter().filter(|(_, g)| g.order() <= 7) {
        r.check(format!("commutative-image/{name}"), 10, |r| {
            r.admit(g)?;
            let y = ncsym::to_e_basis(&ncsym::y_graph(g)?)?;
            Ok(compare(r.brute_in(g, Basis::E)?, ncsym::commutative_image(&y)))
        });
    }
    for (name, g) in &corpus {
        r.check(format!("specialization/{name}"), 10, |r| {
            let x = r.brute(g)?;
            let mut expected = Vec::new();
            let mut actual = Vec::new();
            for n in 0..=5 {
                expected.push(csf::proper_coloring_count(g, n)?.to_string());
                actual.push(format_rational(&principal_specialization_count(&x, n)?));
            }
            Ok(compare(expected.join(" "), actual.join(" ")))
        });
    }
    for (a, b) in [(3, 0), (4, 0), (5, 0), (6, 0), (3, 1), (4, 1), (3, 2), (4, 2), (5, 3)] {
        r.check(format!("gs-chain/a={a},b={b}"), 7, |r| {
            r.admit(&Graph::empty(a + b)?)?;
            let stages = ncsym::gs_chain(a, b)?;
            let mut lines = Vec::new();
            let mut ok = true;
            for (j, stage) in stages.iter().enumerate() {
                let pos = stage.report.is_positive();
                ok &= pos;
                // the noncommutative certificate must imply ordinary e-positivity
                ok &= is_positive(&csf(&stage.graph)?, Basis::E)?.positive || !pos;
                lines.push(format!("stage {j} mod {}: {}", a + j, if pos { "positive" } else { "NOT positive" }));
            }
            Ok(truth(ok, lines.join("\n")))
        });
    }
}

fn closed_forms(r: &mut Runner) {
    let gold = golden_small_forms();
    let sf = csf::small_forms();
    let k2 = graphs::path(2).expect("K2");
    let smalls: [(&str, &SymFn, Graph); 5] = [
        ("P3", &sf.p3, graphs::path(3).expect("P3")),
        ("P4", &sf.p4, graphs::path(4).expect("P4")),
        ("C2", &sf.c2, k2),
        ("C3", &sf.c3, graphs::cycle(3).expect("C3")),
        ("C4", &sf.c4, graphs::cycle(4).expect("C4")),
    ];
    for (key, embedded, g) in smalls {
        r.check(format!("small-forms/{key}"), 1, |r| {
            Ok(all_equal(&gold.sym(key)?, &[("embedded", embedded), ("brute force", &r.brute_in(&g, Basis::E)?)]))
        });
    }
    let xs = golden_xs();
    r.check("eq-xs", 1, |r| {
        let brute = r.brute_in(&graphs::s_graph(), Basis::E)?;
        Ok(all_equal(&xs.sym("S")?, &[("embedded", &sf.s), ("brute force", &brute)]))
    });

    for n in 1..=r.deep(9) {
        r.check(format!("wolfe-vs-bruteforce/n={n}"), 2, |r| {
            Ok(compare(r.brute_in(&graphs::path(n)?, Basis::E)?, csf::path_csf(n)?))
        });
    }

    os_relations(r);

    let pmn = golden_pmn();
    for key in pmn.keys().map(str::to_string).collect::<Vec<_>>() {
        r.check(format!("eq-pmn/{key}"), 3, |r| {
            let (m, n) = parse_pair(&key, "m", "n")?;
            let closed = csf::path_with_leaf_csf(m, n)?;
            let brute = r.brute_in(&graphs::path_with_leaf(m, n)?, Basis::E)?;
            Ok(all_equal(&pmn.sym(&key)?, &[("closed form", &closed), ("brute force", &brute)]))
        });
    }

    let tp = golden_t_prime();
    for b in 1..=6 {
        r.check(format!("eq-t-prime/b={b}"), 4, |r| {
            let expected = tp.sym(&format!("b={b}"))?;
            let closed = csf::twinned_tadpole4_csf(b)?;
            let via = csf::twinned_via_hb(b)?;
            let mut others = vec![("closed form", closed), ("2 X_Hb - X_Pb X_S", via)];
            if b <= r.deep(5) {
                others.push(("brute force", r.brute_in(&csf::twinned_tadpole4(b)?, Basis::E)?));
            }
            let refs: Vec<(&str, &SymFn)> = others.iter().map(|(l, f)| (*l, f)).collect();
            Ok(all_equal(&expected, &refs))
        });
    }
    let xhb = golden_xhb();
    for b in 1..=4 {
        r.check(format!("eq-xhb/b={b}"), 4, |r| {
            let expected = xhb.sym(&format!("b={b}"))?;
            let closed = csf::hb_csf(b)?;
            let mut others = vec![("closed form", closed)];
            if b <= 3 {
                others.push(("pre-simplification form", csf::hb_via_intermediates(b)?));
            }
            if b + 5 <= r.deep(8) {
                others.push(("brute force", r.brute_in(&csf::hb_graph(b)?, Basis::E)?));
            }
            let refs: Vec<(&str, &SymFn)> = others.iter().map(|(l, f)| (*l, f)).collect();
            Ok(all_equal(&expected, &refs))
        });
    }

    let ce = golden_counterexamples();
    for key in ce.keys().map(str::to_string).collect::<Vec<_>>() {
        r.check(format!("counterexample-coefficients/{key}"), 5, |r| {
            let (term, b) = key.split_once("/b=").ok_or_else(|| Error::Internal(format!("bad key {key}")))?;
            let b: usize = b.parse().map_err(|_| Error::Internal(format!("bad key {key}")))?;
            let lam: Partition = term[1..].parse()?;
            let expected = ce.text(&key)?.trim().to_string();
            let closed = csf::twinned_tadpole4_csf(b)?.get(&lam);
            let mut actual = format!("closed form {}", format_rational(&closed));
            let mut ok = format_rational(&closed) == expected;
            if b + 5 <= 9 {
                let brute = r.brute_in(&csf::twinned_tadpole4(b)?, Basis::E)?.get(&lam);
                actual.push_str(&format!(", brute force {}", format_rational(&brute)));
                ok &= brute == closed;
            }
            Ok(if ok { Outcome::Pass { expected, actual } } else { Outcome::Fail { expected, actual } })
        });
    }

    let tab = golden_tab();
    for key in tab.keys().map(str::to_string).collect::<Vec<_>>() {
        r.check(format!("eq-tab/{key}"), 6, |r| {
            let (a, b) = parse_pair(&key, "a", "b")?;
            let closed = csf::tadpole_csf(a, b)?;
            let brute = r.brute_in(&graphs::tadpole(a, b)?, Basis::E)?;
            Ok(all_equal(&tab.sym(&key)?, &[("closed form", &closed), ("brute force", &brute)]))
        });
    }
    for a in 3..=6 {
        for b in 1..=4 {
            if a + b > r.deep(9) {
                continue;
            }
            r.check(format!("tadpole-e-positivity/brute/a={a},b={b}"), 6, |r| {
                let x = r.brute(&graphs::tadpole(a, b)?)?;
                let p = is_positive(&x, Basis::E)?;
                Ok(truth(p.positive, format!("T<{a},{b}> is e-positive")))
            });
        }
    }
    r.check("tadpole-e-positivity/closed-form/a+b<=12", 6, |_| {
        let mut bad = Vec::new();
        let mut count = 0;
        for a in 3..=11 {
            for b in 1..=12 - a {
                count += 1;
                if !is_positive(&csf::tadpole_csf(a, b)?, Basis::E)?.positive {
                    bad.push(format!("({a},{b})"));
                }
            }
        }
        Ok(truth(bad.is_empty(), format!("{count} tadpoles e-positive {}", bad.join(" "))))
    });
}

fn os_relations(r: &mut Runner) {
    for b in 1..=3 {
        r.check(format!("os-relations/triangle-twinned-tadpole/b={b}"), 3, |r| {
            let g = csf::twinned_tadpole4(b)?;
            r.admit(&g)?;
            let ok = csf::triangle_relation_check(&g, (b + 5, 5), (4, 5), (4, b + 5))?;
            Ok(truth(ok, "X_G = X_{G-e1} + X_{G-e2} - X_{G-e1-e2} on v4'v5, v4v5, v4v4'"))
        });
    }
    for (a, b) in [(4, 1), (4, 2), (5, 1), (5, 3), (6, 2)] {
        r.check(format!("os-relations/edge-swap-tadpole/a={a},b={b}"), 3, |r| {
            let g = graphs::tadpole(a, b)?;
            r.admit(&g)?;
            let ok = csf::edge_swap_relation_check(&g, 1, a - 1, a)?;
            let shifted = &(&csf::tadpole_csf(a - 1, b + 1)? + &csf::path_csf(a + b)?)
                - &(&csf::cycle_csf(a - 1)? * &csf::path_csf(b + 1)?);
            let closed = csf::tadpole_csf(a, b)? == shifted;
            Ok(truth(ok && closed, "edge swap at (v1, v_{a-1}, v_a) and its closed-form reading"))
        });
    }
    for (m, n) in [(4, 3), (5, 3), (6, 4), (7, 5)] {
        r.check(format!("os-relations/edge-swap-path-with-leaf/m={m},n={n}"), 3, |r| {
            let g = graphs::path_with_leaf(m, n)?;
            r.admit(&g)?;
            let ok = csf::edge_swap_relation_check(&g, n - 1, m + 1, n)?;
            Ok(truth(ok, "edge swap at (v_{n-1}, v_{m+1}, v_n)"))
        });
    }
    let count = if r.options.deep { 50 } else { 25 };
    r.check(format!("os-relations/random-{count}"), 3, |r| {
        let corpus: Vec<(String, Graph)> = corpus().into_iter().filter(|(_, g)| g.order() <= 8).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        let mut done = Vec::new();
        let mut failures = Vec::new();
        let mut attempts = 0;
        while done.len() < count && attempts < 10_000 {
            attempts += 1;
            let (name, g) = corpus.choose(&mut rng).expect("corpus");
            r.admit(g)?;
            let d = g.order();
            if rng.gen_bool(0.5) {
                let triangles: Vec<[usize; 3]> = (1..=d)
                    .flat_map(|x| (x + 1..=d).flat_map(move |y| (y + 1..=d).map(move |z| [x, y, z])))
                    .filter(|&[x, y, z]| g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z))
                    .collect();
                let Some(&[x, y, z]) = triangles.choose(&mut rng) else { continue };
                let mut es = [(x, y), (y, z), (x, z)];
                es.shuffle(&mut rng);
                let label = format!("{name} triangle {es:?}");
                if !csf::triangle_relation_check(g, es[0], es[1], es[2])? {
                    failures.push(label.clone());
                }
                done.push(label);
            } else {
                let triples: Vec<(usize, usize, usize)> = (1..=d)
                    .flat_map(|v3| {
                        g.neighbors(v3).into_iter().flat_map(move |v1| {
                            g.neighbors(v3).into_iter().map(move |v2| (v1, v2, v3))
                        })
                    })
                    .filter(|&(v1, v2, _)| v1 != v2 && !g.has_edge(v1, v2))
                    .collect();
                let Some(&(v1, v2, v3)) = triples.choose(&mut rng) else { continue };
                let label = format!("{name} edge swap ({v1}, {v2}, {v3})");
                if !csf::edge_swap_relation_check(g, v1, v2, v3)? {
                    failures.push(label.clone());
                }
                done.push(label);
            }
        }
        let ok = failures.is_empty() && done.len() == count;
        Ok(truth(ok, format!("{} configurations:\n{}", done.len(), done.join("\n"))))
    });
}

fn schur(r: &mut Runner) {
    let xf1 = golden_xf1();
    r.check("eq-xf1", 8, |r| Ok(compare(xf1.sym("fork")?, r.brute_in(&graphs::fork(), Basis::E)?)));

    let am = golden_am();
    for k in 1..=3 {
        if k > r.deep(2) {
            continue;
        }
        r.check(format!("eq-am/k={k}"), 8, |r| {
            let expected = am.sym(&format!("k={k}"))?;
            let brute = r.brute(&csf::fork_clan(k)?)?;
            let closed = csf::fork_clan_monomial_closed_form(k)?;
            Ok(all_equal(&expected, &[("closed form", &closed), ("brute force", &brute)]))
        });
    }

    let kf = golden_kostka_fork();
    for k in 1..=5 {
        r.check(format!("kostka-matrix-fork/k={k}"), 8, |_| {
            let ps = csf::fork_clan_partitions(k)?;
            let table = kostka_table(k + 5)?;
            let forward = csf::fork_clan_kostka_closed_form(k)?;
            let inverse = csf::fork_clan_inverse_kostka_closed_form(k)?;
            let fmt_rows = |rows: &[[BigInt; 6]; 6]| {
                rows.iter()
                    .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let mut computed_fwd = Vec::new();
            let mut computed_inv = Vec::new();
            for a in &ps {
                let mut fr = Vec::new();
                let mut ir = Vec::new();
                for b in &ps {
                    fr.push(kostka(a, b)?.to_string());
                    let (i, j) = (table.index_of(a).expect("indexed"), table.index_of(b).expect("indexed"));
                    ir.push(format_rational(&table.inverse[i][j]));
                }
                computed_fwd.push(fr.join(" "));
                computed_inv.push(ir.join(" "));
            }
            let expected = format!(
                "{}\n{}",
                kf.text(&format!("forward/k={k}"))?.trim_end(),
                kf.text(&format!("inverse/k={k}"))?.trim_end()
            );
            let closed = format!("{}\n{}", fmt_rows(&forward), fmt_rows(&inverse));
            let computed = format!("{}\n{}", computed_fwd.join("\n"), computed_inv.join("\n"));
            if closed != expected {
                return Ok(Outcome::Fail { expected, actual: format!("closed form:\n{closed}") });
            }
            Ok(compare(expected, computed))
        });
    }

    let xf = golden_xf();
    for k in 1..=10 {
        r.check(format!("eq-XF/k={k}"), 8, |r| {
            let expected = xf.sym(&format!("k={k}"))?;
            let closed = csf::fork_clan_schur_closed_form(k)?;
            let lam = Partition::from_exponents(&[(2, 3), (1, k - 1)]);
            let target = -rat(2) * Rational::from_integer(crate::rational::factorial(k + 1));
            if closed.get(&lam) != target {
                return Ok(Outcome::Fail {
                    expected: format!("[s{lam}] = {}", format_rational(&target)),
                    actual: format_rational(&closed.get(&lam)),
                });
            }
            let mut others = vec![("closed form", closed)];
            if k <= r.deep(2) {
                others.push(("brute force", r.brute_in(&csf::fork_clan(k)?, Basis::S)?));
            }
            let refs: Vec<(&str, &SymFn)> = others.iter().map(|(l, f)| (*l, f)).collect();
            Ok(all_equal(&expected, &refs))
        });
    }

    let tc = golden_tabloid_count();
    let tco = golden_tabloid_coefficient();
    for k in 1..=4 {
        r.check(format!("tabloid-count/k={k}"), 9, |r| {
            let g = csf::fork_clan(k)?;
            r.admit(&g)?;
            let census = stable_partition_census(&g)?;
            let shape = Partition::from_exponents(&[(2, 3), (1, k - 1)]);
            let hits: Vec<_> = enumerate_special_rim_hook_tabloids(&shape)
                .into_iter()
                .filter(|t| census.count(&t.hook_type()) > 0)
                .collect();
            let mut lines = vec![format!("count {}", hits.len())];
            lines.extend(hits.iter().map(|t| format!("sign {}", t.sign())));
            Ok(compare(tc.text(&format!("k={k}"))?.trim_end(), lines.join("\n")))
        });
        r.check(format!("tabloid-coefficient/k={k}"), 9, |r| {
            let g = csf::fork_clan(k)?;
            r.admit(&g)?;
            let shape = Partition::from_exponents(&[(2, 3), (1, k - 1)]);
            let via = csf::schur_coeff_via_tabloids(&g, &shape)?;
            Ok(compare(tco.text(&format!("k={k}"))?.trim(), via))
        });
    }
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 7) {
        r.check(format!("tabloid-formula/{name}"), 9, |r| {
            let s = r.brute_in(&g, Basis::S)?;
            let mut via = SymFn::zero(Basis::S);
            for lam in partitions_of(g.order()) {
                via.add_term(lam.clone(), Rational::from_integer(csf::schur_coeff_via_tabloids(&g, &lam)?));
            }
            Ok(compare(s, via))
        });
    }

    for b in 1..=4 {
        r.check(format!("s-positivity/twinned-tadpole4/b={b}"), 11, |r| {
            let closed = csf::twinned_tadpole4_csf(b)?;
            let p = is_positive(&closed, Basis::S)?;
            if b + 5 <= 9 {
                let brute = is_positive(&r.brute(&csf::twinned_tadpole4(b)?)?, Basis::S)?;
                if brute.expansion != p.expansion {
                    return Ok(compare(&brute.expansion, &p.expansion));
                }
            }
            let expected = format!("twin(T<4,{b}>, v4) is s-positive");
            Ok(match p.witness {
                None => Outcome::Pass { actual: expected.clone(), expected },
                Some((lam, c)) => Outcome::Fail {
                    expected,
                    actual: format!("NOT s-positive, witness {} s{lam}", format_rational(&c)),
                },
            })
        });
    }
    for k in 1..=2 {
        r.check(format!("s-positivity/fork-clan/k={k}"), 11, |r| {
            let p = is_positive(&r.brute(&csf::fork_clan(k)?)?, Basis::S)?;
            let witness = p
                .witness
                .map(|(lam, c)| format!("{} s{lam}", format_rational(&c)))
                .unwrap_or_else(|| "none".into());
            Ok(truth(!p.positive, format!("fork clan k={k} is NOT s-positive, witness {witness}")))
        });
    }
}

fn parse_pair(key: &str, a: &str, b: &str) -> Result<(usize, usize)> {
    let bad = || Error::Internal(format!("bad golden key {key}"));
    let (x, y) = key.split_once(',').ok_or_else(bad)?;
    let x = x.strip_prefix(a).and_then(|s| s.strip_prefix('=')).ok_or_else(bad)?;
    let y = y.strip_prefix(b).and_then(|s| s.strip_prefix('=')).ok_or_else(bad)?;
    Ok((x.parse().map_err(|_| bad())?, y.parse().map_err(|_| bad())?))
}

/// Standard Young tableaux counted by removing corners, one at a time.
fn count_standard_tableaux(parts: &[usize]) -> u64 {
    fn rec(parts: &mut Vec<usize>, memo: &mut std::collections::HashMap<Vec<usize>, u64>) -> u64 {
        if parts.iter().all(|&p| p == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(parts.as_slice()) {
            return v;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let below = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > below {
                parts[i] -= 1;
                total += rec(parts, memo);
                parts[i] += 1;
            }
        }
        memo.insert(parts.clone(), total);
        total
    }
    rec(&mut parts.to_vec(), &mut Default::default())
}

/// A random homogeneous element with small integer and fractional coefficients.
pub fn random_element(rng: &mut impl Rng, max_degree: usize) -> SymFn {
    let basis = [Basis::M, Basis::E, Basis::S][rng.gen_range(0..3)];
    let n = rng.gen_range(1..=max_degree);
    let parts = partitions_of(n);
    let terms = rng.gen_range(1..=parts.len().min(6));
    let mut f = SymFn::zero(basis);
    for _ in 0..terms {
        let lam = parts.choose(rng).expect("nonempty").clone();
        let c = Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=4)));
        f.add_term(lam, c);
    }
    f
}
