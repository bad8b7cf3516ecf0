//! Output formatting for each subcommand.

use std::fmt::Write as _;

use gt_core::betti::{betti_structural_checks, BettiReport};
use gt_core::hilbert::{hilbert_report, HilbertReport};
use gt_core::invariants::{graded_basis_with, SymInvariant};
use gt_core::monomial::ExponentVector;
use gt_core::syzygy::{
    kernel_quadrics, kernel_quadrics_all_pairs, relations_to_latex, surface_generators, verify_relation,
    QuadricRelation, RelationKind, Space,
};
use gt_core::verify::verify_range;
use gt_core::wlp::{wlp_failure_check_with, WlpReport};
use gt_core::Strategy;
use serde::Serialize;

use crate::{Common, Failure, Format};

pub struct Rendered {
    pub text: String,
    /// Named failed checks; a nonempty list means exit code 1.
    pub failures: Vec<String>,
}

impl Rendered {
    fn ok(text: String) -> Self {
        Self {
            text,
            failures: Vec::new(),
        }
    }
}

/// A single object for `--d`, an array for `--d-range`.
fn json<T: Serialize>(items: &[T], range: bool) -> String {
    let s = if range {
        serde_json::to_string_pretty(items)
    } else {
        serde_json::to_string_pretty(&items[0])
    };
    s.expect("report types serialize") + "\n"
}

/// CSV with a header row; fields are quoted where needed.
fn csv<R: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: R) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are UTF-8")
}

fn latex_monomial(e: &ExponentVector) -> String {
    let mut s = String::new();
    for (i, &k) in e.0.iter().enumerate() {
        match k {
            0 => {}
            1 => write!(s, "x_{i}").unwrap(),
            _ => write!(s, "x_{i}^{{{k}}}").unwrap(),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

fn latex_invariant(b: &SymInvariant) -> String {
    match b.mirror {
        Some(m) => format!("{} + {}", latex_monomial(&b.lead), latex_monomial(&m)),
        None => latex_monomial(&b.lead),
    }
}

#[derive(Serialize)]
struct BasisOut {
    d: u32,
    t: u32,
    count: usize,
    basis: Vec<SymInvariant>,
}

pub fn basis(c: &Common, strategy: Strategy) -> Result<Rendered, Failure> {
    let mut items = Vec::new();
    for d in c.ds()? {
        c.params(d)?;
        for t in c.ts(1..=1) {
            let basis = graded_basis_with(d, t, strategy)?;
            items.push(BasisOut {
                d,
                t,
                count: basis.len(),
                basis,
            });
        }
    }
    let many = items.len() > 1 || c.is_range();
    let text = match c.format {
        Format::Json => json(&items, many),
        Format::Text => {
            let mut s = String::new();
            for b in &items {
                writeln!(s, "# d={} t={} ({} forms)", b.d, b.t, b.count).unwrap();
                for x in &b.basis {
                    writeln!(s, "{x}").unwrap();
                }
            }
            s
        }
        Format::Csv => csv(
            &["d", "t", "kind", "lead", "mirror"],
            items.iter().flat_map(|b| {
                b.basis.iter().map(|x| {
                    let kind = serde_json::to_value(x.kind).unwrap();
                    let mirror = x.mirror.map(|m| m.to_string()).unwrap_or_default();
                    vec![
                        b.d.to_string(),
                        b.t.to_string(),
                        kind.as_str().unwrap().to_string(),
                        x.lead.to_string(),
                        mirror,
                    ]
                })
            }),
        ),
        Format::Latex => {
            let mut s = String::new();
            for b in &items {
                writeln!(s, "% d={} t={} ({} forms)", b.d, b.t, b.count).unwrap();
                s.push_str("\\begin{array}{l}\n");
                for x in &b.basis {
                    writeln!(s, "{}\\\\", latex_invariant(x)).unwrap();
                }
                s.push_str("\\end{array}\n");
            }
            s
        }
    };
    Ok(Rendered::ok(text))
}

fn hp_text(h: &HilbertReport) -> String {
    format!("{}t^2 + {}t + {}", h.hp[2], h.hp[1], h.hp[0])
}

fn t_label(ts: &[u32]) -> String {
    match ts {
        [t] => format!("t = {t}"),
        _ => format!("t = {}..{}", ts[0], ts[ts.len() - 1]),
    }
}

pub fn hilbert(c: &Common) -> Result<Rendered, Failure> {
    let ts = c.ts(0..=4);
    let items = c
        .ds()?
        .into_iter()
        .map(|d| hilbert_report(d, ts.iter().copied()))
        .collect::<Result<Vec<_>, _>>()?;
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
    let text = match c.format {
        Format::Json => json(&items, c.is_range()),
        Format::Text => {
            let mut s = String::new();
            for h in &items {
                let sf = &h.surface;
                writeln!(s, "d = {}", h.d).unwrap();
                writeln!(s, "HF, {}: {}", t_label(&h.t), join(&h.hf)).unwrap();
                writeln!(s, "HS(z) = ({}) / (1 - z)^3", h.hs_numerator).unwrap();
                writeln!(s, "HP(t) = {}", hp_text(h)).unwrap();
                writeln!(
                    s,
                    "surface: degree {}, codimension {}, CM type {}, h {}, regularity {}, {}",
                    sf.degree,
                    sf.codim,
                    sf.cm_type,
                    sf.h,
                    sf.regularity,
                    if sf.gorenstein { "Gorenstein" } else { "not Gorenstein" }
                )
                .unwrap();
            }
            s
        }
        Format::Csv => csv(
            &["d", "t", "hf"],
            items.iter().flat_map(|h| {
                h.t.iter()
                    .zip(&h.hf)
                    .map(|(t, v)| vec![h.d.to_string(), t.to_string(), v.to_string()])
            }),
        ),
        Format::Latex => {
            let mut s = String::new();
            for h in &items {
                writeln!(s, "% d = {}", h.d).unwrap();
                let cols = "c".repeat(h.t.len());
                writeln!(s, "\\begin{{array}}{{l|{cols}}}").unwrap();
                let ts: Vec<String> = h.t.iter().map(u32::to_string).collect();
                writeln!(s, "t & {}\\\\\n\\hline", ts.join(" & ")).unwrap();
                let hf: Vec<String> = h.hf.iter().map(u64::to_string).collect();
                writeln!(s, "\\mathrm{{HF}} & {}\\\\", hf.join(" & ")).unwrap();
                s.push_str("\\end{array}\n");
                writeln!(
                    s,
                    "$$\\mathrm{{HS}}(z) = \\frac{{{}}}{{(1-z)^3}}$$",
                    h.hs_numerator.to_string().replace("z^2", "z^{2}")
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Rendered::ok(text))
}

pub fn wlp(c: &Common, strategy: Strategy) -> Result<Rendered, Failure> {
    let mut items: Vec<WlpReport> = Vec::new();
    for d in c.ds()? {
        items.push(wlp_failure_check_with(&c.params(d)?, c.seed, c.trials, strategy)?);
    }
    let failures = items
        .iter()
        .filter(|r| !r.certified)
        .map(|r| format!("d={}: wlp_certificate", r.d))
        .collect();
    let text = match c.format {
        Format::Json => json(&items, c.is_range()),
        Format::Csv => csv(
            &[
                "d",
                "a",
                "mu",
                "bound_ok",
                "source_dim",
                "target_dim",
                "observed_rank",
                "witness_verified",
                "certified",
            ],
            items.iter().map(|r| {
                vec![
                    r.d.to_string(),
                    r.a.to_string(),
                    r.mu.to_string(),
                    r.bound_ok.to_string(),
                    r.source_dim.to_string(),
                    r.target_dim.to_string(),
                    r.observed_rank.to_string(),
                    r.witness_verified.to_string(),
                    r.certified.to_string(),
                ]
            }),
        ),
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for r in &items {
                writeln!(s, "d = {}, a = {}", r.d, r.a).unwrap();
                writeln!(s, "  mu = {} <= 2d+1 = {}: {}", r.mu, 2 * r.d + 1, r.bound_ok).unwrap();
                writeln!(
                    s,
                    "  x L : R_{} -> (R/I)_{}  ({} -> {})",
                    2 * r.d - 1,
                    2 * r.d,
                    r.source_dim,
                    r.target_dim
                )
                .unwrap();
                for t in &r.trial_results {
                    writeln!(s, "  L = {}x0 + {}x1 + {}x2: rank {}", t.l[0], t.l[1], t.l[2], t.rank).unwrap();
                }
                writeln!(s, "  witness F = prod g(L) verified: {}", r.witness_verified).unwrap();
                writeln!(
                    s,
                    "  {}",
                    if r.certified {
                        "Togliatti system: certified"
                    } else {
                        "Togliatti system: NOT certified"
                    }
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Rendered { text, failures })
}

#[derive(Serialize)]
struct SyzygyOut {
    d: u32,
    space: Space,
    count: usize,
    binomials: usize,
    trinomials: usize,
    relations: Vec<QuadricRelation>,
}

pub fn syzygy(c: &Common, kernel: bool, all_pairs: bool) -> Result<Rendered, Failure> {
    let mut items = Vec::new();
    let mut failures = Vec::new();
    for d in c.ds()? {
        let relations = if all_pairs {
            kernel_quadrics_all_pairs(d)?
        } else if kernel {
            kernel_quadrics(d)?
        } else {
            surface_generators(d)?
        };
        for r in relations.iter().filter(|r| !verify_relation(r, d)) {
            failures.push(format!("d={d}: relation {r} does not vanish"));
        }
        let trinomials = relations.iter().filter(|r| r.kind == RelationKind::Trinomial).count();
        items.push(SyzygyOut {
            d,
            space: if kernel || all_pairs { Space::Z } else { Space::W },
            count: relations.len(),
            binomials: relations.len() - trinomials,
            trinomials,
            relations,
        });
    }
    let text = match c.format {
        Format::Json => json(&items, c.is_range()),
        Format::Text => {
            let mut s = String::new();
            for o in &items {
                writeln!(
                    s,
                    "# d={}: {} binomials + {} trinomials",
                    o.d, o.binomials, o.trinomials
                )
                .unwrap();
                for r in &o.relations {
                    writeln!(s, "{r}").unwrap();
                }
            }
            s
        }
        Format::Csv => csv(
            &["d", "kind", "relation"],
            items.iter().flat_map(|o| {
                o.relations.iter().map(|r| {
                    let kind = serde_json::to_value(r.kind).unwrap();
                    vec![o.d.to_string(), kind.as_str().unwrap().to_string(), r.to_string()]
                })
            }),
        ),
        Format::Latex => {
            let mut s = String::new();
            for o in &items {
                writeln!(
                    s,
                    "% d={}: {} binomials + {} trinomials",
                    o.d, o.binomials, o.trinomials
                )
                .unwrap();
                s.push_str(&relations_to_latex(&o.relations));
            }
            s
        }
    };
    Ok(Rendered { text, failures })
}

fn plain_grid(r: &BettiReport) -> String {
    let t = &r.table;
    let width = (0..=t.codim)
        .map(|i| if i == 0 { 1 } else { t.rank(i).to_string().len() })
        .max()
        .unwrap_or(1)
        .max(2);
    let mut s = String::new();
    let cell = |v: String| format!("{v:>width$}");
    let header: Vec<String> = (0..=t.codim).map(|i| cell(i.to_string())).collect();
    writeln!(s, "{:>7} {}", "", header.join(" ")).unwrap();
    let totals: Vec<String> = (0..=t.codim)
        .map(|i| cell(if i == 0 { "1".into() } else { t.rank(i).to_string() }))
        .collect();
    writeln!(s, "{:>7} {}", "total:", totals.join(" ")).unwrap();
    for l in 0..=2u32 {
        let row: Vec<String> = (0..=t.codim)
            .map(|i| {
                let v = if i == 0 {
                    u128::from(l == 0)
                } else if l == 0 {
                    0
                } else {
                    t.get(i, l)
                };
                cell(if v == 0 { ".".into() } else { v.to_string() })
            })
            .collect();
        writeln!(s, "{:>7} {}", format!("{l}:"), row.join(" ")).unwrap();
    }
    s
}

fn plain_resolution(latex: &str) -> String {
    let mut s = latex.replace(" \\to ", " -> ").replace(" \\oplus ", " + ");
    s = s.replace("^{", "^").replace('}', "");
    s
}

pub fn betti(c: &Common) -> Result<Rendered, Failure> {
    let items = c
        .ds()?
        .into_iter()
        .map(betti_structural_checks)
        .collect::<Result<Vec<_>, _>>()?;
    let failures = items
        .iter()
        .flat_map(|r| {
            r.checks
                .iter()
                .filter(|ch| !ch.passed)
                .map(move |ch| format!("d={}: {}", r.table.d, ch.name))
        })
        .collect();
    let text = match c.format {
        Format::Json => json(&items, c.is_range()),
        Format::Text => {
            let mut s = String::new();
            for r in &items {
                writeln!(s, "d = {} (C = {}, h = {})", r.table.d, r.table.codim, r.table.h).unwrap();
                s.push_str(&plain_grid(r));
                writeln!(s, "{}", plain_resolution(&r.resolution)).unwrap();
                for ch in &r.checks {
                    writeln!(
                        s,
                        "  [{}] {}: {}",
                        if ch.passed { "ok" } else { "FAIL" },
                        ch.name,
                        ch.detail
                    )
                    .unwrap();
                }
            }
            s
        }
        Format::Csv => csv(
            &["d", "i", "l", "degree", "value"],
            items.iter().flat_map(|r| {
                (1..=r.table.codim).flat_map(move |i| {
                    (1..=2u32).map(move |l| {
                        vec![
                            r.table.d.to_string(),
                            i.to_string(),
                            l.to_string(),
                            (i + l).to_string(),
                            r.table.get(i, l).to_string(),
                        ]
                    })
                })
            }),
        ),
        Format::Latex => {
            let mut s = String::new();
            for r in &items {
                writeln!(s, "% d = {}", r.table.d).unwrap();
                writeln!(s, "$${}$$", r.table.grid_latex()).unwrap();
                writeln!(s, "$${}$$", r.resolution).unwrap();
            }
            s
        }
    };
    Ok(Rendered { text, failures })
}

pub fn verify(c: &Common, ds: &[u32], strategy: Strategy) -> Result<Rendered, Failure> {
    let report = verify_range(ds, c.a, c.seed, c.trials, strategy)?;
    let failures = report
        .failures()
        .into_iter()
        .map(|(d, name)| format!("d={d}: {name}"))
        .collect();
    let text = match c.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Csv => csv(
            &["d", "check", "passed", "detail"],
            report.results.iter().flat_map(|r| {
                r.checks.iter().map(|ch| {
                    vec![
                        r.d.to_string(),
                        ch.name.clone(),
                        ch.passed.to_string(),
                        ch.detail.clone(),
                    ]
                })
            }),
        ),
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for r in &report.results {
                writeln!(
                    s,
                    "d = {} (a = {}): {}",
                    r.d,
                    r.a,
                    if r.passed { "PASS" } else { "FAIL" }
                )
                .unwrap();
                for ch in &r.checks {
                    writeln!(
                        s,
                        "  [{}] {}: {}",
                        if ch.passed { "ok" } else { "FAIL" },
                        ch.name,
                        ch.detail
                    )
                    .unwrap();
                }
            }
            writeln!(
                s,
                "{} (seed {}, {} trials)",
                if report.passed {
                    "all checks passed"
                } else {
                    "some checks failed"
                },
                report.seed,
                report.trials
            )
            .unwrap();
            s
        }
    };
    Ok(Rendered { text, failures })
}
