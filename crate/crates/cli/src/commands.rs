use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{Context as _, Result};
use hurwitz_core::chars::reproduce::{reproduce_h0, reproduce_sym, TableComparison};
use hurwitz_core::chars::table::verify_character_table;
use hurwitz_core::chars::{Curve, TableId};
use hurwitz_core::field::alpha_constant;
use hurwitz_core::group::classes::NORMALIZER_ORDERS;
use hurwitz_core::group::presentation::presentation_report;
use hurwitz_core::group::{Hurwitz, NUM_CLASSES};
use hurwitz_core::ideal::{build_quadrics, validate_basis, IntertwinerCache, QuadricBasis, QuadricResult, WpOptions};
use hurwitz_core::rep::checks::{outer_automorphism_check, verify_char_polys};
use hurwitz_core::verify::{verify, VerifyOptions};
use hurwitz_core::Context;
use serde_json::json;

use crate::config::PipelineConfig;
use crate::emit::{csv_rows, text_table, Artifact, Section};

#[derive(Default)]
pub struct Outcome {
    pub sections: Vec<Section>,
    pub artifacts: Vec<Artifact>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.passed)
    }

    fn extend(&mut self, other: Outcome) {
        self.sections.extend(other.sections);
        self.artifacts.extend(other.artifacts);
    }
}

fn timed<T>(what: &str, f: impl FnOnce() -> T) -> T {
    let t = Instant::now();
    let out = f();
    eprintln!("{what}: {:.1?}", t.elapsed());
    out
}

fn table_section(t: &TableComparison) -> Section {
    let mut header = vec!["row".to_string()];
    header.extend(t.degrees.iter().map(|d| format!("d={d}")));
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let rows: Vec<Vec<String>> = (0..NUM_CLASSES)
        .map(|i| {
            let mut r = vec![format!("a_{}", i + 1)];
            r.extend(t.computed.iter().map(|col| col[i].to_string()));
            r
        })
        .collect();
    let mut text = text_table(&header_refs, &rows);
    for m in &t.mismatches {
        text.push_str(&format!("mismatch: {m}\n"));
    }
    Section {
        key: t.key.clone(),
        caption: t.caption.clone(),
        passed: t.passed,
        json: serde_json::to_value(t).expect("serializable"),
        csv: csv_rows(&header_refs, &rows),
        text,
    }
}

pub fn group(h: &Hurwitz) -> Outcome {
    let records = h.classes.records(&h.table);
    let header = ["class", "representative", "size", "normalizer", "published", "status"];
    let mut all_ok = h.table.order() == 1344 && records.len() == NUM_CLASSES;
    let rows: Vec<Vec<String>> = records
        .iter()
        .zip(NORMALIZER_ORDERS)
        .map(|(r, want)| {
            let ok = r.normalizer_order == want;
            all_ok &= ok;
            vec![
                r.label.clone(),
                r.representative.clone(),
                r.size.to_string(),
                r.normalizer_order.to_string(),
                want.to_string(),
                if ok { "ok" } else { "mismatch" }.into(),
            ]
        })
        .collect();
    let mut text = format!("order {}, {} classes\n", h.table.order(), records.len());
    text.push_str(&text_table(&header, &rows));
    let classes = Section {
        key: "classes".into(),
        caption: "Representatives of the conjugacy classes".into(),
        passed: all_ok,
        json: json!({ "order": h.table.order(), "classes": records }),
        csv: csv_rows(&header, &rows),
        text,
    };

    let pres = presentation_report(&h.table);
    let mut rows: Vec<Vec<String>> = pres
        .relators
        .iter()
        .map(|(w, ok)| vec![w.clone(), if *ok { "1" } else { "not 1" }.into()])
        .collect();
    rows.push(vec!["order of P^3 Q".into(), pres.order_p3q.to_string()]);
    rows.push(vec!["order of P^2 Q".into(), pres.order_p2q.to_string()]);
    rows.push(vec!["order of (P^2 Q)^2 P^3 Q".into(), pres.order_triple_product.to_string()]);
    let header = ["word", "value"];
    let presentation = Section {
        key: "presentation".into(),
        caption: "Presentation of G".into(),
        passed: pres.passed(),
        json: serde_json::to_value(&pres).expect("serializable"),
        csv: csv_rows(&header, &rows),
        text: text_table(&header, &rows),
    };
    Outcome {
        sections: vec![classes, presentation],
        artifacts: vec![],
    }
}

pub fn chartab(ctx: &Context) -> Result<Outcome> {
    let cls = &ctx.hurwitz.classes;
    let report = verify_character_table(&ctx.tbl, cls);
    let mut header = vec!["chi".to_string()];
    header.extend((0..NUM_CLASSES).map(|c| cls.label(c).to_string()));
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    let rows: Vec<Vec<String>> = (1..=NUM_CLASSES)
        .map(|i| {
            let mut r = vec![format!("chi_{i}")];
            r.extend((0..NUM_CLASSES).map(|c| ctx.tbl.chi(i)[c].to_string()));
            r
        })
        .collect();
    let mut text = text_table(&header_refs, &rows);
    text.push_str(&format!("{} checks, x = exp(2 pi i / 21)\n", report.checks));
    for f in &report.failures {
        text.push_str(&format!("failure: {f}\n"));
    }
    let table = Section {
        key: "character_table".into(),
        caption: "Character Table of G".into(),
        passed: report.passed(),
        json: json!({ "rows": rows, "report": report }),
        csv: csv_rows(&header_refs, &rows),
        text,
    };

    let polys = verify_char_polys(&ctx.rep, &ctx.tbl, cls, ctx.h7b())?;
    let header = ["module", "route", "status"];
    let mut rows: Vec<Vec<String>> = polys
        .rows
        .iter()
        .map(|r| vec![r.module.clone(), r.route.clone(), if r.passed { "ok" } else { "mismatch" }.into()])
        .collect();
    rows.push(vec!["det h_7B".into(), "matrix".into(), if polys.det_h7b_is_one { "1" } else { "not 1" }.into()]);
    let char_polys = Section {
        key: "char_polys".into(),
        caption: "Characteristic polynomials of h_7B".into(),
        passed: polys.passed(),
        json: serde_json::to_value(&polys).expect("serializable"),
        csv: csv_rows(&header, &rows),
        text: text_table(&header, &rows),
    };

    let outer = outer_automorphism_check(&ctx.rep, ctx.table());
    let show = |x: Option<usize>| x.map_or("none".into(), |g| format!("g{g}"));
    let rows = vec![
        vec!["E P E^-1".into(), show(outer.p_image)],
        vec!["E Q E^-1".into(), show(outer.q_image)],
        vec!["outer".into(), outer.non_inner.to_string()],
        vec!["E^2 in image".into(), outer.e_squared_in_image.to_string()],
    ];
    let header = ["check", "value"];
    let outer_sec = Section {
        key: "outer_automorphism".into(),
        caption: "Outer automorphism E".into(),
        passed: outer.passed(),
        json: serde_json::to_value(&outer).expect("serializable"),
        csv: csv_rows(&header, &rows),
        text: text_table(&header, &rows),
    };
    Ok(Outcome {
        sections: vec![table, char_polys, outer_sec],
        artifacts: vec![],
    })
}

pub fn decompose(ctx: &Context, degrees: &[u32]) -> Result<Outcome> {
    let mut out = Outcome::default();
    for id in [TableId::SymW9W2, TableId::SymW9W3, TableId::SymW9, TableId::SymW2, TableId::SymW3] {
        let t = reproduce_sym(id, degrees, &ctx.tbl, &ctx.hurwitz.classes)?;
        out.sections.push(table_section(&t));
    }
    Ok(out)
}

pub fn h0(ctx: &Context, curves: &[Curve], degrees: &[u32]) -> Result<Outcome> {
    let mut out = Outcome::default();
    for &c in curves {
        let t = reproduce_h0(c, degrees, &ctx.tbl, &ctx.hurwitz.classes)?;
        out.sections.push(table_section(&t));
    }
    Ok(out)
}

fn wp_options(cfg: &PipelineConfig) -> WpOptions {
    WpOptions {
        cache: cfg.cache_dir.as_ref().map(IntertwinerCache::new),
        primes: cfg.primes.clone(),
        ..WpOptions::default()
    }
}

pub fn quadrics(ctx: &Context, cfg: &PipelineConfig) -> Result<(Outcome, QuadricBasis)> {
    let r: QuadricResult = timed("quadrics", || build_quadrics(ctx, &wp_options(cfg)))?;
    for wp in [&r.wp10, &r.wp11] {
        eprintln!(
            "intertwiner {} ({}, {}): {}",
            wp.target,
            wp.intertwiner.convention.label(),
            wp.intertwiner.seed.descriptor(),
            if wp.from_cache { "loaded from cache" } else { "computed" }
        );
    }
    let mut out = Outcome::default();

    let eq = &r.fixed.equation;
    let eq_ok = eq.linear.is_zero() && eq.monic_constant == *alpha_constant();
    let rows = vec![
        vec!["leading".into(), eq.leading.to_string()],
        vec!["linear".into(), eq.linear.to_string()],
        vec!["constant".into(), eq.constant.to_string()],
        vec!["monic constant".into(), eq.monic_constant.to_string()],
        vec!["published constant".into(), alpha_constant().to_string()],
    ];
    let header = ["term", "value"];
    let eq_json = eq.to_json();
    out.sections.push(Section {
        key: "alpha_equation".into(),
        caption: "Fixed-point equation for alpha".into(),
        passed: eq_ok,
        json: eq_json.clone(),
        csv: csv_rows(&header, &rows),
        text: text_table(&header, &rows),
    });

    let report = timed("validate", || validate_basis(ctx, &r.basis, r.point(), &cfg.primes))?;
    let header = ["check", "value"];
    let mut rows = vec![
        vec!["count".into(), r.basis.len().to_string()],
        vec![
            "part sizes".into(),
            report.counts.iter().map(|(i, n)| format!("D{i}:{n}")).collect::<Vec<_>>().join(" "),
        ],
        vec!["rank".into(), report.rank.rank.to_string()],
        vec!["vanish at p".into(), report.vanish_at_p.to_string()],
        vec![
            "vanish on orbit".into(),
            format!("{} ({} points)", report.orbit_vanish, report.orbit_points),
        ],
    ];
    for m in &report.modular {
        rows.push(vec![format!("mod {}: stable rank", m.p), m.stable_rank.to_string()]);
        rows.push(vec![format!("mod {}: isotypic profile", m.p), format!("{:?}", m.profile)]);
        rows.push(vec![format!("mod {}: parts stable and isotypic", m.p), (m.parts_stable && m.parts_isotypic).to_string()]);
    }
    for wp in [&r.wp10, &r.wp11] {
        for (name, dims) in &wp.module_dims {
            let d: Vec<String> = dims.iter().map(|x| x.rank.map_or("-".into(), |r| r.to_string())).collect();
            rows.push(vec![format!("{}: module of {name}", wp.target), d.join(" ")]);
        }
    }
    let mut text = text_table(&header, &rows);
    for f in &report.failures {
        text.push_str(&format!("failure: {f}\n"));
    }
    let attempts: Vec<_> = [&r.wp10, &r.wp11]
        .iter()
        .map(|wp| {
            json!({
                "target": wp.target.to_string(),
                "convention": wp.intertwiner.convention.label(),
                "seed": wp.intertwiner.seed.descriptor(),
                "module_dims": wp.module_dims,
                "attempts": wp.attempts.iter().map(|a| json!({
                    "convention": a.convention.label(),
                    "seed": a.seed,
                    "outcome": a.outcome,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    out.sections.push(Section {
        key: "quadric_basis".into(),
        caption: "The union of the sets of quadrics".into(),
        passed: report.passed,
        json: json!({ "report": report, "intertwiners": attempts }),
        csv: csv_rows(&header, &rows),
        text,
    });

    out.artifacts.push(Artifact {
        name: "quadrics.txt".into(),
        contents: r.basis.to_text(),
    });
    out.artifacts.push(Artifact {
        name: "alpha_equation.json".into(),
        contents: serde_json::to_string_pretty(&eq_json).expect("serializable") + "\n",
    });
    out.artifacts.push(Artifact {
        name: "point.txt".into(),
        contents: r.fixed.point.to_lines().join("\n") + "\n",
    });
    Ok((out, r.basis))
}

pub fn load_quadrics(path: &Path) -> Result<QuadricBasis> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    QuadricBasis::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn verify_section(ctx: &Context, basis: &QuadricBasis, cfg: &PipelineConfig) -> Result<Outcome> {
    let opts = VerifyOptions {
        primes: cfg.primes.clone(),
        exact: cfg.exact,
    };
    let report = timed("verify", || verify(ctx, basis, &opts))?;
    let header = ["W_i", "j", "dim", "target", "multiplicity", "status"];
    let rows: Vec<Vec<String>> = report
        .cells
        .iter()
        .map(|c| {
            let dims: Vec<String> = c.per_prime.iter().map(|r| r.rank.map_or("-".into(), |d| d.to_string())).collect();
            vec![
                format!("W{}", c.i),
                c.j.map_or("-".into(), |j| j.to_string()),
                dims.join("/"),
                c.target.to_string(),
                c.multiplicity.map_or("-".into(), |m| m.to_string()),
                if c.passed { "ok" } else { "mismatch" }.into(),
            ]
        })
        .collect();
    let mut text = format!(
        "quadrics sha256 {}\nmode {}, primes {:?}\ntotal rank {} (expected {}, {} generators)\n",
        report.quadrics_sha256,
        report.mode,
        report.primes,
        report.total_rank.rank,
        report.expected_rank,
        report.generators
    );
    text.push_str(&text_table(&header, &rows));
    text.push_str(&format!("sum of multiplicity x degree: {}\n", report.weighted_sum));
    text.push_str(&report.invariant_lines());
    for n in &report.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    for f in &report.failures {
        text.push_str(&format!("failure: {f}\n"));
    }
    Ok(Outcome {
        sections: vec![Section {
            key: "theorem".into(),
            caption: "Generators for I_{X_1}(3)".into(),
            passed: report.passed,
            json: serde_json::to_value(&report).expect("serializable"),
            csv: csv_rows(&header, &rows),
            text,
        }],
        artifacts: vec![],
    })
}

pub fn verify_cmd(ctx: &Context, file: Option<&Path>, cfg: &PipelineConfig) -> Result<Outcome> {
    match file {
        Some(path) => verify_section(ctx, &load_quadrics(path)?, cfg),
        None => {
            let (mut out, basis) = quadrics(ctx, cfg)?;
            out.extend(verify_section(ctx, &basis, cfg)?);
            Ok(out)
        }
    }
}

pub fn all(ctx: &Context, cfg: &PipelineConfig) -> Result<Outcome> {
    let mut out = group(&ctx.hurwitz);
    out.extend(chartab(ctx)?);
    out.extend(decompose(ctx, &(0..=10).collect::<Vec<_>>())?);
    out.extend(h0(ctx, &[Curve::X1, Curve::X2], &(1..=20).collect::<Vec<_>>())?);
    let (q, basis) = quadrics(ctx, cfg)?;
    out.extend(q);
    out.extend(verify_section(ctx, &basis, cfg)?);
    Ok(out)
}
