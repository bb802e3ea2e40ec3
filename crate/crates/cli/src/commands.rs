//! Subcommand implementations. Each returns the rendered report and the exit status.

use std::sync::Arc;

use glider_core::glider_ring::serialize::{format_key_capped, irrep_label, key_to_json, parse_key};
use glider_core::glider_ring::{semigroup_orbit, GliderKey, GliderRing, GroupContext};
use glider_core::group_core::subgroup::abelian_invariants;
use glider_core::group_core::{abelianization, load_group, subgroup_lattice, FiniteGroup};
use glider_core::rep_theory::RepData;
use glider_core::structure_theory::decompose::DEFAULT_MULTIPLICATIVITY_SAMPLES;
use glider_core::structure_theory::{
    chain_of_idempotent, class2_linearization, decompose, distinguish, obstruction_probe, r_probe,
    witness_probe, DecomposeOptions, Verdict,
};
use glider_core::{Error, Result};
use serde_json::{json, Value};

use crate::text::{capped_matrix, table, MATRIX_CAP};
use crate::{Cli, Command, Format, GliderOp, Options};

/// Default number of random samples for `probe`.
const DEFAULT_PROBE_SAMPLES: usize = 200;

pub struct Outcome {
    pub output: String,
    pub status: u8,
}

struct Report {
    json: Value,
    text: String,
    status: u8,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let opts = &cli.options;
    let report = match &cli.command {
        Command::Group { group } => group_report(&load(group, opts)?, opts)?,
        Command::Chartable { group } => chartable(group, &load(group, opts)?)?,
        Command::Glider { group, op } => glider(&GliderRing::new(load(group, opts)?)?, op, opts)?,
        Command::Chain { group, key } => chain(&GliderRing::new(load(group, opts)?)?, key, opts)?,
        Command::Decompose { group } => decompose_report(&GliderRing::new(load(group, opts)?)?, opts)?,
        Command::Probe { group } => probe(&GliderRing::new(load(group, opts)?)?, opts)?,
        Command::Distinguish { left, right } => {
            let report = distinguish(&load(left, opts)?, &load(right, opts)?, opts.subgroup_bound)?;
            let text = format!(
                "{left}: order {}, {} classes, {} subgroups\n{right}: order {}, {} classes, {} subgroups\n\
                 representation invariants equal: {}\nglider invariants differ: {}\nglider distinguishable: {}",
                report.left.order,
                report.left.class_count,
                report.left.subgroup_count,
                report.right.order,
                report.right.class_count,
                report.right.subgroup_count,
                report.representation_invariants_equal,
                report.glider_invariants_differ,
                report.glider_distinguishable,
            );
            Report {
                status: if report.glider_distinguishable { 0 } else { 1 },
                json: to_value(&report),
                text,
            }
        }
    };
    let output = match opts.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("reports serialize"),
        Format::Text => report.text,
    };
    Ok(Outcome { output, status: report.status })
}

fn to_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

fn load(spec: &str, opts: &Options) -> Result<FiniteGroup> {
    let group = load_group(spec)?;
    if group.order() > opts.subgroup_bound {
        return Err(Error::BoundExceeded { order: group.order(), bound: opts.subgroup_bound });
    }
    Ok(group)
}

fn names(group: &FiniteGroup, elements: &[usize]) -> Vec<String> {
    elements.iter().map(|&g| group.name(g).to_string()).collect()
}

fn group_report(group: &FiniteGroup, opts: &Options) -> Result<Report> {
    let lattice = subgroup_lattice(group, opts.subgroup_bound)?;
    let ab = abelian_invariants(&abelianization(group).quotient);
    let class_count = group.conjugacy_classes().len();
    let json = json!({
        "order": group.order(),
        "exponent": group.exponent(),
        "abelian": group.is_abelian(),
        "nilpotency_class": group.nilpotency_class(),
        "class_count": class_count,
        "center": names(group, &group.center()),
        "derived_subgroup": names(group, &group.derived_subgroup()),
        "abelianization": ab,
        "subgroup_count": lattice.len(),
        "elements": group.names(),
        "table": group.table_rows(),
    });
    let class = group.nilpotency_class().map_or("not nilpotent".to_string(), |c| c.to_string());
    let header: Vec<String> = group.names().to_vec();
    let text = format!(
        "order {}\nexponent {}\nnilpotency class {class}\nconjugacy classes {class_count}\ncenter {{{}}}\n\
         derived subgroup {{{}}}\nabelianization {:?}\nsubgroups {}\n\n{}",
        group.order(),
        group.exponent(),
        names(group, &group.center()).join(","),
        names(group, &group.derived_subgroup()).join(","),
        ab,
        lattice.len(),
        capped_matrix(&header, |i, j| group.name(group.mul(i, j)).to_string()),
    );
    Ok(Report { json, text, status: 0 })
}

fn chartable(spec: &str, group: &FiniteGroup) -> Result<Report> {
    let rep = RepData::new(group.clone(), group.exponent() as u32)?;
    let reps: Vec<&str> = rep.classes.iter().map(|c| group.name(c[0])).collect();
    let json = json!({
        "conductor": rep.conductor,
        "classes": reps.iter().zip(&rep.class_sizes).map(|(r, s)| json!({"representative": r, "size": s})).collect::<Vec<_>>(),
        "characters": (0..rep.irrep_count()).map(|i| json!({
            "label": irrep_label(&rep, i),
            "degree": rep.dim(i),
            "values": to_value(&rep.characters[i].values),
        })).collect::<Vec<_>>(),
    });
    let mut rows = vec![
        std::iter::once("class".to_string()).chain(reps.iter().map(|s| s.to_string())).collect::<Vec<_>>(),
        std::iter::once("size".to_string()).chain(rep.class_sizes.iter().map(|s| s.to_string())).collect(),
    ];
    for i in 0..rep.irrep_count() {
        rows.push(
            std::iter::once(irrep_label(&rep, i))
                .chain(rep.characters[i].values.iter().map(|v| v.to_string()))
                .collect(),
        );
    }
    let text = format!(
        "character table of {spec} (z = primitive {}-th root of unity)\n{}",
        rep.conductor,
        table(&rows)
    );
    Ok(Report { json, text, status: 0 })
}

fn key_value(rep: &RepData, key: &GliderKey) -> Value {
    json!({ "key": key_to_json(rep, key), "text": format_key_capped(rep, key, usize::MAX) })
}

fn key_text(rep: &RepData, key: &GliderKey) -> String {
    format_key_capped(rep, key, MATRIX_CAP)
}

fn subgroup_context(ring: &GliderRing, generators: &str) -> Result<Arc<GroupContext>> {
    let group = ring.root().group();
    let gens = generators
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| group.index_of(s).ok_or_else(|| Error::Parse(format!("unknown element `{s}`"))))
        .collect::<Result<Vec<_>>>()?;
    ring.context(&group.generate(&gens))
}

fn glider(ring: &GliderRing, op: &GliderOp, opts: &Options) -> Result<Report> {
    let root = ring.root().clone();
    let rep = &root.rep;
    match op {
        GliderOp::Show { key } => {
            let x = parse_key(rep, key)?;
            let idempotent = root.is_idempotent(&x);
            Ok(Report {
                json: json!({ "input": key_value(rep, &x), "idempotent": idempotent, "multiplicities": x.multiplicity_vector(rep) }),
                text: format!("{}\nidempotent: {idempotent}", key_text(rep, &x)),
                status: 0,
            })
        }
        GliderOp::Mul { left, right } => {
            let (x, y) = (parse_key(rep, left)?, parse_key(rep, right)?);
            let p = root.product(&x, &y);
            Ok(Report {
                json: json!({ "left": key_value(rep, &x), "right": key_value(rep, &y), "product": key_value(rep, &p) }),
                text: format!("{} · {} = {}", key_text(rep, &x), key_text(rep, &y), key_text(rep, &p)),
                status: 0,
            })
        }
        GliderOp::Orbit { key } => {
            let x = parse_key(rep, key)?;
            let orbit = semigroup_orbit(&root, &x, opts.max_iter);
            let mut text: Vec<String> =
                orbit.orbit.iter().enumerate().map(|(k, p)| format!("x^{} = {}", k + 1, key_text(rep, p))).collect();
            match (&orbit.idempotent, orbit.idempotent_power) {
                (Some(e), Some(k)) => text.push(format!(
                    "preperiod {}, period {}\nidempotent x^{k} = {}",
                    orbit.preperiod.unwrap_or(0),
                    orbit.period.unwrap_or(0),
                    key_text(rep, e)
                )),
                _ => text.push(format!("unresolved after {} powers", opts.max_iter)),
            }
            Ok(Report {
                json: json!({
                    "input": key_value(rep, &x),
                    "powers": orbit.orbit.iter().map(|p| key_value(rep, p)).collect::<Vec<_>>(),
                    "resolved": orbit.is_resolved(),
                    "preperiod": orbit.preperiod,
                    "period": orbit.period,
                    "idempotent_power": orbit.idempotent_power,
                    "idempotent": orbit.idempotent.as_ref().map(|e| key_value(rep, e)),
                }),
                text: text.join("\n"),
                status: if orbit.is_resolved() { 0 } else { 2 },
            })
        }
        GliderOp::Induce { subgroup, key } => {
            let small = subgroup_context(ring, subgroup)?;
            let x = parse_key(&small.rep, key)?;
            let y = ring.induce(&small, &root, &x)?;
            Ok(Report {
                json: json!({
                    "subgroup": names(root.group(), &small.root_elements),
                    "input": key_value(&small.rep, &x),
                    "induced": key_value(rep, &y),
                }),
                text: format!("Ind {} = {}", key_text(&small.rep, &x), key_text(rep, &y)),
                status: 0,
            })
        }
        GliderOp::Restrict { subgroup, key } => {
            let small = subgroup_context(ring, subgroup)?;
            let x = parse_key(rep, key)?;
            let y = ring.restrict(&root, &small, &x)?;
            Ok(Report {
                json: json!({
                    "subgroup": names(root.group(), &small.root_elements),
                    "input": key_value(rep, &x),
                    "restricted": key_value(&small.rep, &y),
                }),
                text: format!("Res {} = {}", key_text(rep, &x), key_text(&small.rep, &y)),
                status: 0,
            })
        }
    }
}

fn chain(ring: &GliderRing, key: &str, opts: &Options) -> Result<Report> {
    let root = ring.root().clone();
    let x = parse_key(&root.rep, key)?;
    let from_orbit = !root.is_idempotent(&x);
    let start = if from_orbit {
        semigroup_orbit(&root, &x, opts.max_iter).idempotent.ok_or(Error::Unresolved(opts.max_iter))?
    } else {
        x
    };
    let chain = chain_of_idempotent(ring, &root, &start)?;
    let group = root.group();
    let levels: Vec<Value> = chain
        .levels
        .iter()
        .map(|l| {
            json!({
                "order": l.context.order(),
                "elements": names(group, &l.context.root_elements),
                "idempotent": key_value(&l.context.rep, &l.key),
            })
        })
        .collect();
    let mut text = vec![format!("start {}{}", key_text(&root.rep, &start), if from_orbit { " (orbit idempotent)" } else { "" })];
    for (i, l) in chain.levels.iter().enumerate() {
        text.push(format!(
            "H_{i}: order {} {{{}}}  {}",
            l.context.order(),
            names(group, &l.context.root_elements).join(","),
            key_text(&l.context.rep, &l.key)
        ));
    }
    Ok(Report {
        json: json!({
            "start": key_value(&root.rep, &start),
            "from_orbit": from_orbit,
            "levels": levels,
            "terminal": names(group, chain.terminal_elements()),
        }),
        text: text.join("\n"),
        status: 0,
    })
}

fn verdict_status(verdict: Verdict) -> u8 {
    match verdict {
        Verdict::Verified => 0,
        Verdict::Falsified => 1,
        Verdict::Partial | Verdict::Unresolved => 2,
    }
}

fn decompose_report(ring: &GliderRing, opts: &Options) -> Result<Report> {
    let options = DecomposeOptions {
        max_iter: opts.max_iter,
        samples: opts.samples.unwrap_or(DEFAULT_MULTIPLICATIVITY_SAMPLES),
        seed: opts.seed,
        ..DecomposeOptions::default()
    };
    let report = decompose(ring, &options)?;
    let mut text = vec![
        format!("order {} nilpotent {}", report.order, report.nilpotent),
        format!("Sub(G): {} of {} subgroups", report.sub_g.len(), report.subgroup_count),
    ];
    for (entry, eps) in report.sub_g.iter().zip(&report.epsilons) {
        text.push(format!(
            "  |H| = {:<3} |H^ab| = {:<3} chain {:?}  {}  ε terms {}",
            entry.order, entry.abelianization_order, entry.chain_orders, entry.leading_key_text, eps.terms
        ));
    }
    text.push(format!("orthogonal idempotents: {}", report.orthogonal));
    text.push(format!("chain properties: {}", report.chain_properties_hold));
    text.push(format!("dims {} image rank {}", report.dims, report.image_rank));
    text.push(format!(
        "multiplicativity: {}/{} witnesses reach 0 (seed {})",
        report.multiplicativity.iter().filter(|m| m.power.is_some()).count(),
        report.multiplicativity.len(),
        report.seed
    ));
    if report.coverage_caveat {
        text.push("caveat: group is not nilpotent; Sub(G) may be incomplete".into());
    }
    text.push(format!("verdict {}", to_value(&report.verdict).as_str().unwrap_or("?")));
    Ok(Report { status: verdict_status(report.verdict), json: to_value(&report), text: text.join("\n") })
}

fn probe(ring: &GliderRing, opts: &Options) -> Result<Report> {
    let root = ring.root().clone();
    let rep = &root.rep;
    let samples = opts.samples.unwrap_or(DEFAULT_PROBE_SAMPLES);
    let r = r_probe(ring, samples, opts.seed, opts.max_iter)?;
    let obstruction = obstruction_probe(ring, samples, opts.seed, opts.max_iter)?;
    let linearization = class2_linearization(rep);
    let witnesses = witness_probe(ring, samples, opts.seed, opts.max_iter)?;
    let status = if !obstruction.p_unresolved.is_empty() || witnesses.unresolved > 0 {
        2
    } else if !r.nilpotent_iff_trivial || witnesses.failed > 0 {
        1
    } else {
        0
    };
    let lin_json: Vec<Value> = linearization
        .iter()
        .map(|l| json!({ "irrep": irrep_label(rep, l.irrep), "dim": l.dim, "power": l.power }))
        .collect();
    let json = json!({
        "seed": opts.seed,
        "r_probe": {
            "summary": to_value(&r),
            "witnesses": r.witnesses.iter().map(|k| key_value(rep, k)).collect::<Vec<_>>(),
        },
        "obstruction": {
            "summary": to_value(&obstruction),
            "p_unresolved": obstruction.p_unresolved.iter().map(|k| key_value(rep, k)).collect::<Vec<_>>(),
            "e_witnesses": obstruction.e_witnesses.iter().map(|k| key_value(rep, k)).collect::<Vec<_>>(),
        },
        "linearization": lin_json,
        "nilpotency_witnesses": to_value(&witnesses),
    });
    let mut text = vec![
        format!(
            "R probe: {} witnesses of shape ({{1}}, D), nilpotent {}, consistent {}",
            r.witness_count, r.nilpotent, r.nilpotent_iff_trivial
        ),
    ];
    text.extend(r.witnesses.iter().map(|k| format!("  {}", key_text(rep, k))));
    text.push(format!(
        "orbits: {} resolved, {} unresolved, {} idempotents with empty A-part",
        obstruction.resolved,
        obstruction.p_unresolved.len(),
        obstruction.e_witnesses.len()
    ));
    for l in &linearization {
        let power = l.power.map_or("never".to_string(), |n| n.to_string());
        text.push(format!("linearization {} (dim {}): {power}", irrep_label(rep, l.irrep), l.dim));
    }
    text.push(format!(
        "nilpotency witnesses: {} verified, {} failed, {} empty A-part, {} unresolved",
        witnesses.verified, witnesses.failed, witnesses.skipped_empty_a, witnesses.unresolved
    ));
    Ok(Report { json, text: text.join("\n"), status })
}
