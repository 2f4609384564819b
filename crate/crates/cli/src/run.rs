//! Executes a [`JobSpec`] and assembles the versioned report.

use serde_json::{json, Map, Value};
use toral::congruence::{
    bounded_catalog, explore_class, min_gens_unbounded_ideal, moves_from_columns, BoundedClassCatalog,
    Certificate, ClassReport, ExponentVector, MonomialIdealSet,
};
use toral::ideals::{block_decompositions, characters_for_decomposition, toral_components, toral_filter};
use toral::lattice::{characters_extending_trivial, hnf, quotient_invariants, saturation, snf, LatticeBasis};
use toral::series::{solve_class, verify_solution, SeriesSolution};
use toral::{Int, IntMat, Rational};

use crate::job::{as_two_by_two, Command, Format, JobSpec};
use crate::render::render_ascii;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    Incomplete,
    Error,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Complete => "complete",
            Status::Incomplete => "incomplete",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Complete => 0,
            Status::Error => 1,
            Status::Incomplete => 2,
        }
    }
}

/// A finished job. The payload holds no timing, so equal jobs give
/// byte-identical output.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub status: Status,
    pub payload: Value,
    /// ASCII picture of the classes, when requested and available.
    pub rendering: Option<String>,
    format: Format,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.payload).expect("serializable") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut payload = self.payload.clone();
        if let Value::Object(map) = &mut payload {
            map.shift_remove("rendering");
        }
        write_text(&mut out, &payload, 0);
        if let Some(r) = &self.rendering {
            out.push('\n');
            out.push_str(r);
        }
        out
    }

    /// The report in the job's output format.
    pub fn render(&self) -> String {
        match self.format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

fn write_text(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_inline(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write_text(out, x, indent + 1);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_inline(x) {
                    out.push_str(&format!("{pad}- {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write_text(out, x, indent + 1);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.len() <= 16 && items.iter().all(|x| !x.is_object() && inline(x).len() <= 40),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

pub(crate) fn int(x: &Int) -> Value {
    Value::Number(x.to_string().parse().expect("integer literal"))
}

fn ints(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn matrix(m: &IntMat) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints(r)).collect())
}

fn point(u: &ExponentVector) -> Value {
    json!(u.coords())
}

fn points(us: &[ExponentVector]) -> Value {
    Value::Array(us.iter().map(point).collect())
}

fn fraction(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn error_value(e: &toral::Error) -> Value {
    json!({ "code": e.code(), "message": e.to_string() })
}

fn certificate(c: Certificate) -> Value {
    match c {
        Certificate::CompleteAtDegree(d) => json!({ "kind": "complete", "degree": d }),
        Certificate::Incomplete { max_degree, node_cap_hit } => {
            json!({ "kind": "incomplete", "max_degree": max_degree, "node_cap_hit": node_cap_hit })
        }
    }
}

fn status_of(c: &BoundedClassCatalog) -> Status {
    if c.is_complete() {
        Status::Complete
    } else {
        Status::Incomplete
    }
}

fn characters_value(chars: &[toral::lattice::PartialCharacter]) -> Value {
    Value::Array(
        chars
            .iter()
            .enumerate()
            .map(|(i, rho)| {
                json!({
                    "index": i,
                    "values": rho.values().iter().map(|v| json!([v.numerator(), v.order()])).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

struct Outcome {
    status: Status,
    results: Value,
    rendering: Option<String>,
}

fn catalog_for(job: &JobSpec) -> toral::Result<BoundedClassCatalog> {
    let moves = moves_from_columns(&job.matrix)?;
    let k = job.options.power.map(|e| MonomialIdealSet::pure_powers(job.matrix.rows(), e));
    bounded_catalog(&moves, k.as_ref(), job.options.budget, job.options.node_cap)
}

fn subgraphs(job: &JobSpec) -> toral::Result<Outcome> {
    let catalog = catalog_for(job)?;
    let classes: Vec<Value> = catalog
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "index": i,
                "representative": point(&c.representative),
                "size": c.len(),
                "max_degree": c.max_degree(),
                "elements": points(&c.elements),
            })
        })
        .collect();
    let gens = match catalog.is_complete() {
        true => points(min_gens_unbounded_ideal(&catalog)?.generators()),
        false => Value::Null,
    };
    let rendering = job.options.render.then(|| render_ascii(&catalog));
    Ok(Outcome {
        status: status_of(&catalog),
        results: json!({
            "dimension": catalog.dim(),
            "certificate": certificate(catalog.certificate()),
            "class_count": catalog.classes().len(),
            "sizes": catalog.sizes(),
            "bounded_classes": classes,
            "unbounded_min_gens": gens,
        }),
        rendering,
    })
}

fn bounded_count(job: &JobSpec) -> toral::Result<Outcome> {
    let catalog = catalog_for(job)?;
    let mut results = Map::new();
    results.insert("count".into(), json!(catalog.classes().len()));
    results.insert("certificate".into(), certificate(catalog.certificate()));
    if let Some([a, b, c, d]) = as_two_by_two(&job.matrix) {
        if job.options.power.is_none() && &a * &d != &b * &c {
            results.insert("min_ad_bc".into(), int(&(&a * &d).min(&b * &c)));
        }
    }
    let rendering = job.options.render.then(|| render_ascii(&catalog));
    Ok(Outcome { status: status_of(&catalog), results: Value::Object(results), rendering })
}

fn verify_2x2(job: &JobSpec) -> toral::Result<Outcome> {
    let [a, b, c, d] = as_two_by_two(&job.matrix).expect("validated");
    let small = |x: &Int| i64::try_from(x).map_err(|_| toral::Error::Overflow(x.clone()));
    let (a, b, c, d) = (small(&a)?, small(&b)?, small(&c)?, small(&d)?);
    let count = toral::congruence::bounded_count_2x2(a, b, c, d)?;
    let ok = toral::congruence::verify_representatives_2x2(a, b, c, d)?;
    let expected = (a * d).min(b * c);
    let region = if a * d > b * c { json!({ "s_below": b, "t_below": c }) } else { json!({ "s_below": a, "t_below": d }) };
    let holds = ok && count as i64 == expected;
    Ok(Outcome {
        status: if holds { Status::Complete } else { Status::Error },
        results: json!({
            "entries": [a, b, c, d],
            "count": count,
            "expected": expected,
            "representative_region": region,
            "each_class_meets_region_once": ok,
            "law_holds": holds,
        }),
        rendering: None,
    })
}

fn decompose(job: &JobSpec) -> toral::Result<Outcome> {
    let b = &job.matrix;
    let mut out = Vec::new();
    for dec in block_decompositions(b)? {
        let chars = if toral_filter(&dec) { Some(characters_for_decomposition(b, &dec)?.len()) } else { None };
        out.push(json!({
            "q": dec.q(),
            "p": dec.p(),
            "rows_m": dec.rows_m,
            "cols_m": dec.cols_m,
            "j": dec.j,
            "m_block": matrix(&dec.m_block),
            "status": dec.status().label(),
            "characters": chars,
        }));
    }
    Ok(Outcome {
        status: Status::Complete,
        results: json!({ "generators": toral::ideals::lattice_basis_ideal(b)?.iter().map(ToString::to_string).collect::<Vec<_>>(), "decompositions": out }),
        rendering: None,
    })
}

fn components(job: &JobSpec) -> toral::Result<Outcome> {
    let b = &job.matrix;
    let o = &job.options;
    let mut status = Status::Complete;
    let mut out = Vec::new();
    let mut index_in_dec = 0usize;
    let mut last_rows: Option<Vec<usize>> = None;
    for attempt in toral_components(b, o.power, o.budget, o.node_cap)? {
        let dec = &attempt.decomposition;
        if last_rows.as_ref() != Some(&dec.rows_m) {
            index_in_dec = 0;
            last_rows = Some(dec.rows_m.clone());
        }
        let mut entry = Map::new();
        entry.insert("q".into(), json!(dec.q()));
        entry.insert("rows_m".into(), json!(dec.rows_m));
        entry.insert("cols_m".into(), json!(dec.cols_m));
        entry.insert("j".into(), json!(dec.j));
        entry.insert("m_block".into(), matrix(&dec.m_block));
        entry.insert(
            "character".into(),
            json!({
                "index": index_in_dec,
                "lattice_basis": attempt.character.domain().columns().iter().map(|c| ints(c)).collect::<Vec<_>>(),
                "values": attempt.character.values().iter().map(|v| json!([v.numerator(), v.order()])).collect::<Vec<_>>(),
            }),
        );
        index_in_dec += 1;
        match &attempt.outcome {
            Ok(c) => {
                entry.insert("status".into(), json!("complete"));
                entry.insert("toral".into(), json!(c.toral));
                entry.insert("power".into(), json!(o.power));
                entry.insert("certificate_degree".into(), json!(c.certificate_degree));
                entry.insert("u_min_gens".into(), points(c.u_min_gens.generators()));
            }
            Err(e @ toral::Error::IncompleteCatalog { .. }) => {
                status = Status::Incomplete;
                entry.insert("status".into(), json!("incomplete"));
                entry.insert("error".into(), error_value(e));
            }
            Err(e) => return Err(e.clone()),
        }
        out.push(Value::Object(entry));
    }
    Ok(Outcome { status, results: json!({ "components": out }), rendering: None })
}

fn solution_value(m: &IntMat, g: &SeriesSolution) -> toral::Result<Value> {
    let v = verify_solution(m, g)?;
    Ok(json!({
        "base_point": point(g.base_point()),
        "truncation": g.truncation(),
        "terms": g.len(),
        "coefficients": g.terms().into_iter().map(|(u, c)| json!({ "exponent": point(u), "coefficient": fraction(c) })).collect::<Vec<_>>(),
        "verification": {
            "annihilated": v.annihilated,
            "checked_terms": v.checked_terms,
            "boundary_terms_excluded": v.boundary_terms_excluded,
        },
    }))
}

fn solve(job: &JobSpec) -> toral::Result<Outcome> {
    let m = &job.matrix;
    let catalog = catalog_for(job)?;
    let status = status_of(&catalog);
    let Some(p) = &job.options.point else {
        // one solution per catalogued bounded class; a basis when complete
        let mut sols = Vec::new();
        for cls in catalog.classes() {
            let report = ClassReport::Bounded { elements: cls.elements.clone() };
            sols.push(solution_value(m, &solve_class(&cls.representative, m, &report, None)?)?);
        }
        return Ok(Outcome {
            status,
            results: json!({ "certificate": certificate(catalog.certificate()), "basis": catalog.is_complete(), "solutions": sols }),
            rendering: None,
        });
    };
    let gamma = ExponentVector::new(p.clone());
    let moves = moves_from_columns(m)?;
    let k = job.options.power.map(|e| MonomialIdealSet::pure_powers(m.rows(), e));
    let report = explore_class(&gamma, &moves, k.as_ref(), job.options.node_cap)?;
    let truncation = match &report {
        ClassReport::UnboundedWitness { .. } => Some(match job.options.truncate {
            Some(d) => d,
            None => catalog.certificate_degree().map(|d| d + 2).ok_or(toral::Error::TruncationRequired)?,
        }),
        ClassReport::BudgetExceeded { visited, frontier } => {
            return Err(toral::Error::BudgetExceeded { visited: *visited, frontier: *frontier })
        }
        _ => None,
    };
    let g = solve_class(&gamma, m, &report, truncation)?;
    Ok(Outcome {
        status: Status::Complete,
        results: json!({ "class": if report.is_bounded() { "bounded" } else { "unbounded" }, "solution": solution_value(m, &g)? }),
        rendering: None,
    })
}

fn normal_forms(job: &JobSpec) -> toral::Result<Outcome> {
    let s = snf(&job.matrix);
    let h = hnf(&job.matrix);
    Ok(Outcome {
        status: Status::Complete,
        results: json!({
            "shape": [job.matrix.rows(), job.matrix.cols()],
            "rank": s.rank(),
            "invariant_factors": ints(&s.invariant_factors()),
            "smith": { "u": matrix(&s.u), "s": matrix(&s.s), "v": matrix(&s.v) },
            "hermite": { "h": matrix(&h.h), "u": matrix(&h.u), "pivots": h.pivots },
        }),
        rendering: None,
    })
}

fn characters(job: &JobSpec) -> toral::Result<Outcome> {
    let l = LatticeBasis::new(job.matrix.clone())?;
    let sat = saturation(&l);
    let chars = characters_extending_trivial(&l, &sat)?;
    Ok(Outcome {
        status: Status::Complete,
        results: json!({
            "rank": l.rank(),
            "index": int(&sat.index_of(&l)?),
            "invariants": ints(&quotient_invariants(&l, &sat)?),
            "saturation_basis": sat.columns().iter().map(|c| ints(c)).collect::<Vec<_>>(),
            "characters": characters_value(&chars),
        }),
        rendering: None,
    })
}

fn options_value(job: &JobSpec) -> Value {
    let o = &job.options;
    json!({
        "budget": o.budget,
        "node_cap": o.node_cap,
        "power": o.power,
        "truncate": o.truncate,
        "point": o.point,
    })
}

/// Runs the job. Library errors become an `error` report with exit code 1.
pub fn run(job: &JobSpec) -> Report {
    let result = match job.command {
        Command::Subgraphs => subgraphs(job),
        Command::BoundedCount => bounded_count(job),
        Command::Verify2x2 => verify_2x2(job),
        Command::Decompose => decompose(job),
        Command::Components => components(job),
        Command::Solve => solve(job),
        Command::Snf => normal_forms(job),
        Command::Characters => characters(job),
    };
    let mut payload = Map::new();
    payload.insert("schema_version".into(), json!(SCHEMA_VERSION));
    payload.insert("command".into(), json!(job.command.name()));
    payload.insert("input".into(), json!({ "matrix": matrix(&job.matrix), "options": options_value(job) }));
    let (status, rendering) = match result {
        Ok(out) => {
            payload.insert("status".into(), json!(out.status.label()));
            payload.insert("results".into(), out.results);
            (out.status, out.rendering)
        }
        Err(e) => {
            payload.insert("status".into(), json!(Status::Error.label()));
            payload.insert("error".into(), error_value(&e));
            (Status::Error, None)
        }
    };
    if let Some(r) = &rendering {
        payload.insert("rendering".into(), json!(r));
    }
    Report { status, payload: Value::Object(payload), rendering, format: job.options.format }
}
