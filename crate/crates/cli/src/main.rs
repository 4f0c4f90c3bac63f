//! `parcat`: command-line front end for the parabolic Catalan library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 invalid input, 4 resource guard.

mod args;
mod render;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use parabolic_catalan::demazure::{
    convexity_verdict, convexity_witness, demazure_polynomial, demazure_set, principal_ideal, DEFAULT_BUDGET,
};
use parabolic_catalan::enumeration::{
    count_cnr, count_total, gen_avoiding_ordered_partitions, gen_gapless, gen_generalized_rcd_chains,
    gen_r312_avoiding, gen_rcd_chains, gen_shape_tuples, oeis_check, total_via_formula,
};
use parabolic_catalan::rtuples::RSet;
use parabolic_catalan::scanning::scanning_tableau;
use parabolic_catalan::shapes::{key_of_perm, row_end_max};
use parabolic_catalan::verify::{run_all, Status};
use parabolic_catalan::Error;
use serde_json::json;

use args::{Cli, Command, DemazureView, Family};
use render::Out;

/// A failed command: exit code plus message.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::Input(_) | Error::Structure(_) => 3,
            Error::Guard(_) => 4,
        };
        Failure(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(1, format!("output error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = Out::new(BufWriter::new(stdout.lock()), cli.json);
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("parcat: {msg}");
            ExitCode::from(code)
        }
    }
}

fn rsets(n: usize, r: Option<&str>) -> Result<Vec<RSet>, Failure> {
    Ok(match r {
        Some(text) => vec![RSet::parse(n, text)?],
        None => RSet::all(n).collect(),
    })
}

fn run<W: Write>(command: Command, out: &mut Out<W>) -> Result<(), Failure> {
    match command {
        Command::Count { n, r } => {
            for rs in rsets(n, r.as_deref())? {
                let c = count_cnr(&rs);
                out.record(
                    &format!("n={n} R={{{rs}}} C={c}"),
                    json!({"n": n, "r": rs.elements(), "count": render::big(&c)}),
                )?;
            }
        }
        Command::CountTotal { n, formula } => {
            let value = if formula { total_via_formula(n)?.to_string() } else { count_total(n)?.to_string() };
            let method = if formula { "formula" } else { "sum" };
            out.record(&format!("C_{n}^Σ = {value}"), json!({"n": n, "total": value, "method": method}))?;
        }
        Command::List { family, n, r, pattern } => {
            let rs = || -> Result<RSet, Failure> {
                Ok(RSet::parse(n, r.as_deref().ok_or_else(|| Failure(2, "--r is required for this family".into()))?)?)
            };
            match family {
                Family::R312 => out.items(&gen_r312_avoiding(&rs()?)?)?,
                Family::Gapless => out.items(&gen_gapless(&rs()?)?)?,
                Family::Chains => out.items(&gen_rcd_chains(&rs()?))?,
                Family::Gchains => out.items(&gen_generalized_rcd_chains(n)?)?,
                Family::Shapes => out.items(&gen_shape_tuples(&rs()?))?,
                Family::Opart => {
                    let sigma = pattern.as_deref().unwrap_or("312").parse()?;
                    out.items(&gen_avoiding_ordered_partitions(&rs()?, sigma)?)?
                }
            }
        }
        Command::Oeis { seq, terms } => {
            let values = oeis_check(seq.parse()?, terms)?;
            let text: Vec<String> = values.iter().map(ToString::to_string).collect();
            out.record(&text.join(", "), json!({"sequence": seq, "terms": values.iter().map(render::big).collect::<Vec<_>>()}))?;
        }
        Command::Key { lambda, perm } => {
            let (shape, p) = (args::shape(&lambda)?, args::tuple(&perm)?);
            out.tableau(&key_of_perm(&p, &shape)?)?;
        }
        Command::Rowendmax { lambda, tuple } => {
            let (shape, a) = (args::shape(&lambda)?, args::tuple(&tuple)?);
            out.tableau(&row_end_max(&shape, &a)?)?;
        }
        Command::Scan { tableau, lambda, columns } => {
            let t = args::tableau(tableau.as_deref(), lambda.as_deref(), columns.as_deref())?;
            let res = scanning_tableau(&t)?;
            if out.json() {
                let paths: Vec<_> = res.paths.iter().map(|(origin, cells)| json!({"origin": origin, "cells": cells})).collect();
                out.value(json!({"tableau": res.source, "scan": res.scan, "paths": paths}))?;
            } else {
                out.line(&res.scan.to_string())?;
            }
        }
        Command::Demazure { lambda, perm, view, budget } => {
            let (shape, p) = (args::shape(&lambda)?, args::tuple(&perm)?);
            match view.resolve() {
                DemazureView::Summary => {
                    let d = demazure_set(&p, &shape, budget)?;
                    let ideal = principal_ideal(&key_of_perm(&p, &shape)?, budget)?;
                    let avoiding = p.is_r312_avoiding()?;
                    out.record(
                        &format!("|D| = {}, |[Y]| = {}, 312-avoiding: {avoiding}", d.len(), ideal.len()),
                        json!({"size": d.len(), "ideal_size": ideal.len(), "avoiding": avoiding}),
                    )?;
                }
                DemazureView::Set => {
                    let d = demazure_set(&p, &shape, budget)?;
                    if out.json() {
                        out.value(json!({"order": "column-major", "lambda": shape, "points": d.points()}))?;
                    } else {
                        for t in d.tableaux() {
                            out.line(&t.to_string())?;
                            out.line("")?;
                        }
                    }
                }
                DemazureView::Poly => {
                    let poly = demazure_polynomial(&p, &shape, budget)?;
                    out.record(&poly.to_string(), serde_json::to_value(&poly).expect("serializable"))?;
                }
                DemazureView::Convexity => convexity(out, &p, &shape, budget)?,
                DemazureView::Witness => witness(out, &p, &shape)?,
            }
        }
        Command::Convexity { lambda, perm, budget } => {
            convexity(out, &args::tuple(&perm)?, &args::shape(&lambda)?, budget)?;
        }
        Command::Witness { lambda, perm } => witness(out, &args::tuple(&perm)?, &args::shape(&lambda)?)?,
        Command::Verify { n_max, check } => {
            let only = check.as_deref().map(str::parse).transpose()?;
            let reports = run_all(n_max, only);
            let mut failed = 0;
            for r in &reports {
                let status = match r.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skip => "skip",
                };
                out.record(&r.to_string(), json!({"check": r.check.name(), "status": status, "detail": r.detail}))?;
                failed += usize::from(r.status == Status::Fail);
            }
            if failed > 0 {
                return Err(Failure(1, format!("{failed} check(s) failed")));
            }
        }
    }
    Ok(())
}

fn convexity<W: Write>(
    out: &mut Out<W>,
    p: &parabolic_catalan::rtuples::RTuple,
    shape: &parabolic_catalan::shapes::Partition,
    budget: usize,
) -> Result<(), Failure> {
    let d = demazure_set(p, shape, DEFAULT_BUDGET)?;
    let verdict = convexity_verdict(&d, budget)?;
    out.record(verdict.label(), serde_json::to_value(&verdict).expect("serializable"))
        .map_err(Failure::from)
}

fn witness<W: Write>(
    out: &mut Out<W>,
    p: &parabolic_catalan::rtuples::RTuple,
    shape: &parabolic_catalan::shapes::Partition,
) -> Result<(), Failure> {
    let w = convexity_witness(p, shape)?;
    if let Err(why) = w.verify(p, shape) {
        return Err(Failure(1, format!("witness does not verify: {why}")));
    }
    if out.json() {
        out.value(serde_json::to_value(&w).expect("serializable"))?;
    } else {
        out.line(&format!("g={} h={} a={} b={} c={} d={}", w.g, w.h, w.a, w.b, w.c, w.d))?;
        out.line(&format!("x = {}/{}", w.x_numerator, w.x_denominator))?;
        out.line(&format!("X =\n{}", w.upper_key))?;
        out.line(&format!("W =\n{}", w.lower_key))?;
        out.line(&format!("T =\n{}", w.tableau))?;
    }
    Ok(())
}
