use std::io::Write;

use dickson_core::dickson::{self, DicksonSpec, Method};
use dickson_core::poly::{self, Polynomial};
use dickson_core::rings::{PolyRing, Ring, Style};
use serde::Serialize;

use crate::args::{EvalArgs, MethodArg, TableArgs, TableFormat};
use crate::ring_choice::{with_ring, RingChoice};
use crate::CliError;

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Closed => Method::Closed,
            MethodArg::Matrix => Method::Matrix,
        }
    }
}

pub fn eval(args: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let choice = RingChoice::from_args(&args.ring)?;
    with_ring!(&choice, ring => eval_in(ring, args, out))
}

fn eval_in<R: Ring>(ring: &R, args: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let x = ring.parse_elem(&args.x)?;
    let a = ring.parse_elem(&args.a)?;
    let spec = DicksonSpec::new(args.n, args.kind, a);
    let value = dickson::dickson_eval(ring, &spec, &x, args.method.into())?;
    writeln!(out, "{}", ring.render(&value, Style::Human))?;
    Ok(())
}

// some rings are Copy, others are not
#[allow(clippy::clone_on_copy)]
pub fn table(args: &TableArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let choice = RingChoice::from_args(&args.ring)?;
    with_ring!(&choice, ring => match &args.a {
        Some(a) => {
            let a_val = ring.parse_elem(a)?;
            let label = ring.render(&a_val, Style::Human);
            let latex = ring.render(&a_val, Style::Latex);
            table_in(ring, &a_val, (&label, &latex), args, out)
        }
        None => {
            let symbolic = PolyRing::new(ring.clone(), "a");
            let a_val = symbolic.var();
            table_in(&symbolic, &a_val, ("a", "a"), args, out)
        }
    })
}

#[derive(Serialize)]
struct JsonTable {
    ring: String,
    kind: u64,
    a: String,
    polynomials: Vec<JsonRow>,
}

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    /// Ascending: `coefficients[i]` belongs to `x^i`.
    coefficients: Vec<String>,
}

fn table_in<R: Ring>(
    ring: &R,
    a: &R::Elem,
    (a_human, a_latex): (&str, &str),
    args: &TableArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let rows = dickson::kind_k_sequence(ring, args.n_max, args.kind, a)?;
    let coeff_strings = |p: &Polynomial<R::Elem>| -> Vec<String> {
        p.coeffs()
            .iter()
            .map(|c| ring.render(c, Style::Human))
            .collect()
    };
    match args.format {
        TableFormat::Human => {
            for (n, p) in rows.iter().enumerate() {
                let label = human_label(n, args.kind, a_human);
                writeln!(
                    out,
                    "{label} = {}",
                    poly::render(ring, p, "x", Style::Human)
                )?;
            }
        }
        TableFormat::Csv => {
            let top = args.n_max as usize;
            let header: Vec<String> = (0..=top).rev().map(|i| format!("x^{i}")).collect();
            writeln!(out, "n,{}", header.join(","))?;
            for (n, p) in rows.iter().enumerate() {
                let mut cells = coeff_strings(p);
                cells.resize(top + 1, "0".to_string());
                cells.reverse();
                writeln!(out, "{n},{}", cells.join(","))?;
            }
        }
        TableFormat::Json => {
            let table = JsonTable {
                ring: ring.describe(),
                kind: args.kind,
                a: a_human.to_string(),
                polynomials: rows
                    .iter()
                    .enumerate()
                    .map(|(n, p)| JsonRow {
                        n: n as u64,
                        coefficients: if p.is_zero() {
                            vec!["0".into()]
                        } else {
                            coeff_strings(p)
                        },
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut *out, &table)?;
            writeln!(out)?;
        }
        TableFormat::Latex => {
            // Same layout as the classical table: one `array` row per degree,
            // the display closed by a full stop.
            writeln!(out, "\\begin{{array}}{{ll}}")?;
            for (n, p) in rows.iter().enumerate() {
                let end = if n + 1 == rows.len() { "." } else { "\\\\" };
                let label = latex_label(n, args.kind, a_latex);
                writeln!(
                    out,
                    "{label}={}{end}",
                    poly::render(ring, p, "x", Style::Latex)
                )?;
            }
            writeln!(out, "\\end{{array}}")?;
        }
    }
    Ok(())
}

fn human_label(n: usize, kind: u64, a: &str) -> String {
    if kind == 0 {
        format!("D_{n}(x,{a})")
    } else {
        format!("D_{n},{kind}(x,{a})")
    }
}

fn latex_label(n: usize, kind: u64, a: &str) -> String {
    if kind == 0 {
        format!("D_{{{n}}}(x,{a})")
    } else {
        format!("D_{{{n},{kind}}}(x,{a})")
    }
}
