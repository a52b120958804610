use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use dickson_core::dickson::{self, DicksonSpec, Method, MAX_POLY_DEGREE};
use dickson_core::rings::{Ring, Style};
use serde::{Deserialize, Serialize};

use crate::args::{BenchArgs, BenchFormat};
use crate::ring_choice::{with_ring, RingChoice};
use crate::CliError;

/// Total wall time of `repetitions` evaluations, warm-up excluded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub method: String,
    pub ring: String,
    pub n: u64,
    pub repetitions: u32,
    pub total_ns: u64,
}

pub fn bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let choice = RingChoice::from_args(&args.ring)?;
    let records = with_ring!(&choice, ring => bench_in(ring, args))?;
    match args.format {
        BenchFormat::Csv => {
            writeln!(out, "method,ring,n,repetitions,total_ns")?;
            for r in &records {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.method, r.ring, r.n, r.repetitions, r.total_ns
                )?;
            }
        }
        BenchFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn bench_in<R: Ring>(ring: &R, args: &BenchArgs) -> Result<Vec<BenchRecord>, CliError> {
    let x = ring.parse_elem(&args.x)?;
    let a = ring.parse_elem(&args.a)?;
    let mut records = Vec::new();
    for &n in &args.n_list {
        let spec = DicksonSpec::new(n, 0, a.clone());
        // Polynomial methods are capped; past the cap only the matrix runs.
        let methods: Vec<Method> = if n <= MAX_POLY_DEGREE {
            Method::ALL.to_vec()
        } else {
            vec![Method::Matrix]
        };
        let values = methods
            .iter()
            .map(|&m| dickson::dickson_eval(ring, &spec, &x, m))
            .collect::<Result<Vec<_>, _>>()?;
        if values.windows(2).any(|w| w[0] != w[1]) {
            let shown: Vec<String> = methods
                .iter()
                .zip(&values)
                .map(|(m, v)| format!("{m}={}", ring.render(v, Style::Human)))
                .collect();
            return Err(CliError::Failed(format!(
                "methods disagree at n={n}: {}",
                shown.join(" ")
            )));
        }
        for &method in &methods {
            // values[...] above doubled as the warm-up run
            let start = Instant::now();
            for _ in 0..args.reps {
                black_box(dickson::dickson_eval(ring, &spec, black_box(&x), method)?);
            }
            records.push(BenchRecord {
                method: method.as_str().to_string(),
                ring: ring.describe(),
                n,
                repetitions: args.reps,
                total_ns: start.elapsed().as_nanos() as u64,
            });
        }
    }
    Ok(records)
}
