use std::io::Write;

use dickson_core::exec::Strategy;
use dickson_core::numtheory::{self as nt, BrewerQuery};
use dickson_core::rings::{FiniteField, Style};

use crate::args::{BrewerArgs, PermcheckArgs};
use crate::ring_choice::{with_field, RingChoice};
use crate::CliError;

pub fn brewer(args: &BrewerArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let strategy = Strategy::default();
    match args.a {
        Some(a) => {
            let s = nt::brewer_sum(&BrewerQuery::new(args.p, args.n, a)?, strategy)?;
            writeln!(out, "{s}")?;
        }
        None => {
            // validate once before printing the header
            BrewerQuery::new(args.p, args.n, 0)?;
            writeln!(out, "a,lambda")?;
            for a in 0..args.p {
                let s = nt::brewer_sum(&BrewerQuery::new(args.p, args.n, a as i64)?, strategy)?;
                writeln!(out, "{a},{s}")?;
            }
        }
    }
    Ok(())
}

pub fn permcheck(args: &PermcheckArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let choice = RingChoice::finite_field(args.q)?;
    with_field!(&choice, field => permcheck_in(field, args, out))
}

fn permcheck_in<F: FiniteField>(
    field: &F,
    args: &PermcheckArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let q = field.order();
    if q > nt::MAX_PERMUTATION_ORDER {
        return Err(dickson_core::Error::EnumerationTooLarge(q).into());
    }
    let params: Vec<F::Elem> = match &args.a {
        Some(a) => vec![field.parse_elem(a)?],
        None => field.elements().skip(1).collect(),
    };
    let strategy = Strategy::default();
    let mut disagreements = 0u64;
    writeln!(out, "n,a,is_perm,gcd,agree")?;
    for n in 1..=args.n_max {
        for a in &params {
            let verdict = if field.is_zero(a) {
                nt::is_monomial_permutation(field, n, strategy)?
            } else {
                nt::is_permutation(field, n, a, strategy)?
            };
            if !verdict.agreement {
                disagreements += 1;
            }
            writeln!(
                out,
                "{n},{},{},{},{}",
                field.render(a, Style::Human),
                verdict.is_permutation,
                verdict.gcd_value,
                verdict.agreement
            )?;
        }
    }
    if disagreements > 0 {
        return Err(CliError::Failed(format!(
            "{disagreements} verdicts disagree with the gcd criterion"
        )));
    }
    Ok(())
}
