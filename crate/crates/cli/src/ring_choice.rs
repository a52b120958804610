use dickson_core::rings::{ExtField, Integers, PrimeField, Rationals};
use dickson_core::Error;

use crate::args::{RingArgs, RingKind};
use crate::CliError;

/// A ring picked on the command line.
#[derive(Debug, Clone)]
pub enum RingChoice {
    Int(Integers),
    Rat(Rationals),
    Fp(PrimeField),
    Fq(ExtField),
}

impl RingChoice {
    pub fn from_args(args: &RingArgs) -> Result<Self, CliError> {
        let need_p = || {
            args.p
                .ok_or_else(|| CliError::Usage("--p is required for this ring".into()))
        };
        match args.ring {
            RingKind::Int | RingKind::Rat if args.p.is_some() || args.m.is_some() => Err(
                CliError::Usage("--p and --m only apply to fp and fq".into()),
            ),
            RingKind::Fp if args.m.is_some() => {
                Err(CliError::Usage("--m only applies to fq".into()))
            }
            RingKind::Int => Ok(Self::Int(Integers)),
            RingKind::Rat => Ok(Self::Rat(Rationals)),
            RingKind::Fp => Ok(Self::Fp(PrimeField::new(need_p()?)?)),
            RingKind::Fq => {
                let m = args
                    .m
                    .ok_or_else(|| CliError::Usage("--m is required for fq".into()))?;
                Ok(Self::Fq(ExtField::new(need_p()?, m)?))
            }
        }
    }

    /// Finite field of order `q`: a prime field when `q` is prime.
    pub fn finite_field(q: u64) -> Result<Self, Error> {
        let field = ExtField::of_order(q)?;
        if field.degree() == 1 {
            Ok(Self::Fp(PrimeField::new(q)?))
        } else {
            Ok(Self::Fq(field))
        }
    }
}

/// Run `$body` with `$r` bound to the concrete ring.
macro_rules! with_ring {
    ($choice:expr, $r:ident => $body:expr) => {
        match $choice {
            $crate::ring_choice::RingChoice::Int($r) => $body,
            $crate::ring_choice::RingChoice::Rat($r) => $body,
            $crate::ring_choice::RingChoice::Fp($r) => $body,
            $crate::ring_choice::RingChoice::Fq($r) => $body,
        }
    };
}

/// Like `with_ring!`, for the finite fields only.
macro_rules! with_field {
    ($choice:expr, $f:ident => $body:expr) => {
        match $choice {
            $crate::ring_choice::RingChoice::Fp($f) => $body,
            $crate::ring_choice::RingChoice::Fq($f) => $body,
            _ => unreachable!("finite_field only builds fp or fq"),
        }
    };
}

pub(crate) use {with_field, with_ring};
