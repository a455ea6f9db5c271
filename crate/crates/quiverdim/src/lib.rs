//! File formats, reports and command-line front end.

pub mod commands;
pub mod input;
pub mod report;
pub mod tables;

use anyhow::{bail, Result};

/// Prime moduli accepted by `--field fp:<p>`.
pub const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 101, 32003, 65521, 2147483647];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Prime(u64),
}

impl std::str::FromStr for FieldChoice {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "q" || s == "Q" {
            return Ok(FieldChoice::Rationals);
        }
        let Some(p) = s.strip_prefix("fp:") else {
            bail!("field must be q or fp:<p>");
        };
        let p: u64 = p.parse()?;
        if !PRIMES.contains(&p) {
            bail!("unsupported prime {p}; available: {PRIMES:?}");
        }
        Ok(FieldChoice::Prime(p))
    }
}

/// Evaluate `$body` with the type alias `$F` bound to the chosen field.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {{
        use $crate::FieldChoice;
        use quiverdim_core::field::{Fp, Q};
        match $choice {
            FieldChoice::Rationals => {
                type $F = Q;
                $body
            }
            FieldChoice::Prime(p) => $crate::with_field!(@prime p, $F => $body;
                2, 3, 5, 7, 11, 13, 17, 19, 101, 32003, 65521, 2147483647),
        }
    }};
    (@prime $p:ident, $F:ident => $body:expr; $($q:literal),*) => {
        match $p {
            $($q => {
                type $F = Fp<$q>;
                $body
            })*
            _ => unreachable!("prime list is checked on parse"),
        }
    };
}
