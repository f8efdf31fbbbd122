use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime used by default when a finite-field cross-check is wanted.
/// Large enough that torsion in the complexes we handle is invisible,
/// small enough that arithmetic stays in `u64`.
pub const GUARD_PRIME: u32 = 32003;

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    /// The rationals; ranks are computed with fraction-free integer elimination.
    Rational,
    /// The prime field GF(p).
    Gf(u32),
}

impl Field {
    /// Finite field of prime order. Rejects composites.
    pub fn gf(p: u32) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Gf(p))
        } else {
            Err(Error::NotPrime { modulus: p })
        }
    }

    /// Parses `"q"` (rationals) or `"gf:P"` with P prime.
    pub fn parse(spec: &str) -> Result<Field> {
        if spec == "q" || spec == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = spec.strip_prefix("gf:") {
            let p: u32 = rest.parse().map_err(|_| Error::BadFieldSpec {
                spec: spec.to_string(),
            })?;
            return Field::gf(p);
        }
        Err(Error::BadFieldSpec {
            spec: spec.to_string(),
        })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Gf(p) => write!(f, "gf:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_rationals_and_primes() {
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("gf:2").unwrap(), Field::Gf(2));
        assert_eq!(Field::parse("gf:32003").unwrap(), Field::Gf(GUARD_PRIME));
    }

    #[test]
    fn parse_rejects_composites_and_junk() {
        assert!(Field::parse("gf:32001").is_err()); // 3 * 10667
        assert!(Field::parse("gf:1").is_err());
        assert!(Field::parse("r").is_err());
        assert!(Field::parse("gf:").is_err());
    }

    #[test]
    fn display_round_trips() {
        for f in [Field::Rational, Field::Gf(7), Field::Gf(GUARD_PRIME)] {
            assert_eq!(Field::parse(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn guard_prime_is_prime() {
        assert!(is_prime(GUARD_PRIME));
    }
}
