//! Parsed construction routes: which semiplane, which installed pair or
//! quadruple, how many block pairs to delete. Route strings round-trip
//! through their text form.

use crate::semicirculant::SemicirculantSpec;
use crate::semiplane::LeviKind;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RouteError {
    #[error("malformed route `{0}`")]
    Malformed(String),
    #[error("unknown install source `{0}`")]
    UnknownSource(String),
    #[error("{0}")]
    Spec(String),
}

/// Where the installed graphs come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteSource {
    /// Bi-regular quadruple found by constraint search (q = 16, 17, 19).
    Searched,
    /// Fixed semicirculant pairs (q = 29, 31, 37, 41, 43, 47).
    Semicirculant,
    /// The explicit 32-vertex adjacency-list pair (q = 32).
    Explicit,
    /// The general 6-regular families: odd prime powers q >= 49 into type L,
    /// powers of two q >= 64 into type C.
    SixRegular,
}

impl RouteSource {
    fn token(&self) -> &'static str {
        match self {
            RouteSource::Searched => "searched",
            RouteSource::Semicirculant => "semicirculant",
            RouteSource::Explicit => "explicit",
            RouteSource::SixRegular => "sixreg",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RouteDescriptor {
    pub kind: LeviKind,
    pub q: u64,
    pub source: RouteSource,
    pub deletions: usize,
}

impl fmt::Display for RouteDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            LeviKind::TypeC => "C",
            LeviKind::TypeL => "L",
        };
        let slot = match self.source {
            RouteSource::Searched => "quad",
            _ => "pair",
        };
        write!(
            f,
            "{kind} q={} {slot}={} d={}",
            self.q,
            self.source.token(),
            self.deletions
        )
    }
}

impl FromStr for RouteDescriptor {
    type Err = RouteError;

    /// Text form: `C q=16 quad=searched d=2`, `L q=29 pair=semicirculant d=1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RouteError::Malformed(s.to_string());
        let mut parts = s.split_whitespace();
        let kind = match parts.next().ok_or_else(bad)? {
            "C" => LeviKind::TypeC,
            "L" => LeviKind::TypeL,
            _ => return Err(bad()),
        };
        let q = parts
            .next()
            .and_then(|t| t.strip_prefix("q="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad)?;
        let (slot, source_name) = parts
            .next()
            .and_then(|t| t.split_once('='))
            .ok_or_else(bad)?;
        let source = match source_name {
            "searched" => RouteSource::Searched,
            "semicirculant" => RouteSource::Semicirculant,
            "explicit" => RouteSource::Explicit,
            "sixreg" => RouteSource::SixRegular,
            other => return Err(RouteError::UnknownSource(other.to_string())),
        };
        let slot_ok = match source {
            RouteSource::Searched => slot == "quad",
            _ => slot == "pair",
        };
        if !slot_ok {
            return Err(bad());
        }
        let deletions = parts
            .next()
            .and_then(|t| t.strip_prefix("d="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(bad)?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(RouteDescriptor {
            kind,
            q,
            source,
            deletions,
        })
    }
}

/// Everything the build command can produce: a record-route amalgam, a bare
/// Levi graph, or a semicirculant graph / span query.
#[derive(Clone, Debug, PartialEq)]
pub enum BuildTarget {
    Route(RouteDescriptor),
    Semiplane { kind: LeviKind, q: u64 },
    Semicirculant(SemicirculantSpec),
}

impl fmt::Display for BuildTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildTarget::Route(r) => write!(f, "{r}"),
            BuildTarget::Semiplane { kind, q } => {
                let kind = match kind {
                    LeviKind::TypeC => "C",
                    LeviKind::TypeL => "L",
                };
                write!(f, "{kind}:q={q}")
            }
            BuildTarget::Semicirculant(spec) => write!(f, "{spec}"),
        }
    }
}

impl FromStr for BuildTarget {
    type Err = RouteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with("S:") {
            return s
                .parse::<SemicirculantSpec>()
                .map(BuildTarget::Semicirculant)
                .map_err(|e| RouteError::Spec(e.to_string()));
        }
        if let Some(rest) = s
            .strip_prefix("C:q=")
            .map(|r| (LeviKind::TypeC, r))
            .or_else(|| s.strip_prefix("L:q=").map(|r| (LeviKind::TypeL, r)))
        {
            let (kind, num) = rest;
            let q = num
                .parse()
                .map_err(|_| RouteError::Malformed(s.to_string()))?;
            return Ok(BuildTarget::Semiplane { kind, q });
        }
        s.parse::<RouteDescriptor>().map(BuildTarget::Route)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn route_text_roundtrip() {
        for text in [
            "C q=16 quad=searched d=2",
            "L q=29 pair=semicirculant d=1",
            "C q=32 pair=explicit d=0",
            "C q=64 pair=sixreg d=0",
            "L q=49 pair=sixreg d=0",
        ] {
            let route: RouteDescriptor = text.parse().unwrap();
            assert_eq!(route.to_string(), text);
        }
    }

    #[test]
    fn route_rejects_malformed_text() {
        assert!("C q=16".parse::<RouteDescriptor>().is_err());
        assert!("X q=16 quad=searched d=0"
            .parse::<RouteDescriptor>()
            .is_err());
        assert!("C q=16 pair=bogus d=0".parse::<RouteDescriptor>().is_err());
        assert!("C q=16 quad=searched d=0 extra"
            .parse::<RouteDescriptor>()
            .is_err());
    }

    #[test]
    fn build_target_forms() {
        assert!(matches!(
            "C:q=17".parse::<BuildTarget>().unwrap(),
            BuildTarget::Semiplane {
                kind: LeviKind::TypeC,
                q: 17
            }
        ));
        assert!(matches!(
            "S:2t=28;P=4;Q=8;K=1,-1".parse::<BuildTarget>().unwrap(),
            BuildTarget::Semicirculant(_)
        ));
        assert!(matches!(
            "L q=29 pair=semicirculant d=0"
                .parse::<BuildTarget>()
                .unwrap(),
            BuildTarget::Route(_)
        ));
        for text in [
            "C:q=17",
            "S:2t=28;P=4;Q=8;K=1,-1",
            "L q=29 pair=semicirculant d=0",
        ] {
            let target: BuildTarget = text.parse().unwrap();
            assert_eq!(target.to_string(), text);
        }
    }
}
