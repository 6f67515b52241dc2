//! Text notation: `4,4,3,2/2,1` for skew shapes and
//! `name:key=value(:key=value)*` for families.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Partition, ShapeFamily, SkewShape};
use crate::error::{Error, Result};

fn parse_error(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Parses comma-separated positive integers starting at byte `offset` of
/// the original input. `which` names the side in diagnostics.
fn parse_parts(text: &str, offset: usize, which: &str) -> Result<Partition> {
    if text.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut starts = Vec::new();
    let mut pos = offset;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        if trimmed.is_empty() {
            return Err(parse_error(pos, format!("empty part in {which} partition")));
        }
        let value: usize = trimmed.parse().map_err(|_| {
            parse_error(pos + lead, format!("'{trimmed}' is not a positive integer"))
        })?;
        if value == 0 {
            return Err(parse_error(
                pos + lead,
                format!("zero part in {which} partition at index {}", parts.len() + 1),
            ));
        }
        starts.push(pos + lead);
        parts.push(value);
        pos += piece.len() + 1;
    }
    Partition::new(parts).map_err(|e| match e {
        Error::NotDecreasing { index } => parse_error(
            starts[index - 1],
            format!("{which} parts not weakly decreasing at index {index}"),
        ),
        other => other,
    })
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    parse_parts(text.trim(), 0, "outer")
}

pub fn parse_skew(text: &str) -> Result<SkewShape> {
    let (outer_text, inner_text, inner_offset) = match text.find('/') {
        Some(slash) => (&text[..slash], &text[slash + 1..], slash + 1),
        None => (text, "", text.len()),
    };
    let outer = parse_parts(outer_text, 0, "outer")?;
    let inner = parse_parts(inner_text, inner_offset, "inner")?;
    SkewShape::new(outer, inner).map_err(|e| match e {
        Error::InnerNotContained { index } => parse_error(
            inner_offset,
            format!("inner partition not contained in outer at index {index}"),
        ),
        other => other,
    })
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_skew(s)
    }
}

impl FromStr for ShapeFamily {
    type Err = Error;

    /// `name(:key=value)*`. A missing `k` defaults to 1 so that the family
    /// can be instantiated later with [`ShapeFamily::with_k`].
    fn from_str(text: &str) -> Result<Self> {
        let mut fields = text.split(':');
        let name = fields.next().unwrap_or("").trim();
        let mut pos = name.len() + 1;
        let mut keys: Vec<(String, String, usize)> = Vec::new();
        for field in fields {
            let Some((key, value)) = field.split_once('=') else {
                return Err(parse_error(pos, format!("expected key=value, found '{field}'")));
            };
            keys.push((key.trim().to_string(), value.trim().to_string(), pos + key.len() + 1));
            pos += field.len() + 1;
        }
        let lookup = |key: &str| keys.iter().find(|(k, _, _)| k == key);
        let int = |key: &str, default: Option<usize>| -> Result<usize> {
            match lookup(key) {
                Some((_, v, at)) => v
                    .parse::<usize>()
                    .map_err(|_| parse_error(*at, format!("'{v}' is not a nonnegative integer"))),
                None => default.ok_or_else(|| parse_error(text.len(), format!("missing key '{key}'"))),
            }
        };
        let allowed: &[&str] = match name {
            "square" | "staircase" | "inverted-hook" | "inverted-thick-hook" | "zigzag" => &["k"],
            "thick-ribbon" => &["k", "r"],
            "ribbon-rho" => &["k", "m"],
            "slim-stripe" => &["l", "k"],
            "regev-vershik" => &["sigma", "k", "l"],
            _ => return Err(parse_error(0, format!("unknown shape family '{name}'"))),
        };
        if let Some((k, _, at)) = keys.iter().find(|(k, _, _)| !allowed.contains(&k.as_str())) {
            return Err(parse_error(*at - k.len() - 1, format!("unknown key '{k}' for {name}")));
        }
        let k = int("k", Some(1))?;
        let family = match name {
            "square" => ShapeFamily::Square { k },
            "staircase" => ShapeFamily::Staircase { k },
            "inverted-hook" => ShapeFamily::InvertedHook { k },
            "inverted-thick-hook" => ShapeFamily::InvertedThickHook { k },
            "zigzag" => ShapeFamily::Zigzag { k },
            "thick-ribbon" => ShapeFamily::ThickRibbon { k, r: int("r", Some(k))? },
            "ribbon-rho" => ShapeFamily::RibbonRho { k, m: int("m", None)? },
            "slim-stripe" => ShapeFamily::SlimStripe { l: int("l", Some(k))? },
            "regev-vershik" => {
                let sigma = match lookup("sigma") {
                    Some((_, v, at)) => parse_parts(v, *at, "sigma")?,
                    None => Partition::empty(),
                };
                ShapeFamily::RegevVershik {
                    sigma,
                    rows: k,
                    cols: int("l", None)?,
                }
            }
            _ => unreachable!("name validated above"),
        };
        Ok(family)
    }
}

impl fmt::Display for ShapeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match self {
            ShapeFamily::ThickRibbon { k, r } => write!(f, "{name}:k={k}:r={r}"),
            ShapeFamily::RibbonRho { k, m } => write!(f, "{name}:k={k}:m={m}"),
            ShapeFamily::SlimStripe { l } => write!(f, "{name}:l={l}"),
            ShapeFamily::RegevVershik { sigma, rows, cols } => {
                write!(f, "{name}:sigma={sigma}:k={rows}:l={cols}")
            }
            other => write!(f, "{name}:k={}", other.k()),
        }
    }
}
