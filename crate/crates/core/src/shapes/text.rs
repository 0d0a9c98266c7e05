//! One-line text forms for shapes:
//!
//! ```text
//! lambda=5,5,5,3,2;mu=2,2,1,1
//! strip:m=4,n=6,head=1,0;tail=1,0
//! ribbon:size=6;descents=1,3,5
//! ```

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{make_skew, ribbon_from_descents, strip_shape, write_list, Partition, SkewShape, StripSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeText {
    Skew(SkewShape),
    Strip(StripSpec),
    Ribbon { size: u32, descents: Vec<u32> },
}

impl ShapeText {
    pub fn to_shape(&self) -> Result<SkewShape> {
        match self {
            ShapeText::Skew(s) => Ok(s.clone()),
            ShapeText::Strip(spec) => strip_shape(spec),
            ShapeText::Ribbon { size, descents } => ribbon_from_descents(descents, *size),
        }
    }
}

impl fmt::Display for ShapeText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeText::Skew(s) => write!(f, "{s}"),
            ShapeText::Strip(spec) => write!(f, "{spec}"),
            ShapeText::Ribbon { size, descents } => {
                write!(f, "ribbon:size={size};descents=")?;
                write_list(f, descents)
            }
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(alloc::format!("`{t}` is not a nonnegative integer")))
        })
        .collect()
}

fn field<'a>(part: &'a str, key: &str) -> Result<&'a str> {
    let part = part.trim();
    part.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| Error::Parse(alloc::format!("expected `{key}=...`, found `{part}`")))
}

fn parse_u32(s: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(alloc::format!("`{s}` is not a nonnegative integer")))
}

impl FromStr for ShapeText {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("strip:") {
            let (left, right) = rest
                .split_once(';')
                .ok_or_else(|| Error::Parse("strip text needs `;tail=`".into()))?;
            let tail = parse_list(field(right, "tail")?)?;
            let mut it = left.splitn(3, ',');
            let m = parse_u32(field(it.next().unwrap_or(""), "m")?)?;
            let n = parse_u32(field(it.next().unwrap_or(""), "n")?)?;
            let head = parse_list(field(it.next().unwrap_or(""), "head")?)?;
            return Ok(ShapeText::Strip(StripSpec::from_parts(m, n, &head, &tail)?));
        }
        if let Some(rest) = s.strip_prefix("ribbon:") {
            let (left, right) = rest.split_once(';').unwrap_or((rest, "descents="));
            let size = parse_u32(field(left, "size")?)?;
            let descents = parse_list(field(right, "descents")?)?;
            ribbon_from_descents(&descents, size)?;
            return Ok(ShapeText::Ribbon { size, descents });
        }
        let (left, right) = s.split_once(';').unwrap_or((s, "mu="));
        let lambda = Partition::new(parse_list(field(left, "lambda")?)?)?;
        let mu = Partition::new(parse_list(field(right, "mu")?)?)?;
        Ok(ShapeText::Skew(make_skew(&lambda, &mu)?))
    }
}

/// Parses any shape text straight to its diagram.
pub fn parse_shape(s: &str) -> Result<SkewShape> {
    s.parse::<ShapeText>()?.to_shape()
}

impl From<SkewShape> for ShapeText {
    fn from(s: SkewShape) -> Self {
        ShapeText::Skew(s)
    }
}

impl From<StripSpec> for ShapeText {
    fn from(s: StripSpec) -> Self {
        ShapeText::Strip(s)
    }
}
