use std::fmt;
use std::str::FromStr;

use bundlesplit_core::FlagShape;

#[derive(Debug, Clone)]
pub struct FlagArg(pub FlagShape);

impl FromStr for FlagArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(FlagArg).map_err(|e| format!("{e}"))
    }
}

#[derive(Debug, Clone)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|e| format!("bad integer {x:?}: {e}"))
            })
            .collect::<Result<_, _>>()
            .map(IntList)
    }
}

/// `e,d` for `Grs(e; d)`.
#[derive(Debug, Clone, Copy)]
pub struct GrassArg {
    pub e: usize,
    pub d: usize,
}

impl FromStr for GrassArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (e, d) = s
            .split_once(',')
            .ok_or_else(|| format!("expected e,d, got {s:?}"))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<usize>()
                .map_err(|err| format!("bad integer {x:?}: {err}"))
        };
        Ok(GrassArg {
            e: parse(e)?,
            d: parse(d)?,
        })
    }
}

/// Inclusive range `a..b`; a single integer `a` means `a..a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: i64,
    pub hi: i64,
}

impl RangeArg {
    pub fn len(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|err| format!("bad integer {x:?}: {err}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let a = parse(s)?;
                (a, a)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(RangeArg { lo, hi })
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}
