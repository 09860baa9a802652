use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symbol::Symbol;

/// Label of a unipotent character: a partition (GL, U) or a symbol.
///
/// A degenerate symbol labels two characters; `primed` picks the second.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum UnipotentLabel {
    Partition(Partition),
    Symbol { symbol: Symbol, primed: bool },
}

impl UnipotentLabel {
    pub fn symbol(symbol: Symbol) -> Self {
        UnipotentLabel::Symbol { symbol, primed: false }
    }

    pub fn primed_symbol(symbol: Symbol, primed: bool) -> Result<Self> {
        if primed && !symbol.is_degenerate() {
            return Err(Error::LabelMismatch(format!("{symbol} is not degenerate")));
        }
        Ok(UnipotentLabel::Symbol { symbol, primed })
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, UnipotentLabel::Symbol { symbol, .. } if symbol.is_degenerate())
    }

    pub fn primed(&self) -> bool {
        matches!(self, UnipotentLabel::Symbol { primed: true, .. })
    }

    /// The same label with the prime flag replaced.
    pub fn with_primed(&self, primed: bool) -> Self {
        match self {
            UnipotentLabel::Symbol { symbol, .. } => {
                UnipotentLabel::Symbol { symbol: symbol.clone(), primed }
            }
            other => other.clone(),
        }
    }

    /// Size of the partition, or rank of the symbol.
    pub fn rank(&self) -> usize {
        match self {
            UnipotentLabel::Partition(p) => p.size(),
            UnipotentLabel::Symbol { symbol, .. } => symbol.rank(),
        }
    }
}

impl fmt::Display for UnipotentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnipotentLabel::Partition(p) => write!(f, "{p}"),
            UnipotentLabel::Symbol { symbol, primed } => {
                write!(f, "{symbol}{}", if *primed { "'" } else { "" })
            }
        }
    }
}

impl fmt::Debug for UnipotentLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for UnipotentLabel {
    type Err = Error;

    /// A literal containing `|` is a symbol (optionally with a trailing `'`),
    /// anything else a partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('|') {
            let (body, primed) = match s.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (s, false),
            };
            UnipotentLabel::primed_symbol(body.parse()?, primed)
        } else {
            Ok(UnipotentLabel::Partition(s.parse()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let l: UnipotentLabel = "2,5|2,5'".parse().unwrap();
        assert!(l.primed() && l.is_degenerate());
        assert_eq!(l.to_string(), "2,5|2,5'");
        assert_eq!(l.rank(), 12);
        assert!("1,2|0'".parse::<UnipotentLabel>().is_err());
        let p: UnipotentLabel = "3,1".parse().unwrap();
        assert_eq!(p.rank(), 4);
    }
}
