use std::fmt;

use crate::error::{Error, Result};

/// A finite binary word naming a cylinder of the Cantor set. The empty word is the
/// whole set.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Address {
    bits: Vec<bool>,
}

impl Address {
    pub fn root() -> Self {
        Address { bits: Vec::new() }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        Address {
            bits: bits.into_iter().collect(),
        }
    }

    /// Parses a string over `0`/`1`. The empty string is the root.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!(
                    "bad address character {c:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(|bits| Address { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn child(&self, bit: bool) -> Self {
        let mut bits = Vec::with_capacity(self.bits.len() + 1);
        bits.extend_from_slice(&self.bits);
        bits.push(bit);
        Address { bits }
    }

    pub fn concat(&self, tail: &[bool]) -> Self {
        let mut bits = Vec::with_capacity(self.bits.len() + tail.len());
        bits.extend_from_slice(&self.bits);
        bits.extend_from_slice(tail);
        Address { bits }
    }

    pub fn prefix_with(&self, head: &[bool]) -> Self {
        let mut bits = Vec::with_capacity(self.bits.len() + head.len());
        bits.extend_from_slice(head);
        bits.extend_from_slice(&self.bits);
        Address { bits }
    }

    pub fn is_prefix_of(&self, other: &[bool]) -> bool {
        other.starts_with(&self.bits)
    }

    /// Drops the first `n` bits.
    pub fn suffix(&self, n: usize) -> Self {
        Address {
            bits: self.bits[n..].to_vec(),
        }
    }

    /// Parent address and the bit that leads back to `self`.
    pub fn parent(&self) -> Option<(Address, bool)> {
        let (&last, init) = self.bits.split_last()?;
        Some((
            Address {
                bits: init.to_vec(),
            },
            last,
        ))
    }

    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.to_bit_string())
        }
    }
}

/// Parses a bit string into booleans.
pub fn parse_bits(s: &str) -> Result<Vec<bool>> {
    Address::parse(s).map(|a| a.bits)
}

pub fn bits_to_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}
