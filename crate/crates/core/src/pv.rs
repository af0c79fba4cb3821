//! Parameterized strings, prev-encoding and re-encoding.
//!
//! A p-string mixes constant symbols, which must match exactly, with
//! parameter symbols, which match up to a consistent renaming. Its
//! prev-encoding replaces each parameter by the distance back to the previous
//! occurrence of the same parameter (`0` on a first occurrence), so two
//! p-strings p-match exactly when their prev-encodings are equal.
//!
//! All public slicing in this module is 1-based and inclusive: `slice(i, j)`
//! is `w[i:j]`, and `i > j` yields the empty string.

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Byte used as the terminal sentinel constant.
pub const SENTINEL_BYTE: u8 = b'$';

/// The sentinel constant `$`.
pub const SENTINEL: PSym = PSym::Const(SENTINEL_BYTE as u32);

/// A symbol of a p-string. Constant and parameter codes live in separate
/// spaces: `Const(7)` and `Param(7)` are different symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PSym {
    Const(u32),
    Param(u32),
}

impl PSym {
    pub fn is_param(self) -> bool {
        matches!(self, PSym::Param(_))
    }

    pub fn code(self) -> u32 {
        match self {
            PSym::Const(c) | PSym::Param(c) => c,
        }
    }
}

/// A symbol of a prev-encoded string: a constant, or a backward distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PvSym {
    Const(u32),
    Num(u32),
}

impl PvSym {
    pub fn num(self) -> Option<u32> {
        match self {
            PvSym::Num(d) => Some(d),
            PvSym::Const(_) => None,
        }
    }
}

impl fmt::Display for PvSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PvSym::Num(d) => write!(f, "{d}"),
            PvSym::Const(c) => match char::from_u32(c) {
                Some(ch) if ch.is_ascii_graphic() && !ch.is_ascii_digit() => write!(f, "{ch}"),
                _ => write!(f, "#{c}"),
            },
        }
    }
}

macro_rules! string_newtype {
    ($name:ident, $sym:ty) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
        pub struct $name(Vec<$sym>);

        impl $name {
            pub fn new(symbols: Vec<$sym>) -> Self {
                Self(symbols)
            }

            /// Symbol at 1-based position `i`.
            pub fn at(&self, i: usize) -> $sym {
                self.0[i - 1]
            }

            /// `w[i:j]`, 1-based and inclusive; empty when `i > j`.
            pub fn slice(&self, i: usize, j: usize) -> Self {
                if i > j {
                    return Self::default();
                }
                Self(self.0[i - 1..j].to_vec())
            }

            /// `w[i:]`, 1-based.
            pub fn suffix(&self, i: usize) -> Self {
                self.slice(i, self.0.len())
            }

            pub fn as_slice(&self) -> &[$sym] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<$sym> {
                self.0
            }
        }

        impl Deref for $name {
            type Target = [$sym];
            fn deref(&self) -> &[$sym] {
                &self.0
            }
        }

        impl From<Vec<$sym>> for $name {
            fn from(v: Vec<$sym>) -> Self {
                Self(v)
            }
        }

        impl FromIterator<$sym> for $name {
            fn from_iter<I: IntoIterator<Item = $sym>>(iter: I) -> Self {
                Self(iter.into_iter().collect())
            }
        }
    };
}

string_newtype!(PStr, PSym);
string_newtype!(PvStr, PvSym);

impl PStr {
    pub fn ends_with_sentinel(&self) -> bool {
        self.0.last() == Some(&SENTINEL)
    }

    /// Appends the sentinel unless it is already the last symbol.
    pub fn with_sentinel(mut self) -> Self {
        if !self.ends_with_sentinel() {
            self.0.push(SENTINEL);
        }
        self
    }
}

impl PvStr {
    /// Parses a whitespace-separated rendering such as `0 0 1 1 a 5 1 4 b`.
    /// Decimal tokens become numbers, single-character tokens constants.
    pub fn parse(s: &str) -> Option<Self> {
        s.split_whitespace()
            .map(|tok| match tok.parse::<u32>() {
                Ok(d) => Some(PvSym::Num(d)),
                Err(_) => {
                    let mut chars = tok.chars();
                    let c = chars.next()?;
                    chars.next().is_none().then_some(PvSym::Const(c as u32))
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(PvStr)
    }

    /// True when every `Num(d)` at position `i` has `d < i`.
    pub fn is_well_formed(&self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, s)| s.num().is_none_or(|d| (d as usize) <= i))
    }
}

impl fmt::Display for PvStr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Declares which bytes are parameters; every other byte is a constant.
/// The sentinel `$` is always a constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    params: [bool; 256],
}

impl Default for Alphabet {
    fn default() -> Self {
        Self::constants_only()
    }
}

impl Alphabet {
    pub fn constants_only() -> Self {
        Self {
            params: [false; 256],
        }
    }

    /// Builds a declaration from the list of parameter bytes. `$` is ignored.
    pub fn with_params(params: &[u8]) -> Self {
        let mut a = Self::constants_only();
        for &b in params {
            if b != SENTINEL_BYTE {
                a.params[b as usize] = true;
            }
        }
        a
    }

    pub fn is_param(&self, b: u8) -> bool {
        self.params[b as usize]
    }

    /// Parameter bytes in increasing order.
    pub fn param_bytes(&self) -> Vec<u8> {
        (0..=255u8).filter(|&b| self.params[b as usize]).collect()
    }

    pub fn encode(&self, text: &[u8]) -> PStr {
        text.iter()
            .map(|&b| {
                if self.is_param(b) {
                    PSym::Param(b as u32)
                } else {
                    PSym::Const(b as u32)
                }
            })
            .collect()
    }

    /// Inverse of [`Alphabet::encode`] for symbols whose codes are bytes.
    pub fn decode(w: &PStr) -> Vec<u8> {
        w.iter().map(|s| s.code() as u8).collect()
    }
}

/// Prev-encoding of `w`: constants are copied, the first occurrence of a
/// parameter becomes `0`, and a repeat at position `i` becomes `i - k` where
/// `k` is the previous occurrence of the same parameter.
pub fn prev_encode(w: &[PSym]) -> PvStr {
    let mut last: HashMap<u32, usize> = HashMap::new();
    w.iter()
        .enumerate()
        .map(|(i, &s)| match s {
            PSym::Const(c) => PvSym::Const(c),
            PSym::Param(p) => match last.insert(p, i) {
                Some(k) => PvSym::Num((i - k) as u32),
                None => PvSym::Num(0),
            },
        })
        .collect()
}

/// The k-re-encoding: any number at position `i` that points at or before
/// position `k - 1` relative to the start of `u` (`u[i] >= i - k + 1`) is
/// reset to `0`.
pub fn re_encode(u: &[PvSym], k: usize) -> PvStr {
    debug_assert!(k >= 1);
    u.iter()
        .enumerate()
        .map(|(idx, &s)| reencode_at(s, idx + 1, k))
        .collect()
}

/// One symbol of the k-re-encoding, at 1-based position `i`.
#[inline]
pub fn reencode_at(s: PvSym, i: usize, k: usize) -> PvSym {
    match s {
        PvSym::Num(d) if d as usize + k > i => PvSym::Num(0),
        other => other,
    }
}

/// The implicit suffix link on strings: drop the first symbol and re-encode.
pub fn sl_str(u: &[PvSym]) -> Result<PvStr> {
    match u.split_first() {
        None => Err(Error::EmptySuffixLink),
        Some((_, rest)) => Ok(re_encode(rest, 1)),
    }
}

/// Renames parameters of `w` through `f`; parameters missing from `f` map to
/// themselves. Fails if two distinct parameters of `w` end up with the same
/// name.
pub fn apply_bijection(w: &[PSym], f: &HashMap<u32, u32>) -> Result<PStr> {
    let mut preimage: HashMap<u32, u32> = HashMap::new();
    let mut out = Vec::with_capacity(w.len());
    for &s in w {
        match s {
            PSym::Const(_) => out.push(s),
            PSym::Param(p) => {
                let image = f.get(&p).copied().unwrap_or(p);
                match preimage.insert(image, p) {
                    Some(q) if q != p => {
                        return Err(Error::NotInjective {
                            first: q,
                            second: p,
                            image,
                        })
                    }
                    _ => {}
                }
                out.push(PSym::Param(image));
            }
        }
    }
    Ok(PStr(out))
}

/// p-match test for two p-strings of equal length.
pub fn is_pmatch(w1: &[PSym], w2: &[PSym]) -> bool {
    w1.len() == w2.len() && prev_encode(w1) == prev_encode(w2)
}
