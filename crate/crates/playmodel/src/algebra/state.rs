//! States, input symbols and input words.
//!
//! A game state is a discrete mode plus a game-specific payload. Inputs are
//! tagged symbols with optional integer arguments drawn from a finite
//! alphabet; finite sequences of symbols form words under concatenation,
//! with the empty word as identity.

use std::fmt;
use std::hash::Hash;

/// Game-specific state payload.
///
/// `canon` must be a stable, injective, whitespace-free encoding of the
/// payload: it is used for trace files, content hashing and orbit-instance
/// comparison, so two payloads are equal exactly when their canon strings
/// are equal.
pub trait Payload: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    fn canon(&self) -> String;
}

/// Discrete mode identifier (an element of the model's mode set `Q`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mode(String);

impl Mode {
    pub fn new(name: impl Into<String>) -> Self {
        Mode(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A full game state: mode plus payload.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GameState<P: Payload> {
    pub mode: Mode,
    pub payload: P,
}

impl<P: Payload> GameState<P> {
    pub fn new(mode: Mode, payload: P) -> Self {
        GameState { mode, payload }
    }

    /// Canonical serialization of the whole state. Whitespace-free.
    pub fn canon(&self) -> String {
        let text = format!("{}|{}", self.mode, self.payload.canon());
        debug_assert!(
            !text.contains(char::is_whitespace),
            "canonical state serialization must not contain whitespace: {text:?}"
        );
        text
    }
}

/// One input: a tag from the alphabet plus optional integer arguments.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct InputSymbol {
    pub tag: String,
    pub args: Vec<i64>,
}

impl InputSymbol {
    pub fn new(tag: impl Into<String>, args: Vec<i64>) -> Self {
        InputSymbol { tag: tag.into(), args }
    }

    pub fn nullary(tag: impl Into<String>) -> Self {
        Self::new(tag, Vec::new())
    }

    pub fn unary(tag: impl Into<String>, arg: i64) -> Self {
        Self::new(tag, vec![arg])
    }

    /// Text form used in trace files: `tag` or `tag@a1,a2`.
    pub fn parse(text: &str) -> Option<InputSymbol> {
        let (tag, rest) = match text.split_once('@') {
            Some((tag, rest)) => (tag, Some(rest)),
            None => (text, None),
        };
        if tag.is_empty() || tag.contains(char::is_whitespace) {
            return None;
        }
        let args = match rest {
            None => Vec::new(),
            Some(rest) => {
                let mut args = Vec::new();
                for part in rest.split(',') {
                    args.push(part.parse().ok()?);
                }
                args
            }
        };
        Some(InputSymbol::new(tag, args))
    }
}

impl fmt::Display for InputSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag)?;
        for (i, arg) in self.args.iter().enumerate() {
            f.write_str(if i == 0 { "@" } else { "," })?;
            write!(f, "{arg}")?;
        }
        Ok(())
    }
}

/// Shape of one symbol family: a tag plus inclusive ranges for each argument.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolSchema {
    pub tag: String,
    pub arg_ranges: Vec<(i64, i64)>,
}

impl SymbolSchema {
    pub fn nullary(tag: impl Into<String>) -> Self {
        SymbolSchema { tag: tag.into(), arg_ranges: Vec::new() }
    }

    pub fn unary(tag: impl Into<String>, lo: i64, hi: i64) -> Self {
        SymbolSchema { tag: tag.into(), arg_ranges: vec![(lo, hi)] }
    }

    pub fn admits(&self, sym: &InputSymbol) -> bool {
        sym.tag == self.tag
            && sym.args.len() == self.arg_ranges.len()
            && sym
                .args
                .iter()
                .zip(&self.arg_ranges)
                .all(|(a, (lo, hi))| lo <= a && a <= hi)
    }

    /// True when every symbol this schema admits is also admitted by `other`.
    pub fn within(&self, other: &SymbolSchema) -> bool {
        self.tag == other.tag
            && self.arg_ranges.len() == other.arg_ranges.len()
            && self
                .arg_ranges
                .iter()
                .zip(&other.arg_ranges)
                .all(|((lo, hi), (olo, ohi))| olo <= lo && hi <= ohi)
    }

    fn enumerate_into(&self, out: &mut Vec<InputSymbol>) {
        fn expand(tag: &str, ranges: &[(i64, i64)], prefix: &mut Vec<i64>, out: &mut Vec<InputSymbol>) {
            match ranges.split_first() {
                None => out.push(InputSymbol::new(tag, prefix.clone())),
                Some(((lo, hi), rest)) => {
                    for v in *lo..=*hi {
                        prefix.push(v);
                        expand(tag, rest, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        expand(&self.tag, &self.arg_ranges, &mut Vec::new(), out);
    }
}

/// Finite input alphabet: a set of symbol schemas with distinct tags.
#[derive(Clone, Debug)]
pub struct Alphabet {
    schemas: Vec<SymbolSchema>,
}

impl Alphabet {
    /// Panics if two schemas share a tag; the alphabet must route each tag
    /// to exactly one family.
    pub fn new(schemas: Vec<SymbolSchema>) -> Self {
        for (i, a) in schemas.iter().enumerate() {
            for b in &schemas[i + 1..] {
                assert!(a.tag != b.tag, "duplicate alphabet tag {:?}", a.tag);
            }
        }
        Alphabet { schemas }
    }

    pub fn empty() -> Self {
        Alphabet { schemas: Vec::new() }
    }

    pub fn schemas(&self) -> &[SymbolSchema] {
        &self.schemas
    }

    pub fn contains(&self, sym: &InputSymbol) -> bool {
        self.schemas.iter().any(|s| s.admits(sym))
    }

    /// True when every symbol admitted here is admitted by `other`.
    pub fn subset_of(&self, other: &Alphabet) -> bool {
        self.schemas
            .iter()
            .all(|s| other.schemas.iter().any(|o| s.within(o)))
    }

    pub fn shares_tag_with(&self, other: &Alphabet) -> Option<&str> {
        self.schemas
            .iter()
            .find(|s| other.schemas.iter().any(|o| o.tag == s.tag))
            .map(|s| s.tag.as_str())
    }

    /// All symbols of the alphabet, in declaration order.
    pub fn symbols(&self) -> Vec<InputSymbol> {
        let mut out = Vec::new();
        for schema in &self.schemas {
            schema.enumerate_into(&mut out);
        }
        out
    }

    pub fn renamed(&self, prefix: &str) -> Alphabet {
        Alphabet {
            schemas: self
                .schemas
                .iter()
                .map(|s| SymbolSchema {
                    tag: format!("{prefix}{}", s.tag),
                    arg_ranges: s.arg_ranges.clone(),
                })
                .collect(),
        }
    }
}

/// A finite input word. Concatenation is associative and the empty word is
/// a two-sided identity, which makes words a monoid by construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct InputWord(Vec<InputSymbol>);

impl InputWord {
    pub fn empty() -> Self {
        InputWord(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<InputSymbol>) -> Self {
        InputWord(symbols)
    }

    pub fn concat(&self, other: &InputWord) -> InputWord {
        let mut symbols = self.0.clone();
        symbols.extend(other.0.iter().cloned());
        InputWord(symbols)
    }

    pub fn push(&mut self, sym: InputSymbol) {
        self.0.push(sym);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[InputSymbol] {
        &self.0
    }

    pub fn prefix(&self, len: usize) -> InputWord {
        InputWord(self.0[..len].to_vec())
    }

    pub fn slice(&self, start: usize, end: usize) -> InputWord {
        InputWord(self.0[start..end].to_vec())
    }
}

impl fmt::Display for InputWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, sym) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_text_round_trip() {
        for sym in [
            InputSymbol::nullary("left"),
            InputSymbol::unary("place", 5),
            InputSymbol::new("pair", vec![3, -4]),
        ] {
            let text = sym.to_string();
            assert_eq!(InputSymbol::parse(&text), Some(sym));
        }
        assert_eq!(InputSymbol::parse(""), None);
        assert_eq!(InputSymbol::parse("place@x"), None);
    }

    #[test]
    fn schema_enumeration_and_membership() {
        let alphabet = Alphabet::new(vec![
            SymbolSchema::unary("place", 1, 9),
            SymbolSchema::nullary("pass"),
        ]);
        assert_eq!(alphabet.symbols().len(), 10);
        assert!(alphabet.contains(&InputSymbol::unary("place", 9)));
        assert!(!alphabet.contains(&InputSymbol::unary("place", 10)));
        assert!(!alphabet.contains(&InputSymbol::nullary("place")));
        assert!(!alphabet.contains(&InputSymbol::unary("pass", 1)));
    }

    #[test]
    fn alphabet_subset_uses_argument_ranges() {
        let narrow = Alphabet::new(vec![SymbolSchema::unary("place", 2, 4)]);
        let wide = Alphabet::new(vec![
        SymbolSchema::unary("place", 1, 9),
            SymbolSchema::nullary("pass"),
        ]);
        assert!(narrow.subset_of(&wide));
        assert!(!wide.subset_of(&narrow));
    }

    #[test]
    fn word_concat_and_prefix() {
        let a = InputWord::from_symbols(vec![InputSymbol::unary("place", 1)]);
        let b = InputWord::from_symbols(vec![
            InputSymbol::unary("place", 2),
            InputSymbol::unary("place", 3),
        ]);
        let ab = a.concat(&b);
        assert_eq!(ab.len(), 3);
        assert_eq!(ab.prefix(1), a);
        assert_eq!(ab.slice(1, 3), b);
        assert_eq!(a.concat(&InputWord::empty()), a);
        assert_eq!(InputWord::empty().concat(&a), a);
    }
}
