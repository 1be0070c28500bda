use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::SymbolicError;

const RESERVED: &[char] = &[',', '(', ')', '[', ']', '{', '}', '<', '>', '+', '='];

/// A symbol token.
///
/// Base symbols are nonempty runs without whitespace, commas, brackets,
/// `+` or `=`. Products of symbolic matrices produce pair symbols rendered
/// `(α,b)`; pairs nest, so `((a,x),(x,a))` is also a symbol.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(id: &str) -> Result<Self, SymbolicError> {
        if is_valid_symbol(id) {
            Ok(Symbol(Arc::from(id)))
        } else {
            Err(SymbolicError::InvalidSymbol(id.to_string()))
        }
    }

    pub fn pair(first: &Symbol, second: &Symbol) -> Self {
        Symbol(Arc::from(format!("({},{})", first.0, second.0)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_pair(&self) -> bool {
        self.0.starts_with('(')
    }

    /// Splits a pair symbol into its two components.
    pub fn as_pair(&self) -> Option<(Symbol, Symbol)> {
        let inner = self.0.strip_prefix('(')?.strip_suffix(')')?;
        let split = top_level_comma(inner)?;
        Some((
            Symbol(Arc::from(&inner[..split])),
            Symbol(Arc::from(&inner[split + 1..])),
        ))
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

fn is_valid_symbol(s: &str) -> bool {
    if let Some(inner) = s.strip_prefix('(') {
        let Some(inner) = inner.strip_suffix(')') else {
            return false;
        };
        let Some(split) = top_level_comma(inner) else {
            return false;
        };
        return is_valid_symbol(&inner[..split]) && is_valid_symbol(&inner[split + 1..]);
    }
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Ordered, duplicate-free list of symbols. The order is the canonical
/// iteration and serialization order.
#[derive(Clone, Default)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<Symbol, usize>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Result<Self, SymbolicError> {
        let mut out = Alphabet::default();
        for s in symbols {
            if out.index.contains_key(&s) {
                return Err(SymbolicError::DuplicateSymbol(s));
            }
            out.index.insert(s.clone(), out.symbols.len());
            out.symbols.push(s);
        }
        Ok(out)
    }

    /// Convenience for tests and literals; panics on invalid or duplicate ids.
    pub fn from_ids(ids: &[&str]) -> Self {
        Self::new(
            ids.iter()
                .map(|id| Symbol::new(id).expect("valid symbol id")),
        )
        .expect("duplicate-free alphabet")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.symbols.iter()
    }

    pub fn get(&self, i: usize) -> &Symbol {
        &self.symbols[i]
    }

    pub fn index_of(&self, s: &Symbol) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.index.contains_key(s)
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.symbols).finish()
    }
}
