//! Concept hierarchy: item codes, the code/name table and level navigation.
//!
//! Every node of the hierarchy is identified by a fixed-width code of depth D:
//! the first k symbols are branch digits (1-9) and the remaining symbols are
//! `*`. The digit prefix length is the node's level, so `2**` is the level-1
//! ancestor of the leaf `222` and the first k digits of any code name its
//! level-k ancestor directly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Why a code string failed to parse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeErrorKind {
    Empty,
    WrongLength,
    BadSymbol,
    StarBeforeDigit,
    AllStars,
}

impl fmt::Display for CodeErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            CodeErrorKind::Empty => "code is empty",
            CodeErrorKind::WrongLength => "code length does not match the taxonomy depth",
            CodeErrorKind::BadSymbol => "code symbols must be digits 1-9 or `*`",
            CodeErrorKind::StarBeforeDigit => "digits may not follow `*`",
            CodeErrorKind::AllStars => "code must have at least one digit",
        };
        f.write_str(msg)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TaxonomyError {
    #[error("invalid code `{text}`{}: {kind}", fmt_line(.line))]
    InvalidCode {
        text: String,
        line: Option<usize>,
        kind: CodeErrorKind,
    },
    #[error("duplicate code `{code}` on line {line}")]
    DuplicateCode { code: String, line: usize },
    #[error("duplicate name `{name}` on line {line}")]
    DuplicateName { name: String, line: usize },
    #[error("entry `{code}` has no level-{} ancestor entry `{ancestor}`", .level - 1)]
    MissingAncestor {
        code: String,
        ancestor: String,
        level: u8,
    },
    #[error("unknown code `{0}`")]
    UnknownCode(String),
    #[error("level {level} out of range {min}..={max}")]
    LevelOutOfRange { level: u8, min: u8, max: u8 },
    #[error("line {line}: expected `code,name`")]
    MalformedRow { line: usize },
    #[error("taxonomy has no entries")]
    Empty,
}

fn fmt_line(line: &Option<usize>) -> String {
    match line {
        Some(n) => format!(" on line {n}"),
        None => String::new(),
    }
}

/// A taxonomy node identifier: digit prefix plus `*` padding to a fixed depth.
///
/// Ordering follows the rendered text (`1**` < `11*` < `111` < `2**`), which
/// is what keeps itemset tables and trace output deterministic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ItemCode {
    digits: Vec<u8>,
    depth: u8,
}

impl ItemCode {
    /// Parses a code such as `"222"` or `"41*"` against a known depth.
    pub fn parse(text: &str, depth: u8) -> Result<Self, TaxonomyError> {
        Self::parse_at(text, depth, None)
    }

    fn parse_at(text: &str, depth: u8, line: Option<usize>) -> Result<Self, TaxonomyError> {
        let fail = |kind| TaxonomyError::InvalidCode {
            text: text.to_string(),
            line,
            kind,
        };
        if text.is_empty() {
            return Err(fail(CodeErrorKind::Empty));
        }
        if text.chars().count() != depth as usize {
            return Err(fail(CodeErrorKind::WrongLength));
        }
        let mut digits = Vec::new();
        let mut seen_star = false;
        for c in text.chars() {
            match c {
                '1'..='9' => {
                    if seen_star {
                        return Err(fail(CodeErrorKind::StarBeforeDigit));
                    }
                    digits.push(c as u8 - b'0');
                }
                '*' => seen_star = true,
                _ => return Err(fail(CodeErrorKind::BadSymbol)),
            }
        }
        if digits.is_empty() {
            return Err(fail(CodeErrorKind::AllStars));
        }
        Ok(ItemCode { digits, depth })
    }

    /// Number of leading digits; level 1 is the most general.
    pub fn level(&self) -> u8 {
        self.digits.len() as u8
    }

    pub fn depth(&self) -> u8 {
        self.depth
    }

    pub fn is_leaf(&self) -> bool {
        self.level() == self.depth
    }

    /// The code sharing this one's first `k` digits, `*`-padded.
    pub fn ancestor(&self, k: u8) -> Result<ItemCode, TaxonomyError> {
        if k < 1 || k > self.level() {
            return Err(TaxonomyError::LevelOutOfRange {
                level: k,
                min: 1,
                max: self.level(),
            });
        }
        Ok(ItemCode {
            digits: self.digits[..k as usize].to_vec(),
            depth: self.depth,
        })
    }

    /// True when `other` is this code's level-k ancestor for k = other.level().
    pub fn descends_from(&self, other: &ItemCode) -> bool {
        other.level() <= self.level() && self.digits[..other.level() as usize] == other.digits[..]
    }
}

impl fmt::Display for ItemCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        for _ in self.level()..self.depth {
            f.write_str("*")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ItemCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The loaded concept hierarchy: code -> name for every node, leaf and internal.
#[derive(Debug, Clone)]
pub struct Taxonomy {
    depth: u8,
    names: BTreeMap<ItemCode, String>,
    children: BTreeMap<ItemCode, BTreeSet<ItemCode>>,
}

impl Taxonomy {
    /// Parses a `code,name` table. Lines starting with `#` and blank lines are
    /// skipped; a leading `code,name` header row is tolerated. Depth is the
    /// longest code in the file and shorter codes are `*`-padded to it.
    pub fn parse(source: &str) -> Result<Self, TaxonomyError> {
        let mut rows: Vec<(usize, &str, &str)> = Vec::new();
        for (idx, raw) in source.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (code, name) = line
                .split_once(',')
                .ok_or(TaxonomyError::MalformedRow { line: idx + 1 })?;
            let (code, name) = (code.trim(), name.trim());
            if rows.is_empty() && code.eq_ignore_ascii_case("code") {
                continue; // header row
            }
            if name.is_empty() {
                return Err(TaxonomyError::MalformedRow { line: idx + 1 });
            }
            rows.push((idx + 1, code, name));
        }
        if rows.is_empty() {
            return Err(TaxonomyError::Empty);
        }
        let depth = rows
            .iter()
            .map(|(_, c, _)| c.chars().count())
            .max()
            .unwrap() as u8;

        let mut names: BTreeMap<ItemCode, String> = BTreeMap::new();
        let mut by_name: BTreeMap<&str, ItemCode> = BTreeMap::new();
        for (line, code_text, name) in rows {
            // pad short rows to the inferred depth before parsing
            let padded;
            let text = if code_text.chars().count() < depth as usize {
                padded = format!(
                    "{code_text}{}",
                    "*".repeat(depth as usize - code_text.chars().count())
                );
                padded.as_str()
            } else {
                code_text
            };
            let code = ItemCode::parse_at(text, depth, Some(line))?;
            if names.contains_key(&code) {
                return Err(TaxonomyError::DuplicateCode {
                    code: code.to_string(),
                    line,
                });
            }
            if by_name.contains_key(name) {
                return Err(TaxonomyError::DuplicateName {
                    name: name.to_string(),
                    line,
                });
            }
            by_name.insert(name, code.clone());
            names.insert(code, name.to_string());
        }

        let mut children: BTreeMap<ItemCode, BTreeSet<ItemCode>> = BTreeMap::new();
        for code in names.keys() {
            if code.level() > 1 {
                let parent = code.ancestor(code.level() - 1).expect("level > 1");
                if !names.contains_key(&parent) {
                    return Err(TaxonomyError::MissingAncestor {
                        code: code.to_string(),
                        ancestor: parent.to_string(),
                        level: code.level(),
                    });
                }
                children.entry(parent).or_default().insert(code.clone());
            }
        }

        Ok(Taxonomy {
            depth,
            names,
            children,
        })
    }

    pub fn depth(&self) -> u8 {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn contains(&self, code: &ItemCode) -> bool {
        self.names.contains_key(code)
    }

    pub fn name_of(&self, code: &ItemCode) -> Result<&str, TaxonomyError> {
        self.names
            .get(code)
            .map(String::as_str)
            .ok_or_else(|| TaxonomyError::UnknownCode(code.to_string()))
    }

    /// Entries one level below `code` whose prefix matches it. Errors at leaf
    /// level, where no deeper entries can exist.
    pub fn children(&self, code: &ItemCode) -> Result<BTreeSet<ItemCode>, TaxonomyError> {
        if code.level() >= self.depth {
            return Err(TaxonomyError::LevelOutOfRange {
                level: code.level() + 1,
                min: 1,
                max: self.depth,
            });
        }
        Ok(self.children.get(code).cloned().unwrap_or_default())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&ItemCode, &str)> {
        self.names.iter().map(|(c, n)| (c, n.as_str()))
    }

    /// All entries at one level, in code order.
    pub fn entries_at_level(&self, level: u8) -> Vec<ItemCode> {
        self.names
            .keys()
            .filter(|c| c.level() == level)
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(text: &str) -> ItemCode {
        ItemCode::parse(text, 3).unwrap()
    }

    #[test]
    fn parse_leaf_and_internal_codes() {
        let c = code("122");
        assert_eq!(c.level(), 3);
        assert!(c.is_leaf());
        assert_eq!(c.to_string(), "122");

        let c = code("2**");
        assert_eq!(c.level(), 1);
        assert!(!c.is_leaf());
        assert_eq!(c.to_string(), "2**");
    }

    #[test]
    fn parse_rejects_malformed_codes() {
        let kind = |r: Result<ItemCode, TaxonomyError>| match r.unwrap_err() {
            TaxonomyError::InvalidCode { kind, .. } => kind,
            other => panic!("unexpected error {other:?}"),
        };
        assert_eq!(
            kind(ItemCode::parse("2*1", 3)),
            CodeErrorKind::StarBeforeDigit
        );
        assert_eq!(kind(ItemCode::parse("***", 3)), CodeErrorKind::AllStars);
        assert_eq!(kind(ItemCode::parse("12", 3)), CodeErrorKind::WrongLength);
        assert_eq!(kind(ItemCode::parse("1220", 3)), CodeErrorKind::WrongLength);
        assert_eq!(kind(ItemCode::parse("0**", 3)), CodeErrorKind::BadSymbol);
        assert_eq!(kind(ItemCode::parse("1a*", 3)), CodeErrorKind::BadSymbol);
        assert_eq!(kind(ItemCode::parse("", 3)), CodeErrorKind::Empty);
    }

    #[test]
    fn ancestor_prefixes() {
        assert_eq!(code("222").ancestor(1).unwrap(), code("2**"));
        assert_eq!(code("122").ancestor(3).unwrap(), code("122"));
        assert_eq!(code("411").ancestor(2).unwrap(), code("41*"));
        assert!(matches!(
            code("41*").ancestor(3),
            Err(TaxonomyError::LevelOutOfRange { .. })
        ));
        assert!(matches!(
            code("41*").ancestor(0),
            Err(TaxonomyError::LevelOutOfRange { .. })
        ));
    }

    #[test]
    fn code_ordering_matches_rendered_text() {
        let mut codes = [
            code("21*"),
            code("2**"),
            code("111"),
            code("1**"),
            code("11*"),
        ];
        codes.sort();
        let rendered: Vec<String> = codes.iter().map(|c| c.to_string()).collect();
        let mut by_text = rendered.clone();
        by_text.sort();
        assert_eq!(rendered, by_text);
        assert_eq!(rendered, vec!["1**", "11*", "111", "2**", "21*"]);
    }

    #[test]
    fn load_the_demo_taxonomy() {
        let tax = Taxonomy::parse(crate::fixture::TAXONOMY_CSV).unwrap();
        assert_eq!(tax.depth(), 3);
        assert_eq!(tax.len(), 26); // 14 leaves, 12 internal nodes
        assert_eq!(
            tax.name_of(&code("111")).unwrap(),
            "Dairyland chocolate milk"
        );
        assert_eq!(tax.name_of(&code("41*")).unwrap(), "Black tea beverage");
        assert_eq!(tax.entries_at_level(1).len(), 4);
        assert_eq!(tax.entries_at_level(3).len(), 14);
        let kids = tax.children(&code("41*")).unwrap();
        assert_eq!(kids, [code("411"), code("412")].into_iter().collect());
    }

    #[test]
    fn load_minimal_taxonomy() {
        let tax = Taxonomy::parse("1**,Milk\n").unwrap();
        assert_eq!(tax.depth(), 3);
        assert_eq!(tax.len(), 1);
        assert_eq!(tax.name_of(&code("1**")).unwrap(), "Milk");
    }

    #[test]
    fn load_rejects_missing_ancestor() {
        let err = Taxonomy::parse("111,A\n").unwrap_err();
        assert!(matches!(err, TaxonomyError::MissingAncestor { .. }));

        // level-2 entry present but level-1 missing
        let err = Taxonomy::parse("11*,A\n111,B\n").unwrap_err();
        assert!(matches!(err, TaxonomyError::MissingAncestor { .. }));
    }

    #[test]
    fn load_rejects_duplicates() {
        let err = Taxonomy::parse("1**,Milk\n1**,Bread\n").unwrap_err();
        assert!(matches!(err, TaxonomyError::DuplicateCode { line: 2, .. }));

        let err = Taxonomy::parse("1**,Milk\n2**,Milk\n").unwrap_err();
        assert!(matches!(err, TaxonomyError::DuplicateName { line: 2, .. }));
    }

    #[test]
    fn load_reports_row_numbers() {
        let err = Taxonomy::parse("1**,Milk\n# comment\n2x*,Bad\n").unwrap_err();
        assert_eq!(
            err,
            TaxonomyError::InvalidCode {
                text: "2x*".into(),
                line: Some(3),
                kind: CodeErrorKind::BadSymbol,
            }
        );
    }

    #[test]
    fn load_tolerates_header_and_comments() {
        let tax =
            Taxonomy::parse("# taxonomy\ncode,name\n1**,Milk\n\n11*,Chocolate milk\n").unwrap();
        assert_eq!(tax.len(), 2);
    }

    #[test]
    fn load_pads_short_codes() {
        let tax = Taxonomy::parse("1,Milk\n11,Chocolate milk\n111,Dairyland\n").unwrap();
        assert_eq!(tax.depth(), 3);
        assert_eq!(tax.name_of(&code("1**")).unwrap(), "Milk");
        assert_eq!(tax.name_of(&code("11*")).unwrap(), "Chocolate milk");
    }

    #[test]
    fn children_and_errors() {
        let tax = Taxonomy::parse("2**,Bread\n21*,White bread\n22*,Wheat bread\n").unwrap();
        let kids = tax.children(&code("2**")).unwrap();
        assert_eq!(kids, [code("21*"), code("22*")].into_iter().collect());
        // level-2 node with no children: empty set, not an error
        assert!(tax.children(&code("21*")).unwrap().is_empty());
        assert!(matches!(
            Taxonomy::parse("2**,Bread\n").unwrap().children(&code("2**")),
            Ok(s) if s.is_empty()
        ));

        let leaf_tax = Taxonomy::parse("1,Milk\n").unwrap();
        assert!(matches!(
            leaf_tax.children(&ItemCode::parse("1", 1).unwrap()),
            Err(TaxonomyError::LevelOutOfRange { .. })
        ));
    }

    #[test]
    fn name_of_unknown_code() {
        let tax = Taxonomy::parse("1**,Milk\n").unwrap();
        assert!(matches!(
            tax.name_of(&code("999")),
            Err(TaxonomyError::UnknownCode(_))
        ));
    }
}
