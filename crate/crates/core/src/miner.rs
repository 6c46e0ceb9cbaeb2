//! The level-wise mining loop: per-level minimum supports, frequent itemset
//! tables, candidate generation under downward closure, optional parent
//! filtering, plus an exhaustive oracle for equivalence testing.
//!
//! Mining proceeds top-down: level 1 first, each level feeding the next.
//! Within a level, 1-itemset candidates are the level-k groups occurring in
//! the qualified set (restricted to children of frequent level-(k-1) items
//! when parent filtering is on); p-itemset candidates are those whose
//! (p-1)-subsets are all frequent. A level ends when no candidates survive;
//! mining ends when a level produces no frequent 1-itemsets.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use thiserror::Error;

use crate::fraction::Fraction;
use crate::membership::{support_grouped, Itemset};
use crate::taxonomy::{ItemCode, Taxonomy};
use crate::transactions::{GroupedTransaction, TransactionSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MiningError {
    #[error("no minimum support configured for level {level} {size}-itemsets")]
    MissingMinSupport { level: u8, size: usize },
    #[error("invalid mining configuration: {0}")]
    InvalidConfig(String),
    #[error("level {level} candidates need the frequent 1-itemsets of level {}", .level - 1)]
    MissingParentTable { level: u8 },
    #[error("cannot enumerate {size}-subsets of a {universe}-item universe")]
    UniverseTooLarge { universe: usize, size: usize },
}

/// Per-level minimum supports with optional per-(level, size) overrides.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MinimumSupports {
    per_level: BTreeMap<u8, Fraction>,
    per_size: BTreeMap<(u8, usize), Fraction>,
}

impl MinimumSupports {
    pub fn new() -> Self {
        Self::default()
    }

    /// Default threshold for every itemset size at `level`.
    pub fn set_level(&mut self, level: u8, alpha: Fraction) -> Result<(), MiningError> {
        Self::check_positive(alpha)?;
        self.per_level.insert(level, alpha);
        Ok(())
    }

    /// Override for `size`-itemsets at `level`; wins over the level default.
    pub fn set_level_size(
        &mut self,
        level: u8,
        size: usize,
        alpha: Fraction,
    ) -> Result<(), MiningError> {
        Self::check_positive(alpha)?;
        self.per_size.insert((level, size), alpha);
        Ok(())
    }

    fn check_positive(alpha: Fraction) -> Result<(), MiningError> {
        if alpha.is_zero() {
            return Err(MiningError::InvalidConfig(
                "minimum support must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn alpha(&self, level: u8, size: usize) -> Option<Fraction> {
        self.per_size
            .get(&(level, size))
            .or_else(|| self.per_level.get(&level))
            .copied()
    }

    pub fn is_empty(&self) -> bool {
        self.per_level.is_empty() && self.per_size.is_empty()
    }

    /// Parses `k=v[,k.p=v]...` entries, e.g. `1=1.1,1.1=2.0,2=1,3=0.33`.
    /// The left side is a level or `level.size`; values accept decimals,
    /// integers or `n/d`.
    pub fn parse_entries(&mut self, spec: &str) -> Result<(), MiningError> {
        for entry in spec.split(',') {
            let entry = entry.trim();
            if entry.is_empty() {
                continue;
            }
            let (key, value) = entry.split_once('=').ok_or_else(|| {
                MiningError::InvalidConfig(format!("expected `level=value` in `{entry}`"))
            })?;
            let alpha: Fraction = value.trim().parse().map_err(|e| {
                MiningError::InvalidConfig(format!("bad minimum support in `{entry}`: {e}"))
            })?;
            let key = key.trim();
            if let Some((level, size)) = key.split_once('.') {
                let level = Self::parse_level(level, entry)?;
                let size: usize = size.trim().parse().map_err(|_| {
                    MiningError::InvalidConfig(format!("bad itemset size in `{entry}`"))
                })?;
                if size == 0 {
                    return Err(MiningError::InvalidConfig(format!(
                        "itemset size must be at least 1 in `{entry}`"
                    )));
                }
                self.set_level_size(level, size, alpha)?;
            } else {
                let level = Self::parse_level(key, entry)?;
                self.set_level(level, alpha)?;
            }
        }
        Ok(())
    }

    fn parse_level(text: &str, entry: &str) -> Result<u8, MiningError> {
        let level: u8 = text
            .trim()
            .parse()
            .map_err(|_| MiningError::InvalidConfig(format!("bad level in `{entry}`")))?;
        if level == 0 {
            return Err(MiningError::InvalidConfig(format!(
                "levels start at 1 in `{entry}`"
            )));
        }
        Ok(level)
    }
}

/// Everything the mining run needs beyond the data itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiningConfig {
    /// Maximum transaction cardinality admitted into the qualified set.
    pub gamma: u32,
    pub min_support: MinimumSupports,
    /// Cap on itemset size; None mines until candidates run out.
    pub max_p: Option<usize>,
    /// Cap on taxonomy level; None mines to the taxonomy depth.
    pub max_level: Option<u8>,
    /// Restrict level-k items to children of frequent level-(k-1) items.
    pub parent_filter: bool,
    /// Collapse repeated items in a transaction before qualifying.
    pub dedupe_items: bool,
    /// Threshold applied by rule generation.
    pub min_confidence: Fraction,
    /// Expected tables to diff against; differences become divergence notes.
    pub reference: Option<ReferenceTables>,
}

impl MiningConfig {
    pub fn new(gamma: u32) -> Self {
        MiningConfig {
            gamma,
            min_support: MinimumSupports::new(),
            max_p: None,
            max_level: None,
            parent_filter: true,
            dedupe_items: false,
            min_confidence: Fraction::new(1, 2),
            reference: None,
        }
    }

    pub fn validate(&self) -> Result<(), MiningError> {
        if self.gamma < 1 {
            return Err(MiningError::InvalidConfig(
                "gamma must be at least 1".into(),
            ));
        }
        if self.min_support.is_empty() {
            return Err(MiningError::InvalidConfig(
                "at least one minimum support is required".into(),
            ));
        }
        if self.min_confidence > Fraction::one() {
            return Err(MiningError::InvalidConfig(
                "minimum confidence must lie in [0, 1]".into(),
            ));
        }
        if self.max_p == Some(0) {
            return Err(MiningError::InvalidConfig(
                "max-p must be at least 1".into(),
            ));
        }
        if self.max_level == Some(0) {
            return Err(MiningError::InvalidConfig(
                "max-level must be at least 1".into(),
            ));
        }
        Ok(())
    }

    fn alpha(&self, level: u8, size: usize) -> Result<Fraction, MiningError> {
        self.min_support
            .alpha(level, size)
            .ok_or(MiningError::MissingMinSupport { level, size })
    }
}

/// The frequent p-itemsets of one level with their exact supports, in
/// canonical (code-lexicographic) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequentItemsetTable {
    level: u8,
    size: usize,
    rows: Vec<(Itemset, Fraction)>,
}

impl FrequentItemsetTable {
    pub fn new(level: u8, size: usize, mut rows: Vec<(Itemset, Fraction)>) -> Self {
        debug_assert!(rows
            .iter()
            .all(|(s, _)| s.level() == level && s.len() == size));
        rows.sort_by(|(a, _), (b, _)| a.cmp(b));
        rows.dedup_by(|(a, _), (b, _)| a == b);
        FrequentItemsetTable { level, size, rows }
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> &[(Itemset, Fraction)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn itemsets(&self) -> impl Iterator<Item = &Itemset> {
        self.rows.iter().map(|(s, _)| s)
    }

    pub fn contains(&self, itemset: &Itemset) -> bool {
        self.support_of(itemset).is_some()
    }

    pub fn support_of(&self, itemset: &Itemset) -> Option<Fraction> {
        self.rows
            .binary_search_by(|(s, _)| s.cmp(itemset))
            .ok()
            .map(|i| self.rows[i].1)
    }
}

/// Expected frequent-itemset tables, used to diff a run against known-good
/// output. Supports are compared after two-decimal rounding.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReferenceTables {
    tables: BTreeMap<(u8, usize), Vec<(Itemset, String)>>,
}

impl ReferenceTables {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_row(&mut self, itemset: Itemset, support_2dp: &str) {
        let key = (itemset.level(), itemset.len());
        let rows = self.tables.entry(key).or_default();
        rows.push((itemset, support_2dp.to_string()));
        rows.sort_by(|(a, _), (b, _)| a.cmp(b));
    }

    pub fn tables(&self) -> impl Iterator<Item = (&(u8, usize), &Vec<(Itemset, String)>)> {
        self.tables.iter()
    }

    fn get(&self, level: u8, size: usize) -> Option<&Vec<(Itemset, String)>> {
        self.tables.get(&(level, size))
    }
}

/// The full outcome of a mining run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiningResult {
    tables: BTreeMap<(u8, usize), FrequentItemsetTable>,
    qualified_count: usize,
    config: MiningConfig,
    divergence_notes: Vec<String>,
}

impl MiningResult {
    pub fn table(&self, level: u8, size: usize) -> Option<&FrequentItemsetTable> {
        self.tables.get(&(level, size))
    }

    /// All non-empty tables in (level, size) order.
    pub fn tables(&self) -> impl Iterator<Item = &FrequentItemsetTable> {
        self.tables.values()
    }

    /// |M|, the number of qualified transactions the run saw.
    pub fn qualified_count(&self) -> usize {
        self.qualified_count
    }

    pub fn config(&self) -> &MiningConfig {
        &self.config
    }

    /// Differences against the configured reference tables, if any.
    pub fn divergence_notes(&self) -> &[String] {
        &self.divergence_notes
    }

    /// Looks a support up across tables; used by rule generation.
    pub fn support_of(&self, itemset: &Itemset) -> Option<Fraction> {
        self.table(itemset.level(), itemset.len())
            .and_then(|t| t.support_of(itemset))
    }
}

/// Candidate 1-itemsets for a level: every level-k group occurring in the
/// qualified set, restricted to children of frequent level-(k-1) items when
/// parent filtering is on.
pub fn level_candidates_1(
    m: &TransactionSet,
    level: u8,
    previous: Option<&FrequentItemsetTable>,
    cfg: &MiningConfig,
) -> Result<Vec<Itemset>, MiningError> {
    debug_assert!(level >= 1);
    debug_assert!(
        level > 1 || previous.is_none(),
        "level 1 takes no parent table"
    );
    debug_assert!(previous.is_none_or(|p| p.level() == level - 1 && p.size() == 1));
    let frequent_parents: Option<BTreeSet<&ItemCode>> = if level > 1 && cfg.parent_filter {
        let table = previous.ok_or(MiningError::MissingParentTable { level })?;
        Some(table.itemsets().flat_map(|s| s.members()).collect())
    } else {
        None
    };

    let mut groups: BTreeSet<ItemCode> = BTreeSet::new();
    for grouped in m.group_at_level(level) {
        for (code, _) in grouped.groups() {
            groups.insert(code.clone());
        }
    }

    Ok(groups
        .into_iter()
        .filter(|code| match &frequent_parents {
            Some(parents) => {
                let parent = code.ancestor(level - 1).expect("level > 1");
                parents.contains(&parent)
            }
            None => true,
        })
        .map(Itemset::singleton)
        .collect())
}

/// Candidate p-itemsets from the frequent (p-1)-itemsets: every p-subset of
/// the occurring items all of whose (p-1)-subsets are frequent.
pub fn generate_candidates(l_prev: &FrequentItemsetTable) -> Vec<Itemset> {
    let frequent: BTreeSet<&Itemset> = l_prev.itemsets().collect();
    let items: Vec<&ItemCode> = l_prev
        .itemsets()
        .flat_map(|s| s.members())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let size = l_prev.size() + 1;

    items
        .into_iter()
        .combinations(size)
        .filter_map(|combo| {
            let all_subsets_frequent = combo.iter().combinations(size - 1).all(|subset| {
                let sub = Itemset::new(subset.into_iter().map(|c| (*c).clone()))
                    .expect("subsets of a candidate are non-empty");
                frequent.contains(&sub)
            });
            if !all_subsets_frequent {
                return None;
            }
            Some(Itemset::new(combo.into_iter().cloned()).expect("candidate is non-empty"))
        })
        .collect()
}

/// Keeps the candidates whose support meets `alpha` (inclusive), with their
/// exact supports. Level and size are taken from the candidates.
pub fn filter_frequent(
    candidates: &[Itemset],
    m: &TransactionSet,
    alpha: Fraction,
) -> FrequentItemsetTable {
    let (level, size) = candidates
        .first()
        .map(|s| (s.level(), s.len()))
        .unwrap_or((0, 0));
    filter_frequent_grouped(
        level,
        size,
        candidates,
        &m.group_at_level(level.max(1)),
        alpha,
    )
}

fn filter_frequent_grouped(
    level: u8,
    size: usize,
    candidates: &[Itemset],
    grouped: &[GroupedTransaction],
    alpha: Fraction,
) -> FrequentItemsetTable {
    debug_assert!(!alpha.is_zero(), "minimum support must be positive");
    let rows = candidates
        .iter()
        .map(|s| (s.clone(), support_grouped(s, grouped)))
        .filter(|(_, support)| *support >= alpha)
        .collect();
    FrequentItemsetTable::new(level, size, rows)
}

/// Runs the whole pipeline: qualification, then the level-wise loop.
pub fn mine(
    cfg: &MiningConfig,
    taxonomy: &Taxonomy,
    raw: &TransactionSet,
) -> Result<MiningResult, MiningError> {
    cfg.validate()?;
    let deduped;
    let source = if cfg.dedupe_items {
        deduped = raw.dedupe_items();
        &deduped
    } else {
        raw
    };
    let m = source.qualify(cfg.gamma);

    let max_level = cfg
        .max_level
        .unwrap_or(taxonomy.depth())
        .min(taxonomy.depth());

    let mut tables: BTreeMap<(u8, usize), FrequentItemsetTable> = BTreeMap::new();
    let mut previous_l1: Option<FrequentItemsetTable> = None;
    for level in 1..=max_level {
        let grouped = m.group_at_level(level);
        let candidates = level_candidates_1(&m, level, previous_l1.as_ref(), cfg)?;
        let l1 = filter_frequent_grouped(level, 1, &candidates, &grouped, cfg.alpha(level, 1)?);
        if l1.is_empty() {
            break;
        }
        previous_l1 = Some(l1.clone());
        tables.insert((level, 1), l1);

        let mut size = 2;
        while cfg.max_p.is_none_or(|max| size <= max) {
            let previous = &tables[&(level, size - 1)];
            let candidates = generate_candidates(previous);
            if candidates.is_empty() {
                break;
            }
            let table = filter_frequent_grouped(
                level,
                size,
                &candidates,
                &grouped,
                cfg.alpha(level, size)?,
            );
            if table.is_empty() {
                break;
            }
            tables.insert((level, size), table);
            size += 1;
        }
    }

    let divergence_notes = match &cfg.reference {
        Some(reference) => diff_against_reference(&tables, reference, &m),
        None => Vec::new(),
    };

    Ok(MiningResult {
        tables,
        qualified_count: m.len(),
        config: cfg.clone(),
        divergence_notes,
    })
}

/// Exhaustive frequent-itemset search: enumerates every `size`-subset of
/// `universe` and keeps those with support >= alpha. Independent of the
/// level-wise loop; exists to cross-check it.
pub fn brute_force_frequent(
    m: &TransactionSet,
    level: u8,
    size: usize,
    alpha: Fraction,
    universe: &[ItemCode],
) -> Result<FrequentItemsetTable, MiningError> {
    let distinct: BTreeSet<&ItemCode> = universe.iter().collect();
    debug_assert!(distinct.iter().all(|c| c.level() == level));
    if binomial(distinct.len(), size) > 1_000_000 {
        return Err(MiningError::UniverseTooLarge {
            universe: distinct.len(),
            size,
        });
    }
    let grouped = m.group_at_level(level);
    let rows = distinct
        .into_iter()
        .combinations(size)
        .filter_map(|combo| {
            let itemset = Itemset::new(combo.into_iter().cloned()).ok()?;
            let support = support_grouped(&itemset, &grouped);
            (support >= alpha).then_some((itemset, support))
        })
        .collect();
    Ok(FrequentItemsetTable::new(level, size, rows))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if result > u128::from(u64::MAX) {
            return u128::MAX;
        }
    }
    result
}

fn diff_against_reference(
    tables: &BTreeMap<(u8, usize), FrequentItemsetTable>,
    reference: &ReferenceTables,
    m: &TransactionSet,
) -> Vec<String> {
    let mut notes = Vec::new();
    let keys: BTreeSet<(u8, usize)> = tables
        .keys()
        .copied()
        .chain(reference.tables().map(|(k, _)| *k))
        .collect();
    for (level, size) in keys {
        let table = tables.get(&(level, size));
        let expected = reference.get(level, size);
        let empty = Vec::new();
        let expected = expected.unwrap_or(&empty);

        if let Some(table) = table {
            for (itemset, support) in table.rows() {
                match expected.iter().find(|(s, _)| s == itemset) {
                    None => notes.push(format!(
                        "level {level} {size}-itemset {itemset} is frequent (support {}) \
                         but absent from the reference table",
                        support.to_decimal(2)
                    )),
                    Some((_, reference_support)) => {
                        let computed = support.to_decimal(2);
                        if computed != *reference_support {
                            notes.push(format!(
                                "level {level} {size}-itemset {itemset} support differs: \
                                 computed {computed}, reference {reference_support}"
                            ));
                        }
                    }
                }
            }
        }
        for (itemset, reference_support) in expected {
            let found = table.is_some_and(|t| t.contains(itemset));
            if !found {
                let computed = crate::membership::support(itemset, m);
                notes.push(format!(
                    "level {level} {size}-itemset {itemset} from the reference table \
                     (support {reference_support}) is not frequent here \
                     (computed support {})",
                    computed.to_decimal(2)
                ));
            }
        }
    }
    notes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taxonomy::Taxonomy;

    fn demo() -> (Taxonomy, TransactionSet) {
        let tax = Taxonomy::parse(crate::fixture::TAXONOMY_CSV).unwrap();
        let set = TransactionSet::parse(crate::fixture::TRANSACTIONS_CSV, &tax).unwrap();
        (tax, set)
    }

    fn code(text: &str) -> ItemCode {
        ItemCode::parse(text, 3).unwrap()
    }

    fn itemset(codes: &[&str]) -> Itemset {
        Itemset::new(codes.iter().map(|c| code(c))).unwrap()
    }

    fn paper_cfg() -> MiningConfig {
        MiningConfig::paper_mode()
    }

    fn rows_of(table: &FrequentItemsetTable) -> Vec<(String, String)> {
        table
            .rows()
            .iter()
            .map(|(s, f)| (s.to_string(), f.to_decimal(2)))
            .collect()
    }

    #[test]
    fn min_support_lookup_and_overrides() {
        let mut ms = MinimumSupports::new();
        ms.set_level(1, Fraction::new(11, 10)).unwrap();
        ms.set_level_size(1, 1, Fraction::from_integer(2)).unwrap();
        assert_eq!(ms.alpha(1, 1), Some(Fraction::from_integer(2)));
        assert_eq!(ms.alpha(1, 2), Some(Fraction::new(11, 10)));
        assert_eq!(ms.alpha(2, 1), None);
        assert!(ms.set_level(2, Fraction::zero()).is_err());
    }

    #[test]
    fn min_support_parses_flag_syntax() {
        let mut ms = MinimumSupports::new();
        ms.parse_entries("1=1.1,1.1=2.0,2=1,3=0.33").unwrap();
        assert_eq!(ms.alpha(1, 1), Some(Fraction::from_integer(2)));
        assert_eq!(ms.alpha(1, 3), Some(Fraction::new(11, 10)));
        assert_eq!(ms.alpha(2, 2), Some(Fraction::one()));
        assert_eq!(ms.alpha(3, 1), Some(Fraction::new(33, 100)));

        assert!(MinimumSupports::new().parse_entries("x=1").is_err());
        assert!(MinimumSupports::new().parse_entries("1").is_err());
        assert!(MinimumSupports::new().parse_entries("0=1").is_err());
        assert!(MinimumSupports::new().parse_entries("1.0=1").is_err());
        assert!(MinimumSupports::new().parse_entries("1=0").is_err());
    }

    #[test]
    fn level1_candidates_are_the_occurring_groups() {
        let (_, set) = demo();
        let m = set.qualify(5);
        let cands = level_candidates_1(&m, 1, None, &paper_cfg()).unwrap();
        let rendered: Vec<String> = cands.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, ["{1**}", "{2**}", "{3**}", "{4**}"]);
    }

    #[test]
    fn level2_candidates_respect_parent_filter() {
        let (_, set) = demo();
        let m = set.qualify(5);
        let cfg = paper_cfg();
        let l1 = filter_frequent(
            &level_candidates_1(&m, 1, None, &cfg).unwrap(),
            &m,
            Fraction::from_integer(2),
        );
        // all four level-1 groups are frequent, so every occurring level-2
        // group (including 11* and 12*) is a candidate
        let cands = level_candidates_1(&m, 2, Some(&l1), &cfg).unwrap();
        let rendered: Vec<String> = cands.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            rendered,
            ["{11*}", "{12*}", "{21*}", "{22*}", "{31*}", "{32*}", "{41*}", "{42*}"]
        );

        // with a pruned parent table, children drop out
        let narrow =
            FrequentItemsetTable::new(1, 1, vec![(itemset(&["2**"]), Fraction::from_integer(3))]);
        let cands = level_candidates_1(&m, 2, Some(&narrow), &cfg).unwrap();
        let rendered: Vec<String> = cands.iter().map(|s| s.to_string()).collect();
        assert_eq!(rendered, ["{21*}", "{22*}"]);

        // disabling the filter keeps every occurring group
        let mut open = paper_cfg();
        open.parent_filter = false;
        let cands = level_candidates_1(&m, 2, None, &open).unwrap();
        assert_eq!(cands.len(), 8);
    }

    #[test]
    fn missing_parent_table_is_an_error() {
        let (_, set) = demo();
        let m = set.qualify(5);
        let err = level_candidates_1(&m, 2, None, &paper_cfg()).unwrap_err();
        assert_eq!(err, MiningError::MissingParentTable { level: 2 });
    }

    #[test]
    fn candidate_generation_needs_all_subsets_frequent() {
        let l2 = FrequentItemsetTable::new(
            1,
            2,
            vec![
                (itemset(&["2**", "3**"]), Fraction::new(6, 5)),
                (itemset(&["2**", "4**"]), Fraction::new(29, 15)),
                (itemset(&["3**", "4**"]), Fraction::new(6, 5)),
            ],
        );
        let cands = generate_candidates(&l2);
        assert_eq!(cands, vec![itemset(&["2**", "3**", "4**"])]);

        // a missing pair blocks the triple
        let partial = FrequentItemsetTable::new(
            1,
            2,
            vec![
                (itemset(&["2**", "3**"]), Fraction::new(6, 5)),
                (itemset(&["2**", "4**"]), Fraction::new(29, 15)),
            ],
        );
        assert!(generate_candidates(&partial).is_empty());

        let single = FrequentItemsetTable::new(
            2,
            2,
            vec![(itemset(&["21*", "22*"]), Fraction::new(31, 30))],
        );
        assert!(generate_candidates(&single).is_empty());
    }

    #[test]
    fn filter_frequent_is_inclusive_at_the_threshold() {
        let (_, set) = demo();
        let m = set.qualify(5);
        // support({2**, 3**}) is exactly 6/5; alpha = 6/5 keeps it
        let cands = vec![itemset(&["2**", "3**"])];
        let table = filter_frequent(&cands, &m, Fraction::new(6, 5));
        assert_eq!(table.len(), 1);
        let table = filter_frequent(&cands, &m, Fraction::new(121, 100));
        assert!(table.is_empty());
    }

    #[test]
    fn filter_frequent_level2_keeps_and_drops_the_expected_groups() {
        let (_, set) = demo();
        let m = set.qualify(5);
        let cands: Vec<Itemset> = ["21*", "22*", "31*", "32*", "41*", "42*"]
            .iter()
            .map(|c| itemset(&[c]))
            .collect();
        let table = filter_frequent(&cands, &m, Fraction::one());
        assert_eq!(
            rows_of(&table),
            [
                ("{21*}".to_string(), "1.28".to_string()),
                ("{22*}".to_string(), "1.98".to_string()),
                ("{32*}".to_string(), "1.70".to_string()),
                ("{41*}".to_string(), "1.68".to_string()),
            ]
        );
        // the dropped candidates carry the published prune supports
        let grouped = m.group_at_level(2);
        assert_eq!(
            support_grouped(&itemset(&["31*"]), &grouped),
            Fraction::new(9, 10)
        );
        assert_eq!(
            support_grouped(&itemset(&["42*"]), &grouped),
            Fraction::new(9, 20)
        );
    }

    #[test]
    fn alpha_above_qualified_count_empties_the_table() {
        let (_, set) = demo();
        let m = set.qualify(5);
        let cands = vec![itemset(&["2**"])];
        let table = filter_frequent(&cands, &m, Fraction::from_integer(11));
        assert!(table.is_empty());
    }

    #[test]
    fn mine_reproduces_level1_and_level2_tables() {
        let (tax, set) = demo();
        let result = mine(&paper_cfg(), &tax, &set).unwrap();
        assert_eq!(result.qualified_count(), 10);

        assert_eq!(
            rows_of(result.table(1, 1).unwrap()),
            [
                ("{1**}".to_string(), "2.00".to_string()),
                ("{2**}".to_string(), "3.27".to_string()),
                ("{3**}".to_string(), "2.60".to_string()),
                ("{4**}".to_string(), "2.13".to_string()),
            ]
        );
        assert_eq!(
            rows_of(result.table(1, 2).unwrap()),
            [
                ("{2**, 3**}".to_string(), "1.20".to_string()),
                ("{2**, 4**}".to_string(), "1.93".to_string()),
                ("{3**, 4**}".to_string(), "1.20".to_string()),
            ]
        );
        assert_eq!(
            rows_of(result.table(1, 3).unwrap()),
            [("{2**, 3**, 4**}".to_string(), "1.20".to_string())]
        );
        assert_eq!(
            rows_of(result.table(2, 2).unwrap()),
            [
                ("{21*, 22*}".to_string(), "1.03".to_string()),
                ("{21*, 41*}".to_string(), "1.03".to_string()),
                ("{22*, 41*}".to_string(), "1.48".to_string()),
            ]
        );
        assert_eq!(
            rows_of(result.table(2, 3).unwrap()),
            [("{21*, 22*, 41*}".to_string(), "1.03".to_string())]
        );
    }

    #[test]
    fn mine_gamma_1_keeps_only_the_singleton_transaction() {
        let (tax, set) = demo();
        let mut cfg = MiningConfig::new(1);
        cfg.min_support.set_level(1, Fraction::one()).unwrap();
        cfg.min_support.set_level(2, Fraction::one()).unwrap();
        cfg.min_support.set_level(3, Fraction::one()).unwrap();
        let result = mine(&cfg, &tax, &set).unwrap();
        assert_eq!(result.qualified_count(), 1);
        assert_eq!(
            rows_of(result.table(1, 1).unwrap()),
            [("{1**}".to_string(), "1.00".to_string())]
        );

        // raising alpha above 1 empties level 1 and stops the run
        cfg.min_support.set_level(1, Fraction::new(3, 2)).unwrap();
        let result = mine(&cfg, &tax, &set).unwrap();
        assert_eq!(result.tables().count(), 0);
    }

    #[test]
    fn mine_empty_qualified_set_produces_no_tables() {
        let tax = Taxonomy::parse("1**,Milk\n11*,Plain\n111,Brand\n").unwrap();
        let set = TransactionSet::parse("T1, 111, 111\n", &tax).unwrap();
        let mut cfg = MiningConfig::new(1);
        cfg.min_support.set_level(1, Fraction::one()).unwrap();
        let result = mine(&cfg, &tax, &set).unwrap();
        assert_eq!(result.qualified_count(), 0);
        assert_eq!(result.tables().count(), 0);
    }

    #[test]
    fn mine_requires_an_alpha_for_each_visited_level() {
        let (tax, set) = demo();
        let mut cfg = MiningConfig::new(5);
        cfg.min_support.set_level(1, Fraction::one()).unwrap();
        let err = mine(&cfg, &tax, &set).unwrap_err();
        assert_eq!(err, MiningError::MissingMinSupport { level: 2, size: 1 });
    }

    #[test]
    fn mine_honors_max_p_and_max_level() {
        let (tax, set) = demo();
        let mut cfg = paper_cfg();
        cfg.max_p = Some(1);
        cfg.max_level = Some(1);
        cfg.reference = None;
        let result = mine(&cfg, &tax, &set).unwrap();
        let keys: Vec<(u8, usize)> = result.tables().map(|t| (t.level(), t.size())).collect();
        assert_eq!(keys, [(1, 1)]);
    }

    #[test]
    fn mine_config_validation() {
        let (tax, set) = demo();
        let mut cfg = MiningConfig::new(0);
        cfg.min_support.set_level(1, Fraction::one()).unwrap();
        assert!(matches!(
            mine(&cfg, &tax, &set),
            Err(MiningError::InvalidConfig(_))
        ));

        let cfg = MiningConfig::new(5);
        assert!(matches!(
            mine(&cfg, &tax, &set),
            Err(MiningError::InvalidConfig(_))
        ));

        let mut cfg = MiningConfig::new(5);
        cfg.min_support.set_level(1, Fraction::one()).unwrap();
        cfg.min_confidence = Fraction::new(3, 2);
        assert!(matches!(
            mine(&cfg, &tax, &set),
            Err(MiningError::InvalidConfig(_))
        ));
    }

    #[test]
    fn brute_force_matches_the_level1_pair_table() {
        let (_, set) = demo();
        let m = set.qualify(5);
        let universe: Vec<ItemCode> = ["1**", "2**", "3**", "4**"]
            .iter()
            .map(|c| code(c))
            .collect();
        let table = brute_force_frequent(&m, 1, 2, Fraction::new(11, 10), &universe).unwrap();
        assert_eq!(
            rows_of(&table),
            [
                ("{2**, 3**}".to_string(), "1.20".to_string()),
                ("{2**, 4**}".to_string(), "1.93".to_string()),
                ("{3**, 4**}".to_string(), "1.20".to_string()),
            ]
        );
    }

    #[test]
    fn brute_force_p1_equals_filter_frequent() {
        let (_, set) = demo();
        let m = set.qualify(5);
        let universe: Vec<ItemCode> = ["1**", "2**", "3**", "4**"]
            .iter()
            .map(|c| code(c))
            .collect();
        let brute = brute_force_frequent(&m, 1, 1, Fraction::from_integer(2), &universe).unwrap();
        let cands: Vec<Itemset> = universe.iter().cloned().map(Itemset::singleton).collect();
        let filtered = filter_frequent(&cands, &m, Fraction::from_integer(2));
        assert_eq!(brute, filtered);
    }

    #[test]
    fn brute_force_guards_huge_universes() {
        let (_, set) = demo();
        let m = set.qualify(5);
        // C(60, 30) is astronomically past the guard
        let universe: Vec<ItemCode> = (1..=9)
            .flat_map(|a| (1..=9).map(move |b| format!("{a}{b}*")))
            .take(60)
            .map(|t| ItemCode::parse(&t, 3).unwrap())
            .collect();
        let err = brute_force_frequent(&m, 2, 30, Fraction::one(), &universe).unwrap_err();
        assert!(matches!(err, MiningError::UniverseTooLarge { .. }));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(20, 10), 184_756);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(5, 0), 1);
    }

    #[test]
    fn divergence_notes_report_extras_missing_and_mismatches() {
        let (tax, set) = demo();
        let result = mine(&paper_cfg(), &tax, &set).unwrap();
        let notes = result.divergence_notes();
        let has = |needle: &str| notes.iter().any(|n| n.contains(needle));

        // extra frequent itemsets the reference tables do not list
        assert!(has("{11*} is frequent (support 1.50)"));
        assert!(has("{322} is frequent (support 1.45)"));
        assert!(has("{111} is frequent (support 1.50)"));
        // reference rows that are not frequent on the bundled data
        assert!(has("{211, 212} from the reference table (support 0.33) is not frequent here (computed support 0.00)"));
        assert!(has("{212, 411} from the reference table (support 0.58) is not frequent here (computed support 0.25)"));
        assert!(has("{211, 212, 222} from the reference table"));
        // a support mismatch on a row both sides agree is frequent
        assert!(has(
            "{221, 412} support differs: computed 0.40, reference 0.45"
        ));

        // no notes at all for level 1, which matches the reference exactly
        assert!(notes.iter().all(|n| !n.starts_with("level 1 ")));
    }

    #[test]
    fn mine_without_reference_has_no_notes() {
        let (tax, set) = demo();
        let mut cfg = paper_cfg();
        cfg.reference = None;
        let result = mine(&cfg, &tax, &set).unwrap();
        assert!(result.divergence_notes().is_empty());
    }

    #[test]
    fn mine_is_deterministic() {
        let (tax, set) = demo();
        let a = mine(&paper_cfg(), &tax, &set).unwrap();
        let b = mine(&paper_cfg(), &tax, &set).unwrap();
        assert_eq!(a, b);
    }
}
