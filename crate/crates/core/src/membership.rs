//! Fuzzy membership of itemsets in transactions and itemset support.
//!
//! A level-k group occurring v times in a transaction of cardinality c has
//! membership v/c in that transaction; an itemset takes the minimum of its
//! members' memberships; support is the sum of memberships over the qualified
//! set. Because group counts conserve cardinality, the supports of all level-k
//! groups sum to exactly |M|.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::fraction::Fraction;
use crate::taxonomy::ItemCode;
use crate::transactions::{GroupedTransaction, Transaction, TransactionSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ItemsetError {
    #[error("itemset must have at least one member")]
    Empty,
    #[error("itemset members must share one level (found {0} and {1})")]
    MixedLevels(u8, u8),
}

/// A non-empty set of distinct codes, all at the same taxonomy level.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Itemset {
    members: BTreeSet<ItemCode>,
    level: u8,
}

impl Itemset {
    pub fn new(members: impl IntoIterator<Item = ItemCode>) -> Result<Self, ItemsetError> {
        let members: BTreeSet<ItemCode> = members.into_iter().collect();
        let mut levels = members.iter().map(ItemCode::level);
        let level = levels.next().ok_or(ItemsetError::Empty)?;
        for other in levels {
            if other != level {
                return Err(ItemsetError::MixedLevels(level, other));
            }
        }
        Ok(Itemset { members, level })
    }

    pub fn singleton(code: ItemCode) -> Self {
        let level = code.level();
        Itemset {
            members: BTreeSet::from([code]),
            level,
        }
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    /// Number of members, the itemset size p.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction
    }

    pub fn members(&self) -> impl Iterator<Item = &ItemCode> + Clone {
        self.members.iter()
    }

    pub fn contains(&self, code: &ItemCode) -> bool {
        self.members.contains(code)
    }

    pub fn is_subset(&self, other: &Itemset) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_disjoint(&self, other: &Itemset) -> bool {
        self.members.is_disjoint(&other.members)
    }

    /// Union with another itemset of the same level.
    pub fn union(&self, other: &Itemset) -> Itemset {
        debug_assert_eq!(self.level, other.level);
        Itemset {
            members: self.members.union(&other.members).cloned().collect(),
            level: self.level,
        }
    }

    /// The itemset without `code`; None when that would leave it empty.
    pub fn without(&self, code: &ItemCode) -> Option<Itemset> {
        if !self.members.contains(code) || self.members.len() == 1 {
            return None;
        }
        let mut members = self.members.clone();
        members.remove(code);
        Some(Itemset {
            members,
            level: self.level,
        })
    }
}

impl fmt::Display for Itemset {
    /// Renders as `{211, 212}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, code) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{code}")?;
        }
        f.write_str("}")
    }
}

/// Boolean membership: does any item of `t` fall under `item`'s subtree?
pub fn eta(t: &Transaction, item: &ItemCode) -> bool {
    t.items().iter().any(|i| i.descends_from(item))
}

/// Fuzzy membership of a single level-k group: v / card, zero when absent.
pub fn mu_single(t: &GroupedTransaction, group: &ItemCode) -> Fraction {
    debug_assert_eq!(group.level(), t.level(), "group level must match grouping");
    let v = t.count_of(group);
    if v == 0 {
        Fraction::zero()
    } else {
        Fraction::new(i64::from(v), i64::from(t.card()))
    }
}

/// Fuzzy membership of an itemset: the minimum of its members' memberships,
/// zero as soon as any member is absent.
pub fn mu_itemset(t: &GroupedTransaction, itemset: &Itemset) -> Fraction {
    debug_assert_eq!(
        itemset.level(),
        t.level(),
        "itemset level must match grouping"
    );
    let mut min: Option<Fraction> = None;
    for member in itemset.members() {
        let mu = mu_single(t, member);
        if mu.is_zero() {
            return Fraction::zero();
        }
        min = Some(match min {
            Some(m) if m <= mu => m,
            _ => mu,
        });
    }
    min.unwrap_or_else(Fraction::zero)
}

/// Support of an itemset over a qualified set: the sum of its memberships.
/// An empty set yields zero support.
pub fn support(itemset: &Itemset, m: &TransactionSet) -> Fraction {
    support_grouped(itemset, &m.group_at_level(itemset.level()))
}

/// Support over transactions already grouped at the itemset's level; lets the
/// mining loop group each level once instead of per candidate.
pub fn support_grouped(itemset: &Itemset, grouped: &[GroupedTransaction]) -> Fraction {
    grouped.iter().map(|t| mu_itemset(t, itemset)).sum()
}
