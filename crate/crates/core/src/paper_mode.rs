//! The `paper-mode` preset: the configuration the bundled grocery example was
//! published with, plus the published frequent-itemset tables as reference
//! rows so a run reports where its computed tables differ from them.

use crate::fraction::Fraction;
use crate::membership::Itemset;
use crate::miner::{MiningConfig, ReferenceTables};
use crate::taxonomy::ItemCode;

/// Taxonomy depth of the bundled example.
const DEPTH: u8 = 3;

impl MiningConfig {
    /// gamma = 5; minimum supports 2.0 for level-1 1-itemsets, 1.1 for larger
    /// level-1 itemsets, 1.0 at level 2 and 0.33 at level 3; itemset size and
    /// level capped at 3; minimum confidence 0.5; parent filtering on. The
    /// published tables are attached as the divergence reference.
    pub fn paper_mode() -> MiningConfig {
        let mut cfg = MiningConfig::new(5);
        cfg.min_support
            .set_level(1, Fraction::new(11, 10))
            .expect("positive");
        cfg.min_support
            .set_level_size(1, 1, Fraction::from_integer(2))
            .expect("positive");
        cfg.min_support
            .set_level(2, Fraction::one())
            .expect("positive");
        cfg.min_support
            .set_level(3, Fraction::new(33, 100))
            .expect("positive");
        cfg.max_p = Some(3);
        cfg.max_level = Some(3);
        cfg.min_confidence = Fraction::new(1, 2);
        cfg.reference = Some(published_reference());
        cfg
    }
}

/// The frequent-itemset tables as published for the bundled example, with
/// supports as printed (two decimals). Some of the published level-3 rows are
/// inconsistent with the example's own transaction data; runs in paper mode
/// surface those rows in their divergence notes rather than reproducing them.
pub fn published_reference() -> ReferenceTables {
    let rows: &[(&[&str], &str)] = &[
        // level 1
        (&["1**"], "2.00"),
        (&["2**"], "3.27"),
        (&["3**"], "2.60"),
        (&["4**"], "2.13"),
        (&["2**", "3**"], "1.20"),
        (&["2**", "4**"], "1.93"),
        (&["3**", "4**"], "1.20"),
        (&["2**", "3**", "4**"], "1.20"),
        // level 2
        (&["21*"], "1.28"),
        (&["22*"], "1.98"),
        (&["32*"], "1.70"),
        (&["41*"], "1.68"),
        (&["21*", "22*"], "1.03"),
        (&["21*", "41*"], "1.03"),
        (&["22*", "41*"], "1.48"),
        (&["21*", "22*", "41*"], "1.03"),
        // level 3
        (&["211"], "0.53"),
        (&["212"], "0.75"),
        (&["221"], "0.65"),
        (&["222"], "1.33"),
        (&["411"], "1.03"),
        (&["412"], "0.65"),
        (&["211", "212"], "0.33"),
        (&["211", "222"], "0.33"),
        (&["211", "411"], "0.53"),
        (&["212", "222"], "0.33"),
        (&["212", "411"], "0.58"),
        (&["221", "412"], "0.45"),
        (&["222", "411"], "0.58"),
        (&["211", "212", "222"], "0.33"),
        (&["211", "212", "411"], "0.33"),
        (&["212", "222", "411"], "0.33"),
    ];
    let mut reference = ReferenceTables::new();
    for (codes, support) in rows {
        let itemset = Itemset::new(
            codes
                .iter()
                .map(|c| ItemCode::parse(c, DEPTH).expect("reference codes are valid")),
        )
        .expect("reference rows are non-empty and single-level");
        reference.add_row(itemset, support);
    }
    reference
}
