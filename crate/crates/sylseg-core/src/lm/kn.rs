//! Interpolated modified Kneser-Ney over interned symbol sequences.
//!
//! Raw k-gram counts are kept for every order; the scoring tables use raw
//! counts at the top order and continuation counts (distinct left
//! extensions) below, except that histories pinned to the sentence start
//! keep raw counts since nothing can extend them to the left. Per order,
//! three discounts follow the count-of-count estimates
//! `D_k = k - (k+1) * n1 * n_{k+1} / ((n1 + 2*n2) * n_k)`, clamped to
//! [0, 1).

use alloc::boxed::Box;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

/// Sentence-start symbol: context only, never an outcome.
pub const BOS: u32 = 0;
/// Sentence-end symbol, predicted once per sentence.
pub const EOS: u32 = 1;
/// The novel-unit event; a first-class member of the outcome vocabulary.
pub const NEW: u32 = 2;
/// First id available for real symbols.
pub const FIRST_SYMBOL: u32 = 3;
/// Stand-in for symbols never seen in training; matches no table entry.
pub const UNSEEN: u32 = u32::MAX;

/// Discounts stay strictly below one so a singleton never loses its entire
/// count.
const DISCOUNT_MAX: f64 = 1.0 - 1e-9;
/// Discount when the count-of-count statistics are degenerate.
const DISCOUNT_FALLBACK: f64 = 0.5;

#[derive(Debug, Clone, Default)]
struct CtxEntry {
    total: u64,
    /// Follower types with count 1, 2 and >= 3.
    n1: u32,
    n2: u32,
    n3plus: u32,
    followers: HashMap<u32, u64>,
}

#[derive(Debug, Clone)]
struct CtxTable {
    entries: HashMap<Box<[u32]>, CtxEntry>,
    /// D1, D2, D3+ for this order.
    discounts: [f64; 3],
}

/// Count-based KN model over symbol ids.
#[derive(Debug, Clone)]
pub struct KnModel {
    order: usize,
    /// raw[k-1]: raw k-gram counts, k-grams ending at a predicted symbol.
    raw: Vec<HashMap<Box<[u32]>, u64>>,
    /// tables[k-1]: scoring table for order k.
    tables: Vec<CtxTable>,
    /// Size of the outcome space the base distribution is uniform over.
    outcome_vocab: usize,
}

impl KnModel {
    /// Count and compile. `sequences` hold real symbols (ids >= 3); EOS and
    /// BOS padding are added here. Ids in `singletons` additionally count a
    /// parallel NEW event in their contexts.
    pub fn train(
        sequences: &[Vec<u32>],
        order: usize,
        outcome_vocab: usize,
        singletons: &HashSet<u32>,
    ) -> Self {
        assert!(order >= 1);
        let mut raw: Vec<HashMap<Box<[u32]>, u64>> = alloc::vec![HashMap::new(); order];
        let pad = order - 1;
        let mut padded: Vec<u32> = Vec::new();
        for sequence in sequences {
            padded.clear();
            padded.extend(core::iter::repeat_n(BOS, pad));
            padded.extend_from_slice(sequence);
            padded.push(EOS);
            for t in pad..padded.len() {
                let symbol = padded[t];
                for k in 1..=order {
                    let gram = &padded[t + 1 - k..=t];
                    bump(&mut raw[k - 1], gram);
                    if symbol != EOS && singletons.contains(&symbol) {
                        let mut parallel: Vec<u32> = gram.to_vec();
                        *parallel.last_mut().expect("nonempty") = NEW;
                        bump(&mut raw[k - 1], &parallel);
                    }
                }
            }
        }
        Self::from_raw(raw, order, outcome_vocab)
    }

    /// Compile scoring tables from raw counts.
    pub fn from_raw(
        raw: Vec<HashMap<Box<[u32]>, u64>>,
        order: usize,
        outcome_vocab: usize,
    ) -> Self {
        assert_eq!(raw.len(), order);
        let mut tables = Vec::with_capacity(order);
        for k in 1..=order {
            let counts: HashMap<Box<[u32]>, u64> = if k == order {
                raw[k - 1].clone()
            } else {
                // Continuation counts from the (k+1)-gram table; histories
                // starting at the sentence boundary keep raw counts.
                let mut cont: HashMap<Box<[u32]>, u64> = HashMap::new();
                for (gram, &count) in &raw[k] {
                    let suffix = &gram[1..];
                    if suffix[0] == BOS {
                        *cont.entry(suffix.into()).or_insert(0) += count;
                    } else {
                        *cont.entry(suffix.into()).or_insert(0) += 1;
                    }
                }
                cont
            };
            tables.push(build_table(&counts, k));
        }
        KnModel {
            order,
            raw,
            tables,
            outcome_vocab,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn outcome_vocab(&self) -> usize {
        self.outcome_vocab
    }

    pub fn raw_counts(&self) -> &[HashMap<Box<[u32]>, u64>] {
        &self.raw
    }

    /// Rebuild at a lower order from the stored raw counts. Identical to
    /// training directly at that order on the same data.
    pub fn truncated(&self, order: usize) -> KnModel {
        assert!(order >= 1 && order <= self.order);
        KnModel::from_raw(self.raw[..order].to_vec(), order, self.outcome_vocab)
    }

    /// p(w | history): `history` holds the real preceding symbols of the
    /// sentence (oldest first, no padding); only the last `order - 1` are
    /// used, padded with BOS on the left when shorter.
    pub fn prob(&self, history: &[u32], w: u32) -> f64 {
        if w == BOS {
            return 0.0;
        }
        let mut window = [BOS; 16];
        let ctx_len = self.order - 1;
        assert!(ctx_len <= window.len());
        let tail = history.len().min(ctx_len);
        window[ctx_len - tail..ctx_len].copy_from_slice(&history[history.len() - tail..]);
        self.interp(self.order, &window[..ctx_len], w)
    }

    fn interp(&self, k: usize, ctx: &[u32], w: u32) -> f64 {
        if k == 0 {
            return 1.0 / self.outcome_vocab as f64;
        }
        let table = &self.tables[k - 1];
        let entry = table.entries.get(&ctx[ctx.len() - (k - 1)..]);
        let Some(entry) = entry.filter(|e| e.total > 0) else {
            return self.interp(k - 1, ctx, w);
        };
        let total = entry.total as f64;
        let [d1, d2, d3] = table.discounts;
        let backoff_mass =
            (d1 * entry.n1 as f64 + d2 * entry.n2 as f64 + d3 * entry.n3plus as f64) / total;
        let count = entry.followers.get(&w).copied().unwrap_or(0);
        let discounted = if count == 0 {
            0.0
        } else {
            let d = match count {
                1 => d1,
                2 => d2,
                _ => d3,
            };
            (count as f64 - d).max(0.0) / total
        };
        discounted + backoff_mass * self.interp(k - 1, ctx, w)
    }

    /// Discounts of the given order (1-based).
    #[cfg(test)]
    pub fn discounts(&self, k: usize) -> [f64; 3] {
        self.tables[k - 1].discounts
    }
}

fn bump(map: &mut HashMap<Box<[u32]>, u64>, gram: &[u32]) {
    match map.get_mut(gram) {
        Some(c) => *c += 1,
        None => {
            map.insert(gram.into(), 1);
        }
    }
}

fn build_table(counts: &HashMap<Box<[u32]>, u64>, k: usize) -> CtxTable {
    let mut entries: HashMap<Box<[u32]>, CtxEntry> = HashMap::new();
    // Count-of-counts over the values used at this order.
    let mut n = [0u64; 4];
    for (gram, &count) in counts {
        if (1..=4).contains(&count) {
            n[(count - 1) as usize] += 1;
        }
        let (ctx, w) = gram.split_at(k - 1);
        let entry = entries.entry(ctx.into()).or_default();
        entry.total += count;
        match count {
            0 => {}
            1 => entry.n1 += 1,
            2 => entry.n2 += 1,
            _ => entry.n3plus += 1,
        }
        entry.followers.insert(w[0], count);
    }
    CtxTable {
        entries,
        discounts: estimate_discounts(n),
    }
}

fn estimate_discounts(n: [u64; 4]) -> [f64; 3] {
    let y_den = (n[0] + 2 * n[1]) as f64;
    let mut out = [0.0; 3];
    for (i, slot) in out.iter_mut().enumerate() {
        let k = (i + 1) as f64;
        let nk = n[i] as f64;
        let nk1 = n[i + 1] as f64;
        *slot = if y_den == 0.0 || nk == 0.0 {
            DISCOUNT_FALLBACK
        } else {
            (k - (k + 1.0) * (n[0] as f64) * nk1 / (y_den * nk)).clamp(0.0, DISCOUNT_MAX)
        };
    }
    out
}
