//! Exhaustive tables of `≽` and `⊵` over short binary words, Hasse
//! diagrams, independent rules and TBM gaps.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{compare, tbm_prefix, tbm_suffix, Side};
use crate::verdict::{Judgement, Relation};
use crate::words::BinaryWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub order: usize,
    pub tbm: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { order: 6, tbm: 4 }
    }
}

fn check_n(n: usize, limit: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition(format!("{what} needs a positive length")));
    }
    if n > limit {
        return Err(Error::ResourceLimit(format!("{what} length {n} exceeds the limit {limit}")));
    }
    Ok(())
}

/// All TRUE pairs of a relation over a fixed universe of binary words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTable {
    pub n: usize,
    pub relation: Relation,
    words: Vec<BinaryWord>,
    holds: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableLine {
    pub lhs: BinaryWord,
    pub rhs: BinaryWord,
    pub relation: Relation,
}

impl RelationTable {
    fn build(n: usize, relation: Relation, words: Vec<BinaryWord>, decide: impl Fn(&BinaryWord, &BinaryWord) -> Result<bool> + Sync) -> Result<Self> {
        let k = words.len();
        let holds = (0..k * k)
            .into_par_iter()
            .map(|ij| {
                let (a, b) = (&words[ij / k], &words[ij % k]);
                if a == b {
                    Ok(true)
                } else {
                    decide(a, b)
                }
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(RelationTable { n, relation, words, holds })
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    fn index(&self, w: &BinaryWord) -> Option<usize> {
        self.words.iter().position(|v| v == w)
    }

    fn at(&self, i: usize, j: usize) -> bool {
        self.holds[i * self.words.len() + j]
    }

    /// Whether `a R b` is recorded; `false` for words outside the universe.
    pub fn holds(&self, a: &BinaryWord, b: &BinaryWord) -> bool {
        match (self.index(a), self.index(b)) {
            (Some(i), Some(j)) => self.at(i, j),
            _ => false,
        }
    }

    /// TRUE pairs in universe order, reflexive pairs included.
    pub fn pairs(&self) -> Vec<(BinaryWord, BinaryWord)> {
        let k = self.words.len();
        (0..k * k)
            .filter(|&ij| self.holds[ij])
            .map(|ij| (self.words[ij / k].clone(), self.words[ij % k].clone()))
            .collect()
    }

    pub fn lines(&self) -> Vec<TableLine> {
        self.pairs()
            .into_iter()
            .map(|(lhs, rhs)| TableLine { lhs, rhs, relation: self.relation })
            .collect()
    }

    pub fn to_json_lines(&self) -> String {
        self.lines()
            .iter()
            .map(|l| serde_json::to_string(l).expect("serializable") + "\n")
            .collect()
    }
}

/// `≽` among binary words of length `n`, or of every length up to `n` when
/// `mixed` is set.
pub fn enumerate_order(n: usize, mixed: bool, limits: &Limits) -> Result<RelationTable> {
    check_n(n, limits.order, "order enumeration")?;
    let words: Vec<BinaryWord> = if mixed {
        BinaryWord::all_up_to(n).collect()
    } else {
        BinaryWord::all_of_length(n).collect()
    };
    RelationTable::build(n, Relation::Geq, words, |a, b| {
        Ok(compare(&a.to_quaternary(), &b.to_quaternary())?.truth)
    })
}

/// `⊵` or `⊵'` among binary words of length at most `n`.
pub fn enumerate_tbm(n: usize, side: Side, limits: &Limits) -> Result<RelationTable> {
    check_n(n, limits.tbm, "TBM enumeration")?;
    let relation = match side {
        Side::Prefix => Relation::Tbm,
        Side::Suffix => Relation::TbmSuffix,
    };
    let words: Vec<BinaryWord> = BinaryWord::all_up_to(n).collect();
    RelationTable::build(n, relation, words, |a, b| {
        let (a, b) = (a.to_quaternary(), b.to_quaternary());
        Ok(match side {
            Side::Prefix => tbm_prefix(&a, &b)?.truth,
            Side::Suffix => tbm_suffix(&a, &b)?.truth,
        })
    })
}

/// Cover relation on the classes of mutually related words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hasse {
    pub relation: Relation,
    /// Each class lists its members in universe order.
    pub classes: Vec<Vec<BinaryWord>>,
    /// `(upper, lower)` class indices, sorted.
    pub edges: Vec<(usize, usize)>,
}

fn label(w: &BinaryWord) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.to_string()
    }
}

impl Hasse {
    /// Edges between the first members of their classes.
    pub fn edge_words(&self) -> Vec<(BinaryWord, BinaryWord)> {
        self.edges
            .iter()
            .map(|&(u, l)| (self.classes[u][0].clone(), self.classes[l][0].clone()))
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=TB;\n");
        for (i, class) in self.classes.iter().enumerate() {
            let names: Vec<String> = class.iter().map(label).collect();
            let _ = writeln!(out, "  c{i} [label=\"{}\"];", names.join(" ~ "));
        }
        for &(u, l) in &self.edges {
            let _ = writeln!(out, "  c{u} -> c{l};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        self.edges
            .iter()
            .map(|&(u, l)| {
                let name = |c: usize| self.classes[c].iter().map(label).collect::<Vec<_>>().join(" ~ ");
                format!("{} {} {}\n", name(u), self.relation.symbol(), name(l))
            })
            .collect()
    }
}

/// Transitive reduction of a transitively closed table, taken on the
/// quotient by mutual relatedness. Classes are listed from the top down.
pub fn hasse(table: &RelationTable) -> Hasse {
    let k = table.words.len();
    let mut class_of = vec![usize::MAX; k];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        if class_of[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (i..k).filter(|&j| table.at(i, j) && table.at(j, i)).collect();
        for &j in &members {
            class_of[j] = classes.len();
        }
        classes.push(members);
    }
    // list higher classes first: more words below, then universe order
    let below = |c: &Vec<usize>| (0..k).filter(|&j| table.at(c[0], j)).count();
    classes.sort_by_key(|c| (std::cmp::Reverse(below(c)), c[0]));
    let rep = |c: usize| classes[c][0];
    let above = |u: usize, l: usize| u != l && table.at(rep(u), rep(l));
    let m = classes.len();
    let mut edges = Vec::new();
    for u in 0..m {
        for l in 0..m {
            if above(u, l) && !(0..m).any(|c| c != u && c != l && above(u, c) && above(c, l)) {
                edges.push((u, l));
            }
        }
    }
    Hasse {
        relation: table.relation,
        classes: classes
            .into_iter()
            .map(|c| c.into_iter().map(|i| table.words[i].clone()).collect())
            .collect(),
        edges,
    }
}

/// Closure under reflexivity, transitivity, concatenation and complement
/// reversal over the binary words of length at most `n`. Rows are bit sets,
/// so the universe holds at most 128 words.
struct ClosureEngine {
    words: Vec<BinaryWord>,
    complement: Vec<usize>,
    /// `(a, c, ac)` for every concatenation that stays in the universe.
    concat: Vec<(usize, usize, usize)>,
    concat_of: HashMap<(usize, usize), usize>,
}

type Rows = Vec<u128>;

fn bits(mut row: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if row == 0 {
            return None;
        }
        let i = row.trailing_zeros() as usize;
        row &= row - 1;
        Some(i)
    })
}

impl ClosureEngine {
    fn new(n: usize) -> Result<Self> {
        if n > 6 {
            return Err(Error::ResourceLimit(format!("rule closure length {n} exceeds the limit 6")));
        }
        let words: Vec<BinaryWord> = BinaryWord::all_up_to(n).collect();
        let index: HashMap<&BinaryWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let complement = words.iter().map(|w| index[&w.complement()]).collect();
        let mut concat = Vec::new();
        let mut concat_of = HashMap::new();
        for (a, wa) in words.iter().enumerate() {
            for (c, wc) in words.iter().enumerate() {
                if wa.len() + wc.len() <= n {
                    let ac = index[&wa.concat(wc)];
                    concat.push((a, c, ac));
                    concat_of.insert((a, c), ac);
                }
            }
        }
        Ok(ClosureEngine { words, complement, concat, concat_of })
    }

    fn index(&self, w: &BinaryWord) -> Option<usize> {
        self.words.iter().position(|v| v == w)
    }

    fn empty(&self) -> Rows {
        vec![0; self.words.len()]
    }

    fn close(&self, rows: &mut Rows) {
        let k = self.words.len();
        loop {
            let before = rows.clone();
            for (i, row) in rows.iter_mut().enumerate() {
                *row |= 1 << i;
            }
            for a in 0..k {
                for b in bits(before[a]) {
                    rows[self.complement[b]] |= 1 << self.complement[a];
                }
            }
            for &(a, c, ac) in &self.concat {
                for b in bits(before[a]) {
                    for d in bits(before[c]) {
                        if let Some(&bd) = self.concat_of.get(&(b, d)) {
                            rows[ac] |= 1 << bd;
                        }
                    }
                }
            }
            for m in 0..k {
                let via = rows[m];
                for row in rows.iter_mut() {
                    if *row >> m & 1 == 1 {
                        *row |= via;
                    }
                }
            }
            if *rows == before {
                return;
            }
        }
    }

    fn has(rows: &Rows, a: usize, b: usize) -> bool {
        rows[a] >> b & 1 == 1
    }
}

pub const CLOSURE_LAWS: [&str; 4] = [
    "reflexivity: a >= a",
    "transitivity: a >= b and b >= c give a >= c",
    "concatenation: a >= b and c >= d give ac >= bd",
    "complement reversal: a >= b gives ~b >= ~a",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rule {
    pub lhs: BinaryWord,
    pub rhs: BinaryWord,
    /// `|lhs| + |rhs|`; the rule is not derivable from TRUE pairs of
    /// smaller total length.
    pub total_length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleSet {
    pub n: usize,
    pub laws: Vec<String>,
    pub rules: Vec<Rule>,
}

impl RuleSet {
    pub fn contains(&self, lhs: &str, rhs: &str) -> bool {
        self.rules.iter().any(|r| r.lhs.to_string() == lhs && r.rhs.to_string() == rhs)
    }

    pub fn pairs(&self) -> Vec<(BinaryWord, BinaryWord)> {
        self.rules.iter().map(|r| (r.lhs.clone(), r.rhs.clone())).collect()
    }
}

/// Independent rules among binary words of length at most `n`.
///
/// Total lengths are processed in increasing order. At each level the TRUE
/// pairs outside the closure of all shorter TRUE pairs are candidates; they
/// are taken greedily in lexicographic order, then any chosen rule that the
/// others at its level already imply is dropped.
pub fn new_rules(n: usize, limits: &Limits) -> Result<RuleSet> {
    let table = enumerate_order(n, true, limits)?;
    let engine = ClosureEngine::new(n)?;
    debug_assert_eq!(engine.words, table.words);
    let k = engine.words.len();
    let total = |i: usize, j: usize| engine.words[i].len() + engine.words[j].len();
    let mut rules = Vec::new();
    let mut lower = engine.empty();
    for level in 1..=2 * n {
        let mut base = lower.clone();
        engine.close(&mut base);
        let mut candidates: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && total(i, j) == level && table.at(i, j) && !ClosureEngine::has(&base, i, j))
            .collect();
        candidates.sort_by(|x, y| (&engine.words[x.0], &engine.words[x.1]).cmp(&(&engine.words[y.0], &engine.words[y.1])));
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        let mut current = base.clone();
        for (i, j) in candidates {
            if !ClosureEngine::has(&current, i, j) {
                chosen.push((i, j));
                current[i] |= 1 << j;
                engine.close(&mut current);
            }
        }
        let mut idx = 0;
        while idx < chosen.len() {
            let mut rows = base.clone();
            for (t, &(i, j)) in chosen.iter().enumerate() {
                if t != idx {
                    rows[i] |= 1 << j;
                }
            }
            engine.close(&mut rows);
            let (i, j) = chosen[idx];
            if ClosureEngine::has(&rows, i, j) {
                chosen.remove(idx);
            } else {
                idx += 1;
            }
        }
        rules.extend(chosen.into_iter().map(|(i, j)| Rule {
            lhs: engine.words[i].clone(),
            rhs: engine.words[j].clone(),
            total_length: level,
        }));
        for i in 0..k {
            for j in 0..k {
                if total(i, j) == level && table.at(i, j) {
                    lower[i] |= 1 << j;
                }
            }
        }
    }
    Ok(RuleSet { n, laws: CLOSURE_LAWS.iter().map(|s| s.to_string()).collect(), rules })
}

/// Everything the closure laws derive from `generators` among binary words
/// of length at most `n`.
pub fn closure(n: usize, generators: &[(BinaryWord, BinaryWord)]) -> Result<BTreeSet<(BinaryWord, BinaryWord)>> {
    let engine = ClosureEngine::new(n)?;
    let mut rows = engine.empty();
    for (a, b) in generators {
        match (engine.index(a), engine.index(b)) {
            (Some(i), Some(j)) => rows[i] |= 1 << j,
            _ => return Err(Error::Precondition(format!("generator {a} >= {b} is longer than {n}"))),
        }
    }
    engine.close(&mut rows);
    Ok(rows
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| bits(row).map(move |j| (i, j)))
        .map(|(i, j)| (engine.words[i].clone(), engine.words[j].clone()))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TbmGap {
    pub alpha: BinaryWord,
    pub beta: BinaryWord,
    /// The failing TBM decision, including the violated conjugate comparison.
    pub tbm: Judgement,
}

/// Pairs of binary words of length at most `n` with `α ≽ β` but not `α ⊵ β`.
pub fn find_tbm_gap(n: usize, limits: &Limits) -> Result<Vec<TbmGap>> {
    let order = enumerate_order(n, true, &Limits { order: limits.tbm, ..*limits })?;
    let k = order.words.len();
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && order.at(i, j))
        .collect();
    let found = pairs
        .into_par_iter()
        .map(|(i, j)| {
            let (a, b) = (&order.words[i], &order.words[j]);
            let v = tbm_prefix(&a.to_quaternary(), &b.to_quaternary())?;
            Ok((!v.truth).then(|| TbmGap { alpha: a.clone(), beta: b.clone(), tbm: v.judge(a, b, Relation::Tbm) }))
        })
        .collect::<Result<Vec<Option<TbmGap>>>>()?;
    Ok(found.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn short_chains() {
        let lim = Limits::default();
        let t = enumerate_order(1, true, &lim).unwrap();
        assert!(t.holds(&b("1"), &b("")) && t.holds(&b(""), &b("0")) && !t.holds(&b("0"), &b("1")));
        let t = enumerate_order(2, false, &lim).unwrap();
        let h = hasse(&t);
        assert_eq!(h.edge_words(), vec![(b("11"), b("10")), (b("10"), b("01")), (b("01"), b("00"))]);
        assert!(h.to_dot().contains("->"));
    }

    #[test]
    fn limits_are_enforced() {
        let lim = Limits::default();
        assert!(matches!(enumerate_order(7, false, &lim), Err(Error::ResourceLimit(_))));
        assert!(matches!(enumerate_tbm(5, Side::Prefix, &lim), Err(Error::ResourceLimit(_))));
        assert!(matches!(enumerate_order(0, false, &lim), Err(Error::Precondition(_))));
    }

    #[test]
    fn reflexive_only_table_has_no_edges() {
        let t = RelationTable {
            n: 1,
            relation: Relation::Geq,
            words: vec![b("0"), b("1")],
            holds: vec![true, false, false, true],
        };
        assert!(hasse(&t).edges.is_empty());
    }

    #[test]
    fn rules_up_to_four() {
        let r = new_rules(4, &Limits::default()).unwrap();
        assert!(r.contains("1001", "0110"));
        assert!(r.contains("10", "01"));
        assert!(!r.contains("0011", "1000"));
    }

    #[test]
    fn closure_of_a_single_rule() {
        let c = closure(4, &[(b("011"), b("10"))]).unwrap();
        assert!(c.contains(&(b("0011"), b("1000"))) || c.contains(&(b("0011"), b("100"))));
        assert!(c.contains(&(b("01"), b("100"))));
    }
}
