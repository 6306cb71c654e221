use std::collections::HashMap;

use chanorder::miner::{enumerate_order, enumerate_tbm, Limits};
use chanorder::order::{compare, compare_polynomial, numeric_probe, tbm_prefix, Side};
use chanorder::{BinaryWord, QuaternaryWord};
use proptest::prelude::*;

const PROBE_GRID: usize = 10_000;
const PROBE_TOL: f64 = 1e-9;

fn q(b: &BinaryWord) -> QuaternaryWord {
    b.to_quaternary()
}

fn ge(a: &QuaternaryWord, b: &QuaternaryWord) -> bool {
    compare(a, b).unwrap().truth
}

fn word(max: usize) -> impl Strategy<Value = QuaternaryWord> {
    prop::collection::vec(0u8..4, 0..=max).prop_map(|w| QuaternaryWord::reduce(&w).unwrap())
}

/// `compare` over all binary words up to `n`, memoised by pair.
struct Table {
    words: Vec<BinaryWord>,
    truth: HashMap<(BinaryWord, BinaryWord), bool>,
}

impl Table {
    fn new(n: usize) -> Self {
        let words: Vec<BinaryWord> = BinaryWord::all_up_to(n).collect();
        let mut truth = HashMap::new();
        for a in &words {
            for b in &words {
                truth.insert((a.clone(), b.clone()), ge(&q(a), &q(b)));
            }
        }
        Table { words, truth }
    }

    fn get(&self, a: &BinaryWord, b: &BinaryWord) -> bool {
        self.truth[&(a.clone(), b.clone())]
    }
}

#[test]
fn preorder() {
    let t = Table::new(4);
    for a in &t.words {
        assert!(t.get(a, a));
        let p = compare_polynomial(&q(a), &q(a)).unwrap();
        assert!(p.truth, "{a} against itself on the polynomial route");
        for b in &t.words {
            for c in &t.words {
                if t.get(a, b) && t.get(b, c) {
                    assert!(t.get(a, c), "{a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn juxtaposition() {
    let t = Table::new(3);
    let mut long: HashMap<(BinaryWord, BinaryWord), bool> = HashMap::new();
    let true_pairs: Vec<_> = t.truth.iter().filter(|(_, &v)| v).map(|(k, _)| k.clone()).collect();
    for (a, b) in &true_pairs {
        for (c, d) in &true_pairs {
            let (ac, bd) = (a.concat(c), b.concat(d));
            let holds = *long.entry((ac.clone(), bd.clone())).or_insert_with(|| ge(&q(&ac), &q(&bd)));
            assert!(holds, "{a} >= {b} and {c} >= {d} but not {ac} >= {bd}");
        }
    }
}

#[test]
fn complement_duality() {
    let t = Table::new(5);
    for ((a, b), &v) in &t.truth {
        if v {
            assert!(t.get(&b.complement(), &a.complement()), "{a} >= {b}");
        }
    }
}

#[test]
fn squaring() {
    let eps = QuaternaryWord::epsilon();
    let mut words = vec![eps.clone()];
    for len in 1..=3usize {
        for code in 0..4usize.pow(len as u32) {
            let raw: Vec<u8> = (0..len).map(|i| ((code >> (2 * i)) & 3) as u8).collect();
            let w = QuaternaryWord::reduce(&raw).unwrap();
            if w.len() == len {
                words.push(w);
            }
        }
    }
    for w in &words {
        assert_eq!(ge(&w.pow(2), &eps), ge(w, &eps), "{w}");
    }
}

#[test]
fn tbm_preorder_and_duality() {
    let limits = Limits::default();
    let t = enumerate_tbm(3, Side::Prefix, &limits).unwrap();
    let words = t.words().to_vec();
    for a in &words {
        assert!(t.holds(a, a), "{a}");
        for b in &words {
            assert_eq!(t.holds(a, b), t.holds(&b.complement(), &a.complement()), "{a} {b}");
            for c in &words {
                if t.holds(a, b) && t.holds(b, c) {
                    assert!(t.holds(a, c), "{a} {b} {c}");
                }
            }
        }
    }
}

#[test]
fn tbm_implies_order() {
    let limits = Limits::default();
    let tbm = enumerate_tbm(4, Side::Prefix, &limits).unwrap();
    let order = enumerate_order(4, true, &limits).unwrap();
    for (a, b) in tbm.pairs() {
        assert!(order.holds(&a, &b), "{a} |> {b} but not {a} >= {b}");
    }
}

#[test]
fn probe_agrees_with_exact_verdicts() {
    let words: Vec<BinaryWord> = BinaryWord::all_up_to(4).collect();
    for a in &words {
        for b in &words {
            let (p, r) = (q(a), q(b));
            let truth = ge(&p, &r);
            let probe = numeric_probe(&p, &r, PROBE_GRID);
            if probe < -PROBE_TOL {
                assert!(!truth, "{a} {b} probe {probe}");
            }
            if truth {
                assert!(probe >= -PROBE_TOL, "{a} {b} probe {probe}");
            }
        }
    }
    assert!(tbm_prefix(&"10".parse().unwrap(), &"01".parse().unwrap()).unwrap().truth);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn equivalence_chain(p in word(4), r in word(4)) {
        let direct = ge(&p, &r);
        prop_assert_eq!(direct, ge(&p.concat(&r.inverse()), &QuaternaryWord::epsilon()));
        prop_assert_eq!(direct, ge(&r.inverse(), &p.inverse()));
    }

    #[test]
    fn probe_agrees_on_radical_words(p in word(4), r in word(4)) {
        let truth = ge(&p, &r);
        let probe = numeric_probe(&p, &r, PROBE_GRID);
        if truth {
            prop_assert!(probe >= -PROBE_TOL, "probe {}", probe);
        }
        if probe < -PROBE_TOL {
            prop_assert!(!truth);
        }
    }
}
