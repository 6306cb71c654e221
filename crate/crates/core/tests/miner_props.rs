use std::collections::BTreeSet;

use chanorder::miner::{closure, enumerate_order, hasse, new_rules, Limits};
use chanorder::BinaryWord;

fn w(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

#[test]
fn equal_length_words_are_never_equivalent() {
    let limits = Limits::default();
    for n in 1..=5 {
        let t = enumerate_order(n, false, &limits).unwrap();
        for (a, b) in t.pairs() {
            assert!(a == b || !t.holds(&b, &a), "{a} and {b} are mutually related");
        }
    }
}

#[test]
fn rules_are_independent() {
    let rules = new_rules(5, &Limits::default()).unwrap();
    let pairs = rules.pairs();
    for (i, r) in pairs.iter().enumerate() {
        let others: Vec<_> = pairs.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        let closed = closure(5, &others).unwrap();
        assert!(!closed.contains(r), "{} >= {} follows from the other rules", r.0, r.1);
    }
}

/// The closure of the mined rules is sound; any shortfall against the full
/// table is printed rather than asserted.
#[test]
fn closure_of_rules_against_the_table() {
    let limits = Limits::default();
    let rules = new_rules(5, &limits).unwrap();
    for n in 1..=4 {
        let mut generators: Vec<_> = rules.pairs().into_iter().filter(|(a, b)| a.len() <= n && b.len() <= n).collect();
        generators.push((w("1"), w("")));
        generators.push((w(""), w("0")));
        let derived = closure(n, &generators).unwrap();
        let table: BTreeSet<_> = enumerate_order(n, true, &limits).unwrap().pairs().into_iter().collect();
        assert!(derived.is_subset(&table), "closure derives a false pair at n = {n}");
        let missing: Vec<_> = table.difference(&derived).collect();
        println!("n = {n}: {} true pairs, {} derived, {} not derived", table.len(), derived.len(), missing.len());
        for (a, b) in missing.iter().take(10) {
            println!("  not derived: {a} >= {b}");
        }
    }
}

#[test]
fn hasse_round_trip() {
    let limits = Limits::default();
    for (n, mixed) in [(3, true), (4, false), (4, true)] {
        let t = enumerate_order(n, mixed, &limits).unwrap();
        let h = hasse(&t);
        let m = h.classes.len();
        let mut reach = vec![vec![false; m]; m];
        for (c, row) in reach.iter_mut().enumerate() {
            row[c] = true;
        }
        for &(u, l) in &h.edges {
            reach[u][l] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if reach[i][k] {
                    for j in 0..m {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut rebuilt = BTreeSet::new();
        for i in 0..m {
            for j in 0..m {
                if reach[i][j] {
                    for a in &h.classes[i] {
                        for b in &h.classes[j] {
                            rebuilt.insert((a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
        let table: BTreeSet<_> = t.pairs().into_iter().collect();
        assert_eq!(rebuilt, table, "n = {n}, mixed = {mixed}");
    }
}
