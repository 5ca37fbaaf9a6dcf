use std::collections::HashMap;

use super::FoxMatrix;
use crate::ring::{MultiLaurentPoly, UnitNormalForm};

/// Cofactor expansion of the minors on a fixed row set, memoized by the
/// set of columns still available.
struct RowSetMinors<'a> {
    matrix: &'a FoxMatrix,
    rows: Vec<usize>,
    memo: HashMap<u64, MultiLaurentPoly>,
}

impl RowSetMinors<'_> {
    fn det(&mut self, mask: u64) -> MultiLaurentPoly {
        let size = mask.count_ones() as usize;
        if size == 0 {
            return MultiLaurentPoly::one(self.matrix.nvars());
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let row = self.rows[self.rows.len() - size];
        let mut acc = MultiLaurentPoly::zero(self.matrix.nvars());
        let mut position = 0;
        for j in 0..self.matrix.cols() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = self.matrix.entry(row, j);
            if !entry.is_zero() {
                let sub = self.det(mask & !(1 << j));
                if !sub.is_zero() {
                    let term = entry * &sub;
                    acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
                }
            }
            position += 1;
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `false`.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        // advance to the next combination
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// gcd of all `order x order` minors, stopping as soon as it reaches 1.
pub fn minors_gcd(m: &FoxMatrix, order: usize) -> UnitNormalForm<MultiLaurentPoly> {
    let k = m.nvars();
    assert!(m.cols() <= 64, "at most 64 generators");
    if order == 0 {
        return MultiLaurentPoly::one(k).normalize();
    }
    let one = MultiLaurentPoly::one(k).normalize();
    let mut g = MultiLaurentPoly::zero(k).normalize();
    for_each_subset(m.rows(), order, |rows| {
        let mut cache = RowSetMinors { matrix: m, rows: rows.to_vec(), memo: HashMap::new() };
        let mut keep_going = true;
        for_each_subset(m.cols(), order, |cols| {
            let mask = cols.iter().fold(0u64, |acc, &c| acc | (1 << c));
            let minor = cache.det(mask);
            if !minor.is_zero() {
                g = g.gcd(&minor).expect("same ring");
            }
            keep_going = g != one;
            keep_going
        });
        keep_going
    });
    g
}
