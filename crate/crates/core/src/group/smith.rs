/// Nonzero invariant factors of an integer matrix (Smith normal form
/// diagonal), positive and in divisibility order.
///
/// `rows` may be empty; every row must have `ncols` entries.
pub fn smith_invariants(rows: &[Vec<i64>], ncols: usize) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols, "ragged integer matrix");
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let m = a.len();
    let mut diag = Vec::new();
    let mut p = 0;
    while p < m.min(ncols) {
        // smallest nonzero entry of the remaining block as pivot
        let Some((pi, pj)) = (p..m)
            .flat_map(|i| (p..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(p, pi);
        for row in a.iter_mut() {
            row.swap(p, pj);
        }
        let mut clean = true;
        for i in p + 1..m {
            let q = a[i][p] / a[p][p];
            if q != 0 {
                let pivot = a[p].clone();
                for (x, y) in a[i][p..].iter_mut().zip(&pivot[p..]) {
                    *x -= q * y;
                }
            }
            clean &= a[i][p] == 0;
        }
        for j in p + 1..ncols {
            let q = a[p][j] / a[p][p];
            if q != 0 {
                for row in a.iter_mut().skip(p) {
                    row[j] -= q * row[p];
                }
            }
            clean &= a[p][j] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        if let Some(i) = (p + 1..m).find(|&i| (p + 1..ncols).any(|j| a[i][j] % a[p][p] != 0)) {
            let row = a[i].clone();
            for (x, y) in a[p][p..].iter_mut().zip(&row[p..]) {
                *x += y;
            }
            continue;
        }
        diag.push(a[p][p].abs());
        p += 1;
    }
    diag
}
