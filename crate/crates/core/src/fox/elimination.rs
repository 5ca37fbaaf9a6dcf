//! Determinantal divisors over the principal ideal domain `Q[t, t^-1]`.
//!
//! Row and column operations over `Q[t]` bring the matrix to diagonal form;
//! pairwise gcd/lcm exchanges then give the Smith form `e_1 | e_2 | ...`,
//! and the gcd of the `r x r` minors is `e_1 ... e_r`. This avoids
//! enumerating minors, whose number grows combinatorially with the number
//! of relators.

use num_traits::Zero;

use crate::ring::{dense_divrem as divrem, LaurentPoly, Rational, UnitNormalForm};

type Dense = Vec<Rational>;

fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn sub_scaled(target: &mut Dense, q: &Dense, source: &Dense) {
    // target -= q * source
    if q.is_empty() || source.is_empty() {
        return;
    }
    let len = q.len() + source.len() - 1;
    if target.len() < len {
        target.resize(len, Rational::zero());
    }
    for (i, a) in q.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in source.iter().enumerate() {
            target[i + j] -= a * b;
        }
    }
    trim(target);
}

fn to_laurent(p: &Dense) -> LaurentPoly {
    LaurentPoly::from_terms(p.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
}

fn from_laurent(p: &LaurentPoly, shift: i64) -> Dense {
    let mut v = Vec::new();
    for (e, c) in p.terms() {
        let i = (e - shift) as usize;
        if v.len() <= i {
            v.resize(i + 1, Rational::zero());
        }
        v[i] = c.clone();
    }
    v
}

/// gcd of the `order x order` minors of a matrix over `Q[t, t^-1]`,
/// unit-normalized; 0 when the rank is below `order`.
pub fn univariate_determinantal_divisor(
    entries: &[Vec<LaurentPoly>],
    order: usize,
) -> UnitNormalForm<LaurentPoly> {
    if order == 0 {
        return LaurentPoly::one().normalize();
    }
    let rows = entries.len();
    let cols = entries.first().map_or(0, Vec::len);
    // multiply each row by a unit t^k so that all entries are polynomials
    let mut a: Vec<Vec<Dense>> = entries
        .iter()
        .map(|row| {
            let shift = row.iter().filter_map(LaurentPoly::min_exponent).min().unwrap_or(0);
            row.iter().map(|e| from_laurent(e, shift)).collect()
        })
        .collect();

    let mut diag: Vec<LaurentPoly> = Vec::new();
    for p in 0..rows.min(cols) {
        loop {
            let pivot = (p..rows)
                .flat_map(|i| (p..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a[i][j].is_empty())
                .min_by_key(|&(i, j)| a[i][j].len());
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(p, pi);
            for row in a.iter_mut() {
                row.swap(p, pj);
            }
            let mut clean = true;
            for i in p + 1..rows {
                if a[i][p].is_empty() {
                    continue;
                }
                let (q, _) = divrem(&a[i][p], &a[p][p]);
                let pivot_row = a[p].clone();
                for j in p..cols {
                    sub_scaled(&mut a[i][j], &q, &pivot_row[j]);
                }
                clean &= a[i][p].is_empty();
            }
            for j in p + 1..cols {
                if a[p][j].is_empty() {
                    continue;
                }
                let (q, _) = divrem(&a[p][j], &a[p][p]);
                for row in a.iter_mut().skip(p) {
                    let src = row[p].clone();
                    sub_scaled(&mut row[j], &q, &src);
                }
                clean &= a[p][j].is_empty();
            }
            if clean {
                break;
            }
        }
        if a[p][p].is_empty() {
            break;
        }
        diag.push(to_laurent(&a[p][p]).normalize().into_poly());
    }

    if diag.len() < order {
        return LaurentPoly::zero().normalize();
    }
    // diag(a, b) ~ diag(gcd, lcm) brings the diagonal into divisibility order
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = (&diag[i] * &diag[j]).exact_div(g.as_poly()).expect("gcd divides");
            diag[i] = g.into_poly();
            diag[j] = l;
        }
    }
    diag[..order].iter().cloned().product::<LaurentPoly>().normalize()
}
