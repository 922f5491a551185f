#![allow(dead_code)]

use abds::codes::AbelianCode;
use abds::gfield::FieldContext;
use abds::oracle::code_basis;
use abds::orbits::{CodeShape, IndexTuple};

pub fn shape(q: u64, r: &[usize]) -> CodeShape {
    CodeShape::new(q, r.to_vec()).unwrap()
}

pub fn code(q: u64, r: &[usize], reps: &[&[usize]]) -> AbelianCode {
    let s = shape(q, r);
    let reps: Vec<IndexTuple> = reps.iter().map(|&t| IndexTuple::from(t)).collect();
    AbelianCode::from_reps(&s, &reps).unwrap()
}

pub const EX1_REPS: &[&[usize]] = &[
    &[0, 0],
    &[0, 1],
    &[0, 2],
    &[0, 3],
    &[0, 6],
    &[0, 7],
    &[0, 9],
    &[1, 0],
    &[1, 1],
    &[1, 5],
    &[1, 6],
];
pub const EX2_REPS: &[&[usize]] = &[
    &[0, 0],
    &[0, 3],
    &[0, 5],
    &[0, 7],
    &[1, 0],
    &[1, 2],
    &[1, 4],
];

/// Weight distribution of a binary code from the weights of its dual
/// (MacWilliams identity). Lets codes of large dimension but small
/// codimension be checked exactly.
pub fn binary_weight_distribution(code: &AbelianCode) -> Vec<u128> {
    let s = code.shape();
    assert_eq!(s.q(), 2);
    let ctx = FieldContext::new(s).unwrap();
    let n = s.len();
    let basis: Vec<Vec<bool>> = code_basis(code, &ctx)
        .unwrap()
        .into_iter()
        .map(|r| r.iter().map(|x| !x.is_zero()).collect())
        .collect();
    let dual = nullspace_gf2(&basis, n);
    let r = dual.len();
    assert!(r <= 26, "codimension too large for the dual enumeration");

    let mut dual_weights = vec![0u128; n + 1];
    let words = n.div_ceil(64);
    let rows: Vec<Vec<u64>> = dual.iter().map(|v| pack(v, words)).collect();
    let mut cw = vec![0u64; words];
    dual_weights[0] += 1;
    for step in 1u64..1 << r {
        for (x, y) in cw.iter_mut().zip(&rows[step.trailing_zeros() as usize]) {
            *x ^= y;
        }
        dual_weights[cw.iter().map(|w| w.count_ones() as usize).sum::<usize>()] += 1;
    }

    let binom = binomials(n);
    (0..=n)
        .map(|i| {
            let total: i128 = (0..=n)
                .filter(|&j| dual_weights[j] > 0)
                .map(|j| dual_weights[j] as i128 * krawtchouk(&binom, n, i, j))
                .sum();
            assert!(total >= 0 && total % (1i128 << r) == 0);
            (total >> r) as u128
        })
        .collect()
}

pub fn binary_min_distance(code: &AbelianCode) -> usize {
    let a = binary_weight_distribution(code);
    (1..a.len()).find(|&i| a[i] > 0).expect("nonzero code")
}

fn pack(v: &[bool], words: usize) -> Vec<u64> {
    let mut w = vec![0u64; words];
    for (i, &b) in v.iter().enumerate() {
        if b {
            w[i / 64] |= 1 << (i % 64);
        }
    }
    w
}

fn binomials(n: usize) -> Vec<Vec<i128>> {
    let mut c = vec![vec![0i128; n + 1]; n + 1];
    for a in 0..=n {
        c[a][0] = 1;
        for b in 1..=a {
            c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
        }
    }
    c
}

fn krawtchouk(c: &[Vec<i128>], n: usize, i: usize, j: usize) -> i128 {
    (0..=i.min(j))
        .filter(|&h| i - h <= n - j)
        .map(|h| {
            let t = c[j][h] * c[n - j][i - h];
            if h % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum()
}

fn nullspace_gf2(rows: &[Vec<bool>], n: usize) -> Vec<Vec<bool>> {
    let mut m: Vec<Vec<bool>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c]) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] {
                row.iter_mut().zip(&pivot).for_each(|(x, &y)| *x ^= y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![false; n];
            v[f] = true;
            for (row, &pc) in m.iter().zip(&pivots) {
                if row[f] {
                    v[pc] = true;
                }
            }
            v
        })
        .collect()
}
