#![allow(clippy::needless_range_loop)]

//! Independent oracles for the exact kernel and the closed-form spectra.

use extremal_split::design::{sts, Design};
use extremal_split::graph::SplitGraph;
use extremal_split::linalg::{char_poly, exact_spectrum, min_poly, IntMatrix, IntPoly};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `det(M)` by the Leibniz expansion over all permutations.
fn leibniz_det(m: &[Vec<i64>]) -> i128 {
    fn go(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>, sign: i128, acc: i128, total: &mut i128) {
        let n = m.len();
        if row == n {
            *total += sign * acc;
            return;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            let inversions = used[j + 1..].iter().filter(|&&u| u).count();
            let s = if inversions % 2 == 0 { sign } else { -sign };
            used[j] = true;
            go(m, row + 1, used, s, acc * m[row][j] as i128, total);
            used[j] = false;
        }
    }
    let mut total = 0;
    go(m, 0, &mut vec![false; m.len()], 1, 1, &mut total);
    total
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(lo..=hi);
            m[i][j] = x;
            m[j][i] = x;
        }
    }
    m
}

#[test]
fn char_poly_agrees_with_leibniz_at_integer_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(1..=6);
        let m = random_symmetric(&mut rng, n, -4, 4);
        let p = char_poly(&IntMatrix::from_rows(&m)).unwrap();
        for t in -3i64..=3 {
            let shifted: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { t - m[i][j] } else { -m[i][j] }).collect())
                .collect();
            assert_eq!(p.eval(&BigInt::from(t)), BigInt::from(leibniz_det(&shifted)), "{m:?} at {t}");
        }
    }
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
fn jacobi_eigenvalues(m: &[Vec<i64>]) -> Vec<f64> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    for _ in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}

fn cluster(ev: &[f64]) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &x in ev {
        match out.last_mut() {
            Some((y, m)) if (*y - x).abs() < 1e-6 => *m += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

#[test]
fn exact_spectrum_agrees_with_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..80 {
        let n = rng.gen_range(1..=8);
        let m = if trial % 2 == 0 {
            random_symmetric(&mut rng, n, -2, 2)
        } else {
            let mut m = random_symmetric(&mut rng, n, 0, 1);
            (0..n).for_each(|i| m[i][i] = 0);
            m
        };
        let spec = exact_spectrum(&IntMatrix::from_rows(&m)).unwrap();
        let numeric = cluster(&jacobi_eigenvalues(&m));
        assert_eq!(spec.entries.len(), numeric.len(), "{m:?}");
        for (e, (x, mult)) in spec.entries.iter().zip(&numeric) {
            assert!((e.value.approx() - x).abs() < 1e-6, "{m:?}: {} vs {x}", e.value);
            assert_eq!(e.multiplicity, *mult, "{m:?}");
        }
        assert_eq!(min_poly(&IntMatrix::from_rows(&m)).unwrap().degree(), Some(numeric.len()));
    }
}

#[test]
fn corona_char_poly_has_the_closed_form() {
    for c in 1..=10usize {
        let g = SplitGraph::corona_clique(c);
        let p = char_poly(&g.adjacency()).unwrap();
        let top = IntPoly::from_i64(&[-1, -(c as i64 - 1), 1]);
        let mut want = top;
        for _ in 1..c {
            want = &want * &IntPoly::from_i64(&[-1, 1, 1]);
        }
        assert_eq!(p, want, "c = {c}");
    }
}

/// For a `2-(v,k,λ)` design with replication `r`, `Spec(A(G_D))` follows from
/// `BBᵀ = (r−λ)I + λJ`: the quotient roots, `0` with multiplicity `b − v`, and the
/// two roots of `t² + t − (r−λ)`, each `v − 1` times.
fn design_char_poly(v: u64, b: u64, r: u64, k: u64, lambda: u64) -> IntPoly {
    let (v, b, r, k, lambda) = (v as i64, b as i64, r as i64, k as i64, lambda as i64);
    let mut p = IntPoly::from_i64(&[-(k * r), -(v - 1), 1]);
    for _ in 0..v - 1 {
        p = &p * &IntPoly::from_i64(&[-(r - lambda), 1, 1]);
    }
    for _ in 0..b - v {
        p = &p * &IntPoly::x();
    }
    p
}

#[test]
fn design_graph_char_poly_has_the_closed_form() {
    let fano = Design::new(7, vec![vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 6], vec![4, 5, 7], vec![5, 6, 1], vec![6, 7, 2], vec![7, 1, 3]]).unwrap();
    let cases = [fano.clone(), fano.replicate(3), sts(9).unwrap(), sts(9).unwrap().replicate(2)];
    for d in cases {
        let p = d.validate_uniform().unwrap();
        let g = SplitGraph::from_design(&d);
        assert_eq!(
            char_poly(&g.adjacency()).unwrap(),
            design_char_poly(p.v, p.b, p.r, p.k, p.lambda),
            "{p}"
        );
    }
}

#[test]
fn sts_pair_counts_by_brute_force() {
    for v in (3..=27).filter(|v| v % 6 == 1 || v % 6 == 3) {
        let d = sts(v).unwrap();
        let mut count = vec![vec![0u32; v + 1]; v + 1];
        for b in d.blocks() {
            let p = b.points();
            assert_eq!(p.len(), 3);
            for i in 0..3 {
                for j in i + 1..3 {
                    count[p[i] as usize][p[j] as usize] += 1;
                }
            }
        }
        for x in 1..=v {
            for y in x + 1..=v {
                assert_eq!(count[x][y], 1, "STS({v}) pair {x},{y}");
            }
        }
    }
}
