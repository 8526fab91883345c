#![allow(dead_code)]

use ktwist::tate::complex::TateSpec;
use rand::Rng;

/// Images in `[-range, range]`; each `S` row is a random combination of the
/// Koszul syzygies `c_j e_i - c_i e_j`, so every row is a cycle.
pub fn random_consistent_spec<R: Rng>(
    rng: &mut R,
    max_ext: usize,
    max_div: usize,
    range: i64,
) -> TateSpec<i64> {
    let n = rng.gen_range(1..=max_ext);
    let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-range..=range)).collect();
    let rows = (0..rng.gen_range(0..=max_div))
        .map(|_| {
            let mut row = vec![0i64; n];
            for i in 0..n {
                for j in (i + 1)..n {
                    let t = rng.gen_range(-3..=3);
                    row[i] += t * c[j];
                    row[j] -= t * c[i];
                }
            }
            row
        })
        .collect();
    TateSpec::new(c, rows).expect("rows have n_ext entries")
}

pub fn random_images<R: Rng>(rng: &mut R, n: usize, range: i64) -> Vec<i64> {
    loop {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-range..=range)).collect();
        if c.iter().any(|&x| x != 0) {
            return c;
        }
    }
}
