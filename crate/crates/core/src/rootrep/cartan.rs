//! Cartan matrices and symmetrizers, Bourbaki numbering.
//!
//! Convention: `cartan[i][j] = <alpha_i^vee, alpha_j>`, so row `i` lists the
//! pairings of the simple roots with the `i`-th simple coroot. The symmetrizer
//! `d_i` is proportional to the squared length of `alpha_i`.

use super::Family;

pub(super) struct CartanData {
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
}

fn link(c: &mut [Vec<i64>], i: usize, j: usize) {
    c[i][j] = -1;
    c[j][i] = -1;
}

fn blank(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 2 } else { 0 }).collect())
        .collect()
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut c = blank(n);
    for i in 1..n {
        link(&mut c, i - 1, i);
    }
    c
}

pub(super) fn cartan_data(family: Family, n: usize) -> CartanData {
    match family {
        Family::A => CartanData {
            cartan: chain(n),
            symmetrizer: vec![1; n],
        },
        Family::B => {
            let mut c = chain(n);
            // alpha_n short
            c[n - 1][n - 2] = -2;
            let mut d = vec![2; n];
            d[n - 1] = 1;
            CartanData {
                cartan: c,
                symmetrizer: d,
            }
        }
        Family::C => {
            let mut c = chain(n);
            // alpha_n long
            c[n - 2][n - 1] = -2;
            let mut d = vec![1; n];
            d[n - 1] = 2;
            CartanData {
                cartan: c,
                symmetrizer: d,
            }
        }
        Family::D => {
            let mut c = blank(n);
            for i in 1..n - 1 {
                link(&mut c, i - 1, i);
            }
            // nodes n-1 and n both hang off node n-2
            link(&mut c, n - 3, n - 1);
            CartanData {
                cartan: c,
                symmetrizer: vec![1; n],
            }
        }
        Family::E => {
            let mut c = blank(n);
            link(&mut c, 0, 2);
            link(&mut c, 1, 3);
            for i in 2..n - 1 {
                link(&mut c, i, i + 1);
            }
            CartanData {
                cartan: c,
                symmetrizer: vec![1; n],
            }
        }
        Family::F => {
            let mut c = chain(4);
            c[2][1] = -2;
            CartanData {
                cartan: c,
                symmetrizer: vec![2, 2, 1, 1],
            }
        }
        Family::G => CartanData {
            // alpha_1 short, alpha_2 long
            cartan: vec![vec![2, -3], vec![-1, 2]],
            symmetrizer: vec![1, 3],
        },
    }
}
