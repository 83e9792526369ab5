//! Exact Gaussian elimination for the small dense matrices produced by the
//! Cech engine and the quadratic-form rank certificate.

use crate::scalar::Field;

/// Rank of a row-major matrix over `field`. Consumes the rows.
#[allow(clippy::needless_range_loop)]
pub fn matrix_rank<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(&rows[rank][col].clone());
        for c in col..ncols {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..nrows {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = field.mul(&factor, &rows[rank][c]);
                    rows[r][c] = field.sub(&rows[r][c], &delta);
                }
            }
        }
        rank += 1;
    }
    rank
}
