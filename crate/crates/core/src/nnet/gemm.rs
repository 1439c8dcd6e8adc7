//! Batched dense kernels used by the MLP forward/backward passes.
//! Row-major throughout; the inner loops run over contiguous slices so the
//! compiler can vectorize them.

use crate::real::Real;

/// c[m x n] += a[m x k] * b[k x n]
pub fn matmul_acc<R: Real>(a: &[R], b: &[R], c: &mut [R], m: usize, k: usize, n: usize) {
    debug_assert_eq!(a.len(), m * k);
    debug_assert_eq!(b.len(), k * n);
    debug_assert_eq!(c.len(), m * n);
    for i in 0..m {
        let arow = &a[i * k..(i + 1) * k];
        let crow = &mut c[i * n..(i + 1) * n];
        for (p, &av) in arow.iter().enumerate() {
            if av == R::zero() {
                continue;
            }
            let brow = &b[p * n..(p + 1) * n];
            for (cv, &bv) in crow.iter_mut().zip(brow.iter()) {
                *cv = *cv + av * bv;
            }
        }
    }
}

/// dw[o x i] += dy[m x o]^T * x[m x i]  (rank-1 updates per batch row)
pub fn outer_acc<R: Real>(dy: &[R], x: &[R], dw: &mut [R], m: usize, o: usize, i: usize) {
    debug_assert_eq!(dy.len(), m * o);
    debug_assert_eq!(x.len(), m * i);
    debug_assert_eq!(dw.len(), o * i);
    for r in 0..m {
        let drow = &dy[r * o..(r + 1) * o];
        let xrow = &x[r * i..(r + 1) * i];
        for (oo, &dv) in drow.iter().enumerate() {
            if dv == R::zero() {
                continue;
            }
            let wrow = &mut dw[oo * i..(oo + 1) * i];
            for (wv, &xv) in wrow.iter_mut().zip(xrow.iter()) {
                *wv = *wv + dv * xv;
            }
        }
    }
}

/// Transpose src[rows x cols] into dst[cols x rows].
pub fn transpose_into<R: Real>(src: &[R], dst: &mut [R], rows: usize, cols: usize) {
    debug_assert_eq!(src.len(), rows * cols);
    debug_assert_eq!(dst.len(), rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            dst[c * rows + r] = src[r * cols + c];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_matmul(a: &[f64], b: &[f64], m: usize, k: usize, n: usize) -> Vec<f64> {
        let mut c = vec![0.0; m * n];
        for i in 0..m {
            for j in 0..n {
                for p in 0..k {
                    c[i * n + j] += a[i * k + p] * b[p * n + j];
                }
            }
        }
        c
    }

    #[test]
    fn matmul_matches_naive() {
        let (m, k, n) = (5, 7, 4);
        let a: Vec<f64> = (0..m * k).map(|i| (i as f64 * 0.37).sin()).collect();
        let b: Vec<f64> = (0..k * n).map(|i| (i as f64 * 0.11).cos()).collect();
        let mut c = vec![0.0; m * n];
        matmul_acc(&a, &b, &mut c, m, k, n);
        let want = naive_matmul(&a, &b, m, k, n);
        for (x, y) in c.iter().zip(want.iter()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn outer_acc_matches_transposed_matmul() {
        let (m, o, i) = (6, 3, 5);
        let dy: Vec<f64> = (0..m * o).map(|v| (v as f64 * 0.21).sin()).collect();
        let x: Vec<f64> = (0..m * i).map(|v| (v as f64 * 0.43).cos()).collect();
        let mut dw = vec![0.0; o * i];
        outer_acc(&dy, &x, &mut dw, m, o, i);
        // reference: dw = dy^T * x
        let mut dyt = vec![0.0; o * m];
        transpose_into(&dy, &mut dyt, m, o);
        let want = naive_matmul(&dyt, &x, o, m, i);
        for (a, b) in dw.iter().zip(want.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
