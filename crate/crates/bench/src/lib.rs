//! Fixed inputs shared by the benchmarks.

use bundlesplit_core::{FlagShape, LeviWeight};

/// Every Levi-dominant weight with entries in `[-r, r]` on `F(1, 3; n)`.
pub fn weights(n: usize, r: i64) -> Vec<LeviWeight> {
    let shape = FlagShape::new(vec![1, 3, n]).expect("n > 3");
    let mut out = Vec::new();
    let mut w = vec![-r; n];
    loop {
        if let Ok(lw) = LeviWeight::new(&shape, w.clone()) {
            out.push(lw);
        }
        let mut i = 0;
        while i < n && w[i] == r {
            w[i] = -r;
            i += 1;
        }
        if i == n {
            return out;
        }
        w[i] += 1;
    }
}
