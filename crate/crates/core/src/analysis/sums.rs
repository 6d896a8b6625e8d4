/// Binomial coefficient, exact for the small arguments used here.
fn binomial(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// `W[M, j] = sum_{i=1..M} i^j c(i)` with `c(i) = (-1)^(i-1) C(M-1, i-1)`,
/// the coefficients of `(1 - t)^(M-1)`.
pub fn weighted_sum(m: u32, j: u32) -> i128 {
    (1..=m)
        .map(|i| {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            sign * binomial(m - 1, i - 1) * (i as i128).pow(j)
        })
        .sum()
}

/// Signed Stirling numbers of the first kind.
pub fn stirling1(n: u32, k: u32) -> i128 {
    let mut row = vec![1i128];
    for m in 0..n {
        let mut next = vec![0i128; row.len() + 1];
        for (i, &v) in row.iter().enumerate() {
            next[i + 1] += v;
            next[i] -= m as i128 * v;
        }
        row = next;
    }
    row.get(k as usize).copied().unwrap_or(0)
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: u32, k: u32) -> i128 {
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![0i128; row.len() + 1];
        for (i, &v) in row.iter().enumerate() {
            next[i + 1] += v;
            next[i] += i as i128 * v;
        }
        row = next;
    }
    row.get(k as usize).copied().unwrap_or(0)
}
