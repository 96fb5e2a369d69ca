//! Exact rank over a prime field.

/// Trial division; `p` is at most 2^31 so this is cheap.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inverse(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Rank over GF(p) of the matrix whose columns are `columns`.
///
/// Every column has the same length and entries in `[0, p)`. Products stay
/// below 2^62 because `p <= 2^31`.
pub fn rank_mod_p(columns: &[&[u64]], p: u64) -> usize {
    let Some(first) = columns.first() else {
        return 0;
    };
    let rows = first.len();
    let cols = columns.len();
    // Row-major working copy, rows x cols.
    let mut m = vec![0u64; rows * cols];
    for (j, col) in columns.iter().enumerate() {
        for (i, &v) in col.iter().enumerate() {
            m[i * cols + j] = v;
        }
    }

    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                m.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = inverse(m[rank * cols + c], p);
        for j in c..cols {
            m[rank * cols + j] = m[rank * cols + j] * inv % p;
        }
        for r in rank + 1..rows {
            let factor = m[r * cols + c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let sub = factor * m[rank * cols + j] % p;
                m[r * cols + j] = (m[r * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}
