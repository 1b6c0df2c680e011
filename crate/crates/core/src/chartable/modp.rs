//! Linear algebra over the prime field `F_p` (p < 2^31).

pub type Matrix = Vec<Vec<u64>>;

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn powmod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

/// Reduces a signed integer into `0..p`.
pub fn from_i64(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least generator of the multiplicative group of `F_p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| powmod(g, (p - 1) / q, p) != 1))
        .expect("every prime field has a primitive root")
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix, p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = invmod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = mulmod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of the right null space `{x : m x = 0}`.
pub fn nullspace(m: &Matrix, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a = m.clone();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (row, &pc) in a.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI - a)`, lowest degree first, via
/// reduction to upper Hessenberg form.
pub fn charpoly(a: &Matrix, p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.clone();
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = invmod(h[col + 1][col], p);
        for i in col + 2..n {
            let f = mulmod(h[i][col], inv, p);
            if f == 0 {
                continue;
            }
            // row_i -= f * row_{col+1}; then col_{col+1} += f * col_i
            for j in 0..n {
                let sub = mulmod(f, h[col + 1][j], p);
                h[i][j] = (h[i][j] + p - sub) % p;
            }
            for row in h.iter_mut() {
                let add = mulmod(f, row[i], p);
                row[col + 1] = (row[col + 1] + add) % p;
            }
        }
    }
    // polys[k] = charpoly of the leading k x k block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // x * polys[k] - h[k][k] * polys[k]
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - mulmod(h[k][k], c, p)) % p;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mulmod(prod, h[i + 1][i], p);
            let coef = mulmod(prod, h[i][k], p);
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[i].iter().enumerate() {
                next[j] = (next[j] + p - mulmod(coef, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p)
}
