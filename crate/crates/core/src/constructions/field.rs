//! Small finite fields GF(p^k) with table-driven arithmetic.

/// `Some((p, k))` when `q = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Elements are encoded as base-`p` digit strings of polynomial coefficients
/// (lowest degree first) reduced modulo a fixed monic irreducible polynomial.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: usize,
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl FiniteField {
    pub fn new(q: usize) -> Option<Self> {
        let (p, k) = prime_power(q)?;
        let k = k as usize;
        let modulus = irreducible(p, k);
        let decode = |x: usize| -> Vec<usize> {
            let mut c = Vec::with_capacity(k);
            let mut x = x;
            for _ in 0..k {
                c.push(x % p);
                x /= p;
            }
            c
        };
        let encode = |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &d| acc * p + d) };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let ca = decode(a);
            for b in 0..q {
                let cb = decode(b);
                let sum: Vec<usize> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);
                let prod = poly_mod(&poly_mul(&ca, &cb, p), &modulus, p);
                let mut prod = prod;
                prod.resize(k, 0);
                mul[a * q + b] = encode(&prod);
            }
        }
        Some(Self { p, q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse exists")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
    pub fn quadratic_characters(&self) -> Vec<i8> {
        let mut chi = vec![-1; self.q];
        chi[0] = 0;
        for x in 1..self.q {
            chi[self.mul(x, x)] = 1;
        }
        chi
    }
}

fn poly_mul(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn mod_inverse(a: usize, p: usize) -> usize {
    (1..p)
        .find(|&x| (a * x) % p == 1)
        .expect("nonzero residue is invertible mod a prime")
}

fn trim(mut a: Vec<usize>) -> Vec<usize> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo `m` (nonzero leading coefficient).
fn poly_mod(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let m = trim(m.to_vec());
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inverse(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let f = (r[dr] * lead_inv) % p;
        for (i, &c) in m.iter().enumerate() {
            let idx = dr - dm + i;
            r[idx] = (r[idx] + p * p - (f * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Smallest (in digit encoding) monic irreducible polynomial of degree `k` over Z_p.
fn irreducible(p: usize, k: usize) -> Vec<usize> {
    if k == 1 {
        return vec![0, 1];
    }
    let count = p.pow(k as u32);
    for code in 0..count {
        let mut poly: Vec<usize> = (0..k)
            .scan(code, |c, _| {
                let d = *c % p;
                *c /= p;
                Some(d)
            })
            .collect();
        poly.push(1);
        if (1..=k / 2).all(|d| !has_monic_factor_of_degree(&poly, d, p)) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn has_monic_factor_of_degree(poly: &[usize], d: usize, p: usize) -> bool {
    (0..p.pow(d as u32)).any(|code| {
        let mut f: Vec<usize> = (0..d)
            .scan(code, |c, _| {
                let x = *c % p;
                *c /= p;
                Some(x)
            })
            .collect();
        f.push(1);
        poly_mod(poly, &f, p).is_empty()
    })
}
