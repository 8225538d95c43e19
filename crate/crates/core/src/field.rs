//! Finite fields GF(p^e) with precomputed operation tables.
//!
//! Elements are encoded as integers `0..q`: the polynomial
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` maps to `sum c_i p^i`. Prime fields
//! use plain modular arithmetic; extension fields reduce modulo the smallest
//! monic irreducible polynomial of degree `e` under that same encoding.

use crate::error::{Error, Result};

/// Largest order supported by the table-driven implementation.
pub const MAX_ORDER: usize = 1 << 12;

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: usize,
    e: usize,
    /// Coefficients of the monic modulus, low degree first (length `e + 1`).
    modulus: Vec<usize>,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
}

/// Returns `(p, e)` when `q = p^e` for a prime `p`.
pub fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn factorization(mut q: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= q {
        let mut k = 0;
        while q.is_multiple_of(d) {
            q /= d;
            k += 1;
        }
        if k > 0 {
            out.push((d, k));
        }
        d += 1;
    }
    if q > 1 {
        out.push((q, 1));
    }
    out
}

fn describe_factorization(q: usize) -> String {
    factorization(q)
        .iter()
        .map(|&(p, k)| if k == 1 { p.to_string() } else { format!("{p}^{k}") })
        .collect::<Vec<_>>()
        .join(" * ")
}

// Polynomials over GF(p) as coefficient vectors, low degree first, no trailing zeros.
fn trim(mut a: Vec<usize>) -> Vec<usize> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = r[r.len() - 1] * lead_inv % p;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn mod_inv(a: usize, p: usize) -> usize {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero element of a prime field")
}

fn decode(mut x: usize, p: usize, e: usize) -> Vec<usize> {
    let mut c = Vec::with_capacity(e);
    for _ in 0..e {
        c.push(x % p);
        x /= p;
    }
    c
}

fn encode(c: &[usize], p: usize) -> usize {
    c.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = decode(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `e` over GF(p), comparing
/// the integer encodings of the non-leading coefficients.
pub fn smallest_irreducible(p: usize, e: usize) -> Vec<usize> {
    (0..p.pow(e as u32))
        .map(|low| {
            let mut f = decode(low, p, e);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

impl GaloisField {
    /// Builds GF(q); refuses orders that are not prime powers.
    pub fn new(q: usize) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| {
            Error::premise(format!(
                "{q} is not a prime power (factorization: {}); no field of that order exists",
                if q < 2 { q.to_string() } else { describe_factorization(q) }
            ))
        })?;
        if q > MAX_ORDER {
            return Err(Error::premise(format!("field order {q} exceeds the supported maximum {MAX_ORDER}")));
        }
        let modulus = if e == 1 { vec![0, 1] } else { smallest_irreducible(p, e) };
        let digits: Vec<Vec<usize>> = (0..q).map(|x| decode(x, p, e)).collect();
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let sum: Vec<usize> = digits[a].iter().zip(&digits[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum, p);
                let mut prod = vec![0; 2 * e - 1];
                for (i, &x) in digits[a].iter().enumerate() {
                    for (j, &y) in digits[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                mul[a * q + b] = if e == 1 { prod[0] } else { encode(&poly_rem(&prod, &modulus, p), p) };
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).expect("additive inverse")).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * q + b] == 1).expect("multiplicative inverse") })
            .collect();
        Ok(Self { p, e, modulus, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.neg.len()
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    /// Monic modulus, low degree first; `[0, 1]` (i.e. `x`) for prime fields.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(f: &GaloisField) {
        let q = f.order();
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                if a != 0 && b != 0 {
                    assert_ne!(f.mul(a, b), 0, "zero divisors in GF({q})");
                }
                for c in 0..q {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            check_axioms(&GaloisField::new(q).unwrap());
        }
    }

    #[test]
    fn known_moduli() {
        assert_eq!(GaloisField::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(GaloisField::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(GaloisField::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(GaloisField::new(16).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn rejects_non_prime_powers() {
        let err = GaloisField::new(6).unwrap_err().to_string();
        assert!(err.contains("2 * 3"), "{err}");
        assert!(GaloisField::new(12).unwrap_err().to_string().contains("2^2 * 3"));
        assert!(GaloisField::new(1).is_err());
        assert_eq!(prime_power(169), Some((13, 2)));
        assert_eq!(prime_power(100), None);
    }
}
