//! Finite fields GF(q) for small prime powers, backed by dense lookup tables.
//!
//! Elements are encoded as integer codes `0..q`. For `q = p^e` the code of the
//! polynomial `a_0 + a_1 x + ... + a_{e-1} x^{e-1}` is `a_0 + a_1 p + ... +
//! a_{e-1} p^{e-1}`, so code 0 is zero, code 1 is one and for prime `q` the
//! codes are just the residues mod `q`.
//!
//! The reduction polynomial for each extension field is pinned (Conway
//! polynomials), which makes element codes stable across runs.

use thiserror::Error;

/// Field orders this crate builds tables for.
pub const SUPPORTED_ORDERS: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("GF({0}) is outside the supported orders {SUPPORTED_ORDERS:?}")]
    Unsupported(u32),
}

/// Conway polynomials, coefficients from the constant term up (monic).
fn pinned_modulus(p: u32, e: u32) -> Option<&'static [u8]> {
    let m: &'static [u8] = match (p, e) {
        (2, 1) => &[1, 1],
        (3, 1) => &[1, 1],
        (5, 1) => &[3, 1],
        (7, 1) => &[4, 1],
        (11, 1) => &[9, 1],
        (13, 1) => &[11, 1],
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (3, 2) => &[2, 2, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        _ => return None,
    };
    Some(m)
}

/// Splits `q` into `(p, e)` with `q = p^e`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        return Some((q, 1));
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Arithmetic tables for GF(q). Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    q: u32,
    p: u32,
    e: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    modulus: Vec<u8>,
}

impl FieldTable {
    pub fn new(q: u32) -> Result<Self, FieldError> {
        let (p, e) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        if !SUPPORTED_ORDERS.contains(&q) {
            return Err(FieldError::Unsupported(q));
        }
        let modulus = pinned_modulus(p, e).ok_or(FieldError::Unsupported(q))?.to_vec();
        let qs = q as usize;
        let digits = |c: usize| -> Vec<u32> {
            let mut c = c as u32;
            (0..e)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect()
        };
        let code = |ds: &[u32]| -> u8 { ds.iter().rev().fold(0u32, |acc, &d| acc * p + d) as u8 };

        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..qs {
            let da = digits(a);
            for b in 0..qs {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = code(&sum);
                mul[a * qs + b] = code(&poly_mul_mod(&da, &db, &modulus, p));
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u8;
            }
        }
        Ok(Self { q, p, e, add, mul, neg, inv, modulus })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Reduction polynomial, constant term first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: u8, mut k: u32) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn add_table(&self) -> &[u8] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u8] {
        &self.mul
    }

    pub fn inv_table(&self) -> &[u8] {
        &self.inv
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u8], p: u32) -> Vec<u32> {
    let e = a.len();
    let mut prod = vec![0u32; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // modulus is monic of degree e: x^e = -(m_0 + ... + m_{e-1} x^{e-1})
    for deg in (e..2 * e).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (k, &m) in modulus[..e].iter().enumerate() {
            let sub = (c * m as u32) % p;
            let idx = deg - e + k;
            prod[idx] = (prod[idx] + p - sub) % p;
        }
    }
    prod.truncate(e);
    prod
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_and_gf3_basics() {
        let f2 = FieldTable::new(2).unwrap();
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f2.mul(1, 1), 1);
        let f3 = FieldTable::new(3).unwrap();
        assert_eq!(f3.add(2, 2), 1);
        assert_eq!(f3.inv(2), Some(2));
        assert_eq!(f3.inv(0), None);
    }

    #[test]
    fn gf4_x_squared_is_x_plus_one() {
        let f = FieldTable::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x has code 2, x+1 has code 3
        assert_eq!(f.mul(2, 2), 3);
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(FieldTable::new(6), Err(FieldError::NotPrimePower(6)));
        assert_eq!(FieldTable::new(1), Err(FieldError::NotPrimePower(1)));
        assert_eq!(FieldTable::new(0), Err(FieldError::NotPrimePower(0)));
        assert_eq!(FieldTable::new(32), Err(FieldError::Unsupported(32)));
        assert_eq!(FieldTable::new(17), Err(FieldError::Unsupported(17)));
        assert_eq!(FieldTable::new(27), Err(FieldError::Unsupported(27)));
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for &q in &SUPPORTED_ORDERS {
            let f = FieldTable::new(q).unwrap();
            let els: Vec<u8> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if q <= 16 {
                        for &c in &els {
                            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn prime_fields_match_integer_arithmetic() {
        for &q in SUPPORTED_ORDERS.iter().filter(|&&q| prime_power(q).unwrap().1 == 1) {
            let f = FieldTable::new(q).unwrap();
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.add(a as u8, b as u8) as u32, (a + b) % q);
                    assert_eq!(f.mul(a as u8, b as u8) as u32, (a * b) % q);
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for &q in &SUPPORTED_ORDERS {
            let f = FieldTable::new(q).unwrap();
            let p = f.characteristic();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_one() {
        for &q in &SUPPORTED_ORDERS {
            let f = FieldTable::new(q).unwrap();
            for a in f.elements().skip(1) {
                assert_eq!(f.pow(a, q - 1), 1);
            }
            // a generator exists, so the modulus really is irreducible
            let has_gen = f.elements().skip(1).any(|g| (1..q - 1).all(|k| f.pow(g, k) != 1));
            assert!(has_gen, "GF({q}) has no primitive element");
        }
    }

    #[test]
    fn deterministic_tables() {
        assert_eq!(FieldTable::new(9).unwrap(), FieldTable::new(9).unwrap());
    }
}
