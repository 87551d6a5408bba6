//! Table-driven arithmetic in GF(q) for the small prime powers used by the
//! plane constructions.

use crate::error::{Error, Result};

/// Orders with a known field construction.
pub const SUPPORTED_ORDERS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

/// GF(q) with elements `0..q`. For `q = p^d` an element encodes the
/// polynomial whose base-`p` digits are its coefficients (lowest first).
#[derive(Clone, Debug)]
pub struct GaloisField {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl GaloisField {
    pub fn new(q: usize) -> Result<Self> {
        // (characteristic, monic irreducible modulus, lowest coefficient first)
        let (p, modulus): (usize, &[usize]) = match q {
            2 | 3 | 5 | 7 => (q, &[0, 1]),
            4 => (2, &[1, 1, 1]),
            8 => (2, &[1, 1, 0, 1]),
            9 => (3, &[1, 0, 1]),
            _ => return Err(Error::UnsupportedOrder(q)),
        };
        let degree = modulus.len() - 1;
        let digits = |mut a: usize| {
            let mut d = vec![0; degree];
            for slot in d.iter_mut() {
                *slot = a % p;
                a /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);
                let mut prod = vec![0; 2 * degree];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // Reduce by the monic modulus from the top down.
                for top in (degree..prod.len()).rev() {
                    let c = prod[top];
                    if c != 0 {
                        for (k, m) in modulus.iter().enumerate() {
                            let slot = top - degree + k;
                            prod[slot] = (prod[slot] + p * p - c * m % p) % p;
                        }
                    }
                }
                mul[a * q + b] = encode(&prod[..degree]);
            }
        }
        Ok(GaloisField { q, add, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }
}
