//! Small finite fields.
//!
//! Prime fields use direct modular arithmetic. Prime-power fields up to 81
//! elements are built from a fixed irreducible polynomial and use full
//! addition and multiplication tables. Elements are indices `0..q`; for
//! extension fields an index is the base-`p` digit string of the polynomial
//! coefficients, low degree first.

use crate::error::{Error, Result};

/// Monic irreducible polynomials `x^k + c_{k-1} x^{k-1} + ... + c_0`,
/// stored as `(p, k, [c_0, .., c_{k-1}])`.
const IRREDUCIBLE: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 0, 0, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (5, 2, &[2, 4]),
    (7, 2, &[3, 6]),
];

pub const MAX_EXTENSION_ORDER: u32 = 81;

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u32,
    k: u32,
    q: u32,
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Splits `q` as `p^k` when it is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::Parameter(format!("{} is not a prime power", q)))?;
        debug_assert!(is_prime(p));
        if k == 1 {
            return Ok(Self { p, k, q, tables: None });
        }
        let modulus = IRREDUCIBLE
            .iter()
            .find(|&&(pp, kk, _)| pp == p && kk == k)
            .map(|&(_, _, c)| c)
            .ok_or_else(|| {
                Error::Parameter(format!(
                    "no irreducible polynomial tabulated for q = {} (extension fields up to {})",
                    q, MAX_EXTENSION_ORDER
                ))
            })?;
        let digits = |x: u32| -> Vec<u32> {
            let mut d = Vec::with_capacity(k as usize);
            let mut x = x;
            for _ in 0..k {
                d.push(x % p);
                x /= p;
            }
            d
        };
        let undigits = |d: &[u32]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = undigits(&sum);
                let mut prod = vec![0u32; 2 * k as usize - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce with x^k = -(c_0 + ... + c_{k-1} x^{k-1})
                for deg in (k as usize..prod.len()).rev() {
                    let lead = prod[deg];
                    if lead == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &c) in modulus.iter().enumerate() {
                        let idx = deg - k as usize + i;
                        prod[idx] = (prod[idx] + p * p - lead * c % p) % p;
                    }
                }
                mul[a as usize * qs + b as usize] = undigits(&prod[..k as usize]);
            }
        }
        Ok(Self {
            p,
            k,
            q,
            tables: Some((add, mul)),
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            None => (a + b) % self.p,
            Some((add, _)) => add[(a * self.q + b) as usize],
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            None => ((a as u64 * b as u64) % self.p as u64) as u32,
            Some((_, mul)) => mul[(a * self.q + b) as usize],
        }
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn multiplicative_order(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        for ord in 1..self.q {
            if x == 1 {
                return Some(ord);
            }
            x = self.mul(x, a);
        }
        None
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q)
            .find(|&a| self.multiplicative_order(a) == Some(self.q - 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// The unique multiplicative subgroup of the given order, ascending.
    pub fn subgroup(&self, order: u32) -> Result<Vec<u32>> {
        if order == 0 || !(self.q - 1).is_multiple_of(order) {
            return Err(Error::Parameter(format!(
                "{} does not divide q - 1 = {}",
                order,
                self.q - 1
            )));
        }
        let g = self.pow(self.primitive_element(), ((self.q - 1) / order) as u64);
        let mut out: Vec<u32> = (0..order).map(|i| self.pow(g, i as u64)).collect();
        out.sort_unstable();
        Ok(out)
    }
}
