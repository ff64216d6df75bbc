//! Per-conductor data for Q(ζ_n): the cyclotomic polynomial, reductions of
//! ζ_n^k onto the power basis, and projections onto maximal subfields.
//!
//! Everything here is computed once per conductor and memoized behind a
//! read-mostly lock, so concurrent callers may race to build the same entry;
//! the first insert wins and later builds are dropped.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::rational::Rational;

/// Integer coefficients of Φ_n, lowest degree first. Φ_n is monic.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }

    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let divisor = cyclotomic_polynomial(d);
        poly = exact_monic_division(&poly, &divisor);
    }
    let poly = Arc::new(poly);
    cache.write().unwrap().entry(n).or_insert_with(|| poly.clone()).clone()
}

fn exact_monic_division(dividend: &[i64], divisor: &[i64]) -> Vec<i64> {
    let dd = divisor.len() - 1;
    let mut rem = dividend.to_vec();
    let qlen = dividend.len() - dd;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &b) in divisor.iter().enumerate() {
                rem[i + j] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "division by Φ_d left a remainder");
    quot
}

pub fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut upper: Vec<u32> = out.iter().rev().map(|d| n / d).filter(|&q| q * q != n).collect();
    out.append(&mut upper);
    out
}

pub fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn totient(n: u32) -> u32 {
    prime_divisors(n).into_iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// Sparse integer vector on the power basis.
type Sparse = Vec<(usize, i64)>;

pub(crate) struct Field {
    pub n: u32,
    pub phi: usize,
    /// `powers[k]` is ζ_n^k (0 ≤ k < n) on the power basis.
    powers: Vec<Sparse>,
    /// One entry per prime p | n, for the subfield Q(ζ_{n/p}).
    pub subfields: Vec<Subfield>,
}

pub(crate) struct Subfield {
    pub conductor: u32,
    /// Images of ζ_d^j (0 ≤ j < φ(d)) in the power basis of the parent.
    embedding: Vec<Sparse>,
    /// Parent coordinates that determine the preimage.
    pivot_rows: Vec<usize>,
    /// Inverse of the embedding restricted to `pivot_rows`, row-major.
    pivot_inverse: Vec<Vec<Rational>>,
}

pub(crate) fn field(n: u32) -> Arc<Field> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(f) = cache.read().unwrap().get(&n) {
        return f.clone();
    }
    let built = Arc::new(Field::build(n));
    cache.write().unwrap().entry(n).or_insert_with(|| built.clone()).clone()
}

impl Field {
    fn build(n: u32) -> Field {
        let phi_poly = cyclotomic_polynomial(n);
        let phi = phi_poly.len() - 1;
        let mut powers: Vec<Sparse> = Vec::with_capacity(n as usize);
        let mut current = vec![0i64; phi];
        current[0] = 1;
        for _ in 0..n {
            powers.push(to_sparse(&current));
            // multiply by x and fold the x^phi term back using Φ_n
            let top = current[phi - 1];
            for i in (1..phi).rev() {
                current[i] = current[i - 1];
            }
            current[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    current[i] -= top * phi_poly[i];
                }
            }
        }

        let mut field = Field { n, phi, powers, subfields: Vec::new() };
        let subfields = prime_divisors(n).into_iter().map(|p| field.subfield(n / p, p)).collect();
        field.subfields = subfields;
        field
    }

    fn subfield(&self, d: u32, p: u32) -> Subfield {
        let phi_d = totient(d) as usize;
        let embedding: Vec<Sparse> = (0..phi_d).map(|j| self.powers[j * p as usize].clone()).collect();

        // Pick φ(d) independent parent coordinates by row-reducing the
        // transposed embedding matrix.
        let mut rows: Vec<Vec<Rational>> = embedding
            .iter()
            .map(|col| {
                let mut dense = vec![Rational::zero(); self.phi];
                for &(i, c) in col {
                    dense[i] = Rational::from_integer(c);
                }
                dense
            })
            .collect();
        let mut pivots = Vec::with_capacity(phi_d);
        let mut r = 0;
        for c in 0..self.phi {
            if r == phi_d {
                break;
            }
            let Some(k) = (r..phi_d).find(|&k| !rows[k][c].is_zero()) else {
                continue;
            };
            rows.swap(r, k);
            let inv = rows[r][c].recip().unwrap();
            let pivot_row: Vec<Rational> = rows[r].iter().map(|x| x * &inv).collect();
            for (k, row) in rows.iter_mut().enumerate() {
                if k != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        assert_eq!(pivots.len(), phi_d, "subfield embedding is not injective");

        // Square block E[pivots, :] and its inverse via Gauss-Jordan.
        let mut aug: Vec<Vec<Rational>> = pivots
            .iter()
            .map(|&row| {
                let mut v: Vec<Rational> = embedding
                    .iter()
                    .map(|col| {
                        col.iter()
                            .find(|(i, _)| *i == row)
                            .map(|&(_, c)| Rational::from_integer(c))
                            .unwrap_or_else(Rational::zero)
                    })
                    .collect();
                v.extend((0..phi_d).map(|_| Rational::zero()));
                v
            })
            .collect();
        for (i, row) in aug.iter_mut().enumerate() {
            row[phi_d + i] = Rational::one();
        }
        for c in 0..phi_d {
            let k = (c..phi_d).find(|&k| !aug[k][c].is_zero()).expect("singular pivot block");
            aug.swap(c, k);
            let inv = aug[c][c].recip().unwrap();
            let prow: Vec<Rational> = aug[c].iter().map(|x| x * &inv).collect();
            for (k, row) in aug.iter_mut().enumerate() {
                if k != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&prow) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            aug[c] = prow;
        }
        let pivot_inverse = aug.into_iter().map(|row| row[phi_d..].to_vec()).collect();

        Subfield { conductor: d, embedding, pivot_rows: pivots, pivot_inverse }
    }

    /// Reduce a vector indexed by exponents mod n onto the power basis.
    pub fn reduce_exponents(&self, by_exponent: &[Rational]) -> Vec<Rational> {
        debug_assert_eq!(by_exponent.len(), self.n as usize);
        let mut out = vec![Rational::zero(); self.phi];
        for (k, c) in by_exponent.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, m) in &self.powers[k] {
                if m == 1 {
                    out[i] += c;
                } else {
                    out[i] += &(c * &Rational::from_integer(m));
                }
            }
        }
        out
    }

    /// [`Field::reduce_exponents`] for integer coefficients.
    pub fn reduce_integer_exponents(&self, by_exponent: &[BigInt]) -> Vec<BigInt> {
        debug_assert_eq!(by_exponent.len(), self.n as usize);
        let mut out = vec![BigInt::zero(); self.phi];
        for (k, c) in by_exponent.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, m) in &self.powers[k] {
                out[i] += c * m;
            }
        }
        out
    }

    pub fn power(&self, k: usize) -> &[(usize, i64)] {
        &self.powers[k % self.n as usize]
    }
}

impl Subfield {
    /// Coordinates in Q(ζ_d) if `coeffs` lies in that subfield.
    pub fn project(&self, coeffs: &[Rational]) -> Option<Vec<Rational>> {
        let image: Vec<Rational> = self
            .pivot_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.pivot_rows)
                    .filter(|(a, &r)| !a.is_zero() && !coeffs[r].is_zero())
                    .fold(Rational::zero(), |acc, (a, &r)| acc + a * &coeffs[r])
            })
            .collect();
        let mut back = vec![Rational::zero(); coeffs.len()];
        for (col, y) in self.embedding.iter().zip(&image) {
            if y.is_zero() {
                continue;
            }
            for &(i, c) in col {
                back[i] += &(y * &Rational::from_integer(c));
            }
        }
        (back == coeffs).then_some(image)
    }
}

fn to_sparse(v: &[i64]) -> Sparse {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
}

pub fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let p = cyclotomic_polynomial(105);
        assert_eq!(p.len() - 1, 48);
        assert!(p.contains(&-2));
    }

    #[test]
    fn totients() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(totient(i as u32 + 1), e);
        }
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n) as usize);
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
        assert_eq!(prime_divisors(60), vec![2, 3, 5]);
        assert_eq!(prime_divisors(1), Vec::<u32>::new());
    }
}
