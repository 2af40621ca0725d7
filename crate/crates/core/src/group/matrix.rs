//! Square matrices over `Z/m` and monic polynomials over `F_p`.

use std::fmt;

use crate::numtheory::{factorize, gcd, inv_mod, mul_mod};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    dim: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl Matrix {
    /// Row-major entries, reduced modulo `modulus`.
    pub fn new(dim: usize, modulus: u64, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), dim * dim, "matrix data has wrong length");
        assert!(modulus >= 2, "modulus must be at least 2");
        let data = data.into_iter().map(|x| x % modulus).collect();
        Matrix { dim, modulus, data }
    }

    pub fn from_rows(modulus: u64, rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let m = modulus as i64;
        let data = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), dim, "matrix must be square");
                row.iter().map(move |&x| x.rem_euclid(m) as u64)
            })
            .collect();
        Matrix { dim, modulus, data }
    }

    pub fn identity(dim: usize, modulus: u64) -> Self {
        Self::scalar(dim, modulus, 1)
    }

    pub fn scalar(dim: usize, modulus: u64, c: u64) -> Self {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = c % modulus;
        }
        Matrix { dim, modulus, data }
    }

    pub fn zero(dim: usize, modulus: u64) -> Self {
        Matrix {
            dim,
            modulus,
            data: vec![0; dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.dim + j]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.dim, other.dim);
        debug_assert_eq!(self.modulus, other.modulus);
        let n = self.dim;
        let m = self.modulus as u128;
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u128;
                for k in 0..n {
                    acc += self.data[i * n + k] as u128 * other.data[k * n + j] as u128;
                }
                data[i * n + j] = (acc % m) as u64;
            }
        }
        Matrix {
            dim: n,
            modulus: self.modulus,
            data,
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a + b) % self.modulus)
            .collect();
        Matrix {
            dim: self.dim,
            modulus: self.modulus,
            data,
        }
    }

    pub fn scale(&self, c: u64) -> Matrix {
        let data = self
            .data
            .iter()
            .map(|&a| mul_mod(a, c, self.modulus))
            .collect();
        Matrix {
            dim: self.dim,
            modulus: self.modulus,
            data,
        }
    }

    pub fn minus_identity(&self) -> Matrix {
        let mut out = self.clone();
        for i in 0..self.dim {
            let d = &mut out.data[i * self.dim + i];
            *d = (*d + self.modulus - 1) % self.modulus;
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.dim, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exponent may be negative; requires invertibility in that case.
    pub fn pow_signed(&self, e: i64) -> Option<Matrix> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            Some(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// True when the multiplicative order is exactly `d`.
    pub fn has_order(&self, d: u64) -> bool {
        if d == 0 || !self.pow(d).is_identity() {
            return false;
        }
        factorize(d)
            .primes()
            .all(|l| !self.pow(d / l).is_identity())
    }

    /// Inverse by Gauss-Jordan elimination with unit pivots; `None` when
    /// the matrix is singular over `Z/m`.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim;
        let m = self.modulus;
        let mut a = self.data.clone();
        let mut inv = Matrix::identity(n, m).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| gcd(a[r * n + col], m) == 1)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let pinv = inv_mod(a[col * n + col], m)?;
            for j in 0..n {
                a[col * n + j] = mul_mod(a[col * n + j], pinv, m);
                inv[col * n + j] = mul_mod(inv[col * n + j], pinv, m);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col];
                if f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] + m - mul_mod(f, a[col * n + j], m)) % m;
                    inv[r * n + j] = (inv[r * n + j] + m - mul_mod(f, inv[col * n + j], m)) % m;
                }
            }
        }
        Some(Matrix {
            dim: n,
            modulus: m,
            data: inv,
        })
    }

    /// Determinant reduced modulo the prime `p` (which must divide the
    /// modulus).
    pub fn det_mod_prime(&self, p: u64) -> u64 {
        let n = self.dim;
        let mut a: Vec<u64> = self.data.iter().map(|&x| x % p).collect();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = (p - det) % p;
            }
            let pv = a[col * n + col];
            det = mul_mod(det, pv, p);
            let pinv = inv_mod(pv, p).expect("nonzero mod prime");
            for r in col + 1..n {
                let f = mul_mod(a[r * n + col], pinv, p);
                if f == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = (a[r * n + j] + p - mul_mod(f, a[col * n + j], p)) % p;
                }
            }
        }
        det
    }

    /// Same integer entries, read modulo `modulus` (a multiple or a divisor
    /// of the current one).
    pub fn with_modulus(&self, modulus: u64) -> Matrix {
        Matrix::new(self.dim, modulus, self.data.clone())
    }

    /// `self * v` for a column vector of residues.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                let acc: u128 = (0..n)
                    .map(|k| self.data[i * n + k] as u128 * v[k] as u128)
                    .sum();
                (acc % self.modulus as u128) as u64
            })
            .collect()
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[Matrix]) -> Matrix {
        let modulus = blocks[0].modulus;
        let n: usize = blocks.iter().map(|b| b.dim).sum();
        let mut out = Matrix::zero(n, modulus);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.dim {
                for j in 0..b.dim {
                    out.data[(off + i) * n + off + j] = b.get(i, j);
                }
            }
            off += b.dim;
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} mod {}", self.modulus)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

/// Basis of the right nullspace of a `rows x cols` matrix over `F_p`.
pub fn nullspace_mod_p(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..a.len()).find(|&r| a[r][col] % p != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = inv_mod(a[row][col] % p, p).expect("nonzero mod prime");
        for x in a[row].iter_mut() {
            *x = mul_mod(*x % p, inv, p);
        }
        for r in 0..a.len() {
            if r != row {
                let f = a[r][col] % p;
                if f != 0 {
                    for c in 0..cols {
                        a[r][c] = (a[r][c] % p + p - mul_mod(f, a[row][c], p)) % p;
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][fc] % p) % p;
            }
            v
        })
        .collect()
}

/// Monic polynomial over `F_p`, coefficients from the constant term up.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl Poly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The `index`-th monic polynomial of degree `deg` in companion scan
    /// order: base-`p` digits of `index` are the last column `a_0, a_1, ...`
    /// of the companion matrix, least significant first, and the polynomial
    /// is `x^deg - a_{deg-1} x^{deg-1} - ... - a_0`.
    pub fn from_scan_index(p: u64, deg: usize, mut index: u64) -> Poly {
        let mut coeffs = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            let a = index % p;
            index /= p;
            coeffs.push((p - a) % p);
        }
        coeffs.push(1);
        Poly { p, coeffs }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Poly {
            p: self.p,
            coeffs: c,
        }
    }

    pub fn companion(&self, modulus: u64) -> Matrix {
        let n = self.degree();
        let mut m = Matrix::zero(n, modulus);
        for i in 1..n {
            m.data[i * n + i - 1] = 1;
        }
        for i in 0..n {
            m.data[i * n + n - 1] = (self.p - self.coeffs[i]) % self.p;
        }
        m
    }

    /// `a * b mod self` for residues of degree below `self.degree()`.
    fn mulmod(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = self.degree();
        let p = self.p;
        let mut prod = vec![0u64; 2 * n];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
            }
        }
        for d in (n..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..n {
                let t = mul_mod(c, self.coeffs[i], p);
                prod[d - n + i] = (prod[d - n + i] + p - t) % p;
            }
        }
        prod.truncate(n);
        prod
    }

    /// `x^e mod self`.
    fn x_pow(&self, mut e: u64) -> Vec<u64> {
        let n = self.degree();
        let mut acc = vec![0u64; n];
        acc[0] = 1 % self.p;
        let mut base = vec![0u64; n];
        if n == 1 {
            base[0] = (self.p - self.coeffs[0]) % self.p;
        } else {
            base[1] = 1;
        }
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mulmod(&base, &base);
            }
        }
        acc
    }

    fn x_pow_is_one(&self, e: u64) -> bool {
        let v = self.x_pow(e);
        v[0] == 1 && v[1..].iter().all(|&c| c == 0)
    }

    /// True when `x` has order exactly `d` modulo this polynomial, which is
    /// the order of its companion matrix.
    pub fn x_has_order(&self, d: u64) -> bool {
        if self.coeffs[0] == 0 || !self.x_pow_is_one(d) {
            return false;
        }
        factorize(d).primes().all(|l| !self.x_pow_is_one(d / l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(25, &[&[2, 5], &[1, 3]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = Matrix::from_rows(25, &[&[5, 0], &[0, 1]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.det_mod_prime(5), 0);
    }

    #[test]
    fn determinant() {
        let m = Matrix::from_rows(7, &[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        assert_eq!(m.det_mod_prime(7), 1);
        let m = Matrix::from_rows(5, &[&[0, 1], &[1, 0]]);
        assert_eq!(m.det_mod_prime(5), 4);
    }

    #[test]
    fn companion_orders() {
        let f = Poly::from_scan_index(3, 2, 1 + 3);
        assert_eq!(f.coeffs, vec![2, 2, 1]);
        assert!(f.x_has_order(8));
        assert!(f.companion(3).has_order(8));
        let g = Poly::from_scan_index(5, 1, 2);
        assert!(g.x_has_order(4));
        assert_eq!(g.companion(5), Matrix::from_rows(5, &[&[2]]));
    }

    #[test]
    fn nullspace_dimension() {
        // x + y + z = 0 over F_5
        let basis = nullspace_mod_p(vec![vec![1, 1, 1]], 3, 5);
        assert_eq!(basis.len(), 2);
        for v in basis {
            assert_eq!(v.iter().sum::<u64>() % 5, 0);
        }
    }
}
