use super::{is_fixed_point_free, FiniteGroup, MatrixAction, MatrixGroup};
use crate::error::{Error, Result};
use crate::spec::HomocyclicKernel;

/// `K x| H` for `K = (Z/p^k)^r` and a matrix group `H` acting on it.
/// Elements are `(v, h)`: `v` indexes a kernel vector by its base-`p^k`
/// digits, `h` indexes the complement. The product is
/// `(v, h)(w, g) = (v + h.w, hg)`.
#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    kernel: HomocyclicKernel,
    complement: MatrixGroup,
    /// `act[h * |K| + v]` is the index of `h.v`.
    act: Vec<u32>,
    kernel_order: u32,
}

impl SemidirectProduct {
    /// Rejects actions with fixed points and products larger than `limit`.
    pub fn new(kernel: HomocyclicKernel, action: &MatrixAction, limit: u64) -> Result<Self> {
        if action.modulus != kernel.exponent() || action.dim != kernel.r as usize {
            return Err(Error::domain(format!(
                "action over GL({}, Z/{}) does not match kernel {kernel}",
                action.dim, action.modulus
            )));
        }
        let order = kernel
            .order()
            .checked_mul(action.group_order)
            .filter(|&o| o <= limit)
            .ok_or(Error::LimitExceeded {
                what: "semidirect product",
                size: kernel.order().saturating_mul(action.group_order),
                limit,
            })?;
        if !is_fixed_point_free(action)? {
            return Err(Error::domain(
                "the action has fixed points, so the product is not Frobenius",
            ));
        }
        let complement = action.generate(action.group_order + 1)?;
        let nk = kernel.order();
        debug_assert_eq!(order, nk * complement.len() as u64);
        let mut act = Vec::with_capacity(order as usize);
        for m in complement.matrices() {
            for v in 0..nk {
                let image = m.apply(&digits(v, kernel.exponent(), kernel.r));
                act.push(undigits(&image, kernel.exponent()) as u32);
            }
        }
        Ok(SemidirectProduct {
            kernel,
            complement,
            act,
            kernel_order: nk as u32,
        })
    }

    pub fn kernel(&self) -> HomocyclicKernel {
        self.kernel
    }

    pub fn complement(&self) -> &MatrixGroup {
        &self.complement
    }

    /// Elements `(0, h)`.
    pub fn complement_elements(&self) -> Vec<(u32, u32)> {
        (0..self.complement.len() as u32).map(|h| (0, h)).collect()
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let q = self.kernel.exponent() as u32;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.kernel.r {
            out += ((a % q + b % q) % q) * place;
            a /= q;
            b /= q;
            place *= q;
        }
        out
    }

    fn negate(&self, a: u32) -> u32 {
        let q = self.kernel.exponent() as u32;
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.kernel.r {
            out += ((q - a % q) % q) * place;
            a /= q;
            place *= q;
        }
        out
    }

    /// Order of a kernel element: the largest order among its coordinates.
    fn kernel_element_order(&self, v: u32) -> u64 {
        let q = self.kernel.exponent();
        let p = self.kernel.p;
        digits(v as u64, q, self.kernel.r)
            .into_iter()
            .map(|c| {
                let mut o = q;
                let mut c = c;
                while c != 0 && c % p == 0 {
                    c /= p;
                    o /= p;
                }
                if c == 0 {
                    1
                } else {
                    o
                }
            })
            .max()
            .unwrap_or(1)
    }
}

fn digits(mut v: u64, q: u64, r: u32) -> Vec<u64> {
    (0..r)
        .map(|_| {
            let d = v % q;
            v /= q;
            d
        })
        .collect()
}

fn undigits(ds: &[u64], q: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * q + d)
}

impl FiniteGroup for SemidirectProduct {
    type Element = (u32, u32);

    fn identity(&self) -> (u32, u32) {
        (0, 0)
    }

    fn multiply(&self, a: &(u32, u32), b: &(u32, u32)) -> (u32, u32) {
        let hw = self.act[(a.1 * self.kernel_order + b.0) as usize];
        (self.add(a.0, hw), self.complement.mul_index(a.1, b.1))
    }

    fn inverse(&self, a: &(u32, u32)) -> (u32, u32) {
        let hi = self.complement.inverse_index(a.1);
        let v = self.act[(hi * self.kernel_order + self.negate(a.0)) as usize];
        (v, hi)
    }

    fn order(&self) -> u64 {
        self.kernel_order as u64 * self.complement.len() as u64
    }

    fn elements(&self) -> Vec<(u32, u32)> {
        (0..self.complement.len() as u32)
            .flat_map(|h| (0..self.kernel_order).map(move |v| (v, h)))
            .collect()
    }

    /// `(v, h)^d = (w, 1)` for `d` the order of `h`; the order is then `d`
    /// times the order of `w`.
    fn element_order(&self, a: &(u32, u32)) -> u64 {
        let d = self.complement.order_of(a.1);
        let w = self.power(a, d);
        debug_assert_eq!(w.1, 0);
        d * self.kernel_element_order(w.0)
    }
}
