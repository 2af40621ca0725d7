use std::collections::HashMap;

use super::{FiniteGroup, Matrix};
use crate::error::{Error, Result};

/// The finite group generated by a set of invertible matrices, with a full
/// multiplication table. Elements are indices into [`MatrixGroup::matrices`];
/// index 0 is the identity.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    matrices: Vec<Matrix>,
    index: HashMap<Matrix, u32>,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u64>,
}

impl MatrixGroup {
    /// Closure of `generators` under multiplication; fails when more than
    /// `limit` elements appear.
    pub fn generate(generators: &[Matrix], limit: u64) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::domain("at least one generator is required"))?;
        let id = Matrix::identity(first.dim(), first.modulus());
        let mut matrices = vec![id.clone()];
        let mut index = HashMap::from([(id, 0u32)]);
        let mut frontier = 0;
        while frontier < matrices.len() {
            let m = matrices[frontier].clone();
            frontier += 1;
            for g in generators {
                let prod = m.mul(g);
                if !index.contains_key(&prod) {
                    if matrices.len() as u64 >= limit {
                        return Err(Error::LimitExceeded {
                            what: "matrix group",
                            size: matrices.len() as u64 + 1,
                            limit,
                        });
                    }
                    index.insert(prod.clone(), matrices.len() as u32);
                    matrices.push(prod);
                }
            }
        }
        let n = matrices.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in matrices.iter().enumerate() {
            for (j, b) in matrices.iter().enumerate() {
                table[i * n + j] = index[&a.mul(b)];
            }
        }
        let mut inverses = vec![0u32; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| table[i * n + j] == 0)
                .expect("finite group");
            inverses[i] = j as u32;
        }
        let mut orders = vec![0u64; n];
        for (i, o) in orders.iter_mut().enumerate() {
            let mut x = i as u32;
            let mut d = 1;
            while x != 0 {
                x = table[x as usize * n + i];
                d += 1;
            }
            *o = d;
        }
        Ok(MatrixGroup {
            matrices,
            index,
            table,
            inverses,
            orders,
        })
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: u32) -> &Matrix {
        &self.matrices[i as usize]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<u32> {
        self.index.get(m).copied()
    }

    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn mul_index(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.matrices.len() + b as usize]
    }

    pub fn inverse_index(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn order_of(&self, a: u32) -> u64 {
        self.orders[a as usize]
    }
}

impl FiniteGroup for MatrixGroup {
    type Element = u32;

    fn identity(&self) -> u32 {
        0
    }

    fn multiply(&self, a: &u32, b: &u32) -> u32 {
        self.mul_index(*a, *b)
    }

    fn inverse(&self, a: &u32) -> u32 {
        self.inverse_index(*a)
    }

    fn order(&self) -> u64 {
        self.matrices.len() as u64
    }

    fn elements(&self) -> Vec<u32> {
        (0..self.matrices.len() as u32).collect()
    }

    fn element_order(&self, a: &u32) -> u64 {
        self.order_of(*a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_singer_cycle() {
        let c = Matrix::from_rows(3, &[&[0, 1], &[1, 1]]);
        let g = MatrixGroup::generate(&[c], 100).unwrap();
        assert_eq!(g.len(), 8);
        assert_eq!(g.order_of(1), 8);
        assert!(MatrixGroup::generate(&[Matrix::from_rows(3, &[&[0, 1], &[1, 1]])], 5).is_err());
    }
}
