//! Searches for matrix realizations of Frobenius complements inside
//! `GL(r, p)`.

use std::collections::HashSet;

use super::action::{
    assemble, is_fixed_point_free, lift_action, prime_divisors, MatrixAction, Relation,
};
use super::matrix::{nullspace_mod_p, Matrix, Poly};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, pow_mod};
use crate::spec::{ComplementSpec, FrobeniusSpec};

/// Largest linear solution space (as a number of vectors) the searches will
/// enumerate.
const SPACE_LIMIT: u64 = 1 << 24;

fn check_field(r: usize, p: u64) -> Result<()> {
    if r == 0 {
        return Err(Error::domain("dimension must be positive"));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if r > 8 || (p as f64).powi(r as i32) > 1e9 {
        return Err(Error::Unsupported(format!(
            "GL({r},{p}) is too large to scan"
        )));
    }
    Ok(())
}

/// Monic polynomials of degree `deg` with non-zero constant term, in
/// companion scan order.
fn monic_units(p: u64, deg: usize) -> impl Iterator<Item = Poly> {
    let count = p.pow(deg as u32);
    (0..count)
        .filter(move |&i| deg == 0 || i % p != 0)
        .map(move |i| Poly::from_scan_index(p, deg, i))
}

/// Invariant-factor chains `f_1 | f_2 | ... | f_s` with total degree `r`:
/// one per conjugacy class of `GL(r, p)`. Single companions come first,
/// then longer chains; within a length, chains are ordered by the scan
/// order of their factors.
fn invariant_chains(r: usize, p: u64, keep: &dyn Fn(&Poly) -> bool) -> Vec<Vec<Poly>> {
    fn rec(
        p: u64,
        rem: usize,
        cur: &mut Vec<Poly>,
        out: &mut Vec<Vec<Poly>>,
        keep: &dyn Fn(&Poly) -> bool,
    ) {
        if rem == 0 {
            if keep(cur.last().expect("non-empty chain")) {
                out.push(cur.clone());
            }
            return;
        }
        match cur.last().cloned() {
            None => {
                for deg in 1..=rem {
                    for f in monic_units(p, deg) {
                        cur.push(f);
                        rec(p, rem - deg, cur, out, keep);
                        cur.pop();
                    }
                }
            }
            Some(prev) => {
                let pd = prev.degree();
                if pd > rem {
                    return;
                }
                for gdeg in 0..=(rem - pd) {
                    for g in monic_units(p, gdeg) {
                        let f = prev.mul(&g);
                        let d = f.degree();
                        cur.push(f);
                        rec(p, rem - d, cur, out, keep);
                        cur.pop();
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(p, r, &mut Vec::new(), &mut out, keep);
    out.sort_by_key(|c| c.len());
    out
}

/// One representative (rational canonical form) of each conjugacy class of
/// elements of order exactly `d` in `GL(r, p)`.
pub fn conjugacy_reps_of_order(d: u64, r: usize, p: u64) -> Result<Vec<Matrix>> {
    check_field(r, p)?;
    if d == 0 || d % p == 0 {
        return Err(Error::domain(format!(
            "order {d} must be positive and prime to {p}"
        )));
    }
    let keep = |f: &Poly| f.x_has_order(d);
    Ok(invariant_chains(r, p, &keep)
        .into_iter()
        .map(|chain| {
            let blocks: Vec<Matrix> = chain.iter().map(|f| f.companion(p)).collect();
            Matrix::block_diag(&blocks)
        })
        .collect())
}

/// First matrix of order exactly `d` in `GL(r, p)` in scan order, or `None`
/// when there is none.
pub fn element_of_order(d: u64, r: usize, p: u64) -> Result<Option<Matrix>> {
    if d % p == 0 {
        return Err(Error::domain(format!(
            "{p} divides the requested order {d}"
        )));
    }
    Ok(conjugacy_reps_of_order(d, r, p)?.into_iter().next())
}

/// Basis of `{X : X A = A^gamma X}` over `F_p`, `p` the modulus of `a`.
pub fn conjugator_space(a: &Matrix, gamma: u64) -> Vec<Matrix> {
    let p = a.modulus();
    let b = a.pow(gamma);
    let eqs = intertwiner_equations(a, &b);
    basis_matrices(eqs, a.dim(), p)
}

/// Rows of the linear system `X A - B X = 0` in the unknowns `X[i][j]`.
fn intertwiner_equations(a: &Matrix, b: &Matrix) -> Vec<Vec<u64>> {
    let r = a.dim();
    let p = a.modulus();
    let mut rows = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            let mut row = vec![0u64; r * r];
            for k in 0..r {
                row[i * r + k] = (row[i * r + k] + a.get(k, j)) % p;
                row[k * r + j] = (row[k * r + j] + p - b.get(i, k)) % p;
            }
            rows.push(row);
        }
    }
    rows
}

fn basis_matrices(eqs: Vec<Vec<u64>>, r: usize, p: u64) -> Vec<Matrix> {
    nullspace_mod_p(eqs, r * r, p)
        .into_iter()
        .map(|v| Matrix::new(r, p, v))
        .collect()
}

/// Every member of the span of `basis`, zero first.
fn span(basis: &[Matrix], r: usize, p: u64) -> Result<impl Iterator<Item = Matrix> + '_> {
    let size = p
        .checked_pow(basis.len() as u32)
        .filter(|&s| s <= SPACE_LIMIT)
        .ok_or_else(|| {
            Error::Unsupported(format!(
                "solution space {p}^{} is too large to enumerate",
                basis.len()
            ))
        })?;
    Ok((0..size).map(move |mut idx| {
        let mut acc = Matrix::zero(r, p);
        for b in basis {
            let c = idx % p;
            idx /= p;
            if c != 0 {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }))
}

fn cyclic_relations(n: u64) -> Vec<Relation> {
    vec![Relation::new(vec![(0, n as i64)], vec![])]
}

fn metacyclic_relations(alpha: u64, beta: u64, gamma: u64) -> Vec<Relation> {
    vec![
        Relation::new(vec![(0, alpha as i64)], vec![]),
        Relation::new(vec![(1, beta as i64)], vec![]),
        Relation::new(vec![(1, -1), (0, 1), (1, 1)], vec![(0, gamma as i64)]),
    ]
}

fn quaternion_relations(n: u32, m: u64) -> Vec<Relation> {
    let half = 1i64 << (n - 1);
    let mut rels = vec![
        Relation::new(vec![(0, half)], vec![]),
        Relation::new(vec![(1, 2)], vec![(0, half / 2)]),
        Relation::new(vec![(1, -1), (0, 1), (1, 1)], vec![(0, -1)]),
    ];
    if m > 1 {
        rels.push(Relation::new(vec![(2, m as i64)], vec![]));
        rels.push(Relation::new(vec![(0, 1), (2, 1)], vec![(2, 1), (0, 1)]));
        rels.push(Relation::new(vec![(1, 1), (2, 1)], vec![(2, 1), (1, 1)]));
    }
    rels
}

fn binary_polyhedral_relations(n: i64) -> Vec<Relation> {
    vec![
        Relation::new(vec![(0, 1), (1, 1), (0, 1), (1, 1)], vec![(0, 3)]),
        Relation::new(vec![(0, 3)], vec![(1, n)]),
    ]
}

/// Accepts a candidate when it verifies and, if requested, acts without
/// fixed points.
fn accept(action: MatrixAction, require_fpf: bool) -> Result<Option<MatrixAction>> {
    if action.verify().is_err() {
        return Ok(None);
    }
    if require_fpf && !is_fixed_point_free(&action)? {
        return Ok(None);
    }
    Ok(Some(action))
}

/// Searches `GL(r, p)` for a subgroup isomorphic to `spec`, optionally
/// acting fixed-point-freely on `F_p^r`. Returns `None` when the search is
/// exhausted.
///
/// Cyclic and metacyclic searches run over conjugacy representatives of
/// the first generator, solve the linear conjugation condition for the
/// second generator and enumerate the invertible solutions.
/// `SL(2,3)` and `SL(2,5)` are searched in `SL(2, p)` only.
pub fn realize_complement(
    spec: &ComplementSpec,
    r: usize,
    p: u64,
    require_fpf: bool,
) -> Result<Option<MatrixAction>> {
    check_field(r, p)?;
    if spec.order() % p == 0 {
        return Err(Error::domain(format!(
            "{p} divides |{spec}| = {}",
            spec.order()
        )));
    }
    match *spec {
        ComplementSpec::Cyclic(n) | ComplementSpec::Metacyclic(1, n, _) => {
            realize_cyclic(n, r, p, require_fpf)
        }
        ComplementSpec::Metacyclic(a, b, g) => realize_metacyclic(a, b, g, r, p, require_fpf),
        ComplementSpec::QuatCyclic(n, m) => realize_quat_cyclic(n, m, r, p, require_fpf),
        ComplementSpec::SL2_3 => realize_binary_polyhedral(3, r, p, require_fpf),
        ComplementSpec::SL2_5 => realize_binary_polyhedral(5, r, p, require_fpf),
    }
}

fn realize_cyclic(n: u64, r: usize, p: u64, require_fpf: bool) -> Result<Option<MatrixAction>> {
    for x in conjugacy_reps_of_order(n, r, p)? {
        let action = assemble(p, vec![("x", x)], vec![n], cyclic_relations(n), n);
        if let Some(a) = accept(action, require_fpf)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

fn powers(x: &Matrix, n: u64) -> HashSet<Matrix> {
    let mut out = HashSet::new();
    let mut acc = Matrix::identity(x.dim(), x.modulus());
    for _ in 0..n {
        out.insert(acc.clone());
        acc = acc.mul(x);
    }
    out
}

fn realize_metacyclic(
    alpha: u64,
    beta: u64,
    gamma: u64,
    r: usize,
    p: u64,
    require_fpf: bool,
) -> Result<Option<MatrixAction>> {
    let beta_primes = prime_divisors(beta);
    for x in conjugacy_reps_of_order(alpha, r, p)? {
        let basis = conjugator_space(&x, gamma);
        let xs = powers(&x, alpha);
        for cand in span(&basis, r, p)? {
            if cand.det_mod_prime(p) == 0 {
                continue;
            }
            let y = cand.inverse().expect("unit determinant");
            if !y.has_order(beta) {
                continue;
            }
            if beta_primes.iter().any(|&l| xs.contains(&y.pow(beta / l))) {
                continue;
            }
            let action = assemble(
                p,
                vec![("x", x.clone()), ("y", y)],
                vec![alpha, beta],
                metacyclic_relations(alpha, beta, gamma),
                alpha * beta,
            );
            if let Some(a) = accept(action, require_fpf)? {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

fn realize_quat_cyclic(
    n: u32,
    m: u64,
    r: usize,
    p: u64,
    require_fpf: bool,
) -> Result<Option<MatrixAction>> {
    let half = 1u64 << (n - 1);
    let order = (1u64 << n) * m;
    for x in conjugacy_reps_of_order(half, r, p)? {
        let basis = conjugator_space(&x, half - 1);
        let central = x.pow(half / 2);
        for cand in span(&basis, r, p)? {
            if cand.det_mod_prime(p) == 0 {
                continue;
            }
            let y = cand.inverse().expect("unit determinant");
            if y.mul(&y) != central {
                continue;
            }
            if m == 1 {
                let action = assemble(
                    p,
                    vec![("x", x.clone()), ("y", y)],
                    vec![half, 4],
                    quaternion_relations(n, 1),
                    order,
                );
                if let Some(a) = accept(action, require_fpf)? {
                    return Ok(Some(a));
                }
                continue;
            }
            let mut eqs = intertwiner_equations(&x, &x);
            eqs.extend(intertwiner_equations(&y, &y));
            let centralizer = basis_matrices(eqs, r, p);
            for zc in span(&centralizer, r, p)? {
                if zc.det_mod_prime(p) == 0 || !zc.has_order(m) {
                    continue;
                }
                let action = assemble(
                    p,
                    vec![("x", x.clone()), ("y", y.clone()), ("z", zc)],
                    vec![half, 4, m],
                    quaternion_relations(n, m),
                    order,
                );
                if let Some(a) = accept(action, require_fpf)? {
                    return Ok(Some(a));
                }
            }
        }
    }
    Ok(None)
}

/// Elements of `SL(2, p)` in lexicographic order of `(a, b, c)` for
/// `[[a, b], [c, d]]`.
fn special_linear_2(p: u64) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                if a != 0 {
                    let inv = pow_mod(a, p - 2, p);
                    let d = (1 + b * c % p) % p * inv % p;
                    out.push(Matrix::new(2, p, vec![a, b, c, d]));
                } else if b * c % p == p - 1 {
                    for d in 0..p {
                        out.push(Matrix::new(2, p, vec![a, b, c, d]));
                    }
                }
            }
        }
    }
    out
}

/// `<s, t | (st)^2 = s^3 = t^n>` for `n` in {3, 5}, of order 24 resp. 120.
/// The central involution must act as `-I`, so the search is over pairs
/// with `s^3 = t^n = (st)^2 = -I`. Restricting to `SL(2, p)` loses nothing:
/// a faithful two-dimensional representation with non-trivial determinant
/// can be twisted by a linear character into `SL(2, p)`.
fn realize_binary_polyhedral(
    n: u64,
    r: usize,
    p: u64,
    require_fpf: bool,
) -> Result<Option<MatrixAction>> {
    if r != 2 {
        return Err(Error::Unsupported(format!(
            "SL(2,{n}) is only searched in dimension 2, not {r}"
        )));
    }
    let order = if n == 3 { 24 } else { 120 };
    let minus = Matrix::scalar(2, p, p - 1);
    let sl = special_linear_2(p);
    let ss: Vec<&Matrix> = sl.iter().filter(|m| m.pow(3) == minus).collect();
    let ts: Vec<&Matrix> = sl.iter().filter(|m| m.pow(n) == minus).collect();
    for s in &ss {
        for t in &ts {
            let st = s.mul(t);
            if st.mul(&st) != minus {
                continue;
            }
            let action = assemble(
                p,
                vec![("s", (*s).clone()), ("t", (*t).clone())],
                vec![6, 2 * n],
                binary_polyhedral_relations(n as i64),
                order,
            );
            if let Some(a) = accept(action, require_fpf)? {
                return Ok(Some(a));
            }
        }
    }
    Ok(None)
}

/// A fixed-point-free action of the complement on the kernel of `spec`,
/// over `Z/p^k`.
pub fn realize_frobenius(spec: &FrobeniusSpec) -> Result<Option<MatrixAction>> {
    let kern = spec.kernel;
    match realize_complement(&spec.complement, kern.r as usize, kern.p, true)? {
        None => Ok(None),
        Some(a) => lift_action(&a, kern.k).map(Some),
    }
}
