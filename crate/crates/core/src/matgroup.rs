//! Explicit `SL_n(q)` and `PSL_n(q)` for `2 <= n <= 4`, `q <= 64`.
//!
//! Matrices are stored as row-major field codes and packed into a `u128`
//! with `ceil(log2 q)` bits per entry, the first entry most significant, so
//! integer order on packed codes is lexicographic order on entries. A `PSL`
//! element is represented by the member of its center coset with the
//! smallest packed code.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::ToPrimitive;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::{FieldElem, FieldSpec};
use crate::lietype::{params_for, Family, LieParams, OrderVariant};
use crate::setprod::ElemSet;

pub const MAX_DIM: usize = 4;

/// Default cap on the predicted group order for full enumeration.
pub const DEFAULT_ENUM_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Sl,
    Psl,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.to_ascii_lowercase().as_str() {
            "sl" | "universal" => Ok(Variant::Sl),
            "psl" | "simple" => Ok(Variant::Psl),
            other => Err(Error::Degenerate(format!("unknown variant {other:?}"))),
        }
    }
}

impl Variant {
    pub fn order_variant(self) -> OrderVariant {
        match self {
            Variant::Sl => OrderVariant::Universal,
            Variant::Psl => OrderVariant::Simple,
        }
    }
}

/// A square matrix over a small field. Only the leading `n*n` entries are
/// meaningful; the rest stay zero so derived equality and hashing work.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: u8,
    e: [u8; 16],
}

impl Mat {
    pub(crate) fn zero(n: usize) -> Mat {
        Mat {
            n: n as u8,
            e: [0; 16],
        }
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        FieldElem(self.at(i, j))
    }

    #[inline(always)]
    pub(crate) fn at(&self, i: usize, j: usize) -> u8 {
        self.e[i * self.n as usize + j]
    }

    #[inline(always)]
    pub(crate) fn set(&mut self, i: usize, j: usize, v: u8) {
        self.e[i * self.n as usize + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.at(i, j)).collect()).collect()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{self}]")
    }
}

/// Serialized as a list of rows of field codes.
impl Serialize for Mat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

/// `1,2;0,1`: rows separated by semicolons, entries by commas.
impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        for i in 0..n {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..n {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        Ok(())
    }
}

/// A permutation of `0..n`, read as the permutation matrix with a nonzero
/// entry at `(perm[j], j)` for every column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Degenerate(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Perm {
        Perm((0..n).collect())
    }

    /// The long element of `S_n`.
    pub fn reversal(n: usize) -> Perm {
        Perm((0..n).rev().collect())
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn sign(&self) -> i8 {
        let mut inversions = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupBase {
    /// Upper unitriangular matrices.
    U,
    /// Lower unitriangular matrices.
    V,
    /// Diagonal matrices.
    H,
    /// Upper triangular matrices, `B = UH`.
    B,
}

/// A canonical subgroup, optionally conjugated: `X^g = g^-1 X g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupId {
    pub base: SubgroupBase,
    pub conjugator: Option<Mat>,
}

impl SubgroupId {
    pub fn of(base: SubgroupBase) -> SubgroupId {
        SubgroupId {
            base,
            conjugator: None,
        }
    }

    pub fn conjugated(base: SubgroupBase, g: Mat) -> SubgroupId {
        SubgroupId {
            base,
            conjugator: Some(g),
        }
    }
}

#[derive(Clone)]
pub struct GroupSpec {
    field: Arc<FieldSpec>,
    n: usize,
    variant: Variant,
    bits: u32,
    /// Scalars `z` with `z^n = 1`; the center of `SL_n(q)`. Only used by `PSL`.
    scalars: Vec<u8>,
    params: LieParams,
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.variant == other.variant && self.field.q() == other.field.q()
    }
}

impl Eq for GroupSpec {}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl GroupSpec {
    pub fn new(field: FieldSpec, n: usize, variant: Variant) -> Result<GroupSpec> {
        if !(2..=MAX_DIM).contains(&n) {
            return Err(Error::UnsupportedDimension(n));
        }
        let q = field.q();
        let bits = 32 - (q - 1).leading_zeros();
        let scalars = field
            .elements()
            .filter(|&z| !z.is_zero() && field.pow(z, n as u64) == FieldElem::ONE)
            .map(|z| z.0)
            .collect();
        let params = params_for(Family::A, n as u32 - 1)?;
        Ok(GroupSpec {
            field: Arc::new(field),
            n,
            variant,
            bits,
            scalars,
            params,
        })
    }

    pub fn from_order(q: u64, n: usize, variant: Variant) -> Result<GroupSpec> {
        GroupSpec::new(FieldSpec::of_order(q)?, n, variant)
    }

    pub fn sl(q: u64, n: usize) -> Result<GroupSpec> {
        GroupSpec::from_order(q, n, Variant::Sl)
    }

    pub fn psl(q: u64, n: usize) -> Result<GroupSpec> {
        GroupSpec::from_order(q, n, Variant::Psl)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q() as u64
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> u32 {
        self.n as u32 - 1
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn bits_per_entry(&self) -> u32 {
        self.bits
    }

    pub fn name(&self) -> String {
        let v = match self.variant {
            Variant::Sl => "SL",
            Variant::Psl => "PSL",
        };
        format!("{v}_{}({})", self.n, self.q())
    }

    /// The family-A table row for rank `n - 1`.
    pub fn params(&self) -> &LieParams {
        &self.params
    }

    /// `gcd(n, q - 1)`, the order of the center of `SL_n(q)`.
    pub fn center_order(&self) -> u64 {
        self.scalars.len() as u64
    }

    /// True when the variant in use has trivial center, so the group is the
    /// simple quotient (up to the usual tiny exceptions).
    pub fn is_centerless(&self) -> bool {
        self.variant == Variant::Psl || self.center_order() == 1
    }

    fn breakdown(&self) -> crate::lietype::OrderBreakdown {
        self.params
            .order_exact(self.q(), self.variant.order_variant())
            .expect("family A with a prime power q always has an exact order")
    }

    /// Predicted group order from the closed-form formula.
    pub fn order(&self) -> u128 {
        self.breakdown()
            .group_order
            .to_u128()
            .expect("orders of n <= 4, q <= 64 fit in u128")
    }

    pub fn sylow_order(&self) -> u128 {
        self.breakdown().sylow_order.to_u128().unwrap()
    }

    pub fn torus_order(&self) -> u128 {
        self.breakdown().torus_order.to_u128().unwrap()
    }

    pub fn borel_order(&self) -> u128 {
        self.breakdown().borel_order.to_u128().unwrap()
    }

    pub fn weyl_order(&self) -> u64 {
        (1..=self.n as u64).product()
    }

    pub fn identity(&self) -> Mat {
        let mut m = Mat::zero(self.n);
        for i in 0..self.n {
            m.set(i, i, 1);
        }
        m
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: &Mat, b: &Mat) -> Mat {
        let n = self.n;
        let f = &*self.field;
        let mut c = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u8;
                for k in 0..n {
                    acc = f.add_code(acc, f.mul_code(a.at(i, k), b.at(k, j)));
                }
                c.set(i, j, acc);
            }
        }
        c
    }

    pub fn mul(&self, a: &Mat, b: &Mat) -> Mat {
        self.canonicalize(&self.mul_raw(a, b))
    }

    /// Inverse by Gauss-Jordan elimination. Panics on a singular matrix.
    pub fn inv(&self, a: &Mat) -> Mat {
        self.canonicalize(&self.inv_raw(a).expect("group elements are invertible"))
    }

    pub(crate) fn inv_raw(&self, a: &Mat) -> Option<Mat> {
        let n = self.n;
        let f = &*self.field;
        let mut m = *a;
        let mut r = self.identity();
        for col in 0..n {
            let piv = (col..n).find(|&i| m.at(i, col) != 0)?;
            if piv != col {
                for j in 0..n {
                    let (x, y) = (m.at(piv, j), m.at(col, j));
                    m.set(piv, j, y);
                    m.set(col, j, x);
                    let (x, y) = (r.at(piv, j), r.at(col, j));
                    r.set(piv, j, y);
                    r.set(col, j, x);
                }
            }
            let s = f.inv_code(m.at(col, col));
            for j in 0..n {
                m.set(col, j, f.mul_code(s, m.at(col, j)));
                r.set(col, j, f.mul_code(s, r.at(col, j)));
            }
            for i in 0..n {
                let c = m.at(i, col);
                if i == col || c == 0 {
                    continue;
                }
                let nc = f.neg_code(c);
                for j in 0..n {
                    m.set(i, j, f.add_code(m.at(i, j), f.mul_code(nc, m.at(col, j))));
                    r.set(i, j, f.add_code(r.at(i, j), f.mul_code(nc, r.at(col, j))));
                }
            }
        }
        Some(r)
    }

    pub fn det(&self, a: &Mat) -> FieldElem {
        FieldElem(det_codes(&self.field, a, self.n))
    }

    /// Determinant of the leading `k x k` block taken from the given rows
    /// and columns.
    pub(crate) fn minor(&self, a: &Mat, rows: &[usize], cols: &[usize]) -> u8 {
        let k = rows.len();
        let mut m = Mat::zero(k);
        for (ii, &i) in rows.iter().enumerate() {
            for (jj, &j) in cols.iter().enumerate() {
                m.set(ii, jj, a.at(i, j));
            }
        }
        det_codes(&self.field, &m, k)
    }

    #[inline]
    pub fn pack(&self, m: &Mat) -> u128 {
        let nn = self.n * self.n;
        let mut code = 0u128;
        for idx in 0..nn {
            code = (code << self.bits) | m.e[idx] as u128;
        }
        code
    }

    #[inline]
    pub fn unpack(&self, code: u128) -> Mat {
        let nn = self.n * self.n;
        let mask = (1u128 << self.bits) - 1;
        let mut m = Mat::zero(self.n);
        for idx in 0..nn {
            m.e[idx] = ((code >> ((nn - 1 - idx) as u32 * self.bits)) & mask) as u8;
        }
        m
    }

    pub(crate) fn scale(&self, m: &Mat, s: u8) -> Mat {
        let mut out = *m;
        for x in out.e.iter_mut().take(self.n * self.n) {
            *x = self.field.mul_code(s, *x);
        }
        out
    }

    /// Packed code of the canonical representative of `m`.
    #[inline]
    pub fn canonical_pack(&self, m: &Mat) -> u128 {
        match self.variant {
            Variant::Sl => self.pack(m),
            Variant::Psl => self
                .scalars
                .iter()
                .map(|&z| self.pack(&self.scale(m, z)))
                .min()
                .unwrap_or_else(|| self.pack(m)),
        }
    }

    /// Identity for `SL`; for `PSL` the scalar multiple `z m`, `z^n = 1`,
    /// with the smallest packed code.
    pub fn canonicalize(&self, m: &Mat) -> Mat {
        match self.variant {
            Variant::Sl => *m,
            Variant::Psl => self.unpack(self.canonical_pack(m)),
        }
    }

    /// The center coset of `m` in `SL_n(q)`.
    pub fn center_orbit(&self, m: &Mat) -> Vec<Mat> {
        let mut out: Vec<Mat> = self.scalars.iter().map(|&z| self.scale(m, z)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// `g^-1 x g`.
    pub fn conjugate(&self, x: &Mat, g: &Mat) -> Mat {
        let gi = self.inv_raw(g).expect("invertible conjugator");
        self.canonicalize(&self.mul_raw(&self.mul_raw(&gi, x), g))
    }

    /// Builds a group element from integer rows. Values are read modulo the
    /// characteristic when negative; nonnegative values are field codes.
    pub fn from_rows(&self, rows: &[Vec<i64>]) -> Result<Mat> {
        let n = self.n;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::MatrixParse(format!("expected a {n}x{n} matrix")));
        }
        let mut m = Mat::zero(n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let code = if v < 0 {
                    self.field.from_int(v).0
                } else if (v as u64) < self.q() {
                    v as u8
                } else {
                    return Err(Error::MatrixParse(format!(
                        "entry {v} is not a code of GF({})",
                        self.q()
                    )));
                };
                m.set(i, j, code);
            }
        }
        if self.det(&m) != FieldElem::ONE {
            return Err(Error::NotSpecialLinear);
        }
        Ok(self.canonicalize(&m))
    }

    /// Parses the `1,2;0,1` matrix format.
    pub fn parse_mat(&self, s: &str) -> Result<Mat> {
        let rows = s
            .split(';')
            .map(|r| {
                r.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<i64>()
                            .map_err(|e| Error::MatrixParse(format!("{x:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_rows(&rows)
    }

    /// Signed permutation matrix representing `perm` in `N`: entry 1 at
    /// `(perm[j], j)`, with the entry in row 0 negated for odd permutations
    /// so the determinant is 1.
    pub fn weyl_rep(&self, perm: &Perm) -> Mat {
        self.canonicalize(&self.weyl_rep_raw(perm))
    }

    /// [`weyl_rep`](Self::weyl_rep) as an `SL` matrix, never canonicalized.
    pub(crate) fn weyl_rep_raw(&self, perm: &Perm) -> Mat {
        assert_eq!(perm.len(), self.n, "permutation size must match the dimension");
        let mut m = Mat::zero(self.n);
        for (j, &i) in perm.images().iter().enumerate() {
            m.set(i, j, 1);
        }
        if perm.sign() < 0 {
            let j = perm.images().iter().position(|&i| i == 0).unwrap();
            m.set(0, j, self.field.neg_code(1));
        }
        m
    }

    /// Uniform element: uniform matrix, rejected if singular, first row
    /// scaled by `det^-1`.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Mat {
        self.random_element_counted(rng).0
    }

    /// As [`random_element`](Self::random_element), also returning the
    /// number of matrices drawn.
    pub fn random_element_counted<R: Rng + ?Sized>(&self, rng: &mut R) -> (Mat, u32) {
        let q = self.field.q() as u8;
        let mut draws = 0;
        loop {
            draws += 1;
            let mut m = Mat::zero(self.n);
            for x in m.e.iter_mut().take(self.n * self.n) {
                *x = rng.gen_range(0..q);
            }
            let d = det_codes(&self.field, &m, self.n);
            if d == 0 {
                continue;
            }
            let s = self.field.inv_code(d);
            for j in 0..self.n {
                m.set(0, j, self.field.mul_code(s, m.at(0, j)));
            }
            return (self.canonicalize(&m), draws);
        }
    }

    pub fn is_upper_unitriangular(&self, m: &Mat) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| m.at(i, j) == u8::from(i == j)))
    }

    pub fn is_diagonal(&self, m: &Mat) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || m.at(i, j) == 0))
    }

    fn unitriangular(&self, lower: bool) -> Vec<Mat> {
        let q = self.field.q() as u64;
        let slots: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .map(|(i, j)| if lower { (j, i) } else { (i, j) })
            .collect();
        let count = q.pow(slots.len() as u32);
        (0..count)
            .map(|mut idx| {
                let mut m = self.identity();
                for &(i, j) in &slots {
                    m.set(i, j, (idx % q) as u8);
                    idx /= q;
                }
                m
            })
            .collect()
    }

    fn diagonal(&self) -> Vec<Mat> {
        let units: Vec<u8> = (1..self.field.q() as u8).collect();
        let free = self.n - 1;
        let count = units.len().pow(free as u32);
        (0..count)
            .map(|mut idx| {
                let mut m = Mat::zero(self.n);
                let mut prod = 1u8;
                for i in 0..free {
                    let x = units[idx % units.len()];
                    idx /= units.len();
                    m.set(i, i, x);
                    prod = self.field.mul_code(prod, x);
                }
                m.set(free, free, self.field.inv_code(prod));
                m
            })
            .collect()
    }

    pub fn enumerate_subgroup(&self, id: &SubgroupId) -> ElemSet {
        let raw: Vec<Mat> = match id.base {
            SubgroupBase::U => self.unitriangular(false),
            SubgroupBase::V => self.unitriangular(true),
            SubgroupBase::H => self.diagonal(),
            SubgroupBase::B => {
                let hs = self.diagonal();
                self.unitriangular(false)
                    .iter()
                    .flat_map(|u| hs.iter().map(move |h| (u, h)))
                    .map(|(u, h)| self.mul_raw(u, h))
                    .collect()
            }
        };
        let set = ElemSet::from_mats(self, raw.iter());
        match &id.conjugator {
            None => set,
            Some(g) => set.conjugate(g),
        }
    }

    pub fn enumerate_group(&self, cap: u128) -> Result<ElemSet> {
        self.enumerate_group_with(cap, Exec::default())
    }

    /// Every element, found by choosing the first `n - 1` rows freely and
    /// solving the (linear) equation `det = 1` for the last row.
    pub fn enumerate_group_with(&self, cap: u128, exec: Exec) -> Result<ElemSet> {
        let predicted = self.order();
        if predicted > cap {
            return Err(Error::EnumerationCap { predicted, cap });
        }
        let n = self.n;
        let q = self.field.q() as usize;
        let f = &*self.field;
        let first_rows = q.pow(n as u32);
        let middle_rows = q.pow((n * (n - 2)) as u32);
        let free_last = q.pow(n as u32 - 1);

        let chunks: Vec<Vec<u128>> = exec.map(first_rows, |first| {
            let mut out = Vec::new();
            let mut m = Mat::zero(n);
            for middle in 0..middle_rows {
                let mut idx = first;
                for j in 0..n {
                    m.set(0, j, (idx % q) as u8);
                    idx /= q;
                }
                let mut idx = middle;
                for i in 1..n - 1 {
                    for j in 0..n {
                        m.set(i, j, (idx % q) as u8);
                        idx /= q;
                    }
                }
                // det is linear in the last row: det = sum_j x_j * cof_j
                let mut cof = [0u8; MAX_DIM];
                for (j, c) in cof.iter_mut().enumerate().take(n) {
                    for jj in 0..n {
                        m.set(n - 1, jj, u8::from(jj == j));
                    }
                    *c = det_codes(f, &m, n);
                }
                let Some(pivot) = (0..n).find(|&j| cof[j] != 0) else {
                    continue;
                };
                let pivot_inv = f.inv_code(cof[pivot]);
                for assign in 0..free_last {
                    let mut idx = assign;
                    let mut partial = 0u8;
                    for j in (0..n).filter(|&j| j != pivot) {
                        let x = (idx % q) as u8;
                        idx /= q;
                        m.set(n - 1, j, x);
                        partial = f.add_code(partial, f.mul_code(x, cof[j]));
                    }
                    let rhs = f.add_code(1, f.neg_code(partial));
                    m.set(n - 1, pivot, f.mul_code(rhs, pivot_inv));
                    let code = self.pack(&m);
                    if self.variant == Variant::Sl || self.canonical_pack(&m) == code {
                        out.push(code);
                    }
                }
            }
            out
        });
        Ok(ElemSet::from_packed(self, chunks.into_iter().flatten()))
    }
}

/// Determinant by Gaussian elimination on a copy.
pub(crate) fn det_codes(f: &FieldSpec, a: &Mat, n: usize) -> u8 {
    let mut m = *a;
    m.n = n as u8;
    let mut det = 1u8;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&i| m.at(i, col) != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..n {
                let (x, y) = (m.at(piv, j), m.at(col, j));
                m.set(piv, j, y);
                m.set(col, j, x);
            }
            det = f.neg_code(det);
        }
        let p = m.at(col, col);
        det = f.mul_code(det, p);
        let pinv = f.inv_code(p);
        for i in col + 1..n {
            let c = m.at(i, col);
            if c == 0 {
                continue;
            }
            let factor = f.neg_code(f.mul_code(c, pinv));
            for j in col..n {
                m.set(i, j, f.add_code(m.at(i, j), f.mul_code(factor, m.at(col, j))));
            }
        }
    }
    det
}
