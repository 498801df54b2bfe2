use std::collections::BTreeMap;

use super::GaussRat;

/// A sparse vector over the Gaussian rationals; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    dim: usize,
    entries: BTreeMap<usize, GaussRat>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec { dim, entries: BTreeMap::new() }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = SparseVec::zero(dim);
        v.set(index, GaussRat::one());
        v
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, GaussRat)>) -> Self {
        let mut v = SparseVec::zero(dim);
        for (i, c) in entries {
            v.add_at(i, &c);
        }
        v
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&GaussRat> {
        self.entries.get(&index)
    }

    pub fn set(&mut self, index: usize, value: GaussRat) {
        assert!(index < self.dim, "index {index} out of range for dimension {}", self.dim);
        if value.is_zero() {
            self.entries.remove(&index);
        } else {
            self.entries.insert(index, value);
        }
    }

    pub fn add_at(&mut self, index: usize, value: &GaussRat) {
        assert!(index < self.dim, "index {index} out of range for dimension {}", self.dim);
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry(index).or_default();
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&index);
        }
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, &GaussRat)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Largest index with a nonzero entry; this is the pivot column.
    pub fn leading(&self) -> Option<usize> {
        self.entries.keys().next_back().copied()
    }

    pub fn scale(&mut self, k: &GaussRat) {
        if k.is_zero() {
            self.entries.clear();
            return;
        }
        for c in self.entries.values_mut() {
            *c = &*c * k;
        }
    }

    /// `self -= k · other`
    pub fn sub_scaled(&mut self, k: &GaussRat, other: &SparseVec) {
        for (i, c) in other.iter() {
            let d = k * c;
            self.add_at(i, &-d);
        }
    }
}

/// Incremental exact row reduction. Pivots sit at each row's largest index, rows are
/// normalized to a unit pivot and every pivot column is cleared in all other rows.
#[derive(Clone, Debug, Default)]
pub struct RowEchelon {
    dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl RowEchelon {
    pub fn new(dim: usize) -> Self {
        RowEchelon { dim, rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        let mut cursor = match r.leading() {
            Some(c) => c,
            None => return r,
        };
        loop {
            let next = r.entries.range(..=cursor).next_back().map(|(i, c)| (*i, c.clone()));
            let Some((col, coeff)) = next else { break };
            if let Some(row) = self.rows.get(&col) {
                r.sub_scaled(&coeff, row);
            }
            if col == 0 {
                break;
            }
            cursor = col - 1;
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        self.insert_pivot(v).is_some()
    }

    /// Adds `v` to the span and returns the new pivot column, if any.
    pub fn insert_pivot(&mut self, v: &SparseVec) -> Option<usize> {
        assert_eq!(v.dim(), self.dim, "dimension mismatch");
        let mut r = self.reduce(v);
        let p = r.leading()?;
        let inv = r.get(p).and_then(GaussRat::inv).expect("nonzero pivot");
        r.scale(&inv);
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(p).cloned() {
                row.sub_scaled(&c, &r);
            }
        }
        self.rows.insert(p, r);
        Some(p)
    }
}

/// Exact reduced row-echelon basis of the span of `rows`, ordered by pivot.
pub fn row_reduce(rows: &[SparseVec]) -> (usize, Vec<SparseVec>) {
    let dim = rows.first().map(SparseVec::dim).unwrap_or(0);
    let mut ech = RowEchelon::new(dim);
    for r in rows {
        ech.insert(r);
    }
    let basis: Vec<SparseVec> = ech.rows().cloned().collect();
    (basis.len(), basis)
}

/// Whether `v` reduces to zero against an already row-reduced `basis`.
pub fn membership(v: &SparseVec, basis: &[SparseVec]) -> bool {
    let mut ech = RowEchelon::new(v.dim());
    for b in basis {
        if let Some(p) = b.leading() {
            ech.rows.insert(p, b.clone());
        }
    }
    ech.contains(v)
}
