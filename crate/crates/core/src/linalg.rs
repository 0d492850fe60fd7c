//! Exact sparse Gaussian elimination.
//!
//! Vectors are [`LinComb`]s over an ordered key set; the pivot of a row is its
//! least key. Rows can optionally carry the combination of inserted inputs they
//! represent, which is what kernels, dependency vectors and coordinate
//! solves are read from.

use std::collections::BTreeMap;

use crate::linear::LinComb;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
struct Row<K: Ord> {
    vec: LinComb<K>,
    track: LinComb<usize>,
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The vector enlarged the span.
    Independent,
    /// The vector lay in the span; the combination `c` satisfies
    /// `sum_i c_i * input_i = 0` and has coefficient 1 on the new input.
    Dependent(LinComb<usize>),
}

/// Row-echelon form of a growing family of vectors.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord> {
    rows: BTreeMap<K, Row<K>>,
    inserted: usize,
    tracking: bool,
}

impl<K: Ord + Clone> Echelon<K> {
    /// Echelon that only tracks the span (cheaper).
    pub fn new() -> Self {
        Self {
            rows: BTreeMap::new(),
            inserted: 0,
            tracking: false,
        }
    }

    /// Echelon that remembers how each row combines the inputs.
    pub fn tracked() -> Self {
        Self {
            rows: BTreeMap::new(),
            inserted: 0,
            tracking: true,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    fn reduce(&self, mut vec: LinComb<K>, mut track: LinComb<usize>, sign: i64) -> (LinComb<K>, LinComb<usize>) {
        let sign = Scalar::from(sign);
        // Only the leading key is eliminated; the remainder stays in echelon order.
        let mut residual = LinComb::new();
        loop {
            let Some((k, c)) = vec.first().map(|(k, c)| (k.clone(), c.clone())) else {
                break;
            };
            match self.rows.get(&k) {
                Some(row) => {
                    let f = -&c;
                    vec.add_scaled(&row.vec, &f);
                    if self.tracking {
                        track.add_scaled(&row.track, &(&f * &sign));
                    }
                }
                None => {
                    // Free leading key: the residual vector starts here.
                    residual = vec;
                    break;
                }
            }
        }
        (residual, track)
    }

    /// Inserts a vector, returning whether it was independent of the
    /// previously inserted ones.
    pub fn insert(&mut self, vec: LinComb<K>) -> Insert {
        let idx = self.inserted;
        self.inserted += 1;
        let track = if self.tracking {
            LinComb::basis(idx)
        } else {
            LinComb::new()
        };
        let (res, track) = self.reduce(vec, track, 1);
        match res.first().map(|(k, c)| (k.clone(), c.clone())) {
            None => Insert::Dependent(track),
            Some((k, c)) => {
                let inv = c.recip().expect("nonzero pivot");
                let row = Row {
                    vec: res.scaled(&inv),
                    track: track.scaled(&inv),
                };
                self.rows.insert(k, row);
                Insert::Independent
            }
        }
    }

    /// Whether `vec` lies in the current span.
    pub fn contains(&self, vec: &LinComb<K>) -> bool {
        self.reduce(vec.clone(), LinComb::new(), 1).0.is_zero()
    }

    /// Coordinates `a` with `vec = sum_i a_i * input_i`, if `vec` is in the
    /// span. Requires a tracked echelon.
    pub fn express(&self, vec: &LinComb<K>) -> Option<LinComb<usize>> {
        assert!(self.tracking, "express requires a tracked echelon");
        let (res, track) = self.reduce(vec.clone(), LinComb::new(), -1);
        res.is_zero().then_some(track)
    }

    /// The echelon rows (a basis of the span).
    pub fn basis(&self) -> impl Iterator<Item = &LinComb<K>> {
        self.rows.values().map(|r| &r.vec)
    }
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

/// Rank of a family of vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = LinComb<K>>) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(v);
    }
    ech.rank()
}

/// Basis of the kernel of the linear map sending the `i`-th basis vector of
/// the source to `images[i]`. Each kernel vector is a combination of source
/// indices.
pub fn kernel<K: Ord + Clone>(images: impl IntoIterator<Item = LinComb<K>>) -> Vec<LinComb<usize>> {
    let mut ech = Echelon::tracked();
    let mut out = Vec::new();
    for v in images {
        if let Insert::Dependent(rel) = ech.insert(v) {
            out.push(rel);
        }
    }
    out
}

/// Whether two families span the same subspace.
pub fn same_span<K: Ord + Clone>(a: &[LinComb<K>], b: &[LinComb<K>]) -> bool {
    let mut ea = Echelon::new();
    for v in a {
        ea.insert(v.clone());
    }
    let mut eb = Echelon::new();
    for v in b {
        eb.insert(v.clone());
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}
