//! Sparse formal linear combinations over [`Scalar`].

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

/// A finitely supported map `K -> Scalar` with no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: Scalar) -> Self {
        let mut out = Self::new();
        out.add_term(key, coeff);
        out
    }

    pub fn basis(key: K) -> Self {
        Self::single(key, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.terms.get(key)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn first(&self) -> Option<(&K, &Scalar)> {
        self.terms.iter().next()
    }

    pub fn into_map(self) -> BTreeMap<K, Scalar> {
        self.terms
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &Scalar::one());
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::new();
        }
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * factor)).collect(),
        }
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scaled(&-Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_pruning() {
        let mut a = LinComb::single("x", Scalar::from(2));
        a.add_term("x", Scalar::from(-2));
        assert!(a.is_zero());
        a.add_term("y", Scalar::zero());
        assert!(a.is_zero());
    }

    #[test]
    fn add_sub_scale() {
        let a: LinComb<u8> = [(1, Scalar::from(1)), (2, Scalar::from(3))].into_iter().collect();
        let b: LinComb<u8> = [(2, Scalar::from(3)), (3, Scalar::from(1))].into_iter().collect();
        let d = &a - &b;
        assert_eq!(d.coeff(&1), Scalar::from(1));
        assert!(!d.contains(&2));
        assert_eq!(d.coeff(&3), Scalar::from(-1));
        assert!(a.scaled(&Scalar::zero()).is_zero());
    }
}
