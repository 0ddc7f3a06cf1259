//! Finite formal linear combinations of basis labels with exact rational
//! coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::Rat;

/// A finite linear combination of basis labels. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector<L: Ord + Clone> {
    terms: BTreeMap<L, Rat>,
}

impl<L: Ord + Clone> Default for FockVector<L> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<L: Ord + Clone> FockVector<L> {
    pub fn zero() -> Self {
        FockVector {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(label: L) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(label, Rat::from_integer(1.into()));
        FockVector { terms }
    }

    pub fn term(label: L, coeff: Rat) -> Self {
        let mut v = Self::zero();
        v.add_term(label, coeff);
        v
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

    pub fn terms(&self) -> impl Iterator<Item = (&L, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, label: &L) -> Rat {
        self.terms.get(label).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, label: L, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(e) => {
                *e += coeff;
                if e.is_zero() {
                    self.terms.remove(&label);
                }
            }
            None => {
                self.terms.insert(label, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::from_integer(1.into())))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        FockVector {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c * s))
                .collect(),
        }
    }

    /// Inner product in which the basis labels are orthonormal.
    pub fn inner(&self, other: &Self) -> Rat {
        let mut acc = Rat::zero();
        for (l, c) in self.terms() {
            if let Some(d) = other.terms.get(l) {
                acc += c * d;
            }
        }
        acc
    }

    /// Apply a label-wise linear operator.
    pub fn apply<F>(&self, mut op: F) -> Self
    where
        F: FnMut(&L) -> FockVector<L>,
    {
        let mut out = Self::zero();
        for (l, c) in self.terms() {
            for (m, d) in op(l).terms() {
                out.add_term(m.clone(), c * d);
            }
        }
        out
    }
}
