//! Multisets over a bounded space, with the pointwise algebra: union is max,
//! intersection is min, difference is truncated subtraction, complement is
//! subtraction from the bound.

use std::fmt;

use crate::error::{Error, Result};
use crate::space::{Space, Symbol};

/// A member of a bounded multiset space: one count in `0..=bound` per
/// universe element, stored densely in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiset<S: Symbol> {
    space: Space<S>,
    counts: Vec<u32>,
}

impl<S: Symbol> Multiset<S> {
    /// Build a multiset from `(element, count)` pairs. Every universe element
    /// must appear exactly once; counts above the bound are rejected, never
    /// clamped.
    pub fn new(space: &Space<S>, counts: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        let mut table: Vec<Option<u32>> = vec![None; space.len()];
        for (element, count) in counts {
            let idx = space
                .index_of(&element)
                .ok_or_else(|| Error::UnknownElement(element.to_string()))?;
            if table[idx].is_some() {
                return Err(Error::DuplicateElement(element.to_string()));
            }
            if count > space.bound() {
                return Err(Error::OutOfRange {
                    value: count,
                    bound: space.bound(),
                });
            }
            table[idx] = Some(count);
        }
        let mut counts = Vec::with_capacity(space.len());
        for (idx, slot) in table.into_iter().enumerate() {
            match slot {
                Some(c) => counts.push(c),
                None => return Err(Error::MissingElement(space.elements()[idx].to_string())),
            }
        }
        Ok(Multiset {
            space: space.clone(),
            counts,
        })
    }

    /// Build from counts already in universe order.
    pub fn from_counts(space: &Space<S>, counts: Vec<u32>) -> Result<Self> {
        if counts.len() != space.len() {
            return Err(Error::MissingElement(
                space
                    .elements()
                    .get(counts.len())
                    .map(|e| e.to_string())
                    .unwrap_or_else(|| "?".into()),
            ));
        }
        for &c in &counts {
            if c > space.bound() {
                return Err(Error::OutOfRange {
                    value: c,
                    bound: space.bound(),
                });
            }
        }
        Ok(Multiset {
            space: space.clone(),
            counts,
        })
    }

    /// The constant multiset with every count equal to `tag`.
    pub fn constant(space: &Space<S>, tag: u32) -> Result<Self> {
        if tag > space.bound() {
            return Err(Error::OutOfRange {
                value: tag,
                bound: space.bound(),
            });
        }
        Ok(Multiset {
            space: space.clone(),
            counts: vec![tag; space.len()],
        })
    }

    /// The empty multiset (all counts zero).
    pub fn empty(space: &Space<S>) -> Self {
        Multiset {
            space: space.clone(),
            counts: vec![0; space.len()],
        }
    }

    /// The absolute multiset (every count at the bound).
    pub fn absolute(space: &Space<S>) -> Self {
        Multiset {
            space: space.clone(),
            counts: vec![space.bound(); space.len()],
        }
    }

    pub fn space(&self) -> &Space<S> {
        &self.space
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, element: &S) -> Result<u32> {
        self.space
            .index_of(element)
            .map(|i| self.counts[i])
            .ok_or_else(|| Error::UnknownElement(element.to_string()))
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.space.same_space(&other.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Result<Self> {
        self.check_same_space(other)?;
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Multiset {
            space: self.space.clone(),
            counts,
        })
    }

    /// Pointwise maximum.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u32::max)
    }

    /// Pointwise minimum.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u32::min)
    }

    /// Pointwise truncated subtraction.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u32::saturating_sub)
    }

    /// Pointwise subtraction from the bound.
    pub fn complement(&self) -> Self {
        let bound = self.space.bound();
        Multiset {
            space: self.space.clone(),
            counts: self.counts.iter().map(|&c| bound - c).collect(),
        }
    }

    /// Pointwise `<=`; with `proper` also requires a strict `<` somewhere.
    pub fn is_submset(&self, other: &Self, proper: bool) -> Result<bool> {
        self.check_same_space(other)?;
        let below = self
            .counts
            .iter()
            .zip(&other.counts)
            .all(|(&a, &b)| a <= b);
        Ok(below && (!proper || self.counts != other.counts))
    }

    /// Whether the two multisets overfill some element: `A(x) + B(x)` exceeds
    /// the bound for at least one `x`.
    pub fn coincident(&self, other: &Self) -> Result<bool> {
        self.check_same_space(other)?;
        let bound = u64::from(self.space.bound());
        Ok(self
            .counts
            .iter()
            .zip(&other.counts)
            .any(|(&a, &b)| u64::from(a) + u64::from(b) > bound))
    }

    /// Total count over all elements.
    pub fn cardinality(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }
}

impl<S: Symbol> fmt::Display for Multiset<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{ ")?;
        for (i, (element, count)) in self.space.elements().iter().zip(&self.counts).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{count}/{element}")?;
        }
        if self.counts.is_empty() {
            write!(f, "}}")
        } else {
            write!(f, " }}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(elems: &[&str], bound: u32) -> Space<String> {
        Space::new(elems.iter().map(|s| s.to_string()), bound).unwrap()
    }

    fn mset(sp: &Space<String>, counts: &[u32]) -> Multiset<String> {
        Multiset::from_counts(sp, counts.to_vec()).unwrap()
    }

    #[test]
    fn construction_validates_strictly() {
        let sp = space(&["a", "b"], 2);
        let from_pairs = Multiset::new(&sp, [("b".to_string(), 2), ("a".to_string(), 1)]).unwrap();
        assert_eq!(from_pairs.counts(), &[1, 2]); // stored in universe order

        assert_eq!(
            Multiset::new(&sp, [("a".to_string(), 3), ("b".to_string(), 0)]),
            Err(Error::OutOfRange { value: 3, bound: 2 })
        );
        assert_eq!(
            Multiset::new(&sp, [("z".to_string(), 1)]),
            Err(Error::UnknownElement("z".into()))
        );
        assert_eq!(
            Multiset::new(&sp, [("a".to_string(), 1)]),
            Err(Error::MissingElement("b".into()))
        );
        assert_eq!(
            Multiset::new(
                &sp,
                [("a".to_string(), 1), ("a".to_string(), 1), ("b".to_string(), 0)]
            ),
            Err(Error::DuplicateElement("a".into()))
        );
    }

    #[test]
    fn operations_are_pointwise() {
        // One multiset and its complement, bound 4.
        let sp = space(&["a", "b", "c", "d", "e"], 4);
        let a = mset(&sp, &[4, 2, 0, 0, 3]);
        let ac = a.complement();
        assert_eq!(ac.counts(), &[0, 2, 4, 4, 1]);
        assert_eq!(a.union(&ac).unwrap().counts(), &[4, 2, 4, 4, 3]);
        assert_eq!(a.intersect(&ac).unwrap().counts(), &[0, 2, 0, 0, 1]);
    }

    #[test]
    fn difference_truncates_at_zero() {
        let sp = space(&["a", "b"], 4);
        let m = mset(&sp, &[4, 0]);
        let n = mset(&sp, &[1, 2]);
        assert_eq!(m.difference(&n).unwrap().counts(), &[3, 0]);
    }

    #[test]
    fn binary_ops_need_the_same_space() {
        let a = mset(&space(&["a", "b"], 2), &[1, 1]);
        let b = mset(&space(&["a", "b"], 3), &[1, 1]);
        assert_eq!(a.union(&b), Err(Error::SpaceMismatch));
        let c = mset(&space(&["b", "a"], 2), &[1, 1]);
        assert_eq!(a.intersect(&c), Err(Error::SpaceMismatch));
    }

    #[test]
    fn submset_and_proper_submset() {
        let sp = space(&["a", "b"], 3);
        let small = mset(&sp, &[1, 2]);
        let large = mset(&sp, &[1, 3]);
        assert!(small.is_submset(&large, false).unwrap());
        assert!(small.is_submset(&large, true).unwrap());
        assert!(small.is_submset(&small, false).unwrap());
        assert!(!small.is_submset(&small, true).unwrap());
        assert!(!large.is_submset(&small, false).unwrap());
    }

    #[test]
    fn coincidence_checks_count_sums() {
        let sp = space(&["a", "b"], 4);
        let a = mset(&sp, &[3, 0]);
        let b = mset(&sp, &[2, 1]);
        assert!(a.coincident(&b).unwrap()); // 3 + 2 > 4
        let c = mset(&sp, &[1, 4]);
        assert!(!a.coincident(&c).unwrap()); // 4 <= 4 and 4 <= 4
    }

    #[test]
    fn cardinality_sums_counts() {
        let sp = space(&["a", "b", "c", "d"], 4);
        assert_eq!(mset(&sp, &[1, 4, 2, 4]).cardinality(), 11);
        assert_eq!(Multiset::empty(&sp).cardinality(), 0);
    }

    #[test]
    fn constants() {
        let sp = space(&["a", "b"], 3);
        assert_eq!(Multiset::constant(&sp, 2).unwrap().counts(), &[2, 2]);
        assert_eq!(Multiset::empty(&sp), Multiset::constant(&sp, 0).unwrap());
        assert_eq!(Multiset::absolute(&sp), Multiset::constant(&sp, 3).unwrap());
        assert_eq!(
            Multiset::constant(&sp, 4),
            Err(Error::OutOfRange { value: 4, bound: 3 })
        );
    }

    #[test]
    fn excluded_middle_fails_exactly_at_interior_counts() {
        // A meet or join with the complement is degenerate iff every count
        // sits at 0 or at the bound.
        for bound in 0..=3u32 {
            let sp = space(&["a", "b"], bound);
            let total = (bound + 1).pow(2);
            for code in 0..total {
                let counts = vec![code / (bound + 1), code % (bound + 1)];
                let interior_free = counts.iter().all(|&c| c == 0 || c == bound);
                let a = mset(&sp, &counts);
                let lnc = a.intersect(&a.complement()).unwrap() == Multiset::empty(&sp);
                let lem = a.union(&a.complement()).unwrap() == Multiset::absolute(&sp);
                assert_eq!(lnc && lem, interior_free, "counts {counts:?} bound {bound}");
                assert_eq!(lnc, lem, "laws fail together: {counts:?} bound {bound}");
            }
        }
    }

    #[test]
    fn display_zeros_are_explicit() {
        let sp = space(&["a", "b", "c"], 2);
        assert_eq!(mset(&sp, &[0, 2, 0]).to_string(), "{ 0/a, 2/b, 0/c }");
        assert_eq!(Multiset::empty(&space(&[], 1)).to_string(), "{ }");
    }
}
