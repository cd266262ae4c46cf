//! Order-preserving maps between count ranges: total monotone functions
//! `{0..=m} -> {0..=n}` that fix both endpoints (`0 -> 0`, `m -> n`). These
//! are the count-transformation component of a generalized multiset mapping.

use std::fmt;

use crate::error::{Error, Result};

/// A full value table for an order-preserving bound map. `values[i]` is the
/// image of `i`; the table always has `source_bound() + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpMap {
    values: Vec<u32>,
    target_bound: u32,
}

/// Classification flags for an [`OpMap`]. Monotonicity makes `injective`
/// equivalent to "strictly increasing".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OpMapClass {
    pub constant: bool,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
    pub identity: bool,
}

impl OpMap {
    /// Validate a value table as an order-preserving map `{0..=m} -> {0..=n}`.
    ///
    /// `source_bound = 0` with `target_bound > 0` is unsatisfiable: the single
    /// table entry would have to be both 0 and `target_bound`.
    pub fn new(source_bound: u32, target_bound: u32, values: Vec<u32>) -> Result<Self> {
        if values.len() as u64 != u64::from(source_bound) + 1 {
            return Err(Error::NotOp(format!(
                "expected {} values, got {}",
                u64::from(source_bound) + 1,
                values.len()
            )));
        }
        if values[0] != 0 {
            return Err(Error::NotOp("0 must map to 0".into()));
        }
        if *values.last().expect("table is nonempty") != target_bound {
            return Err(Error::NotOp(format!(
                "{source_bound} must map to {target_bound}"
            )));
        }
        // Nondecreasing with the last entry pinned at the target bound also
        // caps every entry, so no separate range check is needed.
        for pair in values.windows(2) {
            if pair[0] > pair[1] {
                return Err(Error::NotOp(format!(
                    "values must be nondecreasing ({} then {})",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(OpMap {
            values,
            target_bound,
        })
    }

    /// The identity table on `{0..=bound}`.
    pub fn identity(bound: u32) -> Self {
        OpMap {
            values: (0..=bound).collect(),
            target_bound: bound,
        }
    }

    pub fn source_bound(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn target_bound(&self) -> u32 {
        self.target_bound
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn apply(&self, i: u32) -> Result<u32> {
        self.values
            .get(i as usize)
            .copied()
            .ok_or(Error::OutOfRange {
                value: i,
                bound: self.source_bound(),
            })
    }

    /// All arguments mapping to `j`. Monotonicity makes this a contiguous
    /// (possibly empty) run.
    pub fn preimage_set(&self, j: u32) -> Result<Vec<u32>> {
        if j > self.target_bound {
            return Err(Error::OutOfRange {
                value: j,
                bound: self.target_bound,
            });
        }
        Ok((0..self.values.len() as u32)
            .filter(|&i| self.values[i as usize] == j)
            .collect())
    }

    /// Largest argument mapping to `j`, with the empty-preimage convention
    /// "join of nothing is 0".
    pub fn sup_preimage(&self, j: u32) -> Result<u32> {
        Ok(self.preimage_set(j)?.last().copied().unwrap_or(0))
    }

    pub fn classify(&self) -> OpMapClass {
        let constant = self.values.windows(2).all(|w| w[0] == w[1]);
        let injective = self.values.windows(2).all(|w| w[0] < w[1]);
        let mut hit = vec![false; self.target_bound as usize + 1];
        for &v in &self.values {
            hit[v as usize] = true;
        }
        let surjective = hit.iter().all(|&h| h);
        let bijective = injective && surjective;
        let identity = self.source_bound() == self.target_bound
            && self.values.iter().enumerate().all(|(i, &v)| v == i as u32);
        OpMapClass {
            constant,
            injective,
            surjective,
            bijective,
            identity,
        }
    }

    /// Every order-preserving map `{0..=source_bound} -> {0..=target_bound}`,
    /// in lexicographic order of value tables. Empty when the endpoint
    /// constraints conflict (`source_bound = 0 < target_bound`).
    pub fn enumerate(source_bound: u32, target_bound: u32) -> OpMapEnumeration {
        let first = if source_bound == 0 {
            if target_bound == 0 {
                Some(vec![0])
            } else {
                None
            }
        } else {
            let mut v = vec![0; source_bound as usize + 1];
            v[source_bound as usize] = target_bound;
            Some(v)
        };
        OpMapEnumeration {
            next: first,
            target_bound,
        }
    }
}

impl fmt::Display for OpMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Iterator behind [`OpMap::enumerate`]. Steps the interior of the value
/// table like an odometer while keeping it nondecreasing.
pub struct OpMapEnumeration {
    next: Option<Vec<u32>>,
    target_bound: u32,
}

impl Iterator for OpMapEnumeration {
    type Item = OpMap;

    fn next(&mut self) -> Option<OpMap> {
        let current = self.next.take()?;
        let result = OpMap {
            values: current.clone(),
            target_bound: self.target_bound,
        };
        // Advance: bump the rightmost interior slot that has headroom, then
        // level everything after it to keep the table nondecreasing and the
        // successor lexicographically minimal.
        let interior = 1..current.len().saturating_sub(1);
        let mut next = current;
        for i in interior.rev() {
            if next[i] < self.target_bound {
                next[i] += 1;
                let raised = next[i];
                for slot in next[i + 1..].iter_mut() {
                    *slot = raised;
                }
                *next.last_mut().expect("nonempty") = self.target_bound;
                self.next = Some(next);
                return Some(result);
            }
        }
        Some(result)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_tables() {
        let p = OpMap::new(4, 5, vec![0, 1, 5, 5, 5]).unwrap();
        assert_eq!(p.source_bound(), 4);
        assert_eq!(p.target_bound(), 5);
        assert_eq!(p.apply(2).unwrap(), 5);
        assert_eq!(OpMap::identity(3).values(), &[0, 1, 2, 3]);
    }

    #[test]
    fn rejects_invalid_tables() {
        assert!(matches!(
            OpMap::new(2, 2, vec![0, 2, 1]),
            Err(Error::NotOp(_))
        ));
        assert!(matches!(
            OpMap::new(2, 2, vec![1, 1, 2]),
            Err(Error::NotOp(_))
        ));
        assert!(matches!(
            OpMap::new(2, 2, vec![0, 1]),
            Err(Error::NotOp(_))
        ));
        assert!(matches!(
            OpMap::new(2, 3, vec![0, 1, 2]),
            Err(Error::NotOp(_))
        ));
        // Endpoint constraints conflict at a single-entry table.
        assert!(matches!(OpMap::new(0, 1, vec![0]), Err(Error::NotOp(_))));
        assert!(OpMap::new(0, 0, vec![0]).is_ok());
    }

    #[test]
    fn preimages_are_contiguous_runs() {
        let p = OpMap::new(5, 7, vec![0, 0, 4, 5, 5, 7]).unwrap();
        assert_eq!(p.preimage_set(0).unwrap(), vec![0, 1]);
        assert_eq!(p.preimage_set(5).unwrap(), vec![3, 4]);
        assert_eq!(p.preimage_set(6).unwrap(), Vec::<u32>::new());
        assert_eq!(p.sup_preimage(6).unwrap(), 0); // empty join convention
        assert_eq!(p.sup_preimage(5).unwrap(), 4);

        let q = OpMap::new(4, 5, vec![0, 1, 5, 5, 5]).unwrap();
        assert_eq!(q.preimage_set(5).unwrap(), vec![2, 3, 4]);
        assert_eq!(q.sup_preimage(5).unwrap(), 4);
        assert_eq!(
            q.preimage_set(6),
            Err(Error::OutOfRange { value: 6, bound: 5 })
        );
    }

    #[test]
    fn classification_flags() {
        let p = OpMap::new(4, 5, vec![0, 1, 5, 5, 5]).unwrap();
        let c = p.classify();
        assert!(!c.constant && !c.injective && !c.surjective && !c.bijective && !c.identity);

        let id = OpMap::identity(3).classify();
        assert!(id.injective && id.surjective && id.bijective && id.identity && !id.constant);

        let z = OpMap::new(3, 0, vec![0, 0, 0, 0]).unwrap().classify();
        assert!(z.constant && z.surjective && !z.injective);

        let point = OpMap::new(0, 0, vec![0]).unwrap().classify();
        assert!(point.constant && point.identity && point.bijective);
    }

    /// Brute-force oracle: filter every value table for the three defining
    /// conditions, independent of the enumeration logic.
    fn oracle(source_bound: u32, target_bound: u32) -> Vec<Vec<u32>> {
        let len = source_bound as usize + 1;
        let radix = u64::from(target_bound) + 1;
        let total = radix.pow(len as u32);
        let mut found = Vec::new();
        for code in 0..total {
            let mut c = code;
            let mut table = vec![0u32; len];
            for slot in table.iter_mut().rev() {
                *slot = (c % radix) as u32;
                c /= radix;
            }
            let endpoints = table[0] == 0 && table[len - 1] == target_bound;
            let monotone = table.windows(2).all(|w| w[0] <= w[1]);
            if endpoints && monotone {
                found.push(table);
            }
        }
        found
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for m in 0..=4u32 {
            for n in 0..=4u32 {
                let tables: Vec<Vec<u32>> =
                    OpMap::enumerate(m, n).map(|p| p.values().to_vec()).collect();
                assert_eq!(tables, oracle(m, n), "bounds ({m}, {n})");
                // Lexicographic order, no duplicates.
                for w in tables.windows(2) {
                    assert!(w[0] < w[1]);
                }
            }
        }
        assert_eq!(OpMap::enumerate(3, 3).count(), 10);
        assert_eq!(OpMap::enumerate(1, 4).count(), 1);
        assert_eq!(OpMap::enumerate(0, 2).count(), 0);
    }

    #[test]
    fn monotonicity_consequences() {
        // Facts the mapping algebra leans on, checked over every table at
        // small bounds.
        for m in 0..=4u32 {
            for n in 0..=4u32 {
                for p in OpMap::enumerate(m, n) {
                    let class = p.classify();
                    for i in 0..=m {
                        let v = p.apply(i).unwrap();
                        if class.surjective {
                            assert!(v <= i);
                        }
                        if class.injective {
                            assert!(v >= i);
                        }
                        assert!(p.sup_preimage(v).unwrap() >= i);
                    }
                    for j in 0..=n {
                        if !p.preimage_set(j).unwrap().is_empty() {
                            assert_eq!(p.apply(p.sup_preimage(j).unwrap()).unwrap(), j);
                        }
                    }
                }
            }
        }
    }
}
