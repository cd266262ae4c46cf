//! Generalized mappings between bounded multiset spaces. A mapping is a pair:
//! a total element table `u` between the universes and an order-preserving
//! count map `p` between the bounds. Images push the join of each fiber's
//! counts through `p`; preimages pull counts back through the largest
//! `p`-preimage.

use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::opmap::OpMap;
use crate::space::{Space, Symbol};

/// A generalized mapping `X^m -> Y^n`: element table plus count map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KharalMap<D: Symbol, C: Symbol> {
    domain: Space<D>,
    codomain: Space<C>,
    /// `u[i]` is the codomain index of the image of domain element `i`.
    u: Vec<usize>,
    p: OpMap,
}

/// Classification of a [`KharalMap`]: the element table and count map are
/// classified separately, and the combined flags require both components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapClass {
    pub u_injective: bool,
    pub u_surjective: bool,
    pub u_bijective: bool,
    pub p_injective: bool,
    pub p_surjective: bool,
    pub p_bijective: bool,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

/// Validate `(domain element, codomain element)` pairs as a total function
/// between two universes, returning it as codomain indices in domain order.
pub(crate) fn element_table<D: Symbol, C: Symbol>(
    domain: &Space<D>,
    codomain: &Space<C>,
    assignments: impl IntoIterator<Item = (D, C)>,
) -> Result<Vec<usize>> {
    let mut table: Vec<Option<usize>> = vec![None; domain.len()];
    for (from, to) in assignments {
        let from_idx = domain
            .index_of(&from)
            .ok_or_else(|| Error::BadAssignment(format!("'{from}' is not in the domain")))?;
        let to_idx = codomain
            .index_of(&to)
            .ok_or_else(|| Error::BadAssignment(format!("'{to}' is not in the codomain")))?;
        if table[from_idx].is_some() {
            return Err(Error::BadAssignment(format!("'{from}' is assigned twice")));
        }
        table[from_idx] = Some(to_idx);
    }
    table
        .into_iter()
        .enumerate()
        .map(|(idx, slot)| {
            slot.ok_or_else(|| {
                Error::BadAssignment(format!(
                    "'{}' has no assignment",
                    domain.elements()[idx]
                ))
            })
        })
        .collect()
}

impl<D: Symbol, C: Symbol> KharalMap<D, C> {
    /// Build a mapping from `(domain element, codomain element)` assignment
    /// pairs. The assignment must be total on the domain universe, and `p`
    /// must run between exactly the two space bounds.
    pub fn new(
        domain: &Space<D>,
        codomain: &Space<C>,
        assignments: impl IntoIterator<Item = (D, C)>,
        p: OpMap,
    ) -> Result<Self> {
        let table = element_table(domain, codomain, assignments)?;
        Self::from_indices(domain, codomain, table, p)
    }

    /// Build from an element table already given as codomain indices.
    pub fn from_indices(
        domain: &Space<D>,
        codomain: &Space<C>,
        u: Vec<usize>,
        p: OpMap,
    ) -> Result<Self> {
        if u.len() != domain.len() {
            return Err(Error::BadAssignment(format!(
                "table covers {} of {} domain elements",
                u.len(),
                domain.len()
            )));
        }
        if let Some(&bad) = u.iter().find(|&&t| t >= codomain.len()) {
            return Err(Error::BadAssignment(format!(
                "index {bad} is outside the codomain universe"
            )));
        }
        if p.source_bound() != domain.bound() || p.target_bound() != codomain.bound() {
            return Err(Error::BoundMismatch(format!(
                "count map runs {}..{} but the spaces have bounds {}..{}",
                p.source_bound(),
                p.target_bound(),
                domain.bound(),
                codomain.bound()
            )));
        }
        Ok(KharalMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            u,
            p,
        })
    }

    pub fn domain(&self) -> &Space<D> {
        &self.domain
    }

    pub fn codomain(&self) -> &Space<C> {
        &self.codomain
    }

    pub fn element_table(&self) -> &[usize] {
        &self.u
    }

    pub fn count_map(&self) -> &OpMap {
        &self.p
    }

    pub fn map_element(&self, element: &D) -> Result<&C> {
        let idx = self
            .domain
            .index_of(element)
            .ok_or_else(|| Error::UnknownElement(element.to_string()))?;
        Ok(&self.codomain.elements()[self.u[idx]])
    }

    /// Image: each codomain count is `p` of the join of the counts in its
    /// fiber, and 0 where the fiber is empty.
    pub fn image(&self, a: &Multiset<D>) -> Result<Multiset<C>> {
        if !a.space().same_space(&self.domain) {
            return Err(Error::SpaceMismatch);
        }
        let mut fiber_join: Vec<Option<u32>> = vec![None; self.codomain.len()];
        for (x, &y) in self.u.iter().enumerate() {
            let count = a.counts()[x];
            fiber_join[y] = Some(fiber_join[y].map_or(count, |j| j.max(count)));
        }
        let counts = fiber_join
            .into_iter()
            .map(|join| match join {
                Some(j) => self.p.apply(j),
                None => Ok(0),
            })
            .collect::<Result<Vec<u32>>>()?;
        Multiset::from_counts(&self.codomain, counts)
    }

    /// Preimage: each domain count is the largest `p`-preimage of the count
    /// sitting at its image element, and 0 where that preimage is empty.
    pub fn preimage(&self, m: &Multiset<C>) -> Result<Multiset<D>> {
        if !m.space().same_space(&self.codomain) {
            return Err(Error::SpaceMismatch);
        }
        // sup_table[j] = largest i with p(i) = j; later writes win, which by
        // monotonicity is exactly the supremum. Absent values keep the
        // empty-join default of 0.
        let mut sup_table = vec![0u32; self.codomain.bound() as usize + 1];
        for (i, &v) in self.p.values().iter().enumerate() {
            sup_table[v as usize] = i as u32;
        }
        let counts = self
            .u
            .iter()
            .map(|&y| sup_table[m.counts()[y] as usize])
            .collect();
        Multiset::from_counts(&self.domain, counts)
    }

    pub fn classify(&self) -> MapClass {
        let mut hits = vec![0u32; self.codomain.len()];
        for &y in &self.u {
            hits[y] += 1;
        }
        let u_injective = hits.iter().all(|&h| h <= 1);
        let u_surjective = hits.iter().all(|&h| h >= 1);
        let u_bijective = u_injective && u_surjective;
        let p = self.p.classify();
        MapClass {
            u_injective,
            u_surjective,
            u_bijective,
            p_injective: p.injective,
            p_surjective: p.surjective,
            p_bijective: p.bijective,
            injective: u_injective && p.injective,
            surjective: u_surjective && p.surjective,
            bijective: u_injective && p.injective && u_surjective && p.surjective,
        }
    }

    /// Chain two mappings: element tables compose as functions, count maps
    /// compose as value tables. Pure plumbing; no algebraic laws are claimed
    /// for composites.
    pub fn compose<E: Symbol>(&self, next: &KharalMap<C, E>) -> Result<KharalMap<D, E>> {
        if !self.codomain.same_space(&next.domain) {
            return Err(Error::SpaceMismatch);
        }
        let u = self.u.iter().map(|&y| next.u[y]).collect();
        let values = self
            .p
            .values()
            .iter()
            .map(|&v| next.p.values()[v as usize])
            .collect();
        let p = OpMap::new(self.p.source_bound(), next.p.target_bound(), values)
            .expect("composite of order-preserving maps is order-preserving");
        KharalMap::from_indices(&self.domain, &next.codomain, u, p)
    }
}
