//! Bridges to neighboring multiset-mapping formalisms: position-count
//! vectors and their realization as a generalized mapping, sum-based images,
//! count-respecting injectivity/surjectivity verdicts, and the identity-count
//! specialization with its pull-back law.

use std::fmt;

use crate::error::{Error, Result};
use crate::kharal::{element_table, KharalMap};
use crate::multiset::Multiset;
use crate::opmap::OpMap;
use crate::space::{Space, Symbol};

/// An integer position vector, ordered lexicographically. Doubles as a
/// universe element for vector-valued codomains.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IntVector(pub Vec<u32>);

impl IntVector {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn check_order<S: Symbol>(space: &Space<S>, order: &[S]) -> Result<()> {
    if order.len() != space.len() {
        return Err(Error::BadOrder(format!(
            "order lists {} of {} elements",
            order.len(),
            space.len()
        )));
    }
    let mut seen = vec![false; space.len()];
    for element in order {
        let idx = space
            .index_of(element)
            .ok_or_else(|| Error::BadOrder(format!("'{element}' is not in the universe")))?;
        if seen[idx] {
            return Err(Error::BadOrder(format!("'{element}' is listed twice")));
        }
        seen[idx] = true;
    }
    Ok(())
}

/// Read a multiset's counts in the given element order.
pub fn parikh_vector<S: Symbol>(a: &Multiset<S>, order: &[S]) -> Result<IntVector> {
    check_order(a.space(), order)?;
    let counts = order
        .iter()
        .map(|e| a.count(e).expect("order was checked against the universe"))
        .collect();
    Ok(IntVector(counts))
}

/// A position-count vector realized as a generalized mapping: each element
/// goes to the one-hot vector carrying its count, all counts collapse to a
/// presence flag, and summing the image multiset recovers the vector.
#[derive(Debug, Clone)]
pub struct ParikhRepresentation<S: Symbol> {
    pub order: Vec<S>,
    /// Universe of one-hot count vectors (deduplicated) plus the zero
    /// vector, in lexicographic order, with bound 1.
    pub vector_universe: Space<IntVector>,
    pub map: KharalMap<S, IntVector>,
    pub image: Multiset<IntVector>,
    /// Multiplicity-weighted componentwise sum of the image.
    pub vector_sum: IntVector,
}

/// Build the mapping realization of a position-count vector.
///
/// Requires a positive bound: the presence-flag count map would need to send
/// 0 to both 0 and 1 otherwise.
pub fn parikh_kharal<S: Symbol>(a: &Multiset<S>, order: &[S]) -> Result<ParikhRepresentation<S>> {
    check_order(a.space(), order)?;
    let bound = a.space().bound();
    if bound == 0 {
        return Err(Error::NotOp(
            "a zero-bound space has no presence-flag count map".into(),
        ));
    }
    let positions = order.len();
    let one_hot = |place: usize, value: u32| {
        let mut v = vec![0u32; positions];
        if positions > 0 {
            v[place] = value;
        }
        IntVector(v)
    };

    let mut vectors: Vec<IntVector> = order
        .iter()
        .enumerate()
        .map(|(place, element)| {
            one_hot(place, a.count(element).expect("order was checked"))
        })
        .collect();
    vectors.push(IntVector(vec![0; positions]));
    vectors.sort();
    vectors.dedup();
    let vector_universe = Space::new(vectors, 1).expect("sorted + deduplicated");

    let assignments: Vec<(S, IntVector)> = order
        .iter()
        .enumerate()
        .map(|(place, element)| {
            (
                element.clone(),
                one_hot(place, a.count(element).expect("order was checked")),
            )
        })
        .collect();
    let mut presence = vec![1u32; bound as usize + 1];
    presence[0] = 0;
    let p = OpMap::new(bound, 1, presence).expect("presence flags are order-preserving");
    let map = KharalMap::new(a.space(), &vector_universe, assignments, p)?;
    let image = map.image(a)?;

    let mut sum = vec![0u64; positions];
    for (vector, &count) in vector_universe.elements().iter().zip(image.counts()) {
        for (slot, &entry) in sum.iter_mut().zip(vector.entries()) {
            *slot += u64::from(count) * u64::from(entry);
        }
    }
    let vector_sum = IntVector(
        sum.into_iter()
            .map(|v| u32::try_from(v).expect("weighted sums stay within the source bound"))
            .collect(),
    );
    debug_assert_eq!(vector_sum, parikh_vector(a, order)?);

    Ok(ParikhRepresentation {
        order: order.to_vec(),
        vector_universe,
        map,
        image,
        vector_sum,
    })
}

/// Sum-based image: each codomain count is the plain sum of its fiber's
/// counts. The codomain bound must cover the worst case `bound * universe
/// size`, so the sums can never spill.
pub fn khomenko_image<D: Symbol, C: Symbol>(
    assignments: impl IntoIterator<Item = (D, C)>,
    a: &Multiset<D>,
    codomain: &Space<C>,
) -> Result<Multiset<C>> {
    let table = element_table(a.space(), codomain, assignments)?;
    let required = u64::from(a.space().bound()) * a.space().len() as u64;
    if u64::from(codomain.bound()) < required {
        return Err(Error::BoundTooSmall {
            required,
            got: codomain.bound(),
        });
    }
    let mut sums = vec![0u64; codomain.len()];
    for (x, &y) in table.iter().enumerate() {
        sums[y] += u64::from(a.counts()[x]);
    }
    let counts = sums
        .into_iter()
        .map(|s| u32::try_from(s).expect("fiber sums are capped by the checked bound"))
        .collect();
    Multiset::from_counts(codomain, counts)
}

/// Count-respecting classification of an element table between two
/// multisets' universes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HickmanVerdict {
    /// Element table injective and counts never shrink along it.
    pub m_injective: bool,
    /// Element table surjective and counts never grow along it.
    pub m_surjective: bool,
    pub m_bijective: bool,
}

/// Classify an element table `u` against source counts `m` and target counts
/// `n`: injectivity additionally demands `m(k) <= n(u(k))` everywhere,
/// surjectivity demands `m(k) >= n(u(k))` everywhere.
pub fn hickman_classify<D: Symbol, C: Symbol>(
    assignments: impl IntoIterator<Item = (D, C)>,
    m: &Multiset<D>,
    n: &Multiset<C>,
) -> Result<HickmanVerdict> {
    let table = element_table(m.space(), n.space(), assignments)?;
    let mut hits = vec![0u32; n.space().len()];
    for &y in &table {
        hits[y] += 1;
    }
    let injective = hits.iter().all(|&h| h <= 1);
    let surjective = hits.iter().all(|&h| h >= 1);
    let never_shrinks = table
        .iter()
        .enumerate()
        .all(|(x, &y)| m.counts()[x] <= n.counts()[y]);
    let never_grows = table
        .iter()
        .enumerate()
        .all(|(x, &y)| m.counts()[x] >= n.counts()[y]);
    let m_injective = injective && never_shrinks;
    let m_surjective = surjective && never_grows;
    Ok(HickmanVerdict {
        m_injective,
        m_surjective,
        m_bijective: m_injective && m_surjective,
    })
}

/// The identity-count specialization: both spaces share one bound and the
/// count map is the identity, which collapses the preimage law to reading
/// the count at the image element.
pub fn nazmul_map<D: Symbol, C: Symbol>(
    domain: &Space<D>,
    codomain: &Space<C>,
    assignments: impl IntoIterator<Item = (D, C)>,
) -> Result<KharalMap<D, C>> {
    if domain.bound() != codomain.bound() {
        return Err(Error::BoundMismatch(format!(
            "identity-count mapping needs equal bounds, got {} and {}",
            domain.bound(),
            codomain.bound()
        )));
    }
    KharalMap::new(
        domain,
        codomain,
        assignments,
        OpMap::identity(domain.bound()),
    )
}
