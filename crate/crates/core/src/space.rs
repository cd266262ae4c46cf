//! Bounded multiset spaces: a finite, ordered universe of elements together
//! with a per-element count bound.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Anything usable as a universe element. Blanket-implemented; the ordering
/// fixes enumeration and rendering order wherever a universe is constructed
/// rather than declared.
pub trait Symbol: Clone + Eq + Ord + fmt::Debug + fmt::Display {}

impl<T: Clone + Eq + Ord + fmt::Debug + fmt::Display> Symbol for T {}

#[derive(Debug, PartialEq, Eq)]
struct SpaceInner<S> {
    elements: Vec<S>,
    bound: u32,
}

/// The space of all multisets over a fixed element universe whose counts are
/// capped by `bound`. Cheap to clone; two handles are interchangeable when
/// they have the same elements in the same order and the same bound.
///
/// Both the empty universe and a zero bound are legitimate degenerate cases:
/// each yields a space with exactly one member.
#[derive(Debug, Clone)]
pub struct Space<S: Symbol> {
    inner: Arc<SpaceInner<S>>,
}

impl<S: Symbol> Space<S> {
    /// Build a space from distinct elements (declaration order is kept) and a
    /// count bound.
    pub fn new(elements: impl IntoIterator<Item = S>, bound: u32) -> Result<Self> {
        let elements: Vec<S> = elements.into_iter().collect();
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::DuplicateElement(e.to_string()));
            }
        }
        Ok(Space {
            inner: Arc::new(SpaceInner { elements, bound }),
        })
    }

    pub fn elements(&self) -> &[S] {
        &self.inner.elements
    }

    /// Per-element count cap.
    pub fn bound(&self) -> u32 {
        self.inner.bound
    }

    /// Universe size.
    pub fn len(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.elements.is_empty()
    }

    pub fn index_of(&self, element: &S) -> Option<usize> {
        self.inner.elements.iter().position(|e| e == element)
    }

    /// Structural identity, with a pointer fast path for handles cloned from
    /// the same declaration.
    pub fn same_space(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl<S: Symbol> PartialEq for Space<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_space(other)
    }
}

impl<S: Symbol> Eq for Space<S> {}

impl<S: Symbol> fmt::Display for Space<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{ ")?;
        for (i, e) in self.elements().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        if self.is_empty() {
            write!(f, "}}^{}", self.bound())
        } else {
            write!(f, " }}^{}", self.bound())
        }
    }
}
