//! Bounded multiset spaces and the maps between them.
//!
//! A [`Space`] fixes an ordered universe of symbols and a count bound; a
//! [`Multiset`] assigns each symbol a count within that bound. Pointwise
//! max, min, truncated subtraction, and bound-complement give the usual
//! algebra. A [`KharalMap`] carries multisets between two spaces through an
//! element table and an order-preserving count map ([`OpMap`]); the
//! [`interop`] module bridges to sum-based images, position-count vectors,
//! count-respecting verdicts, and the identity-count specialization.
//!
//! The [`audit`] module turns the algebra's laws into a runnable catalog:
//! every claim is checked over all small instances and a seeded batch of
//! random larger ones, and violations come back as replayable instances.
//!
//! ```
//! use msetspace::{Multiset, Space};
//!
//! let space = Space::new(["a".to_string(), "b".to_string()], 4)?;
//! let left = Multiset::new(&space, [("a".to_string(), 3), ("b".to_string(), 0)])?;
//! let right = Multiset::new(&space, [("a".to_string(), 1), ("b".to_string(), 2)])?;
//! assert_eq!(left.union(&right)?.to_string(), "{ 3/a, 2/b }");
//! assert_eq!(left.complement().to_string(), "{ 1/a, 4/b }");
//! # Ok::<(), msetspace::Error>(())
//! ```

pub mod audit;
mod error;
pub mod interop;
mod kharal;
pub mod metrics;
mod multiset;
mod opmap;
mod space;

pub use error::{Error, Result};
pub use kharal::{KharalMap, MapClass};
pub use multiset::Multiset;
pub use opmap::{OpMap, OpMapClass, OpMapEnumeration};
pub use space::{Space, Symbol};
