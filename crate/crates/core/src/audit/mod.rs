//! The claim auditor: a fixed catalog of algebraic claims about the multiset
//! algebra, the count maps, the generalized mappings, the interop bridges,
//! and the metrics, each checked exhaustively over every instance within
//! configurable bounds and then probed further with seeded random trials.
//!
//! Reports are deterministic down to the byte for a fixed set of bounds:
//! enumeration order is fixed, the first violating instance is the one
//! reported, and random trials run on a per-claim stream derived from the
//! seed and the claim id.

mod claims;

use std::fmt;

use crate::error::Result;
use crate::multiset::Multiset;
use crate::opmap::OpMap;
use crate::space::{Space, Symbol};

pub use claims::claim_ids;

/// Enumeration bounds for one audit run. The exhaustive phase covers every
/// universe up to `max_universe` elements and every bound up to `max_bound`
/// (on both sides of a mapping); the random phase then samples larger
/// instances, `random_trials` per claim, from a generator seeded by `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditBounds {
    pub max_universe: u32,
    pub max_bound: u32,
    pub random_trials: u32,
    pub seed: u64,
}

impl Default for AuditBounds {
    fn default() -> Self {
        AuditBounds {
            max_universe: 3,
            max_bound: 3,
            random_trials: 1000,
            seed: 0,
        }
    }
}

/// Outcome of checking one claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    /// No violation over the configured enumeration and trials.
    Holds,
    /// A counterexample was found; the first one in enumeration order is
    /// attached.
    Violated,
    /// The claim does not hold unconditionally as stated, but the corrected
    /// side condition in the note was verified over the whole enumeration.
    Conditional,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Holds => "holds",
            ClaimStatus::Violated => "violated",
            ClaimStatus::Conditional => "conditional",
        })
    }
}

/// A concrete instance a claim was evaluated on: whichever of the spaces,
/// element table, count map, multisets, and element order the claim
/// quantifies over. Stored so violations can be replayed.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub domain: Option<Space<String>>,
    pub codomain: Option<Space<String>>,
    /// Element table as codomain indices in domain order.
    pub element_table: Option<Vec<usize>>,
    pub count_map: Option<OpMap>,
    /// Named multisets, in the claim's own naming order.
    pub multisets: Vec<(String, Multiset<String>)>,
    pub order: Option<Vec<String>>,
}

impl Instance {
    fn empty() -> Self {
        Instance {
            domain: None,
            codomain: None,
            element_table: None,
            count_map: None,
            multisets: Vec::new(),
            order: None,
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if let Some(domain) = &self.domain {
            parts.push(format!("X={domain}"));
        }
        if let Some(codomain) = &self.codomain {
            parts.push(format!("Y={codomain}"));
        }
        if let Some(table) = &self.element_table {
            let rendered: Vec<String> = match (&self.domain, &self.codomain) {
                (Some(domain), Some(codomain)) => table
                    .iter()
                    .enumerate()
                    .map(|(x, &y)| {
                        format!("{}->{}", domain.elements()[x], codomain.elements()[y])
                    })
                    .collect(),
                _ => table.iter().map(|y| y.to_string()).collect(),
            };
            parts.push(format!("u=[{}]", rendered.join(", ")));
        }
        if let Some(p) = &self.count_map {
            parts.push(format!("p={p}"));
        }
        for (name, mset) in &self.multisets {
            parts.push(format!("{name}={mset}"));
        }
        if let Some(order) = &self.order {
            parts.push(format!(
                "order=({})",
                order
                    .iter()
                    .map(|s| s.as_str())
                    .collect::<Vec<_>>()
                    .join(",")
            ));
        }
        f.write_str(&parts.join(" ; "))
    }
}

/// Result of auditing a single claim.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub status: ClaimStatus,
    pub instances_checked: u64,
    pub counterexample: Option<Instance>,
    pub note: Option<&'static str>,
}

/// A full audit: one result per requested claim, in catalog order, plus
/// catalog-wide notes.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditReport {
    pub bounds: AuditBounds,
    pub results: Vec<ClaimResult>,
    pub notes: Vec<&'static str>,
}

impl AuditReport {
    pub fn count(&self, status: ClaimStatus) -> usize {
        self.results.iter().filter(|r| r.status == status).count()
    }

    pub fn result(&self, id: &str) -> Option<&ClaimResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// Line-oriented rendering: one `CLAIM` line per result, `NOTE` lines,
    /// and a `SUMMARY` line. Byte-deterministic for fixed bounds.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let b = &self.bounds;
        out.push_str(&format!(
            "AUDIT max_universe={} max_bound={} trials={} seed={}\n",
            b.max_universe, b.max_bound, b.random_trials, b.seed
        ));
        for r in &self.results {
            out.push_str(&format!(
                "CLAIM {} {} checked={}",
                r.id, r.status, r.instances_checked
            ));
            if let Some(cex) = &r.counterexample {
                out.push_str(&format!(" counterexample: {cex}"));
            }
            out.push('\n');
        }
        for r in &self.results {
            if let Some(note) = r.note {
                out.push_str(&format!("NOTE {}: {note}\n", r.id));
            }
        }
        for note in &self.notes {
            out.push_str(&format!("NOTE {note}\n"));
        }
        out.push_str(&format!(
            "SUMMARY claims={} holds={} violated={} conditional={}\n",
            self.results.len(),
            self.count(ClaimStatus::Holds),
            self.count(ClaimStatus::Violated),
            self.count(ClaimStatus::Conditional)
        ));
        out
    }

    /// Key-value rendering: one block per claim separated by blank lines.
    pub fn render_kv(&self) -> String {
        let mut out = String::new();
        let b = &self.bounds;
        out.push_str(&format!(
            "max_universe={}\nmax_bound={}\ntrials={}\nseed={}\n",
            b.max_universe, b.max_bound, b.random_trials, b.seed
        ));
        for r in &self.results {
            out.push_str(&format!(
                "\nclaim={}\nstatus={}\nchecked={}\n",
                r.id, r.status, r.instances_checked
            ));
            if let Some(cex) = &r.counterexample {
                out.push_str(&format!("counterexample={cex}\n"));
            }
            if let Some(note) = r.note {
                out.push_str(&format!("note={note}\n"));
            }
        }
        out.push('\n');
        for note in &self.notes {
            out.push_str(&format!("note={note}\n"));
        }
        out.push_str(&format!(
            "claims={}\nholds={}\nviolated={}\nconditional={}\n",
            self.results.len(),
            self.count(ClaimStatus::Holds),
            self.count(ClaimStatus::Violated),
            self.count(ClaimStatus::Conditional)
        ));
        out
    }
}

/// Audit a single claim by id.
pub fn run_claim(id: &str, bounds: &AuditBounds) -> Result<ClaimResult> {
    claims::run_one(id, bounds)
}

/// Audit the whole catalog. Claims are independent and evaluated in
/// parallel; the report keeps catalog order.
pub fn run_all(bounds: &AuditBounds) -> AuditReport {
    claims::run_catalog(bounds, None).expect("full catalog has no unknown ids")
}

/// Audit a subset of the catalog (ids in any order; the report keeps catalog
/// order and drops duplicates).
pub fn run_selected(ids: &[&str], bounds: &AuditBounds) -> Result<AuditReport> {
    claims::run_catalog(bounds, Some(ids))
}

/// Re-evaluate a claim's predicate on a stored instance. `Ok(false)` means
/// the instance still violates the claim.
pub fn replay(id: &str, instance: &Instance) -> Result<bool> {
    claims::replay_instance(id, instance)
}

/// Every multiset of a space, counts in lexicographic order (first universe
/// element most significant).
pub fn enumerate_multisets<S: Symbol>(
    space: &Space<S>,
) -> impl Iterator<Item = Multiset<S>> + '_ {
    let mut next: Option<Vec<u32>> = Some(vec![0; space.len()]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let result =
            Multiset::from_counts(space, current.clone()).expect("odometer stays within bounds");
        let mut counts = current;
        for slot in counts.iter_mut().rev() {
            if *slot < space.bound() {
                *slot += 1;
                next = Some(counts);
                return Some(result);
            }
            *slot = 0;
        }
        // All digits wrapped: that was the last multiset. Empty universes
        // have a single member and land here immediately.
        Some(result)
    })
}
