//! Suspension machinery: squarefree monomial ideals with the colon/plus
//! operations that decompose I(G(C)) along z, gap profiles of maximal
//! independent sets in paths and cycles, the extremal suspension sets, and
//! the independence-polynomial identities satisfied by suspended graphs.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::indpoly::{family_poly, independence_polynomial, FamilyKind, IntPolynomial};

/// Squarefree monomial ideal, stored as the antichain of minimal generator
/// supports sorted by (degree, mask). A generator with empty support is the
/// unit ideal and absorbs every other generator under minimalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialIdeal {
    labels: Vec<String>,
    gens: Vec<VertexSet>,
}

fn minimalize(mut gens: Vec<VertexSet>) -> Vec<VertexSet> {
    gens.sort_by_key(|g| (g.len(), g.0));
    gens.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    // Any strict divisor has fewer elements, so it already sits in `kept`.
    for g in gens {
        if !kept.iter().any(|h| h.is_subset_of(g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(
        labels: Vec<String>,
        gens: impl IntoIterator<Item = VertexSet>,
    ) -> Result<MonomialIdeal> {
        let n = labels.len();
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        let mut supports = Vec::new();
        for g in gens {
            if (g.0 as u64) >> n.min(32) != 0 {
                let index = g.iter().last().unwrap_or(0);
                return Err(Error::VertexOutOfRange { index, n });
            }
            supports.push(g);
        }
        Ok(MonomialIdeal {
            labels,
            gens: minimalize(supports),
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ambient_size(&self) -> usize {
        self.labels.len()
    }

    /// Minimal generators, sorted by (degree, mask).
    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel {
                label: label.to_string(),
            })
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_empty())
    }

    fn check_var(&self, v: usize) -> Result<()> {
        if v >= self.labels.len() {
            return Err(Error::VertexOutOfRange {
                index: v,
                n: self.labels.len(),
            });
        }
        Ok(())
    }

    /// (I : x_v), computed generator-wise: squarefree colon by a variable
    /// strips v from each support, then minimalizes.
    pub fn colon_var(&self, v: usize) -> Result<MonomialIdeal> {
        self.check_var(v)?;
        Ok(MonomialIdeal {
            labels: self.labels.clone(),
            gens: minimalize(self.gens.iter().map(|g| g.without(v)).collect()),
        })
    }

    /// (I, x_v): adjoin the variable as a generator and minimalize.
    pub fn plus_var(&self, v: usize) -> Result<MonomialIdeal> {
        self.check_var(v)?;
        let mut gens = self.gens.clone();
        gens.push(VertexSet::singleton(v));
        Ok(MonomialIdeal {
            labels: self.labels.clone(),
            gens: minimalize(gens),
        })
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| {
                if g.is_empty() {
                    "1".to_string()
                } else {
                    g.iter()
                        .map(|i| self.labels[i].as_str())
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

/// I(G): one degree-2 generator per edge.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| VertexSet::from_indices(&[u, v]));
    MonomialIdeal::new(g.labels().to_vec(), gens).expect("graph labels and edges are valid")
}

/// Gap structure of a maximal independent set C in a path or cycle.
///
/// `ell` and `e` are counted directly on H, the induced subgraph on the
/// complement of C (H is what survives deleting the closed neighborhood of
/// the suspension apex). `delta`, `p`, `q` come from the 0/1 encoding of C:
/// delta counts endpoint zeros, p counts gaps `1 0 1` between consecutive
/// members, q counts gaps `1 0 0 1`. Cycles have delta = 0 and wrap-around
/// gaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverProfile {
    pub kind: FamilyKind,
    pub n: usize,
    pub c: VertexSet,
    pub t: usize,
    pub ell: usize,
    pub e: usize,
    pub delta: usize,
    pub p: usize,
    pub q: usize,
}

pub fn cover_profile(kind: FamilyKind, n: usize, c: VertexSet) -> Result<CoverProfile> {
    let g = match kind {
        FamilyKind::Path => Graph::path(n)?,
        FamilyKind::Cycle => Graph::cycle(n)?,
    };
    if !g.is_independent(c) {
        return Err(Error::NotIndependent);
    }
    if !g.is_maximal_independent(c) {
        return Err(Error::NotMaximalIndependent);
    }
    let t = c.len();
    let h = g.induced(g.vertices().minus(c));
    let ell = h.edge_count();
    let e = (0..h.n()).filter(|&v| h.degree(v) == 0).count();
    let ones: Vec<usize> = c.iter().collect();
    let (delta, p, q) = match kind {
        FamilyKind::Path => {
            // Maximality keeps endpoint runs of zeros at length <= 1 and
            // interior gaps at 2 or 3.
            let delta = ones[0] + (n - 1 - ones[ones.len() - 1]);
            let mut p = 0;
            let mut q = 0;
            for w in ones.windows(2) {
                match w[1] - w[0] {
                    2 => p += 1,
                    3 => q += 1,
                    gap => unreachable!("gap {gap} in a maximal independent set of a path"),
                }
            }
            (delta, p, q)
        }
        FamilyKind::Cycle => {
            let mut p = 0;
            let mut q = 0;
            for i in 0..ones.len() {
                let gap = if i + 1 < ones.len() {
                    ones[i + 1] - ones[i]
                } else {
                    n - ones[i] + ones[0]
                };
                match gap {
                    2 => p += 1,
                    3 => q += 1,
                    gap => unreachable!("cyclic gap {gap} in a maximal independent set of a cycle"),
                }
            }
            (0, p, q)
        }
    };
    Ok(CoverProfile {
        kind,
        n,
        c,
        t,
        ell,
        e,
        delta,
        p,
        q,
    })
}

/// The maximal independent sets achieving ell = floor((n-1)/3) in a path,
/// or the three wide-spokes sets of a cycle with n divisible by 3.
///
/// Paths return one set per n: {x1, x4, ..., x_{3k-2}, x_{3k}} when n = 3k,
/// {x1, x4, ..., x_{3k+1}} when n = 3k+1 (the unique achiever) or n = 3k+2.
/// Cycles return {x1, x4, ...}, {x2, x5, ...}, {x3, x6, ...}.
pub fn extremal_sets(kind: FamilyKind, n: usize) -> Result<Vec<VertexSet>> {
    match kind {
        FamilyKind::Path => {
            if n < 1 {
                return Err(Error::FamilyRange {
                    family: "path".into(),
                    min: 1,
                    n,
                });
            }
            let mut c = VertexSet::EMPTY;
            let mut i = 0;
            while i < n {
                c = c.with(i);
                i += 3;
            }
            if n % 3 == 0 {
                // n = 3k gets the tail member x_{3k} after x_{3k-2}.
                c = c.with(n - 1);
            }
            Ok(vec![c])
        }
        FamilyKind::Cycle => {
            if n < 3 {
                return Err(Error::FamilyRange {
                    family: "cycle".into(),
                    min: 3,
                    n,
                });
            }
            if n % 3 != 0 {
                return Err(Error::Unsupported(format!(
                    "wide-spokes sets need n divisible by 3, got {n}"
                )));
            }
            Ok((0..3)
                .map(|shift| {
                    let mut c = VertexSet::EMPTY;
                    let mut i = shift;
                    while i < n {
                        c = c.with(i);
                        i += 3;
                    }
                    c
                })
                .collect())
        }
    }
}

/// Which independence-polynomial identities hold for P of suspend(g, c).
///
/// The deletion-contraction split at the apex,
/// P_{G(C)} = P_G + x * P_{G - C - neighbors-of-apex}, holds for every C and
/// anchors the two named refinements: the vertex-cover form
/// P_{G(C)} = P_G + x (1+x)^u with u = |V \ C|, and the family form
/// P_{G(C)} = P_family + x (1+x)^e (1+2x)^ell for maximal independent C in a
/// path or cycle.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyIdentityReport {
    pub lhs: IntPolynomial,
    pub deletion_contraction_holds: bool,
    pub u_exponent: Option<usize>,
    pub u_identity_holds: Option<bool>,
    pub family: Option<FamilyKind>,
    pub profile: Option<CoverProfile>,
    pub family_identity_holds: Option<bool>,
}

impl PolyIdentityReport {
    pub fn holds(&self) -> bool {
        self.deletion_contraction_holds
            && self.u_identity_holds.unwrap_or(true)
            && self.family_identity_holds.unwrap_or(true)
    }
}

/// Structural family detection by edge set; labels are irrelevant.
fn detect_family(g: &Graph) -> Option<FamilyKind> {
    let n = g.n();
    for kind in [FamilyKind::Cycle, FamilyKind::Path] {
        let model = match kind {
            FamilyKind::Path => Graph::path(n),
            FamilyKind::Cycle => Graph::cycle(n),
        };
        if let Ok(model) = model {
            if model.edges() == g.edges() {
                return Some(kind);
            }
        }
    }
    None
}

pub fn suspension_poly_identity_check(g: &Graph, c: VertexSet) -> Result<PolyIdentityReport> {
    let suspended = g.suspend(c)?;
    let lhs = independence_polynomial(&suspended);
    let base = independence_polynomial(g);
    let rest = g.induced(g.vertices().minus(c));
    let dc_rhs = base.add(&independence_polynomial(&rest).shift(1));
    let deletion_contraction_holds = lhs == dc_rhs;

    let (u_exponent, u_identity_holds) = if g.is_vertex_cover(c) {
        let u = g.n() - c.len();
        let rhs = base.add(&IntPolynomial::linear(1, 1).pow(u as u32).shift(1));
        (Some(u), Some(lhs == rhs))
    } else {
        (None, None)
    };

    let family = detect_family(g).filter(|_| g.is_maximal_independent(c));
    let (profile, family_identity_holds) = match family {
        Some(kind) => {
            let profile = cover_profile(kind, g.n(), c)?;
            let rhs = family_poly(kind, g.n())?.add(
                &IntPolynomial::linear(1, 1)
                    .pow(profile.e as u32)
                    .mul(&IntPolynomial::linear(1, 2).pow(profile.ell as u32))
                    .shift(1),
            );
            (Some(profile), Some(lhs == rhs))
        }
        None => (None, None),
    };

    if u_identity_holds.is_none() && family_identity_holds.is_none() {
        return Err(Error::Unsupported(
            "no named identity applies: the set is neither a vertex cover nor a maximal \
             independent set of a path or cycle"
                .into(),
        ));
    }

    Ok(PolyIdentityReport {
        lhs,
        deletion_contraction_holds,
        u_exponent,
        u_identity_holds,
        family,
        profile,
        family_identity_holds,
    })
}

/// The independent set used in the path projective-dimension argument:
/// {x1, x4, x7, ...} when x1 is in C, otherwise {x2, x5, x8, ...} plus x_n
/// when n = 1 mod 3. Always independent, meets C, and has ceil(n/3)
/// members. It dominates the C-suspension of the path, and is therefore a
/// maximal independent set there, except when x1 is in C and n = 0 mod 3:
/// then x_n can be left undominated, and a witness of this size need not
/// exist at all (P6 with C = {x1, x3, x6}).
pub fn dominating_witness(n: usize, c: VertexSet) -> VertexSet {
    let mut d = VertexSet::EMPTY;
    let start = if c.contains(0) { 0 } else { 1 };
    let mut i = start;
    while i < n {
        d = d.with(i);
        i += 3;
    }
    if start == 1 && n % 3 == 1 {
        d = d.with(n - 1);
    }
    d
}
