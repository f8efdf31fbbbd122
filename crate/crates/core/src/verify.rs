//! Windowed verification sweeps. Each theorem id names one statement that
//! is checked instance by instance over a window of sizes: labeled graphs
//! exhaustively through n = 5, seeded samples beyond, and full cover or
//! subset enumerations inside each graph. Every instance produces a flat
//! record carrying the data needed to rebuild it (edge mask, subset mask).

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{
    full_suspension_betti_predict, hochster_betti_table_limited, homological_invariants_limited,
};
use crate::complex::{SimplicialComplex, DEFAULT_FACE_LIMIT};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::indpoly::{
    a_invariant, hilbert_full_suspension_check, independence_polynomial,
    multiplicity_at_minus_one, FamilyKind, IntPolynomial,
};
use crate::morse::{greedy_acyclic_matching, wide_spokes_critical_cells};
use crate::suspension::{cover_profile, edge_ideal, extremal_sets, MonomialIdeal};

/// Exhaustive enumeration of labeled graphs stops here; larger sizes use
/// seeded edge-mask samples.
pub const EXHAUSTIVE_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    FullSuspension,
    CoverSuspension,
    AinvCover,
    WideSpokes,
    CycleSuspension,
    PathSuspension,
    InclusionInjectivity,
    CriticalHomology,
    ColonIdentity,
    EllBounds,
    MorseConsistency,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::FullSuspension,
        TheoremId::CoverSuspension,
        TheoremId::AinvCover,
        TheoremId::WideSpokes,
        TheoremId::CycleSuspension,
        TheoremId::PathSuspension,
        TheoremId::InclusionInjectivity,
        TheoremId::CriticalHomology,
        TheoremId::ColonIdentity,
        TheoremId::EllBounds,
        TheoremId::MorseConsistency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::FullSuspension => "full-suspension",
            TheoremId::CoverSuspension => "cover-suspension",
            TheoremId::AinvCover => "ainv-cover",
            TheoremId::WideSpokes => "wide-spokes",
            TheoremId::CycleSuspension => "cycle-suspension",
            TheoremId::PathSuspension => "path-suspension",
            TheoremId::InclusionInjectivity => "inclusion-injectivity",
            TheoremId::CriticalHomology => "critical-homology",
            TheoremId::ColonIdentity => "colon-identity",
            TheoremId::EllBounds => "ell-bounds",
            TheoremId::MorseConsistency => "morse-consistency",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem { id: s.to_string() })
    }

    /// Whether the instance population is all graphs of each size (sampled
    /// past the exhaustive range) rather than one family member per size.
    pub fn samples_graphs(self) -> bool {
        matches!(
            self,
            TheoremId::FullSuspension
                | TheoremId::CoverSuspension
                | TheoremId::AinvCover
                | TheoremId::ColonIdentity
                | TheoremId::MorseConsistency
        )
    }

    /// Window the statement is checked on when the caller does not pick one.
    pub fn default_window(self) -> (usize, usize) {
        match self {
            TheoremId::FullSuspension
            | TheoremId::CoverSuspension
            | TheoremId::AinvCover
            | TheoremId::ColonIdentity => (2, 5),
            TheoremId::WideSpokes
            | TheoremId::CycleSuspension
            | TheoremId::InclusionInjectivity
            | TheoremId::CriticalHomology => (3, 9),
            TheoremId::PathSuspension => (3, 10),
            TheoremId::EllBounds => (3, 15),
            TheoremId::MorseConsistency => (2, 6),
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            TheoremId::FullSuspension => {
                "Betti table, regularity, pdim, and Hilbert data under suspension over all vertices"
            }
            TheoremId::CoverSuspension => {
                "regularity, pdim, and the apex colon ideal under suspension over minimal vertex covers"
            }
            TheoremId::AinvCover => {
                "multiplicity of -1 in the independence polynomial under vertex-cover suspension"
            }
            TheoremId::WideSpokes => {
                "regularity of cycle suspensions over the three sparse spoke sets (n divisible by 3)"
            }
            TheoremId::CycleSuspension => {
                "regularity, pdim, and a-invariant of cycle suspensions over maximal independent sets"
            }
            TheoremId::PathSuspension => {
                "regularity, pdim, and a-invariant of path suspensions, exceptional case included"
            }
            TheoremId::InclusionInjectivity => {
                "rank of the homology map induced by the matching subcomplex of a cycle complex"
            }
            TheoremId::CriticalHomology => {
                "critical-degree homology of cycle and perfect-matching independence complexes"
            }
            TheoremId::ColonIdentity => {
                "colon and sum of the suspension edge ideal at the apex, over arbitrary subsets"
            }
            TheoremId::EllBounds => {
                "gap statistics and size bounds for maximal independent sets in paths"
            }
            TheoremId::MorseConsistency => {
                "greedy discrete Morse data agrees with simplicial homology and survives restriction"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyParams {
    pub n_lo: usize,
    pub n_hi: usize,
    /// Edge-mask samples per size beyond the exhaustive range.
    pub samples: usize,
    pub seed: u64,
    pub field: Field,
    pub face_limit: usize,
}

impl VerifyParams {
    pub fn for_theorem(id: TheoremId) -> VerifyParams {
        let (n_lo, n_hi) = id.default_window();
        VerifyParams {
            n_lo,
            n_hi,
            samples: 16,
            seed: 0,
            field: Field::Rational,
            face_limit: DEFAULT_FACE_LIMIT,
        }
    }

    pub fn with_window(mut self, n_lo: usize, n_hi: usize) -> VerifyParams {
        self.n_lo = n_lo;
        self.n_hi = n_hi;
        self
    }
}

/// One checked instance. `edge_mask` rebuilds the graph through
/// `Graph::from_edge_mask`; `subset_mask` is the vertex subset involved,
/// when there is one.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub theorem: String,
    pub instance: String,
    pub n: usize,
    pub edge_mask: Option<u64>,
    pub subset_mask: Option<u32>,
    pub expected: String,
    pub computed: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: VerifyParams,
    pub records: Vec<InstanceRecord>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.records.iter().all(|r| r.holds)
    }

    pub fn failures(&self) -> Vec<&InstanceRecord> {
        self.records.iter().filter(|r| !r.holds).collect()
    }

    /// One JSON object per line, one line per record.
    pub fn to_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r)?);
            out.push('\n');
        }
        Ok(out)
    }

    pub fn summary(&self) -> String {
        let held = self.records.iter().filter(|r| r.holds).count();
        let samples_graphs = TheoremId::parse(&self.theorem)
            .map(TheoremId::samples_graphs)
            .unwrap_or(false);
        let sampled = if samples_graphs && self.params.n_hi > EXHAUSTIVE_MAX_N {
            format!(", sampled beyond n = {EXHAUSTIVE_MAX_N}")
        } else {
            String::new()
        };
        format!(
            "{}: {}/{} instances hold (n = {}..{}{})",
            self.theorem,
            held,
            self.records.len(),
            self.params.n_lo,
            self.params.n_hi,
            sampled
        )
    }
}

pub fn verify_theorem(id: TheoremId, params: &VerifyParams) -> Result<VerificationReport> {
    let records = match id {
        TheoremId::FullSuspension => check_full_suspension(params),
        TheoremId::CoverSuspension => check_cover_suspension(params),
        TheoremId::AinvCover => check_ainv_cover(params),
        TheoremId::WideSpokes => check_wide_spokes(params),
        TheoremId::CycleSuspension => check_cycle_suspension(params),
        TheoremId::PathSuspension => check_path_suspension(params),
        TheoremId::InclusionInjectivity => check_inclusion_injectivity(params),
        TheoremId::CriticalHomology => check_critical_homology(params),
        TheoremId::ColonIdentity => check_colon_identity(params),
        TheoremId::EllBounds => check_ell_bounds(params),
        TheoremId::MorseConsistency => check_morse_consistency(params),
    }?;
    Ok(VerificationReport {
        theorem: id.as_str().to_string(),
        params: params.clone(),
        records,
    })
}

fn window_checked(params: &VerifyParams) -> Result<std::ops::RangeInclusive<usize>> {
    if params.n_lo > params.n_hi {
        return Err(Error::EmptyRange {
            lo: params.n_lo,
            hi: params.n_hi,
        });
    }
    // Suspension adds one vertex on top of the window.
    if params.n_hi + 1 > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n: params.n_hi + 1,
            limit: MAX_VERTICES,
        });
    }
    Ok(params.n_lo..=params.n_hi)
}

fn graphs_on(n: usize, params: &VerifyParams) -> Result<Vec<(u64, Graph)>> {
    let count = Graph::edge_mask_count(n);
    let masks: Vec<u64> = if n <= EXHAUSTIVE_MAX_N {
        (0..count).collect()
    } else {
        let mut rng =
            ChaCha8Rng::seed_from_u64(params.seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut picked = BTreeSet::new();
        let mut draws = 0usize;
        while picked.len() < params.samples && draws < params.samples.saturating_mul(20) {
            picked.insert(rng.gen_range(0..count));
            draws += 1;
        }
        picked.into_iter().collect()
    };
    masks
        .into_iter()
        .map(|m| Ok((m, Graph::from_edge_mask(n, m)?)))
        .collect()
}

/// Members as 1-based indices: {1,4,7}.
fn subset_str(c: VertexSet) -> String {
    let inner: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "mismatch"
    }
}

fn check_full_suspension(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        let graphs = graphs_on(n, params)?;
        let per: Result<Vec<Vec<InstanceRecord>>> = graphs
            .par_iter()
            .map(|(mask, g)| {
                let mask = *mask;
                if g.has_isolated_vertex() {
                    return Ok(Vec::new());
                }
                let base = hochster_betti_table_limited(g, params.field, params.face_limit)?;
                let ghat = g.suspend(g.vertices())?;
                let direct = hochster_betti_table_limited(&ghat, params.field, params.face_limit)?;
                let predicted = full_suspension_betti_predict(g, params.field)?;
                let table_ok = predicted == direct;
                let reg_ok = direct.reg() == base.reg();
                let pdim_ok = direct.pdim() == n;
                let hilbert = hilbert_full_suspension_check(g)?;
                let holds = table_ok && reg_ok && pdim_ok && hilbert.holds();
                Ok(vec![InstanceRecord {
                    theorem: TheoremId::FullSuspension.as_str().into(),
                    instance: format!("mask={mask:#x} suspended over all {n} vertices"),
                    n,
                    edge_mask: Some(mask),
                    subset_mask: Some(g.vertices().0),
                    expected: format!(
                        "table split from base, reg {}, pdim {}, Hilbert identity",
                        base.reg(),
                        n
                    ),
                    computed: format!(
                        "table {}, reg {}, pdim {}, Hilbert {}",
                        mark(table_ok),
                        direct.reg(),
                        direct.pdim(),
                        mark(hilbert.holds())
                    ),
                    holds,
                }])
            })
            .collect();
        for batch in per? {
            records.extend(batch);
        }
    }
    Ok(records)
}

fn check_cover_suspension(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        let graphs = graphs_on(n, params)?;
        let per: Result<Vec<Vec<InstanceRecord>>> = graphs
            .par_iter()
            .map(|(mask, g)| {
                let mask = *mask;
                if g.has_isolated_vertex() {
                    return Ok(Vec::new());
                }
                let (reg0, pdim0) =
                    homological_invariants_limited(g, params.field, params.face_limit)?;
                let mut out = Vec::new();
                for c in g.minimal_vertex_covers()? {
                    let ghat = g.suspend(c)?;
                    let (reg1, pdim1) =
                        homological_invariants_limited(&ghat, params.field, params.face_limit)?;
                    let colon = edge_ideal(&ghat).colon_var(ghat.apex_index())?;
                    let want = MonomialIdeal::new(
                        ghat.labels().to_vec(),
                        c.iter().map(VertexSet::singleton),
                    )?;
                    let colon_ok = colon == want;
                    let holds = reg1 == reg0 && pdim1 == pdim0 + 1 && colon_ok;
                    out.push(InstanceRecord {
                        theorem: TheoremId::CoverSuspension.as_str().into(),
                        instance: format!("mask={mask:#x} cover={}", subset_str(c)),
                        n,
                        edge_mask: Some(mask),
                        subset_mask: Some(c.0),
                        expected: format!(
                            "reg {reg0}, pdim {}, colon = cover variables",
                            pdim0 + 1
                        ),
                        computed: format!(
                            "reg {reg1}, pdim {pdim1}, colon {}",
                            mark(colon_ok)
                        ),
                        holds,
                    });
                }
                Ok(out)
            })
            .collect();
        for batch in per? {
            records.extend(batch);
        }
    }
    Ok(records)
}

fn check_ainv_cover(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        let graphs = graphs_on(n, params)?;
        let per: Result<Vec<Vec<InstanceRecord>>> = graphs
            .par_iter()
            .map(|(mask, g)| {
                let mask = *mask;
                if g.has_isolated_vertex() {
                    return Ok(Vec::new());
                }
                let p = independence_polynomial(g);
                let m = multiplicity_at_minus_one(&p)?;
                let q0 = p
                    .div_exact(&IntPolynomial::linear(1, 1).pow(m as u32))?
                    .eval(-1);
                let mut out = Vec::new();
                for c in g.minimal_vertex_covers()? {
                    let u = n - c.len();
                    let phat = independence_polynomial(&g.suspend(c)?);
                    let mhat = multiplicity_at_minus_one(&phat)?;
                    let (expected, tri_ok) = match m.cmp(&u) {
                        std::cmp::Ordering::Less => {
                            (format!("multiplicity stays {m} (m < u = {u})"), mhat == m)
                        }
                        std::cmp::Ordering::Greater => {
                            (format!("multiplicity drops to u = {u} (m = {m})"), mhat == u)
                        }
                        std::cmp::Ordering::Equal => (
                            format!("multiplicity >= u = {u}, strict iff q(0) = 1 (q(0) = {q0})"),
                            mhat >= u,
                        ),
                    };
                    let iff_ok = (mhat > u) == (m == u && q0 == 1);
                    let holds = tri_ok && iff_ok;
                    out.push(InstanceRecord {
                        theorem: TheoremId::AinvCover.as_str().into(),
                        instance: format!("mask={mask:#x} cover={}", subset_str(c)),
                        n,
                        edge_mask: Some(mask),
                        subset_mask: Some(c.0),
                        expected,
                        computed: format!("multiplicity {mhat}, strict-excess iff {}", mark(iff_ok)),
                        holds,
                    });
                }
                Ok(out)
            })
            .collect();
        for batch in per? {
            records.extend(batch);
        }
    }
    Ok(records)
}

fn check_wide_spokes(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        if n < 3 || n % 3 != 0 {
            continue;
        }
        let k = n / 3;
        let g = Graph::cycle(n)?;
        let (reg0, _) = homological_invariants_limited(&g, params.field, params.face_limit)?;
        for (i, c) in extremal_sets(FamilyKind::Cycle, n)?.into_iter().enumerate() {
            let ghat = g.suspend(c)?;
            let (reg1, _) = homological_invariants_limited(&ghat, params.field, params.face_limit)?;
            let holds = reg0 == k && reg1 == reg0;
            records.push(InstanceRecord {
                theorem: TheoremId::WideSpokes.as_str().into(),
                instance: format!("C{n} spokes {}", subset_str(c)),
                n,
                edge_mask: None,
                subset_mask: Some(c.0),
                expected: format!("reg {k} before and after (shift {})", i + 1),
                computed: format!("reg {reg0} -> {reg1}"),
                holds,
            });
        }
    }
    Ok(records)
}

fn check_cycle_suspension(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        let g = Graph::cycle(n)?;
        let (reg0, pdim0) = homological_invariants_limited(&g, params.field, params.face_limit)?;
        let a0 = a_invariant(&g)?.a;
        let covers = g.maximal_independent_sets()?;
        let per: Result<Vec<InstanceRecord>> = covers
            .par_iter()
            .map(|&c| {
                let ghat = g.suspend(c)?;
                let (reg1, pdim1) =
                    homological_invariants_limited(&ghat, params.field, params.face_limit)?;
                let a1 = a_invariant(&ghat)?.a;
                let holds = reg1 == reg0 && pdim1 == pdim0 + 1 && a0 == 0 && a1 == 0;
                Ok(InstanceRecord {
                    theorem: TheoremId::CycleSuspension.as_str().into(),
                    instance: format!("C{n} C={}", subset_str(c)),
                    n,
                    edge_mask: None,
                    subset_mask: Some(c.0),
                    expected: format!("reg {reg0}, pdim {}, a-invariant 0 on both sides", pdim0 + 1),
                    computed: format!("reg {reg1}, pdim {pdim1}, a {a0} -> {a1}"),
                    holds,
                })
            })
            .collect();
        records.extend(per?);
    }
    Ok(records)
}

fn check_path_suspension(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        let g = Graph::path(n)?;
        let (reg0, pdim0) = homological_invariants_limited(&g, params.field, params.face_limit)?;
        let a0 = a_invariant(&g)?.a;
        let extremal = extremal_sets(FamilyKind::Path, n)?[0];
        let covers = g.maximal_independent_sets()?;
        let per: Result<Vec<InstanceRecord>> = covers
            .par_iter()
            .map(|&c| {
                let exceptional = n % 3 == 1 && c == extremal;
                let ghat = g.suspend(c)?;
                let (reg1, pdim1) =
                    homological_invariants_limited(&ghat, params.field, params.face_limit)?;
                let a1 = a_invariant(&ghat)?.a;
                let (want_reg, want_a) = if exceptional {
                    (reg0 + 1, a0 + 1)
                } else {
                    (reg0, a0)
                };
                let holds = pdim1 == pdim0 + 1 && reg1 == want_reg && a1 == want_a;
                Ok(InstanceRecord {
                    theorem: TheoremId::PathSuspension.as_str().into(),
                    instance: format!(
                        "P{n} C={} {}",
                        subset_str(c),
                        if exceptional { "exceptional" } else { "generic" }
                    ),
                    n,
                    edge_mask: None,
                    subset_mask: Some(c.0),
                    expected: format!(
                        "reg {want_reg}, pdim {}, a-invariant {want_a}",
                        pdim0 + 1
                    ),
                    computed: format!("reg {reg1}, pdim {pdim1}, a-invariant {a1}"),
                    holds,
                })
            })
            .collect();
        records.extend(per?);
    }
    Ok(records)
}

fn check_inclusion_injectivity(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        if n < 3 || n % 3 != 0 {
            continue;
        }
        let k = n / 3;
        let r = k as i32 - 1;
        let g = Graph::cycle(n)?;
        let delta = SimplicialComplex::independence_complex(&g);
        let c1 = extremal_sets(FamilyKind::Cycle, n)?[0];
        let sub = delta.induced(g.vertices().minus(c1));
        let sub_h = sub.reduced_homology_limited(params.field, params.face_limit)?;
        let rank = delta.induced_map_rank(&sub, r, params.field)?;
        let holds = sub_h.dim(r) == 1 && rank == 1;
        records.push(InstanceRecord {
            theorem: TheoremId::InclusionInjectivity.as_str().into(),
            instance: format!("C{n} minus spokes {}", subset_str(c1)),
            n,
            edge_mask: None,
            subset_mask: Some(c1.0),
            expected: format!("sphere class in degree {r} maps in with rank 1"),
            computed: format!("dim {} at degree {r}, induced rank {rank}", sub_h.dim(r)),
            holds,
        });
    }
    Ok(records)
}

fn check_critical_homology(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        if n < 3 || n % 3 != 0 {
            continue;
        }
        let k = n / 3;
        let r = k as i32 - 1;

        let wedge = SimplicialComplex::independence_complex(&Graph::cycle(n)?);
        let hw = wedge.reduced_homology_limited(params.field, params.face_limit)?;
        let (sigma1, sigma2) = wide_spokes_critical_cells(k);
        let cells_ok = wedge.is_face(sigma1)
            && wedge.is_face(sigma2)
            && sigma1.len() == k
            && sigma2.len() == k;
        let wedge_ok = hw.nonzero() == vec![(r, 2)] && cells_ok;
        records.push(InstanceRecord {
            theorem: TheoremId::CriticalHomology.as_str().into(),
            instance: format!("C{n} wedge of two {r}-spheres"),
            n,
            edge_mask: None,
            subset_mask: None,
            expected: format!("homology (degree {r}, dim 2) only; both named cells are {r}-faces"),
            computed: format!("nonzero {:?}, cells {}", hw.nonzero(), mark(cells_ok)),
            holds: wedge_ok,
        });

        let edges: Vec<(usize, usize)> = (0..k).map(|i| (2 * i + 1, 2 * i + 2)).collect();
        let matching = Graph::build(2 * k, &edges)?;
        let hs = SimplicialComplex::independence_complex(&matching)
            .reduced_homology_limited(params.field, params.face_limit)?;
        let sphere_ok = hs.nonzero() == vec![(r, 1)];
        records.push(InstanceRecord {
            theorem: TheoremId::CriticalHomology.as_str().into(),
            instance: format!("{k} disjoint edges, one {r}-sphere"),
            n,
            edge_mask: None,
            subset_mask: None,
            expected: format!("homology (degree {r}, dim 1) only"),
            computed: format!("nonzero {:?}", hs.nonzero()),
            holds: sphere_ok,
        });
    }
    Ok(records)
}

fn check_colon_identity(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        let graphs = graphs_on(n, params)?;
        let per: Result<Vec<Vec<InstanceRecord>>> = graphs
            .par_iter()
            .map(|(mask, g)| {
                let mask = *mask;
                let mut out = Vec::new();
                for cmask in 0..(1u32 << n) {
                    let c = VertexSet(cmask);
                    let ghat = g.suspend(c)?;
                    let apex = ghat.apex_index();
                    let ideal = edge_ideal(&ghat);

                    let mut colon_gens: Vec<VertexSet> = g
                        .edges()
                        .into_iter()
                        .filter(|&(u, v)| !c.contains(u) && !c.contains(v))
                        .map(|(u, v)| VertexSet::from_indices(&[u, v]))
                        .collect();
                    colon_gens.extend(c.iter().map(VertexSet::singleton));
                    let want_colon = MonomialIdeal::new(ghat.labels().to_vec(), colon_gens)?;
                    let colon_ok = ideal.colon_var(apex)? == want_colon;

                    let mut sum_gens: Vec<VertexSet> = g
                        .edges()
                        .into_iter()
                        .map(|(u, v)| VertexSet::from_indices(&[u, v]))
                        .collect();
                    sum_gens.push(VertexSet::singleton(apex));
                    let want_sum = MonomialIdeal::new(ghat.labels().to_vec(), sum_gens)?;
                    let sum_ok = ideal.plus_var(apex)? == want_sum;

                    let holds = colon_ok && sum_ok;
                    out.push(InstanceRecord {
                        theorem: TheoremId::ColonIdentity.as_str().into(),
                        instance: format!("mask={mask:#x} C={}", subset_str(c)),
                        n,
                        edge_mask: Some(mask),
                        subset_mask: Some(cmask),
                        expected: "colon = outside edges + C variables; sum = edges + apex".into(),
                        computed: format!("colon {}, sum {}", mark(colon_ok), mark(sum_ok)),
                        holds,
                    });
                }
                Ok(out)
            })
            .collect();
        for batch in per? {
            records.extend(batch);
        }
    }
    Ok(records)
}

fn check_ell_bounds(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        let g = Graph::path(n)?;
        let extremal = extremal_sets(FamilyKind::Path, n)?[0];
        for c in g.maximal_independent_sets()? {
            let pr = cover_profile(FamilyKind::Path, n, c)?;
            let ids_ok = pr.ell == pr.q
                && pr.e == pr.p + pr.delta
                && pr.t == pr.p + pr.q + 1
                && n == pr.delta + 1 + 2 * pr.p + 3 * pr.q
                && (n + 1 + pr.q - pr.delta) % 2 == 0
                && pr.ell + pr.t == (n + 1 - pr.delta + pr.q) / 2;
            let ell_ok = pr.ell <= (n - 1) / 3;
            let sum_ok = pr.ell + pr.t <= (2 * n + 1) / 3;
            let sharp_ok = if n % 3 == 1 && c != extremal {
                pr.ell + pr.t <= 2 * ((n - 1) / 3)
            } else {
                true
            };
            let holds = ids_ok && ell_ok && sum_ok && sharp_ok;
            records.push(InstanceRecord {
                theorem: TheoremId::EllBounds.as_str().into(),
                instance: format!("P{n} C={}", subset_str(c)),
                n,
                edge_mask: None,
                subset_mask: Some(c.0),
                expected: format!(
                    "ell <= {}, ell+t <= {}, gap identities",
                    (n - 1) / 3,
                    (2 * n + 1) / 3
                ),
                computed: format!(
                    "ell {}, t {}, e {}, delta {}, p {}, q {}, identities {}",
                    pr.ell,
                    pr.t,
                    pr.e,
                    pr.delta,
                    pr.p,
                    pr.q,
                    mark(ids_ok)
                ),
                holds,
            });
        }
    }
    Ok(records)
}

fn check_morse_consistency(params: &VerifyParams) -> Result<Vec<InstanceRecord>> {
    let mut records = Vec::new();
    for n in window_checked(params)? {
        let graphs = graphs_on(n, params)?;
        let per: Result<Vec<Vec<InstanceRecord>>> = graphs
            .par_iter()
            .map(|(mask, g)| {
                let mask = *mask;
                let delta = SimplicialComplex::independence_complex(g);
                let h = delta.reduced_homology_limited(params.field, params.face_limit)?;

                let lex = greedy_acyclic_matching(&delta, None)?;
                let lex_ok = lex.is_acyclic()
                    && lex.morse_homology(params.field)?.dims_equal(&h)
                    && lex.inequality_report(params.field)?.holds();

                let seed = params.seed
                    ^ mask.wrapping_mul(0xD1B5_4A32_D192_ED03)
                    ^ (n as u64);
                let seeded = greedy_acyclic_matching(&delta, Some(seed))?;
                let seeded_ok = seeded.is_acyclic()
                    && seeded.morse_homology(params.field)?.dims_equal(&h)
                    && seeded.inequality_report(params.field)?.holds();

                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let w = VertexSet(rng.gen_range(1u32..(1u32 << n)));
                let sub = delta.induced(w);
                let restricted = seeded.restrict(&sub)?;
                let restr_ok = restricted.is_acyclic()
                    && restricted
                        .morse_homology(params.field)?
                        .dims_equal(&sub.reduced_homology_limited(params.field, params.face_limit)?);

                let holds = lex_ok && seeded_ok && restr_ok;
                Ok(vec![InstanceRecord {
                    theorem: TheoremId::MorseConsistency.as_str().into(),
                    instance: format!("mask={mask:#x} restricted to {}", subset_str(w)),
                    n,
                    edge_mask: Some(mask),
                    subset_mask: Some(w.0),
                    expected: "acyclic matchings, Morse homology = simplicial, inequalities".into(),
                    computed: format!(
                        "lex {}, seeded {}, restriction {}",
                        mark(lex_ok),
                        mark(seeded_ok),
                        mark(restr_ok)
                    ),
                    holds,
                }])
            })
            .collect();
        for batch in per? {
            records.extend(batch);
        }
    }
    Ok(records)
}
