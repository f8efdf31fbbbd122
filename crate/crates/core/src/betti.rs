use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, DEFAULT_FACE_LIMIT};
use crate::error::Result;
use crate::field::Field;
use crate::graph::{Graph, VertexSet};

/// Graded Betti numbers β_{i,j} of R/I(G), from Hochster's formula.
/// Zero entries are not stored. For the zero ideal the table is just
/// β_{0,0} = 1, giving reg = pdim = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub n: usize,
    pub field: Field,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    fn add(&mut self, i: usize, j: usize, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as ((i, j), β) in lexicographic (i, j) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn reg(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .unwrap_or(0)
    }

    /// Σ_j β_{1,j}: the number of minimal generators, i.e. edges.
    pub fn first_syzygy_count(&self) -> u64 {
        self.entries
            .iter()
            .filter(|&(&(i, _), _)| i == 1)
            .map(|(_, &b)| b)
            .sum()
    }

    /// K-polynomial Σ_{i,j} (-1)^i β_{i,j} t^j as coefficients in t.
    pub fn k_polynomial(&self) -> crate::indpoly::IntPolynomial {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut coeffs = vec![0i128; top + 1];
        for (&(i, j), &b) in &self.entries {
            let signed = if i % 2 == 0 { b as i128 } else { -(b as i128) };
            coeffs[j] += signed;
        }
        crate::indpoly::IntPolynomial::new(coeffs)
    }

    /// JSON lines of `{"i":…,"j":…,"beta":…}` triples.
    pub fn to_json_triples(&self) -> String {
        let mut out = String::new();
        for (i, j, b) in self.entries() {
            out.push_str(&format!("{{\"i\":{i},\"j\":{j},\"beta\":{b}}}\n"));
        }
        out
    }

    /// Aligned text table in the Macaulay2 style: row r holds β_{i,i+r},
    /// column i, so reg is the last row label and pdim the last column.
    pub fn to_display_text(&self) -> String {
        let pdim = self.pdim();
        let reg = self.reg();
        let cell = |r: usize, i: usize| -> String {
            let b = self.get(i, i + r);
            if b == 0 {
                ".".to_string()
            } else {
                b.to_string()
            }
        };
        let mut widths = vec![1usize; pdim + 1];
        for (w, i) in widths.iter_mut().zip(0..) {
            for r in 0..=reg {
                *w = (*w).max(cell(r, i).len()).max(i.to_string().len());
            }
        }
        let label_w = reg.to_string().len();
        let mut out = String::new();
        out.push_str(&" ".repeat(label_w + 2));
        for (i, w) in widths.iter().enumerate() {
            out.push_str(&format!("{:>w$} ", i, w = w));
        }
        out.push('\n');
        for r in 0..=reg {
            out.push_str(&format!("{:>label_w$}: ", r));
            for (i, w) in widths.iter().enumerate() {
                out.push_str(&format!("{:>w$} ", cell(r, i), w = w));
            }
            out.push('\n');
        }
        out
    }
}

/// True if the independence complex of G restricted to W is a cone and
/// therefore acyclic: some vertex of W has no G-neighbor inside W.
/// The empty W does not qualify, so the β_{0,0} contribution survives.
fn cone_shortcut(g: &Graph, w: VertexSet) -> bool {
    g.has_isolated_vertex_in(w)
}

/// Hochster's formula: β_{i,j}(R/I(G)) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ(G)|_W).
/// Subsets run in parallel; the merge is pure addition so the result is
/// order-independent.
pub fn hochster_betti_table(g: &Graph, field: Field) -> Result<BettiTable> {
    hochster_betti_table_limited(g, field, DEFAULT_FACE_LIMIT)
}

pub fn hochster_betti_table_limited(
    g: &Graph,
    field: Field,
    face_limit: usize,
) -> Result<BettiTable> {
    let n = g.n();
    let delta = SimplicialComplex::independence_complex(g);
    let contributions: Result<Vec<(usize, usize, u64)>> = (0..1u64 << n)
        .into_par_iter()
        .map(|wmask| {
            let w = VertexSet(wmask as u32);
            let mut local = Vec::new();
            if !cone_shortcut(g, w) {
                let profile = delta.induced(w).reduced_homology_limited(field, face_limit)?;
                let j = w.len();
                for (r, d) in profile.nonzero() {
                    let i = (j as i64 - 1 - r as i64) as usize;
                    local.push((i, j, d as u64));
                }
            }
            Ok(local)
        })
        .try_reduce(Vec::new, |mut a, b| {
            a.extend(b);
            Ok(a)
        });
    let mut table = BettiTable {
        n,
        field,
        entries: BTreeMap::new(),
    };
    for (i, j, d) in contributions? {
        table.add(i, j, d);
    }
    Ok(table)
}

/// (reg, pdim) without per-entry bookkeeping:
/// reg = max 1 + r and pdim = max |W| - 1 - r over subsets W and degrees
/// r with H̃_r(Δ(G|_W)) nonzero. The zero ideal gives (0, 0).
pub fn homological_invariants(g: &Graph, field: Field) -> Result<(usize, usize)> {
    homological_invariants_limited(g, field, DEFAULT_FACE_LIMIT)
}

pub fn homological_invariants_limited(
    g: &Graph,
    field: Field,
    face_limit: usize,
) -> Result<(usize, usize)> {
    let n = g.n();
    let delta = SimplicialComplex::independence_complex(g);
    let per_subset: Result<(i64, i64)> = (0..1u64 << n)
        .into_par_iter()
        .map(|wmask| {
            let w = VertexSet(wmask as u32);
            let (mut reg, mut pdim) = (0i64, 0i64);
            if !cone_shortcut(g, w) {
                let profile = delta.induced(w).reduced_homology_limited(field, face_limit)?;
                for (r, _) in profile.nonzero() {
                    reg = reg.max(1 + r as i64);
                    pdim = pdim.max(w.len() as i64 - 1 - r as i64);
                }
            }
            Ok((reg, pdim))
        })
        .try_reduce(
            || (0, 0),
            |a, b| Ok((a.0.max(b.0), a.1.max(b.1))),
        );
    let (reg, pdim) = per_subset?;
    Ok((reg as usize, pdim as usize))
}

/// pdim R/I(G) >= bight I(G): the big height is the largest minimal
/// vertex cover, and the bound must hold for every graph.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BightReport {
    pub pdim: usize,
    pub bight: usize,
    pub holds: bool,
}

pub fn check_bight_bound(g: &Graph, field: Field) -> Result<BightReport> {
    let (_, pdim) = homological_invariants(g, field)?;
    let bight = g.big_height()?;
    Ok(BightReport {
        pdim,
        bight,
        holds: pdim >= bight,
    })
}

/// Predicted Betti table of the full suspension of G on n+1 variables:
///   β_{i,j}   = β_{i,j}(G) + β_{i-1,j-1}(G)            for j > i+1,
///   β_{i,i+1} = β_{i,i+1}(G) + β_{i-1,i}(G) + C(n,i)   for i >= 1,
/// and β_{0,1} = 0, β_{0,0} = 1. Equality with the directly computed
/// table of suspend(G, V) is the theorem under test.
pub fn full_suspension_betti_predict(g: &Graph, field: Field) -> Result<BettiTable> {
    let base = hochster_betti_table(g, field)?;
    let n = g.n();
    let mut table = BettiTable {
        n: n + 1,
        field,
        entries: BTreeMap::new(),
    };
    table.add(0, 0, 1);
    let binom = |n: usize, k: usize| -> u64 {
        if k > n {
            return 0;
        }
        let mut b = 1u64;
        for t in 0..k {
            b = b * (n - t) as u64 / (t + 1) as u64;
        }
        b
    };
    for i in 1..=(n + 1) {
        for j in (i + 1)..=(n + 1) {
            let mut v = base.get(i, j) + if i >= 1 && j >= 1 { base.get(i - 1, j - 1) } else { 0 };
            if j == i + 1 {
                v += binom(n, i);
            }
            table.add(i, j, v);
        }
    }
    Ok(table)
}

/// reg of a disjoint union is the sum of the parts' regs.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RegAdditivityReport {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

pub fn check_reg_additivity(g1: &Graph, g2: &Graph, field: Field) -> Result<RegAdditivityReport> {
    let union = g1.disjoint_union(g2)?;
    let (lhs, _) = homological_invariants(&union, field)?;
    let (r1, _) = homological_invariants(g1, field)?;
    let (r2, _) = homological_invariants(g2, field)?;
    Ok(RegAdditivityReport {
        lhs,
        rhs: r1 + r2,
        holds: lhs == r1 + r2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn table(g: &Graph) -> BettiTable {
        hochster_betti_table(g, Field::Rational).unwrap()
    }

    #[test]
    fn k2_table() {
        let k2 = Graph::build(2, &[(1, 2)]).unwrap();
        let t = table(&k2);
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(entries, vec![(0, 0, 1), (1, 2, 1)]);
        assert_eq!((t.reg(), t.pdim()), (1, 1));
    }

    #[test]
    fn p3_table() {
        // resolution 0 → R(-3) → R(-2)² → R of R/(x₁x₂, x₂x₃)
        let p3 = Graph::path(3).unwrap();
        let t = table(&p3);
        assert_eq!(t.get(1, 2), 2);
        assert_eq!(t.get(2, 3), 1);
        assert_eq!(t.entries().count(), 3);
        assert_eq!((t.reg(), t.pdim()), (1, 2));
    }

    #[test]
    fn zero_ideal_table() {
        let g = Graph::edgeless(3).unwrap();
        let t = table(&g);
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, 0, 1)]);
        assert_eq!((t.reg(), t.pdim()), (0, 0));
        assert_eq!(
            homological_invariants(&g, Field::Rational).unwrap(),
            (0, 0)
        );
    }

    #[test]
    fn path_reg_pdim_formulas() {
        for n in 2..=9 {
            let (reg, pdim) =
                homological_invariants(&Graph::path(n).unwrap(), Field::Rational).unwrap();
            assert_eq!(reg, (n + 1) / 3, "reg of path n = {n}");
            assert_eq!(pdim, (2 * (n - 1)).div_ceil(3), "pdim of path n = {n}");
        }
    }

    #[test]
    fn cycle_reg_and_pdim_spot_checks() {
        let cases = [(3usize, 1usize, 2usize), (4, 1, 3), (5, 2, 3), (6, 2, 4)];
        for (n, want_reg, want_pdim) in cases {
            let (reg, pdim) =
                homological_invariants(&Graph::cycle(n).unwrap(), Field::Rational).unwrap();
            assert_eq!((reg, pdim), (want_reg, want_pdim), "cycle n = {n}");
        }
    }

    #[test]
    fn invariants_agree_with_table() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let check = |g: &Graph| {
            let t = table(g);
            let (reg, pdim) = homological_invariants(g, Field::Rational).unwrap();
            assert_eq!((reg, pdim), (t.reg(), t.pdim()), "{g:?}");
            assert_eq!(t.first_syzygy_count(), g.edge_count() as u64, "{g:?}");
            assert_eq!(t.get(0, 0), 1);
        };
        for n in 1..=4 {
            for mask in 0..Graph::edge_mask_count(n) {
                check(&Graph::from_edge_mask(n, mask).unwrap());
            }
        }
        for _ in 0..25 {
            let n = rng.gen_range(5..=7);
            let mask = rng.gen_range(0..Graph::edge_mask_count(n));
            check(&Graph::from_edge_mask(n, mask).unwrap());
        }
    }

    #[test]
    fn bight_bound_holds() {
        let c6 = Graph::cycle(6).unwrap();
        let r = check_bight_bound(&c6, Field::Rational).unwrap();
        assert!(r.holds && r.bight == 4 && r.pdim >= 4);
        let k2 = Graph::build(2, &[(1, 2)]).unwrap();
        let r = check_bight_bound(&k2, Field::Rational).unwrap();
        assert_eq!((r.pdim, r.bight, r.holds), (1, 1, true));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let n = rng.gen_range(2..=7);
            let g = Graph::from_edge_mask(n, rng.gen_range(0..Graph::edge_mask_count(n))).unwrap();
            assert!(check_bight_bound(&g, Field::Rational).unwrap().holds, "{g:?}");
        }
    }

    #[test]
    fn full_suspension_prediction_k2() {
        let k2 = Graph::build(2, &[(1, 2)]).unwrap();
        let predicted = full_suspension_betti_predict(&k2, Field::Rational).unwrap();
        let c3 = k2.suspend(k2.vertices()).unwrap();
        let direct = table(&c3);
        assert_eq!(predicted, direct);
        assert_eq!(direct.get(1, 2), 3);
        assert_eq!(direct.get(2, 3), 2);
        assert_eq!(direct.get(0, 1), 0);
        assert_eq!((direct.reg(), direct.pdim()), (1, 2));
    }

    #[test]
    fn reg_additivity_cases() {
        let k2 = Graph::build(2, &[(1, 2)]).unwrap();
        let p3 = Graph::path(3).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let p4 = Graph::path(4).unwrap();
        let p5 = Graph::path(5).unwrap();
        for (a, b, want) in [(&k2, &k2, 2usize), (&p3, &c5, 3), (&p4, &p5, 3)] {
            let r = check_reg_additivity(a, b, Field::Rational).unwrap();
            assert!(r.holds);
            assert_eq!(r.lhs, want);
        }
    }

    #[test]
    fn k_polynomial_identity_small() {
        // Σ (-1)^i β_{i,j} t^j = (1-t)^(n-α) h(t)
        use crate::indpoly::{h_polynomial, IntPolynomial};
        for n in 1..=4 {
            for mask in 0..Graph::edge_mask_count(n) {
                let g = Graph::from_edge_mask(n, mask).unwrap();
                let t = table(&g);
                let alpha = g.independence_number();
                let rhs = IntPolynomial::linear(1, -1)
                    .pow((n - alpha) as u32)
                    .mul(&h_polynomial(&g));
                assert_eq!(t.k_polynomial(), rhs, "n = {n}, mask = {mask}");
            }
        }
    }

    #[test]
    fn table_render_shapes() {
        let t = table(&Graph::path(3).unwrap());
        let json = t.to_json_triples();
        assert!(json.contains("{\"i\":1,\"j\":2,\"beta\":2}"));
        assert_eq!(json.lines().count(), 3);
        let text = t.to_display_text();
        assert!(text.contains("0:"));
        assert!(text.contains("1:"));
    }
}
