use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{Graph, VertexSet};
use crate::linalg::IntMatrix;

/// Cap on the total number of faces a homology computation will touch.
pub const DEFAULT_FACE_LIMIT: usize = 16384;

/// Finite abstract simplicial complex, stored by its facets.
/// The void complex has no faces at all (empty facet list); the complex
/// {∅} has the empty face only (facet list [∅]). Both are legal.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<VertexSet>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(ground={}, facets={:?})", self.labels.len(), self.facets)
    }
}

/// Lexicographic order on faces viewed as ascending vertex lists.
pub fn lex_face_cmp(a: u32, b: u32) -> Ordering {
    let (mut x, mut y) = (a, b);
    loop {
        match (x == 0, y == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (va, vb) = (x.trailing_zeros(), y.trailing_zeros());
        if va != vb {
            return va.cmp(&vb);
        }
        x &= x - 1;
        y &= y - 1;
    }
}

impl SimplicialComplex {
    /// Builds a complex from a generating set of faces: duplicates and
    /// dominated faces are dropped so the stored facets are pairwise
    /// inclusion-incomparable. An empty list gives the void complex.
    pub fn from_facets(labels: Vec<String>, faces: Vec<VertexSet>) -> Result<SimplicialComplex> {
        let n = labels.len();
        if n > crate::graph::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                limit: crate::graph::MAX_VERTICES,
            });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel { label: l.clone() });
            }
        }
        let full = VertexSet::full(n);
        for f in &faces {
            if !f.is_subset_of(full) {
                return Err(Error::VertexOutOfRange {
                    index: f.iter().last().unwrap_or(0),
                    n,
                });
            }
        }
        let mut facets: Vec<VertexSet> = Vec::new();
        for &f in &faces {
            if faces.iter().any(|&g| f != g && f.is_subset_of(g)) {
                continue;
            }
            if !facets.contains(&f) {
                facets.push(f);
            }
        }
        facets.sort();
        Ok(SimplicialComplex { labels, facets })
    }

    /// The complex of independent sets of G. Its facets are the maximal
    /// independent sets and its minimal nonfaces are the edges.
    pub fn independence_complex(g: &Graph) -> SimplicialComplex {
        let facets = g
            .maximal_independent_sets()
            .expect("graph construction enforces the vertex limit");
        SimplicialComplex {
            labels: g.labels().to_vec(),
            facets,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// None for the void complex, Some(-1) for {∅}.
    pub fn dim(&self) -> Option<i32> {
        self.facets
            .iter()
            .map(|f| f.len() as i32 - 1)
            .max()
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|&g| f.is_subset_of(g))
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel {
                label: label.to_string(),
            })
    }

    pub fn set_of(&self, labels: &[&str]) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for l in labels {
            s = s.with(self.index_of(l)?);
        }
        Ok(s)
    }

    /// Induced subcomplex on W: the faces contained in W, with the ground
    /// set compressed to W. Commutes with independence complexes:
    /// Δ(G)|_W = Δ(G|_W).
    pub fn induced(&self, w: VertexSet) -> SimplicialComplex {
        let keep: Vec<usize> = w.iter().collect();
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let compress = |f: VertexSet| -> VertexSet {
            let mut m = 0u32;
            for (new_i, &old_i) in keep.iter().enumerate() {
                if f.contains(old_i) {
                    m |= 1 << new_i;
                }
            }
            VertexSet(m)
        };
        let faces: Vec<VertexSet> = self.facets.iter().map(|&f| compress(f.intersect(w))).collect();
        SimplicialComplex::from_facets(labels, faces)
            .expect("induced ground set is a subset of a valid one")
    }

    /// Join: ground sets concatenated, faces are all unions σ ∪ τ.
    /// Label clashes are rejected. Joining with the void complex is void;
    /// {∅} is the identity.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        for l in &other.labels {
            if self.labels.contains(l) {
                return Err(Error::DuplicateLabel { label: l.clone() });
            }
        }
        let shift = self.labels.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut faces = Vec::new();
        for &f in &self.facets {
            for &g in &other.facets {
                faces.push(VertexSet(f.0 | g.0 << shift));
            }
        }
        SimplicialComplex::from_facets(labels, faces)
    }

    /// Cone = join with the one-point complex on a fresh apex.
    pub fn cone(&self, apex: &str) -> Result<SimplicialComplex> {
        let point = SimplicialComplex::from_facets(
            vec![apex.to_string()],
            vec![VertexSet::singleton(0)],
        )?;
        self.join(&point)
    }

    /// Faces bucketed by vertex count: buckets[c] holds the masks of the
    /// c-vertex faces (dimension c-1) in lexicographic order. buckets[0]
    /// is [∅] for any nonvoid complex.
    pub fn faces_by_count(&self) -> Vec<Vec<u32>> {
        let top = self
            .facets
            .iter()
            .map(|f| f.len())
            .max()
            .map(|d| d + 1)
            .unwrap_or(0);
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); top];
        let mut seen: HashSet<u32> = HashSet::new();
        for &facet in &self.facets {
            // enumerate all submasks, including 0
            let m = facet.0;
            let mut sub = m;
            loop {
                if seen.insert(sub) {
                    buckets[sub.count_ones() as usize].push(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & m;
            }
        }
        for b in &mut buckets {
            b.sort_by(|&a, &bb| lex_face_cmp(a, bb));
        }
        buckets
    }

    pub fn total_face_count(&self) -> usize {
        self.faces_by_count().iter().map(|b| b.len()).sum()
    }

    /// f-vector entry count per dimension r >= 0, for Euler characteristic
    /// checks.
    pub fn f_vector(&self) -> Vec<usize> {
        let buckets = self.faces_by_count();
        buckets.iter().skip(1).map(|b| b.len()).collect()
    }

    /// Boundary matrix from c-vertex faces to (c-1)-vertex faces of the
    /// given buckets. Removing the i-th smallest vertex contributes
    /// (-1)^i; the augmentation ∂(vertex) = ∅ is the c = 1 case.
    fn boundary_matrix(buckets: &[Vec<u32>], c: usize) -> IntMatrix {
        if c == 0 || c >= buckets.len() {
            let rows = if c >= 1 && c - 1 < buckets.len() {
                buckets[c - 1].len()
            } else {
                0
            };
            return IntMatrix::zero(rows, 0);
        }
        let rows = buckets[c - 1].len();
        let cols = buckets[c].len();
        let row_index: HashMap<u32, usize> = buckets[c - 1]
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let mut mat = IntMatrix::zero(rows, cols);
        for (j, &face) in buckets[c].iter().enumerate() {
            let mut sign = 1i128;
            let mut rest = face;
            while rest != 0 {
                let v = rest.trailing_zeros();
                let sub = face & !(1 << v);
                let i = row_index[&sub];
                mat.set(i, j, sign);
                sign = -sign;
                rest &= rest - 1;
            }
        }
        mat
    }

    /// Reduced homology dimensions over the field, exactly.
    /// dim H̃_{c-1} = (#c-faces - rank ∂_c) - rank ∂_{c+1}. The void
    /// complex is all-zero; {∅} has d₋₁ = 1; cones are all-zero.
    pub fn reduced_homology(&self, field: Field) -> Result<HomologyProfile> {
        self.reduced_homology_limited(field, DEFAULT_FACE_LIMIT)
    }

    pub fn reduced_homology_limited(
        &self,
        field: Field,
        face_limit: usize,
    ) -> Result<HomologyProfile> {
        let buckets = self.faces_by_count();
        let total: usize = buckets.iter().map(|b| b.len()).sum();
        if total > face_limit {
            return Err(Error::FaceLimitExceeded {
                count: total,
                limit: face_limit,
            });
        }
        let top = buckets.len();
        // ranks[c] = rank of the boundary matrix out of the c-vertex faces
        let mut ranks = vec![0usize; top + 1];
        for c in 1..top {
            ranks[c] = Self::boundary_matrix(&buckets, c).rank(field);
        }
        let mut dims = Vec::with_capacity(top);
        for c in 0..top {
            let cycles = buckets[c].len() - ranks[c];
            dims.push(cycles - ranks[c + 1]);
        }
        Ok(HomologyProfile::new(field, dims))
    }

    /// Rank of the map H̃_r(A) → H̃_r(self) induced by inclusion, where A's
    /// faces are identified with faces of self by label. Computed without
    /// choosing homology bases:
    ///   rank = dim Z_r(A) - dim(B_r(self) ∩ C_r(A))
    /// using that a boundary of the ambient complex supported on A's
    /// r-faces is automatically a cycle of A.
    pub fn induced_map_rank(
        &self,
        sub: &SimplicialComplex,
        r: i32,
        field: Field,
    ) -> Result<usize> {
        // translate A's vertex indices into ours
        let mut to_ambient = Vec::with_capacity(sub.labels.len());
        for l in &sub.labels {
            to_ambient.push(self.index_of(l)?);
        }
        let embed = |m: u32| -> u32 {
            let mut out = 0u32;
            let mut rest = m;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                out |= 1 << to_ambient[v];
                rest &= rest - 1;
            }
            out
        };
        let sub_buckets = sub.faces_by_count();
        for bucket in &sub_buckets {
            for &m in bucket {
                if !self.is_face(VertexSet(embed(m))) {
                    return Err(Error::NotAFace { mask: embed(m) });
                }
            }
        }
        if r < -1 {
            return Ok(0);
        }
        let c = (r + 1) as usize;

        // dim Z_r(A)
        let a_faces = sub_buckets.get(c).map_or(0, |b| b.len());
        if a_faces == 0 {
            return Ok(0);
        }
        let z_dim = a_faces - Self::boundary_matrix(&sub_buckets, c).rank(field);

        // dim(B_r(ambient) ∩ C_r(A)): rank of ∂_{c+1} minus rank of its
        // projection to the rows outside A's r-faces
        let amb_buckets = self.faces_by_count();
        let amb_boundary = Self::boundary_matrix(&amb_buckets, c + 1);
        let b_total = amb_boundary.rank(field);
        let a_masks: HashSet<u32> = sub_buckets[c].iter().map(|&m| embed(m)).collect();
        let outside = amb_boundary.filter_rows(|i| !a_masks.contains(&amb_buckets[c][i]));
        let b_outside = outside.rank(field);
        let b_in_a = b_total - b_outside;

        debug_assert!(z_dim >= b_in_a);
        Ok(z_dim - b_in_a)
    }

    /// Parses the facet-list format: one facet per line as space-separated
    /// labels, `#` comments allowed. The ground set is the labels in order
    /// of first appearance.
    pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex> {
        let mut labels: Vec<String> = Vec::new();
        let mut facets: Vec<VertexSet> = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut f = VertexSet::EMPTY;
            for tok in line.split_whitespace() {
                let i = match labels.iter().position(|l| l == tok) {
                    Some(i) => i,
                    None => {
                        labels.push(tok.to_string());
                        labels.len() - 1
                    }
                };
                f = f.with(i);
            }
            facets.push(f);
        }
        SimplicialComplex::from_facets(labels, facets)
    }

    pub fn to_facet_list(&self) -> String {
        let mut out = String::new();
        for &f in &self.facets {
            let names: Vec<&str> = f.iter().map(|i| self.labels[i].as_str()).collect();
            out.push_str(&names.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Reduced homology dimensions of one complex over one field.
/// dims[k] holds dim H̃_{k-1}, so index 0 is degree -1; trailing zeros
/// are trimmed so equal profiles compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: Field,
    dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn new(field: Field, mut dims: Vec<usize>) -> HomologyProfile {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        HomologyProfile { field, dims }
    }

    /// dim H̃_r, zero outside the recorded range.
    pub fn dim(&self, r: i32) -> usize {
        if r < -1 {
            return 0;
        }
        self.dims.get((r + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Largest r with H̃_r nonzero.
    pub fn top_degree(&self) -> Option<i32> {
        self.dims
            .iter()
            .rposition(|&d| d > 0)
            .map(|k| k as i32 - 1)
    }

    /// (degree, dimension) pairs for the nonzero entries, ascending.
    pub fn nonzero(&self) -> Vec<(i32, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d > 0)
            .map(|(k, &d)| (k as i32 - 1, d))
            .collect()
    }

    pub fn dims_equal(&self, other: &HomologyProfile) -> bool {
        self.dims == other.dims
    }

    /// Reduced Euler characteristic Σ (-1)^r d_r.
    pub fn euler(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| {
                let r = k as i32 - 1;
                if r.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum()
    }
}
