//! Finite simplicial complexes on at most 64 vertices, faces as bitmasks.

use crate::field::Field;

/// A downward-closed family of vertex subsets.
///
/// The void complex has no faces at all; the complex `{∅}` has only the
/// empty face. The two are different and have different reduced homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    /// Maximal faces, sorted.
    facets: Vec<u64>,
    /// All faces, sorted by (size, mask).
    faces: Vec<u64>,
}

impl SimplicialComplex {
    pub fn void(num_vertices: usize) -> Self {
        Self { num_vertices, facets: Vec::new(), faces: Vec::new() }
    }

    /// Downward closure of the given facets. An empty facet list gives the
    /// void complex; `[0]` gives `{∅}`.
    pub fn from_facets(num_vertices: usize, facets: &[u64]) -> Self {
        assert!(num_vertices <= 64);
        let facets = maximal_masks(facets);
        let mut faces: Vec<u64> = Vec::new();
        for &f in &facets {
            // enumerate submasks of f
            let mut sub = f;
            loop {
                faces.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        faces.sort_unstable_by_key(|&m| (m.count_ones(), m));
        faces.dedup();
        Self { num_vertices, facets, faces }
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.faces
            .binary_search_by_key(&(face.count_ones(), face), |&m| (m.count_ones(), m))
            .is_ok()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| {
            (0..64).filter(|b| f & (1 << b) != 0).all(|b| self.contains(f & !(1 << b)))
        })
    }

    /// Faces of dimension `dim` (`dim = -1` is the empty face).
    fn faces_of_dim(&self, dim: isize) -> &[u64] {
        let size = (dim + 1) as u32;
        let start = self.faces.partition_point(|m| m.count_ones() < size);
        let end = self.faces.partition_point(|m| m.count_ones() <= size);
        &self.faces[start..end]
    }

    fn max_dim(&self) -> isize {
        self.faces.last().map_or(-2, |m| m.count_ones() as isize - 1)
    }

    /// Matrix of the boundary map from `dim`-faces to `(dim-1)`-faces,
    /// with the usual alternating signs (rows indexed by the lower faces).
    pub fn boundary_matrix(&self, dim: isize) -> Vec<Vec<i64>> {
        let upper = self.faces_of_dim(dim);
        let lower = self.faces_of_dim(dim - 1);
        let mut rows = vec![vec![0i64; upper.len()]; lower.len()];
        for (col, &face) in upper.iter().enumerate() {
            let mut sign = 1i64;
            for bit in 0..64 {
                if face & (1 << bit) == 0 {
                    continue;
                }
                let sub = face & !(1 << bit);
                let row = lower.binary_search(&sub).expect("complex is downward closed");
                rows[row][col] = sign;
                sign = -sign;
            }
        }
        rows
    }

    /// Reduced homology dimensions indexed from `-1`.
    pub fn reduced_homology(&self, field: Field) -> ReducedHomology {
        let top = self.max_dim();
        if top < -1 {
            return ReducedHomology { dims: Vec::new() };
        }
        // ranks[d+1] = rank of the boundary out of dimension d, d = -1..=top+1
        let mut ranks = vec![0usize; (top + 3) as usize];
        for d in 0..=top {
            let m = self.boundary_matrix(d);
            ranks[(d + 1) as usize] = if m.is_empty() { 0 } else { field.rank(&m) };
        }
        let dims = (-1..=top)
            .map(|d| {
                let n = self.faces_of_dim(d).len();
                n - ranks[(d + 1) as usize] - ranks[(d + 2) as usize]
            })
            .collect();
        ReducedHomology { dims }
    }

    /// True when some vertex lies in every facet, so the complex is a cone
    /// (hence acyclic). `{∅}` and the void complex are not cones.
    pub fn is_cone(&self) -> bool {
        !self.facets.is_empty() && self.facets.iter().fold(!0u64, |acc, &f| acc & f) != 0
    }
}

/// Inclusion-maximal elements of a family of masks, deduplicated and sorted.
pub fn maximal_masks(masks: &[u64]) -> Vec<u64> {
    let mut sorted = masks.to_vec();
    sorted.sort_unstable_by_key(|&m| std::cmp::Reverse((m.count_ones(), m)));
    sorted.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !kept.iter().any(|&k| k & m == m) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// Dimensions of reduced homology groups, `dims[0]` is degree `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    pub fn dim(&self, degree: isize) -> usize {
        if degree < -1 {
            return 0;
        }
        self.dims.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `(degree, dim)` pairs with nonzero dimension.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, &d)| (i as isize - 1, d))
    }

    /// Dimensions for degrees `-1, 0, ...` up to the top face dimension.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}
