//! Degeneration data over a maximally degenerate target: the tree of the base
//! curve, the kernel lattice of the root map, per-edge linear functionals, the
//! 21 monodromy quadratic forms, and the 21x21 independence determinant.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::KanevError;
use crate::lattice::{lines, Root};
use crate::linalg::ZMat;
use crate::weyl::e6_coordinates;

/// Trivalent tree for the genus-0 target: 10 inner vertices, 12 outer
/// vertices of tree degree 1, each outer vertex carrying the two ends
/// labelled by one root. Internal edges are indexed `0..21`: first the 12
/// legs (outer vertex `k` to its inner vertex), then the inner edges.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CoverTree {
    /// Edges between inner vertices, `0..=9` each.
    pub inner_edges: Vec<(usize, usize)>,
    /// `attach[k]` is the inner vertex carrying outer vertex `k`.
    pub attach: [usize; 12],
    /// Base vertex for path computations (an inner vertex).
    pub base: usize,
}

/// Built-in tree shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeShape {
    /// Six inner "cherry" vertices carrying the outer pairs (1,2), (3,4),
    /// ..., (11,12), hanging off a 4-vertex spine. This is the default; it
    /// reproduces the reference determinant 2^12 for the standard root list.
    Cherry,
    /// Inner vertices on a path, outer vertices attached in index order
    /// (two at each path end). Degenerates for root lists whose consecutive
    /// pairs are orthogonal, so not the default.
    Path,
}

impl CoverTree {
    pub fn from_shape(shape: TreeShape) -> CoverTree {
        match shape {
            TreeShape::Cherry => CoverTree {
                // spine 0-1-2-3, cherries 4..9
                inner_edges: vec![
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (0, 4),
                    (0, 5),
                    (1, 6),
                    (2, 7),
                    (3, 8),
                    (3, 9),
                ],
                attach: [4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9],
                base: 0,
            },
            TreeShape::Path => CoverTree {
                inner_edges: (0..9).map(|j| (j, j + 1)).collect(),
                attach: [0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 9],
                base: 0,
            },
        }
    }

    pub fn validate(&self) -> Result<(), KanevError> {
        let n_inner = 10;
        if self.inner_edges.len() != 9 {
            return Err(KanevError::TreeShape(format!(
                "expected 9 inner edges, got {}",
                self.inner_edges.len()
            )));
        }
        if self.base >= n_inner {
            return Err(KanevError::TreeShape("base vertex out of range".into()));
        }
        let mut deg = [0usize; 10];
        for &(u, v) in &self.inner_edges {
            if u >= n_inner || v >= n_inner || u == v {
                return Err(KanevError::TreeShape(format!("bad inner edge ({u},{v})")));
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        for &a in &self.attach {
            if a >= n_inner {
                return Err(KanevError::TreeShape("attachment out of range".into()));
            }
            deg[a] += 1;
        }
        if let Some(v) = (0..n_inner).find(|&v| deg[v] != 3) {
            return Err(KanevError::TreeShape(format!(
                "inner vertex {v} has degree {} (trivalent tree required)",
                deg[v]
            )));
        }
        // connectivity (9 edges on 10 vertices + connected means a tree)
        let mut seen = [false; 10];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(u, v) in &self.inner_edges {
                let y = if u == x {
                    v
                } else if v == x {
                    u
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(KanevError::TreeShape("inner tree is disconnected".into()));
        }
        Ok(())
    }

    /// Signed incidence of the path from `base` through inner vertex
    /// `attach[k]` out to the ends at outer vertex `k`, on all 21 internal
    /// edges. Legs are directed inner to outer, inner edges as listed.
    pub fn path_vectors(&self) -> [[i64; 21]; 12] {
        let mut parent: [Option<(usize, usize, i64)>; 10] = [None; 10];
        let mut seen = [false; 10];
        seen[self.base] = true;
        let mut queue = std::collections::VecDeque::from([self.base]);
        while let Some(x) = queue.pop_front() {
            for (idx, &(u, v)) in self.inner_edges.iter().enumerate() {
                let (y, sign) = if u == x {
                    (v, 1)
                } else if v == x {
                    (u, -1)
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, 12 + idx, sign));
                    queue.push_back(y);
                }
            }
        }
        let mut out = [[0i64; 21]; 12];
        for k in 0..12 {
            let mut cur = self.attach[k];
            while let Some((prev, edge, sign)) = parent[cur] {
                out[k][edge] += sign;
                cur = prev;
            }
            out[k][k] += 1; // the leg edge
        }
        out
    }
}

/// Integer basis of `Ker(phi)` for `phi: Z^12 -> E6`, `R_k -> r_k`.
#[derive(Clone, Debug)]
pub struct KernelBasis {
    pub roots: Vec<Root>,
    /// Six rows, each a 12-vector with `sum_k row[k] * r_k = 0`.
    pub basis: [[i64; 12]; 6],
}

/// Checks that the twelve roots generate `E6` over `Z` (all six elementary
/// divisors 1) and returns the Hermite-reduced kernel basis.
pub fn kernel_basis(roots: &[Root]) -> Result<KernelBasis, KanevError> {
    if roots.len() != 12 {
        return Err(KanevError::DegenerateInput(format!(
            "expected 12 roots, got {}",
            roots.len()
        )));
    }
    let mut coord_rows: Vec<Vec<i64>> = Vec::with_capacity(12);
    for r in roots {
        if !r.vec.is_root() {
            return Err(KanevError::NotARoot(r.vec.to_string()));
        }
        let c = e6_coordinates(&r.vec).ok_or_else(|| KanevError::NotARoot(r.vec.to_string()))?;
        coord_rows.push(c.to_vec());
    }
    let m = ZMat::from_i64_rows(&coord_rows); // 12 x 6, rows are root coordinates
    let divisors = m.snf_diagonal();
    if divisors.len() != 6 || divisors.iter().any(|d| *d != BigInt::from(1)) {
        return Err(KanevError::Generation {
            divisors: divisors.iter().map(|d| d.to_string()).collect(),
        });
    }
    let kernel = m.left_kernel();
    if kernel.len() != 6 {
        return Err(KanevError::Internal(format!(
            "kernel rank {} != 6 after full-rank check",
            kernel.len()
        )));
    }
    let mut basis = [[0i64; 12]; 6];
    for (i, row) in kernel.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            basis[i][j] = i64::try_from(x)
                .map_err(|_| KanevError::Internal("kernel basis entry does not fit i64".into()))?;
        }
    }
    Ok(KernelBasis {
        roots: roots.to_vec(),
        basis,
    })
}

/// The functional of edge `e` and sheet `s` on the kernel basis:
/// `f(R_k) = <r_k, l_s> <p(R_k), e*>`, evaluated on each basis row.
pub fn edge_functionals(
    tree: &CoverTree,
    kb: &KernelBasis,
) -> Result<Vec<[[i64; 6]; 27]>, KanevError> {
    tree.validate()?;
    let paths = tree.path_vectors();
    let ls = lines();
    let pairings: Vec<[i64; 27]> = kb
        .roots
        .iter()
        .map(|r| {
            let mut row = [0i64; 27];
            for (s, l) in ls.iter().enumerate() {
                row[s] = r.vec.pairing(&l.vec);
            }
            row
        })
        .collect();
    let mut out = Vec::with_capacity(21);
    for e in 0..21 {
        let mut per_sheet = [[0i64; 6]; 27];
        for s in 0..27 {
            for (b, row) in kb.basis.iter().enumerate() {
                let mut total = 0i64;
                for k in 0..12 {
                    total += row[k] * pairings[k][s] * paths[k][e];
                }
                per_sheet[s][b] = total;
            }
        }
        out.push(per_sheet);
    }
    Ok(out)
}

/// A symmetric 6x6 integer quadratic form on the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadForm6(pub [[i64; 6]; 6]);

impl QuadForm6 {
    pub fn is_symmetric(&self) -> bool {
        (0..6).all(|i| (0..6).all(|j| self.0[i][j] == self.0[j][i]))
    }

    pub fn divided_by(&self, d: i64) -> Option<QuadForm6> {
        let mut out = [[0i64; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                if self.0[i][j] % d != 0 {
                    return None;
                }
                out[i][j] = self.0[i][j] / d;
            }
        }
        Some(QuadForm6(out))
    }

    /// Coordinates in `Sym^2`: the six diagonal entries, then the fifteen
    /// off-diagonal entries `m_ij` (`i < j`), once each, unscaled.
    pub fn sym2_coordinates(&self) -> [i64; 21] {
        let mut out = [0i64; 21];
        for i in 0..6 {
            out[i] = self.0[i][i];
        }
        let mut pos = 6;
        for i in 0..6 {
            for j in (i + 1)..6 {
                out[pos] = self.0[i][j];
                pos += 1;
            }
        }
        out
    }
}

/// `M_e = sum_s (f_{e,s})^T (f_{e,s})` for each of the 21 internal edges.
/// Every entry must come out divisible by 6; failure is an internal error.
pub fn monodromy_matrices(funcs: &[[[i64; 6]; 27]]) -> Result<Vec<QuadForm6>, KanevError> {
    let mut out = Vec::with_capacity(funcs.len());
    for (e, per_sheet) in funcs.iter().enumerate() {
        let mut m = [[0i64; 6]; 6];
        for v in per_sheet.iter() {
            for i in 0..6 {
                for j in 0..6 {
                    m[i][j] += v[i] * v[j];
                }
            }
        }
        let form = QuadForm6(m);
        if form.divided_by(6).is_none() {
            return Err(KanevError::Internal(format!(
                "monodromy form for edge {e} is not divisible by 6"
            )));
        }
        out.push(form);
    }
    Ok(out)
}

/// Determinant of the 21x21 matrix whose rows are the `Sym^2` coordinates of
/// the normalized forms `M_e / 6`.
pub fn independence_determinant(ms: &[QuadForm6]) -> Result<BigInt, KanevError> {
    if ms.len() != 21 {
        return Err(KanevError::Internal(format!(
            "expected 21 forms, got {}",
            ms.len()
        )));
    }
    let rows: Vec<Vec<i64>> = ms
        .iter()
        .map(|m| {
            m.divided_by(6)
                .ok_or_else(|| KanevError::Internal("form not divisible by 6".into()))
                .map(|n| n.sym2_coordinates().to_vec())
        })
        .collect::<Result<_, _>>()?;
    Ok(ZMat::from_i64_rows(&rows).bareiss_det())
}

/// Full run of the degeneration computation for one root list.
#[derive(Debug)]
pub struct DominanceCertificate {
    pub kernel: KernelBasis,
    pub forms: Vec<QuadForm6>,
    pub normalized: Vec<QuadForm6>,
    pub determinant: BigInt,
    /// The binding assertion: the map to the period domain hits full rank.
    pub dominant: bool,
    /// Whether |det| equals the reference value 2^12.
    pub matches_reference: bool,
}

pub fn dominance_certificate(
    roots: &[Root],
    tree: &CoverTree,
) -> Result<DominanceCertificate, KanevError> {
    let kernel = kernel_basis(roots)?;
    let funcs = edge_functionals(tree, &kernel)?;
    let forms = monodromy_matrices(&funcs)?;
    let normalized: Vec<QuadForm6> = forms.iter().map(|m| m.divided_by(6).unwrap()).collect();
    let determinant = independence_determinant(&forms)?;
    let dominant = !determinant.is_zero();
    let matches_reference = determinant.abs() == BigInt::from(4096);
    Ok(DominanceCertificate {
        kernel,
        forms,
        normalized,
        determinant,
        dominant,
        matches_reference,
    })
}

/// The graph over the degenerate target: 27 vertices (sheets) and 6 edges per
/// root; its first Betti number is the arithmetic genus of the cover.
pub fn cover_graph_genus(roots: &[Root]) -> Result<usize, KanevError> {
    let mut edges = 0usize;
    for r in roots {
        if !r.vec.is_root() {
            return Err(KanevError::NotARoot(r.vec.to_string()));
        }
        edges += crate::lattice::double_six(r)?.len();
    }
    Ok(edges + 1 - 27)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::dominance_roots;

    fn paper_tree() -> CoverTree {
        CoverTree::from_shape(TreeShape::Cherry)
    }

    #[test]
    fn tree_shapes_validate() {
        CoverTree::from_shape(TreeShape::Cherry).validate().unwrap();
        CoverTree::from_shape(TreeShape::Path).validate().unwrap();
        let mut bad = CoverTree::from_shape(TreeShape::Cherry);
        bad.attach[0] = 3; // spine vertex now has degree 4
        assert!(bad.validate().is_err());
    }

    #[test]
    fn kernel_rows_map_to_zero() {
        let kb = kernel_basis(&dominance_roots()).unwrap();
        for row in &kb.basis {
            let mut total = crate::lattice::LatticeVector::ZERO;
            for (k, &c) in row.iter().enumerate() {
                total = total + kb.roots[k].vec.scale(c);
            }
            assert_eq!(total, crate::lattice::LatticeVector::ZERO);
        }
    }

    #[test]
    fn repeated_roots_fail_generation() {
        let r = dominance_roots()[0];
        let err = kernel_basis(&vec![r; 12]).unwrap_err();
        assert!(matches!(err, KanevError::Generation { .. }));
        // a rank-5 span fails too: the D5 simple roots repeated cyclically
        let d5: Vec<_> = crate::lattice::simple_roots()[..5].to_vec();
        let cyclic: Vec<_> = (0..12).map(|k| d5[k % 5]).collect();
        let err = kernel_basis(&cyclic).unwrap_err();
        match err {
            KanevError::Generation { divisors } => {
                assert!(divisors.contains(&"0".to_string()));
            }
            other => panic!("expected generation error, got {other}"),
        }
    }

    #[test]
    fn double_six_block_satisfies_the_quadratic_relation() {
        // the six edges over one root: plus-side lines are pairwise disjoint
        // and meet the other pairs' minus sides, so the edge block is
        // N = I - J with (N - 1)(N + 5) = 0 and (-5)-eigenvector (1,...,1)
        use crate::lattice::{double_six, positive_roots};
        for r in positive_roots().take(8) {
            let pairs = double_six(r).unwrap();
            for (j, (sj, tj)) in pairs.iter().enumerate() {
                for (k, (sk, tk)) in pairs.iter().enumerate() {
                    if j == k {
                        continue;
                    }
                    assert_eq!(sj.vec.pairing(&sk.vec), 0);
                    assert_eq!(sj.vec.pairing(&tk.vec), 1);
                    assert_eq!(tj.vec.pairing(&tk.vec), 0);
                }
            }
        }
        // (N - 1)(N + 5) = 0 for N_jj = 0, N_jk = -1
        let n = |i: usize, j: usize| if i == j { 0i64 } else { -1 };
        for i in 0..6 {
            for j in 0..6 {
                let mut entry = 0i64;
                for k in 0..6 {
                    let a = n(i, k) - if i == k { 1 } else { 0 };
                    let b = n(k, j) + if k == j { 5 } else { 0 };
                    entry += a * b;
                }
                assert_eq!(entry, 0);
            }
        }
        let row_sum: i64 = (0..6).map(|k| n(0, k)).sum();
        assert_eq!(row_sum, -5);
    }

    #[test]
    fn functional_vanishes_on_unused_edges() {
        // an edge on no base-to-end path used by a kernel vector gives zero
        let kb = kernel_basis(&dominance_roots()).unwrap();
        let funcs = edge_functionals(&paper_tree(), &kb).unwrap();
        assert_eq!(funcs.len(), 21);
        // leg k only sees coordinate k
        let paths = paper_tree().path_vectors();
        for k in 0..12 {
            assert_eq!(paths[k][k], 1);
            for e in 0..12 {
                if e != k {
                    assert_eq!(paths[k][e], 0);
                }
            }
        }
    }

    #[test]
    fn base_point_independence_on_kernel() {
        let kb = kernel_basis(&dominance_roots()).unwrap();
        let mut t1 = paper_tree();
        let mut t2 = paper_tree();
        t1.base = 0;
        t2.base = 3;
        let f1 = edge_functionals(&t1, &kb).unwrap();
        let f2 = edge_functionals(&t2, &kb).unwrap();
        assert_eq!(f1, f2);
    }

    #[test]
    fn genus_of_the_cover_graph_is_46() {
        assert_eq!(cover_graph_genus(&dominance_roots()).unwrap(), 46);
    }

    #[test]
    fn paper_root_list_gives_det_2_to_12() {
        let cert = dominance_certificate(&dominance_roots(), &paper_tree()).unwrap();
        assert!(cert.dominant);
        assert_eq!(cert.determinant.abs(), BigInt::from(4096));
        for m in &cert.forms {
            assert!(m.is_symmetric());
        }
    }

    #[test]
    fn path_tree_degenerates_for_the_paper_roots() {
        // the paper pairs roots (1,2), (3,4), ... at shared vertices; the
        // plain path attaches them differently and the forms go dependent
        let cert =
            dominance_certificate(&dominance_roots(), &CoverTree::from_shape(TreeShape::Path))
                .unwrap();
        assert!(cert.determinant.is_zero());
    }
}
