//! The incidence correspondence on the 27 lines as an exact 27x27 matrix,
//! its quadratic relation, and the eigenspace structure on `ker(deg)`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::lattice::lines;
use crate::linalg::{primitive_integer_vector, qi, QMat};
use crate::weyl::Perm;

/// `D[s][t] = 1` when lines `s` and `t` meet, else 0.
#[derive(Clone, Debug, PartialEq)]
pub struct IncidenceMatrix(pub [[i64; 27]; 27]);

/// Builds the incidence matrix from the pairing on exceptional vectors.
pub fn build_incidence() -> IncidenceMatrix {
    let ls = lines();
    let mut m = [[0i64; 27]; 27];
    for (s, a) in ls.iter().enumerate() {
        for (t, b) in ls.iter().enumerate() {
            if a.vec.pairing(&b.vec) == 1 {
                m[s][t] = 1;
            }
        }
    }
    IncidenceMatrix(m)
}

impl IncidenceMatrix {
    pub fn row_sums(&self) -> Vec<i64> {
        self.0.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..27).all(|s| (0..27).all(|t| self.0[s][t] == self.0[t][s]))
    }

    pub fn zero_diagonal(&self) -> bool {
        (0..27).all(|s| self.0[s][s] == 0)
    }

    /// Checks `(D + 5)(D - 1) = 5 J` with `J` the all-ones matrix.
    pub fn satisfies_quadratic_relation(&self) -> bool {
        for i in 0..27 {
            for j in 0..27 {
                let mut prod = 0i64; // (D+5)(D-1) entry
                for k in 0..27 {
                    let a = self.0[i][k] + if i == k { 5 } else { 0 };
                    let b = self.0[k][j] - if k == j { 1 } else { 0 };
                    prod += a * b;
                }
                if prod != 5 {
                    return false;
                }
            }
        }
        true
    }

    /// `D` commutes with the permutation action of `w`.
    pub fn commutes_with(&self, w: &Perm) -> bool {
        (0..27).all(|s| (0..27).all(|t| self.0[w.apply(s)][w.apply(t)] == self.0[s][t]))
    }

    pub fn as_qmat(&self) -> QMat {
        QMat::from_int_rows(&self.0.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }
}

/// Integer bases of the (+1)- and (-5)-eigenspaces of `D` restricted to the
/// kernel of the degree map, plus their dimensions.
#[derive(Debug)]
pub struct KerDegEigenspaces {
    pub dim_plus1: usize,
    pub dim_minus5: usize,
    pub basis_plus1: Vec<Vec<BigInt>>,
    pub basis_minus5: Vec<Vec<BigInt>>,
}

/// Exact nullspace computation of `(D - I)` and `(D + 5 I)` intersected with
/// `deg = 0`; no floating point anywhere.
pub fn eigenspaces_on_ker_deg(inc: &IncidenceMatrix) -> KerDegEigenspaces {
    let solve = |shift: i64| -> Vec<Vec<BigInt>> {
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(28);
        for i in 0..27 {
            let mut row: Vec<BigRational> = (0..27).map(|j| qi(inc.0[i][j])).collect();
            row[i] += qi(shift);
            rows.push(row);
        }
        rows.push(vec![qi(1); 27]); // degree-zero condition
        QMat::from_rows(rows)
            .nullspace()
            .iter()
            .map(|v| primitive_integer_vector(v))
            .collect()
    };
    let basis_plus1 = solve(-1);
    let basis_minus5 = solve(5);
    KerDegEigenspaces {
        dim_plus1: basis_plus1.len(),
        dim_minus5: basis_minus5.len(),
        basis_plus1,
        basis_minus5,
    }
}

/// Renders the incidence matrix as CSV with line labels.
pub fn incidence_csv(inc: &IncidenceMatrix) -> String {
    let ls = lines();
    let mut out = String::new();
    out.push_str("line");
    for l in ls {
        out.push(',');
        out.push_str(&l.label.to_string());
    }
    out.push('\n');
    for (s, l) in ls.iter().enumerate() {
        out.push_str(&l.label.to_string());
        for t in 0..27 {
            out.push(',');
            out.push_str(&inc.0[s][t].to_string());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{line_by_label, LineLabel};
    use crate::weyl::reflection_generators;
    use num_traits::{One, Zero};

    #[test]
    fn shape_checks() {
        let d = build_incidence();
        assert!(d.is_symmetric());
        assert!(d.zero_diagonal());
        assert!(d.row_sums().iter().all(|&s| s == 10));
        assert!(d.satisfies_quadratic_relation());
    }

    #[test]
    fn row_of_a1() {
        let d = build_incidence();
        let a1 = line_by_label(LineLabel::A(1)).index;
        let mut hits: Vec<String> = (0..27)
            .filter(|&t| d.0[a1][t] == 1)
            .map(|t| lines()[t].label.to_string())
            .collect();
        hits.sort();
        let mut expected: Vec<String> = (2..=6)
            .map(|i| format!("b{i}"))
            .chain((2..=6).map(|j| format!("c1{j}")))
            .collect();
        expected.sort();
        assert_eq!(hits, expected);
    }

    #[test]
    fn commutes_with_all_reflections() {
        let d = build_incidence();
        for w in reflection_generators() {
            assert!(d.commutes_with(&w));
        }
    }

    #[test]
    fn eigenspace_dimensions_are_20_and_6() {
        let d = build_incidence();
        let e = eigenspaces_on_ker_deg(&d);
        assert_eq!(e.dim_plus1, 20);
        assert_eq!(e.dim_minus5, 6);
        // bases actually satisfy the eigen equations
        let q = d.as_qmat();
        for v in &e.basis_minus5 {
            let vq: Vec<BigRational> = v
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            let dv = q.apply(&vq);
            for (dvi, vi) in dv.iter().zip(&vq) {
                assert_eq!(dvi, &(vi * qi(-5)));
            }
        }
    }

    #[test]
    fn minimal_polynomial_on_ker_deg_is_quadratic() {
        // (D - 1)(D + 5) annihilates ker(deg) but neither factor does
        let d = build_incidence();
        let e = eigenspaces_on_ker_deg(&d);
        assert!(e.dim_plus1 > 0 && e.dim_minus5 > 0);
        assert_eq!(e.dim_plus1 + e.dim_minus5, 26);
    }

    #[test]
    fn d_of_a1_minus_b1_is_a_plus_one_vector() {
        // D(a1 - b1) = sum_{j >= 2} (b_j - a_j)
        let d = build_incidence();
        let a1 = line_by_label(LineLabel::A(1)).index;
        let b1 = line_by_label(LineLabel::B(1)).index;
        let mut v = vec![qi(0); 27];
        v[a1] = qi(1);
        v[b1] = qi(-1);
        let dv = d.as_qmat().apply(&v);
        for j in 2..=6u8 {
            let aj = line_by_label(LineLabel::A(j)).index;
            let bj = line_by_label(LineLabel::B(j)).index;
            assert_eq!(dv[bj], BigRational::one());
            assert_eq!(dv[aj], -BigRational::one());
        }
        let nonzero: usize = dv.iter().filter(|x| !x.is_zero()).count();
        assert_eq!(nonzero, 10);
    }

    #[test]
    fn minus5_eigenspace_carries_the_reflection_representation() {
        // restricted to the (-5)-eigenspace every reflection has trace 4
        let d = build_incidence();
        let e = eigenspaces_on_ker_deg(&d);
        let basis: Vec<Vec<BigRational>> = e
            .basis_minus5
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let bmat = QMat::from_rows(basis.clone());
        for w in reflection_generators().iter().take(6) {
            // express w . v_i in the basis; trace of the 6x6 coefficient matrix
            let mut aug_rows: Vec<Vec<BigRational>> = (0..27)
                .map(|c| (0..6).map(|r| basis[r][c].clone()).collect())
                .collect();
            for v in &basis {
                let mut wv = vec![BigRational::zero(); 27];
                for (s, x) in v.iter().enumerate() {
                    wv[w.apply(s)] = x.clone();
                }
                for (c, row) in aug_rows.iter_mut().enumerate() {
                    row.push(wv[c].clone());
                }
            }
            let mut m = QMat::from_rows(aug_rows);
            let (rank, _) = m.row_reduce();
            assert_eq!(rank, 6);
            let mut trace = BigRational::zero();
            for i in 0..6 {
                trace += m[(i, 6 + i)].clone();
            }
            assert_eq!(trace, qi(4));
            let _ = &bmat;
        }
    }
}
