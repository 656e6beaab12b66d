//! Section spaces on the 72-nodal, 27-component degenerate cover: exact
//! residue-condition linear systems for the dualizing sheaf, its square, the
//! twist by `-5L`, the pencil itself, and the Petri generation check.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::KanevError;
use crate::lattice::{double_six, lines, Root};
use crate::linalg::{qi, QMat};

/// One node of the cover: the two sheets glued over a ramification point.
#[derive(Clone, Copy, Debug)]
pub struct Node {
    /// Index of the root (0..12) whose branch point carries this node.
    pub root: usize,
    /// Index of the pair within the double-six (0..6).
    pub pair: usize,
    /// Sheet with pairing +1 against the root.
    pub a_line: usize,
    /// Sheet `a_line + r`, with pairing -1.
    pub b_line: usize,
}

/// The degenerate cover: 27 rational components, 72 nodes, 12 ramification
/// values `q_i`.
#[derive(Clone, Debug)]
pub struct NodalCurveModel {
    pub roots: Vec<Root>,
    pub points: Vec<BigRational>,
    pub nodes: Vec<Node>,
    /// Per component: the nodes on it, as `(node index, +-1)`; the sign is +1
    /// on the `a` branch and -1 on the `b` branch.
    pub comp_nodes: Vec<Vec<(usize, i64)>>,
    /// Per-component node counts `n_s`.
    pub n: Vec<usize>,
}

impl NodalCurveModel {
    pub fn genus(&self) -> usize {
        self.nodes.len() + 1 - 27
    }
}

/// Builds the curve model, checking that the roots generate `E6` over `Z`
/// and that the twelve points are distinct, nonzero rationals.
pub fn build_curve(roots: &[Root], points: &[BigRational]) -> Result<NodalCurveModel, KanevError> {
    // reuse the generation check (Smith form) from the degeneration module
    crate::degeneration::kernel_basis(roots)?;
    if points.len() != 12 {
        return Err(KanevError::DegenerateInput(format!(
            "expected 12 ramification points, got {}",
            points.len()
        )));
    }
    for (i, q) in points.iter().enumerate() {
        if q.is_zero() {
            return Err(KanevError::DegenerateInput(format!("q_{} is zero", i + 1)));
        }
        for (j, q2) in points.iter().enumerate().skip(i + 1) {
            if q == q2 {
                return Err(KanevError::DegenerateInput(format!(
                    "q_{} and q_{} coincide",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let mut nodes = Vec::with_capacity(72);
    let mut comp_nodes: Vec<Vec<(usize, i64)>> = vec![Vec::new(); 27];
    for (ri, root) in roots.iter().enumerate() {
        for (pi, (la, lb)) in double_six(root)?.into_iter().enumerate() {
            let id = nodes.len();
            nodes.push(Node {
                root: ri,
                pair: pi,
                a_line: la.index,
                b_line: lb.index,
            });
            comp_nodes[la.index].push((id, 1));
            comp_nodes[lb.index].push((id, -1));
        }
    }
    debug_assert_eq!(nodes.len(), 72);
    let n: Vec<usize> = comp_nodes.iter().map(|v| v.len()).collect();
    debug_assert_eq!(n.iter().sum::<usize>(), 144);
    let model = NodalCurveModel {
        roots: roots.to_vec(),
        points: points.to_vec(),
        nodes,
        comp_nodes,
        n,
    };
    if !dual_graph_connected(&model) {
        return Err(KanevError::Internal(
            "dual graph disconnected although the roots generate E6".into(),
        ));
    }
    Ok(model)
}

fn dual_graph_connected(curve: &NodalCurveModel) -> bool {
    let mut seen = [false; 27];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(s) = stack.pop() {
        for &(nid, _) in &curve.comp_nodes[s] {
            let node = curve.nodes[nid];
            for t in [node.a_line, node.b_line] {
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
    }
    seen.iter().all(|&x| x)
}

/// An exactly solved homogeneous system: the section space of one sheaf.
#[derive(Debug)]
pub struct SectionSpace {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub dim: usize,
    pub basis: Vec<Vec<BigRational>>,
    pub warnings: Vec<String>,
}

/// Residue of `P_s(x) / prod (x - q_i)^power dx^power` at the node of
/// component `s` over `q`: evaluates the coefficient row of `P_s`.
fn residue_row(
    curve: &NodalCurveModel,
    offsets: &[(usize, usize)],
    s: usize,
    at_root: usize,
    power: u32,
    row: &mut [BigRational],
    coeff: &BigRational,
) {
    let q = &curve.points[at_root];
    let mut denom = BigRational::one();
    for &(nid, _) in &curve.comp_nodes[s] {
        let r2 = curve.nodes[nid].root;
        if r2 != at_root {
            let d = q - &curve.points[r2];
            for _ in 0..power {
                denom *= &d;
            }
        }
    }
    let (off, ncoef) = offsets[s];
    let mut powq = BigRational::one();
    for c in 0..ncoef {
        row[off + c] += coeff * &powq / &denom;
        powq *= q;
    }
}

/// Shared driver: polynomial degree per component is
/// `power * (n_s - 2) + shift`; residue conditions are sums (`power = 1`)
/// or differences (`power = 2`) at each node.
fn section_system(curve: &NodalCurveModel, power: u32, shift: i64) -> SectionSpace {
    let mut offsets = Vec::with_capacity(27);
    let mut total = 0usize;
    let mut warnings = Vec::new();
    for s in 0..27 {
        let deg = power as i64 * (curve.n[s] as i64 - 2) + shift;
        let ncoef = (deg + 1).max(0) as usize;
        if deg < -1 {
            warnings.push(format!(
                "component {} has only {} nodes; forced degree {} < -1 so the \
                 expected-dimension count fails",
                lines()[s].label,
                curve.n[s],
                deg
            ));
        }
        offsets.push((total, ncoef));
        total += ncoef;
    }
    let mut rows = Vec::with_capacity(curve.nodes.len());
    for node in &curve.nodes {
        let mut row = vec![BigRational::zero(); total];
        let plus = BigRational::one();
        let minus = if power == 1 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        residue_row(
            curve,
            &offsets,
            node.a_line,
            node.root,
            power,
            &mut row,
            &plus,
        );
        residue_row(
            curve,
            &offsets,
            node.b_line,
            node.root,
            power,
            &mut row,
            &minus,
        );
        rows.push(row);
    }
    let m = QMat::from_rows(rows);
    let basis = m.nullspace();
    SectionSpace {
        unknowns: total,
        equations: curve.nodes.len(),
        rank: total - basis.len(),
        dim: basis.len(),
        basis,
        warnings,
    }
}

/// `H^0` of the dualizing sheaf: degree `n_s - 2` numerators, residues at the
/// two branches of each node sum to zero.
pub fn h0_omega(curve: &NodalCurveModel) -> SectionSpace {
    section_system(curve, 1, 0)
}

/// `H^0` of the square of the dualizing sheaf: degree `2(n_s - 2)`, residue
/// differences vanish.
pub fn h0_omega_sq(curve: &NodalCurveModel) -> SectionSpace {
    section_system(curve, 2, 0)
}

/// `H^0(2 omega - 5 L)`: quadratic differentials vanishing to order five at
/// infinity, so degrees drop by 5. Emits a warning when some component has
/// fewer than 4 nodes.
pub fn h0_2omega_minus_5l(curve: &NodalCurveModel) -> SectionSpace {
    let mut space = section_system(curve, 2, -5);
    if curve.n.iter().any(|&ns| ns < 4) {
        space.warnings.push(
            "some components carry fewer than 4 nodes; at least 4 per component \
             are needed for the 72-by-72 count"
                .into(),
        );
    }
    space
}

/// `H^0(L)`: a degree-one polynomial per component, values at the two
/// branches of every node agree.
pub fn h0_l(curve: &NodalCurveModel) -> SectionSpace {
    let total = 54;
    let mut rows = Vec::with_capacity(curve.nodes.len());
    for node in &curve.nodes {
        let q = &curve.points[node.root];
        let mut row = vec![BigRational::zero(); total];
        row[2 * node.a_line] += BigRational::one();
        row[2 * node.a_line + 1] += q.clone();
        row[2 * node.b_line] -= BigRational::one();
        row[2 * node.b_line + 1] -= q.clone();
        rows.push(row);
    }
    let m = QMat::from_rows(rows);
    let basis = m.nullspace();
    SectionSpace {
        unknowns: total,
        equations: curve.nodes.len(),
        rank: total - basis.len(),
        dim: basis.len(),
        basis,
        warnings: Vec::new(),
    }
}

/// The residue-variable formulation of `H^0(omega)`: 72 variables `x_{ij}`,
/// one per node, cut by one residue-sum condition per component.
pub fn h0_omega_residue_form(curve: &NodalCurveModel) -> SectionSpace {
    let rows = component_rows(curve, |_| BigRational::one());
    let m = QMat::from_rows(rows);
    let basis = m.nullspace();
    SectionSpace {
        unknowns: 72,
        equations: 27,
        rank: 72 - basis.len(),
        dim: basis.len(),
        basis,
        warnings: Vec::new(),
    }
}

fn component_rows(
    curve: &NodalCurveModel,
    weight: impl Fn(&BigRational) -> BigRational,
) -> Vec<Vec<BigRational>> {
    let mut rows = Vec::with_capacity(27);
    for s in 0..27 {
        let mut row = vec![BigRational::zero(); 72];
        for &(nid, sign) in &curve.comp_nodes[s] {
            let w = weight(&curve.points[curve.nodes[nid].root]);
            row[nid] += qi(sign) * w;
        }
        rows.push(row);
    }
    rows
}

/// Result of the Petri generation check.
#[derive(Debug)]
pub struct PetriReport {
    pub dim_omega: usize,
    /// The subspace cut by the extra per-component conditions `sum c_i q_i = 0`.
    pub dim_x0: usize,
    /// The subspace cut by `sum c_i / q_i = 0`.
    pub dim_x1: usize,
    /// The subspace with equal residue variables over each branch point.
    pub dim_minus5: usize,
    pub span: usize,
    pub ok: bool,
}

/// Checks that the two Petri subspaces and the (-5)-subspace together span
/// `H^0(omega)` in the residue variables.
pub fn petri_check(curve: &NodalCurveModel) -> PetriReport {
    let base = component_rows(curve, |_| BigRational::one());
    let dim_omega = QMat::from_rows(base.clone()).nullspace().len();

    let mut sub_x0 = base.clone();
    sub_x0.extend(component_rows(curve, |q| q.clone()));
    let basis_x0 = QMat::from_rows(sub_x0).nullspace();

    let mut sub_x1 = base.clone();
    sub_x1.extend(component_rows(curve, |q| q.recip()));
    let basis_x1 = QMat::from_rows(sub_x1).nullspace();

    let mut sub_eq = base;
    for ri in 0..12 {
        let ids: Vec<usize> = curve
            .nodes
            .iter()
            .enumerate()
            .filter(|(_, n)| n.root == ri)
            .map(|(i, _)| i)
            .collect();
        for &other in &ids[1..] {
            let mut row = vec![BigRational::zero(); 72];
            row[ids[0]] += BigRational::one();
            row[other] -= BigRational::one();
            sub_eq.push(row);
        }
    }
    let basis_eq = QMat::from_rows(sub_eq).nullspace();

    let mut all = Vec::new();
    all.extend(basis_x0.iter().cloned());
    all.extend(basis_x1.iter().cloned());
    all.extend(basis_eq.iter().cloned());
    let span = if all.is_empty() {
        0
    } else {
        QMat::from_rows(all).rank()
    };
    PetriReport {
        dim_omega,
        dim_x0: basis_x0.len(),
        dim_x1: basis_x1.len(),
        dim_minus5: basis_eq.len(),
        span,
        ok: span == dim_omega,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets::{petri_roots, standard_points, twok5_roots};

    fn curve_2k5() -> NodalCurveModel {
        build_curve(&twok5_roots(), &standard_points()).unwrap()
    }

    fn curve_petri() -> NodalCurveModel {
        build_curve(&petri_roots(), &standard_points()).unwrap()
    }

    #[test]
    fn curve_shape() {
        let c = curve_2k5();
        assert_eq!(c.nodes.len(), 72);
        assert_eq!(c.n.iter().sum::<usize>(), 144);
        assert_eq!(c.genus(), 46);
        assert!(c.n.iter().all(|&ns| ns >= 4));
        assert_eq!(c.n.iter().map(|&ns| 2 * ns as i64 - 8).sum::<i64>(), 72);
    }

    #[test]
    fn bad_points_rejected() {
        let mut pts = standard_points();
        pts[3] = BigRational::zero();
        assert!(matches!(
            build_curve(&twok5_roots(), &pts),
            Err(KanevError::DegenerateInput(_))
        ));
        let mut pts = standard_points();
        pts[5] = pts[6].clone();
        assert!(build_curve(&twok5_roots(), &pts).is_err());
        assert!(build_curve(&twok5_roots(), &standard_points()[..7]).is_err());
    }

    #[test]
    fn omega_has_dim_genus() {
        let s = h0_omega(&curve_2k5());
        assert_eq!((s.unknowns, s.equations, s.rank, s.dim), (117, 72, 71, 46));
        let s = h0_omega(&curve_petri());
        assert_eq!((s.rank, s.dim), (71, 46));
    }

    #[test]
    fn omega_squared_has_dim_3g_minus_3() {
        let s = h0_omega_sq(&curve_2k5());
        assert_eq!((s.unknowns, s.equations, s.rank, s.dim), (207, 72, 72, 135));
    }

    #[test]
    fn twist_vanishes_for_the_reference_input() {
        let s = h0_2omega_minus_5l(&curve_2k5());
        assert_eq!((s.unknowns, s.equations, s.rank, s.dim), (72, 72, 72, 0));
        assert!(s.warnings.is_empty());
    }

    #[test]
    fn twist_warns_when_a_component_has_few_nodes() {
        let c = curve_petri(); // has components with n_s = 3
        let s = h0_2omega_minus_5l(&c);
        assert!(!s.warnings.is_empty());
        assert!(s.dim > 0);
        assert!(s.unknowns > s.equations);
    }

    #[test]
    fn pencil_has_two_sections() {
        for c in [curve_2k5(), curve_petri()] {
            let s = h0_l(&c);
            assert_eq!(s.dim, 2);
            // 1 and z are always solutions
            let mut ones = vec![BigRational::zero(); 54];
            let mut zs = vec![BigRational::zero(); 54];
            for i in 0..27 {
                ones[2 * i] = BigRational::one();
                zs[2 * i + 1] = BigRational::one();
            }
            let m = QMat::from_rows(
                s.basis
                    .iter()
                    .cloned()
                    .chain([ones, zs])
                    .collect::<Vec<_>>(),
            );
            assert_eq!(m.rank(), 2);
        }
    }

    #[test]
    fn residue_formulation_agrees() {
        let s = h0_omega_residue_form(&curve_2k5());
        assert_eq!((s.unknowns, s.equations, s.rank, s.dim), (72, 27, 26, 46));
    }

    #[test]
    fn petri_subspaces_span() {
        let rep = petri_check(&curve_petri());
        assert_eq!(rep.dim_omega, 46);
        assert_eq!((rep.dim_x0, rep.dim_x1, rep.dim_minus5), (20, 20, 6));
        assert_eq!(rep.span, 46);
        assert!(rep.ok);
    }

    #[test]
    fn minus5_subspace_matches_the_kernel_lattice() {
        // equal residue variables per root <=> coefficients in Ker(phi)
        let c = curve_petri();
        let rep = petri_check(&c);
        assert_eq!(rep.dim_minus5, 6);
        let kb = crate::degeneration::kernel_basis(&c.roots).unwrap();
        assert_eq!(kb.basis.len(), rep.dim_minus5);
    }

    #[test]
    fn dimensions_survive_reordering_the_input() {
        // permuting the (root, point) pairs relabels rows and columns of
        // every system; the exact ranks cannot move
        let roots = twok5_roots();
        let points = standard_points();
        let perm = [7usize, 2, 9, 0, 11, 4, 1, 10, 3, 6, 5, 8];
        let roots2: Vec<_> = perm.iter().map(|&i| roots[i]).collect();
        let points2: Vec<_> = perm.iter().map(|&i| points[i].clone()).collect();
        let a = build_curve(&roots, &points).unwrap();
        let b = build_curve(&roots2, &points2).unwrap();
        assert_eq!(h0_omega(&a).dim, h0_omega(&b).dim);
        assert_eq!(h0_omega_sq(&a).rank, h0_omega_sq(&b).rank);
        assert_eq!(h0_2omega_minus_5l(&a).dim, h0_2omega_minus_5l(&b).dim);
        assert_eq!(h0_l(&a).dim, h0_l(&b).dim);
    }

    #[test]
    fn omega_squares_lie_in_omega_sq() {
        // pointwise products of two omega-sections solve the omega^2 system
        let c = curve_2k5();
        let w = h0_omega(&c);
        let w2 = h0_omega_sq(&c);
        // offsets for both coefficient layouts
        let mut off1 = Vec::new();
        let mut t = 0;
        for s in 0..27 {
            off1.push(t);
            t += c.n[s] - 1;
        }
        let mut off2 = Vec::new();
        let mut t2 = 0;
        for s in 0..27 {
            off2.push(t2);
            t2 += 2 * c.n[s] - 3;
        }
        // multiply the first two basis vectors componentwise as polynomials
        for (u, v) in [(0usize, 0usize), (0, 1), (1, 1)] {
            let pu = &w.basis[u];
            let pv = &w.basis[v];
            let mut prod = vec![BigRational::zero(); w2.unknowns];
            for s in 0..27 {
                let nc = c.n[s] - 1;
                for i in 0..nc {
                    for j in 0..nc {
                        let val = &pu[off1[s] + i] * &pv[off1[s] + j];
                        prod[off2[s] + i + j] += val;
                    }
                }
            }
            // check membership: rank does not grow
            let mut rows = w2.basis.clone();
            let before = QMat::from_rows(rows.clone()).rank();
            rows.push(prod);
            assert_eq!(QMat::from_rows(rows).rank(), before);
        }
    }
}
