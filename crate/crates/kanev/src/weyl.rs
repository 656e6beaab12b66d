//! `W(E6)` as a permutation group on the 27 lines: generation, conjugacy
//! classes with their ATLAS/GAP labels, reflection products, invariant
//! dimensions.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::KanevError;
use crate::lattice::{lines, simple_roots, LatticeVector, Root};
use crate::linalg::{qi, QMat};

/// A permutation of the 27 canonical line labels.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub [u8; 27]);

impl Perm {
    pub fn identity() -> Perm {
        let mut p = [0u8; 27];
        for (i, x) in p.iter_mut().enumerate() {
            *x = i as u8;
        }
        Perm(p)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut p = [0u8; 27];
        for i in 0..27 {
            p[i] = self.0[other.0[i] as usize];
        }
        Perm(p)
    }

    pub fn inverse(&self) -> Perm {
        let mut p = [0u8; 27];
        for i in 0..27 {
            p[self.0[i] as usize] = i as u8;
        }
        Perm(p)
    }

    /// Cycle type as a partition of 27, parts descending.
    pub fn cycle_type(&self) -> Vec<u8> {
        let mut seen = [false; 27];
        let mut parts = Vec::new();
        for i in 0..27 {
            if seen[i] {
                continue;
            }
            let mut len = 0u8;
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] as usize;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// Cycles of the permutation (including fixed points), each cycle sorted
    /// by smallest element, cycles ordered by smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 27];
        let mut out = Vec::new();
        for i in 0..27 {
            if seen[i] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                cyc.push(j);
                j = self.0[j] as usize;
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .iter()
            .fold(1u64, |acc, &c| num_integer::lcm(acc, c as u64))
    }

    /// Matrix of the action on `I^{1,6}` in the basis `f0..f6`, recovered
    /// from the images of the lines (`f_i = a_i`, `f0 = c12 + a1 + a2`).
    pub fn matrix7(&self) -> [[i64; 7]; 7] {
        let ls = lines();
        let image = |idx: usize| ls[self.apply(idx)].vec;
        // a_i are lines 0..5, c12 is line 12
        let wa: Vec<LatticeVector> = (0..6).map(image).collect();
        let wf0 = image(12) + wa[0] + wa[1];
        let cols = [wf0, wa[0], wa[1], wa[2], wa[3], wa[4], wa[5]];
        let mut m = [[0i64; 7]; 7];
        for (j, col) in cols.iter().enumerate() {
            for i in 0..7 {
                m[i][j] = col.0[i];
            }
        }
        m
    }

    /// Matrix of the action on `E6` in the simple-root basis `r1..r6`.
    pub fn matrix6(&self) -> [[i64; 6]; 6] {
        let m7 = self.matrix7();
        let simple = simple_roots();
        let mut out = [[0i64; 6]; 6];
        for (j, r) in simple.iter().enumerate() {
            let mut img = [0i64; 7];
            for i in 0..7 {
                for (k, x) in r.vec.0.iter().enumerate() {
                    img[i] += m7[i][k] * x;
                }
            }
            let coords =
                e6_coordinates(&LatticeVector(img)).expect("image of a simple root lies in E6");
            out[..6]
                .iter_mut()
                .zip(coords)
                .for_each(|(row, c)| row[j] = c);
        }
        out
    }

    /// Determinant of the 6-dimensional action: +1 for rotations (products of
    /// an even number of reflections), -1 otherwise.
    pub fn det6(&self) -> i64 {
        let m = self.matrix6();
        let rows: Vec<Vec<i64>> = m.iter().map(|r| r.to_vec()).collect();
        let d = crate::linalg::ZMat::from_i64_rows(&rows).bareiss_det();
        if d == 1.into() {
            1
        } else {
            -1
        }
    }

    /// Dimension of the fixed subspace of the action on `E6 (x) Q`.
    pub fn invariant_dim(&self) -> usize {
        let m = self.matrix6();
        let mut rows = Vec::with_capacity(6);
        for i in 0..6 {
            let mut row: Vec<BigRational> = m[i].iter().map(|&x| qi(x)).collect();
            row[i] -= qi(1);
            rows.push(row);
        }
        6 - QMat::from_rows(rows).rank()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", &self.0[..])
    }
}

impl fmt::Display for Perm {
    /// Cycle notation in line labels, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls = lines();
        let mut wrote = false;
        for cyc in self.cycles() {
            if cyc.len() == 1 {
                continue;
            }
            write!(f, "(")?;
            for (pos, &i) in cyc.iter().enumerate() {
                if pos > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", ls[i].label)?;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Integer coordinates of `v` in the simple-root basis, when `v` lies in `E6`.
pub fn e6_coordinates(v: &LatticeVector) -> Option<[i64; 6]> {
    // solve the 6x6 Gram system <v, r_i> = sum_j n_j <r_j, r_i>
    static GRAM_INV: OnceLock<Vec<Vec<BigRational>>> = OnceLock::new();
    let inv = GRAM_INV.get_or_init(|| {
        let simple = simple_roots();
        let mut aug = QMat::zero(6, 12);
        for i in 0..6 {
            for j in 0..6 {
                aug[(i, j)] = qi(simple[i].vec.pairing(&simple[j].vec));
            }
            aug[(i, 6 + i)] = qi(1);
        }
        let (rank, _) = aug.row_reduce();
        assert_eq!(rank, 6);
        (0..6)
            .map(|i| (0..6).map(|j| aug[(i, 6 + j)].clone()).collect())
            .collect()
    });
    if v.pairing(&LatticeVector::canonical_class()) != 0 {
        return None;
    }
    let simple = simple_roots();
    let rhs: Vec<BigRational> = simple.iter().map(|r| qi(r.vec.pairing(v))).collect();
    let mut out = [0i64; 6];
    for i in 0..6 {
        let mut c = BigRational::zero();
        for j in 0..6 {
            c += &inv[i][j] * &rhs[j];
        }
        if !c.is_integer() {
            return None;
        }
        out[i] = i64::try_from(c.to_integer()).ok()?;
    }
    // confirm the reconstruction
    let mut chk = LatticeVector::ZERO;
    for j in 0..6 {
        chk = chk + simple[j].vec.scale(out[j]);
    }
    (chk == *v).then_some(out)
}

/// The reflection `v -> v + (v, r) r` as a permutation of the lines.
pub fn reflection(r: &Root) -> Result<Perm, KanevError> {
    if !r.vec.is_root() {
        return Err(KanevError::NotARoot(r.vec.to_string()));
    }
    let ls = lines();
    let mut p = [0u8; 27];
    for (i, l) in ls.iter().enumerate() {
        let c = l.vec.pairing(&r.vec);
        let img = l.vec + r.vec.scale(c);
        p[i] = crate::lattice::line_index(&img).expect("reflection permutes lines") as u8;
    }
    Ok(Perm(p))
}

/// The 36 reflection generators, one per positive root, in canonical order.
pub fn reflection_generators() -> Vec<Perm> {
    crate::lattice::positive_roots()
        .map(|r| reflection(r).unwrap())
        .collect()
}

/// Relative position of two roots.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootPair {
    Equal,
    Opposite,
    /// Orthogonal roots; the reflection product lies in class 2b.
    Syzygetic,
    /// Pairing +-1; the reflection product lies in class 3b.
    Azygetic,
}

pub fn classify_pair(r: &Root, s: &Root) -> Result<RootPair, KanevError> {
    if !r.vec.is_root() {
        return Err(KanevError::NotARoot(r.vec.to_string()));
    }
    if !s.vec.is_root() {
        return Err(KanevError::NotARoot(s.vec.to_string()));
    }
    Ok(match r.vec.pairing(&s.vec) {
        2 => RootPair::Opposite, // (r, -r) = 2 since norms are -2
        -2 => RootPair::Equal,
        0 => RootPair::Syzygetic,
        1 | -1 => RootPair::Azygetic,
        p => unreachable!("impossible root pairing {p}"),
    })
}

/// A finite permutation group on the 27 lines, closed under composition.
pub struct Group {
    pub elems: Vec<Perm>,
    index: HashMap<Perm, u32>,
}

impl Group {
    /// Breadth-first closure of the generators.
    pub fn generate(gens: &[Perm]) -> Group {
        let mut index = HashMap::new();
        let mut elems = vec![Perm::identity()];
        index.insert(Perm::identity(), 0u32);
        let mut frontier = vec![Perm::identity()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for g in &frontier {
                for h in gens {
                    let x = h.compose(g);
                    if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(x) {
                        slot.insert(elems.len() as u32);
                        elems.push(x);
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        Group { elems, index }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }
}

/// The full Weyl group W(E6), generated once and cached.
pub fn weyl_e6() -> &'static Group {
    static GROUP: OnceLock<Group> = OnceLock::new();
    GROUP.get_or_init(|| Group::generate(&reflection_generators()))
}

/// A conjugacy class of `W(E6)` with its GAP/ATLAS label.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub name: &'static str,
    pub order: u64,
    /// True for products of an even number of reflections (det +1 on E6).
    pub even: bool,
    pub cycle_type: Vec<u8>,
    pub inv_dim: usize,
    pub size: usize,
    pub rep: Perm,
}

/// The 25 conjugacy classes of `W(E6)`.
pub struct ClassTable {
    pub classes: Vec<ConjClass>,
    /// Class index of every group element, parallel to `weyl_e6().elems`.
    pub class_of: Vec<u32>,
}

impl ClassTable {
    pub fn class_index_of(&self, p: &Perm) -> Option<usize> {
        weyl_e6().position(p).map(|i| self.class_of[i] as usize)
    }

    pub fn class_of_perm(&self, p: &Perm) -> Option<&ConjClass> {
        self.class_index_of(p).map(|i| &self.classes[i])
    }

    pub fn by_name(&self, name: &str) -> Option<&ConjClass> {
        self.classes.iter().find(|c| c.name == name)
    }
}

/// One labelling key: (name, order, even, cycle type, inv dim, class size).
type ClassKey = (&'static str, u64, bool, &'static [u8], usize, usize);

/// GAP labels keyed on (order, even, cycle type, inv dim, class size).
/// Within one element order, even classes come first, then odd, each sorted by
/// ascending class size; this reproduces the labels the paper's tables use.
/// The pair {6a, 6c} shares (cycle type, inv dim) and is split by class size.
const CLASS_KEYS: [ClassKey; 25] = [
    ("1a", 1, true, &[1; 27], 6, 1),
    (
        "2a",
        2,
        true,
        &[2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1],
        2,
        45,
    ),
    (
        "2b",
        2,
        true,
        &[2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1],
        4,
        270,
    ),
    (
        "2c",
        2,
        false,
        &[
            2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
        ],
        5,
        36,
    ),
    (
        "2d",
        2,
        false,
        &[2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1],
        3,
        540,
    ),
    ("3a", 3, true, &[3, 3, 3, 3, 3, 3, 3, 3, 3], 0, 80),
    (
        "3b",
        3,
        true,
        &[3, 3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        4,
        240,
    ),
    ("3c", 3, true, &[3, 3, 3, 3, 3, 3, 3, 3, 3], 2, 480),
    ("4a", 4, true, &[4, 4, 4, 4, 4, 4, 1, 1, 1], 2, 540),
    ("4b", 4, true, &[4, 4, 4, 4, 4, 2, 2, 2, 1], 2, 3240),
    ("4c", 4, false, &[4, 4, 4, 4, 4, 2, 2, 2, 1], 1, 540),
    ("4d", 4, false, &[4, 4, 4, 4, 4, 2, 1, 1, 1, 1, 1], 3, 1620),
    ("5a", 5, true, &[5, 5, 5, 5, 5, 1, 1], 2, 5184),
    ("6a", 6, true, &[6, 6, 6, 6, 3], 0, 720),
    ("6b", 6, true, &[6, 6, 6, 2, 2, 2, 1, 1, 1], 2, 1440),
    ("6c", 6, true, &[6, 6, 6, 6, 3], 0, 1440),
    ("6d", 6, true, &[6, 6, 3, 3, 2, 2, 2, 2, 1], 2, 2160),
    ("6e", 6, false, &[6, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1], 3, 1440),
    ("6f", 6, false, &[6, 6, 3, 3, 3, 3, 3], 1, 1440),
    ("6g", 6, false, &[6, 6, 6, 6, 3], 1, 4320),
    ("8a", 8, false, &[8, 8, 8, 2, 1], 1, 6480),
    ("9a", 9, true, &[9, 9, 9], 0, 5760),
    ("10a", 10, false, &[10, 5, 5, 5, 2], 1, 5184),
    ("12a", 12, true, &[12, 12, 3], 0, 4320),
    ("12b", 12, false, &[12, 6, 4, 4, 1], 1, 4320),
];

fn label_class(
    order: u64,
    even: bool,
    cycle_type: &[u8],
    inv_dim: usize,
    size: usize,
) -> &'static str {
    for (name, o, e, ct, iv, sz) in CLASS_KEYS {
        if o == order && e == even && ct == cycle_type && iv == inv_dim && sz == size {
            return name;
        }
    }
    panic!("no class with order {order} even {even} type {cycle_type:?} inv {inv_dim} size {size}");
}

/// Computes the 25 conjugacy classes of the full group.
pub fn conjugacy_classes() -> &'static ClassTable {
    static TABLE: OnceLock<ClassTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let group = weyl_e6();
        let gens = reflection_generators();
        let n = group.order();
        let mut class_of = vec![u32::MAX; n];
        let mut raw: Vec<(Perm, usize)> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = raw.len() as u32;
            // conjugation orbit; reflection generators are involutions
            let mut members = vec![start];
            class_of[start] = cid;
            let mut frontier = vec![start];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &i in &frontier {
                    let x = group.elems[i];
                    for h in &gens {
                        let y = h.compose(&x).compose(h);
                        let j = group.position(&y).expect("conjugate stays in group");
                        if class_of[j] == u32::MAX {
                            class_of[j] = cid;
                            members.push(j);
                            next.push(j);
                        }
                    }
                }
                frontier = next;
            }
            // deterministic representative: smallest permutation in the class
            let rep = members.iter().map(|&i| group.elems[i]).min().unwrap();
            raw.push((rep, members.len()));
        }
        assert_eq!(raw.len(), 25, "W(E6) must have 25 conjugacy classes");
        let mut classes: Vec<ConjClass> = raw
            .iter()
            .map(|(rep, size)| {
                let order = rep.order();
                let even = rep.det6() == 1;
                let cycle_type = rep.cycle_type();
                let inv_dim = rep.invariant_dim();
                ConjClass {
                    name: label_class(order, even, &cycle_type, inv_dim, *size),
                    order,
                    even,
                    cycle_type,
                    inv_dim,
                    size: *size,
                    rep: *rep,
                }
            })
            .collect();
        // remap class ids to the name-sorted order used everywhere in reports
        let mut perm_ids: Vec<usize> = (0..classes.len()).collect();
        perm_ids.sort_by_key(|&i| (classes[i].order, !classes[i].even, classes[i].name));
        let mut new_of_old = vec![0u32; classes.len()];
        for (new, &old) in perm_ids.iter().enumerate() {
            new_of_old[old] = new as u32;
        }
        for c in &mut class_of {
            *c = new_of_old[*c as usize];
        }
        let mut sorted = Vec::with_capacity(classes.len());
        for &old in &perm_ids {
            sorted.push(classes[old].clone());
        }
        classes = sorted;
        ClassTable { classes, class_of }
    })
}

/// Classes reachable as products of exactly `i` reflections, for `i = 0..=6`,
/// by class-level breadth-first search.
pub fn reflection_products_table() -> Vec<Vec<&'static str>> {
    let table = conjugacy_classes();
    let gens = reflection_generators();
    let mut levels = Vec::with_capacity(7);
    let mut current: Vec<usize> = vec![table.class_index_of(&Perm::identity()).unwrap()];
    for _ in 0..=6 {
        let mut names: Vec<&'static str> = current.iter().map(|&i| table.classes[i].name).collect();
        names.sort();
        levels.push(names);
        let mut next: Vec<usize> = Vec::new();
        for &ci in &current {
            let rep = table.classes[ci].rep;
            for h in &gens {
                let idx = table.class_index_of(&h.compose(&rep)).unwrap();
                if !next.contains(&idx) {
                    next.push(idx);
                }
            }
        }
        next.sort_unstable();
        current = next;
    }
    levels
}

/// Fast class lookup from invariants without enumerating the group. The pair
/// {6a, 6c} has identical (cycle type, inv dim); it is split by the invariant
/// dimension of u^2, whose (3^9)-class differs (3a for 6a, 3c for 6c).
pub fn identify_class_fast(p: &Perm) -> &'static str {
    let order = p.order();
    let even = p.det6() == 1;
    let ct = p.cycle_type();
    let inv = p.invariant_dim();
    let matches: Vec<&ClassKey> = CLASS_KEYS
        .iter()
        .filter(|(_, o, e, c, iv, _)| {
            *o == order && *e == even && *c == ct.as_slice() && *iv == inv
        })
        .collect();
    match matches.as_slice() {
        [one] => one.0,
        [_, _] => {
            // 6a vs 6c
            let sq = p.compose(p);
            if sq.invariant_dim() == 0 {
                "6a"
            } else {
                "6c"
            }
        }
        other => panic!("class key matched {} entries", other.len()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::RootLabel;

    #[test]
    fn reflection_in_alpha_max_swaps_the_double_six() {
        let r = Root::from_label(RootLabel::Max, false);
        let w = reflection(&r).unwrap();
        for i in 0..6 {
            assert_eq!(w.apply(i), i + 6);
            assert_eq!(w.apply(i + 6), i);
        }
        for i in 12..27 {
            assert_eq!(w.apply(i), i);
        }
        assert_eq!(w.compose(&w), Perm::identity());
        assert_eq!(reflection(&r.negate()).unwrap(), w);
    }

    #[test]
    fn reflections_have_cycle_type_2_6() {
        let mut expected = vec![2u8; 6];
        expected.extend(vec![1u8; 15]);
        for w in reflection_generators() {
            assert_eq!(w.cycle_type(), expected);
            assert_eq!(w.det6(), -1);
            assert_eq!(w.invariant_dim(), 5);
        }
    }

    #[test]
    fn perms_preserve_line_incidence() {
        let ls = lines();
        for w in reflection_generators().iter().take(8) {
            for s in 0..27 {
                for t in 0..27 {
                    let lhs = ls[s].vec.pairing(&ls[t].vec);
                    let rhs = ls[w.apply(s)].vec.pairing(&ls[w.apply(t)].vec);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn matrix6_preserves_the_gram_matrix() {
        let simple = simple_roots();
        let gram = |i: usize, j: usize| simple[i].vec.pairing(&simple[j].vec);
        for w in reflection_generators().iter().take(6) {
            let m = w.matrix6();
            for i in 0..6 {
                for j in 0..6 {
                    let mut s = 0i64;
                    for k in 0..6 {
                        for l in 0..6 {
                            s += m[k][i] * gram(k, l) * m[l][j];
                        }
                    }
                    assert_eq!(s, gram(i, j));
                }
            }
        }
    }

    #[test]
    fn single_reflection_generates_z2() {
        let w = reflection_generators()[0];
        assert_eq!(Group::generate(&[w]).order(), 2);
    }

    #[test]
    fn d5_subgroup_has_order_1920() {
        let simple = simple_roots();
        let gens: Vec<Perm> = simple[..5].iter().map(|r| reflection(r).unwrap()).collect();
        assert_eq!(Group::generate(&gens).order(), 1920);
    }

    #[test]
    fn syzygetic_and_azygetic_products() {
        let a12 = Root::from_label(RootLabel::Ij(1, 2), false);
        let a34 = Root::from_label(RootLabel::Ij(3, 4), false);
        let a13 = Root::from_label(RootLabel::Ij(1, 3), false);
        assert_eq!(classify_pair(&a12, &a34).unwrap(), RootPair::Syzygetic);
        assert_eq!(classify_pair(&a12, &a13).unwrap(), RootPair::Azygetic);
        assert_eq!(classify_pair(&a12, &a12).unwrap(), RootPair::Equal);
        assert_eq!(
            classify_pair(&a12, &a12.negate()).unwrap(),
            RootPair::Opposite
        );
        let syz = reflection(&a12)
            .unwrap()
            .compose(&reflection(&a34).unwrap());
        let mut expect = vec![2u8; 10];
        expect.extend(vec![1u8; 7]);
        assert_eq!(syz.cycle_type(), expect);
        let azy = reflection(&a12)
            .unwrap()
            .compose(&reflection(&a13).unwrap());
        let mut expect = vec![3u8; 6];
        expect.extend(vec![1u8; 9]);
        assert_eq!(azy.cycle_type(), expect);
    }

    #[test]
    fn named_classes_of_small_reflection_products() {
        let table = conjugacy_classes();
        let w12 = reflection(&Root::from_label(RootLabel::Ij(1, 2), false)).unwrap();
        let w34 = reflection(&Root::from_label(RootLabel::Ij(3, 4), false)).unwrap();
        let w13 = reflection(&Root::from_label(RootLabel::Ij(1, 3), false)).unwrap();
        assert_eq!(table.class_of_perm(&w12).unwrap().name, "2c");
        assert_eq!(table.class_of_perm(&w12.compose(&w34)).unwrap().name, "2b");
        assert_eq!(table.class_of_perm(&w12.compose(&w13)).unwrap().name, "3b");
        assert_eq!(table.class_of_perm(&Perm::identity()).unwrap().name, "1a");
        assert_eq!(table.by_name("2c").unwrap().inv_dim, 5);
    }

    #[test]
    fn reflection_product_levels() {
        let levels = reflection_products_table();
        assert_eq!(levels[0], vec!["1a"]);
        assert_eq!(levels[1], vec!["2c"]);
        assert_eq!(levels[2], vec!["1a", "2b", "3b"]);
        assert!(levels[6].contains(&"9a"));
        // parity: even counts reach only rotation classes
        let table = conjugacy_classes();
        for (i, names) in levels.iter().enumerate() {
            for name in names {
                assert_eq!(table.by_name(name).unwrap().even, i % 2 == 0);
            }
        }
        // level 6 reaches all 15 even classes, level 5 all 10 odd ones
        assert_eq!(levels[6].len(), 15);
        assert_eq!(levels[5].len(), 10);
    }

    #[test]
    fn cycle_type_and_inv_dim_almost_separate_the_classes() {
        // the advertised key (cycle type, inv dim) has exactly one collision,
        // {6a, 6c}, which class size (or the power map to {3a, 3c}) resolves
        let table = conjugacy_classes();
        let mut collisions = Vec::new();
        for (i, a) in table.classes.iter().enumerate() {
            for b in table.classes.iter().skip(i + 1) {
                if a.cycle_type == b.cycle_type && a.inv_dim == b.inv_dim {
                    collisions.push((a.name, b.name));
                }
            }
        }
        assert_eq!(collisions, vec![("6a", "6c")]);
        // the collision really is split by the square's invariant dimension
        let a = table.by_name("6a").unwrap();
        let c = table.by_name("6c").unwrap();
        assert_eq!(a.rep.compose(&a.rep).invariant_dim(), 0);
        assert_eq!(c.rep.compose(&c.rep).invariant_dim(), 2);
        assert_ne!(a.size, c.size);
    }

    #[test]
    fn group_axioms_on_a_sample() {
        let g = weyl_e6();
        let mut rng_state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            rng_state = rng_state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (rng_state >> 33) as usize % g.order()
        };
        for _ in 0..200 {
            let a = g.elems[next()];
            let b = g.elems[next()];
            assert!(g.contains(&a.compose(&b)));
            assert!(g.contains(&a.inverse()));
        }
    }

    #[test]
    fn fast_class_lookup_agrees_with_table_on_small_products() {
        let gens = reflection_generators();
        let table = conjugacy_classes();
        let syz = gens[0].compose(&gens[5]); // a12 * a34? order irrelevant, sampled below
        let _ = syz;
        for (i, j) in [(0usize, 1usize), (0, 7), (3, 11), (5, 20), (9, 33)] {
            let p = gens[i].compose(&gens[j]);
            assert_eq!(
                identify_class_fast(&p),
                table.class_of_perm(&p).unwrap().name
            );
        }
    }
}
