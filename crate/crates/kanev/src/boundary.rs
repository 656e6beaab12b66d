//! Boundary-divisor combinatorics: orbits of reflection subgroups on the 27
//! lines, root-subsystem classification by Dynkin type, bipartite cover
//! graphs, and toric ranks of degenerate Prym-Tyurin varieties.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;

use crate::error::KanevError;
use crate::lattice::{all_roots, lines, LatticeVector, Root};
use crate::linalg::{qi, QMat};
use crate::weyl::{reflection, Perm};

/// Partition of the 27 lines into orbits, blocks sorted by smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// The trivial partition with a single block.
    pub fn trivial() -> OrbitPartition {
        OrbitPartition {
            blocks: vec![(0..27).collect()],
        }
    }

    pub fn discrete() -> OrbitPartition {
        OrbitPartition {
            blocks: (0..27).map(|i| vec![i]).collect(),
        }
    }

    /// Multiset of block sizes, descending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_invariant_under(&self, u: &Perm) -> bool {
        self.blocks.iter().all(|b| {
            let set: BTreeSet<usize> = b.iter().copied().collect();
            b.iter().all(|&s| set.contains(&u.apply(s)))
        })
    }

    /// Blocks as sets of Schlaefli labels, each block sorted, for reports.
    pub fn labelled_blocks(&self) -> Vec<Vec<String>> {
        let ls = lines();
        self.blocks
            .iter()
            .map(|b| {
                let mut v: Vec<String> = b.iter().map(|&s| ls[s].label.to_string()).collect();
                v.sort();
                v
            })
            .collect()
    }
}

/// Orbits on the 27 lines of the subgroup generated by the reflections in
/// the given roots. An empty list yields 27 singletons.
pub fn orbits(gens: &[Root]) -> Result<OrbitPartition, KanevError> {
    let perms: Vec<Perm> = gens.iter().map(reflection).collect::<Result<_, _>>()?;
    let mut seen = [false; 27];
    let mut blocks = Vec::new();
    for start in 0..27 {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for p in &perms {
                let y = p.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        orbit.sort_unstable();
        blocks.push(orbit);
    }
    Ok(OrbitPartition { blocks })
}

/// Dynkin type of a root subsystem: simple components with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SublatticeType {
    /// `(series, rank, multiplicity)`, ordered by rank descending then series.
    pub components: Vec<(char, usize, usize)>,
}

impl SublatticeType {
    pub fn rank(&self) -> usize {
        self.components.iter().map(|&(_, r, m)| r * m).sum()
    }
}

impl fmt::Display for SublatticeType {
    /// Renders like `E6`, `A5A1`, `A2^3`, `A3A1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        for &(series, rank, mult) in &self.components {
            write!(f, "{series}{rank}")?;
            if mult > 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}

/// All types that can occur as root sublattices of E6, used as a consistency
/// check on the classifier.
pub const ALLOWED_TYPES: [&str; 20] = [
    "E6", "A5A1", "A2^3", "A5", "D5", "A4A1", "A3A1^2", "A2^2A1", "A4", "D4", "A2^2", "A3A1",
    "A2A1^2", "A1^4", "A3", "A2A1", "A1^3", "A2", "A1^2", "A1",
];

/// Closed root subsystem generated by the given roots: repeatedly reflect
/// known roots in each other until stable. Bounded by the 72 roots of E6.
pub fn subsystem_closure(gens: &[Root]) -> Result<Vec<LatticeVector>, KanevError> {
    let mut set: BTreeSet<LatticeVector> = BTreeSet::new();
    for r in gens {
        if !r.vec.is_root() {
            return Err(KanevError::NotARoot(r.vec.to_string()));
        }
        set.insert(r.vec);
        set.insert(-r.vec);
    }
    loop {
        let current: Vec<LatticeVector> = set.iter().copied().collect();
        let before = set.len();
        for r in &current {
            for s in &current {
                let c = s.pairing(r);
                set.insert(*s + r.scale(c));
            }
        }
        if set.len() == before {
            break;
        }
    }
    Ok(set.into_iter().collect())
}

/// Names the Dynkin type of the subsystem generated by the given roots.
pub fn sublattice_type(gens: &[Root]) -> Result<SublatticeType, KanevError> {
    let system = subsystem_closure(gens)?;
    if system.is_empty() {
        return Ok(SublatticeType {
            components: Vec::new(),
        });
    }
    // positive roots via a functional that vanishes on no root of E6
    let weight = LatticeVector([0, 1, 17, 37, 59, 83, 109]);
    debug_assert!(all_roots().iter().all(|r| r.vec.pairing(&weight) != 0));
    let positives: Vec<LatticeVector> = system
        .iter()
        .copied()
        .filter(|v| v.pairing(&weight) > 0)
        .collect();
    // simple roots: positive roots that are not sums of two positives
    let simples: Vec<LatticeVector> = positives
        .iter()
        .copied()
        .filter(|v| {
            !positives.iter().any(|p| {
                let rest = *v - *p;
                rest != LatticeVector::ZERO && positives.contains(&rest)
            })
        })
        .collect();
    // connected components of the Dynkin graph
    let n = simples.len();
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for i in 0..n {
        if comp[i] != usize::MAX {
            continue;
        }
        let mut stack = vec![i];
        comp[i] = ncomp;
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if comp[y] == usize::MAX && simples[x].pairing(&simples[y]) != 0 {
                    comp[y] = ncomp;
                    stack.push(y);
                }
            }
        }
        ncomp += 1;
    }
    let mut named: Vec<(char, usize)> = Vec::new();
    for c in 0..ncomp {
        let verts: Vec<usize> = (0..n).filter(|&i| comp[i] == c).collect();
        named.push(classify_component(&simples, &verts)?);
    }
    named.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut components: Vec<(char, usize, usize)> = Vec::new();
    for (series, rank) in named {
        match components.last_mut() {
            Some(last) if last.0 == series && last.1 == rank => last.2 += 1,
            _ => components.push((series, rank, 1)),
        }
    }
    let t = SublatticeType { components };
    if !ALLOWED_TYPES.contains(&t.to_string().as_str()) {
        return Err(KanevError::Internal(format!(
            "computed type {t} is not a root sublattice of E6"
        )));
    }
    Ok(t)
}

fn classify_component(
    simples: &[LatticeVector],
    verts: &[usize],
) -> Result<(char, usize), KanevError> {
    let n = verts.len();
    let deg = |i: usize| -> usize {
        verts
            .iter()
            .filter(|&&j| j != i && simples[i].pairing(&simples[j]) != 0)
            .count()
    };
    let degrees: Vec<usize> = verts.iter().map(|&i| deg(i)).collect();
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    if max_deg <= 2 {
        return Ok(('A', n));
    }
    if max_deg == 3 && degrees.iter().filter(|&&d| d == 3).count() == 1 {
        // distinguish D_n from E6 by leg lengths at the branch vertex
        let branch = verts[degrees.iter().position(|&d| d == 3).unwrap()];
        let mut legs: Vec<usize> = Vec::new();
        for &start in verts
            .iter()
            .filter(|&&i| i != branch && simples[i].pairing(&simples[branch]) != 0)
        {
            let mut len = 1;
            let mut prev = branch;
            let mut cur = start;
            loop {
                let next = verts
                    .iter()
                    .copied()
                    .find(|&j| j != prev && j != cur && simples[cur].pairing(&simples[j]) != 0);
                match next {
                    Some(j) => {
                        prev = cur;
                        cur = j;
                        len += 1;
                    }
                    None => break,
                }
            }
            legs.push(len);
        }
        legs.sort_unstable();
        return match legs.as_slice() {
            [1, 1, _] => Ok(('D', n)),
            [1, 2, 2] => Ok(('E', 6)),
            _ => Err(KanevError::Internal(format!(
                "unrecognized branch legs {legs:?}"
            ))),
        };
    }
    Err(KanevError::Internal(
        "Dynkin graph has an invalid vertex degree".into(),
    ))
}

/// The bipartite graph of a boundary configuration: vertices are the blocks
/// of two `u`-invariant partitions, edges are the cycles of `u`.
#[derive(Clone, Debug)]
pub struct BipartiteCoverGraph {
    pub u: Perm,
    pub a: OrbitPartition,
    pub b: OrbitPartition,
}

impl BipartiteCoverGraph {
    pub fn new(u: Perm, a: OrbitPartition, b: OrbitPartition) -> Result<Self, KanevError> {
        for (name, part) in [("A", &a), ("B", &b)] {
            if !part.is_invariant_under(&u) {
                return Err(KanevError::Partition(format!("{name} is not u-invariant")));
            }
        }
        Ok(BipartiteCoverGraph { u, a, b })
    }

    /// First Betti number of the bipartite graph.
    pub fn h1(&self) -> usize {
        let edges = self.u.cycles().len();
        let verts = self.a.blocks.len() + self.b.blocks.len();
        let comps = self.component_count();
        edges + comps - verts
    }

    fn component_count(&self) -> usize {
        let na = self.a.blocks.len();
        let nb = self.b.blocks.len();
        let block_of = |part: &OrbitPartition, s: usize| -> usize {
            part.blocks.iter().position(|b| b.contains(&s)).unwrap()
        };
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); na + nb];
        for cyc in self.u.cycles() {
            let ai = block_of(&self.a, cyc[0]);
            let bi = na + block_of(&self.b, cyc[0]);
            adj[ai].push(bi);
            adj[bi].push(ai);
        }
        let mut seen = vec![false; na + nb];
        let mut comps = 0;
        for start in 0..na + nb {
            if seen[start] {
                continue;
            }
            comps += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        comps
    }
}

/// Toric rank of the Prym-Tyurin variety of a boundary configuration: the
/// dimension of the (-5)-eigenspace of the incidence action on the cycle
/// space of the bipartite graph, computed inside `Q^27` as the vectors that
/// are constant on cycles of `u`, sum to zero over every block of both
/// partitions, and satisfy `D v = -5 v`.
pub fn toric_rank(u: &Perm, a: &OrbitPartition, b: &OrbitPartition) -> Result<usize, KanevError> {
    for (name, part) in [("A", a), ("B", b)] {
        if !part.is_invariant_under(u) {
            return Err(KanevError::Partition(format!("{name} is not u-invariant")));
        }
    }
    let inc = crate::incidence::build_incidence();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..27 {
        let mut row: Vec<BigRational> = (0..27).map(|j| qi(inc.0[i][j])).collect();
        row[i] += qi(5);
        rows.push(row);
    }
    for s in 0..27 {
        let t = u.apply(s);
        if t != s {
            let mut row = vec![qi(0); 27];
            row[s] += qi(1);
            row[t] -= qi(1);
            rows.push(row);
        }
    }
    for part in [a, b] {
        for block in &part.blocks {
            let mut row = vec![qi(0); 27];
            for &s in block {
                row[s] += qi(1);
            }
            rows.push(row);
        }
    }
    Ok(QMat::from_rows(rows).nullspace().len())
}

/// The standard boundary configuration: the 22 roots over one component
/// generate `W(L1)` giving the partition `A`; the coalescing pair over the
/// other component contributes `u = w w'` and the partition `B` from the
/// orbits of the pair's reflections. `w = w'` gives the `u = 1` cases.
pub struct BoundaryConfig {
    pub u: Perm,
    pub a: OrbitPartition,
    pub b: OrbitPartition,
}

pub fn boundary_config(
    l1_roots: &[Root],
    pair: (&Root, &Root),
) -> Result<BoundaryConfig, KanevError> {
    let w1 = reflection(pair.0)?;
    let w2 = reflection(pair.1)?;
    let u = w1.compose(&w2);
    let a = orbits(l1_roots)?;
    let b = orbits(&[*pair.0, *pair.1])?;
    Ok(BoundaryConfig { u, a, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{extended_root, simple_roots, RootLabel};

    fn r(i: usize) -> Root {
        if i == 0 {
            extended_root()
        } else {
            simple_roots()[i - 1]
        }
    }

    #[test]
    fn empty_generators_give_singletons() {
        let p = orbits(&[]).unwrap();
        assert_eq!(p.blocks.len(), 27);
        assert_eq!(p, OrbitPartition::discrete());
    }

    #[test]
    fn d5_orbit_degrees() {
        let p = orbits(&[r(1), r(2), r(3), r(4), r(5)]).unwrap();
        assert_eq!(p.degrees(), vec![16, 10, 1]);
    }

    #[test]
    fn a5a1_orbit_degrees() {
        let p = orbits(&[r(0), r(2), r(3), r(4), r(5), r(6)]).unwrap();
        assert_eq!(p.degrees(), vec![15, 12]);
    }

    #[test]
    fn sublattice_types() {
        assert_eq!(
            sublattice_type(&[r(1), r(2), r(3), r(4), r(5)])
                .unwrap()
                .to_string(),
            "D5"
        );
        assert_eq!(sublattice_type(&[r(0)]).unwrap().to_string(), "A1");
        assert_eq!(
            sublattice_type(&[r(0), r(1), r(2), r(3), r(5), r(6)])
                .unwrap()
                .to_string(),
            "A2^3"
        );
        assert_eq!(
            sublattice_type(&(1..=6).map(r).collect::<Vec<_>>())
                .unwrap()
                .to_string(),
            "E6"
        );
        let a34 = Root::from_label(RootLabel::Ij(3, 4), false);
        assert_eq!(sublattice_type(&[r(2), a34]).unwrap().to_string(), "A1^2");
    }

    #[test]
    fn closure_of_e6_simples_is_all_72_roots() {
        let sys = subsystem_closure(&simple_roots()).unwrap();
        assert_eq!(sys.len(), 72);
    }

    #[test]
    fn toric_rank_with_trivial_partitions_is_invariant_dim() {
        use crate::weyl::conjugacy_classes;
        let triv = OrbitPartition::trivial();
        for class in &conjugacy_classes().classes {
            let tr = toric_rank(&class.rep, &triv, &triv).unwrap();
            assert_eq!(tr, class.inv_dim, "class {}", class.name);
        }
    }

    #[test]
    fn partition_invariance_is_enforced() {
        let w = reflection(&r(0)).unwrap();
        let bad = OrbitPartition {
            blocks: vec![(0..1).collect(), (1..27).collect()],
        };
        assert!(toric_rank(&w, &bad, &OrbitPartition::trivial()).is_err());
    }

    #[test]
    fn refining_partitions_never_increases_toric_rank() {
        // Lemma: H1 of the split graph injects into H1 of the merged one
        let e6_gens: Vec<Root> = (1..=6).map(r).collect();
        let cfg = boundary_config(&e6_gens, (&r(0), &r(0))).unwrap();
        let merged = toric_rank(
            &cfg.u,
            &OrbitPartition::trivial(),
            &OrbitPartition::trivial(),
        )
        .unwrap();
        let split = toric_rank(&cfg.u, &cfg.a, &cfg.b).unwrap();
        assert!(split <= merged);
    }
}
