//! Finite groups given by Cayley tables, their subgroups, quotients and
//! homomorphisms.
//!
//! Elements are positions `0..order`. Subsets of a group are [`ElementSet`]s
//! of length `order`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ElementSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table (`table[a][b] = a * b`).
    pub fn from_cayley(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::MalformedTable("no elements".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedTable(format!("table must be {n}x{n}")));
        }
        if table.iter().flatten().any(|&c| c >= n) {
            return Err(Error::MalformedTable("entry out of range".into()));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::MalformedTable("duplicate labels".into()));
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let at = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(Error::NoIdentity)?;
        let inverses = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| at(x, y) == identity && at(y, x) == identity)
                    .ok_or(Error::NoInverse(x))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup {
            labels,
            table: flat,
            identity,
            inverses,
        })
    }

    /// Table built from a closure, for the named families below.
    fn from_fn(labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> Self {
        let n = labels.len();
        let table = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        Self::from_cayley(labels, table).expect("built-in group tables are valid")
    }

    /// `Z/n`, elements labelled `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        Self::from_fn((0..n).map(|i| i.to_string()).collect(), |a, b| (a + b) % n)
    }

    /// `S_n` for `1 <= n <= 5`, labelled in cycle notation on `1..=n`.
    /// The product `pq` applies `q` first.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=5).contains(&n), "symmetric(n) supports 1 <= n <= 5");
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_fn(labels, |a, b| {
            let composed: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
            index(&composed)
        })
    }

    /// Dihedral group of order `2n`, elements `r^k` and `s r^k` with
    /// `s r s = r^-1`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "dihedral group needs n >= 1");
        let label = |i: usize| {
            let (flip, k) = (i / n, i % n);
            match (flip, k) {
                (0, 0) => "e".to_string(),
                (0, 1) => "r".to_string(),
                (0, k) => format!("r{k}"),
                (_, 0) => "s".to_string(),
                (_, 1) => "sr".to_string(),
                (_, k) => format!("sr{k}"),
            }
        };
        // s^a r^j * s^b r^k = s^(a+b) r^(k + (-1)^b j)
        Self::from_fn((0..2 * n).map(label).collect(), |x, y| {
            let (a, j) = (x / n, x % n);
            let (b, k) = (y / n, y % n);
            let r = if b == 0 { (j + k) % n } else { (k + n - j) % n };
            ((a + b) % 2) * n + r
        })
    }

    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order();
        let labels = (0..g.order() * m)
            .map(|i| format!("({},{})", g.label(i / m), h.label(i % m)))
            .collect();
        Self::from_fn(labels, |x, y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
    }

    /// The subgroup `s` as a group in its own right, with the inclusion map.
    pub fn subgroup_as_group(self: &Arc<Self>, s: &Subgroup) -> (Arc<FiniteGroup>, GroupHom) {
        let members: Vec<usize> = s.members().ones().collect();
        let pos = |x: usize| members.iter().position(|&m| m == x).expect("subgroup is closed");
        let labels = members.iter().map(|&m| self.labels[m].clone()).collect();
        let sub = Arc::new(Self::from_fn(labels, |a, b| pos(self.mul(members[a], members[b]))));
        let inclusion = GroupHom::new(sub.clone(), self.clone(), members).expect("inclusion is a homomorphism");
        (sub, inclusion)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::with_capacity(self.order())
    }

    pub fn full_set(&self) -> ElementSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, items: impl IntoIterator<Item = usize>) -> ElementSet {
        let mut s = self.empty_set();
        s.extend(items);
        s
    }

    /// Smallest subgroup containing `s` (`{e}` when `s` is empty).
    pub fn subgroup_generated(&self, s: &ElementSet) -> Subgroup {
        let gens: Vec<usize> = s.ones().collect();
        let mut members = self.set_of([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        // in a finite group, closing under right multiplication by the generators suffices
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !members.put(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup { members }
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(self.identity)
            && s.ones().all(|a| s.contains(self.inv(a)) && s.ones().all(|b| s.contains(self.mul(a, b))))
    }

    /// True when `s` is a subgroup stable under conjugation.
    pub fn is_normal(&self, s: &ElementSet) -> bool {
        self.is_subgroup(s) && (0..self.order()).all(|g| s.ones().all(|x| s.contains(self.conjugate(g, x))))
    }

    /// Smallest normal subgroup containing `s`.
    pub fn normal_closure(&self, s: &ElementSet) -> Subgroup {
        let conjugates = (0..self.order()).flat_map(|g| s.ones().map(move |x| (g, x)));
        self.subgroup_generated(&self.set_of(conjugates.map(|(g, x)| self.conjugate(g, x))))
    }

    /// `{ab : a in s1, b in s2}`.
    pub fn setwise_product(&self, s1: &ElementSet, s2: &ElementSet) -> ElementSet {
        self.set_of(s1.ones().flat_map(|a| s2.ones().map(move |b| (a, b))).map(|(a, b)| self.mul(a, b)))
    }

    pub fn setwise_inverse(&self, s: &ElementSet) -> ElementSet {
        self.set_of(s.ones().map(|a| self.inv(a)))
    }

    /// Join in the subgroup lattice.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.subgroup_generated(&(a.members() | b.members()))
    }

    /// Every subgroup, in order of discovery. Intended for small groups.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let cyclic: Vec<Subgroup> = (0..self.order())
            .map(|g| self.subgroup_generated(&self.set_of([g])))
            .collect();
        let mut found = vec![Subgroup::trivial(self)];
        let mut seen: HashSet<Subgroup> = found.iter().cloned().collect();
        let mut i = 0;
        while i < found.len() {
            for c in &cyclic {
                let j = self.join(&found[i], c);
                if seen.insert(j.clone()) {
                    found.push(j);
                }
            }
            i += 1;
        }
        found
    }

    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        self.subgroups()
            .into_iter()
            .filter(|s| self.is_normal(s.members()))
            .collect()
    }

    /// `G/N` with its projection. Cosets are labelled `[g]` by their first
    /// element.
    pub fn quotient(self: &Arc<Self>, n: &Subgroup) -> Result<(Arc<FiniteGroup>, GroupHom)> {
        if !self.is_normal(n.members()) {
            return Err(Error::NotNormal);
        }
        let mut coset = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if coset[g] == usize::MAX {
                for x in n.members().ones() {
                    coset[self.mul(g, x)] = reps.len();
                }
                reps.push(g);
            }
        }
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
        let q = Arc::new(Self::from_fn(labels, |a, b| coset[self.mul(reps[a], reps[b])]));
        let projection = GroupHom::new(self.clone(), q.clone(), coset)?;
        Ok((q, projection))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {} {{{}}}", self.order(), self.labels.join(", "))
    }
}

/// A subset of a group closed under products and inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: ElementSet,
}

impl Subgroup {
    pub fn new(g: &FiniteGroup, members: ElementSet) -> Result<Self> {
        if members.len() != g.order() || !g.is_subgroup(&members) {
            return Err(Error::NotSubgroup);
        }
        Ok(Subgroup { members })
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup {
            members: g.set_of([g.identity()]),
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup { members: g.full_set() }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn into_members(self) -> ElementSet {
        self.members
    }

    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// A homomorphism between finite groups, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl GroupHom {
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.order() || images.iter().any(|&y| y >= target.order()) {
            return Err(Error::MalformedTable("image list does not match the groups".into()));
        }
        let n = source.order();
        for a in 0..n {
            for b in 0..n {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::NotHomomorphism(a, b));
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(g: Arc<FiniteGroup>) -> Self {
        let images = (0..g.order()).collect();
        GroupHom {
            source: g.clone(),
            target: g,
            images,
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<GroupHom> {
        if *self.target != *other.source {
            return Err(Error::MalformedTable("homomorphisms do not compose".into()));
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        })
    }

    pub fn kernel(&self) -> Subgroup {
        Subgroup {
            members: self.preimage(&self.target.set_of([self.target.identity()])),
        }
    }

    pub fn image(&self) -> Subgroup {
        Subgroup {
            members: self.image_of(&self.source.full_set()),
        }
    }

    pub fn image_of(&self, s: &ElementSet) -> ElementSet {
        self.target.set_of(s.ones().map(|x| self.images[x]))
    }

    pub fn preimage(&self, t: &ElementSet) -> ElementSet {
        self.source.set_of((0..self.source.order()).filter(|&x| t.contains(self.images[x])))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    // identity first
    out.sort();
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i];
        }
        out.push_str(&format!("({})", cycle.join(" ")));
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}
