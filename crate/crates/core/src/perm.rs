//! Permutations and permutation groups with exact order and membership.
//!
//! A group is held as a base and strong generating set: a chain of point
//! stabilizers, each level owning the orbit of its base point and one
//! coset representative per orbit point. Order is the product of orbit
//! sizes; membership is sifting through the chain. The chain is built by
//! the deterministic Schreier procedure, sweeping from the deepest level
//! upward and reprocessing a level whenever a generator fails to sift,
//! so the finished chain has every Schreier generator verified.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::BadPermutation {
                    reason: format!("images are not a bijection on 0..{n}"),
                });
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from disjoint cycles over `0..n`; unlisted points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &v) in cycle.iter().enumerate() {
                if v >= n {
                    return Err(Error::BadPermutation {
                        reason: format!("point {v} out of range"),
                    });
                }
                if touched[v] {
                    return Err(Error::BadPermutation {
                        reason: format!("point {v} appears in two cycles"),
                    });
                }
                touched[v] = true;
                images[v] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i != x)
            .map(|(i, _)| i)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation on 0-based points, fixed points omitted;
    /// the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if done[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            loop {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                done[x] = true;
                first = false;
                x = self.images[x];
                if x == start {
                    break;
                }
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

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// One stabilizer-chain level: the orbit of its base point under the
/// generators fixing all earlier base points, with coset representatives
/// mapping the base point onto each orbit point.
struct Transversal {
    point: usize,
    orbit: Vec<usize>,
    reps: Vec<Option<Permutation>>,
}

impl Transversal {
    fn build(n: usize, point: usize, gens: &[Permutation]) -> Self {
        let mut reps: Vec<Option<Permutation>> = vec![None; n];
        reps[point] = Some(Permutation::identity(n));
        let mut orbit = vec![point];
        let mut qi = 0;
        while qi < orbit.len() {
            let p = orbit[qi];
            qi += 1;
            for g in gens {
                let q = g.apply(p);
                if reps[q].is_none() {
                    let up = reps[p].as_ref().expect("in orbit");
                    reps[q] = Some(g.compose(up));
                    orbit.push(q);
                }
            }
        }
        Transversal { point, orbit, reps }
    }

    fn rep(&self, x: usize) -> Option<&Permutation> {
        self.reps[x].as_ref()
    }
}

pub struct PermGroup {
    n: usize,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    chain: Vec<Transversal>,
    input_generators: Vec<Permutation>,
}

impl PermGroup {
    pub fn trivial(n: usize) -> Self {
        PermGroup {
            n,
            base: Vec::new(),
            strong: Vec::new(),
            chain: Vec::new(),
            input_generators: Vec::new(),
        }
    }

    pub fn from_generators(n: usize, gens: Vec<Permutation>) -> Result<Self> {
        PermGroup::with_base_prefix(n, gens, &[])
    }

    /// Builds the chain with the given points forced as the first base
    /// entries, so generators fixing the prefix pointwise are exactly the
    /// strong generators past those levels.
    pub fn with_base_prefix(n: usize, gens: Vec<Permutation>, prefix: &[usize]) -> Result<Self> {
        for g in &gens {
            if g.degree() != n {
                return Err(Error::BadPermutation {
                    reason: format!("degree {} generator in a degree {n} group", g.degree()),
                });
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for &p in prefix {
            if p >= n {
                return Err(Error::BadPermutation {
                    reason: format!("base point {p} out of range"),
                });
            }
            if base.contains(&p) {
                return Err(Error::BadPermutation {
                    reason: format!("base point {p} repeats"),
                });
            }
            base.push(p);
        }

        let input_generators = gens.clone();
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(&g) {
                strong.push(g);
            }
        }
        for k in 0..strong.len() {
            if base.iter().all(|&b| strong[k].apply(b) == b) {
                base.push(strong[k].first_moved().expect("non-identity"));
            }
        }

        let mut chain: Vec<Option<Transversal>> = (0..base.len()).map(|_| None).collect();
        // Sweep upward from the deepest level; every level deeper than the
        // one in hand is complete and verified. A residue that will not
        // sift is appended to the strong set and processing jumps back
        // down to the level it belongs to.
        let mut i = base.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            let level_gens: Vec<Permutation> = strong
                .iter()
                .filter(|g| base[..iu].iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            chain[iu] = Some(Transversal::build(n, base[iu], &level_gens));
            let t = chain[iu].as_ref().expect("just built");

            let mut jump: Option<usize> = None;
            'schreier: for &p in &t.orbit {
                let up = t.rep(p).expect("orbit point");
                for g in &level_gens {
                    let q = g.apply(p);
                    let uq = t.rep(q).expect("orbit is closed");
                    let schreier = uq.inverse().compose(&g.compose(up));
                    if schreier.is_identity() {
                        continue;
                    }
                    let mut h = schreier;
                    let mut stuck = base.len();
                    for l in iu + 1..base.len() {
                        let x = h.apply(base[l]);
                        match chain[l].as_ref().and_then(|tr| tr.rep(x)) {
                            Some(u) => h = u.inverse().compose(&h),
                            None => {
                                stuck = l;
                                break;
                            }
                        }
                    }
                    if h.is_identity() {
                        continue;
                    }
                    if stuck == base.len() {
                        base.push(h.first_moved().expect("non-identity residue"));
                        chain.push(None);
                        stuck = base.len() - 1;
                    }
                    strong.push(h);
                    jump = Some(stuck);
                    break 'schreier;
                }
            }
            match jump {
                Some(level) => i = level as isize,
                None => i -= 1,
            }
        }

        let chain: Vec<Transversal> = chain
            .into_iter()
            .map(|t| t.expect("all levels processed"))
            .collect();
        Ok(PermGroup {
            n,
            base,
            strong,
            chain,
            input_generators,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.input_generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn order(&self) -> BigUint {
        let mut order = BigUint::from(1u32);
        for t in &self.chain {
            order *= BigUint::from(t.orbit.len());
        }
        order
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.iter().all(|t| t.orbit.len() == 1)
    }

    /// Sifts through the chain: returns the residue and how many levels
    /// were cleared. Membership means a full sift to the identity.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (l, t) in self.chain.iter().enumerate() {
            let x = h.apply(t.point);
            match t.rep(x) {
                Some(u) => h = u.inverse().compose(&h),
                None => return (h, l),
            }
        }
        (h, self.chain.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.n {
            return false;
        }
        let (residue, cleared) = self.sift(g);
        cleared == self.chain.len() && residue.is_identity()
    }

    /// Orbit of a point under the whole group, ascending.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[v] = true;
        let mut orbit = vec![v];
        let mut qi = 0;
        while qi < orbit.len() {
            let p = orbit[qi];
            qi += 1;
            for g in &self.strong {
                let q = g.apply(p);
                if !seen[q] {
                    seen[q] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.n == 0 || self.orbit(0).len() == self.n
    }

    pub fn stabilizer(&self, v: usize) -> Result<PermGroup> {
        self.pointwise_stabilizer(&[v])
    }

    /// Subgroup fixing every listed point, via a chain rebuilt with the
    /// points forced to the front of the base.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let rebased = PermGroup::with_base_prefix(self.n, self.strong.clone(), points)?;
        let gens: Vec<Permutation> = rebased
            .strong
            .iter()
            .filter(|g| points.iter().all(|&p| g.apply(p) == p))
            .cloned()
            .collect();
        PermGroup::from_generators(self.n, gens)
    }

    /// Every element, by walking the transversal products. Guarded.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let order = self.order();
        let limit = BigUint::from(1u32 << 20);
        if order > limit {
            return Err(Error::GuardExceeded {
                what: "group element enumeration order",
                limit: 1 << 20,
                got: usize::try_from(&order).unwrap_or(usize::MAX),
            });
        }
        let mut out = vec![Permutation::identity(self.n)];
        for t in self.chain.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * t.orbit.len());
            for &p in &t.orbit {
                let rep = t.rep(p).expect("orbit point");
                for tail in &out {
                    next.push(rep.compose(tail));
                }
            }
            out = next;
        }
        Ok(out)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree {}, order {}, {} strong generators)",
            self.n,
            self.order(),
            self.strong.len()
        )
    }
}
