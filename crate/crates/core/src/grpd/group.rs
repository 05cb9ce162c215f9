//! Finite groups given by explicit multiplication tables.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

/// Index of an element of a [`FiniteGroup`].
pub type Elem = usize;

/// Default order bound for brute-force isomorphism search.
pub const DEFAULT_ISO_BOUND: usize = 128;

/// A finite group on the elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Elem>,
    identity: Elem,
    inv: Vec<Elem>,
}

impl FiniteGroup {
    /// Validates a multiplication table (`table[a][b] = a*b`) and builds the group.
    pub fn from_table(table: Vec<Vec<Elem>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Format("a group needs at least one element".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Format(format!(
                    "row {a} of the table has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::Format(format!(
                    "table entry {bad} out of range 0..{n}"
                )));
            }
            mul.extend_from_slice(row);
        }
        Self::from_flat_table(n, mul)
    }

    pub(crate) fn from_flat_table(n: usize, mul: Vec<Elem>) -> Result<Self> {
        let m = |a: Elem, b: Elem| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| m(e, g) == g && m(g, e) == g))
            .ok_or_else(|| {
                Error::InvalidInput("multiplication table has no two-sided identity".into())
            })?;
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            let h = (0..n)
                .find(|&h| m(g, h) == identity && m(h, g) == identity)
                .ok_or_else(|| {
                    Error::InvalidInput(format!("element {g} has no two-sided inverse"))
                })?;
            inv[g] = h;
        }
        // Light's test: the elements b with (xb)y = x(by) for all x, y form a
        // submagma, so checking a magma generating set suffices.
        for b in magma_generators(n, &mul) {
            for x in 0..n {
                let xb = m(x, b);
                for y in 0..n {
                    if m(xb, y) != m(x, m(b, y)) {
                        return Err(Error::InvalidInput(format!(
                            "multiplication is not associative at ({x}, {b}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            mul,
            identity,
            inv,
        })
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            mul: vec![0],
            identity: 0,
            inv: vec![0],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let inv = (0..n).map(|a| (n - a) % n).collect();
        FiniteGroup {
            order: n,
            mul,
            identity: 0,
            inv,
        }
    }

    pub fn symmetric(n: usize) -> Self {
        let gens = match n {
            0 | 1 => vec![],
            2 => vec![vec![1, 0]],
            _ => {
                let mut t: Vec<usize> = (0..n).collect();
                t.swap(0, 1);
                let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
                vec![t, c]
            }
        };
        PermutationGroup::generate(n.max(1), &gens)
            .expect("valid generators")
            .group
    }

    pub fn alternating(n: usize) -> Self {
        // 3-cycles (0 1 k) generate A_n.
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        PermutationGroup::generate(n.max(1), &gens)
            .expect("valid generators")
            .group
    }

    /// Dihedral group of order `2n`; element `j*n + i` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        let idx = |i: usize, j: usize| j * n + i;
        let mut mul = vec![0; 4 * n * n];
        for a in 0..2 * n {
            for b in 0..2 * n {
                let (ai, aj) = (a % n, a / n);
                let (bi, bj) = (b % n, b / n);
                // r^ai s^aj r^bi s^bj = r^(ai ± bi) s^(aj+bj)
                let i = if aj == 0 {
                    (ai + bi) % n
                } else {
                    (ai + n - bi) % n
                };
                mul[a * 2 * n + b] = idx(i, (aj + bj) % 2);
            }
        }
        Self::from_flat_table(2 * n, mul).expect("dihedral table is a group")
    }

    /// Quaternion group; element `4*s + u` is `(-1)^s * [1, i, j, k][u]`.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit)
        const T: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let mut mul = vec![0; 64];
        for a in 0..8 {
            for b in 0..8 {
                let (s, u) = T[a % 4][b % 4];
                mul[a * 8 + b] = ((a / 4 + b / 4 + s) % 2) * 4 + u;
            }
        }
        Self::from_flat_table(8, mul).expect("quaternion table is a group")
    }

    /// Element `a*|right| + b` is the pair `(a, b)`.
    pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> Self {
        let (n, m) = (left.order, right.order);
        let mut mul = Vec::with_capacity(n * m * n * m);
        for x in 0..n * m {
            for y in 0..n * m {
                mul.push(left.mul(x / m, y / m) * m + right.mul(x % m, y % m));
            }
        }
        let inv = (0..n * m)
            .map(|x| left.inv(x / m) * m + right.inv(x % m))
            .collect();
        FiniteGroup {
            order: n * m,
            mul,
            identity: left.identity * m + right.identity,
            inv,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `c * g * c^-1`.
    pub fn conjugate(&self, c: Elem, g: Elem) -> Elem {
        self.mul(self.mul(c, g), self.inv(c))
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn table(&self) -> Vec<Vec<Elem>> {
        self.mul.chunks(self.order).map(<[Elem]>::to_vec).collect()
    }

    /// Order of `g`, by repeated multiplication.
    pub fn element_order(&self, g: Elem) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Whether the order of `g` is a power of `p` (order 1 included).
    pub fn is_p_power_order(&self, g: Elem, p: u64) -> bool {
        is_power_of(self.element_order(g) as u64, p)
    }

    /// The subgroup generated by `gens`, as a sorted element list.
    pub fn subgroup_generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(s, x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&g| seen[g]).collect()
    }

    /// A generating set chosen greedily, preferring elements of large order.
    pub fn generators(&self) -> Vec<Elem> {
        let mut by_order: Vec<Elem> = self.elements().collect();
        by_order.sort_by_key(|&g| (std::cmp::Reverse(self.element_order(g)), g));
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for g in by_order {
            if span.len() == self.order {
                break;
            }
            if span.binary_search(&g).is_err() {
                gens.push(g);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    pub fn is_subgroup(&self, elems: &[Elem]) -> bool {
        let set: BTreeSet<Elem> = elems.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| {
                set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
            })
    }

    /// All subgroups, each a sorted element list, ordered by (size, elements).
    pub fn subgroups(&self) -> Vec<Vec<Elem>> {
        let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
        let trivial = vec![self.identity];
        found.insert(trivial.clone());
        let mut queue = VecDeque::from([trivial]);
        while let Some(s) = queue.pop_front() {
            for g in self.elements() {
                if s.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = s.clone();
                gens.push(g);
                let t = self.subgroup_generated(&gens);
                if found.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        let mut all: Vec<Vec<Elem>> = found.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    /// One subgroup per conjugacy class of subgroups (the least in the order of
    /// [`subgroups`](Self::subgroups)).
    pub fn subgroup_class_representatives(&self) -> Vec<Vec<Elem>> {
        let all = self.subgroups();
        let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
        let mut reps = Vec::new();
        for s in all {
            if seen.contains(&s) {
                continue;
            }
            for c in self.elements() {
                let mut conj: Vec<Elem> = s.iter().map(|&h| self.conjugate(c, h)).collect();
                conj.sort_unstable();
                seen.insert(conj);
            }
            reps.push(s);
        }
        reps
    }

    /// Conjugacy classes, ordered by least element; each class sorted.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Elem>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for g in self.elements() {
            if class_of[g] != usize::MAX {
                continue;
            }
            let mut class: Vec<Elem> = self.elements().map(|c| self.conjugate(c, g)).collect();
            class.sort_unstable();
            class.dedup();
            for &h in &class {
                class_of[h] = classes.len();
            }
            classes.push(class);
        }
        classes
    }

    pub fn centralizer(&self, g: Elem) -> Vec<Elem> {
        self.elements().filter(|&c| self.commutes(c, g)).collect()
    }

    /// The group structure on a subgroup, with elements renumbered in
    /// increasing order; returns the group and the embedding.
    pub fn restrict_to(&self, elems: &[Elem]) -> Result<(FiniteGroup, Vec<Elem>)> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if !self.is_subgroup(&sorted) {
            return Err(Error::InvalidInput("element set is not a subgroup".into()));
        }
        let pos: HashMap<Elem, usize> = sorted.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let k = sorted.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &sorted {
            for &b in &sorted {
                mul.push(pos[&self.mul(a, b)]);
            }
        }
        let group = FiniteGroup::from_flat_table(k, mul)?;
        Ok((group, sorted))
    }

    /// Left cosets `gH` of a subgroup, ordered by least element, each listing
    /// `g*h` for `h` in subgroup order. The first entry of each coset is its
    /// least element.
    pub fn left_cosets(&self, subgroup: &[Elem]) -> Vec<Vec<Elem>> {
        let mut covered = vec![false; self.order];
        let mut cosets = Vec::new();
        for g in self.elements() {
            if covered[g] {
                continue;
            }
            let coset: Vec<Elem> = subgroup.iter().map(|&h| self.mul(g, h)).collect();
            for &x in &coset {
                covered[x] = true;
            }
            cosets.push(coset);
        }
        cosets
    }

    /// All homomorphisms to `target`, as image tables.
    pub fn homomorphisms_to(&self, target: &FiniteGroup) -> Vec<Vec<Elem>> {
        let gens = self.generators();
        let mut out = Vec::new();
        let mut assign = Vec::with_capacity(gens.len());
        self.hom_search(target, &gens, &mut assign, false, &mut |m| {
            out.push(m.to_vec());
            true
        });
        out
    }

    /// Whether `images` (indexed by element) defines a homomorphism.
    pub fn is_homomorphism(&self, target: &FiniteGroup, images: &[Elem]) -> bool {
        images.len() == self.order
            && images.iter().all(|&x| x < target.order)
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| images[self.mul(a, b)] == target.mul(images[a], images[b]))
            })
    }

    /// Brute-force isomorphism test.
    ///
    /// Returns [`Error::Capacity`] when either group is larger than `bound`.
    pub fn is_isomorphic(&self, other: &FiniteGroup, bound: usize) -> Result<bool> {
        let big = self.order.max(other.order);
        if big > bound {
            return Err(Error::Capacity { order: big, bound });
        }
        if self.order != other.order || self.order_histogram() != other.order_histogram() {
            return Ok(false);
        }
        let (ab1, ab2) = (self.is_abelian(), other.is_abelian());
        if ab1 != ab2 {
            return Ok(false);
        }
        if ab1 {
            // finite abelian groups are determined by their element-order counts
            return Ok(true);
        }
        if self.conjugacy_classes().len() != other.conjugacy_classes().len() {
            return Ok(false);
        }
        let gens = self.generators();
        let mut assign = Vec::with_capacity(gens.len());
        let mut found = false;
        self.hom_search(other, &gens, &mut assign, true, &mut |_| {
            found = true;
            false
        });
        Ok(found)
    }

    fn order_histogram(&self) -> Vec<(usize, usize)> {
        let mut h: HashMap<usize, usize> = HashMap::new();
        for g in self.elements() {
            *h.entry(self.element_order(g)).or_default() += 1;
        }
        let mut v: Vec<_> = h.into_iter().collect();
        v.sort_unstable();
        v
    }

    /// Depth-first search over generator images. `visit` receives each full
    /// homomorphism and returns whether to continue.
    fn hom_search(
        &self,
        target: &FiniteGroup,
        gens: &[Elem],
        assign: &mut Vec<Elem>,
        injective: bool,
        visit: &mut dyn FnMut(&[Elem]) -> bool,
    ) -> bool {
        let Some(map) = self.extend_partial(target, &gens[..assign.len()], assign, injective)
        else {
            return true;
        };
        if assign.len() == gens.len() {
            return visit(
                &map.iter()
                    .map(|m| m.expect("generators span"))
                    .collect::<Vec<_>>(),
            );
        }
        let g = gens[assign.len()];
        let ord = self.element_order(g);
        for t in target.elements() {
            let t_ord = target.element_order(t);
            let ok = if injective {
                t_ord == ord
            } else {
                ord.is_multiple_of(t_ord)
            };
            if !ok {
                continue;
            }
            assign.push(t);
            let keep_going = self.hom_search(target, gens, assign, injective, visit);
            assign.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    /// Extends generator images to the generated subgroup, or `None` if the
    /// assignment is inconsistent (or not injective when required).
    fn extend_partial(
        &self,
        target: &FiniteGroup,
        gens: &[Elem],
        images: &[Elem],
        injective: bool,
    ) -> Option<Vec<Option<Elem>>> {
        let mut map: Vec<Option<Elem>> = vec![None; self.order];
        map[self.identity] = Some(target.identity);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            let fx = map[x].expect("queued elements are mapped");
            for (&s, &fs) in gens.iter().zip(images) {
                let y = self.mul(s, x);
                let fy = target.mul(fs, fx);
                match map[y] {
                    Some(v) if v != fy => return None,
                    Some(_) => {}
                    None => {
                        map[y] = Some(fy);
                        queue.push_back(y);
                    }
                }
            }
        }
        if injective {
            let mut hit = vec![false; target.order];
            for v in map.iter().flatten() {
                if std::mem::replace(&mut hit[*v], true) {
                    return None;
                }
            }
        }
        Some(map)
    }
}

/// Greedy generating set of a magma given by a flat table.
fn magma_generators(n: usize, mul: &[Elem]) -> Vec<Elem> {
    let mut in_span = vec![false; n];
    let mut span: Vec<Elem> = Vec::new();
    let mut gens = Vec::new();
    for g in 0..n {
        if in_span[g] {
            continue;
        }
        gens.push(g);
        in_span[g] = true;
        span.push(g);
        // close under multiplication
        let mut i = 0;
        while i < span.len() {
            let a = span[i];
            let mut j = 0;
            while j < span.len() {
                let b = span[j];
                for c in [mul[a * n + b], mul[b * n + a]] {
                    if !in_span[c] {
                        in_span[c] = true;
                        span.push(c);
                    }
                }
                j += 1;
            }
            i += 1;
        }
    }
    gens
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Deterministic trial-division primality test.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A permutation group with its elements listed in lexicographic order, so
/// the identity is element 0. Products apply the right factor first.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    pub group: FiniteGroup,
    pub perms: Vec<Vec<usize>>,
}

impl PermutationGroup {
    pub fn generate(degree: usize, gens: &[Vec<usize>]) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::Format(format!(
                    "generator {i} has length {}, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::Format(format!(
                        "generator {i} is not a bijection of 0..{degree}"
                    )));
                }
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let q = compose_perm(g, &p);
                if set.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let perms: Vec<Vec<usize>> = set.into_iter().collect();
        let index: HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let n = perms.len();
        let mut mul = Vec::with_capacity(n * n);
        for a in &perms {
            for b in &perms {
                mul.push(index[compose_perm(a, b).as_slice()]);
            }
        }
        let inv = perms
            .iter()
            .map(|p| index[invert_perm(p).as_slice()])
            .collect();
        let group = FiniteGroup {
            order: n,
            mul,
            identity: 0,
            inv,
        };
        Ok(PermutationGroup { group, perms })
    }
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

pub fn invert_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Builds a group from permutation generators on `degree` points.
pub fn group_from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<FiniteGroup> {
    Ok(PermutationGroup::generate(degree, gens)?.group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_closure_orders() {
        assert_eq!(
            group_from_permutations(2, &[vec![1, 0]]).unwrap().order(),
            2
        );
        let s3 = group_from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(group_from_permutations(1, &[]).unwrap().order(), 1);
        assert!(matches!(
            group_from_permutations(3, &[vec![0, 0, 1]]),
            Err(Error::Format(_))
        ));
        assert!(matches!(
            group_from_permutations(3, &[vec![0, 1]]),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn s3_closure_is_all_of_s3() {
        // oracle: every permutation of 3 points
        let pg = PermutationGroup::generate(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let mut all = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if a != b && b != c && a != c {
                        all.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(pg.perms, all);
    }

    #[test]
    fn table_validation() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).is_ok());
        // identity need not be element 0
        assert_eq!(
            FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]])
                .unwrap()
                .identity(),
            1
        );
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]]),
            Err(Error::Format(_))
        ));
        // a non-associative loop of order 5 with identity and inverses
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(loop5),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn named_groups() {
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        assert_eq!(FiniteGroup::quaternion().order(), 8);
        let q8 = FiniteGroup::quaternion();
        // exactly one element of order 2 in Q8
        assert_eq!(
            q8.elements().filter(|&g| q8.element_order(g) == 2).count(),
            1
        );
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(
            d4.elements().filter(|&g| d4.element_order(g) == 2).count(),
            5
        );
        for g in [
            FiniteGroup::dihedral(3),
            q8.clone(),
            FiniteGroup::direct_product(&d4, &FiniteGroup::cyclic(3)),
        ] {
            assert!(FiniteGroup::from_table(g.table()).is_ok());
        }
    }

    #[test]
    fn classes_and_centralizers_of_s3() {
        let s3 = FiniteGroup::symmetric(3);
        let classes = s3.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        for c in &classes {
            assert_eq!(c.len() * s3.centralizer(c[0]).len(), 6);
        }
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FiniteGroup::symmetric(3).subgroups().len(), 6);
        assert_eq!(FiniteGroup::symmetric(4).subgroups().len(), 30);
        assert_eq!(FiniteGroup::dihedral(4).subgroups().len(), 10);
        assert_eq!(FiniteGroup::quaternion().subgroups().len(), 6);
        assert_eq!(FiniteGroup::alternating(4).subgroups().len(), 10);
        assert_eq!(
            FiniteGroup::symmetric(4)
                .subgroup_class_representatives()
                .len(),
            11
        );
    }

    #[test]
    fn isomorphism_search() {
        let c4 = FiniteGroup::cyclic(4);
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert!(!c4.is_isomorphic(&v4, DEFAULT_ISO_BOUND).unwrap());
        assert!(c4
            .is_isomorphic(&FiniteGroup::cyclic(4), DEFAULT_ISO_BOUND)
            .unwrap());
        let d4 = FiniteGroup::dihedral(4);
        let q8 = FiniteGroup::quaternion();
        assert!(!d4.is_isomorphic(&q8, DEFAULT_ISO_BOUND).unwrap());
        let s3 = FiniteGroup::symmetric(3);
        assert!(s3
            .is_isomorphic(&FiniteGroup::dihedral(3), DEFAULT_ISO_BOUND)
            .unwrap());
        assert!(matches!(
            FiniteGroup::symmetric(5).is_isomorphic(&FiniteGroup::symmetric(5), 100),
            Err(Error::Capacity {
                order: 120,
                bound: 100
            })
        ));
    }

    #[test]
    fn hom_enumeration_counts() {
        // |Hom(C_n, G)| = #{g : g^n = 1}
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(FiniteGroup::cyclic(2).homomorphisms_to(&s3).len(), 4);
        assert_eq!(FiniteGroup::cyclic(3).homomorphisms_to(&s3).len(), 3);
        // Hom(S3, C2) has 2 elements
        assert_eq!(s3.homomorphisms_to(&FiniteGroup::cyclic(2)).len(), 2);
        for h in s3.homomorphisms_to(&s3) {
            assert!(s3.is_homomorphism(&s3, &h));
        }
        assert_eq!(s3.homomorphisms_to(&s3).len(), 10);
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..20).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(is_power_of(8, 2) && is_power_of(1, 3) && !is_power_of(6, 2));
    }
}
