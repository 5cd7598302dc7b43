//! Finite groups as explicit multiplication tables.
//!
//! Element 0 is always the identity. Every constructor's output passes the
//! same validation as user-supplied tables: Latin square, identity, inverses,
//! and associativity (exhaustive up to order 64, randomly sampled above).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, GroupAxiom, Result};
use crate::rng::SplitMix64;

/// Default cap on permutation-closure size.
pub const DEFAULT_CLOSURE_CAP: usize = 1024;

const EXHAUSTIVE_ASSOC_LIMIT: usize = 64;

/// A finite group given by its full multiplication table, with a canonical
/// element order, named generators, and a display word per element.
#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gen_names: Vec<(String, u32)>,
    elem_words: Vec<String>,
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}
impl Eq for GroupTable {}

impl GroupTable {
    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn id(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, g: u32, h: u32) -> u32 {
        self.mul[g as usize * self.order + h as usize]
    }

    #[inline]
    pub fn inv(&self, g: u32) -> u32 {
        self.inv[g as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    /// Display word of an element ("1" for the identity).
    pub fn word(&self, g: u32) -> &str {
        &self.elem_words[g as usize]
    }

    /// Named generators (aliases included), in declaration order.
    pub fn generator_names(&self) -> &[(String, u32)] {
        &self.gen_names
    }

    pub fn generator(&self, name: &str) -> Option<u32> {
        self.gen_names
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, i)| i)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order as u32;
        (0..n).all(|g| (g + 1..n).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn element_order(&self, g: u32) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn pow(&self, g: u32, e: i64) -> u32 {
        let base = if e < 0 { self.inv(g) } else { g };
        let mut n = e.unsigned_abs();
        let mut acc = 0u32;
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            n >>= 1;
        }
        acc
    }

    /// Validates a raw table and wraps it. Generator names and element words
    /// may be empty; elements then get fallback names `e1`, `e2`, ...
    pub fn from_table(mul: Vec<u32>, gen_names: Vec<(String, u32)>) -> Result<Self> {
        let order = {
            let n = (mul.len() as f64).sqrt().round() as usize;
            if n * n != mul.len() || n == 0 {
                return Err(Error::InvalidOrder(format!(
                    "table length {} is not a positive square",
                    mul.len()
                )));
            }
            n
        };
        validate_table(order, &mul)?;
        let inv = invert_table(order, &mul);
        let (gen_names, elem_words) = ensure_words(order, &mul, gen_names);
        Ok(GroupTable {
            order,
            mul,
            inv,
            gen_names,
            elem_words,
        })
    }

    /// Cyclic group C_n, generator `x` (alias `r`), elements in power order.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder(format!("cyclic order {n}")));
        }
        let mul: Vec<u32> = (0..n * n)
            .map(|i| ((i / n + i % n) % n) as u32)
            .collect();
        let mut gen_names = Vec::new();
        if n > 1 {
            gen_names.push(("x".to_string(), 1));
            gen_names.push(("r".to_string(), 1));
        }
        let elem_words = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let inv = invert_table(n, &mul);
        let g = GroupTable {
            order: n,
            mul,
            inv,
            gen_names,
            elem_words,
        };
        debug_assert!(validate_table(n, &g.mul).is_ok());
        Ok(g)
    }

    /// Dihedral group D_m = <r, s | r^m = s^2 = (rs)^2 = 1> of order 2m,
    /// elements ordered 1, r, ..., r^{m-1}, s, sr, ..., sr^{m-1}.
    pub fn dihedral(m: usize) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidOrder(format!("dihedral parameter {m}")));
        }
        Self::metacyclic(m, 2, if m > 1 { m - 1 } else { 0 })
    }

    /// Metacyclic group <r, s | r^m = s^n = 1, s^{-1} r s = r^t> of order m*n.
    /// Elements are s^j r^i with index j*m + i.
    pub fn metacyclic(m: usize, n: usize, t: usize) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidOrder(format!("metacyclic ({m}, {n})")));
        }
        let tm = t % m;
        // t^n = 1 (mod m) so conjugation by s^n is the identity map.
        let mut tp = 1usize;
        for _ in 0..n {
            tp = tp * tm % m;
        }
        if tp != 1 % m {
            return Err(Error::BadTwist {
                m: m as u64,
                n: n as u64,
                t: t as u64,
            });
        }
        // Powers of t for each s-exponent.
        let tpow: Vec<usize> = {
            let mut v = Vec::with_capacity(n);
            let mut cur = 1usize;
            for _ in 0..n {
                v.push(cur);
                cur = cur * tm % m;
            }
            v
        };
        let order = m * n;
        let idx = |j: usize, i: usize| (j * m + i) as u32;
        let mut mul = vec![0u32; order * order];
        for j1 in 0..n {
            for i1 in 0..m {
                for j2 in 0..n {
                    for i2 in 0..m {
                        // (s^j1 r^i1)(s^j2 r^i2) = s^{j1+j2} r^{i1 t^{j2} + i2}
                        let j = (j1 + j2) % n;
                        let i = (i1 * tpow[j2] + i2) % m;
                        mul[(idx(j1, i1) as usize) * order + idx(j2, i2) as usize] =
                            idx(j, i);
                    }
                }
            }
        }
        let mut gen_names = Vec::new();
        if m > 1 {
            gen_names.push(("r".to_string(), idx(0, 1)));
        }
        if n > 1 {
            gen_names.push(("s".to_string(), idx(1, 0)));
        }
        let elem_words = (0..n)
            .flat_map(|j| {
                (0..m).map(move |i| {
                    let s_part = match j {
                        0 => String::new(),
                        1 => "s".to_string(),
                        _ => format!("s^{j}"),
                    };
                    let r_part = match i {
                        0 => String::new(),
                        1 => "r".to_string(),
                        _ => format!("r^{i}"),
                    };
                    match (s_part.is_empty(), r_part.is_empty()) {
                        (true, true) => "1".to_string(),
                        (true, false) => r_part,
                        (false, true) => s_part,
                        (false, false) => format!("{s_part}*{r_part}"),
                    }
                })
            })
            .collect();
        let inv = invert_table(order, &mul);
        let g = GroupTable {
            order,
            mul,
            inv,
            gen_names,
            elem_words,
        };
        validate_table(order, &g.mul)?;
        Ok(g)
    }

    /// Closure of permutation generators under composition; elements are
    /// ordered breadth-first from the identity, expanding generators in input
    /// order. `names` may supply generator names (default `g1`, `g2`, ...).
    pub fn from_permutations(
        degree: usize,
        gens: &[Vec<usize>],
        names: Option<&[String]>,
        cap: usize,
    ) -> Result<Self> {
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::InvalidOrder(format!(
                    "permutation of length {} on degree {degree}",
                    g.len()
                )));
            }
            for &img in g {
                if img >= degree || seen[img] {
                    return Err(Error::InvalidOrder(
                        "not a permutation of [1, degree]".to_string(),
                    ));
                }
                seen[img] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, u32> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0u32]);
        // Word per element as (generator, exponent) runs.
        let mut words: Vec<Vec<(usize, i64)>> = vec![Vec::new()];
        while let Some(v) = queue.pop_front() {
            for (gi, g) in gens.iter().enumerate() {
                // right-multiply, composing left to right: (v * g)(i) = g(v(i))
                let cur = &elems[v as usize];
                let prod: Vec<usize> = (0..degree).map(|i| g[cur[i]]).collect();
                if !index.contains_key(&prod) {
                    if elems.len() >= cap {
                        return Err(Error::ClosureTooLarge { cap });
                    }
                    let id = elems.len() as u32;
                    index.insert(prod.clone(), id);
                    elems.push(prod);
                    let mut w = words[v as usize].clone();
                    match w.last_mut() {
                        Some((lg, e)) if *lg == gi => *e += 1,
                        _ => w.push((gi, 1)),
                    }
                    words.push(w);
                    queue.push_back(id);
                }
            }
        }
        let order = elems.len();
        let mut mul = vec![0u32; order * order];
        for (a, pa) in elems.iter().enumerate() {
            for (b, pb) in elems.iter().enumerate() {
                let prod: Vec<usize> = (0..degree).map(|i| pb[pa[i]]).collect();
                mul[a * order + b] = *index.get(&prod).expect("closed set");
            }
        }
        let gen_names: Vec<(String, u32)> = gens
            .iter()
            .enumerate()
            .filter_map(|(gi, g)| {
                let name = match names {
                    Some(ns) => ns.get(gi)?.clone(),
                    None => format!("g{}", gi + 1),
                };
                index.get(g).map(|&i| (name, i))
            })
            .collect();
        let elem_words = words
            .iter()
            .map(|w| format_word(w, &gen_names, gens, &index))
            .collect();
        let inv = invert_table(order, &mul);
        let g = GroupTable {
            order,
            mul,
            inv,
            gen_names,
            elem_words,
        };
        validate_table(order, &g.mul)?;
        Ok(g)
    }

    /// Direct product; element (g, h) has index g*|H| + h. When generator
    /// names of the factors collide, all names get a factor suffix ("x1",
    /// "x2"); otherwise names are kept.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let (na, nb) = (self.order, other.order);
        let order = na * nb;
        let idx = |g: usize, h: usize| (g * nb + h) as u32;
        let mut mul = vec![0u32; order * order];
        for g1 in 0..na {
            for h1 in 0..nb {
                for g2 in 0..na {
                    for h2 in 0..nb {
                        mul[(idx(g1, h1) as usize) * order + idx(g2, h2) as usize] = idx(
                            self.mul(g1 as u32, g2 as u32) as usize,
                            other.mul(h1 as u32, h2 as u32) as usize,
                        );
                    }
                }
            }
        }
        let collide = self.gen_names.iter().any(|(n, _)| {
            other.gen_names.iter().any(|(m, _)| n == m)
        });
        let mut gen_names: Vec<(String, u32)> = Vec::new();
        for (n, i) in &self.gen_names {
            let name = if collide { format!("{n}1") } else { n.clone() };
            gen_names.push((name, idx(*i as usize, 0)));
        }
        for (n, i) in &other.gen_names {
            let name = if collide { format!("{n}2") } else { n.clone() };
            gen_names.push((name, idx(0, *i as usize)));
        }
        let (gen_names, elem_words) = ensure_words(order, &mul, gen_names);
        let inv = invert_table(order, &mul);
        GroupTable {
            order,
            mul,
            inv,
            gen_names,
            elem_words,
        }
    }

    /// Smallest subgroup containing `seed`; always contains the identity.
    pub fn subgroup_generated(&self, seed: &BTreeSet<u32>) -> BTreeSet<u32> {
        let mut set: BTreeSet<u32> = BTreeSet::new();
        set.insert(0);
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &g in seed {
            debug_assert!((g as usize) < self.order);
            if set.insert(g) {
                queue.push_back(g);
            }
            let gi = self.inv(g);
            if set.insert(gi) {
                queue.push_back(gi);
            }
        }
        while let Some(g) = queue.pop_front() {
            let members: Vec<u32> = set.iter().copied().collect();
            for h in members {
                for prod in [self.mul(g, h), self.mul(h, g)] {
                    if set.insert(prod) {
                        queue.push_back(prod);
                    }
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, set: &BTreeSet<u32>) -> bool {
        set.contains(&0)
            && set.iter().all(|&a| {
                set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
            })
    }

    /// Double cosets Ha\G/Hb as disjoint element sets covering G. The coset
    /// containing the identity comes first; the rest follow their smallest
    /// element.
    pub fn double_cosets(
        &self,
        ha: &BTreeSet<u32>,
        hb: &BTreeSet<u32>,
    ) -> Result<Vec<BTreeSet<u32>>> {
        if !self.is_subgroup(ha) || !self.is_subgroup(hb) {
            return Err(Error::NotASubgroup);
        }
        let mut assigned = vec![false; self.order];
        let mut out = Vec::new();
        for x in 0..self.order as u32 {
            if assigned[x as usize] {
                continue;
            }
            let mut coset = BTreeSet::new();
            let mut queue = VecDeque::from([x]);
            assigned[x as usize] = true;
            coset.insert(x);
            while let Some(y) = queue.pop_front() {
                for &a in ha {
                    let z = self.mul(a, y);
                    if !assigned[z as usize] {
                        assigned[z as usize] = true;
                        coset.insert(z);
                        queue.push_back(z);
                    }
                }
                for &b in hb {
                    let z = self.mul(y, b);
                    if !assigned[z as usize] {
                        assigned[z as usize] = true;
                        coset.insert(z);
                        queue.push_back(z);
                    }
                }
            }
            out.push(coset);
        }
        Ok(out)
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer(&self, set: &BTreeSet<u32>) -> BTreeSet<u32> {
        self.elements()
            .filter(|&g| set.iter().all(|&s| self.mul(g, s) == self.mul(s, g)))
            .collect()
    }

    /// True when `sub` is normal inside the subgroup `within`.
    pub fn is_normal_in(&self, sub: &BTreeSet<u32>, within: &BTreeSet<u32>) -> bool {
        within.iter().all(|&g| {
            let gi = self.inv(g);
            sub.iter().all(|&n| sub.contains(&self.mul(self.mul(gi, n), g)))
        })
    }

    /// True when `set` restricted to multiplication is abelian.
    pub fn is_abelian_subset(&self, set: &BTreeSet<u32>) -> bool {
        set.iter()
            .all(|&a| set.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks that `map` (indexed by element) is a group automorphism.
    pub fn is_automorphism(&self, map: &[u32]) -> bool {
        if map.len() != self.order {
            return false;
        }
        let mut seen = vec![false; self.order];
        for &img in map {
            if img as usize >= self.order || seen[img as usize] {
                return false;
            }
            seen[img as usize] = true;
        }
        if map[0] != 0 {
            return false;
        }
        self.elements().all(|g| {
            self.elements()
                .all(|h| map[self.mul(g, h) as usize] == self.mul(map[g as usize], map[h as usize]))
        })
    }

    pub fn into_arc(self) -> Arc<GroupTable> {
        Arc::new(self)
    }
}

fn format_word(
    runs: &[(usize, i64)],
    gen_names: &[(String, u32)],
    gens: &[Vec<usize>],
    index: &HashMap<Vec<usize>, u32>,
) -> String {
    if runs.is_empty() {
        return "1".to_string();
    }
    let name_of = |gi: usize| -> String {
        let target = index.get(&gens[gi]).copied();
        gen_names
            .iter()
            .find(|(_, i)| Some(*i) == target)
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| format!("g{}", gi + 1))
    };
    runs.iter()
        .map(|&(gi, e)| {
            let n = name_of(gi);
            if e == 1 {
                n
            } else {
                format!("{n}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn invert_table(order: usize, mul: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; order];
    for g in 0..order {
        for h in 0..order {
            if mul[g * order + h] == 0 {
                inv[g] = h as u32;
                break;
            }
        }
    }
    inv
}

fn validate_table(order: usize, mul: &[u32]) -> Result<()> {
    let at = |g: usize, h: usize| mul[g * order + h];
    // Entries in range and Latin square.
    for g in 0..order {
        let mut row_seen = vec![false; order];
        let mut col_seen = vec![false; order];
        for h in 0..order {
            let r = at(g, h) as usize;
            let c = at(h, g) as usize;
            if r >= order || c >= order || row_seen[r] || col_seen[c] {
                return Err(Error::NotAGroup(GroupAxiom::LatinSquare));
            }
            row_seen[r] = true;
            col_seen[c] = true;
        }
    }
    // Identity at index 0.
    for g in 0..order {
        if at(0, g) != g as u32 || at(g, 0) != g as u32 {
            return Err(Error::NotAGroup(GroupAxiom::Identity));
        }
    }
    // Two-sided inverses.
    for g in 0..order {
        let Some(h) = (0..order).find(|&h| at(g, h) == 0) else {
            return Err(Error::NotAGroup(GroupAxiom::Inverses));
        };
        if at(h, g) != 0 {
            return Err(Error::NotAGroup(GroupAxiom::Inverses));
        }
    }
    // Associativity: exhaustive for small orders, sampled above.
    if order <= EXHAUSTIVE_ASSOC_LIMIT {
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b) as usize;
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c) as usize) {
                        return Err(Error::NotAGroup(GroupAxiom::Associativity));
                    }
                }
            }
        }
    } else {
        let mut rng = SplitMix64::new(0x5eed ^ order as u64);
        for _ in 0..10 * order * order {
            let a = rng.below(order as u64) as usize;
            let b = rng.below(order as u64) as usize;
            let c = rng.below(order as u64) as usize;
            if at(at(a, b) as usize, c) != at(a, at(b, c) as usize) {
                return Err(Error::NotAGroup(GroupAxiom::Associativity));
            }
        }
    }
    Ok(())
}

/// Fills in element words by BFS over the named generators; elements not
/// reached (or when no generators exist) get fallback names `e<i>` which are
/// also registered as parseable generator names.
fn ensure_words(
    order: usize,
    mul: &[u32],
    gen_names: Vec<(String, u32)>,
) -> (Vec<(String, u32)>, Vec<String>) {
    let mut words: Vec<Option<Vec<(usize, i64)>>> = vec![None; order];
    words[0] = Some(Vec::new());
    // Unique generator indices in declaration order (skip alias duplicates).
    let mut prim: Vec<(String, u32)> = Vec::new();
    for (n, i) in &gen_names {
        if !prim.iter().any(|(_, j)| j == i) {
            prim.push((n.clone(), *i));
        }
    }
    let mut queue = VecDeque::from([0u32]);
    while let Some(v) = queue.pop_front() {
        for (gi, &(_, g)) in prim.iter().enumerate() {
            let prod = mul[v as usize * order + g as usize];
            if words[prod as usize].is_none() {
                let mut w = words[v as usize].clone().unwrap();
                match w.last_mut() {
                    Some((lg, e)) if *lg == gi => *e += 1,
                    _ => w.push((gi, 1)),
                }
                words[prod as usize] = Some(w);
                queue.push_back(prod);
            }
        }
    }
    let mut names = gen_names;
    let strings: Vec<String> = (0..order)
        .map(|i| match &words[i] {
            Some(runs) if runs.is_empty() => "1".to_string(),
            Some(runs) => runs
                .iter()
                .map(|&(gi, e)| {
                    let n = &prim[gi].0;
                    if e == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect::<Vec<_>>()
                .join("*"),
            None => {
                let name = format!("e{i}");
                names.push((name.clone(), i as u32));
                name
            }
        })
        .collect();
    (names, strings)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u32]) -> BTreeSet<u32> {
        xs.iter().copied().collect()
    }

    #[test]
    fn cyclic_basics() {
        let g = GroupTable::cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        let g = GroupTable::cyclic(4).unwrap();
        assert_eq!(g.mul(1, 3), 0); // x * x^3 = 1
        assert!(g.is_abelian());
        let g36 = GroupTable::cyclic(36).unwrap();
        assert_eq!(g36.pow(1, 28), 28);
        assert_eq!(g36.word(28), "x^28");
        assert!(matches!(GroupTable::cyclic(0), Err(Error::InvalidOrder(_))));
    }

    #[test]
    fn dihedral_basics() {
        let d3 = GroupTable::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        let r = d3.generator("r").unwrap();
        let s = d3.generator("s").unwrap();
        assert_ne!(d3.mul(r, s), d3.mul(s, r));
        // s r s = r^{-1}
        assert_eq!(d3.mul(d3.mul(s, r), s), d3.inv(r));
        let d6 = GroupTable::dihedral(6).unwrap();
        assert_eq!(d6.order(), 12);
        let d1 = GroupTable::dihedral(1).unwrap();
        assert_eq!(d1.order(), 2);
    }

    #[test]
    fn metacyclic_basics() {
        let g = GroupTable::metacyclic(5, 8, 4).unwrap();
        assert_eq!(g.order(), 40);
        let r = g.generator("r").unwrap();
        let s = g.generator("s").unwrap();
        // s^{-1} r s = r^4 = r^{-1} in C5
        assert_eq!(g.mul(g.mul(g.inv(s), r), s), g.pow(r, 4));
        assert_eq!(g.pow(r, 4), g.inv(r));
        assert!(GroupTable::metacyclic(7, 3, 1).unwrap().is_abelian());
        assert!(matches!(
            GroupTable::metacyclic(5, 3, 2),
            Err(Error::BadTwist { .. })
        ));
        // metacyclic(m, 2, m-1) is dihedral: same canonical table.
        for m in 2..8 {
            assert_eq!(
                GroupTable::metacyclic(m, 2, m - 1).unwrap(),
                GroupTable::dihedral(m).unwrap()
            );
        }
    }

    #[test]
    fn permutation_closure_a4() {
        // x = (1,2,3), y = (1,2)(3,4) on 4 points (0-based images).
        let x = vec![1, 2, 0, 3];
        let y = vec![1, 0, 3, 2];
        let names = vec!["x".to_string(), "y".to_string()];
        let g =
            GroupTable::from_permutations(4, &[x, y], Some(&names), DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        let xi = g.generator("x").unwrap();
        let yi = g.generator("y").unwrap();
        assert_eq!(g.element_order(xi), 3);
        assert_eq!(g.element_order(yi), 2);
        assert_eq!(g.element_order(g.mul(yi, xi)), 3);
    }

    #[test]
    fn permutation_edge_cases() {
        let g = GroupTable::from_permutations(3, &[vec![1, 0, 2]], None, 16).unwrap();
        assert_eq!(g.order(), 2);
        let g = GroupTable::from_permutations(5, &[], None, 16).unwrap();
        assert_eq!(g.order(), 1);
        let big = vec![vec![1, 2, 3, 4, 5, 6, 0]];
        assert!(matches!(
            GroupTable::from_permutations(7, &big, None, 3),
            Err(Error::ClosureTooLarge { cap: 3 })
        ));
    }

    #[test]
    fn direct_product_basics() {
        let c4 = GroupTable::cyclic(4).unwrap();
        let c2 = GroupTable::cyclic(2).unwrap();
        let g = c4.direct_product(&c2);
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        // collision: names suffixed
        assert!(g.generator("x1").is_some());
        assert!(g.generator("x2").is_some());
        let triv = GroupTable::cyclic(1).unwrap();
        let iso = c4.direct_product(&triv);
        assert_eq!(iso.order(), 4);
        assert_eq!(iso.mul(1, 3), 0);
        let d3 = GroupTable::dihedral(3).unwrap();
        let prod = d3.direct_product(&c2);
        assert_eq!(prod.order(), 12);
        assert!(!prod.is_abelian());
        // C2 carries the alias "r", which collides with D3's "r"
        assert!(prod.generator("r1").is_some());
        assert!(prod.generator("s1").is_some());
        assert!(prod.generator("x2").is_some());
    }

    #[test]
    fn from_table_validation() {
        let c3 = GroupTable::cyclic(3).unwrap();
        assert!(GroupTable::from_table(c3.mul.clone(), vec![]).is_ok());
        // repeated entry in a row
        let bad = vec![0u32, 1, 2, 1, 1, 0, 2, 0, 1];
        assert!(matches!(
            GroupTable::from_table(bad, vec![]),
            Err(Error::NotAGroup(GroupAxiom::LatinSquare))
        ));
        // order-5 loop (identity, two-sided inverses) that is not associative
        let q = vec![
            0u32, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(matches!(
            GroupTable::from_table(q, vec![]),
            Err(Error::NotAGroup(GroupAxiom::Associativity))
        ));
    }

    #[test]
    fn constructors_pass_validation() {
        for g in [
            GroupTable::cyclic(7).unwrap(),
            GroupTable::dihedral(5).unwrap(),
            GroupTable::metacyclic(9, 4, 8).unwrap(),
            GroupTable::cyclic(3)
                .unwrap()
                .direct_product(&GroupTable::dihedral(4).unwrap()),
        ] {
            assert!(validate_table(g.order(), &g.mul).is_ok());
            // words parse positions: every element has a word; identity is "1"
            assert_eq!(g.word(0), "1");
        }
    }

    #[test]
    fn subgroup_generated_cases() {
        let c4 = GroupTable::cyclic(4).unwrap();
        assert_eq!(c4.subgroup_generated(&set(&[2])), set(&[0, 2]));
        let d6 = GroupTable::dihedral(6).unwrap();
        let r4 = d6.pow(d6.generator("r").unwrap(), 4);
        assert_eq!(d6.subgroup_generated(&set(&[r4])), set(&[0, 2, 4]));
        assert_eq!(d6.subgroup_generated(&set(&[])), set(&[0]));
        // idempotent and monotone
        let s1 = d6.subgroup_generated(&set(&[1]));
        assert_eq!(d6.subgroup_generated(&s1), s1);
        let s2 = d6.subgroup_generated(&set(&[1, 6]));
        assert!(s1.is_subset(&s2));
    }

    #[test]
    fn double_coset_cases() {
        let c6 = GroupTable::cyclic(6).unwrap();
        let all: BTreeSet<u32> = c6.elements().collect();
        let cosets = c6.double_cosets(&all, &all).unwrap();
        assert_eq!(cosets.len(), 1);
        assert_eq!(cosets[0].len(), 6);
        let triv = set(&[0]);
        let cosets = c6.double_cosets(&triv, &triv).unwrap();
        assert_eq!(cosets.len(), 6);
        assert!(cosets.iter().all(|c| c.len() == 1));
        assert!(cosets[0].contains(&0));
        // <x^2><x^3> = C6
        let h2 = c6.subgroup_generated(&set(&[2]));
        let h3 = c6.subgroup_generated(&set(&[3]));
        let cosets = c6.double_cosets(&h2, &h3).unwrap();
        assert_eq!(cosets.len(), 1);
        // not a subgroup
        assert!(matches!(
            c6.double_cosets(&set(&[1]), &triv),
            Err(Error::NotASubgroup)
        ));
    }

    #[test]
    fn double_cosets_partition() {
        let d6 = GroupTable::dihedral(6).unwrap();
        let ha = d6.subgroup_generated(&set(&[d6.generator("s").unwrap()]));
        let hb = d6.subgroup_generated(&set(&[2]));
        let cosets = d6.double_cosets(&ha, &hb).unwrap();
        let mut union = BTreeSet::new();
        let mut total = 0;
        for c in &cosets {
            total += c.len();
            union.extend(c.iter().copied());
            // closure under left-Ha and right-Hb
            for &x in c {
                for &a in &ha {
                    assert!(c.contains(&d6.mul(a, x)));
                }
                for &b in &hb {
                    assert!(c.contains(&d6.mul(x, b)));
                }
            }
        }
        assert_eq!(total, 12);
        assert_eq!(union.len(), 12);
    }

    #[test]
    fn centralizer_cases() {
        let d3 = GroupTable::dihedral(3).unwrap();
        assert_eq!(d3.centralizer(&set(&[0])).len(), 6);
        let r = d3.generator("r").unwrap();
        assert_eq!(d3.centralizer(&set(&[r])), set(&[0, 1, 2]));
        let c6 = GroupTable::cyclic(6).unwrap();
        assert_eq!(c6.centralizer(&set(&[3, 4])).len(), 6);
    }

    #[test]
    fn automorphism_check() {
        let c5 = GroupTable::cyclic(5).unwrap();
        // x -> x^2 is an automorphism of C5
        let map: Vec<u32> = (0..5).map(|i| (i * 2 % 5) as u32).collect();
        assert!(c5.is_automorphism(&map));
        // x -> x^0 is not
        let bad = vec![0u32; 5];
        assert!(!c5.is_automorphism(&bad));
        let d4 = GroupTable::dihedral(4).unwrap();
        // conjugation is always an automorphism
        for g in d4.elements() {
            let gi = d4.inv(g);
            let map: Vec<u32> = d4.elements().map(|h| d4.mul(d4.mul(gi, h), g)).collect();
            assert!(d4.is_automorphism(&map));
        }
    }
}
