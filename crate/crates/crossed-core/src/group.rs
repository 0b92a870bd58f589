//! Finite groups given by multiplication tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::lcm;

/// A finite group on the indices 0..n with an explicit multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
    label: String,
}

impl FiniteGroup {
    /// Validates the table (closure, associativity, identity, inverses).
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty multiplication table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("entry {x} in row {i} is out of range")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        let names = match names {
            Some(v) => {
                if v.len() != n {
                    return Err(Error::InvalidGroup(format!("{} names for {n} elements", v.len())));
                }
                v
            }
            None => (0..n).map(|i| if i == identity { "e".to_string() } else { format!("x{i}") }).collect(),
        };
        let label = format!("G{n}");
        Ok(FiniteGroup {
            table,
            identity,
            inverses,
            names,
            label,
        })
    }

    /// Builds a group from a closed set of elements with a multiplication rule.
    fn from_elements<T: Clone + PartialEq>(elements: &[T], mul: impl Fn(&T, &T) -> T, names: Vec<String>) -> Self {
        let index = |x: &T| elements.iter().position(|y| y == x).expect("element set closed under multiplication");
        let table = elements.iter().map(|a| elements.iter().map(|b| index(&mul(a, b))).collect()).collect();
        FiniteGroup::from_table(table, Some(names)).expect("generated table is a group")
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_table(vec![vec![0]], Some(vec!["e".into()])).unwrap().with_label("1")
    }

    /// Short name such as "S3" used in category names.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Z_n with elements named e, g, g^2, ….
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        FiniteGroup::from_table(table, Some(names)).unwrap().with_label(format!("Z{n}"))
    }

    /// Z_{n_1} × … × Z_{n_r}; element index is the mixed-radix number with the first
    /// factor most significant, named by its coordinate tuple.
    pub fn abelian(orders: &[usize]) -> Self {
        let coords = all_coords(orders);
        let names = coords
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let label = orders.iter().map(|n| format!("Z{n}")).collect::<Vec<_>>().join("x");
        FiniteGroup::from_elements(&coords, |a, b| a.iter().zip(b).zip(orders).map(|((x, y), n)| (x + y) % n).collect(), names).with_label(label)
    }

    /// Z₂ × Z₂ with elements e, a, b, ab.
    pub fn klein() -> Self {
        // Index order of abelian(&[2, 2]) is (0,0), (0,1), (1,0), (1,1).
        let mut g = FiniteGroup::abelian(&[2, 2]);
        g.names = ["e", "b", "a", "ab"].iter().map(|s| s.to_string()).collect();
        g
    }

    /// S₃ acting on {1,2,3}, composed as functions (στ)(i) = σ(τ(i)).
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"].iter().map(|s| s.to_string()).collect();
        FiniteGroup::from_elements(&perms, |s, t| [s[t[0]], s[t[1]], s[t[2]]], names).with_label("S3")
    }

    /// Dihedral group of order 8: r of order 4, s of order 2, s r s = r⁻¹.
    pub fn dihedral4() -> Self {
        // (flip, rotation) with (f, a)(g, b) = (f+g, (-1)^g a + b).
        let elements: Vec<(usize, usize)> = (0..2).flat_map(|f| (0..4).map(move |a| (f, a))).collect();
        let names = elements
            .iter()
            .map(|&(f, a)| match (f, a) {
                (0, 0) => "e".to_string(),
                (0, 1) => "r".to_string(),
                (0, a) => format!("r^{a}"),
                (1, 0) => "s".to_string(),
                (1, 1) => "sr".to_string(),
                (1, a) => format!("sr^{a}"),
                _ => unreachable!(),
            })
            .collect();
        FiniteGroup::from_elements(
            &elements,
            |&(f, a), &(g, b)| {
                let a = if g == 1 { (4 - a) % 4 } else { a };
                ((f + g) % 2, (a + b) % 4)
            },
            names,
        )
        .with_label("D4")
    }

    /// Quaternion group {±1, ±i, ±j, ±k}.
    pub fn quaternion() -> Self {
        // Unit quaternions as integer 4-vectors (w, x, y, z).
        let basis: [[i32; 4]; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
        let mut elements = Vec::new();
        for b in basis {
            elements.push(b);
            elements.push(b.map(|x| -x));
        }
        let names = ["e", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
        let mul = |p: &[i32; 4], q: &[i32; 4]| {
            [
                p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
                p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
                p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
                p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0],
            ]
        };
        FiniteGroup::from_elements(&elements, mul, names).with_label("Q8")
    }

    /// Named presets: trivial, Z<n>, Z2xZ2, S3, D4, Q8.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "trivial" | "Z1" => Ok(FiniteGroup::trivial()),
            "Z2xZ2" | "V4" => Ok(FiniteGroup::klein()),
            "S3" => Ok(FiniteGroup::symmetric3()),
            "D4" => Ok(FiniteGroup::dihedral4()),
            "Q8" => Ok(FiniteGroup::quaternion()),
            _ => {
                if let Some(n) = name.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
                    if n >= 1 {
                        return Ok(FiniteGroup::cyclic(n));
                    }
                }
                Err(Error::InvalidGroup(format!("unknown group preset {name:?}")))
            }
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// g h g⁻¹.
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order() {
            return Err(Error::InvalidGroup(format!("{} names for {} elements", names.len(), self.order())));
        }
        self.names = names;
        Ok(self)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
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

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1u64, |acc, a| lcm(acc, self.element_order(a) as u64)) as usize
    }

    /// Conjugacy classes, each sorted, ordered by their smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.conj(g, a)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.mul(g, a) == self.mul(a, g)).collect()
    }

    /// Whether `elements` is a subgroup.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        elements.contains(&self.identity)
            && elements.iter().all(|&a| elements.contains(&self.inv(a)) && elements.iter().all(|&b| elements.contains(&self.mul(a, b))))
    }

    pub fn is_normal_subgroup(&self, elements: &[usize]) -> bool {
        self.is_subgroup(elements) && (0..self.order()).all(|g| elements.iter().all(|&a| elements.contains(&self.conj(g, a))))
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = vec![self.identity];
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(&y) {
                    set.push(y);
                    frontier.push(y);
                }
            }
        }
        set.sort_unstable();
        set
    }

    /// The subgroup on `elements` as a group in its own right, with the embedding
    /// (position k of the subgroup ↦ `elements[k]`).
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(elements) {
            return Err(Error::InvalidGroup("not a subgroup".into()));
        }
        let mut embedding = elements.to_vec();
        embedding.sort_unstable();
        let pos: BTreeMap<usize, usize> = embedding.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let table = embedding.iter().map(|&a| embedding.iter().map(|&b| pos[&self.mul(a, b)]).collect()).collect();
        let names = embedding.iter().map(|&a| self.names[a].clone()).collect();
        Ok((FiniteGroup::from_table(table, Some(names))?, embedding))
    }

    /// Quotient by a normal subgroup. Cosets are ordered by their smallest element and
    /// named after it. Returns (quotient, projection, coset representatives).
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>, Vec<usize>)> {
        if !self.is_normal_subgroup(normal) {
            return Err(Error::InvalidGroup("not a normal subgroup".into()));
        }
        let n = self.order();
        let mut projection = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if projection[a] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(a);
            for &k in normal {
                projection[self.mul(a, k)] = idx;
            }
        }
        let table = reps.iter().map(|&a| reps.iter().map(|&b| projection[self.mul(a, b)]).collect()).collect();
        let names = reps.iter().map(|&a| self.names[a].clone()).collect();
        Ok((FiniteGroup::from_table(table, Some(names))?, projection, reps))
    }

    /// An isomorphism self → other as an index map, if one exists.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let n = self.order();
        let orders_a: Vec<usize> = (0..n).map(|a| self.element_order(a)).collect();
        let orders_b: Vec<usize> = (0..n).map(|b| other.element_order(b)).collect();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.identity] = other.identity;
        used[other.identity] = true;
        self.extend_iso(other, &orders_a, &orders_b, &mut map, &mut used).then_some(map)
    }

    fn extend_iso(&self, other: &FiniteGroup, oa: &[usize], ob: &[usize], map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(a) = map.iter().position(|&x| x == usize::MAX) else {
            return (0..self.order()).all(|x| (0..self.order()).all(|y| map[self.mul(x, y)] == other.mul(map[x], map[y])));
        };
        for b in 0..other.order() {
            if used[b] || oa[a] != ob[b] {
                continue;
            }
            let snapshot = map.to_vec();
            let used_snapshot = used.to_vec();
            map[a] = b;
            used[b] = true;
            if self.close_map(other, map, used) && self.extend_iso(other, oa, ob, map, used) {
                return true;
            }
            map.copy_from_slice(&snapshot);
            used.copy_from_slice(&used_snapshot);
        }
        false
    }

    /// Propagates a partial map under products of assigned elements; false on conflict.
    fn close_map(&self, other: &FiniteGroup, map: &mut [usize], used: &mut [bool]) -> bool {
        loop {
            let mut changed = false;
            for x in 0..self.order() {
                if map[x] == usize::MAX {
                    continue;
                }
                for y in 0..self.order() {
                    if map[y] == usize::MAX {
                        continue;
                    }
                    let xy = self.mul(x, y);
                    let img = other.mul(map[x], map[y]);
                    if map[xy] == usize::MAX {
                        if used[img] {
                            return false;
                        }
                        map[xy] = img;
                        used[img] = true;
                        changed = true;
                    } else if map[xy] != img {
                        return false;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

/// All coordinate tuples of Z_{n_1} × … × Z_{n_r}, first coordinate most significant.
pub fn all_coords(orders: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in orders {
        out = out.into_iter().flat_map(|c| (0..n).map(move |x| {
            let mut c = c.clone();
            c.push(x);
            c
        })).collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_have_expected_orders_and_classes() {
        assert_eq!(FiniteGroup::symmetric3().conjugacy_classes().len(), 3);
        assert_eq!(FiniteGroup::dihedral4().conjugacy_classes().len(), 5);
        assert_eq!(FiniteGroup::quaternion().conjugacy_classes().len(), 5);
        assert!(!FiniteGroup::quaternion().is_abelian());
        assert_eq!(FiniteGroup::cyclic(4).exponent(), 4);
        assert_eq!(FiniteGroup::klein().exponent(), 2);
    }

    #[test]
    fn d4_and_q8_are_not_isomorphic() {
        assert!(FiniteGroup::dihedral4().isomorphism_to(&FiniteGroup::quaternion()).is_none());
        assert!(FiniteGroup::cyclic(4).isomorphism_to(&FiniteGroup::klein()).is_none());
        let z6 = FiniteGroup::cyclic(6);
        let z2z3 = FiniteGroup::abelian(&[2, 3]);
        let iso = z6.isomorphism_to(&z2z3).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(iso[z6.mul(a, b)], z2z3.mul(iso[a], iso[b]));
            }
        }
    }

    #[test]
    fn quotient_of_s3_by_a3_is_z2() {
        let s3 = FiniteGroup::symmetric3();
        let a3: Vec<usize> = s3.generated(&[s3.index_of("(123)").unwrap()]);
        assert_eq!(a3.len(), 3);
        let (q, proj, reps) = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(reps, vec![0, 1]);
        assert_eq!(proj[s3.index_of("(13)").unwrap()], 1);
    }

    #[test]
    fn rejects_non_associative_table() {
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(FiniteGroup::from_table(t, None).is_err());
    }
}
