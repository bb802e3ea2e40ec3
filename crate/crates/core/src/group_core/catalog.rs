//! Named groups and generic constructions (products, semidirect products, cocycle twists).

use super::group::FiniteGroup;
use crate::error::{Error, Result};

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: &[&str] =
    &["cyclic:n", "dihedral:n", "q8", "d8", "heisenberg:p", "a4", "s3", "c2xc2", "g64_232", "g64_236"];

/// Builds a catalog group from its name.
pub fn catalog(name: &str) -> Result<FiniteGroup> {
    let lower = name.trim().to_ascii_lowercase();
    let param = |prefix: &str| -> Option<Result<usize>> {
        lower.strip_prefix(prefix).map(|rest| {
            rest.parse::<usize>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::UnknownGroup(name.to_string()))
        })
    };
    if let Some(n) = param("cyclic:") {
        return Ok(cyclic(n?));
    }
    if let Some(n) = param("dihedral:") {
        return dihedral(n?);
    }
    if let Some(p) = param("heisenberg:") {
        return heisenberg(p?);
    }
    match lower.as_str() {
        "q8" => Ok(quaternion()),
        "d8" => dihedral(4),
        "a4" => Ok(alternating4()),
        "s3" => Ok(symmetric3()),
        "c2xc2" => klein_four(),
        "g64_232" => g64_232(),
        "g64_236" => g64_236(),
        _ => Err(Error::UnknownGroup(name.to_string())),
    }
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn join_names(parts: &[String]) -> String {
    let parts: Vec<&str> = parts.iter().map(String::as_str).filter(|p| !p.is_empty()).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("")
    }
}

/// Cyclic group of order `n`, elements `a^k` at index `k`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let flat = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    let names = (0..n).map(|k| join_names(&[power_name("a", k)])).collect();
    FiniteGroup::from_flat(n, flat, Some(names), false).expect("cyclic table is valid")
}

/// Dihedral group of order `2n`; element `r^k s^f` at index `k + n f`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::UnknownGroup(format!("dihedral:{n}")));
    }
    let idx = |k: usize, f: usize| k + n * f;
    let mut flat = vec![0; 4 * n * n];
    for f in 0..2 {
        for k in 0..n {
            for g in 0..2 {
                for l in 0..n {
                    let rot = if f == 0 { (k + l) % n } else { (k + n - l) % n };
                    flat[idx(k, f) * 2 * n + idx(l, g)] = idx(rot, (f + g) % 2);
                }
            }
        }
    }
    let names = (0..2)
        .flat_map(|f| (0..n).map(move |k| join_names(&[power_name("r", k), power_name("s", f)])))
        .collect();
    FiniteGroup::from_flat(2 * n, flat, Some(names), true)
}

/// Quaternion group with elements `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> FiniteGroup {
    // unit products: (sign, unit) for unit indices 1,i,j,k = 0..4
    let unit = |a: usize, b: usize| -> (bool, usize) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 1) => (true, 3),
            (2, 3) => (false, 1),
            (3, 2) => (true, 1),
            (3, 1) => (false, 2),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let mut flat = vec![0; 64];
    for a in 0..8 {
        for b in 0..8 {
            let (neg, u) = unit(a / 2, b / 2);
            let sign = (a % 2) ^ (b % 2) ^ usize::from(neg);
            flat[a * 8 + b] = 2 * u + sign;
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"].iter().map(|s| s.to_string()).collect();
    FiniteGroup::from_flat(8, flat, Some(names), true).expect("quaternion table is valid")
}

/// Heisenberg group of unitriangular 3x3 matrices over `Z/p`;
/// `(a,b,c)` at index `a + p b + p^2 c` with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`.
pub fn heisenberg(p: usize) -> Result<FiniteGroup> {
    if p < 2 {
        return Err(Error::UnknownGroup(format!("heisenberg:{p}")));
    }
    let n = p * p * p;
    let mut flat = vec![0; n * n];
    for x in 0..n {
        let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
        for y in 0..n {
            let (a2, b2, c2) = (y % p, (y / p) % p, y / (p * p));
            let r = ((a + a2) % p) + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
            flat[x * n + y] = r;
        }
    }
    let names = (0..n)
        .map(|x| {
            let (a, b, c) = (x % p, (x / p) % p, x / (p * p));
            join_names(&[power_name("x", a), power_name("y", b), power_name("z", c)])
        })
        .collect();
    FiniteGroup::from_flat(n, flat, Some(names), true)
}

fn permutation_group(points: usize, even_only: bool) -> FiniteGroup {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..points).collect();
    permute(&mut current, 0, &mut perms);
    perms.sort();
    if even_only {
        perms.retain(|p| parity(p) == 0);
    }
    let n = perms.len();
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
    let mut flat = vec![0; n * n];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            // (a b)(x) = a(b(x))
            let c: Vec<usize> = (0..points).map(|x| a[b[x]]).collect();
            flat[i * n + j] = index(&c);
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_flat(n, flat, Some(names), false).expect("permutation table is valid")
}

fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

fn parity(p: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", body.join("")));
    }
    if out.is_empty() {
        "1".to_string()
    } else {
        out
    }
}

/// Alternating group on four points.
pub fn alternating4() -> FiniteGroup {
    permutation_group(4, true)
}

/// Symmetric group on three points.
pub fn symmetric3() -> FiniteGroup {
    permutation_group(3, false)
}

/// Klein four-group with elements `1, a, b, ab`.
pub fn klein_four() -> Result<FiniteGroup> {
    let g = direct_product(&cyclic(2), &cyclic(2))?;
    Ok(g.with_names(["1", "a", "b", "ab"].iter().map(|s| s.to_string()).collect()))
}

/// `G × H` with `(g, h)` at index `g + |G| h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    semidirect_product(g, h, |_, n| n)
}

/// `N ⋊ Q` with `(n, q)` at index `n + |N| q` and product
/// `(n, q)(n', q') = (n · act(q, n'), q q')`.
pub fn semidirect_product(
    normal: &FiniteGroup,
    top: &FiniteGroup,
    act: impl Fn(usize, usize) -> usize,
) -> Result<FiniteGroup> {
    let (nn, nq) = (normal.order(), top.order());
    for q in 0..nq {
        let image: Vec<usize> = (0..nn).map(|n| act(q, n)).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != nn || image.iter().any(|&x| x >= nn) {
            return Err(Error::NotAnAction(format!("element {q} does not act bijectively")));
        }
        for a in 0..nn {
            for b in 0..nn {
                if image[normal.mul(a, b)] != normal.mul(image[a], image[b]) {
                    return Err(Error::NotAnAction(format!("element {q} is not a homomorphism")));
                }
            }
        }
    }
    for p in 0..nq {
        for q in 0..nq {
            for n in 0..nn {
                if act(top.mul(p, q), n) != act(p, act(q, n)) {
                    return Err(Error::NotAnAction(format!("action is not compatible with ({p}, {q})")));
                }
            }
        }
    }
    let total = nn * nq;
    let mut flat = vec![0; total * total];
    for x in 0..total {
        let (n1, q1) = (x % nn, x / nn);
        for y in 0..total {
            let (n2, q2) = (y % nn, y / nn);
            flat[x * total + y] = normal.mul(n1, act(q1, n2)) + nn * top.mul(q1, q2);
        }
    }
    let names = (0..total)
        .map(|x| {
            let (n, q) = (x % nn, x / nn);
            let parts = [normal.name(n), top.name(q)]
                .iter()
                .filter(|s| **s != "1" && **s != "0")
                .map(|s| s.to_string())
                .collect::<Vec<_>>();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        })
        .collect::<Vec<String>>();
    let distinct: std::collections::BTreeSet<&String> = names.iter().collect();
    let names = if distinct.len() == total { Some(names) } else { None };
    FiniteGroup::from_flat(total, flat, names, false)
}

/// Twists the multiplication of `group` by a 2-cocycle on a quotient:
/// `g ·_b h = b(ḡ, h̄) g h`, where `projection` maps elements to the quotient
/// `top`, `lift` picks a preimage of every quotient element and `cocycle`
/// returns elements of an abelian normal subgroup.
pub fn cocycle_twist(
    group: &FiniteGroup,
    top: &FiniteGroup,
    projection: &[usize],
    lift: &[usize],
    cocycle: impl Fn(usize, usize) -> usize,
) -> Result<FiniteGroup> {
    let nq = top.order();
    for p in 0..nq {
        for q in 0..nq {
            for r in 0..nq {
                let lhs = group.mul(cocycle(top.mul(p, q), r), cocycle(p, q));
                let rhs = group.mul(cocycle(p, top.mul(q, r)), group.conjugate(cocycle(q, r), lift[p]));
                if lhs != rhs {
                    return Err(Error::NotACocycle(p, q, r));
                }
            }
        }
    }
    let n = group.order();
    let mut flat = vec![0; n * n];
    for g in 0..n {
        for h in 0..n {
            flat[g * n + h] = group.mul(cocycle(projection[g], projection[h]), group.mul(g, h));
        }
    }
    let mut rows = Vec::with_capacity(n);
    for g in 0..n {
        rows.push(flat[g * n..(g + 1) * n].to_vec());
    }
    FiniteGroup::from_table(rows, Some(group.names().to_vec()))
}

/// Index of `n1^x n2^y h1^t1 h2^t2` in the order-64 pair.
pub fn g64_index(x: usize, y: usize, t1: usize, t2: usize) -> usize {
    (x % 4) + 4 * (y % 4) + 16 * ((t1 % 2) + 2 * (t2 % 2))
}

fn g64_names() -> Vec<String> {
    (0..64)
        .map(|i| {
            let (x, y, t) = (i % 4, (i / 4) % 4, i / 16);
            join_names(&[
                power_name("n1", x),
                power_name("n2", y),
                power_name("h1", t % 2),
                power_name("h2", t / 2),
            ])
        })
        .collect()
}

/// Action of `h1^t1 h2^t2` on `Z4 × Z4` via `h1 = [[1,2],[0,1]]`, `h2 = [[1,0],[2,1]]`.
fn g64_action(q: usize, n: usize) -> usize {
    let (mut x, mut y) = (n % 4, n / 4);
    if q & 1 == 1 {
        x = (x + 2 * y) % 4;
    }
    if q & 2 == 2 {
        y = (2 * x + y) % 4;
    }
    x + 4 * y
}

/// `(Z4 × Z4) ⋊ (C2 × C2)`, SmallGroup id [64, 232].
pub fn g64_232() -> Result<FiniteGroup> {
    let n = direct_product(&cyclic(4), &cyclic(4))?;
    let q = direct_product(&cyclic(2), &cyclic(2))?;
    let g = semidirect_product(&n, &q, g64_action)?;
    Ok(g.with_names(g64_names()))
}

/// The cocycle `b(h1^t1 h2^t2, h1^r1 h2^r2) = n1^{2 t1 r1} n2^{2 t2 r2}`.
pub fn g64_cocycle(p: usize, q: usize) -> usize {
    let l1 = (p & 1) * (q & 1);
    let l2 = ((p >> 1) & 1) * ((q >> 1) & 1);
    g64_index(2 * l1, 2 * l2, 0, 0)
}

/// Twist of [`g64_232`] by [`g64_cocycle`], SmallGroup id [64, 236].
pub fn g64_236() -> Result<FiniteGroup> {
    twist_g64(g64_cocycle)
}

/// Twists [`g64_232`] by an arbitrary candidate cocycle on `C2 × C2`.
pub fn twist_g64(cocycle: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    let g = g64_232()?;
    let q = direct_product(&cyclic(2), &cyclic(2))?;
    let projection: Vec<usize> = (0..64).map(|i| i / 16).collect();
    let lift: Vec<usize> = (0..4).map(|t| 16 * t).collect();
    cocycle_twist(&g, &q, &projection, &lift, cocycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        for (name, order) in [
            ("cyclic:6", 6),
            ("dihedral:4", 8),
            ("d8", 8),
            ("q8", 8),
            ("heisenberg:3", 27),
            ("a4", 12),
            ("s3", 6),
            ("c2xc2", 4),
        ] {
            assert_eq!(catalog(name).unwrap().order(), order, "{name}");
        }
        assert!(matches!(catalog("nope"), Err(Error::UnknownGroup(_))));
        assert!(matches!(catalog("cyclic:x"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion();
        let involutions = (0..8).filter(|&g| q.element_order(g) == 2).count();
        assert_eq!(involutions, 1);
        let i = q.index_of("i").unwrap();
        let j = q.index_of("j").unwrap();
        assert_eq!(q.name(q.mul(i, j)), "k");
        assert_eq!(q.name(q.mul(j, i)), "-k");
    }

    #[test]
    fn a4_classes() {
        let a4 = alternating4();
        let sizes: Vec<usize> = a4.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
        assert_eq!(a4.derived_subgroup().len(), 4);
        assert_eq!(a4.name(a4.identity()), "1");
    }

    #[test]
    fn non_action_rejected() {
        let c4 = cyclic(4);
        let c2 = cyclic(2);
        // x -> x + 1 is not an automorphism
        let err = semidirect_product(&c4, &c2, |q, n| if q == 0 { n } else { (n + 1) % 4 });
        assert!(matches!(err, Err(Error::NotAnAction(_))));
    }

    #[test]
    fn order_64_pair_basics() {
        let g = g64_232().unwrap();
        let gb = g64_236().unwrap();
        for grp in [&g, &gb] {
            assert_eq!(grp.order(), 64);
            assert_eq!(grp.nilpotency_class(), Some(2));
            let mut derived = grp.derived_subgroup();
            derived.sort_unstable();
            assert_eq!(derived.len(), 4);
            assert_eq!(derived, grp.center());
        }
        assert_eq!(g.exponent(), 4);
        assert_eq!(gb.exponent(), 4);
    }

    #[test]
    fn literal_exponent_cocycle_is_rejected() {
        // b = n1^{l1} n2^{l2} without doubling fails the cocycle identity
        let literal = |p: usize, q: usize| g64_index((p & 1) * (q & 1), ((p >> 1) & 1) * ((q >> 1) & 1), 0, 0);
        assert!(matches!(twist_g64(literal), Err(Error::NotACocycle(..))));
    }

    #[test]
    fn twisted_relations_hold() {
        let gb = g64_236().unwrap();
        let n1 = g64_index(1, 0, 0, 0);
        let n2 = g64_index(0, 1, 0, 0);
        let h1 = g64_index(0, 0, 1, 0);
        let h2 = g64_index(0, 0, 0, 1);
        let sq = |x| gb.mul(x, x);
        // x^h = h^{-1} x h
        let conj = |x: usize, h: usize| gb.mul(gb.mul(gb.inv(h), x), h);
        assert_eq!(gb.power(n1, 4), gb.identity());
        assert_eq!(gb.power(n2, 4), gb.identity());
        assert_eq!(sq(h1), sq(n1));
        assert_eq!(sq(h2), sq(n2));
        assert_eq!(gb.mul(h1, h2), gb.mul(h2, h1));
        assert_eq!(gb.mul(n1, n2), gb.mul(n2, n1));
        assert_eq!(conj(n1, h1), n1);
        assert_eq!(conj(n2, h1), gb.mul(sq(n1), n2));
        assert_eq!(conj(n2, h2), n2);
        assert_eq!(conj(n1, h2), gb.mul(sq(n2), n1));

        let g = g64_232().unwrap();
        assert_eq!(g.mul(h1, h1), g.identity());
        assert_eq!(g.mul(h2, h2), g.identity());
        let gconj = |x: usize, h: usize| g.mul(g.mul(g.inv(h), x), h);
        assert_eq!(gconj(n2, h1), g.mul(g.mul(n1, n1), n2));
        assert_eq!(gconj(n1, h2), g.mul(g.mul(n2, n2), n1));
    }
}
