//! Canonical element labels.
//!
//! cyclic: decimal integer; direct sum: "(a,b,...)"; dihedral: "e", "r^K",
//! "f", "f*r^K"; semidihedral: "e", "x^K", "y", "y*x^K"; quaternion: "e",
//! "a^K", "b", "b*a^K"; pq: "e", "a^K*b^L"; symmetric: "id" or disjoint
//! cycle notation "(1 2)(3 4)".

use super::law::{perm_rank, Law};
use super::{Element, Group, GroupSpec};
use crate::error::{Error, Result};

pub fn format(g: &Group, e: Element) -> String {
    let i = e.0;
    match g.spec() {
        GroupSpec::Cyclic(_) => i.to_string(),
        GroupSpec::DirectSumCyclic(_) => {
            let (moduli, weights) = match g.law() {
                Law::DirectSum { moduli, weights } => (moduli, weights),
                _ => unreachable!(),
            };
            let parts: Vec<String> = (0..moduli.len())
                .map(|k| super::law::coord(i, k, moduli, weights).to_string())
                .collect();
            format!("({})", parts.join(","))
        }
        GroupSpec::Dihedral(n) => two_part(i, *n, "r", "f"),
        GroupSpec::SemiDihedral(_) => two_part(i, g.order() / 2, "x", "y"),
        GroupSpec::GeneralizedQuaternion(_) => two_part(i, g.order() / 2, "a", "b"),
        GroupSpec::NonabelianPQ { p, .. } => {
            let (x, y) = (i / p, i % p);
            if x == 0 && y == 0 {
                "e".to_string()
            } else {
                format!("a^{x}*b^{y}")
            }
        }
        GroupSpec::Symmetric(n) => {
            let perms = match g.law() {
                Law::Symmetric { perms, .. } => perms,
                _ => unreachable!(),
            };
            format_cycles(&perms[i as usize], *n)
        }
    }
}

fn two_part(i: u32, half: u32, rot: &str, refl: &str) -> String {
    if i < half {
        match i {
            0 => "e".to_string(),
            a => format!("{rot}^{a}"),
        }
    } else {
        match i - half {
            0 => refl.to_string(),
            a => format!("{refl}*{rot}^{a}"),
        }
    }
}

fn format_cycles(p: &[u8], n: u32) -> String {
    let mut seen = vec![false; n as usize];
    let mut out = String::new();
    for start in 0..n as usize {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = p[start] as usize;
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = p[cur] as usize;
        }
        out.push('(');
        let pts: Vec<String> = cycle.iter().map(|&x| (x + 1).to_string()).collect();
        out.push_str(&pts.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "id".to_string()
    } else {
        out
    }
}

pub fn parse(g: &Group, label: &str) -> Result<Element> {
    let label = label.trim();
    let err = |reason: &str| Error::BadElementLabel {
        label: label.to_string(),
        reason: reason.to_string(),
    };
    let index = match g.spec() {
        GroupSpec::Cyclic(n) => {
            let v: i64 = label.parse().map_err(|_| err("expected an integer"))?;
            v.rem_euclid(*n as i64) as u32
        }
        GroupSpec::DirectSumCyclic(moduli) => {
            let inner = label
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| err("expected a tuple (a,b,...)"))?;
            let coords: Vec<i64> = inner
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err("tuple entries must be integers"))?;
            if coords.len() != moduli.len() {
                return Err(err("wrong tuple arity"));
            }
            let mut index = 0u32;
            for (c, &m) in coords.iter().zip(moduli) {
                index = index * m + c.rem_euclid(m as i64) as u32;
            }
            index
        }
        GroupSpec::Dihedral(n) => parse_two_part(label, *n, "r", "f").ok_or_else(|| err("expected e, r^K or f*r^K"))?,
        GroupSpec::SemiDihedral(_) => parse_two_part(label, g.order() / 2, "x", "y")
            .ok_or_else(|| err("expected e, x^K or y*x^K"))?,
        GroupSpec::GeneralizedQuaternion(_) => parse_two_part(label, g.order() / 2, "a", "b")
            .ok_or_else(|| err("expected e, a^K or b*a^K"))?,
        GroupSpec::NonabelianPQ { p, q, .. } => {
            if label == "e" {
                0
            } else {
                let (xs, ys) = label.split_once('*').ok_or_else(|| err("expected a^K*b^L"))?;
                let x = parse_power(xs, "a").ok_or_else(|| err("expected a^K*b^L"))?;
                let y = parse_power(ys, "b").ok_or_else(|| err("expected a^K*b^L"))?;
                (x % q) * p + y % p
            }
        }
        GroupSpec::Symmetric(n) => {
            let perm = parse_cycles(label, *n).ok_or_else(|| err("expected id or cycles like (1 2)(3 4)"))?;
            perm_rank(&perm)
        }
    };
    if index >= g.order() {
        return Err(Error::IndexOutOfRange { index, order: g.order() });
    }
    Ok(Element(index))
}

fn parse_power(s: &str, gen: &str) -> Option<u32> {
    let s = s.trim();
    if s == gen {
        return Some(1);
    }
    let rest = s.strip_prefix(gen)?.strip_prefix('^')?;
    rest.trim().parse().ok()
}

fn parse_two_part(label: &str, half: u32, rot: &str, refl: &str) -> Option<u32> {
    if label == "e" {
        return Some(0);
    }
    if label == refl {
        return Some(half);
    }
    if let Some((left, right)) = label.split_once('*') {
        if left.trim() != refl {
            return None;
        }
        let a = parse_power(right, rot)?;
        return Some(half + a % half);
    }
    let a = parse_power(label, rot)?;
    Some(a % half)
}

fn parse_cycles(label: &str, n: u32) -> Option<Vec<u8>> {
    if label == "id" || label == "e" {
        return Some((0..n as u8).collect());
    }
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut used = vec![false; n as usize];
    let mut rest = label.trim();
    while !rest.is_empty() {
        let close = rest.find(')')?;
        let body = rest.strip_prefix('(')?[..close - 1].trim();
        let points: Vec<usize> = body
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().ok())
            .collect::<Option<Vec<_>>>()?;
        if points.len() < 2 {
            return None;
        }
        for &p in &points {
            if p < 1 || p > n as usize || used[p - 1] {
                return None;
            }
            used[p - 1] = true;
        }
        for w in 0..points.len() {
            let from = points[w] - 1;
            let to = points[(w + 1) % points.len()] - 1;
            perm[from] = to as u8;
        }
        rest = rest[close + 1..].trim_start();
    }
    Some(perm)
}
