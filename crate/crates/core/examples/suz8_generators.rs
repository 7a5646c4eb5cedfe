//! Writes generators of Suz(8) acting on the 65 points of the Tits ovoid in
//! PG(3,8), in the generator-file format read by `load_generators`.
//!
//! The ovoid is {(1:x:y:z) : z = xy + x^(σ+2) + y^σ} ∪ {(0:0:0:1)} with
//! σ: t ↦ t⁴. The stabilizer of (0:0:0:1) is generated by the maps
//! (x,y) ↦ (x+a, y+b+a^σ x) and (x,y) ↦ (λx, λ^(σ+1) y), both linear on
//! (1,x,y,z); one monomial matrix moving (0:0:0:1) completes the group.
//!
//! Usage: `cargo run --example suz8_generators -- out.gens`

use std::collections::HashMap;
use std::fmt::Write as _;

use prim5::perm::{parse_generators, PermGroup};

/// GF(8) = GF(2)[t]/(t³ + t + 1), elements as 3-bit masks.
fn mul(a: u8, b: u8) -> u8 {
    let mut r = 0u8;
    for i in 0..3 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    for i in (3..5).rev() {
        if r >> i & 1 == 1 {
            r ^= 0b1011 << (i - 3);
        }
    }
    r
}

fn pow(a: u8, e: u32) -> u8 {
    (0..e).fold(1, |acc, _| mul(acc, a))
}

fn sigma(a: u8) -> u8 {
    pow(a, 4)
}

type Point = [u8; 4];

fn normalize(v: Point) -> Point {
    let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
    let inv = (1..8).find(|&c| mul(c, lead) == 1).expect("field inverse");
    v.map(|c| mul(c, inv))
}

fn apply(m: &[[u8; 4]; 4], v: Point) -> Point {
    let mut out = [0u8; 4];
    for (i, row) in m.iter().enumerate() {
        for j in 0..4 {
            out[i] ^= mul(row[j], v[j]);
        }
    }
    normalize(out)
}

fn ovoid() -> Vec<Point> {
    let mut pts = vec![[0, 0, 0, 1]];
    for x in 0..8 {
        for y in 0..8 {
            let z = mul(x, y) ^ mul(pow(x, 2), sigma(x)) ^ sigma(y);
            pts.push([1, x, y, z]);
        }
    }
    pts
}

/// Matrix of (x,y) ↦ (x+a, y+b+a^σ x), with z' = z + (b + a^(σ+1))x + ay + ab + a^(σ+2) + b^σ.
fn translation(a: u8, b: u8) -> [[u8; 4]; 4] {
    let sa = sigma(a);
    [
        [1, 0, 0, 0],
        [a, 1, 0, 0],
        [b, sa, 1, 0],
        [mul(a, b) ^ mul(pow(a, 2), sa) ^ sigma(b), b ^ mul(a, sa), a, 1],
    ]
}

fn torus(l: u8) -> [[u8; 4]; 4] {
    let s = sigma(l);
    [[1, 0, 0, 0], [0, l, 0, 0], [0, 0, mul(l, s), 0], [0, 0, 0, mul(pow(l, 2), s)]]
}

fn as_permutation(m: &[[u8; 4]; 4], pts: &[Point], index: &HashMap<Point, usize>) -> Option<Vec<usize>> {
    pts.iter().map(|&p| index.get(&apply(m, p)).copied()).collect()
}

fn main() {
    let pts = ovoid();
    let index: HashMap<Point, usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut gens = vec![
        as_permutation(&translation(1, 0), &pts, &index).expect("translation preserves the ovoid"),
        as_permutation(&translation(0, 1), &pts, &index).expect("translation preserves the ovoid"),
        as_permutation(&torus(2), &pts, &index).expect("torus preserves the ovoid"),
    ];
    // A monomial matrix preserving the ovoid and moving (0:0:0:1).
    let perms = [[0, 1, 2, 3], [3, 2, 1, 0], [3, 1, 2, 0], [3, 2, 0, 1], [2, 3, 0, 1], [3, 0, 2, 1], [1, 0, 3, 2]];
    let swap = perms
        .iter()
        .flat_map(|p| (1..8u8).flat_map(move |a| (1..8u8).flat_map(move |b| (1..8u8).map(move |c| (*p, [1, a, b, c])))))
        .find_map(|(p, scal)| {
            let mut m = [[0u8; 4]; 4];
            for i in 0..4 {
                m[i][p[i]] = scal[i];
            }
            as_permutation(&m, &pts, &index).filter(|img| img[0] != 0)
        })
        .expect("a monomial element of Suz(8) moving the point at infinity");
    gens.push(swap);
    let mut text = format!("# Suz(8) on the Tits ovoid in PG(3,8)\ndegree: {}\ngens: {}\n", pts.len(), gens.len());
    for g in &gens {
        let line: Vec<String> = g.iter().map(|x| (x + 1).to_string()).collect();
        writeln!(text, "{}", line.join(" ")).unwrap();
    }
    let group: PermGroup = parse_generators(&text).expect("well-formed").freeze();
    let order = group.order().expect("frozen");
    assert_eq!(order, 29_120, "generated group has order {order}");
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(&path, &text).expect("writable output path"),
        None => print!("{text}"),
    }
}
