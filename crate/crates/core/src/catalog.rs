//! Named permutation groups used by the corpus, the examples and the tests.

use crate::perm::Perm;
use crate::permgroup::PermGroup;

fn group(name: &str, degree: usize, gens: Vec<Vec<u16>>) -> PermGroup {
    let gens = gens
        .into_iter()
        .map(|g| Perm::from_images(g).expect("catalog generator is a bijection"))
        .collect();
    PermGroup::new(name, degree, gens).expect("catalog group is well formed")
}

fn cycle(n: usize, pts: impl IntoIterator<Item = usize>) -> Vec<u16> {
    let pts: Vec<usize> = pts.into_iter().collect();
    let mut img: Vec<u16> = (0..n as u16).collect();
    for (k, &p) in pts.iter().enumerate() {
        img[p] = pts[(k + 1) % pts.len()] as u16;
    }
    img
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(1).with_name(format!("S{n}"));
    }
    group(&format!("S{n}"), n, vec![cycle(n, [0, 1]), cycle(n, 0..n)])
}

pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1)).with_name(format!("A{n}"));
    }
    let gens = (2..n).map(|k| cycle(n, [0, 1, k])).collect();
    group(&format!("A{n}"), n, gens)
}

pub fn cyclic(n: usize) -> PermGroup {
    group(&format!("C{n}"), n, vec![cycle(n, 0..n)])
}

/// Dihedral group of order `2n` acting on an `n`-gon (`n ≥ 3`).
pub fn dihedral(n: usize) -> PermGroup {
    let reflection: Vec<u16> = (0..n).map(|i| ((n - i) % n) as u16).collect();
    group(&format!("D{}", 2 * n), n, vec![cycle(n, 0..n), reflection])
}

/// `x ↦ x + 1` and `x ↦ m·x` on `Z/n`, for each multiplier `m`.
pub fn affine_cyclic(n: usize, multipliers: &[usize]) -> PermGroup {
    let mut gens = vec![cycle(n, 0..n)];
    for &m in multipliers {
        gens.push((0..n).map(|x| (x * m % n) as u16).collect());
    }
    let name = format!("C{n}:{multipliers:?}");
    group(&name, n, gens)
}

/// Quaternion group in its regular representation.
pub fn quaternion() -> PermGroup {
    // unit u ∈ {1, i, j, k} with sign s is point 2u + s
    const TABLE: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let right_mult = |by: usize| -> Vec<u16> {
        (0..8)
            .map(|pt| {
                let (u, s) = (pt / 2, pt % 2 == 1);
                let (w, t) = TABLE[u][by];
                (2 * w + usize::from(s ^ t)) as u16
            })
            .collect()
    };
    group("Q8", 8, vec![right_mult(1), right_mult(2)])
}

/// `SL(2,3)` acting on the eight nonzero vectors of `F_3^2`.
pub fn sl2_3() -> PermGroup {
    let vectors: Vec<(usize, usize)> = (0..9)
        .map(|v| (v % 3, v / 3))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).unwrap() as u16;
    let act = |m: [[usize; 2]; 2]| -> Vec<u16> {
        vectors
            .iter()
            .map(|&(a, b)| {
                index((
                    (m[0][0] * a + m[0][1] * b) % 3,
                    (m[1][0] * a + m[1][1] * b) % 3,
                ))
            })
            .collect()
    };
    group(
        "SL(2,3)",
        8,
        vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])],
    )
}

/// Arithmetic in `F_9 = F_3[i]/(i^2 + 1)`; `a + b·i` is stored as `a + 3b`.
mod f9 {
    pub const INF: usize = 9;

    pub fn parts(x: usize) -> (usize, usize) {
        (x % 3, x / 3)
    }

    pub fn make(a: usize, b: usize) -> usize {
        a % 3 + 3 * (b % 3)
    }

    pub fn add(x: usize, y: usize) -> usize {
        let ((a, b), (c, d)) = (parts(x), parts(y));
        make(a + c, b + d)
    }

    pub fn mul(x: usize, y: usize) -> usize {
        let ((a, b), (c, d)) = (parts(x), parts(y));
        make(a * c + 2 * b * d, a * d + b * c)
    }

    pub fn inv(x: usize) -> usize {
        (1..9).find(|&y| mul(x, y) == 1).expect("nonzero")
    }

    pub fn neg(x: usize) -> usize {
        let (a, b) = parts(x);
        make(3 - a, 3 - b)
    }

    pub fn frob(x: usize) -> usize {
        mul(x, mul(x, x))
    }

    /// `1 + i`, a generator of `F_9^×`.
    pub const NU: usize = 4;
}

fn projective_line_map(f: impl Fn(usize) -> usize) -> Vec<u16> {
    (0..10).map(|x| f(x) as u16).collect()
}

fn scale(c: usize) -> impl Fn(usize) -> usize {
    move |x| if x == f9::INF { x } else { f9::mul(c, x) }
}

fn translate(x: usize) -> usize {
    if x == f9::INF {
        x
    } else {
        f9::add(x, 1)
    }
}

/// `x ↦ c/x` on the projective line.
fn reciprocal(c: usize) -> impl Fn(usize) -> usize {
    move |x| match x {
        f9::INF => 0,
        0 => f9::INF,
        _ => f9::mul(c, f9::inv(x)),
    }
}

/// `PGL(2,9) ≅ A6.2_2` on the 10 points of the projective line.
pub fn pgl2_9() -> PermGroup {
    group(
        "PGL(2,9)",
        10,
        vec![
            projective_line_map(translate),
            projective_line_map(scale(f9::NU)),
            projective_line_map(reciprocal(1)),
        ],
    )
}

/// `PSL(2,9) ≅ A6` on the projective line.
pub fn psl2_9() -> PermGroup {
    let nu2 = f9::mul(f9::NU, f9::NU);
    group(
        "PSL(2,9)",
        10,
        vec![
            projective_line_map(translate),
            projective_line_map(scale(nu2)),
            projective_line_map(reciprocal(f9::neg(1))),
        ],
    )
}

/// `M10 ≅ A6.2_3`: `PSL(2,9)` extended by `x ↦ ν·x^3`.
pub fn m10() -> PermGroup {
    let mut gens: Vec<Vec<u16>> = psl2_9()
        .generators()
        .iter()
        .map(|g| g.images().to_vec())
        .collect();
    gens.push(projective_line_map(|x| {
        if x == f9::INF {
            x
        } else {
            f9::mul(f9::NU, f9::frob(x))
        }
    }));
    group("M10", 10, gens)
}

/// `SL(2,9)` extended by the entrywise Frobenius `x ↦ x^3`, a double
/// cover of `S6` (order 1440), on the 80 nonzero vectors of `F_9^2`.
pub fn sl2_9_frobenius() -> PermGroup {
    let vectors: Vec<(usize, usize)> = (0..81)
        .map(|v| (v % 9, v / 9))
        .filter(|&v| v != (0, 0))
        .collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).unwrap() as u16;
    let act = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Vec<u16> {
        vectors.iter().map(|&(a, b)| index(f(a, b))).collect()
    };
    let nu_inv = f9::inv(f9::NU);
    group(
        "SL(2,9):2",
        80,
        vec![
            act(&|a, b| (f9::add(a, b), b)),
            act(&|a, b| (a, f9::add(a, b))),
            act(&|a, b| (f9::mul(f9::NU, a), f9::mul(nu_inv, b))),
            act(&|a, b| (f9::frob(a), f9::frob(b))),
        ],
    )
}

/// The Mathieu group `M12` on 12 points.
pub fn m12() -> PermGroup {
    let gens = [
        vec![vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]],
        vec![vec![3, 7, 11, 8], vec![4, 10, 5, 6]],
        vec![
            vec![1, 12],
            vec![2, 11],
            vec![3, 6],
            vec![4, 8],
            vec![5, 9],
            vec![7, 10],
        ],
    ];
    let perms = gens
        .iter()
        .map(|cycles| {
            let slices: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
            Perm::from_cycles(12, &slices).unwrap()
        })
        .collect();
    PermGroup::new("M12", 12, perms).unwrap()
}

/// Looks up a group by name: `S<n>`, `A<n>`, `C<n>`, `D<2n>`, `Q8`,
/// `SL(2,3)`, `PSL(2,9)`, `PGL(2,9)`, `M10`, `M12`, `SL(2,9):2`.
pub fn by_name(name: &str) -> Option<PermGroup> {
    let num = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|s| s.parse::<usize>().ok())
    };
    match name {
        "Q8" => Some(quaternion()),
        "SL(2,3)" => Some(sl2_3()),
        "PSL(2,9)" => Some(psl2_9()),
        "PGL(2,9)" => Some(pgl2_9()),
        "M10" => Some(m10()),
        "M12" => Some(m12()),
        "SL(2,9):2" => Some(sl2_9_frobenius()),
        _ => {
            if let Some(n) = num("S").filter(|&n| (1..=12).contains(&n)) {
                Some(symmetric(n))
            } else if let Some(n) = num("A").filter(|&n| (3..=12).contains(&n)) {
                Some(alternating(n))
            } else if let Some(n) = num("C").filter(|&n| (1..=100_000).contains(&n)) {
                Some(cyclic(n))
            } else {
                num("D")
                    .filter(|&n| n >= 6 && n % 2 == 0)
                    .map(|n| dihedral(n / 2))
            }
        }
    }
}
