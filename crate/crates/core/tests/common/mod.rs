#![allow(dead_code)]

use blockheight::analysis::GroupAnalysis;
use blockheight::perm::Perm;
use blockheight::permgroup::{PermGroup, DEFAULT_CAP};

pub fn analyze(g: PermGroup) -> GroupAnalysis {
    GroupAnalysis::new(g, DEFAULT_CAP).unwrap()
}

fn shift(p: &Perm, offset: usize, total: usize) -> Perm {
    let mut img: Vec<u16> = (0..total as u16).collect();
    for (i, &x) in p.images().iter().enumerate() {
        img[i + offset] = x + offset as u16;
    }
    Perm::from_images(img).unwrap()
}

/// `A × B` on disjoint point sets, together with `A × 1` as a subgroup on
/// the same points.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> (PermGroup, PermGroup) {
    let n = a.degree() + b.degree();
    let left: Vec<Perm> = a.generators().iter().map(|g| shift(g, 0, n)).collect();
    let right: Vec<Perm> = b
        .generators()
        .iter()
        .map(|g| shift(g, a.degree(), n))
        .collect();
    let name = format!("{}x{}", a.name(), b.name());
    let whole = PermGroup::new(name, n, left.iter().chain(&right).cloned().collect()).unwrap();
    (whole, PermGroup::new(a.name(), n, left).unwrap())
}

/// The central product `N ∘ C_m` identifying `z^{m/k}` with the central
/// element `c` of order `k`, acting on the `|N|·m/k` classes of pairs
/// `(x, j)` with `(x c, j) ~ (x, j + m/k)`. Returns the product and `N`.
pub fn central_product(n: &PermGroup, c: &Perm, m: usize) -> (PermGroup, PermGroup) {
    let e = n.enumerate(DEFAULT_CAP).unwrap();
    let k = c.order() as usize;
    assert_eq!(m % k, 0);
    let step = m / k;
    let size = e.len();
    let point = |x: &Perm, j: usize| -> usize {
        // normalise j into 0..step by absorbing multiples of step into x
        let (q, r) = (j / step, j % step);
        let y = x.mul(&c.pow(q as u64));
        e.id_of(y.images()).unwrap() * step + r
    };
    let total = size * step;
    let elem = |id: usize| e.perm(id);
    // right multiplication x ↦ x·g commutes with z and with the identification
    let right = |g: &Perm| {
        let img: Vec<u16> = (0..total)
            .map(|pt| point(&elem(pt / step).mul(g), pt % step) as u16)
            .collect();
        Perm::from_images(img).unwrap()
    };
    let ngens: Vec<Perm> = n.generators().iter().map(right).collect();
    let z = Perm::from_images(
        (0..total)
            .map(|pt| point(&elem(pt / step), pt % step + 1) as u16)
            .collect(),
    )
    .unwrap();
    let name = format!("{}o C{m}", n.name());
    let whole = PermGroup::new(name, total, ngens.iter().cloned().chain([z]).collect()).unwrap();
    (whole, PermGroup::new(n.name(), total, ngens).unwrap())
}
