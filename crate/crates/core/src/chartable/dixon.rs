//! Dixon–Schneider: common eigenvectors of the class matrices over `F_q`,
//! then lifting of degrees and character values.
//!
//! The space is first split by the centre `Z(G)`: a central element `z` acts
//! on class indices by `K_j ↦ zK_j`, so each linear character `θ` of `Z`
//! gives an explicit eigenspace spanned by vectors supported on single
//! `Z`-orbits. Every such space is then split depth-first by the remaining
//! class matrices in class index order.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arith::{inv_mod, is_prime, isqrt, mul_mod, pow_mod, primitive_root, sub_mod};
use crate::cyclotomic::Cyclotomic;
use crate::linalg::{charpoly, kernel, rref, Matrix};
use crate::permgroup::{ConjClasses, Enumerated};
use crate::poly::distinct_roots;

use super::{CharTableError, CharacterTable};

#[derive(Clone, Debug, Default)]
pub struct DixonOptions {
    /// Use the `prime_rank`-th admissible prime (0 = smallest).
    pub prime_rank: usize,
}

const PRIME_BOUND: u64 = 1 << 63;

/// The `rank`-th prime `q ≡ 1 (mod exponent)` with `q > 2⌈√order⌉`.
pub fn admissible_prime(order: u64, exponent: u64, rank: usize) -> Result<u64, CharTableError> {
    let root = isqrt(order);
    let ceil_root = if root * root == order { root } else { root + 1 };
    let bound = 2 * ceil_root;
    let mut k = (bound / exponent).max(1);
    let mut seen = 0;
    loop {
        let q = k
            .checked_mul(exponent)
            .and_then(|x| x.checked_add(1))
            .filter(|&q| q < PRIME_BOUND)
            .ok_or(CharTableError::NoSuitablePrime { exponent })?;
        if q > bound && is_prime(q) {
            if seen == rank {
                return Ok(q);
            }
            seen += 1;
        }
        k += 1;
    }
}

/// Class matrix stored by columns: `cols[k]` lists `(j, a_ijk)` with
/// `a_ijk = #{x ∈ K_i : x^{-1} z_k ∈ K_j}`, so that central characters are
/// right eigenvectors, `M_i ω = ω_i ω`.
struct SparseClassMatrix {
    cols: Vec<Vec<(u32, u64)>>,
}

struct Splitter<'a> {
    elements: &'a Enumerated,
    classes: &'a ConjClasses,
    q: u64,
    cache: HashMap<usize, SparseClassMatrix>,
}

/// A subspace as an RREF row basis with its pivot columns.
struct Space {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Splitter<'_> {
    fn class_matrix(&mut self, i: usize) -> &SparseClassMatrix {
        let (elements, classes) = (self.elements, self.classes);
        self.cache.entry(i).or_insert_with(|| {
            let r = classes.len();
            let mut buf = Vec::new();
            let inverses: Vec<usize> = classes
                .members(i)
                .iter()
                .map(|&x| elements.inverse_id(x as usize, &mut buf))
                .collect();
            let mut counts = vec![0u64; r];
            let mut touched = Vec::new();
            let cols = classes
                .reps()
                .iter()
                .map(|&z| {
                    for &xi in &inverses {
                        let j = classes.class_of(elements.mul_ids(xi, z, &mut buf));
                        if counts[j] == 0 {
                            touched.push(j);
                        }
                        counts[j] += 1;
                    }
                    touched.sort_unstable();
                    let col = touched
                        .iter()
                        .map(|&j| (j as u32, std::mem::take(&mut counts[j])))
                        .collect();
                    touched.clear();
                    col
                })
                .collect();
            SparseClassMatrix { cols }
        })
    }

    /// Splits `space` by the non-central class matrices from index `from`
    /// on, pushing normalized one-dimensional eigenvectors to `out`.
    fn split(
        &mut self,
        space: Space,
        from: usize,
        out: &mut Vec<Vec<u64>>,
    ) -> Result<(), CharTableError> {
        let q = self.q;
        let r = self.classes.len();
        if space.basis.len() == 1 {
            let v = &space.basis[0];
            let inv0 = inv_mod(v[0], q).ok_or_else(|| {
                CharTableError::EigenspaceSplitFailure(
                    "eigenvector vanishes at the identity class".into(),
                )
            })?;
            out.push(v.iter().map(|&x| mul_mod(x, inv0, q)).collect());
            return Ok(());
        }
        let s = space.basis.len();
        for i in from..r {
            if self.classes.sizes()[i] == 1 {
                continue;
            }
            let m = self.class_matrix(i);
            // restricted[a][l] = (M_i b_l)[pivot_a]
            let mut restricted = vec![vec![0u64; s]; s];
            let pivot_slot: HashMap<usize, usize> = space
                .pivots
                .iter()
                .enumerate()
                .map(|(a, &c)| (c, a))
                .collect();
            for (l, b) in space.basis.iter().enumerate() {
                for (k, &bk) in b.iter().enumerate() {
                    if bk == 0 {
                        continue;
                    }
                    for &(j, c) in &m.cols[k] {
                        if let Some(&a) = pivot_slot.get(&(j as usize)) {
                            restricted[a][l] = (restricted[a][l] + mul_mod(c % q, bk, q)) % q;
                        }
                    }
                }
            }
            let roots = distinct_roots(&charpoly(&restricted, q), q);
            if roots.len() <= 1 {
                continue;
            }
            let mut total = 0;
            for lambda in roots {
                let mut shifted = restricted.clone();
                for (a, row) in shifted.iter_mut().enumerate() {
                    row[a] = sub_mod(row[a], lambda, q);
                }
                let mut sub: Matrix = kernel(&shifted, s, q)
                    .iter()
                    .map(|c| {
                        let mut v = vec![0u64; r];
                        for (l, &cl) in c.iter().enumerate().filter(|(_, &cl)| cl != 0) {
                            for (x, &bx) in v.iter_mut().zip(&space.basis[l]) {
                                if bx != 0 {
                                    *x = (*x + mul_mod(cl, bx, q)) % q;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                let pivots = rref(&mut sub, q);
                total += sub.len();
                self.split(Space { basis: sub, pivots }, i + 1, out)?;
            }
            if total != s {
                return Err(CharTableError::EigenspaceSplitFailure(format!(
                    "class matrix {i} is not diagonalizable on a subspace of dimension {s}"
                )));
            }
            return Ok(());
        }
        Err(CharTableError::EigenspaceSplitFailure(format!(
            "a common eigenspace of dimension {s} does not split"
        )))
    }
}

/// The centre as a chain `Z_0 < Z_1 < ..` of subgroups generated by
/// successive central representatives, with the relation `g_i^{m_i} ∈
/// Z_{i-1}` expressed in normal-form coordinates.
struct Centre {
    gens: Vec<usize>,
    rel_index: Vec<u64>,
    rel_coords: Vec<Vec<u64>>,
}

impl Centre {
    fn compute(elements: &Enumerated, classes: &ConjClasses) -> Centre {
        let mut buf = Vec::new();
        let mut coords: HashMap<usize, Vec<u64>> = HashMap::from([(0usize, Vec::new())]);
        let mut centre = Centre {
            gens: Vec::new(),
            rel_index: Vec::new(),
            rel_coords: Vec::new(),
        };
        for j in 1..classes.len() {
            let g = classes.reps()[j];
            if classes.sizes()[j] != 1 || coords.contains_key(&g) {
                continue;
            }
            let mut powers = vec![0usize];
            let mut cur = g;
            while !coords.contains_key(&cur) {
                powers.push(cur);
                cur = elements.mul_ids(cur, g, &mut buf);
            }
            let m = powers.len() as u64;
            centre.rel_index.push(m);
            centre.rel_coords.push(coords[&cur].clone());
            centre.gens.push(g);
            let mut next = HashMap::with_capacity(coords.len() * m as usize);
            for (&x, c) in &coords {
                for (t, &gt) in powers.iter().enumerate() {
                    let mut cc = c.clone();
                    cc.resize(centre.gens.len() - 1, 0);
                    cc.push(t as u64);
                    next.insert(elements.mul_ids(x, gt, &mut buf), cc);
                }
            }
            coords = next;
        }
        centre
    }

    /// All linear characters as exponent vectors `b` with `θ(g_i) = ζ^{b_i}`
    /// for a fixed primitive `e`-th root `ζ`, in lexicographic order.
    fn characters(&self, e: u64) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for (i, (&m, rel)) in self.rel_index.iter().zip(&self.rel_coords).enumerate() {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for b in &out {
                let rhs = rel
                    .iter()
                    .zip(b.iter())
                    .fold(0u64, |acc, (&c, &bj)| (acc + c * bj) % e);
                debug_assert_eq!(rhs % m, 0, "generator {i} relation");
                for t in 0..m {
                    let mut nb: Vec<u64> = b.clone();
                    nb.push(rhs / m + t * (e / m));
                    next.push(nb);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

/// Calls `sink` with every central character `ω` mod `q` (normalized so
/// that `ω_0 = 1`), one `Z(G)`-character at a time.
fn central_characters(
    elements: &Enumerated,
    classes: &ConjClasses,
    q: u64,
    mut sink: impl FnMut(Vec<u64>) -> Result<(), CharTableError>,
) -> Result<usize, CharTableError> {
    let r = classes.len();
    let e = classes.exponent();
    let zeta = pow_mod(primitive_root(q), ((q - 1) / e) as u128, q);
    let zeta_pows: Vec<u64> = std::iter::successors(Some(1u64), |&x| Some(mul_mod(x, zeta, q)))
        .take(e as usize)
        .collect();
    let centre = Centre::compute(elements, classes);
    let mut buf = Vec::new();
    let tau: Vec<Vec<usize>> = centre
        .gens
        .iter()
        .map(|&g| {
            classes
                .reps()
                .iter()
                .map(|&x| classes.class_of(elements.mul_ids(g, x, &mut buf)))
                .collect()
        })
        .collect();
    // orbits of the centre on class indices, each in BFS order from its
    // smallest index, with the BFS tree edges (parent, generator)
    let mut orbit_of = vec![usize::MAX; r];
    let mut orbits: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    for start in 0..r {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut orbit = vec![(start, usize::MAX, usize::MAX)];
        let mut k = 0;
        while k < orbit.len() {
            let c = orbit[k].0;
            for (gi, t) in tau.iter().enumerate() {
                let d = t[c];
                if orbit_of[d] == usize::MAX {
                    orbit_of[d] = id;
                    orbit.push((d, c, gi));
                }
            }
            k += 1;
        }
        orbits.push(orbit);
    }
    let mut splitter = Splitter {
        elements,
        classes,
        q,
        cache: HashMap::new(),
    };
    let mut count = 0;
    let mut expo = vec![0u64; r];
    for theta in centre.characters(e) {
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for orbit in &orbits {
            for &(c, parent, gi) in orbit {
                expo[c] = if parent == usize::MAX {
                    0
                } else {
                    (expo[parent] + theta[gi]) % e
                };
            }
            let consistent = orbit.iter().all(|&(c, _, _)| {
                tau.iter()
                    .enumerate()
                    .all(|(gi, t)| expo[t[c]] == (expo[c] + theta[gi]) % e)
            });
            if consistent {
                let mut v = vec![0u64; r];
                for &(c, _, _) in orbit {
                    v[c] = zeta_pows[expo[c] as usize];
                }
                basis.push(v);
                pivots.push(orbit[0].0);
            }
        }
        if basis.is_empty() {
            return Err(CharTableError::EigenspaceSplitFailure(
                "empty central eigenspace".into(),
            ));
        }
        let mut found = Vec::new();
        splitter.split(Space { basis, pivots }, 1, &mut found)?;
        for omega in found {
            count += 1;
            sink(omega)?;
        }
    }
    if count != r {
        return Err(CharTableError::EigenspaceSplitFailure(format!(
            "{count} central characters for {r} classes"
        )));
    }
    Ok(count)
}

/// Lifts `χ(1)` from `χ(1)^2 = |G| / Σ_j ω_j ω_{j*} / |K_j|`.
struct DegreeLifter {
    order: u64,
    q: u64,
    inv_sizes: Vec<u64>,
    inverse_class: Vec<usize>,
}

impl DegreeLifter {
    fn new(classes: &ConjClasses, order: u64, q: u64) -> Self {
        DegreeLifter {
            order,
            q,
            inv_sizes: classes
                .sizes()
                .iter()
                .map(|&s| inv_mod(s % q, q).unwrap())
                .collect(),
            inverse_class: (0..classes.len())
                .map(|j| classes.inverse_class(j))
                .collect(),
        }
    }

    fn lift(&self, omega: &[u64]) -> Result<u64, CharTableError> {
        let q = self.q;
        let mut norm = 0u64;
        for (j, &inv_size) in self.inv_sizes.iter().enumerate() {
            let t = mul_mod(omega[j], omega[self.inverse_class[j]], q);
            norm = (norm + mul_mod(t, inv_size, q)) % q;
        }
        let inv_norm = inv_mod(norm, q).ok_or_else(|| {
            CharTableError::EigenspaceSplitFailure("degenerate central character".into())
        })?;
        let d_sq = mul_mod(self.order % q, inv_norm, q);
        (1..=isqrt(self.order))
            .find(|&d| self.order.is_multiple_of(d) && mul_mod(d, d, q) == d_sq)
            .ok_or_else(|| CharTableError::EigenspaceSplitFailure("degree does not lift".into()))
    }
}

/// Character degrees only, in increasing order. Avoids building the value
/// matrix, so it scales to groups with thousands of classes.
pub fn dixon_degrees(
    elements: &Enumerated,
    classes: &ConjClasses,
    opts: &DixonOptions,
) -> Result<Vec<u64>, CharTableError> {
    let order = elements.order();
    let q = admissible_prime(order, classes.exponent(), opts.prime_rank)?;
    let lifter = DegreeLifter::new(classes, order, q);
    let mut degrees = Vec::with_capacity(classes.len());
    central_characters(elements, classes, q, |omega| {
        degrees.push(lifter.lift(&omega)?);
        Ok(())
    })?;
    degrees.sort_unstable();
    check_degree_sum(&degrees, order)?;
    Ok(degrees)
}

fn check_degree_sum(degrees: &[u64], order: u64) -> Result<(), CharTableError> {
    let sum_sq: u128 = degrees.iter().map(|&d| d as u128 * d as u128).sum();
    if sum_sq == order as u128 {
        Ok(())
    } else {
        Err(CharTableError::InvariantViolation(format!(
            "sum of squared degrees is {sum_sq}, not {order}"
        )))
    }
}

/// Computes the full character table of an enumerated group.
pub fn dixon_schneider(
    elements: &Enumerated,
    classes: &ConjClasses,
    opts: &DixonOptions,
) -> Result<CharacterTable, CharTableError> {
    let order = elements.order();
    let e = classes.exponent();
    let r = classes.len();
    let q = admissible_prime(order, e, opts.prime_rank)?;
    let z = pow_mod(primitive_root(q), ((q - 1) / e) as u128, q);
    let sizes = classes.sizes();
    let orders = classes.element_orders();
    let powers: Vec<Vec<usize>> = (0..r)
        .map(|j| classes.powers(elements, j).to_vec())
        .collect();
    let lifter = DegreeLifter::new(classes, order, q);
    let mut rows: Vec<(u64, Vec<Cyclotomic>)> = Vec::with_capacity(r);
    central_characters(elements, classes, q, |omega| {
        let d = lifter.lift(&omega)?;
        let chi: Vec<u64> = (0..r)
            .map(|j| mul_mod(mul_mod(omega[j], d, q), lifter.inv_sizes[j], q))
            .collect();
        let values = (0..r)
            .map(|j| {
                lift_value(&chi, &powers[j], orders[j], e, z, d, q).map(|terms| {
                    Cyclotomic::from_terms(
                        orders[j],
                        terms
                            .into_iter()
                            .enumerate()
                            .map(|(k, c)| (BigInt::from(c), k as u64)),
                    )
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((d, values));
        Ok(())
    })?;
    let is_trivial = |row: &[Cyclotomic]| row.iter().all(|v| *v == Cyclotomic::one());
    rows.sort_by(|a, b| {
        is_trivial(&b.1)
            .cmp(&is_trivial(&a.1))
            .then(a.0.cmp(&b.0))
            .then_with(|| {
                a.1.iter()
                    .zip(&b.1)
                    .map(|(x, y)| x.cmp_repr(y))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
    });
    let degrees: Vec<u64> = rows.iter().map(|(d, _)| *d).collect();
    check_degree_sum(&degrees, order)?;
    let irr = rows.into_iter().map(|(_, v)| v).collect();
    CharacterTable::assemble(
        elements.group().name().to_string(),
        order,
        sizes.to_vec(),
        orders.to_vec(),
        powers,
        irr,
    )
}

/// Eigenvalue multiplicities `c_k` of a class of order `o`:
/// `c_k = o^{-1} Σ_t χ(g^t)·ζ_o^{-kt}` with `ζ_o = z^{e/o}`, each lifted
/// to `[0, d]` and summing to `d`.
fn lift_value(
    chi: &[u64],
    powers: &[usize],
    o: u64,
    e: u64,
    z: u64,
    d: u64,
    q: u64,
) -> Result<Vec<u64>, CharTableError> {
    let zo = pow_mod(z, (e / o) as u128, q);
    let zo_inv = inv_mod(zo, q).unwrap();
    let inv_pows: Vec<u64> = std::iter::successors(Some(1u64), |&x| Some(mul_mod(x, zo_inv, q)))
        .take(o as usize)
        .collect();
    let o_inv = inv_mod(o % q, q).unwrap();
    let vals: Vec<u64> = powers.iter().map(|&c| chi[c]).collect();
    let mut out = Vec::with_capacity(o as usize);
    let mut total = 0u64;
    for k in 0..o as usize {
        let mut s = 0u64;
        for (t, &v) in vals.iter().enumerate() {
            s = (s + mul_mod(v, inv_pows[(k * t) % o as usize], q)) % q;
        }
        let c = mul_mod(s, o_inv, q);
        if c > d {
            return Err(CharTableError::EigenspaceSplitFailure(format!(
                "eigenvalue multiplicity {c} exceeds degree {d}"
            )));
        }
        total += c;
        out.push(c);
    }
    if total != d {
        return Err(CharTableError::EigenspaceSplitFailure(
            "eigenvalue multiplicities do not sum to the degree".into(),
        ));
    }
    Ok(out)
}
