use std::sync::OnceLock;

use crate::arith::lcm;

use super::elements::Enumerated;

/// Conjugacy classes of an enumerated group.
///
/// Classes are ordered by representative id, and each representative is the
/// smallest element id in its class, so class 0 is the identity class.
#[derive(Debug, Clone)]
pub struct ConjClasses {
    reps: Vec<usize>,
    sizes: Vec<u64>,
    orders: Vec<u64>,
    class_of: Vec<u32>,
    inverse: Vec<usize>,
    // powers[j][k] = class of rep_j^k, for k in 0..orders[j]; filled on demand
    powers: Vec<OnceLock<Vec<usize>>>,
    member_offsets: Vec<usize>,
    members: Vec<u32>,
    exponent: u64,
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

impl ConjClasses {
    pub fn compute(elements: &Enumerated) -> Self {
        let n = elements.len();
        let gens: Vec<_> = elements.group().generators().to_vec();
        let inv_gens: Vec<_> = gens.iter().map(|g| g.inverse()).collect();
        let mut parent: Vec<u32> = (0..n as u32).collect();
        let mut buf = vec![0u16; elements.degree()];
        for x in 0..n {
            let img = elements.images(x);
            for (g, gi) in gens.iter().zip(&inv_gens) {
                // g^-1 x g
                for (pt, b) in buf.iter_mut().enumerate() {
                    *b = g.images()[img[gi.apply(pt)] as usize];
                }
                let y = elements.id_of(&buf).expect("conjugate lies in the group");
                let (rx, ry) = (find(&mut parent, x as u32), find(&mut parent, y as u32));
                if rx != ry {
                    // keep the smaller id as root
                    let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
                    parent[hi as usize] = lo;
                }
            }
        }
        let mut class_index = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut class_of = vec![0u32; n];
        for (x, slot) in class_of.iter_mut().enumerate() {
            let r = find(&mut parent, x as u32) as usize;
            if class_index[r] == u32::MAX {
                class_index[r] = reps.len() as u32;
                reps.push(r);
            }
            *slot = class_index[r];
        }
        let r = reps.len();
        let mut sizes = vec![0u64; r];
        for &c in &class_of {
            sizes[c as usize] += 1;
        }
        let mut member_offsets = vec![0usize; r + 1];
        for j in 0..r {
            member_offsets[j + 1] = member_offsets[j] + sizes[j] as usize;
        }
        let mut fill = member_offsets.clone();
        let mut members = vec![0u32; n];
        for (x, &c) in class_of.iter().enumerate() {
            members[fill[c as usize]] = x as u32;
            fill[c as usize] += 1;
        }
        let orders: Vec<u64> = reps.iter().map(|&x| elements.element_order(x)).collect();
        let exponent = orders.iter().fold(1, |acc, &o| lcm(acc, o));
        let mut buf = Vec::new();
        let inverse = reps
            .iter()
            .map(|&x| class_of[elements.inverse_id(x, &mut buf)] as usize)
            .collect();
        let powers = (0..r).map(|_| OnceLock::new()).collect();
        ConjClasses {
            reps,
            sizes,
            orders,
            class_of,
            inverse,
            powers,
            member_offsets,
            members,
            exponent,
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn class_of(&self, id: usize) -> usize {
        self.class_of[id] as usize
    }

    pub fn members(&self, class: usize) -> &[u32] {
        &self.members[self.member_offsets[class]..self.member_offsets[class + 1]]
    }

    /// Power map of class `j` for `k = 0..order_j`, computed on first use
    /// from the element list the classes were built from.
    pub fn powers(&self, elements: &Enumerated, j: usize) -> &[usize] {
        self.powers[j].get_or_init(|| {
            let g = elements.perm(self.reps[j]);
            let mut cur = crate::perm::Perm::identity(elements.degree());
            (0..self.orders[j])
                .map(|_| {
                    let id = elements
                        .id_of(cur.images())
                        .expect("power lies in the group");
                    cur = cur.mul(&g);
                    self.class_of[id] as usize
                })
                .collect()
        })
    }

    /// Class of `g^k` for `g` in class `j`; any `k ≥ 0` is accepted.
    pub fn power_map(&self, elements: &Enumerated, k: u64, j: usize) -> usize {
        self.powers(elements, j)[(k % self.orders[j]) as usize]
    }

    /// Class of inverses.
    pub fn inverse_class(&self, j: usize) -> usize {
        self.inverse[j]
    }
}
