use crate::perm::{order_of_images, Perm};

use super::{PermGroup, PermGroupError};

/// Open-addressing table from element images to ids. Keys live in the
/// enumeration's flat storage, so the table only holds ids.
#[derive(Clone)]
struct ElementIndex {
    slots: Vec<u32>,
    mask: usize,
}

const EMPTY: u32 = u32::MAX;

#[inline]
fn hash_images(img: &[u16]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &x in img {
        h = (h.rotate_left(5) ^ x as u64).wrapping_mul(0x517c_c1b7_2722_0a95);
    }
    h ^ (h >> 29)
}

impl ElementIndex {
    fn with_capacity(n: usize) -> Self {
        let cap = (n.max(8) * 2).next_power_of_two();
        ElementIndex {
            slots: vec![EMPTY; cap],
            mask: cap - 1,
        }
    }

    fn find(&self, flat: &[u16], degree: usize, img: &[u16]) -> Result<u32, usize> {
        let mut pos = hash_images(img) as usize & self.mask;
        loop {
            let id = self.slots[pos];
            if id == EMPTY {
                return Err(pos);
            }
            let start = id as usize * degree;
            if &flat[start..start + degree] == img {
                return Ok(id);
            }
            pos = (pos + 1) & self.mask;
        }
    }

    fn grow(&mut self, flat: &[u16], degree: usize, count: usize) {
        let mut next = ElementIndex::with_capacity(self.slots.len());
        for id in 0..count {
            let img = &flat[id * degree..(id + 1) * degree];
            let Err(pos) = next.find(flat, degree, img) else {
                unreachable!("duplicate element during rehash")
            };
            next.slots[pos] = id as u32;
        }
        *self = next;
    }
}

/// The full element list of a permutation group, with ids assigned in
/// breadth-first order from the identity (id 0) by right multiplication
/// with the generators.
#[derive(Clone)]
pub struct Enumerated {
    group: PermGroup,
    degree: usize,
    flat: Vec<u16>,
    index: ElementIndex,
    len: usize,
}

impl Enumerated {
    pub(super) fn build(group: &PermGroup, cap: usize) -> Result<Self, PermGroupError> {
        let degree = group.degree();
        let mut flat: Vec<u16> = (0..degree as u16).collect();
        let mut index = ElementIndex::with_capacity(64);
        let Err(pos) = index.find(&flat, degree, &flat[..degree]) else {
            unreachable!()
        };
        index.slots[pos] = 0;
        let mut len = 1usize;
        let mut buf = vec![0u16; degree];
        let mut cursor = 0usize;
        while cursor < len {
            for g in group.generators() {
                {
                    let x = &flat[cursor * degree..(cursor + 1) * degree];
                    for (b, &xi) in buf.iter_mut().zip(x) {
                        *b = g.images()[xi as usize];
                    }
                }
                if let Err(pos) = index.find(&flat, degree, &buf) {
                    if len >= cap {
                        return Err(PermGroupError::CapExceeded { cap });
                    }
                    flat.extend_from_slice(&buf);
                    index.slots[pos] = len as u32;
                    len += 1;
                    if len * 2 > index.slots.len() {
                        index.grow(&flat, degree, len);
                    }
                }
            }
            cursor += 1;
        }
        Ok(Enumerated {
            group: group.clone(),
            degree,
            flat,
            index,
            len,
        })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn order(&self) -> u64 {
        self.len as u64
    }

    #[inline]
    pub fn images(&self, id: usize) -> &[u16] {
        &self.flat[id * self.degree..(id + 1) * self.degree]
    }

    pub fn perm(&self, id: usize) -> Perm {
        Perm::from_slice_unchecked(self.images(id))
    }

    pub fn id_of(&self, img: &[u16]) -> Option<usize> {
        if img.len() != self.degree {
            return None;
        }
        self.index
            .find(&self.flat, self.degree, img)
            .ok()
            .map(|i| i as usize)
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.id_of(p.images()).is_some()
    }

    /// Id of the product `a * b` (apply `a` then `b`).
    pub fn mul_ids(&self, a: usize, b: usize, buf: &mut Vec<u16>) -> usize {
        buf.clear();
        let (x, y) = (self.images(a), self.images(b));
        buf.extend(x.iter().map(|&i| y[i as usize]));
        self.id_of(buf).expect("group closed under multiplication")
    }

    pub fn inverse_id(&self, a: usize, buf: &mut Vec<u16>) -> usize {
        buf.clear();
        buf.resize(self.degree, 0);
        for (i, &x) in self.images(a).iter().enumerate() {
            buf[x as usize] = i as u16;
        }
        self.id_of(buf).expect("group closed under inversion")
    }

    pub fn element_order(&self, id: usize) -> u64 {
        order_of_images(self.images(id))
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u16]> + '_ {
        self.flat.chunks_exact(self.degree.max(1)).take(self.len)
    }
}

impl std::fmt::Debug for Enumerated {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Enumerated")
            .field("group", &self.group.name())
            .field("order", &self.len)
            .finish()
    }
}
