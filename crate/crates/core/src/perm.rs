//! Permutations stored as image arrays on `{0, .., n-1}`.
//!
//! Products are read left to right: `a * b` applies `a` first, then `b`.

use std::fmt;

use crate::arith::lcm;

/// Largest supported permutation degree.
pub const MAX_DEGREE: usize = u16::MAX as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("image list of length {len} is not a bijection on 1..={len}")]
    NotABijection { len: usize },
    #[error("degree {0} exceeds the supported maximum")]
    DegreeTooLarge(usize),
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<u16>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(PermError::NotABijection { len: n });
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based images, as used in group files.
    pub fn from_one_based(images: &[usize]) -> Result<Self, PermError> {
        if images.len() > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(images.len()));
        }
        let zero: Option<Vec<u16>> = images
            .iter()
            .map(|&i| i.checked_sub(1).map(|v| v as u16))
            .collect();
        match zero {
            Some(v) if images.iter().all(|&i| i <= images.len()) => Perm::from_images(v),
            _ => Err(PermError::NotABijection { len: images.len() }),
        }
    }

    /// From disjoint cycles on 1-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut img: Vec<u16> = (0..n as u16).collect();
        for cyc in cycles {
            for (k, &pt) in cyc.iter().enumerate() {
                let next = cyc[(k + 1) % cyc.len()];
                if pt == 0 || pt > n || next == 0 || next > n {
                    return Err(PermError::NotABijection { len: n });
                }
                img[pt - 1] = (next - 1) as u16;
            }
        }
        Perm::from_images(img)
    }

    pub(crate) fn from_slice_unchecked(s: &[u16]) -> Self {
        Perm(s.to_vec())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize + 1).collect()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Perm(inv)
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut out = vec![0u16; self.0.len()];
        for c in self.cycles() {
            let len = c.len() as u64;
            let shift = (k % len) as usize;
            for (i, &pt) in c.iter().enumerate() {
                out[pt] = c[(i + shift) % c.len()] as u16;
            }
        }
        Perm(out)
    }

    /// `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.inverse().mul(self).mul(other)
    }

    /// Cycles including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn order(&self) -> u64 {
        order_of_images(&self.0)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .position(|(i, &x)| i != x as usize)
    }
}

pub(crate) fn order_of_images(img: &[u16]) -> u64 {
    let n = img.len();
    let mut seen = vec![false; n];
    let mut ord = 1u64;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = img[x] as usize;
            len += 1;
        }
        ord = lcm(ord, len);
    }
    ord
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation on 1-based points; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_strategy(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n as u16).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    #[test]
    fn cycle_notation_and_order() {
        let p = Perm::from_cycles(5, &[&[1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(2), p.mul(&p));
        assert!(Perm::from_one_based(&[1, 1]).is_err());
        assert!(Perm::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn left_to_right_products() {
        let a = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[&[2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.mul(&b).apply(0), 2);
    }

    proptest! {
        #[test]
        fn inverse_and_power_laws(a in perm_strategy(9), b in perm_strategy(9), k in 0u64..50) {
            prop_assert!(a.mul(&a.inverse()).is_identity());
            prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
            let mut naive = Perm::identity(9);
            for _ in 0..k { naive = naive.mul(&a); }
            prop_assert_eq!(a.pow(k), naive);
        }
    }
}
