use super::Transformation;
use crate::perm::Permutation;

/// A map on at most 16 points, four bits per image.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct Packed(pub u64);

const NIBBLE: u64 = 0xF;

impl Packed {
    pub fn from_images(images: &[usize]) -> Packed {
        debug_assert!(images.len() <= 16);
        Packed(
            images
                .iter()
                .enumerate()
                .fold(0, |acc, (x, &y)| acc | ((y as u64) << (4 * x))),
        )
    }

    pub fn from_transformation(t: &Transformation) -> Packed {
        Packed::from_images(t.images())
    }

    pub fn from_perm(g: &Permutation) -> Packed {
        Packed::from_images(g.images())
    }

    #[inline]
    pub fn get(self, x: usize) -> usize {
        ((self.0 >> (4 * x)) & NIBBLE) as usize
    }

    pub fn to_transformation(self, n: usize) -> Transformation {
        Transformation::from_images((0..n).map(|x| self.get(x)).collect())
            .expect("packed values are in range")
    }

    /// `self` then `other`.
    #[inline]
    pub fn then(self, other: Packed, n: usize) -> Packed {
        let mut out = 0u64;
        for x in 0..n {
            out |= (other.get(self.get(x)) as u64) << (4 * x);
        }
        Packed(out)
    }

    #[inline]
    pub fn image_mask(self, n: usize) -> u32 {
        (0..n).fold(0u32, |m, x| m | (1 << self.get(x)))
    }

    #[inline]
    pub fn rank(self, n: usize) -> usize {
        self.image_mask(n).count_ones() as usize
    }

    #[inline]
    pub fn is_idempotent(self, n: usize) -> bool {
        self.then(self, n) == self
    }

    /// Keeps only the images of the points in `mask`, zeroing the rest.
    #[inline]
    pub fn restrict(self, mask: u32, n: usize) -> Packed {
        let mut keep = 0u64;
        for x in 0..n {
            if mask & (1 << x) != 0 {
                keep |= NIBBLE << (4 * x);
            }
        }
        Packed(self.0 & keep)
    }

    /// Image mask of the points in `mask`.
    #[inline]
    pub fn image_of(self, mask: u32) -> u32 {
        let mut m = mask;
        let mut out = 0u32;
        while m != 0 {
            let x = m.trailing_zeros() as usize;
            out |= 1 << self.get(x);
            m &= m - 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trip() {
        let t = Transformation::parse(7, "2211552").unwrap();
        let p = Packed::from_transformation(&t);
        assert_eq!(p.to_transformation(7), t);
        assert_eq!(p.rank(7), 3);
        assert_eq!(p.image_mask(7), 0b10011);
    }

    #[test]
    fn then_matches_compose() {
        let f = Transformation::parse(5, "21154").unwrap();
        let g = Transformation::parse(5, "33125").unwrap();
        let (pf, pg) = (Packed::from_transformation(&f), Packed::from_transformation(&g));
        assert_eq!(pf.then(pg, 5).to_transformation(5), f.compose(&g));
    }

    #[test]
    fn restriction_and_image() {
        let p = Packed::from_images(&[3, 3, 1, 0]);
        assert_eq!(p.image_of(0b0101), 0b1010);
        let r = p.restrict(0b0101, 4);
        assert_eq!(r.get(0), 3);
        assert_eq!(r.get(1), 0);
        assert_eq!(r.get(2), 1);
    }
}
