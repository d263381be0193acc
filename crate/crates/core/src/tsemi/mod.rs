//! Transformations, the singular part `<G, t> \ G`, and idempotent generation.

mod closure;
mod kid;
mod layer;
mod packed;
mod reps;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{KSubset, Permutation, SetPartition};

pub use closure::{singular_part, TransformationSemigroup};
pub use kid::{has_k_id, singular_part_is_idempotent_generated, KidReport};
pub use layer::{LayerAnalysis, MAX_PACKED_DEGREE};
pub use reps::rank_k_map_reps;

pub(crate) use packed::Packed;
pub(crate) use reps::kernel_orbit_reps;

/// A total map on `0..n`, acting on the right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Transformation {
    images: Vec<usize>,
}

impl Transformation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if let Some(&bad) = images.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidArgument(format!(
                "image {bad} out of range for degree {n}"
            )));
        }
        Ok(Transformation { images })
    }

    pub fn identity(n: usize) -> Self {
        Transformation {
            images: (0..n).collect(),
        }
    }

    /// Parses the 1-based text form used for witness maps.
    ///
    /// Tokens are separated by whitespace. A token whose value is a valid
    /// point is one image; any other token of digits is read one digit per
    /// point. So `2211552` and `2 2 1 1 5 5 2` are the same map of degree 7,
    /// and `10 10 1155555 10` is a map of degree 10.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut images = Vec::with_capacity(n);
        for token in text.split_whitespace() {
            let bad = || Error::InvalidArgument(format!("bad transformation token {token:?}"));
            if !token.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            match token.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => images.push(v - 1),
                _ => {
                    for b in token.bytes() {
                        let v = (b - b'0') as usize;
                        if v == 0 || v > n {
                            return Err(bad());
                        }
                        images.push(v - 1);
                    }
                }
            }
        }
        if images.len() != n {
            return Err(Error::InvalidArgument(format!(
                "transformation {text:?} has {} points, expected {n}",
                images.len()
            )));
        }
        Ok(Transformation { images })
    }

    /// The map sending every point of part `j` of `kernel` to `image[perm[j]]`.
    pub fn from_kernel_image(kernel: &SetPartition, image: &KSubset, perm: &[usize]) -> Self {
        Transformation {
            images: kernel
                .part_of()
                .iter()
                .map(|&p| image.elements()[perm[p]])
                .collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Transformation) -> Transformation {
        Transformation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn then_perm(&self, g: &Permutation) -> Transformation {
        Transformation {
            images: self.images.iter().map(|&x| g.apply(x)).collect(),
        }
    }

    pub fn perm_then(g: &Permutation, t: &Transformation) -> Transformation {
        Transformation {
            images: g.images().iter().map(|&x| t.images[x]).collect(),
        }
    }

    pub fn image_set(&self) -> KSubset {
        KSubset::new(self.images.clone())
    }

    pub fn rank(&self) -> usize {
        self.image_set().len()
    }

    pub fn kernel(&self) -> SetPartition {
        SetPartition::from_labels(&self.images)
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn is_idempotent(&self) -> bool {
        self.images.iter().all(|&x| self.images[x] == x)
    }

    /// 1-based text form; digits run together when every point is a single digit.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        if self.degree() <= 9 {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_text())
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let t = Transformation::parse(7, "2211552").unwrap();
        assert_eq!(t.images(), &[1, 1, 0, 0, 4, 4, 1]);
        assert_eq!(t, Transformation::parse(7, "2 2 1 1 5 5 2").unwrap());
        let a5 = Transformation::parse(10, "10 10 1155555 10").unwrap();
        assert_eq!(a5.images(), &[9, 9, 0, 0, 4, 4, 4, 4, 4, 9]);
        assert_eq!(a5.rank(), 3);
        assert!(Transformation::parse(7, "221155").is_err());
        assert!(Transformation::parse(7, "2211558").is_err());
        assert!(Transformation::parse(7, "22x1552").is_err());
    }

    #[test]
    fn compose_examples() {
        let t = Transformation::parse(7, "2211552").unwrap();
        let g = Permutation::from_cycles(7, &[vec![0, 1], vec![4, 5]]).unwrap();
        assert_eq!(t.then_perm(&g).to_text(), "1122661");
        let id = Transformation::identity(7);
        assert_eq!(id.compose(&t), t);
        let c = Transformation::from_images(vec![0; 7]).unwrap();
        assert_eq!(c.compose(&t).images(), &[1; 7]);
    }

    #[test]
    fn kernel_and_image() {
        let t = Transformation::parse(7, "2211552").unwrap();
        assert_eq!(t.kernel().parts(), &[vec![0, 1, 6], vec![2, 3], vec![4, 5]]);
        assert_eq!(t.image_set().elements(), &[0, 1, 4]);
        assert!(!t.is_idempotent());
        assert!(Transformation::parse(3, "113").unwrap().is_idempotent());
    }

    #[test]
    fn rebuild_from_kernel_image() {
        let t = Transformation::parse(7, "2211552").unwrap();
        // part 0 -> 1 (index 1), part 1 -> 0 (index 0), part 2 -> 4 (index 2)
        let rebuilt = Transformation::from_kernel_image(&t.kernel(), &t.image_set(), &[1, 0, 2]);
        assert_eq!(rebuilt, t);
    }
}
