//! Affine, projective-line and projective-plane actions.

use rustc_hash::FxHashMap;

use super::field::{prime_power, GaloisField};
use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};

fn perm_from(n: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..n).map(f).collect()).expect("construction yields a bijection")
}

fn field(q: u64) -> Result<GaloisField> {
    GaloisField::new(q)
}

/// Affine maps `x -> a x^(p^j) + b` of GF(q), generated by the translations,
/// `x -> w^step x`, and, when `twist` is given, `x -> w^twist x^p`.
///
/// `affine_semilinear(q, 1, None)` is AGL(1,q) and
/// `affine_semilinear(q, 1, Some(0))` is AΓL(1,q).
pub fn affine_semilinear(q: u64, step: usize, twist: Option<usize>) -> Result<PermutationGroup> {
    let f = field(q)?;
    let n = f.order();
    let mut gens = vec![perm_from(n, |x| f.add(x, 1))];
    if n > 2 {
        let a = f.power_of_generator(step as i64);
        gens.push(perm_from(n, |x| f.mul(a, x)));
    }
    if let Some(t) = twist {
        let a = f.power_of_generator(t as i64);
        gens.push(perm_from(n, |x| f.mul(a, f.frobenius(x))));
    }
    PermutationGroup::new(n, gens)
}

pub fn agl1(q: u64) -> Result<PermutationGroup> {
    Ok(affine_semilinear(q, 1, None)?.with_name(format!("AGL(1,{q})")))
}

pub fn agammal1(q: u64) -> Result<PermutationGroup> {
    Ok(affine_semilinear(q, 1, Some(0))?.with_name(format!("AGammaL(1,{q})")))
}

/// `d x d` matrices over GF(p), row-major.
type Matrix = Vec<usize>;

fn require_prime(p: u64) -> Result<usize> {
    match prime_power(p) {
        Some((_, 1)) => Ok(p as usize),
        Some(_) => Err(Error::UnsupportedQ(p)),
        None => Err(Error::NotPrimePower(p)),
    }
}

fn transvections(d: usize, p: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i != j {
                let mut m = vec![0; d * d];
                for k in 0..d {
                    m[k * d + k] = 1;
                }
                m[i * d + j] = 1 % p;
                out.push(m);
            }
        }
    }
    out
}

fn affine_group(d: usize, p: usize, linear: &[Matrix]) -> Result<PermutationGroup> {
    let n = p.pow(d as u32);
    let to_vec = |mut x: usize| {
        let mut v = vec![0; d];
        for c in v.iter_mut() {
            *c = x % p;
            x /= p;
        }
        v
    };
    let from_vec = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * p + c);
    let mut gens = Vec::new();
    for i in 0..d {
        gens.push(perm_from(n, |x| {
            let mut v = to_vec(x);
            v[i] = (v[i] + 1) % p;
            from_vec(&v)
        }));
    }
    for m in linear {
        gens.push(perm_from(n, |x| {
            let v = to_vec(x);
            let w: Vec<usize> = (0..d)
                .map(|j| (0..d).map(|i| v[i] * m[i * d + j]).sum::<usize>() % p)
                .collect();
            from_vec(&w)
        }));
    }
    PermutationGroup::new(n, gens)
}

/// ASL(d,p) acting on GF(p)^d.
pub fn asl(d: usize, p: u64) -> Result<PermutationGroup> {
    let p = require_prime(p)?;
    Ok(affine_group(d, p, &transvections(d, p))?.with_name(format!("ASL({d},{p})")))
}

/// AGL(d,p) acting on GF(p)^d.
pub fn agl(d: usize, p: u64) -> Result<PermutationGroup> {
    let pp = require_prime(p)?;
    let f = field(p)?;
    let mut linear = transvections(d, pp);
    let mut scale = vec![0; d * d];
    for k in 0..d {
        scale[k * d + k] = 1;
    }
    scale[0] = f.primitive_element();
    linear.push(scale);
    Ok(affine_group(d, pp, &linear)?.with_name(format!("AGL({d},{p})")))
}

/// Points of the projective line: field elements `0..q`, and infinity as `q`.
struct ProjectiveLine {
    f: GaloisField,
}

impl ProjectiveLine {
    fn infinity(&self) -> usize {
        self.f.order()
    }

    /// The fractional-linear map `x -> (a x + b) / (c x + d)`, for points
    /// already twisted by a field automorphism.
    fn mobius(&self, [a, b, c, d]: [usize; 4], x: usize) -> usize {
        let f = &self.f;
        let inf = self.infinity();
        if x == inf {
            return if c == 0 { inf } else { f.mul(a, f.inv(c)) };
        }
        let num = f.add(f.mul(a, x), b);
        let den = f.add(f.mul(c, x), d);
        if den == 0 {
            inf
        } else {
            f.mul(num, f.inv(den))
        }
    }

    fn map(&self, coeffs: [usize; 4]) -> Permutation {
        perm_from(self.f.order() + 1, |x| self.mobius(coeffs, x))
    }

    /// `x -> m(x^p)` with infinity fixed by the twist.
    fn twisted(&self, coeffs: [usize; 4]) -> Permutation {
        let inf = self.infinity();
        perm_from(inf + 1, |x| {
            let y = if x == inf { inf } else { self.f.frobenius(x) };
            self.mobius(coeffs, y)
        })
    }
}

fn line(q: u64) -> Result<ProjectiveLine> {
    Ok(ProjectiveLine { f: field(q)? })
}

/// Generators `x+1`, `w^step x` and `-1/x` of the fractional-linear part.
fn projective_generators(l: &ProjectiveLine, step: i64) -> Vec<Permutation> {
    let f = &l.f;
    vec![
        l.map([1, 1, 0, 1]),
        l.map([0, f.neg(1), 1, 0]),
        l.map([f.power_of_generator(step), 0, 0, 1]),
    ]
}

pub fn pgl2(q: u64) -> Result<PermutationGroup> {
    let l = line(q)?;
    let gens = projective_generators(&l, 1);
    Ok(PermutationGroup::new(l.infinity() + 1, gens)?.with_name(format!("PGL(2,{q})")))
}

pub fn psl2(q: u64) -> Result<PermutationGroup> {
    let l = line(q)?;
    let gens = projective_generators(&l, 2);
    Ok(PermutationGroup::new(l.infinity() + 1, gens)?.with_name(format!("PSL(2,{q})")))
}

/// PΣL(2,q): PSL(2,q) extended by the Frobenius map.
pub fn psigmal2(q: u64) -> Result<PermutationGroup> {
    let l = line(q)?;
    let mut gens = projective_generators(&l, 2);
    gens.push(l.twisted([1, 0, 0, 1]));
    Ok(PermutationGroup::new(l.infinity() + 1, gens)?.with_name(format!("PSigmaL(2,{q})")))
}

/// PΓL(2,q): PGL(2,q) extended by the Frobenius map.
pub fn pgammal2(q: u64) -> Result<PermutationGroup> {
    let l = line(q)?;
    let mut gens = projective_generators(&l, 1);
    gens.push(l.twisted([1, 0, 0, 1]));
    Ok(PermutationGroup::new(l.infinity() + 1, gens)?.with_name(format!("PGammaL(2,{q})")))
}

/// M10: PSL(2,9) extended by `x -> w x^3`, the third index-2 subgroup of
/// PΓL(2,9) containing PSL(2,9).
pub fn m10() -> Result<PermutationGroup> {
    let l = line(9)?;
    let mut gens = projective_generators(&l, 2);
    gens.push(l.twisted([l.f.primitive_element(), 0, 0, 1]));
    Ok(PermutationGroup::new(10, gens)?.with_name("M10"))
}

/// Normalised nonzero vectors of GF(q)^3: the first nonzero coordinate is 1.
fn projective_points(f: &GaloisField) -> Vec<[usize; 3]> {
    let q = f.order();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            out.push([1, a, b]);
        }
    }
    for b in 0..q {
        out.push([0, 1, b]);
    }
    out.push([0, 0, 1]);
    out
}

fn normalise(f: &GaloisField, v: [usize; 3]) -> [usize; 3] {
    let lead = v.iter().copied().find(|&c| c != 0).expect("nonzero vector");
    let s = f.inv(lead);
    v.map(|c| f.mul(s, c))
}

fn dot(f: &GaloisField, a: &[usize; 3], b: &[usize; 3]) -> usize {
    (0..3).fold(0, |acc, i| f.add(acc, f.mul(a[i], b[i])))
}

fn row_times(f: &GaloisField, v: &[usize; 3], m: &[[usize; 3]; 3]) -> [usize; 3] {
    let mut out = [0; 3];
    for (j, o) in out.iter_mut().enumerate() {
        for i in 0..3 {
            *o = f.add(*o, f.mul(v[i], m[i][j]));
        }
    }
    out
}

fn inverse_transpose(f: &GaloisField, m: &[[usize; 3]; 3]) -> [[usize; 3]; 3] {
    // Cofactor matrix divided by the determinant.
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]))
    };
    let det = (0..3).fold(0, |acc, j| f.add(acc, f.mul(m[0][j], c(0, j))));
    let s = f.inv(det);
    let mut out = [[0; 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = f.mul(s, c(i, j));
        }
    }
    out
}

/// PGL(3,q) on incident (point, line) pairs of PG(2,q), or on non-incident
/// pairs when `antiflag`, optionally extended by the duality swapping
/// points and lines. Lines are coded by their normalised dual vectors.
pub fn flag_action_psl3(q: u64, dual: bool, antiflag: bool) -> Result<PermutationGroup> {
    let f = field(q)?;
    if f.order() > 4 {
        return Err(Error::UnsupportedQ(q));
    }
    let pts = projective_points(&f);
    let pairs: Vec<([usize; 3], [usize; 3])> = pts
        .iter()
        .flat_map(|p| pts.iter().map(move |l| (*p, *l)))
        .filter(|(p, l)| (dot(&f, p, l) == 0) != antiflag)
        .collect();
    let index: FxHashMap<([usize; 3], [usize; 3]), usize> =
        pairs.iter().enumerate().map(|(i, &pl)| (pl, i)).collect();
    let n = pairs.len();

    let identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut matrices = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                let mut m = identity;
                m[i][j] = 1;
                matrices.push(m);
            }
        }
    }
    let mut scale = identity;
    scale[0][0] = f.primitive_element();
    matrices.push(scale);

    let mut gens: Vec<Permutation> = matrices
        .iter()
        .map(|m| {
            let mt = inverse_transpose(&f, m);
            perm_from(n, |x| {
                let (p, l) = pairs[x];
                index[&(normalise(&f, row_times(&f, &p, m)), normalise(&f, row_times(&f, &l, &mt)))]
            })
        })
        .collect();
    let frob = f.degree() > 1;
    if frob {
        gens.push(perm_from(n, |x| {
            let (p, l) = pairs[x];
            index[&(p.map(|c| f.frobenius(c)), l.map(|c| f.frobenius(c)))]
        }));
    }
    if dual {
        gens.push(perm_from(n, |x| {
            let (p, l) = pairs[x];
            index[&(l, p)]
        }));
    }
    let kind = if antiflag { "antiflags" } else { "flags" };
    let name = match (frob, dual) {
        (false, false) => format!("PGL(3,{q}) on {kind}"),
        (false, true) => format!("PGL(3,{q}):2 on {kind}"),
        (true, false) => format!("PGammaL(3,{q}) on {kind}"),
        (true, true) => format!("PGammaL(3,{q}):2 on {kind}"),
    };
    Ok(PermutationGroup::new(n, gens)?.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1 << 22;

    #[test]
    fn affine_orders() {
        assert_eq!(agl1(5).unwrap().order(CAP).unwrap(), 20);
        assert_eq!(agl1(7).unwrap().order(CAP).unwrap(), 42);
        assert_eq!(agl1(8).unwrap().order(CAP).unwrap(), 56);
        assert_eq!(agammal1(8).unwrap().order(CAP).unwrap(), 168);
        assert_eq!(agammal1(9).unwrap().order(CAP).unwrap(), 144);
        assert_eq!(affine_semilinear(7, 2, None).unwrap().order(CAP).unwrap(), 21);
        assert_eq!(affine_semilinear(9, 2, None).unwrap().order(CAP).unwrap(), 36);
        assert_eq!(affine_semilinear(9, 2, Some(0)).unwrap().order(CAP).unwrap(), 72);
        assert_eq!(affine_semilinear(9, 2, Some(1)).unwrap().order(CAP).unwrap(), 72);
        assert_eq!(asl(3, 2).unwrap().order(CAP).unwrap(), 1344);
        assert_eq!(asl(2, 3).unwrap().order(CAP).unwrap(), 216);
        assert_eq!(agl(2, 3).unwrap().order(CAP).unwrap(), 432);
        assert!(matches!(asl(2, 4), Err(Error::UnsupportedQ(4))));
    }

    #[test]
    fn projective_line_orders() {
        for q in [4u64, 5, 7, 8, 9, 11] {
            let full = q * (q * q - 1);
            let g = if q % 2 == 1 { 2 } else { 1 };
            assert_eq!(pgl2(q).unwrap().order(CAP).unwrap() as u64, full, "PGL(2,{q})");
            assert_eq!(psl2(q).unwrap().order(CAP).unwrap() as u64, full / g, "PSL(2,{q})");
        }
        assert_eq!(psigmal2(9).unwrap().order(CAP).unwrap(), 720);
        assert_eq!(pgammal2(9).unwrap().order(CAP).unwrap(), 1440);
        assert_eq!(pgammal2(8).unwrap().order(CAP).unwrap(), 1512);
        let m = m10().unwrap();
        assert_eq!(m.order(CAP).unwrap(), 720);
        assert!(m.is_k_transitive(3));
        assert!(!psigmal2(9).unwrap().is_k_transitive(3));
    }

    #[test]
    fn flag_degrees() {
        let g = flag_action_psl3(2, false, false).unwrap();
        assert_eq!(g.degree(), 21);
        assert_eq!(g.order(CAP).unwrap(), 168);
        let g = flag_action_psl3(2, true, false).unwrap();
        assert_eq!(g.order(CAP).unwrap(), 336);
        assert_eq!(flag_action_psl3(2, true, true).unwrap().degree(), 28);
        let g = flag_action_psl3(3, true, false).unwrap();
        assert_eq!(g.degree(), 52);
        assert_eq!(g.order(CAP).unwrap(), 11232);
        assert_eq!(flag_action_psl3(3, false, false).unwrap().order(CAP).unwrap(), 5616);
        assert_eq!(flag_action_psl3(3, true, true).unwrap().degree(), 117);
        assert!(matches!(flag_action_psl3(5, true, false), Err(Error::UnsupportedQ(5))));
    }
}
