//! Semisimple classes as vectors in `X ⊗ Q/Z`, the Frobenius map on them,
//! orders, ℓ-regular parts, and enumeration of Frobenius-stable orbits.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::IntMatrix;
use crate::root_datum::{BasedAutomorphism, RootDatum};

/// A vector of `X ⊗ Q/Z`, stored as numerators over the exact order.
///
/// The entries are `nums[i] / den` with `0 <= nums[i] < den` and
/// `gcd(den, nums...) = 1`, so `den` is the order of the vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClassVector {
    den: u64,
    nums: Vec<u64>,
}

impl ClassVector {
    pub fn zero(rank: usize) -> Self {
        ClassVector { den: 1, nums: vec![0; rank] }
    }

    /// Builds `nums / den` reduced modulo 1.
    pub fn from_numerators(nums: &[i64], den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let d = den as i128;
        let reduced: Vec<i128> = nums.iter().map(|&x| i128::from(x).rem_euclid(d)).collect();
        Self::normalize(reduced, d)
    }

    fn normalize(nums: Vec<i128>, den: i128) -> Self {
        let g = nums.iter().fold(den, |acc, x| acc.gcd(x));
        ClassVector {
            den: (den / g) as u64,
            nums: nums.into_iter().map(|x| (x / g) as u64).collect(),
        }
    }

    pub fn from_ratios(entries: &[Rational64]) -> Self {
        let den = entries.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
        let nums: Vec<i64> = entries.iter().map(|x| (x * den).to_integer()).collect();
        Self::from_numerators(&nums, den as u64)
    }

    /// Builds a vector from `(numerator, denominator)` pairs.
    pub fn from_fractions(entries: &[(i64, i64)]) -> Result<Self> {
        let mut ratios = Vec::with_capacity(entries.len());
        for &(n, d) in entries {
            if d == 0 {
                return Err(Error::BadClass(format!("{n}/{d}")));
            }
            ratios.push(Rational64::new(n, d));
        }
        Ok(Self::from_ratios(&ratios))
    }

    /// Parses entries written as `"a/b"` or `"a"`.
    pub fn parse(entries: &[&str]) -> Result<Self> {
        let mut ratios = Vec::with_capacity(entries.len());
        for e in entries {
            let r = Rational64::from_str(e.trim()).map_err(|_| Error::BadClass(e.to_string()))?;
            ratios.push(r);
        }
        Ok(Self::from_ratios(&ratios))
    }

    /// Rejects vectors whose order is divisible by `p`.
    pub fn tame(self, p: u64) -> Result<Self> {
        if self.den.is_multiple_of(p) {
            return Err(Error::NotTame { class: self.to_string(), p });
        }
        Ok(self)
    }

    pub fn rank(&self) -> usize {
        self.nums.len()
    }

    /// Order in `X ⊗ Q/Z`: the lcm of the reduced denominators.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn numerators(&self) -> &[u64] {
        &self.nums
    }

    pub fn is_zero(&self) -> bool {
        self.den == 1
    }

    pub fn entries(&self) -> Vec<Rational64> {
        self.nums
            .iter()
            .map(|&n| Rational64::new(n as i64, self.den as i64))
            .collect()
    }

    pub fn entry(&self, i: usize) -> Rational64 {
        Rational64::new(self.nums[i] as i64, self.den as i64)
    }

    /// Applies an integer matrix and reduces modulo 1.
    pub fn apply(&self, m: &IntMatrix) -> Self {
        let d = self.den as i128;
        let nums = (0..m.n_rows())
            .map(|i| {
                m.row(i)
                    .iter()
                    .zip(&self.nums)
                    .map(|(&a, &x)| i128::from(a) * x as i128)
                    .sum::<i128>()
                    .rem_euclid(d)
            })
            .collect();
        Self::normalize(nums, d)
    }

    pub fn scale(&self, k: i64) -> Self {
        let d = self.den as i128;
        let nums = self
            .nums
            .iter()
            .map(|&x| (x as i128 * i128::from(k)).rem_euclid(d))
            .collect();
        Self::normalize(nums, d)
    }

    pub fn add(&self, other: &ClassVector) -> Self {
        let d = self.den.lcm(&other.den) as i128;
        let (a, b) = ((d / self.den as i128), (d / other.den as i128));
        let nums = self
            .nums
            .iter()
            .zip(&other.nums)
            .map(|(&x, &y)| (x as i128 * a + y as i128 * b).rem_euclid(d))
            .collect();
        Self::normalize(nums, d)
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Whether `<v, y>` is an integer for the integer vector `y`.
    pub fn pairs_integrally(&self, y: &[i64]) -> bool {
        let d = self.den as i128;
        let s: i128 = self.nums.iter().zip(y).map(|(&x, &c)| x as i128 * i128::from(c)).sum();
        s.rem_euclid(d) == 0
    }

    /// Entries formatted as `"num/den"`.
    pub fn to_strings(&self) -> Vec<String> {
        self.entries()
            .iter()
            .map(|r| format!("{}/{}", r.numer(), r.denom()))
            .collect()
    }
}

impl Ord for ClassVector {
    fn cmp(&self, other: &Self) -> Ordering {
        for (&a, &b) in self.nums.iter().zip(&other.nums) {
            let l = a as u128 * other.den as u128;
            let r = b as u128 * self.den as u128;
            match l.cmp(&r) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.nums.len().cmp(&other.nums.len())
    }
}

impl PartialOrd for ClassVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.entries().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ClassVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ClassVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// Coefficient ring of the representations: `Q̄ℓ` or `Z̄ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Lambda {
    Qlbar,
    Zlbar,
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lambda::Qlbar => "Qlbar",
            Lambda::Zlbar => "Zlbar",
        })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Frobenius data: `F(v) = theta(q v)`, together with the primes and the
/// coefficient ring. An optional rotation of the affine diagram (one entry
/// per irreducible component) describes an inner twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusDescriptor {
    theta: BasedAutomorphism,
    q: u64,
    p: u64,
    ell: Option<u64>,
    lambda: Lambda,
    diagram_rotation: Option<Vec<i64>>,
}

impl FrobeniusDescriptor {
    pub fn new(
        theta: BasedAutomorphism,
        q: u64,
        p: u64,
        ell: Option<u64>,
        lambda: Lambda,
        diagram_rotation: Option<Vec<i64>>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Frobenius(format!("p = {p} is not prime")));
        }
        let mut r = q;
        while r > 1 && r.is_multiple_of(p) {
            r /= p;
        }
        if q < p || r != 1 {
            return Err(Error::Frobenius(format!("q = {q} is not a power of p = {p}")));
        }
        if let Some(l) = ell {
            if !is_prime(l) || l == p {
                return Err(Error::Frobenius(format!("ell = {l} must be a prime different from p")));
            }
        }
        if lambda == Lambda::Zlbar && ell.is_none() {
            return Err(Error::Frobenius("Zlbar coefficients need ell".into()));
        }
        Ok(FrobeniusDescriptor { theta, q, p, ell, lambda, diagram_rotation })
    }

    /// Split Frobenius `v -> q v` over `Q̄ℓ`; `q` must be a prime power.
    pub fn split(rank: usize, q: u64) -> Result<Self> {
        let p = smallest_prime_factor(q)
            .ok_or_else(|| Error::Frobenius(format!("q = {q} is not a prime power")))?;
        Self::new(BasedAutomorphism::identity(rank), q, p, None, Lambda::Qlbar, None)
    }

    /// Quasi-split Frobenius with a based twist `theta`.
    pub fn twisted(rd: &RootDatum, theta: IntMatrix, q: u64) -> Result<Self> {
        let p = smallest_prime_factor(q)
            .ok_or_else(|| Error::Frobenius(format!("q = {q} is not a prime power")))?;
        let theta = BasedAutomorphism::new(rd, theta)?;
        Self::new(theta, q, p, None, Lambda::Qlbar, None)
    }

    /// The same Frobenius with another coefficient ring.
    pub fn with_lambda(&self, lambda: Lambda, ell: Option<u64>) -> Result<Self> {
        Self::new(self.theta.clone(), self.q, self.p, ell, lambda, self.diagram_rotation.clone())
    }

    pub fn with_rotation(&self, rotation: Option<Vec<i64>>) -> Result<Self> {
        Self::new(self.theta.clone(), self.q, self.p, self.ell, self.lambda, rotation)
    }

    pub fn theta(&self) -> &BasedAutomorphism {
        &self.theta
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ell(&self) -> Option<u64> {
        self.ell
    }

    pub fn lambda(&self) -> Lambda {
        self.lambda
    }

    pub fn diagram_rotation(&self) -> Option<&[i64]> {
        self.diagram_rotation.as_deref()
    }

    /// Whether a class of the given order has invertible order in the coefficient ring.
    pub fn admits_order(&self, order: u64, lambda: Lambda) -> bool {
        !order.is_multiple_of(self.p)
            && match lambda {
                Lambda::Qlbar => true,
                Lambda::Zlbar => self.ell.is_some_and(|l| !order.is_multiple_of(l)),
            }
    }

    /// Rejects order bounds divisible by `p`.
    pub fn check_level(&self, n: u64) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroOrderBound);
        }
        if n.is_multiple_of(self.p) {
            return Err(Error::OrderBoundDivisibleByP { n, p: self.p });
        }
        Ok(())
    }
}

fn smallest_prime_factor(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    (r == 1).then_some(p)
}

/// The Weyl group context a geometric class is canonical for.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassContext {
    /// The full Weyl group.
    Weyl,
    /// The facet group generated by the listed affine nodes.
    Facet(Vec<usize>),
    /// The Levi Weyl group of the listed simple root indices.
    Levi(Vec<usize>),
}

/// A class: the canonical representative of an orbit under its context group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeometricClass {
    pub rep: ClassVector,
    pub context: ClassContext,
}

pub fn class_order(v: &ClassVector) -> u64 {
    v.order()
}

/// `theta(q v)` reduced modulo 1.
pub fn frobenius_image(v: &ClassVector, f: &FrobeniusDescriptor) -> ClassVector {
    v.scale(f.q as i64).apply(f.theta.matrix())
}

/// The prime-to-ℓ part of `v`.
pub fn ell_regular_part(v: &ClassVector, ell: u64) -> ClassVector {
    let mut m = v.order();
    let mut ell_power: u64 = 1;
    while m.is_multiple_of(ell) {
        m /= ell;
        ell_power *= ell;
    }
    if m == 1 {
        return ClassVector::zero(v.rank());
    }
    let inverse = mod_inverse(ell_power % m, m).expect("ell power is a unit modulo the prime-to-ell part");
    // Both factors are below the order, so the product stays well inside i128.
    let k = (ell_power as i128 * inverse as i128) % v.order() as i128;
    v.scale(k as i64)
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as u64)
}

/// Largest number of points of `(1/n) X / X` an enumeration will visit.
pub const LEVEL_POINT_BOUND: u128 = 20_000_000;

/// Rejects levels whose point count `n^rank` exceeds [`LEVEL_POINT_BOUND`].
pub fn check_level_size(rank: usize, n: u64) -> Result<()> {
    match (n as u128).checked_pow(rank as u32) {
        Some(total) if total <= LEVEL_POINT_BOUND => Ok(()),
        _ => Err(Error::BoundExceeded { bound: LEVEL_POINT_BOUND as usize }),
    }
}

/// All vectors of `(1/n) X / X`, in lexicographic order of numerators.
pub fn level_points(rank: usize, n: u64) -> impl Iterator<Item = ClassVector> {
    let total = (n as u128).pow(rank as u32);
    (0..total).map(move |mut idx| {
        let mut nums = vec![0i64; rank];
        for slot in nums.iter_mut().rev() {
            *slot = (idx % n as u128) as i64;
            idx /= n as u128;
        }
        ClassVector::from_numerators(&nums, n)
    })
}

/// Frobenius-stable Weyl orbits of `(1/n) X / X` whose order is invertible
/// in the coefficient ring, sorted by representative.
pub fn enumerate_f_stable_orbits(group: &Group, n: u64, lambda: Lambda) -> Result<Vec<GeometricClass>> {
    let f = group.frobenius();
    f.check_level(n)?;
    check_level_size(group.datum().rank(), n)?;
    if lambda == Lambda::Zlbar && f.ell().is_none() {
        return Err(Error::Frobenius("Zlbar coefficients need ell".into()));
    }
    let w = group.weyl();
    let all = w.whole();
    let mut seen: HashSet<ClassVector> = HashSet::new();
    let mut out = Vec::new();
    for v in level_points(group.datum().rank(), n) {
        if seen.contains(&v) {
            continue;
        }
        let orbit = w.orbit(&all, &v);
        let rep = orbit.iter().next().unwrap().clone();
        seen.extend(orbit);
        if !f.admits_order(rep.order(), lambda) {
            continue;
        }
        if w.canonical_rep(&all, &frobenius_image(&rep, f)) == rep {
            out.push(GeometricClass { rep, context: ClassContext::Weyl });
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(entries: &[&str]) -> ClassVector {
        ClassVector::parse(entries).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(cv(&["0"]).order(), 1);
        assert_eq!(cv(&["1/3", "2/3"]).order(), 3);
        assert_eq!(cv(&["1/6", "1/4"]).order(), 12);
        assert_eq!(cv(&["5/4"]), cv(&["1/4"]));
        assert_eq!(cv(&["-1/4"]), cv(&["3/4"]));
    }

    #[test]
    fn tameness() {
        assert!(cv(&["1/3"]).tame(3).is_err());
        assert!(cv(&["1/4"]).tame(3).is_ok());
    }

    #[test]
    fn lexicographic_order_is_rational() {
        assert!(cv(&["1/3", "0"]) < cv(&["1/2", "0"]));
        assert!(cv(&["0", "1/2"]) < cv(&["1/2", "0"]));
        assert!(cv(&["1/4", "3/4"]) < cv(&["1/4", "7/8"]));
    }

    #[test]
    fn frobenius_examples() {
        let f = FrobeniusDescriptor::split(1, 5).unwrap();
        assert_eq!(frobenius_image(&cv(&["1/3"]), &f), cv(&["2/3"]));
        assert_eq!(frobenius_image(&cv(&["0"]), &f), cv(&["0"]));
    }

    #[test]
    fn ell_regular_examples() {
        assert_eq!(ell_regular_part(&cv(&["1/6"]), 3), cv(&["1/2"]));
        assert_eq!(ell_regular_part(&cv(&["1/5"]), 3), cv(&["1/5"]));
        assert_eq!(ell_regular_part(&cv(&["0"]), 2), cv(&["0"]));
        assert_eq!(ell_regular_part(&cv(&["1/8"]), 2), cv(&["0"]));
    }

    #[test]
    fn descriptor_validation() {
        let id = BasedAutomorphism::identity(1);
        assert!(FrobeniusDescriptor::new(id.clone(), 9, 3, None, Lambda::Qlbar, None).is_ok());
        assert!(FrobeniusDescriptor::new(id.clone(), 6, 2, None, Lambda::Qlbar, None).is_err());
        assert!(FrobeniusDescriptor::new(id.clone(), 9, 3, Some(3), Lambda::Qlbar, None).is_err());
        assert!(FrobeniusDescriptor::new(id.clone(), 9, 3, None, Lambda::Zlbar, None).is_err());
        assert!(FrobeniusDescriptor::new(id, 9, 3, Some(2), Lambda::Zlbar, None).is_ok());
    }

    #[test]
    fn level_points_cover_the_group() {
        let pts: Vec<_> = level_points(2, 3).collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[1], cv(&["0", "1/3"]));
    }
}
