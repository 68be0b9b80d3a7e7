//! Classical groups in eigenvalue form: characteristic polynomials as
//! multisets of Frobenius orbits in `Q/Z`, self-duality, vertex products,
//! Jordan multiplicities and the compatibility identity at a vertex.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::inertial_params::enumerate_inertial_params;
use crate::ss_classes::{ClassVector, FrobeniusDescriptor, Lambda};

/// Family of the dual group, named after the group acting on the natural
/// representation: `OddOrthogonal` is `SO_{2n+1}`, the dual of `Sp_{2n}`;
/// `Symplectic` is `Sp_{2n}`, the dual of `SO_{2n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassicalFamily {
    OddOrthogonal,
    Symplectic,
    EvenOrthogonal,
    Unitary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassicalType {
    pub family: ClassicalFamily,
    pub n: usize,
}

impl ClassicalType {
    pub fn new(family: ClassicalFamily, n: usize) -> Self {
        ClassicalType { family, n }
    }

    /// Dimension of the natural representation of the dual group.
    pub fn dimension(&self) -> usize {
        match self.family {
            ClassicalFamily::OddOrthogonal => 2 * self.n + 1,
            ClassicalFamily::Symplectic | ClassicalFamily::EvenOrthogonal => 2 * self.n,
            ClassicalFamily::Unitary => self.n,
        }
    }

    pub fn is_unitary(&self) -> bool {
        self.family == ClassicalFamily::Unitary
    }

    /// The vertex product divides by `X - 1` (the group itself is symplectic).
    pub fn drops_unit_eigenvalue(&self) -> bool {
        self.family == ClassicalFamily::OddOrthogonal
    }

    /// Root datum and Frobenius of the group whose dual has this type, or
    /// `None` for rank zero.
    pub fn group(&self, q: u64) -> Result<Option<Group>> {
        if self.n == 0 {
            return Ok(None);
        }
        if self.family == ClassicalFamily::EvenOrthogonal && self.n == 1 {
            return Err(Error::Classical("even orthogonal factor of rank 1 is not a vertex factor".into()));
        }
        let group = match self.family {
            ClassicalFamily::OddOrthogonal => Group::split(catalog::sp(self.n), q)?,
            ClassicalFamily::Symplectic => Group::split(catalog::so_odd(self.n), q)?,
            ClassicalFamily::EvenOrthogonal => Group::split(catalog::so_even(self.n), q)?,
            ClassicalFamily::Unitary => {
                let rd = catalog::gl(self.n);
                let f = FrobeniusDescriptor::twisted(&rd, catalog::gl_flip(self.n), q)?;
                Group::new(rd, f)?
            }
        };
        Ok(Some(group))
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match self.family {
            ClassicalFamily::OddOrthogonal => write!(f, "SO{}", 2 * n + 1),
            ClassicalFamily::Symplectic => write!(f, "Sp{}", 2 * n),
            ClassicalFamily::EvenOrthogonal => write!(f, "SO{}", 2 * n),
            ClassicalFamily::Unitary => write!(f, "GL{}", n),
        }
    }
}

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

/// The Frobenius acting on eigenvalues: `q`, or `q^2` in the unitary case.
fn frobenius_factor(q: u64, unitary: bool) -> i64 {
    if unitary {
        (q * q) as i64
    } else {
        q as i64
    }
}

/// An orbit of `x -> f x` on `Q/Z`, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EigenOrbit(Vec<Rational64>);

impl EigenOrbit {
    pub fn of(x: Rational64, q: u64, unitary: bool) -> Self {
        let f = frobenius_factor(q, unitary);
        let start = frac(x);
        let mut members = vec![start];
        let mut y = frac(start * f);
        while y != start {
            members.push(y);
            y = frac(y * f);
        }
        members.sort();
        EigenOrbit(members)
    }

    pub fn unit() -> Self {
        EigenOrbit(vec![Rational64::zero()])
    }

    pub fn members(&self) -> &[Rational64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0 == [Rational64::zero()]
    }

    pub fn map(&self, k: i64) -> Vec<Rational64> {
        self.0.iter().map(|&x| frac(x * k)).collect()
    }
}

impl fmt::Display for EigenOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A monic polynomial with roots of unity of order prime to `p` as roots,
/// recorded as a multiset of Frobenius orbits of eigenvalues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPolynomial {
    q: u64,
    unitary: bool,
    factors: BTreeMap<EigenOrbit, u32>,
}

impl OrbitPolynomial {
    pub fn one(q: u64, unitary: bool) -> Self {
        OrbitPolynomial { q, unitary, factors: BTreeMap::new() }
    }

    /// Groups a Frobenius-stable multiset of eigenvalues into orbits.
    pub fn from_eigenvalues(eigenvalues: &[Rational64], q: u64, unitary: bool) -> Result<Self> {
        let mut remaining: BTreeMap<Rational64, u32> = BTreeMap::new();
        for &x in eigenvalues {
            *remaining.entry(frac(x)).or_default() += 1;
        }
        let mut poly = Self::one(q, unitary);
        while let Some((&x, _)) = remaining.iter().next() {
            let orbit = EigenOrbit::of(x, q, unitary);
            let mult = orbit
                .members()
                .iter()
                .map(|y| remaining.get(y).copied().unwrap_or(0))
                .min()
                .unwrap_or(0);
            if mult == 0 {
                return Err(Error::NotRational(format_multiset(eigenvalues)));
            }
            for y in orbit.members() {
                let slot = remaining.get_mut(y).unwrap();
                *slot -= mult;
                if *slot == 0 {
                    remaining.remove(y);
                }
            }
            poly.add_orbit(orbit, mult);
        }
        Ok(poly)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    pub fn factors(&self) -> &BTreeMap<EigenOrbit, u32> {
        &self.factors
    }

    pub fn multiplicity(&self, orbit: &EigenOrbit) -> u32 {
        self.factors.get(orbit).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|(o, &m)| o.len() * m as usize).sum()
    }

    pub fn add_orbit(&mut self, orbit: EigenOrbit, mult: u32) {
        if mult > 0 {
            *self.factors.entry(orbit).or_default() += mult;
        }
    }

    /// Removes `mult` copies of `orbit`; false if there are not enough.
    pub fn remove_orbit(&mut self, orbit: &EigenOrbit, mult: u32) -> bool {
        match self.factors.get_mut(orbit) {
            Some(m) if *m >= mult => {
                *m -= mult;
                if *m == 0 {
                    self.factors.remove(orbit);
                }
                true
            }
            _ => mult == 0,
        }
    }

    pub fn product(&self, other: &OrbitPolynomial) -> OrbitPolynomial {
        let mut out = self.clone();
        for (o, &m) in &other.factors {
            out.add_orbit(o.clone(), m);
        }
        out
    }

    /// The roots with multiplicity, sorted.
    pub fn eigenvalues(&self) -> Vec<Rational64> {
        let mut out: Vec<Rational64> = self
            .factors
            .iter()
            .flat_map(|(o, &m)| std::iter::repeat_n(o.members(), m as usize).flatten().copied())
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for OrbitPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let half = Rational64::new(1, 2);
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(o, &m)| {
                let base = if o.is_unit() {
                    "(X-1)".to_string()
                } else if o.members() == [half] {
                    "(X+1)".to_string()
                } else {
                    format!("Q{o}")
                };
                if m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn format_multiset(xs: &[Rational64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect();
    format!("[{}]", parts.join(", "))
}

/// Eigenvalues of a torus element `v` of the dual group in its natural
/// representation.
pub fn natural_eigenvalues(v: &ClassVector, t: ClassicalType) -> Result<Vec<Rational64>> {
    if v.rank() != t.n {
        return Err(Error::Dimension { expected: t.n, found: v.rank() });
    }
    let entries = v.entries();
    let mut out = Vec::with_capacity(t.dimension());
    match t.family {
        ClassicalFamily::Unitary => out.extend(entries.iter().copied()),
        _ => {
            for &x in &entries {
                out.push(x);
                out.push(frac(-x));
            }
            if t.family == ClassicalFamily::OddOrthogonal {
                out.push(Rational64::zero());
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Characteristic polynomial of the class of `v` in the dual group of type `t`.
pub fn char_polynomial(v: &ClassVector, t: ClassicalType, q: u64) -> Result<OrbitPolynomial> {
    OrbitPolynomial::from_eigenvalues(&natural_eigenvalues(v, t)?, q, t.is_unitary())
}

/// Whether an even orthogonal class may split into two classes under `SO`
/// (no eigenvalue equal to `1` or `-1`); the orbit model does not separate them.
pub fn even_orthogonal_fusion_flag(v: &ClassVector) -> bool {
    let half = Rational64::new(1, 2);
    v.entries().iter().all(|&x| !x.is_zero() && x != half)
}

/// Stability of the eigenvalues under `x -> -x`, or `x -> -q x` when unitary.
pub fn is_self_dual(p: &OrbitPolynomial) -> bool {
    let k = if p.unitary { -(p.q as i64) } else { -1 };
    p.factors.iter().all(|(o, &m)| {
        let image = EigenOrbit::of(o.map(k)[0], p.q, p.unitary);
        p.multiplicity(&image) == m
    })
}

/// `P_1 P_2`, divided by `X - 1` when the ambient group is symplectic.
pub fn vertex_polynomial(p1: &OrbitPolynomial, p2: &OrbitPolynomial, t: ClassicalType) -> Result<OrbitPolynomial> {
    if p1.q != p2.q || p1.unitary != p2.unitary {
        return Err(Error::Classical("factors use different Frobenius data".into()));
    }
    let mut out = p1.product(p2);
    if t.drops_unit_eigenvalue() {
        let unit = EigenOrbit::unit();
        if p1.multiplicity(&unit) == 0 || p2.multiplicity(&unit) == 0 {
            return Err(Error::MissingUnitEigenvalue);
        }
        out.remove_orbit(&unit, 1);
    }
    Ok(out)
}

/// The `m >= 1` with `2s - (m + 1)` even and nonnegative, given `2s`.
pub fn jordan_multiplicities(twice_s: u32) -> Vec<u32> {
    (1..twice_s).rev().step_by(2).collect()
}

/// `sum m * orbit` over the Jordan data.
pub fn jordan_inertial_restriction(jord: &[(EigenOrbit, u32)], q: u64, unitary: bool) -> OrbitPolynomial {
    let mut out = OrbitPolynomial::one(q, unitary);
    for (orbit, m) in jord {
        out.add_orbit(orbit.clone(), *m);
    }
    out
}

fn floor_square_quarter(h: u32) -> i64 {
    (h as i64 * h as i64) / 4
}

/// Pairs `(2s, 2s')` with `floor(s^2) + floor(s'^2) = target`.
pub fn admissible_splittings(target: i64) -> Vec<(u32, u32)> {
    if target < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut h = 0u32;
    while floor_square_quarter(h) <= target {
        let rest = target - floor_square_quarter(h);
        let mut k = 0u32;
        while floor_square_quarter(k) <= rest {
            if floor_square_quarter(k) == rest {
                out.push((h, k));
            }
            k += 1;
        }
        h += 1;
    }
    out
}

/// A vertex of the building of the group with dual of type `ambient`,
/// with reductive quotient the product of groups with duals `first` and `second`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexType {
    pub ambient: ClassicalType,
    pub first: ClassicalType,
    pub second: ClassicalType,
}

/// Vertex types of the split (or unitary) group with dual of type `t`.
pub fn vertex_types(t: ClassicalType) -> Vec<VertexType> {
    let n = t.n;
    let make = |f1: ClassicalFamily, n1: usize, f2: ClassicalFamily, n2: usize| VertexType {
        ambient: t,
        first: ClassicalType::new(f1, n1),
        second: ClassicalType::new(f2, n2),
    };
    use ClassicalFamily::*;
    match t.family {
        OddOrthogonal => (0..=n).map(|n1| make(OddOrthogonal, n1, OddOrthogonal, n - n1)).collect(),
        Symplectic => (0..=n)
            .filter(|&n2| n2 != 1)
            .map(|n2| make(Symplectic, n - n2, EvenOrthogonal, n2))
            .collect(),
        EvenOrthogonal => (0..=n)
            .filter(|&n1| n1 != 1 && n - n1 != 1 && n1 <= n - n1)
            .map(|n1| make(EvenOrthogonal, n - n1, EvenOrthogonal, n1))
            .collect(),
        Unitary => (0..=n).filter(|&n1| n1 <= n - n1).map(|n1| make(Unitary, n - n1, Unitary, n1)).collect(),
    }
}

/// Frobenius-stable classes of order dividing `n` for a factor of type `t`.
pub fn factor_classes(t: ClassicalType, q: u64, n: u64) -> Result<Vec<ClassVector>> {
    match t.group(q)? {
        None => Ok(vec![ClassVector::zero(0)]),
        Some(g) => Ok(enumerate_inertial_params(&g, n, Lambda::Qlbar)?
            .into_iter()
            .map(|p| p.rep().clone())
            .collect()),
    }
}

/// Multiplicities `a_Q` of each orbit in the two factor polynomials.
pub type ATable = BTreeMap<EigenOrbit, (u32, u32)>;

pub fn a_table(p1: &OrbitPolynomial, p2: &OrbitPolynomial) -> ATable {
    let mut out = ATable::new();
    for o in p1.factors.keys().chain(p2.factors.keys()) {
        out.insert(o.clone(), (p1.multiplicity(o), p2.multiplicity(o)));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCheck {
    pub orbit: String,
    pub a_first: u32,
    pub a_second: u32,
    pub target: i64,
    /// Admissible `(2s, 2s')` pairs.
    pub splittings: Vec<(u32, u32)>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatibilityReport {
    pub vertex: VertexType,
    pub first: ClassVector,
    pub second: ClassVector,
    pub p_first: String,
    pub p_second: String,
    pub p_vertex: String,
    pub p_jordan: String,
    /// The vertex polynomial agrees with the polynomial of the ambient class.
    pub ambient_agrees: bool,
    pub orbits: Vec<OrbitCheck>,
    pub passed: bool,
}

/// Checks that every admissible Jordan splitting of the `a`-table restricts
/// on inertia to the vertex polynomial. Without an explicit table the
/// multiplicities are read off the factor polynomials.
pub fn verify_compatibility(
    vertex: &VertexType,
    s1: &ClassVector,
    s2: &ClassVector,
    q: u64,
    table: Option<&ATable>,
) -> Result<CompatibilityReport> {
    let unitary = vertex.ambient.is_unitary();
    let p1 = char_polynomial(s1, vertex.first, q)?;
    let p2 = char_polynomial(s2, vertex.second, q)?;
    let p_vertex = vertex_polynomial(&p1, &p2, vertex.ambient)?;

    let mut joined: Vec<Rational64> = s1.entries();
    joined.extend(s2.entries());
    let ambient_class = ClassVector::from_ratios(&joined);
    let ambient_agrees = char_polynomial(&ambient_class, vertex.ambient, q)? == p_vertex;

    let default_table = a_table(&p1, &p2);
    let table = table.unwrap_or(&default_table);
    let unit = EigenOrbit::unit();
    let mut orbits = Vec::with_capacity(table.len());
    let mut p_jordan = OrbitPolynomial::one(q, unitary);
    for (orbit, &(a1, a2)) in table {
        let mut target = i64::from(a1) + i64::from(a2);
        if vertex.ambient.drops_unit_eigenvalue() && *orbit == unit {
            target -= 1;
        }
        let splittings = admissible_splittings(target);
        if splittings.is_empty() {
            return Err(Error::NoAdmissibleSplitting { orbit: orbit.to_string(), target });
        }
        let expected = p_vertex.multiplicity(orbit);
        let mut passed = true;
        for (idx, &(h, k)) in splittings.iter().enumerate() {
            let jord: Vec<(EigenOrbit, u32)> = jordan_multiplicities(h)
                .into_iter()
                .chain(jordan_multiplicities(k))
                .map(|m| (orbit.clone(), m))
                .collect();
            let restricted = jordan_inertial_restriction(&jord, q, unitary);
            passed &= restricted.multiplicity(orbit) == expected && restricted.degree() == expected as usize * orbit.len();
            if idx == 0 {
                p_jordan = p_jordan.product(&restricted);
            }
        }
        orbits.push(OrbitCheck { orbit: orbit.to_string(), a_first: a1, a_second: a2, target, splittings, passed });
    }
    let passed = ambient_agrees && p_jordan == p_vertex && orbits.iter().all(|o| o.passed);
    Ok(CompatibilityReport {
        vertex: *vertex,
        first: s1.clone(),
        second: s2.clone(),
        p_first: p1.to_string(),
        p_second: p2.to_string(),
        p_vertex: p_vertex.to_string(),
        p_jordan: p_jordan.to_string(),
        ambient_agrees,
        orbits,
        passed,
    })
}

/// Runs [`verify_compatibility`] over every vertex type and every pair of
/// factor classes of order dividing `n`.
pub fn compatibility_grid(t: ClassicalType, q: u64, n: u64) -> Result<Vec<CompatibilityReport>> {
    let mut out = Vec::new();
    for vertex in vertex_types(t) {
        let firsts = factor_classes(vertex.first, q, n)?;
        let seconds = factor_classes(vertex.second, q, n)?;
        for s1 in &firsts {
            for s2 in &seconds {
                out.push(verify_compatibility(&vertex, s1, s2, q, None)?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cv(entries: &[&str]) -> ClassVector {
        ClassVector::parse(entries).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    const SO5: ClassicalType = ClassicalType { family: ClassicalFamily::OddOrthogonal, n: 2 };

    #[test]
    fn char_polynomial_examples() {
        let p = char_polynomial(&cv(&["0", "0"]), SO5, 3).unwrap();
        assert_eq!(p.multiplicity(&EigenOrbit::unit()), 5);
        assert_eq!(p.to_string(), "(X-1)^5");
        let p = char_polynomial(&cv(&["1/2", "0"]), SO5, 3).unwrap();
        assert_eq!(p.to_string(), "(X-1)^3 (X+1)^2");
        let p = char_polynomial(&cv(&["1/8", "3/8"]), SO5, 3).unwrap();
        assert_eq!(p.multiplicity(&EigenOrbit(vec![r(1, 8), r(3, 8)])), 1);
        assert_eq!(p.multiplicity(&EigenOrbit(vec![r(5, 8), r(7, 8)])), 1);
        assert_eq!(p.multiplicity(&EigenOrbit::unit()), 1);
        assert_eq!(p.degree(), 5);
        // (1/8, 0) is not Frobenius-stable for q = 3: its eigenvalues miss 3/8.
        assert!(matches!(char_polynomial(&cv(&["1/8", "0"]), SO5, 3), Err(Error::NotRational(_))));
    }

    #[test]
    fn self_duality_examples() {
        let ones = OrbitPolynomial::from_eigenvalues(&[r(0, 1); 3], 5, false).unwrap();
        assert!(is_self_dual(&ones));
        let third = OrbitPolynomial::from_eigenvalues(&[r(1, 3), r(2, 3)], 2, false).unwrap();
        assert_eq!(third.factors().len(), 1);
        assert!(is_self_dual(&third));
        let fifth = OrbitPolynomial::from_eigenvalues(&[r(1, 5)], 16, false).unwrap();
        assert!(!is_self_dual(&fifth));
        assert!(OrbitPolynomial::from_eigenvalues(&[r(1, 3)], 2, false).is_err());
    }

    #[test]
    fn vertex_products() {
        let sp2 = ClassicalType::new(ClassicalFamily::OddOrthogonal, 1);
        let p = char_polynomial(&cv(&["0"]), sp2, 3).unwrap();
        let v = vertex_polynomial(&p, &p, SO5).unwrap();
        assert_eq!(v.to_string(), "(X-1)^5");
        let empty = OrbitPolynomial::one(3, false);
        let so4 = ClassicalType::new(ClassicalFamily::EvenOrthogonal, 2);
        let q = char_polynomial(&cv(&["1/4", "0"]), so4, 3).unwrap();
        assert_eq!(vertex_polynomial(&q, &empty, so4).unwrap(), q);
        assert_eq!(vertex_polynomial(&p, &empty, SO5), Err(Error::MissingUnitEigenvalue));
    }

    #[test]
    fn jordan_examples() {
        assert!(jordan_multiplicities(0).is_empty());
        assert!(jordan_multiplicities(1).is_empty());
        assert_eq!(jordan_multiplicities(4), vec![3, 1]);
        assert_eq!(jordan_multiplicities(3), vec![2]);
        let third = EigenOrbit::of(r(1, 3), 2, false);
        let p = jordan_inertial_restriction(&[(third.clone(), 2)], 2, false);
        assert_eq!(p.multiplicity(&third), 2);
        assert_eq!(p.degree(), 4);
        assert_eq!(jordan_inertial_restriction(&[], 2, false).degree(), 0);
    }

    #[test]
    fn compatibility_examples() {
        let sp4 = vertex_types(SO5);
        assert_eq!(sp4.len(), 3);
        let report = verify_compatibility(&sp4[2], &ClassVector::zero(2), &ClassVector::zero(0), 3, None).unwrap();
        assert!(report.passed);
        assert_eq!(report.p_vertex, "(X-1)^5");

        let sp = ClassicalType::new(ClassicalFamily::Symplectic, 2);
        let so5 = vertex_types(sp);
        let report = verify_compatibility(&so5[0], &cv(&["1/2", "0"]), &ClassVector::zero(0), 3, None).unwrap();
        assert!(report.passed);
        assert_eq!(report.orbits.len(), 2);

        let p1 = char_polynomial(&cv(&["1/2", "0"]), so5[0].first, 3).unwrap();
        let mut table = a_table(&p1, &OrbitPolynomial::one(3, false));
        table.get_mut(&EigenOrbit::unit()).unwrap().0 += 1;
        let report = verify_compatibility(&so5[0], &cv(&["1/2", "0"]), &ClassVector::zero(0), 3, Some(&table)).unwrap();
        assert!(!report.passed);
    }

    #[test]
    fn unitary_orbits_use_the_square() {
        let u2 = ClassicalType::new(ClassicalFamily::Unitary, 2);
        let p = char_polynomial(&cv(&["1/8", "5/8"]), u2, 3).unwrap();
        assert_eq!(p.factors().len(), 2);
        assert!(is_self_dual(&p));
    }
}
