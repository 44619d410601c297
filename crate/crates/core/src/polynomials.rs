//! Exact polynomials in `t`, `x`, `y`, truncated power series in `q` over
//! them, and the tree-counting polynomials built by enumeration.
//!
//! `P_n(x, y)` sums `x^impr * y^prop` over labeled plane trees with `n`
//! edges, `O_n(x, y, t)` sums `x^impr * y^(prop - deg 1) * t^(deg 1)` over
//! those rooted at 1, and `S_n(t)` sums `t^(root degree)` over increasing
//! plane trees. The verifiers compare them with the closed forms
//! `(2n-1)!! (x+y)^n` and `sum_r S_{n,r} t^r (x+y)^(n-r)`, and check the
//! exponential generating functions by multiplying through by their
//! denominators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed};
use rayon::prelude::*;

use crate::enumerate::{
    double_factorial_odd, factorial, increasing_trees, labelings, plane_shapes, root_degree_counts,
};
use crate::error::{Error, Result};
use crate::involution::{big_phi, TagMode};
use crate::tree::{EdgeTag, PlaneTree};

/// `t^t x^x y^y`. Orders by `(t, x, y)` lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub t: u32,
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { t: 0, x: 0, y: 0 };

    pub fn new(t: u32, x: u32, y: u32) -> Monomial {
        Monomial { t, x, y }
    }

    pub fn degree(self) -> u32 {
        self.t + self.x + self.y
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.t + rhs.t, self.x + rhs.x, self.y + rhs.y)
    }
}

/// Sparse polynomial with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

pub type IntPoly = Polynomial<BigInt>;
pub type RatPoly = Polynomial<BigRational>;

impl<C: Num + Clone> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn t() -> Self {
        Self::term(Monomial::new(1, 0, 0), C::one())
    }

    pub fn x() -> Self {
        Self::term(Monomial::new(0, 1, 0), C::one())
    }

    pub fn y() -> Self {
        Self::term(Monomial::new(0, 0, 1), C::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> C {
        self.terms.get(&m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical order: descending in `(t, x, y)`.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &C)> {
        self.terms.iter().rev().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &C, y: &C, t: &C) -> C {
        let power = |b: &C, e: u32| num_traits::pow(b.clone(), e as usize);
        self.terms.iter().fold(C::zero(), |acc, (m, c)| {
            acc + c.clone() * power(t, m.t) * power(x, m.x) * power(y, m.y)
        })
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(Monomial::new(m.t, m.y, m.x), c.clone());
        }
        out
    }

    /// True if every monomial has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn map_coefficients<D: Num + Clone>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }
}

impl IntPoly {
    pub fn to_rational(&self) -> RatPoly {
        self.map_coefficients(|c| BigRational::from_integer(c.clone()))
    }
}

impl<C: Num + Clone> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<C: Num + Clone + Neg<Output = C>> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<C: Num + Clone + Neg<Output = C>> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.map_coefficients(|c| -c.clone())
    }
}

impl<C: Num + Clone> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(*ma * *mb, a.clone() * b.clone());
            }
        }
        out
    }
}

macro_rules! forward_owned_ops {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<C: Num + Clone + Neg<Output = C>> $tr for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $f(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$f(&rhs)
            }
        }
    )*};
}

forward_owned_ops!(Add::add, Sub::sub, Mul::mul);

/// Renders with integer coefficients, variables in the order `t, x, y`,
/// e.g. `6t^3 + 6t^2x + 3tx^2 - y`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let magnitude = c.abs();
            if m == Monomial::ONE || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            for (var, e) in [('t', m.t), ('x', m.x), ('y', m.y)] {
                match e {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Writes a rational polynomial as an integer polynomial over the least
/// common denominator of its coefficients.
pub fn common_denominator(p: &RatPoly) -> (IntPoly, BigInt) {
    let den = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let num = p.map_coefficients(|c| (c * BigRational::from_integer(den.clone())).to_integer());
    (num, den)
}

/// Truncated power series `sum_{k <= order} c_k q^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<RatPoly>,
}

impl Series {
    pub fn zero(order: usize) -> Series {
        Series {
            coeffs: vec![RatPoly::zero(); order + 1],
        }
    }

    pub fn constant(c: RatPoly, order: usize) -> Series {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Series {
        Series::constant(RatPoly::one(), order)
    }

    /// Builds a series from coefficients; `coeffs.len()` must be at least 1.
    pub fn from_coefficients(coeffs: Vec<RatPoly>) -> Series {
        assert!(
            !coeffs.is_empty(),
            "series needs at least the constant term"
        );
        Series { coeffs }
    }

    /// Exponential generating function `sum_n a_n q^n / n!`.
    pub fn egf(terms: &[IntPoly]) -> Series {
        let coeffs = terms
            .iter()
            .enumerate()
            .map(|(n, p)| {
                let scale = BigRational::new(BigInt::one(), BigInt::from(factorial(n)));
                p.to_rational().scale(&scale)
            })
            .collect();
        Series::from_coefficients(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> &RatPoly {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[RatPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatPoly::is_zero)
    }

    fn zip_with(&self, other: &Series, f: impl Fn(&RatPoly, &RatPoly) -> RatPoly) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|k| f(&self.coeffs[k], &other.coeffs[k]))
                .collect(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, p: &RatPoly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }
}

/// Cauchy product truncated at the smaller of the two orders.
pub fn series_mul(a: &Series, b: &Series) -> Series {
    let order = a.order().min(b.order());
    let coeffs = (0..=order)
        .map(|k| {
            (0..=k).fold(RatPoly::zero(), |acc, i| {
                if a.coeffs[i].is_zero() || b.coeffs[k - i].is_zero() {
                    acc
                } else {
                    &acc + &(&a.coeffs[i] * &b.coeffs[k - i])
                }
            })
        })
        .collect();
    Series { coeffs }
}

/// `(1 - 2uq)^(1/2)`: the coefficient of `q^m` is `-(2m-3)!! u^m / m!` for
/// `m >= 1`.
pub fn series_sqrt_binomial(u: &RatPoly, order: usize) -> Series {
    let mut coeffs = vec![RatPoly::one()];
    let mut power = RatPoly::one();
    for m in 1..=order {
        power = &power * u;
        let c = BigRational::new(
            -BigInt::from(double_factorial_odd(m - 1)),
            BigInt::from(factorial(m)),
        );
        coeffs.push(power.scale(&c));
    }
    Series { coeffs }
}

/// `(1 - 2uq)^(-1/2)`: the coefficient of `q^m` is `(2m-1)!! u^m / m!`.
pub fn series_inv_sqrt_binomial(u: &RatPoly, order: usize) -> Series {
    let mut coeffs = vec![RatPoly::one()];
    let mut power = RatPoly::one();
    for m in 1..=order {
        power = &power * u;
        let c = BigRational::new(
            BigInt::from(double_factorial_odd(m)),
            BigInt::from(factorial(m)),
        );
        coeffs.push(power.scale(&c));
    }
    Series { coeffs }
}

impl fmt::Display for Series {
    /// One line per power of `q`: `q^k: <numerator> / <denominator>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            let (num, den) = common_denominator(c);
            writeln!(f, "q^{k}: {num} / {den}")?;
        }
        Ok(())
    }
}

/// Largest `n` enumerated over labeled plane trees without `force`.
pub const LABELED_BOUND: usize = 6;
/// Largest `n` enumerated over increasing plane trees without `force`.
pub const INCREASING_BOUND: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumOptions {
    /// Allow `n` beyond the default bounds.
    pub force: bool,
    /// Worker threads; 1 keeps everything on the calling thread.
    pub jobs: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            force: false,
            jobs: 1,
        }
    }
}

fn check_bound(n: usize, bound: usize, opts: &EnumOptions) -> Result<()> {
    if n > bound && !opts.force {
        Err(Error::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

type Histogram = HashMap<Monomial, u64>;

fn merge(mut a: Histogram, b: Histogram) -> Histogram {
    for (m, c) in b {
        *a.entry(m).or_default() += c;
    }
    a
}

/// Tallies `weight(tree)` over the labeled trees with `n` edges (root 1
/// only when `root_one`), split across shapes when `jobs > 1`.
fn tally_labeled<F>(n: usize, root_one: bool, jobs: usize, weight: F) -> Result<IntPoly>
where
    F: Fn(&PlaneTree) -> Result<Monomial> + Sync,
{
    let per_shape = |shape| -> Result<Histogram> {
        let mut h = Histogram::new();
        for tree in labelings(shape, root_one) {
            *h.entry(weight(&tree)?).or_default() += 1;
        }
        Ok(h)
    };
    let hist = if jobs <= 1 {
        plane_shapes(n)
            .map(per_shape)
            .try_fold(Histogram::new(), |acc, h| Ok(merge(acc, h?)))?
    } else {
        let shapes: Vec<_> = plane_shapes(n).collect();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            shapes
                .into_par_iter()
                .map(per_shape)
                .try_reduce(Histogram::new, |a, b| Ok(merge(a, b)))
        })?
    };
    Ok(from_histogram(hist))
}

fn from_histogram(hist: Histogram) -> IntPoly {
    let mut p = IntPoly::zero();
    for (m, c) in hist {
        p.add_term(m, BigInt::from(c));
    }
    p
}

/// `P_n(x, y)` by enumerating all labeled plane trees with `n` edges.
pub fn compute_p(n: usize, opts: &EnumOptions) -> Result<IntPoly> {
    check_bound(n, LABELED_BOUND, opts)?;
    tally_labeled(n, false, opts.jobs, |tree| {
        let s = tree.stats();
        Ok(Monomial::new(0, s.impr as u32, s.prop as u32))
    })
}

/// `O_n(x, y, t)` by enumerating the labeled plane trees with root 1.
pub fn compute_o(n: usize, opts: &EnumOptions) -> Result<IntPoly> {
    check_bound(n, LABELED_BOUND, opts)?;
    tally_labeled(n, true, opts.jobs, |tree| {
        let s = tree.stats();
        Ok(Monomial::new(
            s.deg_one as u32,
            s.impr as u32,
            (s.prop - s.deg_one) as u32,
        ))
    })
}

/// `S_n(t)` by enumerating increasing plane trees.
pub fn compute_s(n: usize, opts: &EnumOptions) -> Result<IntPoly> {
    check_bound(n, INCREASING_BOUND, opts)?;
    let mut hist = Histogram::new();
    for tree in increasing_trees(n) {
        *hist
            .entry(Monomial::new(tree.degree(tree.root()) as u32, 0, 0))
            .or_default() += 1;
    }
    Ok(from_histogram(hist))
}

fn tag_weight(tree: &PlaneTree) -> Monomial {
    Monomial::new(
        tree.count_tag(EdgeTag::TRoot) as u32,
        tree.count_tag(EdgeTag::X) as u32,
        tree.count_tag(EdgeTag::Y) as u32,
    )
}

/// `P_n` summed over the tagged images of the forward bijection instead of
/// the improper-edge statistic.
pub fn compute_p_via_bijection(n: usize, opts: &EnumOptions) -> Result<IntPoly> {
    check_bound(n, LABELED_BOUND, opts)?;
    tally_labeled(n, false, opts.jobs, |tree| {
        Ok(tag_weight(&big_phi(tree, TagMode::Plain)?))
    })
}

/// `O_n` summed over the rooted-mode tagged images of the forward bijection.
pub fn compute_o_via_bijection(n: usize, opts: &EnumOptions) -> Result<IntPoly> {
    check_bound(n, LABELED_BOUND, opts)?;
    tally_labeled(n, true, opts.jobs, |tree| {
        Ok(tag_weight(&big_phi(tree, TagMode::Rooted)?))
    })
}

fn x_plus_y() -> IntPoly {
    &IntPoly::x() + &IntPoly::y()
}

/// `(2n-1)!! (x+y)^n`.
pub fn p_closed_form(n: usize) -> IntPoly {
    x_plus_y()
        .pow(n as u32)
        .scale(&BigInt::from(double_factorial_odd(n)))
}

/// `sum_r S_{n,r} t^r (x+y)^(n-r)` for `s = S_n(t)`, `n` edges.
pub fn o_closed_form(n: usize, s: &IntPoly) -> IntPoly {
    let xy = x_plus_y();
    let mut out = IntPoly::zero();
    for (m, c) in s.terms() {
        let r = m.t;
        let part = &IntPoly::term(Monomial::new(r, 0, 0), c.clone()) * &xy.pow(n as u32 - r);
        out = &out + &part;
    }
    out
}

/// `S_n(t)` from the root-degree recurrence rather than enumeration.
pub fn s_closed_form(n: usize) -> IntPoly {
    let mut out = IntPoly::zero();
    for (r, c) in root_degree_counts(n).into_iter().enumerate() {
        out.add_term(Monomial::new(r as u32, 0, 0), BigInt::from(c));
    }
    out
}

/// Coefficients of `S_n(t)` as a map from root degree to count.
pub fn s_coefficients(s: &IntPoly) -> BTreeMap<usize, BigUint> {
    s.terms()
        .map(|(m, c)| {
            (
                m.t as usize,
                c.to_biguint().expect("counts are nonnegative"),
            )
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct Theorem1Report {
    pub n: usize,
    pub p: IntPoly,
    pub p_expected: IntPoly,
    pub o: IntPoly,
    pub o_expected: IntPoly,
    pub s: IntPoly,
}

impl Theorem1Report {
    pub fn p_holds(&self) -> bool {
        self.p == self.p_expected
    }

    pub fn o_holds(&self) -> bool {
        self.o == self.o_expected
    }

    pub fn holds(&self) -> bool {
        self.p_holds() && self.o_holds()
    }
}

/// Enumerates `P_n`, `O_n` and `S_n` and compares the first two with their
/// closed forms (the `O_n` form uses the enumerated `S_n`).
pub fn verify_theorem1(n: usize, opts: &EnumOptions) -> Result<Theorem1Report> {
    let p = compute_p(n, opts)?;
    let o = compute_o(n, opts)?;
    let s = compute_s(n, opts)?;
    Ok(Theorem1Report {
        n,
        p_expected: p_closed_form(n),
        o_expected: o_closed_form(n, &s),
        p,
        o,
        s,
    })
}

/// `P_n`, `O_n`, `S_n` for `n = 0..=order`.
#[derive(Debug, Clone)]
pub struct CoefficientTables {
    pub p: Vec<IntPoly>,
    pub o: Vec<IntPoly>,
    pub s: Vec<IntPoly>,
}

impl CoefficientTables {
    pub fn closed_form(order: usize) -> CoefficientTables {
        let s: Vec<_> = (0..=order).map(s_closed_form).collect();
        CoefficientTables {
            p: (0..=order).map(p_closed_form).collect(),
            o: s.iter()
                .enumerate()
                .map(|(n, s)| o_closed_form(n, s))
                .collect(),
            s,
        }
    }

    /// Enumerated values up to `bound` (and the default family bounds),
    /// closed forms above it.
    pub fn enumerated(order: usize, bound: usize, opts: &EnumOptions) -> Result<CoefficientTables> {
        let mut tables = CoefficientTables::closed_form(order);
        for n in 0..=order.min(bound) {
            if n <= LABELED_BOUND || opts.force {
                tables.p[n] = compute_p(n, opts)?;
                tables.o[n] = compute_o(n, opts)?;
            }
            if n <= INCREASING_BOUND || opts.force {
                tables.s[n] = compute_s(n, opts)?;
            }
        }
        Ok(tables)
    }

    pub fn order(&self) -> usize {
        self.p.len() - 1
    }
}

#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// Product minus the expected right-hand side; zero when it holds.
    pub residual: Series,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

#[derive(Debug, Clone)]
pub struct Theorem2Report {
    pub order: usize,
    pub checks: Vec<IdentityCheck>,
}

impl Theorem2Report {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }
}

/// Checks the generating functions through `q^order` using closed-form
/// coefficients.
pub fn verify_theorem2(order: usize) -> Theorem2Report {
    verify_theorem2_with(&CoefficientTables::closed_form(order))
}

/// Checks, without dividing series:
///
/// * `EGF(P) * (1 - 2(x+y)q)^(1/2) = 1`
/// * `EGF(O) * (x + y - t + t (1 - 2(x+y)q)^(1/2)) = x + y`
/// * `EGF(S) * (1 - t + t (1 - 2q)^(1/2)) = 1`
pub fn verify_theorem2_with(tables: &CoefficientTables) -> Theorem2Report {
    let order = tables.order();
    let xy = x_plus_y().to_rational();
    let t = RatPoly::t();
    let sqrt_xy = series_sqrt_binomial(&xy, order);
    let sqrt_one = series_sqrt_binomial(&RatPoly::one(), order);

    let check = |name, lhs: Series, rhs: RatPoly| IdentityCheck {
        name,
        residual: lhs.sub(&Series::constant(rhs, order)),
    };

    let p_lhs = series_mul(&Series::egf(&tables.p), &sqrt_xy);

    let o_den = Series::constant(&xy - &t, order).add(&sqrt_xy.scale(&t));
    let o_lhs = series_mul(&Series::egf(&tables.o), &o_den);

    let s_den = Series::constant(&RatPoly::one() - &t, order).add(&sqrt_one.scale(&t));
    let s_lhs = series_mul(&Series::egf(&tables.s), &s_den);

    Theorem2Report {
        order,
        checks: vec![
            check("P", p_lhs, RatPoly::one()),
            check("O", o_lhs, xy.clone()),
            check("S", s_lhs, RatPoly::one()),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn poly(terms: &[(i64, u32, u32, u32)]) -> IntPoly {
        let mut p = IntPoly::zero();
        for &(c, t, x, y) in terms {
            p.add_term(Monomial::new(t, x, y), int(c));
        }
        p
    }

    #[test]
    fn arithmetic() {
        let sq = x_plus_y().pow(2);
        assert_eq!(sq, poly(&[(1, 0, 2, 0), (2, 0, 1, 1), (1, 0, 0, 2)]));
        assert_eq!(sq.to_string(), "x^2 + 2xy + y^2");
        let p3 = x_plus_y().pow(3).scale(&int(15));
        assert_eq!(p3.to_string(), "15x^3 + 45x^2y + 45xy^2 + 15y^3");
        assert!((&sq - &sq).is_zero());
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::one().to_string(), "1");
        assert_eq!((-&IntPoly::x()).to_string(), "-x");
        assert_eq!((&IntPoly::one() - &IntPoly::t()).to_string(), "-t + 1");
        assert_eq!(x_plus_y().pow(0), IntPoly::one());
    }

    #[test]
    fn eval_p2() {
        let p2 = poly(&[(3, 0, 2, 0), (6, 0, 1, 1), (3, 0, 0, 2)]);
        // oracle: |P_2| = 3! C_2 = 12
        assert_eq!(p2.eval(&int(1), &int(1), &int(1)), int(12));
        assert_eq!(p2.eval(&int(2), &int(0), &int(9)), int(12));
    }

    #[test]
    fn canonical_order_matches_listing() {
        let o3 = poly(&[
            (3, 1, 0, 2),
            (6, 1, 1, 1),
            (6, 3, 0, 0),
            (3, 1, 2, 0),
            (6, 2, 0, 1),
            (6, 2, 1, 0),
        ]);
        assert_eq!(
            o3.to_string(),
            "6t^3 + 6t^2x + 6t^2y + 3tx^2 + 6txy + 3ty^2"
        );
    }

    #[test]
    fn small_enumerations() {
        let opts = EnumOptions::default();
        assert_eq!(compute_p(0, &opts).unwrap(), IntPoly::one());
        assert_eq!(compute_p(1, &opts).unwrap().to_string(), "x + y");
        assert_eq!(
            compute_p(2, &opts).unwrap().to_string(),
            "3x^2 + 6xy + 3y^2"
        );
        // oracle, by hand from the definition: 1(2) has deg 1 = 1 and no other
        // edge; 1(2(3)) -> ty, 1(3(2)) -> tx, 1(2,3) and 1(3,2) -> t^2
        assert_eq!(compute_o(1, &opts).unwrap().to_string(), "t");
        assert_eq!(compute_o(2, &opts).unwrap().to_string(), "2t^2 + tx + ty");
        assert_eq!(
            compute_o(3, &opts).unwrap().to_string(),
            "6t^3 + 6t^2x + 6t^2y + 3tx^2 + 6txy + 3ty^2"
        );
        assert_eq!(compute_s(1, &opts).unwrap().to_string(), "t");
        assert_eq!(compute_s(2, &opts).unwrap().to_string(), "2t^2 + t");
        assert_eq!(compute_s(3, &opts).unwrap().to_string(), "6t^3 + 6t^2 + 3t");
    }

    #[test]
    fn bounds() {
        let opts = EnumOptions::default();
        assert_eq!(
            compute_p(7, &opts),
            Err(Error::BoundExceeded { n: 7, bound: 6 })
        );
        assert_eq!(
            compute_s(8, &opts),
            Err(Error::BoundExceeded { n: 8, bound: 7 })
        );
    }

    #[test]
    fn theorem1_small() {
        let opts = EnumOptions::default();
        for n in 0..=3 {
            let r = verify_theorem1(n, &opts).unwrap();
            assert!(r.holds(), "n = {n}");
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let u = x_plus_y().to_rational();
        for order in 0..6 {
            let s = series_sqrt_binomial(&u, order);
            let sq = series_mul(&s, &s);
            let mut expected = Series::one(order);
            if order >= 1 {
                expected.coeffs[1] = u.scale(&BigRational::from_integer(int(-2)));
            }
            assert_eq!(sq, expected, "order {order}");
        }
        let zero = series_sqrt_binomial(&RatPoly::zero(), 4);
        assert_eq!(zero, Series::one(4));
    }

    #[test]
    fn reciprocal_sqrt() {
        let u = x_plus_y().to_rational();
        let inv = series_inv_sqrt_binomial(&u, 2);
        let p2 = inv.coefficient(2).scale(&BigRational::from_integer(int(2)));
        assert_eq!(p2, p_closed_form(2).to_rational());
        assert_eq!(
            series_mul(&inv, &series_sqrt_binomial(&u, 7)),
            Series::one(2)
        );
    }

    #[test]
    fn series_rendering() {
        let s = series_sqrt_binomial(&x_plus_y().to_rational(), 2);
        assert_eq!(
            s.to_string(),
            "q^0: 1 / 1\nq^1: -x - y / 1\nq^2: -x^2 - 2xy - y^2 / 2\n"
        );
    }

    #[test]
    fn theorem2_constant_terms() {
        let r = verify_theorem2(0);
        assert!(r.holds());
        assert_eq!(r.checks.len(), 3);
    }

    #[test]
    fn theorem2_detects_a_wrong_coefficient() {
        let mut tables = CoefficientTables::closed_form(4);
        tables.p[3] = &tables.p[3] + &IntPoly::x();
        let r = verify_theorem2_with(&tables);
        assert!(!r.checks[0].holds());
        assert!(r.checks[1].holds() && r.checks[2].holds());
        assert!(r.checks[0].residual.coefficient(2).is_zero());
        assert!(!r.checks[0].residual.coefficient(3).is_zero());
    }
}
