use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::{Rat, UniPoly};

/// Exponent pair `x^x · y^y`, ordered graded-lexicographically with `x > y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn total(&self) -> u32 {
        self.x + self.y
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree with the zero polynomial's `−∞` kept distinct from every
/// finite degree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    NegInf,
    Finite(u32),
}

/// Sparse bivariate polynomial over ℚ.
///
/// No stored coefficient is zero, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn monomial(c: Rat, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(i, j), c);
        }
        BiPoly { terms }
    }

    /// Builds from `((i, j), c)` pairs; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rat)>>(it: I) -> Self {
        let mut terms: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for ((i, j), c) in it {
            *terms.entry(Monomial::new(i, j)).or_insert_with(Rat::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total() == 0)
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.coeff(0, 0))
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rat)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms
            .get(&Monomial::new(i, j))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            Some(m) => Degree::Finite(m.total()),
            None => Degree::NegInf,
        }
    }

    /// Total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::total)
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.x).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.y).max()
    }

    pub fn leading_term(&self) -> Option<(Monomial, &Rat)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Leading coefficient under graded-lex order; zero for zero.
    pub fn lc(&self) -> Rat {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Scales so that the graded-lex leading coefficient is 1.
    pub fn normalized(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        self.scale(&self.lc().recip())
    }

    pub fn scale(&self, c: &Rat) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, i: u32, j: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x + i, m.y + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut result = BiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative_x(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.x > 0)
                .map(|(m, c)| ((m.x - 1, m.y), c * Rat::from_integer(m.x.into()))),
        )
    }

    pub fn derivative_y(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.y > 0)
                .map(|(m, c)| ((m.x, m.y - 1), c * Rat::from_integer(m.y.into()))),
        )
    }

    /// `∂a/∂x · ∂b/∂y − ∂a/∂y · ∂b/∂x`
    pub fn jacobian(a: &BiPoly, b: &BiPoly) -> BiPoly {
        &(&a.derivative_x() * &b.derivative_y()) - &(&a.derivative_y() * &b.derivative_x())
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (j, coef) in self.y_coeffs().iter().enumerate().rev() {
            acc = acc * y + coef.eval(x);
            let _ = j;
        }
        acc
    }

    /// Specializes `x = a`, leaving a polynomial in `y`.
    pub fn eval_x(&self, a: &Rat) -> UniPoly {
        UniPoly::new(self.y_coeffs().iter().map(|c| c.eval(a)).collect())
    }

    /// Specializes `y = b`, leaving a polynomial in `x`.
    pub fn eval_y(&self, b: &Rat) -> UniPoly {
        UniPoly::new(self.x_coeffs().iter().map(|c| c.eval(b)).collect())
    }

    /// Coefficients of `y^0, y^1, …` as polynomials in `x`.
    pub fn y_coeffs(&self) -> Vec<UniPoly> {
        let Some(dy) = self.deg_y() else {
            return Vec::new();
        };
        let dx = self.deg_x().unwrap_or(0) as usize;
        let mut rows = vec![vec![Rat::zero(); dx + 1]; dy as usize + 1];
        for (m, c) in &self.terms {
            rows[m.y as usize][m.x as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::new).collect()
    }

    /// Coefficients of `x^0, x^1, …` as polynomials in `y`.
    pub fn x_coeffs(&self) -> Vec<UniPoly> {
        self.swap_xy().y_coeffs()
    }

    /// Inverse of [`BiPoly::y_coeffs`].
    pub fn from_y_coeffs(rows: &[UniPoly]) -> BiPoly {
        BiPoly::from_terms(rows.iter().enumerate().flat_map(|(j, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .map(move |(i, c)| ((i as u32, j as u32), c.clone()))
        }))
    }

    pub fn from_x_coeffs(rows: &[UniPoly]) -> BiPoly {
        Self::from_y_coeffs(rows).swap_xy()
    }

    pub fn swap_xy(&self) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.y, m.x), c.clone()))
                .collect(),
        }
    }

    /// Returns `Some(p)` when the polynomial only involves `x`.
    pub fn as_uni_x(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|m| m.y > 0) {
            return None;
        }
        Some(self.y_coeffs().into_iter().next().unwrap_or_default())
    }

    /// Returns `Some(p)` when the polynomial only involves `y`.
    pub fn as_uni_y(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|m| m.x > 0) {
            return None;
        }
        Some(self.x_coeffs().into_iter().next().unwrap_or_default())
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Highest power of `x` and of `y` dividing every term.
    pub fn monomial_content(&self) -> (u32, u32) {
        let mx = self.terms.keys().map(|m| m.x).min().unwrap_or(0);
        let my = self.terms.keys().map(|m| m.y).min().unwrap_or(0);
        (mx, my)
    }

    /// Divides by `x^i y^j`; the caller guarantees divisibility.
    pub fn div_monomial(&self, i: u32, j: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.x - i, m.y - j), c.clone()))
                .collect(),
        }
    }

    /// `F(sx, sy)`, Horner in `x` over cached powers of `sy`.
    pub fn substitute(&self, sx: &BiPoly, sy: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let rows = self.x_coeffs();
        let dy = self.deg_y().unwrap_or(0) as usize;
        let mut ypows = Vec::with_capacity(dy + 1);
        ypows.push(BiPoly::one());
        for k in 1..=dy {
            let next = &ypows[k - 1] * sy;
            ypows.push(next);
        }
        let inner = |row: &UniPoly| -> BiPoly {
            let mut acc = BiPoly::zero();
            for (j, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    acc = &acc + &ypows[j].scale(c);
                }
            }
            acc
        };
        let mut acc = BiPoly::zero();
        for row in rows.iter().rev() {
            acc = &(&acc * sx) + &inner(row);
        }
        acc
    }

    /// `F(x + a, y)`
    pub fn shift_x(&self, a: &Rat) -> BiPoly {
        let sx = &BiPoly::x() + &BiPoly::constant(a.clone());
        self.substitute(&sx, &BiPoly::y())
    }

    /// `F(x, y + b)`
    pub fn shift_y(&self, b: &Rat) -> BiPoly {
        let sy = &BiPoly::y() + &BiPoly::constant(b.clone());
        self.substitute(&BiPoly::x(), &sy)
    }

    /// Returns `(N, k)` with `N = x^k · F(x, y/x)` and `k` minimal.
    pub fn laurent_substitute_y_over_x(&self) -> (BiPoly, u32) {
        if self.is_zero() {
            return (BiPoly::zero(), 0);
        }
        // x^i (y/x)^j = x^{i-j} y^j; shift by k = max(j - i, 0).
        let k = self
            .terms
            .keys()
            .map(|m| m.y as i64 - m.x as i64)
            .max()
            .unwrap_or(0)
            .max(0);
        let n = BiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            (
                ((m.x as i64 - m.y as i64 + k) as u32, m.y),
                c.clone(),
            )
        }));
        (n, k as u32)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(*m, c.clone());
                }
            }
        }
        BiPoly { terms }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v -= c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(*m, -c.clone());
                }
            }
        }
        BiPoly { terms }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        if self.terms.len() == 1 || rhs.terms.len() == 1 {
            let (single, other) = if self.terms.len() == 1 {
                (self, rhs)
            } else {
                (rhs, self)
            };
            let (m, c) = single.leading_term().expect("nonzero");
            return other.mul_monomial(m.x, m.y).scale(c);
        }
        let dx = (self.deg_x().unwrap_or(0) + rhs.deg_x().unwrap_or(0)) as usize + 1;
        let dy = (self.deg_y().unwrap_or(0) + rhs.deg_y().unwrap_or(0)) as usize + 1;
        let mut acc: Vec<Option<Rat>> = vec![None; dx * dy];
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let idx = (ma.x + mb.x) as usize * dy + (ma.y + mb.y) as usize;
                let prod = ca * cb;
                match &mut acc[idx] {
                    Some(v) => *v += prod,
                    slot => *slot = Some(prod),
                }
            }
        }
        let mut terms = BTreeMap::new();
        for (idx, v) in acc.into_iter().enumerate() {
            if let Some(c) = v {
                if !c.is_zero() {
                    terms.insert(Monomial::new((idx / dy) as u32, (idx % dy) as u32), c);
                }
            }
        }
        BiPoly { terms }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<Rat> for BiPoly {
    fn from(c: Rat) -> Self {
        BiPoly::constant(c)
    }
}
