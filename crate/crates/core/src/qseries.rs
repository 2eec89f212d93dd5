//! Truncated power series in `q` with arbitrary-precision integer coefficients,
//! z-graded Laurent blocks for constant-term extraction, lattice theta sums, and
//! the generating-function identities checked against them.
//!
//! Every identity check is two-sided: a product built from Pochhammer factors
//! is compared with an independently computed lattice sum or with counts taken
//! from exhaustive enumeration.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::enumeration::{self, PartitionClass};
use crate::error::{check_modulus, Error, Result};

/// `c_0 + c_1 q + … + c_N q^N + O(q^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c·q^e`, which is zero when `e` exceeds the order.
    pub fn monomial(c: i64, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = BigInt::from(c);
        }
        s
    }

    /// Coefficients past `order` are dropped; missing ones are zero.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        QSeries::from_coeffs(self.coeffs.iter().cloned(), order.min(self.order()))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for n in k..=self.order() {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    /// Substitutes `q ↦ q^m`.
    pub fn dilate(&self, m: usize) -> Self {
        assert!(m >= 1, "dilation factor must be positive");
        let mut s = Self::zero(self.order());
        for (n, c) in self.coeffs.iter().enumerate() {
            if n * m > self.order() {
                break;
            }
            s.coeffs[n * m] = c.clone();
        }
        s
    }

    /// In-place multiplication by `1 + sign·q^e`.
    fn mul_binomial_assign(&mut self, sign: Sign, e: usize) {
        let n_max = self.order();
        if e == 0 {
            match sign {
                Sign::Plus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
                Sign::Minus => self.coeffs.iter_mut().for_each(|c| c.set_zero()),
            }
            return;
        }
        for n in (e..=n_max).rev() {
            let (low, high) = self.coeffs.split_at_mut(n);
            match sign {
                Sign::Plus => high[0] += &low[n - e],
                Sign::Minus => high[0] -= &low[n - e],
            }
        }
    }

    /// In-place division by `1 + sign·q^e`, `e >= 1`.
    fn div_binomial_assign(&mut self, sign: Sign, e: usize) {
        debug_assert!(e >= 1);
        for n in e..=self.order() {
            let (low, high) = self.coeffs.split_at_mut(n);
            match sign {
                Sign::Plus => high[0] -= &low[n - e],
                Sign::Minus => high[0] += &low[n - e],
            }
        }
    }

    /// Multiplicative inverse; exists over the integers iff the constant term is ±1.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(Error::NotInvertible(c0.to_string()));
        }
        let mut inv = Self::zero(self.order());
        inv.coeffs[0] = c0.clone();
        for n in 1..=self.order() {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &inv.coeffs[n - k];
            }
            // c0 = ±1 is its own inverse
            inv.coeffs[n] = -(acc * c0);
        }
        Ok(inv)
    }

    pub fn checked_div(&self, divisor: &QSeries) -> Result<Self> {
        Ok(self * &divisor.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(QSeries::one(self.order()), |acc, _| &acc * self)
    }

    /// First exponent where the two series differ, up to the smaller order.
    pub fn first_mismatch(&self, other: &QSeries) -> Option<Mismatch> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
            .map(|n| Mismatch {
                exponent: n,
                lhs: self.coeffs[n].to_string(),
                rhs: other.coeffs[n].to_string(),
            })
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            match (n, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{n}")?,
                (_, false) => write!(f, "{mag}*q^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &QSeries {
    type Output = QSeries;

    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        QSeries { coeffs: (0..=order).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect() }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;

    fn sub(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        QSeries { coeffs: (0..=order).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect() }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;

    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order().min(rhs.order());
        let mut out = QSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;

            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// `∏_{k>=0} (1 + sign·q^{offset + k·step})` truncated at `order`, or its
/// reciprocal when `inverse` is set. With `sign = Minus` this is the Pochhammer
/// symbol `(q^offset; q^step)_∞`; with `Plus`, `(-q^offset; q^step)_∞`.
pub fn pochhammer_factor(sign: Sign, offset: usize, step: usize, inverse: bool, order: usize) -> Result<QSeries> {
    if step == 0 {
        return Err(Error::Malformed { what: "Pochhammer factor", reason: "step must be positive".into() });
    }
    if inverse && offset == 0 {
        let c0 = match sign {
            Sign::Plus => "2",
            Sign::Minus => "0",
        };
        return Err(Error::NotInvertible(c0.into()));
    }
    let mut s = QSeries::one(order);
    for e in (offset..=order).step_by(step) {
        if inverse {
            s.div_binomial_assign(sign, e);
        } else {
            s.mul_binomial_assign(sign, e);
        }
    }
    Ok(s)
}

/// `(q^offset; q^step)_∞`.
pub fn qpoch(offset: usize, step: usize, order: usize) -> QSeries {
    pochhammer_factor(Sign::Minus, offset, step, false, order).expect("positive step")
}

/// `(-q^offset; q^step)_∞`.
pub fn qpoch_neg(offset: usize, step: usize, order: usize) -> QSeries {
    pochhammer_factor(Sign::Plus, offset, step, false, order).expect("positive step")
}

/// `1 / (q^offset; q^step)_∞`, `offset >= 1`.
pub fn qpoch_inv(offset: usize, step: usize, order: usize) -> QSeries {
    pochhammer_factor(Sign::Minus, offset, step, true, order).expect("offset must be positive")
}

/// `Σ p(n) q^n = 1 / (q;q)_∞`.
pub fn partition_gf(order: usize) -> QSeries {
    qpoch_inv(1, 1, order)
}

/// Series whose `n`-th coefficient counts the partitions of `n` in `class`.
pub fn enumeration_series(class: PartitionClass, order: usize) -> QSeries {
    QSeries::from_coeffs((0..=order).map(|n| enumeration::count(n, class)), order)
}

/// Rows `z^m` for `m ∈ [-window, window]` of a product of factors `1 + z^{±1} q^e`.
///
/// Each factor sign class uses every q-exponent at most once, so a monomial
/// that passes through `z^m` carries q-weight at least `|m|(|m|-1)/2`. Choosing
/// the window with `window·(window+1)/2 > order` therefore keeps every row in
/// the window exact to the stated order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentBlock {
    window: usize,
    order: usize,
    rows: BTreeMap<i64, QSeries>,
}

impl LaurentBlock {
    pub fn one(window: usize, order: usize) -> Self {
        let mut rows = BTreeMap::new();
        rows.insert(0, QSeries::one(order));
        LaurentBlock { window, order, rows }
    }

    /// Smallest window that keeps all rows exact to `order`.
    pub fn window_for(order: usize) -> usize {
        (0..).find(|&m| m * (m + 1) / 2 > order).expect("unbounded search")
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Multiplies by `1 + z^{z_exp} q^{q_exp}`, discarding rows outside the window.
    pub fn mul_binomial(&mut self, z_exp: i64, q_exp: usize) {
        if q_exp > self.order {
            return;
        }
        let w = self.window as i64;
        let shifted: Vec<(i64, QSeries)> = self
            .rows
            .iter()
            .filter(|(&m, _)| (m + z_exp).abs() <= w)
            .map(|(&m, s)| (m + z_exp, s.shift(q_exp)))
            .collect();
        for (m, s) in shifted {
            let row = self.rows.entry(m).or_insert_with(|| QSeries::zero(self.order));
            *row = &*row + &s;
        }
    }

    pub fn row(&self, m: i64) -> QSeries {
        self.rows.get(&m).cloned().unwrap_or_else(|| QSeries::zero(self.order))
    }

    pub fn constant_term(&self) -> QSeries {
        self.row(0)
    }

    fn check_window(window: usize, order: usize) -> Result<()> {
        let needed = Self::window_for(order);
        if window < needed {
            return Err(Error::WindowTooSmall { given: window, order, needed });
        }
        Ok(())
    }

    /// `(-zq; q)_∞ (-1/z; q)_∞`.
    pub fn triple_product(window: usize, order: usize) -> Result<Self> {
        Self::check_window(window, order)?;
        let mut block = Self::one(window, order);
        for e in 0..=order {
            if e >= 1 {
                block.mul_binomial(1, e);
            }
            block.mul_binomial(-1, e);
        }
        Ok(block)
    }

    /// `∏_{j=1}^{t} (-z q^j; q^t)_∞ (-q^{t-j}/z; q^t)_∞`.
    pub fn grouped_product(t: usize, window: usize, order: usize) -> Result<Self> {
        check_modulus(t)?;
        Self::check_window(window, order)?;
        let mut block = Self::one(window, order);
        for j in 1..=t {
            for e in (j..=order).step_by(t) {
                block.mul_binomial(1, e);
            }
            for e in ((t - j)..=order).step_by(t) {
                block.mul_binomial(-1, e);
            }
        }
        Ok(block)
    }
}

/// `Σ_{m ∈ Z^d} q^{Σ_j (linear_j·m_j + quad·m_j(m_j-1)/2)}`, optionally restricted
/// to `Σ m_j = 0`, truncated at `order`. Requires `0 <= linear_j <= quad`, which
/// makes every per-coordinate term at least `quad·|m|(|m|-1)/2 >= 0`.
pub fn lattice_sum(linear: &[usize], quad: usize, zero_sum: bool, order: usize) -> QSeries {
    assert!(quad >= 1, "quadratic weight must be positive");
    assert!(linear.iter().all(|&l| l <= quad), "linear weights must not exceed the quadratic weight");
    let term = |l: usize, m: i64| -> i64 { l as i64 * m + quad as i64 * m * (m - 1) / 2 };
    let bound = ((2.0 * order as f64 / quad as f64).sqrt().ceil() as i64) + 2;
    for &l in linear {
        for m in [-bound, bound] {
            assert!(term(l, m) > order as i64, "boundary vector inside the truncation");
        }
    }

    let mut out = QSeries::zero(order);
    let mut stack: Vec<(usize, i64, i64)> = vec![(0, 0, 0)];
    // depth-first over (coordinate index, running exponent, running sum)
    while let Some((idx, exp, sum)) = stack.pop() {
        let remaining = linear.len() - idx;
        if zero_sum && remaining == 1 {
            let m = -sum;
            if m.abs() < bound {
                let e = exp + term(linear[idx], m);
                if e <= order as i64 {
                    out.coeffs[e as usize] += 1;
                }
            }
            continue;
        }
        if remaining == 0 {
            if !zero_sum || sum == 0 {
                out.coeffs[exp as usize] += 1;
            }
            continue;
        }
        for m in (1 - bound)..bound {
            let e = exp + term(linear[idx], m);
            if e <= order as i64 {
                stack.push((idx + 1, e, sum + m));
            }
        }
    }
    out
}

/// `Σ c_t(n) q^n` as the zero-sum lattice sum with exponent
/// `t·Σ m_j(m_j-1)/2 + Σ j·m_j` over `(m_1, …, m_t)`.
pub fn theta_sum_tcore(t: usize, order: usize) -> Result<QSeries> {
    check_modulus(t)?;
    let linear: Vec<usize> = (1..=t).collect();
    Ok(lattice_sum(&linear, t, true, order))
}

/// `[z^0]` of the grouped product, which should be `Σ p(n) q^n`.
pub fn constant_term_partition_gf(t: usize, order: usize) -> Result<QSeries> {
    let block = LaurentBlock::grouped_product(t, LaurentBlock::window_for(order), order)?;
    Ok(block.constant_term())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub label: String,
    pub pass: bool,
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub t: Option<usize>,
    pub order: usize,
    pub comparisons: Vec<Comparison>,
    pub pass: bool,
}

impl IdentityReport {
    fn new(identity: Identity, t: Option<usize>, order: usize) -> Self {
        IdentityReport { identity: identity.to_string(), t, order, comparisons: Vec::new(), pass: true }
    }

    fn compare(&mut self, label: impl Into<String>, lhs: &QSeries, rhs: &QSeries) {
        let mismatch = lhs.first_mismatch(rhs);
        let pass = mismatch.is_none();
        self.pass &= pass;
        self.comparisons.push(Comparison { label: label.into(), pass, mismatch });
    }

    pub fn first_mismatch(&self) -> Option<(&str, &Mismatch)> {
        self.comparisons
            .iter()
            .find_map(|c| c.mismatch.as_ref().map(|m| (c.label.as_str(), m)))
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.t.map(|t| format!(" t={t}")).unwrap_or_default();
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {}{t} order={}", self.identity, self.order)?;
        for c in &self.comparisons {
            write!(f, "\n  [{}] {}", if c.pass { "ok" } else { "MISMATCH" }, c.label)?;
            if let Some(m) = &c.mismatch {
                write!(f, ": first difference at q^{}: {} vs {}", m.exponent, m.lhs, m.rhs)?;
            }
        }
        Ok(())
    }
}

/// `[z^0] (-zq;q)_∞ (-1/z;q)_∞ = Σ p(n) q^n`, computed through the t-grouped
/// product and compared with `1/(q;q)_∞` and with enumeration.
pub fn verify_frobenius_gf(t: usize, order: usize) -> Result<IdentityReport> {
    let ct = constant_term_partition_gf(t, order)?;
    let mut report = IdentityReport::new(Identity::FrobeniusGf, Some(t), order);
    report.compare("[z^0] grouped product = 1/(q;q)_inf", &ct, &partition_gf(order));
    report.compare("[z^0] grouped product = enumeration p(n)", &ct, &enumeration_series(PartitionClass::All, order));
    Ok(report)
}

/// Row `z^m` of `(-zq;q)_∞(-1/z;q)_∞` equals `q^{m(m+1)/2} / (q;q)_∞` for every
/// `|m| <= window`.
pub fn jacobi_triple_product_check(order: usize, window: usize) -> Result<IdentityReport> {
    let block = LaurentBlock::triple_product(window, order)?;
    let p = partition_gf(order);
    let mut report = IdentityReport::new(Identity::Jtp, None, order);
    let w = window as i64;
    for m in -w..=w {
        let e = m * (m + 1) / 2;
        let rhs = p.shift(e as usize);
        report.compare(format!("row z^{m} = q^{e}/(q;q)_inf"), &block.row(m), &rhs);
    }
    Ok(report)
}

/// `Σ c_t(n) q^n`: lattice sum against the enumerated t-core counts.
pub fn verify_tcore_theta(t: usize, order: usize) -> Result<IdentityReport> {
    let theta = theta_sum_tcore(t, order)?;
    let mut report = IdentityReport::new(Identity::TcoreTheta, Some(t), order);
    report.compare("lattice sum = enumeration c_t(n)", &theta, &enumeration_series(PartitionClass::TCore(t), order));
    Ok(report)
}

/// `Σ p(n) q^n = (Σ c_t(n) q^n) / (q^t;q^t)_∞^t`.
pub fn verify_littlewood_gf(t: usize, order: usize) -> Result<IdentityReport> {
    let theta = theta_sum_tcore(t, order)?;
    let rhs = &theta * &qpoch_inv(t, t, order).pow(t as u32);
    let mut report = IdentityReport::new(Identity::Littlewood, Some(t), order);
    report.compare("1/(q;q)_inf = theta_t / (q^t;q^t)_inf^t", &partition_gf(order), &rhs);
    Ok(report)
}

/// Self-conjugate partitions. Even `t`:
/// `∏_{j=1}^{t/2} (-q^{2j-1};q^{2t})(-q^{2t-2j+1};q^{2t})
///   = (q^{2t};q^{2t})^{-t/2} Σ_{m ∈ Z^{t/2}} q^{Σ(2j-1)m_j + tΣ m_j(m_j-1)}`;
/// odd `t` has `(t-1)/2` pairs and an extra `(-q^t;q^{2t})_∞` on both sides.
pub fn gf_self_conjugate(t: usize, order: usize) -> Result<IdentityReport> {
    check_modulus(t)?;
    let pairs = t / 2;
    let step = 2 * t;
    let mut product = QSeries::one(order);
    for j in 1..=pairs {
        product = &product * &qpoch_neg(2 * j - 1, step, order);
        product = &product * &qpoch_neg(2 * t - 2 * j + 1, step, order);
    }
    let linear: Vec<usize> = (1..=pairs).map(|j| 2 * j - 1).collect();
    let mut sum_side = &lattice_sum(&linear, 2 * t, false, order) * &qpoch_inv(step, step, order).pow(pairs as u32);
    if !t.is_multiple_of(2) {
        let extra = qpoch_neg(t, step, order);
        product = &product * &extra;
        sum_side = &sum_side * &extra;
    }
    let mut report = IdentityReport::new(Identity::Sc, Some(t), order);
    report.compare("product = lattice sum", &product, &sum_side);
    report.compare("product = enumeration sc(n)", &product, &enumeration_series(PartitionClass::SelfConjugate, order));
    report.compare("product = (-q;q^2)_inf", &product, &qpoch_neg(1, 2, order));
    Ok(report)
}

/// Doubled distinct partitions. Odd `t`:
/// `(-q^{2t};q^{2t}) ∏_{j=1}^{(t-1)/2} (-q^{2j};q^{2t})(-q^{2t-2j};q^{2t})
///   = (-q^{2t};q^{2t}) (q^{2t};q^{2t})^{-(t-1)/2} Σ q^{Σ 2j m_j + tΣ m_j(m_j-1)}`.
/// Even `t` uses `t/2 - 1` pairs, `(-q^t;q^{2t})(-q^{2t};q^{2t})` on the product
/// side and `(-q^t;q^t)` on the sum side.
pub fn gf_doubled_distinct(t: usize, order: usize) -> Result<IdentityReport> {
    check_modulus(t)?;
    let step = 2 * t;
    let pairs = if t.is_multiple_of(2) { t / 2 - 1 } else { (t - 1) / 2 };
    let mut product = qpoch_neg(step, step, order);
    if t.is_multiple_of(2) {
        product = &product * &qpoch_neg(t, step, order);
    }
    for j in 1..=pairs {
        product = &product * &qpoch_neg(2 * j, step, order);
        product = &product * &qpoch_neg(2 * t - 2 * j, step, order);
    }
    let prefactor = if t.is_multiple_of(2) { qpoch_neg(t, t, order) } else { qpoch_neg(step, step, order) };
    let linear: Vec<usize> = (1..=pairs).map(|j| 2 * j).collect();
    let sum_side = &(&lattice_sum(&linear, 2 * t, false, order) * &qpoch_inv(step, step, order).pow(pairs as u32))
        * &prefactor;
    let mut report = IdentityReport::new(Identity::Dd, Some(t), order);
    report.compare("product = lattice sum", &product, &sum_side);
    report.compare("product = enumeration dd(n)", &product, &enumeration_series(PartitionClass::DoubledDistinct, order));
    report.compare("product = (-q^2;q^2)_inf", &product, &qpoch_neg(2, 2, order));
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    FrobeniusGf,
    Jtp,
    Littlewood,
    TcoreTheta,
    Sc,
    Dd,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Dd,
        Identity::FrobeniusGf,
        Identity::Jtp,
        Identity::Littlewood,
        Identity::Sc,
        Identity::TcoreTheta,
    ];

    pub fn takes_modulus(&self) -> bool {
        !matches!(self, Identity::Jtp)
    }

    /// Runs the check. `t` is ignored by `jtp`, which compares every row of the
    /// exact window for `order`.
    pub fn check(&self, t: usize, order: usize) -> Result<IdentityReport> {
        match self {
            Identity::FrobeniusGf => verify_frobenius_gf(t, order),
            Identity::Jtp => jacobi_triple_product_check(order, LaurentBlock::window_for(order)),
            Identity::Littlewood => verify_littlewood_gf(t, order),
            Identity::TcoreTheta => verify_tcore_theta(t, order),
            Identity::Sc => gf_self_conjugate(t, order),
            Identity::Dd => gf_doubled_distinct(t, order),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::FrobeniusGf => "frobenius-gf",
            Identity::Jtp => "jtp",
            Identity::Littlewood => "littlewood",
            Identity::TcoreTheta => "tcore-theta",
            Identity::Sc => "sc",
            Identity::Dd => "dd",
        })
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: "unknown identity".into(),
            })
    }
}
