//! Truncated Puiseux series with exact rational coefficients.
//!
//! A [`PuiseuxSeries`] stores finitely many terms `c * q^e` with `c` a
//! nonzero [`BigRational`] and `e` in `(1/denom) * Z`, together with a
//! truncation order `T`: the series is known exactly below `T` and says
//! nothing at or above it. Every operation propagates the order honestly,
//! so a truncated result never claims coefficients it cannot know.
//!
//! Invariants, maintained by every constructor and operation:
//! * `denom >= 1`, and `denom` is minimal (the gcd of all keys and `denom`
//!   is 1), so dense algorithms run on the coarsest exponent lattice;
//! * stored coefficients are nonzero;
//! * every stored key `k` satisfies `k / denom < order`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exponents and truncation orders: small exact rationals.
pub type Exp = Rational64;
/// Coefficients: arbitrary-precision exact rationals.
pub type Coeff = BigRational;

/// The exact rational `p/q` as an exponent.
pub fn exp(p: i64, q: i64) -> Exp {
    Exp::new(p, q)
}

/// The exact rational `p/q` as a coefficient.
pub fn coeff(p: i64, q: i64) -> Coeff {
    Coeff::new(p.into(), q.into())
}

/// Smallest integer strictly above every admissible key: keys must satisfy
/// `k / denom < order`, i.e. `k < ceil(order * denom)` as integers.
fn key_limit(order: Exp, denom: i64) -> i64 {
    (order * denom).ceil().to_integer()
}

/// A truncated series in `q` with exponents in `(1/denom) * Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxSeries {
    denom: i64,
    terms: BTreeMap<i64, Coeff>,
    order: Exp,
}

impl PuiseuxSeries {
    fn from_raw(denom: i64, terms: BTreeMap<i64, Coeff>, order: Exp) -> Self {
        debug_assert!(denom >= 1);
        let mut s = PuiseuxSeries {
            denom,
            terms,
            order,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let limit = key_limit(self.order, self.denom);
        self.terms.retain(|&k, c| k < limit && !c.is_zero());
        if self.terms.is_empty() {
            self.denom = 1;
            return;
        }
        let mut g = self.denom;
        for &k in self.terms.keys() {
            g = g.gcd(&k);
            if g == 1 {
                return;
            }
        }
        self.denom /= g;
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(k, c)| (k / g, c))
            .collect();
    }

    /// The zero series, known below `order`.
    pub fn zero(order: Exp) -> Self {
        PuiseuxSeries {
            denom: 1,
            terms: BTreeMap::new(),
            order,
        }
    }

    /// The constant series 1, known below `order`.
    pub fn one(order: Exp) -> Self {
        Self::monomial(Coeff::one(), Exp::zero(), order)
    }

    /// The single term `c * q^e`, known below `order`.
    pub fn monomial(c: Coeff, e: Exp, order: Exp) -> Self {
        Self::from_exp_terms([(e, c)], order)
    }

    /// Builds a series from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_exp_terms<I>(pairs: I, order: Exp) -> Self
    where
        I: IntoIterator<Item = (Exp, Coeff)>,
    {
        let pairs: Vec<(Exp, Coeff)> = pairs.into_iter().collect();
        let mut denom: i64 = 1;
        for (e, _) in &pairs {
            denom = denom.lcm(e.denom());
        }
        let mut terms: BTreeMap<i64, Coeff> = BTreeMap::new();
        for (e, c) in pairs {
            let k = e.numer() * (denom / e.denom());
            let slot = terms.entry(k).or_insert_with(Coeff::zero);
            *slot += c;
        }
        Self::from_raw(denom, terms, order)
    }

    /// Truncation order: coefficients are known exactly for exponents `< order`.
    pub fn order(&self) -> Exp {
        self.order
    }

    /// Denominator of the exponent lattice `(1/denom) * Z`.
    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// True if no term is stored (the series is 0 below its order).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponent of the lowest stored term.
    pub fn valuation(&self) -> Option<Exp> {
        self.terms
            .keys()
            .next()
            .map(|&k| Exp::new(k, self.denom))
    }

    /// Valuation if any term is stored, otherwise the order: a lower bound
    /// on the exponent of anything the true series can contain.
    fn valuation_or_order(&self) -> Exp {
        self.valuation().unwrap_or(self.order)
    }

    /// Stored terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exp, &Coeff)> + '_ {
        self.terms
            .iter()
            .map(|(&k, c)| (Exp::new(k, self.denom), c))
    }

    /// The coefficient of `q^e`, exact. Zero for unstored exponents below
    /// the order; an error at or beyond the order, where nothing is known.
    pub fn coefficient(&self, e: Exp) -> Result<Coeff> {
        if e >= self.order {
            return Err(Error::InsufficientOrder {
                requested: e,
                available: self.order,
            });
        }
        let scaled = e * self.denom;
        if !scaled.is_integer() {
            return Ok(Coeff::zero());
        }
        Ok(self
            .terms
            .get(&scaled.to_integer())
            .cloned()
            .unwrap_or_else(Coeff::zero))
    }

    /// Sum; the result is known below the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let denom = self.denom.lcm(&other.denom);
        let order = self.order.min(other.order);
        let mut terms: BTreeMap<i64, Coeff> = BTreeMap::new();
        for (src, scale) in [
            (self, denom / self.denom),
            (other, denom / other.denom),
        ] {
            for (&k, c) in &src.terms {
                let slot = terms.entry(k * scale).or_insert_with(Coeff::zero);
                *slot += c;
            }
        }
        Self::from_raw(denom, terms, order)
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        PuiseuxSeries {
            denom: self.denom,
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
            order: self.order,
        }
    }

    /// Multiplies every coefficient by the constant `c`.
    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        PuiseuxSeries {
            denom: self.denom,
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
            order: self.order,
        }
    }

    /// Cauchy product. The result is known below
    /// `min(a.order + val(b), b.order + val(a))`: a term of `a` above its
    /// order times the lowest term of `b` is the first unknown contribution.
    pub fn mul(&self, other: &Self) -> Self {
        let denom = self.denom.lcm(&other.denom);
        let order = (self.order + other.valuation_or_order())
            .min(other.order + self.valuation_or_order());
        let limit = key_limit(order, denom);
        let sa = denom / self.denom;
        let sb = denom / other.denom;
        let mut terms: BTreeMap<i64, Coeff> = BTreeMap::new();
        for (&ka, ca) in &self.terms {
            let base = ka * sa;
            for (&kb, cb) in &other.terms {
                let k = base + kb * sb;
                if k >= limit {
                    break;
                }
                let slot = terms.entry(k).or_insert_with(Coeff::zero);
                *slot += ca * cb;
            }
        }
        Self::from_raw(denom, terms, order)
    }

    /// Small integer power by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse by the convolution recurrence, `O(n^2)` in the
    /// number of exponent slots below the order. The leading term `c q^v`
    /// must exist; the result has valuation `-v`, leading coefficient `1/c`,
    /// and order `order - 2v`.
    pub fn invert(&self) -> Result<Self> {
        let (&k0, c0) = self
            .terms
            .first_key_value()
            .ok_or(Error::ZeroLeadingTerm)?;
        let c0 = c0.clone();
        let denom = self.denom;
        let len = (key_limit(self.order, denom) - k0) as usize;
        let mut a = vec![Coeff::zero(); len];
        for (&k, c) in &self.terms {
            a[(k - k0) as usize] = c.clone();
        }
        let mut b = vec![Coeff::zero(); len];
        b[0] = c0.recip();
        for j in 1..len {
            let mut s = Coeff::zero();
            for i in 1..=j {
                if !a[i].is_zero() && !b[j - i].is_zero() {
                    s += &a[i] * &b[j - i];
                }
            }
            if !s.is_zero() {
                b[j] = -(s / &c0);
            }
        }
        let v = Exp::new(k0, denom);
        let order = self.order - v - v;
        let terms = b
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as i64 - k0, c))
            .collect();
        Ok(Self::from_raw(denom, terms, order))
    }

    /// Substitutes `q -> q^r` for rational `r > 0`, scaling exponents and
    /// order by `r`.
    pub fn substitute(&self, r: Exp) -> Self {
        assert!(r > Exp::zero(), "substitution exponent must be positive");
        let denom = self.denom * r.denom();
        let terms = self
            .terms
            .iter()
            .map(|(&k, c)| (k * r.numer(), c.clone()))
            .collect();
        Self::from_raw(denom, terms, self.order * r)
    }

    /// Multiplies by `q^r`: exponents and order shift by `r`.
    pub fn shift(&self, r: Exp) -> Self {
        let denom = self.denom.lcm(r.denom());
        let offset = r.numer() * (denom / r.denom());
        let scale = denom / self.denom;
        let terms = self
            .terms
            .iter()
            .map(|(&k, c)| (k * scale + offset, c.clone()))
            .collect();
        Self::from_raw(denom, terms, self.order + r)
    }

    /// Lowers the order to `min(order, t)` and drops terms at or above it.
    pub fn truncate(&self, t: Exp) -> Self {
        let mut s = self.clone();
        s.order = s.order.min(t);
        s.normalize();
        s
    }

    /// Substitutes `q -> -q`, taking the real branch on fractional powers:
    /// `(-q)^(p/r) = (-1)^p q^(p/r)` for odd `r`. Errors on any exponent
    /// with even denominator, where no real branch exists.
    pub fn negate_argument(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&k, c) in &self.terms {
            let e = Exp::new(k, self.denom);
            if e.denom() % 2 == 0 {
                return Err(Error::Unsupported(format!(
                    "cannot negate the argument of a series with exponent {e}"
                )));
            }
            let c = if e.numer() % 2 == 0 { c.clone() } else { -c };
            terms.insert(k, c);
        }
        Ok(PuiseuxSeries {
            denom: self.denom,
            terms,
            order: self.order,
        })
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e.is_one() {
                    write!(f, "q")?;
                } else if e.is_integer() && !e.is_negative() {
                    write!(f, "q^{e}")?;
                } else {
                    write!(f, "q^({e})")?;
                }
            }
        }
        write!(f, " + O(q^({}))", self.order)
    }
}

/// First exponent at which two series disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divergence {
    pub exponent: Exp,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

/// Outcome of one coefficientwise comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity_id: String,
    pub passed: bool,
    pub order_checked: Exp,
    pub first_divergence: Option<Divergence>,
}

impl VerificationReport {
    /// A report with no series comparison behind it (structural checks).
    pub fn structural(id: &str, passed: bool) -> Self {
        VerificationReport {
            identity_id: id.to_string(),
            passed,
            order_checked: Exp::zero(),
            first_divergence: None,
        }
    }

    /// One-line human-readable summary.
    pub fn summary_line(&self) -> String {
        match (&self.first_divergence, self.passed) {
            (_, true) => format!(
                "PASS {} (order {})",
                self.identity_id,
                format_exp(self.order_checked)
            ),
            (Some(d), false) => format!(
                "FAIL {} (order {}) at exponent {}: lhs {} vs rhs {}",
                self.identity_id,
                format_exp(self.order_checked),
                format_exp(d.exponent),
                d.lhs,
                d.rhs
            ),
            (None, false) => format!(
                "FAIL {} (order {})",
                self.identity_id,
                format_exp(self.order_checked)
            ),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary_line())
    }
}

/// Renders a rational without the `/1` on integers.
pub fn format_exp(e: Exp) -> String {
    if e.is_integer() {
        e.numer().to_string()
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

/// Compares two series coefficient by coefficient for all exponents `< t`.
/// Errors if either side is not known that far; otherwise reports the first
/// diverging exponent, if any.
pub fn eq_to_order(
    lhs: &PuiseuxSeries,
    rhs: &PuiseuxSeries,
    t: Exp,
    id: &str,
) -> Result<VerificationReport> {
    let available = lhs.order.min(rhs.order);
    if t > available {
        return Err(Error::InsufficientOrder {
            requested: t,
            available,
        });
    }
    let denom = lhs.denom.lcm(&rhs.denom);
    let limit = key_limit(t, denom);
    let sl = denom / lhs.denom;
    let sr = denom / rhs.denom;
    let mut merged: BTreeMap<i64, (Coeff, Coeff)> = BTreeMap::new();
    for (&k, c) in &lhs.terms {
        let k = k * sl;
        if k < limit {
            merged.entry(k).or_default().0 = c.clone();
        }
    }
    for (&k, c) in &rhs.terms {
        let k = k * sr;
        if k < limit {
            merged.entry(k).or_default().1 = c.clone();
        }
    }
    let first_divergence = merged.into_iter().find_map(|(k, (a, b))| {
        (a != b).then(|| Divergence {
            exponent: Exp::new(k, denom),
            lhs: a,
            rhs: b,
        })
    });
    Ok(VerificationReport {
        identity_id: id.to_string(),
        passed: first_divergence.is_none(),
        order_checked: t,
        first_divergence,
    })
}
