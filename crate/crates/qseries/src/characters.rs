//! Level-1 module characters for the rank-8 algebra and its rank-4/rank-2
//! pair, expressed through string functions, coset theta series, and
//! Virasoro minimal-model characters.
//!
//! Every quantity has at least two independent presentations (sum versus
//! product, string/theta sum versus Euler-quotient, lattice enumeration
//! versus closed form), and the verification functions in this module
//! compare them coefficient by coefficient.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::functions::{
    big_g, big_h, borwein_a, borwein_c, euler_phi, euler_phi_at, kw_f, pochhammer_inf, ram_psi,
    theta2, theta3, theta4, weighted_theta_sum,
};
use crate::series::{coeff, eq_to_order, exp, Coeff, Exp, PuiseuxSeries, VerificationReport};
use crate::{Error, Result};

/// The five level-1 modules: the rank-8 vacuum and the two modules of each
/// factor of the rank-4 plus rank-2 pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleId {
    Lambda0,
    Omega0,
    Omega4,
    Xi0,
    Xi2,
}

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModuleId::Lambda0 => "Lambda0",
            ModuleId::Omega0 => "Omega0",
            ModuleId::Omega4 => "Omega4",
            ModuleId::Xi0 => "Xi0",
            ModuleId::Xi2 => "Xi2",
        };
        f.write_str(s)
    }
}

impl FromStr for ModuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Lambda0" => Ok(ModuleId::Lambda0),
            "Omega0" => Ok(ModuleId::Omega0),
            "Omega4" => Ok(ModuleId::Omega4),
            "Xi0" => Ok(ModuleId::Xi0),
            "Xi2" => Ok(ModuleId::Xi2),
            other => Err(Error::InvalidParameters(format!("unknown module {other}"))),
        }
    }
}

/// String functions: eight primitives built from Euler quotients times a
/// rescaled Rogers-Ramanujan series, plus the four combinations recovered
/// from them by addition or subtraction. `CDiff`/`CPrimeDiff` are the
/// rank-2 difference strings, `DDiff`/`DPrimeDiff` the rank-4 ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StringId {
    CXi2Xi2,
    CXi2Xi0,
    CDiff,
    CPrimeDiff,
    COm4Om4,
    COm4Om0,
    DDiff,
    DPrimeDiff,
    CXi0Xi0,
    CXi0Xi2,
    COm0Om0,
    COm0Om4,
}

/// The eight strings with a direct product presentation.
pub const PRIMITIVE_STRINGS: [StringId; 8] = [
    StringId::CXi2Xi2,
    StringId::CXi2Xi0,
    StringId::CDiff,
    StringId::CPrimeDiff,
    StringId::COm4Om4,
    StringId::COm4Om0,
    StringId::DDiff,
    StringId::DPrimeDiff,
];

/// All twelve strings, primitives first.
pub const ALL_STRINGS: [StringId; 12] = [
    StringId::CXi2Xi2,
    StringId::CXi2Xi0,
    StringId::CDiff,
    StringId::CPrimeDiff,
    StringId::COm4Om4,
    StringId::COm4Om0,
    StringId::DDiff,
    StringId::DPrimeDiff,
    StringId::CXi0Xi0,
    StringId::CXi0Xi2,
    StringId::COm0Om0,
    StringId::COm0Om4,
];

impl fmt::Display for StringId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StringId::CXi2Xi2 => "cXi2Xi2",
            StringId::CXi2Xi0 => "cXi2Xi0",
            StringId::CDiff => "cDiff",
            StringId::CPrimeDiff => "cPrimeDiff",
            StringId::COm4Om4 => "cOm4Om4",
            StringId::COm4Om0 => "cOm4Om0",
            StringId::DDiff => "dDiff",
            StringId::DPrimeDiff => "dPrimeDiff",
            StringId::CXi0Xi0 => "cXi0Xi0",
            StringId::CXi0Xi2 => "cXi0Xi2",
            StringId::COm0Om0 => "cOm0Om0",
            StringId::COm0Om4 => "cOm0Om4",
        };
        f.write_str(s)
    }
}

/// Modular anomaly of a module: `gr` is `q^(-s)` times the weighted sum of
/// strings against coset theta series. The rank-8 vacuum has no string
/// decomposition on its own side, so it carries no anomaly here.
pub fn s_const(module: ModuleId) -> Result<Exp> {
    match module {
        ModuleId::Omega0 => Ok(exp(-13, 60)),
        ModuleId::Omega4 => Ok(exp(23, 60)),
        ModuleId::Xi0 => Ok(exp(-7, 60)),
        ModuleId::Xi2 => Ok(exp(17, 60)),
        ModuleId::Lambda0 => Err(Error::Unsupported(
            "the rank-8 vacuum module has no string anomaly".into(),
        )),
    }
}

/// One primitive string: `q^pre * phi1^-phi_pow * phi(q^aux)^aux_pow * GH(q^aux)`
/// where GH is the first or second Rogers-Ramanujan series.
fn gh_string(
    pre: Exp,
    phi_pow: u32,
    aux: Exp,
    aux_pow: u32,
    g_side: bool,
    t: Exp,
) -> Result<PuiseuxSeries> {
    let inner = t - pre;
    let base = euler_phi(inner).pow(phi_pow).invert()?;
    let auxs = euler_phi_at(aux, inner).pow(aux_pow);
    let rr = if g_side {
        big_g(inner / aux).substitute(aux)
    } else {
        big_h(inner / aux).substitute(aux)
    };
    Ok(base.mul(&auxs).mul(&rr).shift(pre))
}

/// A string truncated at order `t`, in the Rogers-Ramanujan presentation
/// for the primitives and as a sum or difference of primitives otherwise.
pub fn string_function(id: StringId, t: Exp) -> Result<PuiseuxSeries> {
    match id {
        StringId::CXi2Xi2 => gh_string(exp(-1, 20), 3, Exp::from_integer(3), 1, true, t),
        StringId::CXi2Xi0 => gh_string(exp(11, 20), 3, Exp::from_integer(3), 1, false, t),
        StringId::CDiff => gh_string(exp(-7, 60), 3, exp(1, 3), 1, true, t),
        StringId::CPrimeDiff => gh_string(exp(-1, 20), 3, exp(1, 3), 1, false, t),
        StringId::COm4Om4 => gh_string(exp(-7, 60), 6, Exp::from_integer(2), 2, true, t),
        StringId::COm4Om0 => gh_string(exp(17, 60), 6, Exp::from_integer(2), 2, false, t),
        StringId::DDiff => gh_string(exp(-13, 60), 6, exp(1, 2), 2, true, t),
        StringId::DPrimeDiff => gh_string(exp(-7, 60), 6, exp(1, 2), 2, false, t),
        StringId::CXi0Xi0 => Ok(string_function(StringId::CDiff, t)?
            .add(&string_function(StringId::CXi2Xi0, t)?)),
        StringId::CXi0Xi2 => Ok(string_function(StringId::CXi2Xi2, t)?
            .sub(&string_function(StringId::CPrimeDiff, t)?)),
        StringId::COm0Om0 => Ok(string_function(StringId::DDiff, t)?
            .add(&string_function(StringId::COm4Om0, t)?)),
        StringId::COm0Om4 => Ok(string_function(StringId::COm4Om4, t)?
            .sub(&string_function(StringId::DPrimeDiff, t)?)),
    }
}

/// One primitive string in the second presentation: the Rogers-Ramanujan
/// factor replaced by the triple of Euler products it equals.
fn eta_string(
    pre: Exp,
    phi_pow: u32,
    aux: Exp,
    aux_extra: bool,
    g_side: bool,
    t: Exp,
) -> Result<PuiseuxSeries> {
    let inner = t - pre;
    let base = euler_phi(inner).pow(phi_pow).invert()?;
    let five = aux * Exp::from_integer(5);
    let (lo, hi) = if g_side { (2, 3) } else { (1, 4) };
    let triple = pochhammer_inf(1, aux * Exp::from_integer(lo), five, inner)
        .mul(&pochhammer_inf(1, aux * Exp::from_integer(hi), five, inner))
        .mul(&pochhammer_inf(1, five, five, inner));
    let head = if aux_extra {
        base.mul(&euler_phi_at(aux, inner))
    } else {
        base
    };
    Ok(head.mul(&triple).shift(pre))
}

/// Second presentation of a primitive string; the four derived strings have
/// no such form and report `Unsupported`.
pub fn string_function_eta(id: StringId, t: Exp) -> Result<PuiseuxSeries> {
    match id {
        StringId::CXi2Xi2 => eta_string(exp(-1, 20), 3, Exp::from_integer(3), false, true, t),
        StringId::CXi2Xi0 => eta_string(exp(11, 20), 3, Exp::from_integer(3), false, false, t),
        StringId::CDiff => eta_string(exp(-7, 60), 3, exp(1, 3), false, true, t),
        StringId::CPrimeDiff => eta_string(exp(-1, 20), 3, exp(1, 3), false, false, t),
        StringId::COm4Om4 => eta_string(exp(-7, 60), 6, Exp::from_integer(2), true, true, t),
        StringId::COm4Om0 => eta_string(exp(17, 60), 6, Exp::from_integer(2), true, false, t),
        StringId::DDiff => eta_string(exp(-13, 60), 6, exp(1, 2), true, true, t),
        StringId::DPrimeDiff => eta_string(exp(-7, 60), 6, exp(1, 2), true, false, t),
        other => Err(Error::Unsupported(format!(
            "{other} is a derived string with no product presentation"
        ))),
    }
}

/// Coset theta series in the half-norm convention, so the rank-8 one starts
/// `1 + 240 q` and the glue series carry fractional leading exponents.
pub fn theta_half(module: ModuleId, t: Exp) -> Result<PuiseuxSeries> {
    let half = exp(1, 2);
    let x = t / half;
    let s = match module {
        ModuleId::Lambda0 => theta2(x)
            .pow(8)
            .add(&theta3(x).pow(8))
            .add(&theta4(x).pow(8))
            .scale(&coeff(1, 2))
            .substitute(half),
        ModuleId::Omega0 => theta3(x)
            .pow(4)
            .add(&theta4(x).pow(4))
            .scale(&coeff(1, 2))
            .substitute(half),
        ModuleId::Omega4 => theta2(x).pow(4).scale(&coeff(1, 2)).substitute(half),
        ModuleId::Xi0 => borwein_a(t),
        ModuleId::Xi2 => borwein_c(t),
    };
    Ok(s)
}

/// Graded dimensions of a module as a series in integral powers of `q`,
/// truncated at order `t`; a fractional surviving exponent is an internal
/// inconsistency and reports `FractionalExponentLeak`.
pub fn gr_module(module: ModuleId, t: Exp) -> Result<PuiseuxSeries> {
    let ti = t + Exp::one();
    let series = match module {
        ModuleId::Lambda0 => euler_phi(ti)
            .pow(8)
            .invert()?
            .mul(&theta_half(ModuleId::Lambda0, ti)?),
        ModuleId::Omega0 => weighted_pair(
            StringId::COm0Om0,
            ModuleId::Omega0,
            StringId::COm4Om0,
            ModuleId::Omega4,
            3,
            ti,
        )?
        .shift(-s_const(ModuleId::Omega0)?),
        ModuleId::Omega4 => weighted_pair(
            StringId::COm0Om4,
            ModuleId::Omega0,
            StringId::COm4Om4,
            ModuleId::Omega4,
            3,
            ti,
        )?
        .shift(-s_const(ModuleId::Omega4)?),
        ModuleId::Xi0 => weighted_pair(
            StringId::CXi0Xi0,
            ModuleId::Xi0,
            StringId::CXi2Xi0,
            ModuleId::Xi2,
            2,
            ti,
        )?
        .shift(-s_const(ModuleId::Xi0)?),
        ModuleId::Xi2 => weighted_pair(
            StringId::CXi0Xi2,
            ModuleId::Xi0,
            StringId::CXi2Xi2,
            ModuleId::Xi2,
            2,
            ti,
        )?
        .shift(-s_const(ModuleId::Xi2)?),
    };
    let series = series.truncate(t);
    for (e, _) in series.terms() {
        if !e.denom().is_one() {
            return Err(Error::FractionalExponentLeak(e));
        }
    }
    Ok(series)
}

/// `string_a * theta_a + mult * string_b * theta_b` at inner order `ti`.
fn weighted_pair(
    a: StringId,
    ta: ModuleId,
    b: StringId,
    tb: ModuleId,
    mult: i64,
    ti: Exp,
) -> Result<PuiseuxSeries> {
    let first = string_function(a, ti)?.mul(&theta_half(ta, ti)?);
    let second = string_function(b, ti)?
        .mul(&theta_half(tb, ti)?)
        .scale(&Coeff::from_integer(mult.into()));
    Ok(first.add(&second))
}

/// Checks that the rank-8 vacuum factors through the two module pairs:
/// `gr(Lambda0) = gr(Omega0) gr(Xi0) + q gr(Omega4) gr(Xi2)`.
pub fn branching_check(t: Exp) -> Result<VerificationReport> {
    let lhs = gr_module(ModuleId::Lambda0, t)?;
    let rhs = gr_module(ModuleId::Omega0, t)?
        .mul(&gr_module(ModuleId::Xi0, t)?)
        .add(
            &gr_module(ModuleId::Omega4, t)?
                .mul(&gr_module(ModuleId::Xi2, t)?)
                .shift(Exp::one()),
        );
    eq_to_order(&lhs, &rhs, t, "branching")
}

/// Minimal-model characters: by central-charge parameters, by the
/// coset-theta formula, or as one of nine named product forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VirasoroCharId {
    FF { s: i64, t: i64, m: i64, n: i64 },
    KW { m: i64, r: i64, s: i64 },
    Loney(u8),
}

/// Central charge and conformal weight for the `(s, t)` minimal model at
/// position `(m, n)`.
pub fn ff_weight(s: i64, t: i64, m: i64, n: i64) -> (Exp, Exp) {
    let st = s * t;
    let c = Exp::one() - Exp::new(6 * (s - t) * (s - t), st);
    let h = Exp::new((m * t - n * s).pow(2) - (s - t) * (s - t), 4 * st);
    (c, h)
}

/// Normalized character `q^(h - c/24) (series)` of the `(s, t)` model at
/// position `(m, n)`, truncated at `order`.
pub fn ff_char(s: i64, t: i64, m: i64, n: i64, order: Exp) -> Result<PuiseuxSeries> {
    if s < 2 || t < 2 || s.gcd(&t) != 1 || m < 1 || m >= s || n < 1 || n >= t {
        return Err(Error::InvalidParameters(format!(
            "invalid minimal-model position ({s}, {t}; {m}, {n})"
        )));
    }
    let (c, h) = ff_weight(s, t, m, n);
    let e = h - c / Exp::from_integer(24);
    let inner = order - e;
    let st = Exp::from_integer(s * t);
    let plus = weighted_theta_sum(
        |_| Coeff::one(),
        st,
        Exp::from_integer(m * t - n * s),
        Exp::zero(),
        inner,
    );
    let minus = weighted_theta_sum(
        |_| Coeff::one(),
        st,
        Exp::from_integer(m * t + n * s),
        Exp::from_integer(m * n),
        inner,
    );
    Ok(euler_phi(inner).invert()?.mul(&plus.sub(&minus)).shift(e))
}

/// Coset-theta character formula without parameter validation; exposed so
/// the reflection symmetry can be tested outside the fundamental domain.
pub fn kw_formula(m: i64, r: i64, s: i64, order: Exp) -> Result<PuiseuxSeries> {
    let a = (m + 2) * (m + 3);
    let pre = exp(-1, 24);
    let inner = order - pre;
    let f1 = kw_f(a, r * (m + 3) - s * (m + 2), inner);
    let f2 = kw_f(a, r * (m + 3) + s * (m + 2), inner);
    Ok(euler_phi(inner).invert()?.mul(&f1.sub(&f2)).shift(pre))
}

/// Coset-theta character with the fundamental-domain validation
/// `1 <= s <= r <= m + 1`.
pub fn kw_char(m: i64, r: i64, s: i64, order: Exp) -> Result<PuiseuxSeries> {
    if m < 1 || s < 1 || s > r || r > m + 1 {
        return Err(Error::InvalidParameters(format!(
            "invalid coset-theta position ({m}; {r}, {s})"
        )));
    }
    kw_formula(m, r, s, order)
}

/// Even or odd part in `sqrt(q)` of a series built in the auxiliary
/// variable, times `q^pre`: `(1/2) q^pre (F(-sqrt q) +/- F(sqrt q))`.
fn sqrt_part<F>(build: F, plus: bool, pre: Exp, order: Exp) -> Result<PuiseuxSeries>
where
    F: Fn(Exp) -> Result<PuiseuxSeries>,
{
    let xorder = (order - pre) * Exp::from_integer(2);
    let f = build(xorder)?;
    let f_neg = f.negate_argument()?;
    let comb = if plus { f_neg.add(&f) } else { f_neg.sub(&f) };
    Ok(comb.scale(&coeff(1, 2)).substitute(exp(1, 2)).shift(pre))
}

fn odd_euler(t: Exp) -> PuiseuxSeries {
    pochhammer_inf(1, Exp::one(), Exp::from_integer(2), t)
}

/// The nine closed product forms, tags 1 through 9.
pub fn loney_char(tag: u8, order: Exp) -> Result<PuiseuxSeries> {
    let v = |t: Exp| Ok(odd_euler(t));
    let vg = |t: Exp| Ok(odd_euler(t).mul(&big_g(t)));
    let vh = |t: Exp| Ok(odd_euler(t).mul(&big_h(t)));
    match tag {
        1 => sqrt_part(v, true, exp(-1, 48), order),
        2 => sqrt_part(v, false, exp(-1, 48), order),
        3 => {
            let pre = exp(1, 24);
            let inner = order - pre;
            Ok(odd_euler(inner).invert()?.shift(pre))
        }
        4 => sqrt_part(vg, true, exp(-7, 240), order),
        5 => sqrt_part(vg, false, exp(-7, 240), order),
        6 => sqrt_part(vh, true, exp(17, 240), order),
        7 => sqrt_part(vh, false, exp(17, 240), order),
        8 => {
            let pre = exp(49, 120);
            let inner = order - pre;
            Ok(big_h(inner / Exp::from_integer(2))
                .substitute(Exp::from_integer(2))
                .mul(&odd_euler(inner).invert()?)
                .shift(pre))
        }
        9 => {
            let pre = exp(1, 120);
            let inner = order - pre;
            Ok(big_g(inner / Exp::from_integer(2))
                .substitute(Exp::from_integer(2))
                .mul(&odd_euler(inner).invert()?)
                .shift(pre))
        }
        other => Err(Error::InvalidParameters(format!(
            "product form tags run 1 through 9, got {other}"
        ))),
    }
}

/// Any character by id.
pub fn virasoro_char(id: VirasoroCharId, order: Exp) -> Result<PuiseuxSeries> {
    match id {
        VirasoroCharId::FF { s, t, m, n } => ff_char(s, t, m, n, order),
        VirasoroCharId::KW { m, r, s } => kw_char(m, r, s, order),
        VirasoroCharId::Loney(tag) => loney_char(tag, order),
    }
}

/// The nine coset-theta characters and the minimal-model positions they
/// must match.
pub fn kw_ff_pairs() -> [((i64, i64, i64), (i64, i64, i64, i64)); 9] {
    [
        ((1, 1, 1), (3, 4, 1, 1)),
        ((1, 2, 1), (3, 4, 1, 3)),
        ((1, 2, 2), (3, 4, 1, 2)),
        ((2, 1, 1), (4, 5, 1, 1)),
        ((2, 3, 1), (4, 5, 1, 4)),
        ((2, 3, 3), (4, 5, 1, 2)),
        ((2, 3, 2), (4, 5, 1, 3)),
        ((2, 2, 1), (4, 5, 2, 1)),
        ((2, 2, 2), (4, 5, 2, 2)),
    ]
}

/// The nine product forms and the minimal-model positions they must match.
pub fn loney_ff_pairs() -> [(u8, (i64, i64, i64, i64)); 9] {
    [
        (1, (3, 4, 1, 1)),
        (2, (3, 4, 1, 3)),
        (3, (3, 4, 1, 2)),
        (4, (4, 5, 1, 1)),
        (5, (4, 5, 1, 4)),
        (6, (4, 5, 1, 2)),
        (7, (4, 5, 1, 3)),
        (8, (4, 5, 2, 1)),
        (9, (4, 5, 2, 2)),
    ]
}

/// Compares every coset-theta character and product form against its
/// minimal-model partner at order `t`.
pub fn verify_virasoro(t: Exp) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for ((m, r, s), (fs, ft, fm, fn_)) in kw_ff_pairs() {
        let lhs = kw_char(m, r, s, t)?;
        let rhs = ff_char(fs, ft, fm, fn_, t)?;
        out.push(eq_to_order(&lhs, &rhs, t, &format!("kw.{m}.{r}.{s}"))?);
    }
    for (tag, (fs, ft, fm, fn_)) in loney_ff_pairs() {
        let lhs = loney_char(tag, t)?;
        let rhs = ff_char(fs, ft, fm, fn_, t)?;
        out.push(eq_to_order(&lhs, &rhs, t, &format!("loney.{tag}"))?);
    }
    Ok(out)
}

/// The four products of Ising and tricritical characters that the rank-4
/// diagonal strings must equal after multiplication by `eta^4`.
pub fn branch_b(k: usize, t: Exp) -> Result<PuiseuxSeries> {
    let kw = |m, r, s| kw_char(m, r, s, t);
    match k {
        1 => Ok(kw(1, 1, 1)?.mul(&kw(2, 1, 1)?).add(&kw(1, 2, 1)?.mul(&kw(2, 3, 1)?))),
        2 => Ok(kw(1, 1, 1)?.mul(&kw(2, 3, 2)?).add(&kw(1, 2, 1)?.mul(&kw(2, 3, 3)?))),
        3 => Ok(kw(1, 2, 2)?.mul(&kw(2, 2, 1)?)),
        4 => Ok(kw(1, 2, 2)?.mul(&kw(2, 2, 2)?)),
        other => Err(Error::InvalidParameters(format!(
            "character products are numbered 1 through 4, got {other}"
        ))),
    }
}

fn eta_fourth(t: Exp) -> PuiseuxSeries {
    let pre = exp(1, 6);
    euler_phi(t - pre).pow(4).shift(pre)
}

/// Checks the four rank-4 strings against Virasoro character products:
/// `eta^4 c = chi chi' + chi'' chi'''` termwise.
pub fn verify_strings_via_virasoro(t: Exp) -> Result<Vec<VerificationReport>> {
    let ti = t + Exp::one();
    let rows = [
        (StringId::COm0Om0, 1),
        (StringId::COm0Om4, 2),
        (StringId::COm4Om0, 3),
        (StringId::COm4Om4, 4),
    ];
    let mut out = Vec::new();
    for (id, k) in rows {
        let lhs = eta_fourth(ti).mul(&string_function(id, ti)?);
        let rhs = branch_b(k, ti)?;
        out.push(eq_to_order(&lhs, &rhs, t, &format!("virasoro.{id}"))?);
    }
    Ok(out)
}

/// Checks the four bilinear collapses of string pairs into classical series.
pub fn collapse_checks(t: Exp) -> Result<Vec<VerificationReport>> {
    let ti = t + Exp::one();
    let third = exp(1, 3);
    let two = Exp::from_integer(2);
    let s = |id| string_function(id, ti);
    let phi8 = euler_phi(ti).pow(8).invert()?;
    let pair = |a: &PuiseuxSeries, b: &PuiseuxSeries, c: &PuiseuxSeries, d: &PuiseuxSeries| {
        a.mul(b).add(&c.mul(d)).shift(third)
    };

    let c00 = s(StringId::COm0Om0)?;
    let c04 = s(StringId::COm0Om4)?;
    let c40 = s(StringId::COm4Om0)?;
    let c44 = s(StringId::COm4Om4)?;
    let x00 = s(StringId::CXi0Xi0)?;
    let x02 = s(StringId::CXi0Xi2)?;
    let x20 = s(StringId::CXi2Xi0)?;
    let x22 = s(StringId::CXi2Xi2)?;

    let mut out = Vec::new();

    let lhs = pair(&x00, &c00, &x02, &c04);
    let rhs = phi8.mul(&borwein_a(ti / two).substitute(two));
    out.push(eq_to_order(&lhs, &rhs, t, "collapse.Xi0.Om0")?);

    let lhs = pair(&x20, &c00, &x22, &c04);
    let rhs = phi8.mul(&borwein_c(ti / two).substitute(two));
    out.push(eq_to_order(&lhs, &rhs, t, "collapse.Xi2.Om0")?);

    let lhs = pair(&x00, &c40, &x02, &c44);
    let psi_pair = ram_psi(ti)
        .mul(&ram_psi(ti / Exp::from_integer(3)).substitute(Exp::from_integer(3)))
        .shift(exp(1, 2))
        .scale(&Coeff::from_integer(2.into()));
    let rhs = phi8.mul(&psi_pair);
    out.push(eq_to_order(&lhs, &rhs, t, "collapse.Xi0.Om4")?);

    let lhs = pair(&x20, &c40, &x22, &c44);
    let half = exp(1, 2);
    let c_diff = borwein_c(ti / half)
        .substitute(half)
        .sub(&borwein_c(ti / two).substitute(two))
        .scale(&coeff(1, 3));
    let rhs = phi8.mul(&c_diff);
    out.push(eq_to_order(&lhs, &rhs, t, "collapse.Xi2.Om4")?);

    Ok(out)
}

/// Compares the two presentations of each primitive string at order `t`.
pub fn string_presentation_checks(t: Exp) -> Result<Vec<VerificationReport>> {
    PRIMITIVE_STRINGS
        .iter()
        .map(|&id| {
            let lhs = string_function(id, t)?;
            let rhs = string_function_eta(id, t)?;
            eq_to_order(&lhs, &rhs, t, &format!("strings.eta.{id}"))
        })
        .collect()
}
