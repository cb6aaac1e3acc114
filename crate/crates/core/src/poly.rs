//! Distance polynomials of adapted classes of A_{2n}, folded distance
//! polynomials of the twisted adapted cluster point, and the denominator
//! formulas they are compared with.
//!
//! Polynomials are products of linear factors `z - e q_s^t` and are kept
//! as factor multisets, with `q = q_s^2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arquiver::{gamma_q, ArQuiver, DynkinQuiver};
use crate::error::{Error, Result};
use crate::folded::{fold, FoldedQuiver};
use crate::order::{OrderContext, RootSequence};
use crate::twist::{assign_coordinates, TwistedClass};

/// A product of factors `(z - sign * q_s^exp)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QsFactorPoly(BTreeMap<(i8, u32), u32>);

impl QsFactorPoly {
    pub fn one() -> Self {
        Self::default()
    }

    /// The factor `z - sign * q_s^exp`.
    pub fn factor(sign: i8, exp: u32) -> Self {
        Self::one().times(sign, exp, 1)
    }

    /// Multiplies by `(z - sign * q_s^exp)^mult`.
    pub fn times(mut self, sign: i8, exp: u32, mult: u32) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        if mult > 0 {
            *self.0.entry((sign, exp)).or_insert(0) += mult;
        }
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(s, e), &m) in &other.0 {
            out = out.times(s, e, m);
        }
        out
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut out = self.0.clone();
        for (key, &m) in &other.0 {
            let e = out.get_mut(key)?;
            if *e < m {
                return None;
            }
            *e -= m;
            if *e == 0 {
                out.remove(key);
            }
        }
        Some(QsFactorPoly(out))
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn factors(&self) -> &BTreeMap<(i8, u32), u32> {
        &self.0
    }

    /// Flips the sign of every factor.
    pub fn negated_signs(&self) -> Self {
        QsFactorPoly(self.0.iter().map(|(&(s, e), &m)| ((-s, e), m)).collect())
    }
}

impl fmt::Display for QsFactorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(&(s, e), &m)| {
                let op = if s > 0 { '-' } else { '+' };
                let base = format!("(z {op} qs^{e})");
                if m == 1 {
                    base
                } else {
                    format!("{base}^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}

/// `t -> o_t(k, l)` with `t` the distance of doubled positions.
pub type DistanceProfile = BTreeMap<u32, usize>;

/// The generalized distances of comparable pairs at residues `k` and `l`,
/// grouped by the gap `t` of their doubled positions. Pairs with the same
/// gap must share their distance.
pub fn distance_profile(q: &ArQuiver, ctx: &OrderContext, k: usize, l: usize) -> Result<DistanceProfile> {
    let reach = q.reachability();
    let mut out: DistanceProfile = BTreeMap::new();
    for a in (0..q.len()).filter(|&v| q.residue(v) == k) {
        for b in (0..q.len()).filter(|&v| q.residue(v) == l) {
            if a == b || !(reach[a].contains(b) || reach[b].contains(a)) {
                continue;
            }
            let t = q.pos(a).abs_diff(q.pos(b)) as u32;
            let p = RootSequence::from_indices(&[ctx.index(q.root(a))?, ctx.index(q.root(b))?]);
            let g = ctx.gdist(&p);
            match out.insert(t, g) {
                Some(old) if old != g => {
                    return Err(Error::Inconsistent(format!(
                        "pairs at residues ({k},{l}) with gap {t} have distances {old} and {g}"
                    )))
                }
                _ => {}
            }
        }
    }
    Ok(out)
}

/// The AR-quiver and convex order of one adapted class, computed once.
pub struct AdaptedData {
    quiver: ArQuiver,
    ctx: OrderContext,
}

impl AdaptedData {
    pub fn new(q: &DynkinQuiver) -> Self {
        AdaptedData { quiver: gamma_q(q), ctx: OrderContext::new(&q.adapted_class()) }
    }

    pub fn profile(&self, k: usize, l: usize) -> Result<DistanceProfile> {
        distance_profile(&self.quiver, &self.ctx, k, l)
    }
}

/// `D_{k,l}` of the adapted cluster point of A_{2n} computed from `Q` and
/// its reverse: `prod_t (z - (-1)^t q^t)^{max(o^Q_t, o^{Q^rev}_t)}`.
pub fn dist_poly_adapted(q: &DynkinQuiver, k: usize, l: usize) -> Result<QsFactorPoly> {
    dist_poly_from(&AdaptedData::new(q), &AdaptedData::new(&q.reversed()), k, l)
}

fn dist_poly_from(q: &AdaptedData, rev: &AdaptedData, k: usize, l: usize) -> Result<QsFactorPoly> {
    let mut merged = q.profile(k, l)?;
    for (t2, o) in rev.profile(k, l)? {
        let e = merged.entry(t2).or_insert(0);
        *e = (*e).max(o);
    }
    let mut out = QsFactorPoly::one();
    for (t2, o) in merged {
        if t2 % 2 != 0 {
            return Err(Error::Inconsistent(format!("odd gap {t2} in an adapted quiver")));
        }
        let t = t2 / 2;
        out = out.times(sign_of(t as usize), 2 * t, o as u32);
    }
    Ok(out)
}

/// `D^_{k,l}` of a twisted adapted class:
/// `prod_t (z - (-1)^{k+l} q_s^t)^{ceil(o_t / 2)}`.
pub fn folded_dist_poly(tc: &TwistedClass, k: usize, l: usize) -> Result<QsFactorPoly> {
    FoldedData::new(tc)?.dist_poly(k, l)
}

/// The folded AR-quiver and convex order of one twisted class.
pub struct FoldedData {
    folded: FoldedQuiver,
    ctx: OrderContext,
}

impl FoldedData {
    pub fn new(tc: &TwistedClass) -> Result<Self> {
        Ok(FoldedData { folded: fold(&assign_coordinates(tc)?)?, ctx: OrderContext::new(tc.class()) })
    }

    pub fn profile(&self, k: usize, l: usize) -> Result<DistanceProfile> {
        distance_profile(self.folded.quiver(), &self.ctx, k, l)
    }

    pub fn dist_poly(&self, k: usize, l: usize) -> Result<QsFactorPoly> {
        let d_bar = self.folded.constants().d_bar() as usize;
        Ok(self.profile(k, l)?.into_iter().fold(QsFactorPoly::one(), |acc, (t, o)| {
            acc.times(sign_of(k + l), t, o.div_ceil(d_bar) as u32)
        }))
    }
}

fn sign_of(parity: usize) -> i8 {
    if parity % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Denominator of `U'_q(A^{(1)}_{2n})`:
/// `prod_{s=1}^{min(k,l,2n+1-k,2n+1-l)} (z - (-1)^{k+l} q^{2s+|k-l|})`.
pub fn denom_a(n: usize, k: usize, l: usize) -> QsFactorPoly {
    let m = 2 * n + 1;
    let top = k.min(l).min(m - k).min(m - l);
    (1..=top).fold(QsFactorPoly::one(), |acc, s| {
        acc.times(sign_of(k + l), 2 * (2 * s + k.abs_diff(l)) as u32, 1)
    })
}

/// Denominator of `U'_q(B^{(1)}_{n+1})`.
pub fn denom_b(n: usize, k: usize, l: usize) -> QsFactorPoly {
    let (k, l) = (k.min(l), k.max(l));
    let h = 2 * n + 1;
    if l <= n {
        let e = sign_of(k + l);
        (1..=k).fold(QsFactorPoly::one(), |acc, s| {
            acc.times(e, 2 * (l - k + 2 * s) as u32, 1).times(e, 2 * (h - k - l + 2 * s) as u32, 1)
        })
    } else if k <= n {
        (1..=k).fold(QsFactorPoly::one(), |acc, s| {
            acc.times(sign_of(n + 1 + k), (2 * n - 2 * k + 1 + 4 * s) as u32, 1)
        })
    } else {
        (1..=n)
            .fold(QsFactorPoly::one(), |acc, s| acc.times(1, (4 * s - 2) as u32, 1))
            .times(1, 2 * h as u32, 1)
    }
}

/// Checks `D_{k,l} (z + q^{2n+1})^{delta(l, k*)} = d^{A}_{k,l}` for all
/// quivers of A_{2n} and all residue pairs.
pub fn verify_dist_denom_a(n: usize) -> Result<()> {
    let m = 2 * n;
    for q in DynkinQuiver::all_type_a(m) {
        let (fwd, rev) = (AdaptedData::new(&q), AdaptedData::new(&q.reversed()));
        for k in 1..=m {
            for l in 1..=m {
                let mut lhs = dist_poly_from(&fwd, &rev, k, l)?;
                if l == m + 1 - k {
                    lhs = lhs.times(-1, 2 * (2 * n + 1) as u32, 1);
                }
                let rhs = denom_a(n, k, l);
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!(
                        "A{m} quiver {} ({k},{l}): {lhs} vs {rhs}",
                        q.orientation()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Checks `D^_{k,l} (z - q^{2n+1})^{delta(k,l)} = d^{B}_{k,l}` for every
/// class of the twisted adapted cluster point and all folded residues.
pub fn verify_dist_denom_b(n: usize) -> Result<()> {
    for q in DynkinQuiver::all_type_a(2 * n) {
        for side in [crate::twist::Side::Less, crate::twist::Side::Greater] {
            let tc = TwistedClass::from_quiver(&q, side)?;
            let data = FoldedData::new(&tc)?;
            for k in 1..=n + 1 {
                for l in k..=n + 1 {
                    let mut lhs = data.dist_poly(k, l)?;
                    if k == l {
                        lhs = lhs.times(1, 2 * (2 * n + 1) as u32, 1);
                    }
                    let rhs = denom_b(n, k, l);
                    if lhs != rhs {
                        return Err(Error::Inconsistent(format!(
                            "B{} class {}{} ({k},{l}): {lhs} vs {rhs}",
                            n + 1,
                            q.orientation(),
                            side.symbol()
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Both sides of the product identity relating `d^B_{k,l}` with distance
/// polynomials of A_{2n} for `1 <= k, l <= n`:
/// `(d^B_{k,l} / (z - q^{2n+1})^{delta(k,l)}, D_{k,l} D_{k,l*})`.
pub fn interpretation_sides(n: usize, k: usize, l: usize) -> Result<(QsFactorPoly, QsFactorPoly)> {
    if !(1..=n).contains(&k) || !(1..=n).contains(&l) {
        return Err(Error::Undefined(format!("residues ({k},{l}) outside 1..={n}")));
    }
    let mut lhs = denom_b(n, k, l);
    if k == l {
        lhs = lhs
            .div(&QsFactorPoly::factor(1, 2 * (2 * n + 1) as u32))
            .ok_or_else(|| Error::Inconsistent("missing (z - q^h) factor".into()))?;
    }
    let q = DynkinQuiver::type_a(2 * n, &"<".repeat(2 * n - 1))?;
    let (fwd, rev) = (AdaptedData::new(&q), AdaptedData::new(&q.reversed()));
    let rhs = dist_poly_from(&fwd, &rev, k, l)?.mul(&dist_poly_from(&fwd, &rev, k, 2 * n + 1 - l)?);
    Ok((lhs, rhs))
}
