//! Exact arithmetic in the group ring Z\[Γ\] for Γ = Zᵏ ordered lexicographically.
//!
//! Elements of Γ are exponent vectors; the group ring is the ring of sparse
//! integer combinations of symbols e^γ with e^γ·e^δ = e^{γ+δ}.  For k = 2 this
//! is the ring of Laurent polynomials in two indeterminates V = e^{(1,0)} and
//! v = e^{(0,1)}; the lexicographic order encodes the asymptotic weight regime
//! because the first coordinate dominates every power of the second.
//!
//! On top of the group ring sits the fraction field and its valuation ring:
//! every nonzero quotient factors uniquely as r·e^γ·f/g where f, g have
//! constant term 1 and only higher-order tails.  [`RatioElt::valuation`]
//! extracts the pair (r, γ) and [`RatioElt::constant_term`] evaluates the
//! residue map of the valuation ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

/// Errors from Laurent/ratio arithmetic and text parsing.
#[derive(Debug, Error)]
pub enum GammaError {
    #[error("exponent dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("zero denominator in ratio element")]
    ZeroDenominator,
    #[error("element lies outside the valuation ring (γ = {0:?} < 0)")]
    NotInValuationRing(GammaVec),
    #[error("parse error: {0}")]
    Parse(String),
}

/// An element of Γ = Zᵏ.  The derived ordering on the underlying slice is
/// exactly the lexicographic total order, which is compatible with addition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GammaVec(SmallVec<[i32; 4]>);

impl GammaVec {
    pub fn new(exps: &[i32]) -> Self {
        GammaVec(SmallVec::from_slice(exps))
    }

    pub fn zero(dim: usize) -> Self {
        GammaVec(SmallVec::from_elem(0, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_positive(&self) -> bool {
        *self > Self::zero(self.dim())
    }

    pub fn is_negative(&self) -> bool {
        *self < Self::zero(self.dim())
    }

    /// Lexicographic comparison; panics on dimension mismatch (usage error).
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.dim(), other.dim(), "exponent dimension mismatch");
        self.cmp(other)
    }

    /// Scalar multiple n·γ.
    pub fn scale(&self, n: i32) -> Self {
        GammaVec(self.0.iter().map(|&e| e * n).collect())
    }

    /// Concatenation, used to realise Γ × Γ when checking identities in A ⊗ A.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GammaVec(v)
    }
}

impl Add<&GammaVec> for &GammaVec {
    type Output = GammaVec;
    fn add(self, rhs: &GammaVec) -> GammaVec {
        assert_eq!(self.dim(), rhs.dim(), "exponent dimension mismatch");
        GammaVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&GammaVec> for &GammaVec {
    type Output = GammaVec;
    fn sub(self, rhs: &GammaVec) -> GammaVec {
        assert_eq!(self.dim(), rhs.dim(), "exponent dimension mismatch");
        GammaVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &GammaVec {
    type Output = GammaVec;
    fn neg(self) -> GammaVec {
        GammaVec(self.0.iter().map(|&e| -e).collect())
    }
}

impl fmt::Display for GammaVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A sparse integer combination of elements e^γ, γ ∈ Γ.
///
/// No zero coefficients are stored, so map equality coincides with ring
/// equality.  The dimension of Γ is carried explicitly so that the zero
/// element still knows where it lives.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LaurentElt {
    dim: usize,
    terms: BTreeMap<GammaVec, BigInt>,
}

impl LaurentElt {
    pub fn zero(dim: usize) -> Self {
        LaurentElt {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(GammaVec::zero(dim), BigInt::one())
    }

    pub fn monomial(gamma: GammaVec, coeff: impl Into<BigInt>) -> Self {
        let dim = gamma.dim();
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(gamma, coeff);
        }
        LaurentElt { dim, terms }
    }

    pub fn constant(dim: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(GammaVec::zero(dim), c)
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (GammaVec, BigInt)>) -> Self {
        let mut out = Self::zero(dim);
        for (g, c) in terms {
            out.add_term(&g, &c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&GammaVec::zero(self.dim))
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GammaVec, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, gamma: &GammaVec) -> BigInt {
        self.terms.get(gamma).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, gamma: &GammaVec, coeff: &BigInt) {
        assert_eq!(self.dim, gamma.dim(), "exponent dimension mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(gamma) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(gamma);
                }
            }
            None => {
                self.terms.insert(gamma.clone(), coeff.clone());
            }
        }
    }

    /// Lex-minimal exponent in the support, if nonzero.
    pub fn min_exp(&self) -> Option<&GammaVec> {
        self.terms.keys().next()
    }

    /// Lex-maximal exponent in the support, if nonzero.
    pub fn max_exp(&self) -> Option<&GammaVec> {
        self.terms.keys().next_back()
    }

    /// Coefficient of the lex-minimal term.
    pub fn min_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    pub fn max_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// The bar involution e^γ ↦ e^{−γ}.
    pub fn bar(&self) -> Self {
        LaurentElt {
            dim: self.dim,
            terms: self.terms.iter().map(|(g, c)| (-g, c.clone())).collect(),
        }
    }

    /// Multiplication by the monomial e^γ.
    pub fn shift(&self, gamma: &GammaVec) -> Self {
        LaurentElt {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (g + gamma, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        LaurentElt {
            dim: self.dim,
            terms: self.terms.iter().map(|(g, k)| (g.clone(), k * c)).collect(),
        }
    }

    /// True iff every exponent in the support satisfies γ ≥ 0 (so the zero
    /// element belongs vacuously).
    pub fn in_a_geq0(&self) -> bool {
        self.terms.keys().all(|g| !g.is_negative())
    }

    pub fn in_a_gt0(&self) -> bool {
        self.terms.keys().all(|g| g.is_positive())
    }

    pub fn in_a_lt0(&self) -> bool {
        self.terms.keys().all(|g| g.is_negative())
    }

    pub fn in_a_leq0(&self) -> bool {
        self.terms.keys().all(|g| !g.is_positive())
    }

    /// The part of the support with γ < 0.
    pub fn strictly_negative_part(&self) -> Self {
        LaurentElt {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(g, _)| g.is_negative())
                .map(|(g, c)| (g.clone(), c.clone()))
                .collect(),
        }
    }

    /// The unique bar-invariant element m with `self − m` supported in γ < 0.
    ///
    /// Writing self = Σ c_γ e^γ, this is Σ_{γ>0} c_γ(e^γ + e^{−γ}) + c_0.
    /// It is what the Kazhdan–Lusztig correction step subtracts.
    pub fn bar_symmetrize_nonneg(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (g, c) in &self.terms {
            if g.is_positive() {
                out.add_term(g, c);
                out.add_term(&-g, c);
            } else if g.is_zero() {
                out.add_term(g, c);
            }
        }
        out
    }

    /// Exact division, if `self = q·d` for some Laurent element q.
    pub fn try_div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(Self::zero(self.dim));
        }
        let dg = d.min_exp().unwrap().clone();
        let dc = d.min_coeff().unwrap().clone();
        // Any exact quotient has support inside [min−min, max−max]; the upper
        // bound doubles as the termination guard (Zᵏ-lex is not well-ordered).
        let qmax = self.max_exp().unwrap() - d.max_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.dim);
        while !rem.is_zero() {
            let rg = rem.min_exp().unwrap().clone();
            let rc = rem.min_coeff().unwrap().clone();
            let q = &rc / &dc;
            if &q * &dc != rc {
                return None;
            }
            let shift = &rg - &dg;
            if shift > qmax {
                return None;
            }
            let mono = LaurentElt::monomial(shift, q);
            rem = &rem - &(d * &mono);
            quot = &quot + &mono;
        }
        Some(quot)
    }

    /// gcd of the integer coefficients (positive), zero element gives 0.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Rendering as a sum of `c*V^i*v^j` monomials for k = 2, or
    /// `c*e^(i1,...,ik)` in general; `0` for the zero element.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (g, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if self.dim == 2 {
                let (i, j) = (g.exps()[0], g.exps()[1]);
                if i != 0 {
                    factors.push(if i == 1 { "V".into() } else { format!("V^{i}") });
                }
                if j != 0 {
                    factors.push(if j == 1 { "v".into() } else { format!("v^{j}") });
                }
            } else if !g.is_zero() {
                factors.push(format!("e^{g}"));
            }
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    factors.insert(0, abs.to_string());
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Parses the grammar produced by [`render`](Self::render).
    pub fn parse(dim: usize, s: &str) -> Result<Self, GammaError> {
        parse_laurent(dim, s)
    }
}

impl Add for &LaurentElt {
    type Output = LaurentElt;
    fn add(self, rhs: &LaurentElt) -> LaurentElt {
        assert_eq!(self.dim, rhs.dim, "exponent dimension mismatch");
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g, c);
        }
        out
    }
}

impl Sub for &LaurentElt {
    type Output = LaurentElt;
    fn sub(self, rhs: &LaurentElt) -> LaurentElt {
        assert_eq!(self.dim, rhs.dim, "exponent dimension mismatch");
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g, &(-c));
        }
        out
    }
}

impl Neg for &LaurentElt {
    type Output = LaurentElt;
    fn neg(self) -> LaurentElt {
        LaurentElt {
            dim: self.dim,
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentElt {
    type Output = LaurentElt;
    fn mul(self, rhs: &LaurentElt) -> LaurentElt {
        assert_eq!(self.dim, rhs.dim, "exponent dimension mismatch");
        let mut out = LaurentElt::zero(self.dim);
        for (g1, c1) in &self.terms {
            for (g2, c2) in &rhs.terms {
                out.add_term(&(g1 + g2), &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for LaurentElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// The valuation data of a nonzero ratio: the unique (r, γ) with
/// x = r·e^γ·f/g, f and g of constant term 1 with higher-order tails.
/// The zero element is reported with `gamma: None`, standing for +∞.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Valuation {
    pub r: BigRational,
    /// `None` encodes the convention γ₀ = +∞ for the zero element.
    pub gamma: Option<GammaVec>,
}

/// A quotient of Laurent elements, i.e. an element of the fraction field K.
///
/// No canonical reduced form is maintained; equality is tested by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatioElt {
    num: LaurentElt,
    den: LaurentElt,
}

impl RatioElt {
    pub fn new(num: LaurentElt, den: LaurentElt) -> Result<Self, GammaError> {
        if den.is_zero() {
            return Err(GammaError::ZeroDenominator);
        }
        assert_eq!(num.dim(), den.dim(), "exponent dimension mismatch");
        Ok(RatioElt { num, den })
    }

    pub fn from_laurent(num: LaurentElt) -> Self {
        let den = LaurentElt::one(num.dim());
        RatioElt { num, den }
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_laurent(LaurentElt::zero(dim))
    }

    pub fn one(dim: usize) -> Self {
        Self::from_laurent(LaurentElt::one(dim))
    }

    pub fn num(&self) -> &LaurentElt {
        &self.num
    }

    pub fn den(&self) -> &LaurentElt {
        &self.den
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, GammaError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Strips common integer content and a common monomial factor.  This is
    /// value-preserving housekeeping, not canonicalisation.
    pub fn normalize_content(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentElt::one(self.den.dim());
            return;
        }
        let g = num_integer::Integer::gcd(&self.num.content(), &self.den.content());
        if !g.is_one() && !g.is_zero() {
            self.num = LaurentElt {
                dim: self.num.dim,
                terms: self
                    .num
                    .terms
                    .iter()
                    .map(|(k, c)| (k.clone(), c / &g))
                    .collect(),
            };
            self.den = LaurentElt {
                dim: self.den.dim,
                terms: self
                    .den
                    .terms
                    .iter()
                    .map(|(k, c)| (k.clone(), c / &g))
                    .collect(),
            };
        }
        let m = self
            .num
            .min_exp()
            .unwrap()
            .clone()
            .min(self.den.min_exp().unwrap().clone());
        if !m.is_zero() {
            let neg = -&m;
            self.num = self.num.shift(&neg);
            self.den = self.den.shift(&neg);
        }
    }

    /// The factorisation data (r, γ): factor the lex-lowest term out of the
    /// numerator and of the denominator and divide.
    pub fn valuation(&self) -> Valuation {
        if self.num.is_zero() {
            return Valuation {
                r: BigRational::zero(),
                gamma: None,
            };
        }
        let (ng, nc) = (self.num.min_exp().unwrap(), self.num.min_coeff().unwrap());
        let (dg, dc) = (self.den.min_exp().unwrap(), self.den.min_coeff().unwrap());
        Valuation {
            r: BigRational::new(nc.clone(), dc.clone()),
            gamma: Some(ng - dg),
        }
    }

    /// Image under the residue map of the valuation ring: 0 when γ > 0, the
    /// leading ratio r when γ = 0, and an error when γ < 0 (the element does
    /// not belong to the valuation ring; never silently truncated).
    pub fn constant_term(&self) -> Result<BigRational, GammaError> {
        let val = self.valuation();
        match val.gamma {
            None => Ok(BigRational::zero()),
            Some(g) => {
                if g.is_positive() {
                    Ok(BigRational::zero())
                } else if g.is_zero() {
                    Ok(val.r)
                } else {
                    Err(GammaError::NotInValuationRing(g))
                }
            }
        }
    }
}

impl PartialEq for RatioElt {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatioElt {}

impl Add for &RatioElt {
    type Output = RatioElt;
    fn add(self, rhs: &RatioElt) -> RatioElt {
        let mut out = RatioElt {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        };
        out.normalize_content();
        out
    }
}

impl Sub for &RatioElt {
    type Output = RatioElt;
    fn sub(self, rhs: &RatioElt) -> RatioElt {
        self + &RatioElt {
            num: -&rhs.num,
            den: rhs.den.clone(),
        }
    }
}

impl Mul for &RatioElt {
    type Output = RatioElt;
    fn mul(self, rhs: &RatioElt) -> RatioElt {
        let mut out = RatioElt {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        };
        out.normalize_content();
        out
    }
}

impl fmt::Display for RatioElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

fn parse_laurent(dim: usize, s: &str) -> Result<LaurentElt, GammaError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(GammaError::Parse("empty input".into()));
    }
    let mut out = LaurentElt::zero(dim);
    // Split into signed summands at top level (no parens nesting except e^(..)).
    let mut chunks: Vec<(i32, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = 1;
    let mut depth = 0usize;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| GammaError::Parse("unbalanced parentheses".into()))?;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !cur.trim().is_empty() && !cur.trim_end().ends_with('^') => {
                chunks.push((sign, std::mem::take(&mut cur)));
                sign = if ch == '-' { -1 } else { 1 };
            }
            '-' if depth == 0 && cur.trim().is_empty() => {
                sign = -sign;
            }
            '+' if depth == 0 && cur.trim().is_empty() => {}
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        chunks.push((sign, cur));
    }
    for (sign, chunk) in chunks {
        let (gamma, coeff) = parse_monomial(dim, chunk.trim())?;
        out.add_term(&gamma, &(coeff * sign));
    }
    Ok(out)
}

fn parse_monomial(dim: usize, s: &str) -> Result<(GammaVec, BigInt), GammaError> {
    let mut coeff = BigInt::one();
    let mut exps = vec![0i32; dim];
    for factor in s.split('*') {
        let f = factor.trim();
        if f.is_empty() {
            return Err(GammaError::Parse(format!("empty factor in `{s}`")));
        }
        if let Ok(c) = f.parse::<BigInt>() {
            coeff *= c;
        } else if let Some(rest) = f.strip_prefix("e^") {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| GammaError::Parse(format!("bad exponent vector `{f}`")))?;
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != dim {
                return Err(GammaError::DimensionMismatch(parts.len(), dim));
            }
            for (i, p) in parts.iter().enumerate() {
                exps[i] += p
                    .trim()
                    .parse::<i32>()
                    .map_err(|e| GammaError::Parse(format!("bad exponent `{p}`: {e}")))?;
            }
        } else {
            let (var, pow) = match f.split_once('^') {
                Some((v, p)) => (
                    v.trim(),
                    p.trim()
                        .parse::<i32>()
                        .map_err(|e| GammaError::Parse(format!("bad power `{p}`: {e}")))?,
                ),
                None => (f, 1),
            };
            let axis = match var {
                "V" => 0,
                "v" => 1,
                _ => return Err(GammaError::Parse(format!("unknown variable `{var}`"))),
            };
            if dim != 2 {
                return Err(GammaError::Parse(format!(
                    "variable `{var}` is only available for k = 2, not k = {dim}"
                )));
            }
            exps[axis] += pow;
        }
    }
    Ok((GammaVec::new(&exps), coeff))
}

// ---------------------------------------------------------------------------
// JSON form: a Laurent element as a list of (exponent vector, coefficient).
// ---------------------------------------------------------------------------

impl serde::Serialize for LaurentElt {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<(Vec<i32>, String)> = self
            .terms
            .iter()
            .map(|(g, c)| (g.exps().to_vec(), c.to_string()))
            .collect();
        entries.serialize(ser)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentElt {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let entries: Vec<(Vec<i32>, String)> = serde::Deserialize::deserialize(de)?;
        let dim = entries.first().map(|(g, _)| g.len()).unwrap_or(0);
        let mut out = LaurentElt::zero(dim);
        for (g, c) in entries {
            let coeff: BigInt = c
                .parse()
                .map_err(|e| serde::de::Error::custom(format!("bad coefficient: {e}")))?;
            out.add_term(&GammaVec::new(&g), &coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e2(i: i32, j: i32) -> LaurentElt {
        LaurentElt::monomial(GammaVec::new(&[i, j]), 1)
    }

    #[test]
    fn lex_order_examples() {
        assert_eq!(
            GammaVec::new(&[1, 0]).lex_cmp(&GammaVec::new(&[0, 5])),
            Ordering::Greater
        );
        assert_eq!(
            GammaVec::new(&[0, 0]).lex_cmp(&GammaVec::new(&[0, 0])),
            Ordering::Equal
        );
        assert_eq!(
            GammaVec::new(&[1, -3]).lex_cmp(&GammaVec::new(&[1, 2])),
            Ordering::Less
        );
    }

    #[test]
    fn lex_order_translation_invariant() {
        let a = GammaVec::new(&[0, 3]);
        let b = GammaVec::new(&[1, -7]);
        let z = GammaVec::new(&[-2, 5]);
        assert!(a < b);
        assert!(&a + &z < &b + &z);
    }

    #[test]
    fn ring_arithmetic() {
        // e^{(1,0)}·e^{(0,1)} = e^{(1,1)}
        assert_eq!(&e2(1, 0) * &e2(0, 1), e2(1, 1));
        // (v − v⁻¹)(v + v⁻¹) = v² − v⁻²
        let a = &e2(0, 1) - &e2(0, -1);
        let b = &e2(0, 1) + &e2(0, -1);
        assert_eq!(&a * &b, &e2(0, 2) - &e2(0, -2));
        // a + (−a) = 0 with empty support
        let s = &a + &-&a;
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
    }

    #[test]
    fn bar_involution() {
        assert_eq!(e2(1, 0).bar(), e2(-1, 0));
        let x = &LaurentElt::constant(2, 2) + &e2(0, 2).scale(&BigInt::from(3));
        let expect = &LaurentElt::constant(2, 2) + &e2(0, -2).scale(&BigInt::from(3));
        assert_eq!(x.bar(), expect);
        assert_eq!(x.bar().bar(), x);
        // bar(e^γ·a) = e^{−γ}·bar(a)
        let g = GammaVec::new(&[2, -1]);
        assert_eq!(x.shift(&g).bar(), x.bar().shift(&-&g));
    }

    #[test]
    fn valuation_of_handworked_ratio() {
        // (v − v⁻¹)/(V² + 1): lowest terms are −e^{(0,−1)} and 1.
        let num = &e2(0, 1) - &e2(0, -1);
        let den = &e2(2, 0) + &LaurentElt::one(2);
        let x = RatioElt::new(num, den).unwrap();
        let val = x.valuation();
        assert_eq!(val.r, BigRational::from(BigInt::from(-1)));
        assert_eq!(val.gamma, Some(GammaVec::new(&[0, -1])));
    }

    #[test]
    fn valuation_special_cases() {
        let one = RatioElt::one(2);
        let val = one.valuation();
        assert_eq!(val.r, BigRational::one());
        assert_eq!(val.gamma, Some(GammaVec::zero(2)));

        let zero = RatioElt::zero(2);
        let val = zero.valuation();
        assert!(val.r.is_zero());
        assert_eq!(val.gamma, None);
    }

    #[test]
    fn valuation_is_multiplicative() {
        let x = RatioElt::new(&e2(0, 1) - &e2(0, -1), &e2(2, 0) + &LaurentElt::one(2)).unwrap();
        let y = RatioElt::new(
            &e2(1, -1) + &e2(2, 3).scale(&BigInt::from(5)),
            &LaurentElt::constant(2, 3) - &e2(0, 2),
        )
        .unwrap();
        let xy = &x * &y;
        let (vx, vy, vxy) = (x.valuation(), y.valuation(), xy.valuation());
        assert_eq!(vxy.r, vx.r * vy.r);
        assert_eq!(vxy.gamma.unwrap(), &vx.gamma.unwrap() + &vy.gamma.unwrap());
    }

    #[test]
    fn constant_term_examples() {
        let x = RatioElt::from_laurent(&LaurentElt::one(2) + &e2(0, 1));
        assert_eq!(x.constant_term().unwrap(), BigRational::one());

        let y = RatioElt::new(e2(1, -1), &LaurentElt::one(2) + &e2(0, 2)).unwrap();
        assert!(y.constant_term().unwrap().is_zero());

        let z = RatioElt::from_laurent(&e2(0, 1) - &e2(0, -1));
        assert!(matches!(
            z.constant_term(),
            Err(GammaError::NotInValuationRing(_))
        ));
    }

    #[test]
    fn constant_term_is_ring_homomorphism() {
        let x = RatioElt::new(
            &LaurentElt::constant(2, 2) + &e2(1, 1),
            &LaurentElt::one(2) + &e2(0, 3),
        )
        .unwrap();
        let y = RatioElt::new(
            &LaurentElt::constant(2, -3) + &e2(0, 1),
            &LaurentElt::one(2) - &e2(1, 0),
        )
        .unwrap();
        let ct = |r: &RatioElt| r.constant_term().unwrap();
        assert_eq!(ct(&(&x + &y)), ct(&x) + ct(&y));
        assert_eq!(ct(&(&x * &y)), ct(&x) * ct(&y));
    }

    #[test]
    fn membership_predicates() {
        assert!((&LaurentElt::one(2) + &e2(1, 0)).in_a_geq0());
        assert!(!e2(0, -1).in_a_geq0());
        assert!(LaurentElt::zero(2).in_a_geq0());
        let a = &LaurentElt::one(2) + &e2(0, 2);
        let b = &e2(1, 0) + &LaurentElt::one(2);
        assert!((&a * &b).in_a_geq0());
        assert!((&a + &b).in_a_geq0());
    }

    #[test]
    fn exact_division() {
        let a = &e2(0, 2) - &e2(0, -2);
        let b = &e2(0, 1) - &e2(0, -1);
        let q = a.try_div_exact(&b).unwrap();
        assert_eq!(&q * &b, a);
        assert!((&a + &LaurentElt::one(2)).try_div_exact(&b).is_none());
    }

    #[test]
    fn render_and_parse_round_trip() {
        let x = &(&e2(2, 0).scale(&BigInt::from(-3)) + &e2(0, -1)) + &LaurentElt::constant(2, 7);
        let s = x.render();
        assert_eq!(LaurentElt::parse(2, &s).unwrap(), x);
        assert_eq!(LaurentElt::parse(2, "0").unwrap(), LaurentElt::zero(2));
        assert_eq!(
            LaurentElt::parse(2, "V^2*v^-1 - 2").unwrap(),
            &e2(2, -1) - &LaurentElt::constant(2, 2)
        );
        // general-k grammar
        let y = LaurentElt::monomial(GammaVec::new(&[1, -2, 3]), 4);
        assert_eq!(LaurentElt::parse(3, &y.render()).unwrap(), y);
    }
}
