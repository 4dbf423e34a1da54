//! Exact base-field coefficients: rationals and cyclotomic extensions ℚ(ζ_k).
//!
//! Cyclotomic elements are stored as polynomials in ζ_k of degree below
//! deg Φ_k, reduced modulo the k-th cyclotomic polynomial Φ_k. The reduced
//! form is a canonical representative, so structural equality after
//! normalization is field equality.

use num::integer::lcm;
use num::traits::{One, Zero};
use num::{BigInt, BigRational};
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Q = BigRational;

pub fn qi(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Monic Φ_k, coefficients low-to-high, computed by dividing x^k − 1
/// by Φ_d over all proper divisors d | k.
pub fn cyclotomic_polynomial(k: u32) -> Vec<BigInt> {
    assert!(k >= 1);
    // x^k − 1
    let mut poly = vec![BigInt::from(-1)];
    poly.extend(std::iter::repeat(BigInt::zero()).take(k as usize - 1));
    poly.push(BigInt::one());
    for d in 1..k {
        if k % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            poly = poly_div_exact(&poly, &phi_d);
        }
    }
    poly
}

/// Exact division of integer polynomials, divisor monic.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn].clone();
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    order: u32,
    /// Length deg Φ_order, reduced.
    coeffs: Vec<Q>,
}

impl Cyclotomic {
    pub fn degree_of_order(order: u32) -> usize {
        cyclotomic_polynomial(order).len() - 1
    }

    pub fn from_coeffs(order: u32, mut coeffs: Vec<Q>) -> Self {
        let phi: Vec<Q> = cyclotomic_polynomial(order).into_iter().map(Q::from).collect();
        reduce_mod(&mut coeffs, &phi);
        let deg = phi.len() - 1;
        coeffs.resize(deg, Q::zero());
        Cyclotomic { order, coeffs }
    }

    pub fn zero_of_order(order: u32) -> Self {
        Cyclotomic::from_coeffs(order, vec![])
    }

    pub fn constant(order: u32, c: Q) -> Self {
        Cyclotomic::from_coeffs(order, vec![c])
    }

    /// The primitive root ζ_order.
    pub fn zeta(order: u32) -> Self {
        Cyclotomic::from_coeffs(order, vec![Q::zero(), Q::one()])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Q> {
        if self.is_rational() {
            Some(self.coeffs.first().cloned().unwrap_or_else(Q::zero))
        } else {
            None
        }
    }

    /// Embed into ℚ(ζ_m) where self.order divides m, via ζ_k = ζ_m^{m/k}.
    pub fn promote(&self, m: u32) -> Self {
        assert!(m % self.order == 0);
        if m == self.order {
            return self.clone();
        }
        let step = (m / self.order) as usize;
        let mut coeffs = vec![Q::zero(); self.coeffs.len() * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Cyclotomic::from_coeffs(m, coeffs)
    }

    pub fn add_c(&self, other: &Self) -> Self {
        let m = lcm(self.order, other.order);
        let a = self.promote(m);
        let b = other.promote(m);
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut coeffs = vec![Q::zero(); n];
        for (i, c) in a.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Cyclotomic::from_coeffs(m, coeffs)
    }

    pub fn neg_c(&self) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul_c(&self, other: &Self) -> Self {
        let m = lcm(self.order, other.order);
        let a = self.promote(m);
        let b = other.promote(m);
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return Cyclotomic::zero_of_order(m);
        }
        let mut coeffs = vec![Q::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    coeffs[i + j] += ca * cb;
                }
            }
        }
        Cyclotomic::from_coeffs(m, coeffs)
    }

    /// Field inverse via the extended Euclidean algorithm against Φ_order.
    pub fn inv_c(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi: Vec<Q> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(Q::from)
            .collect();
        let inv = poly_mod_inverse(&self.coeffs, &phi)?;
        Some(Cyclotomic::from_coeffs(self.order, inv))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclotomic::constant(self.order, Q::one());
        for _ in 0..e {
            acc = acc.mul_c(self);
        }
        acc
    }

    /// Numeric embedding at the principal root ζ_k = e^{2πi/k}.
    pub fn embed(&self) -> (f64, f64) {
        let theta = 2.0 * PI / self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let cf = rational_to_f64(c);
            let angle = theta * i as f64;
            re += cf * angle.cos();
            im += cf * angle.sin();
        }
        (re, im)
    }
}

pub fn rational_to_f64(q: &Q) -> f64 {
    let numer = bigint_to_f64(q.numer());
    let denom = bigint_to_f64(q.denom());
    numer / denom
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    n.to_string().parse::<f64>().unwrap_or(f64::NAN)
}

fn reduce_mod(coeffs: &mut Vec<Q>, modulus: &[Q]) {
    let deg = modulus.len() - 1;
    while coeffs.len() > deg {
        let c = coeffs.pop().unwrap();
        if !c.is_zero() {
            let top = coeffs.len() - deg;
            for (j, m) in modulus.iter().take(deg).enumerate() {
                coeffs[top + j] -= &c * m;
            }
        }
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
}

/// Inverse of `a` modulo the monic polynomial `m` over ℚ.
fn poly_mod_inverse(a: &[Q], m: &[Q]) -> Option<Vec<Q>> {
    // Extended Euclid on (m, a): maintain r = s·m + t·a; at the end
    // r is a unit and t/r is the inverse of a.
    let trim = |v: &mut Vec<Q>| {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
    };
    let mut r0: Vec<Q> = m.to_vec();
    let mut r1: Vec<Q> = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut t0: Vec<Q> = vec![];
    let mut t1: Vec<Q> = vec![Q::one()];
    while !r1.is_empty() {
        let (quot, rem) = poly_divmod(&r0, &r1);
        let mut t2 = poly_sub(&t0, &poly_mul(&quot, &t1));
        trim(&mut t2);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return None; // gcd not a unit: a is a zero divisor (cannot happen mod Φ_k)
    }
    let scale = r0[0].recip();
    Some(t0.iter().map(|c| c * &scale).collect())
}

fn poly_divmod(num: &[Q], den: &[Q]) -> (Vec<Q>, Vec<Q>) {
    assert!(!den.is_empty());
    if num.len() < den.len() {
        return (vec![], num.to_vec());
    }
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn].recip();
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![Q::zero(); qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn].clone() * lead.clone();
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
        }
        quot[i] = c;
    }
    while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
        rem.pop();
    }
    (quot, rem)
}

fn poly_mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    out
}

fn poly_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len().max(b.len());
    let mut out = vec![Q::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    out
}

/// Tagged exact coefficient: a rational or an element of ℚ(ζ_k).
/// Cyclotomic values that happen to be rational normalize to `Rat`.
#[derive(Clone, Debug)]
pub enum BaseFieldElement {
    Rat(Q),
    Cyc(Cyclotomic),
}

impl BaseFieldElement {
    pub fn rational(q: Q) -> Self {
        BaseFieldElement::Rat(q)
    }

    pub fn integer(n: i64) -> Self {
        BaseFieldElement::Rat(qi(n))
    }

    pub fn zeta(order: u32) -> Self {
        BaseFieldElement::Cyc(Cyclotomic::zeta(order)).normalize()
    }

    pub fn normalize(self) -> Self {
        match self {
            BaseFieldElement::Cyc(c) => match c.as_rational() {
                Some(q) => BaseFieldElement::Rat(q),
                None => BaseFieldElement::Cyc(c),
            },
            r => r,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            BaseFieldElement::Rat(q) => q.is_zero(),
            BaseFieldElement::Cyc(c) => c.is_zero(),
        }
    }

    fn as_cyc(&self, order: u32) -> Cyclotomic {
        match self {
            BaseFieldElement::Rat(q) => Cyclotomic::constant(order, q.clone()),
            BaseFieldElement::Cyc(c) => c.clone(),
        }
    }

    fn binop(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Self {
        match (self, other) {
            (BaseFieldElement::Rat(_), BaseFieldElement::Rat(_)) => unreachable!(),
            _ => {
                let order = match (self, other) {
                    (BaseFieldElement::Cyc(a), BaseFieldElement::Cyc(b)) => lcm(a.order, b.order),
                    (BaseFieldElement::Cyc(a), _) => a.order,
                    (_, BaseFieldElement::Cyc(b)) => b.order,
                    _ => 1,
                };
                BaseFieldElement::Cyc(f(&self.as_cyc(order), &other.as_cyc(order))).normalize()
            }
        }
    }

    pub fn inv(&self) -> Option<Self> {
        match self {
            BaseFieldElement::Rat(q) => {
                if q.is_zero() {
                    None
                } else {
                    Some(BaseFieldElement::Rat(q.recip()))
                }
            }
            BaseFieldElement::Cyc(c) => c.inv_c().map(|i| BaseFieldElement::Cyc(i).normalize()),
        }
    }

    /// Numeric embedding; rationals map to the real axis.
    pub fn embed(&self) -> (f64, f64) {
        match self {
            BaseFieldElement::Rat(q) => (rational_to_f64(q), 0.0),
            BaseFieldElement::Cyc(c) => c.embed(),
        }
    }

    pub fn abs_numeric(&self) -> f64 {
        let (re, im) = self.embed();
        re.hypot(im)
    }
}

impl PartialEq for BaseFieldElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (BaseFieldElement::Rat(a), BaseFieldElement::Rat(b)) => a == b,
            (BaseFieldElement::Cyc(a), BaseFieldElement::Cyc(b)) => {
                let m = lcm(a.order(), b.order());
                a.promote(m) == b.promote(m)
            }
            (BaseFieldElement::Rat(a), BaseFieldElement::Cyc(b))
            | (BaseFieldElement::Cyc(b), BaseFieldElement::Rat(a)) => {
                b.as_rational().map_or(false, |q| q == *a)
            }
        }
    }
}

impl Eq for BaseFieldElement {}

impl Add for BaseFieldElement {
    type Output = BaseFieldElement;
    fn add(self, rhs: Self) -> Self {
        match (&self, &rhs) {
            (BaseFieldElement::Rat(a), BaseFieldElement::Rat(b)) => BaseFieldElement::Rat(a + b),
            _ => self.binop(&rhs, |a, b| a.add_c(b)),
        }
    }
}

impl Sub for BaseFieldElement {
    type Output = BaseFieldElement;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for BaseFieldElement {
    type Output = BaseFieldElement;
    fn mul(self, rhs: Self) -> Self {
        match (&self, &rhs) {
            (BaseFieldElement::Rat(a), BaseFieldElement::Rat(b)) => BaseFieldElement::Rat(a * b),
            _ => self.binop(&rhs, |a, b| a.mul_c(b)),
        }
    }
}

impl Neg for BaseFieldElement {
    type Output = BaseFieldElement;
    fn neg(self) -> Self {
        match self {
            BaseFieldElement::Rat(q) => BaseFieldElement::Rat(-q),
            BaseFieldElement::Cyc(c) => BaseFieldElement::Cyc(c.neg_c()),
        }
    }
}

impl Zero for BaseFieldElement {
    fn zero() -> Self {
        BaseFieldElement::Rat(Q::zero())
    }
    fn is_zero(&self) -> bool {
        BaseFieldElement::is_zero(self)
    }
}

impl One for BaseFieldElement {
    fn one() -> Self {
        BaseFieldElement::Rat(Q::one())
    }
}

impl fmt::Display for BaseFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseFieldElement::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            BaseFieldElement::Cyc(c) => {
                write!(f, "poly(z; ")?;
                for (i, co) in c.coeffs().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    if co.denom().is_one() {
                        write!(f, "{}", co.numer())?;
                    } else {
                        write!(f, "{}/{}", co.numer(), co.denom())?;
                    }
                }
                write!(f, ")@{}", c.order())
            }
        }
    }
}
