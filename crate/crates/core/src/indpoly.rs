use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Integer polynomial, coefficients ascending, no trailing zeros.
/// The zero polynomial is the empty coefficient list. All arithmetic is
/// exact; coefficient overflow panics instead of wrapping.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> IntPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> IntPolynomial {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial { coeffs: vec![1] }
    }

    /// c0 + c1 x for quick construction of linear factors.
    pub fn linear(c0: i128, c1: i128) -> IntPolynomial {
        IntPolynomial::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                self.coeff(k)
                    .checked_add(other.coeff(k))
                    .expect("coefficient overflow")
            })
            .collect();
        IntPolynomial::new(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i128) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|&a| a.checked_mul(c).expect("coefficient overflow"))
                .collect(),
        )
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).expect("coefficient overflow");
                coeffs[i + j] = coeffs[i + j].checked_add(t).expect("coefficient overflow");
            }
        }
        IntPolynomial::new(coeffs)
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![0i128; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPolynomial {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval(&self, x: i128) -> i128 {
        let mut acc = 0i128;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .expect("evaluation overflow");
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c.checked_mul(k as i128).expect("coefficient overflow"))
            .collect();
        IntPolynomial::new(coeffs)
    }

    /// Exact division; any remainder is an error. Used where the math
    /// guarantees divisibility, so a failure means a real bug upstream.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision {
                divisor: divisor.to_string(),
            });
        }
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len();
        if rem.len() < d {
            return Err(Error::InexactDivision {
                divisor: divisor.to_string(),
            });
        }
        let lead = divisor.coeffs[d - 1];
        let mut quot = vec![0i128; rem.len() - d + 1];
        for k in (0..quot.len()).rev() {
            let num = rem[k + d - 1];
            if num % lead != 0 {
                return Err(Error::InexactDivision {
                    divisor: divisor.to_string(),
                });
            }
            let q = num / lead;
            quot[k] = q;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= q.checked_mul(dc).expect("coefficient overflow");
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision {
                divisor: divisor.to_string(),
            });
        }
        Ok(IntPolynomial::new(quot))
    }

    pub fn div_exact_scalar(&self, c: i128) -> Result<IntPolynomial> {
        if c == 0 || self.coeffs.iter().any(|&a| a % c != 0) {
            return Err(Error::InexactDivision {
                divisor: c.to_string(),
            });
        }
        Ok(IntPolynomial::new(
            self.coeffs.iter().map(|&a| a / c).collect(),
        ))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Independence polynomial P_G(x) = Σ g_i x^i where g_i counts the
/// independent sets of size i. Deletion-contraction on a maximum-degree
/// pivot, memoized on the induced-subgraph mask of the original graph.
pub fn independence_polynomial(g: &Graph) -> IntPolynomial {
    let mut memo: HashMap<u32, IntPolynomial> = HashMap::new();
    indpoly_rec(g, g.vertices(), &mut memo)
}

fn indpoly_rec(
    g: &Graph,
    avail: VertexSet,
    memo: &mut HashMap<u32, IntPolynomial>,
) -> IntPolynomial {
    if let Some(p) = memo.get(&avail.0) {
        return p.clone();
    }
    let pivot = avail
        .iter()
        .max_by_key(|&v| (g.neighbors(v).0 & avail.0).count_ones());
    let result = match pivot {
        None => IntPolynomial::one(),
        Some(v) if g.neighbors(v).0 & avail.0 == 0 => {
            // edgeless within avail: (1+x)^m
            IntPolynomial::linear(1, 1).pow(avail.len() as u32)
        }
        Some(v) => {
            let without = indpoly_rec(g, avail.without(v), memo);
            let contracted = indpoly_rec(g, avail.minus(g.closed_neighborhood(v)), memo);
            without.add(&contracted.shift(1))
        }
    };
    memo.insert(avail.0, result.clone());
    result
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Path,
    Cycle,
}

/// P_{P_n} by the recurrence P_n = P_{n-1} + x P_{n-2} (P_0 = 1), or
/// P_{C_n} = P_{P_{n-1}} + x P_{P_{n-3}} for n >= 3.
pub fn family_poly(kind: FamilyKind, n: usize) -> Result<IntPolynomial> {
    match kind {
        FamilyKind::Path => Ok(path_polys(n).pop().expect("nonempty by construction")),
        FamilyKind::Cycle => {
            if n < 3 {
                return Err(Error::FamilyRange {
                    family: "cycle".into(),
                    min: 3,
                    n,
                });
            }
            let paths = path_polys(n - 1);
            Ok(paths[n - 1].add(&paths[n - 3].shift(1)))
        }
    }
}

/// P_{P_0}..P_{P_n}.
fn path_polys(n: usize) -> Vec<IntPolynomial> {
    let mut polys = vec![IntPolynomial::one(), IntPolynomial::linear(1, 1)];
    for m in 2..=n {
        let next = polys[m - 1].add(&polys[m - 2].shift(1));
        polys.push(next);
    }
    polys.truncate(n + 1);
    polys
}

/// Closed forms via s = √(1+4x): with E = Σ C(n,2j)(1+4x)^j and
/// O = Σ C(n,2j+1)(1+4x)^j (so (1±s)^n = E ± sO),
///   P_{P_n} = (E + (1+2x) O) / 2^n,
///   P_{C_n} = 2 E / 2^n.
/// Both divisions must be exact; a remainder aborts loudly.
pub fn closed_form_poly(kind: FamilyKind, n: usize) -> Result<IntPolynomial> {
    if kind == FamilyKind::Cycle && n < 3 {
        return Err(Error::FamilyRange {
            family: "cycle".into(),
            min: 3,
            n,
        });
    }
    let base = IntPolynomial::new(vec![1, 4]); // 1 + 4x
    let mut even = IntPolynomial::zero();
    let mut odd = IntPolynomial::zero();
    let mut binom = 1i128; // C(n, k)
    let mut power = IntPolynomial::one(); // (1+4x)^floor(k/2)
    for k in 0..=n {
        let term = power.scale(binom);
        if k % 2 == 0 {
            even = even.add(&term);
        } else {
            odd = odd.add(&term);
            power = power.mul(&base);
        }
        binom = binom
            .checked_mul((n - k) as i128)
            .expect("binomial overflow")
            / (k as i128 + 1);
    }
    let two_n = 2i128.checked_pow(n as u32).expect("2^n overflow");
    match kind {
        FamilyKind::Path => even
            .add(&IntPolynomial::new(vec![1, 2]).mul(&odd))
            .div_exact_scalar(two_n),
        FamilyKind::Cycle => even.scale(2).div_exact_scalar(two_n),
    }
}

/// Largest M with (1+x)^M dividing p; equivalently the multiplicity of
/// -1 as a root. M = 0 exactly when p(-1) != 0.
pub fn multiplicity_at_minus_one(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let one_plus_x = IntPolynomial::linear(1, 1);
    let mut q = p.clone();
    let mut m = 0;
    while q.eval(-1) == 0 {
        q = q.div_exact(&one_plus_x)?;
        m += 1;
    }
    Ok(m)
}

/// The numbers the a-invariant story is made of: α(G), the multiplicity
/// M(G) of -1 in P_G, a = -M, and deg h = α - M.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AInvariantReport {
    pub alpha: usize,
    pub multiplicity: usize,
    pub a: i64,
    pub hdeg: usize,
}

pub fn a_invariant(g: &Graph) -> Result<AInvariantReport> {
    let p = independence_polynomial(g);
    let alpha = g.independence_number();
    debug_assert_eq!(p.degree(), Some(alpha));
    let m = multiplicity_at_minus_one(&p)?;
    let h = h_polynomial(g);
    let hdeg = h.degree().expect("h(1) > 0, h is nonzero");
    debug_assert_eq!(hdeg, alpha - m);
    Ok(AInvariantReport {
        alpha,
        multiplicity: m,
        a: -(m as i64),
        hdeg,
    })
}

/// Numerator of the Hilbert series of the Stanley-Reisner ring over
/// (1-t)^α: h(t) = Σ_i g_i t^i (1-t)^(α-i) with g_i the independent-set
/// counts. deg h = α - M and h(1) = g_α > 0.
pub fn h_polynomial(g: &Graph) -> IntPolynomial {
    let p = independence_polynomial(g);
    h_from_indpoly(&p)
}

pub fn h_from_indpoly(p: &IntPolynomial) -> IntPolynomial {
    let alpha = p.degree().expect("independence polynomial is nonzero");
    let one_minus_t = IntPolynomial::linear(1, -1);
    let mut h = IntPolynomial::zero();
    for i in 0..=alpha {
        let term = one_minus_t.pow((alpha - i) as u32).scale(p.coeff(i)).shift(i);
        h = h.add(&term);
    }
    h
}

/// Joint report for the full-suspension Hilbert identity
/// h_Ĝ(t) = h_G(t) + t(1-t)^(α-1) and the a-invariant comparison it
/// implies: a < 0 forces â = 0; a = 0 forces â <= 0; and whenever the
/// leading coefficient [t^α]h_G differs from (-1)^α, â = 0.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HilbertSuspensionReport {
    pub alpha: usize,
    pub a_base: i64,
    pub a_suspension: i64,
    pub identity_holds: bool,
    pub comparison_holds: bool,
    pub leading_forces_zero: Option<bool>,
}

impl HilbertSuspensionReport {
    pub fn holds(&self) -> bool {
        self.identity_holds && self.comparison_holds && self.leading_forces_zero.unwrap_or(true)
    }
}

pub fn hilbert_full_suspension_check(g: &Graph) -> Result<HilbertSuspensionReport> {
    let suspended = g.suspend(g.vertices())?;
    let alpha = g.independence_number();
    debug_assert_eq!(alpha, suspended.independence_number());
    let h_base = h_polynomial(g);
    let h_hat = h_polynomial(&suspended);
    let correction = IntPolynomial::linear(1, -1)
        .pow(alpha.saturating_sub(1) as u32)
        .shift(1);
    let identity_holds = h_hat == h_base.add(&correction);

    let a_base = a_invariant(g)?.a;
    let a_hat = a_invariant(&suspended)?.a;
    let comparison_holds = match a_base {
        a if a < 0 => a_hat == 0,
        0 => a_hat <= 0,
        _ => unreachable!("a = -M is never positive"),
    };
    let sign = if alpha % 2 == 0 { 1 } else { -1 };
    let leading_forces_zero = if a_base == 0 && h_base.coeff(alpha) != sign {
        Some(a_hat == 0)
    } else {
        None
    };
    Ok(HilbertSuspensionReport {
        alpha,
        a_base,
        a_suspension: a_hat,
        identity_holds,
        comparison_holds,
        leading_forces_zero,
    })
}

/// a_m = P_{P_m}(-1) and b_m = P'_{P_m}(-1), m = 0..=m_max, each computed
/// two ways: by the recurrences a_m = a_{m-1} - a_{m-2} (a 6-periodic
/// sequence) and b_m = b_{m-1} + a_{m-2} - b_{m-2}, and independently by
/// evaluating the actual polynomials. A disagreement is an error.
pub fn path_minus_one_sequences(m_max: usize) -> Result<(Vec<i128>, Vec<i128>)> {
    let mut a = vec![1i128, 0];
    let mut b = vec![0i128, 1];
    for m in 2..=m_max {
        a.push(a[m - 1] - a[m - 2]);
        b.push(b[m - 1] + a[m - 2] - b[m - 2]);
    }
    a.truncate(m_max + 1);
    b.truncate(m_max + 1);
    let polys = path_polys(m_max);
    for m in 0..=m_max {
        if polys[m].eval(-1) != a[m] || polys[m].derivative().eval(-1) != b[m] {
            return Err(Error::Unsupported(format!(
                "path sequence recurrences disagree with direct evaluation at m = {m}"
            )));
        }
    }
    Ok((a, b))
}
