//! Univariate polynomials over `F_q`: instrumented synthetic division, the
//! Euclidean remainder chain with exact operation counters, genericity, and
//! resultants (remainder-sequence recursion checked against a Sylvester
//! determinant oracle).
//!
//! Coefficients are stored ascending (index `i` holds the coefficient of
//! `T^i`) with no trailing zeros; the zero polynomial has an empty vector and
//! `degree() == None`.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::field::{Elem, PrimeField};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn zero(field: PrimeField) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: Elem) -> Poly {
        let mut p = Poly { field, coeffs: vec![c % field.q()] };
        p.trim();
        p
    }

    /// From canonical residues, ascending. Trailing zeros are trimmed.
    pub fn from_coeffs(field: PrimeField, coeffs: Vec<Elem>) -> Poly {
        debug_assert!(coeffs.iter().all(|&c| c < field.q()));
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    /// From arbitrary signed integers, reduced mod q.
    pub fn from_i128s(field: PrimeField, coeffs: &[i128]) -> Poly {
        Poly::from_coeffs(field, coeffs.iter().map(|&c| field.reduce_i128(c)).collect())
    }

    /// `c * T^n`.
    pub fn monomial(field: PrimeField, c: Elem, n: usize) -> Poly {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = c % field.q();
        Poly::from_coeffs(field, coeffs)
    }

    /// The monic polynomial with the given roots (with multiplicity).
    pub fn from_roots(field: PrimeField, roots: &[Elem]) -> Poly {
        let mut p = Poly::one(field);
        for &r in roots {
            p = p.mul(&Poly::from_coeffs(field, vec![field.neg(r % field.q()), 1]));
        }
        p
    }

    /// Parses the text format: a comma-separated ascending coefficient list
    /// of integers, reduced mod q. `"5,2,0,1"` over `F_7` is `T^3 + 2T + 5`.
    pub fn parse(field: PrimeField, text: &str) -> Result<Poly, Error> {
        let mut coeffs = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let v: i128 = part
                .parse()
                .map_err(|_| Error::ParseError(format!("bad coefficient {part:?}")))?;
            coeffs.push(field.reduce_i128(v));
        }
        Ok(Poly::from_coeffs(field, coeffs))
    }

    /// Inverse of [`Poly::parse`]: ascending comma-separated canonical
    /// residues; the zero polynomial formats as `"0"`.
    pub fn format(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `None` is the degree of the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading_coeff(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    /// Coefficient of `T^i` (zero beyond the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::from_coeffs(f, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, coeffs)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn make_monic(&self) -> Poly {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = self.field;
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        if self.coeffs.len() <= 1 {
            return Poly::zero(f);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| f.mul(c, (i as u64 + 1) % f.q()))
            .collect();
        Poly::from_coeffs(f, coeffs)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "Poly(q={}, [{}])", self.field.q(), self.format())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(fm, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(fm, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(fm, "{c}")?,
                (1, 1) => write!(fm, "T")?,
                (1, _) => write!(fm, "{c}T")?,
                (_, 1) => write!(fm, "T^{i}")?,
                (_, _) => write!(fm, "{c}T^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// Operation counts of one synthetic division, per the cost model:
/// `fielddiv = m - n + 1` and `addmul = n(m - n + 1)` for degrees `m >= n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DivisionCounts {
    pub fielddiv: u64,
    pub addmul: u64,
}

/// Synthetic (coefficient-array) division: `f1 = quotient * f2 + remainder`
/// with `deg remainder < deg f2`. If `deg f1 < deg f2` the quotient is zero
/// and both counts are zero.
pub fn synthetic_division(f1: &Poly, f2: &Poly) -> Result<(Poly, Poly, DivisionCounts), Error> {
    if f2.is_zero() {
        return Err(Error::DivisionByZeroPoly);
    }
    let field = f1.field;
    let (m, n) = match (f1.degree(), f2.degree()) {
        (None, _) => return Ok((Poly::zero(field), Poly::zero(field), DivisionCounts::default())),
        (Some(m), Some(n)) if m < n => {
            return Ok((Poly::zero(field), f1.clone(), DivisionCounts::default()))
        }
        (Some(m), Some(n)) => (m, n),
    };
    let mut rem = f1.coeffs.clone();
    let divisor = &f2.coeffs;
    let counts = rem_in_place_counts(field, &mut rem, divisor, m, n, Some(m - n));
    let mut quotient = vec![0; m - n + 1];
    // rem_in_place_counts stores quotient coefficients above index n.
    quotient.copy_from_slice(&rem[n..=m]);
    rem.truncate(n);
    Ok((
        Poly::from_coeffs(field, quotient),
        Poly::from_coeffs(field, rem),
        counts,
    ))
}

/// In-place division of `a` (degree `m`) by `divisor` (degree `n <= m`):
/// afterwards `a[0..n]` holds the remainder and `a[n..=m]` the quotient.
/// Returns the model operation counts.
fn rem_in_place_counts(
    field: PrimeField,
    a: &mut [Elem],
    divisor: &[Elem],
    m: usize,
    n: usize,
    _keep_quotient: Option<usize>,
) -> DivisionCounts {
    let lc_inv = field.inv(divisor[n]).expect("nonzero divisor");
    for j in (0..=m - n).rev() {
        let c = field.mul(a[n + j], lc_inv);
        if c != 0 {
            for (i, &b) in divisor.iter().enumerate().take(n) {
                a[i + j] = field.sub(a[i + j], field.mul(c, b));
            }
        }
        a[n + j] = c;
    }
    DivisionCounts {
        fielddiv: (m - n + 1) as u64,
        addmul: (n * (m - n + 1)) as u64,
    }
}

/// The full record of one Euclidean run on `(g, f)`: quotients `q_1..q_{h+1}`,
/// the nonzero remainders `r_1..r_h`, their degrees, the monic gcd, and the
/// exact operation counters. The final exactness division is counted; the
/// monic normalization of the gcd is not (the generic-case totals
/// `d+1`, `e+d+1`, `de` hold exactly under this convention).
#[derive(Clone, Debug, Serialize)]
pub struct EuclidTrace {
    pub q: u64,
    pub g: Poly,
    pub f: Poly,
    pub quotients: Vec<Poly>,
    pub remainders: Vec<Poly>,
    pub degree_sequence: Vec<usize>,
    pub gcd: Poly,
    pub gcd_degree: usize,
    pub t_polydiv: u64,
    pub t_fielddiv: u64,
    pub t_addmul: u64,
}

impl EuclidTrace {
    /// Number of nonzero remainders.
    pub fn h(&self) -> usize {
        self.remainders.len()
    }

    /// Full-length chain with degrees dropping by exactly one each step.
    pub fn is_generic(&self) -> bool {
        self.h() == self.f.degree().unwrap_or(0)
    }
}

fn check_euclid_inputs(g: &Poly, f: &Poly) -> Result<(usize, usize), Error> {
    if !g.is_monic() || !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let e = g.degree().expect("monic is nonzero");
    let d = f.degree().expect("monic is nonzero");
    if !(e > d && d >= 1) {
        return Err(Error::DegreeOrder { e, d });
    }
    Ok((e, d))
}

/// Runs the Euclidean algorithm on monic `(g, f)` with `deg g > deg f >= 1`,
/// recording everything.
pub fn euclid_trace(g: &Poly, f: &Poly) -> Result<EuclidTrace, Error> {
    check_euclid_inputs(g, f)?;
    let mut trace = EuclidTrace {
        q: g.field().q(),
        g: g.clone(),
        f: f.clone(),
        quotients: Vec::new(),
        remainders: Vec::new(),
        degree_sequence: Vec::new(),
        gcd: Poly::zero(g.field()),
        gcd_degree: 0,
        t_polydiv: 0,
        t_fielddiv: 0,
        t_addmul: 0,
    };
    let mut a = g.clone();
    let mut b = f.clone();
    loop {
        let (quo, rem, counts) = synthetic_division(&a, &b)?;
        trace.t_polydiv += 1;
        trace.t_fielddiv += counts.fielddiv;
        trace.t_addmul += counts.addmul;
        trace.quotients.push(quo);
        if rem.is_zero() {
            trace.gcd = b.make_monic();
            trace.gcd_degree = b.degree().expect("nonzero");
            break;
        }
        trace.degree_sequence.push(rem.degree().expect("nonzero"));
        trace.remainders.push(rem.clone());
        a = b;
        b = rem;
    }
    Ok(trace)
}

/// Counter-only view of one Euclidean run (what the census and the sampler
/// fold over).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TraceSummary {
    pub h: usize,
    pub gcd_degree: usize,
    pub t_polydiv: u64,
    pub t_fielddiv: u64,
    pub t_addmul: u64,
    pub generic: bool,
}

/// Same run as [`euclid_trace`] without materializing quotients or remainders.
pub fn trace_summary(g: &Poly, f: &Poly) -> Result<TraceSummary, Error> {
    let (_, d) = check_euclid_inputs(g, f)?;
    let field = g.field();
    let mut a = g.coeffs.clone();
    let mut b = f.coeffs.clone();
    let mut s = TraceSummary::default();
    loop {
        let m = a.len() - 1;
        let n = b.len() - 1;
        let counts = rem_in_place_counts(field, &mut a, &b, m, n, None);
        a.truncate(n);
        while a.last() == Some(&0) {
            a.pop();
        }
        s.t_polydiv += 1;
        s.t_fielddiv += counts.fielddiv;
        s.t_addmul += counts.addmul;
        if a.is_empty() {
            s.gcd_degree = n;
            break;
        }
        s.h += 1;
        std::mem::swap(&mut a, &mut b);
    }
    s.generic = s.h == d;
    Ok(s)
}

/// True iff the remainder sequence of `(g, f)` has full length `deg f`, i.e.
/// degrees drop by exactly one each step down to zero.
pub fn is_generic(g: &Poly, f: &Poly) -> Result<bool, Error> {
    Ok(trace_summary(g, f)?.generic)
}

/// Plain polynomial gcd (monic), no instrumentation, any nonzero inputs.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r, _) = synthetic_division(&a, &b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    a.make_monic()
}

/// Resultant by the remainder-sequence recursion
/// `res(a, b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r)`.
/// Normative correctness is agreement with [`resultant_sylvester`].
pub fn resultant_euclid(g: &Poly, f: &Poly) -> Result<Elem, Error> {
    if g.is_zero() || f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = g.field();
    let mut a = g.clone();
    let mut b = f.clone();
    let mut res: Elem = 1;
    loop {
        let m = a.degree().expect("nonzero");
        let n = b.degree().expect("nonzero");
        if n == 0 {
            return Ok(field.mul(res, field.pow(b.coeff(0), m as u64)));
        }
        if m < n {
            if m & n & 1 == 1 {
                res = field.neg(res);
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let (_, r, _) = synthetic_division(&a, &b)?;
        if r.is_zero() {
            return Ok(0);
        }
        if m & n & 1 == 1 {
            res = field.neg(res);
        }
        res = field.mul(
            res,
            field.pow(b.leading_coeff().expect("nonzero"), (m - r.degree().expect("nonzero")) as u64),
        );
        a = b;
        b = r;
    }
}

/// Resultant as the determinant of the `(deg g + deg f)^2` Sylvester matrix,
/// by Gaussian elimination over `F_q`. This is the oracle for
/// [`resultant_euclid`].
pub fn resultant_sylvester(g: &Poly, f: &Poly) -> Result<Elem, Error> {
    if g.is_zero() || f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = g.field();
    let m = g.degree().expect("nonzero");
    let n = f.degree().expect("nonzero");
    let size = m + n;
    if size == 0 {
        return Ok(1);
    }
    let mut mat = vec![vec![0 as Elem; size]; size];
    for row in 0..n {
        for (idx, col) in (row..row + m + 1).enumerate() {
            mat[row][col] = g.coeff(m - idx);
        }
    }
    for row in 0..m {
        for (idx, col) in (row..row + n + 1).enumerate() {
            mat[n + row][col] = f.coeff(n - idx);
        }
    }
    Ok(crate::linalg::det_in_place(field, &mut mat))
}
