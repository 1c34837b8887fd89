//! Exact counts and bound polynomials over arbitrary-precision integers.
//!
//! `gaussian(n, d, q)` is the number of `d`-dimensional subspaces of an
//! `n`-dimensional GF(q)-vector space. `s_count(l, k, d, n, q)` is the number
//! of projective `d`-subspaces of PG(n,q) that contain a fixed `k`-subspace and
//! are skew to a fixed `l`-subspace (the two fixed subspaces being skew):
//!
//! ```text
//! s(l,k,d,n) = q^((l+1)(d-k)) * gaussian(n-k-l-1, d-k)
//! s(k,d,n)   = s(-1,k,d,n)        // contain a k-subspace
//! s(d,n)     = s(-1,-1,d,n)       // all d-subspaces of PG(n,q)
//! s(n)       = s(0,n)             // points of PG(n,q)
//! ```
//!
//! Everything that appears as a closed form elsewhere in the crate is listed in
//! the [`FormulaRegistry`], which the CLI `count` command fronts.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// An exact non-negative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormulaValue(pub BigUint);

impl FormulaValue {
    pub fn zero() -> Self {
        Self(BigUint::zero())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for FormulaValue {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl fmt::Display for FormulaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl PartialEq<u64> for FormulaValue {
    fn eq(&self, other: &u64) -> bool {
        self.to_u64() == Some(*other)
    }
}

/// JSON number when it fits in `u64`, decimal string otherwise.
impl Serialize for FormulaValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

fn qpow(q: u32, e: u64) -> BigUint {
    num_traits::pow(BigUint::from(q), e as usize)
}

/// Gaussian coefficient `[n choose d]_q`; zero unless `0 <= d <= n`.
pub fn gaussian(n: i64, d: i64, q: u32) -> FormulaValue {
    if d < 0 || d > n {
        return FormulaValue::zero();
    }
    let one = BigUint::one();
    let mut acc = BigUint::one();
    for i in 1..=d {
        acc *= qpow(q, (n + 1 - i) as u64) - &one;
        let den = qpow(q, i as u64) - &one;
        let rem = &acc % &den;
        assert!(rem.is_zero(), "non-integral partial product in gaussian({n},{d},{q})");
        acc /= den;
    }
    FormulaValue(acc)
}

/// `s(l,k,d,n)`: `d`-subspaces of PG(n,q) through a `k`-subspace and skew to an `l`-subspace.
pub fn s_count(l: i64, k: i64, d: i64, n: i64, q: u32) -> FormulaValue {
    if d < k {
        return FormulaValue::zero();
    }
    let g = gaussian(n - k - l - 1, d - k, q);
    if g.0.is_zero() || l < -1 {
        return g;
    }
    FormulaValue(g.0 * qpow(q, ((l + 1) * (d - k)) as u64))
}

/// `s(k,d,n)`.
pub fn s_through(k: i64, d: i64, n: i64, q: u32) -> FormulaValue {
    s_count(-1, k, d, n, q)
}

/// `s(d,n)`: number of `d`-subspaces of PG(n,q).
pub fn s_subspaces(d: i64, n: i64, q: u32) -> FormulaValue {
    s_count(-1, -1, d, n, q)
}

/// `s(n)`: number of points of PG(n,q).
pub fn s_points(n: i64, q: u32) -> FormulaValue {
    s_subspaces(0, n, q)
}

/// Evaluates an integer polynomial given by coefficients of `q^deg, ..., q^0`.
pub fn poly(q: u32, coeffs_high_first: &[i64]) -> FormulaValue {
    let qb = BigInt::from(q);
    let v = coeffs_high_first.iter().fold(BigInt::zero(), |acc, &c| acc * &qb + BigInt::from(c));
    FormulaValue(v.to_biguint().expect("polynomial value is negative"))
}

/// Number of type-{2,3} flags of PG(6,q).
pub fn flag_count(q: u32) -> FormulaValue {
    FormulaValue(gaussian(7, 4, q).0 * gaussian(4, 3, q).0)
}

/// `[6 4][4 3] + [5 3] q^3`.
pub fn independence_number(q: u32) -> FormulaValue {
    FormulaValue(gaussian(6, 4, q).0 * gaussian(4, 3, q).0 + gaussian(5, 3, q).0 * qpow(q, 3))
}

/// Expanded degree-11 polynomial of the same value.
pub fn independence_number_expanded(q: u32) -> FormulaValue {
    poly(q, &[1, 2, 5, 7, 10, 11, 11, 9, 7, 4, 2, 1])
}

/// `s(3,5)·s(3) + |family|·q³`, the size of the hyperplane construction with a plane family.
pub fn lambda_hyperplane_size(family_size: u64, q: u32) -> FormulaValue {
    FormulaValue(s_subspaces(3, 5, q).0 * s_points(3, q).0 + BigUint::from(family_size) * qpow(q, 3))
}

/// `(s(3)−s(u))² + s(0,1,u+1)(s(1,2,6) − s(1,2,u+1)) + s(0,2,u+1)`: planes through a
/// point meeting two solids, `u` being the dimension of the projection trace.
pub fn two_solid_plane_count(u: i64, q: u32) -> FormulaValue {
    let [a, b, c] = two_solid_plane_parts(u, q);
    FormulaValue(a.0 + b.0 + c.0)
}

/// The three summands of [`two_solid_plane_count`]: planes meeting the join
/// `V` of the trace and the point only in the point, in a line, and inside `V`.
pub fn two_solid_plane_parts(u: i64, q: u32) -> [FormulaValue; 3] {
    let s3 = BigInt::from(s_points(3, q).0);
    let su = BigInt::from(s_points(u, q).0);
    let diff = s3 - su;
    let lines_on_p = BigInt::from(s_through(0, 1, u + 1, q).0);
    let planes_on_line = BigInt::from(s_through(1, 2, 6, q).0) - BigInt::from(s_through(1, 2, u + 1, q).0);
    let planes_in_v = BigInt::from(s_through(0, 2, u + 1, q).0);
    let nat = |x: BigInt| FormulaValue(x.to_biguint().expect("count is non-negative"));
    [nat(&diff * &diff), nat(lines_on_p * planes_on_line), nat(planes_in_v)]
}

/// `3q^6+6q^5+7q^4+4q^3+2q^2+q+1`: solids on a point meeting three planes through another point.
pub fn a0b3_bound(q: u32) -> FormulaValue {
    poly(q, &[3, 6, 7, 4, 2, 1, 1])
}

/// `2q^6+2q^5+3q^4+2q^3+2q^2+q+1`, the uniform bound on [`two_solid_plane_count`].
pub fn two_solid_plane_bound(q: u32) -> FormulaValue {
    poly(q, &[2, 2, 3, 2, 2, 1, 1])
}

/// `q^4-q^2+2q+1`.
pub fn chromatic_lower(q: u32) -> FormulaValue {
    poly(q, &[1, 0, -1, 2, 1])
}

/// `q^4+q^3+q^2+1`.
pub fn chromatic_upper(q: u32) -> FormulaValue {
    poly(q, &[1, 1, 1, 0, 1])
}

/// Common degree of the flag Kneser graph: `s(3,-1,2,6) · s(2,2,3,6) = q^15`.
pub fn kneser_degree(q: u32) -> FormulaValue {
    FormulaValue(s_count(3, -1, 2, 6, q).0 * s_count(2, 2, 3, 6, q).0)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("unknown formula {name:?}; available: {available}")]
    Unknown { name: String, available: String },
    #[error("formula {name} takes parameters ({expected}), got {got} values")]
    Arity { name: String, expected: String, got: usize },
    #[error("formula {name}: {msg}")]
    BadParam { name: String, msg: String },
    #[error("cannot parse formula request {0:?}")]
    Parse(String),
}

type Evaluator = fn(u32, &[i64]) -> Result<FormulaValue, String>;

/// One registered closed form.
#[derive(Clone)]
pub struct Formula {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub anchor: &'static str,
    eval: Evaluator,
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Formula").field("name", &self.name).field("params", &self.params).finish()
    }
}

impl Formula {
    pub fn eval(&self, q: u32, args: &[i64]) -> Result<FormulaValue, FormulaError> {
        if args.len() != self.params.len() {
            return Err(FormulaError::Arity {
                name: self.name.to_string(),
                expected: self.params.join(","),
                got: args.len(),
            });
        }
        (self.eval)(q, args).map_err(|msg| FormulaError::BadParam { name: self.name.to_string(), msg })
    }
}

fn nonneg(x: i64, what: &str) -> Result<u64, String> {
    u64::try_from(x).map_err(|_| format!("{what} must be non-negative"))
}

/// Name → formula table.
#[derive(Debug, Clone)]
pub struct FormulaRegistry {
    entries: BTreeMap<&'static str, Formula>,
}

impl Default for FormulaRegistry {
    fn default() -> Self {
        Self::new()
    }
}

macro_rules! formula {
    ($name:literal, [$($p:literal),*], $anchor:literal, $f:expr) => {
        Formula { name: $name, params: &[$($p),*], anchor: $anchor, eval: $f }
    };
}

impl FormulaRegistry {
    pub fn new() -> Self {
        let all = vec![
            formula!("gaussian", ["n", "d"], "number of d-dim subspaces of an n-dim GF(q)-space",
                |q, a| Ok(gaussian(a[0], a[1], q))),
            formula!("s_count", ["l", "k", "d", "n"],
                "d-subspaces of PG(n,q) through a k-subspace and skew to an l-subspace",
                |q, a| Ok(s_count(a[0], a[1], a[2], a[3], q))),
            formula!("complement_count", ["d", "n"],
                "complements of a d-dim subspace in an n-dim GF(q)-space: q^(d(n-d))",
                |q, a| {
                    if a[0] < 0 || a[0] > a[1] {
                        return Err("need 0 <= d <= n".into());
                    }
                    Ok(FormulaValue(qpow(q, (a[0] * (a[1] - a[0])) as u64)))
                }),
            formula!("flag_count", [], "type-{2,3} flags of PG(6,q): [7 4][4 3]",
                |q, _| Ok(flag_count(q))),
            formula!("kneser_degree", [], "vertex degree of the flag Kneser graph: s(3,-1,2,6) s(2,2,3,6)",
                |q, _| Ok(kneser_degree(q))),
            formula!("independence_number", [],
                "independence number of the plane-solid flag Kneser graph: [6 4][4 3] + [5 3] q^3",
                |q, _| Ok(independence_number(q))),
            formula!("independence_number_expanded", [],
                "q^11+2q^10+5q^9+7q^8+10q^7+11q^6+11q^5+9q^4+7q^3+4q^2+2q+1",
                |q, _| Ok(independence_number_expanded(q))),
            formula!("lambda_hyperplane", ["family_size"],
                "size of the hyperplane construction with a plane family: s(3,5) s(3) + |family| q^3",
                |q, a| Ok(lambda_hyperplane_size(nonneg(a[0], "family_size")?, q))),
            formula!("lambda_hyperplane_empty", [], "flags whose solid lies in a fixed hyperplane: s(3,5) s(3)",
                |q, _| Ok(lambda_hyperplane_size(0, q))),
            formula!("ekr_plane_bound", [], "maximum pairwise-intersecting family of planes of PG(5,q): s(1,4)",
                |q, _| Ok(s_subspaces(1, 4, q))),
            formula!("line_meeting_planes_bound", ["n"],
                "planes of PG(n,q) pairwise meeting in a line, n >= 5: s(n-2)",
                |q, a| {
                    if a[0] < 5 {
                        return Err("need n >= 5".into());
                    }
                    Ok(s_points(a[0] - 2, q))
                }),
            formula!("solid_independence_number", [], "largest set of pairwise non-opposite solids of PG(6,q): s(3,5)",
                |q, _| Ok(s_subspaces(3, 5, q))),
            formula!("solid_independence_expanded", [], "q^8+q^7+2q^6+2q^5+3q^4+2q^3+2q^2+q+1",
                |q, _| Ok(poly(q, &[1, 1, 2, 2, 3, 2, 2, 1, 1]))),
            formula!("solid_second_largest_bound", [],
                "bound on other maximal sets of solids (recorded only): q^6+2q^5+3q^4+3q^3+2q^2+q+1",
                |q, _| Ok(poly(q, &[1, 2, 3, 3, 2, 1, 1]))),
            formula!("far_flag_bound", ["xi"],
                "flags (E',S') with E' skew to E and S' meeting E, solids of multiplicity <= xi: s(2) s(1,4) xi",
                |q, a| {
                    let xi = nonneg(a[0], "xi")?;
                    Ok(FormulaValue(s_points(2, q).0 * s_subspaces(1, 4, q).0 * BigUint::from(xi)))
                }),
            formula!("far_flag_polynomial", ["xi"],
                "(q^8+2q^7+4q^6+5q^5+6q^4+5q^3+4q^2+2q+1) xi",
                |q, a| {
                    let xi = nonneg(a[0], "xi")?;
                    Ok(FormulaValue(poly(q, &[1, 2, 4, 5, 6, 5, 4, 2, 1]).0 * BigUint::from(xi)))
                }),
            formula!("a0b3_bound", [],
                "solids on a point meeting three planes through another point: 3q^6+6q^5+7q^4+4q^3+2q^2+q+1",
                |q, _| Ok(a0b3_bound(q))),
            formula!("a0b3_bound_parts", [],
                "s(1,3,6) + (q^2+q)^3 + (q^2+q) q s(0,2,3,6)",
                |q, _| {
                    let qq = BigUint::from(q);
                    let t = &qq * &qq + &qq;
                    let v = s_through(1, 3, 6, q).0 + &t * &t * &t + &t * &qq * s_count(0, 2, 3, 6, q).0;
                    Ok(FormulaValue(v))
                }),
            formula!("hilfslemma_exact", ["u"],
                "planes on P meeting two solids: (s(3)-s(u))^2 + s(0,1,u+1)(s(1,2,6)-s(1,2,u+1)) + s(0,2,u+1)",
                |q, a| {
                    if !(1..=2).contains(&a[0]) {
                        return Err("u must be 1 or 2".into());
                    }
                    Ok(two_solid_plane_count(a[0], q))
                }),
            formula!("hilfslemma_bound", [], "planes on P meeting two solids: 2q^6+2q^5+3q^4+2q^3+2q^2+q+1",
                |q, _| Ok(two_solid_plane_bound(q))),
            formula!("chromatic_lower", [], "chromatic number lower bound: q^4-q^2+2q+1",
                |q, _| Ok(chromatic_lower(q))),
            formula!("chromatic_upper", [], "chromatic number upper bound from the line-class coloring: q^4+q^3+q^2+1",
                |q, _| Ok(chromatic_upper(q))),
            formula!("chromatic_trivial_upper", [], "point-class coloring of a 4-space: s(4)",
                |q, _| Ok(s_points(4, q))),
        ];
        Self { entries: all.into_iter().map(|f| (f.name, f)).collect() }
    }

    pub fn get(&self, name: &str) -> Option<&Formula> {
        self.entries.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Formula> {
        self.entries.values()
    }

    pub fn eval(&self, name: &str, q: u32, args: &[i64]) -> Result<FormulaValue, FormulaError> {
        self.lookup(name)?.eval(q, args)
    }

    fn lookup(&self, name: &str) -> Result<&Formula, FormulaError> {
        self.get(name).ok_or_else(|| FormulaError::Unknown {
            name: name.to_string(),
            available: self.names().collect::<Vec<_>>().join(", "),
        })
    }

    /// Evaluates a request of the form `name` or `name:a,b,...`.
    pub fn eval_request(&self, request: &str, q: u32) -> Result<FormulaReport, FormulaError> {
        let (name, args) = parse_request(request)?;
        let f = self.lookup(name)?;
        let value = f.eval(q, &args)?;
        Ok(FormulaReport {
            params: f.params.iter().map(|p| p.to_string()).zip(args).collect(),
            value,
            anchor: f.anchor,
        })
    }
}

fn parse_request(request: &str) -> Result<(&str, Vec<i64>), FormulaError> {
    match request.split_once(':') {
        None => Ok((request, Vec::new())),
        Some((name, rest)) => {
            let args = rest
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| FormulaError::Parse(request.to_string()))?;
            Ok((name, args))
        }
    }
}

/// One evaluated formula as exported in `formulas.json`.
#[derive(Debug, Clone, Serialize)]
pub struct FormulaReport {
    pub params: BTreeMap<String, i64>,
    pub value: FormulaValue,
    pub anchor: &'static str,
}

/// The `formulas.json` document.
#[derive(Debug, Clone, Serialize)]
pub struct FormulaExport {
    pub q: u32,
    pub formulas: BTreeMap<String, FormulaReport>,
}

impl FormulaRegistry {
    pub fn export<S: AsRef<str>>(&self, q: u32, requests: &[S]) -> Result<FormulaExport, FormulaError> {
        let mut formulas = BTreeMap::new();
        for r in requests {
            let r = r.as_ref();
            formulas.insert(r.to_string(), self.eval_request(r, q)?);
        }
        Ok(FormulaExport { q, formulas })
    }
}
