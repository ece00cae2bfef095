//! Concrete improved codes on plane models `Y^B = f(X)`.
//!
//! On such a model with `gcd(B, deg f) = 1` the point at infinity is the only
//! place over `X = oo`; `x` has pole order `u = B` there and `y` has pole
//! order `v = deg f`. The monomials `x^a y^b` with `b < B` realize every
//! element of `<u, v>` exactly once, which gives the h-vectors directly.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::codes::{improved_params, CodeError};
use crate::curves::{Coefficient, CurveError, CurveInstance, PlaneEquation, P_INF};
use crate::gf::{FieldSpec, GfError};
use crate::semigroup::{gcd, NumericalSemigroup, SemigroupError};

/// Default cap on `q^k` for [`min_distance_exhaustive`].
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("{0} has no plane model to build codes on")]
    NoPlaneModel(String),
    #[error("field order {0} is not a square, so no maximal point count is defined")]
    NotSquare(u32),
    #[error("pole orders {u} and {v} are not coprime")]
    NotCoprime { u: u32, v: u32 },
    #[error("no primitive element of GF({subfield}) inside GF({q})")]
    NoSubfield { subfield: u32, q: u32 },
    #[error("found {found} affine points, expected {expected}")]
    PointCount { expected: u64, found: u64 },
    #[error("affine point ({x}, {y}) is singular")]
    Singular { x: u32, y: u32 },
    #[error("{0} is a gap of the semigroup at infinity")]
    Gap(u64),
    #[error("model semigroup {model} differs from the catalog semigroup {catalog}")]
    SemigroupMismatch { model: String, catalog: String },
    #[error("message space of size {size} exceeds the budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },
    #[error("the code is zero, so it has no minimum distance")]
    EmptyCode,
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

/// `Y^B = f(X)` over a concrete field.
#[derive(Debug, Clone)]
pub struct PlaneModel {
    field: FieldSpec,
    equation: PlaneEquation,
    /// Ascending coefficients of `f` as field indices.
    f: Vec<u32>,
    u: u32,
    v: u32,
    semigroup: NumericalSemigroup,
    /// Resolved subfield constant, if the equation uses one.
    alpha: Option<u32>,
}

/// First element of `field`, in enumeration order, generating the
/// multiplicative group of the subfield of order `sub`.
pub fn subfield_primitive(field: &FieldSpec, sub: u32) -> Option<u32> {
    let order = sub as u64 - 1;
    let divisors: Vec<u64> = (1..order).filter(|d| order % d == 0).collect();
    (1..field.order()).find(|&a| {
        field.pow(a, sub as u64) == a
            && field.pow(a, order) == 1
            && divisors.iter().all(|&d| field.pow(a, d) != 1)
    })
}

impl PlaneModel {
    pub fn new(field: FieldSpec, equation: PlaneEquation) -> Result<Self, ConstructError> {
        let u = equation.y_degree;
        let v = equation.x_degree();
        if gcd(u as u64, v as u64) != 1 {
            return Err(ConstructError::NotCoprime { u, v });
        }
        let mut f = vec![0u32; v as usize + 1];
        let mut alpha = None;
        for &(e, c) in &equation.x_terms {
            let value = match c {
                Coefficient::One => 1,
                Coefficient::SubfieldPrimitivePower { subfield, power } => {
                    let a = subfield_primitive(&field, subfield).ok_or(ConstructError::NoSubfield {
                        subfield,
                        q: field.order(),
                    })?;
                    alpha = Some(a);
                    field.pow(a, power as u64)
                }
            };
            f[e as usize] = field.add(f[e as usize], value);
        }
        let semigroup = NumericalSemigroup::new(&[u.min(v), u.max(v)])?;
        Ok(PlaneModel {
            field,
            equation,
            f,
            u,
            v,
            semigroup,
            alpha,
        })
    }

    /// The model attached to a catalog instance, checked against its
    /// semigroup at infinity.
    pub fn for_instance(inst: &CurveInstance) -> Result<Self, ConstructError> {
        let eq = inst
            .plane_model
            .clone()
            .ok_or_else(|| ConstructError::NoPlaneModel(inst.display_name()))?;
        let model = PlaneModel::new(FieldSpec::with_order(inst.q)?, eq)?;
        let catalog = &inst.semigroup(P_INF)?.semigroup;
        if !model.semigroup.same_as(catalog) {
            return Err(ConstructError::SemigroupMismatch {
                model: model.semigroup.to_string(),
                catalog: catalog.to_string(),
            });
        }
        Ok(model)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn equation(&self) -> &PlaneEquation {
        &self.equation
    }

    /// Pole orders of `x` and `y` at infinity.
    pub fn pole_orders(&self) -> (u32, u32) {
        (self.u, self.v)
    }

    /// Exponent at which `y^B` is rewritten in terms of `x`.
    pub fn y_bound(&self) -> u32 {
        self.u
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn genus(&self) -> u64 {
        (self.u as u64 - 1) * (self.v as u64 - 1) / 2
    }

    /// The field index used for a subfield constant in the equation.
    pub fn alpha(&self) -> Option<u32> {
        self.alpha
    }

    /// `q + 2 g sqrt(q)`: affine points of a maximal curve with one point at
    /// infinity.
    pub fn expected_affine_points(&self) -> Result<u64, ConstructError> {
        let q = self.field.order();
        let q0 = (1..=q).find(|r| r * r >= q).unwrap_or(q);
        if q0 * q0 != q {
            return Err(ConstructError::NotSquare(q));
        }
        Ok(q as u64 + 2 * self.genus() * q0 as u64)
    }

    fn f_derivative_at(&self, x: u32) -> u32 {
        let fd = &self.field;
        let mut acc = 0;
        for (e, &c) in self.f.iter().enumerate().skip(1) {
            if c != 0 {
                let term = fd.mul(fd.mul(fd.from_int(e as i64), c), pow(fd, x, e as u64 - 1));
                acc = fd.add(acc, term);
            }
        }
        acc
    }
}

impl fmt::Display for PlaneModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.equation, self.field)?;
        if let Some(a) = self.alpha {
            write!(f, " (a = element {a})")?;
        }
        Ok(())
    }
}

fn pow(field: &FieldSpec, a: u32, e: u64) -> u32 {
    match (a, e) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => field.exp(field.log(a).unwrap() as u64 * e),
    }
}

/// Affine rational points, `x` in field order, then `y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvaluationSet {
    pub points: Vec<(u32, u32)>,
}

impl EvaluationSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn enumerate_points(model: &PlaneModel) -> Result<EvaluationSet, ConstructError> {
    let fd = &model.field;
    let q = fd.order();
    // y values grouped by y^B, each group in field order
    let mut fibres: Vec<Vec<u32>> = vec![Vec::new(); q as usize];
    for y in 0..q {
        fibres[pow(fd, y, model.u as u64) as usize].push(y);
    }
    let mut points = Vec::new();
    for x in 0..q {
        let fx = fd.eval_poly(&model.f, x);
        let fdx = model.f_derivative_at(x);
        for &y in &fibres[fx as usize] {
            let fy = fd.mul(fd.from_int(model.u as i64), pow(fd, y, model.u as u64 - 1));
            if fdx == 0 && fy == 0 {
                return Err(ConstructError::Singular { x, y });
            }
            points.push((x, y));
        }
    }
    let expected = model.expected_affine_points()?;
    if points.len() as u64 != expected {
        return Err(ConstructError::PointCount {
            expected,
            found: points.len() as u64,
        });
    }
    Ok(EvaluationSet { points })
}

/// `(a, b)` with `a u + b v = rho`, `0 <= b < B`.
pub fn monomial_for(model: &PlaneModel, rho: u64) -> Result<(u64, u64), ConstructError> {
    let (u, v) = (model.u as u64, model.v as u64);
    (0..u)
        .find(|b| b * v <= rho && (rho - b * v) % u == 0)
        .map(|b| ((rho - b * v) / u, b))
        .ok_or(ConstructError::Gap(rho))
}

pub fn h_vector(model: &PlaneModel, pts: &EvaluationSet, rho: u64) -> Result<Vec<u32>, ConstructError> {
    let (a, b) = monomial_for(model, rho)?;
    let fd = &model.field;
    Ok(pts
        .points
        .iter()
        .map(|&(x, y)| fd.mul(pow(fd, x, a), pow(fd, y, b)))
        .collect())
}

/// Parity checks over GF(q), one row per pole order.
#[derive(Debug, Clone)]
pub struct CheckMatrix {
    field: FieldSpec,
    n: usize,
    pub rows: Vec<Vec<u32>>,
    /// Pole order `rho_{i+1}` behind each row.
    pub row_labels: Vec<u64>,
}

impl CheckMatrix {
    pub fn new(field: FieldSpec, n: usize, rows: Vec<Vec<u32>>, row_labels: Vec<u64>) -> Self {
        assert!(rows.iter().all(|r| r.len() == n), "every row has n entries");
        assert_eq!(rows.len(), row_labels.len());
        CheckMatrix {
            field,
            n,
            rows,
            row_labels,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rank(&self) -> usize {
        reduce(&self.field, self.rows.clone(), self.n).1.len()
    }

    /// Rows as comma-separated field indices, one line per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

/// Rows `h(rho_{i+1})` for every `i` with `nu_i < d`.
pub fn build_check_matrix(
    model: &PlaneModel,
    pts: &EvaluationSet,
    d: u32,
) -> Result<CheckMatrix, ConstructError> {
    let sg = &model.semigroup;
    improved_params(sg, pts.len() as u64, d, model.field.order())?;
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for i in sg.small_nu_indices(d)? {
        let rho = sg.rho(i + 1)?;
        rows.push(h_vector(model, pts, rho)?);
        labels.push(rho);
    }
    Ok(CheckMatrix::new(model.field.clone(), pts.len(), rows, labels))
}

/// Reduced row echelon form. Pivot rows are taken in order of the lowest row
/// index with a nonzero entry in the current column. Returns the nonzero rows
/// and their pivot columns.
fn reduce(fd: &FieldSpec, mut rows: Vec<Vec<u32>>, n: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..n {
        let Some(p) = (top..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(top, p);
        let inv = fd.inv(rows[top][col]).expect("pivot is nonzero");
        for x in rows[top].iter_mut() {
            *x = fd.mul(*x, inv);
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            let c = row[col];
            if r == top || c == 0 {
                continue;
            }
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                if p != 0 {
                    *x = fd.sub(*x, fd.mul(c, p));
                }
            }
        }
        pivots.push(col);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    (rows, pivots)
}

/// `n - rank(M)`.
pub fn code_dim(m: &CheckMatrix) -> usize {
    m.n - m.rank()
}

/// A basis of the code `{ c : M c = 0 }`, one vector per free column.
pub fn null_space(m: &CheckMatrix) -> Vec<Vec<u32>> {
    let fd = &m.field;
    let (rref, pivots) = reduce(fd, m.rows.clone(), m.n);
    let mut is_pivot = vec![false; m.n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; m.n];
            v[free] = 1;
            for (row, &p) in rref.iter().zip(&pivots) {
                v[p] = fd.neg(row[free]);
            }
            v
        })
        .collect()
}

/// Minimum weight over all nonzero codewords, by enumerating messages.
///
/// Only messages whose leading nonzero digit is 1 are visited, since scaling
/// preserves weight. Each leading position is split off to a worker and the
/// rest is walked in a q-ary Gray code, one basis update per step.
pub fn min_distance_exhaustive(m: &CheckMatrix, budget: u64) -> Result<u64, ConstructError> {
    let basis = null_space(m);
    let k = basis.len();
    if k == 0 {
        return Err(ConstructError::EmptyCode);
    }
    let q = m.field.order() as u128;
    let size = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > budget as u128 {
        return Err(ConstructError::BudgetExceeded { size, budget });
    }
    let fd = &m.field;
    // (lead, value of the next digit) jobs, so short codes still spread out
    let jobs: Vec<(usize, Option<u32>)> = (0..k)
        .flat_map(|lead| {
            if lead + 1 < k {
                (0..fd.order()).map(|c| (lead, Some(c))).collect::<Vec<_>>()
            } else {
                vec![(lead, None)]
            }
        })
        .collect();
    let best = jobs
        .par_iter()
        .map(|&(lead, next)| {
            let mut word = basis[lead].clone();
            let mut free_from = lead + 1;
            if let Some(c) = next {
                axpy(fd, &mut word, c, &basis[lead + 1]);
                free_from += 1;
            }
            gray_scan(fd, word, &basis[free_from..])
        })
        .min()
        .expect("at least one job");
    Ok(best)
}

fn axpy(fd: &FieldSpec, word: &mut [u32], c: u32, g: &[u32]) {
    if c == 0 {
        return;
    }
    for (w, &x) in word.iter_mut().zip(g) {
        if x != 0 {
            *w = fd.add(*w, fd.mul(c, x));
        }
    }
}

fn weight(word: &[u32]) -> u64 {
    word.iter().filter(|&&x| x != 0).count() as u64
}

/// Minimum weight of `start + sum c_j g_j` over all digit choices.
///
/// Modular Gray code: going from counter `t` to `t + 1`, only digit `j` moves,
/// `j` being the number of trailing zero base-q digits of `t + 1`, and it
/// moves from value index `a` to `a + 1 mod q`.
fn gray_scan(fd: &FieldSpec, start: Vec<u32>, gens: &[Vec<u32>]) -> u64 {
    let q = fd.order() as u64;
    let mut word = start;
    let mut best = weight(&word);
    let mut digits = vec![0u32; gens.len()];
    // step[a] = element(a + 1) - element(a), indices taken mod q
    let step: Vec<u32> = (0..fd.order())
        .map(|a| fd.sub((a + 1) % fd.order(), a))
        .collect();
    let total = q.pow(gens.len() as u32);
    for t in 1..total {
        let mut j = 0;
        let mut x = t;
        while x % q == 0 {
            x /= q;
            j += 1;
        }
        let a = digits[j];
        axpy(fd, &mut word, step[a as usize], &gens[j]);
        digits[j] = (a + 1) % fd.order();
        best = best.min(weight(&word));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{hermitian, instance};

    fn model(name: &str) -> PlaneModel {
        let inst = if let Some(q0) = name.strip_prefix('H') {
            hermitian(q0.parse().unwrap()).unwrap()
        } else {
            instance(name).unwrap()
        };
        PlaneModel::for_instance(&inst).unwrap()
    }

    #[test]
    fn hermitian_gf4_points() {
        let m = model("H2");
        assert_eq!(m.pole_orders(), (3, 2));
        let pts = enumerate_points(&m).unwrap();
        assert_eq!(pts.len(), 8);
        // brute-force scan over GF(4)^2
        let fd = m.field();
        let mut brute = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                let lhs = fd.pow(y, 3);
                let rhs = fd.add(fd.pow(x, 2), x);
                if lhs == rhs {
                    brute.push((x, y));
                }
            }
        }
        assert_eq!(pts.points, brute);
    }

    #[test]
    fn point_counts() {
        assert_eq!(enumerate_points(&model("D2")).unwrap().len(), 91);
        assert_eq!(enumerate_points(&model("C1")).unwrap().len(), 256);
        assert_eq!(enumerate_points(&model("H3")).unwrap().len(), 27);
    }

    #[test]
    fn monomials() {
        let m = model("D2");
        assert_eq!(monomial_for(&m, 0).unwrap(), (0, 0));
        assert_eq!(monomial_for(&m, 7).unwrap(), (0, 1));
        assert_eq!(monomial_for(&m, 6).unwrap(), (3, 0));
        assert_eq!(monomial_for(&m, 9).unwrap(), (1, 1));
        assert!(matches!(monomial_for(&m, 5), Err(ConstructError::Gap(5))));
    }

    #[test]
    fn h_vectors() {
        let m = model("H2");
        let pts = enumerate_points(&m).unwrap();
        assert_eq!(h_vector(&m, &pts, 0).unwrap(), vec![1; 8]);
        // x has pole order 3 and y pole order 2 on Y^3 = X^2 + X
        let xs: Vec<u32> = pts.points.iter().map(|p| p.0).collect();
        let ys: Vec<u32> = pts.points.iter().map(|p| p.1).collect();
        assert_eq!(h_vector(&m, &pts, 3).unwrap(), xs);
        assert_eq!(h_vector(&m, &pts, 2).unwrap(), ys);
        let d2 = model("D2");
        let pts = enumerate_points(&d2).unwrap();
        let xs: Vec<u32> = pts.points.iter().map(|p| p.0).collect();
        assert_eq!(h_vector(&d2, &pts, 2).unwrap(), xs);
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let m = model("D2");
        let pts = enumerate_points(&m).unwrap();
        let fd = m.field();
        for (r1, r2) in [(2, 7), (4, 6), (7, 0), (9, 2)] {
            let h1 = h_vector(&m, &pts, r1).unwrap();
            let h2 = h_vector(&m, &pts, r2).unwrap();
            let prod: Vec<u32> = h1.iter().zip(&h2).map(|(&a, &b)| fd.mul(a, b)).collect();
            assert_eq!(prod, h_vector(&m, &pts, r1 + r2).unwrap());
        }
    }

    #[test]
    fn check_matrix_shape_and_dimension() {
        let m = model("D2");
        let pts = enumerate_points(&m).unwrap();
        let cm = build_check_matrix(&m, &pts, 9).unwrap();
        assert_eq!(cm.row_count(), 11);
        assert_eq!(code_dim(&cm), 80);
        assert!(build_check_matrix(&m, &pts, 200).is_err());

        let h = model("H2");
        let pts = enumerate_points(&h).unwrap();
        let cm = build_check_matrix(&h, &pts, 2).unwrap();
        let nu = h.semigroup().nu_sequence(20);
        let ones = nu.iter().filter(|&&x| x == 1).count();
        assert_eq!(cm.row_count(), ones);
    }

    #[test]
    fn empty_rows_give_full_dimension() {
        let fd = FieldSpec::with_order(4).unwrap();
        let cm = CheckMatrix::new(fd, 5, Vec::new(), Vec::new());
        assert_eq!(code_dim(&cm), 5);
        assert_eq!(null_space(&cm).len(), 5);
    }

    #[test]
    fn null_space_is_orthogonal() {
        let m = model("H3");
        let pts = enumerate_points(&m).unwrap();
        let cm = build_check_matrix(&m, &pts, 4).unwrap();
        let fd = m.field();
        let basis = null_space(&cm);
        assert_eq!(basis.len(), code_dim(&cm));
        for v in &basis {
            for row in &cm.rows {
                let dot = row.iter().zip(v).fold(0, |acc, (&a, &b)| fd.add(acc, fd.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }

    /// Minimum weight by plain enumeration of every message.
    fn brute_min_distance(cm: &CheckMatrix) -> u64 {
        let fd = cm.field();
        let basis = null_space(cm);
        let q = fd.order() as u64;
        let mut best = u64::MAX;
        for t in 1..q.pow(basis.len() as u32) {
            let mut word = vec![0u32; cm.n()];
            let mut x = t;
            for g in &basis {
                let c = (x % q) as u32;
                x /= q;
                for (w, &e) in word.iter_mut().zip(g) {
                    *w = fd.add(*w, fd.mul(c, e));
                }
            }
            best = best.min(weight(&word));
        }
        best
    }

    #[test]
    fn gray_scan_matches_brute_force() {
        let m = model("H2");
        let pts = enumerate_points(&m).unwrap();
        for d in 2..=7 {
            let cm = build_check_matrix(&m, &pts, d).unwrap();
            let fast = min_distance_exhaustive(&cm, DEFAULT_BUDGET).unwrap();
            assert_eq!(fast, brute_min_distance(&cm), "d = {d}");
            assert!(fast >= d as u64);
        }
        // r_8 = 8 leaves nothing at d = 8; d = 7 is a one-dimensional code
        assert!(build_check_matrix(&m, &pts, 8).is_err());
        let cm = build_check_matrix(&m, &pts, 7).unwrap();
        assert_eq!(code_dim(&cm), 1);
        assert_eq!(min_distance_exhaustive(&cm, DEFAULT_BUDGET).unwrap(), 8);
    }

    #[test]
    fn distance_errors() {
        let fd = FieldSpec::with_order(4).unwrap();
        let id: Vec<Vec<u32>> = (0..3).map(|i| (0..3).map(|j| u32::from(i == j)).collect()).collect();
        let cm = CheckMatrix::new(fd, 3, id, vec![0, 1, 2]);
        assert!(matches!(min_distance_exhaustive(&cm, 100), Err(ConstructError::EmptyCode)));
        let m = model("D2");
        let pts = enumerate_points(&m).unwrap();
        let cm = build_check_matrix(&m, &pts, 9).unwrap();
        assert!(matches!(
            min_distance_exhaustive(&cm, DEFAULT_BUDGET),
            Err(ConstructError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn hermitian_gf9_high_distance() {
        let m = model("H3");
        let pts = enumerate_points(&m).unwrap();
        let cm = build_check_matrix(&m, &pts, 20).unwrap();
        let k = code_dim(&cm);
        assert_eq!(k as u64, 27 - m.semigroup().r(20).unwrap());
        assert!(min_distance_exhaustive(&cm, DEFAULT_BUDGET).unwrap() >= 20);
    }

    #[test]
    fn eigenspace_model() {
        let m = model("C4");
        let fd = m.field();
        let a = m.alpha().unwrap();
        assert_eq!(fd.pow(a, 9), a);
        assert_eq!(fd.pow(a, 4), fd.neg(1));
        // nothing earlier in enumeration order generates GF(9)*
        for b in 1..a {
            let gen = fd.pow(b, 9) == b && (1..8).all(|e| fd.pow(b, e) != 1);
            assert!(!gen);
        }
        assert_eq!(enumerate_points(&m).unwrap().len(), 243);
    }

    #[test]
    fn catalog_models_have_maximal_point_counts() {
        for name in ["C2", "C3", "D1", "D3", "D4"] {
            let inst = instance(name).unwrap();
            let m = PlaneModel::for_instance(&inst).unwrap();
            let pts = enumerate_points(&m).unwrap();
            assert_eq!(pts.len() as u64, inst.code_length(), "{name}");
        }
        assert!(PlaneModel::for_instance(&instance("E1").unwrap()).is_err());
    }
}
