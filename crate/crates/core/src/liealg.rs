//! Lie algebras given by structure constants, and the subobjects built on
//! top of them: subalgebras, linear maps and symmetric bilinear forms.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    inertia, is_zero_vector, nullspace, unit_vector, zero_vector, Inertia, KernelSolver, Mat, Rat,
    Subspace,
};

/// Outcome of checking a raw structure tensor against the Lie axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Valid,
    /// `c[i][j][k] != -c[j][i][k]` (or `c[i][i][k] != 0` when `i == j`).
    Antisymmetry {
        i: usize,
        j: usize,
        k: usize,
    },
    /// Jacobi fails on basis triple `(i, j, k)`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
    },
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }

    fn into_result(self) -> Result<()> {
        match self {
            Validation::Valid => Ok(()),
            Validation::Antisymmetry { i, j, k } => Err(Error::Antisymmetry { i, j, k }),
            Validation::Jacobi { i, j, k } => Err(Error::Jacobi { i, j, k }),
        }
    }
}

fn idx(dim: usize, i: usize, j: usize, k: usize) -> usize {
    (i * dim + j) * dim + k
}

/// Nonzero `(k, c_ij^k)` for each pair, indexed by `i * dim + j`.
type SparseBrackets = Vec<Vec<(usize, Rat)>>;

fn sparse_brackets(dim: usize, tensor: &[Rat]) -> SparseBrackets {
    tensor
        .chunks(dim.max(1))
        .take(dim * dim)
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect()
        })
        .collect()
}

/// Checks antisymmetry on all index triples, then Jacobi on all basis
/// triples `i < j < k`, reporting the first failure.
pub fn validate_tensor(dim: usize, tensor: &[Rat]) -> Validation {
    assert_eq!(tensor.len(), dim * dim * dim, "tensor length must be dim^3");
    validate_sparse(dim, tensor, &sparse_brackets(dim, tensor))
}

fn validate_sparse(dim: usize, tensor: &[Rat], sparse: &SparseBrackets) -> Validation {
    for i in 0..dim {
        for j in i..dim {
            for k in 0..dim {
                let a = &tensor[idx(dim, i, j, k)];
                let b = &tensor[idx(dim, j, i, k)];
                if !(a.is_zero() && b.is_zero()) && !(a + b).is_zero() {
                    return Validation::Antisymmetry { i, j, k };
                }
            }
        }
    }
    // [[e_i,e_j],e_k] = sum_m c_ij^m [e_m, e_k]
    let mut acc = vec![Rat::zero(); dim];
    let mut touched = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for k in j + 1..dim {
                touched.clear();
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for (m, cm) in &sparse[a * dim + b] {
                        for (l, cl) in &sparse[m * dim + c] {
                            acc[*l] += cm * cl;
                            touched.push(*l);
                        }
                    }
                }
                let mut bad = false;
                for &l in &touched {
                    if !acc[l].is_zero() {
                        bad = true;
                        acc[l] = Rat::zero();
                    }
                }
                if bad {
                    return Validation::Jacobi { i, j, k };
                }
            }
        }
    }
    Validation::Valid
}

struct Inner {
    dim: usize,
    tensor: Vec<Rat>,
    sparse: SparseBrackets,
    name: Option<String>,
}

/// Finite-dimensional Lie algebra over Q, `[e_i, e_j] = sum_k c_ij^k e_k`.
///
/// Cheap to clone; the structure tensor is shared. Equality compares the
/// dimension and the tensor, not the name.
#[derive(Clone)]
pub struct LieAlgebra(Arc<Inner>);

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.dim == other.0.dim && self.0.tensor == other.0.tensor)
    }
}

impl Eq for LieAlgebra {}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LieAlgebra({}, dim {})",
            self.name().unwrap_or("unnamed"),
            self.dim()
        )
    }
}

impl LieAlgebra {
    /// Validated constructor from a dense `dim^3` tensor.
    pub fn new(dim: usize, tensor: Vec<Rat>, name: Option<String>) -> Result<Self> {
        if tensor.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: tensor.len(),
            });
        }
        let sparse = sparse_brackets(dim, &tensor);
        validate_sparse(dim, &tensor, &sparse).into_result()?;
        Ok(LieAlgebra(Arc::new(Inner {
            dim,
            tensor,
            sparse,
            name,
        })))
    }

    /// Builds from the brackets `[e_i, e_j] = ... + v e_k` for `i != j`;
    /// the `(j, i)` entries are filled in by antisymmetry.
    pub fn from_brackets(
        dim: usize,
        name: Option<&str>,
        brackets: &[(usize, usize, usize, Rat)],
    ) -> Result<Self> {
        let mut tensor = vec![Rat::zero(); dim * dim * dim];
        for (i, j, k, v) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j).max(k) + 1,
                });
            }
            if i == j {
                return Err(Error::Antisymmetry { i, j, k });
            }
            tensor[idx(dim, i, j, k)] += v;
            tensor[idx(dim, j, i, k)] -= v;
        }
        LieAlgebra::new(dim, tensor, name.map(str::to_owned))
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra::new(
            n,
            vec![Rat::zero(); n * n * n],
            Some(format!("abelian({n})")),
        )
        .expect("zero tensor is a Lie algebra")
    }

    /// Lie algebra spanned by the given linearly independent matrices under
    /// the commutator, in that basis order.
    pub fn from_matrix_basis(basis: &[Mat], name: Option<&str>) -> Result<Self> {
        let dim = basis.len();
        let Some(first) = basis.first() else {
            return LieAlgebra::new(0, Vec::new(), name.map(str::to_owned));
        };
        let flat_len = first.rows() * first.cols();
        let columns: Vec<Vec<Rat>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        let coords = Mat::from_columns(flat_len, &columns);
        if coords.rank() != dim {
            return Err(Error::Precondition(
                "matrix basis is linearly dependent".into(),
            ));
        }
        let mut tensor = vec![Rat::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let c = basis[i].commutator(&basis[j]);
                let x = coords.solve(c.entries()).ok_or(Error::NotSubalgebra)?;
                for (k, v) in x.into_iter().enumerate() {
                    tensor[idx(dim, j, i, k)] = -v.clone();
                    tensor[idx(dim, i, j, k)] = v;
                }
            }
        }
        LieAlgebra::new(dim, tensor, name.map(str::to_owned))
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn with_name(&self, name: &str) -> Self {
        LieAlgebra(Arc::new(Inner {
            dim: self.0.dim,
            tensor: self.0.tensor.clone(),
            sparse: self.0.sparse.clone(),
            name: Some(name.to_owned()),
        }))
    }

    /// `c_ij^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.0.tensor[idx(self.dim(), i, j, k)]
    }

    pub fn tensor(&self) -> &[Rat] {
        &self.0.tensor
    }

    /// Re-runs the axiom checks; always valid for a constructed algebra.
    pub fn validate(&self) -> Validation {
        validate_sparse(self.dim(), &self.0.tensor, &self.0.sparse)
    }

    fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_space(&self, u: &Subspace) -> Result<()> {
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: u.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        unit_vector(self.dim(), i)
    }

    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let terms = &self.0.sparse[i * n + j];
                if terms.is_empty() {
                    continue;
                }
                let w = xi * yj;
                for (k, c) in terms {
                    out[*k] += &w * c;
                }
            }
        }
        out
    }

    /// Matrix of `y -> [x, y]`; column `j` is `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Rat]) -> Result<Mat> {
        self.check_len(x)?;
        let n = self.dim();
        Ok(Mat::from_fn(n, n, |k, j| {
            x.iter()
                .enumerate()
                .filter(|(_, xi)| !xi.is_zero())
                .fold(Rat::zero(), |acc, (i, xi)| {
                    acc + xi * self.structure_constant(i, j, k)
                })
        }))
    }

    /// `ad_{e_i}` with entries `(k, j) = c_ij^k`.
    pub fn ad_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        Mat::from_fn(n, n, |k, j| self.structure_constant(i, j, k).clone())
    }

    pub fn adjoint_matrix(&self, x: &[Rat]) -> Result<LinMap> {
        Ok(LinMap {
            source: self.clone(),
            target: self.clone(),
            matrix: self.ad_matrix(x)?,
        })
    }

    /// Span of `[u, v]` over basis vectors of `u` and `v`.
    pub fn bracket_spaces(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        self.check_space(u)?;
        self.check_space(v)?;
        let vs = v.basis_vectors();
        let brackets: Vec<Vec<Rat>> = u
            .basis_vectors()
            .iter()
            .flat_map(|a| vs.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.bracket_unchecked(a, b))
            .filter(|w| !is_zero_vector(w))
            .collect();
        Ok(Subspace::span(self.dim(), brackets))
    }

    /// `[g, g]`.
    pub fn derived_algebra(&self) -> Subalgebra {
        let full = Subspace::full(self.dim());
        let d = self.bracket_spaces(&full, &full).expect("same ambient");
        Subalgebra::new_unchecked(self.clone(), d)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_algebra().space().is_full()
    }

    pub fn is_abelian(&self) -> bool {
        self.0.sparse.iter().all(Vec::is_empty)
    }

    /// Solves `[x, b] in target` for all `b` in `of`, where membership is
    /// expressed through the annihilator of `target`. One nullspace problem.
    fn bracket_into(&self, of: &Subspace, target: &Subspace) -> Subspace {
        let n = self.dim();
        let ann = target.annihilator().basis_vectors();
        let mut solver = KernelSolver::new(n);
        for b in of.basis_vectors() {
            // column i of this matrix is [e_i, b]
            let images: Vec<Vec<Rat>> = (0..n)
                .map(|i| self.bracket_unchecked(&unit_vector(n, i), &b))
                .collect();
            for a in &ann {
                solver.push(
                    images
                        .iter()
                        .enumerate()
                        .map(|(i, img)| (i, crate::exactlin::dot(a, img))),
                );
            }
        }
        solver.kernel()
    }

    pub fn center(&self) -> Subalgebra {
        let n = self.dim();
        let z = self.bracket_into(&Subspace::full(n), &Subspace::zero(n));
        Subalgebra::new_unchecked(self.clone(), z)
    }

    /// `{x in g : [x, h] = 0}`.
    pub fn centralizer(&self, h: &Subalgebra) -> Result<Subalgebra> {
        self.check_parent(h)?;
        let c = self.bracket_into(h.space(), &Subspace::zero(self.dim()));
        Subalgebra::new(self.clone(), c)
    }

    /// `{x in g : [x, h] in h}`; closed under the bracket by Jacobi, which
    /// the constructor re-checks.
    pub fn normalizer(&self, h: &Subalgebra) -> Result<Subalgebra> {
        self.check_parent(h)?;
        let nz = self.bracket_into(h.space(), h.space());
        Subalgebra::new(self.clone(), nz)
    }

    pub fn is_ideal(&self, h: &Subalgebra) -> Result<bool> {
        self.check_parent(h)?;
        h.is_ideal_of(&Subalgebra::full(self))
    }

    fn check_parent(&self, h: &Subalgebra) -> Result<()> {
        if h.parent() != self {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    /// `K(x, y) = tr(ad_x ad_y)`.
    pub fn killing_matrix(&self) -> Mat {
        let n = self.dim();
        let ads: Vec<Mat> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Mat::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                k.set(i, j, t.clone());
                k.set(j, i, t);
            }
        }
        k
    }

    pub fn killing_form(&self) -> SymForm {
        SymForm {
            ambient: self.clone(),
            matrix: self.killing_matrix(),
        }
    }

    /// Killing-orthogonal complement of `[g, g]`, which is the radical in
    /// characteristic zero. Self-checked: the result must be a solvable
    /// ideal with semisimple quotient.
    pub fn radical(&self) -> Subalgebra {
        let killing = self.killing_matrix();
        let derived = self.derived_algebra();
        let rad = derived
            .space()
            .orthogonal_complement(&killing)
            .expect("Killing form is symmetric");
        let rad =
            Subalgebra::new(self.clone(), rad).expect("radical must be closed under the bracket");
        assert!(
            rad.is_ideal_of(&Subalgebra::full(self)).unwrap_or(false),
            "radical is not an ideal of {self:?}"
        );
        assert!(
            rad.to_algebra().0.is_solvable(),
            "radical is not solvable in {self:?}"
        );
        let (quot, _) = self.quotient(&rad).expect("radical is an ideal");
        let qk = quot.killing_matrix();
        assert!(
            qk.rank() == qk.rows(),
            "quotient by the radical of {self:?} has degenerate Killing form"
        );
        rad
    }

    /// Semisimplicity by two routes that must agree: zero radical and
    /// nondegenerate Killing form.
    pub fn is_semisimple(&self) -> bool {
        let by_radical = self.radical().space().is_zero();
        let k = self.killing_matrix();
        let by_killing = k.rank() == self.dim();
        assert_eq!(
            by_radical, by_killing,
            "semisimplicity tests disagree for {self:?}"
        );
        by_radical
    }

    /// `g = g^(0) ⊇ [g,g] ⊇ ...` until it stabilizes.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_spaces(last, last).expect("same ambient");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_spaces(&full, last).expect("same ambient");
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().is_some_and(Subspace::is_zero)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series()
            .last()
            .is_some_and(Subspace::is_zero)
    }

    /// Quotient by an ideal on the coordinates complementary to the ideal's
    /// pivot columns, with the projection `g -> g / ideal`.
    pub fn quotient(&self, ideal: &Subalgebra) -> Result<(LieAlgebra, LinMap)> {
        self.check_parent(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let n = self.dim();
        let space = ideal.space();
        let keep: Vec<usize> = (0..n).filter(|c| !space.pivots().contains(c)).collect();
        let reduce = |v: &[Rat]| -> Vec<Rat> {
            let mut r = v.to_vec();
            for (row, &p) in space.pivots().iter().enumerate() {
                let c = r[p].clone();
                if c.is_zero() {
                    continue;
                }
                for (col, b) in space.basis().row(row).iter().enumerate() {
                    if !b.is_zero() {
                        r[col] -= &c * b;
                    }
                }
            }
            keep.iter().map(|&c| r[c].clone()).collect()
        };
        let m = keep.len();
        let mut tensor = vec![Rat::zero(); m * m * m];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let br = self.bracket_unchecked(&unit_vector(n, i), &unit_vector(n, j));
                for (k, v) in reduce(&br).into_iter().enumerate() {
                    tensor[idx(m, a, b, k)] = v;
                }
            }
        }
        let name = self.name().map(|s| format!("{s}/ideal"));
        let quot = LieAlgebra::new(m, tensor, name)?;
        let columns: Vec<Vec<Rat>> = (0..n).map(|j| reduce(&unit_vector(n, j))).collect();
        let proj = LinMap::new(self.clone(), quot.clone(), Mat::from_columns(m, &columns))?;
        Ok((quot, proj))
    }

    /// `g1 ⊕ g2` with the two block embeddings.
    pub fn direct_sum(&self, other: &LieAlgebra) -> (LieAlgebra, LinMap, LinMap) {
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 + n2;
        let mut tensor = vec![Rat::zero(); n * n * n];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    tensor[idx(n, i, j, k)] = self.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                for k in 0..n2 {
                    tensor[idx(n, n1 + i, n1 + j, n1 + k)] =
                        other.structure_constant(i, j, k).clone();
                }
            }
        }
        let name = format!(
            "{}+{}",
            self.name().unwrap_or("g1"),
            other.name().unwrap_or("g2")
        );
        let sum = LieAlgebra::new(n, tensor, Some(name)).expect("direct sum of Lie algebras");
        let e1 = Mat::from_fn(n, n1, |r, c| if r == c { Rat::one() } else { Rat::zero() });
        let e2 = Mat::from_fn(
            n,
            n2,
            |r, c| {
                if r == n1 + c {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            },
        );
        let i1 = LinMap::new(self.clone(), sum.clone(), e1).expect("shape");
        let i2 = LinMap::new(other.clone(), sum.clone(), e2).expect("shape");
        (sum, i1, i2)
    }

    /// Rebuilds the structure constants in the basis `f_j = sum_i p[i][j] e_i`
    /// (columns of `p`). Returns the new algebra and the isomorphism to `self`.
    pub fn change_basis(&self, p: &Mat) -> Result<(LieAlgebra, LinMap)> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.rows(),
            });
        }
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Precondition("change of basis is singular".into()))?;
        let cols: Vec<Vec<Rat>> = (0..n).map(|j| p.column(j)).collect();
        let mut tensor = vec![Rat::zero(); n * n * n];
        for a in 0..n {
            for b in 0..n {
                let br = self.bracket_unchecked(&cols[a], &cols[b]);
                for (k, v) in inv.mul_vec(&br).into_iter().enumerate() {
                    tensor[idx(n, a, b, k)] = v;
                }
            }
        }
        let new = LieAlgebra::new(n, tensor, self.0.name.clone())?;
        let iso = LinMap::new(new.clone(), self.clone(), p.clone())?;
        Ok((new, iso))
    }

    /// Smallest subalgebra containing the given vectors.
    pub fn generated_subalgebra(&self, vectors: &[Vec<Rat>]) -> Result<Subalgebra> {
        for v in vectors {
            self.check_len(v)?;
        }
        let mut s = Subspace::span(self.dim(), vectors.to_vec());
        loop {
            let next = s.sum(&self.bracket_spaces(&s, &s)?)?;
            if next == s {
                return Ok(Subalgebra::new_unchecked(self.clone(), s));
            }
            s = next;
        }
    }
}

/// Bracket-closed subspace of a parent algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Subalgebra {
    parent: LieAlgebra,
    space: Subspace,
}

impl fmt::Debug for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subalgebra of {:?}: {:?}", self.parent, self.space)
    }
}

impl Subalgebra {
    /// Rejects subspaces that are not closed under the bracket; use
    /// [`LieAlgebra::generated_subalgebra`] to close explicitly.
    pub fn new(parent: LieAlgebra, space: Subspace) -> Result<Self> {
        parent.check_space(&space)?;
        let closure = parent.bracket_spaces(&space, &space)?;
        if !space.contains(&closure)? {
            return Err(Error::NotSubalgebra);
        }
        Ok(Subalgebra { parent, space })
    }

    pub(crate) fn new_unchecked(parent: LieAlgebra, space: Subspace) -> Self {
        debug_assert_eq!(parent.dim(), space.ambient_dim());
        Subalgebra { parent, space }
    }

    pub fn span(parent: &LieAlgebra, vectors: Vec<Vec<Rat>>) -> Result<Self> {
        for v in &vectors {
            parent.check_len(v)?;
        }
        Subalgebra::new(parent.clone(), Subspace::span(parent.dim(), vectors))
    }

    pub fn full(parent: &LieAlgebra) -> Self {
        Subalgebra::new_unchecked(parent.clone(), Subspace::full(parent.dim()))
    }

    pub fn zero(parent: &LieAlgebra) -> Self {
        Subalgebra::new_unchecked(parent.clone(), Subspace::zero(parent.dim()))
    }

    pub fn parent(&self) -> &LieAlgebra {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    fn same_parent(&self, other: &Subalgebra) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn is_subset_of(&self, other: &Subalgebra) -> Result<bool> {
        self.same_parent(other)?;
        other.space.contains(&self.space)
    }

    /// `self ⊆ k` and `[k, self] ⊆ self`.
    pub fn is_ideal_of(&self, k: &Subalgebra) -> Result<bool> {
        self.same_parent(k)?;
        if !k.space.contains(&self.space)? {
            return Ok(false);
        }
        let br = self.parent.bracket_spaces(&k.space, &self.space)?;
        self.space.contains(&br)
    }

    pub fn intersect(&self, other: &Subalgebra) -> Result<Subalgebra> {
        self.same_parent(other)?;
        Ok(Subalgebra::new_unchecked(
            self.parent.clone(),
            self.space.intersect(&other.space)?,
        ))
    }

    /// `[self, self]` inside the parent.
    pub fn derived_subalgebra(&self) -> Subalgebra {
        let d = self
            .parent
            .bracket_spaces(&self.space, &self.space)
            .expect("same ambient");
        Subalgebra::new_unchecked(self.parent.clone(), d)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subalgebra().space == self.space
    }

    /// The subalgebra as an algebra in its own right, on the canonical basis
    /// of its subspace, with the inclusion into the parent.
    pub fn to_algebra(&self) -> (LieAlgebra, LinMap) {
        let basis = self.space.basis_vectors();
        let m = basis.len();
        let mut tensor = vec![Rat::zero(); m * m * m];
        for a in 0..m {
            for b in a + 1..m {
                let br = self.parent.bracket_unchecked(&basis[a], &basis[b]);
                let coords = self
                    .space
                    .coordinates(&br)
                    .expect("subalgebra is bracket-closed");
                for (k, v) in coords.into_iter().enumerate() {
                    tensor[idx(m, b, a, k)] = -v.clone();
                    tensor[idx(m, a, b, k)] = v;
                }
            }
        }
        let alg = LieAlgebra::new(m, tensor, None).expect("restriction of a Lie bracket");
        let incl = LinMap::new(
            alg.clone(),
            self.parent.clone(),
            self.space.basis().transpose(),
        )
        .expect("shape");
        (alg, incl)
    }

    /// Radical of the subalgebra itself, in parent coordinates.
    pub fn radical(&self) -> Subalgebra {
        let (alg, incl) = self.to_algebra();
        incl.image_of(alg.radical().space())
    }

    /// Center of the subalgebra itself, in parent coordinates.
    pub fn center(&self) -> Subalgebra {
        let (alg, incl) = self.to_algebra();
        incl.image_of(alg.center().space())
    }
}

/// Linear map between algebras; `matrix` is `target.dim x source.dim` and
/// acts on column vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: Mat,
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinMap({:?} -> {:?}, {:?})",
            self.source, self.target, self.matrix
        )
    }
}

impl LinMap {
    pub fn new(source: LieAlgebra, target: LieAlgebra, matrix: Mat) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim() * source.dim(),
                found: matrix.rows() * matrix.cols(),
            });
        }
        Ok(LinMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &LieAlgebra) -> Self {
        LinMap {
            source: g.clone(),
            target: g.clone(),
            matrix: Mat::identity(g.dim()),
        }
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        self.source.check_len(v)?;
        Ok(self.matrix.mul_vec(v))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LinMap) -> Result<LinMap> {
        if first.target != self.source {
            return Err(Error::ParentMismatch);
        }
        LinMap::new(
            first.source.clone(),
            self.target.clone(),
            &self.matrix * &first.matrix,
        )
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(
            self.target.dim(),
            (0..self.matrix.cols()).map(|c| self.matrix.column(c)),
        )
    }

    pub fn kernel(&self) -> Subspace {
        nullspace(&self.matrix)
    }

    /// Image of a subspace of the source, as a subalgebra of the target.
    /// Only meaningful for homomorphisms applied to subalgebras.
    pub fn image_of(&self, u: &Subspace) -> Subalgebra {
        let imgs: Vec<Vec<Rat>> = u
            .basis_vectors()
            .iter()
            .map(|v| self.matrix.mul_vec(v))
            .collect();
        let space = Subspace::span(self.target.dim(), imgs);
        Subalgebra::new(self.target.clone(), space).expect("homomorphic image is a subalgebra")
    }

    /// `f([e_i, e_j]) = [f e_i, f e_j]` on all basis pairs.
    pub fn is_homomorphism(&self) -> bool {
        let n = self.source.dim();
        let images: Vec<Vec<Rat>> = (0..n).map(|j| self.matrix.column(j)).collect();
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let lhs = self.matrix.mul_vec(
                    &self
                        .source
                        .bracket_unchecked(&unit_vector(n, i), &unit_vector(n, j)),
                );
                lhs == self.target.bracket_unchecked(&images[i], &images[j])
            })
        })
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_automorphism(&self) -> bool {
        self.source == self.target
            && self.matrix.rank() == self.source.dim()
            && self.is_homomorphism()
    }

    /// Eigenspace for the eigenvalue `lambda` of an endomorphism.
    pub fn eigenspace(&self, lambda: &Rat) -> Result<Subspace> {
        if self.source != self.target {
            return Err(Error::ParentMismatch);
        }
        let shifted = &self.matrix - &Mat::identity(self.source.dim()).scale(lambda);
        Ok(nullspace(&shifted))
    }
}

/// Symmetric bilinear form on an algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct SymForm {
    ambient: LieAlgebra,
    matrix: Mat,
}

impl fmt::Debug for SymForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymForm(on {:?}, {:?})", self.ambient, self.matrix)
    }
}

impl SymForm {
    pub fn new(ambient: LieAlgebra, matrix: Mat) -> Result<Self> {
        if matrix.rows() != ambient.dim() || !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: ambient.dim(),
                found: matrix.rows(),
            });
        }
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(SymForm { ambient, matrix })
    }

    pub fn ambient(&self) -> &LieAlgebra {
        &self.ambient
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Rat {
        crate::exactlin::dot(x, &self.matrix.mul_vec(y))
    }

    pub fn negated(&self) -> SymForm {
        SymForm {
            ambient: self.ambient.clone(),
            matrix: -&self.matrix,
        }
    }

    pub fn inertia_on(&self, u: &Subspace) -> Result<Inertia> {
        inertia(&self.matrix, u)
    }

    pub fn inertia(&self) -> Inertia {
        inertia(&self.matrix, &Subspace::full(self.ambient.dim())).expect("symmetric by type")
    }

    pub fn orthogonal_complement(&self, u: &Subspace) -> Result<Subspace> {
        u.orthogonal_complement(&self.matrix)
    }

    /// `B(ad_x y, z) + B(y, ad_x z) = 0` for all `y, z`.
    pub fn is_ad_skew(&self, x: &[Rat]) -> Result<bool> {
        let ad = self.ambient.ad_matrix(x)?;
        let s = &(&ad.transpose() * &self.matrix) + &(&self.matrix * &ad);
        Ok(s.is_zero())
    }

    /// `ad_x` is skew for every `x` in `u`.
    pub fn is_ad_skew_on(&self, u: &Subspace) -> Result<bool> {
        for x in u.basis_vectors() {
            if !self.is_ad_skew(&x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Convenience for tests and catalog code: subalgebra spanned by integer
/// vectors.
pub fn span_ints(g: &LieAlgebra, vectors: &[&[i64]]) -> Result<Subalgebra> {
    Subalgebra::span(
        g,
        vectors.iter().map(|v| crate::exactlin::vector(v)).collect(),
    )
}
