//! Concrete braided spherical categories realized on graded vector spaces.
//!
//! Every category here is presented by the same data: a grading group K, an acting
//! group H with an action h▷k on K, a flux homomorphism φ: K → H and a scalar function
//! b on K × K. Objects are K-graded spaces with an H-action that moves grade k to h▷k.
//! The braiding is
//!
//! c(v_k ⊗ w_l) = b(k, l) · (φ(k)·w_l) ⊗ v_k.
//!
//! Rep(G) is K trivial, H = G. The Drinfeld double is K = H = G with conjugation and
//! φ = id. Pointed categories have H trivial and b a bicharacter. Duals carry the
//! contragredient action and inverse grades; the pivotal structure is trivial in the
//! realized bases and sphericality is checked rather than assumed.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{Matrix, Sparse};
use crate::scalar::{lcm, Scalar};

/// A realized object: a K-graded space with H-action matrices for every element of H.
#[derive(Clone, Debug)]
pub struct Object<F> {
    inner: Arc<ObjectInner<F>>,
}

#[derive(Debug)]
struct ObjectInner<F> {
    label: String,
    grades: Vec<usize>,
    rho: Vec<Sparse<F>>,
}

impl<F: Scalar> Object<F> {
    fn new(label: String, grades: Vec<usize>, rho: Vec<Sparse<F>>) -> Self {
        Object {
            inner: Arc::new(ObjectInner { label, grades, rho }),
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.grades.len()
    }

    pub fn label(&self) -> &str {
        &self.inner.label
    }

    /// Grade (an element of K) of each basis vector.
    pub fn grades(&self) -> &[usize] {
        &self.inner.grades
    }

    /// Matrix of h ∈ H.
    pub fn rho(&self, h: usize) -> &Sparse<F> {
        &self.inner.rho[h]
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        Object::new(label.into(), self.inner.grades.clone(), self.inner.rho.clone())
    }

    /// Same underlying graded representation (basis-level equality).
    pub fn same_as(&self, other: &Object<F>) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || (self.inner.grades == other.inner.grades && self.inner.rho == other.inner.rho)
    }
}

/// A morphism with its endpoints.
#[derive(Clone, Debug)]
pub struct Morphism<F> {
    pub source: Object<F>,
    pub target: Object<F>,
    pub matrix: Matrix<F>,
}

impl<F: Scalar> Morphism<F> {
    pub fn new_unchecked(source: Object<F>, target: Object<F>, matrix: Matrix<F>) -> Self {
        assert_eq!(matrix.shape(), (target.dim(), source.dim()), "morphism matrix shape");
        Morphism { source, target, matrix }
    }
}

/// Which generator produced a category; used for reports and for choosing how the
/// regular algebra of a subcategory is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoryKind {
    Rep,
    DrinfeldDouble,
    Pointed,
}

/// The structure data (K, H, ▷, φ, b).
#[derive(Clone, Debug)]
pub struct BraidingData<F> {
    pub grading: FiniteGroup,
    pub acting: FiniteGroup,
    /// action[h][k] = h▷k
    pub action: Vec<Vec<usize>>,
    /// flux[k] = φ(k)
    pub flux: Vec<usize>,
    /// bichar[k][l] = b(k, l)
    pub bichar: Vec<Vec<F>>,
}

impl<F: Scalar> BraidingData<F> {
    /// Checks the conditions under which the braiding is a natural, hexagon-satisfying
    /// family of morphisms.
    pub fn validate(&self) -> Result<()> {
        let k_ord = self.grading.order();
        let h_ord = self.acting.order();
        let kg = &self.grading;
        let hg = &self.acting;
        if self.action.len() != h_ord || self.action.iter().any(|r| r.len() != k_ord) || self.flux.len() != k_ord {
            return Err(Error::InvalidCategory("structure tables have wrong sizes".into()));
        }
        if self.bichar.len() != k_ord || self.bichar.iter().any(|r| r.len() != k_ord) {
            return Err(Error::InvalidBicharacter("table has wrong size".into()));
        }
        for h in 0..h_ord {
            for a in 0..k_ord {
                for b in 0..k_ord {
                    if self.action[h][kg.mul(a, b)] != kg.mul(self.action[h][a], self.action[h][b]) {
                        return Err(Error::InvalidCategory(format!("{} does not act by automorphisms", hg.name(h))));
                    }
                }
                for h2 in 0..h_ord {
                    if self.action[hg.mul(h, h2)][a] != self.action[h][self.action[h2][a]] {
                        return Err(Error::InvalidCategory("action is not a homomorphism".into()));
                    }
                }
            }
        }
        for a in 0..k_ord {
            for b in 0..k_ord {
                if self.flux[kg.mul(a, b)] != hg.mul(self.flux[a], self.flux[b]) {
                    return Err(Error::InvalidCategory("flux map is not a homomorphism".into()));
                }
                if self.action[self.flux[a]][b] != kg.conj(a, b) {
                    return Err(Error::InvalidCategory(format!("flux of {} does not act by conjugation", kg.name(a))));
                }
            }
            for h in 0..h_ord {
                if self.flux[self.action[h][a]] != hg.conj(h, self.flux[a]) {
                    return Err(Error::InvalidCategory("flux map is not equivariant".into()));
                }
            }
        }
        for a in 0..k_ord {
            for b in 0..k_ord {
                let v = &self.bichar[a][b];
                if v.near_zero(1e-12) {
                    return Err(Error::InvalidBicharacter(format!("b({}, {}) = 0", kg.name(a), kg.name(b))));
                }
                for h in 0..h_ord {
                    if !self.bichar[self.action[h][a]][self.action[h][b]].approx_eq(v, 1e-9) {
                        return Err(Error::InvalidBicharacter("not invariant under the action".into()));
                    }
                }
                for c in 0..k_ord {
                    // b(a, bc) = b(a, b) b(a, c)
                    let lhs = &self.bichar[a][kg.mul(b, c)];
                    if !lhs.approx_eq(&v.mul(&self.bichar[a][c]), 1e-9) {
                        return Err(Error::InvalidBicharacter(format!(
                            "not multiplicative in the second slot at ({}, {}, {})",
                            kg.name(a),
                            kg.name(b),
                            kg.name(c)
                        )));
                    }
                    // b(ab, c) = b(a, b c b⁻¹) b(b, c)
                    let lhs = &self.bichar[kg.mul(a, b)][c];
                    let rhs = self.bichar[a][kg.conj(b, c)].mul(&self.bichar[b][c]);
                    if !lhs.approx_eq(&rhs, 1e-9) {
                        return Err(Error::InvalidBicharacter(format!(
                            "not multiplicative in the first slot at ({}, {}, {})",
                            kg.name(a),
                            kg.name(b),
                            kg.name(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A finite semisimple braided category with explicit simple objects.
#[derive(Clone, Debug)]
pub struct ConcreteCategory<F> {
    name: String,
    kind: CategoryKind,
    data: BraidingData<F>,
    acting_gens: Vec<usize>,
    simples: Vec<Object<F>>,
    labels: Vec<String>,
    declared_dim: F,
    field_order: u32,
    tol: f64,
}

impl<F: Scalar> ConcreteCategory<F> {
    /// Validates the structure data and the simples, then builds the category.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        kind: CategoryKind,
        data: BraidingData<F>,
        simples: Vec<(String, Vec<usize>, Vec<Sparse<F>>)>,
        declared_dim: F,
        field_order: u32,
        tol: f64,
    ) -> Result<Self> {
        data.validate()?;
        Self::new_unchecked(name, kind, data, simples, declared_dim, field_order, tol)
    }

    /// Builds without validating the braiding data (used for corrupted fixtures).
    #[allow(clippy::too_many_arguments)]
    pub fn new_unchecked(
        name: impl Into<String>,
        kind: CategoryKind,
        data: BraidingData<F>,
        simples: Vec<(String, Vec<usize>, Vec<Sparse<F>>)>,
        declared_dim: F,
        field_order: u32,
        tol: f64,
    ) -> Result<Self> {
        let acting_gens = generating_set(&data.acting);
        let mut objects = Vec::with_capacity(simples.len());
        let mut labels = Vec::with_capacity(simples.len());
        for (label, grades, rho) in simples {
            if rho.len() != data.acting.order() {
                return Err(Error::InvalidCategory(format!("simple {label} lacks action matrices")));
            }
            labels.push(label.clone());
            objects.push(Object::new(label, grades, rho));
        }
        let cat = ConcreteCategory {
            name: name.into(),
            kind,
            data,
            acting_gens,
            simples: objects,
            labels,
            declared_dim,
            field_order,
            tol,
        };
        for x in &cat.simples {
            cat.check_object(x)?;
        }
        Ok(cat)
    }

    /// The full subcategory on the given simples, with the same structure data. The
    /// declared global dimension becomes the computed one.
    pub fn restricted(&self, name: impl Into<String>, simples: &[usize]) -> ConcreteCategory<F> {
        let objects: Vec<Object<F>> = simples.iter().map(|&i| self.simples[i].clone()).collect();
        let labels = simples.iter().map(|&i| self.labels[i].clone()).collect();
        let mut cat = ConcreteCategory {
            name: name.into(),
            kind: self.kind,
            data: self.data.clone(),
            acting_gens: self.acting_gens.clone(),
            simples: objects,
            labels,
            declared_dim: F::zero(),
            field_order: self.field_order,
            tol: self.tol,
        };
        cat.declared_dim = cat.global_dimension();
        cat
    }

    /// Checks that the action matrices form a representation compatible with grades.
    pub fn check_object(&self, x: &Object<F>) -> Result<()> {
        let hg = &self.data.acting;
        for h in 0..hg.order() {
            for (r, c, _) in x.rho(h).triplets() {
                if x.grades()[r] != self.data.action[h][x.grades()[c]] {
                    return Err(Error::InvalidCategory(format!("{}: action of {} does not move grades correctly", x.label(), hg.name(h))));
                }
            }
            for h2 in 0..hg.order() {
                let lhs = x.rho(hg.mul(h, h2));
                let rhs = x.rho(h).mul(x.rho(h2));
                if !lhs.approx_eq(&rhs, self.tol) {
                    return Err(Error::InvalidCategory(format!("{}: action matrices are not a representation", x.label())));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> CategoryKind {
        self.kind
    }

    pub fn data(&self) -> &BraidingData<F> {
        &self.data
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Cyclotomic order sufficient for splitting algebras in this category.
    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn simples(&self) -> &[Object<F>] {
        &self.simples
    }

    pub fn simple(&self, i: usize) -> &Object<F> {
        &self.simples[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn declared_global_dimension(&self) -> &F {
        &self.declared_dim
    }

    pub fn unit(&self) -> Object<F> {
        let h = self.data.acting.order();
        Object::new("1".into(), vec![self.data.grading.identity()], vec![Sparse::identity(1); h])
    }

    /// Builds an object from raw grades and action matrices after checking them.
    pub fn object(&self, label: impl Into<String>, grades: Vec<usize>, rho: Vec<Sparse<F>>) -> Result<Object<F>> {
        let x = Object::new(label.into(), grades, rho);
        self.check_object(&x)?;
        Ok(x)
    }

    pub fn tensor(&self, x: &Object<F>, y: &Object<F>) -> Object<F> {
        let kg = &self.data.grading;
        let grades = x.grades().iter().flat_map(|&a| y.grades().iter().map(move |&b| kg.mul(a, b))).collect();
        let rho = (0..self.data.acting.order()).map(|h| x.rho(h).kron(y.rho(h))).collect();
        Object::new(format!("{}⊗{}", x.label(), y.label()), grades, rho)
    }

    pub fn tensor_all(&self, objects: &[&Object<F>]) -> Object<F> {
        objects.iter().skip(1).fold(objects[0].clone(), |acc, o| self.tensor(&acc, o))
    }

    pub fn direct_sum(&self, objects: &[Object<F>]) -> Object<F> {
        let n: usize = objects.iter().map(|o| o.dim()).sum();
        let grades = objects.iter().flat_map(|o| o.grades().iter().copied()).collect();
        let rho = (0..self.data.acting.order())
            .map(|h| {
                let mut entries = Vec::new();
                let mut offset = 0;
                for o in objects {
                    for (i, j, v) in o.rho(h).triplets() {
                        entries.push((offset + i, offset + j, v.clone()));
                    }
                    offset += o.dim();
                }
                Sparse::from_triplets(n, n, entries)
            })
            .collect();
        let labels: Vec<&str> = objects.iter().map(|o| o.label()).collect();
        Object::new(labels.join("⊕"), grades, rho)
    }

    /// X̄: inverse grades, action h ↦ ρ(h⁻¹)ᵀ.
    pub fn dual(&self, x: &Object<F>) -> Object<F> {
        let kg = &self.data.grading;
        let hg = &self.data.acting;
        let grades = x.grades().iter().map(|&a| kg.inv(a)).collect();
        let rho = (0..hg.order()).map(|h| x.rho(hg.inv(h)).transpose()).collect();
        Object::new(format!("{}*", x.label()), grades, rho)
    }

    pub fn identity(&self, x: &Object<F>) -> Morphism<F> {
        Morphism::new_unchecked(x.clone(), x.clone(), Matrix::identity(x.dim()))
    }

    /// Residual of the morphism conditions (grade preservation is exact, intertwining
    /// is measured).
    pub fn morphism_residual(&self, x: &Object<F>, y: &Object<F>, m: &Matrix<F>) -> f64 {
        if m.shape() != (y.dim(), x.dim()) {
            return f64::INFINITY;
        }
        let mut worst: f64 = 0.0;
        for i in 0..y.dim() {
            for j in 0..x.dim() {
                if y.grades()[i] != x.grades()[j] {
                    worst = worst.max(m.get(i, j).magnitude());
                }
            }
        }
        for &h in &self.acting_gens {
            let lhs = m.mul_sparse(x.rho(h));
            let rhs = sparse_mul_dense(y.rho(h), m);
            worst = worst.max(lhs.residual(&rhs));
        }
        worst
    }

    /// A checked morphism.
    pub fn morphism(&self, x: &Object<F>, y: &Object<F>, m: Matrix<F>) -> Result<Morphism<F>> {
        let r = self.morphism_residual(x, y, &m);
        if !within(r, self.tol) {
            return Err(Error::NotAMorphism(format!("{} → {}", x.label(), y.label()), r));
        }
        Ok(Morphism::new_unchecked(x.clone(), y.clone(), m))
    }

    pub fn compose(&self, g: &Morphism<F>, f: &Morphism<F>) -> Result<Morphism<F>> {
        if !f.target.same_as(&g.source) {
            return Err(Error::EndpointMismatch(format!("{} vs {}", f.target.label(), g.source.label())));
        }
        Ok(Morphism::new_unchecked(f.source.clone(), g.target.clone(), g.matrix.mul(&f.matrix)))
    }

    pub fn tensor_mor(&self, f: &Morphism<F>, g: &Morphism<F>) -> Morphism<F> {
        Morphism::new_unchecked(self.tensor(&f.source, &g.source), self.tensor(&f.target, &g.target), f.matrix.kron(&g.matrix))
    }

    /// Basis of Hom(X, Y), solved from grade preservation and intertwining with
    /// generators of H.
    pub fn hom_basis(&self, x: &Object<F>, y: &Object<F>) -> Vec<Matrix<F>> {
        let (m, n) = (y.dim(), x.dim());
        let mut unknown = vec![usize::MAX; m * n];
        let mut vars = Vec::new();
        for i in 0..m {
            for j in 0..n {
                if y.grades()[i] == x.grades()[j] {
                    unknown[i * n + j] = vars.len();
                    vars.push((i, j));
                }
            }
        }
        if vars.is_empty() {
            return Vec::new();
        }
        let mut entries = Vec::new();
        for (g_idx, &h) in self.acting_gens.iter().enumerate() {
            let ry_t = y.rho(h).transpose();
            let rx = x.rho(h);
            let base = g_idx * m * n;
            for (v, &(a, c)) in vars.iter().enumerate() {
                // T_{ac} enters (ρ_Y T)_{rc} with ρ_Y[r][a] and (T ρ_X)_{aj} with ρ_X[c][j].
                for (r, coef) in ry_t.row(a) {
                    entries.push((base + r * n + c, v, coef.clone()));
                }
                for (j, coef) in rx.row(c) {
                    entries.push((base + a * n + j, v, coef.neg()));
                }
            }
        }
        let eqs = Sparse::from_triplets(self.acting_gens.len() * m * n, vars.len(), entries);
        let nonzero_rows: Vec<usize> = (0..eqs.rows()).filter(|&r| eqs.row(r).next().is_some()).collect();
        let mut dense = Matrix::zeros(nonzero_rows.len(), vars.len());
        for (k, &r) in nonzero_rows.iter().enumerate() {
            for (c, v) in eqs.row(r) {
                dense.set(k, c, v.clone());
            }
        }
        dense
            .nullspace(self.tol)
            .into_iter()
            .map(|sol| {
                let mut t = Matrix::zeros(m, n);
                for (v, &(i, j)) in vars.iter().enumerate() {
                    t.set(i, j, sol[v].clone());
                }
                t
            })
            .collect()
    }

    pub fn hom_dim(&self, x: &Object<F>, y: &Object<F>) -> usize {
        self.hom_basis(x, y).len()
    }

    /// Multiplicity of each simple in X.
    pub fn decompose(&self, x: &Object<F>) -> Vec<usize> {
        self.simples.iter().map(|s| self.hom_dim(s, x)).collect()
    }

    /// Indices of the simples occurring in X.
    pub fn constituents(&self, x: &Object<F>) -> Vec<usize> {
        self.decompose(x).iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, _)| i).collect()
    }

    /// c_{X,Y}: X⊗Y → Y⊗X as a sparse matrix.
    pub fn braiding_sparse(&self, x: &Object<F>, y: &Object<F>) -> Sparse<F> {
        let (n, m) = (x.dim(), y.dim());
        let mut entries = Vec::new();
        let mut transposed: Vec<Option<Sparse<F>>> = vec![None; self.data.acting.order()];
        for i in 0..n {
            let k = x.grades()[i];
            let h = self.data.flux[k];
            let act = transposed[h].get_or_insert_with(|| y.rho(h).transpose());
            for j in 0..m {
                let b = &self.data.bichar[k][y.grades()[j]];
                // row j of ρ_Y(φ(k))ᵀ lists φ(k)·y_j
                for (r, v) in act.row(j) {
                    entries.push((r * n + i, i * m + j, b.mul(v)));
                }
            }
        }
        Sparse::from_triplets(n * m, n * m, entries)
    }

    /// c_{X,Y}⁻¹: Y⊗X → X⊗Y as a sparse matrix.
    pub fn inverse_braiding_sparse(&self, x: &Object<F>, y: &Object<F>) -> Sparse<F> {
        let (n, m) = (x.dim(), y.dim());
        let hg = &self.data.acting;
        let mut entries = Vec::new();
        let mut transposed: Vec<Option<Sparse<F>>> = vec![None; hg.order()];
        for i in 0..n {
            let k = x.grades()[i];
            let phi_inv = hg.inv(self.data.flux[k]);
            let act = transposed[phi_inv].get_or_insert_with(|| y.rho(phi_inv).transpose());
            for jp in 0..m {
                let l = self.data.action[phi_inv][y.grades()[jp]];
                let b = self.data.bichar[k][l].inv().expect("bicharacter values are invertible");
                for (r, v) in act.row(jp) {
                    entries.push((i * m + r, jp * n + i, b.mul(v)));
                }
            }
        }
        Sparse::from_triplets(n * m, n * m, entries)
    }

    pub fn braiding(&self, x: &Object<F>, y: &Object<F>) -> Morphism<F> {
        Morphism::new_unchecked(self.tensor(x, y), self.tensor(y, x), self.braiding_sparse(x, y).to_dense())
    }

    pub fn inverse_braiding(&self, x: &Object<F>, y: &Object<F>) -> Morphism<F> {
        Morphism::new_unchecked(self.tensor(y, x), self.tensor(x, y), self.inverse_braiding_sparse(x, y).to_dense())
    }

    /// c_{Y,X} ∘ c_{X,Y} on X⊗Y.
    pub fn monodromy_sparse(&self, x: &Object<F>, y: &Object<F>) -> Sparse<F> {
        self.braiding_sparse(y, x).mul(&self.braiding_sparse(x, y))
    }

    /// e_X: X̄⊗X → 𝟙.
    pub fn ev(&self, x: &Object<F>) -> Sparse<F> {
        let n = x.dim();
        Sparse::from_triplets(1, n * n, (0..n).map(|i| (0, i * n + i, F::one())).collect())
    }

    /// d_X: 𝟙 → X⊗X̄.
    pub fn coev(&self, x: &Object<F>) -> Sparse<F> {
        let n = x.dim();
        Sparse::from_triplets(n * n, 1, (0..n).map(|i| (i * n + i, 0, F::one())).collect())
    }

    /// X⊗X̄ → 𝟙 (right evaluation of the pivotal structure).
    pub fn ev_right(&self, x: &Object<F>) -> Sparse<F> {
        self.ev(x)
    }

    /// 𝟙 → X̄⊗X (right coevaluation of the pivotal structure).
    pub fn coev_right(&self, x: &Object<F>) -> Sparse<F> {
        self.coev(x)
    }

    /// δ_X = c_{X,X̄} ∘ d_X : 𝟙 → X̄⊗X.
    pub fn deligne_delta(&self, x: &Object<F>) -> Matrix<F> {
        let xd = self.dual(x);
        self.braiding_sparse(x, &xd).mul(&self.coev(x)).to_dense()
    }

    /// η_X = e_X ∘ c_{X,X̄} : X⊗X̄ → 𝟙.
    pub fn deligne_eta(&self, x: &Object<F>) -> Matrix<F> {
        let xd = self.dual(x);
        self.ev(x).mul(&self.braiding_sparse(x, &xd)).to_dense()
    }

    /// The pairing matrix P_{ij} = Σ_a C_{ia} E_{ja} built from d_X and the right
    /// evaluation; a right partial trace over X contracts with it.
    fn right_pairing(&self, x: &Object<F>) -> Matrix<F> {
        let n = x.dim();
        let c = reshape_vector(&self.coev(x).to_dense(), n);
        let e = reshape_vector(&self.ev_right(x).to_dense().transpose(), n);
        c.mul(&e.transpose())
    }

    /// The pairing for a left partial trace, from the right coevaluation and e_X.
    fn left_pairing(&self, x: &Object<F>) -> Matrix<F> {
        let n = x.dim();
        // coev_right = Σ C_{ai} x̄_a⊗x_i, ev(x̄_a⊗x_j) = E_{aj}; P_{ij} = Σ_a C_{ai} E_{aj}.
        let c = reshape_vector(&self.coev_right(x).to_dense(), n);
        let e = reshape_vector(&self.ev(x).to_dense().transpose(), n);
        c.transpose().mul(&e)
    }

    /// (1_B ⊗ ev_right_X) ∘ (f ⊗ 1_X̄) ∘ (1_A ⊗ d_X) for f: A⊗X → B⊗X, returned as A → B.
    pub fn right_partial_trace(&self, f: &Matrix<F>, x: &Object<F>) -> Matrix<F> {
        let n = x.dim();
        let a = f.cols() / n;
        let b = f.rows() / n;
        let p = self.right_pairing(x);
        Matrix::from_fn(b, a, |beta, alpha| {
            let mut acc = F::zero();
            for i in 0..n {
                for j in 0..n {
                    let w = p.get(i, j);
                    if !w.is_zero() {
                        acc.mul_acc(f.get(beta * n + j, alpha * n + i), w);
                    }
                }
            }
            acc
        })
    }

    /// (e_X ⊗ 1_B) ∘ (1_X̄ ⊗ f) ∘ (coev_right_X ⊗ 1_A) for f: X⊗A → X⊗B.
    pub fn left_partial_trace(&self, f: &Matrix<F>, x: &Object<F>) -> Matrix<F> {
        let n = x.dim();
        let a = f.cols() / n;
        let b = f.rows() / n;
        let p = self.left_pairing(x);
        Matrix::from_fn(b, a, |beta, alpha| {
            let mut acc = F::zero();
            for i in 0..n {
                for j in 0..n {
                    let w = p.get(i, j);
                    if !w.is_zero() {
                        acc.mul_acc(f.get(j * b + beta, i * a + alpha), w);
                    }
                }
            }
            acc
        })
    }

    /// Right trace of an endomorphism.
    pub fn trace(&self, f: &Matrix<F>, x: &Object<F>) -> F {
        self.right_partial_trace(f, x).get(0, 0).clone()
    }

    pub fn left_trace(&self, f: &Matrix<F>, x: &Object<F>) -> F {
        self.left_partial_trace(f, x).get(0, 0).clone()
    }

    pub fn dim(&self, x: &Object<F>) -> F {
        self.trace(&Matrix::identity(x.dim()), x)
    }

    /// θ_X: the right partial trace of c_{X,X}.
    pub fn twist(&self, x: &Object<F>) -> Matrix<F> {
        self.right_partial_trace(&self.braiding_sparse(x, x).to_dense(), x)
    }

    /// Σ d(X_i)² over simples.
    pub fn global_dimension(&self) -> F {
        self.simples.iter().fold(F::zero(), |acc, s| {
            let d = self.dim(s);
            acc.add(&d.mul(&d))
        })
    }

    /// Monodromy scalar between two simples: S(X,Y) / (d(X) d(Y)) when the
    /// monodromy acts by a scalar, computed from the S-matrix entry.
    pub fn s_entry(&self, x: &Object<F>, y: &Object<F>) -> F {
        // (Tr_X ⊗ Tr_Y)(c_{Y,X} ∘ c_{X,Y}) = trace on X⊗Y with product duality data.
        let xy = self.tensor(x, y);
        self.trace(&self.monodromy_sparse(x, y).to_dense(), &xy)
    }
}

/// Generators of a group, chosen greedily in index order.
pub fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![g.identity()];
    for a in 0..g.order() {
        if !span.contains(&a) {
            gens.push(a);
            span = g.generated(&gens);
        }
    }
    gens
}

pub(crate) fn within(r: f64, tol: f64) -> bool {
    r <= tol
}

/// Dense `s · m` with a sparse left factor.
pub fn sparse_mul_dense<F: Scalar>(s: &Sparse<F>, m: &Matrix<F>) -> Matrix<F> {
    s.mul_dense(m)
}

/// Reads an n²-vector (column matrix) as an n×n matrix, left factor major.
fn reshape_vector<F: Scalar>(v: &Matrix<F>, n: usize) -> Matrix<F> {
    Matrix::from_fn(n, n, |i, j| v.get(i * n + j, 0).clone())
}

/// Least common multiple of the relevant orders, used as a default field order.
pub fn default_field_order(exponents: &[usize]) -> u32 {
    exponents.iter().fold(1u64, |acc, &e| lcm(acc, e.max(1) as u64)) as u32
}
