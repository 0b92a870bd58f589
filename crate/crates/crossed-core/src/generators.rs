//! Instances: Rep(G), the Drinfeld double Rep(D(G)), pointed categories, and
//! Tannakian subcategories.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::Float;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::{default_field_order, BraidingData, CategoryKind, ConcreteCategory};
use crate::error::{Error, Result};
use crate::group::{all_coords, FiniteGroup};
use crate::linalg::{split_idempotents, AlgebraPresentation, Matrix, Sparse, SplitOptions, Subspace};
use crate::scalar::Scalar;

/// Tolerance and seed shared by the constructions.
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub tol: f64,
    pub seed: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { tol: 1e-9, seed: 0 }
    }
}

/// An irreducible representation: label and one matrix per group element.
#[derive(Clone, Debug)]
pub struct Irrep<F> {
    pub label: String,
    pub matrices: Vec<Matrix<F>>,
}

impl<F: Scalar> Irrep<F> {
    pub fn dim(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn character(&self) -> Vec<F> {
        self.matrices.iter().map(|m| m.trace()).collect()
    }
}

/// The group algebra 𝔽[G] in the basis of group elements.
pub fn group_algebra<F: Scalar>(g: &FiniteGroup, tol: f64) -> Result<AlgebraPresentation<F>> {
    let n = g.order();
    let mut unit = vec![F::zero(); n];
    unit[g.identity()] = F::one();
    let alg = AlgebraPresentation::from_products(
        n,
        unit,
        |a, b| {
            let mut v = vec![F::zero(); n];
            v[g.mul(a, b)] = F::one();
            v
        },
        tol,
    )?;
    Ok(alg.with_labels(g.names().to_vec()))
}

/// Irreducible representations of G from minimal left ideals of 𝔽[G], sorted by
/// dimension and then character; the trivial one is labelled "1", the rest r1, r2, ….
pub fn irreps<F: Scalar>(g: &FiniteGroup, opts: BuildOptions) -> Result<Vec<Irrep<F>>> {
    let n = g.order();
    let alg = group_algebra::<F>(g, opts.tol)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let split = split_idempotents(&alg, SplitOptions::new(opts.tol, g.exponent() as u32), &mut rng)?;
    let mut reps: Vec<Vec<Matrix<F>>> = Vec::new();
    for block in &split.blocks {
        let e = &block.minimal[0];
        let ideal: Vec<Vec<F>> = (0..n).map(|a| alg.mul(&alg.basis_element(a), e)).collect();
        let space = Subspace::spanned_by(&ideal, n, opts.tol)?;
        if space.dim() != block.size {
            return Err(Error::BadAlgebra(format!("left ideal of dimension {} in a block of size {}", space.dim(), block.size)));
        }
        let mats = (0..n)
            .map(|h| {
                let hm = alg.basis_element(h);
                let cols: Vec<Vec<F>> = space.basis().iter().map(|v| space.coords(&alg.mul(&hm, v))).collect();
                Matrix::from_fn(space.dim(), space.dim(), |i, j| cols[j][i].clone())
            })
            .collect();
        reps.push(mats);
    }
    let key = |m: &Vec<Matrix<F>>| -> (usize, Vec<(i64, i64)>) {
        let chars = m
            .iter()
            .map(|x| {
                let z: Complex64 = x.trace().to_complex();
                (Float::round(z.re * 1e6) as i64, Float::round(z.im * 1e6) as i64)
            })
            .collect();
        (m[0].rows(), chars)
    };
    let trivial_key = (1usize, vec![(1_000_000i64, 0i64); n]);
    reps.sort_by(|a, b| {
        let (ka, kb) = (key(a), key(b));
        let ta = ka == trivial_key;
        let tb = kb == trivial_key;
        tb.cmp(&ta).then(ka.0.cmp(&kb.0)).then(ka.1.cmp(&kb.1))
    });
    let mut out = Vec::with_capacity(reps.len());
    let mut counter = 0;
    for mats in reps {
        let trivial = key(&mats) == trivial_key;
        let label = if trivial {
            "1".to_string()
        } else {
            counter += 1;
            format!("r{counter}")
        };
        out.push(Irrep { label, matrices: mats });
    }
    Ok(out)
}

fn to_sparse<F: Scalar>(m: &Matrix<F>) -> Sparse<F> {
    Sparse::from_dense(m)
}

/// Rep(G): K trivial, H = G, symmetric flip braiding.
pub fn rep_category<F: Scalar>(g: &FiniteGroup, opts: BuildOptions) -> Result<ConcreteCategory<F>> {
    let k = FiniteGroup::trivial();
    let data = BraidingData {
        grading: k,
        acting: g.clone(),
        action: vec![vec![0]; g.order()],
        flux: vec![g.identity()],
        bichar: vec![vec![F::one()]],
    };
    let simples = irreps::<F>(g, opts)?
        .into_iter()
        .map(|r| {
            let d = r.dim();
            (r.label.clone(), vec![0; d], r.matrices.iter().map(to_sparse).collect())
        })
        .collect();
    ConcreteCategory::new(
        format!("Rep({})", group_label(g)),
        CategoryKind::Rep,
        data,
        simples,
        F::from_i64(g.order() as i64),
        default_field_order(&[g.exponent()]),
        opts.tol,
    )
}

/// Rep(D(G)): G-graded G-modules with g·V_h ⊂ V_{ghg⁻¹}. Simples are induced from
/// irreps of centralizers: for a class C with representative g_C (its smallest element)
/// and coset representatives t_c (t_c g_C t_c⁻¹ = c), h·(c, v) = (hch⁻¹, π(t_{hch⁻¹}⁻¹ h t_c) v).
pub fn drinfeld_double<F: Scalar>(g: &FiniteGroup, opts: BuildOptions) -> Result<ConcreteCategory<F>> {
    let n = g.order();
    let data = BraidingData {
        grading: g.clone(),
        acting: g.clone(),
        action: (0..n).map(|h| (0..n).map(|k| g.conj(h, k)).collect()).collect(),
        flux: (0..n).collect(),
        bichar: vec![vec![F::one(); n]; n],
    };
    let mut simples = Vec::new();
    for class in g.conjugacy_classes() {
        let rep = class[0];
        let (z, embedding) = g.subgroup(&g.centralizer(rep))?;
        let t: Vec<usize> = class.iter().map(|&c| (0..n).find(|&x| g.conj(x, rep) == c).unwrap()).collect();
        let pos = |c: usize| class.iter().position(|&x| x == c).unwrap();
        for pi in irreps::<F>(&z, opts)? {
            let d = pi.dim();
            let dim = class.len() * d;
            let grades: Vec<usize> = class.iter().flat_map(|&c| core::iter::repeat(c).take(d)).collect();
            let rho = (0..n)
                .map(|h| {
                    let mut entries = Vec::new();
                    for (ci, &c) in class.iter().enumerate() {
                        let cp = g.conj(h, c);
                        let cpi = pos(cp);
                        let zz = g.mul(g.mul(g.inv(t[cpi]), h), t[ci]);
                        let zi = embedding.iter().position(|&x| x == zz).expect("element lies in the centralizer");
                        let m = &pi.matrices[zi];
                        for a in 0..d {
                            for b in 0..d {
                                let v = m.get(a, b);
                                if !v.is_zero() {
                                    entries.push((cpi * d + a, ci * d + b, v.clone()));
                                }
                            }
                        }
                    }
                    Sparse::from_triplets(dim, dim, entries)
                })
                .collect();
            simples.push((format!("{}:{}", g.name(rep), pi.label), grades, rho));
        }
    }
    ConcreteCategory::new(
        format!("D({})", group_label(g)),
        CategoryKind::DrinfeldDouble,
        data,
        simples,
        F::from_i64((n * n) as i64),
        default_field_order(&[g.exponent()]),
        opts.tol,
    )
}

/// Bicharacter of a pointed category, b(a, a') = ζ_M^{Σ a_i E_ij a'_j}.
#[derive(Clone, Debug)]
pub struct PointedSpec {
    pub orders: Vec<usize>,
    pub exponents: Vec<Vec<i64>>,
    pub root_order: Option<u32>,
    /// Labels in index order (mixed radix, first coordinate most significant).
    pub labels: Option<Vec<String>>,
}

impl PointedSpec {
    pub fn root(&self) -> u32 {
        self.root_order.unwrap_or_else(|| default_field_order(&self.orders))
    }
}

fn pointed_data<F: Scalar>(spec: &PointedSpec) -> Result<(FiniteGroup, BraidingData<F>, Vec<String>)> {
    let r = spec.orders.len();
    if spec.exponents.len() != r || spec.exponents.iter().any(|row| row.len() != r) {
        return Err(Error::InvalidBicharacter(format!("exponent matrix must be {r}×{r}")));
    }
    let a = FiniteGroup::abelian(&spec.orders);
    let coords = all_coords(&spec.orders);
    let m = spec.root();
    let mut bichar = Vec::with_capacity(a.order());
    for x in &coords {
        let mut row = Vec::with_capacity(a.order());
        for y in &coords {
            let mut e: i64 = 0;
            for i in 0..r {
                for j in 0..r {
                    e += x[i] as i64 * spec.exponents[i][j] * y[j] as i64;
                }
            }
            row.push(F::root_of_unity(e, m).ok_or_else(|| Error::FieldTooSmall(format!("{} backend lacks primitive {m}-th roots of unity", F::BACKEND)))?);
        }
        bichar.push(row);
    }
    let labels = match &spec.labels {
        Some(l) => {
            if l.len() != a.order() {
                return Err(Error::InvalidCategory(format!("{} labels for {} simples", l.len(), a.order())));
            }
            l.clone()
        }
        None => a.names().to_vec(),
    };
    let a = a.with_names(labels.clone())?;
    let data = BraidingData {
        grading: a.clone(),
        acting: FiniteGroup::trivial(),
        action: vec![(0..a.order()).collect()],
        flux: vec![0; a.order()],
        bichar,
    };
    Ok((a, data, labels))
}

/// The pointed category over A = Z_{n_1} × … with the given bicharacter.
pub fn pointed_category<F: Scalar>(spec: &PointedSpec, opts: BuildOptions) -> Result<ConcreteCategory<F>> {
    let (a, data, labels) = pointed_data::<F>(spec)?;
    let simples = labels.into_iter().enumerate().map(|(i, l)| (l, vec![i], vec![Sparse::identity(1)])).collect();
    let order = default_field_order(&[a.exponent(), spec.root() as usize]);
    ConcreteCategory::new(
        pointed_name(spec),
        CategoryKind::Pointed,
        data,
        simples,
        F::from_i64(a.order() as i64),
        order,
        opts.tol,
    )
}

/// Like [`pointed_category`] but with b(x, y) replaced at one entry, skipping
/// validation. Used to build a category whose hexagons fail.
pub fn corrupted_pointed_category<F: Scalar>(spec: &PointedSpec, entry: (usize, usize), value: F, opts: BuildOptions) -> Result<ConcreteCategory<F>> {
    let (a, mut data, labels) = pointed_data::<F>(spec)?;
    data.bichar[entry.0][entry.1] = value;
    let simples = labels.into_iter().enumerate().map(|(i, l)| (l, vec![i], vec![Sparse::identity(1)])).collect();
    let order = default_field_order(&[a.exponent(), spec.root() as usize]);
    ConcreteCategory::new_unchecked(
        format!("{} (corrupted)", pointed_name(spec)),
        CategoryKind::Pointed,
        data,
        simples,
        F::from_i64(a.order() as i64),
        order,
        opts.tol,
    )
}

fn pointed_name(spec: &PointedSpec) -> String {
    let parts: Vec<String> = spec.orders.iter().map(|n| format!("Z{n}")).collect();
    format!("Vec({})", parts.join("x"))
}

fn group_label(g: &FiniteGroup) -> String {
    g.label().to_string()
}

/// A full subcategory closed under tensor products, duals and subobjects, given by
/// simple indices (sorted, unit first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subcategory {
    pub simples: Vec<usize>,
}

impl Subcategory {
    pub fn contains(&self, i: usize) -> bool {
        self.simples.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }
}

/// Index of the simple isomorphic to the tensor unit.
pub fn unit_index<F: Scalar>(cat: &ConcreteCategory<F>) -> usize {
    let u = cat.unit();
    cat.simples().iter().position(|s| cat.hom_dim(&u, s) == 1).expect("some simple is the unit")
}

/// Tensor/dual closure of the given simples.
pub fn closure<F: Scalar>(cat: &ConcreteCategory<F>, generators: &[usize]) -> Subcategory {
    let mut set = vec![unit_index(cat)];
    for &g in generators {
        if !set.contains(&g) {
            set.push(g);
        }
    }
    loop {
        let mut added = Vec::new();
        for &i in &set {
            let d = cat.dual(cat.simple(i));
            for c in cat.constituents(&d) {
                if !set.contains(&c) && !added.contains(&c) {
                    added.push(c);
                }
            }
            for &j in &set {
                let t = cat.tensor(cat.simple(i), cat.simple(j));
                for c in cat.constituents(&t) {
                    if !set.contains(&c) && !added.contains(&c) {
                        added.push(c);
                    }
                }
            }
        }
        if added.is_empty() {
            break;
        }
        set.extend(added);
    }
    set.sort_unstable();
    let u = unit_index(cat);
    set.retain(|&x| x != u);
    set.insert(0, u);
    Subcategory { simples: set }
}

/// The subcategory generated by `labels`, certified symmetric with trivial twists and
/// positive integer dimensions.
pub fn tannakian_subcategory<F: Scalar>(cat: &ConcreteCategory<F>, labels: &[String]) -> Result<Subcategory> {
    let gens = labels.iter().map(|l| cat.label_index(l)).collect::<Result<Vec<_>>>()?;
    let sub = closure(cat, &gens);
    let tol = cat.tol();
    for (a, &i) in sub.simples.iter().enumerate() {
        for &j in &sub.simples[a..] {
            let (x, y) = (cat.simple(i), cat.simple(j));
            let mono = cat.monodromy_sparse(x, y).to_dense();
            if mono.residual(&Matrix::identity(x.dim() * y.dim())) > tol {
                return Err(Error::NotSymmetric(cat.labels()[i].clone(), cat.labels()[j].clone()));
            }
        }
    }
    for &i in &sub.simples {
        let x = cat.simple(i);
        if cat.twist(x).residual(&Matrix::identity(x.dim())) > tol {
            return Err(Error::NonTrivialTwist(cat.labels()[i].clone()));
        }
    }
    for &i in &sub.simples {
        let d = cat.dim(cat.simple(i));
        match d.as_integer(tol) {
            Some(k) if k > 0 => {}
            _ => return Err(Error::NonIntegralDimension(cat.labels()[i].clone())),
        }
    }
    Ok(sub)
}
