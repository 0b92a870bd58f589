//! The regular Frobenius algebra Γ of a Tannakian subcategory S ≅ Rep(G), its
//! automorphism group and the fiber functor E(X) = Hom(𝟙, Γ⊗X).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::category::{generating_set, ConcreteCategory, Object};
use crate::error::{Error, Result};
use crate::generators::Subcategory;
use crate::group::FiniteGroup;
use crate::linalg::{split_idempotents, AlgebraPresentation, Matrix, Sparse, SplitOptions, Subspace};
use crate::scalar::Scalar;

/// How Γ is realized in the ambient category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    /// Functions on G = H/N, concentrated in the trivial grade, H acting by left
    /// translation. `projection[h]` is the coset of h.
    Functions { normal: Vec<usize>, projection: Vec<usize> },
    /// The group algebra of a subgroup L of grades (H trivial), G = L̂.
    GroupAlgebra { support: Vec<usize> },
}

/// (Γ, m, η, Δ, ε) with separability constants α, β and the automorphisms g ∈ G.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra<F> {
    pub object: Object<F>,
    pub m: Sparse<F>,
    pub eta: Sparse<F>,
    pub delta: Sparse<F>,
    pub epsilon: Sparse<F>,
    pub alpha: F,
    pub beta: F,
    pub group: FiniteGroup,
    /// automorphisms[g] is the matrix of g ∈ G acting on Γ.
    pub automorphisms: Vec<Sparse<F>>,
    pub subcategory: Subcategory,
    pub realization: Realization,
}

/// Builds the regular algebra of S.
pub fn regular_frobenius<F: Scalar>(cat: &ConcreteCategory<F>, sub: &Subcategory) -> Result<FrobeniusAlgebra<F>> {
    let data = cat.data();
    let kg = &data.grading;
    let e_k = kg.identity();
    let all_trivial_grade = sub.simples.iter().all(|&i| cat.simple(i).grades().iter().all(|&k| k == e_k));
    let frob = if all_trivial_grade {
        functions_algebra(cat, sub)?
    } else if data.acting.order() == 1 {
        group_algebra_of_grades(cat, sub)?
    } else {
        return Err(Error::Unsupported(
            "the regular algebra is realized only for subcategories of trivial grade or in pointed categories".into(),
        ));
    };
    frob.validate(cat)?;
    Ok(frob)
}

fn functions_algebra<F: Scalar>(cat: &ConcreteCategory<F>, sub: &Subcategory) -> Result<FrobeniusAlgebra<F>> {
    let hg = &cat.data().acting;
    let tol = cat.tol();
    let normal: Vec<usize> = (0..hg.order())
        .filter(|&h| {
            sub.simples.iter().all(|&i| {
                let x = cat.simple(i);
                x.rho(h).residual(&Sparse::identity(x.dim())) <= tol
            })
        })
        .collect();
    let (group, projection, _) = hg.quotient(&normal)?;
    let group = group.with_label(format!("{}/N", hg.label()));
    let n = group.order();
    let rho = (0..hg.order())
        .map(|h| Sparse::from_triplets(n, n, (0..n).map(|x| (group.mul(projection[h], x), x, F::one())).collect()))
        .collect();
    let object = cat.object("Γ", vec![cat.data().grading.identity(); n], rho)?;
    let nf = F::from_i64(n as i64);
    let inv_n = nf.inv().expect("nonzero order");
    let m = Sparse::from_triplets(n, n * n, (0..n).map(|x| (x, x * n + x, F::one())).collect());
    let eta = Sparse::from_triplets(n, 1, (0..n).map(|x| (x, 0, F::one())).collect());
    let delta = Sparse::from_triplets(n * n, n, (0..n).map(|x| (x * n + x, x, nf.clone())).collect());
    let epsilon = Sparse::from_triplets(1, n, (0..n).map(|x| (0, x, inv_n.clone())).collect());
    // R_g δ_x = δ_{x g⁻¹}
    let automorphisms = (0..n)
        .map(|g| Sparse::from_triplets(n, n, (0..n).map(|x| (group.mul(x, group.inv(g)), x, F::one())).collect()))
        .collect();
    Ok(FrobeniusAlgebra {
        object,
        m,
        eta,
        delta,
        epsilon,
        alpha: nf,
        beta: F::one(),
        group,
        automorphisms,
        subcategory: sub.clone(),
        realization: Realization::Functions { normal, projection },
    })
}

fn group_algebra_of_grades<F: Scalar>(cat: &ConcreteCategory<F>, sub: &Subcategory) -> Result<FrobeniusAlgebra<F>> {
    let kg = &cat.data().grading;
    let tol = cat.tol();
    let mut support: Vec<usize> = Vec::new();
    for &i in &sub.simples {
        let x = cat.simple(i);
        if x.dim() != 1 {
            return Err(Error::Unsupported("pointed subcategory with a non-invertible simple".into()));
        }
        support.push(x.grades()[0]);
    }
    support.sort_unstable();
    support.dedup();
    if !kg.is_subgroup(&support) || !kg.is_abelian() {
        return Err(Error::Unsupported("subcategory grades do not form an abelian subgroup".into()));
    }
    for &a in &support {
        for &b in &support {
            if !cat.data().bichar[a][b].is_one() && !(!F::EXACT && cat.data().bichar[a][b].approx_eq(&F::one(), tol)) {
                return Err(Error::Unsupported(format!(
                    "bicharacter is nontrivial on the subcategory at ({}, {}); a cocycle-twisted algebra would be needed",
                    kg.name(a),
                    kg.name(b)
                )));
            }
        }
    }
    let n = support.len();
    let pos = |k: usize| support.iter().position(|&x| x == k).expect("support is a subgroup");
    let object = cat.object("Γ", support.clone(), vec![Sparse::identity(n)])?;
    let m = Sparse::from_triplets(
        n,
        n * n,
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| (pos(kg.mul(support[a], support[b])), a * n + b, F::one())).collect(),
    );
    let unit = pos(kg.identity());
    let eta = Sparse::from_triplets(n, 1, vec![(unit, 0, F::one())]);
    let delta = Sparse::from_triplets(
        n * n,
        n,
        (0..n)
            .flat_map(|l| (0..n).map(move |a| (l, a)))
            .map(|(l, a)| {
                let b = pos(kg.mul(support[l], kg.inv(support[a])));
                (a * n + b, l, F::one())
            })
            .collect(),
    );
    let epsilon = Sparse::from_triplets(1, n, vec![(0, unit, F::one())]);

    let (group, chars) = character_group::<F>(kg, &support)?;
    let automorphisms = chars.iter().map(|chi| Sparse::from_triplets(n, n, (0..n).map(|l| (l, l, chi[l].clone())).collect())).collect();
    Ok(FrobeniusAlgebra {
        object,
        m,
        eta,
        delta,
        epsilon,
        alpha: F::from_i64(n as i64),
        beta: F::one(),
        group,
        automorphisms,
        subcategory: sub.clone(),
        realization: Realization::GroupAlgebra { support },
    })
}

/// Characters of the abelian subgroup `support` of K, as a group with value tables.
/// Values are exponents of ζ_M with M the exponent of K.
fn character_group<F: Scalar>(kg: &FiniteGroup, support: &[usize]) -> Result<(FiniteGroup, Vec<Vec<F>>)> {
    let (l, embedding) = kg.subgroup(support)?;
    let m = l.exponent().max(1);
    let gens = generating_set(&l);
    // A character is determined by its values on generators: χ(g_i) = ζ_m^{e_i} with
    // ord(g_i)·e_i ≡ 0 (mod m). Enumerate and keep the ones that are well defined.
    let choices: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let o = l.element_order(g);
            (0..o).map(|k| k * (m / o)).collect()
        })
        .collect();
    let mut tables: Vec<Vec<usize>> = Vec::new();
    let mut labels: Vec<Vec<usize>> = Vec::new();
    let mut idx = vec![0usize; gens.len()];
    loop {
        let exps: Vec<usize> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        if let Some(table) = extend_character(&l, &gens, &exps, m) {
            if !tables.contains(&table) {
                tables.push(table);
                labels.push(idx.clone());
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                break;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    if tables.len() != l.order() {
        return Err(Error::AutomorphismCount {
            found: tables.len(),
            expected: l.order(),
        });
    }
    // Identity first, then in enumeration order.
    let trivial = tables.iter().position(|t| t.iter().all(|&v| v == 0)).unwrap();
    let t0 = tables.remove(trivial);
    let l0 = labels.remove(trivial);
    tables.insert(0, t0);
    labels.insert(0, l0);
    let n = tables.len();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let prod: Vec<usize> = tables[a].iter().zip(&tables[b]).map(|(x, y)| (x + y) % m).collect();
                    tables.iter().position(|t| *t == prod).unwrap()
                })
                .collect()
        })
        .collect();
    let group = FiniteGroup::from_table(table, None)?;
    let names: Vec<String> = match (0..n).find(|&g| group.element_order(g) == n) {
        Some(gen) if n > 1 => {
            let mut names = vec![String::new(); n];
            let mut x = group.identity();
            for k in 0..n {
                names[x] = match k {
                    0 => "e".to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{k}"),
                };
                x = group.mul(x, gen);
            }
            names
        }
        _ => labels
            .iter()
            .enumerate()
            .map(|(i, idx)| {
                if i == 0 {
                    "e".to_string()
                } else {
                    let parts: Vec<String> = idx.iter().map(|k| k.to_string()).collect();
                    format!("chi({})", parts.join(","))
                }
            })
            .collect(),
    };
    let group = group.with_names(names)?.with_label("L^");
    // Values in support order; `embedding` lists support elements in the same order.
    debug_assert_eq!(embedding, support);
    let values = tables
        .iter()
        .map(|t| {
            t.iter()
                .map(|&e| F::root_of_unity(e as i64, m as u32).ok_or_else(|| Error::FieldTooSmall(format!("{} backend lacks {m}-th roots of unity", F::BACKEND))))
                .collect::<Result<Vec<F>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((group, values))
}

/// Extends generator values to a character table on L (exponents mod m), if consistent.
fn extend_character(l: &FiniteGroup, gens: &[usize], exps: &[usize], m: usize) -> Option<Vec<usize>> {
    let mut table = vec![usize::MAX; l.order()];
    table[l.identity()] = 0;
    let mut frontier = vec![l.identity()];
    while let Some(x) = frontier.pop() {
        for (&g, &e) in gens.iter().zip(exps) {
            let y = l.mul(x, g);
            let v = (table[x] + e) % m;
            if table[y] == usize::MAX {
                table[y] = v;
                frontier.push(y);
            } else if table[y] != v {
                return None;
            }
        }
    }
    for a in 0..l.order() {
        for b in 0..l.order() {
            if table[l.mul(a, b)] != (table[a] + table[b]) % m {
                return None;
            }
        }
    }
    Some(table)
}

impl<F: Scalar> FrobeniusAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// p₀ = η∘ε ∈ End(Γ).
    pub fn p0(&self) -> Sparse<F> {
        self.eta.mul(&self.epsilon)
    }

    pub fn automorphism(&self, g: usize) -> &Sparse<F> {
        &self.automorphisms[g]
    }

    /// Γ as an algebra presented by its multiplication.
    pub fn algebra(&self, tol: f64) -> Result<AlgebraPresentation<F>> {
        let n = self.dim();
        let m = self.m.to_dense();
        AlgebraPresentation::from_products(n, self.eta.to_dense().column_vec(0), |a, b| m.column_vec(a * n + b), tol)
    }

    /// Residuals of the monoid, comonoid, Frobenius, (co)commutativity and morphism laws.
    pub fn law_residuals(&self, cat: &ConcreteCategory<F>) -> Vec<(&'static str, f64)> {
        let n = self.dim();
        let id = Sparse::identity(n);
        let m = &self.m;
        let d = &self.delta;
        let g = &self.object;
        let c = cat.braiding_sparse(g, g);
        let gg = cat.tensor(g, g);
        vec![
            ("associativity", m.mul(&m.embed(1, n)).residual(&m.mul(&m.embed(n, 1)))),
            ("left unit", m.mul(&self.eta.embed(1, n)).residual(&id)),
            ("right unit", m.mul(&self.eta.embed(n, 1)).residual(&id)),
            ("coassociativity", d.embed(1, n).mul(d).residual(&d.embed(n, 1).mul(d))),
            ("left counit", self.epsilon.embed(1, n).mul(d).residual(&id)),
            ("right counit", self.epsilon.embed(n, 1).mul(d).residual(&id)),
            ("frobenius left", m.embed(n, 1).mul(&d.embed(1, n)).residual(&d.mul(m))),
            ("frobenius right", m.embed(1, n).mul(&d.embed(n, 1)).residual(&d.mul(m))),
            ("commutativity", m.mul(&c).residual(m)),
            ("cocommutativity", c.mul(d).residual(d)),
            ("m is a morphism", cat.morphism_residual(&gg, g, &m.to_dense())),
            ("eta is a morphism", cat.morphism_residual(&cat.unit(), g, &self.eta.to_dense())),
            ("delta is a morphism", cat.morphism_residual(g, &gg, &d.to_dense())),
            ("epsilon is a morphism", cat.morphism_residual(g, &cat.unit(), &self.epsilon.to_dense())),
        ]
    }

    /// Fails with the first law or normalization identity violated beyond tolerance.
    pub fn validate(&self, cat: &ConcreteCategory<F>) -> Result<()> {
        let tol = cat.tol();
        let laws = self.law_residuals(cat).into_iter().chain(self.normalization_residuals());
        for (name, r) in laws {
            if (F::EXACT && r != 0.0) || r > tol {
                return Err(Error::FrobeniusLaw(format!("{name} (residual {r:.3e})")));
            }
        }
        Ok(())
    }

    /// Residuals of m∘Δ = α·1, ε∘η = β, α = |G|, β = 1.
    pub fn normalization_residuals(&self) -> Vec<(&'static str, f64)> {
        let n = self.dim();
        let md = self.m.mul(&self.delta);
        let en = self.epsilon.mul(&self.eta);
        let order = F::from_i64(self.order() as i64);
        vec![
            ("m∘Δ = α", md.residual(&Sparse::identity(n).scale(&self.alpha))),
            ("ε∘η = β", en.residual(&Sparse::identity(1).scale(&self.beta))),
            ("α = |G|", crate::scalar::residual(&self.alpha, &order)),
            ("β = 1", crate::scalar::residual(&self.beta, &F::one())),
        ]
    }

    /// Residuals of g∘m = m∘(g⊗g), g∘η = η, Δ∘g = (g⊗g)∘Δ, ε∘g = ε and the morphism
    /// property, for a candidate g ∈ End(Γ).
    pub fn automorphism_residual(&self, cat: &ConcreteCategory<F>, g: &Matrix<F>) -> f64 {
        let gs = Sparse::from_dense(g);
        let gg = gs.kron(&gs);
        let r1 = gs.mul(&self.m).residual(&self.m.mul(&gg));
        let r2 = gs.mul(&self.eta).residual(&self.eta);
        let r3 = self.delta.mul(&gs).residual(&gg.mul(&self.delta));
        let r4 = self.epsilon.mul(&gs).residual(&self.epsilon);
        let r5 = cat.morphism_residual(&self.object, &self.object, g);
        r1.max(r2).max(r3).max(r4).max(r5)
    }

    /// Index of the automorphism closest to `g` and the residual, together with the
    /// second-best residual (for margin tests).
    pub fn match_automorphism(&self, g: &Matrix<F>) -> (usize, f64, f64) {
        let mut scores: Vec<(f64, usize)> = self.automorphisms.iter().enumerate().map(|(i, a)| (g.residual(&a.to_dense()), i)).collect();
        scores.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(core::cmp::Ordering::Equal));
        let second = scores.get(1).map(|s| s.0).unwrap_or(f64::INFINITY);
        (scores[0].1, scores[0].0, second)
    }
}

/// Algebra automorphisms of Γ found independently: permutations of the primitive
/// idempotents of (Γ, m) that are morphisms in the ambient category.
pub fn solve_automorphisms<F: Scalar>(cat: &ConcreteCategory<F>, frob: &FrobeniusAlgebra<F>, seed: u64) -> Result<Vec<Matrix<F>>> {
    let tol = cat.tol();
    let alg = frob.algebra(tol)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let split = split_idempotents(&alg, SplitOptions::new(tol, cat.field_order()), &mut rng)?;
    let idem = split.minimal_idempotents();
    let n = frob.dim();
    if idem.len() != n {
        return Err(Error::BadAlgebra(format!("Γ has {} primitive idempotents, expected {n}", idem.len())));
    }
    let e = Matrix::from_fn(n, n, |i, j| idem[j][i].clone());
    let e_inv = e.inverse(tol)?;
    let mut found = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let target = Matrix::from_fn(n, n, |i, j| idem[p[j]][i].clone());
        let g = target.mul(&e_inv);
        if cat.morphism_residual(&frob.object, &frob.object, &g) <= tol.max(1e-12) * 1e3 && frob.automorphism_residual(cat, &g) <= tol.max(1e-12) * 1e3 {
            found.push(g);
        }
    });
    Ok(found)
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

/// E(X) = Hom(𝟙, Γ⊗X) with the G-action φ ↦ (g⊗1)∘φ.
#[derive(Clone, Debug)]
pub struct FiberSpace<F> {
    pub object: Object<F>,
    pub space: Subspace<F>,
    /// action[g] in the coordinates of `space`.
    pub action: Vec<Matrix<F>>,
}

impl<F: Scalar> FiberSpace<F> {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

pub fn fiber<F: Scalar>(cat: &ConcreteCategory<F>, frob: &FrobeniusAlgebra<F>, x: &Object<F>) -> Result<FiberSpace<F>> {
    let gx = cat.tensor(&frob.object, x);
    let basis: Vec<Vec<F>> = cat.hom_basis(&cat.unit(), &gx).into_iter().map(|m| m.column_vec(0)).collect();
    let ambient = gx.dim();
    let space = if basis.is_empty() {
        Subspace::new(Vec::new(), ambient, cat.tol())?
    } else {
        Subspace::new(basis, ambient, cat.tol())?
    };
    let action = frob
        .automorphisms
        .iter()
        .map(|g| {
            let gx_map = g.embed(1, x.dim());
            let cols: Vec<Vec<F>> = space.basis().iter().map(|v| space.coords(&gx_map.mul_dense(&Matrix::column(v.clone())).column_vec(0))).collect();
            Matrix::from_fn(space.dim(), space.dim(), |i, j| cols[j][i].clone())
        })
        .collect();
    Ok(FiberSpace {
        object: x.clone(),
        space,
        action,
    })
}

/// d_{X,Y}(φ⊠ψ) = (m⊗1_X⊗1_Y) ∘ (1_Γ⊗φ⊗1_Y) ∘ ψ, as a matrix from E(X)⊗E(Y) (Kronecker
/// coordinates) to E(X⊗Y) coordinates.
pub fn fiber_tensor_map<F: Scalar>(cat: &ConcreteCategory<F>, frob: &FrobeniusAlgebra<F>, ex: &FiberSpace<F>, ey: &FiberSpace<F>, exy: &FiberSpace<F>) -> Matrix<F> {
    let n = frob.dim();
    let (dx, dy) = (ex.object.dim(), ey.object.dim());
    let m_map = frob.m.embed(1, dx * dy);
    let mut cols = Vec::with_capacity(ex.dim() * ey.dim());
    for phi in ex.space.basis() {
        // 1_Γ ⊗ φ ⊗ 1_Y : Γ⊗Y → Γ⊗Γ⊗X⊗Y
        let phi_m = Sparse::from_dense(&Matrix::column(phi.clone()));
        let lift = phi_m.embed(n, dy);
        let _ = cat;
        for psi in ey.space.basis() {
            let v = lift.mul_dense(&Matrix::column(psi.clone()));
            let w = m_map.mul_dense(&v).column_vec(0);
            cols.push(exy.space.coords(&w));
        }
    }
    Matrix::from_fn(exy.dim(), cols.len(), |i, j| cols[j][i].clone())
}

/// Labels of the group elements.
pub fn group_names<F: Scalar>(frob: &FrobeniusAlgebra<F>) -> Vec<String> {
    frob.group.names().iter().map(|s| s.to_string()).collect()
}
