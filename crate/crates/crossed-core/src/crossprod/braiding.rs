use super::{CrossedProduct, ExtMorphism, ExtObject};
use crate::error::Result;
use crate::scalar::Scalar;

/// c_{x,y} = ι(c_{X,Y}) ∘̂ (p ⊗̂ q): x⊗y → γ_g(y)⊗x for x = (X,p) of grade g.
pub fn crossed_braiding<F: Scalar>(cp: &CrossedProduct<'_, F>, x: &ExtObject<F>, y: &ExtObject<F>) -> Result<ExtMorphism<F>> {
    let c = cp.cat.braiding_sparse(&x.base, &y.base).to_dense();
    let xy = cp.cat.tensor(&x.base, &y.base);
    let yx = cp.cat.tensor(&y.base, &x.base);
    let pq = cp.tensor(&x.idempotent(), &y.idempotent());
    cp.compose(&cp.iota(&c, &xy, &yx), &pq)
}

/// (p ⊗̂ q) ∘̂ ι(c_{X,Y}⁻¹) ∘̂ (γ_g(q) ⊗̂ p): γ_g(y)⊗x → x⊗y.
pub fn crossed_braiding_inverse<F: Scalar>(cp: &CrossedProduct<'_, F>, x: &ExtObject<F>, g: usize, y: &ExtObject<F>) -> Result<ExtMorphism<F>> {
    let ci = cp.cat.inverse_braiding_sparse(&x.base, &y.base).to_dense();
    let xy = cp.cat.tensor(&x.base, &y.base);
    let yx = cp.cat.tensor(&y.base, &x.base);
    let qp = cp.tensor(&cp.act(g, &y.idempotent()), &x.idempotent());
    let pq = cp.tensor(&x.idempotent(), &y.idempotent());
    let mid = cp.compose(&cp.iota(&ci, &yx, &xy), &qp)?;
    cp.compose(&pq, &mid)
}
