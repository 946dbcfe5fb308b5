use std::collections::BTreeMap;

use super::algebra::{Algebra, ConstVec, LieAlgebraBuilder};
use super::element::{same_algebra, LieElement};
use super::span::{invert, Row};
use crate::error::{Error, Result};
use crate::scalars::{GaussianRational, Scalar};

/// Named images of generators: `(generator, [(target generator, coefficient)])`.
pub type ImageSpec<'a> = [(&'a str, &'a [(&'a str, GaussianRational)])];

fn parse_images(from: &Algebra, to: &Algebra, spec: &ImageSpec<'_>) -> Result<Vec<ConstVec>> {
    let mut out: Vec<Option<ConstVec>> = vec![None; from.dim()];
    for (g, img) in spec {
        let mut v: BTreeMap<usize, GaussianRational> = BTreeMap::new();
        for (n, c) in img.iter() {
            *v.entry(to.index_of(n)?).or_default() += c;
        }
        out[from.index_of(g)?] = Some(v.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    }
    out.into_iter()
        .enumerate()
        .map(|(j, v)| {
            v.ok_or_else(|| {
                Error::Invalid(format!("no image given for {}", from.generator_name(j)))
            })
        })
        .collect()
}

fn apply_images(images: &[ConstVec], to: &Algebra, x: &LieElement) -> LieElement {
    let mut out = LieElement::zero(to);
    for (j, c) in x.terms() {
        for (l, d) in &images[j] {
            out.add_term(*l, &c.scale(d));
        }
    }
    out
}

/// A linear isomorphism between two presentations of the same algebra.
#[derive(Clone, Debug)]
pub struct BasisMap {
    name: String,
    source: Algebra,
    target: Algebra,
    forward: Vec<ConstVec>,
    backward: Vec<ConstVec>,
}

impl BasisMap {
    /// `forward` gives each source generator in target coordinates,
    /// `backward` each target generator in source coordinates. Both
    /// round trips and the bracket compatibility are verified.
    pub fn new(
        name: &str,
        source: &Algebra,
        target: &Algebra,
        forward: &ImageSpec<'_>,
        backward: &ImageSpec<'_>,
    ) -> Result<Self> {
        let m = BasisMap {
            name: name.to_string(),
            source: source.clone(),
            target: target.clone(),
            forward: parse_images(source, target, forward)?,
            backward: parse_images(target, source, backward)?,
        };
        for j in 0..source.dim() {
            let x = LieElement::basis(source, j);
            if m.apply_backward(&m.apply(&x)?)? != x {
                return Err(Error::Invalid(format!("{name}: round trip fails on {x}")));
            }
            for k in 0..source.dim() {
                let y = LieElement::basis(source, k);
                if m.apply(&x.bracket(&y)?)? != m.apply(&x)?.bracket(&m.apply(&y)?)? {
                    return Err(Error::Invalid(format!(
                        "{name}: bracket [{x}, {y}] not preserved"
                    )));
                }
            }
        }
        for j in 0..target.dim() {
            let x = LieElement::basis(target, j);
            if m.apply(&m.apply_backward(&x)?)? != x {
                return Err(Error::Invalid(format!("{name}: round trip fails on {x}")));
            }
        }
        Ok(m)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    /// Rewrites a source-basis element in the target basis.
    pub fn apply(&self, x: &LieElement) -> Result<LieElement> {
        same_algebra(&self.source, x.algebra())?;
        Ok(apply_images(&self.forward, &self.target, x))
    }

    /// Rewrites a target-basis element in the source basis.
    pub fn apply_backward(&self, x: &LieElement) -> Result<LieElement> {
        same_algebra(&self.target, x.algebra())?;
        Ok(apply_images(&self.backward, &self.source, x))
    }
}

/// Derives structure constants for a new basis `names[a] = Σ images[a]`
/// expressed in the basis of `source`. The star map and grading are not
/// transported.
pub fn transport_structure(
    source: &Algebra,
    name: &str,
    names: &[&str],
    images: &[Vec<(&str, GaussianRational)>],
) -> Result<LieAlgebraBuilder> {
    let n = source.dim();
    if names.len() != n || images.len() != n {
        return Err(Error::Invalid("new basis must have the source dimension".into()));
    }
    let mut rows: Vec<Row> = Vec::with_capacity(n);
    let mut elems = Vec::with_capacity(n);
    for img in images {
        let terms: Vec<(&str, Scalar)> =
            img.iter().map(|(g, c)| (*g, Scalar::constant(c.clone()))).collect();
        let x = LieElement::from_terms(source, &terms)?;
        rows.push(x.coeff_map().clone());
        elems.push(x);
    }
    let inv = invert(&rows, n).ok_or_else(|| Error::Invalid("new basis is singular".into()))?;
    let mut b = LieAlgebraBuilder::new(name, names);
    for a in 0..n {
        for c in a + 1..n {
            let br = elems[a].bracket(&elems[c])?;
            // coordinates in the new basis: Σ_j br_j · inv[j][·]
            let mut coords: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (j, v) in br.terms() {
                for (k, w) in &inv[j] {
                    let e = coords.entry(*k).or_default();
                    *e = e.add(&v.mul(w));
                }
            }
            let mut value = Vec::new();
            for (k, v) in coords {
                if v.is_zero() {
                    continue;
                }
                let c = v.as_constant().ok_or_else(|| {
                    Error::Invalid("transported structure constant is not a constant".into())
                })?;
                value.push((names[k], c));
            }
            if !value.is_empty() {
                b = b.bracket(names[a], names[c], &value)?;
            }
        }
    }
    Ok(b)
}
