use std::collections::BTreeMap;

use super::{CoeffElem, Sym};
use crate::{Error, Result};

/// Declared operator images of one parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parameter {
    pub name: Sym,
    pub d_image: CoeffElem,
    pub sigma_image: CoeffElem,
    /// Image under σ⁻¹, when σ is invertible on this parameter.
    pub sigma_inverse: Option<CoeffElem>,
}

/// The coefficient field: declared parameters with their D- and σ-images.
///
/// Undeclared parameters behave as constants fixed by σ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    params: BTreeMap<Sym, Parameter>,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    /// Declares `name` with default images `D(name) = 0`, `σ(name) = name`.
    pub fn declare(&mut self, name: &str) -> Result<Sym> {
        let s = Sym::new(name);
        if self.params.contains_key(&s) {
            return Err(Error::Redeclared(name.to_owned()));
        }
        self.params.insert(
            s,
            Parameter {
                name: s,
                d_image: CoeffElem::zero(),
                sigma_image: CoeffElem::param(s),
                sigma_inverse: Some(CoeffElem::param(s)),
            },
        );
        Ok(s)
    }

    fn check_known(&self, img: &CoeffElem) -> Result<()> {
        match img.params().into_iter().find(|p| !self.params.contains_key(p)) {
            Some(p) => Err(Error::UnknownParameter(p.to_string())),
            None => Ok(()),
        }
    }

    fn get_mut(&mut self, s: Sym) -> Result<&mut Parameter> {
        self.params
            .get_mut(&s)
            .ok_or_else(|| Error::UnknownParameter(s.to_string()))
    }

    pub fn set_d_image(&mut self, s: Sym, img: CoeffElem) -> Result<()> {
        self.check_known(&img)?;
        self.get_mut(s)?.d_image = img;
        Ok(())
    }

    /// Sets σ(s). Any previously declared inverse image is cleared unless
    /// the new image is the identity.
    pub fn set_sigma_image(&mut self, s: Sym, img: CoeffElem) -> Result<()> {
        self.check_known(&img)?;
        let p = self.get_mut(s)?;
        p.sigma_inverse = (img == CoeffElem::param(s)).then(|| img.clone());
        p.sigma_image = img;
        Ok(())
    }

    pub fn set_sigma_inverse(&mut self, s: Sym, img: CoeffElem) -> Result<()> {
        self.check_known(&img)?;
        self.get_mut(s)?.sigma_inverse = Some(img);
        Ok(())
    }

    pub fn is_param(&self, s: Sym) -> bool {
        self.params.contains_key(&s)
    }

    pub fn params(&self) -> impl Iterator<Item = &Parameter> {
        self.params.values()
    }

    pub fn d_image(&self, s: Sym) -> CoeffElem {
        self.params
            .get(&s)
            .map_or_else(CoeffElem::zero, |p| p.d_image.clone())
    }

    pub fn sigma_image(&self, s: Sym) -> CoeffElem {
        self.params
            .get(&s)
            .map_or_else(|| CoeffElem::param(s), |p| p.sigma_image.clone())
    }

    pub fn sigma_inverse_image(&self, s: Sym) -> Option<CoeffElem> {
        match self.params.get(&s) {
            None => Some(CoeffElem::param(s)),
            Some(p) => p.sigma_inverse.clone(),
        }
    }

    /// D applied to a coefficient.
    pub fn d_coeff(&self, c: &CoeffElem) -> CoeffElem {
        c.derive(&|s| self.d_image(s))
    }

    /// σ^k applied to a coefficient.
    pub fn sigma_coeff(&self, c: &CoeffElem, k: u32) -> Result<CoeffElem> {
        let mut out = c.clone();
        for _ in 0..k {
            out = out
                .map_params(&|s| self.sigma_image(s))
                .ok_or(Error::DivisionByZero)?;
        }
        Ok(out)
    }

    /// σ⁻¹ applied to a coefficient.
    pub fn sigma_inverse_coeff(&self, c: &CoeffElem) -> Result<CoeffElem> {
        if let Some(p) = c.params().into_iter().find(|&p| self.sigma_inverse_image(p).is_none()) {
            return Err(Error::NoInverse(p.to_string()));
        }
        c.map_params(&|s| self.sigma_inverse_image(s).expect("checked above"))
            .ok_or(Error::DivisionByZero)
    }
}
