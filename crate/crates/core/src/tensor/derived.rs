use super::NonabelianTensor;
use crate::error::{Error, Result};
use crate::lie::{AlgebraHom, LieAlgebra};
use crate::linalg::{is_zero, unit_vector, LinearMap, Matrix, Subspace};
use crate::scalar::Vector;

/// `L ∧ N` with the projection `ε: L ⊗ N -> L ∧ N`.
#[derive(Debug, Clone)]
pub struct Exterior {
    pub algebra: LieAlgebra,
    pub eps: LinearMap,
    /// Tensor basis indices used as the section of `ε`.
    pub section_columns: Vec<usize>,
}

pub(super) fn exterior(t: &NonabelianTensor) -> Result<Exterior> {
    let square = t.diagonal()?;
    let (algebra, eps) = t.algebra().quotient(&square)?;
    let names = algebra.names().iter().map(|n| n.replace('⊗', "∧")).collect();
    let algebra = algebra.with_names(names)?;
    let section_columns = crate::linalg::quotient_with_section(t.dim(), &square)?.section_columns;
    Ok(Exterior {
        algebra,
        eps: eps.into_map(),
        section_columns,
    })
}

/// The commutator maps of the diagram and the objects they determine.
#[derive(Debug, Clone)]
pub struct DerivedMaps {
    /// `κ: L ⊗ N -> L`, `l ⊗ n ↦ [l, n]`.
    pub kappa: LinearMap,
    pub kappa_image: Subspace,
    /// `J₂(L, N) = ker κ`
    pub j2: Subspace,
    /// `L □ N` inside `L ⊗ N`.
    pub square: Subspace,
    pub eps: LinearMap,
    pub exterior: LieAlgebra,
    /// `κ′: L ∧ N -> L`
    pub kappa_prime: LinearMap,
    pub kappa_prime_image: Subspace,
    /// `M(L, N) = ker κ′` inside `L ∧ N`.
    pub multiplier: Subspace,
}

/// `(dim ⊗, dim □, dim ∧, dim J₂, dim M)` plus `dim [L, N]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimensions {
    pub tensor: usize,
    pub square: usize,
    pub exterior: usize,
    pub j2: usize,
    pub multiplier: usize,
    pub commutator: usize,
}

impl Dimensions {
    pub fn tuple(&self) -> (usize, usize, usize, usize, usize) {
        (self.tensor, self.square, self.exterior, self.j2, self.multiplier)
    }
}

impl DerivedMaps {
    pub fn compute(t: &NonabelianTensor) -> Result<Self> {
        let pair = t.pair();
        let ideal = pair.require_ideal()?;
        let (p, symbols) = (pair.l().dim(), t.symbols());

        // κ on the whole symbol space, then checked to vanish on relations.
        let mut on_symbols = Matrix::zeros(p, symbols.dim());
        for s in 0..symbols.dim() {
            let (i, j) = symbols.split(s);
            let v = pair.l().bracket_unchecked(&unit_vector(p, i), &ideal.basis()[j]);
            for (r, x) in v.into_iter().enumerate() {
                on_symbols.set(r, s, x);
            }
        }
        let on_symbols = LinearMap::new(on_symbols);
        for r in t.relations().basis() {
            if !is_zero(&on_symbols.apply(r)?) {
                return Err(Error::Internal("commutator map does not vanish on relations".into()));
            }
        }
        let columns: Vec<Vector> = t
            .quotient()
            .section_columns
            .iter()
            .map(|&s| on_symbols.image_of_basis(s))
            .collect();
        let kappa = LinearMap::from_images(p, &columns)?;
        let kappa = AlgebraHom::new(t.algebra(), pair.l(), kappa)
            .map_err(|_| Error::Internal("commutator map is not a homomorphism".into()))?
            .into_map();
        let kappa_image = kappa.image();
        let j2 = kappa.kernel();

        let square = t.diagonal()?;
        let ext = t.exterior()?;
        for v in square.basis() {
            if !is_zero(&kappa.apply(v)?) {
                return Err(Error::Internal("commutator map does not vanish on the diagonal".into()));
            }
        }
        let prime_columns: Vec<Vector> = ext.section_columns.iter().map(|&c| kappa.image_of_basis(c)).collect();
        let kappa_prime = LinearMap::from_images(p, &prime_columns)?;
        let kappa_prime = AlgebraHom::new(&ext.algebra, pair.l(), kappa_prime)
            .map_err(|_| Error::Internal("induced commutator map is not a homomorphism".into()))?
            .into_map();
        let kappa_prime_image = kappa_prime.image();
        let multiplier = kappa_prime.kernel();

        Ok(Self {
            kappa,
            kappa_image,
            j2,
            square,
            eps: ext.eps,
            exterior: ext.algebra,
            kappa_prime,
            kappa_prime_image,
            multiplier,
        })
    }

    pub fn dimensions(&self) -> Dimensions {
        Dimensions {
            tensor: self.kappa.domain_dim(),
            square: self.square.dim(),
            exterior: self.exterior.dim(),
            j2: self.j2.dim(),
            multiplier: self.multiplier.dim(),
            commutator: self.kappa_image.dim(),
        }
    }
}
