use super::{Analysis, CheckRecord};
use crate::error::{Error, Result};
use crate::gamma::{gamma_dim, psi_welldefined};
use crate::lie::LieAlgebra;
use crate::linalg::{quotient_with_section, span_intersect, span_sum, unit_vector, LinearMap, Subspace};
use crate::pair::QuotientPair;
use crate::scalar::{format_vector, Vector};
use crate::tensor::NonabelianTensor;

/// `π` on tensor coordinates, defined symbol-wise through the projections
/// `L -> L/[N,L]` and `N -> N/[N,L]`, after checking it vanishes on the
/// relations.
pub(super) fn induced_projection(
    t: &NonabelianTensor,
    quotient: &QuotientPair,
    target: &NonabelianTensor,
) -> Result<LinearMap> {
    let symbols = t.symbols();
    let mut on_symbols = Vec::with_capacity(symbols.dim());
    for s in 0..symbols.dim() {
        let (i, j) = symbols.split(s);
        let x = quotient.proj_l.apply_basis(i);
        let y = quotient.proj_n.apply_basis(j);
        on_symbols.push(target.symbol_expand(&x, &y)?);
    }
    let on_symbols = LinearMap::from_images(target.dim(), &on_symbols)?;
    for r in t.relations().basis() {
        if !crate::linalg::is_zero(&on_symbols.apply(r)?) {
            return Err(Error::Internal("induced projection does not vanish on relations".into()));
        }
    }
    let columns: Vec<Vector> = t
        .quotient()
        .section_columns
        .iter()
        .map(|&s| on_symbols.image_of_basis(s))
        .collect();
    LinearMap::from_images(target.dim(), &columns)
}

/// The first basis vector of `sub` outside the center of `alg`.
fn non_central(alg: &LieAlgebra, sub: &Subspace) -> Option<Vector> {
    let center = alg.center().into_space();
    sub.basis().iter().find(|v| !center.contains(v)).cloned()
}

/// A basis vector of one space missing from the other.
fn difference(a: &Subspace, b: &Subspace) -> Option<Vector> {
    a.basis()
        .iter()
        .find(|v| !b.contains(v))
        .or_else(|| b.basis().iter().find(|v| !a.contains(v)))
        .cloned()
}

fn with_witness(record: CheckRecord, witness: Option<Vector>, what: &str) -> CheckRecord {
    match witness {
        Some(w) => {
            let note = format!("{what}: {}", format_vector(&w));
            record.witness(w).note(note).outcome(false)
        }
        None => record.outcome(true),
    }
}

fn centrality(a: &Analysis, check: &str, claim: &str, alg: &LieAlgebra, sub: &Subspace) -> CheckRecord {
    let record = a
        .record(check, claim)
        .dim("subspace", sub.dim())
        .dim("center", alg.center().dim());
    with_witness(record, non_central(alg, sub), "non-central element")
}

fn equality(a: &Analysis, check: &str, claim: &str, left: &Subspace, right: &Subspace) -> CheckRecord {
    let record = a.record(check, claim).dim("left", left.dim()).dim("right", right.dim());
    with_witness(record, difference(left, right), "element in only one side")
}

/// The commutative diagram of commutator maps: kernels, images and
/// centrality.
pub fn verify_diagram(a: &Analysis) -> Vec<CheckRecord> {
    let m = &a.maps;
    let tensor = a.tensor.algebra();
    let dims = m.dimensions();
    let mut out = vec![
        equality(a, "ker-eps-is-square", "ker ε = L□N", &m.eps.kernel(), &m.square),
        centrality(a, "square-central", "L□N ⊆ Z(L⊗N)", tensor, &m.square),
        centrality(a, "j2-central", "J₂(L,N) = ker κ ⊆ Z(L⊗N)", tensor, &m.j2),
        equality(a, "kappa-image", "im κ = [L,N]", &m.kappa_image, &a.commutator),
        equality(a, "kappa-prime-image", "im κ′ = [L,N]", &m.kappa_prime_image, &a.commutator),
        centrality(a, "multiplier-central", "M(L,N) = ker κ′ ⊆ Z(L∧N)", &m.exterior, &m.multiplier),
    ];
    out.push(
        a.record("j2-square-multiplier", "dim J₂ − dim □ = dim M")
            .dim("tensor", dims.tensor)
            .dim("square", dims.square)
            .dim("exterior", dims.exterior)
            .dim("j2", dims.j2)
            .dim("multiplier", dims.multiplier)
            .outcome(dims.j2 == dims.square + dims.multiplier),
    );

    let mut witness = None;
    let k = tensor.dim();
    'outer: for i in 0..k {
        for j in i + 1..k {
            let lhs = m.kappa.apply(tensor.bracket_basis(i, j)).expect("tensor coordinates");
            let rhs = a
                .pair
                .l()
                .bracket_unchecked(&m.kappa.image_of_basis(i), &m.kappa.image_of_basis(j));
            if lhs != rhs {
                witness = Some(unit_vector(k, i).into_iter().chain(unit_vector(k, j)).collect());
                break 'outer;
            }
        }
    }
    out.push(with_witness(
        a.record("kappa-homomorphism", "κ[u,v] = [κu,κv]").dim("tensor", k),
        witness,
        "basis pair (concatenated)",
    ));
    out
}

/// `L ⊗ [N,L] + [N,L] ⊗ N` inside `L ⊗ N`.
fn commutator_part(a: &Analysis) -> Result<Subspace> {
    let t = &a.tensor;
    let p = a.pair.l().dim();
    let in_n = a.pair.commutator_in_ideal()?;
    let mut gens = Vec::new();
    for i in 0..p {
        for m in in_n.basis() {
            gens.push(t.symbol_expand(&unit_vector(p, i), m)?);
        }
    }
    let q = a.pair.n().dim();
    for m in a.commutator.basis() {
        for j in 0..q {
            gens.push(t.symbol_expand(m, &unit_vector(q, j))?);
        }
    }
    Subspace::span(t.dim(), gens)
}

pub fn verify_ker_pi(a: &Analysis) -> CheckRecord {
    let record = a
        .record("ker-pi", "ker π = L⊗[N,L] + [N,L]⊗N")
        .dim("tensor", a.tensor.dim())
        .dim("quotient-tensor", a.quotient_tensor.dim());
    let part = match commutator_part(a) {
        Ok(s) => s,
        Err(e) => return record.note(e.to_string()).outcome(false),
    };
    let kernel = a.pi.kernel();
    let record = record.dim("kernel", kernel.dim()).dim("generated", part.dim());
    with_witness(record, difference(&kernel, &part), "element in only one side")
}

pub fn verify_diagonal_descent(a: &Analysis) -> CheckRecord {
    let square = &a.maps.square;
    let record = a
        .record("diagonal-descent", "π restricts to L□N ≅ (L/[N,L])□(N/[N,L])")
        .asserted_if(a.full || a.clean)
        .dim("square", square.dim());
    let target = match a.quotient_tensor.diagonal() {
        Ok(s) => s,
        Err(e) => return record.note(e.to_string()).outcome(false),
    };
    let image = match square.map(&a.pi) {
        Ok(s) => s,
        Err(e) => return record.note(e.to_string()).outcome(false),
    };
    let injective = a.pi.restrict(square).map(|r| r.is_injective()).unwrap_or(false);
    let record = record
        .dim("quotient-square", target.dim())
        .dim("image", image.dim())
        .flag("injective", injective);
    match difference(&image, &target) {
        Some(w) => {
            let note = format!("image and target differ at {}", format_vector(&w));
            record.witness(w).note(note).outcome(false)
        }
        None if !injective => record.note("restriction has a kernel").outcome(false),
        None => record.outcome(true),
    }
}

/// Builds a complement `C` of `L□N` that contains `L⊗[N,L] + [N,L]⊗N`
/// and checks it is an ideal of dimension `dim L∧N`.
///
/// `C` starts from that subspace plus `y ⊗ x` with `x` running over
/// representatives of `N/[N,L]` and `y` over basis vectors of `L` spanning
/// a complement of `N`. Tensor basis vectors are then added while they are
/// independent of `L□N + C`.
pub fn verify_splitting(a: &Analysis) -> CheckRecord {
    let record = a.record("splitting", "L⊗N = L□N ⊕ C with C ≅ L∧N an ideal");
    match splitting(a) {
        Ok(outcome) => {
            let s = outcome;
            let record = record
                .dim("tensor", a.tensor.dim())
                .dim("square", a.maps.square.dim())
                .dim("exterior", a.maps.exterior.dim())
                .dim("initial", s.initial_dim)
                .dim("complement", s.complement.dim())
                .dim("completion", s.completion);
            let note = if s.completion == 0 {
                "complement generated without completion".to_string()
            } else {
                format!("completed with {} tensor basis vector(s)", s.completion)
            };
            match (s.overlap, s.outside_ideal) {
                (Some(w), _) => record.witness(w.clone()).note(format!("overlap with L□N: {}", format_vector(&w))).outcome(false),
                (None, Some(w)) => record.witness(w.clone()).note(format!("bracket outside C: {}", format_vector(&w))).outcome(false),
                (None, None) => record
                    .note(note)
                    .outcome(s.complement.dim() == a.maps.exterior.dim()),
            }
        }
        Err(e) => record.note(e.to_string()).outcome(false),
    }
}

struct Splitting {
    initial_dim: usize,
    complement: Subspace,
    completion: usize,
    overlap: Option<Vector>,
    outside_ideal: Option<Vector>,
}

fn splitting(a: &Analysis) -> Result<Splitting> {
    let t = &a.tensor;
    let dim = t.dim();
    let square = &a.maps.square;
    let p = a.pair.l().dim();
    let ideal = a.pair.require_ideal()?;
    let complement_of_n = quotient_with_section(p, ideal)?.section_columns;
    let mut gens = Vec::new();
    for &c in &complement_of_n {
        for x in &a.psi.representatives {
            gens.push(t.symbol_expand(&unit_vector(p, c), x)?);
        }
    }
    let initial = span_sum(&commutator_part(a)?, &Subspace::span(dim, gens)?)?;
    let meet = span_intersect(square, &initial)?;
    let overlap = meet.basis().first().cloned();

    let mut complement = initial.echelon().clone();
    let mut total = span_sum(square, &initial)?.echelon().clone();
    let mut completion = 0;
    for b in 0..dim {
        if total.insert(unit_vector(dim, b)) {
            complement.insert(unit_vector(dim, b));
            completion += 1;
        }
    }
    let complement = Subspace::from_echelon(complement);
    let alg = t.algebra();
    let mut outside_ideal = None;
    'outer: for i in 0..dim {
        for v in complement.basis() {
            let w = alg.bracket_unchecked(&unit_vector(dim, i), v);
            if !complement.contains(&w) {
                outside_ideal = Some(w);
                break 'outer;
            }
        }
    }
    Ok(Splitting {
        initial_dim: initial.dim(),
        complement,
        completion,
        overlap,
        outside_ideal,
    })
}

pub fn verify_j2_decomposition(a: &Analysis) -> CheckRecord {
    let m = &a.maps;
    let record = a
        .record("j2-decomposition", "J₂(L,N) = L□N ⊕ M(L,N), ε(J₂) = M")
        .dim("j2", m.j2.dim())
        .dim("square", m.square.dim())
        .dim("multiplier", m.multiplier.dim());
    if let Some(w) = m.square.basis().iter().find(|v| !m.j2.contains(v)) {
        let note = format!("diagonal element outside J₂: {}", format_vector(w));
        return record.witness(w.clone()).note(note).outcome(false);
    }
    let image = match m.j2.map(&m.eps) {
        Ok(s) => s,
        Err(e) => return record.note(e.to_string()).outcome(false),
    };
    if let Some(w) = difference(&image, &m.multiplier) {
        let note = format!("ε(J₂) and M differ at {}", format_vector(&w));
        return record.witness(w).note(note).outcome(false);
    }
    record.outcome(m.j2.dim() == m.square.dim() + m.multiplier.dim())
}

/// `ψ: Γ(N/[N,L]) -> L⊗N`: image, well-definedness, injectivity, the
/// diagonal dimension law and exactness of `0 -> Γ -> ⊗ -> ∧ -> 0`.
///
/// Injectivity and the dimension law are asserted when `N = L` or
/// `N ∩ [L,L] = [N,L]`, and reported otherwise.
pub fn verify_psi(a: &Analysis) -> Vec<CheckRecord> {
    let psi = &a.psi;
    let d = a.relative_dim;
    let hypothesis = a.full || a.clean;
    let square = &a.maps.square;
    let mut out = vec![equality(a, "psi-image", "im ψ = L□N", &psi.image(), square)];

    let record = a
        .record("psi-well-defined", "(n+m)⊗(n+m) = n⊗n for m ∈ [N,L]")
        .asserted_if(hypothesis)
        .dim("relative", d)
        .dim("commutator", a.commutator.dim());
    out.push(match psi_welldefined(&a.pair, &a.tensor) {
        Ok(None) => record.outcome(true),
        Ok(Some(w)) => {
            let note = format!(
                "representative {} shifted by commutator basis element {} changes n⊗n by {}",
                w.representative,
                w.commutator,
                format_vector(&w.difference)
            );
            record.witness(w.difference).note(note).outcome(false)
        }
        Err(e) => record.note(e.to_string()).outcome(false),
    });

    let injective = psi.is_injective();
    out.push(
        a.record("psi-injective", "ψ is injective")
            .asserted_if(hypothesis)
            .dim("gamma", psi.gamma.dim())
            .dim("rank", psi.map.rank())
            .flag("injective", injective)
            .outcome(injective),
    );
    out.push(
        a.record("diagonal-law", "dim L□N = d(d+1)/2, d = dim N/[N,L]")
            .asserted_if(hypothesis)
            .dim("relative", d)
            .dim("square", square.dim())
            .dim("gamma", gamma_dim(d))
            .outcome(square.dim() == gamma_dim(d)),
    );
    let row = a
        .record("gamma-row-exact", "dim L⊗N = dim Γ(N/[N,L]) + dim L∧N")
        .dim("tensor", a.tensor.dim())
        .dim("gamma", gamma_dim(d))
        .dim("exterior", a.maps.exterior.dim());
    out.push(if injective {
        row.outcome(a.tensor.dim() == gamma_dim(d) + a.maps.exterior.dim())
    } else {
        row.not_applicable("ψ is not injective")
    });
    out
}

/// Compares `dim ⊗` with `dim □ + (n − m)·m`, the count of the spanning
/// set `□ ∪ {y_j ⊗ x_t}` for an abelian `L` of dimension `n` and an ideal
/// of dimension `m`. Both forms are reporters.
pub fn verify_abelian_basis(a: &Analysis) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let l = a.pair.l();
    let (n, m) = (l.dim(), a.pair.n().dim());
    let claimed = a.maps.square.dim() + (n - m) * m;
    let record = a
        .record("abelian-basis", "dim L⊗N = dim L□N + (n−m)·m for abelian L")
        .reporter()
        .dim("claimed", claimed)
        .dim("tensor", a.tensor.dim());
    out.push(if l.is_abelian() {
        let deficit = a.tensor.dim() as i64 - claimed as i64;
        record.note(format!("deficit {deficit}")).outcome(deficit == 0)
    } else {
        record.not_applicable("L is not abelian")
    });

    let q = &a.quotient.pair;
    let (qn, qm) = (q.l().dim(), q.n().dim());
    let q_square = a.quotient_tensor.diagonal().map(|s| s.dim());
    let record = a
        .record("quotient-basis", "dim of the quotient-pair tensor = dim □ + (n−m)·m")
        .reporter()
        .flag("quotient-abelian", q.l().is_abelian());
    out.push(match q_square {
        Ok(sq) => {
            let claimed = sq + (qn - qm) * qm;
            let deficit = a.quotient_tensor.dim() as i64 - claimed as i64;
            record
                .dim("claimed", claimed)
                .dim("tensor", a.quotient_tensor.dim())
                .note(format!("deficit {deficit}"))
                .outcome(deficit == 0)
        }
        Err(e) => record.note(e.to_string()).outcome(false),
    });
    out
}
