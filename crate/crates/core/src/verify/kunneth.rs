//! Direct-sum identities for multipliers, `J₂` and diagonals.
//!
//! For algebras `H, K` with abelianizations of dimensions `h, k`:
//!
//! * `dim Γ((H⊕K)^ab) = dim Γ(H^ab) + dim Γ(K^ab) + hk`,
//! * `dim M(H⊕K) = dim M(H) + dim M(K) + hk`,
//! * `dim J₂(H⊕K) = dim J₂(H) + dim J₂(K) + 2hk`.
//!
//! For pairs `(L_i, N_i)` with `d_i = dim N_i/[N_i,L_i]` the free-product
//! statements are checked through their direct-sum shadows
//!
//! * `dim J₂(L₁⊕L₂, N₁⊕N₂) = dim J₂(L₁,N₁) + dim J₂(L₂,N₂) + 2d₁d₂`,
//! * `dim (L₁⊕L₂)□(N₁⊕N₂) = dim □₁ + dim □₂ + d₁d₂`,
//! * `dim M(L₁⊕L₂, N₁⊕N₂) = dim M₁ + dim M₂ + d₁d₂`.
//!
//! These are derived under the assumption that `(L₁*L₂, N₁*N₂)` is a pair,
//! which holds when `N_i = L_i` for both factors or `N_i = 0` for both. On
//! other inputs the three identities are reporters. The multiplier identity
//! is further conditioned on `[N₁,L₁] = [L₁,L₁]`.

use super::{CheckRecord, VerificationReport};
use crate::error::Result;
use crate::gamma::gamma_dim;
use crate::pair::Pair;
use crate::tensor::{Dimensions, NonabelianTensor};

fn dimensions(pair: &Pair) -> Result<Dimensions> {
    Ok(NonabelianTensor::construct(pair)?.derived_maps()?.dimensions())
}

fn abelianization_dim(pair: &Pair) -> usize {
    pair.l().dim() - pair.l().derived().dim()
}

/// Runs the direct-sum identities on two pairs. Records are filed under the
/// pair id `"<a> (+) <b>"`.
pub fn verify_kunneth(id_a: &str, a: &Pair, id_b: &str, b: &Pair) -> Result<VerificationReport> {
    let id = format!("{id_a} (+) {id_b}");
    let mut report = VerificationReport::default();

    // Algebra identities, on (H,H), (K,K) and (H⊕K, H⊕K).
    let full_a = Pair::full(a.l().clone());
    let full_b = Pair::full(b.l().clone());
    let full_sum = Pair::full(a.l().direct_sum(b.l()));
    let (da, db, ds) = (dimensions(&full_a)?, dimensions(&full_b)?, dimensions(&full_sum)?);
    let (h, k) = (abelianization_dim(&full_a), abelianization_dim(&full_b));
    let hk_sum = abelianization_dim(&full_sum);

    let lhs = gamma_dim(hk_sum);
    let rhs = gamma_dim(h) + gamma_dim(k) + h * k;
    report.push(
        CheckRecord::new(&id, "gamma-sum", "dim Γ((H⊕K)^ab) = dim Γ(H^ab) + dim Γ(K^ab) + hk")
            .dim("h", h)
            .dim("k", k)
            .dim("sum-abelianization", hk_sum)
            .dim("lhs", lhs)
            .dim("rhs", rhs)
            .outcome(lhs == rhs),
    );
    let rhs = da.multiplier + db.multiplier + h * k;
    report.push(
        CheckRecord::new(&id, "multiplier-sum", "dim M(H⊕K) = dim M(H) + dim M(K) + hk")
            .dim("h", h)
            .dim("k", k)
            .dim("lhs", ds.multiplier)
            .dim("rhs", rhs)
            .outcome(ds.multiplier == rhs),
    );
    let rhs = da.j2 + db.j2 + 2 * h * k;
    report.push(
        CheckRecord::new(&id, "j2-sum", "dim J₂(H⊕K) = dim J₂(H) + dim J₂(K) + 2hk")
            .dim("h", h)
            .dim("k", k)
            .dim("lhs", ds.j2)
            .dim("rhs", rhs)
            .outcome(ds.j2 == rhs),
    );
    let (lhs, rhs) = (gamma_dim(h + k), gamma_dim(h) + gamma_dim(k) + h * k);
    report.push(
        CheckRecord::new(&id, "free-gamma-sum", "dim Γ((H*K)^ab) = dim Γ(H^ab) + dim Γ(K^ab) + hk")
            .dim("h", h)
            .dim("k", k)
            .dim("lhs", lhs)
            .dim("rhs", rhs)
            .outcome(lhs == rhs),
    );

    // Pair identities.
    let sum = a.direct_sum(b)?;
    let (pa, pb, ps) = (dimensions(a)?, dimensions(b)?, dimensions(&sum)?);
    let (d1, d2) = (a.relative_abelianization_dim()?, b.relative_abelianization_dim()?);
    let free_pair = (a.is_full() && b.is_full()) || (a.n().dim() == 0 && b.n().dim() == 0);
    let complement = a.commutator()? == a.l().derived();
    let record = |check: &str, claim: &str| {
        CheckRecord::new(&id, check, claim)
            .flag("free-product-pair", free_pair)
            .dim("d1", d1)
            .dim("d2", d2)
    };

    let rhs = pa.j2 + pb.j2 + 2 * d1 * d2;
    report.push(
        record("pair-j2-sum", "dim J₂(L₁⊕L₂,N₁⊕N₂) = dim J₂(L₁,N₁) + dim J₂(L₂,N₂) + 2d₁d₂")
            .asserted_if(free_pair)
            .dim("lhs", ps.j2)
            .dim("rhs", rhs)
            .outcome(ps.j2 == rhs),
    );
    let rhs = pa.square + pb.square + d1 * d2;
    report.push(
        record("pair-square-sum", "dim (L₁⊕L₂)□(N₁⊕N₂) = dim □₁ + dim □₂ + d₁d₂")
            .asserted_if(free_pair)
            .dim("lhs", ps.square)
            .dim("rhs", rhs)
            .note("left side taken on (L₁⊕L₂, N₁⊕N₂)")
            .outcome(ps.square == rhs),
    );
    let rhs = pa.multiplier + pb.multiplier + d1 * d2;
    report.push(
        record("pair-multiplier-sum", "dim M(L₁⊕L₂,N₁⊕N₂) = dim M₁ + dim M₂ + d₁d₂")
            .flag("complement", complement)
            .asserted_if(free_pair && complement)
            .dim("lhs", ps.multiplier)
            .dim("rhs", rhs)
            .outcome(ps.multiplier == rhs),
    );
    let direct = pa.j2 + pb.j2 + 2 * d1 * d2;
    let free = pa.j2 + pb.j2 + d1 * d2;
    report.push(
        record("free-j2-quotient", "(J₂₁ + J₂₂ + 2d₁d₂) − (J₂₁ + J₂₂ + d₁d₂) = d₁d₂")
            .dim("lhs", direct - free)
            .dim("rhs", d1 * d2)
            .outcome(direct - free == d1 * d2),
    );
    report.sort();
    Ok(report)
}
