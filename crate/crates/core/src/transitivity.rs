//! Subideals and when they are forced to be ideals.
//!
//! Decision procedures here return certificates: positive subideal answers
//! carry an [`IdealChain`] that re-verifies independently, and the
//! non-perfect counterexample carries an explicit escaping bracket.
//! Theorem checks report "hypothesis not satisfied" separately from a
//! violated conclusion.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::derivations::{holomorph, is_complete, is_derivation};
use crate::error::{Error, Result};
use crate::exactlin::{dot, Inertia, Mat, Rat, Subspace};
use crate::liealg::{LieAlgebra, LinMap, Subalgebra, SymForm};

/// `h = l_0 ⊴ l_1 ⊴ ... ⊴ l_n = g`, innermost first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealChain {
    links: Vec<Subalgebra>,
}

impl IdealChain {
    /// Wraps and verifies a chain.
    pub fn new(links: Vec<Subalgebra>) -> Result<Self> {
        let chain = IdealChain { links };
        chain.verify()?;
        Ok(chain)
    }

    pub fn links(&self) -> &[Subalgebra] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn innermost(&self) -> &Subalgebra {
        &self.links[0]
    }

    pub fn outermost(&self) -> &Subalgebra {
        self.links.last().expect("chains are nonempty")
    }

    /// Pairwise ideal relation, common parent, and the length bound
    /// `dim(g) + 1`. Does not assume the last link is all of the parent,
    /// so chains inside a subalgebra verify too.
    pub fn verify(&self) -> Result<()> {
        let first = self
            .links
            .first()
            .ok_or_else(|| Error::Precondition("empty chain".into()))?;
        let parent = first.parent();
        if self.links.len() > parent.dim() + 1 {
            return Err(Error::Precondition("chain longer than dim + 1".into()));
        }
        for pair in self.links.windows(2) {
            if !pair[0].is_ideal_of(&pair[1])? {
                return Err(Error::NotIdeal);
            }
        }
        Ok(())
    }
}

/// Smallest ideal of `k` containing `h`: `S <- S + [k, S]` from `S = h`.
pub fn ideal_closure_in(k: &Subalgebra, h: &Subalgebra) -> Result<Subalgebra> {
    if !h.is_subset_of(k)? {
        return Err(Error::Precondition("h is not contained in k".into()));
    }
    let g = k.parent();
    let mut s = h.space().clone();
    loop {
        let next = s.sum(&g.bracket_spaces(k.space(), &s)?)?;
        if next == s {
            return Subalgebra::new(g.clone(), s);
        }
        s = next;
    }
}

pub fn ideal_closure(g: &LieAlgebra, h: &Subalgebra) -> Result<Subalgebra> {
    ideal_closure_in(&Subalgebra::full(g), h)
}

/// Answer of the subideal decision.
#[derive(Debug, Clone)]
pub enum SubidealVerdict {
    Subideal(IdealChain),
    /// The closure series stalled above `h`; the series is the evidence,
    /// its last entry the floor.
    NotSubideal {
        series: Vec<Subalgebra>,
    },
}

impl SubidealVerdict {
    pub fn is_subideal(&self) -> bool {
        matches!(self, SubidealVerdict::Subideal(_))
    }

    pub fn chain(&self) -> Option<&IdealChain> {
        match self {
            SubidealVerdict::Subideal(c) => Some(c),
            SubidealVerdict::NotSubideal { .. } => None,
        }
    }
}

/// Decides whether `h` is a subideal of `k` by the descending series
/// `k = s_0`, `s_{i+1}` = ideal closure of `h` in `s_i`.
pub fn subideal_chain_in(k: &Subalgebra, h: &Subalgebra) -> Result<SubidealVerdict> {
    if !h.is_subset_of(k)? {
        return Err(Error::Precondition("h is not contained in k".into()));
    }
    let mut series = vec![k.clone()];
    loop {
        let last = series.last().expect("nonempty");
        if last.space() == h.space() {
            series.reverse();
            let chain = IdealChain::new(series)?;
            return Ok(SubidealVerdict::Subideal(chain));
        }
        let next = ideal_closure_in(last, h)?;
        if next.space() == last.space() {
            return Ok(SubidealVerdict::NotSubideal { series });
        }
        // strictly decreasing, so at most dim(k) iterations
        series.push(next);
    }
}

pub fn subideal_chain(g: &LieAlgebra, h: &Subalgebra) -> Result<SubidealVerdict> {
    subideal_chain_in(&Subalgebra::full(g), h)
}

/// Result of checking that a perfect subideal is an ideal.
#[derive(Debug, Clone)]
pub struct PerfectTransitivityReport {
    pub chain: IdealChain,
    pub ideal: bool,
}

impl PerfectTransitivityReport {
    pub fn holds(&self) -> bool {
        self.ideal
    }
}

pub fn check_perfect_transitivity(
    g: &LieAlgebra,
    h: &Subalgebra,
) -> Result<PerfectTransitivityReport> {
    if !h.is_perfect() {
        return Err(Error::Precondition("h is not perfect".into()));
    }
    let chain = match subideal_chain(g, h)? {
        SubidealVerdict::Subideal(c) => c,
        SubidealVerdict::NotSubideal { .. } => {
            return Err(Error::Precondition("h is not a subideal of g".into()))
        }
    };
    let ideal = g.is_ideal(h)?;
    Ok(PerfectTransitivityReport { chain, ideal })
}

/// Proof object that a non-perfect `h` sits as a subideal but not an ideal
/// of `H(k)` with `k = h ⊕ h/[h,h]`.
#[derive(Debug, Clone)]
pub struct CounterexampleCertificate {
    /// `k = h ⊕ h/[h,h]`.
    pub extension: LieAlgebra,
    /// `f((X, Y)) = (0, π(X))` on `k`.
    pub derivation: Mat,
    /// `H(k)`.
    pub ambient: LieAlgebra,
    /// `h⋊0 ⊴ k⋊0 ⊴ H(k)`.
    pub chain: IdealChain,
    /// `((X_o, 0), 0)` and `(0, f)` in `H(k)`.
    pub witness_pair: (Vec<Rat>, Vec<Rat>),
    /// Bracket of the witness pair, equal to `(-f(X_o), 0)`.
    pub escaping_value: Vec<Rat>,
    /// Linear functional vanishing on `h⋊0` but not on the escaping value.
    pub separating_functional: Vec<Rat>,
}

impl CounterexampleCertificate {
    /// Re-checks every claim from scratch.
    pub fn verify(&self) -> bool {
        let chain_ok = self.chain.verify().is_ok()
            && self.chain.len() == 3
            && self.chain.outermost().space().is_full()
            && self.chain.innermost().parent() == &self.ambient;
        let derivation_ok = is_derivation(&self.extension, &self.derivation);
        let bracket_ok = self
            .ambient
            .bracket(&self.witness_pair.0, &self.witness_pair.1)
            .map(|v| v == self.escaping_value)
            .unwrap_or(false);
        let h = self.chain.innermost().space();
        let witness_in_h = h.contains_vector(&self.witness_pair.0).unwrap_or(false);
        let functional_ok = h
            .basis_vectors()
            .iter()
            .all(|b| dot(&self.separating_functional, b).is_zero())
            && !dot(&self.separating_functional, &self.escaping_value).is_zero();
        chain_ok && derivation_ok && bracket_ok && witness_in_h && functional_ok
    }

    /// `h` is not an ideal of the ambient algebra.
    pub fn escapes(&self) -> bool {
        !self
            .chain
            .innermost()
            .space()
            .contains_vector(&self.escaping_value)
            .unwrap_or(true)
    }
}

/// Builds the extension in which a non-perfect `h` is a subideal but not an
/// ideal.
pub fn counterexample_extension(h: &LieAlgebra) -> Result<CounterexampleCertificate> {
    if h.is_perfect() {
        return Err(Error::Precondition("h is perfect".into()));
    }
    let n = h.dim();
    let (abelianization, pi) = h.quotient(&h.derived_algebra())?;
    let q = abelianization.dim();
    let (k, into_k, _) = h.direct_sum(&abelianization);
    let f = Mat::from_fn(n + q, n + q, |r, c| {
        if r >= n && c < n {
            pi.matrix().get(r - n, c).clone()
        } else {
            Rat::zero()
        }
    });
    assert!(
        is_derivation(&k, &f),
        "(X,Y) -> (0, pi X) must be a derivation"
    );
    let hol = holomorph(&k);
    let f_coords = hol.derivations.coordinates(&f).expect("f lies in D(k)");

    let h_in_hol = hol
        .embed_base
        .compose(&into_k)?
        .image_of(&Subspace::full(n));
    let chain = IdealChain::new(vec![
        h_in_hol,
        hol.base_ideal(),
        Subalgebra::full(&hol.algebra),
    ])?;

    let x_o = (0..n)
        .find(|&j| !pi.matrix().column(j).iter().all(Zero::is_zero))
        .expect("non-perfect algebra has a nonzero abelianization");
    let mut x = crate::exactlin::zero_vector(n + q);
    x[x_o] = Rat::one();
    let x = hol.embed_base.apply(&x)?;
    let y = hol.embed_derivations.apply(&f_coords)?;
    let value = hol.algebra.bracket(&x, &y)?;
    let functional = chain
        .innermost()
        .space()
        .annihilator()
        .basis_vectors()
        .into_iter()
        .find(|a| !dot(a, &value).is_zero())
        .expect("escaping value is outside h");
    Ok(CounterexampleCertificate {
        extension: k,
        derivation: f,
        ambient: hol.algebra,
        chain,
        witness_pair: (x, y),
        escaping_value: value,
        separating_functional: functional,
    })
}

/// Complete `h ⊴ k ⊴ g` with centerless `k`.
#[derive(Debug, Clone)]
pub struct CompleteSubidealReport {
    pub ideal: bool,
    /// `c_k(h)`.
    pub centralizer: Subalgebra,
    pub sum_is_k: bool,
    pub intersection_zero: bool,
    pub commute: bool,
}

impl CompleteSubidealReport {
    pub fn holds(&self) -> bool {
        self.ideal && self.sum_is_k && self.intersection_zero && self.commute
    }
}

pub fn check_complete_subideal(
    g: &LieAlgebra,
    h: &Subalgebra,
    k: &Subalgebra,
) -> Result<CompleteSubidealReport> {
    let (h_alg, _) = h.to_algebra();
    if !is_complete(&h_alg) {
        return Err(Error::Precondition("h is not complete".into()));
    }
    if !h.is_ideal_of(k)? || !g.is_ideal(k)? {
        return Err(Error::Precondition("need h ⊴ k ⊴ g".into()));
    }
    if !k.center().space().is_zero() {
        return Err(Error::Precondition("k has nontrivial center".into()));
    }
    let ideal = g.is_ideal(h)?;
    let centralizer = g.centralizer(h)?.intersect(k)?;
    let sum_is_k = &h.space().sum(centralizer.space())? == k.space();
    let intersection_zero = h.space().intersect(centralizer.space())?.is_zero();
    let commute = g.bracket_spaces(h.space(), centralizer.space())?.is_zero();
    Ok(CompleteSubidealReport {
        ideal,
        centralizer,
        sum_is_k,
        intersection_zero,
        commute,
    })
}

fn require_subideal(g: &LieAlgebra, h: &Subalgebra) -> Result<()> {
    if !subideal_chain(g, h)?.is_subideal() {
        return Err(Error::Precondition("h is not a subideal of g".into()));
    }
    Ok(())
}

/// `r_h` against `r_g ∩ h`.
#[derive(Debug, Clone)]
pub struct RadicalReport {
    pub radical_h: Subspace,
    pub radical_g_cap_h: Subspace,
}

impl RadicalReport {
    pub fn holds(&self) -> bool {
        self.radical_h == self.radical_g_cap_h
    }
}

pub fn check_radical_intersection(g: &LieAlgebra, h: &Subalgebra) -> Result<RadicalReport> {
    require_subideal(g, h)?;
    let radical_h = h.radical().space().clone();
    let radical_g_cap_h = g.radical().space().intersect(h.space())?;
    Ok(RadicalReport {
        radical_h,
        radical_g_cap_h,
    })
}

/// The three equivalent conditions on a subideal: `h ⊴ g`, `r_h ⊴ g`,
/// `[r_h, g] ⊆ h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeviReport {
    pub ideal: bool,
    pub radical_ideal: bool,
    pub radical_bracket: bool,
}

impl LeviReport {
    pub fn holds(&self) -> bool {
        self.ideal == self.radical_ideal && self.radical_ideal == self.radical_bracket
    }
}

pub fn levi_criterion(g: &LieAlgebra, h: &Subalgebra) -> Result<LeviReport> {
    require_subideal(g, h)?;
    let r_h = h.radical();
    let ideal = g.is_ideal(h)?;
    let radical_ideal = g.is_ideal(&r_h)?;
    let br = g.bracket_spaces(r_h.space(), &Subspace::full(g.dim()))?;
    let radical_bracket = h.space().contains(&br)?;
    Ok(LeviReport {
        ideal,
        radical_ideal,
        radical_bracket,
    })
}

/// Result of a conditional theorem check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriterionOutcome {
    HypothesisNotSatisfied(String),
    Checked { subideal: bool, ideal: bool },
}

impl CriterionOutcome {
    /// Conclusion holds, or the hypotheses did not apply.
    pub fn holds(&self) -> bool {
        match self {
            CriterionOutcome::HypothesisNotSatisfied(_) => true,
            CriterionOutcome::Checked { subideal, ideal } => subideal == ideal,
        }
    }

    pub fn is_checked(&self) -> bool {
        matches!(self, CriterionOutcome::Checked { .. })
    }
}

/// Hypotheses for the bilinear form criterion on `h ⊆ g`:
/// nondegenerate on `h`, positive definite on its orthogonal complement,
/// and every `ad_X` with `X ∈ h` skew.
pub fn skew_form_hypotheses(
    form: &SymForm,
    h: &Subalgebra,
) -> Result<std::result::Result<(), String>> {
    if form.ambient() != h.parent() {
        return Err(Error::ParentMismatch);
    }
    let on_h = form.inertia_on(h.space())?;
    if !on_h.is_nondegenerate() {
        return Ok(Err(format!("form is degenerate on h, inertia {on_h}")));
    }
    let m = form.orthogonal_complement(h.space())?;
    let on_m = form.inertia_on(&m)?;
    if !on_m.is_positive_definite() {
        return Ok(Err(format!(
            "form is not positive definite on the orthogonal complement, inertia {on_m}"
        )));
    }
    if !form.is_ad_skew_on(h.space())? {
        return Ok(Err("some ad_X, X in h, is not skew".into()));
    }
    Ok(Ok(()))
}

fn subideal_iff_ideal(h: &Subalgebra, k: &Subalgebra) -> Result<CriterionOutcome> {
    let subideal = subideal_chain_in(k, h)?.is_subideal();
    let ideal = h.is_ideal_of(k)?;
    Ok(CriterionOutcome::Checked { subideal, ideal })
}

/// Under the form hypotheses, `h` is a subideal of `k` iff it is an ideal.
pub fn check_skew_form_criterion(
    form: &SymForm,
    h: &Subalgebra,
    k: &Subalgebra,
) -> Result<CriterionOutcome> {
    if !h.is_subset_of(k)? {
        return Err(Error::Precondition("h is not contained in k".into()));
    }
    match skew_form_hypotheses(form, h)? {
        Err(reason) => Ok(CriterionOutcome::HypothesisNotSatisfied(reason)),
        Ok(()) => subideal_iff_ideal(h, k),
    }
}

/// `g = u + p` for a Cartan involution, with the positive definite form
/// `<X, Y> = -K(X, θY)`.
#[derive(Debug, Clone)]
pub struct CartanDecomposition {
    pub u: Subalgebra,
    pub p: Subspace,
    pub form: SymForm,
}

impl CartanDecomposition {
    /// `[u,p] ⊆ p`, `[p,p] ⊆ u`, `K(u,p) = 0`, Killing negative definite on
    /// `u` and positive definite on `p`.
    pub fn verify(&self) -> bool {
        let g = self.u.parent();
        let killing = g.killing_form();
        let up = g.bracket_spaces(self.u.space(), &self.p);
        let pp = g.bracket_spaces(&self.p, &self.p);
        let up_ok = up.and_then(|s| self.p.contains(&s)).unwrap_or(false);
        let pp_ok = pp
            .and_then(|s| self.u.space().contains(&s))
            .unwrap_or(false);
        let orthogonal = self.u.space().basis_vectors().iter().all(|x| {
            self.p
                .basis_vectors()
                .iter()
                .all(|y| killing.eval(x, y).is_zero())
        });
        let neg_u = killing
            .inertia_on(self.u.space())
            .is_ok_and(|i| i.is_negative_definite());
        let pos_p = killing
            .inertia_on(&self.p)
            .is_ok_and(|i| i.is_positive_definite());
        up_ok && pp_ok && orthogonal && neg_u && pos_p
    }

    pub fn killing_inertia(&self) -> (Inertia, Inertia) {
        let k = self.u.parent().killing_form();
        (
            k.inertia_on(self.u.space()).expect("same ambient"),
            k.inertia_on(&self.p).expect("same ambient"),
        )
    }
}

pub fn cartan_eigenspaces(g: &LieAlgebra, theta: &LinMap) -> Result<CartanDecomposition> {
    if theta.source() != g || theta.target() != g {
        return Err(Error::ParentMismatch);
    }
    if !theta.is_automorphism() {
        return Err(Error::Precondition("θ is not an automorphism".into()));
    }
    let n = g.dim();
    if theta.matrix() * theta.matrix() != Mat::identity(n) {
        return Err(Error::Precondition("θ² ≠ id".into()));
    }
    let killing = g.killing_matrix();
    if killing.rank() != n {
        return Err(Error::Precondition("g is not semisimple".into()));
    }
    let form = SymForm::new(g.clone(), -&(&killing * theta.matrix()))?;
    let inertia = form.inertia();
    if !inertia.is_positive_definite() {
        return Err(Error::Precondition(format!(
            "not a Cartan involution: -K(X, θY) has inertia {inertia}"
        )));
    }
    let u = Subalgebra::new(g.clone(), theta.eigenspace(&Rat::one())?)?;
    let p = theta.eigenspace(&-Rat::one())?;
    Ok(CartanDecomposition { u, p, form })
}

/// Cartan criterion outcome together with the bilinear form criterion it
/// reduces to (`B = K` when `h ⊇ u`, `B = -K` when `h ⊇ p`).
#[derive(Debug, Clone)]
pub struct CartanCriterionReport {
    pub outcome: CriterionOutcome,
    pub reduction: CriterionOutcome,
}

impl CartanCriterionReport {
    pub fn holds(&self) -> bool {
        self.outcome.holds() && self.reduction.is_checked() && self.reduction == self.outcome
    }
}

pub fn check_cartan_criterion(
    g: &LieAlgebra,
    theta: &LinMap,
    h: &Subalgebra,
    k: &Subalgebra,
) -> Result<CartanCriterionReport> {
    let dec = cartan_eigenspaces(g, theta)?;
    let contains_u = h.space().contains(dec.u.space())?;
    let contains_p = h.space().contains(&dec.p)?;
    if !contains_u && !contains_p {
        return Err(Error::Precondition("h contains neither u nor p".into()));
    }
    if !h.is_subset_of(k)? {
        return Err(Error::Precondition("h is not contained in k".into()));
    }
    let outcome = subideal_iff_ideal(h, k)?;
    let killing = g.killing_form();
    let form = if contains_u {
        killing
    } else {
        killing.negated()
    };
    let reduction = check_skew_form_criterion(&form, h, k)?;
    Ok(CartanCriterionReport { outcome, reduction })
}

/// `h, N(h), N(N(h)), ...` until it stabilizes.
pub fn normalizer_tower(g: &LieAlgebra, h: &Subalgebra) -> Result<Vec<Subalgebra>> {
    let mut tower = vec![h.clone()];
    loop {
        let last = tower.last().expect("nonempty");
        let next = g.normalizer(last)?;
        if next.space() == last.space() {
            return Ok(tower);
        }
        tower.push(next);
    }
}

pub fn is_self_normalizing(g: &LieAlgebra, h: &Subalgebra) -> Result<bool> {
    Ok(g.normalizer(h)?.space() == h.space())
}

/// Hypotheses under which the normalizer is self-normalizing.
#[derive(Debug, Clone)]
pub enum SelfNormHypothesis {
    /// (i) `h` perfect.
    Perfect,
    /// (ii) `r_h` inside the center of `g`.
    RadicalCentral,
    /// (iii) bilinear form hypotheses for `B` on `h`.
    SkewForm(SymForm),
    /// (iv) `B` positive definite with every `ad_X` skew.
    Compact(SymForm),
    /// (v) `B` positive definite with `ad_h` skew.
    CompactlyEmbedded(SymForm),
    /// (vi) `h` contains an eigenspace of the Cartan involution.
    CartanEigenspace(LinMap),
}

impl SelfNormHypothesis {
    pub fn tag(&self) -> &'static str {
        match self {
            SelfNormHypothesis::Perfect => "i",
            SelfNormHypothesis::RadicalCentral => "ii",
            SelfNormHypothesis::SkewForm(_) => "iii",
            SelfNormHypothesis::Compact(_) => "iv",
            SelfNormHypothesis::CompactlyEmbedded(_) => "v",
            SelfNormHypothesis::CartanEigenspace(_) => "vi",
        }
    }

    /// `Ok(())` when the hypothesis holds for `(g, h)`, else the reason.
    pub fn verify(
        &self,
        g: &LieAlgebra,
        h: &Subalgebra,
    ) -> Result<std::result::Result<(), String>> {
        let fail = |s: &str| Ok(Err(s.to_owned()));
        match self {
            SelfNormHypothesis::Perfect => {
                if h.is_perfect() {
                    Ok(Ok(()))
                } else {
                    fail("h is not perfect")
                }
            }
            SelfNormHypothesis::RadicalCentral => {
                if g.center().space().contains(h.radical().space())? {
                    Ok(Ok(()))
                } else {
                    fail("radical of h is not central in g")
                }
            }
            SelfNormHypothesis::SkewForm(b) => skew_form_hypotheses(b, h),
            SelfNormHypothesis::Compact(b) => {
                if !b.inertia().is_positive_definite() {
                    return fail("form is not positive definite");
                }
                if !b.is_ad_skew_on(&Subspace::full(g.dim()))? {
                    return fail("some ad_X is not skew");
                }
                Ok(Ok(()))
            }
            SelfNormHypothesis::CompactlyEmbedded(b) => {
                if !b.inertia().is_positive_definite() {
                    return fail("form is not positive definite");
                }
                if !b.is_ad_skew_on(h.space())? {
                    return fail("some ad_X, X in h, is not skew");
                }
                Ok(Ok(()))
            }
            SelfNormHypothesis::CartanEigenspace(theta) => match cartan_eigenspaces(g, theta) {
                Err(e) => Ok(Err(e.to_string())),
                Ok(dec) => {
                    if h.space().contains(dec.u.space())? || h.space().contains(&dec.p)? {
                        Ok(Ok(()))
                    } else {
                        fail("h contains neither eigenspace")
                    }
                }
            },
        }
    }
}

#[derive(Debug, Clone)]
pub enum SelfNormOutcome {
    HypothesisNotSatisfied(String),
    Checked {
        normalizer: Subalgebra,
        self_normalizing: bool,
    },
}

impl SelfNormOutcome {
    pub fn holds(&self) -> bool {
        match self {
            SelfNormOutcome::HypothesisNotSatisfied(_) => true,
            SelfNormOutcome::Checked {
                self_normalizing, ..
            } => *self_normalizing,
        }
    }

    pub fn is_checked(&self) -> bool {
        matches!(self, SelfNormOutcome::Checked { .. })
    }
}

pub fn check_self_normalizing_theorem(
    g: &LieAlgebra,
    h: &Subalgebra,
    hypothesis: &SelfNormHypothesis,
) -> Result<SelfNormOutcome> {
    if h.parent() != g {
        return Err(Error::ParentMismatch);
    }
    if let Err(reason) = hypothesis.verify(g, h)? {
        return Ok(SelfNormOutcome::HypothesisNotSatisfied(reason));
    }
    let normalizer = g.normalizer(h)?;
    let self_normalizing = is_self_normalizing(g, &normalizer)?;
    Ok(SelfNormOutcome::Checked {
        normalizer,
        self_normalizing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, vector};
    use crate::liealg::span_ints;

    fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(3, Some("heisenberg3"), &[(0, 1, 2, int(1))]).unwrap()
    }

    fn sl2() -> LieAlgebra {
        LieAlgebra::from_brackets(
            3,
            Some("sl2"),
            &[(0, 1, 1, int(2)), (0, 2, 2, int(-2)), (1, 2, 0, int(1))],
        )
        .unwrap()
    }

    fn aff1() -> LieAlgebra {
        LieAlgebra::from_brackets(2, Some("aff1"), &[(0, 1, 1, int(1))]).unwrap()
    }

    #[test]
    fn closures() {
        let s = sl2();
        let e = span_ints(&s, &[&[0, 1, 0]]).unwrap();
        assert!(ideal_closure(&s, &e).unwrap().space().is_full());
        let h = heisenberg();
        let x = span_ints(&h, &[&[1, 0, 0]]).unwrap();
        assert_eq!(
            ideal_closure(&h, &x).unwrap().space(),
            &Subspace::span(3, vec![vector(&[1, 0, 0]), vector(&[0, 0, 1])])
        );
        let z = h.center();
        assert_eq!(ideal_closure(&h, &z).unwrap(), z);
    }

    #[test]
    fn subideal_examples() {
        let h = heisenberg();
        let x = span_ints(&h, &[&[1, 0, 0]]).unwrap();
        let verdict = subideal_chain(&h, &x).unwrap();
        let chain = verdict.chain().unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain.links()[1].dim(), 2);

        let s = sl2();
        let e = span_ints(&s, &[&[0, 1, 0]]).unwrap();
        match subideal_chain(&s, &e).unwrap() {
            SubidealVerdict::NotSubideal { series } => {
                assert!(series.last().unwrap().space().is_full())
            }
            SubidealVerdict::Subideal(_) => panic!("span(E) is not a subideal of sl2"),
        }
        let full = Subalgebra::full(&s);
        assert_eq!(subideal_chain(&s, &full).unwrap().chain().unwrap().len(), 1);
    }

    #[test]
    fn counterexamples() {
        let c = counterexample_extension(&LieAlgebra::abelian(1)).unwrap();
        assert_eq!(c.extension, LieAlgebra::abelian(2));
        assert!(c.verify() && c.escapes());
        // escaping value is (-f(X_o), 0) = (0, -1, 0...) in H(k)
        assert_eq!(c.escaping_value[0], int(0));
        assert_eq!(c.escaping_value[1], int(-1));

        let c = counterexample_extension(&aff1()).unwrap();
        assert_eq!(c.extension.dim(), 3);
        assert!(c.verify() && c.escapes());
        assert_eq!(c.escaping_value[2], int(-1));

        assert_eq!(
            counterexample_extension(&sl2()).unwrap_err(),
            Error::Precondition("h is perfect".into())
        );
    }

    #[test]
    fn radical_and_levi() {
        let h = heisenberg();
        let x = span_ints(&h, &[&[1, 0, 0]]).unwrap();
        assert!(check_radical_intersection(&h, &x).unwrap().holds());
        let l = levi_criterion(&h, &x).unwrap();
        assert_eq!(
            l,
            LeviReport {
                ideal: false,
                radical_ideal: false,
                radical_bracket: false
            }
        );
        let xz = span_ints(&h, &[&[1, 0, 0], &[0, 0, 1]]).unwrap();
        let l = levi_criterion(&h, &xz).unwrap();
        assert!(l.ideal && l.radical_ideal && l.radical_bracket);

        let s = sl2();
        let e = span_ints(&s, &[&[0, 1, 0]]).unwrap();
        assert!(matches!(
            levi_criterion(&s, &e),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sl2_cartan_decomposition() {
        let s = sl2();
        let theta = LinMap::new(
            s.clone(),
            s.clone(),
            Mat::from_ints(&[&[-1, 0, 0], &[0, 0, -1], &[0, -1, 0]]),
        )
        .unwrap();
        let dec = cartan_eigenspaces(&s, &theta).unwrap();
        assert_eq!(dec.u.space(), &Subspace::span(3, vec![vector(&[0, 1, -1])]));
        assert_eq!(
            dec.p,
            Subspace::span(3, vec![vector(&[1, 0, 0]), vector(&[0, 1, 1])])
        );
        assert!(dec.verify());
        let (iu, ip) = dec.killing_inertia();
        assert_eq!(iu, Inertia::new(0, 1, 0));
        assert_eq!(ip, Inertia::new(2, 0, 0));

        let id = LinMap::identity(&s);
        assert!(matches!(
            cartan_eigenspaces(&s, &id),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn normalizer_towers() {
        let h = heisenberg();
        let x = span_ints(&h, &[&[1, 0, 0]]).unwrap();
        let tower = normalizer_tower(&h, &x).unwrap();
        assert_eq!(
            tower.iter().map(Subalgebra::dim).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        let s = sl2();
        assert!(is_self_normalizing(&s, &span_ints(&s, &[&[1, 0, 0]]).unwrap()).unwrap());
        let center = h.center();
        assert_eq!(normalizer_tower(&h, &center).unwrap().len(), 2);
        assert_eq!(
            normalizer_tower(&h, &Subalgebra::full(&h)).unwrap().len(),
            1
        );
    }

    #[test]
    fn self_normalizing_hypotheses() {
        let h = heisenberg();
        let xz = span_ints(&h, &[&[1, 0, 0], &[0, 0, 1]]).unwrap();
        let out =
            check_self_normalizing_theorem(&h, &xz, &SelfNormHypothesis::RadicalCentral).unwrap();
        assert!(matches!(out, SelfNormOutcome::HypothesisNotSatisfied(_)));

        let s = sl2();
        let u = span_ints(&s, &[&[0, 1, -1]]).unwrap();
        let b = SymForm::new(
            s.clone(),
            Mat::from_diagonal(&[
                int(1),
                crate::exactlin::frac(1, 2),
                crate::exactlin::frac(1, 2),
            ]),
        )
        .unwrap();
        let out = check_self_normalizing_theorem(&s, &u, &SelfNormHypothesis::CompactlyEmbedded(b))
            .unwrap();
        match out {
            SelfNormOutcome::Checked {
                normalizer,
                self_normalizing,
            } => {
                assert_eq!(normalizer, u);
                assert!(self_normalizing);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
