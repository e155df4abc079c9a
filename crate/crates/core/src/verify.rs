//! Executable catalog of the identities: each check enumerates every
//! instance satisfying the identity's hypotheses up to a rank cap and
//! compares both sides as exact polynomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::closed::{
    closed_b_ascending, closed_chessboard_minus, closed_chessboard_plus, closed_conj_a,
    closed_conj_b, closed_sn_full, closed_sn_quotient,
};
use crate::enumerate::{elements, DescentClassTable, Limits, PinnedValueTable, WeightSpec};
use crate::error::{Error, Result};
use crate::group::{
    left_parabolic_decompose, GroupElement, IndexSet, Kind, PermutationA, PermutationB,
};
use crate::odd::{odd_length_a, odd_length_a_alternating, odd_length_b, odd_stats_b};
use crate::poly::IntPolynomial;
use crate::sets::{connected_components, is_compressed, m_tilde, shifted_set, ShiftDirection};

macro_rules! identities {
    ($($variant:ident => $tag:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub enum IdentityId {
            $(#[serde(rename = $tag)] $variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn tag(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $tag,)*
                }
            }
        }
    };
}

identities! {
    Prop2_1Additivity => "prop2_1_additivity",
    Prop2_7Ascending => "prop2_7_ascending",
    Lemma2_8ChessB => "lemma2_8_chessB",
    Prop2_9Fact2 => "prop2_9_fact2",
    Prop2_10ZeroRemoval => "prop2_10_zero_removal",
    Lemma3_1ChessA => "lemma3_1_chessA",
    EqChessA0 => "eq_chessA0",
    Lemma3_2Zero => "lemma3_2_zero",
    Prop3_3Scr => "prop3_3_scr",
    Prop3_4Scl => "prop3_4_scl",
    Prop3_5Scrr => "prop3_5_scrr",
    Prop3_6Sclr => "prop3_6_sclr",
    Thm4_1Plus => "thm4_1_plus",
    Thm4_1Minus => "thm4_1_minus",
    Thm4_2ConjA => "thm4_2_conjA",
    Cor4_3Sn => "cor4_3_sn",
    Cor4_4Full => "cor4_4_full",
    Prop5_1Decomp => "prop5_1_decomp",
    Prop5_2ShiftB => "prop5_2_shiftB",
    Prop5_3InflateB => "prop5_3_inflateB",
    Thm5_4ConjB => "thm5_4_conjB",
    DefAEquivalence => "defA_equivalence",
    CompressedIffMEqMtilde => "compressed_iff_m_eq_mtilde",
}

impl IdentityId {
    /// Default rank caps `(type A, type B)`; `None` where the check does not
    /// touch that family.
    pub fn default_caps(self) -> (Option<usize>, Option<usize>) {
        use IdentityId::*;
        match self {
            Prop2_1Additivity => (Some(8), Some(6)),
            Prop2_7Ascending | Lemma2_8ChessB | Prop2_10ZeroRemoval | Prop5_2ShiftB
            | Prop5_3InflateB => (None, Some(7)),
            // the type A factor is enumerated at the same rank
            Prop2_9Fact2 => (None, Some(7)),
            Lemma3_1ChessA | EqChessA0 | Lemma3_2Zero | Prop3_3Scr | Prop3_4Scl | Prop3_5Scrr
            | Prop3_6Sclr => (Some(9), None),
            Thm4_1Plus
            | Thm4_1Minus
            | Thm4_2ConjA
            | Cor4_3Sn
            | Cor4_4Full
            | CompressedIffMEqMtilde => (Some(10), None),
            Prop5_1Decomp => (None, Some(6)),
            Thm5_4ConjB => (None, Some(8)),
            DefAEquivalence => (Some(7), None),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.tag() == s.trim())
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// One hypothesis-satisfying case of an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub kind: Kind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<Vec<i32>>,
}

impl Instance {
    fn new(kind: Kind, n: usize) -> Self {
        Instance {
            kind,
            n,
            set: None,
            component: None,
            position: None,
            element: None,
        }
    }

    fn with_set(mut self, set: &IndexSet) -> Self {
        self.set = Some(set.members().collect());
        self
    }

    fn with_component(mut self, c: (usize, usize)) -> Self {
        self.component = Some(c);
        self
    }

    fn with_position(mut self, a: usize) -> Self {
        self.position = Some(a);
        self
    }

    fn with_element(mut self, w: &[i32]) -> Self {
        self.element = Some(w.to_vec());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub instance: Instance,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not run, or found no instance to check.
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n_a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n_b: Option<usize>,
    pub instances: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub only: Option<Instance>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub identity: IdentityId,
    pub params: ReportParams,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub elapsed_ms: u64,
}

/// Rank caps and parallelism for a check. Unset caps fall back to the
/// identity's defaults.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckParams {
    pub max_n_a: Option<usize>,
    pub max_n_b: Option<usize>,
    pub threads: usize,
    pub limits: Limits,
    /// Restricts the check to one instance (counterexample replay).
    pub only: Option<Instance>,
}

impl CheckParams {
    fn caps(&self, id: IdentityId) -> (Option<usize>, Option<usize>) {
        let (a, b) = id.default_caps();
        (
            a.map(|d| self.max_n_a.unwrap_or(d)),
            b.map(|d| self.max_n_b.unwrap_or(d)),
        )
    }

    /// Caps that exceed the sweep limits are refused up front.
    pub fn validate(&self, id: IdentityId) -> Result<()> {
        let (a, b) = self.caps(id);
        if let Some(a) = a.filter(|&a| a > 0) {
            self.limits.check(Kind::A, a)?;
        }
        if let Some(b) = b.filter(|&b| b > 0) {
            self.limits.check(Kind::B, b)?;
        }
        Ok(())
    }
}

type Shared<K, V> = Mutex<HashMap<K, Arc<V>>>;

/// Tables and quotient vectors shared between checks.
pub struct TableCache {
    threads: usize,
    limits: Limits,
    quotients: Shared<(Kind, usize, WeightSpec), Vec<IntPolynomial>>,
    tables: Shared<(Kind, usize), DescentClassTable>,
    pinned: Shared<(Kind, usize, i32), PinnedValueTable>,
}

impl TableCache {
    pub fn new(threads: usize, limits: Limits) -> Self {
        TableCache {
            threads: threads.max(1),
            limits,
            quotients: Mutex::default(),
            tables: Mutex::default(),
            pinned: Mutex::default(),
        }
    }

    pub fn table(&self, kind: Kind, n: usize) -> Result<Arc<DescentClassTable>> {
        if let Some(t) = self.tables.lock().unwrap().get(&(kind, n)) {
            return Ok(t.clone());
        }
        let t = Arc::new(DescentClassTable::build(
            kind,
            n,
            self.threads,
            &self.limits,
        )?);
        self.tables.lock().unwrap().insert((kind, n), t.clone());
        Ok(t)
    }

    /// Quotient sums for every index set, indexed by `bits >> first_generator`.
    pub fn quotients(
        &self,
        kind: Kind,
        n: usize,
        weight: WeightSpec,
    ) -> Result<Arc<Vec<IntPolynomial>>> {
        if let Some(q) = self.quotients.lock().unwrap().get(&(kind, n, weight)) {
            return Ok(q.clone());
        }
        let q = Arc::new(self.table(kind, n)?.all_quotients(&weight));
        self.quotients
            .lock()
            .unwrap()
            .insert((kind, n, weight), q.clone());
        Ok(q)
    }

    pub fn quotient(&self, set: &IndexSet, weight: WeightSpec) -> Result<IntPolynomial> {
        let q = self.quotients(set.kind(), set.rank(), weight)?;
        Ok(q[(set.bits() >> set.kind().first_generator()) as usize].clone())
    }

    pub fn pinned(&self, kind: Kind, n: usize, value: i32) -> Result<Arc<PinnedValueTable>> {
        if let Some(t) = self.pinned.lock().unwrap().get(&(kind, n, value)) {
            return Ok(t.clone());
        }
        let t = Arc::new(PinnedValueTable::build(
            kind,
            n,
            value,
            self.threads,
            &self.limits,
        )?);
        self.pinned
            .lock()
            .unwrap()
            .insert((kind, n, value), t.clone());
        Ok(t)
    }
}

struct Ctx<'a> {
    cache: &'a TableCache,
    only: Option<&'a Instance>,
    cap_a: usize,
    cap_b: usize,
    instances: u64,
    failure: Option<Counterexample>,
}

impl Ctx<'_> {
    /// Ranks `lo..=cap` (or just the replayed instance's rank).
    fn ranks(&self, kind: Kind, lo: usize) -> Vec<usize> {
        let cap = match kind {
            Kind::A => self.cap_a,
            Kind::B => self.cap_b,
        };
        (lo.max(1)..=cap)
            .filter(|&n| self.only.is_none_or(|i| i.kind == kind && i.n == n))
            .collect()
    }

    fn wanted(&self, inst: &Instance) -> bool {
        self.only.is_none_or(|o| o == inst)
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }

    /// Records one instance; returns `false` once a failure is captured.
    fn compare(&mut self, inst: Instance, lhs: &IntPolynomial, rhs: &IntPolynomial) -> bool {
        self.compare_with_note(inst, lhs, rhs, None)
    }

    fn compare_with_note(
        &mut self,
        inst: Instance,
        lhs: &IntPolynomial,
        rhs: &IntPolynomial,
        note: Option<&str>,
    ) -> bool {
        self.instances += 1;
        #[cfg(test)]
        let lhs = &fault::apply(&inst, lhs);
        if lhs != rhs && self.failure.is_none() {
            self.failure = Some(Counterexample {
                instance: inst,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                note: note.map(str::to_string),
            });
        }
        self.failure.is_none()
    }

    /// Checks `a == b == c`, reporting the first mismatching pair.
    fn compare3(
        &mut self,
        inst: Instance,
        a: &IntPolynomial,
        b: &IntPolynomial,
        c: &IntPolynomial,
    ) -> bool {
        if a != b {
            return self.compare_with_note(inst, a, b, Some("first and middle sums differ"));
        }
        self.compare_with_note(inst, a, c, Some("first and last sums differ"))
    }
}

#[cfg(test)]
pub(crate) mod fault {
    use super::*;
    use std::cell::RefCell;

    thread_local! {
        static FAULTY_RANK: RefCell<Option<usize>> = const { RefCell::new(None) };
    }

    pub fn set(rank: Option<usize>) {
        FAULTY_RANK.with(|f| *f.borrow_mut() = rank);
    }

    pub fn apply(inst: &Instance, lhs: &IntPolynomial) -> IntPolynomial {
        match FAULTY_RANK.with(|f| *f.borrow()) {
            Some(n) if n == inst.n => lhs + &IntPolynomial::monomial(1, 500),
            _ => lhs.clone(),
        }
    }
}

fn constant(v: u64) -> IntPolynomial {
    IntPolynomial::constant(v as i64)
}

fn sets(kind: Kind, n: usize) -> impl Iterator<Item = IndexSet> {
    IndexSet::all(kind, n).expect("rank within index range")
}

/// `[lo, hi] \ I` contains only even numbers.
fn complement_is_even(set: &IndexSet, lo: usize, hi: usize) -> bool {
    (lo..=hi).all(|i| set.contains(i as i64) || i % 2 == 0)
}

fn check_prop2_1(ctx: &mut Ctx) -> Result<()> {
    fn run<E: GroupElement>(ctx: &mut Ctx) -> Result<()> {
        for n in ctx.ranks(E::KIND, 1) {
            let all: Vec<E> = elements::<E>(n).collect();
            for j in sets(E::KIND, n) {
                for w in &all {
                    let inst = Instance::new(E::KIND, n)
                        .with_set(&j)
                        .with_element(w.window());
                    if !ctx.wanted(&inst) {
                        continue;
                    }
                    let (u, v) = left_parabolic_decompose(w, &j)?;
                    let note = if u.compose(&v)? != *w {
                        Some("product of the parts differs from w")
                    } else if !j.contains_element(&u) {
                        Some("parabolic part outside W_J")
                    } else if !v.left_descents().is_disjoint(&j) {
                        Some("quotient part has a left descent in J")
                    } else {
                        None
                    };
                    let lhs = constant(w.length());
                    let rhs = match note {
                        Some(_) => IntPolynomial::constant(-1),
                        None => constant(u.length() + v.length()),
                    };
                    if !ctx.compare_with_note(inst, &lhs, &rhs, note) {
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }
    run::<PermutationA>(ctx)?;
    if !ctx.done() {
        run::<PermutationB>(ctx)?;
    }
    Ok(())
}

fn check_prop2_7(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks(Kind::B, 1) {
        let set = IndexSet::full(Kind::B, n)?.without(0);
        let inst = Instance::new(Kind::B, n).with_set(&set);
        if ctx.wanted(&inst) {
            let lhs = ctx.cache.quotient(&set, WeightSpec::ALL)?;
            if !ctx.compare(inst, &lhs, &closed_b_ascending(n)?) {
                break;
            }
        }
    }
    Ok(())
}

/// Compares two quotient-sum families over every index set passing `keep`.
fn compare_weights(
    ctx: &mut Ctx,
    kind: Kind,
    lo: usize,
    keep: impl Fn(usize, &IndexSet) -> bool,
    lhs: WeightSpec,
    rhs: impl Fn(usize, &IndexSet, &Ctx) -> Result<IntPolynomial>,
) -> Result<()> {
    for n in ctx.ranks(kind, lo) {
        let left = ctx.cache.quotients(kind, n, lhs)?;
        for (i, set) in sets(kind, n).enumerate() {
            let inst = Instance::new(kind, n).with_set(&set);
            if !keep(n, &set) || !ctx.wanted(&inst) {
                continue;
            }
            let right = rhs(n, &set, ctx)?;
            if !ctx.compare(inst, &left[i], &right) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn check_prop2_9(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks(Kind::B, 1) {
        let b_sums = ctx.cache.quotients(Kind::B, n, WeightSpec::ALL)?;
        let a_sums = ctx.cache.quotients(Kind::A, n, WeightSpec::ALL)?;
        let ascending = &b_sums[(IndexSet::full(Kind::B, n)?.without(0).bits()) as usize];
        for a_set in sets(Kind::A, n) {
            if n % 2 == 0 && !complement_is_even(&a_set, 1, n - 1) {
                continue;
            }
            let b_set = IndexSet::from_bits(Kind::B, n, a_set.bits())?;
            let inst = Instance::new(Kind::B, n).with_set(&b_set);
            if !ctx.wanted(&inst) {
                continue;
            }
            let rhs = ascending * &a_sums[(a_set.bits() >> 1) as usize];
            if !ctx.compare(inst, &b_sums[b_set.bits() as usize], &rhs) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn check_prop2_10(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks(Kind::B, 2).into_iter().filter(|n| n % 2 == 0) {
        let sums = ctx.cache.quotients(Kind::B, n, WeightSpec::ALL)?;
        for set in sets(Kind::B, n) {
            if !set.contains(0) || !complement_is_even(&set, 0, n - 1) {
                continue;
            }
            let inst = Instance::new(Kind::B, n).with_set(&set);
            if !ctx.wanted(&inst) {
                continue;
            }
            let i = (0..=n).find(|&i| !set.contains(i as i64)).unwrap_or(n);
            let small = ctx
                .cache
                .quotient(&IndexSet::full(Kind::B, i)?.without(0), WeightSpec::ALL)?;
            let rhs = &sums[set.bits() as usize] * &small;
            if !ctx.compare(inst, &sums[set.without(0).bits() as usize], &rhs) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn check_lemma3_2(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks(Kind::A, 3) {
        let top = ctx.cache.pinned(Kind::A, n, n as i32)?;
        let bottom = ctx.cache.pinned(Kind::A, n, 1)?;
        for set in sets(Kind::A, n) {
            for a in 2..n {
                if (a - 2..=a + 1).any(|i| set.contains(i as i64)) {
                    continue;
                }
                let inst = Instance::new(Kind::A, n).with_set(&set).with_position(a);
                if !ctx.wanted(&inst) {
                    continue;
                }
                let zero = IntPolynomial::zero();
                let hi = top.gf_quotient(&set, &WeightSpec::ALL, a)?;
                let lo = bottom.gf_quotient(&set, &WeightSpec::ALL, a)?;
                let ok = ctx.compare_with_note(inst.clone(), &hi, &zero, Some("sum with σ(a) = n"));
                if !ok || !ctx.compare_with_note(inst, &lo, &zero, Some("sum with σ(a) = 1")) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Every valid odd-component shift of `set` in `direction`, with the shifted set.
fn shifts(set: &IndexSet, direction: ShiftDirection) -> Vec<((usize, usize), IndexSet)> {
    connected_components(set)
        .intervals
        .into_iter()
        .filter_map(|c| shifted_set(set, c, direction).ok().map(|s| (c, s)))
        .collect()
}

/// Three-way shift invariance over whole quotients.
fn check_shift(ctx: &mut Ctx, kind: Kind, direction: ShiftDirection) -> Result<()> {
    for n in ctx.ranks(kind, 2) {
        let sums = ctx.cache.quotients(kind, n, WeightSpec::ALL)?;
        let at = |s: &IndexSet| &sums[(s.bits() >> kind.first_generator()) as usize];
        for set in sets(kind, n) {
            for (component, shifted) in shifts(&set, direction) {
                let inst = Instance::new(kind, n)
                    .with_set(&set)
                    .with_component(component);
                if !ctx.wanted(&inst) {
                    continue;
                }
                if !ctx.compare3(inst, at(&set), at(&set.union(&shifted)), at(&shifted)) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

/// Three-way shift invariance over `{σ ∈ S_n^I : σ(a) = n}` for every `a`
/// outside `I` and away from the moved component.
fn check_shift_pinned(ctx: &mut Ctx, direction: ShiftDirection) -> Result<()> {
    for n in ctx.ranks(Kind::A, 2) {
        let pinned = ctx.cache.pinned(Kind::A, n, n as i32)?;
        for set in sets(Kind::A, n) {
            for ((lo, hi), shifted) in shifts(&set, direction) {
                // [i-1, i+2k+2] in terms of the component's own endpoints
                let (guard_lo, guard_hi) = match direction {
                    ShiftDirection::Right => (lo as i64 - 1, hi as i64 + 2),
                    ShiftDirection::Left => (lo as i64 - 2, hi as i64 + 1),
                };
                for a in 1..=n {
                    let ai = a as i64;
                    if set.contains(ai) || (guard_lo..=guard_hi).contains(&ai) {
                        continue;
                    }
                    let inst = Instance::new(Kind::A, n)
                        .with_set(&set)
                        .with_component((lo, hi))
                        .with_position(a);
                    if !ctx.wanted(&inst) {
                        continue;
                    }
                    let first = pinned.gf_quotient(&set, &WeightSpec::ALL, a)?;
                    let middle = pinned.gf_quotient(&set.union(&shifted), &WeightSpec::ALL, a)?;
                    let last = pinned.gf_quotient(&shifted, &WeightSpec::ALL, a)?;
                    if !ctx.compare3(inst, &first, &middle, &last) {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_prop5_1(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks(Kind::B, 1) {
        for w in elements::<PermutationB>(n) {
            let inst = Instance::new(Kind::B, n).with_element(w.window());
            if !ctx.wanted(&inst) {
                continue;
            }
            if !ctx.compare(
                inst,
                &constant(odd_length_b(&w)),
                &constant(odd_stats_b(&w).total()),
            ) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn check_prop5_3(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks(Kind::B, 1) {
        let sums = ctx.cache.quotients(Kind::B, n, WeightSpec::ALL)?;
        for set in sets(Kind::B, n) {
            let a = (0..=n).find(|&i| !set.contains(i as i64)).unwrap_or(n);
            if a >= n || set.contains(a as i64 + 1) {
                continue;
            }
            let inst = Instance::new(Kind::B, n).with_set(&set).with_position(a);
            if !ctx.wanted(&inst) {
                continue;
            }
            let inflated = set.with(a as i64)?;
            let rhs = &IntPolynomial::one_minus_x_pow(a + 1) * &sums[inflated.bits() as usize];
            if !ctx.compare(inst, &sums[set.bits() as usize], &rhs) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn check_def_a(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks(Kind::A, 1) {
        for w in elements::<PermutationA>(n) {
            let inst = Instance::new(Kind::A, n).with_element(w.window());
            if !ctx.wanted(&inst) {
                continue;
            }
            let alt = odd_length_a_alternating(&w)?;
            if !ctx.compare(inst, &constant(alt), &constant(odd_length_a(&w))) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn check_compressed(ctx: &mut Ctx) -> Result<()> {
    for n in ctx.ranks(Kind::A, 2).into_iter().filter(|n| n % 2 == 0) {
        for set in sets(Kind::A, n) {
            let inst = Instance::new(Kind::A, n).with_set(&set);
            if !ctx.wanted(&inst) {
                continue;
            }
            let lhs = (m_tilde(&set) == (n / 2) as u64) as u64;
            let rhs = (is_compressed(&set) && set.contains(n as i64 - 1)) as u64;
            if !ctx.compare(inst, &constant(lhs), &constant(rhs)) {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn dispatch(id: IdentityId, ctx: &mut Ctx) -> Result<()> {
    use IdentityId::*;
    let all = |_: usize, _: &IndexSet| true;
    match id {
        Prop2_1Additivity => check_prop2_1(ctx),
        Prop2_7Ascending => check_prop2_7(ctx),
        Lemma2_8ChessB => compare_weights(ctx, Kind::B, 1, all, WeightSpec::ALL, |_, s, c| {
            c.cache.quotient(s, WeightSpec::PLUS)
        }),
        Prop2_9Fact2 => check_prop2_9(ctx),
        Prop2_10ZeroRemoval => check_prop2_10(ctx),
        Lemma3_1ChessA => compare_weights(
            ctx,
            Kind::A,
            1,
            |n, s| n % 2 == 1 || complement_is_even(s, 1, n - 1),
            WeightSpec::ALL,
            |_, s, c| c.cache.quotient(s, WeightSpec::PLUS),
        ),
        EqChessA0 => compare_weights(ctx, Kind::A, 1, all, WeightSpec::ALL, |_, s, c| {
            c.cache.quotient(s, WeightSpec::CHESSBOARD)
        }),
        Lemma3_2Zero => check_lemma3_2(ctx),
        Prop3_3Scr => check_shift(ctx, Kind::A, ShiftDirection::Right),
        Prop3_4Scl => check_shift(ctx, Kind::A, ShiftDirection::Left),
        Prop3_5Scrr => check_shift_pinned(ctx, ShiftDirection::Right),
        Prop3_6Sclr => check_shift_pinned(ctx, ShiftDirection::Left),
        Thm4_1Plus => compare_weights(ctx, Kind::A, 1, all, WeightSpec::PLUS, |n, s, _| {
            closed_chessboard_plus(n, s)
        }),
        Thm4_1Minus => compare_weights(
            ctx,
            Kind::A,
            1,
            |n, _| n % 2 == 0,
            WeightSpec::MINUS,
            |n, s, _| closed_chessboard_minus(n, s),
        ),
        Thm4_2ConjA => compare_weights(
            ctx,
            Kind::A,
            1,
            all,
            WeightSpec::CHESSBOARD_CHI,
            |n, s, _| closed_conj_a(n, s),
        ),
        Cor4_3Sn => compare_weights(ctx, Kind::A, 1, all, WeightSpec::ALL, |n, s, _| {
            closed_sn_quotient(n, s)
        }),
        Cor4_4Full => compare_weights(
            ctx,
            Kind::A,
            1,
            |_, s| s.is_empty(),
            WeightSpec::ALL,
            |n, _, _| closed_sn_full(n),
        ),
        Prop5_1Decomp => check_prop5_1(ctx),
        Prop5_2ShiftB => check_shift(ctx, Kind::B, ShiftDirection::Right),
        Prop5_3InflateB => check_prop5_3(ctx),
        Thm5_4ConjB => compare_weights(ctx, Kind::B, 1, all, WeightSpec::ALL, |n, s, _| {
            closed_conj_b(n, s)
        }),
        DefAEquivalence => check_def_a(ctx),
        CompressedIffMEqMtilde => check_compressed(ctx),
    }
}

/// Runs one identity check with a private table cache.
pub fn check_identity(id: IdentityId, params: &CheckParams) -> Result<CheckReport> {
    params.validate(id)?;
    let cache = TableCache::new(params.threads, params.limits);
    Ok(check_with_cache(id, params, &cache))
}

/// Runs one identity check; any error is folded into the report.
pub fn check_with_cache(id: IdentityId, params: &CheckParams, cache: &TableCache) -> CheckReport {
    let start = Instant::now();
    let (cap_a, cap_b) = params.caps(id);
    let mut ctx = Ctx {
        cache,
        only: params.only.as_ref(),
        cap_a: cap_a.unwrap_or(0),
        cap_b: cap_b.unwrap_or(0),
        instances: 0,
        failure: None,
    };
    let outcome = params.validate(id).and_then(|_| dispatch(id, &mut ctx));
    let (status, message) = match (&outcome, &ctx.failure) {
        (Err(e), _) => (Status::Error, Some(e.to_string())),
        (Ok(()), Some(_)) => (Status::Fail, None),
        (Ok(()), None) if ctx.instances == 0 => (
            Status::Error,
            Some("no instance satisfies the hypotheses in range".to_string()),
        ),
        (Ok(()), None) => (Status::Pass, None),
    };
    CheckReport {
        identity: id,
        params: ReportParams {
            max_n_a: cap_a,
            max_n_b: cap_b,
            instances: ctx.instances,
            only: params.only.clone(),
        },
        status,
        counterexample: ctx.failure,
        message,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Identities to run and their shared settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub ids: Vec<IdentityId>,
    pub max_n_a: Option<usize>,
    pub max_n_b: Option<usize>,
    pub threads: usize,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ids: IdentityId::ALL.to_vec(),
            max_n_a: None,
            max_n_b: None,
            threads: std::thread::available_parallelism().map_or(1, |p| p.get()),
            limits: Limits::default(),
        }
    }
}

impl SuiteConfig {
    pub fn params(&self) -> CheckParams {
        CheckParams {
            max_n_a: self.max_n_a,
            max_n_b: self.max_n_b,
            threads: self.threads,
            limits: self.limits,
            only: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let params = self.params();
        self.ids.iter().try_for_each(|&id| params.validate(id))
    }
}

/// One report per requested identity, in catalog order.
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckReport> {
    let mut ids = config.ids.clone();
    ids.sort();
    ids.dedup();
    let cache = TableCache::new(config.threads, config.limits);
    let params = config.params();
    ids.into_iter()
        .map(|id| check_with_cache(id, &params, &cache))
        .collect()
}

pub fn suite_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.status == Status::Pass)
}
