//! Core value types: universes of atoms, atom sets, families, payoff
//! predicates, and playable game instances.
//!
//! Everything here is an immutable value after validation; operations are
//! pure functions, so values may be shared freely between threads.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::spaces::FiniteSpace;

/// Universes are capped so atom sets fit in a single machine word.
pub const MAX_UNIVERSE: usize = 64;

/// An opaque move token. Equality is by id; `meaning` is annotation only.
#[derive(Clone, Debug)]
pub struct Atom {
    pub id: String,
    pub meaning: Option<String>,
}

/// An ordered, duplicate-free list of atoms. Atom order doubles as the
/// deterministic tie-breaking order everywhere a "least" element is needed.
#[derive(Clone, Debug)]
pub struct Universe {
    atoms: Vec<Atom>,
    index: HashMap<String, u32>,
}

impl Universe {
    pub fn new<I: IntoIterator<Item = Atom>>(atoms: I) -> Result<Self> {
        let atoms: Vec<Atom> = atoms.into_iter().collect();
        if atoms.len() > MAX_UNIVERSE {
            return Err(Error::InvalidInstance(format!(
                "universe has {} atoms, max is {MAX_UNIVERSE}",
                atoms.len()
            )));
        }
        let mut index = HashMap::new();
        for (i, a) in atoms.iter().enumerate() {
            if index.insert(a.id.clone(), i as u32).is_some() {
                return Err(Error::InvalidInstance(format!(
                    "duplicate atom id `{}` in universe",
                    a.id
                )));
            }
        }
        Ok(Universe { atoms, index })
    }

    pub fn from_ids<S: Into<String>, I: IntoIterator<Item = S>>(ids: I) -> Result<Self> {
        Universe::new(ids.into_iter().map(|id| Atom {
            id: id.into(),
            meaning: None,
        }))
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn id_of(&self, idx: u32) -> &str {
        &self.atoms[idx as usize].id
    }

    pub fn index_of(&self, id: &str) -> Option<u32> {
        self.index.get(id).copied()
    }

    pub fn require_index(&self, id: &str) -> Result<u32> {
        self.index_of(id)
            .ok_or_else(|| Error::AtomOutsideUniverse(id.to_string()))
    }

    pub fn set_from_ids<S: AsRef<str>, I: IntoIterator<Item = S>>(&self, ids: I) -> Result<AtomSet> {
        let mut s = AtomSet::EMPTY;
        for id in ids {
            s = s.with(self.require_index(id.as_ref())?);
        }
        Ok(s)
    }

    pub fn ids_of(&self, s: AtomSet) -> Vec<String> {
        s.indices().map(|i| self.id_of(i).to_string()).collect()
    }

    pub fn full_set(&self) -> AtomSet {
        AtomSet::full(self.len())
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.atoms.len() == other.atoms.len()
            && self
                .atoms
                .iter()
                .zip(other.atoms.iter())
                .all(|(a, b)| a.id == b.id)
    }
}
impl Eq for Universe {}

/// A subset of a universe, packed as a bitmask over atom indices.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct AtomSet(u64);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn full(n: usize) -> AtomSet {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == 64 {
            AtomSet(u64::MAX)
        } else {
            AtomSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = u32>>(idx: I) -> AtomSet {
        let mut s = AtomSet::EMPTY;
        for i in idx {
            s = s.with(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> AtomSet {
        AtomSet(bits)
    }

    pub fn with(self, i: u32) -> AtomSet {
        debug_assert!((i as usize) < MAX_UNIVERSE);
        AtomSet(self.0 | (1u64 << i))
    }

    pub fn contains(self, i: u32) -> bool {
        self.0 & (1u64 << i) != 0
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn intersect(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }

    pub fn difference(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min_index(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros())
        }
    }

    pub fn indices(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros();
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A finite list of nonempty atom sets over one universe. Member order is
/// part of the data for deterministic tie-breaking only; equality of
/// families ignores order.
#[derive(Clone, Debug)]
pub struct Family {
    pub universe: Universe,
    pub members: Vec<AtomSet>,
}

impl Family {
    pub fn new(universe: Universe, members: Vec<AtomSet>) -> Result<Self> {
        let fam = Family { universe, members };
        let violations = fam.validate();
        if violations.is_empty() {
            Ok(fam)
        } else {
            Err(Error::InvalidInstance(violations.join("; ")))
        }
    }

    pub fn validate(&self) -> Vec<String> {
        let mut violations = Vec::new();
        let full = self.universe.full_set();
        let mut seen = std::collections::HashSet::new();
        for (i, m) in self.members.iter().enumerate() {
            if m.is_empty() {
                violations.push(format!("empty family member at index {i}"));
            }
            if !m.is_subset_of(full) {
                violations.push(format!("atom outside universe in member at index {i}"));
            }
            if !seen.insert(*m) {
                violations.push(format!("duplicate member at index {i}"));
            }
        }
        violations
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of a member equal (as a set) to `s`.
    pub fn position_of(&self, s: AtomSet) -> Option<usize> {
        self.members.iter().position(|m| *m == s)
    }
}

impl PartialEq for Family {
    fn eq(&self, other: &Self) -> bool {
        if self.universe != other.universe {
            return false;
        }
        let mut a = self.members.clone();
        let mut b = other.members.clone();
        a.sort();
        b.sort();
        a == b
    }
}
impl Eq for Family {}

/// Total decidable predicate on atom sets, with a negation flag.
#[derive(Clone, Debug, PartialEq)]
pub struct PayoffPredicate {
    pub kind: PayoffKind,
    pub negated: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum PayoffKind {
    /// Membership in an explicit list of winning sets.
    Extensional { sets: Vec<AtomSet> },
    /// Atoms encode basic open sets; the selection wins iff their union is
    /// the whole point set.
    Cover { space: FiniteSpace },
    /// Every nonempty set of at most `k` points lies inside some selected
    /// open (`k = |X|` is the faithful finite reading of "every finite set").
    OmegaCover { space: FiniteSpace, k: usize },
    /// Atoms encode points; the selection wins iff it meets every basic open.
    Dense { space: FiniteSpace },
    /// Atoms encode points; the selection meets every basic open containing
    /// `point`.
    FanAtPoint { space: FiniteSpace, point: String },
    /// Degenerate on finite spaces: every selection is almost-inside every
    /// neighborhood, so the predicate is constantly true before negation.
    ConvergingFanAtPoint { space: FiniteSpace, point: String },
}

impl PayoffPredicate {
    pub fn extensional(sets: Vec<AtomSet>) -> Self {
        PayoffPredicate {
            kind: PayoffKind::Extensional { sets },
            negated: false,
        }
    }

    pub fn negate(&self) -> Self {
        PayoffPredicate {
            kind: self.kind.clone(),
            negated: !self.negated,
        }
    }

    /// Violations preventing the predicate from being total over `universe`.
    pub fn totality_violations(&self, universe: &Universe) -> Vec<String> {
        let mut v = Vec::new();
        match &self.kind {
            PayoffKind::Extensional { sets } => {
                let full = universe.full_set();
                for (i, s) in sets.iter().enumerate() {
                    if !s.is_subset_of(full) {
                        v.push(format!("payoff set {i} mentions atoms outside the universe"));
                    }
                }
            }
            PayoffKind::Cover { space } | PayoffKind::OmegaCover { space, .. } => {
                for a in universe.atoms() {
                    if space.decode_open_atom(&a.id).is_err() {
                        v.push(format!(
                            "atom `{}` does not decode to an open set of the space",
                            a.id
                        ));
                    }
                }
            }
            PayoffKind::Dense { space }
            | PayoffKind::FanAtPoint { space, .. }
            | PayoffKind::ConvergingFanAtPoint { space, .. } => {
                for a in universe.atoms() {
                    if space.point_index(&a.id).is_none() {
                        v.push(format!("atom `{}` is not a point of the space", a.id));
                    }
                }
                if let PayoffKind::FanAtPoint { space, point }
                | PayoffKind::ConvergingFanAtPoint { space, point } = &self.kind
                {
                    if space.point_index(point).is_none() {
                        v.push(format!("distinguished point `{point}` is not in the space"));
                    }
                }
            }
        }
        v
    }

    /// Evaluate on a selection set. Depends only on the set, never on the
    /// order or multiplicity of the picks that produced it.
    pub fn eval(&self, universe: &Universe, s: AtomSet) -> Result<bool> {
        if !s.is_subset_of(universe.full_set()) {
            return Err(Error::AtomOutsideUniverse(format!(
                "selection {:?} not over the declared universe",
                s
            )));
        }
        let raw = match &self.kind {
            PayoffKind::Extensional { sets } => sets.contains(&s),
            PayoffKind::Cover { space } => {
                let mut union = 0u64;
                for i in s.indices() {
                    union |= space.decode_open_atom(universe.id_of(i))?;
                }
                union == space.full_mask()
            }
            PayoffKind::OmegaCover { space, k } => {
                let opens: Vec<u64> = s
                    .indices()
                    .map(|i| space.decode_open_atom(universe.id_of(i)))
                    .collect::<Result<_>>()?;
                let n = space.points().len();
                let mut ok = true;
                'outer: for f in 1..(1u64 << n) {
                    if (f.count_ones() as usize) > *k {
                        continue;
                    }
                    for u in &opens {
                        if f & !u == 0 {
                            continue 'outer;
                        }
                    }
                    ok = false;
                    break;
                }
                ok
            }
            PayoffKind::Dense { space } => {
                let y = self.point_mask(space, universe, s)?;
                space.basis().iter().all(|u| u & y != 0)
            }
            PayoffKind::FanAtPoint { space, point } => {
                let y = self.point_mask(space, universe, s)?;
                let x = space
                    .point_index(point)
                    .ok_or_else(|| Error::AtomOutsideUniverse(point.clone()))?;
                space
                    .basis()
                    .iter()
                    .filter(|u| *u & (1u64 << x) != 0)
                    .all(|u| u & y != 0)
            }
            // Y \ U is finite for every finite Y, so the condition is vacuous.
            PayoffKind::ConvergingFanAtPoint { .. } => true,
        };
        Ok(raw != self.negated)
    }

    fn point_mask(&self, space: &FiniteSpace, universe: &Universe, s: AtomSet) -> Result<u64> {
        let mut y = 0u64;
        for i in s.indices() {
            let p = space
                .point_index(universe.id_of(i))
                .ok_or_else(|| Error::AtomOutsideUniverse(universe.id_of(i).to_string()))?;
            y |= 1u64 << p;
        }
        Ok(y)
    }
}

/// A playable finite selection game: player I's menu, the payoff, and the
/// number of rounds.
#[derive(Clone, Debug, PartialEq)]
pub struct GameInstance {
    pub family: Family,
    pub payoff: PayoffPredicate,
    pub horizon: usize,
}

impl GameInstance {
    pub fn new(family: Family, payoff: PayoffPredicate, horizon: usize) -> Result<Self> {
        let g = GameInstance {
            family,
            payoff,
            horizon,
        };
        let report = validate_instance(&g);
        if report.ok() {
            Ok(g)
        } else {
            Err(Error::InvalidInstance(report.violations.join("; ")))
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.family.universe
    }

    pub fn member(&self, idx: usize) -> AtomSet {
        self.family.members[idx]
    }
}

/// Report-style validation outcome.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_instance(g: &GameInstance) -> ValidationReport {
    let mut violations = g.family.validate();
    if g.family.is_empty() {
        violations.push("family has no members (player I has no legal move)".to_string());
    }
    if g.horizon == 0 {
        violations.push("horizon must be at least 1".to_string());
    }
    violations.extend(g.payoff.totality_violations(g.universe()));
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn fix_a() -> GameInstance {
        let u = Universe::from_ids(["1", "2"]).unwrap();
        let m1 = u.set_from_ids(["1"]).unwrap();
        let m12 = u.set_from_ids(["1", "2"]).unwrap();
        let fam = Family::new(u, vec![m1, m12]).unwrap();
        let payoff = PayoffPredicate::extensional(vec![m1]);
        GameInstance::new(fam, payoff, 1).unwrap()
    }

    #[test]
    fn fix_a_is_well_formed() {
        let g = fix_a();
        assert!(validate_instance(&g).ok());
    }

    #[test]
    fn empty_member_is_reported() {
        let u = Universe::from_ids(["1", "2"]).unwrap();
        let fam = Family {
            universe: u,
            members: vec![AtomSet::EMPTY],
        };
        let g = GameInstance {
            family: fam,
            payoff: PayoffPredicate::extensional(vec![]),
            horizon: 1,
        };
        let report = validate_instance(&g);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("empty family member")));
    }

    #[test]
    fn atom_outside_universe_is_reported() {
        let u = Universe::from_ids(["1", "2"]).unwrap();
        assert!(matches!(
            u.set_from_ids(["3"]),
            Err(Error::AtomOutsideUniverse(_))
        ));
        // A raw set with a stray bit is caught by validation.
        let fam = Family {
            universe: u,
            members: vec![AtomSet::from_indices([2])],
        };
        let g = GameInstance {
            family: fam,
            payoff: PayoffPredicate::extensional(vec![]),
            horizon: 1,
        };
        let report = validate_instance(&g);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("atom outside universe")));
    }

    #[test]
    fn extensional_membership_and_negation() {
        let g = fix_a();
        let s = g.universe().set_from_ids(["1"]).unwrap();
        assert!(g.payoff.eval(g.universe(), s).unwrap());
        assert!(!g.payoff.negate().eval(g.universe(), s).unwrap());
    }

    #[test]
    fn cover_payoff_on_discrete_two_points() {
        let space = FiniteSpace::discrete(2);
        let u = Universe::from_ids(["{0}", "{1}"]).unwrap();
        let p = PayoffPredicate {
            kind: PayoffKind::Cover {
                space: space.clone(),
            },
            negated: false,
        };
        assert!(p.totality_violations(&u).is_empty());
        let both = u.set_from_ids(["{0}", "{1}"]).unwrap();
        let one = u.set_from_ids(["{0}"]).unwrap();
        assert!(p.eval(&u, both).unwrap());
        assert!(!p.eval(&u, one).unwrap());
    }

    #[test]
    fn family_equality_ignores_order() {
        let u = Universe::from_ids(["1", "2"]).unwrap();
        let a = u.set_from_ids(["1"]).unwrap();
        let b = u.set_from_ids(["2"]).unwrap();
        let f1 = Family::new(u.clone(), vec![a, b]).unwrap();
        let f2 = Family::new(u, vec![b, a]).unwrap();
        assert_eq!(f1, f2);
    }
}
