//! Finite topological spaces and the selection-set generators that turn
//! them into playable game instances (Rothberger, point-open, point-picking,
//! Gruenhage's W game, and friends).

use std::collections::{BTreeSet, HashMap};

use crate::error::{Budget, Error, Result};
use crate::model::{Atom, AtomSet, Family, GameInstance, PayoffKind, PayoffPredicate, Universe};
use crate::translate::DualityContext;

pub const MAX_POINTS: usize = 16;

/// A finite topological space with a chosen basis of nonempty sets.
/// Opens and basis members are bitmasks over the point list.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteSpace {
    points: Vec<String>,
    point_index: HashMap<String, u32>,
    subbase: Vec<u64>,
    opens: Vec<u64>,
    basis: Vec<u64>,
}

/// How to pick the basis when building a space.
#[derive(Clone, Debug)]
pub enum BasisSpec {
    /// All nonempty open sets.
    All,
    Explicit(Vec<Vec<String>>),
}

impl FiniteSpace {
    pub fn from_subbase(
        points: Vec<String>,
        subbase: Vec<Vec<String>>,
        basis: BasisSpec,
    ) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidSpace("space needs at least one point".into()));
        }
        if points.len() > MAX_POINTS {
            return Err(Error::InvalidSpace(format!(
                "space has {} points, max is {MAX_POINTS}",
                points.len()
            )));
        }
        let mut point_index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if point_index.insert(p.clone(), i as u32).is_some() {
                return Err(Error::InvalidSpace(format!("duplicate point `{p}`")));
            }
        }
        let mask_of = |ids: &[String]| -> Result<u64> {
            let mut m = 0u64;
            for id in ids {
                let i = point_index
                    .get(id)
                    .ok_or_else(|| Error::InvalidSpace(format!("subbase point `{id}` unknown")))?;
                m |= 1u64 << i;
            }
            Ok(m)
        };
        let sub_masks: Vec<u64> = subbase
            .iter()
            .map(|s| mask_of(s))
            .collect::<Result<_>>()?;
        let opens = close_topology(points.len(), &sub_masks);
        let basis_masks = match basis {
            BasisSpec::All => opens.iter().copied().filter(|m| *m != 0).collect(),
            BasisSpec::Explicit(bs) => {
                let mut masks: Vec<u64> = bs.iter().map(|s| mask_of(s)).collect::<Result<_>>()?;
                masks.sort();
                masks.dedup();
                masks
            }
        };
        let space = FiniteSpace {
            points,
            point_index,
            subbase: sub_masks,
            opens,
            basis: basis_masks,
        };
        space.validate_basis()?;
        Ok(space)
    }

    fn validate_basis(&self) -> Result<()> {
        for b in &self.basis {
            if *b == 0 {
                return Err(Error::InvalidSpace("basis member is empty".into()));
            }
            if !self.opens.contains(b) {
                return Err(Error::InvalidSpace(format!(
                    "basis member {} is not open",
                    self.open_atom_id(*b)
                )));
            }
        }
        for o in &self.opens {
            let union: u64 = self
                .basis
                .iter()
                .filter(|b| *b & !o == 0)
                .fold(0, |acc, b| acc | b);
            if union != *o {
                return Err(Error::InvalidSpace(format!(
                    "open {} is not a union of basis members",
                    self.open_atom_id(*o)
                )));
            }
        }
        Ok(())
    }

    /// Discrete space on `n` points labeled "0".."n-1" with the singleton basis.
    pub fn discrete(n: usize) -> FiniteSpace {
        let points: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let subbase: Vec<Vec<String>> = points.iter().map(|p| vec![p.clone()]).collect();
        FiniteSpace::from_subbase(points, subbase.clone(), BasisSpec::Explicit(subbase)).unwrap()
    }

    /// Sierpiński space: points 0, 1 with {1} open; basis = all nonempty opens.
    pub fn sierpinski() -> FiniteSpace {
        FiniteSpace::from_subbase(
            vec!["0".into(), "1".into()],
            vec![vec!["1".into()]],
            BasisSpec::All,
        )
        .unwrap()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn subbase(&self) -> &[u64] {
        &self.subbase
    }

    pub fn full_mask(&self) -> u64 {
        if self.points.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.points.len()) - 1
        }
    }

    pub fn point_index(&self, id: &str) -> Option<u32> {
        self.point_index.get(id).copied()
    }

    pub fn ids_from_mask(&self, mask: u64) -> Vec<String> {
        (0..self.points.len() as u32)
            .filter(|i| mask & (1u64 << i) != 0)
            .map(|i| self.points[i as usize].clone())
            .collect()
    }

    /// Canonical atom id for an open set: point ids in declaration order,
    /// wrapped in braces, e.g. "{0,1}".
    pub fn open_atom_id(&self, mask: u64) -> String {
        format!("{{{}}}", self.ids_from_mask(mask).join(","))
    }

    /// Parse a canonical open-set atom id back into a point mask. The mask
    /// must be an open set of this space.
    pub fn decode_open_atom(&self, id: &str) -> Result<u64> {
        let inner = id
            .strip_prefix('{')
            .and_then(|s| s.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("open-set atom `{id}` is not brace-wrapped")))?;
        let mut mask = 0u64;
        if !inner.is_empty() {
            for part in inner.split(',') {
                let i = self
                    .point_index(part)
                    .ok_or_else(|| Error::Parse(format!("unknown point `{part}` in atom `{id}`")))?;
                mask |= 1u64 << i;
            }
        }
        if !self.opens.contains(&mask) {
            return Err(Error::Parse(format!("atom `{id}` is not an open set")));
        }
        Ok(mask)
    }

    /// Minimal open neighborhood of each point, deduplicated. In a finite
    /// space this is the unique smallest basis.
    pub fn minimal_basis(&self) -> Vec<Vec<String>> {
        let mut masks: Vec<u64> = (0..self.points.len() as u32)
            .map(|x| {
                self.opens
                    .iter()
                    .filter(|o| *o & (1u64 << x) != 0)
                    .fold(self.full_mask(), |acc, o| acc & o)
            })
            .collect();
        masks.sort();
        masks.dedup();
        masks.into_iter().map(|m| self.ids_from_mask(m)).collect()
    }

    /// Same topology, different chosen basis.
    pub fn with_basis(&self, basis: BasisSpec) -> Result<FiniteSpace> {
        FiniteSpace::from_subbase(
            self.points.clone(),
            self.subbase.iter().map(|m| self.ids_from_mask(*m)).collect(),
            basis,
        )
    }

    /// Universe whose atoms are the points of the space.
    pub fn point_universe(&self) -> Universe {
        Universe::new(self.points.iter().map(|p| Atom {
            id: p.clone(),
            meaning: Some(format!("point {p}")),
        }))
        .expect("point list is duplicate-free and small")
    }

    /// Universe whose atoms encode the basis members.
    pub fn basis_universe(&self) -> Universe {
        Universe::new(self.basis.iter().map(|b| Atom {
            id: self.open_atom_id(*b),
            meaning: Some(format!("open set {}", self.open_atom_id(*b))),
        }))
        .expect("basis is duplicate-free and small")
    }
}

/// Close a collection of point masks under finite intersection and
/// arbitrary union; always contains the empty set and the whole space.
fn close_topology(n_points: usize, sets: &[u64]) -> Vec<u64> {
    let full = if n_points == 64 {
        u64::MAX
    } else {
        (1u64 << n_points) - 1
    };
    let mut opens: BTreeSet<u64> = sets.iter().copied().collect();
    opens.insert(0);
    opens.insert(full);
    loop {
        let snapshot: Vec<u64> = opens.iter().copied().collect();
        let before = opens.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                opens.insert(a & b);
                opens.insert(a | b);
            }
        }
        if opens.len() == before {
            break;
        }
    }
    opens.into_iter().collect()
}

/// Every topology on `n` labeled points ("0".."n-1"), with basis = all
/// nonempty opens. Deduplicated; order is deterministic.
pub fn enumerate_spaces(n: usize) -> Vec<FiniteSpace> {
    assert!(n >= 1 && n <= 4, "exhaustive sweep only supported up to 4 points");
    let n_subsets = 1usize << n;
    let points: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    for choice in 0u64..(1u64 << n_subsets) {
        let sets: Vec<u64> = (0..n_subsets as u64)
            .filter(|s| choice & (1u64 << s) != 0)
            .collect();
        seen.insert(close_topology(n, &sets));
    }
    seen.into_iter()
        .map(|opens| {
            let subbase: Vec<Vec<String>> = opens
                .iter()
                .filter(|m| **m != 0)
                .map(|m| {
                    (0..n as u32)
                        .filter(|i| m & (1u64 << i) != 0)
                        .map(|i| points[i as usize].clone())
                        .collect()
                })
                .collect();
            FiniteSpace::from_subbase(points.clone(), subbase, BasisSpec::All)
                .expect("closure output is a valid topology")
        })
        .collect()
}

/// The selection sets generated from a space.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SelectionKind {
    /// Basis members, as point sets.
    TX,
    /// Basis members containing a point, as point sets.
    TXx,
    /// Basis members containing a finite point set, as point sets.
    TXF,
    /// Basic open covers, as sets of basis atoms.
    OX,
    /// Local point-bases, as sets of basis atoms.
    PX,
    /// Basic ω-covers, as sets of basis atoms.
    OmegaX,
    /// Local finite-bases, as sets of basis atoms.
    FX,
    /// Dense point sets.
    DX,
    /// Point sets meeting every basic neighborhood of a point.
    OmegaXx,
    /// Point sets almost-inside every neighborhood of a point; on a finite
    /// space this is every nonempty set, and the generator flags it.
    GammaXx,
}

#[derive(Clone, Debug, Default)]
pub struct SelectionParams {
    pub point: Option<String>,
    pub finite_set: Option<Vec<String>>,
    /// Size cap on the finite sets quantified over (ω-covers, local
    /// finite-bases). Defaults to |X|, the faithful reading.
    pub k: Option<usize>,
    /// Emit only ⊆-minimal members (covers / ω-covers only).
    pub minimal: bool,
}

#[derive(Clone, Debug)]
pub struct GeneratedFamily {
    pub family: Family,
    pub degenerate: bool,
}

pub fn gen_selection_set(
    space: &FiniteSpace,
    kind: SelectionKind,
    params: &SelectionParams,
    budget: &mut Budget,
) -> Result<GeneratedFamily> {
    let n = space.points().len();
    let k = params.k.unwrap_or(n).min(n);
    let need_point = |p: &Option<String>| -> Result<u32> {
        let id = p
            .as_ref()
            .ok_or_else(|| Error::InvalidSpace("this selection set needs a point parameter".into()))?;
        space
            .point_index(id)
            .ok_or_else(|| Error::AtomOutsideUniverse(id.clone()))
    };
    let mut degenerate = false;
    let (universe, members): (Universe, Vec<AtomSet>) = match kind {
        SelectionKind::TX => (
            space.point_universe(),
            space.basis().iter().map(|b| AtomSet::from_bits(*b)).collect(),
        ),
        SelectionKind::TXx => {
            let x = need_point(&params.point)?;
            (
                space.point_universe(),
                space
                    .basis()
                    .iter()
                    .filter(|b| *b & (1u64 << x) != 0)
                    .map(|b| AtomSet::from_bits(*b))
                    .collect(),
            )
        }
        SelectionKind::TXF => {
            let ids = params
                .finite_set
                .as_ref()
                .ok_or_else(|| Error::InvalidSpace("T_{X,F} needs a finite-set parameter".into()))?;
            if ids.is_empty() {
                return Err(Error::InvalidSpace(
                    "empty finite-set parameter is excluded by default".into(),
                ));
            }
            let mut f = 0u64;
            for id in ids {
                f |= 1u64
                    << space
                        .point_index(id)
                        .ok_or_else(|| Error::AtomOutsideUniverse(id.clone()))?;
            }
            (
                space.point_universe(),
                space
                    .basis()
                    .iter()
                    .filter(|b| f & !*b == 0)
                    .map(|b| AtomSet::from_bits(*b))
                    .collect(),
            )
        }
        SelectionKind::OX | SelectionKind::OmegaX => {
            let nb = space.basis().len();
            budget.tick_by(1u64 << nb)?;
            let qualifies = |mask: u64| -> bool {
                let opens: Vec<u64> = (0..nb as u32)
                    .filter(|i| mask & (1u64 << i) != 0)
                    .map(|i| space.basis()[i as usize])
                    .collect();
                match kind {
                    SelectionKind::OX => opens.iter().fold(0, |a, o| a | o) == space.full_mask(),
                    _ => {
                        'outer: for f in 1..(1u64 << n) {
                            if (f.count_ones() as usize) > k {
                                continue;
                            }
                            for o in &opens {
                                if f & !o == 0 {
                                    continue 'outer;
                                }
                            }
                            return false;
                        }
                        true
                    }
                }
            };
            let mut members: Vec<AtomSet> = (1u64..(1u64 << nb))
                .filter(|m| qualifies(*m))
                .map(AtomSet::from_bits)
                .collect();
            if params.minimal {
                let all = members.clone();
                members.retain(|m| !all.iter().any(|o| *o != *m && o.is_subset_of(*m)));
            }
            (space.basis_universe(), members)
        }
        SelectionKind::PX => {
            let mut members = Vec::new();
            for x in 0..n as u32 {
                let m = AtomSet::from_indices(
                    (0..space.basis().len() as u32)
                        .filter(|i| space.basis()[*i as usize] & (1u64 << x) != 0),
                );
                if !m.is_empty() && !members.contains(&m) {
                    members.push(m);
                }
            }
            (space.basis_universe(), members)
        }
        SelectionKind::FX => {
            budget.tick_by(1u64 << n)?;
            let mut members = Vec::new();
            for f in 1u64..(1u64 << n) {
                if (f.count_ones() as usize) > k {
                    continue;
                }
                let m = AtomSet::from_indices(
                    (0..space.basis().len() as u32)
                        .filter(|i| f & !space.basis()[*i as usize] == 0),
                );
                // A finite set contained in no basis member cannot occur in
                // any ω-cover either; skip it rather than emit an empty member.
                if !m.is_empty() && !members.contains(&m) {
                    members.push(m);
                }
            }
            (space.basis_universe(), members)
        }
        SelectionKind::DX => {
            budget.tick_by(1u64 << n)?;
            (
                space.point_universe(),
                (1u64..(1u64 << n))
                    .filter(|y| space.basis().iter().all(|b| b & y != 0))
                    .map(AtomSet::from_bits)
                    .collect(),
            )
        }
        SelectionKind::OmegaXx => {
            let x = need_point(&params.point)?;
            budget.tick_by(1u64 << n)?;
            (
                space.point_universe(),
                (1u64..(1u64 << n))
                    .filter(|y| {
                        space
                            .basis()
                            .iter()
                            .filter(|b| *b & (1u64 << x) != 0)
                            .all(|b| b & y != 0)
                    })
                    .map(AtomSet::from_bits)
                    .collect(),
            )
        }
        SelectionKind::GammaXx => {
            need_point(&params.point)?;
            budget.tick_by(1u64 << n)?;
            degenerate = true;
            (
                space.point_universe(),
                (1u64..(1u64 << n)).map(AtomSet::from_bits).collect(),
            )
        }
    };
    Ok(GeneratedFamily {
        family: Family::new(universe, members)?,
        degenerate,
    })
}

/// Extensional payoff listing exactly the members of a generated family.
pub fn extensional_payoff(f: &Family) -> PayoffPredicate {
    PayoffPredicate::extensional(f.members.clone())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GameName {
    Rothberger,
    PointOpen,
    OmegaRothberger,
    OmegaFiniteOpen,
    SelectiveSeparability,
    PointPicking,
    FanTightness,
    ClosureGame,
    GruenhageW,
    GruenhageWCluster,
}

impl GameName {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "rothberger" => GameName::Rothberger,
            "point_open" => GameName::PointOpen,
            "omega_rothberger" => GameName::OmegaRothberger,
            "omega_finite_open" => GameName::OmegaFiniteOpen,
            "selective_separability" => GameName::SelectiveSeparability,
            "point_picking" => GameName::PointPicking,
            "fan_tightness" => GameName::FanTightness,
            "closure_game" => GameName::ClosureGame,
            "gruenhage_W" | "gruenhage_w" => GameName::GruenhageW,
            "gruenhage_W_cluster" | "gruenhage_w_cluster" => GameName::GruenhageWCluster,
            other => return Err(Error::Parse(format!("unknown game name `{other}`"))),
        })
    }

    pub fn needs_point(self) -> bool {
        matches!(
            self,
            GameName::FanTightness
                | GameName::ClosureGame
                | GameName::GruenhageW
                | GameName::GruenhageWCluster
        )
    }
}

pub enum NamedGameOutput {
    Single(GameInstance),
    Dual(DualityContext),
}

/// Build the named game on a space. Games defined as duals come back as a
/// full duality context with the reflection already verified.
pub fn named_game(
    space: &FiniteSpace,
    name: GameName,
    point: Option<&str>,
    horizon: usize,
    budget: &mut Budget,
) -> Result<NamedGameOutput> {
    let params = SelectionParams {
        point: point.map(|p| p.to_string()),
        ..Default::default()
    };
    let gen = |kind: SelectionKind, budget: &mut Budget| -> Result<Family> {
        Ok(gen_selection_set(space, kind, &params, budget)?.family)
    };
    let point_owned = point.map(|p| p.to_string());
    let need_point = || -> Result<String> {
        point_owned
            .clone()
            .ok_or_else(|| Error::InvalidSpace(format!("{name:?} needs a point parameter")))
    };
    let single = |family: Family, kind: PayoffKind, negated: bool| -> Result<GameInstance> {
        GameInstance::new(
            family,
            PayoffPredicate {
                kind,
                negated,
            },
            horizon,
        )
    };
    match name {
        GameName::Rothberger => Ok(NamedGameOutput::Single(single(
            gen(SelectionKind::OX, budget)?,
            PayoffKind::Cover {
                space: space.clone(),
            },
            false,
        )?)),
        GameName::PointOpen => {
            let primal = match named_game(space, GameName::Rothberger, None, horizon, budget)? {
                NamedGameOutput::Single(g) => g,
                _ => unreachable!(),
            };
            let r = gen(SelectionKind::PX, budget)?;
            Ok(NamedGameOutput::Dual(DualityContext::new(
                primal, r, budget,
            )?))
        }
        GameName::OmegaRothberger => Ok(NamedGameOutput::Single(single(
            gen(SelectionKind::OmegaX, budget)?,
            PayoffKind::OmegaCover {
                space: space.clone(),
                k: space.points().len(),
            },
            false,
        )?)),
        GameName::OmegaFiniteOpen => {
            let primal = match named_game(space, GameName::OmegaRothberger, None, horizon, budget)? {
                NamedGameOutput::Single(g) => g,
                _ => unreachable!(),
            };
            let r = gen(SelectionKind::FX, budget)?;
            Ok(NamedGameOutput::Dual(DualityContext::new(
                primal, r, budget,
            )?))
        }
        GameName::SelectiveSeparability => Ok(NamedGameOutput::Single(single(
            gen(SelectionKind::DX, budget)?,
            PayoffKind::Dense {
                space: space.clone(),
            },
            false,
        )?)),
        GameName::PointPicking => {
            let primal =
                match named_game(space, GameName::SelectiveSeparability, None, horizon, budget)? {
                    NamedGameOutput::Single(g) => g,
                    _ => unreachable!(),
                };
            let r = gen(SelectionKind::TX, budget)?;
            Ok(NamedGameOutput::Dual(DualityContext::new(
                primal, r, budget,
            )?))
        }
        GameName::FanTightness => Ok(NamedGameOutput::Single(single(
            gen(SelectionKind::DX, budget)?,
            PayoffKind::FanAtPoint {
                space: space.clone(),
                point: need_point()?,
            },
            false,
        )?)),
        GameName::ClosureGame => {
            let primal = match named_game(space, GameName::FanTightness, point, horizon, budget)? {
                NamedGameOutput::Single(g) => g,
                _ => unreachable!(),
            };
            let r = gen(SelectionKind::TX, budget)?;
            Ok(NamedGameOutput::Dual(DualityContext::new(
                primal, r, budget,
            )?))
        }
        GameName::GruenhageW => {
            let primal = single(
                gen(SelectionKind::OmegaXx, budget)?,
                PayoffKind::ConvergingFanAtPoint {
                    space: space.clone(),
                    point: need_point()?,
                },
                false,
            )?;
            let r = gen(SelectionKind::TXx, budget)?;
            Ok(NamedGameOutput::Dual(DualityContext::new(
                primal, r, budget,
            )?))
        }
        GameName::GruenhageWCluster => {
            let primal = single(
                gen(SelectionKind::OmegaXx, budget)?,
                PayoffKind::FanAtPoint {
                    space: space.clone(),
                    point: need_point()?,
                },
                false,
            )?;
            let r = gen(SelectionKind::TXx, budget)?;
            Ok(NamedGameOutput::Dual(DualityContext::new(
                primal, r, budget,
            )?))
        }
    }
}

#[derive(Clone, Debug)]
pub struct BasisInvarianceReport {
    pub default_verdicts: [bool; 4],
    pub alt_verdicts: [bool; 4],
    pub identical: bool,
}

/// Solve all four relations for the named game built over the default basis
/// and over `alt_basis`; the verdicts must coincide.
pub fn basis_invariance_check(
    space: &FiniteSpace,
    alt_basis: &[Vec<String>],
    name: GameName,
    point: Option<&str>,
    horizon: usize,
    budget_limit: u64,
) -> Result<BasisInvarianceReport> {
    let alt_space = space.with_basis(BasisSpec::Explicit(alt_basis.to_vec()))?;
    let instance_of = |sp: &FiniteSpace| -> Result<GameInstance> {
        let mut budget = Budget::new(budget_limit);
        match named_game(sp, name, point, horizon, &mut budget)? {
            NamedGameOutput::Single(g) => Ok(g),
            NamedGameOutput::Dual(ctx) => Ok(ctx.dual),
        }
    };
    let verdicts = |g: &GameInstance| -> Result<[bool; 4]> {
        let reports = crate::solver::solve_all(g, budget_limit)?;
        Ok([
            reports[0].holds,
            reports[1].holds,
            reports[2].holds,
            reports[3].holds,
        ])
    };
    let default_verdicts = verdicts(&instance_of(space)?)?;
    let alt_verdicts = verdicts(&instance_of(&alt_space)?)?;
    Ok(BasisInvarianceReport {
        identical: default_verdicts == alt_verdicts,
        default_verdicts,
        alt_verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_from_subbase() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.opens(), &[0b00, 0b10, 0b11]);
        assert_eq!(s.basis(), &[0b10, 0b11]);
    }

    #[test]
    fn discrete_two_points() {
        let s = FiniteSpace::discrete(2);
        assert_eq!(s.opens().len(), 4);
        assert_eq!(s.basis(), &[0b01, 0b10]);
    }

    #[test]
    fn three_point_subbase_intersection() {
        let s = FiniteSpace::from_subbase(
            vec!["0".into(), "1".into(), "2".into()],
            vec![vec!["0".into(), "1".into()], vec!["1".into(), "2".into()]],
            BasisSpec::All,
        )
        .unwrap();
        // {0,1} ∩ {1,2} = {1} must be open.
        assert!(s.opens().contains(&0b010));
    }

    #[test]
    fn sierpinski_dense_sets() {
        let s = FiniteSpace::sierpinski();
        let gen = gen_selection_set(
            &s,
            SelectionKind::DX,
            &SelectionParams::default(),
            &mut Budget::default(),
        )
        .unwrap();
        // Dense ⇔ contains point 1: {1} and {0,1}.
        let u = &gen.family.universe;
        let expected = vec![
            u.set_from_ids(["1"]).unwrap(),
            u.set_from_ids(["0", "1"]).unwrap(),
        ];
        let mut got = gen.family.members.clone();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn discrete_two_covers_and_point_bases() {
        let s = FiniteSpace::discrete(2);
        let ox = gen_selection_set(
            &s,
            SelectionKind::OX,
            &SelectionParams::default(),
            &mut Budget::default(),
        )
        .unwrap();
        assert_eq!(ox.family.members.len(), 1);
        assert_eq!(ox.family.members[0].len(), 2);
        let px = gen_selection_set(
            &s,
            SelectionKind::PX,
            &SelectionParams::default(),
            &mut Budget::default(),
        )
        .unwrap();
        assert_eq!(px.family.members.len(), 2);
        assert!(px.family.members.iter().all(|m| m.len() == 1));
    }

    #[test]
    fn gamma_is_degenerate() {
        let s = FiniteSpace::sierpinski();
        let gen = gen_selection_set(
            &s,
            SelectionKind::GammaXx,
            &SelectionParams {
                point: Some("1".into()),
                ..Default::default()
            },
            &mut Budget::default(),
        )
        .unwrap();
        assert!(gen.degenerate);
        // All nonempty subsets of a 2-point set.
        assert_eq!(gen.family.members.len(), 3);
    }

    #[test]
    fn topology_counts_up_to_three_points() {
        assert_eq!(enumerate_spaces(1).len(), 1);
        assert_eq!(enumerate_spaces(2).len(), 4);
        assert_eq!(enumerate_spaces(3).len(), 29);
    }

    #[test]
    fn minimal_basis_of_sierpinski() {
        let s = FiniteSpace::sierpinski();
        let mb = s.minimal_basis();
        // Minimal neighborhoods: {1} for point 1, {0,1} for point 0.
        assert_eq!(mb.len(), 2);
    }

    #[test]
    fn open_atom_roundtrip() {
        let s = FiniteSpace::discrete(3);
        for o in s.opens() {
            if *o == 0 {
                continue;
            }
            let id = s.open_atom_id(*o);
            assert_eq!(s.decode_open_atom(&id).unwrap(), *o);
        }
    }
}
