//! Detection of C4s, even holes, thetas, prisms, pyramids and wheels, hubs,
//! and membership in the class of (C4, theta, prism, even wheel)-free graphs.

pub mod certificate;
mod detect;
pub mod holes;
mod lexmin;
mod recognize;

use serde::Serialize;

pub use certificate::{Certificate, Kind, Target, WheelFlags};
pub use holes::{all_holes, canonical_cycle, for_each_hole};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::search::{Budget, Outcome};
use lexmin::LexResult;

/// Finds a structure of `target`, preferring the lexicographically smallest
/// sorted vertex set. `Absent` means the search space was exhausted.
pub fn find_structure(g: &Graph, target: impl Into<Target>, budget: &mut Budget) -> Outcome<Certificate> {
    let target = target.into();
    let Some(holes) = all_holes(g, budget) else {
        return Outcome::Indeterminate;
    };
    find_with_holes(g, &holes, target, budget)
}

fn find_with_holes(g: &Graph, holes: &[Vec<usize>], target: Target, budget: &mut Budget) -> Outcome<Certificate> {
    let Some(fast) = detect::detect(g, holes, target, budget) else {
        return if budget.exhausted() { Outcome::Indeterminate } else { Outcome::Absent };
    };
    let cert = if g.n() <= 64 {
        // The lexicographic search gets whatever budget is left; if it runs
        // dry we still hold a valid witness from the hole-based test.
        let mut sub = Budget::new(budget.remaining());
        let lex = lexmin::lex_min(g, target, &mut sub);
        budget.charge(sub.used().min(sub.limit()));
        match lex {
            LexResult::Found(c) => c,
            LexResult::None => panic!("hole-based detector found {target:?} but subset search did not"),
            LexResult::OutOfBudget => fast,
        }
    } else {
        fast
    };
    checked(g, cert, target)
}

fn checked(g: &Graph, cert: Certificate, target: Target) -> Outcome<Certificate> {
    if let Err(e) = cert.validate(g) {
        panic!("internal error: detector produced an invalid certificate: {e}");
    }
    assert!(cert.matches(target), "certificate does not match {target:?}");
    Outcome::Present(cert)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HubReport {
    pub hubs: VertexSet,
    /// One proper wheel per hub, in hub order.
    pub witnesses: Vec<Certificate>,
    /// `false` when the budget ran out; `hubs` then lists confirmed hubs only.
    pub complete: bool,
}

/// Vertices that are the centre of some proper wheel. The witness for each
/// hub comes from the first hole (in enumeration order) that makes it one.
pub fn hubs(g: &Graph, budget: &mut Budget) -> HubReport {
    let mut witness: Vec<Option<Certificate>> = vec![None; g.n()];
    let complete = for_each_hole(g, budget, |h| {
        for c in detect::wheels_on(g, h) {
            let Certificate::Wheel { center, flags, .. } = &c else { unreachable!() };
            let (center, proper) = (*center, flags.is_proper);
            if proper && witness[center].is_none() {
                witness[center] = Some(c);
            }
        }
        true
    });
    let hubs: VertexSet = (0..g.n()).filter(|&v| witness[v].is_some()).collect();
    let witnesses = witness.into_iter().flatten().collect();
    HubReport { hubs, witnesses, complete }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Membership {
    /// In the class; `t` is the clique bound that was also checked.
    InC { t: Option<usize> },
    /// A forbidden induced structure.
    Violation { certificate: Certificate },
    /// A clique of size `t`.
    CliqueTooLarge { clique: Vec<usize> },
    Indeterminate,
}

impl Membership {
    pub fn label(&self) -> String {
        match self {
            Membership::InC { t: None } => "IN_C".into(),
            Membership::InC { t: Some(t) } => format!("IN_C_{t}"),
            Membership::Violation { .. } => "VIOLATION".into(),
            Membership::CliqueTooLarge { .. } => "CLIQUE_TOO_LARGE".into(),
            Membership::Indeterminate => "INDETERMINATE".into(),
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Membership::InC { .. })
    }
}

/// Order in which forbidden structures are checked and reported.
pub const CLASS_TARGETS: [Target; 4] =
    [Target::Kind(Kind::C4), Target::Kind(Kind::Theta), Target::Kind(Kind::Prism), Target::EvenWheel];

/// Membership in the class (and, with `t`, in its restriction to graphs
/// with no clique of size `t`). The first violated kind in
/// [`CLASS_TARGETS`] order is reported.
pub fn class_membership(g: &Graph, t: Option<usize>, budget: &mut Budget) -> Membership {
    let Some(holes) = all_holes(g, budget) else {
        return Membership::Indeterminate;
    };
    for target in CLASS_TARGETS {
        match find_with_holes(g, &holes, target, budget) {
            Outcome::Present(certificate) => return Membership::Violation { certificate },
            Outcome::Indeterminate => return Membership::Indeterminate,
            Outcome::Absent => {}
        }
    }
    if let Some(t) = t {
        if t == 0 || (t == 1 && g.n() > 0) {
            return Membership::CliqueTooLarge { clique: (0..g.n().min(1)).collect() };
        }
        let r = g.clique_number(budget.remaining());
        if !r.exact {
            return Membership::Indeterminate;
        }
        if r.size >= t {
            let clique = g.find_clique_of_size(t).expect("clique of size t exists");
            return Membership::CliqueTooLarge { clique };
        }
    }
    Membership::InC { t }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sector {
    /// The sector path, from one spoke to the next along the hole.
    pub path: Vec<usize>,
    pub long: bool,
}

/// Sectors of a wheel in cyclic order, starting at the first spoke of the
/// hole as listed.
pub fn sectors(g: &Graph, wheel: &Certificate) -> Result<Vec<Sector>> {
    let Certificate::Wheel { hole, center, .. } = wheel else {
        return Err(Error::Input(format!("expected a WHEEL certificate, got {}", wheel.kind().name())));
    };
    wheel.validate(g)?;
    let k = hole.len();
    let spokes: Vec<usize> = (0..k).filter(|&i| g.has_edge(hole[i], *center)).collect();
    let mut out = Vec::with_capacity(spokes.len());
    for (s, &i) in spokes.iter().enumerate() {
        let j = spokes[(s + 1) % spokes.len()];
        let mut path = vec![hole[i]];
        let mut p = i;
        while p != j {
            p = (p + 1) % k;
            path.push(hole[p]);
        }
        let long = path.len() > 2;
        out.push(Sector { path, long });
    }
    Ok(out)
}
