//! Report values for every subcommand, with text and JSON renderings.

use std::fmt::Write as _;

use circle_bundles::{CohomologyProfile, FgAbelianGroup, FiveManifoldType, FourManifold};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub(crate) fn small(n: &BigInt) -> i64 {
    // Reported integers are bounded by the i64 coordinates read from the
    // command line.
    n.to_i64().expect("reported integer fits in i64")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
    pub display: String,
}

impl From<&FgAbelianGroup> for GroupReport {
    fn from(g: &FgAbelianGroup) -> Self {
        Self {
            free_rank: g.free_rank(),
            torsion: g.torsion().iter().map(small).collect(),
            display: g.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultReport {
    pub kind: String,
    pub s2xs3_count: usize,
    pub display: String,
}

impl From<FiveManifoldType> for ResultReport {
    fn from(t: FiveManifoldType) -> Self {
        Self {
            kind: t.kind.as_str().to_string(),
            s2xs3_count: t.s2xs3_count,
            display: t.to_string(),
        }
    }
}

/// Invariants of the base manifold shared by several reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseReport {
    pub manifold: String,
    pub rank: usize,
    pub signature: i64,
    pub even: bool,
    pub wu: Vec<u8>,
}

impl From<&FourManifold> for BaseReport {
    fn from(m: &FourManifold) -> Self {
        Self {
            manifold: m.label().to_string(),
            rank: m.rank(),
            signature: m.signature(),
            even: m.is_even(),
            wu: m.wu_class().coords().iter().map(|&b| u8::from(b)).collect(),
        }
    }
}

/// Output of `classify` and `cohomology`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleReport {
    pub manifold: String,
    pub rank: usize,
    pub signature: i64,
    pub even: bool,
    pub wu: Vec<u8>,
    pub alpha: Vec<i64>,
    pub divisibility: i64,
    pub total_space_spin: bool,
    /// Absent for non-primitive classes.
    pub result: Option<ResultReport>,
    /// `H⁰ … H⁵` of the total space.
    pub cohomology: Vec<GroupReport>,
    /// Order of `π₁`; 0 for infinite cyclic.
    pub pi1_order: i64,
    pub pi1: String,
    pub pi2_rank: usize,
}

impl BundleReport {
    pub fn new(
        base: BaseReport,
        alpha: &[BigInt],
        spin: bool,
        result: Option<FiveManifoldType>,
        profile: &CohomologyProfile,
    ) -> Self {
        let d = small(&profile.pi1_order);
        let pi1 = match d {
            0 => "Z".to_string(),
            1 => "0".to_string(),
            d => format!("Z/{d}"),
        };
        Self {
            manifold: base.manifold,
            rank: base.rank,
            signature: base.signature,
            even: base.even,
            wu: base.wu,
            alpha: alpha.iter().map(small).collect(),
            divisibility: d,
            total_space_spin: spin,
            result: result.map(Into::into),
            cohomology: profile.h.iter().map(Into::into).collect(),
            pi1_order: d,
            pi1,
            pi2_rank: profile.pi2().free_rank(),
        }
    }

    fn header(&self, out: &mut String) {
        let parity = if self.even { "even" } else { "odd" };
        let _ = writeln!(out, "{:<14}{}", "manifold", self.manifold);
        let _ = writeln!(out, "{:<14}{}", "rank", self.rank);
        let _ = writeln!(out, "{:<14}{}", "signature", self.signature);
        let _ = writeln!(out, "{:<14}{}", "parity", parity);
        let _ = writeln!(out, "{:<14}{}", "wu class", fmt_vec(&self.wu));
        let _ = writeln!(out, "{:<14}{}", "alpha", fmt_vec(&self.alpha));
        let _ = writeln!(out, "{:<14}{}", "divisibility", self.divisibility);
    }

    pub fn classify_text(&self) -> String {
        let mut out = String::new();
        self.header(&mut out);
        let spin = if self.total_space_spin { "yes" } else { "no" };
        let _ = writeln!(out, "{:<14}{}", "spin", spin);
        match &self.result {
            Some(r) => {
                let _ = writeln!(out, "{:<14}{}", "total space", r.display);
            }
            None => {
                let _ = writeln!(
                    out,
                    "{:<14}not classified: alpha is not primitive (divisibility {})",
                    "total space", self.divisibility
                );
            }
        }
        out
    }

    pub fn cohomology_text(&self) -> String {
        let mut out = String::new();
        self.header(&mut out);
        for (k, g) in self.cohomology.iter().enumerate() {
            let _ = writeln!(out, "{:<14}{}", format!("H^{k}"), g.display);
        }
        let _ = writeln!(out, "{:<14}{}", "pi_1", self.pi1);
        let pi2 = match self.pi2_rank {
            0 => "0".to_string(),
            1 => "Z".to_string(),
            r => format!("Z^{r}"),
        };
        let _ = writeln!(out, "{:<14}{}", "pi_2", pi2);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeCount {
    pub kind: String,
    pub s2xs3_count: usize,
    pub display: String,
    pub count: u64,
}

/// Output of `survey`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub manifold: String,
    pub rank: usize,
    pub even: bool,
    pub wu: Vec<u8>,
    pub bound: u32,
    pub primitive_classes: u64,
    pub outcomes: Vec<OutcomeCount>,
}

impl SurveyReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<14}{}", "manifold", self.manifold);
        let _ = writeln!(out, "{:<14}{}", "rank", self.rank);
        let _ = writeln!(out, "{:<14}{}", "wu class", fmt_vec(&self.wu));
        let _ = writeln!(out, "{:<14}{}", "bound", self.bound);
        let _ = writeln!(out, "{:<14}{}", "primitive", self.primitive_classes);
        for o in &self.outcomes {
            let _ = writeln!(out, "  {:<24}{:>8}", o.display, o.count);
        }
        out
    }
}

/// Output of `spin-class`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinClassReport {
    pub manifold: String,
    pub rank: usize,
    pub wu: Vec<u8>,
    pub alpha: Vec<i64>,
    pub result: ResultReport,
}

impl SpinClassReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<14}{}", "manifold", self.manifold);
        let _ = writeln!(out, "{:<14}{}", "rank", self.rank);
        let _ = writeln!(out, "{:<14}{}", "wu class", fmt_vec(&self.wu));
        let _ = writeln!(out, "{:<14}{}", "alpha", fmt_vec(&self.alpha));
        let _ = writeln!(out, "{:<14}{}", "total space", self.result.display);
        out
    }
}

/// Output of `s2-bundle`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct S2BundleReport {
    pub euler_number: i64,
    pub display: String,
}

impl S2BundleReport {
    pub fn text(&self) -> String {
        format!("{}\n", self.display)
    }
}

pub(crate) fn fmt_vec<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}
