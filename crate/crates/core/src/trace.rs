//! Records of how a cycle was obtained.

use std::fmt;

/// Published results whose cycles are obtained by certified search rather
/// than by an explicit construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cited {
    /// Abelian groups.
    Abelian,
    /// Groups whose commutator subgroup is a cyclic p-group.
    KeatingWitte,
    /// Groups of prime-power order.
    PrimePower,
    /// A normal p-subgroup containing every `s t^-1`, with cyclic quotient.
    PkSubgroup,
    /// Generalized dihedral groups over cyclic groups.
    Dihedral,
    /// Lifting through a cyclic normal subgroup of odd index.
    AlspachLifting,
    /// Voltage lifting of a Hamiltonian quotient cycle.
    VoltageCor,
    /// Generalized Petersen graphs other than `GP(n, 2)` with `n = 5 mod 6`.
    GeneralizedPetersen,
    /// The alternating group of degree 5.
    A5,
    /// Symmetric groups generated by transpositions.
    Transpositions,
}

impl Cited {
    pub const ALL: [Cited; 10] = [
        Cited::Abelian,
        Cited::KeatingWitte,
        Cited::PrimePower,
        Cited::PkSubgroup,
        Cited::Dihedral,
        Cited::AlspachLifting,
        Cited::VoltageCor,
        Cited::GeneralizedPetersen,
        Cited::A5,
        Cited::Transpositions,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Cited::Abelian => "abel",
            Cited::KeatingWitte => "keating-witte",
            Cited::PrimePower => "pk",
            Cited::PkSubgroup => "pk-subgroup",
            Cited::Dihedral => "dihedral",
            Cited::AlspachLifting => "alspach-lifting",
            Cited::VoltageCor => "voltage",
            Cited::GeneralizedPetersen => "gen-petersen",
            Cited::A5 => "a5",
            Cited::Transpositions => "transpositions",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// An explicit construction or lifting lemma.
    Construction,
    /// Search justified by a published existence result.
    Cited(Cited),
    /// Search with no construction behind it.
    Unexpected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub label: String,
    pub kind: StepKind,
}

/// Steps in the order they were taken; nested sub-problems sit one level
/// deeper than the step that opened them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace(pub Vec<TraceStep>);

impl Trace {
    pub fn new() -> Trace {
        Trace(Vec::new())
    }

    pub fn construction(label: impl Into<String>) -> Trace {
        Trace(vec![TraceStep { depth: 0, label: label.into(), kind: StepKind::Construction }])
    }

    pub fn cited(c: Cited, label: impl Into<String>) -> Trace {
        Trace(vec![TraceStep { depth: 0, label: label.into(), kind: StepKind::Cited(c) }])
    }

    pub fn unexpected(label: impl Into<String>) -> Trace {
        Trace(vec![TraceStep { depth: 0, label: label.into(), kind: StepKind::Unexpected }])
    }

    pub fn push(&mut self, label: impl Into<String>, kind: StepKind) {
        self.0.push(TraceStep { depth: 0, label: label.into(), kind });
    }

    /// Appends `sub` one level below the current top level.
    pub fn nest(&mut self, sub: Trace) {
        self.0.extend(sub.0.into_iter().map(|mut s| {
            s.depth += 1;
            s
        }));
    }

    /// Prepends a new top-level step, pushing the existing steps down.
    pub fn under(self, label: impl Into<String>, kind: StepKind) -> Trace {
        let mut t = Trace(vec![TraceStep { depth: 0, label: label.into(), kind }]);
        t.nest(self);
        t
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.0
    }

    pub fn cited_results(&self) -> Vec<Cited> {
        self.0
            .iter()
            .filter_map(|s| match s.kind {
                StepKind::Cited(c) => Some(c),
                _ => None,
            })
            .collect()
    }

    pub fn has_unexpected(&self) -> bool {
        self.0.iter().any(|s| s.kind == StepKind::Unexpected)
    }

    pub fn top_label(&self) -> &str {
        self.0.first().map(|s| s.label.as_str()).unwrap_or("")
    }
}

impl Cited {
    pub fn from_tag(tag: &str) -> Option<Cited> {
        Cited::ALL.into_iter().find(|c| c.tag() == tag)
    }
}

/// A trace written by [`Trace`]'s `Display` could not be read back.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed trace step `{0}`")]
pub struct TraceParseError(pub String);

impl std::str::FromStr for Trace {
    type Err = TraceParseError;

    /// Reads the `Display` form back. Spaces inside labels were written as
    /// underscores and stay that way.
    fn from_str(s: &str) -> Result<Trace, TraceParseError> {
        let mut steps = Vec::new();
        for tok in s.split_whitespace() {
            let depth = tok.len() - tok.trim_start_matches('>').len();
            let rest = &tok[depth..];
            let (label, kind) = if let Some(l) = rest.strip_suffix("!fallback") {
                (l, StepKind::Unexpected)
            } else if let Some((l, tag)) = rest.rsplit_once("!cited:") {
                let c = Cited::from_tag(tag).ok_or_else(|| TraceParseError(tok.to_string()))?;
                (l, StepKind::Cited(c))
            } else {
                (rest, StepKind::Construction)
            };
            if label.is_empty() {
                return Err(TraceParseError(tok.to_string()));
            }
            steps.push(TraceStep { depth, label: label.to_string(), kind });
        }
        Ok(Trace(steps))
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let mark = match s.kind {
                StepKind::Construction => String::new(),
                StepKind::Cited(c) => format!("!cited:{}", c.tag()),
                StepKind::Unexpected => "!fallback".to_string(),
            };
            write!(f, "{}{}{}", ">".repeat(s.depth), s.label.replace(' ', "_"), mark)?;
        }
        Ok(())
    }
}
