//! Laws engine: structural properties checked exhaustively over a corpus of
//! braces.
//!
//! Every brace is analysed once ([`Facts`]) and each law is a pure function
//! of that analysis. Results are folded in corpus order, so reports are
//! deterministic whatever the execution strategy.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::brace::{are_isomorphic_braces, brace_from_group_opposite_addition, BraceFile, SkewBrace};
use crate::constructions::{direct_product_many, enumerate_braces_with, ConstructionError, EnumerationOptions};
use crate::groups::{
    all_subgroups, is_nilpotent, is_normal_subgroup, is_subgroup, lower_central_series, prime_factors, quotient_group,
    subgroup_closure, sylow_subgroups_of_nilpotent, ElementSet, FiniteGroup, GroupError, SylowSubgroup,
};
use crate::par::Exec;
use crate::series::{
    left_series, nil_report_with_cutoff, right_series, socle_series_and_mpl, strong_series, SeriesReport, SocleReport,
    StronglyNilAggregate,
};
use crate::substructure::{
    fix, generated_subbrace, is_ideal, ker_lambda, lambda_orbit, quotient_brace, socle, star_span, sub_brace,
    SubstructureVerdict,
};
use crate::ybe::{
    brute_force_decomposable, orbits, restrict_solution, solution_from_brace, validate_solution_with, Solution,
    SolutionReport,
};

/// Above this order the ideal-based laws use a family of candidate
/// subgroups instead of the whole subgroup lattice.
pub const EXHAUSTIVE_SUBGROUP_ORDER: usize = 32;
const SUBGROUP_LIMIT: usize = 2048;
/// Failures kept per law; the count is always exact.
pub const MAX_FAILURES_PER_LAW: usize = 16;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub label: String,
    pub brace: SkewBrace,
}

/// Every brace of each order, labelled `brace_<order>_<seq>` with `seq`
/// starting at 1.
pub fn enumerated_corpus(
    orders: RangeInclusive<usize>,
    opts: &EnumerationOptions,
) -> Result<Vec<CorpusEntry>, ConstructionError> {
    let mut corpus = Vec::new();
    for n in orders {
        for (i, brace) in enumerate_braces_with(n, None, opts)?.into_iter().enumerate() {
            corpus.push(CorpusEntry {
                label: format!("brace_{n}_{}", i + 1),
                brace,
            });
        }
    }
    Ok(corpus)
}

#[derive(Clone, Debug, Default)]
pub struct LawOptions {
    pub exec: Exec,
    pub scan_questions: bool,
    /// Cutoff for the strongly-nil recurrence in question scans; defaults to
    /// the order squared.
    pub nil_cutoff: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub brace_label: String,
    pub brace: BraceFile,
    pub triple: (usize, usize, usize),
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub name: &'static str,
    pub statement: &'static str,
    /// Instances where the hypothesis held and the conclusion was tested.
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    /// Instances where the hypothesis did not apply.
    pub vacuous: u64,
    pub failures: Vec<LawFailure>,
}

/// A property that is reported but not asserted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub name: &'static str,
    pub statement: &'static str,
    pub holds: u64,
    pub fails: u64,
    /// Labels of the braces where it fails, at most [`MAX_FAILURES_PER_LAW`].
    pub failing_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuestionCandidate {
    pub question: &'static str,
    pub brace_label: String,
    pub brace: BraceFile,
    pub detail: String,
    pub caveat: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuestionScan {
    pub scanned: u64,
    /// Braces where the scan could not decide within the cutoff.
    pub undetermined: u64,
    pub candidates: Vec<QuestionCandidate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawsReport {
    pub corpus: String,
    pub brace_count: usize,
    pub laws: Vec<LawResult>,
    pub observations: Vec<Observation>,
    /// Present only when the scans were requested. Never affects
    /// `all_passed`.
    pub question_scan: Option<QuestionScan>,
    pub all_passed: bool,
}

impl LawsReport {
    pub fn law(&self, name: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.name == name)
    }
}

/// Names and statements of every law, in report order.
pub fn law_catalogue() -> Vec<(&'static str, &'static str)> {
    LAWS.iter().map(|l| (l.name, l.statement)).collect()
}

pub fn run_laws(corpus_description: &str, corpus: &[CorpusEntry], opts: &LawOptions) -> LawsReport {
    let per_brace: Vec<BraceOutcome> = opts.exec.map_slice(corpus, |entry| analyse(&entry.brace, opts));

    let mut laws: Vec<LawResult> = LAWS
        .iter()
        .map(|l| LawResult {
            name: l.name,
            statement: l.statement,
            checked: 0,
            passed: 0,
            failed: 0,
            vacuous: 0,
            failures: Vec::new(),
        })
        .collect();
    let mut observations: Vec<Observation> = OBSERVATIONS
        .iter()
        .map(|o| Observation {
            name: o.name,
            statement: o.statement,
            holds: 0,
            fails: 0,
            failing_labels: Vec::new(),
        })
        .collect();
    let mut scan = QuestionScan {
        scanned: 0,
        undetermined: 0,
        candidates: Vec::new(),
    };

    for (entry, outcome) in corpus.iter().zip(per_brace) {
        for (result, checks) in laws.iter_mut().zip(outcome.laws) {
            for check in checks {
                match check {
                    Check::Pass => {
                        result.checked += 1;
                        result.passed += 1;
                    }
                    Check::Vacuous => result.vacuous += 1,
                    Check::Fail { triple, detail } => {
                        result.checked += 1;
                        result.failed += 1;
                        if result.failures.len() < MAX_FAILURES_PER_LAW {
                            result.failures.push(LawFailure {
                                brace_label: entry.label.clone(),
                                brace: entry.brace.to_file(),
                                triple,
                                detail,
                            });
                        }
                    }
                }
            }
        }
        for (obs, holds) in observations.iter_mut().zip(outcome.observations) {
            match holds {
                Some(true) => obs.holds += 1,
                Some(false) => {
                    obs.fails += 1;
                    if obs.failing_labels.len() < MAX_FAILURES_PER_LAW {
                        obs.failing_labels.push(entry.label.clone());
                    }
                }
                None => {}
            }
        }
        if let Some(found) = outcome.questions {
            scan.scanned += 1;
            scan.undetermined += u64::from(found.undetermined);
            scan.candidates.extend(
                found
                    .candidates
                    .into_iter()
                    .map(|(question, detail)| QuestionCandidate {
                        question,
                        brace_label: entry.label.clone(),
                        brace: entry.brace.to_file(),
                        detail,
                        caveat: DEFINITION_CAVEAT,
                    }),
            );
        }
    }

    let all_passed = laws.iter().all(|l| l.failed == 0);
    LawsReport {
        corpus: corpus_description.to_string(),
        brace_count: corpus.len(),
        laws,
        observations,
        question_scan: opts.scan_questions.then_some(scan),
        all_passed,
    }
}

const DEFINITION_CAVEAT: &str = "candidate counterexample under the literal per-element definition; \
     the intended reading may require nilpotent type or a stronger nil notion, so this is not a refutation";

enum Check {
    Pass,
    Vacuous,
    Fail {
        triple: (usize, usize, usize),
        detail: String,
    },
}

fn check(ok: bool, triple: (usize, usize, usize), detail: impl FnOnce() -> String) -> Check {
    if ok {
        Check::Pass
    } else {
        Check::Fail {
            triple,
            detail: detail(),
        }
    }
}

fn fail(triple: (usize, usize, usize), detail: impl Into<String>) -> Check {
    Check::Fail {
        triple,
        detail: detail.into(),
    }
}

/// Smallest nonzero member, used as the witness element for set-valued
/// failures.
fn rep(s: &ElementSet) -> usize {
    s.iter().find(|&x| x != 0).unwrap_or(0)
}

/// Everything the laws need about one brace.
struct Facts {
    right: SeriesReport,
    left: SeriesReport,
    strong: SeriesReport,
    socle: SocleReport,
    soc: ElementSet,
    fix: ElementSet,
    ker: ElementSet,
    square: ElementSet,
    add_nilpotent: bool,
    circ_nilpotent: bool,
    /// Additive subgroups with their ideal analysis.
    subgroups: Vec<SubstructureVerdict>,
    /// `subgroups` is the whole lattice rather than a candidate family.
    exhaustive: bool,
    /// Sylow subgroups of `(A,+)` when it is nilpotent.
    sylow: Vec<SylowSubgroup>,
    solution: Solution,
    solution_report: SolutionReport,
}

impl Facts {
    fn new(a: &SkewBrace) -> Self {
        let n = a.order();
        let full = ElementSet::full(n);
        let add_nilpotent = is_nilpotent(a.additive_group());
        let solution = solution_from_brace(a);
        // The corpus sweep already runs one brace per task.
        let solution_report = validate_solution_with(&solution, Exec::Sequential);
        let mut facts = Facts {
            right: right_series(a),
            left: left_series(a),
            strong: strong_series(a),
            socle: socle_series_and_mpl(a),
            soc: socle(a),
            fix: fix(a),
            ker: ker_lambda(a),
            square: star_span(a, &full, &full),
            add_nilpotent,
            circ_nilpotent: is_nilpotent(a.multiplicative_group()),
            subgroups: Vec::new(),
            exhaustive: false,
            sylow: if add_nilpotent {
                sylow_subgroups_of_nilpotent(a.additive_group())
            } else {
                Vec::new()
            },
            solution,
            solution_report,
        };
        let lattice = (n <= EXHAUSTIVE_SUBGROUP_ORDER)
            .then(|| all_subgroups(a.additive_group(), SUBGROUP_LIMIT))
            .flatten();
        facts.exhaustive = lattice.is_some();
        let sets = lattice.unwrap_or_else(|| facts.candidates(a));
        facts.subgroups = sets.iter().map(|s| is_ideal(a, s)).collect();
        facts
    }

    /// Subgroups that are natural ideal or left-ideal candidates.
    fn candidates(&self, a: &SkewBrace) -> Vec<ElementSet> {
        let n = a.order();
        let mut sets: Vec<ElementSet> = [&self.right, &self.left, &self.strong, &self.socle.series]
            .iter()
            .flat_map(|s| s.terms.iter().cloned())
            .chain([
                ElementSet::zero(n),
                ElementSet::full(n),
                self.soc.clone(),
                self.fix.clone(),
                self.ker.clone(),
                self.square.clone(),
            ])
            .chain(self.sylow.iter().map(|s| s.subgroup.clone()))
            .filter(|s| is_subgroup(a.additive_group(), s))
            .collect();
        sets.sort_by(|x, y| (x.len(), x.members()).cmp(&(y.len(), y.members())));
        sets.dedup();
        sets
    }

    fn ideals(&self) -> impl Iterator<Item = &ElementSet> {
        self.subgroups.iter().filter(|v| v.is_ideal).map(|v| &v.set)
    }

    fn left_ideals(&self) -> impl Iterator<Item = &ElementSet> {
        self.subgroups.iter().filter(|v| v.is_left_ideal).map(|v| &v.set)
    }

    fn left_nilpotent(&self) -> bool {
        self.left.reaches_zero_or_full
    }

    fn right_nilpotent(&self) -> bool {
        self.right.reaches_zero_or_full
    }
}

struct Law {
    name: &'static str,
    statement: &'static str,
    run: fn(&SkewBrace, &Facts) -> Vec<Check>,
}

struct ObservationDef {
    name: &'static str,
    statement: &'static str,
    run: fn(&SkewBrace, &Facts) -> Option<bool>,
}

struct BraceOutcome {
    laws: Vec<Vec<Check>>,
    observations: Vec<Option<bool>>,
    questions: Option<QuestionFindings>,
}

struct QuestionFindings {
    undetermined: bool,
    candidates: Vec<(&'static str, String)>,
}

fn analyse(a: &SkewBrace, opts: &LawOptions) -> BraceOutcome {
    let facts = Facts::new(a);
    BraceOutcome {
        laws: LAWS.iter().map(|l| (l.run)(a, &facts)).collect(),
        observations: OBSERVATIONS.iter().map(|o| (o.run)(a, &facts)).collect(),
        questions: opts.scan_questions.then(|| scan_questions(a, &facts, opts.nil_cutoff)),
    }
}

fn scan_questions(a: &SkewBrace, f: &Facts, cutoff: Option<usize>) -> QuestionFindings {
    let cutoff = cutoff.unwrap_or_else(|| crate::series::default_nil_cutoff(a));
    let nil = nil_report_with_cutoff(a, cutoff);
    let mut candidates = Vec::new();
    if nil.right_nil && !f.right_nilpotent() {
        candidates.push((
            "right nil implies right nilpotent",
            format!(
                "every element is right nil but the right series stabilizes at {} elements",
                f.right.terms.last().unwrap().len()
            ),
        ));
    }
    if nil.strongly_nil_all == StronglyNilAggregate::Yes && !f.strong.reaches_zero_or_full {
        candidates.push((
            "strongly nil implies strongly nilpotent",
            format!(
                "every element is strongly nil but the strong series stabilizes at {} elements{}",
                f.strong.terms.last().unwrap().len(),
                if f.add_nilpotent {
                    ""
                } else {
                    "; additive group not nilpotent"
                }
            ),
        ));
    }
    QuestionFindings {
        undetermined: nil.strongly_nil_all == StronglyNilAggregate::Undetermined,
        candidates,
    }
}

const OBSERVATIONS: &[ObservationDef] = &[
    ObservationDef {
        name: "ker_lambda_is_ideal",
        statement: "ker λ is an ideal",
        run: |a, f| Some(is_ideal(a, &f.ker).is_ideal),
    },
    ObservationDef {
        name: "non_abelian_type_involutive",
        statement: "the solution of a brace of non-abelian type is involutive",
        run: |a, f| (!a.additive_group().is_abelian()).then_some(f.solution_report.involutive),
    },
];

const LAWS: &[Law] = &[
    Law {
        name: "group_axioms",
        statement: "both operation tables satisfy the group axioms",
        run: group_axioms,
    },
    Law {
        name: "quotient_group_projection",
        statement: "projection onto a quotient group by a normal subgroup is a surjective homomorphism",
        run: quotient_group_projection,
    },
    Law {
        name: "lower_central_series",
        statement: "lower central series of both groups descend and consist of normal subgroups",
        run: lower_central,
    },
    Law {
        name: "sylow_orders_multiply",
        statement: "for a nilpotent group the Sylow subgroup sizes multiply to the order",
        run: sylow_orders,
    },
    Law {
        name: "lambda_formulas",
        statement: "a + λ_a(b) = a∘b and λ_a(a′) = −a",
        run: lambda_formulas,
    },
    Law {
        name: "lambda_homomorphism",
        statement: "λ_(a∘b) = λ_a λ_b",
        run: lambda_homomorphism,
    },
    Law {
        name: "star_identities",
        statement: "a⁎(b+c) = a⁎b + b + a⁎c − b and (a∘b)⁎c = a⁎(b⁎c) + b⁎c + a⁎c",
        run: |a, _| {
            vec![match a.star_identities_witness() {
                None => Check::Pass,
                Some(t) => fail(t, "star identity fails"),
            }]
        },
    },
    Law {
        name: "opposite_addition_star",
        statement: "with a + b = ba on the multiplicative group, a⁎b = b⁻¹aba⁻¹",
        run: opposite_addition_star,
    },
    Law {
        name: "socle_is_ideal",
        statement: "Soc(A) = ker λ ∩ Z(A,+) is an ideal",
        run: |a, f| {
            let v = is_ideal(a, &f.soc);
            vec![match v.failing_witness {
                None => Check::Pass,
                Some(w) => fail(w.triple, format!("socle is not an ideal: {w}")),
            }]
        },
    },
    Law {
        name: "left_ideal_star_criterion",
        statement: "an additive subgroup I is a left ideal iff A⁎I ⊆ I",
        run: left_ideal_star_criterion,
    },
    Law {
        name: "ideal_star_criterion",
        statement: "a left ideal normal in (A,+) is normal in (A,∘) iff I⁎A ⊆ I",
        run: ideal_star_criterion,
    },
    Law {
        name: "socle_elements",
        statement: "for a ∈ Soc(A): b + b∘a = b∘a + b and λ_b(a) = b∘a∘b′",
        run: socle_elements,
    },
    Law {
        name: "fix_is_left_ideal",
        statement: "Fix(A) is a left ideal",
        run: |a, f| {
            let v = is_ideal(a, &f.fix);
            vec![check(
                v.is_left_ideal,
                v.failing_witness.map_or((0, 0, 0), |w| w.triple),
                || "Fix(A) is not a left ideal".into(),
            )]
        },
    },
    Law {
        name: "orbit_generates_subbrace",
        statement: "for X the λ-orbit of x in B(x): ⟨X⟩₊ = ⟨X⟩∘ = B(x)",
        run: orbit_generates_subbrace,
    },
    Law {
        name: "ideal_meeting_square_trivially",
        statement: "an ideal I with I ∩ A² = 0 satisfies I⁎A = 0",
        run: ideal_meeting_square_trivially,
    },
    Law {
        name: "square_is_least_trivial_quotient",
        statement: "A² is an ideal, A/A² is trivial, and A² lies in every ideal with trivial quotient",
        run: square_is_least_trivial_quotient,
    },
    Law {
        name: "series_terms_are_ideals",
        statement: "right series terms are ideals; left and strong series terms are left ideals",
        run: series_terms_are_ideals,
    },
    Law {
        name: "series_monotone",
        statement: "right, left and strong series descend; the socle series ascends",
        run: series_monotone,
    },
    Law {
        name: "strong_iff_left_and_right",
        statement: "strongly nilpotent iff left nilpotent and right nilpotent",
        run: |_, f| {
            let strong = f.strong.reaches_zero_or_full;
            let both = f.left_nilpotent() && f.right_nilpotent();
            vec![check(strong == both, (0, 0, 0), || {
                format!(
                    "strong {strong}, left {}, right {}",
                    f.left_nilpotent(),
                    f.right_nilpotent()
                )
            })]
        },
    },
    Law {
        name: "mpl_iff_right_nilpotent_and_nilpotent_type",
        statement: "finite multipermutation level iff right nilpotent with nilpotent additive group",
        run: |_, f| {
            let mpl = f.socle.mpl.is_some();
            let rhs = f.right_nilpotent() && f.add_nilpotent;
            vec![check(mpl == rhs, (0, 0, 0), || {
                format!(
                    "mpl {:?}, right nilpotent {}, additive nilpotent {}",
                    f.socle.mpl,
                    f.right_nilpotent(),
                    f.add_nilpotent
                )
            })]
        },
    },
    Law {
        name: "s_series_bounds_right_series",
        statement: "for the s-series I_i = Soc_(n−i): A^(i+1) ⊆ I_i",
        run: s_series_bound,
    },
    Law {
        name: "nonzero_ideal_meets_socle",
        statement: "right nilpotent of nilpotent type: every nonzero ideal meets Soc(A) nontrivially, so Soc(A) ≠ 0",
        run: nonzero_ideal_meets_socle,
    },
    Law {
        name: "socle_quotient_lifts_right_nilpotency",
        statement: "A/Soc(A) right nilpotent implies A right nilpotent",
        run: socle_quotient_lifts,
    },
    Law {
        name: "nonzero_left_ideal_meets_fix",
        statement: "left nilpotent: every nonzero left ideal meets Fix(A) nontrivially, so Fix(A) ≠ 0",
        run: nonzero_left_ideal_meets_fix,
    },
    Law {
        name: "left_nilpotent_iff_multiplicative_nilpotent",
        statement: "nilpotent type: left nilpotent iff (A,∘) nilpotent",
        run: |_, f| {
            if !f.add_nilpotent {
                return vec![Check::Vacuous];
            }
            vec![check(f.left_nilpotent() == f.circ_nilpotent, (0, 0, 0), || {
                format!(
                    "left nilpotent {}, (A,∘) nilpotent {}",
                    f.left_nilpotent(),
                    f.circ_nilpotent
                )
            })]
        },
    },
    Law {
        name: "prime_power_left_nilpotent",
        statement: "a brace of prime power order is left nilpotent",
        run: |a, f| {
            if prime_factors(a.order()).len() != 1 {
                return vec![Check::Vacuous];
            }
            vec![check(f.left_nilpotent(), (0, 0, 0), || {
                "left series stabilizes above zero".into()
            })]
        },
    },
    Law {
        name: "prime_power_not_simple",
        statement: "a brace of prime power order is trivial of prime order or has a proper nonzero ideal",
        run: prime_power_not_simple,
    },
    Law {
        name: "left_nilpotent_consequences",
        statement: "left nilpotent: (A²,+) is nilpotent and (A,∘)/ker λ is nilpotent",
        run: left_nilpotent_consequences,
    },
    Law {
        name: "cube_zero_square_trivial",
        statement: "A³ = 0 implies (A²,+) abelian and A² a trivial sub-brace",
        run: cube_zero_square_trivial,
    },
    Law {
        name: "nilpotency_passes_to_quotients",
        statement: "left or right nilpotency passes to quotients, with series mapping onto series",
        run: nilpotency_passes_to_quotients,
    },
    Law {
        name: "sylow_product_decomposition",
        statement: "both groups nilpotent: additive Sylow subgroups are ideals and A is their direct product",
        run: sylow_product_decomposition,
    },
    Law {
        name: "sylow_left_ideals",
        statement: "nilpotent type: additive Sylow subgroups P, Q and P + Q are left ideals",
        run: sylow_left_ideals,
    },
    Law {
        name: "coprime_sylows_annihilate",
        statement: "nilpotent type, p ∤ q^t − 1 for t ≤ m where |A_q| = q^m: A_p⁎A_q = 0",
        run: coprime_sylows_annihilate,
    },
    Law {
        name: "coprime_sylow_socle",
        statement: "nilpotent type, p_j ∤ p_i^t − 1 for every other Sylow: Soc(A_j) ⊆ Soc(A)",
        run: coprime_sylow_socle,
    },
    Law {
        name: "solution_nondegenerate",
        statement: "r_A satisfies the braid relation and is non-degenerate",
        run: |_, f| {
            let r = &f.solution_report;
            let triple = r
                .ybe_witness
                .or(r.degenerate_witness.as_ref().map(|w| (w.index, 0, 0)))
                .unwrap_or((0, 0, 0));
            vec![check(r.ybe && r.nondegenerate, triple, || {
                format!("ybe {}, nondegenerate {}", r.ybe, r.nondegenerate)
            })]
        },
    },
    Law {
        name: "abelian_type_involutive",
        statement: "r_A is involutive when (A,+) is abelian",
        run: |a, f| {
            if !a.additive_group().is_abelian() {
                return vec![Check::Vacuous];
            }
            let w = f.solution_report.involutive_witness.unwrap_or((0, 0));
            vec![check(f.solution_report.involutive, (w.0, w.1, 0), || "r² ≠ id".into())]
        },
    },
    Law {
        name: "orbits_partition",
        statement: "orbits of r_A partition A and each is invariant",
        run: orbits_partition,
    },
    Law {
        name: "generated_orbit_indecomposable",
        statement: "the orbit of x in r_B(x) restricts to an indecomposable solution",
        run: generated_orbit_indecomposable,
    },
    Law {
        name: "decomposable_iff_several_orbits",
        statement: "a solution decomposes iff it has at least two orbits",
        run: decomposable_iff_several_orbits,
    },
];

fn group_axioms(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    [a.additive_group(), a.multiplicative_group()]
        .into_iter()
        .map(|g| match g.recheck() {
            Ok(()) => Check::Pass,
            Err(GroupError::NotAssociative(x, y, z)) => fail((x, y, z), "not associative"),
            Err(e) => fail((0, 0, 0), e.to_string()),
        })
        .collect()
}

fn normal_subgroups(g: &FiniteGroup) -> Vec<ElementSet> {
    all_subgroups(g, SUBGROUP_LIMIT)
        .unwrap_or_else(|| lower_central_series(g))
        .into_iter()
        .filter(|h| is_normal_subgroup(g, h).unwrap_or(false))
        .collect()
}

fn check_projection(g: &FiniteGroup, h: &ElementSet) -> Check {
    let (q, proj) = match quotient_group(g, h) {
        Ok(r) => r,
        Err(e) => return fail((rep(h), 0, 0), format!("quotient failed: {e}")),
    };
    let mut hit = vec![false; q.order()];
    for x in 0..g.order() {
        hit[proj[x]] = true;
        for y in 0..g.order() {
            if proj[g.op(x, y)] != q.op(proj[x], proj[y]) {
                return fail((x, y, rep(h)), "projection is not a homomorphism");
            }
        }
    }
    check(hit.iter().all(|&b| b), (rep(h), 0, 0), || {
        "projection is not onto".into()
    })
}

fn quotient_group_projection(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    if a.order() > EXHAUSTIVE_SUBGROUP_ORDER {
        return vec![Check::Vacuous];
    }
    [a.additive_group(), a.multiplicative_group()]
        .into_iter()
        .flat_map(|g| normal_subgroups(g).into_iter().map(move |h| check_projection(g, &h)))
        .collect()
}

fn lower_central(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    [a.additive_group(), a.multiplicative_group()]
        .into_iter()
        .map(|g| {
            let series = lower_central_series(g);
            for (i, w) in series.windows(2).enumerate() {
                if !w[1].is_subset(&w[0]) {
                    return fail((i + 1, 0, 0), "γ_(i+1) ⊄ γ_i");
                }
            }
            for (i, t) in series.iter().enumerate() {
                if !is_normal_subgroup(g, t).unwrap_or(false) {
                    return fail((i, 0, 0), "lower central term is not normal");
                }
            }
            Check::Pass
        })
        .collect()
}

fn sylow_orders(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    [a.additive_group(), a.multiplicative_group()]
        .into_iter()
        .map(|g| {
            if !is_nilpotent(g) {
                return Check::Vacuous;
            }
            let sylow = sylow_subgroups_of_nilpotent(g);
            let product: usize = sylow.iter().map(|s| s.subgroup.len()).product();
            let subgroups = sylow.iter().all(|s| is_subgroup(g, &s.subgroup));
            check(product == g.order() && subgroups, (product, g.order(), 0), || {
                "Sylow sizes do not multiply to the order".into()
            })
        })
        .collect()
}

fn lambda_formulas(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    let n = a.order();
    for x in 0..n {
        if a.lambda(x, a.circ_inv(x)) != a.neg(x) {
            return vec![fail((x, a.circ_inv(x), 0), "λ_a(a′) ≠ −a")];
        }
        for y in 0..n {
            if a.add(x, a.lambda(x, y)) != a.circ(x, y) {
                return vec![fail((x, y, 0), "a + λ_a(b) ≠ a∘b")];
            }
        }
    }
    vec![Check::Pass]
}

fn lambda_homomorphism(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    let n = a.order();
    for x in 0..n {
        for y in 0..n {
            let xy = a.circ(x, y);
            for z in 0..n {
                if a.lambda(xy, z) != a.lambda(x, a.lambda(y, z)) {
                    return vec![fail((x, y, z), "λ_(a∘b)(c) ≠ λ_a(λ_b(c))")];
                }
            }
        }
    }
    vec![Check::Pass]
}

fn opposite_addition_star(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    let g = a.multiplicative_group();
    let b = brace_from_group_opposite_addition(g);
    let n = a.order();
    for x in 0..n {
        for y in 0..n {
            let direct = g.op(g.op(g.op(g.inv(y), x), y), g.inv(x));
            if b.star(x, y) != direct {
                return vec![fail((x, y, direct), "a⁎b ≠ b⁻¹aba⁻¹ in the opposite-addition brace")];
            }
        }
    }
    vec![Check::Pass]
}

fn left_ideal_star_criterion(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    let n = a.order();
    f.subgroups
        .iter()
        .map(|v| {
            let absorbs = star_span(a, &ElementSet::full(n), &v.set).is_subset(&v.set);
            check(absorbs == v.is_left_ideal, (rep(&v.set), 0, 0), || {
                format!(
                    "subgroup of size {}: left ideal {}, A⁎I ⊆ I {absorbs}",
                    v.set.len(),
                    v.is_left_ideal
                )
            })
        })
        .collect()
}

fn ideal_star_criterion(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    f.subgroups
        .iter()
        .map(|v| {
            let add_normal = is_normal_subgroup(a.additive_group(), &v.set).unwrap_or(false);
            if !(v.is_left_ideal && add_normal) {
                return Check::Vacuous;
            }
            let triple = v
                .circle_normal_witness
                .as_ref()
                .or(v.failing_witness.as_ref())
                .map_or((rep(&v.set), 0, 0), |w| w.triple);
            check(v.is_ideal == v.circle_normal, triple, || {
                format!(
                    "subgroup of size {}: I⁎A ⊆ I {}, normal in (A,∘) {}",
                    v.set.len(),
                    v.is_ideal,
                    v.circle_normal
                )
            })
        })
        .collect()
}

fn socle_elements(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    for s in f.soc.iter() {
        for b in 0..a.order() {
            let bs = a.circ(b, s);
            if a.add(b, bs) != a.add(bs, b) {
                return vec![fail((s, b, 0), "b + b∘a ≠ b∘a + b")];
            }
            if a.lambda(b, s) != a.circ(bs, a.circ_inv(b)) {
                return vec![fail((s, b, 0), "λ_b(a) ≠ b∘a∘b′")];
            }
        }
    }
    vec![Check::Pass]
}

fn orbit_generates_subbrace(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    (0..a.order())
        .map(|x| {
            let bx = generated_subbrace(a, &ElementSet::new(a.order(), [x]).expect("x is in range"));
            let mut mask = vec![false; a.order()];
            for g in bx.iter() {
                mask[a.lambda(g, x)] = true;
            }
            let orbit = ElementSet::from_mask(&mask);
            let plus = subgroup_closure(a.additive_group(), &orbit);
            let circ = subgroup_closure(a.multiplicative_group(), &orbit);
            check(plus == bx && circ == bx, (x, plus.len(), circ.len()), || {
                format!(
                    "|B(x)| = {}, |⟨X⟩₊| = {}, |⟨X⟩∘| = {}",
                    bx.len(),
                    plus.len(),
                    circ.len()
                )
            })
        })
        .collect()
}

fn ideal_meeting_square_trivially(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    f.ideals()
        .map(|i| {
            if !i.intersection(&f.square).is_zero() {
                return Check::Vacuous;
            }
            for x in i.iter() {
                for y in 0..a.order() {
                    if a.star(x, y) != 0 {
                        return fail((x, y, a.star(x, y)), "x⁎y ≠ 0 for x in an ideal meeting A² trivially");
                    }
                }
            }
            Check::Pass
        })
        .collect()
}

fn square_is_least_trivial_quotient(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    let v = is_ideal(a, &f.square);
    if !v.is_ideal {
        let t = v.failing_witness.map_or((rep(&f.square), 0, 0), |w| w.triple);
        return vec![fail(t, "A² is not an ideal")];
    }
    let mut out = vec![];
    match quotient_brace(a, &f.square) {
        Ok((q, _)) => out.push(check(q.is_trivial(), (rep(&f.square), 0, 0), || {
            "A/A² is not trivial".into()
        })),
        Err(e) => out.push(fail((rep(&f.square), 0, 0), e.to_string())),
    }
    for i in f.ideals() {
        let (q, _) = quotient_brace(a, i).expect("verdict said ideal");
        if q.is_trivial() {
            out.push(check(f.square.is_subset(i), (rep(i), 0, 0), || {
                format!("A/I trivial for an ideal of size {} not containing A²", i.len())
            }));
        }
    }
    out
}

fn series_terms_are_ideals(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    let mut out = Vec::new();
    for (report, need_ideal) in [(&f.right, true), (&f.left, false), (&f.strong, false)] {
        for (k, t) in report.terms.iter().enumerate() {
            let v = is_ideal(a, t);
            let ok = if need_ideal { v.is_ideal } else { v.is_left_ideal };
            let triple = v.failing_witness.as_ref().map_or((k + 1, 0, 0), |w| w.triple);
            out.push(check(ok, triple, || {
                format!("{:?} series term {} fails: {:?}", report.kind, k + 1, v.failing_witness)
            }));
        }
    }
    out
}

fn series_monotone(_: &SkewBrace, f: &Facts) -> Vec<Check> {
    let mut out = Vec::new();
    for report in [&f.right, &f.left, &f.strong] {
        out.push(match report.terms.windows(2).position(|w| !w[1].is_subset(&w[0])) {
            None => Check::Pass,
            Some(k) => fail(
                (k + 1, k + 2, 0),
                format!("{:?} series term {} ⊄ term {}", report.kind, k + 2, k + 1),
            ),
        });
    }
    out.push(
        match f.socle.series.terms.windows(2).position(|w| !w[0].is_subset(&w[1])) {
            None => Check::Pass,
            Some(k) => fail((k, k + 1, 0), format!("Soc_{k} ⊄ Soc_{}", k + 1)),
        },
    );
    out
}

fn s_series_bound(_: &SkewBrace, f: &Facts) -> Vec<Check> {
    let Some(mpl) = f.socle.mpl else {
        return vec![Check::Vacuous];
    };
    let terms = &f.socle.series.terms;
    (0..=mpl)
        .map(|i| {
            let bound = &terms[mpl - i];
            // A^(i+1) is terms[i]; past the end the series is constant.
            let r = f.right.terms.get(i).unwrap_or_else(|| f.right.terms.last().unwrap());
            check(r.is_subset(bound), (i, rep(r), 0), || {
                format!("A^({}) has {} elements, not inside Soc_{}", i + 1, r.len(), mpl - i)
            })
        })
        .collect()
}

fn nonzero_ideal_meets_socle(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    if !(f.right_nilpotent() && f.add_nilpotent) || a.order() == 1 {
        return vec![Check::Vacuous];
    }
    let mut out = vec![check(!f.soc.is_zero(), (0, 0, 0), || "Soc(A) = 0".into())];
    for i in f.ideals().filter(|i| !i.is_zero()) {
        out.push(check(!i.intersection(&f.soc).is_zero(), (rep(i), 0, 0), || {
            format!("ideal of size {} meets the socle trivially", i.len())
        }));
    }
    out
}

fn socle_quotient_lifts(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    let (q, _) = match quotient_brace(a, &f.soc) {
        Ok(r) => r,
        Err(e) => return vec![fail((rep(&f.soc), 0, 0), e.to_string())],
    };
    if !right_series(&q).reaches_zero_or_full {
        return vec![Check::Vacuous];
    }
    vec![check(f.right_nilpotent(), (0, 0, 0), || {
        "A/Soc(A) is right nilpotent but A is not".into()
    })]
}

fn nonzero_left_ideal_meets_fix(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    if !f.left_nilpotent() || a.order() == 1 {
        return vec![Check::Vacuous];
    }
    let mut out = vec![check(!f.fix.is_zero(), (0, 0, 0), || "Fix(A) = 0".into())];
    let series_terms = f.left.terms.iter().filter(|t| !t.is_zero());
    for i in f.left_ideals().filter(|i| !i.is_zero()).chain(series_terms) {
        out.push(check(!i.intersection(&f.fix).is_zero(), (rep(i), 0, 0), || {
            format!("left ideal of size {} meets Fix(A) trivially", i.len())
        }));
    }
    out
}

fn prime_power_not_simple(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    let factors = prime_factors(a.order());
    if factors.len() != 1 || !f.exhaustive {
        return vec![Check::Vacuous];
    }
    let proper = f.ideals().any(|i| !i.is_zero() && !i.is_full());
    let trivial_prime = factors[0].1 == 1 && a.is_trivial();
    vec![check(proper || trivial_prime, (0, 0, 0), || {
        "simple brace of prime power order that is not trivial of prime order".into()
    })]
}

fn left_nilpotent_consequences(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    if !f.left_nilpotent() {
        return vec![Check::Vacuous];
    }
    let square_nilpotent = match sub_group(a.additive_group(), &f.square) {
        Some(g) => is_nilpotent(&g),
        None => return vec![fail((rep(&f.square), 0, 0), "A² is not an additive subgroup")],
    };
    let image_nilpotent = match quotient_group(a.multiplicative_group(), &f.ker) {
        Ok((q, _)) => is_nilpotent(&q),
        Err(e) => return vec![fail((rep(&f.ker), 0, 0), format!("ker λ: {e}"))],
    };
    vec![
        check(square_nilpotent, (rep(&f.square), 0, 0), || {
            "(A²,+) is not nilpotent".into()
        }),
        check(image_nilpotent, (rep(&f.ker), 0, 0), || {
            "(A,∘)/ker λ is not nilpotent".into()
        }),
    ]
}

/// The subgroup on `h` re-indexed in increasing order.
fn sub_group(g: &FiniteGroup, h: &ElementSet) -> Option<FiniteGroup> {
    if !is_subgroup(g, h) {
        return None;
    }
    let members = h.members();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &m) in members.iter().enumerate() {
        index[m] = i;
    }
    Some(FiniteGroup::from_fn_trusted(members.len(), |i, j| {
        index[g.op(members[i], members[j])]
    }))
}

fn cube_zero_square_trivial(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    if f.left.zero_index().is_none_or(|k| k > 3) {
        return vec![Check::Vacuous];
    }
    for x in f.square.iter() {
        for y in f.square.iter() {
            if a.add(x, y) != a.add(y, x) {
                return vec![fail((x, y, 0), "(A²,+) is not abelian")];
            }
            if a.circ(x, y) != a.add(x, y) {
                return vec![fail((x, y, 0), "x∘y ≠ x+y in A²")];
            }
        }
    }
    vec![Check::Pass]
}

fn image_of(s: &ElementSet, proj: &[usize], q: usize) -> ElementSet {
    let mut mask = vec![false; q];
    for x in s.iter() {
        mask[proj[x]] = true;
    }
    ElementSet::from_mask(&mask)
}

fn nilpotency_passes_to_quotients(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    if !(f.left_nilpotent() || f.right_nilpotent()) {
        return vec![Check::Vacuous];
    }
    let mut out = Vec::new();
    for i in f.ideals() {
        let (q, proj) = quotient_brace(a, i).expect("verdict said ideal");
        for (ours, theirs, nilpotent) in [
            (&f.left, left_series(&q), f.left_nilpotent()),
            (&f.right, right_series(&q), f.right_nilpotent()),
        ] {
            if !nilpotent {
                continue;
            }
            let mapped = ours
                .terms
                .iter()
                .enumerate()
                .all(|(k, t)| theirs.terms.get(k).is_none_or(|u| image_of(t, &proj, q.order()) == *u));
            out.push(check(theirs.reaches_zero_or_full && mapped, (rep(i), 0, 0), || {
                format!(
                    "{:?} series of A/I for an ideal of size {} is not the image",
                    ours.kind,
                    i.len()
                )
            }));
        }
    }
    out
}

fn sylow_product_decomposition(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    if !(f.add_nilpotent && f.circ_nilpotent) {
        return vec![Check::Vacuous];
    }
    let mut factors = Vec::new();
    for s in &f.sylow {
        let v = is_ideal(a, &s.subgroup);
        if !v.is_ideal {
            let t = v.failing_witness.map_or((s.prime, 0, 0), |w| w.triple);
            return vec![fail(t, format!("Sylow {}-subgroup is not an ideal", s.prime))];
        }
        factors.push(sub_brace(a, &s.subgroup).expect("ideals are sub-braces").0);
    }
    let product = direct_product_many(&factors);
    match are_isomorphic_braces(a, &product) {
        Ok(true) => vec![Check::Pass],
        Ok(false) => vec![fail(
            (f.sylow.len(), 0, 0),
            "A is not isomorphic to the product of its Sylow sub-braces",
        )],
        Err(_) => vec![Check::Vacuous],
    }
}

fn sylow_left_ideals(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    if !f.add_nilpotent {
        return vec![Check::Vacuous];
    }
    let mut out = Vec::new();
    for (i, p) in f.sylow.iter().enumerate() {
        for q in &f.sylow[i..] {
            let sum = if p.prime == q.prime {
                p.subgroup.clone()
            } else {
                subgroup_closure(a.additive_group(), &p.subgroup.union(&q.subgroup))
            };
            let v = is_ideal(a, &sum);
            let t = v.failing_witness.as_ref().map_or((p.prime, q.prime, 0), |w| w.triple);
            out.push(check(v.is_left_ideal, t, || {
                format!("A_{} + A_{} is not a left ideal", p.prime, q.prime)
            }));
        }
    }
    out
}

/// `p ∤ q^t − 1` for `t = 1..=m`.
fn coprime_condition(p: usize, q: usize, m: u32) -> bool {
    (1..=m).all(|t| (q.pow(t) - 1) % p != 0)
}

fn sylow_exponent(s: &SylowSubgroup) -> u32 {
    prime_factors(s.subgroup.len()).first().map_or(0, |&(_, e)| e)
}

fn coprime_sylows_annihilate(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    let mut out = Vec::new();
    for p in &f.sylow {
        for q in &f.sylow {
            if p.prime == q.prime || !coprime_condition(p.prime, q.prime, sylow_exponent(q)) {
                continue;
            }
            let mut ok = Check::Pass;
            'scan: for x in p.subgroup.iter() {
                for y in q.subgroup.iter() {
                    if a.star(x, y) != 0 || a.lambda(x, y) != y {
                        ok = fail((x, y, a.star(x, y)), format!("A_{}⁎A_{} ≠ 0", p.prime, q.prime));
                        break 'scan;
                    }
                }
            }
            out.push(ok);
        }
    }
    if out.is_empty() {
        out.push(Check::Vacuous);
    }
    out
}

fn coprime_sylow_socle(a: &SkewBrace, f: &Facts) -> Vec<Check> {
    let mut out = Vec::new();
    for j in &f.sylow {
        if f.sylow.len() < 2 {
            break;
        }
        let applies = f
            .sylow
            .iter()
            .filter(|i| i.prime != j.prime)
            .all(|i| coprime_condition(j.prime, i.prime, sylow_exponent(i)));
        if !applies {
            continue;
        }
        let (sub, embedding) = match sub_brace(a, &j.subgroup) {
            Ok(r) => r,
            Err(e) => {
                out.push(fail((j.prime, 0, 0), format!("Sylow {}-subgroup: {e}", j.prime)));
                continue;
            }
        };
        let bad = socle(&sub).iter().map(|x| embedding[x]).find(|&x| !f.soc.contains(x));
        out.push(check(bad.is_none(), (bad.unwrap_or(0), j.prime, 0), || {
            format!("an element of Soc(A_{}) is outside Soc(A)", j.prime)
        }));
    }
    if out.is_empty() {
        out.push(Check::Vacuous);
    }
    out
}

fn orbits_partition(_: &SkewBrace, f: &Facts) -> Vec<Check> {
    let classes = orbits(&f.solution);
    let mut seen = vec![0usize; f.solution.size()];
    for c in &classes {
        for x in c.iter() {
            seen[x] += 1;
        }
    }
    if let Some(x) = seen.iter().position(|&k| k != 1) {
        return vec![fail((x, seen[x], 0), "orbits do not partition the set")];
    }
    classes
        .iter()
        .map(|c| match restrict_solution(&f.solution, c) {
            Ok(_) => Check::Pass,
            Err(e) => fail((rep(c), c.len(), 0), format!("orbit restriction failed: {e}")),
        })
        .collect()
}

fn generated_orbit_indecomposable(a: &SkewBrace, _: &Facts) -> Vec<Check> {
    (0..a.order())
        .map(|x| {
            let bx = generated_subbrace(a, &ElementSet::new(a.order(), [x]).expect("x is in range"));
            let (sub, embedding) = sub_brace(a, &bx).expect("generated sets are sub-braces");
            let local = embedding.iter().position(|&e| e == x).expect("x lies in B(x)");
            let s = solution_from_brace(&sub);
            let orbit = orbits(&s)
                .into_iter()
                .find(|o| o.contains(local))
                .expect("orbits cover");
            let inside = lambda_orbit(&sub, local).is_subset(&orbit);
            match restrict_solution(&s, &orbit) {
                Ok(r) => check(inside && orbits(&r).len() == 1, (x, orbit.len(), 0), || {
                    format!("orbit of x in r_B(x) of size {} is not indecomposable", orbit.len())
                }),
                Err(e) => fail((x, orbit.len(), 0), format!("restriction failed: {e}")),
            }
        })
        .collect()
}

fn decomposable_iff_several_orbits(_: &SkewBrace, f: &Facts) -> Vec<Check> {
    let mut out = Vec::new();
    let full = &f.solution;
    let mut solutions = vec![full.clone()];
    let classes = orbits(full);
    if classes.len() > 1 {
        solutions.extend(classes.iter().filter_map(|c| restrict_solution(full, c).ok()));
    }
    for s in &solutions {
        out.push(match brute_force_decomposable(s) {
            None => Check::Vacuous,
            Some(d) => {
                let k = orbits(s).len();
                check(d == (k >= 2), (s.size(), k, 0), || {
                    format!("brute force says decomposable {d}, orbit count {k}")
                })
            }
        });
    }
    out
}
