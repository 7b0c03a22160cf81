//! Inconsistency-tolerant query answering for DatalogMTL over the integer
//! timeline.
//!
//! The crate parses programs and temporal datasets, materializes canonical
//! models on interval representations, computes s-, i- and p-repairs and
//! conflicts, and answers queries under brave, CQA and intersection
//! semantics.

pub mod error;
pub mod facts;
pub mod harness;
pub mod itsem;
pub mod reasoner;
pub mod repairs;
pub mod syntax;
pub mod time;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use facts::{
    models_fact, normalize, pointwise_intersection, strict_subset_order, subset_order, tp_expand,
    FactSet, GroundAtom, RepairKind, Symbol, TemporalFact,
};
pub use itsem::{
    answers_under, entails_under, semantics_report, RepairView, SemanticsKind, SemanticsReport,
};
pub use reasoner::{
    certain_answers, entails_fact, is_consistent, materialize, Answer, EngineLimits,
    IntervalModel, Reasoner,
};
pub use repairs::{
    enumerate_conflicts, enumerate_repairs, generate_conflict, generate_repair,
    recognize_conflict, recognize_repair, repairs_intersection, RepairContext, DEFAULT_CAP,
};
pub use syntax::{
    classify_fragment, ground_program, parse_dataset, parse_fact, parse_instance, parse_program,
    parse_query, FragmentReport, Program, Query,
};
pub use time::{Interval, IntervalSet, TimePoint};
