"""Interactive string-transformation synthesis with information-guided queries."""

from .dsl import (
    AbsPos,
    ConstStr,
    Program,
    SubStr,
    Token,
    TokPos,
    canonical,
    describe,
    evaluate,
    program_from_dict,
    program_to_dict,
    rank_score,
)
from .engine import ActiveConfig, SessionState, Status, new_session, select_query, submit
from .learner import VersionSpace, count_programs, learn, top_k
from .sampling import BeliefState, SamplingSpec, random_k, sample

__all__ = [
    "AbsPos",
    "ActiveConfig",
    "BeliefState",
    "ConstStr",
    "Program",
    "SamplingSpec",
    "SessionState",
    "Status",
    "SubStr",
    "Token",
    "TokPos",
    "VersionSpace",
    "canonical",
    "count_programs",
    "describe",
    "evaluate",
    "learn",
    "new_session",
    "program_from_dict",
    "program_to_dict",
    "random_k",
    "rank_score",
    "sample",
    "select_query",
    "submit",
    "top_k",
]
