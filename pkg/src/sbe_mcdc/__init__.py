"""Minimal unique-cause MC/DC test generation for singular boolean expressions.

The pipeline is ``parse -> normalize -> relation_table/decompose -> generate``;
:mod:`sbe_mcdc.coverage` checks the result independently.
"""

from .coverage import (
    CoverageReport,
    OracleResult,
    boolean_difference,
    brute_force_minimal,
    masking_coverage,
    unique_cause_coverage,
    unique_cause_pair,
)
from .errors import (
    CompositionConflict,
    CoupledCondition,
    DecisionMismatch,
    ExprSyntaxError,
    GenerationFailed,
    HeaderMismatch,
    InvalidSlice,
    MissingVariable,
    NonBooleanCell,
    SbeError,
    SizeError,
    TooLarge,
    UnknownVariable,
)
from .expr import And, Not, Or, Var, VarOrder, evaluate, parse, render, validate_sbe, variables
from .generator import TestTable, base_patterns, generate, project_to_variables, to_assignments
from .normalize import NormalizedExpr, normalize, pushdown_not, sort_structure
from .planner import BForm, RelationTable, ResultBlock, SForm, decompose, relation_table

__version__ = "0.1.0"
