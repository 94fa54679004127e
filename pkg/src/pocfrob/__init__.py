"""Frobenius groups with perfect order classes: number theory, concrete
group realizations, order-class censuses, classification verdicts and a
census of the small examples."""

from .classifier import Justification, Verdict, classify, classify_complement, theorem_a_check
from .errors import DomainError, LiftError, LimitExceeded, ParseError, RealizationError, SpecError
from .orderclasses import OrderCensus, is_poc
from .specs import (
    Cyclic,
    FrobeniusSpec,
    HomocyclicKernel,
    Metacyclic,
    QuatCyclic,
    SL2_3,
    SL2_5,
    parse_spec,
    render,
)

__version__ = "0.1.0"
