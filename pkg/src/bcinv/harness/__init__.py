"""Executable claims with exhaustive/sampled verification and hunts."""

from .claims import Claim, get_claim, registry
from .context import Context, context_for
from .runner import (
    BudgetExceeded, HuntResult, Mode, TheoremReport, default_budget, expand_rings, hunt, verify,
)

__all__ = [
    "BudgetExceeded", "Claim", "Context", "HuntResult", "Mode", "TheoremReport", "context_for",
    "default_budget", "expand_rings", "get_claim", "hunt", "registry", "verify",
]
