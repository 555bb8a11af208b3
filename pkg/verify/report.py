"""
Check Reports
Machine-readable pass/fail records for the verification harness
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from coloring import RANDOM_MONO_BASELINE, RANDOM_RAINBOW_BASELINE


def fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def decimal_text(value: Fraction) -> str:
    """12 significant digits; the fraction stays authoritative"""
    return f"{float(value):.12g}"


def render_fraction(value: Optional[Fraction]) -> Optional[Dict[str, str]]:
    if value is None:
        return None
    return {"fraction": fraction_text(value), "decimal": decimal_text(value)}


def jsonable(value: Any) -> Any:
    """Convert fractions (recursively) into fraction/decimal pairs"""
    if isinstance(value, Fraction):
        return render_fraction(value)
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def baselines() -> Dict[str, Any]:
    return {
        "rainbow_random": render_fraction(RANDOM_RAINBOW_BASELINE),
        "mono_random": render_fraction(RANDOM_MONO_BASELINE),
    }


@dataclass
class CheckReport:
    """
    Outcome of one verification check

    rows holds the exact counts behind every asserted number; failures
    holds the offending rows. observed_constant is the largest |error| / n
    seen, for checks with a K * n budget.
    """

    name: str
    claim: str
    rows: List[Dict[str, Any]] = field(default_factory=list)
    failures: List[Dict[str, Any]] = field(default_factory=list)
    observed_constant: Optional[Fraction] = None
    budget_k: Optional[int] = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, row: Dict[str, Any], ok: bool = True):
        self.rows.append(row)
        if not ok:
            self.failures.append(row)

    def observe(self, constant: Fraction):
        """Track the largest constant needed to cover the errors seen so far"""
        constant = Fraction(constant)
        if self.observed_constant is None or constant > self.observed_constant:
            self.observed_constant = constant

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "claim": self.claim,
            "passed": self.passed,
            "checked": len(self.rows),
            "failures": jsonable(self.failures),
            "rows": jsonable(self.rows),
            "observed_constant": render_fraction(self.observed_constant),
            "budget_k": self.budget_k,
            "baselines": baselines(),
        }
