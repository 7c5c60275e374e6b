"""Pass/fail reports for exact identity verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .polyalg import Poly


def encode_value(value):
    """JSON-friendly form: polynomials as ascending coefficient strings,
    scalars as canonical p/q strings."""
    if isinstance(value, Poly):
        return [str(c) for c in value.coeffs]
    if isinstance(value, (Fraction, int)):
        return str(value)
    return str(value)


def encode_params(obj):
    """Recursively stringify Fractions inside grid/parameter structures."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: encode_params(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode_params(v) for v in obj]
    return obj


@dataclass(frozen=True)
class Failure:
    """One grid point where the two sides disagreed, carried verbatim."""

    params: dict
    lhs: object
    rhs: object

    def to_json_dict(self) -> dict:
        return {
            "params": encode_params(self.params),
            "lhs": encode_value(self.lhs),
            "rhs": encode_value(self.rhs),
        }


@dataclass
class VerificationReport:
    """Outcome of checking one identity over a parameter grid.

    Passes iff `failures` is empty; failures carry both sides so a breakage
    produces a diffable artifact rather than a bare boolean. `elapsed` is
    wall-clock seconds and is excluded from JSON by default so emitted
    reports stay byte-deterministic.
    """

    identity: str
    grid: dict
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, params: dict, lhs, rhs) -> None:
        """Compare one grid point, appending a failure on mismatch."""
        self.checked += 1
        if lhs != rhs:
            self.failures.append(Failure(dict(params), lhs, rhs))

    def absorb(self, sub: "VerificationReport", **extra) -> None:
        """Fold a sub-report's counts and failures into this one."""
        self.checked += sub.checked
        for f in sub.failures:
            self.failures.append(Failure({**extra, **f.params}, f.lhs, f.rhs))

    def to_json_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "grid": encode_params(self.grid),
            "checked": self.checked,
            "status": "pass" if self.passed else "fail",
            "failures": [f.to_json_dict() for f in self.failures],
        }
        if include_elapsed:
            out["elapsed_seconds"] = self.elapsed
        return out
