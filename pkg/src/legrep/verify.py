"""Three independent evaluations of the homotopy cardinality of the
n-dimensional representation category over F_q:

* categorical: sum over equivalence classes of q^(alternating H^<0 dims)/|Aut|
* closed form: q^(n^2 (tb - chi*)/2) |GL_n(F_q)|^-1 #reps
* ruling side: q^(n^2 tb/2) R_n(q), R_n the n-colored ruling polynomial
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .dga import build_dga, grading_census
from .diagram import FrontDiagram, classical_invariants
from .laurent import QValue, RationalFunctionS, q_power
from .repcat import ClassSummary, homotopy_cardinality
from .satellite import colored_ruling_polynomial


def ruling_side(d: FrontDiagram, n: int, q: int, colored: RationalFunctionS | None = None) -> QValue:
    if colored is None:
        colored = colored_ruling_polynomial(d, n)
    tb = classical_invariants(d).tb
    return q_power(q, n * n * tb) * colored.evaluate(q)


@dataclass
class VerificationRow:
    n: int
    q: int
    count: int
    categorical: QValue
    closed_form: QValue
    ruling_side: QValue
    classes: list[ClassSummary] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.categorical == self.closed_form == self.ruling_side

    def to_json(self, with_classes: bool = False) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "representations": self.count,
            "categorical": str(self.categorical),
            "closed_form": str(self.closed_form),
            "ruling_side": str(self.ruling_side),
            "categorical_eq_closed_form": self.categorical == self.closed_form,
            "closed_form_eq_ruling_side": self.closed_form == self.ruling_side,
        }
        if with_classes:
            out["classes"] = [
                {
                    "representative": c.representative.to_json(),
                    "size": c.size,
                    "aut": c.aut,
                    "cohomology": {str(i): v for i, v in sorted(c.cohomology.items())},
                }
                for c in self.classes
            ]
        return out


def verify_identity(
    d: FrontDiagram, n: int, q: int, colored: RationalFunctionS | None = None
) -> VerificationRow:
    start = time.perf_counter()
    inv = classical_invariants(d)
    if inv.r != 0:
        raise ValueError(f"rotation number {inv.r} is not 0")
    g = build_dga(d)
    report = homotopy_cardinality(g, n, q)
    rs = ruling_side(d, n, q, colored)
    return VerificationRow(
        n, q, report.count, report.categorical, report.closed_form, rs,
        report.classes, time.perf_counter() - start,
    )


def chi_star(d: FrontDiagram) -> int:
    return grading_census(build_dga(d))[1]
