"""Wire formats: JSON for elements/results, CSV for campaign reports.

Complex numbers serialize as [re, im] pairs; function and spectral arrays
as lists of pairs in canonical enumeration order. An element is

    {"group": [n1, ...], "lambda": [re, im], "f": [[re, im], ...]}

CSV reports use a fixed column set

    kind,p,delta,group,theorem,trials,violations,certified_bound,
    max_actual,min_slack,status

preceded by a "# normcontrol <version>" header line. Floats render with
repr (shortest round-trip), '.' decimal separator, no locale dependence,
so identical runs produce identical bytes below the version header.
"""

from __future__ import annotations

import json

import numpy as np

from ._version import __version__
from .algebra import AlgebraKind, Family, FunctionOnG, UnitizedElement
from .fourier import SpectralVector
from .group import Group
from .harness import CertificationReport, ExtremalEstimate, SweepCell
from .inversion import BezoutSolution, CertifiedInverse, Theorem

CSV_COLUMNS = ("kind", "p", "delta", "group", "theorem", "trials", "violations",
               "certified_bound", "max_actual", "min_slack", "status")


def complex_to_pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def pair_to_complex(pair) -> complex:
    re, im = pair
    return complex(float(re), float(im))


def values_to_pairs(values: np.ndarray) -> list[list[float]]:
    return [complex_to_pair(z) for z in values]


def pairs_to_values(pairs) -> np.ndarray:
    return np.asarray([pair_to_complex(p) for p in pairs], dtype=np.complex128)


def element_to_dict(x: UnitizedElement) -> dict:
    return {
        "group": x.group.to_json(),
        "lambda": complex_to_pair(x.lam),
        "f": values_to_pairs(x.f.values),
    }


def element_from_dict(data: dict) -> UnitizedElement:
    group = Group.from_json(data["group"])
    return UnitizedElement(
        pair_to_complex(data["lambda"]),
        FunctionOnG(group, pairs_to_values(data["f"])),
    )


def spectral_to_pairs(b: SpectralVector) -> list[list[float]]:
    return values_to_pairs(b.values)


def kind_to_dict(kind: AlgebraKind) -> dict:
    return {"family": kind.family.value, "p": kind.p}


def kind_from_dict(data: dict) -> AlgebraKind:
    return AlgebraKind(Family(data["family"]), float(data["p"]))


def inverse_to_dict(ci: CertifiedInverse) -> dict:
    d = ci.diagnostics
    diagnostics = {
        "n": d.n,
        "delta_n": d.delta_n,
        "eta_n": d.eta_n,
        "c_n": d.c_n,
        "residual": d.residual,
    }
    for extra in ("series_terms", "oracle_deviation", "spectral_norm_g",
                  "spectral_norm_cap", "sup_u", "sup_u_cap", "coeff_norm_b",
                  "coeff_norm_cap", "khat_dev"):
        value = getattr(d, extra)
        if value is not None:
            diagnostics[extra] = value
    return {
        "inverse": element_to_dict(ci.inverse),
        "certified_bound": ci.certified_bound,
        "actual_norm": ci.actual_norm,
        "theorem": ci.theorem.value,
        "diagnostics": diagnostics,
    }


def estimate_to_dict(est: ExtremalEstimate) -> dict:
    return {
        "kind": kind_to_dict(est.kind),
        "delta": est.delta,
        "lower_bound": est.lower_bound,
        "iterations": est.iterations,
        "witness": element_to_dict(est.witness),
    }


def bezout_to_dict(sol: BezoutSolution) -> dict:
    return {
        "solutions": [element_to_dict(y) for y in sol.solutions],
        "sum_square_norms": sol.sum_square_norms,
        "residual": sol.residual,
        "theorem": sol.theorem.value,
    }


def report_to_dict(report: CertificationReport) -> dict:
    return {
        "kind": kind_to_dict(report.spec.kind),
        "delta": report.spec.delta,
        "group": report.spec.group.to_json(),
        "seed": report.spec.seed,
        "strategy": report.spec.strategy.value,
        "theorem": report.theorem.value,
        "trials": report.trials,
        "violations": report.violations,
        "max_actual_norm": report.max_actual_norm,
        "min_slack": report.min_slack,
        "certified_bound": report.certified_bound,
        "max_residual": report.max_residual,
        "max_oracle_deviation": report.max_oracle_deviation,
        "breakdown": report.breakdown,
        "status": report.status,
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def csv_header() -> list[str]:
    return [f"# normcontrol {__version__}", ",".join(CSV_COLUMNS)]


def report_csv_row(report: CertificationReport, p_text: str | None = None,
                   delta_text: str | None = None) -> str:
    """One CSV line for a campaign; p/delta echo the given strings verbatim."""
    spec = report.spec
    fields = [
        spec.kind.family.value,
        p_text if p_text is not None else repr(spec.kind.p),
        delta_text if delta_text is not None else repr(spec.delta),
        str(spec.group),
        report.theorem.value,
        str(report.trials),
        str(report.violations),
        _fmt(report.certified_bound),
        _fmt(report.max_actual_norm),
        _fmt(report.min_slack),
        report.status,
    ]
    return ",".join(fields)


def cell_csv_row(cell: SweepCell, trials: int) -> str:
    if cell.status == "skipped":
        fields = [
            cell.kind.family.value, cell.p_text, cell.delta_text,
            str(cell.group), cell.theorem.value, str(trials),
            "", "", "", "", "skipped",
        ]
        return ",".join(fields)
    return report_csv_row(cell.report, cell.p_text, cell.delta_text)


def cells_to_csv(cells: list[SweepCell], trials: int) -> str:
    lines = csv_header()
    lines.extend(cell_csv_row(c, trials) for c in cells)
    return "\n".join(lines) + "\n"


def report_to_csv(report: CertificationReport, p_text: str | None = None,
                  delta_text: str | None = None) -> str:
    lines = csv_header()
    lines.append(report_csv_row(report, p_text, delta_text))
    return "\n".join(lines) + "\n"


def theorem_from_token(token: str) -> Theorem:
    table = {
        "oracle": Theorem.ORACLE,
        "splitting": Theorem.SPLITTING,
        "thm5": Theorem.THM5,
        "thm6": Theorem.THM6,
        "thm7": Theorem.THM7,
        "lp1": Theorem.LP1,
        "thmlp1": Theorem.LP1,
        "lp2": Theorem.LP2,
        "thmlp2": Theorem.LP2,
    }
    key = token.strip().lower()
    if key not in table:
        raise ValueError(
            f"unknown theorem {token!r}; expected one of "
            f"oracle, splitting, thm5, thm6, thm7, lp1, lp2")
    return table[key]
