"""Report serialization: canonical JSON and CSV with exact rationals.

Rationals are serialized as "num/den" strings (lowest terms, positive
denominator) next to a float rendering where convenient.  Points are
sorted before serialization, so identical runs produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Sequence

FORMAT_VERSION = 1


def frac_str(x: Fraction | int) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def frac_of(s: str) -> Fraction:
    return Fraction(s)


def point_payload(point) -> list[str]:
    return [frac_str(c) for c in point.coords]


def profile_payload(pset) -> dict:
    points = sorted(pset.points, key=lambda p: p.coords)
    coords_flat = [c for p in points for c in p.coords]
    summary = {
        "count": len(points),
        "coord_min": frac_str(min(coords_flat)) if coords_flat else None,
        "coord_max": frac_str(max(coords_flat)) if coords_flat else None,
    }
    return {
        "format": "profile-set",
        "version": FORMAT_VERSION,
        "k": pset.k,
        "mode": pset.mode.value,
        "strategy": pset.strategy,
        "source": pset.source,
        "summary": summary,
        "points": [point_payload(p) for p in points],
    }


def diagnostic_payload(diag) -> dict:
    return {
        "pairwise": [[frac_str(d) for d in row] for row in diag.pairwise],
        "pairwise_float": [[float(d) for d in row] for row in diag.pairwise],
        "tail_sup": [frac_str(t) for t in diag.tail_sup],
        "verdict": diag.verdict,
        "consistency_factor": frac_str(diag.consistency_factor),
        "divergence_factor": frac_str(diag.divergence_factor),
        "witness": list(diag.witness) if diag.witness else None,
    }


def matrix_csv(matrix: Sequence[Sequence[Fraction]], labels: Sequence[str], exact: bool = True) -> str:
    head = "," + ",".join(labels)
    lines = [head]
    for label, row in zip(labels, matrix):
        if exact:
            cells = [frac_str(x) for x in row]
        else:
            cells = [repr(float(x)) for x in row]
        lines.append(label + "," + ",".join(cells))
    return "\n".join(lines) + "\n"


def report(command: str, params: dict, results: dict) -> dict:
    from . import __version__

    return {
        "tool": {"name": "quotientlab", "version": __version__},
        "format_version": FORMAT_VERSION,
        "command": command,
        "params": params,
        "results": results,
    }


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_text(path: str | None, text: str) -> None:
    if path is None:
        print(text, end="")
    else:
        Path(path).write_text(text, encoding="utf-8")
