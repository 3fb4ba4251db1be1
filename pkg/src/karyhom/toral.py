"""Toral-rank bounds for nilpotent k-ary Lie algebras.

The basic inequality asks total homology >= 2^(dim center).  For 2-step
algebras with center z and complement v there is a sharper bound

    total >= sum_{i=0}^{k-1} | sum_j (-1)^j C(|v|, kj+i) | * 2^|z|

obtained from Euler characteristics of the mod-k graded subcomplexes of
the full exterior algebra.  `toral_table` tabulates the z-free factor.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .algebra import KaryAlgebra, center, lower_central_series
from .errors import InputError
from .util import comb0


def refinement_bound(dim_v: int, dim_z: int, k: int) -> int:
    """The 2-step lower bound for given complement/center dimensions."""
    if dim_v < 0 or dim_z < 0:
        raise InputError("dimensions must be nonnegative")
    if k < 2:
        raise InputError(f"arity must be at least 2, got {k}")
    total = 0
    for i in range(k):
        inner = 0
        sign = 1
        for top in range(i, dim_v + 1, k):
            inner += sign * comb0(dim_v, top)
            sign = -sign
        total += abs(inner)
    return total * 2**dim_z


@dataclass(frozen=True)
class ToralBoundRecord:
    dim_v: int
    dim_z: int
    k: int
    bound: int

    @property
    def log2(self) -> float:
        return math.log2(self.bound)


def log2_display(x: float) -> str:
    """10 significant digits; exact integers shown as 'n.0'."""
    if abs(x - round(x)) < 1e-12:
        return f"{round(x):.1f}"
    int_digits = max(1, len(str(int(x))))
    decimals = max(1, 10 - int_digits)
    return f"{x:.{decimals}f}"


def toral_table(n_max: int, k_list=(2, 3, 4, 5)):
    """Bound records for n = 1..n_max, one per arity, center factored out."""
    if n_max < 1:
        raise InputError("n_max must be at least 1")
    return [
        ToralBoundRecord(n, 0, k, refinement_bound(n, 0, k))
        for n in range(1, n_max + 1)
        for k in k_list
    ]


def toral_table_rows(n_max: int, k_list=(2, 3, 4, 5)):
    """One dict per n with bound and log2 per arity (serialization-friendly)."""
    rows = []
    for n in range(1, n_max + 1):
        row = {"n": n}
        for k in k_list:
            b = refinement_bound(n, 0, k)
            row[f"k{k}"] = b
            row[f"k{k}_log2"] = log2_display(math.log2(b))
        rows.append(row)
    return rows


def toral_table_csv(n_max: int, k_list=(2, 3, 4, 5)) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["n"]
    for k in k_list:
        header += [f"k{k}", f"k{k}_log2"]
    writer.writerow(header)
    for row in toral_table_rows(n_max, k_list):
        out = [row["n"]]
        for k in k_list:
            out += [row[f"k{k}"], row[f"k{k}_log2"]]
        writer.writerow(out)
    return buf.getvalue()


def toral_table_text(n_max: int, k_list=(2, 3, 4, 5)) -> str:
    rows = toral_table_rows(n_max, k_list)
    header = ["n"]
    for k in k_list:
        header += [f"k={k}", "log2"]
    table = [header]
    for row in rows:
        out = [str(row["n"])]
        for k in k_list:
            out += [str(row[f"k{k}"]), row[f"k{k}_log2"]]
        table.append(out)
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = [
        "  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in table
    ]
    return "\n".join(lines) + "\n"


def verify_toral(alg: KaryAlgebra, *, description: str = "", cap=None, jobs: int = 1) -> dict:
    """Check total homology against 2^(dim center), and for 2-step
    algebras against the refinement bound (on the all-degree total,
    which is what the bound controls)."""
    from .homology import DEFAULT_SIZE_CAP, betti_all, total_homology_all_degrees

    cap = DEFAULT_SIZE_CAP if cap is None else cap
    series = lower_central_series(alg)
    if series[-1].dim != 0:
        raise InputError("toral bounds apply to nilpotent algebras only")
    z = center(alg)
    report = betti_all(alg, description=description, cap=cap, jobs=jobs)
    total_all = total_homology_all_degrees(alg, cap=cap, jobs=jobs)
    two_step = len(series) <= 3

    result = {
        "algebra": description or repr(alg),
        "dim": alg.dim,
        "center_dim": z.dim,
        "total": report.total,
        "total_all_degrees": total_all,
        "power_bound": 2**z.dim,
        "holds_power": report.total >= 2**z.dim,
        "two_step": two_step,
    }
    if two_step:
        bound = refinement_bound(alg.dim - z.dim, z.dim, alg.arity)
        result["refinement_bound"] = bound
        result["holds_refinement"] = total_all >= bound
        result["ok"] = result["holds_power"] and result["holds_refinement"]
    else:
        result["ok"] = result["holds_power"]
    return result
