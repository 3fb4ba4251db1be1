"""Betti numbers of the generalized Chevalley-Eilenberg complex.

The homology at a layout degree t is ker d_t / im d_{t+k-1}; with exact
ranks this is Betti(t) = (C(dim, t) - rank d_t) - rank d_{t+k-1}.  H^0 is
1 (trivial coefficients, zero augmentation) and is included in totals.

Besides per-degree reports, this module carries the closed-form
validators for the Heisenberg, ACJ and free 3-step families, the theta
(adjoint contraction) route to ACJ homology, and the current-algebra
total-homology comparison used to probe the tensor-power property.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import KaryAlgebra, lower_central_series
from .chains import ChainLayout, boundary_image, differential_matrix, weight_blocks
from .errors import InputError, ResourceCapError
from .families import current_algebra
from .matrices import SparseIntMatrix, rank
from .util import comb0, pmap, sort_with_sign

DEFAULT_SIZE_CAP = 10**6


def _check_cap(alg: KaryAlgebra, degrees, cap):
    if cap is None:
        return
    for t in degrees:
        size = comb0(alg.dim, t)
        if size > cap:
            raise ResourceCapError(
                f"chain space at degree {t} has {size} monomials (cap {cap})"
            )


def rank_of_boundary(alg: KaryAlgebra, t: int, jobs: int = 1) -> int:
    """rank d_t, computed per weight block when a grading is present."""
    if t < alg.arity or t > alg.dim:
        return 0
    if alg.weights is not None:
        blocks = weight_blocks(alg, t)
        mats = [b.matrix for b in blocks.values() if b.matrix.nnz]
        return sum(pmap(rank, mats, jobs))
    return rank(differential_matrix(alg, t))


def betti(alg: KaryAlgebra, t: int, *, cap=DEFAULT_SIZE_CAP, jobs: int = 1) -> int:
    """Betti number at a layout degree (0, 1, k, 2k-1, ...)."""
    layout = ChainLayout(alg)
    if t not in layout.degrees:
        raise InputError(f"{t} is not a chain degree of the layout {layout.degrees}")
    if t == 0:
        return 1
    k = alg.arity
    _check_cap(alg, (t, t - k + 1, t + k - 1), cap)
    kernel = comb0(alg.dim, t) - rank_of_boundary(alg, t, jobs)
    return kernel - rank_of_boundary(alg, t + k - 1, jobs)


@dataclass
class HomologyReport:
    """Per-degree Betti numbers of one algebra, plus totals."""

    algebra: str
    arity: int
    dim: int
    degrees: list
    chain_dims: dict
    kernel_dims: dict
    image_dims: dict  # rank of the boundary leaving each degree
    betti: dict
    total: int
    total_excluding_h0: int
    euler_ok: bool
    formulas: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "schema": "karyhom-report/1",
            "algebra": self.algebra,
            "arity": self.arity,
            "dim": self.dim,
            "degrees": list(self.degrees),
            "chain_dims": {str(t): v for t, v in sorted(self.chain_dims.items())},
            "kernel_dims": {str(t): v for t, v in sorted(self.kernel_dims.items())},
            "image_dims": {str(t): v for t, v in sorted(self.image_dims.items())},
            "betti": {str(t): v for t, v in sorted(self.betti.items())},
            "total": self.total,
            "total_excluding_h0": self.total_excluding_h0,
            "euler_ok": self.euler_ok,
            "formulas": self.formulas,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "chain_dim", "kernel", "image", "betti", "formula", "match"])
        by_degree = {rec.get("degree"): rec for rec in self.formulas}
        for t in self.degrees:
            rec = by_degree.get(t, {})
            writer.writerow(
                [
                    t,
                    self.chain_dims.get(t, ""),
                    self.kernel_dims.get(t, ""),
                    self.image_dims.get(t, ""),
                    self.betti.get(t, ""),
                    rec.get("formula", ""),
                    rec.get("match", ""),
                ]
            )
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))


def betti_all(
    alg: KaryAlgebra,
    *,
    description: str = "",
    cap=DEFAULT_SIZE_CAP,
    jobs: int = 1,
) -> HomologyReport:
    """Betti numbers at every layout degree, H^0 = 1 included."""
    layout = ChainLayout(alg)
    degrees = layout.degrees
    _check_cap(alg, degrees, cap)
    k = alg.arity

    ranks = {}
    for t in degrees:
        ranks[t] = rank_of_boundary(alg, t, jobs) if t >= k else 0

    chain_dims = {t: comb0(alg.dim, t) for t in degrees}
    kernel_dims = {t: chain_dims[t] - ranks[t] for t in degrees}
    image_dims = dict(ranks)
    bettis = {}
    for i, t in enumerate(degrees):
        nxt = degrees[i + 1] if i + 1 < len(degrees) else None
        incoming = ranks.get(nxt, 0) if nxt is not None else 0
        bettis[t] = kernel_dims[t] - incoming

    total = sum(bettis.values())
    euler_lhs = sum((-1) ** i * bettis[t] for i, t in enumerate(degrees))
    euler_rhs = sum((-1) ** i * chain_dims[t] for i, t in enumerate(degrees))
    return HomologyReport(
        algebra=description or repr(alg),
        arity=alg.arity,
        dim=alg.dim,
        degrees=degrees,
        chain_dims=chain_dims,
        kernel_dims=kernel_dims,
        image_dims=image_dims,
        betti=bettis,
        total=total,
        total_excluding_h0=total - 1,
        euler_ok=euler_lhs == euler_rhs,
    )


def total_homology_all_degrees(
    alg: KaryAlgebra, *, cap=DEFAULT_SIZE_CAP, jobs: int = 1
) -> int:
    """Total homology of the full exterior-algebra complex.

    Sums ker d_t - im d_{t+k-1} over every degree t in [0, dim], not just
    the layout degrees; this is the quantity the 2-step lower-bound
    theorem controls.  Equals 2^dim - 2 * sum of all boundary ranks.
    """
    _check_cap(alg, range(alg.dim + 1), cap)
    total_rank = sum(
        rank_of_boundary(alg, t, jobs) for t in range(alg.arity, alg.dim + 1)
    )
    return 2**alg.dim - 2 * total_rank


# -- Heisenberg validator ----------------------------------------------


def heisenberg_betti_formula(k: int, m: int, i: int) -> int:
    return comb0(k * m, i * (k - 1) + 1) - comb0(k * m, (i - 1) * (k - 1))


def heisenberg_image_formula(k: int, m: int, i: int) -> int:
    return comb0(k * m, (i - 1) * (k - 1))


def heisenberg_in_range(k: int, m: int, i: int) -> bool:
    """Degrees up to the middle of the exterior algebra."""
    return i * (k - 1) + 1 <= (k * m + 1) // 2


def verify_heisenberg(k: int, m: int, *, cap=DEFAULT_SIZE_CAP, jobs: int = 1) -> dict:
    """Compare direct Betti numbers and boundary ranks with the closed forms.

    Rows inside the validity range are asserted (feed `ok`); outside it
    both values are reported without judgement.
    """
    from .families import heisenberg

    alg = heisenberg(k, m)
    report = betti_all(alg, description=f"heisenberg(k={k}, m={m})", cap=cap, jobs=jobs)
    rows = []
    ok = True
    for i, t in enumerate(report.degrees):
        if t < 1 or i == 0:
            continue
        idx = (t - 1) // (k - 1)
        if idx < 1:
            continue
        in_range = heisenberg_in_range(k, m, idx)
        brow = {
            "i": idx,
            "degree": t,
            "betti": report.betti[t],
            "formula": heisenberg_betti_formula(k, m, idx),
            "image": report.image_dims[t],
            "image_formula": heisenberg_image_formula(k, m, idx),
            "in_range": in_range,
        }
        brow["betti_match"] = brow["betti"] == brow["formula"]
        brow["image_match"] = brow["image"] == brow["image_formula"]
        if in_range:
            ok = ok and brow["betti_match"] and brow["image_match"]
        rows.append(brow)
    return {
        "family": "heisenberg",
        "k": k,
        "m": m,
        "rows": rows,
        "total": report.total,
        "ok": ok,
    }


# -- ACJ: theta maps and closed forms -----------------------------------


def _acj_split(alg: KaryAlgebra):
    """(z, sorted complement) for an algebra with codim-1 abelian ideal.

    z must occur in every bracket's arguments and in no bracket's output;
    the complement then brackets to zero among itself.
    """
    if not alg.brackets:
        raise InputError("algebra has no brackets; no distinguished direction")
    candidates = set(range(alg.dim))
    for args in alg.brackets:
        candidates &= set(args)
    for vec in alg.brackets.values():
        candidates -= set(vec)
    if not candidates:
        raise InputError("no basis direction lies in every bracket argument")
    z = min(candidates)
    a = [i for i in range(alg.dim) if i != z]
    return z, a


def theta_matrix(alg: KaryAlgebra, j: int) -> SparseIntMatrix:
    """Adjoint contraction theta_j : wedge^j a -> wedge^{j-k+2} a.

    theta_j(x_1 ^ ... ^ x_j) sums ad(z) over all (k-1)-subsets of the
    factors, with shuffle signs; equivalently the boundary of z ^ omega
    read in the coordinates of the abelian complement a.
    """
    k = alg.arity
    z, a = _acj_split(alg)
    ma = len(a)
    td = j - k + 2
    rows = comb0(ma, td) if td >= 0 else 0
    cols = comb0(ma, j)
    if j < k - 1 or rows == 0 or cols == 0:
        return SparseIntMatrix(rows, cols, {})

    target_index = {mono: i for i, mono in enumerate(combinations(a, td))}
    entries = {}
    for ci, combo in enumerate(combinations(a, j)):
        mono, sign = sort_with_sign((z,) + combo)
        for out, coeff in boundary_image(alg, mono).items():
            entries[(target_index[out], ci)] = sign * coeff
    return SparseIntMatrix(rows, cols, entries)


def theta_kernel_dim(alg: KaryAlgebra, j: int) -> int:
    _, a = _acj_split(alg)
    if j < 0 or j > len(a):
        return 0
    mat = theta_matrix(alg, j)
    return mat.cols - rank(mat)


def acj_homology_via_theta(alg: KaryAlgebra, alpha: int) -> int:
    """Betti number at degree alpha from theta kernel dimensions:

        C(|a|, alpha) - C(|a|, alpha+k-2)
            + dim ker theta_{alpha-1} + dim ker theta_{alpha+k-2}
    """
    k = alg.arity
    _, a = _acj_split(alg)
    ma = len(a)
    return (
        comb0(ma, alpha)
        - comb0(ma, alpha + k - 2)
        + theta_kernel_dim(alg, alpha - 1)
        + theta_kernel_dim(alg, alpha + k - 2)
    )


def acj_second_homology_formula(k: int, m: int) -> int:
    """Closed-form candidate for the Betti number at degree k."""
    return (
        comb0(k * m + 1, k)
        - m * comb0(k * m - k, k - 1)
        - comb0(m + 1, 2)
    )


def acj_classical_betti(m: int, i: int) -> int:
    """The known arity-2 ACJ Betti numbers C(m+1, floor((i+1)/2)) C(m, floor(i/2))."""
    return comb0(m + 1, (i + 1) // 2) * comb0(m, i // 2)


def verify_acj(k: int, m: int, *, cap=DEFAULT_SIZE_CAP, jobs: int = 1) -> dict:
    """Cross-check direct ACJ Betti numbers against the theta route and
    the closed forms (arity-2 per-degree formula; degree-k candidate)."""
    from .families import acj

    alg = acj(k, m)
    report = betti_all(alg, description=f"acj(k={k}, m={m})", cap=cap, jobs=jobs)
    rows = []
    theta_ok = True
    for t in report.degrees:
        if t == 0:
            continue
        via_theta = acj_homology_via_theta(alg, t)
        match = via_theta == report.betti[t]
        theta_ok = theta_ok and match
        rows.append(
            {"degree": t, "betti": report.betti[t], "via_theta": via_theta, "theta_match": match}
        )

    hk = {
        "degree": k,
        "betti": report.betti.get(k),
        "closed_form": acj_second_homology_formula(k, m),
    }
    hk["match"] = hk["betti"] == hk["closed_form"]

    classical = None
    classical_ok = True
    if k == 2:
        classical = []
        for t in report.degrees:
            expected = acj_classical_betti(m, t)
            match = expected == report.betti[t]
            classical_ok = classical_ok and match
            classical.append(
                {"degree": t, "betti": report.betti[t], "formula": expected, "match": match}
            )

    return {
        "family": "acj",
        "k": k,
        "m": m,
        "rows": rows,
        "theta_ok": theta_ok,
        "h_k": hk,
        "classical": classical,
        "classical_ok": classical_ok,
        "total": report.total,
        "ok": theta_ok and hk["match"] and classical_ok,
    }


# -- free 3-step validator ----------------------------------------------


def free3_expected_betti(k: int) -> dict:
    """Closed-form Betti numbers of the dim-(2k+1) free 3-step algebra."""
    expected = {
        1: k,
        k: comb0(2 * k + 1, k) - (3 * k + 2),
        2 * k - 1: (2 * k + 1) * (k - 1),
    }
    if k == 3:
        expected[7] = 1  # top degree survives only when 3k-2 <= 2k+1
    return expected


def verify_free3(k: int, *, cap=DEFAULT_SIZE_CAP, jobs: int = 1) -> dict:
    from .families import free_three_step_small

    alg = free_three_step_small(k)
    report = betti_all(alg, description=f"free3small(k={k})", cap=cap, jobs=jobs)
    expected = free3_expected_betti(k)
    rows = []
    ok = True
    for t in sorted(expected):
        match = report.betti.get(t) == expected[t]
        ok = ok and match
        rows.append(
            {"degree": t, "betti": report.betti.get(t), "formula": expected[t], "match": match}
        )
    return {
        "family": "free3small",
        "k": k,
        "rows": rows,
        "total": report.total,
        "total_excluding_h0": report.total_excluding_h0,
        "ok": ok,
    }


# -- current algebras and the tensor-power property ----------------------


def property_m_check(
    alg: KaryAlgebra, j: int, *, cap=DEFAULT_SIZE_CAP, jobs: int = 1
) -> dict:
    """Does total homology of g (x) C[t]/t^j equal (total of g)^j?

    Reports the layout total of the current algebra next to the j-th
    power of the base total, plus the all-degree total compared with the
    dimension-only 2-step lower bound; the bound alone can already
    refute the tensor-power identity.
    """
    cur = current_algebra(alg, j)
    base = betti_all(alg, cap=cap, jobs=jobs)
    curr = betti_all(cur, cap=cap, jobs=jobs)
    series = lower_central_series(cur)
    two_step = series[-1].dim == 0 and len(series) <= 3

    result = {
        "truncation": j,
        "base_total": base.total,
        "power_total": base.total**j,
        "current_dim": cur.dim,
        "current_two_step": two_step,
        "current_total": curr.total,
        "current_total_all_degrees": total_homology_all_degrees(cur, cap=cap, jobs=jobs),
        "equal": curr.total == base.total**j,
    }
    if two_step:
        from .toral import refinement_bound

        bound = refinement_bound(cur.dim, 0, cur.arity)
        result["refinement_bound_dim_only"] = bound
        result["bound_refutes_power"] = bound > result["power_total"]
    return result


def euler_characteristic_ok(report: HomologyReport) -> bool:
    lhs = sum((-1) ** i * report.betti[t] for i, t in enumerate(report.degrees))
    rhs = sum((-1) ** i * report.chain_dims[t] for i, t in enumerate(report.degrees))
    return lhs == rhs
