"""Finite-dimensional k-ary Lie algebras over Q with integer structure constants.

An algebra is given by its bracket on basis elements.  Antisymmetry is
built into the storage: brackets are kept only on strictly increasing
index tuples, and evaluation at any other tuple routes through the sign
of the sorting permutation.  The generalized (Filippov) Jacobi identity

    [[x_1,...,x_k], y_2,...,y_k]
        = sum_i [x_1,...,[x_i, y_2,...,y_k],...,x_k]

is not assumed; `check_jacobi` verifies it exhaustively on basis tuples,
which suffices by multilinearity.
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations
from math import lcm

from .errors import InputError, LoadError
from .util import sort_with_sign


class KaryAlgebra:
    """A k-ary algebra on an ordered basis.

    brackets maps strictly increasing k-tuples of basis indices to sparse
    integer vectors {index: coefficient}; absent tuples bracket to zero.
    weights, when present, give every basis element an integer vector in
    Z^r such that brackets are weight-additive.
    """

    __slots__ = ("arity", "dim", "labels", "brackets", "weights")

    def __init__(self, arity, dim, labels, brackets, weights=None):
        if arity < 2:
            raise InputError(f"arity must be at least 2, got {arity}")
        if dim < 1:
            raise InputError(f"dimension must be positive, got {dim}")
        labels = tuple(labels)
        if len(labels) != dim:
            raise InputError(f"expected {dim} labels, got {len(labels)}")
        self.arity = arity
        self.dim = dim
        self.labels = labels

        stored = {}
        for args, vec in brackets.items():
            args = tuple(args)
            if len(args) != arity:
                raise InputError(f"bracket key {args} does not have {arity} entries")
            if any(not 0 <= i < dim for i in args):
                raise InputError(f"bracket key {args} out of range")
            if any(a >= b for a, b in zip(args, args[1:])):
                raise InputError(f"bracket key {args} is not strictly increasing")
            vec = {int(i): int(c) for i, c in vec.items() if c}
            if not vec:
                raise InputError(f"bracket {args} stores a zero vector")
            if any(not 0 <= i < dim for i in vec):
                raise InputError(f"bracket {args} has out-of-range output indices")
            stored[args] = vec
        self.brackets = stored

        if weights is not None:
            weights = {int(i): tuple(int(x) for x in w) for i, w in weights.items()}
            if sorted(weights) != list(range(dim)):
                raise InputError("weights must cover every basis index exactly once")
            ranks = {len(w) for w in weights.values()}
            if len(ranks) != 1:
                raise InputError("weight vectors must share a common length")
            for args, vec in stored.items():
                total = _vector_sum(weights[i] for i in args)
                for out in vec:
                    if weights[out] != total:
                        raise InputError(
                            f"bracket {args} is not weight-additive at output {out}"
                        )
        self.weights = weights

    # -- evaluation ---------------------------------------------------

    def bracket(self, indices):
        """Bracket of basis elements, as a sparse integer vector.

        Accepts any k-tuple of basis indices; repeated indices give the
        zero vector, unsorted tuples pick up the permutation sign.
        """
        indices = tuple(indices)
        if len(indices) != self.arity:
            raise InputError(
                f"bracket needs {self.arity} arguments, got {len(indices)}"
            )
        if any(not 0 <= i < self.dim for i in indices):
            raise InputError(f"basis index out of range in {indices}")
        key, sign = sort_with_sign(indices)
        if sign == 0:
            return {}
        vec = self.brackets.get(key)
        if not vec:
            return {}
        if sign == 1:
            return dict(vec)
        return {i: -c for i, c in vec.items()}

    def bracket_with_vector(self, vec, rest):
        """Bracket [v, b_{rest}] for a sparse vector v in the first slot."""
        out = {}
        for i, c in vec.items():
            if not c:
                continue
            for j, cj in self.bracket((i,) + tuple(rest)).items():
                out[j] = out.get(j, 0) + c * cj
        return {j: c for j, c in out.items() if c}

    # -- misc ---------------------------------------------------------

    @property
    def weight_rank(self):
        if self.weights is None:
            return 0
        return len(self.weights[0])

    def structure_equal(self, other) -> bool:
        """Same arity/dimension/brackets, ignoring labels and weights."""
        return (
            self.arity == other.arity
            and self.dim == other.dim
            and self.brackets == other.brackets
        )

    def __repr__(self):
        return (
            f"KaryAlgebra(arity={self.arity}, dim={self.dim}, "
            f"brackets={len(self.brackets)})"
        )

    @classmethod
    def from_brackets(cls, arity, dim, labels, items, weights=None):
        """Build from possibly unsorted bracket tuples.

        items is an iterable of (args, vector); unsorted args are
        normalized with the permutation sign, entries on equal keys are
        accumulated.
        """
        merged = {}
        for args, vec in items:
            key, sign = sort_with_sign(tuple(args))
            if sign == 0:
                raise InputError(f"bracket arguments {tuple(args)} repeat an index")
            acc = merged.setdefault(key, {})
            for i, c in vec.items():
                acc[i] = acc.get(i, 0) + sign * c
        merged = {
            k: {i: c for i, c in v.items() if c} for k, v in merged.items()
        }
        merged = {k: v for k, v in merged.items() if v}
        return cls(arity, dim, labels, merged, weights)


def _vector_sum(vectors):
    total = None
    for v in vectors:
        if total is None:
            total = list(v)
        else:
            for i, x in enumerate(v):
                total[i] += x
    return tuple(total) if total is not None else ()


# -- structural checkers ----------------------------------------------


def check_jacobi(alg: KaryAlgebra):
    """All basis tuples violating the generalized Jacobi identity.

    Exhausts strictly increasing inner k-tuples against strictly
    increasing outer (k-1)-tuples (overlaps allowed); this covers every
    case by multilinearity, since tuples with a repeat inside either
    group vanish identically on both sides.  Returns the violating
    (2k-1)-tuples, inner part first; empty means the identity holds.
    """
    k = alg.arity
    violations = []
    inner_tuples = list(combinations(range(alg.dim), k))
    outer_tuples = list(combinations(range(alg.dim), k - 1))
    for inner in inner_tuples:
        inner_vec = alg.brackets.get(inner, {})
        for outer in outer_tuples:
            residual = dict(alg.bracket_with_vector(inner_vec, outer))
            for i in range(k):
                moved = alg.bracket((inner[i],) + outer)
                if not moved:
                    continue
                for w, c in moved.items():
                    replaced = inner[:i] + (w,) + inner[i + 1 :]
                    for j, cj in alg.bracket(replaced).items():
                        residual[j] = residual.get(j, 0) - c * cj
            if any(residual.values()):
                violations.append(inner + outer)
    return violations


def lower_central_series(alg: KaryAlgebra):
    """[g, C^2, C^3, ...] with C^{i+1} = span[C^i, g, ..., g].

    Stops at the zero subspace or at the first repeat; the algebra is
    nilpotent iff the last term is zero.
    """
    series = [Subspace.full(alg.dim)]
    rests = list(combinations(range(alg.dim), alg.arity - 1))
    while True:
        current = series[-1]
        if current.dim == 0:
            return series
        gens = []
        for v in current.basis_vectors:
            vec = {i: c for i, c in enumerate(v) if c}
            for rest in rests:
                img = alg.bracket_with_vector(vec, rest)
                if img:
                    gens.append(img)
        nxt = Subspace.span(alg.dim, gens)
        series.append(nxt)
        if nxt.dim == current.dim:
            return series


def is_nilpotent(alg: KaryAlgebra) -> bool:
    return lower_central_series(alg)[-1].dim == 0


def nilpotency_class(alg: KaryAlgebra) -> int:
    """Number of nonzero terms of the lower central series (1 = abelian)."""
    series = lower_central_series(alg)
    if series[-1].dim != 0:
        raise InputError("algebra is not nilpotent")
    return len(series) - 1


def center(alg: KaryAlgebra) -> Subspace:
    """Common kernel of v -> [v, b_{i_2}, ..., b_{i_k}] over basis subsets."""
    echelon = _Echelon(alg.dim)
    for rest in combinations(range(alg.dim), alg.arity - 1):
        images = {}
        for j in range(alg.dim):
            for out, c in alg.bracket((j,) + rest).items():
                images.setdefault(out, [0] * alg.dim)[j] = c
        for row in images.values():
            echelon.add(row)
    return Subspace(alg.dim, echelon.kernel_basis())


# -- subspaces ---------------------------------------------------------


class _Echelon:
    """Incremental reduced row echelon form over Q (dense rows)."""

    def __init__(self, width: int):
        self.width = width
        self.rows = []  # list[(pivot_col, list[Fraction])], sorted by pivot

    def reduce(self, vec):
        vec = [Fraction(x) for x in vec]
        for piv, row in self.rows:
            c = vec[piv]
            if c:
                for i in range(piv, self.width):
                    vec[i] -= c * row[i]
        return vec

    def add(self, vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        vec = self.reduce(vec)
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return False
        inv = 1 / vec[piv]
        vec = [x * inv for x in vec]
        for _, row in self.rows:
            c = row[piv]
            if c:
                for i in range(piv, self.width):
                    row[i] -= c * vec[i]
        self.rows.append((piv, vec))
        self.rows.sort(key=lambda t: t[0])
        return True

    def kernel_basis(self):
        """RREF basis of the null space of the stacked rows."""
        pivots = [p for p, _ in self.rows]
        free = [i for i in range(self.width) if i not in pivots]
        basis = []
        for f in free:
            vec = [Fraction(0)] * self.width
            vec[f] = Fraction(1)
            for piv, row in self.rows:
                vec[piv] = -row[f]
            basis.append(vec)
        return basis


class Subspace:
    """A subspace of Q^n held as the unique reduced row echelon basis."""

    __slots__ = ("ambient_dim", "basis_vectors")

    def __init__(self, ambient_dim: int, vectors):
        ech = _Echelon(ambient_dim)
        for v in vectors:
            ech.add(list(v))
        self.ambient_dim = ambient_dim
        self.basis_vectors = tuple(tuple(row) for _, row in ech.rows)

    @classmethod
    def span(cls, ambient_dim, sparse_vectors):
        dense = []
        for sv in sparse_vectors:
            row = [0] * ambient_dim
            for i, c in sv.items():
                row[i] = c
            dense.append(row)
        return cls(ambient_dim, dense)

    @classmethod
    def full(cls, ambient_dim):
        eye = [[1 if i == j else 0 for j in range(ambient_dim)] for i in range(ambient_dim)]
        return cls(ambient_dim, eye)

    @property
    def dim(self) -> int:
        return len(self.basis_vectors)

    def contains_vector(self, vec) -> bool:
        ech = _Echelon(self.ambient_dim)
        for row in self.basis_vectors:
            ech.add(list(row))
        return all(x == 0 for x in ech.reduce(list(vec)))

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(v) for v in other.basis_vectors)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis_vectors == other.basis_vectors
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis_vectors))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of Q^{self.ambient_dim})"


# -- JSON interchange ---------------------------------------------------


def algebra_to_json_dict(alg: KaryAlgebra) -> dict:
    doc = {
        "arity": alg.arity,
        "dim": alg.dim,
        "labels": list(alg.labels),
        "brackets": [
            {"args": list(args), "value": [[c, i] for i, c in sorted(vec.items())]}
            for args, vec in sorted(alg.brackets.items())
        ],
    }
    if alg.weights is not None:
        doc["weights"] = [list(alg.weights[i]) for i in range(alg.dim)]
    return doc


def _parse_coefficient(x) -> Fraction:
    if isinstance(x, bool):
        raise LoadError(f"bad coefficient {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise LoadError(f"bad coefficient {x!r}") from exc
    raise LoadError(f"coefficients must be integers or 'p/q' strings, got {x!r}")


def algebra_from_json_dict(doc: dict) -> KaryAlgebra:
    """Load an algebra document.

    Rational coefficients are accepted and cleared to integers by one
    global scaling of the bracket (multiplying the whole k-linear map by
    a positive constant preserves the Jacobi identity and every rank).
    """
    try:
        arity = int(doc["arity"])
        dim = int(doc["dim"])
        labels = list(doc["labels"])
        raw = doc["brackets"]
    except (KeyError, TypeError) as exc:
        raise LoadError(f"missing or malformed field in algebra document: {exc}")

    parsed = []
    denom = 1
    for item in raw:
        args = tuple(int(a) for a in item["args"])
        if any(a >= b for a, b in zip(args, args[1:])):
            raise LoadError(f"bracket args {list(args)} must be strictly increasing")
        vec = {}
        for pair in item["value"]:
            coeff, idx = pair
            q = _parse_coefficient(coeff)
            if q:
                vec[int(idx)] = vec.get(int(idx), Fraction(0)) + q
        vec = {i: c for i, c in vec.items() if c}
        if not vec:
            raise LoadError(f"bracket {list(args)} has an empty value")
        for c in vec.values():
            denom = lcm(denom, c.denominator)
        parsed.append((args, vec))

    brackets = {}
    for args, vec in parsed:
        if args in brackets:
            raise LoadError(f"duplicate bracket args {list(args)}")
        brackets[args] = {i: int(c * denom) for i, c in vec.items()}

    weights = doc.get("weights")
    if weights is not None:
        if len(weights) != dim:
            raise LoadError(f"expected {dim} weight vectors, got {len(weights)}")
        weights = {i: tuple(int(x) for x in w) for i, w in enumerate(weights)}

    try:
        return KaryAlgebra(arity, dim, labels, brackets, weights)
    except InputError as exc:
        raise LoadError(str(exc)) from exc


def load_algebra(f) -> KaryAlgebra:
    if isinstance(f, (str, bytes)) or hasattr(f, "__fspath__"):
        with open(f, "r", encoding="utf-8") as fh:
            return load_algebra(fh)
    try:
        doc = json.load(f)
    except json.JSONDecodeError as exc:
        raise LoadError(f"not valid JSON: {exc}") from exc
    return algebra_from_json_dict(doc)


def dump_algebra(alg: KaryAlgebra, f) -> None:
    if isinstance(f, (str, bytes)) or hasattr(f, "__fspath__"):
        with open(f, "w", encoding="utf-8") as fh:
            dump_algebra(alg, fh)
        return
    json.dump(algebra_to_json_dict(alg), f, indent=2, sort_keys=True)
    f.write("\n")
