"""Exact arithmetic in the group algebra A(S_n).

An AlgebraElement is a finite formal sum of permutations with exact
rational coefficients (Fractions).  On top of the ring operations this
module builds (anti)symmetrizers, Young operators Y_T, their Hermitian
counterparts P_T, the *-involution, trace polynomials in the tensor
dimension N, and the algebraic partial trace over the last slot.

Partial traces produce elements whose coefficients are Polynomials in N
(a fixed point of the last slot contributes a factor N); the same
AlgebraElement class carries them, and all identities remain exact.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Mapping, Union

from .config import DEFAULT_SCAN_MAX_N, SizeLimitError, check_tableau_size
from .permutations import (
    Perm,
    all_permutations,
    check_perm,
    compose,
    cycle_count,
    cycle_type,
    cycles,
    identity,
    inverse,
    embed as embed_perm,
    perms_of,
    sign,
    transposition,
)
from .polynomial import Polynomial
from .tableaux import YoungTableau

__all__ = [
    "AlgebraElement",
    "TracePolynomial",
    "Perm",
    "all_permutations",
    "compose",
    "cycle_count",
    "cycle_type",
    "cycles",
    "identity",
    "inverse",
    "sign",
    "transposition",
    "embed_element",
    "symmetrizer",
    "antisymmetrizer",
    "symmetrizer_recursion_check",
    "young_operator",
    "hermitian_young",
    "primitivity_check",
    "inequivalence_check",
]

# Trace of an element is a polynomial in the tensor dimension N.
TracePolynomial = Polynomial

Coeff = Union[Fraction, Polynomial]
Scalar = Union[int, Fraction, Polynomial]


def _as_coeff(c: Scalar) -> Coeff:
    if isinstance(c, (Fraction, Polynomial)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"bad coefficient type {type(c).__name__}")


class AlgebraElement:
    """Sparse formal sum sum_sigma c_sigma * sigma over S_n.

    Terms with zero coefficient are never stored, so equality is plain
    structural equality of the term maps.  Instances are treated as
    immutable values; nothing mutates `terms` after construction.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Perm, Scalar] = ()):
        if n < 1:
            raise ValueError(f"degree must be positive, got {n}")
        self.n = n
        clean: dict[Perm, Coeff] = {}
        for p, c in dict(terms).items():
            if len(p) != n:
                raise ValueError(f"permutation {p} has degree {len(p)}, expected {n}")
            c = _as_coeff(c)
            if c:
                clean[check_perm(p)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        """The identity permutation with coefficient 1."""
        return cls(n, {identity(n): Fraction(1)})

    @classmethod
    def from_perm(cls, p: Perm, coeff: Scalar = 1) -> "AlgebraElement":
        return cls(len(p), {tuple(p): coeff})

    # -- basic structure ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: Perm) -> Coeff:
        return self.terms.get(tuple(p), Fraction(0))

    def sorted_terms(self) -> list[tuple[Perm, Coeff]]:
        """Terms sorted by one-line form (the canonical order)."""
        return sorted(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def _check_degree(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_degree(other)
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, Fraction(0)) + c
        return AlgebraElement(self.n, terms)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {p: -c for p, c in self.terms.items()})

    def scale(self, c: Scalar) -> "AlgebraElement":
        c = _as_coeff(c)
        return AlgebraElement(self.n, {p: c * cp for p, cp in self.terms.items()})

    def __mul__(self, other: "AlgebraElement | Scalar") -> "AlgebraElement":
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check_degree(other)
        if _all_rational(self) and _all_rational(other):
            return AlgebraElement(self.n, _product_terms_fast(self.terms, other.terms))
        acc: dict[Perm, Coeff] = {}
        for pa, ca in self.terms.items():
            for pb, cb in other.terms.items():
                key = tuple(pa[x - 1] for x in pb)  # apply pb first
                acc[key] = acc.get(key, Fraction(0)) + ca * cb
        return AlgebraElement(self.n, acc)

    def __rmul__(self, other: Scalar) -> "AlgebraElement":
        if isinstance(other, (int, Fraction, Polynomial)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other: Union[int, Fraction]) -> "AlgebraElement":
        return self.scale(Fraction(1, 1) / other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        # Subtraction tolerates Fraction-vs-Polynomial coefficient mixes.
        return self.n == other.n and (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"AlgebraElement({self.n}, {dict(self.sorted_terms())!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{p}" for p, c in self.sorted_terms())

    # -- involution, traces ---------------------------------------------------

    def involution(self) -> "AlgebraElement":
        """The *-map sum c_sigma sigma -> sum c_sigma sigma^(-1).

        With real (rational) coefficients this realizes the operator
        adjoint, because every permutation acts as a real orthogonal
        matrix on tensor space.
        """
        return AlgebraElement(self.n, {inverse(p): c for p, c in self.terms.items()})

    def trace_polynomial(self) -> Polynomial:
        """Trace on (C^N)^(x n) as a polynomial in N.

        A permutation traces to N**(number of cycles, fixed points
        included), so the trace of the element is sum c_sigma N^cycles.
        """
        out = Polynomial.zero()
        for p, c in self.terms.items():
            out = out + Polynomial.monomial(cycle_count(p)) * c
        return out

    def partial_trace(self) -> "AlgebraElement":
        """Contract the last tensor slot, landing in degree n-1.

        Term by term: a permutation fixing n restricts to 1..n-1 and
        picks up a factor N (a closed loop); otherwise n is spliced out
        of its cycle, sigma'(sigma^(-1)(n)) := sigma(n), with no factor.
        Coefficients of the result are Polynomials in N.
        """
        if self.n < 2:
            raise ValueError("partial trace requires degree >= 2")
        N = Polynomial.monomial(1)
        acc: dict[Perm, Coeff] = {}
        for p, c in self.terms.items():
            if p[-1] == self.n:
                key = p[:-1]
                contrib = N * c
            else:
                key = tuple(p[x - 1] if p[x - 1] != self.n else p[-1]
                            for x in range(1, self.n))
                contrib = Polynomial([c]) if isinstance(c, Fraction) else c
            acc[key] = acc.get(key, Fraction(0)) + contrib
        return AlgebraElement(self.n - 1, acc)

    def evaluate(self, N: Union[int, Fraction]) -> "AlgebraElement":
        """Substitute a concrete N into any polynomial coefficients."""
        terms = {
            p: (c(N) if isinstance(c, Polynomial) else c)
            for p, c in self.terms.items()
        }
        return AlgebraElement(self.n, terms)

    # -- JSON wire format ----------------------------------------------------

    def to_dict(self) -> dict:
        """{"n":3,"terms":[{"perm":[2,1,3],"coeff":"1/3"},...]}, terms
        sorted by one-line form.  Only rational coefficients serialize."""
        terms = []
        for p, c in self.sorted_terms():
            if not isinstance(c, Fraction):
                raise TypeError("only rational coefficients have a JSON form")
            terms.append({"perm": list(p), "coeff": str(c)})
        return {"n": self.n, "terms": terms}

    @classmethod
    def from_dict(cls, data: Mapping) -> "AlgebraElement":
        terms = {
            tuple(t["perm"]): Fraction(t["coeff"]) for t in data["terms"]
        }
        return cls(int(data["n"]), terms)


def _all_rational(a: AlgebraElement) -> bool:
    return all(isinstance(c, Fraction) for c in a.terms.values())


def _product_terms_fast(a: Mapping[Perm, Fraction],
                        b: Mapping[Perm, Fraction]) -> dict[Perm, Fraction]:
    """Convolution product over cleared denominators.

    Both factors are scaled to integer coefficients so the inner loop is
    pure int arithmetic; the combined denominator is divided back out at
    the end.  Orders of magnitude faster than Fraction accumulation on
    the n=5 all-pairs scans.
    """
    den_a = lcm(*(c.denominator for c in a.values())) if a else 1
    den_b = lcm(*(c.denominator for c in b.values())) if b else 1
    ints_a = [(p, int(c * den_a)) for p, c in a.items()]
    ints_b = [(p, int(c * den_b)) for p, c in b.items()]
    acc: dict[Perm, int] = {}
    get = acc.get
    for pa, ca in ints_a:
        for pb, cb in ints_b:
            key = tuple(pa[x - 1] for x in pb)  # apply pb first
            acc[key] = get(key, 0) + ca * cb
    den = den_a * den_b
    return {p: Fraction(v, den) for p, v in acc.items() if v}


def embed_element(a: AlgebraElement, n: int) -> AlgebraElement:
    """Include A(S_m) into A(S_n), m <= n, fixing the trailing slots
    m+1, ..., n (tensoring with the identity on the right)."""
    if n < a.n:
        raise ValueError(f"cannot embed degree {a.n} into degree {n}")
    if n == a.n:
        return a
    return AlgebraElement(n, {embed_perm(p, n): c for p, c in a.terms.items()})


# -- symmetrizers ------------------------------------------------------------


def _subset_sum(slots: Iterable[int], n: int, signed: bool) -> AlgebraElement:
    vals = sorted(set(slots))
    if not vals:
        raise ValueError("slot subset must be nonempty")
    if vals[0] < 1 or vals[-1] > n:
        raise ValueError(f"slots {vals} outside 1..{n}")
    terms: dict[Perm, Fraction] = {}
    count = 0
    for p in perms_of(vals, n):
        count += 1
        terms[p] = Fraction(sign(p) if signed else 1)
    norm = Fraction(1, count)
    return AlgebraElement(n, {p: c * norm for p, c in terms.items()})


def symmetrizer(slots: Iterable[int], n: int) -> AlgebraElement:
    """(1/k!) sum of all permutations of the given k slots inside S_n."""
    return _subset_sum(slots, n, signed=False)


def antisymmetrizer(slots: Iterable[int], n: int) -> AlgebraElement:
    """(1/k!) signed sum of all permutations of the given slots."""
    return _subset_sum(slots, n, signed=True)


def symmetrizer_recursion_check(k: int) -> bool:
    """Exact check of the symmetrizer recursions over S_k:

        S(1..k) = (1/k) S(2..k) + ((k-1)/k) S(2..k) t12 S(2..k)
        A(1..k) = (1/k) A(2..k) - ((k-1)/k) A(2..k) t12 A(2..k)

    Returns True iff both hold as AlgebraElement identities.
    """
    if k < 2:
        raise ValueError(f"recursion needs k >= 2, got {k}")
    rest = range(2, k + 1)
    t12 = AlgebraElement.from_perm(transposition(k, 1, 2))
    s_rest = symmetrizer(rest, k)
    sym_ok = symmetrizer(range(1, k + 1), k) == (
        s_rest / k + Fraction(k - 1, k) * (s_rest * t12 * s_rest)
    )
    a_rest = antisymmetrizer(rest, k)
    anti_ok = antisymmetrizer(range(1, k + 1), k) == (
        a_rest / k - Fraction(k - 1, k) * (a_rest * t12 * a_rest)
    )
    return sym_ok and anti_ok


# -- Young operators ----------------------------------------------------------


def _tableau_columns(t: YoungTableau) -> list[list[int]]:
    cols: list[list[int]] = [[] for _ in range(len(t.rows[0]))]
    for row in t.rows:
        for k, x in enumerate(row):
            cols[k].append(x)
    return cols


def young_operator(t: YoungTableau, *, allow_nonstandard: bool = False,
                   max_n: int | None = None) -> AlgebraElement:
    """The Young operator Y_T = (1/|T|) s_T a_T.

    s_T sums all permutations preserving each row of T; a_T sums, with
    sign, all permutations preserving each column; |T| is the hook
    product of the shape.  The product convention applies a_T first.
    Y_T is a primitive idempotent of A(S_n).

    Non-standard (but bijective) fillings are rejected unless
    allow_nonstandard is set, since nearly every identity in this
    package is about standard tableaux.
    """
    n = t.n
    check_tableau_size(n, max_n)
    if not (allow_nonstandard or t.is_standard()):
        raise ValueError(f"tableau {t} is not standard "
                         "(pass allow_nonstandard=True to force)")
    s = AlgebraElement.one(n)
    for row in t.rows:
        if len(row) > 1:
            s = s * symmetrizer(row, n)
    a = AlgebraElement.one(n)
    for col in _tableau_columns(t):
        if len(col) > 1:
            a = a * antisymmetrizer(col, n)
    # The normalized subset operators above carry 1/(row!) and 1/(col!)
    # factors; rescale so the total prefactor is exactly 1/hook_product.
    norm = 1
    for row in t.rows:
        norm *= factorial(len(row))
    for col in _tableau_columns(t):
        norm *= factorial(len(col))
    return (s * a).scale(Fraction(norm, t.shape.hook_product()))


# Hermitian operators reuse parents across all of SYT_n, so memoize on
# the tableau's row tuple.  Concurrent inserts are idempotent: the same
# key always maps to the same value.
_HERMITIAN_CACHE: dict[tuple[tuple[int, ...], ...], AlgebraElement] = {}


def hermitian_young(t: YoungTableau, *, max_n: int | None = None) -> AlgebraElement:
    """The Hermitian Young operator P_T.

    Defined recursively: P_T = Y_T for n <= 2 (and the identity element
    for the single-box tableau, forced by completeness), and

        P_T = embed(P_T') * Y_T * embed(P_T')

    for n >= 3, where T' is T with the box containing n removed and the
    embedding fixes slot n.  P_T is an idempotent, invariant under the
    *-involution, with the same trace as Y_T, and the P_T over all
    standard tableaux of n boxes are mutually transversal and sum to
    the identity.
    """
    n = t.n
    check_tableau_size(n, max_n)
    if not t.is_standard():
        raise ValueError(f"tableau {t} is not standard")
    key = t.rows
    cached = _HERMITIAN_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 1:
        result = AlgebraElement.one(1)
    elif n == 2:
        result = young_operator(t, max_n=max_n)
    else:
        parent, _, _ = t.parent()
        wings = embed_element(hermitian_young(parent, max_n=max_n), n)
        result = wings * young_operator(t, max_n=max_n) * wings
    _HERMITIAN_CACHE[key] = result
    return result


# -- idempotent diagnostics ----------------------------------------------------


def _require_idempotent(e: AlgebraElement, name: str) -> None:
    if e.is_zero():
        raise ValueError(f"{name} is zero")
    if e * e != e:
        raise ValueError(f"{name} is not idempotent")


def _check_scan_size(n: int, max_n: int | None) -> None:
    cap = DEFAULT_SCAN_MAX_N if max_n is None else max_n
    if n > cap:
        raise SizeLimitError(
            f"scanning all {n}! permutations exceeds the cap {cap}; "
            "pass max_n to override")


def primitivity_check(e: AlgebraElement, *, max_n: int | None = None) -> bool:
    """True iff e*sigma*e is a scalar multiple of e for every sigma.

    By linearity this spans all r in A(S_n), which characterizes
    primitive idempotents.  Exhaustive over n! permutations, so capped.
    """
    _check_scan_size(e.n, max_n)
    _require_idempotent(e, "e")
    for p in all_permutations(e.n):
        x = e * AlgebraElement.from_perm(p) * e
        if x.is_zero():
            continue
        p0, c0 = next(iter(x.terms.items()))
        ce = e.terms.get(p0)
        if ce is None or x != e.scale(c0 / ce):
            return False
    return True


def inequivalence_check(e1: AlgebraElement, e2: AlgebraElement, *,
                        max_n: int | None = None) -> bool:
    """True iff e1*sigma*e2 = 0 for every sigma (the idempotents then
    project onto inequivalent representations)."""
    e1._check_degree(e2)
    _check_scan_size(e1.n, max_n)
    _require_idempotent(e1, "e1")
    _require_idempotent(e2, "e2")
    for p in all_permutations(e1.n):
        if not (e1 * AlgebraElement.from_perm(p) * e2).is_zero():
            return False
    return True
