"""Multilinear pseudo-Boolean polynomials, the intermediate representation of the pipeline.

A polynomial is a finite sum ``c_m * prod(x_i for i in m)`` over monomials ``m``,
where each monomial is a strictly ascending tuple of variable indices (the empty
tuple is the constant term) and every variable takes values in {0, 1}.
Idempotence ``x*x = x`` is applied on construction, so the representation is
canonical: two polynomials are mathematically equal iff their term maps are equal.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from types import MappingProxyType

from .errors import MissingVariableError

#: Coefficients with absolute value below this are dropped during normalization.
EPS = 1e-12

Monomial = tuple[int, ...]


def _canonical_monomial(vars_: Iterable[int]) -> Monomial:
    """Sort, deduplicate and validate a collection of variable indices."""
    m = tuple(sorted(set(vars_)))
    if m and m[0] < 0:
        raise ValueError(f"negative variable index in monomial: {m}")
    return m


class PseudoBooleanPolynomial:
    """Immutable multilinear polynomial over binary variables.

    Supports ``+``, ``-``, ``*`` (with polynomials or scalars). All operations
    return normalized values: no zero coefficients, at most one term per monomial.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, float] | None = None, *, _trusted: bool = False):
        if terms is None:
            self._terms: dict[Monomial, float] = {}
        elif _trusted:
            # internal constructor: keys already canonical, coefficients pre-filtered
            self._terms = dict(terms)
        else:
            acc: dict[Monomial, float] = {}
            for mono, coeff in terms.items():
                m = _canonical_monomial(mono)
                acc[m] = acc.get(m, 0.0) + float(coeff)
            self._terms = {m: c for m, c in acc.items() if abs(c) >= EPS}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> PseudoBooleanPolynomial:
        return cls()

    @classmethod
    def constant(cls, c: float) -> PseudoBooleanPolynomial:
        return cls({(): float(c)})

    @classmethod
    def variable(cls, index: int) -> PseudoBooleanPolynomial:
        if index < 0:
            raise ValueError(f"variable index must be non-negative, got {index}")
        return cls({(index,): 1.0}, _trusted=True)

    # -- accessors ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, float]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> int:
        """Maximum monomial length; 0 for constants and the zero polynomial."""
        return max((len(m) for m in self._terms), default=0)

    def variables(self) -> set[int]:
        """All variable indices appearing in some term."""
        out: set[int] = set()
        for m in self._terms:
            out.update(m)
        return out

    def coefficient(self, mono: Iterable[int]) -> float:
        return self._terms.get(_canonical_monomial(mono), 0.0)

    @property
    def offset(self) -> float:
        """The constant term."""
        return self._terms.get((), 0.0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PseudoBooleanPolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, float)):
            return self == PseudoBooleanPolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: PseudoBooleanPolynomial | float) -> PseudoBooleanPolynomial:
        other = _as_poly(other)
        big, small = (self._terms, other._terms) if len(self._terms) >= len(other._terms) else (other._terms, self._terms)
        acc = dict(big)
        for m, c in small.items():
            acc[m] = acc.get(m, 0.0) + c
        return PseudoBooleanPolynomial(
            {m: c for m, c in acc.items() if abs(c) >= EPS}, _trusted=True
        )

    __radd__ = __add__

    def __neg__(self) -> PseudoBooleanPolynomial:
        return PseudoBooleanPolynomial({m: -c for m, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other: PseudoBooleanPolynomial | float) -> PseudoBooleanPolynomial:
        return self + (-_as_poly(other))

    def __rsub__(self, other: float) -> PseudoBooleanPolynomial:
        return _as_poly(other) + (-self)

    def __mul__(self, other: PseudoBooleanPolynomial | float) -> PseudoBooleanPolynomial:
        if isinstance(other, (int, float)):
            return self.scale(other)
        acc: dict[Monomial, float] = {}
        for m1, c1 in self._terms.items():
            s1 = set(m1)
            for m2, c2 in other._terms.items():
                # idempotence: union of index sets
                m = m1 if not m2 else (m2 if not m1 else tuple(sorted(s1 | set(m2))))
                acc[m] = acc.get(m, 0.0) + c1 * c2
        return PseudoBooleanPolynomial(
            {m: c for m, c in acc.items() if abs(c) >= EPS}, _trusted=True
        )

    def __rmul__(self, other: float) -> PseudoBooleanPolynomial:
        return self.scale(other)

    def scale(self, c: float) -> PseudoBooleanPolynomial:
        c = float(c)
        return PseudoBooleanPolynomial(
            {m: v * c for m, v in self._terms.items() if abs(v * c) >= EPS}, _trusted=True
        )

    # -- evaluation --------------------------------------------------------

    def evaluate(self, assignment) -> float:
        """Evaluate on a binary assignment indexed by variable index.

        `assignment` may be any indexable object (sequence or mapping). Raises
        MissingVariableError if a variable of the polynomial has no entry.
        """
        total = 0.0
        for m, c in self._terms.items():
            prod = c
            for i in m:
                try:
                    v = assignment[i]
                except (IndexError, KeyError):
                    raise MissingVariableError(
                        f"assignment does not cover variable x{i}"
                    ) from None
                if not v:
                    prod = 0.0
                    break
                prod *= v
            total += prod
        return total

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Text form with terms sorted by (degree, monomial), e.g. ``3 - 2*x0 + 1.5*x0*x3``."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for m in sorted(self._terms, key=lambda m: (len(m), m)):
            c = self._terms[m]
            body = "*".join(f"x{i}" for i in m)
            mag = _format_coefficient(abs(c))
            if not m:
                text = mag
            elif mag == "1":
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(text if c >= 0 else f"-{text}")
            else:
                parts.append(f"{'+' if c >= 0 else '-'} {text}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PseudoBooleanPolynomial({self.render()})"


def _as_poly(value: PseudoBooleanPolynomial | float) -> PseudoBooleanPolynomial:
    if isinstance(value, PseudoBooleanPolynomial):
        return value
    return PseudoBooleanPolynomial.constant(value)


def _format_coefficient(c: float) -> str:
    if c == int(c) and abs(c) < 1e16:
        return str(int(c))
    return repr(c)


ZERO = PseudoBooleanPolynomial.zero()
ONE = PseudoBooleanPolynomial.constant(1.0)
