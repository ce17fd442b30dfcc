"""h*-vectors, Ehrhart values and the symmetric a/b decomposition.

Everything here is exact integer arithmetic.  An h*-vector of a
d-dimensional polytope is stored with all d + 1 coefficients, trailing
zeros included; the degree ``s`` and codegree ``l = d + 1 - s`` are derived.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Sequence


class InvalidVector(ValueError):
    """Raised for malformed h*-vectors or inconsistent decompositions."""


def parse_int_list(text: str) -> list[int]:
    """Parse ``"1,2,3"`` (whitespace tolerated) into a list of ints."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise InvalidVector(f"malformed integer list: {text!r}")
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise InvalidVector(f"malformed integer list: {text!r}") from exc


@dataclass(frozen=True)
class HStarVector:
    d: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if self.d < 1:
            raise InvalidVector(f"dimension must be positive, got {self.d}")
        if len(coeffs) != self.d + 1:
            raise InvalidVector(
                f"expected {self.d + 1} coefficients for d={self.d}, got {len(coeffs)}")
        if coeffs[0] != 1:
            raise InvalidVector("h*_0 must equal 1")
        if any(c < 0 for c in coeffs):
            raise InvalidVector("h*-coefficients must be non-negative")

    @classmethod
    def of(cls, coeffs: Sequence[int]) -> "HStarVector":
        """Build from a full coefficient list; the dimension is ``len - 1``."""
        return cls(len(coeffs) - 1, tuple(coeffs))

    @classmethod
    def parse(cls, text: str) -> "HStarVector":
        return cls.of(parse_int_list(text))

    @classmethod
    def from_json(cls, payload: str | dict) -> "HStarVector":
        data = json.loads(payload) if isinstance(payload, str) else payload
        return cls(int(data["d"]), tuple(data["coeffs"]))

    def to_json(self) -> dict:
        return {"d": self.d, "coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    @property
    def degree(self) -> int:
        return max(i for i, c in enumerate(self.coeffs) if c != 0)

    @property
    def codegree(self) -> int:
        return self.d + 1 - self.degree

    @property
    def has_interior_point(self) -> bool:
        return self.coeffs[-1] > 0

    @property
    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


@dataclass(frozen=True)
class ABDecomposition:
    """Palindromic pair with ``(1 + ... + t^(l-1)) h*(t) = a(t) + t^l b(t)``."""

    d: int
    s: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.a) != self.d + 1 or len(self.b) != self.s:
            raise InvalidVector("a must have d + 1 entries and b exactly s entries")
        if not 0 <= self.s <= self.d:
            raise InvalidVector(f"degree {self.s} out of range for d={self.d}")

    @property
    def l(self) -> int:  # noqa: E743
        return self.d + 1 - self.s

    def is_palindromic(self) -> bool:
        return self.a == self.a[::-1] and self.b == self.b[::-1]

    def to_json(self) -> dict:
        return {"d": self.d, "s": self.s, "a": list(self.a), "b": list(self.b)}


def degree_codegree(h: HStarVector) -> tuple[int, int]:
    return h.degree, h.codegree


def decompose(h: HStarVector) -> ABDecomposition:
    d, s = h.d, h.degree
    c = h.coeffs
    prefix = [0]
    for x in c:
        prefix.append(prefix[-1] + x)

    def block(lo: int, hi: int) -> int:
        # sum of c[lo..hi], empty when hi < lo
        return prefix[hi + 1] - prefix[lo] if hi >= lo else 0

    a = tuple(block(0, k) - block(d - k + 1, d) for k in range(d + 1))
    b = tuple(-block(0, i) + block(s - i, s) for i in range(s))
    return ABDecomposition(d, s, a, b)


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def recompose(ab: ABDecomposition) -> HStarVector:
    """Invert :func:`decompose`; raises :class:`InvalidVector` if inconsistent."""
    d, s, l = ab.d, ab.s, ab.l
    total = list(ab.a)  # l + s = d + 1, so t^l b(t) fits in degree <= d
    for i, x in enumerate(ab.b):
        total[l + i] += x
    # long division by 1 + t + ... + t^(l-1): h_k = c_k - (h_{k-1} + ... + h_{k-l+1})
    h: list[int] = []
    for k in range(d + 1):
        h.append(total[k] - sum(h[max(0, k - l + 1):k]))
    if _poly_mul(h, [1] * l) != total + [0] * (l - 1):
        raise InvalidVector("a(t) + t^l b(t) is not divisible by 1 + t + ... + t^(l-1)")
    try:
        vec = HStarVector(d, tuple(h))
    except InvalidVector as exc:
        raise InvalidVector(f"decomposition does not come from an h*-vector: {exc}") from exc
    if vec.degree != s:
        raise InvalidVector(f"recomposed vector has degree {vec.degree}, expected {s}")
    if decompose(vec) != ab:
        raise InvalidVector("a and b are not the symmetric decomposition of any h*-vector")
    return vec


def ehrhart_values(h: HStarVector, m_max: int) -> list[int]:
    """Lattice point counts f_P(0), ..., f_P(m_max) read off from h*."""
    d = h.d
    return [sum(c * comb(m + d - i, d) for i, c in enumerate(h.coeffs) if m + d - i >= 0)
            for m in range(m_max + 1)]


def hstar_from_values(values: Sequence[int], d: int) -> list[int]:
    """Coefficients of ``(1 - t)^(d+1) * sum f(m) t^m`` up to degree ``len(values) - 1``."""
    return [sum((-1) ** j * comb(d + 1, j) * values[k - j] for j in range(min(k, d + 1) + 1))
            for k in range(len(values))]
