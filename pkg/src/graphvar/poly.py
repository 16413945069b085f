"""Integer multilinear polynomials in edge-slope variables.

A monomial is the bitmask of the edges whose slopes it multiplies, so
``m_F`` for an edge set ``F`` is just ``F``.  Coefficients are Python ints.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping, Sequence

from .errors import NotMultilinearError
from .graph import EdgeSet, Graph, bits


class MultilinearPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[EdgeSet, int] | Iterable[tuple[EdgeSet, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[EdgeSet, int] = {}
        for mono, c in items:
            if mono < 0:
                raise ValueError("monomial masks are nonnegative")
            acc[mono] = acc.get(mono, 0) + c
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}
        self._hash = None

    @classmethod
    def zero(cls) -> MultilinearPoly:
        return cls()

    @classmethod
    def constant(cls, c: int) -> MultilinearPoly:
        return cls({0: c})

    @classmethod
    def variable(cls, edge: int, coeff: int = 1) -> MultilinearPoly:
        return cls({1 << edge: coeff})

    @classmethod
    def monomial(cls, mask: EdgeSet, coeff: int = 1) -> MultilinearPoly:
        return cls({mask: coeff})

    # -- container protocol ---------------------------------------------

    @property
    def terms(self) -> dict[EdgeSet, int]:
        """Monomial -> coefficient, in ascending bitmask order (a copy)."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mono: EdgeSet) -> int:
        return self._terms.get(mono, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultilinearPoly.constant(other)
        return isinstance(other, MultilinearPoly) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return "MultilinearPoly(0)"
        return f"MultilinearPoly({self._terms})"

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: MultilinearPoly) -> MultilinearPoly:
        if isinstance(other, int):
            other = MultilinearPoly.constant(other)
        acc = dict(self._terms)
        for mono, c in other._terms.items():
            acc[mono] = acc.get(mono, 0) + c
        return MultilinearPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> MultilinearPoly:
        return MultilinearPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: MultilinearPoly) -> MultilinearPoly:
        return self + (-other)

    def scale(self, c: int) -> MultilinearPoly:
        return MultilinearPoly({k: c * v for k, v in self._terms.items()})

    def __mul__(self, other: MultilinearPoly | int) -> MultilinearPoly:
        if isinstance(other, int):
            return self.scale(other)
        acc: dict[EdgeSet, int] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                if a & b:
                    raise NotMultilinearError("product repeats a variable")
                acc[a | b] = acc.get(a | b, 0) + ca * cb
        return MultilinearPoly(acc)

    __rmul__ = __mul__

    # -- structure -------------------------------------------------------

    def variables(self) -> EdgeSet:
        out = 0
        for mono in self._terms:
            out |= mono
        return out

    def degree(self) -> int:
        return max((m.bit_count() for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({m.bit_count() for m in self._terms}) <= 1

    def normalized(self) -> MultilinearPoly:
        """The sign representative whose smallest monomial has a positive coefficient."""
        if not self._terms:
            return self
        first = next(iter(self._terms.values()))
        return self if first > 0 else -self

    def equal_up_to_sign(self, other: MultilinearPoly) -> bool:
        return self.normalized() == other.normalized()

    def lift(self, mapping: Sequence[int]) -> MultilinearPoly:
        """Rename variable ``k`` to ``mapping[k]``."""
        out = {}
        for mono, c in self._terms.items():
            new = 0
            for k in bits(mono):
                new |= 1 << mapping[k]
            out[new] = c
        return MultilinearPoly(out)

    def evaluate(self, values: Sequence[int], prime: int | None = None) -> int:
        """Value at ``m_k = values[k]``, reduced mod ``prime`` when given."""
        total = 0
        if prime is None:
            for mono, c in self._terms.items():
                t = c
                for k in bits(mono):
                    t *= values[k]
                total += t
            return total
        for mono, c in self._terms.items():
            t = c
            for k in bits(mono):
                t = t * values[k] % prime
            total += t
        return total % prime

    # -- rendering -------------------------------------------------------

    def to_dict(self, g: Graph) -> dict:
        return {
            "terms": [
                {"edges": [list(e) for e in g.edge_ids(mono)], "coeff": c}
                for mono, c in self._terms.items()
            ]
        }

    def to_json(self, g: Graph) -> str:
        return json.dumps(self.to_dict(g), separators=(",", ":"))

    @classmethod
    def from_dict(cls, g: Graph, data: Mapping) -> MultilinearPoly:
        return cls((g.mask(t["edges"]), int(t["coeff"])) for t in data["terms"])

    @classmethod
    def from_json(cls, g: Graph, text: str) -> MultilinearPoly:
        return cls.from_dict(g, json.loads(text))

    def pretty(self, g: Graph) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (mono, c) in enumerate(self._terms.items()):
            names = "*".join(f"m_{{{g.edge_label(k)}}}" for k in bits(mono))
            mag = abs(c)
            if not names:
                body = str(mag)
            elif mag == 1:
                body = names
            else:
                body = f"{mag}*{names}"
            if idx == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def poly_add(a: MultilinearPoly, b: MultilinearPoly) -> MultilinearPoly:
    return a + b


def poly_mul(a: MultilinearPoly, b: MultilinearPoly) -> MultilinearPoly:
    """Product in the squarefree ring; raises NotMultilinearError on a repeated variable."""
    return a * b
