"""Polynomial rings over Q: variable lists and monomial orders."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Sequence

Monomial = tuple[int, ...]

ORDER_KINDS = ("lex", "grlex", "grevlex", "elim")


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class MonOrder:
    """A monomial order.

    ``elim`` is the block order used for elimination: the first ``block``
    variables are compared lexicographically, ties are broken by grevlex on
    the remaining variables.
    """

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 0:
            raise ValueError("elimination block must be nonnegative")

    def __str__(self):
        return self.kind if self.kind != "elim" else f"elim({self.block})"

    def weight_rows(self, n: int) -> list[tuple[int, ...]]:
        """Integer rows W with ``key(e) = W e`` ordered lexicographically.

        Every supported order is a matrix order, so keys are linear in the
        exponent vector: ``key(m * u) = key(m) + key(u)``.
        """

        def unit(i, s=1):
            return tuple(s if j == i else 0 for j in range(n))

        if self.kind == "lex":
            return [unit(i) for i in range(n)]
        if self.kind == "grlex":
            return [(1,) * n] + [unit(i) for i in range(n)]
        if self.kind == "grevlex":
            return [(1,) * n] + [unit(i, -1) for i in range(n - 1, -1, -1)]
        k = min(self.block, n)
        rows = [unit(i) for i in range(k)]
        if k < n:
            rows.append(tuple(0 if j < k else 1 for j in range(n)))
            rows.extend(unit(i, -1) for i in range(n - 1, k - 1, -1))
        return rows

    def key(self, m: Monomial) -> tuple[int, ...]:
        n = len(m)
        if self.kind == "lex":
            return m
        if self.kind == "grlex":
            return (sum(m),) + m
        if self.kind == "grevlex":
            return (sum(m),) + tuple(-e for e in reversed(m))
        k = min(self.block, n)
        rest = m[k:]
        return m[:k] + (sum(rest),) + tuple(-e for e in reversed(rest))


GREVLEX = MonOrder("grevlex")
LEX = MonOrder("lex")


def as_order(order: MonOrder | str) -> MonOrder:
    return order if isinstance(order, MonOrder) else MonOrder(order)


@dataclass(frozen=True)
class RingSpec:
    """Q[vars] with an active monomial order; precedence is list order."""

    variables: tuple[str, ...]
    order: MonOrder = GREVLEX

    def __init__(self, variables: Sequence[str], order: MonOrder | str = GREVLEX):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be unique")
        for v in variables:
            if not v or not (v[0].isalpha() or v[0] == "_") or not all(ch.isalnum() or ch == "_" for ch in v):
                raise ValueError(f"invalid variable name {v!r}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "order", as_order(order))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def with_order(self, order: MonOrder | str) -> "RingSpec":
        return RingSpec(self.variables, order)

    def one(self) -> Monomial:
        return (0,) * self.nvars

    def to_json(self) -> dict:
        return {"vars": list(self.variables), "order": str(self.order)}

    @classmethod
    def from_json(cls, data: dict | str) -> "RingSpec":
        if isinstance(data, str):
            data = json.loads(data)
        order = data.get("order", "grevlex")
        if order not in ("lex", "grlex", "grevlex"):
            raise ValueError(f"unsupported order in ring file: {order!r}")
        return cls(data["vars"], order)

    def __str__(self):
        return f"Q[{','.join(self.variables)}]/{self.order}"


def mon_cmp(a: Monomial, b: Monomial, order: MonOrder | str = GREVLEX) -> Cmp:
    if len(a) != len(b):
        raise ValueError("monomials from different rings")
    order = as_order(order)
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return Cmp.EQ
    return Cmp.GT if ka > kb else Cmp.LT


def mon_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mon_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))
