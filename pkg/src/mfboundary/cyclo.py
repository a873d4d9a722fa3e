"""Exact products of cyclotomic polynomials with integer exponents.

Every characteristic polynomial handled by this package is a ratio of
products of factors ``t^k - 1``.  Since ``t^k - 1 = prod_{d | k} Phi_d(t)``,
storing the exponent of each cyclotomic polynomial ``Phi_d`` makes
multiplication and division exact: a :class:`CycloPoly` is the formal product
``prod_d Phi_d(t)^{e_d}`` with ``e_d`` in ``Z``.  The multiplicity of the
eigenvalue 1 is the exponent of ``Phi_1 = t - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping


class CycloError(ValueError):
    pass


def _divisors(k: int) -> list[int]:
    out = [d for d in range(1, k + 1) if k % d == 0]
    return out


def _euler_phi(d: int) -> int:
    out = d
    n = d
    p = 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    a = list(a)
    q = [0] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        coef, rem = divmod(a[-1], b[-1])
        if rem:
            raise CycloError("non-exact polynomial division")
        q[shift] = coef
        for i, y in enumerate(b):
            a[shift + i] -= coef * y
        a.pop()
    return q, a


@lru_cache(maxsize=None)
def cyclotomic_coeffs(d: int) -> tuple[int, ...]:
    """Integer coefficients of ``Phi_d``, low degree first."""
    num = [-1] + [0] * (d - 1) + [1]  # t^d - 1
    for dd in _divisors(d):
        if dd == d:
            continue
        num, rem = _poly_divmod(num, list(cyclotomic_coeffs(dd)))
        if any(rem):
            raise CycloError("cyclotomic division left a remainder")
    return tuple(num)


@dataclass(frozen=True)
class CycloPoly:
    """``prod_d Phi_d(t)^{e_d}`` with integer (possibly negative) exponents."""

    exps: tuple[tuple[int, int], ...]  # sorted (d, e_d), e_d != 0

    @staticmethod
    def from_dict(d: Mapping[int, int]) -> "CycloPoly":
        items = tuple(sorted((k, v) for k, v in d.items() if v != 0))
        for k, _ in items:
            if k < 1:
                raise CycloError("cyclotomic index must be >= 1")
        return CycloPoly(items)

    @staticmethod
    def one() -> "CycloPoly":
        return CycloPoly(())

    @staticmethod
    def t_minus_1(power: int = 1) -> "CycloPoly":
        return CycloPoly.from_dict({1: power})

    @staticmethod
    def tk_minus_1(k: int, power: int = 1) -> "CycloPoly":
        """``(t^k - 1)^power`` via the divisor lattice."""
        if k < 1:
            raise CycloError("k must be >= 1")
        return CycloPoly.from_dict({d: power for d in _divisors(k)})

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    def __mul__(self, other: "CycloPoly") -> "CycloPoly":
        d = self.as_dict()
        for k, v in other.exps:
            d[k] = d.get(k, 0) + v
        return CycloPoly.from_dict(d)

    def __truediv__(self, other: "CycloPoly") -> "CycloPoly":
        d = self.as_dict()
        for k, v in other.exps:
            d[k] = d.get(k, 0) - v
        return CycloPoly.from_dict(d)

    def __pow__(self, n: int) -> "CycloPoly":
        return CycloPoly.from_dict({k: v * n for k, v in self.exps})

    @property
    def degree(self) -> int:
        return sum(e * _euler_phi(d) for d, e in self.exps)

    @property
    def is_polynomial(self) -> bool:
        return all(e >= 0 for _, e in self.exps)

    def multiplicity_of_one(self) -> int:
        """Exponent of ``t - 1``."""
        return self.as_dict().get(1, 0)

    def tk_factors(self) -> dict[int, int]:
        """Rewrite as ``prod_k (t^k - 1)^{c_k}`` (exponents by Moebius inversion)."""
        e = self.as_dict()
        out: dict[int, int] = {}
        for d in sorted(e, reverse=True):
            c = e.get(d, 0) - sum(v for k, v in out.items() if k % d == 0)
            if c:
                out[d] = c
        return dict(sorted(out.items()))

    def format_tk(self) -> str:
        """Human form like ``(t-1)^7 (t^3-1)^4``; ``1`` for the empty product."""
        parts = []
        for k, c in self.tk_factors().items():
            base = "(t-1)" if k == 1 else f"(t^{k}-1)"
            parts.append(base if c == 1 else f"{base}^{c}")
        return " ".join(parts) if parts else "1"

    def expand(self) -> tuple[int, ...]:
        """Exact coefficients (low degree first); requires all exponents >= 0."""
        if not self.is_polynomial:
            raise CycloError("cannot expand: negative exponent present")
        out = [1]
        for d, e in self.exps:
            f = list(cyclotomic_coeffs(d))
            for _ in range(e):
                out = _poly_mul(out, f)
        return tuple(out)


def cyclo_expand(p: CycloPoly) -> tuple[int, ...]:
    return p.expand()
