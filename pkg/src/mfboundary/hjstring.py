"""Hirzebruch-Jung continued fractions and decorated strings.

A string ``Str(a, b; c | i, j; k)`` models the minimal resolution of the
normalization of ``{x^a y^b + z^c = 0}`` carrying the multiplicity system of
the germ ``x^i y^j z^k``: a chain of rational vertices whose Euler numbers
are deliberately deleted (they are recomputed after gluing), with one
arrowhead on each end.  ``Str`` carries ``+`` edges, ``Str^-`` the same chain
with every edge decorated ``-``.

The chain is governed by the unique ``0 <= lam < c/(a,c)`` with
``b + lam * a/(a,c) = m1 * c/(a,c)`` and by the negative continued fraction
``c/(a,c) / lam = [k1, ..., ks]``; ``lam = 0`` (in particular whenever
``a = 0`` or ``b = 0``) degenerates the string to a bare double arrow with
no interior vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence


class HJError(ValueError):
    pass


class HJConventionError(HJError):
    """Inputs outside the stated conventions (``a = 0`` with ``c`` not dividing ``b``)."""


def minus_cf(p: int, q: int) -> tuple[int, ...]:
    """Entries ``[k1, ..., ks]``, all >= 2, with ``p/q = k1 - 1/(k2 - ...)``.

    Requires ``0 < q < p`` after reduction by ``gcd(p, q)``.
    """
    if q <= 0 or p <= 0:
        raise HJError("minus_cf needs positive p, q")
    d = gcd(p, q)
    p, q = p // d, q // d
    if q >= p:
        raise HJError(f"minus_cf needs p/q > 1, got {p}/{q}")
    entries: list[int] = []
    while q:
        k = -(-p // q)
        entries.append(k)
        p, q = q, k * q - p
    return tuple(entries)


def hirzebruch_cf(p: int, q: int) -> tuple[int, ...]:
    """Negative continued fraction of ``p/q`` allowing a first entry >= 1."""
    if q <= 0 or p <= 0:
        raise HJError("hirzebruch_cf needs positive p, q")
    d = gcd(p, q)
    p, q = p // d, q // d
    entries: list[int] = []
    while q:
        k = -(-p // q)
        entries.append(k)
        p, q = q, k * q - p
    return tuple(entries)


def cf_value(entries: Sequence[int]) -> Fraction:
    """Exact value of ``k1 - 1/(k2 - ... - 1/ks)``."""
    if not entries:
        raise HJError("cf_value needs at least one entry")
    val: Optional[Fraction] = None
    for k in reversed(entries):
        if val is None:
            val = Fraction(k)
        else:
            if val == 0:
                raise HJError("zero denominator in continued fraction")
            val = Fraction(k) - 1 / val
    assert val is not None
    return val


def hj_lambda(a: int, b: int, c: int) -> tuple[int, int]:
    """The pair ``(lam, m1)`` of the string congruence.

    ``lam`` is the unique solution of ``b + lam * a/(a,c) == 0 (mod c/(a,c))``
    in ``[0, c/(a,c))`` and ``m1 = (b + lam*a/(a,c)) / (c/(a,c))``.
    ``lam = 0`` signals a degenerate (double-arrow) string.
    """
    if c < 1 or a < 0 or b < 0:
        raise HJError("hj_lambda needs c >= 1 and a, b >= 0")
    if a == 0 and b % c != 0:
        raise HJConventionError(f"a = 0 with c = {c} not dividing b = {b}")
    g = gcd(a, c)  # = c when a == 0
    aa = a // g
    cc = c // g
    lam = (-b * pow(aa, -1, cc)) % cc if cc > 1 else 0
    m1 = (b + lam * aa) // cc
    if (b + lam * aa) % cc != 0:
        raise HJError("no solution to the string congruence")
    return lam, m1


@dataclass(frozen=True)
class HJString:
    """A fully decorated string with its three multiplicity systems.

    ``cf_entries`` is empty exactly when the string is degenerate, in which
    case the value is a bare signed double arrow and only the two arrow
    multiplicities are meaningful.  For a non-degenerate string the interior
    multiplicity lists run left to right; ``*_left``/``*_right`` are the
    arrow multiplicities of each system and ``combined_*`` the system of
    ``x^i y^j z^k``.
    """

    a: int
    b: int
    c: int
    i: int
    j: int
    k: int
    sign: int  # +1 for Str, -1 for the minus-decorated string
    lam: int
    cf_entries: tuple[int, ...]
    z_mults: tuple[int, ...]
    x_mults: tuple[int, ...]
    y_mults: tuple[int, ...]
    z_left: int
    z_right: int
    x_left: int
    x_right: int
    y_left: int
    y_right: int

    @property
    def degenerate(self) -> bool:
        return not self.cf_entries

    @property
    def size(self) -> int:
        return len(self.cf_entries)

    @property
    def combined_mults(self) -> tuple[int, ...]:
        return tuple(
            self.i * x + self.j * y + self.k * z
            for x, y, z in zip(self.x_mults, self.y_mults, self.z_mults)
        )

    @property
    def combined_left(self) -> int:
        return self.i * self.x_left + self.j * self.y_left + self.k * self.z_left

    @property
    def combined_right(self) -> int:
        return self.i * self.x_right + self.j * self.y_right + self.k * self.z_right


def _chase(k_entries: Sequence[int], first: int, left: int) -> list[int]:
    """Run ``m_{i+1} = k_i m_i - m_{i-1}`` with ``m_0 = left, m_1 = first``.

    Returns ``[m_1, ..., m_s, m_{s+1}]``; the trailing value is the right
    arrow multiplicity implied by the recursion.
    """
    vals = [first]
    prev = left
    for kk in k_entries:
        nxt = kk * vals[-1] - prev
        prev = vals[-1]
        vals.append(nxt)
    return vals


def hj_string(a: int, b: int, c: int, i: int, j: int, k: int, sign: int = 1) -> HJString:
    """Build ``Str(a,b;c|i,j;k)`` (``sign=+1``) or its minus variant."""
    if sign not in (1, -1):
        raise HJError("sign must be +1 or -1")
    lam, m1 = hj_lambda(a, b, c)
    g_ac = gcd(a, c)
    g_bc = gcd(b, c)
    aa = a // g_ac if a else 0
    cc_a = c // g_ac
    bb = b // g_bc if b else 0
    cc_b = c // g_bc
    if lam == 0:
        return HJString(
            a=a, b=b, c=c, i=i, j=j, k=k, sign=sign,
            lam=0, cf_entries=(),
            z_mults=(), x_mults=(), y_mults=(),
            z_left=aa, z_right=bb,
            x_left=cc_a, x_right=0,
            y_left=0, y_right=cc_b,
        )
    entries = minus_cf(cc_a, lam)
    z_chain = _chase(entries, m1, aa)
    if z_chain[-1] != bb:
        raise HJError("z-multiplicity recursion does not close up")
    x_chain = _chase(entries, lam, cc_a)
    if x_chain[-1] != 0:
        raise HJError("x-multiplicity recursion does not close up")
    if x_chain[-2] != g_bc:
        raise HJError("x-multiplicity end value mismatch")
    # y-system: seeded on the right by the mirrored congruence.
    lam_t = (-a * pow(bb, -1, cc_b)) % cc_b if cc_b > 1 else 0
    if (a + lam_t * bb) % cc_b != 0:
        raise HJError("no solution to the mirrored congruence")
    if z_chain[-2] != (a + lam_t * bb) // cc_b:
        raise HJError("mirrored congruence disagrees with the z recursion")
    y_rev = _chase(tuple(reversed(entries)), lam_t, cc_b)
    if y_rev[-1] != 0:
        raise HJError("y-multiplicity recursion does not close up")
    if y_rev[-2] != g_ac:
        raise HJError("y-multiplicity end value mismatch")
    y_chain = list(reversed(y_rev[:-1]))
    return HJString(
        a=a, b=b, c=c, i=i, j=j, k=k, sign=sign,
        lam=lam, cf_entries=entries,
        z_mults=tuple(z_chain[:-1]),
        x_mults=tuple(x_chain[:-1]),
        y_mults=tuple(y_chain),
        z_left=aa, z_right=bb,
        x_left=cc_a, x_right=0,
        y_left=0, y_right=cc_b,
    )
