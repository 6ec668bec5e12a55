"""Finite groups as multiplication tables.

The product ``mul[a][b]`` is the ordinary left-to-right written product
a.b; when elements are mappings this means b acts first, matching the
categorical composition convention "second argument first".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import StructuralError


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    mul: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        n = len(self.mul)
        if len(self.labels) != n or any(len(row) != n for row in self.mul):
            raise StructuralError(f"group {self.name}: malformed tables")
        if self._find_identity() is None:
            raise StructuralError(f"group {self.name}: no identity element")
        for a in range(n):
            if self._find_inverse(a) is None:
                raise StructuralError(f"group {self.name}: element {a} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                        raise StructuralError(
                            f"group {self.name}: associativity fails at ({a},{b},{c})"
                        )

    def _find_identity(self) -> int | None:
        n = len(self.mul)
        for e in range(n):
            if all(self.mul[e][a] == a and self.mul[a][e] == a for a in range(n)):
                return e
        return None

    def _find_inverse(self, a: int) -> int | None:
        e = self._find_identity()
        for b in range(len(self.mul)):
            if self.mul[a][b] == e and self.mul[b][a] == e:
                return b
        return None

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def identity(self) -> int:
        e = self._find_identity()
        assert e is not None
        return e

    def inverse(self, a: int) -> int:
        b = self._find_inverse(a)
        assert b is not None
        return b

    def is_abelian(self) -> bool:
        n = self.order
        return all(
            self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(n)
        )


def cyclic(n: int) -> FiniteGroup:
    """Z_n under addition."""
    mul = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(f"z{n}", mul, tuple(str(a) for a in range(n)))


def _perm_label(p: tuple[int, ...]) -> str:
    """Cycle notation on points 1..n."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(out) if out else "e"


def symmetric(n: int) -> FiniteGroup:
    """S_n; permutations in lexicographic order, product = "right factor first"."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (a.b)(x) = a(b(x))
    mul = tuple(
        tuple(index[tuple(a[b[i]] for i in range(n))] for b in perms) for a in perms
    )
    return FiniteGroup(f"s{n}", mul, tuple(_perm_label(p) for p in perms))


def group_from_table(
    name: str, mul: list[list[int]], labels: list[str] | None = None
) -> FiniteGroup:
    lbls = tuple(labels) if labels else tuple(str(i) for i in range(len(mul)))
    return FiniteGroup(name, tuple(tuple(row) for row in mul), lbls)
