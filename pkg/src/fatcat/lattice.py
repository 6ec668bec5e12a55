"""Discrete parallel transport on a rectangular lattice.

A connection assigns a group element to every horizontal and vertical
edge of a (T+1) x (S+1) grid of sites.  The rectangle transport
``biholonomy(t, s)`` travels along the bottom row, up column t, back
along row s reversed, and down column 0; words multiply right to left
(rightmost leg first), matching the composition convention elsewhere in
the package.  For abelian groups the rectangle transport equals the
product of its unit-square transports, which the test suite uses as an
independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeGuardExceeded, StructuralError
from .groups import FiniteGroup

MAX_EXTENT = 32


@dataclass(frozen=True)
class LatticeConnection:
    group: FiniteGroup
    T: int  # columns of plaquettes
    S: int  # rows of plaquettes
    horiz: tuple[tuple[int, ...], ...]  # [s][t], 0 <= t < T, 0 <= s <= S
    vert: tuple[tuple[int, ...], ...]  # [s][t], 0 <= t <= T, 0 <= s < S

    def __post_init__(self):
        if not (1 <= self.T <= MAX_EXTENT and 1 <= self.S <= MAX_EXTENT):
            raise SizeGuardExceeded(
                f"lattice extent {self.T}x{self.S} outside 1..{MAX_EXTENT}"
            )
        if len(self.horiz) != self.S + 1 or any(
            len(row) != self.T for row in self.horiz
        ):
            raise StructuralError("horizontal edge table has wrong shape")
        if len(self.vert) != self.S or any(
            len(row) != self.T + 1 for row in self.vert
        ):
            raise StructuralError("vertical edge table has wrong shape")
        n = self.group.order
        for table in (self.horiz, self.vert):
            for row in table:
                for g in row:
                    if not (0 <= g < n):
                        raise StructuralError(f"edge label {g} outside group")

    def _check_range(self, t: int, s: int, tmax: int, smax: int) -> None:
        if not (0 <= t <= tmax and 0 <= s <= smax):
            raise StructuralError(f"point ({t}, {s}) outside lattice")

    def row_transport(self, t: int, s: int) -> int:
        """Transport along row s from column 0 to column t."""
        self._check_range(t, s, self.T, self.S)
        G = self.group
        acc = G.identity
        for k in range(t):
            acc = G.mul[self.horiz[s][k]][acc]
        return acc

    def column_transport(self, t: int, s: int) -> int:
        """Transport up column t from row 0 to row s."""
        self._check_range(t, s, self.T, self.S)
        G = self.group
        acc = G.identity
        for k in range(s):
            acc = G.mul[self.vert[k][t]][acc]
        return acc


def biholonomy(L: LatticeConnection, t: int, s: int) -> int:
    """Transport around the (t x s)-rectangle with corner at the origin.

    bottom row out, up the far column, back along row s, down column 0:
    g(t, s) = V_0(s)^-1 . H_s(t)^-1 . V_t(s) . H_0(t).
    """
    L._check_range(t, s, L.T, L.S)
    G = L.group
    up = G.mul[L.column_transport(t, s)][L.row_transport(t, 0)]
    back = G.mul[G.inverse(L.row_transport(t, s))][up]
    return G.mul[G.inverse(L.column_transport(0, s))][back]


def plaquette_biholonomy(L: LatticeConnection, t: int, s: int) -> int:
    """The unit-square case: vert(t,s)^-1 . horiz(t,s+1)^-1 . vert(t+1,s) . horiz(t,s)."""
    if not (0 <= t < L.T and 0 <= s < L.S):
        raise StructuralError(f"plaquette ({t}, {s}) outside lattice")
    G = L.group
    up = G.mul[L.vert[s][t + 1]][L.horiz[s][t]]
    back = G.mul[G.inverse(L.horiz[s + 1][t])][up]
    return G.mul[G.inverse(L.vert[s][t])][back]


def flat_lattice(G: FiniteGroup, T: int, S: int) -> LatticeConnection:
    e = G.identity
    return LatticeConnection(
        G,
        T,
        S,
        tuple(tuple(e for _ in range(T)) for _ in range(S + 1)),
        tuple(tuple(e for _ in range(T + 1)) for _ in range(S)),
    )


def demo_lattice(G: FiniteGroup, T: int, S: int) -> LatticeConnection:
    """Fixed, deterministic non-trivial labels for examples and tests."""
    n = G.order
    horiz = tuple(
        tuple((1 + t + 2 * s) % n for t in range(T)) for s in range(S + 1)
    )
    vert = tuple(
        tuple((2 + 3 * t + s) % n for t in range(T + 1)) for s in range(S)
    )
    return LatticeConnection(G, T, S, horiz, vert)
