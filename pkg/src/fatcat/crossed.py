"""Crossed modules of finite groups.

Two groups G and H, a homomorphism tau: H -> G and an action alpha of G
on H by automorphisms, subject to

    tau(alpha(g, h))      = g . tau(h) . g^-1
    alpha(tau(h), h')     = h . h' . h^-1

for all g in G and h, h' in H.  The verifier checks the homomorphism and
action axioms and both identities exhaustively and names every violating
pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StructuralError
from .groups import FiniteGroup
from .report import Report


@dataclass(frozen=True)
class CrossedModule:
    G: FiniteGroup
    H: FiniteGroup
    tau: tuple[int, ...]  # H element -> G element
    alpha: tuple[tuple[int, ...], ...]  # alpha[g][h] -> H element

    def __post_init__(self):
        if len(self.tau) != self.H.order:
            raise StructuralError("tau table has wrong length")
        if len(self.alpha) != self.G.order or any(
            len(row) != self.H.order for row in self.alpha
        ):
            raise StructuralError("alpha table has wrong shape")
        if any(not (0 <= g < self.G.order) for g in self.tau):
            raise StructuralError("tau has a dangling target")
        if any(not (0 <= h < self.H.order) for row in self.alpha for h in row):
            raise StructuralError("alpha has a dangling target")


def conjugation_crossed_module(G: FiniteGroup) -> CrossedModule:
    """H = G, tau = id, alpha = conjugation."""
    n = G.order
    alpha = tuple(
        tuple(G.mul[G.mul[g][h]][G.inverse(g)] for h in range(n)) for g in range(n)
    )
    return CrossedModule(G, G, tuple(range(n)), alpha)


def trivial_action_crossed_module(G: FiniteGroup, H: FiniteGroup) -> CrossedModule:
    """tau constant at the identity, alpha the trivial action.

    Satisfies both identities exactly when H is abelian; used as the
    standard negative example otherwise.
    """
    tau = tuple(G.identity for _ in range(H.order))
    alpha = tuple(tuple(range(H.order)) for _ in range(G.order))
    return CrossedModule(G, H, tau, alpha)


def verify_crossed_module(CM: CrossedModule) -> Report:
    rep = Report(suite="crossed-module")
    G, H = CM.G, CM.H
    tau, alpha = CM.tau, CM.alpha

    # tau is a homomorphism.
    for h1 in range(H.order):
        for h2 in range(H.order):
            rep.checks += 1
            if tau[H.mul[h1][h2]] != G.mul[tau[h1]][tau[h2]]:
                rep.add("crossed.tau-homomorphism", (h1, h2))

    # Each alpha(g) is an automorphism of H.
    for g in range(G.order):
        if sorted(alpha[g]) != list(range(H.order)):
            rep.add("crossed.alpha-not-bijective", (g,))
        for h1 in range(H.order):
            for h2 in range(H.order):
                rep.checks += 1
                if alpha[g][H.mul[h1][h2]] != H.mul[alpha[g][h1]][alpha[g][h2]]:
                    rep.add("crossed.alpha-not-homomorphism", (g, h1, h2))

    # alpha is an action.
    e = G.identity
    for h in range(H.order):
        rep.checks += 1
        if alpha[e][h] != h:
            rep.add("crossed.action-identity", (h,))
    for g1 in range(G.order):
        for g2 in range(G.order):
            for h in range(H.order):
                rep.checks += 1
                if alpha[G.mul[g1][g2]][h] != alpha[g1][alpha[g2][h]]:
                    rep.add("crossed.action-composition", (g1, g2, h))

    # First identity: tau(alpha(g, h)) = g tau(h) g^-1.
    for g in range(G.order):
        for h in range(H.order):
            rep.checks += 1
            if tau[alpha[g][h]] != G.mul[G.mul[g][tau[h]]][G.inverse(g)]:
                rep.add(
                    "crossed.peiffer-1",
                    (g, h),
                    f"g={G.labels[g]}, h={H.labels[h]}",
                )

    # Second identity: alpha(tau(h), h') = h h' h^-1.
    for h in range(H.order):
        for hp in range(H.order):
            rep.checks += 1
            if alpha[tau[h]][hp] != H.mul[H.mul[h][hp]][H.inverse(h)]:
                rep.add(
                    "crossed.peiffer-2",
                    (h, hp),
                    f"h={H.labels[h]}, h'={H.labels[hp]}",
                )
    return rep
