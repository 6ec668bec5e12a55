import pytest

from fatcat import (
    CrossedModule,
    StructuralError,
    conjugation_crossed_module,
    cyclic,
    symmetric,
    trivial_action_crossed_module,
    verify_crossed_module,
)


@pytest.mark.parametrize("G", [cyclic(1), cyclic(4), symmetric(3)])
def test_conjugation_module_always_passes(G):
    rep = verify_crossed_module(conjugation_crossed_module(G))
    assert rep.ok


def test_trivial_action_passes_for_abelian_h():
    rep = verify_crossed_module(trivial_action_crossed_module(cyclic(2), cyclic(4)))
    assert rep.ok


def test_trivial_action_fails_for_s3():
    rep = verify_crossed_module(trivial_action_crossed_module(cyclic(2), symmetric(3)))
    assert not rep.ok
    failures = [v for v in rep.violations if v.law == "crossed.peiffer-2"]
    assert failures
    # Witness is a non-commuting pair of S3, named by label.
    H = symmetric(3)
    h, hp = failures[0].witness
    assert H.mul[h][hp] != H.mul[hp][h]
    assert H.labels[h] in failures[0].details


def test_peiffer_one_detects_broken_tau():
    G = symmetric(3)
    CM = conjugation_crossed_module(G)
    # Redirect tau on one element; conjugation equivariance breaks.
    tau = list(CM.tau)
    tau[1] = G.identity
    rep = verify_crossed_module(CrossedModule(G, G, tuple(tau), CM.alpha))
    assert any(v.law in ("crossed.tau-homomorphism", "crossed.peiffer-1") for v in rep.violations)


def test_malformed_tables_raise():
    G = cyclic(2)
    with pytest.raises(StructuralError):
        CrossedModule(G, G, (0,), ((0, 1), (0, 1)))  # tau too short
    with pytest.raises(StructuralError):
        CrossedModule(G, G, (0, 0), ((0, 5), (0, 1)))  # dangling alpha target
