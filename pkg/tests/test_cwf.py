"""Contexts, comprehension, and the three type formers with their laws."""

from gweng.cwf import (
    bool_gwe,
    comprehension,
    cwf_law_report,
    id_former,
    id_law_report,
    nat_gwe,
    pair_map,
    pi_law_report,
    refl_map,
    refl_term,
    sigma_former,
    sigma_law_report,
    subst_ty,
    terminal_context,
    unit_gwe,
)
from gweng.dependent import check_dgwe, constant_dgwe
from gweng.gwe import check_ep, identity_ep
from gweng.suites import constant_term, discrete_context, point_map

CWF_LAWS = (
    "ty_id", "ty_comp", "tm_id", "tm_comp",
    "cons_l", "cons_r", "cons_id", "cons_nat",
)


def test_terminal_context_is_a_point():
    t = terminal_context()
    assert len(t.objects) == 1
    assert len(t.morphisms()) == 1


def test_comprehension_object_count():
    g = bool_gwe()
    a = constant_dgwe(g, nat_gwe(3))
    ga = comprehension(g, a)
    assert len(ga.objects) == len(g.objects) * 3


def test_cwf_laws_on_bool_context():
    g = bool_gwe()
    a = constant_dgwe(g, nat_gwe(2))
    phi = identity_ep(g)
    t = constant_term(g, a)
    rep = cwf_law_report(g, a, phi, t, identity_ep(g))
    assert set(rep) == set(CWF_LAWS)
    assert all(rep.values()), rep


def test_cwf_laws_under_nonidentity_substitution():
    g = discrete_context(["c0", "c1"])
    a = constant_dgwe(g, discrete_context(["f0"]))
    phi = point_map(
        discrete_context(["d0"]), g,
        sorted(g.objects, key=lambda s: s.digest())[0],
    )
    psi = identity_ep(phi.src)
    t = constant_term(g, a)
    rep = cwf_law_report(g, a, phi, t, psi)
    assert all(rep.values()), rep


def test_pi_laws_on_small_instance():
    from gweng.cwf import curry_term, pi_former

    g = discrete_context(["g0"])
    a = constant_dgwe(g, discrete_context(["a0"]))
    ga = comprehension(g, a)
    b = constant_dgwe(ga, discrete_context(["b0"]))
    assert check_dgwe(pi_former(g, a, b))
    psi = constant_term(ga, b)
    kappa = curry_term(g, a, b, psi)
    alpha = constant_term(g, a)
    rep = pi_law_report(g, a, b, psi, kappa, alpha, identity_ep(g))
    assert set(rep) == {"pi_comp", "pi_subst", "lam_subst", "app_subst", "lam_uniq"}
    assert all(rep.values()), rep


def test_sigma_laws_on_small_instance():
    g = discrete_context(["g0"])
    a = constant_dgwe(g, discrete_context(["a0", "a1"]))
    ga = comprehension(g, a)
    b = constant_dgwe(ga, discrete_context(["b0"]))
    sty = sigma_former(g, a, b)
    assert check_dgwe(sty)
    gs = comprehension(g, sty)
    gab = comprehension(ga, b)
    fwd, bwd = pair_map(g, a, b)
    assert check_ep(fwd) and check_ep(bwd)
    p_ty = constant_dgwe(gs, discrete_context(["p0"]))
    psi = constant_term(gab, subst_ty(p_ty, fwd))
    theta = constant_term(gs, p_ty)
    rep = sigma_law_report(g, a, b, p_ty, psi, theta, identity_ep(g))
    assert set(rep) == {
        "sigma_comp", "sigma_subst", "pair_subst",
        "r_sigma_subst", "r_sigma_uniq",
    }
    assert all(rep.values()), rep


def test_id_laws_on_two_proof_instance():
    g = unit_gwe()
    a = constant_dgwe(g, bool_gwe())
    idty = id_former(g, a)
    assert check_dgwe(idty)
    ga = comprehension(g, a)
    theta = comprehension(idty.base, idty)
    # the two parallel proofs give two objects over the diagonal
    assert len(theta.objects) == 2
    p_ty = constant_dgwe(theta, discrete_context(["q0"]))
    tau = constant_term(ga, subst_ty(p_ty, refl_map(g, a)))
    rep = id_law_report(g, a, p_ty, tau, identity_ep(g))
    assert set(rep) == {"id_comp", "id_subst", "refl_subst", "r_id_subst"}
    assert all(rep.values()), rep


def test_refl_is_equality_preserving():
    g = unit_gwe()
    a = constant_dgwe(g, bool_gwe())
    assert check_ep(refl_map(g, a))
    rt = refl_term(g, a)
    ga = comprehension(g, a)
    assert set(rt.base.proj) == {o.digest() for o in ga.objects}
