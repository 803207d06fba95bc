"""Smoke test for the perfdel Python bindings.

Build and install first:
    pip install maturin
    pip install --no-build-isolation -e crates/py
"""

import json
import sys

import perfdel


def main() -> int:
    cert = perfdel.delaunay_certificate(7, 1, 2)
    assert cert.is_certified()
    assert (cert.alpha, cert.beta) == ("3/7", "2/3")
    assert (cert.derived_form.a, cert.derived_form.b) == ("2/3", "1/3")
    assert cert.min_margin == "4/3"
    assert cert.derived_form.ratio_to(perfdel.phi_main(7, 1, 2)) == "12"
    perfdel.DelaunayCertificate.from_json(cert.to_json()).recheck()

    failed = perfdel.delaunay_certificate(7, 3, 2)
    assert not failed.is_certified()
    failed.recheck()

    radial = perfdel.pair_to_radial("3/7", "2/3", 7)
    assert radial == cert.derived_form

    p = perfdel.construct_p(7, 1, 2, "half")
    assert len(p) == 56 and p.affine_dim == 7
    phi = perfdel.phi_main(7, 1, 2)
    assert {phi.eval(v) for v in p.vertices} == {"3"}

    g = perfdel.construct_g(6)
    assert len(g) == 27 and g.affine_dim == 6
    for vs, rank in ((p, 35), (g, 27)):
        pc = perfdel.perfection_certificate(vs)
        assert pc.is_perfect() and pc.rank == rank and pc.nullity == 1
        perfdel.PerfectionCertificate.from_json(pc.to_json()).recheck()

    reps = perfdel.enumerate_m(7, 2)
    assert [(r.l, r.a) for r in reps] == [(-3, 2), (-2, 1), (0, 1), (1, 0)]
    rep = perfdel.canonical_rep(["2/3", "2/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3"], 7, 3)
    assert rep.point() == ["2/3", "2/3", "-1/3", "-1/3", "-1/3", "-1/3", "-1/3"]

    rows = perfdel.diagram(7, 2)
    assert any(r["rep"]["l"] == 0 and r["phi1"] == "49/9" and r["phi2"] == "0" for r in rows)

    brute = perfdel.bruteforce_delaunay(7, 1, 2)
    assert brute["status"] == "certified" and brute["boundary_points"] == 56

    det = perfdel.thm7_determinants(7, 2, 1)
    assert (det["det4"], det["det3"], det["match"]) == ("240", "-80", True)

    try:
        perfdel.construct_p(7, 1, 4)
    except ValueError as e:
        assert "2k" in str(e)
    else:
        raise AssertionError("expected ValueError")

    print(json.dumps({"ok": True, "alpha": cert.alpha, "beta": cert.beta}))
    return 0


if __name__ == "__main__":
    sys.exit(main())
