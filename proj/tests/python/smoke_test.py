"""Smoke tests for the naesat_py extension: the main operations are
reachable from Python and agree with the library's own checks."""

import naesat_py as m


def test_canonical_no_instance():
    f, d = m.canonical_no_instance()
    assert f.num_vars == 9
    assert len(f) == 12
    report = m.validate(f, d, positive=True, linear=True, disjoint=4,
                        partitions=True, exactly=4, sizes=[3])
    assert report["profile_pass"], report
    res = m.solve_exhaustive(f)
    assert not res["satisfiable"]
    assert res["assignments_tested"] <= 256
    assert m.count_solutions(f) == 0


def test_nae_eval_and_flip():
    f = m.Formula(3, [[1, 2, 3]])
    assert m.nae_eval(f, [True, False, False]) is None
    assert m.nae_eval(f, [True, True, True]) == 0
    flipped = m.flip_assignment([True, False, False])
    assert m.nae_eval(f, flipped) is None


def test_equality_gadget():
    fragment, columns, interface, aux = m.eq_gadget([0, 1, 2, 3], 4)
    assert len(fragment) == 15 and len(aux) == 9
    ok, rows = m.verify_equality_gadget(fragment, interface, aux)
    assert ok
    exists = [row[1] for row in rows]
    assert sum(exists) == 2 and exists[0] and exists[15]

    fragment, columns, interface, aux = m.eq_lin_gadget([0, 1, 2, 3], 4)
    assert len(fragment) == 12 and len(aux) == 6
    ok, _ = m.verify_equality_gadget(fragment, interface, aux)
    assert ok
    assert m.validate(fragment)["linear"]


def test_reduction_roundtrip():
    f, d = m.canonical_no_instance()
    art = m.lift_k(f, d)
    assert art.target.num_vars == 27
    assert len(art.target) == 45
    assert not m.solve_backtracking(art.target)["satisfiable"]

    gen_f, gen_d = m.gen_k_disjoint(12, 3, linear=True, seed=5)
    res = m.solve_backtracking(gen_f)
    assert res["satisfiable"]
    lifted = m.lift_k(gen_f, gen_d)
    forward = lifted.push_forward(res["witness"])
    assert m.nae_eval(lifted.target, forward) is None
    back = lifted.pull_back(forward)
    assert m.nae_eval(gen_f, back) is None


def test_parse_serialize():
    f, d = m.canonical_no_instance()
    text = m.serialize(f, d)
    f2, d2 = m.parse(text)
    assert f2 == f and d2 == d
    assert m.serialize(f2, d2) == text
    try:
        m.parse("p nae 1 1 0\n0 1 2 0\n")
    except m.ParseError:
        pass
    else:
        raise AssertionError("expected ParseError")


def test_hypergraph_bridge():
    f, d = m.canonical_no_instance()
    h, dropped = m.formula_to_hypergraph(f, d)
    assert not dropped
    assert h.num_vertices == 9 and len(h.edges) == 12
    assert len(h.matchings) == 4
    # monochromatic coloring trips the first edge
    assert m.first_monochromatic_edge(h, [1] * 9) == 0


def test_decide_k_disjoint_guarantee():
    f, d = m.gen_k_disjoint(15, 2, seed=40)
    res = m.decide_k_disjoint(f, d, 2)
    assert res["satisfiable"]
    assert res["guarantee"] == "always-satisfiable"


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except Exception as exc:  # noqa: BLE001 - report and continue
                failures += 1
                print(f"FAIL {name}: {exc}")
    raise SystemExit(1 if failures else 0)
