import math

import mpmath
import pytest

import octa_ptolemy as op

FIG8 = "X[5,1,6,8];X[7,2,8,3];X[1,5,2,4];X[3,6,4,7]"
FIG8_VOLUME = 2.029883212819307


def values_of(assignment):
    vals = assignment["values"]
    return [complex(*vals[k]) for k in sorted(vals, key=int)]


def test_builtins():
    assert set(op.builtin_names()) == {"fig8", "trefoil-kink"}
    assert op.builtin_pd("fig8") == FIG8
    assert op.builtin_solution("trefoil-kink", "z") is None
    assert len(op.builtin_solution("trefoil-kink", "w")) == 6


def test_diagram_summary():
    d = op.diagram(FIG8)
    assert d["writhe"] == 0
    assert len(d["crossings"]) == 4
    assert len(d["regions"]) == 6
    assert op.diagram(op.builtin_pd("trefoil-kink"))["kink"]


def test_golden_residuals_vanish():
    for name, mode in [("fig8", "z"), ("trefoil-kink", "w")]:
        r = op.residuals(op.builtin_pd(name), mode, op.builtin_solution(name, mode))
        assert max(abs(x) for x in r) < 1e-12


def test_figure_eight_invariants():
    inv = op.invariants(FIG8, "z", op.builtin_solution("fig8", "z"))
    assert inv["obstruction"] == -1
    re, im = inv["cuspShape"]
    assert abs(re) < 1e-9 and abs(im - 2 * math.sqrt(3)) < 1e-9
    assert abs(abs(inv["complexVolume"]["vol"]) - FIG8_VOLUME) < 1e-10
    assert inv["volumeAgrees"]


def test_trefoil_invariants():
    inv = op.invariants(op.builtin_pd("trefoil-kink"), "w", op.builtin_solution("trefoil-kink", "w"))
    assert inv["obstruction"] == -1
    assert abs(inv["cuspShape"][0] + 6) < 1e-12


def test_solver_is_deterministic_and_finds_the_geometric_point():
    a = op.solve(FIG8, "z", seed=0, restarts=30)
    assert a == op.solve(FIG8, "z", seed=0, restarts=30)
    assert a["solutions"]
    volumes = [abs(op.invariants(FIG8, "z", values_of(s["assignment"]))["complexVolume"]["vol"]) for s in a["solutions"]]
    assert any(abs(v - FIG8_VOLUME) < 1e-8 for v in volumes)


def test_errors():
    with pytest.raises(op.OctaError, match="parse"):
        op.diagram("X[1,2,3]")
    with pytest.raises(op.OctaError, match="degenerate"):
        op.residuals(op.builtin_pd("trefoil-kink"), "z", [1] * 8)
    with pytest.raises(op.OctaError):
        op.solve(FIG8, "q")


def test_bloch_wigner_against_mpmath():
    for z in [0.5 + 0.8660254037844386j, -1.3 + 0.2j, 2.5 - 1.7j]:
        li2 = mpmath.polylog(2, z)
        expect = float(mpmath.im(li2) + mpmath.arg(1 - z) * mpmath.log(abs(z)))
        assert abs(op.bloch_wigner(z) - expect) < 1e-13
        assert abs(op.dilog(z) - complex(li2)) < 1e-13
