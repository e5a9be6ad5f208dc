import json
import pathlib
import random

import pytest

import convcode

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "tests" / "fixtures"


def test_field_arithmetic():
    f7 = convcode.Field(7)
    assert f7.add(3, 5) == 1
    assert f7.inv(3) == 5
    f8 = convcode.Field(8)
    assert f8.mul(2, 4) == 3
    with pytest.raises(ZeroDivisionError):
        f8.inv(0)
    with pytest.raises(ValueError):
        convcode.Field(9)


def test_code_roundtrip():
    f5 = convcode.Field(5)
    spec = convcode.ExtGrsSpec(f5, 4, 2, [0, 1, 2], [1, 1, 1, 1])
    assert convcode.parity_check(spec) == [[1, 1, 1, 0], [0, 1, 2, 1]]
    assert convcode.is_mds(spec)
    c = convcode.encode(spec, [3, 1])
    assert convcode.is_codeword(spec, c)
    assert convcode.recover_erasures(spec, {0: c[0], 3: c[3]}) == c
    p = convcode.puncture(spec, [0, 1, 3])
    assert (p.r, p.gamma, p.w) == (1, [0, 1], [3, 4, 1])


def test_bounds():
    b = convcode.bounds([(5, 3), (7, 4)], [(9, 7)])
    assert b["per_code_reads"] == [2, 2] and b["total"] == 6
    s = convcode.bounds([(10, 7)], [(6, 4), (5, 3)])
    assert s["privileged"] == 0 and s["total"] == 9
    assert convcode.bounds([(5, 3), (5, 3)], [(8, 6)])["corollary"].startswith("Corollary 2")
    with pytest.raises(ValueError):
        convcode.bounds([(5, 3)], [(6, 4)])


def test_merge_pipeline():
    plan = convcode.build_plan({"regime": "merge", "q": 8, "initial": [{"n": 5, "k": 3}] * 2, "r_final": 2})
    assert plan["S"] == [1, 2]
    assert convcode.verify(plan) == (True, "")
    rng = random.Random(0)
    codes = convcode.initial_codes(plan)
    inputs = [convcode.encode(c, [rng.randrange(8) for _ in range(c.k)]) for c in codes]
    finals, report = convcode.convert(plan, inputs, trace=True)
    assert report["rho"] == 6 and report["optimal"] is True
    assert finals[0][:3] == inputs[0][:3] and finals[0][3:6] == inputs[1][:3]
    assert len(report["trace"]) == 12
    bad = [list(inputs[0]), inputs[1]]
    bad[0][0] ^= 1
    with pytest.raises(convcode.CorruptionError):
        convcode.convert(plan, bad)


def test_field_too_small():
    with pytest.raises(convcode.ParameterError):
        convcode.build_plan({"regime": "merge", "q": 5, "initial": [{"n": 5, "k": 3}] * 2, "r_final": 2})


def test_hand_plan_fixture():
    plan = json.loads((FIXTURES / "hand_plan_2x2.json").read_text())
    codes = convcode.initial_codes(plan)
    inputs = [convcode.encode(c, [1] * c.k) for c in codes]
    _, report = convcode.convert(plan, inputs)
    assert (report["rho_r"], report["rho_w"]) == (4, 5)
