import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from opjensen.generate import GenConfig, gen_instance
from opjensen.instance import ALIASES, THEOREMS, Instance, canonical_theorem, run_instance
from opjensen.reproduce import ex26_instance, ex34_instance
from strategies import seeds, setup_for

GENERATABLE = [t for t in THEOREMS if t != "main.modes"]


@pytest.mark.parametrize("alias, target", sorted(ALIASES.items()))
def test_aliases(alias, target):
    assert canonical_theorem(alias) == target


def test_params_select_variant():
    assert canonical_theorem("main", {"variant": "X3"}) == "main.X3"
    assert canonical_theorem("main", {"modes": {"A": "outer"}}) == "main.modes"
    assert canonical_theorem("power-pairs", {"condition": "ii"}) == "power-pairs.ii"
    with pytest.raises(ValueError):
        canonical_theorem("cor26")


@pytest.mark.parametrize("theorem", GENERATABLE)
def test_json_round_trip(theorem):
    f, m, M, params = setup_for(theorem)
    inst = gen_instance(theorem, GenConfig(dim=2, m=m, M=M, seed=11), f, params=params)
    back = Instance.loads(inst.dumps())
    assert back == inst
    assert run_instance(back).to_json() == run_instance(inst).to_json()


def test_example_instances_round_trip():
    for inst in (ex26_instance(), ex34_instance()):
        assert Instance.loads(json.dumps(inst.to_json())) == inst


def test_missing_keys_rejected():
    d = ex26_instance().to_json()
    for key in ("theorem", "operators", "function"):
        broken = dict(d)
        del broken[key]
        with pytest.raises(ValueError):
            Instance.from_json(broken)


def test_power_pairs_function_implied_by_p():
    d = gen_instance("power-pairs.i", GenConfig(dim=2, m=1.5, M=3.0, seed=2)).to_json()
    del d["function"]
    inst = Instance.from_json(d)
    assert inst.function.kind == "power" and inst.function.params[0] == d["params"]["p"]


def test_explicit_modes_dispatch():
    inst = ex26_instance()
    x1 = run_instance(inst)
    inst.params["modes"] = {"B": "outer", "C": "outer", "A": "inner", "D": "inner"}
    same = run_instance(inst)
    assert same.matrices["middle"] == x1.matrices["middle"]


@given(seeds, st.sampled_from(GENERATABLE))
def test_generated_instances_pass(seed, theorem):
    f, m, M, params = setup_for(theorem)
    inst = gen_instance(theorem, GenConfig(dim=2, m=m, M=M, seed=seed % 2**64), f, params=params)
    assert run_instance(inst).passed
