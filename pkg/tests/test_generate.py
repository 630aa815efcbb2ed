"""Adder generators checked against integer arithmetic oracles.

The reference for every functional test here is Python's own integer
addition, or the one-bit carry recursion c[i+1] = g[i] | (p[i] & c[i])
computed directly on ints. Nothing below reuses the package's boolean
evaluation to define expectations.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from adderlab import (
    CellKind,
    carry_terms,
    census,
    compose,
    evaluate,
    gen_ccla_block,
    gen_cclg,
    gen_pg,
    gen_rca_block,
    gen_scbcla_block,
    gen_scclg,
    new_netlist,
    preset,
    to_text,
    validate,
    verify_exhaustive_netlist,
    InputVector,
    PRESETS,
)
from adderlab.errors import InvalidBlockWidth

from conftest import random_arch_string


def ref_add(width, a, b, cin):
    total = a + b + cin
    return total & ((1 << width) - 1), total >> width


def ref_carries(width, a, b, cin):
    """All carries c1..cwidth from the bitwise recursion."""
    c = cin
    out = []
    for i in range(width):
        ai, bi = (a >> i) & 1, (b >> i) & 1
        c = (ai & bi) | ((ai ^ bi) & c)
        out.append(c)
    return out


def net_by_name(nl, name):
    for n in nl.nets:
        if n.name == name:
            return n.id
    raise KeyError(name)


def all_inputs(width):
    space = 1 << width
    return itertools.product(range(space), range(space), (0, 1))


# ---------------------------------------------------------------------------
# full adder and PG stage


def test_full_adder_truth_table():
    nl = compose("rca:1")
    for a, b, cin in all_inputs(1):
        got_sum, got_cout, _ = evaluate(nl, InputVector(a, b, cin))
        assert (got_sum, got_cout) == ref_add(1, a, b, cin)


def test_full_adder_uses_five_gates():
    c = census(compose("rca:1"))
    assert c.counts == {CellKind.XOR2: 2, CellKind.AND2: 2, CellKind.OR2: 1}


def test_pg_stage_layout_and_values():
    nl = compose("ccla:2")
    # per bit: AND2 for generate, then XOR2 for propagate
    assert nl.gates[0].kind == CellKind.AND2 and nl.gates[1].kind == CellKind.XOR2
    g0, p0 = nl.gates[0].output, nl.gates[1].output
    for a, b, cin in all_inputs(2):
        _, _, values = evaluate(nl, InputVector(a, b, cin))
        assert values[g0] == (a & 1) & (b & 1)
        assert values[p0] == (a & 1) ^ (b & 1)
        assert not (values[g0] and values[p0])  # generate and propagate never co-assert


# ---------------------------------------------------------------------------
# flattened lookahead carry terms


def test_carry_terms_shapes():
    assert carry_terms(1) == [(("g", 0),), (("p", 0), ("c",))]
    assert carry_terms(3) == [
        (("g", 2),),
        (("p", 2), ("g", 1)),
        (("p", 2), ("p", 1), ("g", 0)),
        (("p", 2), ("p", 1), ("p", 0), ("c",)),
    ]


def _term_value(term, a, b, cin):
    v = 1
    for lit in term:
        if lit[0] == "p":
            v &= ((a >> lit[1]) & 1) ^ ((b >> lit[1]) & 1)
        elif lit[0] == "g":
            v &= ((a >> lit[1]) & 1) & ((b >> lit[1]) & 1)
        else:
            v &= cin
    return v


@pytest.mark.parametrize("k", [1, 2, 3])
def test_carry_terms_compute_the_carry_and_stay_disjoint(k):
    terms = carry_terms(k)
    for a, b, cin in all_inputs(k):
        values = [_term_value(t, a, b, cin) for t in terms]
        assert max(values) == ref_carries(k, a, b, cin)[-1]
        assert sum(values) <= 1  # disjoint: at most one term fires


# ---------------------------------------------------------------------------
# lookahead generators against the ripple recursion


def test_lookahead_carries_worked_example():
    nl = compose("ccla:3")
    _, cout, values = evaluate(nl, InputVector(0b111, 0b001, 0))
    assert values[net_by_name(nl, "c1")] == 1
    assert values[net_by_name(nl, "c2")] == 1
    assert cout == 1


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_cclg_matches_ripple_recursion(m):
    nl = compose(f"ccla:{m}")
    carry_ids = [net_by_name(nl, f"c{k}") for k in range(1, m)]
    for a, b, cin in all_inputs(m):
        _, cout, values = evaluate(nl, InputVector(a, b, cin))
        ref = ref_carries(m, a, b, cin)
        assert [values[nid] for nid in carry_ids] == ref[:-1]
        assert cout == ref[-1]


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_section_carry_matches_ripple_recursion(m):
    nl = compose(f"scbcla:{m}")
    assert nl.carries == ()  # sole section carry doubles as cout
    for a, b, cin in all_inputs(m):
        s, cout, _ = evaluate(nl, InputVector(a, b, cin))
        assert (s, cout) == ref_add(m, a, b, cin)


def test_scclg_is_smaller_than_cclg():
    # generator cones only, shared PG excluded
    frozen = {2: (5, 3), 3: (9, 4), 4: (16, 7), 5: (27, 11)}
    for m, (full, section) in frozen.items():
        b = new_netlist(m)
        pg = gen_pg(b, b.a, b.b)
        base = b.gate_count
        carries = gen_cclg(b, pg, b.cin)
        assert len(carries) == m
        assert b.gate_count - base == full

        b2 = new_netlist(m)
        pg2 = gen_pg(b2, b2.a, b2.b)
        base2 = b2.gate_count
        gen_scclg(b2, pg2, b2.cin)
        assert b2.gate_count - base2 == section


# ---------------------------------------------------------------------------
# block builders


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_block_carry_cardinality(m):
    b = new_netlist(m)
    assert len(gen_ccla_block(b, b.a, b.b, b.cin).carries) == m

    b = new_netlist(m)
    res = gen_scbcla_block(b, b.a, b.b, b.cin)
    assert len(res.carries) == 1
    assert res.carries[0] == (m, res.cout)  # the section carry is the block cout

    b = new_netlist(m)
    assert gen_rca_block(b, b.a, b.b, b.cin).carries == ()


def test_lookahead_blocks_reject_width_one():
    for gen in (gen_ccla_block, gen_scbcla_block):
        b = new_netlist(1)
        with pytest.raises(InvalidBlockWidth):
            gen(b, b.a, b.b, b.cin)


def test_block_census_frozen():
    def counts(spec):
        return {k.value: v for k, v in census(compose(spec)).counts.items()}

    assert counts("ccla:3") == {
        "AND2": 6, "AND3": 2, "AND4": 1, "OR2": 1, "OR3": 1, "OR4": 1, "XOR2": 6,
    }
    assert counts("scbcla:3") == {
        "AND2": 6, "AND3": 1, "AND4": 1, "OR2": 2, "OR4": 1, "XOR2": 6,
    }
    # width 2 is the degenerate case: one-term cone equals the ripple step
    assert counts("ccla:2") == counts("scbcla:2")


def test_section_blocks_use_fewer_gates_from_width_three_up():
    for m in (3, 4, 5):
        assert census(compose(f"scbcla:{m}")).total < census(compose(f"ccla:{m}")).total


# ---------------------------------------------------------------------------
# composition


def test_compose_worked_example():
    nl = compose(PRESETS["design4"])
    s, cout, _ = evaluate(nl, InputVector(0x12345678, 0x0EDCBA98, 1))
    assert (s, cout) == (0x21111111, 0)


def test_compose_overflow():
    nl = compose("rca:32")
    s, cout, _ = evaluate(nl, InputVector(0xFFFFFFFF, 0x1, 0))
    assert (s, cout) == (0, 1)


def test_compose_accepts_spec_or_string():
    assert to_text(compose(preset("design2"))) == to_text(compose(PRESETS["design2"]))


def test_compose_is_deterministic():
    assert to_text(compose("rca:2,ccla:3x10")) == to_text(compose("rca:2,ccla:3x10"))


def test_preset_gate_counts_frozen():
    expected = {
        "design1": 191, "design2": 190, "design3": 181, "design4": 180,
        "design5": 183, "design6": 179, "rca32": 160,
    }
    for name, total in expected.items():
        assert census(compose(PRESETS[name])).total == total, name


def test_exposed_carry_names_are_global_indices():
    d1 = compose(PRESETS["design1"])
    assert [d1.net_name(n) for n in d1.carries] == [f"c{k}" for k in range(1, 32)]
    d3 = compose(PRESETS["design3"])
    assert [d3.net_name(n) for n in d3.carries] == [f"c{k}" for k in range(2, 30, 3)]
    d6 = compose(PRESETS["design6"])
    assert [d6.net_name(n) for n in d6.carries] == [f"c{k}" for k in range(6, 31, 3)]
    assert compose(PRESETS["rca32"]).carries == ()


def test_every_preset_validates():
    for name in PRESETS:
        assert validate(compose(PRESETS[name])) == [], name


@settings(max_examples=20, deadline=None)
@given(st.randoms(use_true_random=False))
def test_random_architectures_add_correctly(rng):
    spec = random_arch_string(rng, lo=2, hi=8)
    nl = compose(spec)
    assert verify_exhaustive_netlist(nl) is None, spec
