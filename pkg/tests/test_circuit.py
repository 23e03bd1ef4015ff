import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import model_set
from tantrix.circuit import (
    CNF,
    And,
    Circuit,
    Input,
    Not,
    circuit_problems,
    cnf_to_circuit,
    count_models,
    count_sat,
    evaluate,
    parse_circuit,
    parse_dimacs,
    random_cnf,
    serialize_circuit,
    serialize_dimacs,
)
from tantrix.errors import CircuitError, EmptyClause, HeaderMismatch, LengthMismatch, ParseError, TooLarge

C = Circuit.build


def test_evaluate_examples():
    assert evaluate(C(1), [True])
    assert not evaluate(C(2, [And(1, 2)]), [True, False])
    assert evaluate(C(1, [Not(1)]), [False])
    with pytest.raises(LengthMismatch):
        evaluate(C(2), [True])


def test_count_sat_examples():
    assert count_sat(C(1)) == 1
    assert count_sat(C(1, [Not(1), And(1, 2)])) == 0
    assert count_sat(C(2, [And(1, 2)])) == 1
    with pytest.raises(TooLarge):
        count_sat(C(21))


def test_index_constraints():
    with pytest.raises(CircuitError):
        C(2, [And(2, 1)])
    with pytest.raises(CircuitError):
        C(1, [Not(2)])
    with pytest.raises(CircuitError):
        Circuit(1, (Not(1),))
    assert circuit_problems(C(2, [And(1, 1), Not(3)])) == []
    assert C(2).instructions == (Input(1), Input(2))


def test_parse_dimacs_examples():
    assert parse_dimacs("p cnf 1 1\n1 0") == CNF(1, ((1,),))
    assert parse_dimacs("p cnf 2 2\n1 -2 0\n2 0").clauses == ((1, -2), (2,))
    with pytest.raises(HeaderMismatch):
        parse_dimacs("p cnf 1 1\n1 0 1 0")


def test_parse_dimacs_details():
    text = "c comment\np cnf 3 2\n1 -3\n 2 0 -1 0\n%\n0\n"
    assert parse_dimacs(text).clauses == ((1, -3, 2), (-1,))
    with pytest.raises(EmptyClause):
        parse_dimacs("p cnf 1 2\n1 0\n0\n")
    with pytest.raises(HeaderMismatch):
        parse_dimacs("p cnf 1 1\n2 0\n")
    with pytest.raises(ParseError):
        parse_dimacs("1 0\n")
    with pytest.raises(ParseError):
        parse_dimacs("p cnf 1 1\n1\n")
    with pytest.raises(ParseError):
        parse_dimacs("p cnf 1 1\nx 0\n")


def test_lowering_examples():
    assert count_sat(cnf_to_circuit(CNF(1, ((1,),)))) == 1
    assert count_sat(cnf_to_circuit(CNF(1, ((1, -1),)))) == 2
    assert count_sat(cnf_to_circuit(CNF(3, ()))) == 8


def test_lowering_shape():
    # (x1 or not x2) -> NOT(AND(NOT x1, NOT NOT x2))
    c = cnf_to_circuit(CNF(2, ((1, -2),)))
    assert [g for _, g in c.gates()] == [Not(1), Not(2), Not(4), And(3, 5), Not(6)]


def test_circuit_text_format():
    c = C(2, [And(1, 2), Not(3)])
    text = serialize_circuit(c)
    assert text == "n 2\nand 1 2\nnot 3\n"
    assert parse_circuit(text) == c
    with pytest.raises(ParseError):
        parse_circuit("and 1 2\n")
    with pytest.raises(ParseError):
        parse_circuit("n 1\nand 2 2\n")


cnfs = st.integers(0, 10**9).map(lambda s: random_cnf(random.Random(s)))


@settings(max_examples=100)
@given(cnfs)
def test_lowering_is_parsimonious(f):
    c = cnf_to_circuit(f)
    models = model_set(f.num_vars, f.clauses)
    assert count_sat(c) == len(models) == count_models(f)
    for a in models:
        assert evaluate(c, a)
    assert circuit_problems(c) == []


@given(cnfs)
def test_dimacs_round_trip(f):
    assert parse_dimacs(serialize_dimacs(f)) == f
