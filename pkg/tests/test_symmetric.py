from fractions import Fraction

import pytest
from pydantic import ValidationError

from nnrepr.boolfn import FamilySpec, family
from nnrepr.core.types import Output
from nnrepr.models import LinearForm, well_defined
from nnrepr.oracle import equiv_check
from nnrepr.passes import (
    SymAndCircuit,
    SymMajCircuit,
    clause_anchor,
    ip_clauses,
    parity_top,
    sym_and_to_knn,
    sym_maj_to_kstat,
    threshold_gate_form,
)


def xor_of_bits() -> SymMajCircuit:
    gates = (LinearForm.of([2, 0], -1), LinearForm.of([0, 2], -1))
    return SymMajCircuit(arity=2, gates=gates, top=parity_top(2))


class TestSymMaj:
    def test_two_gate_parity(self):
        s = sym_maj_to_kstat(xor_of_bits())
        assert len(s.forms) == 5
        assert s.k == 3
        assert s((1, 1)) == Output.ZERO
        assert s((1, 0)) == Output.ONE
        assert s((0, 0)) == Output.ZERO
        assert equiv_check(s, family(FamilySpec.parse("xor", 2)), 2).equal

    def test_threshold_gate_form(self):
        g = threshold_gate_form([1, 1, 1], 2)
        assert g.int_value((1, 1, 0)) > 0
        assert g.int_value((1, 0, 0)) <= 0

    def test_random_circuits(self, rng, random_form):
        for _ in range(40):
            n = rng.randint(1, 4)
            s = rng.randint(1, 4)
            circuit = SymMajCircuit(
                arity=n,
                gates=tuple(random_form(rng, n, 3) for _ in range(s)),
                top=tuple(rng.randint(0, 1) for _ in range(s + 1)),
            )
            labeled = sym_maj_to_kstat(circuit)
            assert len(labeled.forms) == 2 * s + 1
            assert labeled.k == s + 1
            assert equiv_check(labeled, circuit, n).equal

    @pytest.mark.slow
    def test_acceptance_corpus(self, rng, random_form):
        for _ in range(100):
            n = rng.randint(1, 8)
            s = rng.randint(1, 6)
            circuit = SymMajCircuit(
                arity=n,
                gates=tuple(random_form(rng, n, 3) for _ in range(s)),
                top=tuple(rng.randint(0, 1) for _ in range(s + 1)),
            )
            labeled = sym_maj_to_kstat(circuit)
            assert len(labeled.forms) == 2 * s + 1
            assert labeled.k == s + 1
            assert equiv_check(labeled, circuit, n).equal

    def test_top_length_checked(self):
        with pytest.raises(ValidationError):
            SymMajCircuit(arity=1, gates=(LinearForm.of([1], 0),), top=(0, 1, 0))


class TestSymAnd:
    @pytest.mark.parametrize("n,anchors,k", [(2, 16, 5), (3, 22, 7)])
    def test_inner_product(self, n, anchors, k):
        r = sym_and_to_knn(ip_clauses(n))
        assert r.anchor_count == anchors
        assert r.k == k
        assert r.arity == 2 * n
        assert equiv_check(r, family(FamilySpec.parse("ip", n)), 2 * n).equal

    def test_single_clause_is_projection(self):
        r = sym_and_to_knn(SymAndCircuit(arity=1, clauses=((1,),), top=(0, 1)))
        assert r((1,)) == Output.ONE
        assert r((0,)) == Output.ZERO

    def test_clause_anchor(self):
        a = clause_anchor(3, (1, -3), Fraction(1, 4))
        assert a == (Fraction(5, 4), Fraction(1, 2), Fraction(-1, 4))

    def test_random_circuits(self, rng):
        for _ in range(25):
            n = rng.randint(1, 4)
            s = rng.randint(1, 3)
            clauses = tuple(
                tuple(v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), rng.randint(1, n)))
                for _ in range(s)
            )
            circuit = SymAndCircuit(arity=n, clauses=clauses, top=tuple(rng.randint(0, 1) for _ in range(s + 1)))
            r = sym_and_to_knn(circuit)
            assert r.anchor_count == 6 * s + 4
            assert well_defined(r).defined
            assert equiv_check(r, circuit, n).equal

    @pytest.mark.slow
    def test_acceptance_corpus(self, rng):
        for _ in range(50):
            n = rng.randint(1, 8)
            s = rng.randint(1, 5)
            clauses = tuple(
                tuple(v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), rng.randint(1, n)))
                for _ in range(s)
            )
            circuit = SymAndCircuit(arity=n, clauses=clauses, top=tuple(rng.randint(0, 1) for _ in range(s + 1)))
            r = sym_and_to_knn(circuit)
            assert r.anchor_count == 6 * s + 4
            assert r.k == 2 * s + 1
            assert well_defined(r).defined
            assert equiv_check(r, circuit, n).equal

    def test_repeated_variable_rejected(self):
        with pytest.raises(ValidationError):
            SymAndCircuit(arity=2, clauses=((1, -1),), top=(0, 1))

    def test_ip_requires_positive_n(self):
        with pytest.raises(ValueError):
            ip_clauses(0)
