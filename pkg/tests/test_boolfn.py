import numpy as np
import pytest
from pydantic import ValidationError

from nnrepr.boolfn import (
    BoolFn,
    CnfDnf,
    FamilySpec,
    Substitution,
    all_inputs,
    apply_substitution,
    cnf_eval,
    components,
    exact_half_cnf,
    family,
    from_callable,
    from_hex,
    from_truth_table,
    index_of,
    point,
)
from nnrepr.core.errors import ArityError
from nnrepr.core.types import ClauseKind, Output


def maj(n: int) -> BoolFn:
    return family(FamilySpec.parse("maj", n))


class TestTruthTable:
    def test_index_order(self):
        assert index_of((1, 0, 0)) == 1
        assert index_of((0, 0, 1)) == 4
        assert point(6, 3) == (0, 1, 1)
        assert [index_of(x) for x in all_inputs(3)] == list(range(8))

    def test_xor_and_and(self):
        xor = from_truth_table([0, 1, 1, 0], 2)
        conj = from_truth_table([0, 0, 0, 1], 2)
        assert xor((1, 0)) == Output.ONE
        assert xor((1, 1)) == Output.ZERO
        assert conj((1, 1)) == Output.ONE
        assert xor.to_hex() == "n=2:6"
        assert conj.to_hex() == "n=2:8"

    def test_length_mismatch(self):
        with pytest.raises(ArityError):
            from_truth_table([0, 1, 1], 2)

    def test_non_boolean_entries(self):
        with pytest.raises(ValueError):
            from_truth_table([0, 2, 1, 0], 2)

    def test_hex_round_trip(self, rng):
        for n in range(0, 7):
            bits = [rng.randint(0, 1) for _ in range(1 << n)]
            f = from_truth_table(bits, n)
            g = BoolFn.parse_hex(f.to_hex())
            assert g == f

    def test_hex_rejects_padding_and_length(self):
        with pytest.raises(ValueError):
            from_hex("n=1:f")
        with pytest.raises(ValueError):
            from_hex("n=3:0")
        with pytest.raises(ValueError):
            from_hex("3:00")

    def test_document_arity_must_match_prefix(self):
        with pytest.raises(ValidationError):
            BoolFn.model_validate({"arity": 3, "table": "n=2:6"})

    def test_wrong_input_length(self):
        with pytest.raises(ArityError):
            maj(3)((1, 0))

    def test_complement_and_ones(self):
        f = maj(3)
        assert f.ones() == 4
        assert f.complement().ones() == 4
        assert f.complement()((1, 1, 0)) == Output.ZERO


class TestFamilies:
    def test_maj(self):
        assert maj(3)((1, 1, 0)) == Output.ONE
        assert maj(3)((1, 0, 0)) == Output.ZERO
        # ties go to 1
        assert maj(4)((1, 1, 0, 0)) == Output.ONE

    def test_disj(self):
        f = family(FamilySpec.parse("disj", 2))
        assert f.arity == 4
        assert f((1, 0, 0, 1)) == Output.ONE
        assert f((1, 0, 1, 0)) == Output.ZERO

    def test_omb(self):
        f = family(FamilySpec.parse("omb", 3))
        assert f((1, 0, 1)) == Output.ONE
        assert f((1, 1, 0)) == Output.ZERO
        assert f((0, 0, 0)) == Output.ZERO

    @pytest.mark.parametrize("name,params", [
        ("maj", (5,)),
        ("xor", (4,)),
        ("ip", (2,)),
        ("disj", (3,)),
        ("omb", (4,)),
        ("omb_and2", (3,)),
        ("exact_half_cnf", (4, 2)),
        ("and_or_and", (2, 1)),
    ])
    def test_table_matches_pointwise(self, name, params):
        spec = FamilySpec.parse(name, *params)
        f = family(spec)
        for x in all_inputs(spec.arity):
            assert int(f(x)) == spec.evaluate(x)

    def test_pointwise_above_cap(self):
        f = family(FamilySpec.parse("xor", 30))
        assert not f.materialized
        x = (1,) * 3 + (0,) * 27
        assert f(x) == Output.ONE
        with pytest.raises(ArityError):
            f.require_table()

    def test_bad_parameters(self):
        with pytest.raises(ValidationError):
            FamilySpec.parse("exact_half_cnf", 6, 4)
        with pytest.raises(ValidationError):
            FamilySpec.parse("ip", 0)
        with pytest.raises(ValueError):
            FamilySpec.parse("nope", 3)


class TestCnf:
    def test_cnf_eval(self):
        c = CnfDnf(arity=2, kind=ClauseKind.CNF, clauses=((1, -2),))
        assert cnf_eval(c, (0, 1)) == 0
        assert cnf_eval(c, (1, 1)) == 1

    def test_dnf_eval(self):
        eq = CnfDnf(arity=2, kind=ClauseKind.DNF, clauses=((1, 2), (-1, -2)))
        assert eq((1, 1)) == 1
        assert eq((0, 0)) == 1
        assert eq((0, 1)) == 0

    def test_empty_formulas(self):
        cnf = CnfDnf(arity=3, kind=ClauseKind.CNF, clauses=())
        dnf = CnfDnf(arity=3, kind=ClauseKind.DNF, clauses=())
        assert all(cnf(x) == 1 for x in all_inputs(3))
        assert all(dnf(x) == 0 for x in all_inputs(3))

    def test_negated_is_complement(self, rng):
        for _ in range(20):
            n = rng.randint(1, 5)
            clauses = tuple(
                tuple(v if rng.random() < 0.5 else -v for v in rng.sample(range(1, n + 1), rng.randint(1, n)))
                for _ in range(rng.randint(0, 4))
            )
            c = CnfDnf(arity=n, kind=rng.choice(list(ClauseKind)), clauses=clauses)
            for x in all_inputs(n):
                assert c.negated()(x) == 1 - c(x)

    def test_literal_validation(self):
        with pytest.raises(ValidationError):
            CnfDnf(arity=2, kind=ClauseKind.CNF, clauses=((3,),))
        with pytest.raises(ValidationError):
            CnfDnf(arity=2, kind=ClauseKind.CNF, clauses=((1, -1),))

    def test_exact_half_cnf(self):
        sat = lambda c: [x for x in all_inputs(c.arity) if c(x)]  # noqa: E731
        assert sat(exact_half_cnf(2, 2)) == [(1, 0), (0, 1)]
        assert len(sat(exact_half_cnf(4, 2))) == 4
        four = sat(exact_half_cnf(4, 4))
        assert len(four) == 6
        assert all(sum(x) == 2 for x in four)

    def test_exact_half_cnf_matches_family(self):
        c = exact_half_cnf(6, 2)
        f = family(FamilySpec.parse("exact_half_cnf", 6, 2))
        assert from_callable(c, 6) == f


class TestSubstitution:
    def test_duplicate_and_constant(self):
        v = Substitution.build(1, [1, 1, "0"])
        assert v.apply((1,)) == (1, 1, 0)
        assert apply_substitution(maj(3), v, (1,)) == 1
        assert apply_substitution(maj(3), v, (0,)) == 0

    def test_identity(self):
        v = Substitution.identity(3)
        assert v.is_identity
        for x in all_inputs(3):
            assert apply_substitution(maj(3), v, x) == int(maj(3)(x))

    def test_all_constant_one(self):
        conj = from_truth_table([0] * 7 + [1], 3)
        v = Substitution.build(2, ["1", "1", "1"])
        assert all(apply_substitution(conj, v, x) == 1 for x in all_inputs(2))

    def test_composition(self):
        inner = Substitution.build(2, [2, 1, "1"])
        outer = Substitution.build(3, [3, 1, 1])
        assert inner.then(outer).apply((0, 1)) == outer.apply(inner.apply((0, 1)))

    def test_rejects_bad_tokens(self):
        with pytest.raises(ValidationError):
            Substitution(source_arity=2, targets=("x3",))
        with pytest.raises(ValidationError):
            Substitution(source_arity=2, targets=("~x1",))

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            apply_substitution(maj(3), Substitution.identity(2), (0, 1))


class TestComponents:
    def test_small_functions(self):
        assert components(from_truth_table([0, 1, 1, 0], 2)) == 2
        assert components(maj(3)) == 1
        assert components(family(FamilySpec.parse("xor", 3))) == 4

    @pytest.mark.parametrize("n,k,expected", [(4, 2, 4), (6, 2, 8), (4, 4, 6), (6, 6, 20)])
    def test_exact_half_cnf(self, n, k, expected):
        assert components(from_callable(exact_half_cnf(n, k), n)) == expected

    def test_invariant_under_variable_permutation(self, rng):
        for _ in range(30):
            n = rng.randint(1, 6)
            f = from_truth_table([rng.randint(0, 1) for _ in range(1 << n)], n)
            perm = list(range(n))
            rng.shuffle(perm)
            g = from_callable(lambda x: f(tuple(x[perm[i]] for i in range(n))), n)
            assert components(g) == components(f)

    def test_empty_and_full(self):
        assert components(from_truth_table([0] * 8, 3)) == 0
        assert components(from_truth_table([1] * 8, 3)) == 1

    def test_table_is_read_only(self):
        f = maj(3)
        assert isinstance(f.table, np.ndarray)
        with pytest.raises(ValueError):
            f.table[0] = True
