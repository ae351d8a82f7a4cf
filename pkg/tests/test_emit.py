import pytest

from nnrepr.constructions import disj_hnn
from nnrepr.core.types import Comparison
from nnrepr.emit import EDGE, GATE_NODE, circuit_to_dot, gate_label
from nnrepr.models import Gate
from nnrepr.passes import hnn_to_depth2, hnn_to_depth3


class TestDot:
    def test_depth2_nodes(self):
        dot = circuit_to_dot(hnn_to_depth2(disj_hnn(2)), name="disj2")
        assert dot.startswith("digraph disj2 {")
        assert dot.count("shape=circle") == 48
        assert dot.count("shape=doublecircle") == 1
        assert dot.count("shape=plaintext") == 4

    def test_edges_carry_weights(self):
        c = hnn_to_depth3(disj_hnn(1))
        dot = circuit_to_dot(c)
        edges = sum(len(g.inputs) for g in c.gates)
        assert dot.count(" -> ") == edges
        assert 'g0 [shape=circle' in dot

    def test_gate_label(self):
        assert gate_label(Gate(inputs=(0,), weights=(1,), threshold=1, kind="or")) == "or >= 1"
        eq = Gate(inputs=(0,), weights=(1,), threshold=0, comparison=Comparison.EQ, kind="thr")
        assert gate_label(eq) == "thr = 0"


class TestTemplates:
    def test_missing_variable(self):
        with pytest.raises(ValueError, match="shape"):
            GATE_NODE.format(index=0, label="x")

    def test_edge(self):
        assert EDGE.format(tail="x1", head="g0", weight=-2) == '  x1 -> g0 [label="-2"];'
