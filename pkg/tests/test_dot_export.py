"""DOT emission: node declarations, style passthrough, precedence."""

import pytest

from prismph import (
    Pairing,
    complete_graph,
    cycle_graph,
    export_dot,
    extend,
    memoized_base_oracle,
    prism_power,
)


class TestExportDot:
    def test_plain_output_declares_all_nodes(self):
        text = export_dot(cycle_graph(4))
        assert text.startswith("graph G {")
        for v in range(4):
            assert f"  {v};" in text
        assert "[style=" not in text
        assert text.count(" -- ") == 4

    def test_every_pairing_edge_gets_the_style(self):
        g = cycle_graph(6)
        pairing = ((0, 3), (1, 4), (2, 5))
        text = export_dot(g, [(pairing, "bold")])
        for u, v in pairing:
            assert f"{u} -- {v} [style=bold];" in text

    def test_highlights_may_use_non_edges(self):
        g = cycle_graph(4)
        text = export_dot(g, [(((0, 2),), "dashed")])
        assert "0 -- 2 [style=dashed];" in text

    def test_out_of_range_highlight_rejected(self):
        with pytest.raises(ValueError):
            export_dot(cycle_graph(4), [(((0, 9),), "bold")])

    def test_earlier_style_wins(self):
        g = cycle_graph(4)
        text = export_dot(g, [(((0, 1),), "bold"), (((0, 1),), "dotted")])
        assert "0 -- 1 [style=bold];" in text
        assert "dotted" not in text

    def test_custom_graph_name(self):
        assert export_dot(cycle_graph(3), name="prism").startswith("graph prism {")

    def test_extension_render_has_three_styles(self):
        tower = prism_power(complete_graph(4), 1)
        oracle = memoized_base_oracle(complete_graph(4))
        p = Pairing(8, ((0, 1), (2, 3), (4, 7), (5, 6)))
        m, trace = extend(p, tower, oracle)
        text = export_dot(
            tower.top,
            [(p.pairs, "bold"), (m.pairs, "dashed"), (trace.accent_edges(), "dotted")],
        )
        assert "[style=bold]" in text
        assert "[style=dashed]" in text
        assert "[style=dotted]" in text
