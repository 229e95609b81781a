"""graph6 codec: bit-exactness against networkx, round-trips, malformed input."""

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismph import (
    Graph,
    Graph6Error,
    complete_graph,
    cycle_graph,
    decode_graph6,
    encode_graph6,
    hypercube_graph,
    star_graph,
)

from helpers import random_graph, to_networkx


def nx_encode(g: Graph) -> str:
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()


class TestEncode:
    def test_hand_packed_values(self):
        assert encode_graph6(complete_graph(4)) == "C~"
        assert encode_graph6(complete_graph(1)) == "@"
        assert encode_graph6(cycle_graph(4)) == "Cl"

    def test_matches_networkx_on_fixed_graphs(self):
        for g in [
            complete_graph(5),
            cycle_graph(7),
            star_graph(6),
            hypercube_graph(3),
            hypercube_graph(4),
            Graph.from_edges(2, []),
            Graph.from_edges(2, [(0, 1)]),
        ]:
            assert encode_graph6(g) == nx_encode(g)

    def test_matches_networkx_randomized(self):
        rng = random.Random(23)
        for _ in range(300):
            g = random_graph(rng.randint(1, 20), rng.random(), rng)
            assert encode_graph6(g) == nx_encode(g)

    def test_long_form_order_header(self):
        g = Graph.from_edges(63, [(0, 62)])
        text = encode_graph6(g)
        assert text.startswith("~")
        assert decode_graph6(text) == g
        assert text == nx_encode(g)

    def test_order_zero(self):
        assert encode_graph6(Graph.from_edges(0, [])) == "?"


class TestDecode:
    def test_round_trip_fixed(self):
        for text in ["C~", "@", "Cl", "EhEG", "E{Sw", "GsXP_["]:
            assert encode_graph6(decode_graph6(text)) == text

    def test_accepts_bytes_and_optional_header(self):
        g = decode_graph6(b">>graph6<<C~")
        assert g == complete_graph(4)
        assert decode_graph6("C~\n") == complete_graph(4)

    def test_truncated_payload_reports_offset(self):
        with pytest.raises(Graph6Error) as err:
            decode_graph6("C")  # n=4 needs one payload byte
        assert err.value.offset == 1

    def test_trailing_bytes_report_offset(self):
        with pytest.raises(Graph6Error) as err:
            decode_graph6("C~~")
        assert err.value.offset == 2

    def test_out_of_range_byte_reports_offset(self):
        with pytest.raises(Graph6Error) as err:
            decode_graph6("C ")
        assert err.value.offset == 1

    def test_nonzero_padding_rejected(self):
        # n=2: one payload byte holding 1 adjacency bit; low 5 bits must be 0
        with pytest.raises(Graph6Error):
            decode_graph6("A" + chr(63 + 1))

    def test_empty_input_rejected(self):
        with pytest.raises(Graph6Error):
            decode_graph6("")

    def test_non_ascii_rejected(self):
        with pytest.raises(Graph6Error):
            decode_graph6("Ā~")

    def test_decodes_networkx_output(self):
        rng = random.Random(29)
        for _ in range(100):
            g = random_graph(rng.randint(1, 16), rng.random(), rng)
            assert decode_graph6(nx_encode(g)) == g


class TestRoundTripProperty:
    @settings(max_examples=200)
    @given(st.data())
    def test_round_trip_identity(self, data):
        n = data.draw(st.integers(min_value=1, max_value=12))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        g = Graph.from_edges(n, chosen)
        assert decode_graph6(encode_graph6(g)) == g
