import io

import pytest

from hamspec.errors import (
    Graph6Error,
    MalformedCharacterError,
    PaddingError,
    TruncationError,
    UnsupportedSizeError,
)
from hamspec.graph import Graph, complete_graph, enumerate_labeled, path_graph, petersen_graph
from hamspec.graph6 import (
    encode_graph6,
    iter_graph6_records,
    parse_graph6,
    read_graph6_file,
    write_graph6,
)


@pytest.mark.parametrize("text,graph", [
    ("@", Graph(1, (0,))),
    ("Bw", complete_graph(3)),
    ("Bg", path_graph(3)),
    ("C~", complete_graph(4)),
])
def test_known_strings(text, graph):
    assert parse_graph6(text) == graph
    assert encode_graph6(graph) == text


def test_petersen_encoding():
    assert encode_graph6(petersen_graph()) == "IheA@GUAo"


@pytest.mark.parametrize("n", range(1, 6))
def test_round_trip_small_corpus(n):
    for g in enumerate_labeled(n):
        text = encode_graph6(g)
        assert parse_graph6(text) == g
        assert encode_graph6(parse_graph6(text)) == text


def test_header_and_line_endings():
    assert parse_graph6(">>graph6<<Bw\r\n") == complete_graph(3)


@pytest.mark.parametrize("text,error", [
    ("???", MalformedCharacterError),
    ("B w", MalformedCharacterError),
    ("Bé", MalformedCharacterError),
    ("", TruncationError),
    ("C", TruncationError),
    ("Bww", TruncationError),
    ("Bx", PaddingError),
    ("~~??????????", UnsupportedSizeError),
])
def test_rejections(text, error):
    with pytest.raises(error):
        parse_graph6(text)


def test_malformed_message_mentions_it():
    with pytest.raises(Graph6Error, match="malformed"):
        parse_graph6("???")


def test_four_byte_prefix_for_large_orders():
    n = 63
    nbytes = -(-n * (n - 1) // 2 // 6)
    body = "?" * nbytes
    g = parse_graph6("~??~" + body)
    assert g.n == 63 and g.num_edges == 0
    with pytest.raises(UnsupportedSizeError):
        parse_graph6("~?A?" + body)  # n = 65
    with pytest.raises(TruncationError):
        parse_graph6("~?")


def test_encoder_limit():
    with pytest.raises(UnsupportedSizeError):
        encode_graph6(Graph(63, (0,) * 63))


def test_records_report_line_numbers():
    lines = ["Bw\n", "\n", "B!\n"]
    records = iter_graph6_records(lines)
    assert next(records)[:2] == (1, "Bw")
    with pytest.raises(MalformedCharacterError, match="line 3"):
        next(records)


def test_fixture_file(small_g6):
    graphs = read_graph6_file(str(small_g6))
    texts = [encode_graph6(g) for g in graphs]
    assert texts[:3] == ["@", "Bw", "Bg"]
    assert small_g6.read_text().splitlines()[1:] == texts[1:]
    buf = io.StringIO()
    write_graph6(graphs, buf)
    assert buf.getvalue().splitlines() == texts
