import pytest

from edgecurv import parse_hyperedges

# Hyperedge "red": tail {g, x}, head {s, y}. g is a source, s a sink.
# x is fed from the top-middle vertex t, and y feeds back into t and into
# the pair {r1, r2}; z is a passive extra output of the feeding reaction.
GOLDEN = """\
# red hyperedge and its neighborhood
g,x -> s,y | red
t -> x,z | feed
y -> t | back
y -> r1,r2 | out
"""


def shortcut_net(variant: str, extra: str = "") -> str:
    """Black hyperedge a,b -> c,d with red in/out neighbors.

    ``variant="left"``: red edges lead to fresh vertices (no shortcuts).
    ``variant="right"``: the red outputs of the head return to the red inputs of
    the tail (directed triangles). ``extra`` is ``"blue"`` (quadrangle:
    u -> a, c -> h, u -> h) or ``"green"`` (pentagon: u -> a, c -> h,
    u -> z, z -> h).
    """
    lines = ["a,b -> c,d | black", "x -> a | red1", "y -> b | red2"]
    if variant == "left":
        lines += ["c -> p | red3", "d -> q | red4"]
    else:
        lines += ["c -> x | red3", "d -> y | red4"]
    if extra == "blue":
        lines += ["u -> a | blue1", "c -> h | blue2", "u -> h | blue3"]
    elif extra == "green":
        lines += ["u -> a | green1", "c -> h | green2", "u -> z | green3", "z -> h | green4"]
    return "\n".join(lines) + "\n"


@pytest.fixture
def golden_net():
    return parse_hyperedges(GOLDEN)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
