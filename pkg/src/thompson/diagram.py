"""
Diagram Module
==============

The closure link of a ternary tree diagram as a planar diagram with
crossings, used as an oracle for the permutation side of the package.

Every caret of both trees becomes a crossing. At a crossing the strand through
the left and right child ports is one strand and the strand through the middle
child and parent ports is the other. Leaf i of the top tree is glued to leaf i
of the bottom tree through axis point i, and the two root edges are joined
through axis point 0.

Components are traced on this structure alone, without the path rules of the
permutation module.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Tuple, Union

from .errors import MalformedDiagramError, UnreducedPairError, UnsupportedFormatError
from .trees import PlanarTree, TreePair, as_ternary, is_reduced

logger = logging.getLogger(__name__)


class Port(IntEnum):
    PARENT = 0
    LEFT = 1
    MIDDLE = 2
    RIGHT = 3
    # axis points
    ABOVE = 4
    BELOW = 5


THROUGH = {
    Port.LEFT: Port.RIGHT,
    Port.RIGHT: Port.LEFT,
    Port.MIDDLE: Port.PARENT,
    Port.PARENT: Port.MIDDLE,
    Port.ABOVE: Port.BELOW,
    Port.BELOW: Port.ABOVE,
}

CROSSING_PORTS = (Port.PARENT, Port.LEFT, Port.MIDDLE, Port.RIGHT)


class Side(str, Enum):
    TOP = "top"
    BOTTOM = "bottom"


class CrossingConvention(str, Enum):
    LR_OVER = "lr-over"
    MP_OVER = "mp-over"


class CodeFormat(str, Enum):
    PD = "pd"
    GAUSS = "gauss"


# counterclockwise around a caret; bottom carets are drawn upside down
CCW_ORDER = {
    Side.TOP: (Port.PARENT, Port.LEFT, Port.MIDDLE, Port.RIGHT),
    Side.BOTTOM: (Port.PARENT, Port.RIGHT, Port.MIDDLE, Port.LEFT),
}

OVER_PORTS = {
    CrossingConvention.LR_OVER: frozenset({Port.LEFT, Port.RIGHT}),
    CrossingConvention.MP_OVER: frozenset({Port.MIDDLE, Port.PARENT}),
}


class StrandEnd(NamedTuple):
    """A crossing port (node = crossing id) or one side of an axis point (node = axis index)."""

    node: int
    port: Port

    @property
    def is_axis(self) -> bool:
        return self.port in (Port.ABOVE, Port.BELOW)


@dataclass(frozen=True)
class Crossing:
    id: int
    side: Side
    over: FrozenSet[Port]

    @property
    def label(self) -> int:
        return self.id + 1

    @property
    def ccw(self) -> Tuple[Port, ...]:
        return CCW_ORDER[self.side]


@dataclass(frozen=True)
class LinkDiagram:
    crossings: Tuple[Crossing, ...]
    axis_points: int
    links: Dict[StrandEnd, StrandEnd] = field(repr=False)
    convention: CrossingConvention = CrossingConvention.LR_OVER

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


class _Builder:
    def __init__(self, convention: CrossingConvention):
        self.convention = convention
        self.crossings: List[Crossing] = []
        self.links: Dict[StrandEnd, StrandEnd] = {}

    def join(self, a: StrandEnd, b: StrandEnd):
        for end in (a, b):
            if end in self.links:
                raise MalformedDiagramError(f"Strand end {end} is joined twice.")
        self.links[a] = b
        self.links[b] = a

    def add_tree(self, tree: PlanarTree, side: Side) -> StrandEnd:
        """Add the carets of ``tree`` (pre-order) and return the upper end of its root edge."""
        leaf_side = Port.ABOVE if side is Side.TOP else Port.BELOW
        counter = iter(range(1, tree.leaves + 1))

        def add(node: PlanarTree) -> StrandEnd:
            if node.is_leaf:
                return StrandEnd(next(counter), leaf_side)
            crossing = Crossing(len(self.crossings), side, OVER_PORTS[self.convention])
            self.crossings.append(crossing)
            for port, child in zip((Port.LEFT, Port.MIDDLE, Port.RIGHT), node.children):
                self.join(StrandEnd(crossing.id, port), add(child))
            return StrandEnd(crossing.id, Port.PARENT)

        return add(tree)


def build_diagram(
    pair: TreePair,
    convention: Union[CrossingConvention, str] = CrossingConvention.LR_OVER,
    allow_unreduced: bool = False,
) -> LinkDiagram:
    """Closure diagram of a reduced tree diagram; binary pairs are lifted through iota."""
    pair = as_ternary(pair)
    if not allow_unreduced and not is_reduced(pair):
        raise UnreducedPairError(f"{pair} has opposing carets; reduce it or pass allow_unreduced=True.")
    builder = _Builder(CrossingConvention(convention))
    top_root = builder.add_tree(pair.top, Side.TOP)
    bottom_root = builder.add_tree(pair.bottom, Side.BOTTOM)
    builder.join(StrandEnd(0, Port.ABOVE), top_root)
    builder.join(StrandEnd(0, Port.BELOW), bottom_root)
    diagram = LinkDiagram(tuple(builder.crossings), pair.leaves + 1, builder.links, CrossingConvention(convention))
    _validate(diagram)
    logger.debug("Built closure of %s with %d crossings", pair, diagram.crossing_count)
    return diagram


def flip_crossings(diagram: LinkDiagram) -> LinkDiagram:
    flipped = tuple(
        Crossing(crossing.id, crossing.side, frozenset(CROSSING_PORTS) - crossing.over)
        for crossing in diagram.crossings
    )
    other = (
        CrossingConvention.MP_OVER
        if diagram.convention is CrossingConvention.LR_OVER
        else CrossingConvention.LR_OVER
    )
    return LinkDiagram(flipped, diagram.axis_points, diagram.links, other)


def _all_ends(diagram: LinkDiagram) -> Iterator[StrandEnd]:
    for crossing in diagram.crossings:
        for port in CROSSING_PORTS:
            yield StrandEnd(crossing.id, port)
    for point in range(diagram.axis_points):
        yield StrandEnd(point, Port.ABOVE)
        yield StrandEnd(point, Port.BELOW)


def _validate(diagram: LinkDiagram):
    expected = set(_all_ends(diagram))
    for end in expected:
        other = diagram.links.get(end)
        if other is None:
            raise MalformedDiagramError(f"Strand end {end} is dangling.")
        if other not in expected or diagram.links.get(other) != end:
            raise MalformedDiagramError(f"Strand ends {end} and {other} are not joined symmetrically.")
    if len(diagram.links) != len(expected):
        raise MalformedDiagramError("The diagram joins strand ends that belong to no crossing or axis point.")


def _follow(diagram: LinkDiagram, start: StrandEnd) -> List[StrandEnd]:
    """Ends entered along the closed curve that enters its node through ``start``."""
    entered = []
    end = start
    bound = len(diagram.links)
    while True:
        entered.append(end)
        if len(entered) > bound:
            raise MalformedDiagramError(f"Walk from {start} does not close up.")
        end = diagram.links[StrandEnd(end.node, THROUGH[end.port])]
        if end == start:
            return entered


def trace_components(diagram: LinkDiagram) -> int:
    """Number of closed curves, over and under ignored."""
    _validate(diagram)
    seen = set()
    count = 0
    for end in _all_ends(diagram):
        if end in seen:
            continue
        count += 1
        for entered in _follow(diagram, end):
            seen.add(entered)
            seen.add(StrandEnd(entered.node, THROUGH[entered.port]))
    return count


def oriented_components(diagram: LinkDiagram) -> List[List[StrandEnd]]:
    """Every component as its entered ends, starting upward at its smallest axis point.

    Components are listed by increasing smallest axis point.
    """
    _validate(diagram)
    seen = set()
    components = []
    for point in range(diagram.axis_points):
        start = StrandEnd(point, Port.BELOW)
        if start in seen:
            continue
        walk = _follow(diagram, start)
        for entered in walk:
            seen.add(entered)
            seen.add(StrandEnd(entered.node, THROUGH[entered.port]))
        components.append(walk)
    if len(seen) != len(diagram.links):
        raise MalformedDiagramError("A component of the closure misses the axis.")
    return components


def axis_cycles(diagram: LinkDiagram) -> List[Tuple[int, ...]]:
    """Axis points in the order each oriented component meets them."""
    return [tuple(end.node for end in walk if end.is_axis) for walk in oriented_components(diagram)]


def _passages(walk: List[StrandEnd]) -> List[StrandEnd]:
    return [end for end in walk if not end.is_axis]


def _entering_ports(diagram: LinkDiagram) -> Dict[int, List[Port]]:
    entering = defaultdict(list)
    for walk in oriented_components(diagram):
        for end in _passages(walk):
            entering[end.node].append(end.port)
    return entering


def crossing_signs(diagram: LinkDiagram) -> List[int]:
    """+1 or -1 per crossing under the upward orientation at each smallest axis point."""
    entering = _entering_ports(diagram)
    signs = []
    for crossing in diagram.crossings:
        under_in = _under_in(crossing, entering[crossing.id])
        ccw = _rotate(crossing.ccw, under_in)
        over_in = next(port for port in entering[crossing.id] if port in crossing.over)
        signs.append(1 if ccw.index(over_in) == 3 else -1)
    return signs


def _under_in(crossing: Crossing, entering: List[Port]) -> Port:
    for port in entering:
        if port not in crossing.over:
            return port
    raise MalformedDiagramError(f"No strand enters crossing {crossing.label} from below.")


def _rotate(ccw: Tuple[Port, ...], first: Port) -> Tuple[Port, ...]:
    start = ccw.index(first)
    return ccw[start:] + ccw[:start]


def _edge_labels(diagram: LinkDiagram) -> Dict[StrandEnd, int]:
    # edge t of a component enters passage t; labels run on across components
    labels = {}
    next_label = 1
    for walk in oriented_components(diagram):
        passages = _passages(walk)
        for position, end in enumerate(passages):
            labels[end] = next_label + position
            following = next_label + (position + 1) % len(passages)
            labels[StrandEnd(end.node, THROUGH[end.port])] = following
        next_label += len(passages)
    return labels


def pd_code(diagram: LinkDiagram) -> List[Tuple[int, int, int, int]]:
    """One tuple per crossing, counterclockwise from the incoming under edge."""
    entering = _entering_ports(diagram)
    labels = _edge_labels(diagram)
    code = []
    for crossing in diagram.crossings:
        ccw = _rotate(crossing.ccw, _under_in(crossing, entering[crossing.id]))
        code.append(tuple(labels[StrandEnd(crossing.id, port)] for port in ccw))
    return code


def gauss_code(diagram: LinkDiagram) -> List[List[str]]:
    """Signed over/under tokens per component, components by smallest axis point."""
    signs = crossing_signs(diagram)
    by_id = {crossing.id: crossing for crossing in diagram.crossings}
    code = []
    for walk in oriented_components(diagram):
        tokens = []
        for end in _passages(walk):
            crossing = by_id[end.node]
            level = "O" if end.port in crossing.over else "U"
            sign = "+" if signs[crossing.id] > 0 else "-"
            tokens.append(f"{level}{sign}{crossing.label}")
        code.append(tokens)
    return code


def export_code(diagram: LinkDiagram, fmt: Union[CodeFormat, str]) -> str:
    try:
        fmt = CodeFormat(fmt)
    except ValueError:
        raise UnsupportedFormatError(f"Unknown diagram code format: {fmt!r} (expected pd or gauss).")
    lines = [f"components={trace_components(diagram)} crossings={diagram.crossing_count}"]
    if fmt is CodeFormat.PD:
        lines.extend("X[" + ",".join(str(label) for label in row) + "]" for row in pd_code(diagram))
    else:
        lines.extend(" ".join(tokens) for tokens in gauss_code(diagram))
    return "\n".join(lines) + "\n"


def component_count(pair: TreePair, allow_unreduced: bool = False) -> int:
    return trace_components(build_diagram(pair, allow_unreduced=allow_unreduced))
