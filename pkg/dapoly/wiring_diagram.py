import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from dapoly.face_enumerator import FaceRecord, SignVector
from dapoly.poset import validate_semilattice
from dapoly.semilattice import Flat, Semilattice
from dapoly.wiring_error import OutOfRangeError, RepeatedCrossingError, WiringError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossingEvent:
    """
        The ``size`` wires at positions top .. top + size - 1 meet in one point
        and leave it in reversed order.
    """

    top: int
    size: int = 2


@dataclass(frozen=True)
class WiringDiagram:
    """
        A pseudoline arrangement in the plane: ``wires`` horizontal wires,
        wire i entering at position i (position 0 drawn on top), crossed by
        the ``events`` from left to right.

        ``final_permutation`` (wire at each position after the last event) is
        filled in by ``validate_wiring``.
    """

    wires: int
    events: Tuple[CrossingEvent, ...] = ()
    final_permutation: Optional[Tuple[int, ...]] = None

    def mirrored(self):
        return WiringDiagram(self.wires, tuple(reversed(self.events)))

    def event_wires(self):
        """The set of wires meeting at each event, in event order."""

        return [frozenset(block) for _, block, _ in _simulate(self)]


def validate_wiring(diagram):
    """
        Replays the diagram and returns it with its final permutation attached.

        Raises OutOfRangeError when an event does not fit the wire positions and
        RepeatedCrossingError when two wires would cross twice.
    """

    if diagram.wires < 1:
        raise OutOfRangeError(f"A wiring diagram needs at least one wire, got {diagram.wires}")

    crossed = set()
    order = list(range(diagram.wires))

    for _, block, order in _simulate(diagram):
        for i, first in enumerate(block):
            for second in block[i + 1:]:
                pair = frozenset((first, second))
                if pair in crossed:
                    raise RepeatedCrossingError(f"Wires {first} and {second} cross twice")
                crossed.add(pair)

    return WiringDiagram(diagram.wires, tuple(diagram.events), tuple(order))


def generic_wiring(wires):
    """
        Bubble-sort reversal: every pair of wires crosses exactly once, always
        two at a time.
    """

    events = [
        CrossingEvent(position, 2)
        for sweep in range(wires)
        for position in range(wires - 1 - sweep)
    ]

    return validate_wiring(WiringDiagram(wires, tuple(events)))


def lattice_from_wiring(diagram):
    """
        Semilattice of a wiring diagram: the plane (id 0), one line per wire
        (id 1 + wire) and one point per event (id 1 + wires + event index).
    """

    diagram = validate_wiring(diagram)
    n = diagram.wires

    flats = [Flat(id=0, dim=2)]
    flats += [Flat(id=1 + wire, dim=1, support=frozenset({wire})) for wire in range(n)]

    leq = [(0, 1 + wire) for wire in range(n)]
    for index, meeting in enumerate(diagram.event_wires()):
        point = 1 + n + index
        flats.append(Flat(id=point, dim=0, support=meeting))
        leq.append((0, point))
        leq += [(1 + wire, point) for wire in sorted(meeting)]

    return validate_semilattice(Semilattice(ambient_dim=2, flats=flats, leq=leq))


def sweep_faces(diagram):
    """
        Faces of the pseudoline arrangement, found by sweeping left to right.

        The n + 1 slots between consecutive wire positions each hold one region.
        At an event of k wires the k - 1 slots between them close at the crossing
        and k - 1 new regions open to its right; every wire in the event starts
        a new edge. A face's sign for wire w is 0 on w, '+' when the face lies at
        larger positions than w and '-' otherwise.
    """

    diagram = validate_wiring(diagram)
    n = diagram.wires
    order = list(range(n))

    region_count = n + 1

    faces = [_region(order, slot) for slot in range(n + 1)]
    faces += [_edge(order, position) for position in range(n)]

    for index, event in enumerate(diagram.events):
        faces.append(_vertex(order, event, 1 + n + index))

        order[event.top:event.top + event.size] = reversed(
            order[event.top:event.top + event.size]
        )

        for position in range(event.top, event.top + event.size):
            faces.append(_edge(order, position))

        for slot in range(event.top + 1, event.top + event.size):
            region_count += 1
            faces.append(_region(order, slot))

    logger.debug("swept %d wires, %d events: %d regions", n, len(diagram.events), region_count)

    return faces


def sweep_f_vector(diagram):
    """
        (f0, f1, f2) counted directly from the sweep, checked against the
        Euler relation f0 - f1 + f2 = 1 of the plane.
    """

    f_vector = [0, 0, 0]
    for face in sweep_faces(diagram):
        f_vector[face.dim] += 1

    f0, f1, f2 = f_vector
    if f0 - f1 + f2 != 1:
        raise WiringError(f"Sweep produced f = {f_vector}, violating f0 - f1 + f2 = 1")

    return tuple(f_vector)


def _simulate(diagram):
    order = list(range(diagram.wires))

    for event in diagram.events:
        if event.size < 2:
            raise OutOfRangeError(f"Event {event} joins fewer than two wires")
        if event.top < 0 or event.top + event.size > diagram.wires:
            raise OutOfRangeError(f"Event {event} exceeds positions 0..{diagram.wires - 1}")

        block = order[event.top:event.top + event.size]
        order = order[:event.top] + block[::-1] + order[event.top + event.size:]

        yield event, tuple(block), order


def _signs(order, sign_of_position):
    signs = [""] * len(order)
    for position, wire in enumerate(order):
        signs[wire] = sign_of_position(position)
    return SignVector("".join(signs))


def _region(order, slot):
    signs = _signs(order, lambda position: "+" if position < slot else "-")
    return FaceRecord(signs, 2, 0)


def _edge(order, position):
    wire = order[position]
    signs = _signs(
        order,
        lambda p: "0" if p == position else ("+" if p < position else "-"),
    )
    return FaceRecord(signs, 1, 1 + wire)


def _vertex(order, event, flat_id):
    end = event.top + event.size
    signs = _signs(
        order,
        lambda p: "0" if event.top <= p < end else ("+" if p < event.top else "-"),
    )
    return FaceRecord(signs, 0, flat_id)
