import logging
import random
from fractions import Fraction
from math import comb

from dapoly.hyperplane_arrangement import Arrangement, Hyperplane
from dapoly.input_document import InputDocument
from dapoly.input_error import ParamError
from dapoly.wiring_diagram import CrossingEvent, WiringDiagram, validate_wiring

DEFAULT_BOUND = 5
MAX_REDRAWS = 1000
MAX_EVENT_SIZE = 3

logger = logging.getLogger(__name__)


def random_arrangement(*, dim, count, bound=DEFAULT_BOUND, seed):
    """
        Seeded random rational arrangement.

        :param dim: ambient dimension n >= 1.
        :param count: number of hyperplanes m >= 0.
        :param bound: numerators lie in [-bound, bound], denominators in [1, bound].
        :param seed: mandatory; equal seeds give equal arrangements.

        Zero normals and hyperplanes equal to an earlier one are redrawn.
    """

    if dim < 1 or count < 0 or bound < 1:
        raise ParamError(f"Need dim >= 1, count >= 0, bound >= 1; got {dim}, {count}, {bound}")
    if seed is None:
        raise ParamError("A seed is required for reproducible output")

    rng = random.Random(seed)
    hyperplanes = []
    redraws = 0

    while len(hyperplanes) < count:
        normal = [_rational(rng, bound) for _ in range(dim)]
        offset = _rational(rng, bound)

        if any(entry != 0 for entry in normal):
            hyperplane = Hyperplane.of(normal, offset)
            if hyperplane not in hyperplanes:
                hyperplanes.append(hyperplane)
                continue

        redraws += 1
        if redraws > MAX_REDRAWS:
            raise ParamError(
                f"Could not draw {count} distinct hyperplanes in dimension {dim} with bound {bound}"
            )

    logger.debug("drew %d hyperplanes with %d redraws (seed %s)", count, redraws, seed)

    return InputDocument("hyperplanes", Arrangement.of(dim, hyperplanes))


def random_wiring(*, wires, crossings=None, seed):
    """
        Seeded random wiring diagram.

        :param wires: number of wires n >= 1.
        :param crossings: number of events wanted, at most C(n, 2); defaults to
        a random count. Fewer are produced when no pair of adjacent wires is left
        uncrossed.
        :param seed: mandatory; equal seeds give equal diagrams.

        Events join two wires, occasionally three, and never a pair that has
        already crossed.
    """

    if wires < 1:
        raise ParamError(f"Need at least one wire, got {wires}")
    if seed is None:
        raise ParamError("A seed is required for reproducible output")

    rng = random.Random(seed)

    if crossings is None:
        crossings = rng.randint(0, comb(wires, 2))
    if not 0 <= crossings <= comb(wires, 2):
        raise ParamError(f"{wires} wires allow 0..{comb(wires, 2)} crossings, got {crossings}")

    order = list(range(wires))
    crossed = set()
    events = []

    while len(events) < crossings:
        candidates = [
            CrossingEvent(top, size)
            for size in range(2, MAX_EVENT_SIZE + 1)
            for top in range(wires - size + 1)
            if _uncrossed(order[top:top + size], crossed)
        ]
        if not candidates:
            logger.debug("no applicable event left after %d crossings", len(events))
            break

        # two-wire events dominate; a triple point now and then
        simple = [event for event in candidates if event.size == 2]
        event = rng.choice(simple if simple and rng.random() < 0.8 else candidates)

        block = order[event.top:event.top + event.size]
        crossed.update(frozenset((a, b)) for i, a in enumerate(block) for b in block[i + 1:])
        order[event.top:event.top + event.size] = reversed(block)
        events.append(event)

    return InputDocument("wiring", validate_wiring(WiringDiagram(wires, tuple(events))))


def _rational(rng, bound):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _uncrossed(block, crossed):
    return all(
        frozenset((a, b)) not in crossed for i, a in enumerate(block) for b in block[i + 1:]
    )
