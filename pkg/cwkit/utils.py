import logging
import time

__all__ = [
    "iter_bits",
    "bit_of",
    "mask_of",
    "popcount",
    "lowest_bit",
    "Budget",
    "setup_logging",
]


def iter_bits(mask):
    """Yield the positions of the set bits of `mask`, lowest first.

    :param mask: a non-negative integer used as a bitset
    :type mask: int
    :return: generator of bit positions
    :rtype: Iterator[int]
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_of(vertex):
    """Bit of a 1-based vertex id."""
    return 1 << (vertex - 1)


def mask_of(vertices):
    """Bitset of an iterable of 1-based vertex ids."""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def popcount(mask):
    return bin(mask).count("1")


def lowest_bit(mask):
    """Position of the lowest set bit of a non-zero `mask`."""
    return (mask & -mask).bit_length() - 1


class Budget:
    """Wall-clock (and optionally node-count) budget shared by one search.

    Searches call :meth:`tick` once per expanded node and stop when it returns `False`.
    Running out of budget only ever turns an answer into "unknown".

    :param seconds: wall-clock seconds, `None` for no time limit
    :type seconds: float, optional
    :param nodes: maximal number of expanded nodes, `None` for no limit
    :type nodes: int, optional
    """

    # polling the clock on every node is measurably slow
    CLOCK_EVERY = 256

    def __init__(self, seconds=None, nodes=None):
        self.seconds = seconds
        self.nodes = nodes
        self.start = time.monotonic()
        self.expanded = 0
        self._expired = False

    @classmethod
    def of(cls, budget):
        """Coerce `None`, a number of seconds or a Budget into a fresh Budget."""
        if isinstance(budget, Budget):
            return budget
        return cls(seconds=budget)

    def tick(self):
        self.expanded += 1
        if self._expired:
            return False
        if self.nodes is not None and self.expanded > self.nodes:
            self._expired = True
        elif self.seconds is not None and self.expanded % self.CLOCK_EVERY == 0:
            self._expired = self.elapsed() > self.seconds
        return not self._expired

    def expired(self):
        if not self._expired and self.seconds is not None:
            self._expired = self.elapsed() > self.seconds
        return self._expired

    def elapsed(self):
        return time.monotonic() - self.start

    def remaining(self):
        if self.seconds is None:
            return None
        return max(0.0, self.seconds - self.elapsed())

    def split(self, share):
        """A child budget holding `share` of the remaining time."""
        remaining = self.remaining()
        return Budget(
            seconds=None if remaining is None else remaining * share, nodes=self.nodes
        )


def setup_logging(verbose=False):
    """Route library logging through rich. Called by the CLI only.

    :param verbose: log at DEBUG instead of INFO
    :type verbose: bool
    """
    from rich.logging import RichHandler

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(rich_tracebacks=True, show_path=False)],
    )
