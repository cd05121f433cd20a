"""Reading samples from disk into :class:`~moezipf.estimate.FrequencyTable`.

Three plain-text layouts are understood, all UTF-8 with ``#`` comment lines
and blank lines ignored:

``observations``
    one positive integer per line;
``freq_table``
    ``value<TAB>count`` per line;
``edge_list``
    ``src<TAB>dst`` per line; the sample is the degree of every node in the
    chosen direction (``out``, ``in`` or ``total``).
"""

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyData, ParseError, ZeroValue
from .estimate import FrequencyTable

__all__ = ["IngestSpec", "ingest", "FORMATS", "DIRECTIONS", "ZERO_POLICIES"]

FORMATS = ("observations", "freq_table", "edge_list")
DIRECTIONS = ("out", "in", "total")
ZERO_POLICIES = ("drop", "error")


@dataclass(frozen=True)
class IngestSpec:
    format: str
    path: Path
    direction: str = "out"
    zero_policy: str = "drop"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; choose from {FORMATS}")
        if self.direction not in DIRECTIONS:
            raise ValueError(f"unknown direction {self.direction!r}")
        if self.zero_policy not in ZERO_POLICIES:
            raise ValueError(f"unknown zero policy {self.zero_policy!r}")
        object.__setattr__(self, "path", Path(self.path))


def _lines(path):
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if line and not line.startswith("#"):
                yield lineno, line


def _parse_int(token, lineno, what):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"{what} {token!r} is not an integer", lineno) from None
    if value < 0:
        raise ParseError(f"{what} {value} is negative", lineno)
    return value


def _zero(policy, lineno, what):
    if policy == "error":
        raise ZeroValue(f"line {lineno}: zero {what}" if lineno else f"zero {what}")


def _read_observations(spec):
    counts = Counter()
    for lineno, line in _lines(spec.path):
        fields = line.split()
        if len(fields) != 1:
            raise ParseError("expected a single integer", lineno)
        value = _parse_int(fields[0], lineno, "value")
        if value == 0:
            _zero(spec.zero_policy, lineno, "value")
            continue
        counts[value] += 1
    return counts


def _read_freq_table(spec):
    counts = Counter()
    for lineno, line in _lines(spec.path):
        fields = line.split("\t") if "\t" in line else line.split()
        if len(fields) != 2:
            raise ParseError("expected 'value<TAB>count'", lineno)
        value = _parse_int(fields[0].strip(), lineno, "value")
        count = _parse_int(fields[1].strip(), lineno, "count")
        if value == 0 or count == 0:
            _zero(spec.zero_policy, lineno, "value" if value == 0 else "count")
            continue
        counts[value] += count
    return counts


def _read_edge_list(spec):
    out_deg, in_deg = Counter(), Counter()
    for lineno, line in _lines(spec.path):
        fields = line.split("\t") if "\t" in line else line.split()
        if len(fields) != 2:
            raise ParseError("expected 'src<TAB>dst'", lineno)
        src, dst = fields[0].strip(), fields[1].strip()
        if not src or not dst:
            raise ParseError("empty node id", lineno)
        out_deg[src] += 1
        in_deg[dst] += 1
        out_deg.setdefault(dst, 0)
        in_deg.setdefault(src, 0)
    if spec.direction == "out":
        degree = out_deg
    elif spec.direction == "in":
        degree = in_deg
    else:
        degree = out_deg + in_deg
        for node in out_deg.keys() | in_deg.keys():
            degree.setdefault(node, 0)
    counts = Counter()
    for node in sorted(degree):
        d = degree[node]
        if d == 0:
            _zero(spec.zero_policy, None, f"degree for node {node!r}")
            continue
        counts[d] += 1
    return counts


_READERS = {
    "observations": _read_observations,
    "freq_table": _read_freq_table,
    "edge_list": _read_edge_list,
}


def ingest(spec):
    """Load the file described by ``spec`` as a frequency table.

    The result depends only on the multiset of lines, not on their order.

    Raises
    ------
    ParseError
        Malformed line; the message carries the line number.
    EmptyData
        No positive observation survived.
    ZeroValue
        A zero was met under ``zero_policy="error"``.
    """
    counts = _READERS[spec.format](spec)
    if not counts:
        raise EmptyData(f"{spec.path}: no positive observations")
    return FrequencyTable.from_mapping(counts)
