"""Vector simulation, toggle collection and oracle verification.

Evaluation is zero-delay: each applied vector settles completely before
the next one, so a net toggles at most once per vector boundary. Toggle
counts divided by the total applied time (vectors - 1 boundaries at a
fixed interval) feed the switching-power model in
:mod:`adderlab.analyze`.

Random stimulus comes from a fixed 64-bit shift/multiply generator
(splitmix64) so that identical seeds produce identical vector streams
everywhere, independent of Python's hash randomization or platform:

    word(k) = mix(seed + k * 0x9E3779B97F4A7C15)   for k = 1, 2, ...
    mix(z):  z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
             z ^= z >> 27;  z *= 0x94D049BB133111EB
             z ^= z >> 31   (all arithmetic mod 2**64)

Vector v (0-based) consumes words v*nwords+1 .. (v+1)*nwords, where
nwords = ceil((2*width + 1) / 64). The words are concatenated first
word most significant, and the top 2*width+1 bits are sliced MSB-first
into a (width bits), then b (width bits), then cin (1 bit).

Internally, batches of vectors are evaluated bit-parallel: one Python
integer per net holds that net's value across every vector in the
batch, so a gate evaluation is a single wide bitwise operation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arch import ArchitectureSpec, coerce_arch
from .errors import InsufficientVectors, InvalidWidth
from .generate import compose
from .netlist import CellKind, Netlist, topo_order

# ---------------------------------------------------------------------------
# Pseudo-random vector stream
# ---------------------------------------------------------------------------

GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MUL_1 = 0xBF58476D1CE4E5B9
MIX_MUL_2 = 0x94D049BB133111EB
_M64 = (1 << 64) - 1


def prng_word(seed: int, index: int) -> int:
    """The index-th raw 64-bit word of the stream (index starts at 1)."""
    z = (seed + index * GOLDEN_GAMMA) & _M64
    z = ((z ^ (z >> 30)) * MIX_MUL_1) & _M64
    z = ((z ^ (z >> 27)) * MIX_MUL_2) & _M64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class InputVector:
    """One applied input combination."""

    a: int
    b: int
    cin: int


def random_vectors(width: int, count: int, seed: int) -> list[InputVector]:
    """The first ``count`` vectors of the documented stream for this width."""
    if width < 1:
        raise InvalidWidth(f"width must be >= 1, got {width}")
    nbits = 2 * width + 1
    nwords = -(-nbits // 64)
    spare = 64 * nwords - nbits
    mask = (1 << width) - 1
    out: list[InputVector] = []
    for v in range(count):
        big = 0
        for j in range(nwords):
            big = (big << 64) | prng_word(seed, v * nwords + 1 + j)
        top = big >> spare
        out.append(InputVector(a=top >> (width + 1), b=(top >> 1) & mask, cin=top & 1))
    return out


# ---------------------------------------------------------------------------
# Bit-parallel evaluation
# ---------------------------------------------------------------------------


def _eval_packed(
    nl: Netlist,
    pi_cols: dict[int, int],
    nrows: int,
    order: tuple[int, ...] | None = None,
) -> list[int]:
    """Evaluate all nets over ``nrows`` packed rows; returns one int per net."""
    mask = (1 << nrows) - 1
    values = [0] * len(nl.nets)
    for nid, col in pi_cols.items():
        values[nid] = col
    if order is None:
        order = topo_order(nl)
    for gid in order:
        g = nl.gates[gid]
        kind = g.kind
        if kind is CellKind.INV:
            out = mask ^ values[g.inputs[0]]
        elif kind is CellKind.XOR2:
            out = values[g.inputs[0]] ^ values[g.inputs[1]]
        elif kind in (CellKind.AND2, CellKind.AND3, CellKind.AND4):
            out = values[g.inputs[0]]
            for nid in g.inputs[1:]:
                out &= values[nid]
        else:
            out = values[g.inputs[0]]
            for nid in g.inputs[1:]:
                out |= values[nid]
        values[g.output] = out
    return values


def _check_vector(width: int, v: InputVector) -> None:
    limit = 1 << width
    if not (0 <= v.a < limit and 0 <= v.b < limit and v.cin in (0, 1)):
        raise InvalidWidth(f"vector {v} does not fit width {width}")


def evaluate(nl: Netlist, vector: InputVector) -> tuple[int, int, list[int]]:
    """Single-vector evaluation: (sum value, cout bit, value per net id)."""
    _check_vector(nl.width, vector)
    cols = {nid: (vector.a >> i) & 1 for i, nid in enumerate(nl.a)}
    for i, nid in enumerate(nl.b):
        cols[nid] = (vector.b >> i) & 1
    cols[nl.cin] = vector.cin
    values = _eval_packed(nl, cols, 1)
    s = 0
    for i, nid in enumerate(nl.sums):
        s |= values[nid] << i
    return s, values[nl.cout], values


def _pack_columns(values: list[int], nbits: int) -> list[int]:
    """Per-row integers -> per-bit column bitvectors (bit r = row r)."""
    n = len(values)
    if nbits <= 63:
        arr = np.fromiter(values, dtype=np.uint64, count=n)
        shifts = np.arange(nbits, dtype=np.uint64)
        bits = ((arr[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)
        packed = np.packbits(bits, axis=0, bitorder="little")
        return [int.from_bytes(packed[:, i].tobytes(), "little") for i in range(nbits)]
    cols = [0] * nbits
    for r, v in enumerate(values):
        for i in range(nbits):
            if (v >> i) & 1:
                cols[i] |= 1 << r
    return cols


def _pi_columns(nl: Netlist, vectors: list[InputVector]) -> dict[int, int]:
    cols: dict[int, int] = {}
    a_cols = _pack_columns([v.a for v in vectors], nl.width)
    b_cols = _pack_columns([v.b for v in vectors], nl.width)
    cin_col = _pack_columns([v.cin for v in vectors], 1)[0]
    for i, nid in enumerate(nl.a):
        cols[nid] = a_cols[i]
    for i, nid in enumerate(nl.b):
        cols[nid] = b_cols[i]
    cols[nl.cin] = cin_col
    return cols


# ---------------------------------------------------------------------------
# Toggle collection
# ---------------------------------------------------------------------------

_BATCH = 8192


@dataclass(frozen=True)
class ToggleStats:
    """Per-net toggle totals for one applied vector stream."""

    per_net_toggles: tuple[int, ...]
    vectors_applied: int
    interval_ns: float

    @property
    def total_time_ns(self) -> float:
        return (self.vectors_applied - 1) * self.interval_ns


def collect_toggles(
    nl: Netlist, vectors: list[InputVector], interval_ns: float = 5.0
) -> ToggleStats:
    """Count settled-value transitions per net across the given stream."""
    if len(vectors) < 2:
        raise InsufficientVectors(f"need at least 2 vectors, got {len(vectors)}")
    for v in vectors:
        _check_vector(nl.width, v)
    order = topo_order(nl)
    toggles = [0] * len(nl.nets)
    prev_bits: list[int] | None = None
    for at in range(0, len(vectors), _BATCH):
        batch = vectors[at : at + _BATCH]
        n = len(batch)
        values = _eval_packed(nl, _pi_columns(nl, batch), n, order)
        inner = (1 << (n - 1)) - 1
        for nid, col in enumerate(values):
            t = ((col ^ (col >> 1)) & inner).bit_count()
            if prev_bits is not None:
                t += prev_bits[nid] ^ (col & 1)
            toggles[nid] += t
        prev_bits = [(col >> (n - 1)) & 1 for col in values]
    return ToggleStats(
        per_net_toggles=tuple(toggles),
        vectors_applied=len(vectors),
        interval_ns=interval_ns,
    )


def run_vectors(
    nl: Netlist, count: int = 1024, seed: int = 1, interval_ns: float = 5.0
) -> ToggleStats:
    """Apply ``count`` seeded random vectors and collect toggle counts."""
    if count < 2:
        raise InsufficientVectors(f"need at least 2 vectors, got {count}")
    return collect_toggles(nl, random_vectors(nl.width, count, seed), interval_ns)


def dump_trace(nl: Netlist, vectors: list[InputVector], fh) -> None:
    """Write one line per vector: net values as 0/1 digits in net-id order."""
    for v in vectors:
        _, _, values = evaluate(nl, v)
        fh.write("".join(str(bit) for bit in values) + "\n")


# ---------------------------------------------------------------------------
# Oracle verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Counterexample:
    """First input where a netlist disagreed with integer addition."""

    vector: InputVector
    expected_sum: int
    expected_cout: int
    got_sum: int
    got_cout: int

    def __str__(self) -> str:
        v = self.vector
        return (
            f"a={v.a:#x} b={v.b:#x} cin={v.cin}: "
            f"expected sum={self.expected_sum:#x} cout={self.expected_cout}, "
            f"got sum={self.got_sum:#x} cout={self.got_cout}"
        )


def _first_mismatch_row(diff: int) -> int:
    return (diff & -diff).bit_length() - 1


def _compare_batch(
    nl: Netlist,
    vectors: list[InputVector],
    values: list[int],
    oracle_sum_cols: list[int],
    oracle_cout_col: int,
) -> Counterexample | None:
    diff = 0
    for i, nid in enumerate(nl.sums):
        diff |= values[nid] ^ oracle_sum_cols[i]
    diff |= values[nl.cout] ^ oracle_cout_col
    if diff == 0:
        return None
    r = _first_mismatch_row(diff)
    got_sum = 0
    for i, nid in enumerate(nl.sums):
        got_sum |= ((values[nid] >> r) & 1) << i
    got_cout = (values[nl.cout] >> r) & 1
    v = vectors[r]
    total = v.a + v.b + v.cin
    return Counterexample(
        vector=v,
        expected_sum=total & ((1 << nl.width) - 1),
        expected_cout=total >> nl.width,
        got_sum=got_sum,
        got_cout=got_cout,
    )


def verify_random(nl: Netlist, count: int = 100000, seed: int = 1) -> Counterexample | None:
    """Compare against a + b + cin on seeded random vectors.

    Returns None when every vector matches, otherwise the first
    counterexample in stream order.
    """
    order = topo_order(nl)
    vectors = random_vectors(nl.width, count, seed)
    for at in range(0, count, _BATCH):
        batch = vectors[at : at + _BATCH]
        values = _eval_packed(nl, _pi_columns(nl, batch), len(batch), order)
        sums = [v.a + v.b + v.cin for v in batch]
        mask = (1 << nl.width) - 1
        oracle_cols = _pack_columns([s & mask for s in sums], nl.width)
        cout_col = _pack_columns([s >> nl.width for s in sums], 1)[0]
        bad = _compare_batch(nl, batch, values, oracle_cols, cout_col)
        if bad is not None:
            return bad
    return None


_EXHAUSTIVE_LIMIT = 12


def _pattern_column(bit: int, nrows: int) -> int:
    """Bitvector of (row >> bit) & 1 over rows 0..nrows-1."""
    period = 1 << bit
    col = ((1 << period) - 1) << period
    span = period << 1
    while span < nrows:
        col |= col << span
        span <<= 1
    return col & ((1 << nrows) - 1)


def verify_exhaustive(
    spec: ArchitectureSpec | str, width: int | None = None
) -> Counterexample | None:
    """Compare a composed adder against a + b + cin on every input.

    ``width``, when given, must match the architecture's total width;
    it exists so callers can state their expectation explicitly.
    Enumeration covers 2**(2*width+1) rows, so width is capped at 12.
    """
    spec = coerce_arch(spec)
    nl = compose(spec)
    if width is not None and width != nl.width:
        raise InvalidWidth(f"architecture is {nl.width} bits wide, expected {width}")
    return verify_exhaustive_netlist(nl)


def verify_exhaustive_netlist(nl: Netlist) -> Counterexample | None:
    """Exhaustive oracle check of an already built netlist."""
    w = nl.width
    if w > _EXHAUSTIVE_LIMIT:
        raise InvalidWidth(
            f"exhaustive verification is limited to {_EXHAUSTIVE_LIMIT} bits, got {w}"
        )
    nrows = 1 << (2 * w + 1)
    cols: dict[int, int] = {}
    for i, nid in enumerate(nl.a):
        cols[nid] = _pattern_column(i, nrows)
    for i, nid in enumerate(nl.b):
        cols[nid] = _pattern_column(w + i, nrows)
    cols[nl.cin] = _pattern_column(2 * w, nrows)
    values = _eval_packed(nl, cols, nrows)

    rows = np.arange(nrows, dtype=np.uint32)
    mask = np.uint32((1 << w) - 1)
    totals = (rows & mask) + ((rows >> np.uint32(w)) & mask) + (rows >> np.uint32(2 * w))
    diff = 0
    oracle_cols: list[int] = []
    for i in range(w):
        bits = ((totals >> np.uint32(i)) & np.uint32(1)).astype(np.uint8)
        col = int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")
        oracle_cols.append(col)
        diff |= values[nl.sums[i]] ^ col
    bits = ((totals >> np.uint32(w)) & np.uint32(1)).astype(np.uint8)
    cout_col = int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")
    diff |= values[nl.cout] ^ cout_col
    if diff == 0:
        return None
    r = _first_mismatch_row(diff)
    m = (1 << w) - 1
    v = InputVector(a=r & m, b=(r >> w) & m, cin=r >> (2 * w))
    got_sum = 0
    for i, nid in enumerate(nl.sums):
        got_sum |= ((values[nid] >> r) & 1) << i
    total = v.a + v.b + v.cin
    return Counterexample(
        vector=v,
        expected_sum=total & m,
        expected_cout=total >> w,
        got_sum=got_sum,
        got_cout=(values[nl.cout] >> r) & 1,
    )
