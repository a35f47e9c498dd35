"""Gauss codes of virtual knots and their arc-split combinatorics.

A Gauss code is the cyclic sequence of crossing visits along the knot.  Each
classical crossing appears exactly twice, once over and once under, and both
records carry the crossing sign.  Virtual crossings never appear in the code.

The positions 0..2n-1 index the records cyclically.  A *gap* g is the slot
immediately before record g, so cutting the circle at a set of gaps splits it
into arcs of consecutive records.  An ``ArcSplit`` is such a set of cuts; it
is the code-level picture of a diagram composed of k arcs.
"""

from __future__ import annotations

import itertools
import re
from bisect import bisect_right
from dataclasses import dataclass

OVER = "O"
UNDER = "U"

EVEN = "even"
ODD = "odd"


class GaussCodeError(ValueError):
    """Raised for malformed Gauss code text or inconsistent records."""


@dataclass(frozen=True)
class EndpointRecord:
    """One visit of a classical crossing: its id, passage and sign."""

    crossing: int
    passage: str  # OVER or UNDER
    sign: int  # +1 or -1

    def token(self) -> str:
        return f"{self.passage}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    """Cyclic sequence of 2n endpoint records."""

    records: tuple[EndpointRecord, ...]

    def __post_init__(self):
        seen: dict[int, list[int]] = {}
        for i, r in enumerate(self.records):
            if r.passage not in (OVER, UNDER):
                raise GaussCodeError(f"record {i}: bad passage {r.passage!r}")
            if r.sign not in (1, -1):
                raise GaussCodeError(f"record {i}: bad sign {r.sign!r}")
            seen.setdefault(r.crossing, []).append(i)
        for cid, pos in seen.items():
            if len(pos) != 2:
                raise GaussCodeError(
                    f"crossing {cid} appears {len(pos)} time(s), expected 2"
                )
            a, b = pos
            ra, rb = self.records[a], self.records[b]
            if ra.passage == rb.passage:
                raise GaussCodeError(
                    f"crossing {cid} has two {ra.passage} passages"
                )
            if ra.sign != rb.sign:
                raise GaussCodeError(f"crossing {cid} has mismatched signs")

    @property
    def n(self) -> int:
        return len(self.records) // 2

    def crossings(self) -> list[int]:
        """Crossing ids in order of first appearance."""
        out, seen = [], set()
        for r in self.records:
            if r.crossing not in seen:
                seen.add(r.crossing)
                out.append(r.crossing)
        return out

    def positions(self, cid: int) -> tuple[int, int]:
        """(over position, under position) of a crossing."""
        po = pu = None
        for i, r in enumerate(self.records):
            if r.crossing == cid:
                if r.passage == OVER:
                    po = i
                else:
                    pu = i
        if po is None or pu is None:
            raise GaussCodeError(f"unknown crossing {cid}")
        return po, pu

    def sign(self, cid: int) -> int:
        for r in self.records:
            if r.crossing == cid:
                return r.sign
        raise GaussCodeError(f"unknown crossing {cid}")

    def partner(self) -> list[int]:
        """partner[i] = position of the other record of the same crossing."""
        first: dict[int, int] = {}
        out = [0] * len(self.records)
        for i, r in enumerate(self.records):
            if r.crossing in first:
                j = first[r.crossing]
                out[i], out[j] = j, i
            else:
                first[r.crossing] = i
        return out

    def __str__(self) -> str:
        return serialize_gauss(self)


@dataclass(frozen=True)
class Chord:
    """Derived view of one crossing's two endpoints."""

    pos_over: int
    pos_under: int
    sign: int


@dataclass(frozen=True)
class ArcSplit:
    """k cut gaps partitioning the cyclic record sequence into k arcs."""

    cuts: tuple[int, ...]

    def __post_init__(self):
        if len(self.cuts) < 1:
            raise ValueError("an arc split needs at least one cut")
        if list(self.cuts) != sorted(set(self.cuts)):
            raise ValueError("cuts must be strictly increasing and distinct")

    @property
    def k(self) -> int:
        return len(self.cuts)


@dataclass(frozen=True)
class KArcReport:
    """Minimal arc number of a code together with a witness split."""

    min_arcs: int
    witness: ArcSplit
    classical_crossings: int


_TOKEN = re.compile(r"\s*,?\s*([OUou])\s*(\d+)\s*([+-])")


def parse_gauss(text: str) -> GaussCode:
    """Parse Gauss code text like ``O1+U2+O3+U1+O2+U3+``.

    Tokens are ``(O|U)<id>(+|-)``, case-insensitive, separated by optional
    commas or whitespace.  Raises GaussCodeError with the offending position
    on a syntax error.
    """
    records = []
    pos = 0
    stripped = text.strip()
    while pos < len(text):
        if text[pos:].strip() in ("", ","):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise GaussCodeError(f"syntax error at position {pos}: {text[pos:pos+8]!r}")
        passage, cid, sgn = m.groups()
        records.append(
            EndpointRecord(int(cid), passage.upper(), 1 if sgn == "+" else -1)
        )
        pos = m.end()
    if not records and stripped:
        raise GaussCodeError("syntax error at position 0")
    return GaussCode(tuple(records))


def serialize_gauss(code: GaussCode) -> str:
    return "".join(r.token() for r in code.records)


def rotate(code: GaussCode, offset: int) -> GaussCode:
    """Cyclic rotation moving record ``offset`` to the front."""
    if not code.records:
        return code
    off = offset % len(code.records)
    return GaussCode(code.records[off:] + code.records[:off])


def reverse(code: GaussCode) -> GaussCode:
    """Orientation reversal of the record sequence."""
    return GaussCode(tuple(reversed(code.records)))


def _relabel_first_appearance(code: GaussCode) -> GaussCode:
    mapping: dict[int, int] = {}
    recs = []
    for r in code.records:
        if r.crossing not in mapping:
            mapping[r.crossing] = len(mapping) + 1
        recs.append(EndpointRecord(mapping[r.crossing], r.passage, r.sign))
    return GaussCode(tuple(recs))


def normalize(code: GaussCode) -> GaussCode:
    """Canonical form: the rotation whose serialization is lexicographically least.

    Crossings are relabelled 1..n by first appearance in each rotation before
    comparing, so the result does not depend on input naming.
    """
    if not code.records:
        return code
    best = None
    for off in range(len(code.records)):
        cand = _relabel_first_appearance(rotate(code, off))
        s = serialize_gauss(cand)
        if best is None or s < best[0]:
            best = (s, cand)
    return best[1]


def normalization_offset(code: GaussCode) -> int:
    """Rotation offset used by :func:`normalize`."""
    if not code.records:
        return 0
    best = None
    for off in range(len(code.records)):
        s = serialize_gauss(_relabel_first_appearance(rotate(code, off)))
        if best is None or s < best[0]:
            best = (s, off)
    return best[1]


def to_records(code: GaussCode) -> dict:
    """Structured export: record list plus the normalization rotation offset."""
    return {
        "records": [
            {"crossing": r.crossing, "passage": r.passage, "sign": r.sign}
            for r in code.records
        ],
        "normalization_offset": normalization_offset(code),
    }


def chords(code: GaussCode) -> list[Chord]:
    out = []
    for cid in code.crossings():
        po, pu = code.positions(cid)
        out.append(Chord(po, pu, code.sign(cid)))
    return out


# ---------------------------------------------------------------------------
# Arc splits


def _arc_index(cuts: tuple[int, ...], pos: int, length: int) -> int:
    """Index of the arc containing record ``pos``.

    Arc i starts at gap cuts[i] and runs to the gap cuts[i+1] (cyclically).
    """
    i = bisect_right(cuts, pos) - 1
    return i % len(cuts)


def is_k_arc_split(code: GaussCode, split: ArcSplit) -> bool:
    """True iff no chord has both endpoints strictly inside one arc."""
    m = len(code.records)
    if m == 0:
        return True
    for g in split.cuts:
        if not 0 <= g < m:
            raise ValueError(f"cut {g} out of range 0..{m-1}")
    cuts = split.cuts
    partner = code.partner()
    done = set()
    for p, q in enumerate(partner):
        if p in done:
            continue
        done.add(q)
        if _arc_index(cuts, p, m) == _arc_index(cuts, q, m):
            return False
    return True


def _max_window(code: GaussCode) -> list[int]:
    """maxlen[g]: length of the longest chord-free window of records g, g+1, ...

    A window is chord-free when it contains no chord with both endpoints
    inside it; single records always qualify.
    """
    m = len(code.records)
    partner = code.partner()
    out = []
    for g in range(m):
        length = 0
        inside = set()
        while length < m:
            p = (g + length) % m
            if partner[p] in inside:
                break
            inside.add(p)
            length += 1
        out.append(length)
    return out


def min_arc_number(code: GaussCode) -> KArcReport:
    """Least k admitting a valid arc split, with a witness.

    Computed as a minimum circular cover by chord-free windows: for every
    choice of first cut, arcs are extended greedily to maximal chord-free
    windows; the best start wins.  Greedy is optimal per start because any
    sub-window of a chord-free window is chord-free.
    """
    m = len(code.records)
    if m == 0:
        return KArcReport(1, ArcSplit((0,)), 0)
    maxlen = _max_window(code)
    best_k = None
    best_cuts = None
    for g0 in range(m):
        cuts = [g0]
        covered = 0
        cur = g0
        while covered < m:
            step = maxlen[cur % m]
            if covered + step >= m:
                covered = m
            else:
                covered += step
                cur += step
                cuts.append(cur % m)
        if best_k is None or len(cuts) < best_k:
            best_k = len(cuts)
            best_cuts = tuple(sorted(set(cuts)))
    return KArcReport(best_k, ArcSplit(best_cuts), code.n)


def brute_min_arc_number(code: GaussCode) -> int:
    """Exhaustive oracle for :func:`min_arc_number`, capped at n <= 10."""
    if code.n > 10:
        raise ValueError("brute force capped at 10 chords")
    m = len(code.records)
    if m == 0:
        return 1
    for k in range(2, m + 1):
        for combo in itertools.combinations(range(m), k):
            if is_k_arc_split(code, ArcSplit(combo)):
                return k
    raise AssertionError("no valid split found")  # unreachable: k=2n always works


# ---------------------------------------------------------------------------
# Chord deletion and parity


def delete_chord(code: GaussCode, cid: int) -> GaussCode:
    """Remove both records of a crossing, preserving the order of the rest."""
    po, pu = code.positions(cid)
    recs = tuple(r for i, r in enumerate(code.records) if i not in (po, pu))
    return GaussCode(recs)


def adjust_split(split: ArcSplit, code: GaussCode, cid: int) -> ArcSplit:
    """Reindex cuts after deleting a chord; collapsing cuts are merged."""
    po, pu = code.positions(cid)
    removed = sorted((po, pu))
    new_len = len(code.records) - 2
    if new_len == 0:
        return ArcSplit((0,))
    new_cuts = set()
    for g in split.cuts:
        shift = sum(1 for p in removed if p < g)
        new_cuts.add((g - shift) % new_len)
    return ArcSplit(tuple(sorted(new_cuts)))


def interleave_count(code: GaussCode, cid: int) -> int:
    """Number of chords interleaving the given chord."""
    p, q = sorted(code.positions(cid))
    count = 0
    for other in code.crossings():
        if other == cid:
            continue
        a, b = code.positions(other)
        ina = p < a < q
        inb = p < b < q
        if ina != inb:
            count += 1
    return count


def chord_parity(code: GaussCode, cid: int) -> str:
    """ODD iff the chord interleaves an odd number of other chords."""
    return ODD if interleave_count(code, cid) % 2 else EVEN


def odd_chords(code: GaussCode) -> list[int]:
    return [c for c in code.crossings() if chord_parity(code, c) == ODD]


def parity_projection(code: GaussCode) -> GaussCode:
    """Delete all odd chords, rounds at a time, until every chord is even.

    All odd chords of a round are removed simultaneously; the output is a
    fixed point of the operation.  Any arc split valid for the input stays
    valid for the output.
    """
    cur = code
    while True:
        odd = odd_chords(cur)
        if not odd:
            return cur
        for cid in odd:
            cur = delete_chord(cur, cid)


# ---------------------------------------------------------------------------
# Carter genus


_ROT_POS = ("oi", "ui", "oo", "uo")  # rotation for sign +1
_ROT_NEG = ("oi", "uo", "oo", "ui")  # mirror, for sign -1


def carter_genus(code: GaussCode) -> int:
    """Genus of the canonical closed surface carrying the code.

    The code induces a 4-valent map: one vertex per chord with the rotation
    fixed by the crossing sign, one edge per inter-visit arc.  The genus is
    (2 - V + E - F)/2 with F counted by face tracing; it is 0 exactly when
    the code is realizable as a classical diagram in the sphere.
    """
    m = len(code.records)
    if m == 0:
        return 0
    sigma: dict[tuple[int, str], tuple[int, str]] = {}
    for cid in code.crossings():
        rot = _ROT_POS if code.sign(cid) > 0 else _ROT_NEG
        for i, tag in enumerate(rot):
            sigma[(cid, tag)] = (cid, rot[(i + 1) % 4])
    alpha: dict[tuple[int, str], tuple[int, str]] = {}
    for i, r in enumerate(code.records):
        nxt = code.records[(i + 1) % m]
        out = (r.crossing, "oo" if r.passage == OVER else "uo")
        into = (nxt.crossing, "oi" if nxt.passage == OVER else "ui")
        alpha[out] = into
        alpha[into] = out
    faces = 0
    seen = set()
    for d in sigma:
        if d in seen:
            continue
        faces += 1
        cur = d
        while cur not in seen:
            seen.add(cur)
            cur = sigma[alpha[cur]]
    n = code.n
    genus2 = 2 - n + 2 * n - faces
    assert genus2 % 2 == 0
    return genus2 // 2


# ---------------------------------------------------------------------------
# Reduction


def _adjacent(i: int, j: int, m: int) -> bool:
    return (i + 1) % m == j or (j + 1) % m == i


def _find_r1(code: GaussCode) -> int | None:
    m = len(code.records)
    for cid in code.crossings():
        po, pu = code.positions(cid)
        if _adjacent(po, pu, m):
            return cid
    return None


def _find_r2(code: GaussCode) -> tuple[int, int] | None:
    m = len(code.records)
    ids = code.crossings()
    for a, b in itertools.combinations(ids, 2):
        if code.sign(a) == code.sign(b):
            continue
        ao, au = code.positions(a)
        bo, bu = code.positions(b)
        if _adjacent(ao, bo, m) and _adjacent(au, bu, m):
            return a, b
    return None


def reduce_code(code: GaussCode) -> GaussCode:
    """Greedy removal of R1 chords and R2 chord pairs until none remain.

    R1: a chord whose endpoints are cyclically adjacent.  R2: two chords of
    opposite sign whose over endpoints are adjacent and whose under endpoints
    are adjacent.
    """
    cur = code
    while True:
        r1 = _find_r1(cur)
        if r1 is not None:
            cur = delete_chord(cur, r1)
            continue
        r2 = _find_r2(cur)
        if r2 is not None:
            cur = delete_chord(delete_chord(cur, r2[0]), r2[1])
            continue
        return cur


def is_reduced(code: GaussCode) -> bool:
    return _find_r1(code) is None and _find_r2(code) is None
