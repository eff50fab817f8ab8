"""String-overlap semantics and labeling verifiers.

A labeling assigns to every vertex a string of one uniform length over an
abstract alphabet.  Characters are small integers internally and are rendered
as printable text only at I/O boundaries; there is no bound on alphabet size.

Overlap is directional: a suffix of the first string equal to a prefix of the
second.  The bipartite model relates suffix-side strings to prefix-side
strings and requires neither injectivity nor properness; the digraph model
requires pairwise-distinct labels and proper overlaps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .decomposition import Decomposition
from .graphs import BipartiteGraph, Digraph, Vertex


class LabelingError(ValueError):
    """Malformed labeling or a violated verifier precondition."""


Key = Vertex | int
Word = tuple[int, ...]


def ov(x: Sequence, y: Sequence) -> int:
    """Length of the shortest overlap of ``x`` onto ``y``; 0 if none.

    The smallest ``i`` with ``1 <= i <= min(|x|, |y|)`` such that the length-i
    suffix of ``x`` equals the length-i prefix of ``y``.
    """
    nx, ny = len(x), len(y)
    for i in range(1, min(nx, ny) + 1):
        if x[nx - i :] == y[:i]:
            return i
    return 0


def _char_stream():
    yield from "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
    code = 0x4E00
    while True:
        yield chr(code)
        code += 1


def default_alphabet(size: int) -> tuple[str, ...]:
    """Deterministic printable rendering for ``size`` abstract characters."""
    stream = _char_stream()
    return tuple(next(stream) for _ in range(size))


def extend_alphabet(alphabet: Sequence[str], extra: int) -> tuple[str, ...]:
    """Append ``extra`` fresh printable characters, skipping ones in use."""
    used = set(alphabet)
    out = list(alphabet)
    stream = _char_stream()
    while extra > 0:
        ch = next(stream)
        if ch not in used:
            out.append(ch)
            extra -= 1
    return tuple(out)


@dataclass(frozen=True)
class Labeling:
    """Uniform-length vertex labels over an ordered abstract alphabet.

    ``labels`` maps vertex keys (``("s", i)`` / ``("p", j)`` for bipartite
    graphs, plain ints for digraphs) to tuples of character indices into
    ``alphabet``.  Length 0 is legal.
    """

    length: int
    alphabet: tuple[str, ...]
    labels: Mapping[Key, Word] = field(default_factory=dict)

    def __init__(self, length: int, alphabet: Sequence[str], labels: Mapping[Key, Sequence[int]]):
        if length < 0:
            raise LabelingError("length must be nonnegative")
        alpha = tuple(alphabet)
        if len(set(alpha)) != len(alpha):
            raise LabelingError("alphabet characters must be distinct")
        if any(not (isinstance(ch, str) and len(ch) == 1) for ch in alpha):
            raise LabelingError("alphabet entries must be single characters")
        fixed: dict[Key, Word] = {}
        for k, word in labels.items():
            w = tuple(int(c) for c in word)
            if len(w) != length:
                raise LabelingError(f"label for {k!r} has length {len(w)}, expected {length}")
            if any(not 0 <= c < len(alpha) for c in w):
                raise LabelingError(f"label for {k!r} uses characters outside the alphabet")
            fixed[k] = w
        object.__setattr__(self, "length", int(length))
        object.__setattr__(self, "alphabet", alpha)
        object.__setattr__(self, "labels", fixed)

    @classmethod
    def from_strings(cls, labels: Mapping[Key, str], alphabet: Sequence[str]) -> "Labeling":
        alpha = tuple(alphabet)
        index = {ch: i for i, ch in enumerate(alpha)}
        words = {}
        length = None
        for k, text in labels.items():
            try:
                words[k] = tuple(index[ch] for ch in text)
            except KeyError as exc:
                raise LabelingError(f"label for {k!r} uses unknown character {exc}") from None
            length = len(text) if length is None else length
        return cls(length or 0, alpha, words)

    def word(self, key: Key) -> Word:
        try:
            return self.labels[key]
        except KeyError:
            raise LabelingError(f"no label assigned to vertex {key!r}") from None

    def string(self, key: Key) -> str:
        return "".join(self.alphabet[c] for c in self.word(key))


@dataclass(frozen=True)
class Violation:
    """One offending vertex pair found by a verifier."""

    u: Key
    v: Key
    kind: str  # missing_overlap | unexpected_overlap | improper_overlap | duplicate_label
    overlap: int


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violations: tuple[Violation, ...]
    warnings: tuple[str, ...] = ()


def _require_assigned(l: Labeling, keys) -> None:
    missing = [k for k in keys if k not in l.labels]
    if missing:
        raise LabelingError(f"labeling misses vertices: {missing[:5]!r}")


def verify_bipartite(g: BipartiteGraph, l: Labeling) -> VerifyResult:
    """Check that suffix-to-prefix overlaps realize exactly the edge set.

    For every pair (u in the s-part, v in the p-part) there must be an edge
    iff ``ov(l(u), l(v)) > 0``.  Same-part and reverse-direction overlaps are
    ignored by the model; injectivity and properness are not required.
    Reports are exhaustive.  Duplicate labels raise a non-fatal warning.
    """
    _require_assigned(l, ((side, i) for side, n in (("s", g.ns), ("p", g.np)) for i in range(1, n + 1)))
    violations = []
    for s in range(1, g.ns + 1):
        xu = l.word(("s", s))
        for p in range(1, g.np + 1):
            o = ov(xu, l.word(("p", p)))
            if (s, p) in g.edges:
                if o == 0:
                    violations.append(Violation(("s", s), ("p", p), "missing_overlap", 0))
            elif o > 0:
                violations.append(Violation(("s", s), ("p", p), "unexpected_overlap", o))
    warnings = []
    seen: dict[Word, Key] = {}
    for k in sorted(l.labels):
        w = l.labels[k]
        if w in seen:
            warnings.append(f"duplicate label shared by {seen[w]!r} and {k!r}")
        else:
            seen[w] = k
    return VerifyResult(not violations, tuple(violations), tuple(warnings))


def verify_digraph(d: Digraph, l: Labeling) -> VerifyResult:
    """Check an injective proper-overlap labeling of a digraph.

    Labels must be pairwise distinct, and for every ordered pair (u, v),
    including u = v, there must be an arc iff ``0 < ov < len``.
    """
    _require_assigned(l, range(1, d.n + 1))
    violations = []
    by_word: dict[Word, list[int]] = {}
    for u in range(1, d.n + 1):
        by_word.setdefault(l.word(u), []).append(u)
    for word, group in sorted(by_word.items()):
        for extra in group[1:]:
            violations.append(Violation(group[0], extra, "duplicate_label", l.length))
    for u in range(1, d.n + 1):
        for v in range(1, d.n + 1):
            o = ov(l.word(u), l.word(v))
            proper = 0 < o < l.length
            if (u, v) in d.arcs and not proper:
                violations.append(Violation(u, v, "missing_overlap" if o == 0 else "improper_overlap", o))
            elif (u, v) not in d.arcs and proper:
                violations.append(Violation(u, v, "unexpected_overlap", o))
    return VerifyResult(not violations, tuple(violations))


def extract_decomposition(host: BipartiteGraph | Digraph, l: Labeling) -> Decomposition:
    """Weight every edge/arc with its overlap length under a valid labeling."""
    if isinstance(host, BipartiteGraph):
        result = verify_bipartite(host, l)
        if not result.ok:
            raise LabelingError(f"not an overlap labeling ({len(result.violations)} violations)")
        return Decomposition({(s, p): ov(l.word(("s", s)), l.word(("p", p))) for s, p in host.edges})
    result = verify_digraph(host, l)
    if not result.ok:
        raise LabelingError(f"not an overlap labeling ({len(result.violations)} violations)")
    return Decomposition({(u, v): ov(l.word(u), l.word(v)) for u, v in host.arcs})


def encode_binary(l: Labeling) -> Labeling:
    """Re-encode a labeling over the two-character alphabet.

    Every character is replaced by the self-synchronizing block
    ``1 1 0 b1 0 b2 0 ... bw 0`` where ``b1..bw`` are the character's index
    bits (most significant first) and ``w = ceil(log2(alphabet size))``; the
    block length is ``L = 2w + 3``.  The ``11`` marker can only occur at
    block starts, so every overlap of the encoded strings is block-aligned:
    both overlap relations (positive, and proper) are preserved exactly, and
    the output length is ``L * len``.
    """
    if l.length == 0:
        return Labeling(0, ("0", "1"), {k: () for k in l.labels})
    sigma = len(l.alphabet)
    width = (sigma - 1).bit_length() if sigma > 1 else 0
    blocks = []
    for c in range(sigma):
        bits = [(c >> (width - 1 - i)) & 1 for i in range(width)]
        block = [1, 1, 0]
        for b in bits:
            block += [b, 0]
        blocks.append(tuple(block))
    out = {k: tuple(x for c in w for x in blocks[c]) for k, w in l.labels.items()}
    return Labeling((2 * width + 3) * l.length, ("0", "1"), out)
