"""Partitions, standard tableaux, contents, and the M/Q classification."""
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidArgument, NotAWeight


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise InvalidArgument("empty partition")
        if any(x <= 0 for x in parts):
            raise InvalidArgument(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidArgument(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text):
        try:
            parts = [int(t) for t in str(text).replace(" ", "").strip("()").split(",") if t]
        except ValueError:
            raise InvalidArgument(f"cannot parse partition {text!r}") from None
        return cls(tuple(parts))

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))

    def __repr__(self):
        return f"Partition({self})"

    def conjugate(self):
        return conjugate(self)

    def boxes(self):
        return [(i, j) for i, row in enumerate(self.parts) for j in range(row)]

    def is_self_conjugate(self):
        return self == conjugate(self)


def _as_partition(lam):
    if isinstance(lam, Partition):
        return lam
    if isinstance(lam, str):
        return Partition.parse(lam)
    return Partition(tuple(lam))


def partitions(n):
    """All partitions of n in reverse-lexicographic order."""
    if n < 1:
        raise InvalidArgument(f"n must be positive, got {n}")
    out = []

    def rec(rest, cap, prefix):
        if rest == 0:
            out.append(Partition(tuple(prefix)))
            return
        for k in range(min(rest, cap), 0, -1):
            prefix.append(k)
            rec(rest - k, k, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def conjugate(lam):
    lam = _as_partition(lam)
    return Partition(tuple(sum(1 for r in lam.parts if r > j) for j in range(lam.parts[0])))


def residue_sum(lam):
    lam = _as_partition(lam)
    return sum(j - i for i, j in lam.boxes())


def covers(lam):
    """Partitions obtained by deleting one removable box, with that box's residue.

    Ordered by the row of the removed box.
    """
    lam = _as_partition(lam)
    p = lam.parts
    out = []
    for i, row in enumerate(p):
        if i + 1 < len(p) and p[i + 1] == row:
            continue
        mu = list(p)
        mu[i] -= 1
        if mu[i] == 0:
            mu.pop()
        if mu:
            out.append((Partition(tuple(mu)), (row - 1) - i))
    return out


def diagonal_parity(lam):
    """Parity (0 even, 1 odd) of the number of boxes strictly above the diagonal."""
    lam = _as_partition(lam)
    if not lam.is_self_conjugate():
        raise InvalidArgument(f"{lam} is not self-conjugate")
    return sum(1 for i, j in lam.boxes() if j > i) & 1


@dataclass(frozen=True)
class StandardTableau:
    shape: Partition
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise InvalidArgument("row lengths do not match the shape")
        if sorted(x for r in rows for x in r) != list(range(1, self.shape.n + 1)):
            raise InvalidArgument("entries must be 1..n each exactly once")
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                if j and r[j - 1] > x:
                    raise InvalidArgument("rows must increase")
                if i and rows[i - 1][j] > x:
                    raise InvalidArgument("columns must increase")

    @property
    def n(self):
        return self.shape.n

    def positions(self):
        """positions()[k-1] is the (row, col) of entry k, 0-based."""
        pos = [None] * self.n
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                pos[x - 1] = (i, j)
        return pos

    def transpose(self):
        lt = conjugate(self.shape)
        return StandardTableau(lt, tuple(tuple(self.rows[i][j] for i in range(lt.parts[j]))
                                         for j in range(len(lt))))

    def swap(self, i):
        """Tableau with entries i and i+1 exchanged (may be non-standard)."""
        f = {i: i + 1, i + 1: i}
        return StandardTableau(self.shape, tuple(tuple(f.get(x, x) for x in r) for r in self.rows))

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def row_reading_tableau(lam):
    lam = _as_partition(lam)
    rows, k = [], 1
    for r in lam.parts:
        rows.append(tuple(range(k, k + r)))
        k += r
    return StandardTableau(lam, tuple(rows))


def content_vector(T):
    return tuple(j - i for i, j in T.positions())


def _addable(lengths):
    out = []
    for i, r in enumerate(lengths):
        if i == 0 or lengths[i - 1] > r:
            out.append(i)
    out.append(len(lengths))
    return out


@lru_cache(maxsize=None)
def standard_tableaux(lam):
    """All standard tableaux of shape lam, sorted by content vector."""
    lam = _as_partition(lam)
    shape = lam.parts
    n = lam.n
    found = []
    rows = [[] for _ in shape]

    def rec(k):
        if k > n:
            found.append(StandardTableau(lam, tuple(tuple(r) for r in rows)))
            return
        for i in range(len(shape)):
            r = len(rows[i])
            if r < shape[i] and (i == 0 or len(rows[i - 1]) > r):
                rows[i].append(k)
                rec(k + 1)
                rows[i].pop()

    rec(1)
    found.sort(key=content_vector)
    return tuple(found)


def tableau_of(lam, alpha):
    """The standard tableau of shape lam whose content vector is alpha."""
    lam = _as_partition(lam)
    alpha = tuple(alpha)
    if len(alpha) != lam.n:
        raise NotAWeight(f"{alpha} has the wrong length for {lam}")
    rows = []
    for k, a in enumerate(alpha, start=1):
        lengths = [len(r) for r in rows]
        for i in _addable(lengths):
            col = lengths[i] if i < len(lengths) else 0
            if col - i == a:
                if i == len(rows):
                    rows.append([])
                rows[i].append(k)
                break
        else:
            raise NotAWeight(f"{alpha} is not a weight of {lam}")
    if tuple(len(r) for r in rows) != lam.parts:
        raise NotAWeight(f"{alpha} is not a weight of {lam}")
    return StandardTableau(lam, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class ClassEntry:
    representative: Partition
    mate: Partition
    kind: str  # "Q" when representative != mate, "M" when self-conjugate


@dataclass(frozen=True)
class ClassTable:
    n: int
    classes: tuple

    @property
    def E(self):
        return [c.representative for c in self.classes if c.kind == "Q"]

    @property
    def F(self):
        return [c.representative for c in self.classes if c.kind == "M"]

    def representative_of(self, lam):
        lam = _as_partition(lam)
        for c in self.classes:
            if lam in (c.representative, c.mate):
                return c.representative
        raise InvalidArgument(f"{lam} is not a partition of {self.n}")

    def kind_of(self, lam):
        return "M" if _as_partition(lam).is_self_conjugate() else "Q"


@lru_cache(maxsize=None)
def classify(n):
    if n < 2:
        raise InvalidArgument(f"classify needs n >= 2, got {n}")
    out = []
    for lam in partitions(n):
        mate = conjugate(lam)
        if lam.parts >= mate.parts:
            out.append(ClassEntry(lam, mate, "M" if lam == mate else "Q"))
    return ClassTable(n, tuple(out))
