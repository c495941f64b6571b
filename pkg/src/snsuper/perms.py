"""Permutations stored as 0-based one-line tuples.

``p[i]`` is the image of ``i``.  Composition follows functions:
``compose(a, b)`` is ``a`` after ``b``.
"""
import itertools
import re

from .errors import InvalidArgument


def identity(n):
    return tuple(range(n))


def compose(a, b):
    return tuple(a[j] for j in b)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def parity(p):
    """0 for even permutations, 1 for odd ones."""
    seen = [False] * len(p)
    flips = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        j, length = start, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        flips += length - 1
    return flips & 1


def sign(p):
    return -1 if parity(p) else 1


def transposition(i, j, n):
    """The transposition swapping the 0-based points i and j."""
    p = list(range(n))
    p[i], p[j] = j, i
    return tuple(p)


def adjacent(i, n):
    """s_i = (i, i+1) with 1-based i."""
    return transposition(i - 1, i, n)


def transpositions(n):
    return [transposition(i, j, n) for i in range(n) for j in range(i + 1, n)]


def all_permutations(n):
    return list(itertools.permutations(range(n)))


def adjacent_word(p):
    """Reduced word (i_1, ..., i_k) with p = s_{i_1} ... s_{i_k}, via insertion sort.

    Swapping positions k-1, k of a one-line tuple is right multiplication
    by s_k, so the recorded swaps read backwards give the word.
    """
    w = list(p)
    swaps = []
    for i in range(1, len(w)):
        k = i
        while k > 0 and w[k - 1] > w[k]:
            w[k - 1], w[k] = w[k], w[k - 1]
            swaps.append(k)
            k -= 1
    return tuple(reversed(swaps))


def cycles(p):
    out = []
    seen = set()
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = p[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def format_cycles(p):
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cs)


def format_oneline(p):
    if len(p) < 10:
        return "".join(str(i + 1) for i in p)
    return ",".join(str(i + 1) for i in p)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text, n):
    """Parse cycle notation "(1 3)(2 5)" or one-line notation "31254" / "3,1,2,5,4"."""
    text = text.strip()
    if text.startswith("("):
        if _CYCLE.sub("", text).strip():
            raise InvalidArgument(f"cannot parse cycles {text!r}")
        p = list(range(n))
        # cycles compose right to left like permutations
        for body in reversed(_CYCLE.findall(text)):
            pts = [int(t) - 1 for t in re.split(r"[\s,]+", body.strip()) if t]
            if len(set(pts)) != len(pts) or any(not 0 <= x < n for x in pts):
                raise InvalidArgument(f"bad cycle ({body}) for n={n}")
            c = list(range(n))
            for a, b in zip(pts, pts[1:] + pts[:1]):
                c[a] = b
            p = [c[x] for x in p]
        return tuple(p)
    parts = re.split(r"[\s,]+", text) if ("," in text or " " in text) else list(text)
    try:
        p = tuple(int(t) - 1 for t in parts if t)
    except ValueError:
        raise InvalidArgument(f"cannot parse permutation {text!r}") from None
    if sorted(p) != list(range(n)):
        raise InvalidArgument(f"{text!r} is not a permutation of 1..{n}")
    return p
