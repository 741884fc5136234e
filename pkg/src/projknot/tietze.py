"""Deterministic Tietze simplification and syntactic recognition of small groups."""

from dataclasses import dataclass, replace
from itertools import permutations, product

from projknot.errors import PreconditionError
from projknot.presentation import Presentation
from projknot.words import (
    canonical_relation,
    cyclically_reduce,
    free_reduce,
    format_word,
    inverse,
    occurrences,
    rotations,
    word_key,
)

__all__ = [
    "RecognitionResult",
    "SimplifyBudget",
    "cyclically_reduce",
    "eliminate_generator",
    "free_reduce",
    "recognize",
    "same_up_to_symmetry",
    "simplify",
]

INFINITE_CYCLIC = "InfiniteCyclic"
Z_STAR_Z2 = "ZstarZ2"
FREE_ABELIAN_RANK2 = "FreeAbelianRank2"
Z2_FREE_FACTOR = "Z2FreeFactor"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SimplifyBudget:
    max_passes: int = 64
    max_total_length: int = 10**6

    def __post_init__(self):
        if self.max_passes <= 0 or self.max_total_length <= 0:
            raise ValueError("budget limits must be positive")


@dataclass(frozen=True)
class RecognitionResult:
    kind: str
    generator: str = None

    def __str__(self):
        if self.kind == Z2_FREE_FACTOR:
            return f"{self.kind}({self.generator})"
        return self.kind


def _relation_index(p, r):
    if isinstance(r, int):
        return r
    r = tuple(r)
    for i, w in enumerate(p.relations):
        if w == r:
            return i
    target = canonical_relation(r)
    for i, w in enumerate(p.relations):
        if canonical_relation(w) == target:
            return i
    raise PreconditionError("relation is not part of the presentation")


def _solve(word, g):
    """Word w with g = w, given a relation containing g exactly once."""
    i = next(j for j, (s, _) in enumerate(word) if s == g)
    rot = word[i:] + word[:i]
    e, rest = rot[0][1], rot[1:]
    # g^e * rest = 1
    return inverse(rest) if e == 1 else rest


def _substitute(word, g, value):
    out = []
    for s, e in word:
        if s == g:
            out.extend(value if e == 1 else inverse(value))
        else:
            out.append((s, e))
    return free_reduce(out)


def eliminate_generator(p, g, r):
    """Solve relation ``r`` (index or word) for ``g`` and substitute it away."""
    if g not in p.generators:
        raise PreconditionError(f"{g!r} is not a generator")
    idx = _relation_index(p, r)
    word = p.relations[idx]
    if occurrences(word, g) != 1:
        raise PreconditionError(
            f"generator {g} occurs {occurrences(word, g)} times in the relation, expected once")
    value = _solve(word, g)
    rels, prov = [], []
    for j, (w, where) in enumerate(zip(p.relations, p.provenance)):
        if j == idx:
            continue
        new = _substitute(w, g, value)
        rels.append(new)
        prov.append(where if new == w else "derived")
    gens = tuple(x for x in p.generators if x != g)
    return Presentation(gens, tuple(rels), tuple(prov), p.incomplete)


def _reduce_relations(p):
    seen = set()
    rels, prov = [], []
    for w, where in zip(p.relations, p.provenance):
        c = canonical_relation(w)
        if not c or c in seen:
            continue
        seen.add(c)
        rels.append(c)
        prov.append(where if c == w else "derived")
    return Presentation(p.generators, tuple(rels), tuple(prov), p.incomplete)


def _descending(symbol):
    return tuple(-ord(ch) for ch in symbol) + (1,)


def _elimination_move(p):
    # shortest relation, then smallest serialized form; within it the
    # alphabetically last generator goes, so c = a^-1 keeps a
    candidates = []
    for idx, w in enumerate(p.relations):
        for g in {s for s, _ in w}:
            if occurrences(w, g) == 1:
                candidates.append((word_key(w), _descending(g), idx, g))
    candidates.sort()
    for _, _, idx, g in candidates:
        q = eliminate_generator(p, g, idx)
        if q.total_length <= p.total_length:
            return g, idx, q
    return None


def _shortening_move(p):
    rels = p.relations
    for ri, r in enumerate(rels):
        n = len(r)
        for cand in rotations(r) + rotations(inverse(r)):
            for ulen in range(n, n // 2, -1):
                u, v = cand[:ulen], cand[ulen:]
                for si, s in enumerate(rels):
                    if si == ri or ulen > len(s):
                        continue
                    for k in range(len(s)):
                        srot = s[k:] + s[:k]
                        if srot[:ulen] == u:
                            new = cyclically_reduce(inverse(v) + srot[ulen:])
                            out = list(rels)
                            out[si] = new
                            prov = list(p.provenance)
                            prov[si] = "derived"
                            q = Presentation(p.generators, tuple(out), tuple(prov), p.incomplete)
                            return ri, si, q
    return None


def _root(word):
    """(u, k) with word = u^k and k maximal."""
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d], n // d
    return word, 1


def _power_move(p):
    """Turn a relation u^k into x^k by the substitution x = u.

    Needs a generator g occurring once in u; g is replaced by x, which keeps
    the name g. Taken only when total length drops.
    """
    new_symbol = object()
    for idx, w in enumerate(p.relations):
        u, k = _root(w)
        if k < 2 or len(u) < 2:
            continue
        for g in sorted({s for s, _ in u}):
            if occurrences(u, g) != 1:
                continue
            value = _solve(u + ((new_symbol, -1),), g)
            rels = []
            for j, v in enumerate(p.relations):
                if j == idx:
                    rels.append(((g, 1),) * k)
                else:
                    v = _substitute(v, g, value)
                    rels.append(tuple((g if s is new_symbol else s, e) for s, e in v))
            total = sum(len(r) for r in rels)
            if total < p.total_length:
                prov = tuple(where if j != idx and rels[j] == v else "derived"
                             for j, (v, where) in enumerate(zip(p.relations, p.provenance)))
                return g, format_word(u), Presentation(p.generators, tuple(rels), prov, p.incomplete)
    return None


def simplify(p, budget=None, trace=None):
    """Simplify by Tietze moves until nothing changes or the budget runs out.

    Each pass reduces and deduplicates relations, eliminates one generator
    that occurs exactly once in some relation (shortest relation first, never
    increasing total length), then shortens relations using long subwords of
    other relations. ``trace``, if given, is a list that receives
    ``(description, presentation)`` after every move.
    """
    budget = budget or SimplifyBudget()

    def log(message, q):
        if trace is not None:
            trace.append((message, q))

    cur = p
    for _ in range(budget.max_passes):
        start = cur
        nxt = _reduce_relations(cur)
        if nxt != cur:
            log("reduce relations", nxt)
        cur = nxt
        move = _elimination_move(cur)
        if move:
            g, idx, cur = move
            log(f"eliminate {g} using relation {idx}", cur)
        while True:
            move = _shortening_move(cur)
            if not move:
                break
            ri, si, cur = move
            log(f"shorten relation {si} using relation {ri}", cur)
        move = _power_move(cur)
        if move:
            g, u, cur = move
            log(f"substitute {g} -> {u}", cur)
        if cur.total_length > budget.max_total_length:
            return replace(cur, incomplete=True)
        if cur == start:
            return cur
    done = _reduce_relations(cur)
    if done != cur or _elimination_move(done) or _shortening_move(done) or _power_move(done):
        return replace(done, incomplete=True)
    return done


def _is_square(word):
    return len(word) == 2 and word[0] == word[1]


def _is_commutator(word):
    if len(word) != 4:
        return False
    (x, e1), (y, e2), (x2, e3), (y2, e4) = word
    return x != y and x == x2 and y == y2 and e1 == -e3 and e2 == -e4


def recognize(p):
    """Match a simplified presentation against the groups the classification uses.

    Only syntactic shapes are recognized, up to renaming, inversion and
    cyclic rotation; ``Unknown`` says nothing about the group.
    """
    gens, rels = p.generators, [cyclically_reduce(w) for w in p.relations]
    rels = [w for w in rels if w]
    if len(gens) == 1 and not rels:
        return RecognitionResult(INFINITE_CYCLIC)
    if len(gens) == 2 and len(rels) == 1:
        w = rels[0]
        if _is_square(w) and len({s for s, _ in w}) == 1:
            return RecognitionResult(Z_STAR_Z2)
        if any(_is_commutator(c) for c in rotations(w)):
            return RecognitionResult(FREE_ABELIAN_RANK2)
    for g in gens:
        containing = [w for w in rels if occurrences(w, g)]
        if len(containing) == 1 and _is_square(containing[0]) and containing[0][0][0] == g:
            return RecognitionResult(Z2_FREE_FACTOR, g)
    return RecognitionResult(UNKNOWN)


def _relation_multiset(rels):
    return sorted(canonical_relation(w) for w in rels if cyclically_reduce(w))


def same_up_to_symmetry(p, q):
    """True if p and q agree after renaming/inverting generators and rotating/inverting relations."""
    if len(p.generators) != len(q.generators):
        return False
    target = _relation_multiset(q.relations)
    if len(_relation_multiset(p.relations)) != len(target):
        return False
    for perm in permutations(q.generators):
        for signs in product((1, -1), repeat=len(perm)):
            mapping = {g: (h, s) for g, h, s in zip(p.generators, perm, signs)}
            if _relation_multiset(p.rename(mapping).relations) == target:
                return True
    return False
