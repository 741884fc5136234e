"""Words in free groups as tuples of ``(symbol, exponent)`` letters, exponent +1 or -1."""

import re


def letter_inverse(letter):
    return (letter[0], -letter[1])


def inverse(word):
    return tuple(letter_inverse(x) for x in reversed(word))


def free_reduce(word):
    out = []
    for sym, e in word:
        if out and out[-1] == (sym, -e):
            out.pop()
        else:
            out.append((sym, e))
    return tuple(out)


def cyclically_reduce(word):
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == letter_inverse(w[j - 1]):
        i += 1
        j -= 1
    return w[i:j]


def rotations(word):
    return [word[i:] + word[:i] for i in range(max(len(word), 1))]


def occurrences(word, symbol):
    return sum(1 for s, _ in word if s == symbol)


def exponent_sum(word, symbol):
    return sum(e for s, e in word if s == symbol)


def word_key(word):
    """Ordering key that does not change when every generator is inverted.

    Compares length, then the symbol sequence, then each exponent relative
    to the first one.
    """
    if not word:
        return (0, (), ())
    first = word[0][1]
    return (len(word), tuple(s for s, _ in word), tuple(-e * first for _, e in word))


def canonical_relation(word):
    """Representative of a cyclic word up to rotation and inversion."""
    w = cyclically_reduce(word)
    if not w:
        return w
    candidates = rotations(w) + rotations(inverse(w))
    # ties under word_key differ by a global inversion; prefer positive letters
    return min(candidates, key=lambda c: (word_key(c), tuple(-e for _, e in c)))


def power(symbol, n):
    e = 1 if n > 0 else -1
    return tuple((symbol, e) for _ in range(abs(n)))


def format_word(word, separator=""):
    if not word:
        return "1"
    return separator.join(s if e == 1 else f"{s}^-1" for s, e in word)


def parse_word(text, generators=None):
    """Read ``a b^-1 c``, ``ab^-1c`` or ``a*b^-1*c``; powers ``^n`` are expanded.

    With single-letter generators juxtaposition splits into letters; otherwise
    letters must be separated by ``*`` or whitespace.
    """
    text = text.strip()
    if text in ("", "1"):
        return ()
    single = generators is None or all(len(g) == 1 for g in generators)
    if "*" in text or not single:
        pieces = [p for p in re.split(r"[\s*]+", text) if p]
    else:
        pieces = re.findall(r"[A-Za-z_](?:\^-?\d+)?", text.replace(" ", ""))
        if "".join(pieces) != text.replace(" ", ""):
            raise ValueError(f"cannot read word {text!r}")
    word = []
    for piece in pieces:
        m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_']*)(?:\^(-?\d+))?", piece)
        if not m:
            raise ValueError(f"cannot read letter {piece!r}")
        sym, exp = m.group(1), int(m.group(2) or 1)
        if generators is not None and sym not in generators:
            raise ValueError(f"unknown generator {sym!r}")
        word.extend(power(sym, exp))
    return tuple(word)
