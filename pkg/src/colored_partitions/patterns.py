"""Forbidden patterns: detection, mining, symbolic families and shortcuts.

A pattern is a ``gg``-ordered run of secondary parts, optionally closed by a
single primary part.  It is *forbidden* when, read as a partition, it is not
an image of phi, and *optimal* when in addition dropping either its first or
its last part leaves an allowed pattern.

Consecutive parts x = k_p, y = l_q of the patterns of interest sit at one
of two minimal gaps:

* ``->``  (p, q) is a special pair and k - l = chi(p <= q)
* ``->>`` p != q, x |> y and k - l = 1 + chi(p <= q)

so a pattern is determined by its color word, its move word and the size
k of its last part.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

from .bridge import bridge_direct, in_E1, index_split
from .colors import Color, chi, color, is_special_pair, pretty_name
from .errors import InputError, InternalError
from .parts import Part, alpha, beta, class_gt, format_part, gg, succeq, tri
from .partitions import in_E, part_universe

ARROW, DOUBLE = "->", "->>"


# -- single patterns ---------------------------------------------------------

def _check_shape(pat: Sequence[Part], n: int) -> tuple:
    pat = tuple(pat)
    if not pat:
        raise InputError("empty pattern")
    if any(not x.color.j for x in pat[:-1]):
        raise InputError("only the last part of a pattern may be primary")
    if not in_E(pat, n):
        raise InputError("pattern is not gg-ordered")
    return pat


def is_forbidden(pat: Sequence[Part], n: int) -> bool:
    pat = _check_shape(pat, n)
    return not in_E1(pat, n, "cond3", check=False)


def is_optimal_forbidden(pat: Sequence[Part], n: int) -> bool:
    pat = _check_shape(pat, n)
    if in_E1(pat, n, "cond3", check=False) or len(pat) < 2:
        return False
    return in_E1(pat[1:], n, "cond3", check=False) and in_E1(pat[:-1], n, "cond3", check=False)


def has_head(pat: Sequence[Part]) -> bool:
    """Starts with two secondary parts not related by |> ."""
    return len(pat) >= 2 and pat[1].color.j != 0 and not tri(pat[0], pat[1])


def has_double_arrow(pat: Sequence[Part], pivot: Color | None = None) -> bool:
    """Some part is entered and left by ``->`` moves (optionally of color ``pivot``)."""
    for t in range(1, len(pat) - 1):
        if pivot is not None and pat[t].color != pivot:
            continue
        if not tri(pat[t - 1], pat[t]) and not tri(pat[t], pat[t + 1]):
            return True
    return False


def is_shortcut(pat: Sequence[Part]) -> bool:
    """All secondary, and the class of the last part beats the class of the
    first part lowered by (number of parts - 2)."""
    if len(pat) < 2 or any(not x.color.j for x in pat):
        return False
    s = len(pat) - 1
    return class_gt(pat[-1], pat[0] - (s - 1))


# -- symbolic form -----------------------------------------------------------

def move_kind(x: Part, y: Part) -> str | None:
    d = x.size - y.size - chi(x.color <= y.color)
    if d == 0 and is_special_pair(x.color, y.color):
        return ARROW
    if d == 1 and x.color != y.color:
        return DOUBLE
    return None


@dataclass(frozen=True)
class SymbolicPattern:
    colors: tuple
    moves: tuple
    k: int

    def __post_init__(self):
        if len(self.moves) != len(self.colors) - 1:
            raise InputError("need exactly one move between consecutive colors")
        if any(m not in (ARROW, DOUBLE) for m in self.moves):
            raise InputError(f"unknown move in {self.moves}")

    def word(self) -> str:
        out = pretty_name(self.colors[0])
        for m, c in zip(self.moves, self.colors[1:]):
            out += ("-" if m == ARROW else "=") + pretty_name(c)
        return out

    def __str__(self):
        out = pretty_name(self.colors[0])
        for m, c in zip(self.moves, self.colors[1:]):
            out += f" {'→' if m == ARROW else '↠'} {pretty_name(c)}"
        return f"{out}, k={self.k}"


def realize(sym: SymbolicPattern) -> tuple:
    """Concrete parts: last part k, then walk left adding each move's gap."""
    sizes = [sym.k]
    for m, p, q in zip(reversed(sym.moves), reversed(sym.colors[:-1]), reversed(sym.colors[1:])):
        if m == ARROW and not is_special_pair(p, q):
            raise InputError(f"{pretty_name(p)} -> {pretty_name(q)} is not a special pair")
        if m == DOUBLE and p == q:
            raise InputError(f"a ->> move joins two different colors, got {pretty_name(p)} twice")
        sizes.append(sizes[-1] + chi(p <= q) + (1 if m == DOUBLE else 0))
    sizes.reverse()
    parts = tuple(Part(k, c) for k, c in zip(sizes, sym.colors))
    if any(x.size < (2 if x.color.j else 1) for x in parts):
        raise InputError("k too small for this color word")
    return parts


def symbolize(pat: Sequence[Part]) -> SymbolicPattern | None:
    moves = []
    for x, y in zip(pat, pat[1:]):
        m = move_kind(x, y)
        if m is None:
            return None
        moves.append(m)
    return SymbolicPattern(tuple(x.color for x in pat), tuple(moves), pat[-1].size)


# -- mining ------------------------------------------------------------------

def _reach_bound(pat, max_parts) -> int:
    """Upper bound on nu_B + (B - 1)/2 over every upper or primary index B > 1
    that the pattern (or any extension within ``max_parts``) can have."""
    best = -10 ** 9
    for t in range(1, len(pat)):
        x = pat[t]
        h = (x.size + 1) // 2 if x.color.j else x.size
        best = max(best, h + t)
    last = pat[-1].size
    if pat[-1].color.j and len(pat) < max_parts:
        best = max(best, last - 1 + max_parts - 1, (last + 1) // 2 + max_parts - 1)
    return best


@dataclass
class MiningResult:
    n: int
    max_parts: int
    max_size: int
    pivot: Color | None
    patterns: list = field(default_factory=list)
    visited: int = 0

    def families(self) -> dict:
        """Group instances by color and move word; value = sorted k list."""
        out: dict = {}
        for pat in self.patterns:
            sym = symbolize(pat)
            key = sym.word() if sym else " ".join(format_part(x) for x in pat)
            out.setdefault(key, []).append(pat[-1].size)
        return {k: sorted(v) for k, v in sorted(out.items())}


def mine_optimal(n: int, max_parts: int, max_size: int, pivot: Color | None = None) -> MiningResult:
    """Every optimal forbidden pattern with at most ``max_parts`` parts of size
    at most ``max_size``.  With ``pivot`` set, patterns containing a part of
    that color entered and left by ``->`` moves are skipped.

    Soundness of the pruning: an optimal forbidden pattern fails the bridge
    inequality at its first index only (a failure further right would
    survive removal of the first part), so it starts with two secondary
    parts not related by |>, every proper prefix is allowed, and some index
    B > 1 has nu_B + (B - 1)/2 of size at least that of the first part.
    """
    if max_parts < 2:
        raise InputError("patterns need at least two parts")
    pool = part_universe(n, max_size, "E")
    nxt = {x: [y for y in pool if gg(x, y)] for x in pool}
    res = MiningResult(n, max_parts, max_size, pivot)

    def dfs(pat):
        res.visited += 1
        if pivot is not None and len(pat) >= 3 and has_double_arrow(pat[-3:], pivot):
            return
        if not in_E1(pat, n, "cond3", check=False):
            if in_E1(pat[1:], n, "cond3", check=False):
                res.patterns.append(tuple(pat))
            return
        if not pat[-1].color.j or len(pat) == max_parts:
            return
        if _reach_bound(pat, max_parts) < pat[0].size:
            return
        for y in nxt[pat[-1]]:
            pat.append(y)
            dfs(pat)
            pat.pop()

    for x in pool:
        if not x.color.j:
            continue
        for y in nxt[x]:
            if y.color.j and not tri(x, y):
                dfs([x, y])
    res.patterns.sort(key=lambda p: (len(p), [(-z.size, z.color.key) for z in p]))
    return res


# -- known families ------------------------------------------------------------

def four_color_family_instances(max_size: int) -> set:
    """cd -> ab ->> c|d with k >= 1, and ad -> bc ->> a with k >= 2."""
    a, b, c, d = (color(i) for i in range(1, 5))
    ab, ad, bc, cd = color(1, 2), color(1, 4), color(2, 3), color(3, 4)
    out = set()
    for k in range(1, max_size + 1):
        for last in (c, d):
            pat = (Part(k + 2, cd), Part(k + 2, ab), Part(k, last))
            if k + 2 <= max_size:
                out.add(pat)
        if k >= 2 and k + 2 <= max_size:
            out.add((Part(k + 2, ad), Part(k + 1, bc), Part(k, a)))
    return out


def _star(*alts):
    return "(?:" + "|".join(alts) + ")*"


# Bodies: a family's pattern without its final move and part.  Moves are
# written "-" for -> and "=" for ->>.
_B = {}
_B["p1"] = "ad-bc"
_B["p2"] = "be-cd"
_B["p3"] = "de-ab"
_B["p4"] = "de-ac(?:=ab)?"
_B["p5"] = "ae-bc"
_B["p6"] = "ae-bd(?:=bc)?"
_B["p20"] = "ae-cd"
_B["p21"] = "de-bc"
_B["p7"] = "ae-cd" + _star("=" + _B["p2"])
_B["p8"] = _B["p7"] + "(?:=be)?(?:=bd)?(?:=bc)?"
_B["p9"] = "de-bc" + _star("=" + _B["p8"], "=" + _B["p6"], "=" + _B["p5"], "(?:=ae)?=" + _B["p1"])
_B["p10"] = _B["p9"] + "(?:=ae)?(?:=ad)?(?:=ac)?(?:=ab)?"
_B["p12"] = _B["p9"] + "=" + _B["p7"]
_B["p13"] = _B["p9"] + "=" + _B["p8"]
_B["p14"] = "c[de]-ab" + _star("=" + _B["p3"], "=" + _B["p4"], "=" + _B["p10"])


def _fam(label, body, last, kmin=1, kexact=None, extra=None):
    return (label, re.compile(f"{body}={last}"), kmin, kexact, extra)


def _body_of(word):
    """Word with its final move and color removed."""
    cut = max(word.rfind("-"), word.rfind("="))
    return word[:cut]


def _last_color_of(body):
    cut = max(body.rfind("-"), body.rfind("="))
    return body[cut + 1:]


FIVE_COLOR_FAMILIES = [
    _fam("p1", _B["p1"], "a", 2),
    _fam("p2", _B["p2"], "b", 2),
    _fam("p3", _B["p3"], "[de]", 1),
    _fam("p4", _B["p4"], "[de]", 1),
    _fam("p5", _B["p5"], "a", 2),
    _fam("p6", _B["p6"], "a", 2),
    _fam("p20", _B["p20"], "b", 2),
    _fam("p21", _B["p21"], "a", 2),
    _fam("p7", _B["p7"], "a", 2),
    _fam("p8", _B["p8"], "a", 2),
    _fam("p9", _B["p9"], "e", 1),
    _fam("p10", _B["p10"], "e", 1),
    _fam("p40", _B["p10"], "d", 2),
    _fam("p41", _B["p10"], "d", kexact=1,
         extra=lambda w: _last_color_of(_body_of(w)) not in ("ae", "be")),
    _fam("p12", _B["p12"], "b[de]", kexact=2),
    _fam("p13", _B["p13"], "ae", kexact=2),
    _fam("p31", _B["p13"], "ad", kexact=2,
         extra=lambda w: _last_color_of(_body_of(w)) != "be"),
    _fam("p22", "c[de]-ab", "[de]", 1),
    _fam("p14", _B["p14"], "c", 2),
    _fam("p15", _B["p14"] + "=de", "c", 2),
    _fam("p14/1", _B["p14"], "c", kexact=1,
         extra=lambda w: _last_color_of(_body_of(w)) in ("ac", "ab", "bc")),
    ("p14+p12", re.compile(_B["p14"] + "=" + _B["p12"] + "=be-cd"), 1, 3, None),
    ("p14+p13", re.compile(_B["p14"] + "=" + _B["p13"] + "=ae-cd"), 1, 3, None),
    _fam("p14+p9+ad", _B["p14"] + "=" + _B["p9"] + "(?:=ae)?=ad", "ac", kexact=2),
    _fam("p14+p9", _B["p14"] + "=" + _B["p9"], "ac", kexact=2,
         extra=lambda w: _last_color_of(_body_of(w)) == "bc"),
]


def five_color_families(pat: Sequence[Part]) -> list[str]:
    """Labels of the five-color families the concrete pattern belongs to."""
    sym = symbolize(pat)
    if sym is None:
        return []
    w = sym.word()
    out = []
    for label, rx, kmin, kexact, extra in FIVE_COLOR_FAMILIES:
        if not rx.fullmatch(w):
            continue
        if (kexact is not None and sym.k != kexact) or (kexact is None and sym.k < kmin):
            continue
        if extra is not None and not extra(w):
            continue
        out.append(label)
    return out



def upper_half_reduction(pat: Sequence[Part]) -> tuple | None:
    """Replace a final secondary part by its upper half.

    Allowed only when that half is at least the lower half of the part
    before it; returns None otherwise (or when the pattern already ends on
    a primary part).
    """
    pat = tuple(pat)
    if len(pat) < 2 or not pat[-1].color.j:
        return None
    top = alpha(pat[-1])
    if not succeq(top, beta(pat[-2])):
        return None
    return pat[:-1] + (top,)


def reduced_five_color_families(pat: Sequence[Part]) -> list[str]:
    """Family labels of the pattern, or failing that of its upper-half reduction."""
    direct = five_color_families(pat)
    if direct:
        return direct
    red = upper_half_reduction(pat)
    return five_color_families(red) if red is not None else []

# -- shortcuts -------------------------------------------------------------------

def shortcut_search(n: int, max_parts: int, max_size: int, pivot: Color | None = None,
                    brute: bool = False):
    """Look for a shortcut among gg-chains of secondary parts, skipping chains
    with a ``->`` ``pivot`` ``->`` move when ``pivot`` is given.  Returns a
    witness chain or None.

    Whether a chain is a shortcut only depends on its first part, last part
    and length, so the default search propagates, for every first part, the
    set of reachable (last part, entered-by-arrow) states layer by layer.
    ``brute=True`` walks every chain instead.
    """
    pool = [x for x in part_universe(n, max_size, "E2")]
    nxt = {x: [y for y in pool if gg(x, y)] for x in pool}
    bad_pivot = (lambda y: False) if pivot is None else (lambda y: y.color == pivot)

    if brute:
        def walk(chain):
            if is_shortcut(chain):
                return tuple(chain)
            if len(chain) == max_parts:
                return None
            for y in nxt[chain[-1]]:
                if pivot is not None and len(chain) >= 2 and has_double_arrow(chain[-2:] + [y], pivot):
                    continue
                chain.append(y)
                hit = walk(chain)
                chain.pop()
                if hit:
                    return hit
            return None

        for x in pool:
            hit = walk([x])
            if hit:
                return hit
        return None

    for x in pool:
        # state: (last part, last move was -> into a pivot-colored part) -> a witness chain
        layer = {(x, False): (x,)}
        for _ in range(max_parts - 1):
            new = {}
            for (z, armed), chain in layer.items():
                for y in nxt[z]:
                    arrow = not tri(z, y)
                    if armed and arrow:
                        continue
                    key = (y, arrow and bad_pivot(y))
                    if key not in new:
                        new[key] = chain + (y,)
            for (y, _), chain in new.items():
                if is_shortcut(chain):
                    return chain
            layer = new
    return None


# -- building forbidden patterns from a shortcut -----------------------------

@dataclass
class Construction:
    pattern: tuple
    rounds: int          # number of extra shifted copies of the shortcut
    lift: int            # shift applied to the shortcut so it sits above eta
    raise_all: int       # common shift making eta's last part the bridge of index 1


def _bridges_to_end(pat, n) -> bool:
    ip = index_split(pat, n, check=False)
    return bridge_direct(ip)[1] == ip.width


def build_forbidden_from_shortcut(zeta: Sequence[Part], eta: Sequence[Part], n: int,
                                  max_rounds: int = 200, max_shift: int = 400) -> Construction:
    """Stack shifted copies of a shortcut on an allowed pattern until the
    result is forbidden.

    ``eta`` must be allowed, made of secondary parts closed by a primary part
    that is the bridge of its first index.  Copies of ``zeta`` shifted by
    s*u, s*(u-1), ..., 0 (s + 1 = number of parts of ``zeta``) are placed in
    front; the smallest u giving a forbidden pattern is returned.
    """
    zeta, eta = tuple(zeta), tuple(eta)
    if not is_shortcut(zeta) or not in_E(zeta, n):
        raise InputError("zeta must be a gg-ordered shortcut")
    if not eta or eta[-1].color.j or any(not x.color.j for x in eta[:-1]) or not in_E(eta, n):
        raise InputError("eta must be secondary parts closed by one primary part")
    if not in_E1(eta, n, check=False):
        raise InputError("eta must be allowed")
    if len(eta) > 1 and not _bridges_to_end(eta, n):
        raise InputError("eta's primary part must be the bridge of its first index")
    s = len(zeta) - 1
    lift = next((c for c in range(max_shift) if gg(zeta[-1] + c, eta[0])), None)
    if lift is None:
        raise InputError("could not place zeta above eta")
    base = tuple(x + lift for x in zeta)
    raise_all = next((K for K in range(max_shift)
                      if _bridges_to_end(tuple(x + K for x in base + eta), n)), None)
    if raise_all is None:
        raise InternalError("no common shift makes eta's last part the bridge")
    base = tuple(x + raise_all for x in base)
    tail = tuple(x + raise_all for x in eta)
    for u in range(max_rounds + 1):
        pat = tuple(x + s * v for v in range(u, -1, -1) for x in base) + tail
        if not in_E(pat, n):
            raise InternalError(f"stacked copies are not gg-ordered at round {u}")
        if not _bridges_to_end(pat, n):
            raise InternalError(f"the last part stopped bridging index 1 at round {u}")
        if not in_E1(pat, n, "cond3", check=False):
            return Construction(pat, u, lift, raise_all)
    raise InternalError("no forbidden pattern within the round limit")
