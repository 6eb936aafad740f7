"""Finite verifications behind the per-weight reducibility case analysis.

Each fixture certifies, by one of four mechanisms, that cutting a given
up-closed set of weight coordinates forces a nilpotent centralizer:

* ``lambda``: a character whose positive side lies inside the cut set;
* ``gamma``: a root whose translates out of the cut set all leave the
  weight support;
* ``support``: a family of negative-height elements whose images land in
  a common span of smaller dimension;
* ``alternating``: the rank-drop of an odd alternating pairing.

One case (the normalization argument for (2 5 8)) is genuinely not a
finite computation and is reported as skipped.
"""

from __future__ import annotations

from itertools import permutations

from .rootsys import canonical, eij, neg, weight_vector
from .vinberg import (
    ALL_WEIGHTS,
    check_gamma_criterion,
    check_lambda_criterion,
    up_closure,
    x_value,
)

SIX_STABLE = ((2, 6, 7), (2, 5, 8), (3, 4, 8), (3, 5, 7), (1, 7, 8), (4, 5, 6))


def _lam(*terms):
    """Signed sum of weight triples as a canonical lattice vector."""
    acc = [0] * 9
    for sign, t in terms:
        for i in t:
            acc[i - 1] += sign
    return canonical(tuple(acc))


def _comp(u):
    return tuple(sorted(set(range(1, 10)) - set(u)))


def support_targets(actors, M):
    """Targets of the given actors on weight vectors outside M.

    Actors: ("w3", triple) wedge elements, ("g", (p, q)) root e_p - e_q,
    ("w6", 6-tuple) top-side elements.  Returns (targets, zero_hit,
    heights); the criterion needs len(targets) < len(actors), no
    zero-weight target, and all actor heights negative.
    """
    M = frozenset(M)
    targets = set()
    zero_hit = False
    heights = []
    for kind, data in actors:
        if kind == "w3":
            heights.append(x_value(weight_vector(data)))
            for a in ALL_WEIGHTS:
                if a in M or set(a) & set(data):
                    continue
                targets.add(("w6", tuple(sorted(set(a) | set(data)))))
        elif kind == "g":
            p, q = data
            heights.append(x_value(eij(p, q)))
            for a in ALL_WEIGHTS:
                if a in M or q not in a or p in a:
                    continue
                targets.add(("w3", tuple(sorted((set(a) - {q}) | {p}))))
        elif kind == "w6":
            cset = set(_comp(data))
            vec = [1 if i + 1 in data else 0 for i in range(9)]
            heights.append(x_value(tuple(vec)))
            for a in ALL_WEIGHTS:
                if a in M:
                    continue
                inter = set(a) & cset
                if len(inter) == 3:
                    zero_hit = True
                elif len(inter) == 2:
                    p = (set(a) - cset).pop()
                    q = (cset - set(a)).pop()
                    targets.add(("g", (p, q)))
        else:
            raise ValueError(kind)
    return targets, zero_hit, heights


def support_criterion(actors, M) -> dict:
    targets, zero_hit, heights = support_targets(actors, M)
    ok = (len(targets) < len(actors)
          and not zero_hit
          and all(h < 0 for h in heights))
    return {"ok": ok, "targets": sorted(targets), "actors": len(actors),
            "zero_hit": zero_hit, "heights": heights}


def antisym5_det_vanishes() -> bool:
    """Exact symbolic determinant of a generic 5x5 alternating matrix."""
    n = 5
    acc = {}
    for perm in permutations(range(n)):
        coef = _perm_sign(perm)
        mono = []
        ok = True
        for i in range(n):
            j = perm[i]
            if i == j:
                ok = False
                break
            if i < j:
                mono.append((i, j))
            else:
                mono.append((j, i))
                coef = -coef
        if not ok:
            continue
        key = tuple(sorted(mono))
        acc[key] = acc.get(key, 0) + coef
    return all(v == 0 for v in acc.values())


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def wedge_pairing_alternating() -> bool:
    """(omega, x, y) -> omega ^ x ^ y on a 5-dim space is alternating in
    (x, y), checked exactly on every basis combination."""
    from .wedge import merge_sign

    idx = (3, 4, 5, 6, 7)
    from itertools import combinations
    for omega in combinations(idx, 3):
        for x in idx:
            if merge_sign(omega, (x,), (x,))[0] is not None:
                return False
            for y in idx:
                kxy = merge_sign(omega, (x,), (y,))
                kyx = merge_sign(omega, (y,), (x,))
                if kxy[0] is None and kyx[0] is None:
                    continue
                if kxy[0] != kyx[0] or kxy[1] != -kyx[1]:
                    return False
    return True


def case_348() -> dict:
    """Images of e_1^e_2^e_k (k=3..7) stay inside the span indexed by
    {1..7}; the induced odd alternating pairing then forces a kernel."""
    M = up_closure([(3, 4, 8)])
    confinement = []
    for k in range(3, 8):
        for a in ALL_WEIGHTS:
            if a in M or set(a) & {1, 2, k}:
                continue
            if not set(a) <= {3, 4, 5, 6, 7}:
                confinement.append((k, a))
    actors = [("w3", (1, 2, k)) for k in range(3, 8)]
    _, zero_hit, heights = support_targets(actors, M)
    return {
        "ok": (not confinement and not zero_hit
               and all(h < 0 for h in heights)
               and wedge_pairing_alternating()
               and antisym5_det_vanishes()),
        "confinement_failures": confinement,
    }


def negative_weight_sweep() -> dict:
    """Every negative weight except (1 5 9) sits under a verified trigger."""
    triggers = set(SIX_STABLE) | {(1, 6, 8), (2, 4, 8), (2, 3, 9), (1, 4, 9)}
    uncovered = []
    coverage = {}
    for a in ALL_WEIGHTS:
        if x_value(weight_vector(a)) > 0 or a == (1, 5, 9):
            continue
        ups = [t for t in triggers if all(x <= y for x, y in zip(a, t))]
        if not ups:
            uncovered.append(a)
        coverage[a] = sorted(ups)
    return {"ok": not uncovered, "uncovered": uncovered,
            "negatives_checked": len(coverage)}


def case7_part5() -> dict:
    """Closure conditions for the shift argument on the four-generator set."""
    gens = ((1, 6, 9), (2, 4, 9), (2, 7, 8), (4, 6, 7))
    M = up_closure(gens)
    alpha = (1, 5, 9)
    shift_ok = []
    for sign in (1, -1):
        for g in M:
            vec = list(weight_vector(g))
            vec[4] += sign   # +- (e5 - e4)
            vec[3] -= sign
            if min(vec) < 0 or max(vec) > 1 or sum(vec) != 3:
                continue
            t = tuple(i + 1 for i, c in enumerate(vec) if c)
            if t in ALL_WEIGHTS and t not in M:
                shift_ok.append((sign, g, t))
    cond_b = alpha not in M and (1, 4, 9) not in M
    # with (1 5 9) added, the configuration covering the paired-case
    # criterion is contained in the enlarged set
    enlarged = M | up_closure([alpha])
    cond_c = up_closure([(1, 5, 9), (5, 6, 7)]) <= enlarged
    return {"ok": not shift_ok and cond_b and cond_c,
            "shift_failures": shift_ok}


def run_all() -> list:
    """All fixtures; each entry: (name, status, detail)."""
    out = []

    lam267 = _lam((-1, (1, 3, 4)), (-1, (1, 2, 5)))
    out.append(("part1_267_lambda",
                check_lambda_criterion(lam267, up_closure([(2, 6, 7)])), {}))

    out.append(("part1_178_gamma",
                check_gamma_criterion(neg(weight_vector((7, 8, 9))),
                                      up_closure([(1, 7, 8)])), {}))
    out.append(("part1_456_gamma",
                check_gamma_criterion(weight_vector((1, 2, 3)),
                                      up_closure([(4, 5, 6)])), {}))

    res = support_criterion([("w3", (1, 2, 3)), ("w3", (1, 2, 4))],
                            up_closure([(3, 5, 7)]))
    out.append(("part1_357_support", res["ok"], res))

    res = case_348()
    out.append(("part1_348_alternating", res["ok"], res))

    out.append(("part1_258_skipped", None,
                {"reason": "proof-level, not machine-checked: relies on a "
                           "group-action normal form, not a finite sweep"}))

    out.append(("part1_248_reduces_to_348",
                all(x <= y for x, y in zip((2, 4, 8), (3, 4, 8))), {}))

    res = negative_weight_sweep()
    out.append(("part2_negative_sweep", res["ok"], res))

    out.append(("part2_168_gamma",
                check_gamma_criterion(neg(weight_vector((6, 8, 9))),
                                      up_closure([(1, 6, 8)])), {}))
    out.append(("part2_239_gamma",
                check_gamma_criterion(eij(1, 9), up_closure([(2, 3, 9)])), {}))

    res = support_criterion([("g", (3, 9)), ("g", (2, 9))],
                            up_closure([(1, 4, 9), (2, 4, 9)]))
    out.append(("part2_149_support", res["ok"], res))

    res = support_criterion([("w6", _comp((6, 8, 9))), ("w6", _comp((7, 8, 9)))],
                            up_closure([(1, 6, 9), (2, 6, 8)]))
    out.append(("part3_169_268_support", res["ok"], res))

    lam4 = _lam((-1, (1, 2, 3)), (-1, (1, 4, 6)), (1, (1, 6, 9)))
    out.append(("part4_159_567_lambda",
                check_lambda_criterion(lam4, up_closure([(1, 5, 9), (5, 6, 7)])),
                {}))

    lam5 = _lam((-1, (1, 2, 3)), (1, (7, 8, 9)), (1, (3, 6, 9)))
    out.append(("part5_169_349_367_lambda",
                check_lambda_criterion(
                    lam5, up_closure([(1, 6, 9), (3, 4, 9), (3, 6, 7)])), {}))

    actors6 = [("w6", _comp(t)) for t in
               ((5, 7, 9), (6, 7, 9), (4, 8, 9), (5, 8, 9), (6, 8, 9), (7, 8, 9))]
    res = support_criterion(actors6,
                            up_closure([(1, 7, 9), (2, 4, 9), (4, 5, 7)]))
    out.append(("part6_179_249_457_support", res["ok"], res))

    res = case7_part5()
    out.append(("part7_169_249_278_467_shift", res["ok"], res))

    return out


def verify_stability() -> dict:
    results = run_all()
    failures = [name for name, ok, _ in results if ok is False]
    skipped = [name for name, ok, _ in results if ok is None]
    return {"results": results, "failures": failures, "skipped": skipped,
            "ok": not failures}
