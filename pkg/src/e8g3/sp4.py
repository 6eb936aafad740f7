"""The symplectic group on four F_3 coordinates, enumerated two ways, and
the exact density of elements with a fixed vector."""

from __future__ import annotations

from itertools import product

J = ((0, 0, 1, 0), (0, 0, 0, 1), (2, 0, 0, 0), (0, 2, 0, 0))


def _sp(u, v) -> int:
    return (u[0] * v[2] + u[1] * v[3] - u[2] * v[0] - u[3] * v[1]) % 3


_VECS = [v for v in product(range(3), repeat=4) if v != (0, 0, 0, 0)]


def enumerate_sp4():
    """All matrices by completing symplectic bases (columns e1, e2, f1, f2)."""
    out = []
    for e1 in _VECS:
        for f1 in _VECS:
            if _sp(e1, f1) != 1:
                continue
            perp = [v for v in _VECS
                    if _sp(e1, v) == 0 and _sp(f1, v) == 0]
            for e2 in perp:
                for f2 in perp:
                    if _sp(e2, f2) == 1:
                        out.append((e1, e2, f1, f2))
    return out


def is_symplectic(cols) -> bool:
    e1, e2, f1, f2 = cols
    want = {(0, 2): 1, (1, 3): 1, (2, 0): 2, (3, 1): 2}
    for i, u in enumerate(cols):
        for j, v in enumerate(cols):
            if _sp(u, v) != want.get((i, j), 0):
                return False
    return True


def _has_eigenvalue_one(cols) -> bool:
    # det(M - I) over F_3, with M given by columns
    rows = [[(cols[c][r] - (1 if r == c else 0)) % 3 for c in range(4)]
            for r in range(4)]
    return _det3(rows) == 0


def _det3(rows) -> int:
    m = [row[:] for row in rows]
    det = 1
    for c in range(4):
        piv = next((i for i in range(c, 4) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c] % 3
        inv = pow(m[c][c], -1, 3)
        for i in range(c + 1, 4):
            if m[i][c]:
                fct = m[i][c] * inv % 3
                m[i] = [(x - fct * y) % 3 for x, y in zip(m[i], m[c])]
    return det % 3


def _mat_mul(a, b):
    # both as column tuples
    rows_a = [[a[c][r] for c in range(4)] for r in range(4)]
    cols = []
    for c in range(4):
        col = tuple(sum(rows_a[r][k] * b[c][k] for k in range(4)) % 3
                    for r in range(4))
        cols.append(col)
    return tuple(cols)


def _mat_inv(cols):
    rows = [[cols[c][r] for c in range(4)] for r in range(4)]
    aug = [rows[i] + [int(i == j) for j in range(4)] for i in range(4)]
    for c in range(4):
        piv = next(i for i in range(c, 4) if aug[i][c] % 3)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, 3)
        aug[c] = [x * inv % 3 for x in aug[c]]
        for i in range(4):
            if i != c and aug[i][c] % 3:
                fct = aug[i][c]
                aug[i] = [(x - fct * y) % 3 for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(aug[r][4 + c] for r in range(4)) for c in range(4))


def density_direct():
    """(order, |C|) by filtering every element."""
    group = enumerate_sp4()
    hits = sum(1 for m in group if _has_eigenvalue_one(m))
    return len(group), hits


def density_by_classes():
    """(order, |C|) via conjugacy classes: orbit-close each unprocessed
    element under a fixed generating set, test one representative."""
    group = enumerate_sp4()
    index = {m: i for i, m in enumerate(group)}
    gens = _generators(group)
    gen_invs = [_mat_inv(g) for g in gens]
    seen = [False] * len(group)
    order = len(group)
    hits = 0
    for i, m in enumerate(group):
        if seen[i]:
            continue
        # BFS over the conjugacy class
        cls = [m]
        seen[i] = True
        frontier = [m]
        while frontier:
            nxt = []
            for x in frontier:
                for g, gi in zip(gens, gen_invs):
                    y = _mat_mul(_mat_mul(g, x), gi)
                    j = index[y]
                    if not seen[j]:
                        seen[j] = True
                        cls.append(y)
                        nxt.append(y)
            frontier = nxt
        if _has_eigenvalue_one(m):
            hits += len(cls)
    return order, hits


def _generators(group):
    """A small generating set: verified by orbit closure on the group."""
    cand = group[1:6] + group[1000:1002]
    # closure check
    idx = {m: i for i, m in enumerate(group)}
    reached = {idx[_identity()]}
    frontier = [_identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in cand:
                y = _mat_mul(g, x)
                j = idx[y]
                if j not in reached:
                    reached.add(j)
                    nxt.append(y)
        frontier = nxt
    assert len(reached) == len(group), "candidate set does not generate"
    return cand


def _identity():
    return tuple(tuple(int(r == c) for r in range(4)) for c in range(4))
