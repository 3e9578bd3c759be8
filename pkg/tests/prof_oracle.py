"""Independent composite of profunctors: connected components of the
graph on matched pairs, by breadth-first search."""
from collections import deque


def coend_classes(M, N):
    B = M.tgt
    nodes = [(m, n) for m in M.carrier for n in N.carrier if M.m1(m) == N.m0(n)]
    adj = {p: [] for p in nodes}
    for m in M.carrier:
        for g in B.arrows:
            if B.src(g) != M.m1(m):
                continue
            for n in N.carrier:
                if N.m0(n) != B.tgt(g):
                    continue
                a, b = (M.lact[(m, g)], n), (m, N.ract[(g, n)])
                adj[a].append(b)
                adj[b].append(a)
    comp = {}
    for p in nodes:
        if p in comp:
            continue
        comp[p] = p
        queue = deque([p])
        while queue:
            q = queue.popleft()
            for r in adj[q]:
                if r not in comp:
                    comp[r] = p
                    queue.append(r)
    return comp


def agrees(M, N, composite):
    """The composite's classes, ends and actions match the oracle."""
    comp = coend_classes(M, N)
    P = composite.module
    to_oracle = {}
    for p, c in composite.cls.items():
        if to_oracle.setdefault(c, comp[p]) != comp[p]:
            return False
    if len(set(to_oracle.values())) != len(to_oracle) or set(to_oracle.values()) != set(comp.values()):
        return False
    for c in P.carrier:
        m, n = composite.reps[c]
        if (P.m0(c), P.m1(c)) != (M.m0(m), N.m1(n)):
            return False
        for (f, x), y in P.ract.items():
            if x == c and to_oracle[y] != comp[(M.ract[(f, m)], n)]:
                return False
        for (x, g), y in P.lact.items():
            if x == c and to_oracle[y] != comp[(m, N.lact[(n, g)])]:
                return False
    return True
