"""Integer kernels on index-encoded finite functions (pure Python)."""


def compose_idx(f, g):
    # g after f, both given as image lists
    return [g[x] for x in f]


def matching_pairs(f, g, n):
    """All (i, j) with f[i] == g[j]; values of f, g lie in range(n)."""
    buckets = [[] for _ in range(n)]
    for j, y in enumerate(g):
        buckets[y].append(j)
    out = []
    for i, x in enumerate(f):
        for j in buckets[x]:
            out.append((i, j))
    return out


def quotient_classes(n, left, right):
    """Least member of each element's class under the equivalence generated
    by left[k] ~ right[k]."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in zip(left, right):
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    return [find(x) for x in range(n)]


def fibers_idx(f, n):
    out = [[] for _ in range(n)]
    for i, y in enumerate(f):
        out[y].append(i)
    return out
