# Compiled versions of the integer kernels in _pykernels.


def compose_idx(list f, list g):
    cdef Py_ssize_t i, n = len(f)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = g[<Py_ssize_t>f[i]]
    return out


def matching_pairs(list f, list g, Py_ssize_t n):
    cdef Py_ssize_t i, j, k, x
    cdef Py_ssize_t nf = len(f), ng = len(g)
    cdef list buckets = [[] for _ in range(n)]
    cdef list out = []
    cdef list b
    for j in range(ng):
        (<list>buckets[<Py_ssize_t>g[j]]).append(j)
    for i in range(nf):
        b = <list>buckets[<Py_ssize_t>f[i]]
        for k in range(len(b)):
            out.append((i, b[k]))
    return out


cdef Py_ssize_t _find(int[:] parent, Py_ssize_t x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def quotient_classes(Py_ssize_t n, left, right):
    import array
    cdef int[:] parent = array.array("i", range(n))
    cdef Py_ssize_t k, a, b, ra, rb, m = len(left)
    for k in range(m):
        a = left[k]
        b = right[k]
        ra = _find(parent, a)
        rb = _find(parent, b)
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    return [_find(parent, k) for k in range(n)]


def fibers_idx(list f, Py_ssize_t n):
    cdef Py_ssize_t i
    cdef list out = [[] for _ in range(n)]
    for i in range(len(f)):
        (<list>out[<Py_ssize_t>f[i]]).append(i)
    return out
