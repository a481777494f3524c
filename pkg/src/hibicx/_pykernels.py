"""Pure-Python hot loops; the compiled ``_ckernels`` module mirrors this API."""
from __future__ import annotations

NAME = "python"


def is_minimal(xi, n, ups, downs):
    """Closure test: ``xi`` is a minimal generator of its module.

    Starting from ``-inf`` (index 0), walk down along every cover and up along
    covers whose inequality is tight; ``xi`` is minimal iff ``inf`` is reached.
    """
    top = len(xi) - 1
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        xv = xi[v]
        for b in ups[v]:
            if not (seen >> b) & 1 and xv == xi[b] - n:
                if b == top:
                    return True
                seen |= 1 << b
                stack.append(b)
        for a in downs[v]:
            if not (seen >> a) & 1:
                seen |= 1 << a
                stack.append(a)
    return False


def enumerate_module(order, ups, downs, n, lb, ub, minimal_only):
    """All integer xi with lb <= xi <= ub and xi(a) >= xi(b) - n on covers.

    ``order`` is a topological order of the vertices; values of lower covers
    bound a vertex from above.  Results are tuples in vertex-index order.
    """
    V = len(order)
    val = [0] * V
    out = []

    def rec(pos):
        v = order[pos]
        hi = ub[v]
        for a in downs[v]:
            if val[a] + n < hi:
                hi = val[a] + n
        x = lb[v]
        last = pos == V - 1
        while x <= hi:
            val[v] = x
            if last:
                if not minimal_only or is_minimal(val, n, ups, downs):
                    out.append(tuple(val))
            else:
                rec(pos + 1)
            x += 1

    rec(0)
    return out


def least_split(xi, cov_a, cov_b, n1, n2, q):
    """Least xi2 with xi2 in the n2-module and xi - q*xi2 in the n1-module.

    Difference constraints per cover a < b:
        xi2[b] - xi2[a] <= n2
        xi2[b] - xi2[a] >= ceil((xi[b] - xi[a] - n1) / q)
    with xi2[inf] = 0, solved by longest paths from inf (Bellman-Ford).
    Returns ``None`` when the system is infeasible.
    """
    V = len(xi)
    top = V - 1
    NEG = None
    x = [NEG] * V
    x[top] = 0
    E = len(cov_a)
    c = [-((xi[cov_a[k]] - xi[cov_b[k]] + n1) // q) for k in range(E)]
    for it in range(V + 1):
        changed = False
        for k in range(E):
            a = cov_a[k]
            b = cov_b[k]
            if x[a] is not None:
                t = x[a] + c[k]
                if x[b] is None or t > x[b]:
                    x[b] = t
                    changed = True
            if x[b] is not None:
                t = x[b] - n2
                if x[a] is None or t > x[a]:
                    x[a] = t
                    changed = True
        if not changed:
            break
        if x[top] > 0:
            return None
    else:
        return None
    return tuple(x)
