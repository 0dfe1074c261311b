"""Pure-Python graph kernels.

Reference implementations of the routines in ``_ckernels.pyx``. Both
backends take 0-based CSR adjacency (``indptr``, ``indices``) and must
return identical results for identical input; the test suite checks this.
"""

from heapq import heappop, heappush

_INF = 1 << 62


def hopcroft_karp(n_left, n_right, indptr, indices):
    """Maximum-cardinality bipartite matching.

    Returns ``(match_left, match_right)`` where unmatched entries are -1.
    """
    indptr = list(indptr)
    indices = list(indices)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left

    while True:
        queue = []
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        dist_nil = _INF
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if dist[u] + 1 >= dist_nil:
                continue
            for k in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[k]]
                if w == -1:
                    if dist[u] + 1 < dist_nil:
                        dist_nil = dist[u] + 1
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if dist_nil == _INF:
            break

        it = indptr[:-1]
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                end = indptr[u + 1]
                pushed = False
                while it[u] < end:
                    v = indices[it[u]]
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == dist_nil:
                            for x in stack:
                                y = indices[it[x]]
                                match_l[x] = y
                                match_r[y] = x
                            stack.clear()
                            pushed = True
                            break
                    elif dist[w] == dist[u] + 1:
                        stack.append(w)
                        pushed = True
                        break
                    it[u] += 1
                if not pushed:
                    dist[u] = _INF
                    stack.pop()
                    if stack:
                        it[stack[-1]] += 1
    return match_l, match_r


def tarjan_scc(n, indptr, indices):
    """Strongly connected components, iterative Tarjan.

    Returns ``(comp, count)``; component ids are assigned in Tarjan's
    completion order, which is a reverse topological order of the
    condensation.
    """
    indptr = list(indptr)
    indices = list(indices)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    it = [0] * n
    stack = []
    counter = 0
    ncomp = 0

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        it[root] = indptr[root]
        call = [root]
        while call:
            v = call[-1]
            if it[v] < indptr[v + 1]:
                w = indices[it[v]]
                it[v] += 1
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    it[w] = indptr[w]
                    call.append(w)
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                call.pop()
                if call:
                    u = call[-1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
    return comp, ncomp


def min_cost_max_matching(n_left, n_right, indptr, indices, costs):
    """Minimum-cost matching among all maximum-cardinality matchings.

    Primal-dual successive shortest paths: each phase runs Dijkstra on
    reduced costs from every free left vertex, shifts the potentials, then
    augments along a maximal set of vertex-disjoint zero-reduced-cost paths.
    ``costs`` are non-negative integers aligned with ``indices``.
    """
    indptr = list(indptr)
    indices = list(indices)
    costs = list(costs)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    pot_l = [0] * n_left
    pot_r = [0] * n_right

    while True:
        dist_l = [_INF] * n_left
        dist_r = [_INF] * n_right
        done_l = [False] * n_left
        done_r = [False] * n_right
        seen_l = []
        seen_r = []
        heap = []
        for u in range(n_left):
            if match_l[u] == -1:
                dist_l[u] = 0
                heap.append((0, 0, u))
        heap.sort()
        bound = -1
        while heap:
            d, kind, x = heappop(heap)
            if kind == 0:
                if done_l[x]:
                    continue
                done_l[x] = True
                seen_l.append(x)
                skip = match_l[x]
                base = d + pot_l[x]
                for k in range(indptr[x], indptr[x + 1]):
                    v = indices[k]
                    if v == skip:
                        continue
                    nd = base + costs[k] - pot_r[v]
                    if nd < dist_r[v]:
                        dist_r[v] = nd
                        heappush(heap, (nd, 1, v))
            else:
                if done_r[x]:
                    continue
                done_r[x] = True
                seen_r.append(x)
                w = match_r[x]
                if w == -1:
                    bound = d
                    break
                if d < dist_l[w]:
                    dist_l[w] = d
                    heappush(heap, (d, 0, w))
        if bound < 0:
            break
        for u in seen_l:
            pot_l[u] += dist_l[u] - bound
        for v in seen_r:
            pot_r[v] += dist_r[v] - bound

        visited = [False] * n_right
        it = indptr[:-1]
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            stack = [root]
            while stack:
                u = stack[-1]
                end = indptr[u + 1]
                pushed = False
                while it[u] < end:
                    k = it[u]
                    v = indices[k]
                    if (
                        v != match_l[u]
                        and not visited[v]
                        and costs[k] + pot_l[u] - pot_r[v] == 0
                    ):
                        visited[v] = True
                        w = match_r[v]
                        if w == -1:
                            for x in stack:
                                y = indices[it[x]]
                                match_l[x] = y
                                match_r[y] = x
                            stack.clear()
                        else:
                            stack.append(w)
                        pushed = True
                        break
                    it[u] += 1
                if not pushed:
                    stack.pop()
                    if stack:
                        it[stack[-1]] += 1
    return match_l, match_r
