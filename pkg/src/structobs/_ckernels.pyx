# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled graph kernels; see ``_pykernels`` for the reference versions."""

import numpy as np
cimport numpy as cnp
from libcpp.queue cimport priority_queue
from libcpp.pair cimport pair
from libcpp.vector cimport vector

ctypedef long long i64

cdef i64 INF = 1LL << 62


def hopcroft_karp(i64 n_left, i64 n_right, const i64[::1] indptr, const i64[::1] indices):
    cdef cnp.ndarray[i64, ndim=1] ml = np.full(n_left, -1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] mr = np.full(n_right, -1, dtype=np.int64)
    cdef i64[::1] match_l = ml
    cdef i64[::1] match_r = mr
    cdef vector[i64] dist = vector[i64](n_left, 0)
    cdef vector[i64] queue
    cdef vector[i64] it = vector[i64](n_left, 0)
    cdef vector[i64] stack
    cdef i64 u, v, w, k, head, dist_nil, root, end, x, y, s
    cdef bint pushed

    while True:
        queue.clear()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.push_back(u)
            else:
                dist[u] = INF
        dist_nil = INF
        head = 0
        while head < <i64>queue.size():
            u = queue[head]
            head += 1
            if dist[u] + 1 >= dist_nil:
                continue
            for k in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[k]]
                if w == -1:
                    if dist[u] + 1 < dist_nil:
                        dist_nil = dist[u] + 1
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.push_back(w)
        if dist_nil == INF:
            break

        for u in range(n_left):
            it[u] = indptr[u]
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            stack.clear()
            stack.push_back(root)
            while stack.size() > 0:
                u = stack.back()
                end = indptr[u + 1]
                pushed = False
                while it[u] < end:
                    v = indices[it[u]]
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == dist_nil:
                            for s in range(<i64>stack.size()):
                                x = stack[s]
                                y = indices[it[x]]
                                match_l[x] = y
                                match_r[y] = x
                            stack.clear()
                            pushed = True
                            break
                    elif dist[w] == dist[u] + 1:
                        stack.push_back(w)
                        pushed = True
                        break
                    it[u] += 1
                if not pushed:
                    dist[u] = INF
                    stack.pop_back()
                    if stack.size() > 0:
                        it[stack.back()] += 1
    return ml, mr


def tarjan_scc(i64 n, const i64[::1] indptr, const i64[::1] indices):
    cdef cnp.ndarray[i64, ndim=1] comp_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] comp = comp_arr
    cdef vector[i64] index = vector[i64](n, -1)
    cdef vector[i64] low = vector[i64](n, 0)
    cdef vector[char] on_stack = vector[char](n, 0)
    cdef vector[i64] it = vector[i64](n, 0)
    cdef vector[i64] stack
    cdef vector[i64] call
    cdef i64 counter = 0, ncomp = 0, root, v, w, u

    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = counter
        low[root] = counter
        counter += 1
        stack.push_back(root)
        on_stack[root] = 1
        it[root] = indptr[root]
        call.push_back(root)
        while call.size() > 0:
            v = call.back()
            if it[v] < indptr[v + 1]:
                w = indices[it[v]]
                it[v] += 1
                if index[w] == -1:
                    index[w] = counter
                    low[w] = counter
                    counter += 1
                    stack.push_back(w)
                    on_stack[w] = 1
                    it[w] = indptr[w]
                    call.push_back(w)
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                call.pop_back()
                if call.size() > 0:
                    u = call.back()
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index[v]:
                    while True:
                        w = stack.back()
                        stack.pop_back()
                        on_stack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
    return comp_arr, ncomp


def min_cost_max_matching(i64 n_left, i64 n_right, const i64[::1] indptr,
                          const i64[::1] indices, const i64[::1] costs):
    cdef cnp.ndarray[i64, ndim=1] ml = np.full(n_left, -1, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] mr = np.full(n_right, -1, dtype=np.int64)
    cdef i64[::1] match_l = ml
    cdef i64[::1] match_r = mr
    cdef vector[i64] pot_l = vector[i64](n_left, 0)
    cdef vector[i64] pot_r = vector[i64](n_right, 0)
    cdef vector[i64] dist_l = vector[i64](n_left, 0)
    cdef vector[i64] dist_r = vector[i64](n_right, 0)
    cdef vector[char] done_l = vector[char](n_left, 0)
    cdef vector[char] done_r = vector[char](n_right, 0)
    cdef vector[char] visited = vector[char](n_right, 0)
    cdef vector[i64] seen_l, seen_r, stack
    cdef vector[i64] it = vector[i64](n_left, 0)
    # max-heap on (-dist, -(2*node + kind)); ties are irrelevant to the result
    cdef priority_queue[pair[i64, i64]] heap
    cdef pair[i64, i64] top
    cdef i64 u, v, w, k, d, x, y, kind, node, skip, base, nd, bound, root, end, s
    cdef bint pushed

    while True:
        for u in range(n_left):
            dist_l[u] = INF
            done_l[u] = 0
        for v in range(n_right):
            dist_r[v] = INF
            done_r[v] = 0
        seen_l.clear()
        seen_r.clear()
        while not heap.empty():
            heap.pop()
        for u in range(n_left):
            if match_l[u] == -1:
                dist_l[u] = 0
                heap.push(pair[i64, i64](0, -(2 * u)))
        bound = -1
        while not heap.empty():
            top = heap.top()
            heap.pop()
            d = -top.first
            node = -top.second
            kind = node & 1
            x = node >> 1
            if kind == 0:
                if done_l[x]:
                    continue
                done_l[x] = 1
                seen_l.push_back(x)
                skip = match_l[x]
                base = d + pot_l[x]
                for k in range(indptr[x], indptr[x + 1]):
                    v = indices[k]
                    if v == skip:
                        continue
                    nd = base + costs[k] - pot_r[v]
                    if nd < dist_r[v]:
                        dist_r[v] = nd
                        heap.push(pair[i64, i64](-nd, -(2 * v + 1)))
            else:
                if done_r[x]:
                    continue
                done_r[x] = 1
                seen_r.push_back(x)
                w = match_r[x]
                if w == -1:
                    bound = d
                    break
                if d < dist_l[w]:
                    dist_l[w] = d
                    heap.push(pair[i64, i64](-d, -(2 * w)))
        if bound < 0:
            break
        for s in range(<i64>seen_l.size()):
            u = seen_l[s]
            pot_l[u] += dist_l[u] - bound
        for s in range(<i64>seen_r.size()):
            v = seen_r[s]
            pot_r[v] += dist_r[v] - bound

        for v in range(n_right):
            visited[v] = 0
        for u in range(n_left):
            it[u] = indptr[u]
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            stack.clear()
            stack.push_back(root)
            while stack.size() > 0:
                u = stack.back()
                end = indptr[u + 1]
                pushed = False
                while it[u] < end:
                    k = it[u]
                    v = indices[k]
                    if (v != match_l[u] and not visited[v]
                            and costs[k] + pot_l[u] - pot_r[v] == 0):
                        visited[v] = 1
                        w = match_r[v]
                        if w == -1:
                            for s in range(<i64>stack.size()):
                                x = stack[s]
                                y = indices[it[x]]
                                match_l[x] = y
                                match_r[y] = x
                            stack.clear()
                        else:
                            stack.push_back(w)
                        pushed = True
                        break
                    it[u] += 1
                if not pushed:
                    stack.pop_back()
                    if stack.size() > 0:
                        it[stack.back()] += 1
    return ml, mr
