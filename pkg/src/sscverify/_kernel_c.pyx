# cython: language_level=3
"""Compiled hot kernels; same contracts as ``_kernel_py``."""

import numpy as np
cimport numpy as cnp

# 32-bit indices halve the working set of the removal loop
ctypedef cnp.int32_t idx_t

INDEX_DTYPE = np.int32

cnp.import_array()


def bucket_columns(rows_in, cols_in, Py_ssize_t m):
    cdef idx_t[::1] rows = np.ascontiguousarray(rows_in, dtype=INDEX_DTYPE)
    cdef idx_t[::1] cols = np.ascontiguousarray(cols_in, dtype=INDEX_DTYPE)
    cdef Py_ssize_t nu = rows.shape[0]
    cdef Py_ssize_t j, k
    s_arr = np.empty(nu, dtype=INDEX_DTYPE)
    i_s_arr = np.zeros(m + 1, dtype=INDEX_DTYPE)
    nxt_arr = np.empty(m, dtype=INDEX_DTYPE)
    cdef idx_t[::1] s = s_arr
    cdef idx_t[::1] i_s = i_s_arr
    cdef idx_t[::1] nxt = nxt_arr
    for k in range(nu):
        i_s[cols[k] + 1] += 1
    for j in range(m):
        i_s[j + 1] += i_s[j]
        nxt[j] = i_s[j]
    for k in range(nu):
        j = cols[k]
        s[nxt[j]] = rows[k]
        nxt[j] += 1
    return s_arr, i_s_arr


def first_duplicate(Py_ssize_t n, Py_ssize_t m, const idx_t[::1] s, const idx_t[::1] i_s):
    cdef Py_ssize_t j, k
    cdef idx_t i
    mark_arr = np.full(n, -1, dtype=INDEX_DTYPE)
    cdef idx_t[::1] mark = mark_arr
    for j in range(m):
        for k in range(i_s[j], i_s[j + 1]):
            i = s[k]
            if mark[i] == j:
                return k
            mark[i] = j
    return -1


def transpose_link(Py_ssize_t n, Py_ssize_t m, const idx_t[::1] s, const idx_t[::1] i_s):
    cdef Py_ssize_t nu = s.shape[0]
    cdef Py_ssize_t i, j, k
    cdef idx_t l
    cdef long long ops = 0
    z_arr = np.empty(nu, dtype=INDEX_DTYPE)
    i_z_arr = np.zeros(n + 1, dtype=INDEX_DTYPE)
    s_link_arr = np.empty(nu, dtype=INDEX_DTYPE)
    z_link_arr = np.empty(nu, dtype=INDEX_DTYPE)
    c_arr = np.empty(m, dtype=INDEX_DTYPE)
    nxt_arr = np.empty(max(n, 1), dtype=INDEX_DTYPE)
    cdef idx_t[::1] z = z_arr
    cdef idx_t[::1] i_z = i_z_arr
    cdef idx_t[::1] s_link = s_link_arr
    cdef idx_t[::1] z_link = z_link_arr
    cdef idx_t[::1] c = c_arr
    cdef idx_t[::1] nxt = nxt_arr

    for k in range(nu):
        i_z[s[k] + 1] += 1
    ops += nu
    for i in range(n):
        i_z[i + 1] += i_z[i]
        nxt[i] = i_z[i]
    ops += n
    for j in range(m):
        for k in range(i_s[j], i_s[j + 1]):
            i = s[k]
            l = nxt[i]
            nxt[i] = l + 1
            z[l] = j
            s_link[k] = l
    ops += m + nu
    for k in range(nu):
        z_link[s_link[k]] = k
    ops += nu
    for j in range(m):
        c[j] = i_s[j + 1] - i_s[j]
    ops += m
    return z_arr, i_z_arr, s_link_arr, z_link_arr, c_arr, ops


def run_mode(
    Py_ssize_t n,
    Py_ssize_t m,
    idx_t[::1] s,
    const idx_t[::1] i_s,
    const idx_t[::1] z,
    const idx_t[::1] i_z,
    idx_t[::1] s_link,
    idx_t[::1] z_link,
    idx_t[::1] c,
    int mode,
):
    cdef Py_ssize_t v, l, p
    cdef idx_t w, j, k, jt, last, cj, e, tmp
    cdef Py_ssize_t t_size = 0, t0_size = 0
    cdef Py_ssize_t remaining = n, removals = 0
    cdef long long ops = 0

    t_dense_arr = np.empty(max(m, 1), dtype=INDEX_DTYPE)
    t_pos_arr = np.full(max(m, 1), -1, dtype=INDEX_DTYPE)
    t0_dense_arr = np.empty(max(n, 1), dtype=INDEX_DTYPE)
    t0_pos_arr = np.full(max(n, 1), -1, dtype=INDEX_DTYPE)
    active_arr = np.zeros(max(m, 1), dtype=np.uint8)
    cdef idx_t[::1] t_dense = t_dense_arr
    cdef idx_t[::1] t_pos = t_pos_arr
    cdef idx_t[::1] t0_dense = t0_dense_arr
    cdef idx_t[::1] t0_pos = t0_pos_arr
    cdef cnp.uint8_t[::1] active = active_arr

    for v in range(n):
        active[v] = 1

    # descending inserts so the LIFO pick starts from the smallest index
    if mode == 0:
        for v in range(m - 1, -1, -1):
            if c[v] == 1:
                t_dense[t_size] = v
                t_pos[v] = t_size
                t_size += 1
    else:
        for v in range(m - 1, n - 1, -1):
            if c[v] == 1:
                t_dense[t_size] = v
                t_pos[v] = t_size
                t_size += 1
        for v in range(n - 1, -1, -1):
            if c[v] == 0:
                t0_dense[t0_size] = v
                t0_pos[v] = t0_size
                t0_size += 1
    ops += m

    while remaining > 0:
        ops += 1
        if mode == 0 or t0_size == 0:
            if t_size == 0:
                break
            v = t_dense[t_size - 1]
            w = s[i_s[v]]
        else:
            w = t0_dense[t0_size - 1]
        for l in range(i_z[w], i_z[w + 1]):
            ops += 1
            j = z[l]
            cj = c[j]
            last = i_s[j] + cj - 1
            jt = z_link[l]
            k = s_link[last]
            if cj > 1:
                tmp = s[jt]
                s[jt] = s[last]
                s[last] = tmp
                tmp = s_link[jt]
                s_link[jt] = s_link[last]
                s_link[last] = tmp
                z_link[l] = last
                z_link[k] = jt
            if cj > 0:
                cj -= 1
                c[j] = cj
            if cj == 0:
                p = t_pos[j]
                if p >= 0:
                    t_size -= 1
                    e = t_dense[t_size]
                    t_dense[p] = e
                    t_pos[e] = p
                    t_pos[j] = -1
                if mode == 1 and active[j] and t0_pos[j] < 0:
                    t0_dense[t0_size] = j
                    t0_pos[j] = t0_size
                    t0_size += 1
            elif cj == 1:
                if (mode == 0 or not active[j]) and t_pos[j] < 0:
                    t_dense[t_size] = j
                    t_pos[j] = t_size
                    t_size += 1
        if mode == 1:
            if c[w] == 1:
                if t_pos[w] < 0:
                    t_dense[t_size] = w
                    t_pos[w] = t_size
                    t_size += 1
            elif c[w] == 0:
                p = t0_pos[w]
                if p >= 0:
                    t0_size -= 1
                    e = t0_dense[t0_size]
                    t0_dense[p] = e
                    t0_pos[e] = p
                    t0_pos[w] = -1
        active[w] = 0
        remaining -= 1
        removals += 1
    ops += n

    return active_arr[:n].copy(), removals, ops
