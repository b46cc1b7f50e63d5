"""Pure-Python hot kernels.

Mirror of ``_kernel_c.pyx``; used when the compiled extension is not
available or ``SSC_PURE_PYTHON=1`` is set.  All arrays here are 0-based in
both positions and stored values.  Work is done on Python lists (scalar
indexing of numpy arrays is slow) and results are handed back as int32
numpy arrays.
"""

import numpy as np

INDEX_DTYPE = np.int32


def bucket_columns(rows, cols, m):
    """Counting sort of ``(rows, cols)`` by column, stable in input order.

    Returns ``(s, i_s)``.
    """
    rows = rows.tolist() if hasattr(rows, "tolist") else list(rows)
    cols = cols.tolist() if hasattr(cols, "tolist") else list(cols)
    nu = len(rows)
    i_s = [0] * (m + 1)
    for j in cols:
        i_s[j + 1] += 1
    for j in range(m):
        i_s[j + 1] += i_s[j]
    nxt = i_s[:m]
    s = [0] * nu
    for k in range(nu):
        j = cols[k]
        s[nxt[j]] = rows[k]
        nxt[j] += 1
    return np.asarray(s, dtype=INDEX_DTYPE), np.asarray(i_s, dtype=INDEX_DTYPE)


def first_duplicate(n, m, s, i_s):
    """Position of the first repeated row inside a column segment, or -1."""
    s = s.tolist()
    i_s = i_s.tolist()
    mark = [-1] * n
    for j in range(m):
        for k in range(i_s[j], i_s[j + 1]):
            i = s[k]
            if mark[i] == j:
                return k
            mark[i] = j
    return -1


def transpose_link(n, m, s, i_s):
    """Gustavson transpose of the column pattern plus both linking arrays.

    Returns ``(z, i_z, s_link, z_link, c, ops)``.  ``s_link`` is filled in
    the transpose scan; ``z_link`` is its inverse permutation.
    """
    s = s.tolist()
    i_s = i_s.tolist()
    nu = len(s)
    ops = 0
    i_z = [0] * (n + 1)
    for k in range(nu):
        i_z[s[k] + 1] += 1
    ops += nu
    for i in range(n):
        i_z[i + 1] += i_z[i]
    ops += n
    nxt = i_z[:n]
    z = [0] * nu
    s_link = [0] * nu
    for j in range(m):
        for k in range(i_s[j], i_s[j + 1]):
            i = s[k]
            l = nxt[i]
            nxt[i] = l + 1
            z[l] = j
            s_link[k] = l
    ops += m + nu
    z_link = [0] * nu
    for k in range(nu):
        z_link[s_link[k]] = k
    ops += nu
    c = [i_s[j + 1] - i_s[j] for j in range(m)]
    ops += m
    return (
        np.asarray(z, dtype=INDEX_DTYPE),
        np.asarray(i_z, dtype=INDEX_DTYPE),
        np.asarray(s_link, dtype=INDEX_DTYPE),
        np.asarray(z_link, dtype=INDEX_DTYPE),
        np.asarray(c, dtype=INDEX_DTYPE),
        ops,
    )


def run_mode(n, m, s_arr, i_s, z, i_z, s_link_arr, z_link_arr, c_arr, mode):
    """Main removal loop for one mode; mutates s, s_link, z_link, c in place.

    Returns ``(active, removals, ops)`` where ``active`` is a uint8 array of
    length ``n`` flagging the rows left over.
    """
    s = s_arr.tolist()
    s_link = s_link_arr.tolist()
    z_link = z_link_arr.tolist()
    c = c_arr.tolist()
    i_s = i_s.tolist()
    z = z.tolist()
    i_z = i_z.tolist()

    t_dense = [0] * m
    t_pos = [-1] * m
    t_size = 0
    t0_dense = [0] * max(n, 1)
    t0_pos = [-1] * max(n, 1)
    t0_size = 0
    active = [1] * n + [0] * (m - n)
    ops = 0

    # descending inserts so the LIFO pick starts from the smallest index
    if mode == 0:
        for v in range(m - 1, -1, -1):
            if c[v] == 1:
                t_dense[t_size] = v
                t_pos[v] = t_size
                t_size += 1
        ops += m
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

    remaining = n
    removals = 0
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
            # remove w from the active prefix of column j
            cj = c[j]
            last = i_s[j] + cj - 1
            jt = z_link[l]
            k = s_link[last]
            if cj > 1:
                s[jt], s[last] = s[last], s[jt]
                s_link[jt], s_link[last] = s_link[last], s_link[jt]
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

    s_arr[:] = s
    s_link_arr[:] = s_link
    z_link_arr[:] = z_link
    c_arr[:] = c
    return np.asarray(active[:n], dtype=np.uint8), removals, ops
