"""numba-compiled kernels. Signatures mirror ``_numpy``."""
import numba as nb
import numpy as np


@nb.njit(cache=True)
def count_fixed_maps(perm, k):
    n = perm.shape[0]
    digits = np.zeros(n, np.int64)
    total = 1
    for _ in range(n):
        total *= k
    count = 0
    for _ in range(total):
        fixed = True
        for z in range(n):
            if digits[perm[z]] != digits[z]:
                fixed = False
                break
        if fixed:
            count += 1
        i = 0
        while i < n:
            digits[i] += 1
            if digits[i] < k:
                break
            digits[i] = 0
            i += 1
    return count


@nb.njit(cache=True)
def orbit_labels(perms, npoints):
    labels = np.full(npoints, -1, np.int64)
    stack = np.empty(npoints, np.int64)
    m = perms.shape[0]
    for start in range(npoints):
        if labels[start] != -1:
            continue
        labels[start] = start
        top = 0
        stack[top] = start
        top += 1
        while top > 0:
            top -= 1
            x = stack[top]
            for s in range(m):
                y = perms[s, x]
                if labels[y] == -1:
                    labels[y] = start
                    stack[top] = y
                    top += 1
    return labels


@nb.njit(cache=True)
def class_structure(cls, prods, nclasses):
    out = np.zeros((nclasses, nclasses, nclasses), np.int64)
    order = cls.shape[0]
    for k in range(nclasses):
        for x in range(order):
            out[cls[x], cls[prods[k, x]], k] += 1
    return out


@nb.njit(cache=True)
def rref_mod(a, p):
    r = a.copy() % p
    nrows, ncols = r.shape
    pivots = np.empty(min(nrows, ncols), np.int64)
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = -1
        for i in range(rank, nrows):
            if r[i, col] != 0:
                piv = i
                break
        if piv == -1:
            continue
        if piv != rank:
            for j in range(ncols):
                tmp = r[rank, j]
                r[rank, j] = r[piv, j]
                r[piv, j] = tmp
        # modular inverse by Fermat's little theorem
        inv = 1
        base = r[rank, col]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for j in range(ncols):
            r[rank, j] = r[rank, j] * inv % p
        for i in range(nrows):
            if i != rank and r[i, col] != 0:
                f = r[i, col]
                for j in range(ncols):
                    r[i, j] = (r[i, j] - f * r[rank, j]) % p
        pivots[rank] = col
        rank += 1
    return r, pivots[:rank].copy()


@nb.njit(cache=True)
def matmul_mod(a, b, p):
    n, m = a.shape
    q = b.shape[1]
    out = np.zeros((n, q), np.int64)
    for i in range(n):
        for t in range(m):
            x = a[i, t]
            if x == 0:
                continue
            for j in range(q):
                out[i, j] = (out[i, j] + x * b[t, j]) % p
    return out


@nb.njit(cache=True)
def poly_roots_mod(coeffs, p):
    roots = np.empty(p, np.int64)
    count = 0
    deg = coeffs.shape[0] - 1
    for x in range(p):
        acc = 0
        for i in range(deg, -1, -1):
            acc = (acc * x + coeffs[i]) % p
        if acc == 0:
            roots[count] = x
            count += 1
    return roots[:count].copy()
