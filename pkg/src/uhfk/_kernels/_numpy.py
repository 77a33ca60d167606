"""Pure-numpy kernels, used when numba is unavailable or disabled."""
import numpy as np

_CHUNK = 1 << 16


def count_fixed_maps(perm, k):
    perm = np.asarray(perm, dtype=np.int64)
    n = perm.shape[0]
    total = k**n
    powers = k ** np.arange(n, dtype=np.int64)
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % k
        count += int(np.all(digits[:, perm] == digits, axis=1).sum())
    return count


def orbit_labels(perms, npoints):
    perms = np.asarray(perms, dtype=np.int64)
    inverses = np.empty_like(perms)
    for s in range(perms.shape[0]):
        inverses[s, perms[s]] = np.arange(npoints)
    labels = np.arange(npoints, dtype=np.int64)
    while True:
        new = labels.copy()
        for s in range(perms.shape[0]):
            np.minimum(new, labels[perms[s]], out=new)
            np.minimum(new, labels[inverses[s]], out=new)
        new = new[new]
        if np.array_equal(new, labels):
            return labels
        labels = new


def class_structure(cls, prods, nclasses):
    cls = np.asarray(cls, dtype=np.int64)
    prods = np.asarray(prods, dtype=np.int64)
    r = nclasses
    ks = np.repeat(np.arange(r, dtype=np.int64), cls.shape[0])
    js = np.tile(cls, r)
    iis = cls[prods.ravel()]
    flat = (js * r + iis) * r + ks
    return np.bincount(flat, minlength=r**3).reshape(r, r, r).astype(np.int64)


def rref_mod(a, p):
    r = np.asarray(a, dtype=np.int64) % p
    nrows, ncols = r.shape
    pivots = []
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(r[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            r[[rank, piv]] = r[[piv, rank]]
        inv = pow(int(r[rank, col]), p - 2, p)
        r[rank] = r[rank] * inv % p
        f = r[:, col].copy()
        f[rank] = 0
        rows = np.nonzero(f)[0]
        if rows.size:
            r[rows] = (r[rows] - f[rows, None] * r[rank][None, :]) % p
        pivots.append(col)
        rank += 1
    return r, np.array(pivots, dtype=np.int64)


def matmul_mod(a, b, p):
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    inner = a.shape[1]
    if p < (1 << 26) and inner < (1 << 10):
        return (a @ b) % p
    return ((a.astype(object) @ b.astype(object)) % p).astype(np.int64)


def poly_roots_mod(coeffs, p):
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in np.asarray(coeffs, dtype=np.int64)[::-1]:
        acc = (acc * xs + c) % p
    return xs[acc == 0]
