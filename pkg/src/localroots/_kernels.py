"""Hot inner loops over small finite fields.

Each kernel has a numba implementation and a pure-numpy implementation.  The
numba path is used when numba imports and ``LOCALROOTS_DISABLE_NUMBA`` is
unset (or ``0``); both paths are always importable so they can be compared.

Finite-field elements are encoded as integers ``0 <= x < q`` whose base-p
digits are the coefficients of the representing polynomial; the caller
supplies addition/multiplication tables in that encoding.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

DISABLED = os.environ.get("LOCALROOTS_DISABLE_NUMBA", "0") not in ("", "0")
USING_NUMBA = numba is not None and not DISABLED


class FieldTables:
    """Lookup tables for F_q in the integer encoding."""

    __slots__ = ("p", "s", "q", "add", "mul", "neg", "inv", "digits")

    def __init__(self, p, s, add, mul, neg, inv):
        self.p = p
        self.s = s
        self.q = p**s
        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv
        idx = np.arange(self.q, dtype=np.int64)
        self.digits = np.stack([(idx // p**j) % p for j in range(s)], axis=1)


# ---------------------------------------------------------------- numpy path


def convolve_numpy(a, b, out_len, tables):
    out_len = int(out_len)
    la, lb = min(len(a), out_len), min(len(b), out_len)
    if out_len <= 0 or la == 0 or lb == 0:
        return np.zeros(max(out_len, 0), dtype=np.int64)
    a = np.asarray(a[:la], dtype=np.int64)
    b = np.asarray(b[:lb], dtype=np.int64)
    prod = tables.mul[a[:, None], b[None, :]]
    pos = np.arange(la)[:, None] + np.arange(lb)[None, :]
    keep = pos < out_len
    acc = np.zeros((out_len, tables.s), dtype=np.int64)
    np.add.at(acc, pos[keep], tables.digits[prod[keep]])
    weights = tables.p ** np.arange(tables.s, dtype=np.int64)
    return (acc % tables.p) @ weights


def series_inverse_numpy(a, out_len, tables):
    # Newton iteration b <- b - b(ab - 1), doubling the correct length
    a = np.asarray(a, dtype=np.int64)
    b = np.array([tables.inv[a[0]]], dtype=np.int64)
    known = 1
    while known < out_len:
        known = min(2 * known, out_len)
        err = convolve_numpy(a, b, known, tables)
        err[0] = tables.add[err[0], tables.neg[1]]
        corr = convolve_numpy(b, err, known, tables)
        padded = np.zeros(known, dtype=np.int64)
        padded[: len(b)] = b
        b = tables.add[padded, tables.neg[corr]]
    return b[:out_len].copy()


# ---------------------------------------------------------------- numba path

if numba is not None:

    @numba.njit(cache=True)
    def _convolve_nb(a, b, out_len, add, mul):
        out = np.zeros(out_len, dtype=np.int64)
        la = min(a.shape[0], out_len)
        for i in range(la):
            ai = a[i]
            if ai == 0:
                continue
            lb = min(b.shape[0], out_len - i)
            for j in range(lb):
                bj = b[j]
                if bj != 0:
                    out[i + j] = add[out[i + j], mul[ai, bj]]
        return out

    @numba.njit(cache=True)
    def _series_inverse_nb(a, out_len, add, mul, neg, inv):
        out = np.zeros(out_len, dtype=np.int64)
        inv0 = inv[a[0]]
        out[0] = inv0
        for n in range(1, out_len):
            acc = 0
            top = min(n, a.shape[0] - 1)
            for i in range(1, top + 1):
                if a[i] != 0 and out[n - i] != 0:
                    acc = add[acc, mul[a[i], out[n - i]]]
            out[n] = mul[neg[acc], inv0]
        return out


def convolve_numba(a, b, out_len, tables):
    return _convolve_nb(
        np.ascontiguousarray(a, dtype=np.int64),
        np.ascontiguousarray(b, dtype=np.int64),
        int(out_len),
        tables.add,
        tables.mul,
    )


def series_inverse_numba(a, out_len, tables):
    return _series_inverse_nb(
        np.ascontiguousarray(a, dtype=np.int64),
        int(out_len),
        tables.add,
        tables.mul,
        tables.neg,
        tables.inv,
    )


# ---------------------------------------------------------------- dispatch


def convolve(a, b, out_len, tables):
    """First ``out_len`` coefficients of the product of two F_q sequences."""
    if out_len <= 0:
        return np.zeros(0, dtype=np.int64)
    if USING_NUMBA:
        return convolve_numba(a, b, out_len, tables)
    return convolve_numpy(a, b, out_len, tables)


def series_inverse(a, out_len, tables):
    """First ``out_len`` coefficients of 1/a for a power series with a[0] != 0."""
    if USING_NUMBA:
        return series_inverse_numba(a, out_len, tables)
    return series_inverse_numpy(a, out_len, tables)
