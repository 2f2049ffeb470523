# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled tree kernels; same contract as :mod:`magmahopf._kernels._pure`."""

from libc.string cimport memmove

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXCODE = 127


cdef int _contract(const unsigned char* code, int* pos, int* leaf,
                   unsigned long long mask, unsigned char* out, int* olen) noexcept:
    # Writes the contraction of the subtree at code[pos] into out[olen:].
    # Returns 1 if the contraction is non-empty.
    cdef int start, lstart, has_l, has_r
    if code[pos[0]] != 0:
        pos[0] += 1
        leaf[0] += 1
        if (mask >> (leaf[0] - 1)) & 1:
            out[olen[0]] = code[pos[0] - 1]
            olen[0] += 1
            return 1
        return 0
    pos[0] += 1
    start = olen[0]
    out[start] = 0
    olen[0] += 1
    lstart = olen[0]
    has_l = _contract(code, pos, leaf, mask, out, olen)
    has_r = _contract(code, pos, leaf, mask, out, olen)
    if has_l and has_r:
        return 1
    if not has_l and not has_r:
        olen[0] = start
        return 0
    # drop the node marker: a unary node collapses onto its child
    memmove(out + start, out + lstart, olen[0] - lstart)
    olen[0] -= 1
    return 1


cdef bytes _contract_bytes(const unsigned char* code, unsigned long long mask,
                           unsigned char* buf):
    cdef int pos = 0, leaf = 0, olen = 0
    _contract(code, &pos, &leaf, mask, buf, &olen)
    return buf[:olen]


def split(bytes code):
    cdef Py_ssize_t i, n = len(code)
    cdef const unsigned char* c = code
    cdef int need = 1
    if n < 3 or c[0] != 0:
        raise ValueError("split() needs an internal node")
    for i in range(1, n):
        if c[i] == 0:
            need += 1
        else:
            need -= 1
        if need == 0:
            return code[1:i + 1], code[i + 1:]
    raise ValueError("malformed tree code")


def contract(bytes code, mask):
    cdef unsigned char buf[MAXCODE + 1]
    cdef Py_ssize_t n = (len(code) + 1) // 2
    if len(code) == 0:
        return b""
    if len(code) > MAXCODE:
        raise ValueError("tree too large for the compiled kernel")
    if mask >> n:
        raise ValueError("leaf mask out of range for degree %d" % n)
    return _contract_bytes(code, <unsigned long long>mask, buf)


def coproduct(bytes code, int max_right=-1):
    cdef unsigned char buf[MAXCODE + 1]
    cdef const unsigned char* c = code
    cdef Py_ssize_t n = (len(code) + 1) // 2
    cdef unsigned long long mask, comp, full
    cdef dict out = {}
    cdef tuple key
    if len(code) == 0:
        return {(b"", b""): 1}
    if n > 24:
        raise ValueError("degree too large for subset enumeration")
    full = (1ULL << n) - 1
    for mask in range(full + 1):
        comp = full ^ mask
        if max_right >= 0 and __builtin_popcountll(comp) > max_right:
            continue
        key = (_contract_bytes(c, mask, buf), _contract_bytes(c, comp, buf))
        out[key] = out.get(key, 0) + 1
    return out

