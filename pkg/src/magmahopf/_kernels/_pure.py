"""Pure-Python tree kernels.

Trees are preorder byte codes: ``0`` marks an internal node, any other byte
is a leaf carrying that variable index.  The empty code is the unit.
"""


def split(code):
    """Return the (left, right) codes of an internal node."""
    if len(code) < 3 or code[0] != 0:
        raise ValueError("split() needs an internal node")
    need = 1
    for i in range(1, len(code)):
        need += 1 if code[i] == 0 else -1
        if need == 0:
            return code[1:i + 1], code[i + 1:]
    raise ValueError("malformed tree code")


def _contract(code, pos, leaf, mask):
    # returns (contracted code, next pos, next leaf index)
    if code[pos] != 0:
        if mask >> leaf & 1:
            return code[pos:pos + 1], pos + 1, leaf + 1
        return b"", pos + 1, leaf + 1
    left, pos, leaf = _contract(code, pos + 1, leaf, mask)
    right, pos, leaf = _contract(code, pos, leaf, mask)
    if left and right:
        return b"\x00" + left + right, pos, leaf
    return left or right, pos, leaf


def contract(code, mask):
    """Contract ``code`` onto the leaves whose bit is set in ``mask``.

    Bit ``i`` of ``mask`` selects leaf ``i + 1`` (left to right).
    """
    if not code:
        return b""
    n = (len(code) + 1) // 2
    if mask >> n:
        raise ValueError("leaf mask out of range for degree %d" % n)
    return _contract(code, 0, 0, mask)[0]


def coproduct(code, max_right=-1):
    """Subset-sum coproduct of a single tree.

    Returns ``{(code|I, code|I^c): multiplicity}``.  With ``max_right >= 0``
    only subsets whose complement has at most ``max_right`` leaves are kept.
    """
    if not code:
        return {(b"", b""): 1}
    n = (len(code) + 1) // 2
    full = (1 << n) - 1
    out = {}
    for mask in range(full + 1):
        comp = full ^ mask
        if max_right >= 0 and bin(comp).count("1") > max_right:
            continue
        key = (_contract(code, 0, 0, mask)[0], _contract(code, 0, 0, comp)[0])
        out[key] = out.get(key, 0) + 1
    return out
