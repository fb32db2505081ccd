# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled scan kernels.

Same contract as textfract._scan_py; the parity test suite holds both
backends to identical outputs, so any behaviour change there must be
mirrored here.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc, PyMem_Realloc
from libc.string cimport memset

cdef extern from "Python.h":
    object PyUnicode_FromKindAndData(int kind, const void *buffer, Py_ssize_t size)
    enum:
        PyUnicode_4BYTE_KIND

from ._scan_tables import APOSTROPHES, CLS_IGNORE, CLS_SEP, CLS_WORD, classify
from .errors import AlphabetMismatchError

cdef int SEP = CLS_SEP
cdef int IGN = CLS_IGNORE
cdef int WORD = CLS_WORD

_codes = sorted(ord(c) for c in APOSTROPHES)
cdef int APOS_A = _codes[0]
cdef int APOS_B = _codes[1]
del _codes


def scan_letters(unicode text, prep):
    """Fold a string into alphabet letters, counting what falls outside."""
    cdef int[::1] fold_codes = prep.fold_codes
    cdef const unsigned char[::1] cls_table = prep.class_table
    cdef int limit = prep.limit
    fold = prep.fold
    cdef Py_ssize_t n = len(text)
    if n == 0:
        return "", 0, 0
    cdef Py_ssize_t i, j = 0
    cdef Py_UCS4 ch
    cdef int code, fcode, cls
    cdef long dropped = 0, seps = 0
    cdef Py_UCS4* out = <Py_UCS4*> PyMem_Malloc(n * sizeof(Py_UCS4))
    if out == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            ch = text[i]
            code = <int> ch
            if code < limit:
                fcode = fold_codes[code]
                if fcode >= 0:
                    out[j] = <Py_UCS4> fcode
                    j += 1
                    continue
                cls = cls_table[code]
            else:
                lower = fold.get(chr(code))
                if lower is not None:
                    out[j] = <Py_UCS4> ord(lower)
                    j += 1
                    continue
                cls = classify(chr(code))
            if cls == SEP:
                seps += 1
            elif cls != IGN:
                dropped += 1
        letters = PyUnicode_FromKindAndData(PyUnicode_4BYTE_KIND, out, j)
    finally:
        PyMem_Free(out)
    return letters, dropped, seps


def count_letters(unicode letters, prep):
    """Count folded letters into alphabet-order slots (0-based list)."""
    cdef int[::1] index_codes = prep.index_codes
    cdef int limit = prep.limit
    index0 = prep.index0
    cdef int k = prep.size
    cdef Py_ssize_t n = len(letters), i
    cdef Py_UCS4 ch
    cdef int code, idx
    cdef long* counts = <long*> PyMem_Malloc(k * sizeof(long))
    if counts == NULL:
        raise MemoryError()
    memset(counts, 0, k * sizeof(long))
    try:
        for i in range(n):
            ch = letters[i]
            code = <int> ch
            if code < limit:
                idx = index_codes[code]
            else:
                idx = index0.get(chr(code), -1)
            if idx < 0:
                raise AlphabetMismatchError(f"letter {chr(code)!r} is not in the alphabet")
            counts[idx] += 1
        return [counts[i] for i in range(k)]
    finally:
        PyMem_Free(counts)


cdef bint _is_word_char(Py_UCS4 ch, int[::1] fold_codes, const unsigned char[::1] cls_table,
                        int limit, dict fold):
    cdef int code = <int> ch
    cdef int cls
    if code < limit:
        if fold_codes[code] >= 0:
            return True
        cls = cls_table[code]
    else:
        if chr(code) in fold:
            return True
        cls = classify(chr(code))
    return cls == WORD


def scan_tokens(unicode text, prep, bint strip_apostrophe_suffix=True):
    """Split a string into folded word tokens."""
    cdef int[::1] fold_codes = prep.fold_codes
    cdef const unsigned char[::1] cls_table = prep.class_table
    cdef int limit = prep.limit
    cdef dict fold = prep.fold
    cdef Py_ssize_t n = len(text)
    tokens = []
    if n == 0:
        return tokens
    cdef Py_ssize_t i = 0, blen = 0, cap = 64
    cdef Py_UCS4 ch
    cdef int code, fcode, cls
    cdef bint skipping = False
    cdef Py_UCS4* buf = <Py_UCS4*> PyMem_Malloc(cap * sizeof(Py_UCS4))
    cdef Py_UCS4* grown
    if buf == NULL:
        raise MemoryError()
    try:
        while i < n:
            # lowercase expansion writes at most a few chars per input char
            if blen + 8 > cap:
                cap = cap * 2 + 8
                grown = <Py_UCS4*> PyMem_Realloc(buf, cap * sizeof(Py_UCS4))
                if grown == NULL:
                    raise MemoryError()
                buf = grown
            ch = text[i]
            code = <int> ch
            if code < limit:
                fcode = fold_codes[code]
                if fcode >= 0:
                    if not skipping:
                        buf[blen] = <Py_UCS4> fcode
                        blen += 1
                    i += 1
                    continue
                cls = cls_table[code]
            else:
                lower = fold.get(chr(code))
                if lower is not None:
                    if not skipping:
                        buf[blen] = <Py_UCS4> ord(lower)
                        blen += 1
                    i += 1
                    continue
                cls = classify(chr(code))
            if cls == WORD:
                if not skipping:
                    for low_ch in chr(code).lower():
                        buf[blen] = <Py_UCS4> ord(low_ch)
                        blen += 1
                i += 1
                continue
            if cls == IGN:
                i += 1
                continue
            if (
                (code == APOS_A or code == APOS_B)
                and (blen > 0 or skipping)
                and i + 1 < n
                and _is_word_char(text[i + 1], fold_codes, cls_table, limit, fold)
            ):
                if strip_apostrophe_suffix:
                    skipping = True
                elif not skipping:
                    buf[blen] = ch
                    blen += 1
                i += 1
                continue
            if blen > 0:
                tokens.append(PyUnicode_FromKindAndData(PyUnicode_4BYTE_KIND, buf, blen))
                blen = 0
            skipping = False
            i += 1
        if blen > 0:
            tokens.append(PyUnicode_FromKindAndData(PyUnicode_4BYTE_KIND, buf, blen))
    finally:
        PyMem_Free(buf)
    return tokens
