# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled word-reduction kernel.

Twin of _decider_py.reduce_cyclic; see that module for the contract.  The
two must stay in exact lockstep (the test suite compares their outputs).
"""

from libc.stdlib cimport free, malloc


def reduce_cyclic(codes):
    cdef Py_ssize_t n = len(codes)
    if n <= 2:
        return True, [], list(range(n))

    cdef int *col = <int *> malloc(n * sizeof(int))
    cdef int *stack = <int *> malloc(n * sizeof(int))
    cdef int *steps = <int *> malloc(3 * n * sizeof(int))
    if col == NULL or stack == NULL or steps == NULL:
        free(col); free(stack); free(steps)
        raise MemoryError()

    cdef Py_ssize_t i
    cdef int top = -1, ns = 0, rem, t, head, tail, f, b
    cdef const unsigned char[::1] bview
    cdef const int[::1] iview
    try:
        if isinstance(codes, (bytes, bytearray)):
            bview = codes
            for i in range(n):
                col[i] = bview[i]
        else:
            try:
                iview = codes
            except (TypeError, ValueError):
                for i in range(n):
                    col[i] = codes[i]
            else:
                for i in range(n):
                    col[i] = iview[i]

        for i in range(n):
            top += 1
            stack[top] = <int> i
            rem = <int> (n - 1 - i)
            while top + 1 + rem > 2:
                if top >= 1 and col[stack[top]] == col[stack[top - 1]]:
                    t = stack[top]
                    top -= 1
                    steps[ns] = t
                    steps[ns + 1] = stack[top]
                    steps[ns + 2] = <int> (i + 1) if rem else stack[0]
                    ns += 3
                    continue
                if top >= 2 and col[stack[top]] == col[stack[top - 2]]:
                    steps[ns] = stack[top - 1]
                    steps[ns + 1] = stack[top - 2]
                    steps[ns + 2] = stack[top]
                    ns += 3
                    stack[top - 1] = stack[top]
                    top -= 1
                    continue
                break

        head = 0
        tail = top
        while tail - head + 1 > 2:
            f = stack[head]
            b = stack[tail]
            if col[b] == col[f] or col[b] == col[stack[head + 1]]:
                steps[ns] = f
                steps[ns + 1] = b
                steps[ns + 2] = stack[head + 1]
                ns += 3
                head += 1
                continue
            if col[stack[tail - 1]] == col[f]:
                steps[ns] = b
                steps[ns + 1] = stack[tail - 1]
                steps[ns + 2] = f
                ns += 3
                tail -= 1
                continue
            break

        ok = tail - head + 1 <= 2
        out_steps = []
        if ok:
            out_steps = [0] * ns
            for i in range(ns):
                out_steps[i] = steps[i]
        out_final = [0] * (tail - head + 1)
        for i in range(tail - head + 1):
            out_final[i] = stack[head + i]
        return ok, out_steps, out_final
    finally:
        free(col)
        free(stack)
        free(steps)
