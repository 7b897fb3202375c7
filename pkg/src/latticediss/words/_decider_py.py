"""Pure-Python word-reduction kernel.

Mirrors the compiled kernel in _decider_c.pyx step for step so both produce
byte-identical results; keep the two in sync when changing either.

The kernel works on a sequence of small integer color codes and returns

    (contractible, steps, final)

where steps is a flat sequence of (deleted, left, right) index triples in
original-letter positions and final lists the surviving positions in order.
A letter may be deleted when its two current cyclic neighbors plus itself
are not three distinct colors.  Reduction stops as soon as the live word has
length 2 (or 1), so on success steps has exactly n - len(final) triples and
every triple names three distinct positions.  On failure steps comes back
empty: callers only need the stuck word, and large inputs stay cheap.
"""

from __future__ import annotations


def reduce_cyclic(codes) -> tuple[bool, list[int], list[int]]:
    n = len(codes)
    if n <= 2:
        return True, [], list(range(n))

    stack = [0] * n
    top = -1  # index of stack top
    steps: list[int] = []

    for i in range(n):
        top += 1
        stack[top] = i
        rem = n - 1 - i  # letters not yet pushed
        while top + 1 + rem > 2:
            if top >= 1 and codes[stack[top]] == codes[stack[top - 1]]:
                # adjacent equal pair: drop the newer letter
                t = stack[top]
                top -= 1
                steps += (t, stack[top], i + 1 if rem else stack[0])
                continue
            if top >= 2 and codes[stack[top]] == codes[stack[top - 2]]:
                # x,y,x: the middle letter's neighbors repeat; drop it and
                # let the loop re-enter on the equal pair left behind
                steps += (stack[top - 1], stack[top - 2], stack[top])
                stack[top - 1] = stack[top]
                top -= 1
                continue
            break

    # Seam pass: the linear stack is fully reduced in its interior, so the
    # only candidate deletions sit next to the wrap-around.
    head, tail = 0, top
    while tail - head + 1 > 2:
        f, b = stack[head], stack[tail]
        if codes[b] == codes[f] or codes[b] == codes[stack[head + 1]]:
            steps += (f, b, stack[head + 1])
            head += 1
            continue
        if codes[stack[tail - 1]] == codes[f]:
            steps += (b, stack[tail - 1], f)
            tail -= 1
            continue
        break

    final = stack[head : tail + 1]
    ok = tail - head + 1 <= 2
    return ok, steps if ok else [], final
