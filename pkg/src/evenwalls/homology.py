"""Integer elementary divisors of sparse boundary matrices.

Only what the homology proxy needs: the rank and the invariant factors of
an integer matrix given as ``{(row, col): value}``.  Unit pivots are
eliminated sparsely; whatever is left without a unit entry goes through a
dense Smith reduction.
"""

from __future__ import annotations

from math import gcd


def elementary_divisors(entries: dict[tuple[int, int], int]) -> list[int]:
    """Return the nonzero invariant factors (positive, divisibility-ordered)."""
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), val in entries.items():
        if val:
            rows.setdefault(r, {})[c] = val
            cols.setdefault(c, set()).add(r)

    divisors: list[int] = []
    pending = sorted(cols)
    progress = True
    while progress:
        progress = False
        deferred = []
        for c in pending:
            live = cols.get(c)
            if not live:
                cols.pop(c, None)
                continue
            units = [r for r in live if rows[r][c] in (1, -1)]
            if not units:
                deferred.append(c)
                continue
            r = min(units, key=lambda rr: (len(rows[rr]), rr))
            _eliminate_unit(rows, cols, r, c)
            divisors.append(1)
            progress = True
        pending = deferred

    if rows:
        rest = sorted(rows)
        rest_cols = sorted({c for row in rows.values() for c in row})
        cidx = {c: i for i, c in enumerate(rest_cols)}
        dense = [[0] * len(rest_cols) for _ in rest]
        for i, r in enumerate(rest):
            for c, v in rows[r].items():
                dense[i][cidx[c]] = v
        divisors.extend(_dense_smith_diagonal(dense))
    return sorted(divisors)


def _eliminate_unit(rows, cols, r: int, c: int) -> None:
    prow = rows.pop(r)
    p = prow[c]
    for rr in sorted(cols[c] - {r}):
        row = rows[rr]
        factor = row[c] * p  # p is +-1
        for cc, v in prow.items():
            nv = row.get(cc, 0) - factor * v
            if nv:
                row[cc] = nv
                cols.setdefault(cc, set()).add(rr)
            else:
                row.pop(cc, None)
                cols[cc].discard(rr)
        if not row:
            del rows[rr]
    for cc in prow:
        cols[cc].discard(r)
    del cols[c]


def _dense_smith_diagonal(a: list[list[int]]) -> list[int]:
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            changed = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    for j in range(t, n):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        changed = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        changed = True
            if changed:
                continue
            # pivot must divide the whole remaining block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            i, _ = bad
            for j in range(t, n):
                a[t][j] += a[i][j]
        diag.append(abs(a[t][t]))
        t += 1
    # normalise to a divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            if g:
                diag[i], diag[j] = g, diag[i] * diag[j] // g
    return diag
