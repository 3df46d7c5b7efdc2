"""Exact integer linear algebra: Hermite form row lattices, Smith
invariants, coordinate sections and rational solving.

Everything uses Python's arbitrary-precision integers; intermediate
entries in integer elimination can outgrow machine words even on small
inputs.  The Hermite convention is row-style with positive pivots and
entries above each pivot reduced into [0, pivot), which makes reduced
representatives unique.
"""

from fractions import Fraction
from math import gcd


def _xgcd(a, b):
    """(g, x, y) with g = gcd(a, b) = x*a + y*b."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class IntegerRowLattice:
    """A sublattice of Z^width kept in canonical Hermite normal form."""

    def __init__(self, width):
        self.width = width
        self.rows = []        # echelon rows, pivot columns increasing
        self.pivot_cols = []  # pivot column of each row

    def add(self, vec):
        """Adjoin a vector to the lattice.  Returns True if it grew."""
        vec = list(vec)
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        grew = False
        for j in range(self.width):
            if not vec[j]:
                continue
            if j in self.pivot_cols:
                r = self.pivot_cols.index(j)
                row = self.rows[r]
                a, b = row[j], vec[j]
                if b % a == 0:
                    q = b // a
                    for k in range(j, self.width):
                        vec[k] -= q * row[k]
                else:
                    g, x, y = _xgcd(a, b)
                    new_row = [x * row[k] + y * vec[k]
                               for k in range(self.width)]
                    new_vec = [(a // g) * vec[k] - (b // g) * row[k]
                               for k in range(self.width)]
                    self.rows[r] = new_row
                    vec = new_vec
                    grew = True
            else:
                where = 0
                while (where < len(self.pivot_cols)
                       and self.pivot_cols[where] < j):
                    where += 1
                self.rows.insert(where, vec)
                self.pivot_cols.insert(where, j)
                grew = True
                break
        if grew:
            self._normalize()
        return grew

    def _normalize(self):
        # positive pivots, entries above pivots reduced into [0, pivot)
        for r, j in enumerate(self.pivot_cols):
            if self.rows[r][j] < 0:
                self.rows[r] = [-v for v in self.rows[r]]
        for r in range(len(self.rows) - 1, -1, -1):
            for r2 in range(r + 1, len(self.rows)):
                j2 = self.pivot_cols[r2]
                piv = self.rows[r2][j2]
                q = self.rows[r][j2] // piv
                if q:
                    self.rows[r] = [a - q * b for a, b
                                    in zip(self.rows[r], self.rows[r2])]

    def reduce(self, vec):
        """The canonical representative of vec modulo the lattice."""
        vec = list(vec)
        for r, j in enumerate(self.pivot_cols):
            q = vec[j] // self.rows[r][j]
            if q:
                row = self.rows[r]
                for k in range(j, self.width):
                    vec[k] -= q * row[k]
        return tuple(vec)

    def contains(self, vec):
        return not any(self.reduce(vec))

    @property
    def rank(self):
        return len(self.rows)

    def basis(self):
        return tuple(tuple(row) for row in self.rows)


def hnf_lattice(vectors, width) -> IntegerRowLattice:
    lat = IntegerRowLattice(width)
    for v in vectors:
        lat.add(v)
    return lat


def smith_invariants(vectors, width):
    """Nonzero invariant factors d1 | d2 | ... of the span of vectors."""
    m = [list(v) for v in vectors if any(v)]
    if not m:
        return ()
    rows, cols = len(m), width
    invariants = []
    t = 0
    while t < rows and t < cols:
        # find a nonzero entry of minimal magnitude in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] and (best is None
                                or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        # clear the row and column; restart if remainders appear
        dirty = False
        for i in range(t + 1, rows):
            if m[i][t]:
                q = m[i][t] // m[t][t]
                for k in range(cols):
                    m[i][k] -= q * m[t][k]
                if m[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if m[t][j]:
                q = m[t][j] // m[t][t]
                for i in range(rows):
                    m[i][j] -= q * m[i][t]
                if m[t][j]:
                    dirty = True
        if dirty:
            continue
        # divisibility fix: pivot must divide every remaining entry
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t]:
                    for k in range(cols):
                        m[t][k] += m[i][k]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        invariants.append(abs(m[t][t]))
        t += 1
    return tuple(invariants)


def coordinate_section(vectors, width, keep):
    """Hermite basis of {v in span(vectors) : v[j] = 0 for j not in keep}.

    Computed by eliminating with the complementary columns first; the
    echelon rows whose support avoids them span exactly the section.
    """
    keep = set(keep)
    drop = [j for j in range(width) if j not in keep]
    hold = [j for j in range(width) if j in keep]
    order = drop + hold
    lat = IntegerRowLattice(width)
    for v in vectors:
        lat.add([v[j] for j in order])
    section = []
    for row in lat.rows:
        if not any(row[:len(drop)]):
            back = [0] * width
            for pos, j in enumerate(order):
                back[j] = row[pos]
            section.append(tuple(back))
    return hnf_lattice(section, width).basis()


def solve_columns(columns, targets):
    """Solve B x = t over Z for each target, B given by integer columns.

    Returns a list with one coefficient tuple per target, or None in the
    slot of any target without an integral solution (or any solution at
    all).  B need not be square but must have full column rank for
    uniqueness; a rank-deficient B yields None everywhere.
    """
    height = len(columns[0]) if columns else 0
    ncols = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)]
           + [Fraction(t[i]) for t in targets]
           for i in range(height)]
    pivot_rows = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, height) if aug[i][c]), None)
        if pr is None:
            return [None] * len(targets)
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(height):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivot_rows.append(r)
        r += 1
    out = []
    for k in range(len(targets)):
        col = ncols + k
        if any(aug[i][col] for i in range(r, height)):
            out.append(None)
            continue
        coeffs = [aug[i][col] for i in range(ncols)]
        if all(c.denominator == 1 for c in coeffs):
            out.append(tuple(int(c) for c in coeffs))
        else:
            out.append(None)
    return out
