"""Independent brute-force oracles used by the test suite.

Everything here deliberately avoids the library's own fast paths: Lyndon
factorizations are found by exhaustive splitting, determinants by cofactor
expansion, and linear systems by plain rational elimination, so agreement
with the package is evidence rather than tautology.
"""

from fractions import Fraction


def brute_lyndon_factorizations(word, is_lyndon):
    """All ways to split `word` into a lex-nonincreasing sequence of Lyndon
    factors, by exhaustive search over split points."""
    results = []

    def go(rest, acc):
        if not rest:
            results.append(list(acc))
            return
        for cut in range(1, len(rest) + 1):
            head = rest[:cut]
            if not is_lyndon(head):
                continue
            if acc and not head <= acc[-1]:
                continue
            acc.append(head)
            go(rest[cut:], acc)
            acc.pop()

    go(tuple(word), [])
    return results


def cofactor_det(rows):
    """Determinant by Laplace expansion along the first row; works over any
    commutative ring whose elements support + - *."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def solve_exact(matrix, rhs):
    """Solve M x = rhs over the rationals by Gaussian elimination; raises if
    the matrix is singular."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def rational_rank(rows):
    """Rank of a rational matrix by elimination."""
    work = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    row = 0
    for col in range(cols):
        pivot = next((r for r in range(row, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[row], work[pivot] = work[pivot], work[row]
        pv = work[row][col]
        work[row] = [v / pv for v in work[row]]
        for r in range(len(work)):
            if r != row and work[r][col]:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[row])]
        row += 1
        rank += 1
    return rank
