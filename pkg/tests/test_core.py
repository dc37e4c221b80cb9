import pytest

from binsums.core import RecurrenceSpec, binomial, central_row, kronecker, rec_eval


def pascal_triangle(rows):
    """Independent oracle: Pascal's triangle by the addition recurrence."""
    tri = [[1]]
    for n in range(1, rows + 1):
        prev = tri[-1]
        tri.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    return tri


TRI = pascal_triangle(120)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(6, -1) == 0
    assert binomial(6, 7) == 0
    # frozen values, recomputed by the Pascal oracle
    assert TRI[12][7] == 792
    assert binomial(12, 7) == 792
    assert TRI[19][9] == 92378
    assert binomial(19, 9) == 92378


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_matches_pascal_oracle():
    for n in range(0, 40):
        for k in range(-2, n + 3):
            want = TRI[n][k] if 0 <= k <= n else 0
            assert binomial(n, k) == want


def test_row_symmetry():
    for n in range(0, 41):
        for k in range(0, n + 1):
            assert binomial(2 * n, n - k) == binomial(2 * n, n + k)


def test_row_sum_and_half_row():
    for n in range(0, 41):
        assert sum(binomial(2 * n, j) for j in range(2 * n + 1)) == 2 ** (2 * n)
        half = sum(binomial(2 * n, n + k) for k in range(1, n + 1))
        assert 2 * half == 2 ** (2 * n) - binomial(2 * n, n)


def test_central_doubling():
    for n in range(1, 41):
        assert binomial(2 * n, n) == 2 * binomial(2 * n - 1, n)


def test_central_row():
    assert central_row(0) == [1]
    assert central_row(2) == [6, 4, 1]
    assert central_row(6) == [924, 792, 495, 220, 66, 12, 1]
    for n in range(0, 50):
        assert central_row(n) == [binomial(2 * n, n + k) for k in range(n + 1)]
    with pytest.raises(ValueError):
        central_row(-1)


# --- Kronecker symbol ------------------------------------------------------

def legendre_by_residues(k, p):
    """Brute-force Legendre symbol from the quadratic residue table."""
    r = k % p
    if r == 0:
        return 0
    return 1 if r in {pow(t, 2, p) for t in range(1, p)} else -1


def kronecker_by_factoring(k, m):
    """Brute-force Kronecker symbol for m > 0 via the prime factorization."""
    result = 1
    rest = m
    p = 2
    while rest > 1:
        if p * p > rest:
            p = rest
        while rest % p == 0:
            rest //= p
            if p == 2:
                result *= 0 if k % 2 == 0 else (1 if k % 8 in (1, 7) else -1)
            else:
                result *= legendre_by_residues(k, p)
        p += 1
    return result


def test_kronecker_examples():
    assert kronecker(2, 5) == -1
    assert kronecker(7, 12) == 1
    assert kronecker(0, 5) == 0
    assert kronecker(3, 9) == 0
    assert kronecker(3, 9) == kronecker_by_factoring(3, 9)


def test_kronecker_explicit_tables():
    # the two patterns quoted with the Fibonacci and Pell identities
    assert [kronecker(k, 5) for k in range(5)] == [0, 1, -1, -1, 1]
    assert [kronecker(k, 12) for k in range(12)] == [0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0, -1]


@pytest.mark.parametrize("p", [5, 13])
def test_kronecker_is_legendre_for_odd_primes(p):
    for k in range(0, 10 * p + 1):
        assert kronecker(k, p) == legendre_by_residues(k, p)


@pytest.mark.parametrize("m", [5, 8, 9, 12, 13, 20])
def test_kronecker_brute_force_all_moduli(m):
    for k in range(0, 3 * m + 1):
        assert kronecker(k, m) == kronecker_by_factoring(k, m)


@pytest.mark.parametrize("m", [5, 8, 9, 12, 13, 20])
def test_kronecker_multiplicative(m):
    for a in range(-50, 51):
        for b in range(-50, 51, 7):
            assert kronecker(a * b, m) == kronecker(a, m) * kronecker(b, m)


@pytest.mark.parametrize("m", [5, 8, 9, 12, 13, 20])
def test_kronecker_periodic(m):
    for k in range(0, 10 * m):
        assert kronecker(k, m) == kronecker(k % m, m)


def test_kronecker_rejects_zero_modulus():
    with pytest.raises(ValueError):
        kronecker(3, 0)


# --- recurrences ------------------------------------------------------------

FIB = RecurrenceSpec("fib", (1, 1), (0, 1), negative_rule="odd")
LUCAS = RecurrenceSpec("lucas", (1, 1), (2, 1), negative_rule="even")
W = RecurrenceSpec("W", (-1, 2, 1), (3, -1, 5))
S = RecurrenceSpec("S", (6, -9, 1), (1, 2, 6))


def test_rec_eval_examples():
    assert rec_eval(FIB, 12) == 144
    assert rec_eval(W, 7) == -57
    assert rec_eval(S, 5) == 207
    assert rec_eval(FIB, -2) == -1


def test_rec_eval_memo_is_deterministic():
    spec = RecurrenceSpec("f", (1, 1), (0, 1))
    first = [rec_eval(spec, n) for n in (30, 5, 30)]
    assert first == [832040, 5, 832040]


def test_backward_extension_satisfies_recurrence():
    # a(n) = a(n-1) + a(n-2) must keep holding through negative indices
    for spec in (FIB, LUCAS):
        for n in range(-20, 41):
            assert rec_eval(spec, n) == rec_eval(spec, n - 1) + rec_eval(spec, n - 2)


def test_backward_reflection_rules():
    for t in range(1, 21):
        assert rec_eval(FIB, -t) == (-1) ** (t + 1) * rec_eval(FIB, t)
        assert rec_eval(LUCAS, -t) == (-1) ** t * rec_eval(LUCAS, t)


def test_negative_index_rejected_without_rule():
    with pytest.raises(ValueError):
        rec_eval(W, -1)


def test_recurrence_spec_validation():
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (1, 1), (0,))
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (), ())
    with pytest.raises(ValueError):
        RecurrenceSpec("bad", (1,), (0,), negative_rule="sideways")
