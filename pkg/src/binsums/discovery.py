"""Reverse-engineering of periodic weight profiles.

Given a target sequence and a period M, derive_profile solves exactly for
the center coefficient and weight table that make

    target(n) == center * C(2n, n) + sum_{k>=1} C(2n, n+k) * w(k mod M)

hold on a solve range, classifies the solution by rank, and then insists
that a unique solution keep working on held-out indices it never saw.
All linear algebra is exact rational Gaussian elimination; nothing is ever
rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import binomial, central_row
from .cyclo import CycloVec, recognize_quad
from .quadratic import QuadValue
from .sequences import get_oracle


class _Eliminator:
    """Incremental exact Gaussian elimination.

    Equations are fed one at a time so that an inconsistency can be blamed
    on the exact index that introduced it.
    """

    def __init__(self, unknowns: int) -> None:
        self.unknowns = unknowns
        self.rows: dict[int, tuple[list[Fraction], Fraction]] = {}  # pivot -> row

    def add(self, coeffs: list[Fraction], rhs: Fraction) -> bool:
        """Absorb one equation; False means it contradicts the others."""
        coeffs = list(coeffs)
        for pivot, (prow, prhs) in self.rows.items():
            c = coeffs[pivot]
            if c:
                coeffs = [a - c * b for a, b in zip(coeffs, prow)]
                rhs = rhs - c * prhs
        pivot = next((j for j, c in enumerate(coeffs) if c), None)
        if pivot is None:
            return rhs == 0
        inv = Fraction(1) / coeffs[pivot]
        self.rows[pivot] = ([c * inv for c in coeffs], rhs * inv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def solve(self) -> list[Fraction]:
        assert self.rank == self.unknowns
        sol = [Fraction(0)] * self.unknowns
        for pivot in sorted(self.rows, reverse=True):
            prow, prhs = self.rows[pivot]
            sol[pivot] = prhs - sum(prow[j] * sol[j] for j in range(pivot + 1, self.unknowns))
        return sol


@dataclass(frozen=True)
class ProfileSolution:
    """Outcome of a profile derivation."""

    target: str
    target_param: int | None
    period: int
    row_odd: bool
    status: str  # "unique" | "underdetermined" | "infeasible"
    center: Fraction | None = None
    weights: tuple[Fraction, ...] | None = None
    dimension: int = 0
    violated_n: int | None = None
    solve_range: tuple[int, int] = (0, 0)
    holdout_range: tuple[int, int] = (0, 0)
    target_index: tuple[int, int] = (1, 0)


def _profile_equation(n: int, period: int, row_odd: bool) -> list[Fraction]:
    """Coefficient row of the sum at index n.

    Even rows have period + 1 unknowns [center, w_0, ..., w_(M-1)]; odd rows
    have no center column (C(2n+1, n) duplicates the k = 1 column), so only
    the M weights are solved for.
    """
    if row_odd:
        row, k_max = 2 * n + 1, n + 1
        vals = [binomial(row, n + k) for k in range(k_max + 1)]
        coeffs = [Fraction(0)] * period
        for k in range(1, k_max + 1):
            coeffs[k % period] += vals[k]
        return coeffs
    vals = central_row(n)
    coeffs = [Fraction(0)] * (period + 1)
    coeffs[0] = Fraction(vals[0])
    for k in range(1, n + 1):
        coeffs[1 + k % period] += vals[k]
    return coeffs


def derive_profile(
    target,
    period: int,
    row_odd: bool = False,
    solve_start: int = 1,
    solve_stop: int | None = None,
    holdout: int = 20,
) -> ProfileSolution:
    """Solve for the weight profile that expresses `target` as a centered sum.

    `target` is an OracleRef (sequence name, optional parameter, affine
    index map).  The solve range must supply at least period + 2 equations.
    When the target is defined at n = 0 that trivial row (every side
    binomial vanishes) is included as well; it pins the center coefficient,
    which for even periods is otherwise entangled with the alternating-sign
    row identity.  A unique solution is re-verified on the `holdout`
    indices after the solve range and demoted to infeasible if any fails.
    """
    from .identities import OracleRef  # reuse the reference type

    if not isinstance(target, OracleRef):
        target = OracleRef(*target) if isinstance(target, tuple) else OracleRef(target)
    if period < 1:
        raise ValueError("period must be >= 1")
    if solve_stop is None:
        solve_stop = solve_start + period + 3
    if solve_stop - solve_start + 1 < period + 2:
        raise ValueError(f"solve range must supply at least {period + 2} equations")
    get_oracle(target.name)  # fail early on unknown names

    unknowns = period if row_odd else period + 1
    elim = _Eliminator(unknowns)
    ns = list(range(solve_start, solve_stop + 1))
    if not row_odd and 0 not in ns:
        try:
            target.value(0)
        except (ValueError, KeyError):
            pass
        else:
            ns.insert(0, 0)
    for n in ns:
        coeffs = _profile_equation(n, period, row_odd)
        if not elim.add(coeffs, Fraction(target.value(n))):
            return ProfileSolution(target.name, target.param, period, row_odd,
                                   "infeasible", violated_n=n,
                                   solve_range=(solve_start, solve_stop),
                                   target_index=(target.a, target.b))
    if elim.rank < unknowns:
        return ProfileSolution(target.name, target.param, period, row_odd,
                               "underdetermined", dimension=unknowns - elim.rank,
                               solve_range=(solve_start, solve_stop),
                               target_index=(target.a, target.b))
    sol = elim.solve()
    if row_odd:
        center, weights = Fraction(0), tuple(sol)
    else:
        center, weights = sol[0], tuple(sol[1:])
    hold = (solve_stop + 1, solve_stop + holdout)
    for n in range(hold[0], hold[1] + 1):
        coeffs = _profile_equation(n, period, row_odd)
        w_coeffs = coeffs if row_odd else coeffs[1:]
        predicted = (Fraction(0) if row_odd else coeffs[0] * center) + sum(
            c * w for c, w in zip(w_coeffs, weights))
        if predicted != target.value(n):
            return ProfileSolution(target.name, target.param, period, row_odd,
                                   "infeasible", violated_n=n,
                                   solve_range=(solve_start, solve_stop), holdout_range=hold,
                                   target_index=(target.a, target.b))
    return ProfileSolution(target.name, target.param, period, row_odd, "unique",
                           center=center, weights=weights,
                           solve_range=(solve_start, solve_stop), holdout_range=hold,
                           target_index=(target.a, target.b))


def profile_from_angles(n_angle: int, terms, scale, d: int) -> list[QuadValue]:
    """Exact period-N table with entry k = scale * sum_s c_s * 2cos(2k*a_s*pi/N).

    Each cosine is expanded in Z[z]/(z^(2N) - 1) and read back as an element
    of Q(sqrt(d)); `d` is declared by the caller, never searched for.  A
    value falling outside that ring reports the offending residue.
    """
    modulus = 2 * n_angle
    out: list[QuadValue] = []
    for k in range(n_angle):
        total = QuadValue(Fraction(0))
        for a, coeff in terms:
            vec = CycloVec.two_cos(modulus, 2 * k * a)
            try:
                value = recognize_quad(vec, d)
            except ValueError as exc:
                raise ValueError(f"residue {k}: {exc}") from exc
            total = total + QuadValue.of(coeff) * value
        out.append(QuadValue.of(scale) * total)
    return out


def identity_from_profile(solution: ProfileSolution, domain_start: int = 0):
    """Package a unique profile as an Identity so it can be fed to verify()."""
    from .identities import CenteredSum, Domain, Identity, OracleRef

    if solution.status != "unique":
        raise ValueError(f"cannot build an identity from a {solution.status} profile")
    term = CenteredSum(solution.weights, solution.period, row_odd=solution.row_odd,
                       center=solution.center)
    a, b = solution.target_index
    oracle_start = get_oracle(solution.target).start
    start = max(domain_start, -((b - oracle_start) // a)) if a > 0 else domain_start
    return Identity(
        family=f"derived-{solution.target}-M{solution.period}",
        lhs=OracleRef(solution.target, param=solution.target_param, a=a, b=b),
        terms=(term,),
        domain=Domain(start),
        description="profile recovered by exact linear solving",
    )


def profile_json(solution: ProfileSolution) -> dict:
    """ProfileSolution in the same interchange format as the registry."""
    from .identities import identity_json

    body = {
        "target": solution.target,
        "param": solution.target_param,
        "period": solution.period,
        "row": "2n+1" if solution.row_odd else "2n",
        "status": solution.status,
        "solve_range": list(solution.solve_range),
    }
    if solution.status == "unique":
        body["center"] = str(solution.center)
        body["weights"] = [str(w) for w in solution.weights]
        body["holdout_range"] = list(solution.holdout_range)
        body["identity"] = identity_json(identity_from_profile(solution))
    elif solution.status == "underdetermined":
        body["dimension"] = solution.dimension
    else:
        body["violated_n"] = solution.violated_n
    return body
