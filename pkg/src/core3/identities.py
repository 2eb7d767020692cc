"""Sweep-based verifiers for the arithmetic identities and congruences
satisfied by 3-core partition counts.

Every proved family gets a check function that evaluates both sides over a
parameter box and returns an IdentityReport; a nonempty failure list means
an implementation bug, never a false identity.  Degenerate parameters
(k = 0, and k = 1 where a relation telescopes to a tautology) are swept on
purpose rather than skipped.
"""

from dataclasses import dataclass, field

from . import lambert, partitions, series
from .arith import core_count, is_prime, pair_count, sigma, triple_count


@dataclass(frozen=True)
class Failure:
    inputs: dict
    lhs: int
    rhs: int


@dataclass
class IdentityReport:
    """Outcome of one family sweep: instance count plus any counterexamples."""

    family: str
    params: dict
    checked: int
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "checked": self.checked,
            "failures": [
                {"inputs": f.inputs, "lhs": str(f.lhs), "rhs": str(f.rhs)}
                for f in self.failures
            ],
            "passed": self.passed,
        }


def _collect(family: str, params: dict, instances) -> IdentityReport:
    checked = 0
    failures = []
    for inputs, lhs, rhs in instances:
        checked += 1
        if lhs != rhs:
            failures.append(Failure(inputs, lhs, rhs))
    return IdentityReport(family, params, checked, failures)


def _exact(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(f"{numerator} not divisible by {denominator}")
    return q


def check_a3_even_power(p: int, k_max: int, n_max: int) -> IdentityReport:
    """a3(p^k*n + (p^k-1)/3) == a3(n) for p prime, p = 2 mod 3, k even."""
    if not is_prime(p) or p % 3 != 2:
        raise ValueError(f"p must be a prime congruent to 2 mod 3, got {p}")
    if k_max < 2:
        raise ValueError("k_max must be >= 2")

    def instances():
        for k in range(2, k_max + 1, 2):
            pk = p**k
            offset = _exact(pk - 1, 3)
            for n in range(n_max + 1):
                yield ({"p": p, "k": k, "n": n},
                       core_count(pk * n + offset), core_count(n))

    return _collect(f"a3-even-power-p{p}",
                    {"p": p, "k_max": k_max, "n_max": n_max}, instances())


def check_baruah_nath(k_max: int, n_max: int) -> list[IdentityReport]:
    """The three pair-count families with power-of-two arguments, k >= 1."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    params = {"k_max": k_max, "n_max": n_max}

    def family_1():
        # A3(2^(2k+2)*n + 2(2^(2k)-1)/3) == (2^(2k+2)-1)/3 * A3(4n)
        for k in range(1, k_max + 1):
            step = 2 ** (2 * k + 2)
            offset = _exact(2 * (2 ** (2 * k) - 1), 3)
            c = _exact(step - 1, 3)
            for n in range(n_max + 1):
                yield ({"k": k, "n": n},
                       pair_count(step * n + offset), c * pair_count(4 * n))

    def family_2():
        # A3(2^(2k+2)*n + 2(2^(2k+2)-1)/3)
        #   == (2^(2k+2)-1)/3 * A3(4n+2) - (2^(2k+2)-4)/3 * A3(n)
        for k in range(1, k_max + 1):
            step = 2 ** (2 * k + 2)
            offset = _exact(2 * (step - 1), 3)
            c1 = _exact(step - 1, 3)
            c2 = _exact(step - 4, 3)
            for n in range(n_max + 1):
                yield ({"k": k, "n": n}, pair_count(step * n + offset),
                       c1 * pair_count(4 * n + 2) - c2 * pair_count(n))

    def family_3():
        # A3(2^(2k+1)*n + (5*2^(2k)-2)/3) == (2^(2k+1)-1) * A3(2n+1)
        for k in range(1, k_max + 1):
            step = 2 ** (2 * k + 1)
            offset = _exact(5 * 2 ** (2 * k) - 2, 3)
            c = step - 1
            for n in range(n_max + 1):
                yield ({"k": k, "n": n},
                       pair_count(step * n + offset), c * pair_count(2 * n + 1))

    return [_collect("BN-1", params, family_1()),
            _collect("BN-2", params, family_2()),
            _collect("BN-3", params, family_3())]


def check_lin(n_max: int) -> IdentityReport:
    """A3(8n+6) == 7 * A3(2n+1)."""
    def instances():
        for n in range(n_max + 1):
            yield ({"n": n}, pair_count(8 * n + 6), 7 * pair_count(2 * n + 1))

    return _collect("lin", {"n_max": n_max}, instances())


def check_A3_relations(p: int, k_max: int, n_max: int,
                       coprime_variant: bool = False) -> IdentityReport:
    """The two pair-count relation theorems at a prime p != 3.

    General variant (all n): a three-term relation whose step is p^k for
    p = 1 mod 3 and p^(2k) for p = 2 mod 3.  Coprime variant (p not
    dividing 3n+2): the relation collapses to a single multiplier
    (p^(e+1)-1)/(p-1).
    """
    if not is_prime(p) or p == 3:
        raise ValueError(f"p must be a prime other than 3, got {p}")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    one_mod_3 = p % 3 == 1
    variant = "coprime" if coprime_variant else "general"
    family = f"A3-relation-{variant}-p{p}"

    def instances():
        for k in range(k_max + 1):
            e = k if one_mod_3 else 2 * k
            step = p**e
            offset = _exact(2 * step - 2, 3)
            if coprime_variant:
                c = _exact(p ** (e + 1) - 1, p - 1)
                for n in range(n_max + 1):
                    if (3 * n + 2) % p == 0:
                        continue
                    yield ({"p": p, "k": k, "n": n},
                           pair_count(step * n + offset), c * pair_count(n))
            else:
                base = p if one_mod_3 else p * p
                c1 = _exact(step - 1, base - 1)
                c2 = _exact(step - base, base - 1)
                inner_offset = _exact(2 * base - 2, 3)
                for n in range(n_max + 1):
                    lhs = pair_count(step * n + offset)
                    rhs = (c1 * pair_count(base * n + inner_offset)
                           - c2 * pair_count(n))
                    yield ({"p": p, "k": k, "n": n}, lhs, rhs)

    return _collect(family,
                    {"p": p, "k_max": k_max, "n_max": n_max,
                     "variant": variant}, instances())


def check_A3_residue_families(k_max: int, n_max: int) -> list[IdentityReport]:
    """Printed residue-class corollaries of the coprime pair-count relation.

    For p = 5 the argument 5n+r must keep 3(5n+r)+2 prime to 5, which
    excludes r = 1; for p = 7 it excludes r = 4.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    params = {"k_max": k_max, "n_max": n_max}

    def family_5():
        for k in range(k_max + 1):
            step = 5 ** (2 * k)
            offset = _exact(2 * step - 2, 3)
            c = _exact(5 ** (2 * k + 1) - 1, 4)
            for r in (0, 2, 3, 4):
                for n in range(n_max + 1):
                    m = 5 * n + r
                    yield ({"k": k, "r": r, "n": n},
                           pair_count(step * m + offset), c * pair_count(m))

    def family_7():
        for k in range(k_max + 1):
            step = 7**k
            offset = _exact(2 * step - 2, 3)
            c = _exact(7 ** (k + 1) - 1, 6)
            for r in (0, 1, 2, 3, 5, 6):
                for n in range(n_max + 1):
                    m = 7 * n + r
                    yield ({"k": k, "r": r, "n": n},
                           pair_count(step * m + offset), c * pair_count(m))

    return [_collect("A3-residues-5", params, family_5()),
            _collect("A3-residues-7", params, family_7())]


def check_b3_power_families(k_max: int, n_max: int) -> list[IdentityReport]:
    """The three printed triple-count families at moduli 3^k and 2^(k+1), k >= 1."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    params = {"k_max": k_max, "n_max": n_max}

    def family_1():
        # B3(3^k*n + 3^k - 1) == 3^(2k) * B3(n)
        for k in range(1, k_max + 1):
            step = 3**k
            c = step * step
            for n in range(n_max + 1):
                yield ({"k": k, "n": n},
                       triple_count(step * n + step - 1), c * triple_count(n))

    def family_2():
        # B3(2^(k+1)*n + 2^k - 1) == (2^(2k+2)+(-1)^k)/5 * B3(2n)
        for k in range(1, k_max + 1):
            c = _exact(2 ** (2 * k + 2) + (-1) ** k, 5)
            step = 2 ** (k + 1)
            offset = 2**k - 1
            for n in range(n_max + 1):
                yield ({"k": k, "n": n},
                       triple_count(step * n + offset), c * triple_count(2 * n))

    def family_3():
        # B3(2^(k+1)*n + 2^(k+1) - 1)
        #   == (2^(2k+2)+(-1)^k)/5 * B3(2n+1) + (2^(2k+2)-4(-1)^k)/5 * B3(n)
        for k in range(1, k_max + 1):
            c1 = _exact(2 ** (2 * k + 2) + (-1) ** k, 5)
            c2 = _exact(2 ** (2 * k + 2) - 4 * (-1) ** k, 5)
            step = 2 ** (k + 1)
            for n in range(n_max + 1):
                yield ({"k": k, "n": n}, triple_count(step * n + step - 1),
                       c1 * triple_count(2 * n + 1) + c2 * triple_count(n))

    return [_collect("B3-1", params, family_1()),
            _collect("B3-2", params, family_2()),
            _collect("B3-3", params, family_3())]


def check_B3_relations(p: int, k_max: int, n_max: int,
                       coprime_variant: bool = False) -> IdentityReport:
    """The two triple-count relation theorems at a prime p.

    General variant: three-term relation for p != 3, with signs depending
    on the residue of p mod 3.  Coprime variant (p not dividing n+1, plus
    the unconditional p = 3 branch): a single multiplier.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not coprime_variant and p == 3:
        raise ValueError("the general three-term relation excludes p = 3")
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    p2 = p * p
    variant = "coprime" if coprime_variant else "general"
    family = f"B3-relation-{variant}-p{p}"

    def instances():
        for k in range(k_max + 1):
            step = p**k
            sign = (-1) ** k
            if coprime_variant:
                if p == 3:
                    c = 9**k
                    for n in range(n_max + 1):
                        yield ({"p": p, "k": k, "n": n},
                               triple_count(step * n + step - 1),
                               c * triple_count(n))
                    continue
                if p % 3 == 1:
                    c = _exact(p ** (2 * (k + 1)) - 1, p2 - 1)
                else:
                    c = _exact(p ** (2 * k + 2) + sign, p2 + 1)
                for n in range(n_max + 1):
                    if (n + 1) % p == 0:
                        continue
                    yield ({"p": p, "k": k, "n": n},
                           triple_count(step * n + step - 1),
                           c * triple_count(n))
            else:
                if p % 3 == 1:
                    c1 = _exact(p ** (2 * k) - 1, p2 - 1)
                    c2 = _exact(p ** (2 * k) - p2, p2 - 1)
                    for n in range(n_max + 1):
                        lhs = triple_count(step * n + step - 1)
                        rhs = (c1 * triple_count(p * n + p - 1)
                               - c2 * triple_count(n))
                        yield ({"p": p, "k": k, "n": n}, lhs, rhs)
                else:
                    c1 = _exact(p ** (2 * k) - sign, p2 + 1)
                    c2 = _exact(p ** (2 * k) + sign * p2, p2 + 1)
                    for n in range(n_max + 1):
                        lhs = triple_count(step * n + step - 1)
                        rhs = (c1 * triple_count(p * n + p - 1)
                               + c2 * triple_count(n))
                        yield ({"p": p, "k": k, "n": n}, lhs, rhs)

    return _collect(family,
                    {"p": p, "k_max": k_max, "n_max": n_max,
                     "variant": variant}, instances())


def check_B3_residue_families(k_max: int, n_max: int) -> list[IdentityReport]:
    """Printed residue-class corollaries of the coprime triple-count relation.

    The substitution n -> 5n+r (resp. 7n+r) needs p not dividing n+1, which
    excludes r = 4 for p = 5 and r = 6 for p = 7.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    params = {"k_max": k_max, "n_max": n_max}

    def family_5():
        # B3(5^(k+1)*n + 5^k*(r+1) - 1) == (5^(2k+2)+(-1)^k)/26 * B3(5n+r)
        for k in range(k_max + 1):
            c = _exact(5 ** (2 * k + 2) + (-1) ** k, 26)
            step = 5 ** (k + 1)
            for r in (0, 1, 2, 3):
                offset = 5**k * (r + 1) - 1
                for n in range(n_max + 1):
                    yield ({"k": k, "r": r, "n": n},
                           triple_count(step * n + offset),
                           c * triple_count(5 * n + r))

    def family_7():
        # B3(7^(k+1)*n + 7^k*(r+1) - 1) == (7^(2k+2)-1)/48 * B3(7n+r)
        for k in range(k_max + 1):
            c = _exact(7 ** (2 * k + 2) - 1, 48)
            step = 7 ** (k + 1)
            for r in (0, 1, 2, 3, 4, 5):
                offset = 7**k * (r + 1) - 1
                for n in range(n_max + 1):
                    yield ({"k": k, "r": r, "n": n},
                           triple_count(step * n + offset),
                           c * triple_count(7 * n + r))

    return [_collect("B3-residues-5", params, family_5()),
            _collect("B3-residues-7", params, family_7())]


def check_xia_congruences(n_max: int) -> IdentityReport:
    """A3(8n+4) == 0 mod 4 and A3(16n+4) == 0 mod 8 for all n."""
    def instances():
        for n in range(n_max + 1):
            yield ({"modulus": 4, "n": n}, pair_count(8 * n + 4) % 4, 0)
            yield ({"modulus": 8, "n": n}, pair_count(16 * n + 4) % 8, 0)

    return _collect("xia-congruence", {"n_max": n_max}, instances())


@dataclass(frozen=True)
class XiaParams:
    """Odd prime p and exponent j of the power-of-4 congruence family."""

    p: int
    j: int

    def __post_init__(self):
        if self.p == 2:
            raise ValueError(
                "p = 2 unsupported: the Euler-theorem step needs 2 invertible mod p^(j+1)")
        if not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.j < 1:
            raise ValueError("j must be >= 1")

    @property
    def k0(self) -> int:
        return self.p**self.j * (self.p - 1) // 2


def check_xia_conjecture(xp: XiaParams, alpha_max: int, n_max: int) -> IdentityReport:
    """A3(4^(k0(a+1))*n + (2^(2k0(a+1)-1)-2)/3) == 0 mod p^j, k0 = p^j(p-1)/2.

    The argument 3N+2 factors as 2^(e-1)*(6n+1) with e = 2*k0*(alpha+1), so
    the value equals (2^e-1)/3 * sigma(6n+1).  The check runs modularly:
    2^e is reduced mod 3p^j, which recovers (2^e-1)/3 mod p^j without ever
    building the power.  Instances whose direct argument fits in 64 bits
    are additionally evaluated outright and compared against the modular
    residue.
    """
    if alpha_max < 0 or n_max < 0:
        raise ValueError("alpha_max and n_max must be >= 0")
    pj = xp.p**xp.j
    modulus = 3 * pj

    def instances():
        for alpha in range(alpha_max + 1):
            e = 2 * xp.k0 * (alpha + 1)
            # 3 | 2^e - 1 because e is even, and 3 | modulus keeps that visible
            residue = (pow(2, e, modulus) - 1) % modulus
            factor_mod = (residue // 3) % pj
            for n in range(n_max + 1):
                value_mod = (factor_mod * (sigma(6 * n + 1) % pj)) % pj
                yield ({"p": xp.p, "j": xp.j, "alpha": alpha, "n": n,
                        "path": "modular"}, value_mod, 0)
                direct_arg = (1 << e) * n + ((1 << (e - 1)) - 2) // 3
                if 3 * direct_arg + 2 < 2**63:
                    yield ({"p": xp.p, "j": xp.j, "alpha": alpha, "n": n,
                            "path": "direct"},
                           pair_count(direct_arg) % pj, value_mod)

    return _collect(f"xia-conjecture-p{xp.p}-j{xp.j}",
                    {"p": xp.p, "j": xp.j, "k0": xp.k0,
                     "alpha_max": alpha_max, "n_max": n_max}, instances())


def cross_validate(n_max: int, brute_cap: int = 40) -> IdentityReport:
    """Per-n agreement of every applicable route for all three counters.

    Series and Lambert lanes run for every n < n_max; the brute-force lane
    joins while n stays within its cap.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    closed = {1: core_count, 2: pair_count, 3: triple_count}
    series_lane = {k: series.core_tuple_series(3, k, n_max) for k in (1, 2, 3)}
    lambert_lane = {k: lambert.tuple_series(k, n_max) for k in (1, 2, 3)}
    labels = {1: "a3", 2: "A3", 3: "B3"}
    brute_bound = min(n_max - 1, brute_cap)

    def instances():
        for k in (1, 2, 3):
            for n in range(n_max):
                reference = closed[k](n)
                yield ({"kind": labels[k], "n": n, "route": "series"},
                       series_lane[k][n], reference)
                yield ({"kind": labels[k], "n": n, "route": "lambert"},
                       lambert_lane[k][n], reference)
                if n <= brute_bound:
                    yield ({"kind": labels[k], "n": n, "route": "brute"},
                           partitions.brute_tuple_count(n, 3, k, cap=brute_cap),
                           reference)

    return _collect("cross-validate",
                    {"n_max": n_max, "brute_cap": brute_cap}, instances())
