"""Products in the three algebras and a randomized check of their laws."""
from vecquad.algebra import CIRCULAR, HYPERBOLIC, Vec2, format_vec, mul, phs
from vecquad.oracle import check_laws

a, b = Vec2(1.0, 2.0), Vec2(-0.5, 1.5)
for alg in (CIRCULAR, HYPERBOLIC, phs("lp:1"), phs("max")):
    print(f"{str(alg):14} a*b = {format_vec(mul(alg, a, b))}")

# The hyperbolic plane has zero divisors on the light cone.
print("\n(1,1)*(1,-1) hyperbolic:", format_vec(mul(HYPERBOLIC, Vec2(1, 1), Vec2(1, -1))))

# Law checks: commutativity, associativity, closure of generalized circles.
for alg in (CIRCULAR, HYPERBOLIC, phs("lp:3")):
    report = check_laws(alg, trials=500, seed=1)
    worst = max(stat.worst for stat in report.laws.values())
    print(f"{str(alg):14} passed={report.passed} worst deviation={worst:.2e}")
