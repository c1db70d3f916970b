"""Exponent gaps climb with the multiplicity of the accessory root.

With m finite base points the trailing coefficient has degree m - 2 and
each of its roots becomes an apparent point of the differentiated
equation.  A simple root gives local exponents {0, 2}; letting roots
collide pushes the top exponent up one step per extra copy.
"""

from fractions import Fraction as F

from apparent import MultiHeunParams, deform, is_apparent, multi_heun


def build(m, qs):
    zs = tuple(F(j) for j in range(m))
    thetas = (F(1, 2), F(1, 3), F(1, 5), F(1, 7), F(1, 11), F(1, 13))[:m]
    theta_inf = F(1, 17)
    alpha = (m - 1) - sum(thetas) - theta_inf
    return multi_heun(
        MultiHeunParams(zs=zs, thetas=thetas, theta_inf=theta_inf, alpha=alpha, qs=qs)
    )


def main():
    q = F(1, 2)
    layouts = [
        (4, (q, F(7, 2))),        # two simple roots
        (4, (q, q)),              # double root
        (5, (q, q, q)),           # triple root
        (6, (q, q, q, q)),        # quadruple root
    ]
    print(f"{'m':>2}  {'accessory roots':<24} {'exponents at q=1/2':<20}")
    for m, qs in layouts:
        ode = build(m, qs)
        res = deform(ode)
        verdict = is_apparent(res.ode, q)
        exps = "{" + ", ".join(str(e) for e in sorted(verdict.exponents)) + "}"
        label = ",".join(str(v) for v in qs)
        print(f"{m:>2}  {label:<24} {exps:<20} apparent={verdict.is_apparent}")
    print()
    print("one extra exponent step per repeated copy of the root")


if __name__ == "__main__":
    main()
