"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Times the two hot loops: coset enumeration over every class of L/2L, and
the facet-subset vertex oracle. Results are checked to agree before any
timing is reported.
"""

import argparse
import time

from latnrd import kernels, root_lattice
from latnrd.dnstar import GammaVector, voronoi_hrep
from latnrd.minvec import all_coset_min_vectors, enumeration_plan
from latnrd.oracles import _integer_halfspace


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def enumeration_case(family, n):
    g = root_lattice(family, n)
    enumeration_plan(g)
    return f"cosets {family}{n or ''}", lambda be: all_coset_min_vectors(g, backend=be)


def oracle_case(n):
    rows = voronoi_hrep(GammaVector.ones(n))
    a, b = zip(*(_integer_halfspace(r[0], r[1]) for r in rows))
    return (f"vertex oracle n={n} ({len(rows)} rows)",
            lambda be: kernels.facet_subset_vertices(list(a), list(b), backend=be))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--quick", action="store_true", help="skip the slow python oracle run")
    args = p.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the python backend is available")
    cases = [enumeration_case("E8", None), enumeration_case("E7star", None),
             enumeration_case("Dstar", 11), enumeration_case("Astar", 10)]
    if not args.quick:
        cases.append(oracle_case(5))
    print(f"{'case':<34}" + "".join(f"{be:>12}" for be in backends) + "     speedup")
    for name, fn in cases:
        times, results = {}, {}
        for be in backends:
            times[be], results[be] = best_of(lambda: fn(be), args.repeat)
        ref = results["python"]
        assert all(r == ref for r in results.values()), f"backends disagree on {name}"
        line = f"{name:<34}" + "".join(f"{times[be]:>11.3f}s" for be in backends)
        if "cython" in times:
            line += f"{times['python'] / times['cython']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
