"""Compute and certify the bundled sample problems, printing each basis."""

import sys
from pathlib import Path

from idealgb.gbuilder import groebner_hermite
from idealgb.oracle import certify
from idealgb.polyring import format_poly
from idealgb.problemfile import load_problem

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def main() -> int:
    bad = 0
    for path in sorted(PROBLEMS.glob("*.json")):
        problem = load_problem(str(path))
        result = groebner_hermite(problem)
        cert = certify(result, against_oracle=True)
        print(f"{path.name}: n={problem.n}, {'certified' if cert.certified else 'NOT certified'}")
        for g in result.basis:
            print("   ", format_poly(g, result.ordering, problem.variables))
        bad += not cert.certified
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
