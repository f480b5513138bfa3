#!/usr/bin/env python3
"""Solve an exported LP file with HiGHS and write "name value" lines.

Usage: solve_lp_highs.py model.lp values.txt [--time-limit SECONDS]
Prints the objective value on stdout; exits 2 if no optimal solution.
"""
import argparse
import sys

import highspy


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("lp")
    parser.add_argument("values")
    parser.add_argument("--time-limit", type=float, default=600.0)
    args = parser.parse_args()

    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("time_limit", args.time_limit)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    h.readModel(args.lp)
    h.run()
    if h.getModelStatus() != highspy.HighsModelStatus.kOptimal:
        print(h.modelStatusToString(h.getModelStatus()), file=sys.stderr)
        return 2

    lp = h.getLp()
    values = h.getSolution().col_value
    with open(args.values, "w") as out:
        for name, value in zip(lp.col_names_, values):
            out.write(f"{name} {value:.10g}\n")
    print(f"{h.getInfo().objective_function_value:.10g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
