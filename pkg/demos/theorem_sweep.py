"""Sweep the bound registry over a small corpus and summarize what held.

A compact version of what `romdom verify` does, driven through the library
API instead of the command line.

Run with: python3 demos/theorem_sweep.py
"""

from romdom import (
    SuiteSpec,
    check_pncn_premise,
    default_corpus,
    report_to_json,
    run_suite,
    suite_ok,
)


def main() -> None:
    corpus = [g for g in default_corpus() if g.n <= 5]
    spec = SuiteSpec(graphs=corpus, budget=500_000)
    report = run_suite(spec, jobs=1)

    summary = report["summary"]
    print(f"corpus: {', '.join(report['corpus'])}")
    print(f"records: {len(report['records'])}")
    for key in ("checked", "held", "tight", "hypothesis_skipped", "budget_skipped"):
        print(f"  {key:19s} {summary[key]}")
    print(f"all inequalities held: {suite_ok(report)}")
    print()

    tight = [r for r in report["records"] if r.get("tight")]
    print("a few tight records:")
    for rec in tight[:5]:
        pair = rec["g"] if rec["h"] is None else f"{rec['g']} x {rec['h']}"
        print(f"  {rec['theorem']:16s} {pair:16s} lhs={rec['lhs']} rhs={rec['rhs']}")
    print()

    # the n=5 cycle is the odd one out: optimal labelings disagree on |B2|
    for n in (4, 5, 6):
        rep = check_pncn_premise(n, "cycle" if n > 3 else "path")
        print(
            f"C{n}: |B2| sizes {list(rep.b2_sizes)} (floor n/3 = {rep.floor_n3}),"
            f" premise holds: {rep.premise_holds},"
            f" inequality holds: {rep.inequality_holds}"
        )

    # report_to_json(report) is what the CLI writes with --report
    assert report_to_json(report).startswith("{")


if __name__ == "__main__":
    main()
