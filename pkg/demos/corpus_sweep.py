"""Run the block engine over the built-in corpus and print the markdown report."""

from pblocks import DEFAULT_CORPUS, render_report, run_corpus


def main():
    names = [entry.name for entry in DEFAULT_CORPUS if not entry.large]
    entries = tuple(entry for entry in DEFAULT_CORPUS if entry.name in names)
    print(f"Sweeping {len(entries)} groups: {', '.join(names)}\n")
    report = run_corpus(seed=0, entries=entries)
    print(render_report(report, "md"))
    verdict = "pass" if report["meta"]["passed"] else "FAIL"
    print(f"overall: {verdict}")


if __name__ == "__main__":
    main()
