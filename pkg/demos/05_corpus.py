"""Run the bundled corpus through the full pipeline and print the summary.
Equivalent to ``regpow corpus corpus --t-max 2``; expect about a minute."""

import sys
from pathlib import Path

from regpow.harness import run_corpus, summary_table

root = Path(__file__).resolve().parent.parent
t_max = int(sys.argv[1]) if len(sys.argv) > 1 else 2
summary, entries, _ = run_corpus(root / "corpus", t_max=t_max, checks="none")
print(summary_table(summary))
for e in entries:
    labels = ", ".join(f"{r['kind']}={r['classification']['verdict']}" for r in e["reports"])
    print(f"  {e['id']:30s} {labels}")
