"""
===========
CLI reports
===========

The ``orext`` command wraps the library. Reports are plain dictionaries and
serialize to JSON that validates against the shipped schema.
"""

# %%

import json

from orext.cli import Request, dumps, main, run

report, code = run(Request("classify", q="2", format="json"))
print("exit code", code)
print(dumps(report))

# %%
# The same from the command line: ``orext witness-chain --dx x --alpha 1 --k 3``.

main(["witness-chain", "--dx", "x", "--alpha", "1", "--k", "3"])

# %%
# Re-running the echoed input gives the same verdicts.

again, _ = run(Request(**json.loads(dumps(report))["input"]))
print(again["result"] == report["result"])
