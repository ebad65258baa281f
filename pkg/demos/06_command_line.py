"""Driving the ``clusterquant`` command line from Python.

The same calls work from a shell, e.g.
``clusterquant quantize --input bt.json --format structured``.
"""

# %%
import contextlib
import io
import json
import tempfile
from pathlib import Path

from clusterquant.cli import main

work = Path(tempfile.mkdtemp())
bt_file = work / "bt.json"
bt_file.write_text(json.dumps({"quiver": {"vertices": 4, "mutable": 2, "arrows": [[1, 2], [3, 1], [2, 4]]}}))

# %%
print("$ clusterquant rank")
main(["rank", "--input", str(bt_file)])

# %%
# Save the structured output of quantize and feed it back to verify.
print("\n$ clusterquant quantize")
main(["quantize", "--input", str(bt_file)])

lam_file = work / "lambda.json"
buf = io.StringIO()
with contextlib.redirect_stdout(buf):
    main(["quantize", "--input", str(bt_file), "--format", "structured"])
lam_file.write_text(buf.getvalue())

print("\n$ clusterquant verify")
print("exit code", main(["verify", "--input", str(bt_file), "--lambda", str(lam_file)]))

# %%
print("\n$ clusterquant mutate --sequence 1,2")
main(["mutate", "--input", str(bt_file), "--lambda", str(lam_file), "--sequence", "1,2"])

print("\n$ clusterquant homog-basis")
main(["homog-basis", "--input", str(bt_file)])
