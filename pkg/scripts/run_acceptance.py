"""Run the acceptance suite and print one PASS/FAIL line per criterion."""
import subprocess
import sys
from pathlib import Path

root = Path(__file__).resolve().parent.parent
proc = subprocess.run([sys.executable, "-m", "pytest", str(root / "tests" / "test_acceptance.py"), "-q", "-s",
                       "-p", "no:cacheprovider"], capture_output=True, text=True, cwd=root)
lines = [ln for ln in proc.stdout.splitlines() if ln.startswith("criterion ")]
seen = {}
for ln in lines:
    seen.setdefault(ln.split()[1], ln)
for key in sorted(seen, key=int):
    print(seen[key])
sys.exit(proc.returncode)
