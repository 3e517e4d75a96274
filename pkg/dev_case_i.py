import sys
import time

CASE = __import__("os").environ.get("DEVCASE", "I")
from hyperforge.identities import catalog_identities, verify_identity
from hyperforge.sampling import seeded

mode_closure = "--closure" in sys.argv
ids = [a for a in sys.argv[1:] if not a.startswith("--")]

for entry in catalog_identities(CASE):
    if ids and entry.id not in ids:
        continue
    rng = seeded(11, "dev", entry.id)
    t0 = time.time()
    try:
        rep = verify_identity(
            entry,
            rng,
            samples=3,
            mode="exact",
            closure_samples=(2 if mode_closure else 0),
        )
    except Exception as exc:
        print(f"{entry.id}: EXCEPTION {type(exc).__name__}: {exc}")
        continue
    dt = time.time() - t0
    for c in rep.checks:
        status = "ok" if c.ok else "FAIL"
        extra = f" note={c.note}" if c.note else ""
        print(
            f"{entry.id} {c.label}: {status} {c.passed}/{c.attempted}{extra} ({dt:.1f}s)"
        )
        for f in c.failures:
            print(f"    {f[:300]}")
