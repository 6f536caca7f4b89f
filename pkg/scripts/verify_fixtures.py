import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fixtures.registry import fixtures_verify  # noqa: E402
from series.settings import get_settings  # noqa: E402


def main():
    logging.basicConfig(level=get_settings().log_level, format="%(asctime)s %(levelname)s %(message)s", stream=sys.stderr)
    print("=== Fixture Regeneration Check ===")

    results = fixtures_verify()
    for r in results:
        print(f"{r.name:<24} {r.status}")
        for i, j, want, got in r.differences[:5]:
            print(f"    ({i}, {j}) expected {want!r} got {got!r}")

    failed = [r.name for r in results if r.status == "mismatch"]
    checked = sum(1 for r in results if r.status != "display-only")
    print(f"\nRegenerated: {checked}  Display-only: {len(results) - checked}  Mismatched: {len(failed)}")

    if failed:
        print(f"FAILURE: {', '.join(failed)}")
        sys.exit(1)
    print("SUCCESS: every regenerated fixture matches its printed table.")
    sys.exit(0)


if __name__ == "__main__":
    main()
