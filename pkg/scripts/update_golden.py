"""Rewrite the golden SVG files used by the render tests.

Run this only after an intentional change to the figure output, then
review the diff of tests/golden before committing.
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from test_render import FIGURES, GOLDEN  # noqa: E402


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)
    for name, make in sorted(FIGURES.items()):
        path = GOLDEN / f"{name}.svg"
        path.write_text(make(), encoding="utf-8")
        print(f"wrote {path.relative_to(ROOT)}")


if __name__ == "__main__":
    main()
