"""Regenerate tests/fixtures/previews.json from a live in-process server.

Each fixture records a preview request and the exact server response, so the
client test suite can verify that rendered highlight spans match the server's
edit log without needing a running backend.

Usage: python3 scripts/make_fixtures.py  (from the frontend/ directory)
"""

import json
import sys
from pathlib import Path

from fastapi.testclient import TestClient

from apesynth import resources as res
from apesynth.service import create_app

LINES = [
    "The committee approved the new budget on Friday .",
    "A small dog chased the ball across the park .",
    "Researchers published the annual report last week .",
    "She quickly signed the official document yesterday .",
    "The old machine still works surprisingly well .",
]

CONFIGS = [
    ("random", 0.0, 1),
    ("random", 0.3, 1),
    ("random", 0.3, 2),
    ("random", 0.5, 7),
    ("random", 1.0, 3),
    ("semantic", 0.0, 1),
    ("semantic", 0.3, 1),
    ("semantic", 0.3, 9),
    ("semantic", 0.5, 4),
    ("semantic", 1.0, 5),
    ("morphemic", 0.0, 2),
    ("morphemic", 0.3, 1),
    ("morphemic", 0.3, 11),
    ("morphemic", 0.5, 6),
    ("morphemic", 1.0, 8),
    ("syntactic", 0.0, 3),
    ("syntactic", 0.3, 1),
    ("syntactic", 0.3, 13),
    ("syntactic", 0.5, 2),
    ("syntactic", 1.0, 10),
]


def main() -> int:
    out_path = Path(__file__).resolve().parent.parent / "fixtures" / "previews.json"
    fixtures = []
    app = create_app(work_dir=out_path.parent / ".fixture-jobs")
    with TestClient(app) as client:
        for scheme, ratio, seed in CONFIGS:
            request = {"tgt_lines": LINES, "scheme": scheme, "ratio": ratio,
                       "seed": seed}
            r = client.post("/api/preview", json=request)
            r.raise_for_status()
            fixtures.append({"request": request, "response": r.json()})
    out_path.write_text(json.dumps(fixtures, indent=1, ensure_ascii=False) + "\n",
                        encoding="utf-8")
    print(f"wrote {len(fixtures)} fixtures to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
