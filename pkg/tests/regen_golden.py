"""Regenerate the bundled golden corpus files (run from the repo root)."""

from pathlib import Path

from dabimod.corpus import CORPUS_IDS, build
from dabimod.jsonio import bimodule_to_json, dumps


def main() -> None:
    data = Path(__file__).resolve().parent.parent / "src" / "dabimod" / "data"
    for cid in CORPUS_IDS:
        path = data / f"{cid}.json"
        path.write_text(dumps(bimodule_to_json(build(cid))))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
