"""Write the named example structures as JSON files under data/."""

import pathlib

from brauerkit import fixtures
from brauerkit.formats import dumps

OUT = pathlib.Path(__file__).resolve().parent.parent / "data"


def main():
    OUT.mkdir(exist_ok=True)
    table = {**fixtures.MUTATION_EXAMPLES, **fixtures.FLIP_EXAMPLES}
    for name, (src, _, expected) in table.items():
        (OUT / f"{name}.json").write_text(dumps(src()))
        (OUT / f"{name}_expected.json").write_text(dumps(expected()))
    bad = fixtures.single_loop(2).__class__.from_cycles([1], {"l": 1}, [["l"]], [1])
    (OUT / "bad_loop.json").write_text(dumps(bad))
    print(f"wrote {len(table) * 2 + 1} files to {OUT}")


if __name__ == "__main__":
    main()
