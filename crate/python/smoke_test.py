"""Quick check of the compiled extension: build it with `maturin develop` first."""

import json

import periplectic as pp


def main():
    doc = json.loads(pp.normalize("s1*y2", 2))
    assert doc["schema_version"] == "1" and doc["kind"] == "affine"
    assert len(doc["terms"]) == 3, doc

    zero = json.loads(pp.normalize("e1*y1^3*e1", 2))
    assert zero["terms"] == []

    a = pp.normalize("y1", 2)
    b = pp.normalize("s1", 2)
    prod = json.loads(pp.multiply(a, b))
    assert len(prod["terms"]) == 1

    picture = pp.render(pp.normalize("e1", 2))
    assert "∪" in picture and "∩" in picture
    assert pp.render(a, "svg").startswith("<?xml")

    passed, report = pp.verify("relations", n=2, m=1, d=2)
    assert passed, report
    assert json.loads(report)["suite"] == "relations"

    assert pp.pbw_rank_check(2, 2, 5) == (18, 18)
    assert pp.regular_count(2, 2) == 18

    try:
        pp.normalize("s3", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("s3 should be rejected for d = 2")

    print("python smoke test ok", pp.__version__)


if __name__ == "__main__":
    main()
