"""Smoke test for the sfdepth extension module. Run after `maturin develop`."""

import sfdepth


def main():
    e1 = sfdepth.Ideal("n=3 {1,2} {2,3}")
    assert e1.n == 3 and e1.mu == 2
    assert e1.gens == [[1, 2], [2, 3]]
    assert e1.depth() == 2
    assert e1.sdepth() == 2
    assert e1.poset() == [[1, 2], [2, 3], [1, 2, 3]]
    assert e1 == sfdepth.fixture("example1")

    e2 = sfdepth.fixture("example2")
    assert e2.mu == 8 and e2.rho(2) == 8
    assert sfdepth.depth(e2, field=0) == 2
    assert sfdepth.sdepth(e2) == 3
    assert sfdepth.sdepth(e2, budget=3) is None

    assert sfdepth.validate_partition(e1, "[{1,2},{1,2,3}]\n[{2,3},{2,3}]\n") == 2
    try:
        sfdepth.validate_partition(e1, "[{1,2},{1,2,3}]\n")
    except ValueError as err:
        assert "{2,3}" in str(err)
    else:
        raise AssertionError("incomplete partition accepted")

    for n in range(3, 7):
        assert sfdepth.family("L", n).depth() == n - 1
        assert sfdepth.family("I", n).depth() == n - 2

    assert len(sfdepth.enumerate_ideals(3)) == 18
    rows = sfdepth.remark_st_probe(6)
    assert all(r["holds"] == (2 * r["d"] >= r["n"]) for r in rows)

    try:
        sfdepth.Ideal("n=2 {1,3}")
    except ValueError:
        pass
    else:
        raise AssertionError("variable beyond n accepted")

    print("sfdepth smoke test ok")


if __name__ == "__main__":
    main()
