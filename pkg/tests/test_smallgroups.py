import itertools

import pytest

from rittlab.permgroup import close, Permutation, coset_action, point_stabilizer
from rittlab.smallgroups import (abstract_isomorphic, catalog, identify_group,
                                 _cyclic, _direct, _metacyclic, _q8)


def test_catalog_counts_by_order():
    by_order = {}
    for _, G in catalog():
        by_order[G.order] = by_order.get(G.order, 0) + 1
    # number of groups of each order up to isomorphism
    expected = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2,
                10: 2, 11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}
    assert by_order == expected


def test_catalog_entries_pairwise_nonisomorphic():
    for (n1, g1), (n2, g2) in itertools.combinations(catalog(), 2):
        if g1.order == g2.order:
            assert not abstract_isomorphic(g1, g2), (n1, n2)


def test_catalog_self_identification():
    for name, G in catalog():
        assert identify_group(G) == name


def test_same_order_profile_distinguished():
    # C8 x C2 and the modular group of order 16 share the element-order
    # multiset; only the real isomorphism search tells them apart
    c8xc2 = _direct(_cyclic(8), _cyclic(2))
    m16 = _metacyclic(8, 2, 0, 5)
    assert sorted(g.order() for g in c8xc2) == sorted(g.order() for g in m16)
    assert not abstract_isomorphic(c8xc2, m16)


def test_identify_is_representation_independent():
    s3_natural = close(3, (Permutation.from_cycles(3, [(0, 1, 2)]),
                           Permutation.from_cycles(3, [(0, 1)])))
    assert identify_group(s3_natural) == "S3"
    # same group acting on the 3 cosets of a reflection
    H = point_stabilizer(s3_natural, 2)
    assert identify_group(coset_action(s3_natural, H).image) == "S3"


def test_identify_dihedral_vs_quaternion():
    d4 = _metacyclic(4, 2, 0, 3)
    q8 = _q8()
    assert identify_group(d4) == "D4"
    assert identify_group(q8) == "Q8"
    assert not abstract_isomorphic(d4, q8)


def test_large_groups_report_order_and_abelian_flag():
    c20 = _cyclic(20)
    assert identify_group(c20) == "order 20 (abelian)"
    agl = close(5, (Permutation.from_cycles(5, [(0, 1, 2, 3, 4)]),
                    Permutation.from_cycles(5, [(1, 2, 4, 3)])))
    assert identify_group(agl) == "order 20 (nonabelian)"


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 12, 16])
def test_cyclic_identified(n):
    assert identify_group(_cyclic(n)) == f"C{n}"


def test_direct_product_identification():
    assert identify_group(_direct(_cyclic(2), _cyclic(3))) == "C6"
    assert identify_group(_direct(_cyclic(2), _cyclic(2))) == "C2xC2"
    assert identify_group(_direct(_q8(), _cyclic(2))) == "Q8xC2"
