"""Group construction, validation, invariants, quotients, and file I/O."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

import grouplattice as gl
from grouplattice.core import _mask_elements, _popcount, extend_closure
from grouplattice.errors import (
    GroupError,
    GroupTooLarge,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLatinSquare,
    NotNormal,
    NotSubgroup,
)


def relabel(rows, perm):
    # perm[i] = new label of old element i
    n = len(rows)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = perm[rows[a][b]]
    return out


# ---------------------------------------------------------------------------
# construction and validation


def test_valid_table_constructs():
    g = gl.from_cayley_table([[0, 1], [1, 0]], name="C2")
    assert g.order == 2
    assert g.name == "C2"


def test_table_is_read_only():
    g = gl.cyclic(3)
    with pytest.raises(ValueError):
        g.table[0, 0] = 1


def test_rejects_non_square():
    with pytest.raises(NotLatinSquare):
        gl.from_cayley_table([[0, 1, 2], [1, 2, 0]])


def test_rejects_empty():
    with pytest.raises(NotLatinSquare):
        gl.from_cayley_table([])


def test_rejects_entry_out_of_range():
    with pytest.raises(NotLatinSquare, match="outside"):
        gl.from_cayley_table([[0, 1], [1, 2]])
    with pytest.raises(NotLatinSquare, match="outside"):
        gl.from_cayley_table([[0, -1], [1, 0]])


def test_rejects_repeated_entry_in_row():
    with pytest.raises(NotLatinSquare, match="row 0"):
        gl.from_cayley_table([[0, 0], [1, 1]])


def test_rejects_repeated_entry_in_column():
    with pytest.raises(NotLatinSquare, match="column 0"):
        gl.from_cayley_table([[0, 1], [0, 1]])


def test_rejects_latin_square_without_identity():
    # rows and columns are permutations; element 1 is a left identity only
    with pytest.raises(NoIdentity, match="two-sided identity"):
        gl.from_cayley_table([[1, 2, 0], [0, 1, 2], [2, 0, 1]])


def test_rejects_loop_without_two_sided_inverse():
    # a Latin square with identity 0 where element 2 has different left and
    # right inverses
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    with pytest.raises(NoInverse, match="element 2: right inverse 3 is not a left inverse"):
        gl.from_cayley_table(table)


def test_rejects_nonassociative_loop():
    # identity and two-sided inverses present, but (1*1)*2 != 1*(1*2)
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(NotAssociative, match=r"\(1\*1\)\*2 != 1\*\(1\*2\)"):
        gl.from_cayley_table(table)


def test_rejects_order_above_cap():
    rows = gl.cyclic(6)._rows
    with pytest.raises(GroupTooLarge):
        gl.from_cayley_table(rows, cap=4)


def test_identity_relocated_to_zero():
    base = gl.cyclic(4)
    moved = relabel(base._rows, [2, 1, 0, 3])
    g = gl.from_cayley_table(moved, name="moved")
    assert (g.table[0] == np.arange(4)).all()
    assert (g.table[:, 0] == np.arange(4)).all()
    assert sorted(g.element_orders) == [1, 2, 4, 4]
    assert gl.is_isomorphic(base, g) is not None


def test_revalidate_passes_on_valid_group():
    assert gl.dihedral(4).revalidate() is True


@given(st.data())
def test_any_relabeling_of_cyclic_group_reconstructs(data):
    n = data.draw(st.integers(min_value=1, max_value=10))
    perm = list(data.draw(st.permutations(range(n))))
    base = gl.cyclic(n)
    g = gl.from_cayley_table(relabel(base._rows, perm))
    assert g.order == n
    assert (g.table[0] == np.arange(n)).all()
    assert gl.is_isomorphic(base, g) is not None


# ---------------------------------------------------------------------------
# permutation generators


def test_permutation_generators_symmetric_3():
    g = gl.from_permutation_generators(3, [(1, 0, 2), (1, 2, 0)], name="S3")
    assert g.order == 6
    assert not g.is_abelian


def test_permutation_generators_identity_only():
    g = gl.from_permutation_generators(4, [])
    assert g.order == 1


def test_permutation_generators_rejects_non_permutation():
    with pytest.raises(GroupError):
        gl.from_permutation_generators(3, [(0, 0, 1)])


def test_permutation_generators_rejects_bad_degree():
    with pytest.raises(GroupError):
        gl.from_permutation_generators(0, [])


def test_permutation_generators_respects_cap():
    cycle = tuple(list(range(1, 7)) + [0])
    with pytest.raises(GroupTooLarge):
        gl.from_permutation_generators(7, [cycle, (1, 0) + tuple(range(2, 7))], cap=100)


# ---------------------------------------------------------------------------
# low-level helpers


def test_extend_closure_sweeps_cosets():
    rows = gl.cyclic(6)._rows
    mask, new = extend_closure(rows, 1, (0,), (), 2)
    assert mask == 0b010101
    assert set(new) == {2, 4}


def test_mask_elements_and_popcount():
    assert _mask_elements(0b1011) == [0, 1, 3]
    assert _mask_elements(0) == []
    assert _popcount(0b1011) == 3
    assert _popcount(0) == 0


# ---------------------------------------------------------------------------
# invariants


def test_element_orders_cyclic_6():
    g = gl.cyclic(6)
    assert g.element_orders == (1, 6, 3, 2, 3, 6)
    assert g.element_order(1) == 6
    assert gl.element_order(g, 3) == 2


def test_mul_and_inverses():
    g = gl.cyclic(5)
    for a in range(5):
        assert g.mul(a, g.inv_of(a)) == 0
        assert g.mul(g.inv_of(a), a) == 0
    assert g.inverses == (0, 4, 3, 2, 1)


def test_delta_examples():
    assert gl.delta(gl.cyclic(6)) == 2
    assert gl.delta(gl.dihedral(4)) == 5
    assert gl.delta(gl.dicyclic(2)) == 1
    assert gl.delta(gl.symmetric(4)) == 13
    assert gl.delta(gl.alternating(4)) == 7
    assert gl.delta(gl.heisenberg(3)) == 13
    assert gl.delta(gl.trivial()) == 0


def test_involution_count_examples():
    assert gl.involution_count(gl.symmetric(3)) == 3
    assert gl.involution_count(gl.symmetric(4)) == 9
    assert gl.involution_count(gl.dicyclic(2)) == 1
    assert gl.involution_count(gl.cyclic(6)) == 1
    assert gl.involution_count(gl.elementary_abelian(2, 3)) == 7


def test_delta_at_least_involution_count_across_catalog(catalog36):
    for entry in catalog36:
        g = entry.group
        assert g.delta >= g.involution_count


def test_exponent_examples():
    assert gl.exponent(gl.symmetric(3)) == 6
    assert gl.exponent(gl.cyclic(12)) == 12
    assert gl.exponent(gl.dihedral(4)) == 4
    assert gl.exponent(gl.elementary_abelian(2, 3)) == 2
    assert gl.exponent(gl.alternating(4)) == 6


def test_abelian_cyclic_flags():
    assert gl.cyclic(6).is_cyclic
    assert gl.cyclic(6).is_abelian
    assert gl.elementary_abelian(2, 2).is_abelian
    assert not gl.elementary_abelian(2, 2).is_cyclic
    assert not gl.symmetric(3).is_abelian
    assert not gl.is_abelian(gl.dihedral(4))


def test_solvability():
    assert gl.is_solvable(gl.symmetric(4))
    assert gl.is_solvable(gl.alternating(4))
    assert gl.is_solvable(gl.dihedral(6))
    assert not gl.is_solvable(gl.alternating(5))
    assert not gl.symmetric(5).is_solvable


def test_center_examples():
    assert gl.center(gl.dihedral(4)).order == 2
    assert gl.center(gl.symmetric(3)).order == 1
    assert gl.center(gl.dicyclic(2)).order == 2
    assert gl.center(gl.cyclic(12)).order == 12
    assert gl.center(gl.heisenberg(3)).order == 3


def test_derived_subgroup_examples():
    assert gl.derived_subgroup(gl.symmetric(3)).order == 3
    assert gl.derived_subgroup(gl.dihedral(4)).order == 2
    assert gl.derived_subgroup(gl.cyclic(12)).order == 1
    s4 = gl.symmetric(4)
    d = gl.derived_subgroup(s4)
    assert d.order == 12
    assert d.is_normal
    assert gl.derived_subgroup(gl.alternating(4)).order == 4


# ---------------------------------------------------------------------------
# subgroups


def test_closure_examples(s3):
    invol = next(x for x in range(6) if s3.element_order(x) == 2)
    h = gl.closure(s3, [invol])
    assert h.order == 2
    assert gl.closure(s3, []).order == 1
    assert gl.closure(s3, range(6)).order == 6


def test_subgroup_interface(s3):
    rot = next(x for x in range(6) if s3.element_order(x) == 3)
    h = s3.closure([rot])
    assert h.order == 3
    assert h.index == 2
    assert len(h) == 3
    assert 0 in h
    assert rot in h
    assert h.elements == tuple(sorted(h.elements))
    assert list(iter(h)) == list(h.elements)
    assert h == s3.closure([s3.mul(rot, rot)])
    assert hash(h) == hash(s3.closure([s3.mul(rot, rot)]))
    assert "3" in repr(h)


def test_subgroup_membership_validation(s3):
    with pytest.raises(NotSubgroup):
        s3.subgroup([0, 1, 2, 3])  # not product-closed for these labels
    with pytest.raises(NotSubgroup):
        gl.Subgroup(s3, 0b10)  # misses the identity


def test_trivial_and_full_subgroup(s3):
    assert s3.trivial_subgroup().order == 1
    assert s3.full_subgroup().order == 6
    assert s3.full_subgroup().index == 1


def test_subgroup_normality(s3):
    rot = next(x for x in range(6) if s3.element_order(x) == 3)
    invol = next(x for x in range(6) if s3.element_order(x) == 2)
    assert s3.closure([rot]).is_normal
    assert not s3.closure([invol]).is_normal
    assert gl.is_normal(s3, s3.closure([rot]))


def test_subgroup_flags(d8):
    z = gl.center(d8)
    assert z.is_abelian
    assert z.is_elementary_abelian_2
    four = [h for h in gl.all_subgroups(d8).subgroups if h.order == 4]
    flat = [h for h in four if h.is_elementary_abelian_2]
    assert len(four) == 3
    assert len(flat) == 2  # two Klein subgroups, one cyclic C4
    assert all(h.is_abelian for h in four)


def test_subgroups_of_different_parents_not_equal():
    a, b = gl.cyclic(2), gl.cyclic(2)
    assert a.full_subgroup() != b.full_subgroup()


# ---------------------------------------------------------------------------
# cosets and quotients


def test_coset_indices_structure(s3):
    rot = next(x for x in range(6) if s3.element_order(x) == 3)
    h = s3.closure([rot])
    labels, reps = gl.coset_indices(s3, h)
    assert len(labels) == 6
    assert len(reps) == 2
    assert labels[0] == 0
    assert [labels[r] for r in reps] == [0, 1]
    for c in range(2):
        assert sum(1 for v in labels if v == c) == 3


def test_quotient_group_examples(s3, d8):
    rot = next(x for x in range(6) if s3.element_order(x) == 3)
    q = gl.quotient_group(s3, s3.closure([rot]))
    assert q.order == 2
    q2 = gl.quotient_group(d8, gl.center(d8))
    assert q2.order == 4
    assert q2.exponent == 2  # D8 over its center is the Klein group


def test_quotient_rejects_non_normal(s3):
    invol = next(x for x in range(6) if s3.element_order(x) == 2)
    with pytest.raises(NotNormal):
        gl.quotient_group(s3, s3.closure([invol]))


def test_quotient_elementary_abelian_2_flag(s3, d8):
    rot = next(x for x in range(6) if s3.element_order(x) == 3)
    assert gl.quotient_is_elementary_abelian_2(s3, s3.closure([rot]))
    assert gl.quotient_is_elementary_abelian_2(d8, gl.center(d8))
    c12 = gl.cyclic(12)
    c3 = c12.closure([4])
    assert c3.order == 3
    assert not gl.quotient_is_elementary_abelian_2(c12, c3)


def test_sylow_elements_subgroup_or_none(s3, s4):
    h = gl.sylow_p_elements_form_subgroup(s3, 3)
    assert h is not None and h.order == 3
    assert gl.sylow_p_elements_form_subgroup(s3, 2) is None
    assert gl.sylow_p_elements_form_subgroup(s4, 2) is None
    v = gl.sylow_p_elements_form_subgroup(gl.alternating(4), 2)
    assert v is not None and v.order == 4
    c12 = gl.cyclic(12)
    h2 = gl.sylow_p_elements_form_subgroup(c12, 2)
    assert h2 is not None and h2.order == 4


# ---------------------------------------------------------------------------
# group file format


def test_dumps_group_canonical_bytes():
    text = gl.dumps_group(gl.cyclic(2))
    assert text == '{"name":"C2","order":2,"table":[[0,1],[1,0]]}\n'


def test_dumps_loads_roundtrip(d8):
    g = gl.loads_group(gl.dumps_group(d8))
    assert g.name == d8.name
    assert g.order == d8.order
    assert (g.table == d8.table).all()


def test_write_read_roundtrip(tmp_path):
    path = tmp_path / "s3.grp"
    gl.write_group(gl.symmetric(3), path)
    g = gl.read_group(path)
    assert g.order == 6
    assert g.name == "S3"


def test_loads_rejects_bad_json():
    with pytest.raises(GroupError, match="malformed"):
        gl.loads_group("{not json")


def test_loads_rejects_non_object():
    with pytest.raises(GroupError, match="single object"):
        gl.loads_group("[1,2,3]")


def test_loads_rejects_missing_field():
    with pytest.raises(GroupError, match="missing field 'name'"):
        gl.loads_group('{"order":1,"table":[[0]]}')


def test_loads_rejects_order_mismatch():
    with pytest.raises(GroupError, match="does not match"):
        gl.loads_group('{"name":"X","order":3,"table":[[0,1],[1,0]]}')


@given(st.integers(min_value=1, max_value=12))
def test_file_roundtrip_cyclic(n):
    g = gl.cyclic(n)
    back = gl.loads_group(gl.dumps_group(g))
    assert (back.table == g.table).all()
