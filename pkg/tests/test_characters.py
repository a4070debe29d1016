import pytest

from oracles import hook_length_degree, immanant_by_permutations

from lapshift.characters import (
    character,
    character_degree,
    character_table,
)
from lapshift.partitions import Partition, enumerate_partitions

# the full S_3 table, rows indexed by shape, columns by cycle type,
# both in (3), (2,1), (1,1,1) order
S3_TABLE = {
    (3,): {(3,): 1, (2, 1): 1, (1, 1, 1): 1},
    (2, 1): {(3,): -1, (2, 1): 0, (1, 1, 1): 2},
    (1, 1, 1): {(3,): 1, (2, 1): -1, (1, 1, 1): 1},
}

# selected S_4 values
S4_VALUES = {
    ((2, 2), (2, 2)): 2,
    ((2, 2), (4,)): 0,
    ((3, 1), (2, 1, 1)): 1,
    ((3, 1), (4,)): -1,
    ((2, 1, 1), (2, 2)): -1,
    ((1, 1, 1, 1), (2, 1, 1)): -1,
    ((4,), (3, 1)): 1,
}


def test_s3_table():
    for shape, row in S3_TABLE.items():
        for cycle_type, value in row.items():
            assert character(Partition(shape), Partition(cycle_type)) == value


def test_s4_spot_values():
    for (shape, cycle_type), value in S4_VALUES.items():
        assert character(Partition(shape), Partition(cycle_type)) == value


def test_degrees_match_hook_lengths():
    for n in range(1, 8):
        for lam in enumerate_partitions(n):
            assert character_degree(lam) == hook_length_degree(lam.parts)


def test_orthogonality_up_to_six():
    for n in range(1, 7):
        character_table(n).check_orthogonality()


def test_sign_character():
    # the sign of a permutation of type nu is (-1)^(n - number of parts)
    for n in range(1, 7):
        sign_shape = Partition([1] * n)
        for nu in enumerate_partitions(n):
            assert character(sign_shape, nu) == (-1) ** (n - len(nu))


def test_trivial_character():
    for n in range(1, 7):
        for nu in enumerate_partitions(n):
            assert character(Partition([n]), nu) == 1


def test_character_against_identity_matrix_immanant():
    # imm_lambda(I_n) counts permutations weighted by character values and
    # only the identity contributes, so it equals n! / z * ... reduced to:
    # the immanant of the identity is the character degree
    identity = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    for lam in enumerate_partitions(4):
        value = immanant_by_permutations(
            identity, lambda ct, lam=lam: character(lam, Partition(ct))
        )
        assert value == character_degree(lam)


def test_column_orthogonality_spot():
    # sum over shapes of chi(nu) * chi(rho) is z_nu on the diagonal, else 0
    from lapshift.partitions import centralizer_order

    for n in (3, 4, 5):
        shapes = enumerate_partitions(n)
        for nu in shapes:
            for rho in shapes:
                total = sum(character(lam, nu) * character(lam, rho) for lam in shapes)
                expected = centralizer_order(nu) if nu == rho else 0
                assert total == expected
