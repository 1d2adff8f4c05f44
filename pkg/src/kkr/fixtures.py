"""Worked examples used by the self-test and the test suite."""

from .crystal import parse_affine_word, parse_word
from .rigged import RiggedConfiguration

# rank 3, seven-factor path and its rigged configuration
WORKED_PATH = "111*22*3*1*4*2*3"


def worked_rc() -> RiggedConfiguration:
    return RiggedConfiguration.from_dict({
        "n": 3,
        "mu0": [3, 2, 1, 1, 1, 1, 1],
        "levels": [
            {"mu": [2, 2, 1, 1], "J": [0, 0, 0, 1]},
            {"mu": [2, 1], "J": [1, 0]},
            {"mu": [1], "J": [0]},
        ],
    })


# rank 3, thirteen single boxes
THIRTEEN_BOX_STATE = "1111223214322"


def thirteen_box_path():
    return parse_word("*".join(THIRTEEN_BOX_STATE), 3)


def thirteen_box_rc() -> RiggedConfiguration:
    return RiggedConfiguration.from_dict({
        "n": 3,
        "mu0": [1] * 13,
        "levels": [
            {"mu": [4, 3, 1], "J": [0, 1, 4]},
            {"mu": [2, 1], "J": [0, 0]},
            {"mu": [1], "J": [0]},
        ],
    })


# rank 3 box-ball evolution, t = 0..7, three solitons of amplitudes 4, 3, 1
BOX_BALL_TABLE = [
    "1111222211113321111411111111111111111111111",
    "1111111122221113321141111111111111111111111",
    "1111111111112222113324111111111111111111111",
    "1111111111111111222213432111111111111111111",
    "1111111111111111111122321432211111111111111",
    "1111111111111111111111213221143221111111111",
    "1111111111111111111111121113221114322111111",
    "1111111111111111111111112111113221111432211",
]


def normal_order_example():
    return parse_affine_word("1223:5*34:8*1:6", 3)
