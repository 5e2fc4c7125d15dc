import pytest

from braceforge import (enumerate_skew_braces, groups_of_order, linearize,
                        parse_field)

FIELD_SPECS = ("Q", "Fp:5")


@pytest.fixture(scope="session")
def corpus():
    """Every skew brace on a group of order <= 6, linearized over both fields.

    Items are (label, skew brace, linearized Hopf brace).
    """
    items = []
    for order in range(1, 7):
        for g in groups_of_order(order):
            for i, s in enumerate(enumerate_skew_braces(g)):
                for spec in FIELD_SPECS:
                    b = linearize(s, parse_field(spec))
                    items.append((f"{g.label}#{i}:{spec}", s, b))
    return items
