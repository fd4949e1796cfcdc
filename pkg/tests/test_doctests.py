import doctest

import tduality.abelian
import tduality.gamma_point


def test_module_doctests():
    for module in (tduality.abelian, tduality.gamma_point):
        result = doctest.testmod(module)
        assert result.failed == 0, module.__name__
