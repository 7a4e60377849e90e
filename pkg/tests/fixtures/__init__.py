from .fits import rank_two_fit_fixture
from .mukai import structure_sheaf_fixture
from .series import euler_function_fixture, suite_report_fixture
