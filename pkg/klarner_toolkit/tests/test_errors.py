import pytest

from klarner.errors import BoundError, KlarnerError, TableError, handle_step_error, safe_call


def test_handle_step_error_wraps_exception():
    with pytest.raises(KlarnerError) as excinfo:
        try:
            raise ZeroDivisionError("bad")
        except Exception as e:
            handle_step_error("bound-upper", e)
    assert "bound-upper" in str(excinfo.value)
    assert excinfo.value.code == "step-failed"
    assert isinstance(excinfo.value.__cause__, ZeroDivisionError)


def test_safe_call_passes_domain_errors_through():
    def fail():
        raise TableError("non-contiguous", "missing value for n = 2")

    with pytest.raises(TableError) as excinfo:
        safe_call(fail, "derive-q")
    assert excinfo.value.code == "non-contiguous"


def test_safe_call_returns_value():
    assert safe_call(lambda a, b: a + b, "add", 2, b=3) == 5


def test_domain_errors_are_value_errors():
    err = BoundError("domain", "negative x")
    assert isinstance(err, ValueError)
    assert str(err) == "domain: negative x"
