import os

ELEMENT_BUDGET_DEFAULT = 10**6
ENUM_BUDGET_DEFAULT = 10**7
CHARTAB_BUDGET_DEFAULT = 5000


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)


def element_budget():
    return _env_int("UHFK_ELEMENT_BUDGET", ELEMENT_BUDGET_DEFAULT)


def enumeration_budget():
    return _env_int("UHFK_ENUM_BUDGET", ENUM_BUDGET_DEFAULT)


def chartab_budget():
    return _env_int("UHFK_CHARTAB_BUDGET", CHARTAB_BUDGET_DEFAULT)
