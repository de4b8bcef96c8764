import pytest

HEADER = (
    "d,delta,regime,protection,normalized_protection,power_end,power_mid,"
    "thickness,aspect,circumradius"
)

VALID_ROWS = [
    "2,0.25,below_critical,0.14,0.31,0.125,0.9375,0.33,0.36,0.46",
    "2,0.5,below_critical,0.21,0.47,0.5,0.75,0.44,0.49,0.44",
    "2,0.75,above_critical,0.18,0.39,1.125,0.4375,0.41,0.45,0.47",
    "3,0.4,below_critical,0.2,0.42,0.32,0.56,0.49,0.52,0.48",
    "3,0.9,above_critical,0.05,0.09,1.62,0.126667,0.37,0.41,0.55",
]


def make_csv(rows=VALID_ROWS, header=HEADER):
    return "\n".join([header, *rows]) + "\n"


@pytest.fixture
def sweep_file(tmp_path):
    def write(text=None, name="sweep.csv"):
        path = tmp_path / name
        path.write_text(text if text is not None else make_csv(), encoding="utf-8")
        return str(path)

    return write
