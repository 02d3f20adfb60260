import os


def get_fixture(relative):
    script_dir = os.path.dirname(__file__)
    return os.path.join(script_dir, "fixtures/", relative)


def read_fixture(relative):
    with open(get_fixture(relative), encoding="utf-8") as f:
        return f.read().strip()
