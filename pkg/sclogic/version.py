import os.path

FNAME = "VERSION"

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, FNAME), "r", encoding="utf-8") as f:
    __version__ = f.read().strip()
