"""Download the three public datasets used by the reproduction runs.

    python scripts/fetch_data.py [--dest data]

Writes
    words.txt         Moby Dick word frequencies, one count per line
    email-EuAll.txt   SNAP e-mail network edge list
    cit-HepPh.txt     SNAP HEP-PH citation edge list

The word counts are taken from the original host if it answers, otherwise
from the reference data bundled in the ``powerlaw`` wheel on PyPI.  Every
download is best effort: missing files only make the dataset-tagged tests
skip.
"""

import argparse
import gzip
import io
import re
import sys
import urllib.parse
import urllib.request
import zipfile
from pathlib import Path

WORDS_URLS = [
    "https://tuvalu.santafe.edu/~aaronc/powerlaws/data/words.txt",
    "http://tuvalu.santafe.edu/~aaronc/powerlaws/data/words.txt",
]
POWERLAW_INDEX = "https://pypi.org/simple/powerlaw/"
POWERLAW_WHEEL = "powerlaw-2.0.0-py3-none-any.whl"
SNAP = {
    "email-EuAll.txt": "https://snap.stanford.edu/data/email-EuAll.txt.gz",
    "cit-HepPh.txt": "https://snap.stanford.edu/data/cit-HepPh.txt.gz",
}


def _get(url, timeout=60):
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read()


def fetch_words(dest):
    for url in WORDS_URLS:
        try:
            (dest / "words.txt").write_bytes(_get(url))
            return url
        except Exception as exc:  # noqa: BLE001 - fall through to the next source
            print(f"  {url}: {exc}", file=sys.stderr)
    index = _get(POWERLAW_INDEX).decode()
    href = re.search(r'href="([^"]*%s)(#[^"]*)?"' % re.escape(POWERLAW_WHEEL), index).group(1)
    wheel = urllib.parse.urljoin(POWERLAW_INDEX, href)
    with zipfile.ZipFile(io.BytesIO(_get(wheel))) as zf:
        (dest / "words.txt").write_bytes(zf.read("powerlaw/reference_data/words.txt"))
    return wheel


def fetch_snap(dest, name, url):
    (dest / name).write_bytes(gzip.decompress(_get(url, timeout=300)))
    return url


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dest", default=Path(__file__).resolve().parent.parent / "data", type=Path)
    args = ap.parse_args(argv)
    args.dest.mkdir(parents=True, exist_ok=True)
    jobs = [("words.txt", lambda: fetch_words(args.dest))]
    jobs += [(name, (lambda n=name, u=url: fetch_snap(args.dest, n, u))) for name, url in SNAP.items()]
    failed = 0
    for name, job in jobs:
        try:
            src = job()
            print(f"{name}: ok ({src})")
        except Exception as exc:  # noqa: BLE001
            failed += 1
            print(f"{name}: FAILED ({exc})", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
