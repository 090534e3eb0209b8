import json

from prographs import render
from prographs.cache import ENV_VAR, EnumerationCache, default_cache_dir
from prographs.duality import prograph_to_triangulation
from prographs.order import build_rotation_poset, tamari
from prographs.prograph import enumerate_prographs, unit
from prographs.tableaux import enumerate_tableaux


def test_prograph_renderings():
    p = enumerate_prographs(3)[4]
    dot = render.prograph_dot(p)
    assert dot.startswith("digraph") and dot.count("->") == len(p.edges) + 2
    assert dot.count("shape=circle") == dot.count("shape=square") == 3
    tikz = render.prograph_tikz(p)
    assert tikz.count("\\node") == 6
    assert "coproduct" in render.prograph_text(p)


def test_other_renderings():
    t = enumerate_tableaux(2)[0]
    assert render.tableau_dot(t).count("|") == 5
    assert render.tableau_tikz(t).count("rectangle") == 6
    tr = prograph_to_triangulation(unit())
    assert 'label="W"' in render.triangulation_dot(tr) and 'label="E"' in render.triangulation_dot(tr)
    assert render.triangulation_text(tr).startswith("triangulation of size 1: V=4 E=6 F=4")
    assert render.triangulation_tikz(tr).count("\\draw") == 6
    P = build_rotation_poset(2)
    assert render.poset_dot(P).count("arrowhead=none") == 6
    assert render.poset_text(tamari(3)).startswith("poset with 5 elements and 5 covers")


def test_renderings_are_deterministic():
    p = enumerate_prographs(4)[100]
    assert render.prograph_tikz(p) == render.prograph_tikz(p)


def test_cache_writes_and_reads(tmp_path):
    cache = EnumerationCache(tmp_path)
    first = cache.load("prographs", 3)
    path = cache.path("prographs", 3)
    assert path.exists()
    assert len(path.read_text().splitlines()) == 42
    assert cache.load("prographs", 3) == first
    assert not list(tmp_path.glob("*.tmp"))


def test_corrupt_cache_is_rebuilt(tmp_path):
    cache = EnumerationCache(tmp_path)
    cache.path("tableaux", 2).write_text("{broken\n")
    assert len(cache.load("tableaux", 2)) == 5
    lines = cache.path("tableaux", 2).read_text().splitlines()
    assert [json.loads(x)["n"] for x in lines] == [2] * 5


def test_env_var_sets_default(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "x"))
    assert default_cache_dir() == tmp_path / "x"
