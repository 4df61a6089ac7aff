import json

from chromatic_complex import homology
from diagram_generator import trefoil
from graph_builder import cycle
from homology_cache_manager import HomologyCacheManager, diagram_instance_key, graph_instance_key
from khovanov_complex import khovanov_homology


def test_keys_separate_instances_and_windows():
    assert graph_instance_key(cycle(4), 2) != graph_instance_key(cycle(4), 3)
    assert graph_instance_key(cycle(4), 2) != graph_instance_key(cycle(5), 2)
    assert graph_instance_key(cycle(4), 2, degrees=(0, 1)).endswith(":i=0..1:j=*")
    assert diagram_instance_key(trefoil()).startswith("khovanov:")
    assert diagram_instance_key(trefoil()) != diagram_instance_key(trefoil().mirror())


def test_put_get_and_persist(tmp_path):
    manager = HomologyCacheManager(str(tmp_path / "cache"))
    manager.load()
    h = homology(cycle(4), 2)
    kh = khovanov_homology(trefoil())
    manager.put("c4", h)
    manager.put("trefoil", kh)
    manager.save()

    restored = HomologyCacheManager(str(tmp_path / "cache"))
    restored.load()
    assert restored.get("c4") == h
    assert restored.get("trefoil").labels == ("p", "q")
    assert restored.get("missing") is None
    assert (restored.hits, restored.misses) == (2, 1)


def test_previous_generation_is_kept_as_backup(tmp_path):
    manager = HomologyCacheManager(str(tmp_path))
    for key in ("a", "b", "c"):
        manager.put(key, homology(cycle(3), 2))
        manager.save()
    assert manager.cache_file.exists()
    assert sorted(json.loads(manager.backup_file.read_text())) == ["a", "b"]
    assert not (tmp_path / "homology_cache.json.tmp").exists()


def test_corrupt_cache_falls_back_to_backup(tmp_path):
    manager = HomologyCacheManager(str(tmp_path))
    manager.put("a", homology(cycle(3), 2))
    manager.save()
    manager.save()
    manager.cache_file.write_text("{not json", encoding="utf-8")

    restored = HomologyCacheManager(str(tmp_path))
    restored.load()
    assert list(restored.cache) == ["a"]


def test_corrupt_cache_starts_empty(tmp_path):
    (tmp_path / "homology_cache.json").write_text("{not json", encoding="utf-8")
    manager = HomologyCacheManager(str(tmp_path))
    manager.load()
    assert manager.cache == {}
