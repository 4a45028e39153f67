import logging

import config


def test_env_str(monkeypatch):
    monkeypatch.setenv("YOUNGLATTICE_TEST_STR", "  debug ")
    assert config.env_str("YOUNGLATTICE_TEST_STR", "WARNING") == "debug"
    monkeypatch.setenv("YOUNGLATTICE_TEST_STR", "   ")
    assert config.env_str("YOUNGLATTICE_TEST_STR", "WARNING") == "WARNING"
    monkeypatch.delenv("YOUNGLATTICE_TEST_STR")
    assert config.env_str("YOUNGLATTICE_TEST_STR", "WARNING") == "WARNING"


def test_env_bool(monkeypatch):
    monkeypatch.delenv("YOUNGLATTICE_TEST_BOOL", raising=False)
    assert config.env_bool("YOUNGLATTICE_TEST_BOOL", default=True) is True
    for raw, want in [("1", True), ("Yes", True), (" on ", True), ("0", False), ("off", False)]:
        monkeypatch.setenv("YOUNGLATTICE_TEST_BOOL", raw)
        assert config.env_bool("YOUNGLATTICE_TEST_BOOL") is want, raw


def test_only_the_used_env_helpers_exist():
    assert not hasattr(config, "env_int")


def test_setup_logging_installs_one_handler():
    root = logging.getLogger()
    before = root.level
    try:
        config.setup_logging("info")
        config.setup_logging("debug")
        ours = [h for h in root.handlers if getattr(h, "_younglattice", False)]
        assert len(ours) == 1
        assert ours[0].level == logging.DEBUG
        assert root.level == logging.DEBUG
    finally:
        for h in [h for h in root.handlers if getattr(h, "_younglattice", False)]:
            root.removeHandler(h)
        root.setLevel(before)
